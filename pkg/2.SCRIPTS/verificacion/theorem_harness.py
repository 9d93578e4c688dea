# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Verificación 4: Arnés de verificación de propiedades
==============================================================================

Descripción:
    Ejecuta las propiedades del registro sobre las instancias de un corpus.

    Flujo por (propiedad, instancia):
    ─────────────────────────────────
    1. applies(ctx) falso        → vacuous (la instancia no encaja)
    2. recorrer cases(ctx)       → contar asignaciones y las que cumplen
                                    la hipótesis
    3. primera conclusión falsa  → violated, la asignación es el testigo
    4. ninguna hipótesis cierta  → vacuous; si no, verified

    hunt no se detiene en la primera violación: violations() recorre todos
    los casos y cada testigo se revalida por separado.

    Cada instancia se procesa de forma aislada: un fallo queda en la lista
    de errores y la ejecución sigue. Con --jobs > 1 las instancias se
    reparten en un ProcessPoolExecutor; el resultado se ordena por
    (propiedad, instancia) y no depende del número de procesos.

Uso:
    result = run_corpus(corpus.instances, ["THM_EQ1"], jobs=2)
    witnesses = hunt_counterexample("V1", corpus.instances)

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import repeat
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from contexto import (
    Instance,
    InstanceCaps,
    InstanceContext,
    clear_caches,
    resolve_instance,
)
from errores import PreconditionError
from predicates import witness_is_valid
from registro_propiedades import PROPERTIES, PropertyStatement
from variantes import VARIANTS

logger = logging.getLogger("JModLab.arnes")

VERIFIED = "verified"
VACUOUS = "vacuous"
VIOLATED = "violated"


# ==============================================================================
# TIPOS
# ==============================================================================

@dataclass
class PropertyReport:
    """Resultado de una propiedad sobre una instancia."""

    property_id: str
    instance_id: str
    instance_name: str
    status: str
    witness: Optional[Dict[str, Any]]
    cases_scanned: int
    hypothesis_count: int
    conclusion_checks: int
    elapsed: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def sort_key(self) -> Tuple[str, str]:
        return (self.property_id, self.instance_id)

    def to_record(self, timings: bool = False) -> Dict[str, Any]:
        """Registro JSON con orden de claves fijo."""
        record = {
            "propiedad": self.property_id,
            "instancia": self.instance_id,
            "nombre": self.instance_name,
            "estado": self.status,
            "testigo": self.witness,
            "casos": self.cases_scanned,
            "hipotesis": self.hypothesis_count,
            "conclusiones": self.conclusion_checks,
            "notas": list(self.notes),
        }
        if timings:
            record["segundos"] = round(self.elapsed, 4)
        return record


@dataclass
class CorpusResult:
    """Informes y errores de una ejecución completa."""

    reports: List[PropertyReport]
    errors: List[Dict[str, str]]

    def summary(self) -> Dict[str, Any]:
        counts = Counter(r.status for r in self.reports)
        registered_violations = sum(
            1 for r in self.reports
            if r.status == VIOLATED and r.property_id in PROPERTIES
        )
        exercised = {r.property_id for r in self.reports if r.status != VACUOUS}
        checked = sorted({r.property_id for r in self.reports})
        return {
            "registros": len(self.reports),
            "verificadas": counts[VERIFIED],
            "vacuas": counts[VACUOUS],
            "violadas": counts[VIOLATED],
            "violadas_registradas": registered_violations,
            "errores": len(self.errors),
            "sin_instancia_no_vacua": [p for p in checked if p not in exercised],
        }

    @property
    def ok(self) -> bool:
        summary = self.summary()
        return summary["violadas_registradas"] == 0 and summary["errores"] == 0


# ==============================================================================
# REGISTRO
# ==============================================================================

def get_statement(prop_id: str) -> PropertyStatement:
    """
    Busca una propiedad o variante por id.

    Raises:
        PreconditionError: si el id no está registrado
    """
    if prop_id in PROPERTIES:
        return PROPERTIES[prop_id]
    if prop_id in VARIANTS:
        return VARIANTS[prop_id]
    raise PreconditionError(f"propiedad o variante desconocida: {prop_id}")


def _as_ids(props: Iterable[Union[str, PropertyStatement]]) -> List[str]:
    ids = [p if isinstance(p, str) else p.id for p in props]
    for pid in ids:
        get_statement(pid)
    return ids


# ==============================================================================
# COMPROBACIÓN
# ==============================================================================

def _witness(prop: PropertyStatement, ctx: InstanceContext, assignment: Dict) -> Dict[str, Any]:
    witness = dict(assignment)
    detail = prop.explain(ctx, assignment) if prop.explain else None
    if detail:
        witness["detalle"] = detail
    return witness


def violations(
    prop: PropertyStatement,
    ctx: InstanceContext,
) -> Iterator[Tuple[int, Dict[str, Any]]]:
    """
    Todas las asignaciones que cumplen la hipótesis y no la conclusión,
    con su posición en el orden canónico de cases.
    """
    if not prop.applies(ctx):
        return
    for index, assignment in enumerate(prop.cases(ctx)):
        if prop.hypothesis(ctx, assignment) and not prop.conclusion(ctx, assignment):
            yield index, _witness(prop, ctx, assignment)


def check_property(
    prop: PropertyStatement,
    inst: Union[Instance, InstanceContext],
    caps: InstanceCaps = InstanceCaps(),
) -> PropertyReport:
    """
    Evalúa una propiedad sobre una instancia.

    El testigo es la primera asignación (en el orden canónico de cases)
    que cumple la hipótesis y no la conclusión.

    Raises:
        AlgebraError: si la instancia no se puede resolver o se supera el
        presupuesto de homomorfismos
    """
    ctx = inst if isinstance(inst, InstanceContext) else resolve_instance(inst, caps)
    start = time.perf_counter()
    notes = list(prop.remarks)

    def report(status, witness, scanned, held) -> PropertyReport:
        return PropertyReport(
            property_id=prop.id,
            instance_id=ctx.instance.instance_id,
            instance_name=ctx.instance.name,
            status=status,
            witness=witness,
            cases_scanned=scanned,
            hypothesis_count=held,
            conclusion_checks=held,
            elapsed=time.perf_counter() - start,
            notes=notes,
        )

    if not prop.applies(ctx):
        notes.append("la instancia no cumple las hipótesis globales")
        return report(VACUOUS, None, 0, 0)

    scanned = 0
    held = 0
    witness = None
    for assignment in prop.cases(ctx):
        scanned += 1
        if not prop.hypothesis(ctx, assignment):
            continue
        held += 1
        if not prop.conclusion(ctx, assignment):
            witness = _witness(prop, ctx, assignment)
            break

    if prop.notes:
        notes.extend(prop.notes(ctx))

    if witness is not None:
        status = VIOLATED
    elif held == 0:
        status = VACUOUS
    else:
        status = VERIFIED
    return report(status, witness, scanned, held)


def revalidate(prop: PropertyStatement, ctx: InstanceContext, witness: Dict[str, Any]) -> bool:
    """
    Vuelve a sustituir un testigo: la hipótesis debe cumplirse, la
    conclusión fallar y, si hay par (r, m), el predicado debe romperse.
    """
    assignment = {k: v for k, v in witness.items() if k != "detalle"}
    if not prop.hypothesis(ctx, assignment) or prop.conclusion(ctx, assignment):
        return False
    detail = witness.get("detalle") or {}
    if "par" in detail:
        N = ctx.sub(detail["N"])
        return witness_is_valid(detail["predicado"], N, tuple(detail["par"]))
    return True


def revalidate_report(
    report: PropertyReport,
    instances: Dict[str, Instance],
    caps: InstanceCaps = InstanceCaps(),
) -> bool:
    """Revalida el testigo de un informe violated (True si no lo hay)."""
    if report.status != VIOLATED:
        return True
    ctx = resolve_instance(instances[report.instance_id], caps)
    return revalidate(get_statement(report.property_id), ctx, report.witness)


# ==============================================================================
# EJECUCIÓN SOBRE UN CORPUS
# ==============================================================================

def _run_instance(
    instance: Instance,
    prop_ids: Sequence[str],
    caps: InstanceCaps,
) -> Tuple[List[PropertyReport], List[Dict[str, str]]]:
    """Unidad de trabajo: todas las propiedades sobre una instancia."""
    reports: List[PropertyReport] = []
    errors: List[Dict[str, str]] = []

    def error(prop_id: str, exc: Exception) -> None:
        message = f"{type(exc).__name__}: {exc}"
        errors.append({
            "propiedad": prop_id,
            "instancia": instance.instance_id,
            "nombre": instance.name,
            "error": message,
        })
        logger.error(f"  ✘ {instance.name} [{prop_id}]: {message}")

    # ─── Paso 1: resolver la instancia ───
    try:
        ctx = resolve_instance(instance, caps)
    except Exception as e:
        error("*", e)
        return reports, errors

    # ─── Paso 2: cada propiedad aislada ───
    for prop_id in prop_ids:
        try:
            reports.append(check_property(get_statement(prop_id), ctx))
        except Exception as e:
            error(prop_id, e)
    return reports, errors


def run_corpus(
    instances: Sequence[Instance],
    props: Iterable[Union[str, PropertyStatement]],
    jobs: int = 1,
    caps: InstanceCaps = InstanceCaps(),
) -> CorpusResult:
    """
    Un PropertyReport por (propiedad, instancia), ordenados por
    (id de propiedad, id de instancia).

    Raises:
        PreconditionError: si alguna propiedad no está registrada
    """
    prop_ids = _as_ids(props)
    logger.info(
        f"Verificando {len(prop_ids)} propiedades sobre {len(instances)} instancias "
        f"({jobs} proceso{'s' if jobs != 1 else ''})"
    )
    clear_caches()

    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_instance, instances, repeat(prop_ids), repeat(caps)))
    else:
        outcomes = [_run_instance(inst, prop_ids, caps) for inst in instances]

    reports: List[PropertyReport] = []
    errors: List[Dict[str, str]] = []
    for instance, (inst_reports, inst_errors) in zip(instances, outcomes):
        reports.extend(inst_reports)
        errors.extend(inst_errors)
        violated = sum(r.status == VIOLATED for r in inst_reports)
        marker = "✓" if not violated and not inst_errors else "⚠"
        logger.debug(
            f"  {marker} {instance.name}: {len(inst_reports)} informes, "
            f"{violated} violados, {len(inst_errors)} errores"
        )

    reports.sort(key=lambda r: r.sort_key)
    errors.sort(key=lambda e: (e["propiedad"], e["instancia"]))
    return CorpusResult(reports, errors)


# ==============================================================================
# BÚSQUEDA DE CONTRAEJEMPLOS
# ==============================================================================

def _hunt_instance(
    instance: Instance,
    variant_id: str,
    caps: InstanceCaps,
) -> List[Dict[str, Any]]:
    """Unidad de trabajo de hunt: todos los testigos revalidados de una instancia."""
    prop = VARIANTS[variant_id]
    try:
        ctx = resolve_instance(instance, caps)
        found = []
        for index, witness in violations(prop, ctx):
            if not revalidate(prop, ctx, witness):
                logger.warning(f"  ⚠ testigo {index} no revalidado en {instance.name}, descartado")
                continue
            found.append({
                "instancia": instance.instance_id,
                "nombre": instance.name,
                "anillo": instance.ring_spec,
                "modulo": instance.module_spec,
                "tamano": ctx.R.order * ctx.M.order,
                "caso": index,
                "testigo": witness,
            })
    except Exception as e:
        logger.error(f"  ✘ {instance.name} [{variant_id}]: {type(e).__name__}: {e}")
        return []
    return found


def hunt_counterexample(
    variant_id: str,
    instances: Sequence[Instance],
    jobs: int = 1,
    caps: InstanceCaps = InstanceCaps(),
) -> List[Dict[str, Any]]:
    """
    Todos los testigos de una variante, ordenados por (|R|·|M|, id de
    instancia, posición canónica del caso).

    Cada testigo se revalida antes de listarlo; una lista vacía es un
    resultado válido.

    Raises:
        PreconditionError: si la variante no está registrada
    """
    if variant_id not in VARIANTS:
        raise PreconditionError(f"variante desconocida: {variant_id}")
    clear_caches()

    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_hunt_instance, instances, repeat(variant_id), repeat(caps)))
    else:
        outcomes = [_hunt_instance(inst, variant_id, caps) for inst in instances]

    found = [w for per_instance in outcomes for w in per_instance]
    found.sort(key=lambda w: (w["tamano"], w["instancia"], w["caso"]))
    instances_hit = len({w["instancia"] for w in found})
    logger.info(f"{variant_id}: {len(found)} testigos en {instances_hit} instancias")
    return found
