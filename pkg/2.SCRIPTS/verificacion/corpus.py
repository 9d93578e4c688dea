# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Verificación 6: Lectura de corpus y escritura de informes
==============================================================================

Descripción:
    Formato del corpus (JSON):

        {
          "_metadata": {"nombre", "descripcion",
                        "max_orden_anillo", "max_orden_modulo"},
          "instancias": [
            {"nombre": "Z12 sobre Z6", "anillo": "zn(12)", "modulo": "cyclic(6)",
             "submodulos": {"cero": []}, "subconjuntos": {"S": [1, 3]}}
          ]
        }

    Formato del informe (JSON, indent=2, ensure_ascii=False), claves en
    orden fijo: herramienta, version, corpus, propiedades, registros,
    resumen, errores. Sin --timings no hay tiempos, de modo que dos
    ejecuciones sobre el mismo corpus producen el mismo fichero byte a
    byte, con cualquier número de procesos.

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import hashlib
import json
import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from contexto import DEFAULT_INSTANCE_ORDER, Instance, InstanceCaps
from errores import CorpusError, SpecParseError
from theorem_harness import CorpusResult, get_statement

logger = logging.getLogger("JModLab.corpus")

TOOL_NAME = "jmodlab"
TOOL_VERSION = "1.0.0"

_INSTANCE_KEYS = {"nombre", "anillo", "modulo", "submodulos", "subconjuntos"}


# ==============================================================================
# CORPUS
# ==============================================================================

@dataclass(frozen=True)
class Corpus:
    name: str
    description: str
    instances: Tuple[Instance, ...]
    max_ring: Optional[int] = None
    max_module: Optional[int] = None

    @property
    def by_id(self) -> Dict[str, Instance]:
        return {inst.instance_id: inst for inst in self.instances}


def _int_map(raw: Any, field: str, where: str) -> Dict[str, List[int]]:
    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise CorpusError(f"{where}: '{field}' debe ser un objeto nombre → lista")
    result = {}
    for key, values in raw.items():
        if not isinstance(values, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in values
        ):
            raise CorpusError(f"{where}: '{field}.{key}' debe ser una lista de enteros")
        result[str(key)] = values
    return result


def _parse_instance(raw: Any, position: int) -> Instance:
    where = f"instancia #{position}"
    if not isinstance(raw, dict):
        raise CorpusError(f"{where}: se esperaba un objeto")
    unknown = set(raw) - _INSTANCE_KEYS
    if unknown:
        raise CorpusError(f"{where}: claves desconocidas {sorted(unknown)}")
    if not isinstance(raw.get("anillo"), str):
        raise CorpusError(f"{where}: falta el descriptor 'anillo'")
    name = str(raw.get("nombre") or f"instancia_{position}")
    where = f"{where} ({name})"
    module_spec = raw.get("modulo", "self")
    if not isinstance(module_spec, str):
        raise CorpusError(f"{where}: 'modulo' debe ser texto")
    try:
        return Instance.from_specs(
            name,
            raw["anillo"],
            module_spec,
            submodules=_int_map(raw.get("submodulos"), "submodulos", where),
            subsets=_int_map(raw.get("subconjuntos"), "subconjuntos", where),
        )
    except SpecParseError as e:
        raise CorpusError(f"{where}: {e}") from e


def _optional_int(metadata: Dict, key: str) -> Optional[int]:
    value = metadata.get(key)
    if value is None:
        return None
    if not isinstance(value, int) or value < 1:
        raise CorpusError(f"_metadata.{key} debe ser un entero positivo")
    return value


def parse_corpus(data: Any, default_name: str = "corpus") -> Corpus:
    """
    Valida un corpus ya decodificado.

    Raises:
        CorpusError: estructura inválida, descriptor ilegible o
        instancias repetidas
    """
    if not isinstance(data, dict) or not isinstance(data.get("instancias"), list):
        raise CorpusError("el corpus debe ser un objeto con la lista 'instancias'")
    metadata = data.get("_metadata") or {}
    if not isinstance(metadata, dict):
        raise CorpusError("_metadata debe ser un objeto")

    instances = [_parse_instance(raw, i) for i, raw in enumerate(data["instancias"], 1)]
    seen: Dict[str, str] = {}
    for inst in instances:
        if inst.instance_id in seen:
            raise CorpusError(
                f"instancia repetida: '{inst.name}' coincide con '{seen[inst.instance_id]}'"
            )
        seen[inst.instance_id] = inst.name

    return Corpus(
        name=str(metadata.get("nombre", default_name)),
        description=str(metadata.get("descripcion", "")),
        instances=tuple(instances),
        max_ring=_optional_int(metadata, "max_orden_anillo"),
        max_module=_optional_int(metadata, "max_orden_modulo"),
    )


def load_corpus(path: Path) -> Corpus:
    """
    Lee y valida un fichero de corpus.

    Raises:
        CorpusError: fichero inexistente, JSON inválido o estructura
        incorrecta
    """
    path = Path(path)
    if not path.exists():
        raise CorpusError(f"corpus no encontrado: {path}")
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise CorpusError(f"JSON inválido en {path.name}: {e}") from e

    corpus = parse_corpus(data, default_name=path.stem)
    logger.info(f"  ✓ Corpus cargado: {path.name} ({len(corpus.instances)} instancias)")
    return corpus


def corpus_hash(corpus: Corpus) -> str:
    """sha256 del JSON canónico del corpus (nombre + instancias)."""
    payload = {
        "nombre": corpus.name,
        "instancias": [{"nombre": inst.name, **inst.canonical} for inst in corpus.instances],
    }
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def resolve_caps(corpus: Corpus, max_order: Optional[int] = None) -> InstanceCaps:
    """
    Límites por instancia: flag > JMODLAB_MAX_ORDER > metadatos > 36.
    """
    if max_order is not None:
        return InstanceCaps(max_order, max_order)
    raw = os.getenv("JMODLAB_MAX_ORDER")
    if raw:
        try:
            value = int(raw)
            return InstanceCaps(value, value)
        except ValueError:
            logger.warning(f"⚠ JMODLAB_MAX_ORDER inválido ('{raw}'), se ignora")
    return InstanceCaps(
        corpus.max_ring or DEFAULT_INSTANCE_ORDER,
        corpus.max_module or DEFAULT_INSTANCE_ORDER,
    )


# ==============================================================================
# INFORME
# ==============================================================================

def build_report(
    corpus: Corpus,
    result: CorpusResult,
    prop_ids: Sequence[str],
    timings: bool = False,
) -> Dict[str, Any]:
    """Informe con orden de claves fijo."""
    properties = []
    for pid in sorted(prop_ids):
        prop = get_statement(pid)
        properties.append({
            "id": prop.id,
            "enunciado": prop.statement,
            "variante": prop.variant,
            "presupuesto": prop.budget,
        })
    return {
        "herramienta": TOOL_NAME,
        "version": TOOL_VERSION,
        "corpus": {"nombre": corpus.name, "hash": corpus_hash(corpus)},
        "propiedades": properties,
        "registros": [r.to_record(timings) for r in result.reports],
        "resumen": result.summary(),
        "errores": list(result.errors),
    }


def write_report(report: Dict[str, Any], path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(report, f, ensure_ascii=False, indent=2)
        f.write("\n")
    size = path.stat().st_size
    size_str = f"{size / 1024:.1f} KB" if size >= 1024 else f"{size} B"
    logger.info(f"  ✓ Informe guardado: {path.name} ({size_str})")
    return path
