# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Punto de entrada: línea de comandos
==============================================================================

Descripción:
    Cuatro subcomandos sobre el núcleo algebraico y el arnés:

    inspect  → orden, unidades, retículo de ideales / submódulos,
               J(R) o J(M) y banderas de estructura
    check    → evalúa un predicado sobre un submódulo dado por generadores
    verify   → ejecuta el registro de propiedades sobre un corpus y
               escribe el informe JSON, el resumen CSV y, con --informe,
               el informe Markdown
    hunt     → busca testigos de una variante debilitada, del más
               pequeño al más grande

Códigos de salida:
    0  correcto (predicado cierto, sin violaciones, testigo encontrado)
    1  predicado falso, violaciones o errores en verify, hunt sin testigos
    2  error de entrada: descriptor ilegible, corpus inválido, nombre
       desconocido, N = M

Uso:
    python 2.SCRIPTS/jmodlab.py inspect "zn(12)"
    python 2.SCRIPTS/jmodlab.py check j-submodule "zn(12)" --module "cyclic(6)"
    python 2.SCRIPTS/jmodlab.py verify --jobs 4 --informe
    python 2.SCRIPTS/jmodlab.py hunt V1

Configuración:
    JMODLAB_MAX_ORDER (.env) limita el orden de toda estructura
    construida. En verify y hunt, --max-order sustituye los límites por
    instancia del corpus y solo eleva JMODLAB_MAX_ORDER cuando es mayor;
    nunca lo reduce.

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import argparse
import json
import logging
import os
import sys
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional


# ==============================================================================
# CONFIGURACIÓN
# ==============================================================================

# Raíz del proyecto (1 nivel arriba desde 2.SCRIPTS/)
PROJECT_ROOT = Path(__file__).resolve().parent.parent
ALGEBRA_DIR = PROJECT_ROOT / "2.SCRIPTS" / "algebra"
VERIFICACION_DIR = PROJECT_ROOT / "2.SCRIPTS" / "verificacion"
CORPUS_DIR = PROJECT_ROOT / "1.CORPUS"
INFORMES_DIR = PROJECT_ROOT / "3.INFORMES"
LOG_DIR = PROJECT_ROOT / "logs"

DEFAULT_CORPUS = CORPUS_DIR / "corpus_estandar.json"
DEFAULT_REPORT = INFORMES_DIR / "informe_verificacion.json"
SUMMARY_NAME = "resumen_propiedades.csv"
INFORME_NAME = "informe_verificacion.md"

for _dir in (VERIFICACION_DIR, ALGEBRA_DIR):
    if str(_dir) not in sys.path:
        sys.path.insert(0, str(_dir))

from corpus import build_report, load_corpus, resolve_caps, write_report  # noqa: E402
from errores import AlgebraError  # noqa: E402
from informe import write_informe, write_summary_csv  # noqa: E402
from module_core import (  # noqa: E402
    construct_module,
    enumerate_submodules,
    module_jacobson,
    structure_flags,
    submodule_generated,
)
from predicates import (  # noqa: E402
    IDEAL_PREDICATES,
    MODULE_PREDICATES,
    PREDICATE_NAMES,
    SUBMODULE_PREDICATES,
    check_j_presimplifiable,
    ideal_as_submodule,
    jacobson_threshold,
)
from registro_propiedades import PROPERTIES  # noqa: E402
from ring_core import (  # noqa: E402
    construct_ring,
    enumerate_ideals,
    format_ideal,
    get_max_order,
    ideal_generated,
    is_local,
    jacobson_radical,
    nilradical,
    units,
)
from theorem_harness import (  # noqa: E402
    VIOLATED,
    CorpusResult,
    get_statement,
    hunt_counterexample,
    revalidate_report,
    run_corpus,
)
from variantes import VARIANTS  # noqa: E402

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


# ==============================================================================
# CONFIGURACIÓN DE LOGGING CENTRALIZADO
# ==============================================================================

def setup_logging() -> logging.Logger:
    """
    Log único para todas las ejecuciones en logs/jmodlab.log (DEBUG) y
    mensajes INFO en consola.

    Returns:
        logging.Logger: logger raíz "JModLab"; los módulos escriben en
        sus hijos (JModLab.anillos, JModLab.arnes, ...)
    """
    LOG_DIR.mkdir(parents=True, exist_ok=True)

    log_file = LOG_DIR / "jmodlab.log"
    log_format = "%(asctime)s - %(levelname)s - %(message)s"
    date_format = "%Y-%m-%d %H:%M:%S"

    logger = logging.getLogger("JModLab")
    logger.setLevel(logging.DEBUG)
    logger.handlers.clear()

    file_handler = logging.FileHandler(log_file, encoding="utf-8", mode="a")
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(logging.Formatter(log_format, date_format))

    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setLevel(logging.INFO)
    console_handler.setFormatter(logging.Formatter(log_format, date_format))

    logger.addHandler(file_handler)
    logger.addHandler(console_handler)

    return logger


def _apply_max_order(max_order: Optional[int]) -> None:
    """Eleva JMODLAB_MAX_ORDER hasta --max-order; un valor menor no lo reduce."""
    if max_order is not None and max_order > get_max_order():
        os.environ["JMODLAB_MAX_ORDER"] = str(max_order)


def _emit_json(record: Dict) -> None:
    print(json.dumps(record, ensure_ascii=False, sort_keys=True))


# ==============================================================================
# INSPECT
# ==============================================================================

def cmd_inspect(args: argparse.Namespace, logger: logging.Logger) -> int:
    R = construct_ring(args.ring)
    J = jacobson_radical(R)
    record = {
        "anillo": R.label,
        "orden": R.order,
        "unidades": len(units(R)),
        "ideales": len(enumerate_ideals(R)),
        "jacobson": list(J.sorted_members),
        "nilradical": list(nilradical(R).sorted_members),
        "local": is_local(R),
    }
    logger.info(f"Anillo {R.label}")
    logger.info(f"  Orden:        {R.order}")
    logger.info(f"  Unidades:     {record['unidades']}")
    logger.info(f"  Ideales:      {record['ideales']}")
    logger.info(f"  J(R):         {format_ideal(J)} (orden {len(J)})")
    logger.info(f"  Nilradical:   {format_ideal(nilradical(R))}")
    logger.info(f"  Local:        {'sí' if record['local'] else 'no'}")

    if args.module:
        M = construct_module(R, args.module)
        flags = structure_flags(M)
        JM = module_jacobson(M)
        presimplifiable = check_j_presimplifiable(M).holds
        record["modulo"] = {
            "modulo": M.label,
            "orden": M.order,
            "submodulos": len(enumerate_submodules(M)),
            "jacobson": list(JM.sorted_members),
            "umbral": list(jacobson_threshold(M).sorted_members),
            "fiel": flags.faithful,
            "multiplicacion": flags.multiplication,
            "reducido": flags.reduced,
            "j_presimplificable": presimplifiable,
        }
        logger.info(f"Módulo {M.label}")
        logger.info(f"  Orden:        {M.order}")
        logger.info(f"  Submódulos:   {record['modulo']['submodulos']}")
        logger.info(f"  J(M):         {{{','.join(str(m) for m in JM.sorted_members)}}}")
        logger.info(f"  (J(R)M:M):    {format_ideal(jacobson_threshold(M))}")
        logger.info(
            f"  Fiel: {flags.faithful} | Multiplicación: {flags.multiplication} | "
            f"Reducido: {flags.reduced} | J-presimplificable: {presimplifiable}"
        )

    if args.json:
        _emit_json(record)
    return EXIT_OK


# ==============================================================================
# CHECK
# ==============================================================================

def cmd_check(args: argparse.Namespace, logger: logging.Logger) -> int:
    name = args.predicate
    if name not in PREDICATE_NAMES:
        logger.error(f"✘ Predicado desconocido: {name} (disponibles: {', '.join(PREDICATE_NAMES)})")
        return EXIT_INPUT

    R = construct_ring(args.ring)
    if name in IDEAL_PREDICATES:
        N = ideal_as_submodule(ideal_generated(R, args.gens))
        M = N.module
    else:
        M = construct_module(R, args.module or "self")
        N = submodule_generated(M, args.gens)

    if name in MODULE_PREDICATES:
        verdict = check_j_presimplifiable(M)
        target = M.label
    else:
        verdict = SUBMODULE_PREDICATES[name](N)
        target = "{" + ",".join(str(m) for m in N.sorted_members) + "}"

    if verdict.holds:
        logger.info(f"✓ {name} se cumple en {target} ({verdict.checks} comprobaciones)")
    else:
        logger.info(f"✘ {name} falla en {target}: testigo {tuple(verdict.witness)}")

    if args.json:
        _emit_json({
            "predicado": name,
            "anillo": R.label,
            "modulo": M.label,
            "N": list(N.sorted_members),
            "cumple": verdict.holds,
            "testigo": list(verdict.witness) if verdict.witness else None,
            "comprobaciones": verdict.checks,
        })
    return EXIT_OK if verdict.holds else EXIT_FAIL


# ==============================================================================
# VERIFY
# ==============================================================================

def _prop_ids(raw: Optional[str]) -> List[str]:
    if not raw:
        return sorted(PROPERTIES)
    ids = [p.strip() for p in raw.split(",") if p.strip()]
    for pid in ids:
        get_statement(pid)
    return ids


def print_summary(result: CorpusResult, elapsed_total: float, logger: logging.Logger) -> None:
    """
    Tabla alineada por propiedad:

    ==========================================================
    RESUMEN DE VERIFICACIÓN
    ==========================================================
    Propiedad        Verificadas   Vacuas  Violadas
    ----------------------------------------------------------
    """
    per_prop: Dict[str, Dict[str, int]] = {}
    for r in result.reports:
        counts = per_prop.setdefault(r.property_id, {"verified": 0, "vacuous": 0, "violated": 0})
        counts[r.status] += 1

    col_width = max([len(p) for p in per_prop] + [len("Propiedad")]) + 2
    separator = "=" * 58
    line_sep = "-" * 58

    lines = [
        "",
        separator,
        "RESUMEN DE VERIFICACIÓN",
        separator,
        f"{'Propiedad':<{col_width}} {'Verificadas':>12} {'Vacuas':>8} {'Violadas':>9}",
        line_sep,
    ]
    for pid in sorted(per_prop):
        c = per_prop[pid]
        lines.append(
            f"{pid:<{col_width}} {c['verified']:>12} {c['vacuous']:>8} {c['violated']:>9}"
        )
    summary = result.summary()
    lines.append(line_sep)
    lines.append(
        f"Registros: {summary['registros']} | violados (no variantes): "
        f"{summary['violadas_registradas']} | errores: {summary['errores']}"
    )
    if summary["sin_instancia_no_vacua"]:
        lines.append(f"Sin instancia no vacua: {', '.join(summary['sin_instancia_no_vacua'])}")
    lines.append(f"Tiempo total: {elapsed_total:.2f} segundos")
    lines.append(separator)

    for line in lines:
        logger.info(line)


def cmd_verify(args: argparse.Namespace, logger: logging.Logger) -> int:
    start_total = time.time()
    logger.info("=" * 70)
    logger.info("JMODLAB - Verificación del registro de propiedades")
    logger.info(f"Inicio (UTC): {datetime.now(timezone.utc).strftime('%Y-%m-%d %H:%M:%S')}")
    logger.info("=" * 70)

    corpus = load_corpus(Path(args.corpus))
    caps = resolve_caps(corpus, args.max_order)
    prop_ids = _prop_ids(args.props)
    logger.info(f"Límites: |R| ≤ {caps.max_ring}, |M| ≤ {caps.max_module}")

    result = run_corpus(corpus.instances, prop_ids, jobs=args.jobs, caps=caps)

    # ─── Revalidación de testigos ───
    violated = [r for r in result.reports if r.status == VIOLATED]
    if violated:
        by_id = corpus.by_id
        valid = sum(revalidate_report(r, by_id, caps) for r in violated)
        marker = "✓" if valid == len(violated) else "✘"
        logger.info(f"{marker} Testigos revalidados: {valid}/{len(violated)}")
    else:
        valid = 0

    out = Path(args.out)
    report = build_report(corpus, result, prop_ids, timings=args.timings)
    write_report(report, out)
    write_summary_csv(result, out.with_name(SUMMARY_NAME))
    if args.informe:
        write_informe(corpus, result, out.with_name(INFORME_NAME), caps)

    print_summary(result, time.time() - start_total, logger)

    if valid != len(violated):
        return EXIT_FAIL
    return EXIT_OK if result.ok else EXIT_FAIL


# ==============================================================================
# HUNT
# ==============================================================================

def cmd_hunt(args: argparse.Namespace, logger: logging.Logger) -> int:
    if args.variant not in VARIANTS:
        logger.error(f"✘ Variante desconocida: {args.variant} (disponibles: {', '.join(VARIANTS)})")
        return EXIT_INPUT

    corpus = load_corpus(Path(args.corpus))
    caps = resolve_caps(corpus, args.max_order)
    variant = VARIANTS[args.variant]
    logger.info(f"Buscando testigos de {variant.id}: {variant.statement}")

    witnesses = hunt_counterexample(args.variant, corpus.instances, jobs=args.jobs, caps=caps)
    if not witnesses:
        logger.info(f"⚠ {variant.id}: ningún testigo en {corpus.name}")
    logger.info("─" * 40)
    for w in witnesses:
        testigo = json.dumps(w["testigo"], ensure_ascii=False, sort_keys=True)
        logger.info(f"  {w['nombre']} [{w['anillo']} / {w['modulo']}, |R|·|M| = {w['tamano']}]")
        logger.info(f"    {testigo}")

    if args.json:
        _emit_json({"variante": variant.id, "corpus": corpus.name, "testigos": witnesses})
    return EXIT_OK if witnesses else EXIT_FAIL


# ==============================================================================
# ARGUMENTOS
# ==============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jmodlab",
        description="Laboratorio de weakly J-submódulos sobre anillos y módulos finitos",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inspect = sub.add_parser("inspect", help="resumen de un anillo (y módulo)")
    p_inspect.add_argument("ring", help='descriptor de anillo, p. ej. "zn(12)"')
    p_inspect.add_argument("--module", help='descriptor de módulo, p. ej. "cyclic(6)"')
    p_inspect.add_argument("--json", action="store_true", help="registro JSON en stdout")

    p_check = sub.add_parser("check", help="evaluar un predicado")
    p_check.add_argument("predicate", help=f"uno de: {', '.join(PREDICATE_NAMES)}")
    p_check.add_argument("ring")
    p_check.add_argument("--module", default="self")
    p_check.add_argument("--gens", type=int, nargs="*", default=[],
                         help="generadores del submódulo (o del ideal)")
    p_check.add_argument("--json", action="store_true")

    for name, helptext in (("verify", "verificar el registro sobre un corpus"),
                           ("hunt", "buscar testigos de una variante")):
        p = sub.add_parser(name, help=helptext)
        if name == "hunt":
            p.add_argument("variant", help=f"uno de: {', '.join(VARIANTS)}")
        p.add_argument("--corpus", default=str(DEFAULT_CORPUS))
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--max-order", type=int, default=None)
        if name == "verify":
            p.add_argument("--props", default=None, help="ids separados por comas")
            p.add_argument("--out", default=str(DEFAULT_REPORT))
            p.add_argument("--timings", action="store_true", help="incluir tiempos")
            p.add_argument("--informe", action="store_true", help="informe Markdown")
        else:
            p.add_argument("--json", action="store_true")

    return parser


COMMANDS = {
    "inspect": cmd_inspect,
    "check": cmd_check,
    "verify": cmd_verify,
    "hunt": cmd_hunt,
}


# ==============================================================================
# FUNCIÓN PRINCIPAL
# ==============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK

    logger = setup_logging()
    _apply_max_order(getattr(args, "max_order", None))
    if getattr(args, "jobs", 1) < 1:
        logger.error("✘ --jobs debe ser ≥ 1")
        return EXIT_INPUT

    try:
        return COMMANDS[args.command](args, logger)
    except AlgebraError as e:
        logger.error(f"✘ {type(e).__name__}: {e}")
        return EXIT_INPUT


# ==============================================================================
# PUNTO DE ENTRADA
# ==============================================================================

if __name__ == "__main__":
    sys.exit(main())
