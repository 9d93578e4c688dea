# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Verificación 7: Resúmenes tabulares e informe Markdown
==============================================================================

Descripción:
    A partir de un CorpusResult genera:
    - resumen_propiedades.csv: una fila por propiedad con el número de
      instancias verified / vacuous / violated y los casos recorridos
    - informe_verificacion.md: resumen ejecutivo, tabla por propiedad,
      testigos de las violaciones y perfil de los submódulos con nombre
      del corpus

    pandas se importa de forma perezosa; solo lo necesita el CSV.

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from contexto import InstanceCaps, resolve_instance
from module_core import colon_into_ring
from ring_core import format_ideal
from theorem_harness import VACUOUS, VERIFIED, VIOLATED, CorpusResult, get_statement

logger = logging.getLogger("JModLab.informe")

SUMMARY_COLUMNS = [
    "propiedad", "variante", "instancias", "verificadas", "vacuas",
    "violadas", "casos", "hipotesis",
]


# ==============================================================================
# TABLA POR PROPIEDAD
# ==============================================================================

def summary_frame(result: CorpusResult):
    """DataFrame con una fila por propiedad, ordenado por id."""
    import pandas as pd

    rows = [
        {
            "propiedad": r.property_id,
            "estado": r.status,
            "casos": r.cases_scanned,
            "hipotesis": r.hypothesis_count,
        }
        for r in result.reports
    ]
    if not rows:
        return pd.DataFrame(columns=SUMMARY_COLUMNS)

    df = pd.DataFrame(rows)
    df_stats = (
        df
        .groupby("propiedad", as_index=False)
        .agg(
            instancias=("estado", "size"),
            verificadas=("estado", lambda s: int((s == VERIFIED).sum())),
            vacuas=("estado", lambda s: int((s == VACUOUS).sum())),
            violadas=("estado", lambda s: int((s == VIOLATED).sum())),
            casos=("casos", "sum"),
            hipotesis=("hipotesis", "sum"),
        )
    )
    df_stats["variante"] = df_stats["propiedad"].map(lambda p: get_statement(p).variant)
    return df_stats[SUMMARY_COLUMNS].sort_values("propiedad").reset_index(drop=True)


def write_summary_csv(result: CorpusResult, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df = summary_frame(result)
    df.to_csv(path, index=False, encoding="utf-8-sig")
    logger.info(f"  ✓ Resumen guardado: {path.name} ({len(df)} propiedades)")
    return path


# ==============================================================================
# INFORME MARKDOWN
# ==============================================================================

def _named_profile(corpus, caps: InstanceCaps) -> List[str]:
    lines = [
        "| Instancia | Submódulo | Orden | weakly J | J | (N:M) |",
        "|-----------|-----------|------:|:--------:|:-:|-------|",
    ]
    rows = 0
    for inst in corpus.instances:
        if not inst.submodules:
            continue
        try:
            ctx = resolve_instance(inst, caps)
        except Exception as e:
            logger.warning(f"  ⚠ {inst.name}: sin perfil ({e})")
            continue
        for name, N in ctx.named_submodules.items():
            rows += 1
            if N.is_whole:
                lines.append(f"| {inst.name} | {name} | {len(N)} | ➖ | ➖ | R |")
                continue
            wj = "✅" if ctx.is_wj(N) else "❌"
            j = "✅" if ctx.is_j(N) else "❌"
            lines.append(
                f"| {inst.name} | {name} | {len(N)} | {wj} | {j} | "
                f"`{format_ideal(colon_into_ring(N))}` |"
            )
    return lines if rows else []


def write_informe(
    corpus,
    result: CorpusResult,
    path: Path,
    caps: Optional[InstanceCaps] = None,
) -> Path:
    """Informe legible de una ejecución de verify."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    summary = result.summary()
    df = summary_frame(result)

    lines = [
        "# 📊 Informe de Verificación - JModLab",
        "",
        f"**Corpus**: {corpus.name}  ",
        f"**Fecha**: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}  ",
        f"**Instancias**: {len(corpus.instances)}",
        "",
        "---",
        "",
        "## 📈 Resumen Ejecutivo",
        "",
        "| Métrica | Valor |",
        "|---------|-------|",
        f"| **Registros** | {summary['registros']} |",
        f"| **Verificados** | {summary['verificadas']} |",
        f"| **Vacuos** | {summary['vacuas']} |",
        f"| **Violados** | {summary['violadas']} |",
        f"| **Violados (no variantes)** | {summary['violadas_registradas']} |",
        f"| **Errores** | {summary['errores']} |",
        "",
        "## 📁 Detalle por Propiedad",
        "",
        "| Propiedad | Variante | Instancias | Verificadas | Vacuas | Violadas | Casos |",
        "|-----------|:--------:|-----------:|------------:|-------:|---------:|------:|",
    ]
    for row in df.itertuples(index=False):
        lines.append(
            f"| {row.propiedad} | {'✅' if row.variante else '➖'} | {row.instancias} | "
            f"{row.verificadas} | {row.vacuas} | {row.violadas} | {row.casos:,} |"
        )

    violated = [r for r in result.reports if r.status == VIOLATED]
    if violated:
        lines += ["", "## 🔎 Testigos", ""]
        for r in violated:
            witness = json.dumps(r.witness, ensure_ascii=False, sort_keys=True)
            lines.append(f"- **{r.property_id}** en {r.instance_name}: `{witness}`")

    if summary["sin_instancia_no_vacua"]:
        lines += ["", "## ⚠ Propiedades sin instancia no vacua", ""]
        lines += [f"- {pid}" for pid in summary["sin_instancia_no_vacua"]]

    profile = _named_profile(corpus, caps or InstanceCaps())
    if profile:
        lines += ["", "## 🧩 Submódulos con nombre", ""] + profile

    if result.errors:
        lines += ["", "## ✘ Errores", ""]
        lines += [f"- {e['nombre']} [{e['propiedad']}]: {e['error']}" for e in result.errors]

    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    logger.info(f"  ✓ Informe Markdown guardado: {path.name}")
    return path
