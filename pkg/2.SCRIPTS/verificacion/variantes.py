# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Verificación 3: Variantes debilitadas
==============================================================================

Descripción:
    Enunciados que NO son teoremas: recíprocos, hipótesis eliminadas o
    invertidas. `hunt` los recorre sobre un corpus para encontrar testigos
    finitos que muestran por qué cada hipótesis es necesaria.

    V1  weakly J ⇒ J
    V2  N1, N2 weakly J en los factores ⇒ N1 × N2 weakly J
    V3  weakly primario ⇒ weakly J (sin (N:M) ⊆ J(R))
    V4  weakly J, N ⊆ J(R)M y N SÍ J-submódulo ⇒ (N:M)N = 0
    V5  suma de weakly J es weakly J (sin N1 + N2 ≠ M)
    V6  residual (N :_M I) weakly J (sin (0 :_M I) ⊆ N)
    V7  preimagen inyectiva weakly J (sin φ⁻¹(K) ≠ M1)

    Cuando el fallo procede de un predicado, explain() añade el par (r, m)
    que lo rompe; la revalidación lo vuelve a sustituir.

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import itertools
from typing import Dict, Optional

from module_core import (
    Submodule,
    colon_into_ring,
    enumerate_submodules,
    ideal_action,
    product_submodule,
)
from predicates import (
    check_j_submodule,
    check_weakly_j_submodule,
    is_weakly_j_submodule,
    is_weakly_primary,
)
from registro_propiedades import (
    PropertyStatement,
    def_impl_conclusion,
    family_hypothesis,
    family_sum,
    fgfm_instance,
    hom_cases,
    hom_conclusion,
    hom_hypothesis,
    hom_notes,
    ideal_submodule_pairs,
    members_of,
    submodule_cases,
    sum_conclusion,
    weakly_j_hypothesis,
)


# ==============================================================================
# AUXILIARES
# ==============================================================================

def _detail(N: Submodule, predicate: str) -> Optional[Dict]:
    """Par (r, m) que rompe `predicate` en N, si N es propio."""
    if N.is_whole:
        return None
    check = check_j_submodule if predicate == "j-submodule" else check_weakly_j_submodule
    verdict = check(N)
    if verdict.holds:
        return None
    return {"predicado": predicate, "N": members_of(N), "par": list(verdict.witness)}


# ─── V1 ───

def _v1_concl(ctx, a):
    return ctx.is_j(ctx.sub(a["N"]))


def _v1_explain(ctx, a):
    return _detail(ctx.sub(a["N"]), "j-submodule")


# ─── V2 ───

def _two_factors(ctx) -> bool:
    return len(ctx.M.factors) == 2


def _v2_cases(ctx):
    first, second = ctx.M.factors
    for N1 in enumerate_submodules(first):
        for N2 in enumerate_submodules(second):
            yield {"N1": members_of(N1), "N2": members_of(N2)}


def _v2_parts(ctx, a):
    first, second = ctx.M.factors
    return Submodule(first, frozenset(a["N1"])), Submodule(second, frozenset(a["N2"]))


def _v2_product(ctx, a) -> Submodule:
    return product_submodule(ctx.M, _v2_parts(ctx, a))


def _v2_hyp(ctx, a):
    return all(is_weakly_j_submodule(P) for P in _v2_parts(ctx, a))


def _v2_concl(ctx, a):
    return ctx.is_wj(_v2_product(ctx, a))


def _v2_explain(ctx, a):
    return _detail(_v2_product(ctx, a), "weakly-j-submodule")


# ─── V3 ───

def _v3_hyp(ctx, a):
    return is_weakly_primary(ctx.sub(a["N"]))


def _wj_explain(ctx, a):
    return _detail(ctx.sub(a["N"]), "weakly-j-submodule")


# ─── V4 ───

def _v4_hyp(ctx, a):
    N = ctx.sub(a["N"])
    return ctx.is_wj(N) and N <= ctx.jm and ctx.is_j(N)


def _v4_concl(ctx, a):
    N = ctx.sub(a["N"])
    return ideal_action(colon_into_ring(N), N).is_zero


# ─── V5 ───

def _v5_cases(ctx):
    for pair in itertools.combinations(ctx.weakly_j, 2):
        yield {"familia": [members_of(N) for N in pair]}


def _v5_explain(ctx, a):
    total = family_sum(ctx, a)
    if total.is_whole:
        return {"suma": "N1 + N2 = M"}
    return _detail(total, "weakly-j-submodule")


# ─── V6 ───

def _v6_hyp(ctx, a):
    I, N = ctx.ideal(a["I"]), ctx.sub(a["N"])
    return ctx.is_wj(N) and not ctx.residual(N, I.members).is_whole


def _v6_concl(ctx, a):
    return ctx.is_wj(ctx.residual(ctx.sub(a["N"]), a["I"]))


def _v6_explain(ctx, a):
    return _detail(ctx.residual(ctx.sub(a["N"]), a["I"]), "weakly-j-submodule")


# ==============================================================================
# REGISTRO
# ==============================================================================

_VARIANTS = [
    PropertyStatement(
        "V1", "Todo weakly J-submódulo es J-submódulo.",
        submodule_cases, weakly_j_hypothesis, _v1_concl, explain=_v1_explain,
        variant=True, weakens="DEF_IMPL",
    ),
    PropertyStatement(
        "V2", "Si N1 y N2 son weakly J en M1 y M2, N1 × N2 es weakly J en M1 × M2.",
        _v2_cases, _v2_hyp, _v2_concl, applies=_two_factors, explain=_v2_explain,
        budget="|Sub(M1)|·|Sub(M2)|", variant=True, weakens="PROP_D",
    ),
    PropertyStatement(
        "V3", "Todo submódulo weakly primario es weakly J.",
        submodule_cases, _v3_hyp, def_impl_conclusion, explain=_wj_explain,
        variant=True, weakens="PROP_WP",
    ),
    PropertyStatement(
        "V4", "N weakly J, N ⊆ J(R)M y N J-submódulo ⇒ (N:M)N = 0.",
        submodule_cases, _v4_hyp, _v4_concl, variant=True, weakens="LEM_L1",
    ),
    PropertyStatement(
        "V5", "La suma de dos weakly J-submódulos es weakly J.",
        _v5_cases, family_hypothesis, sum_conclusion, explain=_v5_explain,
        budget="C(|wJ|, 2)", variant=True, weakens="PROP_SUM",
    ),
    PropertyStatement(
        "V6", "M f.g. fiel de multiplicación, N weakly J y (N :_M I) ≠ M ⇒ "
        "(N :_M I) weakly J.",
        ideal_submodule_pairs, _v6_hyp, _v6_concl, applies=fgfm_instance, explain=_v6_explain,
        budget="|Id(R)|·|Sub(M)|", variant=True, weakens="PROP_RESIDUAL",
    ),
    PropertyStatement(
        "V7", "φ inyectivo y K weakly J ⇒ φ⁻¹(K) weakly J.",
        hom_cases((2,)), hom_hypothesis(strict=False), hom_conclusion, notes=hom_notes,
        budget="|Hom|·|Sub|", variant=True, weakens="PROP_F",
    ),
]

VARIANTS: Dict[str, PropertyStatement] = {v.id: v for v in _VARIANTS}
