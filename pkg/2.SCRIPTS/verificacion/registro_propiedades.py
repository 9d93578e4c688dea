# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Verificación 2: Registro de propiedades
==============================================================================

Descripción:
    Cada resultado de la teoría de weakly J-submódulos se registra como un
    PropertyStatement ejecutable:

        cases(ctx)            → asignaciones en orden canónico
        hypothesis(ctx, a)    → ¿la asignación cumple la hipótesis?
        conclusion(ctx, a)    → ¿se cumple la conclusión?
        applies(ctx)          → filtro de instancia (falso ⇒ vacuo)

    Las asignaciones son diccionarios serializables (listas de índices y
    enteros) y sirven directamente como testigo en el informe.

Decisiones de diseño:
    - "Finitamente generado" se cumple siempre (módulos finitos) y queda
      anotado como hipótesis automática
    - Enunciados reforzados para que sean ciertos sobre anillos finitos:
      PROP_SUM exige N1 + N2 ≠ M, PROP_RESIDUAL (1) exige (0:_M I) ⊆ N,
      PROP_F (2) exige φ⁻¹(K) ≠ M1. Las formas literales están en
      variantes.py
    - PROP_ID recorre los pares (I, N) con IM ⊆ N y usa la lectura
      "para todo" de la condición sobre (I : ⟨r⟩)
    - Las funciones sin guion bajo (members_of, submodule_cases, hom_cases,
      ...) son bloques compartidos con variantes.py

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from constructions import idealization_ideals
from contexto import InstanceContext
from module_core import (
    Submodule,
    annihilator_module,
    colon_into_ring,
    enumerate_submodules,
    ideal_action,
    is_pure,
    is_small,
    presentation_ideals,
    projection_hom,
    relative_zero_divisors,
    ring_relative_zero_divisors,
    split_submodule,
    submodule_as_module,
    submodule_intersection,
    submodule_sum,
    zero_divisors,
)
from predicates import (
    characterization_conditions,
    is_maximal_weakly_j,
    is_weakly_j_ideal,
    is_weakly_j_submodule,
    is_weakly_primary,
)
from ring_core import (
    Ideal,
    colon_ideal,
    get_max_order,
    ideal_product,
    is_faithful_multiplication_ideal,
    jacobson_radical,
    radical_of_ideal,
)

Assignment = Dict
FG = "M finitamente generado (automático: módulo finito)"


# ==============================================================================
# TIPOS
# ==============================================================================

@dataclass(frozen=True)
class PropertyStatement:
    """Un enunciado ejecutable del registro."""

    id: str
    statement: str
    cases: Callable[[InstanceContext], Iterator[Assignment]]
    hypothesis: Callable[[InstanceContext, Assignment], bool]
    conclusion: Callable[[InstanceContext, Assignment], bool]
    applies: Callable[[InstanceContext], bool] = lambda ctx: True
    explain: Optional[Callable[[InstanceContext, Assignment], Optional[Dict]]] = None
    notes: Optional[Callable[[InstanceContext], List[str]]] = None
    remarks: Tuple[str, ...] = ()
    budget: str = "|Sub(M)|"
    variant: bool = False
    weakens: Optional[str] = None


# ==============================================================================
# AUXILIARES
# ==============================================================================

def members_of(X) -> List[int]:
    return list(X.sorted_members)


def submodule_cases(ctx: InstanceContext) -> Iterator[Assignment]:
    for N in ctx.submodules:
        yield {"N": members_of(N)}


def _ideals(ctx: InstanceContext) -> Iterator[Assignment]:
    for I in ctx.ideals:
        yield {"I": members_of(I)}


def ideal_submodule_pairs(ctx: InstanceContext) -> Iterator[Assignment]:
    for I in ctx.ideals:
        for N in ctx.submodules:
            yield {"I": members_of(I), "N": members_of(N)}


def _sub_pairs(ctx: InstanceContext) -> Iterator[Assignment]:
    for N in ctx.submodules:
        for K in ctx.submodules:
            yield {"N": members_of(N), "K": members_of(K)}


def fgfm_instance(ctx: InstanceContext) -> bool:
    return ctx.fgfm


def _fm(ctx: InstanceContext) -> bool:
    return ctx.faithful_multiplication


@lru_cache(maxsize=4096)
def _fm_ideal(I: Ideal) -> bool:
    return is_faithful_multiplication_ideal(I)


def _relative(N: Submodule, L: Submodule) -> Submodule:
    """N ⊆ L visto como submódulo del módulo L."""
    position = {x: i for i, x in enumerate(L.sorted_members)}
    return Submodule(submodule_as_module(L), frozenset(position[x] for x in N.members))


def _zero(ctx: InstanceContext) -> Submodule:
    return ctx.sub([0])


# ==============================================================================
# DEFINICIÓN, LEMA DE ANULACIÓN Y CARACTERIZACIÓN
# ==============================================================================

def _def_impl_hyp(ctx, a):
    N = ctx.sub(a["N"])
    return not N.is_whole and ctx.is_j(N)


def def_impl_conclusion(ctx, a):
    return ctx.is_wj(ctx.sub(a["N"]))


def _l1_hyp(ctx, a):
    N = ctx.sub(a["N"])
    return ctx.is_wj(N) and N <= ctx.jm and not ctx.is_j(N)


def _l1_concl(ctx, a):
    N = ctx.sub(a["N"])
    colon = colon_into_ring(N)
    return (
        ideal_action(colon, N).is_zero
        and ideal_product(colon, colon) <= annihilator_module(ctx.M)
    )


def _proper_hyp(ctx, a):
    return not ctx.sub(a["N"]).is_whole


def _eq1_concl(ctx, a):
    return len(set(characterization_conditions(ctx.sub(a["N"])).values())) == 1


def _eq1_explain(ctx, a):
    return {"condiciones": characterization_conditions(ctx.sub(a["N"]))}


# ==============================================================================
# MÓDULOS DE MULTIPLICACIÓN FIELES
# ==============================================================================

def _im_concl(ctx, a):
    I = ctx.ideal(a["I"])
    return ctx.is_wj_ideal(I) == ctx.is_wj(ideal_action(I, ctx.M))


def _nm_concl(ctx, a):
    N = ctx.sub(a["N"])
    first = ctx.is_wj(N)
    second = is_weakly_j_ideal(colon_into_ring(N))
    third = any(ideal_action(I, ctx.M) == N for I in ctx.weakly_j_ideals)
    return first == second == third


def _l2_hyp(ctx, a):
    return ctx.is_wj_ideal(ctx.ideal(a["I"]))


def _l2_concl(ctx, a):
    return ctx.ideal(a["I"]) <= ctx.jacobson


def _reduced_hyp(ctx, a):
    N = ctx.sub(a["N"])
    return ctx.is_wj(N) and not ctx.is_j(N)


def _reduced_concl(ctx, a):
    N = ctx.sub(a["N"])
    return (
        ideal_action(colon_into_ring(N), N).is_zero
        and ctx.product(N, N).is_zero
        and (not ctx.flags.reduced or N.is_zero)
    )


def _pure_hyp(ctx, a):
    I, N = ctx.ideal(a["I"]), ctx.sub(a["N"])
    return ctx.is_wj_ideal(I) and ctx.is_wj(N) and is_pure(N)


def _pure_concl(ctx, a):
    return ctx.is_wj(ideal_action(ctx.ideal(a["I"]), ctx.sub(a["N"])))


def _majed_cases(ctx):
    for I in ctx.ideals:
        for N in ctx.submodules:
            for K in ctx.ideals:
                yield {"I": members_of(I), "N": members_of(N), "J": members_of(K)}


def _majed_hyp(ctx, a):
    return _fm_ideal(ctx.ideal(a["I"]))


def _majed_concl(ctx, a):
    I, N, K = ctx.ideal(a["I"]), ctx.sub(a["N"]), ctx.ideal(a["J"])
    if ctx.residual(ideal_action(I, N), I.members) != N:
        return False
    if not N <= ideal_action(I, ctx.M):
        return True
    lhs = ctx.residual(ideal_action(K, N), I.members)
    return lhs == ideal_action(K, ctx.residual(N, I.members))


def _split_hyp(ctx, a):
    I, N = ctx.ideal(a["I"]), ctx.sub(a["N"])
    return _fm_ideal(I) and ctx.is_wj(ideal_action(I, N))


def _split_concl(ctx, a):
    return ctx.is_wj_ideal(ctx.ideal(a["I"])) or ctx.is_wj(ctx.sub(a["N"]))


# ==============================================================================
# RESIDUALES, (N :_M S) Y MAXIMALIDAD
# ==============================================================================

def _residual_cases(ctx):
    for part in (1, 2):
        for I in ctx.ideals:
            for N in ctx.submodules:
                yield {"parte": part, "I": members_of(I), "N": members_of(N)}


def _residual_hyp(ctx, a):
    I, N = ctx.ideal(a["I"]), ctx.sub(a["N"])
    residual = ctx.residual(N, I.members)
    if residual.is_whole:
        return False
    if a["parte"] == 1:
        return ctx.is_wj(N) and ctx.residual(_zero(ctx), I.members) <= N
    return _fm_ideal(I) and N <= ideal_action(I, ctx.M)


def _weak_in(N: Submodule, L: Submodule) -> bool:
    """N es weakly J como submódulo del módulo L (N ⊆ L)."""
    return N != L and is_weakly_j_submodule(_relative(N, L))


def _residual_concl(ctx, a):
    I, N = ctx.ideal(a["I"]), ctx.sub(a["N"])
    residual_wj = ctx.is_wj(ctx.residual(N, I.members))
    if a["parte"] == 1:
        return residual_wj
    return _weak_in(N, ideal_action(I, ctx.M)) == residual_wj


def _ns_sets(ctx) -> List[Tuple[int, ...]]:
    J = ctx.jacobson
    sets = [(s,) for s in ctx.R.elements if s not in J]
    sets += [S for _, S in ctx.instance.subsets if S and not set(S) <= J.members]
    return sets


def _ns_cases(ctx):
    for S in _ns_sets(ctx):
        for N in ctx.submodules:
            yield {"S": list(S), "N": members_of(N)}


def _ns_hyp(ctx, a):
    N = ctx.sub(a["N"])
    S = a["S"]
    return (
        bool(S) and not set(S) <= ctx.jacobson.members
        and ctx.is_wj(N)
        and ctx.residual(_zero(ctx), S) <= N
    )


def _ns_concl(ctx, a):
    return ctx.is_wj(ctx.residual(ctx.sub(a["N"]), a["S"]))


def _max_hyp(ctx, a):
    N = ctx.sub(a["N"])
    if not (ctx.is_wj(N) and is_maximal_weakly_j(N)):
        return False
    return all(
        ctx.residual(_zero(ctx), [s]) <= N
        for s in ctx.R.elements if s not in ctx.jacobson
    )


def _max_concl(ctx, a):
    return ctx.is_j(ctx.sub(a["N"]))


def _fm_condition(ctx, N: Submodule) -> bool:
    JM = ctx.module_jacobson
    for K in ctx.submodules:
        for L in ctx.submodules:
            P = ctx.product(K, L)
            if not P.is_zero and P <= N and not (K <= JM or L <= N):
                return False
    return True


def _fm_concl(ctx, a):
    N = ctx.sub(a["N"])
    return ctx.is_wj(N) == _fm_condition(ctx, N)


def _cm_condition(ctx, N: Submodule) -> bool:
    JM = ctx.module_jacobson
    for m1, m2, P in ctx.element_products:
        if not P.is_zero and P <= N and m1 not in JM and m2 not in N:
            return False
    return True


def _cm_concl(ctx, a):
    N = ctx.sub(a["N"])
    return ctx.is_wj(N) == _cm_condition(ctx, N)


def _njm_hyp(ctx, a):
    return ctx.is_wj(ctx.sub(a["N"]))


def _njm_concl(ctx, a):
    N, K = ctx.sub(a["N"]), ctx.sub(a["K"])
    if not N <= ctx.module_jacobson:
        return False
    if ctx.is_wj(K) and not ctx.is_j(K):
        return ctx.product(N, K).is_zero
    return True


# ==============================================================================
# HOMOMORFISMOS Y COCIENTES
# ==============================================================================

def hom_cases(parts: Tuple[int, ...]):
    def cases(ctx):
        for descriptor, phi in ctx.hom_families:
            for part in parts:
                lattice = enumerate_submodules(phi.source if part == 1 else phi.target)
                key = "N" if part == 1 else "K"
                for X in lattice:
                    yield {"hom": descriptor, "parte": part, key: members_of(X)}
    return cases


def hom_hypothesis(strict: bool):
    def hypothesis(ctx, a):
        phi = ctx.hom(a["hom"])
        injective, surjective, kernel = ctx.hom_flags(a["hom"])
        if a["parte"] == 1:
            N = Submodule(phi.source, frozenset(a["N"]))
            return surjective and is_weakly_j_submodule(N) and kernel <= N.members
        if not injective:
            return False
        K = Submodule(phi.target, frozenset(a["K"]))
        if not is_weakly_j_submodule(K):
            return False
        preimage = frozenset(m for m, y in enumerate(phi.images) if y in K.members)
        return not strict or len(preimage) < phi.source.order
    return hypothesis


def hom_conclusion(ctx, a):
    phi = ctx.hom(a["hom"])
    if a["parte"] == 1:
        image = frozenset(phi.images[n] for n in a["N"])
        return is_weakly_j_submodule(Submodule(phi.target, image))
    K = frozenset(a["K"])
    preimage = frozenset(m for m, y in enumerate(phi.images) if y in K)
    return is_weakly_j_submodule(Submodule(phi.source, preimage))


def hom_notes(ctx):
    return [n for n in ctx.notes if n.startswith("endomorfismos")]


def _quotient_cases(ctx):
    for part in (1, 2, 3):
        for L in ctx.submodules:
            for N in ctx.submodules:
                if L <= N:
                    yield {"parte": part, "L": members_of(L), "N": members_of(N)}


def _over(ctx, a) -> Submodule:
    """N/L dentro de M/L."""
    phi = projection_hom(ctx.M, ctx.sub(a["L"]))
    return Submodule(phi.target, frozenset(phi.images[n] for n in a["N"]))


def _quotient_hyp(ctx, a):
    N, L = ctx.sub(a["N"]), ctx.sub(a["L"])
    if a["parte"] == 1:
        return ctx.is_wj(N)
    if a["parte"] == 2:
        return ctx.is_wj(L) and is_weakly_j_submodule(_over(ctx, a))
    return ctx.is_j(L) and is_weakly_j_submodule(_over(ctx, a))


def _quotient_concl(ctx, a):
    N = ctx.sub(a["N"])
    if a["parte"] == 1:
        return is_weakly_j_submodule(_over(ctx, a))
    if a["parte"] == 2:
        return ctx.is_wj(N)
    return ctx.is_j(N)


# ==============================================================================
# INTERSECCIONES, SUMAS, PEQUEÑEZ Y PRODUCTOS
# ==============================================================================

def _int_cases(ctx):
    for size in (2, 3):
        for family in itertools.combinations(ctx.weakly_j, size):
            yield {"familia": [members_of(N) for N in family]}


def family_hypothesis(ctx, a):
    return all(ctx.is_wj(ctx.sub(N)) for N in a["familia"])


def _int_concl(ctx, a):
    result = ctx.sub(a["familia"][0])
    for N in a["familia"][1:]:
        result = submodule_intersection(result, ctx.sub(N))
    return ctx.is_wj(result)


def _sum_cases(ctx):
    for pair in itertools.combinations(ctx.weakly_j, 2):
        yield {"familia": [members_of(N) for N in pair]}


def family_sum(ctx, a) -> Submodule:
    return submodule_sum(ctx.sub(a["familia"][0]), ctx.sub(a["familia"][1]))


def _sum_hyp(ctx, a):
    return family_hypothesis(ctx, a) and not family_sum(ctx, a).is_whole


def sum_conclusion(ctx, a):
    return ctx.is_wj(family_sum(ctx, a))


def weakly_j_hypothesis(ctx, a):
    return ctx.is_wj(ctx.sub(a["N"]))


def _small_concl(ctx, a):
    return is_small(ctx.sub(a["N"]))


def _j_concl(ctx, a):
    return ctx.is_j(ctx.sub(a["N"]))


def _d_hyp(ctx, a):
    N = ctx.sub(a["N"])
    return ctx.is_wj(N) and split_submodule(N) is not None


def _d_concl(ctx, a):
    parts = split_submodule(ctx.sub(a["N"]))
    return all(P.is_whole or is_weakly_j_submodule(P) for P in parts)


def _has_factors(ctx) -> bool:
    return bool(ctx.M.factors)


# ==============================================================================
# LOCALIZACIÓN
# ==============================================================================

def _s_cases(ctx):
    for case in ctx.localizations:
        for part in (1, 2):
            for N in ctx.submodules:
                yield {"S": list(case.S), "parte": part, "N": members_of(N)}


def _loc_case(ctx, S):
    for case in ctx.localizations:
        if list(case.S) == list(S):
            return case
    raise KeyError(f"S = {S} no está en el barrido de localización")


def _localized(ctx, a) -> Submodule:
    case = _loc_case(ctx, a["S"])
    loc = case.module
    members = frozenset(
        loc.fraction(n, s) for n in a["N"] for s in loc.multiplicative_set
    )
    return Submodule(loc.module, members)


def _s_hyp(ctx, a):
    case = _loc_case(ctx, a["S"])
    if not case.jacobson_ok:
        return False
    N = ctx.sub(a["N"])
    SN = _localized(ctx, a)
    if a["parte"] == 1:
        return ctx.is_wj(N) and not SN.is_whole
    if SN.is_whole or not is_weakly_j_submodule(SN):
        return False
    S = set(case.S)
    return not (
        S & zero_divisors(ctx.M)
        or S & ring_relative_zero_divisors(ctx.threshold)
        or S & relative_zero_divisors(N)
    )


def _s_concl(ctx, a):
    if a["parte"] == 1:
        return is_weakly_j_submodule(_localized(ctx, a))
    return ctx.is_wj(ctx.sub(a["N"]))


def _s_notes(ctx) -> List[str]:
    cases = ctx.localizations
    held = sum(c.jacobson_ok for c in cases)
    return [f"S⁻¹J(R) = J(S⁻¹R) en {held} de {len(cases)} conjuntos S"]


# ==============================================================================
# PRIMARIOS E IDEALIZACIÓN
# ==============================================================================

def _wp_hyp(ctx, a):
    N = ctx.sub(a["N"])
    return (
        not N.is_whole
        and is_weakly_primary(N)
        and colon_into_ring(N) <= ctx.jacobson
    )


def _small_enough(ctx) -> bool:
    return ctx.R.order * ctx.M.order <= get_max_order()


def _id_cases(ctx):
    pairs = [(I, N) for I, N in idealization_ideals(ctx.idealization) if not N.is_whole]
    for part in (1, 2):
        for I, N in pairs:
            yield {"parte": part, "I": members_of(I), "N": members_of(N)}


def _id_ideal(ctx, a) -> Ideal:
    ID = ctx.idealization
    return Ideal(ID.ring, ID.idealized(a["I"], a["N"]))


def _annihilating_pairs(ctx, N: Submodule) -> List[int]:
    """Los r ∉ J(R) con rm = 0 para algún m ∉ N."""
    M = ctx.M
    return [
        r for r in ctx.R.elements
        if r not in ctx.jacobson
        and any(int(M.act[r, m]) == 0 and m not in N for m in M.elements)
    ]


def _colon_zero(ctx, I: Ideal, r: int) -> bool:
    return colon_ideal(ctx.R, I, [r]).is_zero


def _id_readings(ctx, I: Ideal, N: Submodule) -> Tuple[bool, bool]:
    """(lectura para todo, lectura existe) de la condición sobre (I : ⟨r⟩)."""
    rs = _annihilating_pairs(ctx, N)
    return (
        all(_colon_zero(ctx, I, r) for r in rs),
        any(_colon_zero(ctx, I, r) for r in rs),
    )


def _id_hyp(ctx, a):
    I, N = ctx.ideal(a["I"]), ctx.sub(a["N"])
    if a["parte"] == 1:
        return is_weakly_j_ideal(_id_ideal(ctx, a))
    return ctx.is_j_ideal(I) and ctx.is_wj(N) and _id_readings(ctx, I, N)[0]


def _id_concl(ctx, a):
    if a["parte"] == 1:
        return ctx.is_wj_ideal(ctx.ideal(a["I"])) and ctx.is_wj(ctx.sub(a["N"]))
    return is_weakly_j_ideal(_id_ideal(ctx, a))


def _id_notes(ctx) -> List[str]:
    differ = 0
    total = 0
    for I, N in idealization_ideals(ctx.idealization):
        if N.is_whole or not (ctx.is_j_ideal(I) and ctx.is_wj(N)):
            continue
        total += 1
        for_all, exists = _id_readings(ctx, I, N)
        differ += for_all != exists
    return [f"lecturas 'para todo' y 'existe' difieren en {differ} de {total} pares (I, N)"]


# ==============================================================================
# HECHOS DE FONDO
# ==============================================================================

def _colon_cases(ctx):
    for I in ctx.ideals:
        for N in ctx.proper:
            yield {"I": members_of(I), "N": members_of(N)}


def _colon_concl(ctx, a):
    I, N = ctx.ideal(a["I"]), ctx.sub(a["N"])
    return (
        colon_into_ring(ideal_action(I, N)) == ideal_product(I, colon_into_ring(N))
        and colon_into_ring(ideal_action(I, ctx.M)) == I
    )


def _single_case(ctx):
    yield {}


def _jm_concl(ctx, a):
    return ctx.module_jacobson == ctx.jm


def _idealization_cases(ctx):
    for I, N in idealization_ideals(ctx.idealization):
        yield {"I": members_of(I), "N": members_of(N)}


def _idealization_concl(ctx, a):
    ID = ctx.idealization
    I = ctx.ideal(a["I"])
    j_ok = jacobson_radical(ID.ring).members == ID.idealized(ctx.jacobson.members, ctx.M.elements)
    radical = radical_of_ideal(ID.ring, _id_ideal(ctx, a))
    expected = ID.idealized(radical_of_ideal(ctx.R, I).members, ctx.M.elements)
    return j_ok and radical.members == expected


def _product_concl(ctx, a):
    N, K = ctx.sub(a["N"]), ctx.sub(a["K"])
    NK = ctx.product(N, K)
    return all(
        ideal_action(ideal_product(I1, I2), ctx.M) == NK
        for I1 in presentation_ideals(N)
        for I2 in presentation_ideals(K)
    )


# ==============================================================================
# REGISTRO
# ==============================================================================

_TRUE = lambda ctx, a: True  # noqa: E731

_STATEMENTS = [
    PropertyStatement(
        "DEF_IMPL", "Todo J-submódulo es weakly J-submódulo.",
        submodule_cases, _def_impl_hyp, def_impl_conclusion,
    ),
    PropertyStatement(
        "LEM_L1",
        "N weakly J, N ⊆ J(R)M y N no J ⇒ (N:M)N = 0 y (N:M)² ⊆ Ann(M).",
        submodule_cases, _l1_hyp, _l1_concl,
    ),
    PropertyStatement(
        "THM_EQ1",
        "Para N propio, las cuatro caracterizaciones de weakly J coinciden.",
        submodule_cases, _proper_hyp, _eq1_concl, explain=_eq1_explain,
        budget="|Sub(M)|·|Id(R)|·|Sub(M)|",
    ),
    PropertyStatement(
        "PROP_IM",
        "M f.g. fiel de multiplicación: I weakly J-ideal ⟺ IM weakly J.",
        _ideals, _TRUE, _im_concl, applies=fgfm_instance, remarks=(FG,), budget="|Id(R)|",
    ),
    PropertyStatement(
        "COR_NM",
        "M f.g. fiel de multiplicación: N weakly J ⟺ (N:M) weakly J-ideal "
        "⟺ N = IM con I weakly J-ideal.",
        submodule_cases, _proper_hyp, _nm_concl, applies=fgfm_instance, remarks=(FG,),
    ),
    PropertyStatement(
        "LEM_L2", "Todo weakly J-ideal está contenido en J(R).",
        _ideals, _l2_hyp, _l2_concl, budget="|Id(R)|",
    ),
    PropertyStatement(
        "COR_REDUCED",
        "M f.g. fiel de multiplicación, N weakly J no J ⇒ (N:M)N = 0, N² = 0; "
        "si M es reducido, N = 0.",
        submodule_cases, _reduced_hyp, _reduced_concl, applies=fgfm_instance, remarks=(FG,),
    ),
    PropertyStatement(
        "PROP_PURE",
        "M f.g. fiel de multiplicación, N puro weakly J, I weakly J-ideal ⇒ IN weakly J.",
        ideal_submodule_pairs, _pure_hyp, _pure_concl, applies=fgfm_instance, remarks=(FG,),
        budget="|Id(R)|·|Sub(M)|",
    ),
    PropertyStatement(
        "LEM_MAJED",
        "M fiel de multiplicación, I ideal f.g. fiel de multiplicación ⇒ "
        "N = (IN :_M I) y, si N ⊆ IM, (JN :_M I) = J(N :_M I).",
        _majed_cases, _majed_hyp, _majed_concl, applies=_fm, remarks=(FG,),
        budget="|Id(R)|²·|Sub(M)|",
    ),
    PropertyStatement(
        "PROP_SPLIT",
        "M fiel de multiplicación, I f.g. fiel de multiplicación, IN weakly J ⇒ "
        "I weakly J-ideal o N weakly J.",
        ideal_submodule_pairs, _split_hyp, _split_concl, applies=_fm, remarks=(FG,),
        budget="|Id(R)|·|Sub(M)|",
    ),
    PropertyStatement(
        "PROP_RESIDUAL",
        "M f.g. fiel de multiplicación: (1) N weakly J, (N :_M I) ≠ M y "
        "(0 :_M I) ⊆ N ⇒ (N :_M I) weakly J; (2) I f.g. fiel de multiplicación "
        "y (N :_M I) ≠ M ⇒ [N weakly J en IM ⟺ (N :_M I) weakly J].",
        _residual_cases, _residual_hyp, _residual_concl, applies=fgfm_instance, remarks=(FG,),
        budget="2·|Id(R)|·|Sub(M)|",
    ),
    PropertyStatement(
        "PROP_NS",
        "M f.g. fiel de multiplicación, S ⊄ J(R), N weakly J, (0 :_M S) ⊆ N ⇒ "
        "(N :_M S) weakly J.",
        _ns_cases, _ns_hyp, _ns_concl, applies=fgfm_instance,
        remarks=(FG, "S recorre los singletons s ∉ J(R) y los subconjuntos del corpus"),
        budget="|R|·|Sub(M)|",
    ),
    PropertyStatement(
        "THM_MAX",
        "M f.g. fiel de multiplicación, N maximal weakly J con (0 :_M S) ⊆ N "
        "para todo S ⊄ J(R) ⇒ N es J-submódulo.",
        submodule_cases, _max_hyp, _max_concl, applies=fgfm_instance,
        remarks=(FG, "hipótesis sobre S reducida a singletons s ∉ J(R)"),
    ),
    PropertyStatement(
        "THM_FM",
        "M f.g. fiel de multiplicación, N propio: N weakly J ⟺ "
        "[0 ≠ KL ⊆ N ⇒ K ⊆ J(M) o L ⊆ N].",
        submodule_cases, _proper_hyp, _fm_concl, applies=fgfm_instance, remarks=(FG,),
        budget="|Sub(M)|³",
    ),
    PropertyStatement(
        "COR_CM",
        "M f.g. fiel de multiplicación, N propio: N weakly J ⟺ "
        "[0 ≠ m1m2 ⊆ N ⇒ m1 ∈ J(M) o m2 ∈ N].",
        submodule_cases, _proper_hyp, _cm_concl, applies=fgfm_instance, remarks=(FG,),
        budget="|Sub(M)|·|M|²",
    ),
    PropertyStatement(
        "PROP_NJM",
        "M f.g. fiel de multiplicación, N weakly J ⇒ N ⊆ J(M); si K es weakly J "
        "no J, NK = 0.",
        _sub_pairs, _njm_hyp, _njm_concl, applies=fgfm_instance, remarks=(FG,),
        budget="|Sub(M)|²",
    ),
    PropertyStatement(
        "PROP_F",
        "φ sobreyectivo con ker φ ⊆ N weakly J ⇒ φ(N) weakly J; φ inyectivo, "
        "K weakly J, φ⁻¹(K) ≠ M1 ⇒ φ⁻¹(K) weakly J.",
        hom_cases((1, 2)), hom_hypothesis(strict=True), hom_conclusion,
        notes=hom_notes,
        remarks=("homomorfismos: endomorfismos, proyecciones M → M/L e inclusiones L → M",),
        budget="|Hom|·|Sub|",
    ),
    PropertyStatement(
        "COR_QUOTIENT",
        "L ⊆ N: (1) N weakly J ⇒ N/L weakly J; (2) L y N/L weakly J ⇒ N weakly J; "
        "(3) L J-submódulo y N/L weakly J ⇒ N J-submódulo.",
        _quotient_cases, _quotient_hyp, _quotient_concl, budget="3·|Sub(M)|²",
    ),
    PropertyStatement(
        "PROP_INT",
        "La intersección de weakly J-submódulos es weakly J (pares y ternas).",
        _int_cases, family_hypothesis, _int_concl, budget="C(|wJ|, 3)",
    ),
    PropertyStatement(
        "PROP_SUM",
        "N1, N2 weakly J con N1 + N2 ≠ M ⇒ N1 + N2 weakly J.",
        _sum_cases, _sum_hyp, sum_conclusion, budget="C(|wJ|, 2)",
    ),
    PropertyStatement(
        "LEM_SMALL",
        "En un módulo f.g. fiel de multiplicación todo weakly J es pequeño.",
        submodule_cases, weakly_j_hypothesis, _small_concl, applies=fgfm_instance, remarks=(FG,),
    ),
    PropertyStatement(
        "PROP_JP",
        "En un módulo J-presimplificable todo weakly J es J-submódulo.",
        submodule_cases, weakly_j_hypothesis, _j_concl, applies=lambda ctx: ctx.presimplifiable,
    ),
    PropertyStatement(
        "PROP_D",
        "N1 × ... × Nk weakly J ⇒ cada Ni ≠ Mi es weakly J en Mi.",
        submodule_cases, _d_hyp, _d_concl, applies=_has_factors,
    ),
    PropertyStatement(
        "PROP_S",
        "Con S⁻¹J(R) = J(S⁻¹R): (1) N weakly J y S⁻¹N ≠ S⁻¹M ⇒ S⁻¹N weakly J; "
        "(2) S⁻¹N weakly J y S disjunto de Z(M), Z_(J(R)M:M)(R), Z_N(M) ⇒ N weakly J.",
        _s_cases, _s_hyp, _s_concl, notes=_s_notes,
        remarks=("S recorre cierres multiplicativos de singletons y subconjuntos del corpus",),
        budget="|S|·2·|Sub(M)|",
    ),
    PropertyStatement(
        "PROP_WP",
        "N weakly primario con (N:M) ⊆ J(R) ⇒ N weakly J.",
        submodule_cases, _wp_hyp, def_impl_conclusion,
    ),
    PropertyStatement(
        "PROP_ID",
        "(1) I(+)N weakly J-ideal ⇒ I weakly J-ideal y N weakly J; (2) I J-ideal, "
        "N weakly J y (I : ⟨r⟩) = 0 para todo rm = 0 con r ∉ J(R), m ∉ N ⇒ "
        "I(+)N weakly J-ideal.",
        _id_cases, _id_hyp, _id_concl, applies=_small_enough, notes=_id_notes,
        remarks=("pares (I, N) con IM ⊆ N", "condición (I : ⟨r⟩) = 0 en lectura 'para todo'"),
        budget="2·|Id(R)|·|Sub(M)|",
    ),
    PropertyStatement(
        "FACT_COLON",
        "M f.g. fiel de multiplicación: (IN:M) = I(N:M) y (IM:M) = I.",
        _colon_cases, _TRUE, _colon_concl, applies=fgfm_instance, remarks=(FG,),
        budget="|Id(R)|·|Sub(M)|",
    ),
    PropertyStatement(
        "FACT_JM",
        "M f.g. fiel de multiplicación: J(M) = J(R)M.",
        _single_case, _TRUE, _jm_concl, applies=fgfm_instance, remarks=(FG,), budget="1",
    ),
    PropertyStatement(
        "FACT_IDEALIZATION",
        "J(R(+)M) = J(R)(+)M y √(I(+)N) = √I(+)M cuando IM ⊆ N.",
        _idealization_cases, _TRUE, _idealization_concl,
        applies=lambda ctx: ctx.fgfm and _small_enough(ctx), remarks=(FG,),
        budget="|Id(R)|·|Sub(M)|",
    ),
    PropertyStatement(
        "FACT_PRODUCT",
        "M f.g. fiel de multiplicación: NK no depende de los ideales de presentación.",
        _sub_pairs, _TRUE, _product_concl,
        applies=lambda ctx: ctx.fgfm and ctx.R.order <= 16, remarks=(FG,),
        budget="|Sub(M)|²·|Id(R)|²",
    ),
]

PROPERTIES: Dict[str, PropertyStatement] = {p.id: p for p in _STATEMENTS}
