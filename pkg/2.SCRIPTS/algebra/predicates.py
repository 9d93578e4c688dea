# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Núcleo 3: Predicados sobre submódulos e ideales
==============================================================================

Descripción:
    Cada predicado devuelve un Verdict: se cumple, o falla con un testigo
    explícito que puede volver a sustituirse en la condición que lo
    define.

    Predicados de pares (r, m):
    ───────────────────────────
    weakly-j-submodule   0 ≠ rm ∈ N, r ∉ (J(R)M:M)      ⇒ m ∈ N
    j-submodule          rm ∈ N, r ∉ (J(R)M:M)          ⇒ m ∈ N
    prime                rm ∈ N, r ∉ (N:M)              ⇒ m ∈ N
    weakly-prime         0 ≠ rm ∈ N, r ∉ (N:M)          ⇒ m ∈ N
    primary              rm ∈ N, r ∉ √(N:M)             ⇒ m ∈ N
    weakly-primary       0 ≠ rm ∈ N, r ∉ √(N:M)         ⇒ m ∈ N
    n-submodule          rm ∈ N, r ∉ √(0:M)             ⇒ m ∈ N
    j-ideal / weakly-j-ideal: versiones en el anillo con r ∉ J(R)

Decisiones de diseño:
    - Barrido vectorizado con numpy sobre la tabla de acción |R| x |M|
    - Testigo = primer par (r, m) en orden lexicográfico de índices
    - checks = pares examinados hasta el testigo (o todos si se cumple)
    - vacuous = True si la premisa no se dispara en ningún par
    - N = M es un error (los predicados piden submódulos propios)

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, Optional, Tuple

import numpy as np

from errores import PreconditionError
from module_core import (
    FiniteModule,
    Submodule,
    colon_into_ring,
    colon_of_set,
    cyclic_submodule,
    enumerate_submodules,
    ideal_action,
    proper_submodules,
    self_module,
)
from ring_core import (
    FiniteRing,
    Ideal,
    enumerate_ideals,
    jacobson_radical,
    radical_of_ideal,
)

logger = logging.getLogger("JModLab.predicados")

CLASSICAL_KINDS = ("prime", "weakly_prime", "primary", "weakly_primary", "n_submodule")


# ==============================================================================
# TIPOS
# ==============================================================================

@dataclass(frozen=True)
class Verdict:
    """
    Resultado de un predicado.

    witness: (r, m), (a, b) o, para maximal-weakly-j, los miembros del
    submódulo mayor encontrado.
    """

    holds: bool
    witness: Optional[Tuple[int, ...]]
    checks: int
    vacuous: bool = False
    predicate: str = ""


# ==============================================================================
# UMBRAL (J(R)M : M)
# ==============================================================================

@lru_cache(maxsize=None)
def jacobson_threshold(M: FiniteModule) -> Ideal:
    """(J(R)M : M), el ideal que sustituye a J(R) en los predicados J."""
    return colon_into_ring(ideal_action(jacobson_radical(M.ring), M))


def _require_proper(N: Submodule, M: Optional[FiniteModule]) -> FiniteModule:
    if M is not None and N.module is not M:
        raise PreconditionError("N no es submódulo del módulo indicado")
    if N.is_whole:
        raise PreconditionError("se requiere un submódulo propio (N = M)")
    return N.module


def _scan(premise: np.ndarray, conclusion: np.ndarray, name: str) -> Verdict:
    """
    Verdict a partir de dos matrices booleanas (filas r, columnas m).

    Falla en los pares con premisa cierta y conclusión falsa; el primero
    en orden fila-columna es el testigo.
    """
    violations = np.flatnonzero(premise & ~conclusion)
    if violations.size:
        first = int(violations[0])
        r, m = divmod(first, premise.shape[1])
        return Verdict(False, (r, m), first + 1, predicate=name)
    return Verdict(True, None, int(premise.size), vacuous=not premise.any(), predicate=name)


def _pair_scan(N: Submodule, excluded: np.ndarray, weak: bool, name: str) -> Verdict:
    """
    Barrido genérico: rm ∈ N (y rm ≠ 0 si weak) con r fuera de `excluded`
    debe implicar m ∈ N.
    """
    M = N.module
    rm = M.act
    premise = N.mask[rm] & ~excluded[:, None]
    if weak:
        premise &= rm != 0
    conclusion = np.broadcast_to(N.mask[None, :], premise.shape)
    return _scan(premise, conclusion, name)


# ==============================================================================
# PREDICADOS J
# ==============================================================================

def check_weakly_j_submodule(N: Submodule, M: Optional[FiniteModule] = None) -> Verdict:
    """
    0 ≠ rm ∈ N y r ∉ (J(R)M:M) implican m ∈ N.

    Raises:
        PreconditionError: si N = M
    """
    M = _require_proper(N, M)
    return _pair_scan(N, jacobson_threshold(M).mask, True, "weakly-j-submodule")


def check_j_submodule(N: Submodule, M: Optional[FiniteModule] = None) -> Verdict:
    """
    rm ∈ N y r ∉ (J(R)M:M) implican m ∈ N.

    Raises:
        PreconditionError: si N = M
    """
    M = _require_proper(N, M)
    return _pair_scan(N, jacobson_threshold(M).mask, False, "j-submodule")


@lru_cache(maxsize=None)
def weakly_j_submodules(M: FiniteModule) -> FrozenSet[FrozenSet[int]]:
    """Miembros de todos los submódulos weakly J de M."""
    return frozenset(
        N.members for N in proper_submodules(M) if check_weakly_j_submodule(N).holds
    )


@lru_cache(maxsize=None)
def j_submodules(M: FiniteModule) -> FrozenSet[FrozenSet[int]]:
    return frozenset(
        N.members for N in proper_submodules(M) if check_j_submodule(N).holds
    )


def is_weakly_j_submodule(N: Submodule) -> bool:
    """Versión booleana; False para N = M."""
    return N.members in weakly_j_submodules(N.module)


def is_j_submodule(N: Submodule) -> bool:
    return N.members in j_submodules(N.module)


# ==============================================================================
# IDEALES J
# ==============================================================================

def check_ideal_variants(I: Ideal, R: Optional[FiniteRing] = None) -> Dict[str, Verdict]:
    """
    j_ideal: ab ∈ I, a ∉ J(R) ⇒ b ∈ I.
    weakly_j_ideal: 0 ≠ ab ∈ I, a ∉ J(R) ⇒ b ∈ I.

    Raises:
        PreconditionError: si I = R
    """
    R = I.ring if R is None else R
    if I.ring is not R:
        raise PreconditionError("I no es ideal del anillo indicado")
    if I.is_whole:
        raise PreconditionError("se requiere un ideal propio (I = R)")

    outside_j = ~jacobson_radical(R).mask
    ab = R.mul
    strong = I.mask[ab] & outside_j[:, None]
    conclusion = np.broadcast_to(I.mask[None, :], strong.shape)
    return {
        "j_ideal": _scan(strong, conclusion, "j-ideal"),
        "weakly_j_ideal": _scan(strong & (ab != 0), conclusion, "weakly-j-ideal"),
    }


@lru_cache(maxsize=None)
def weakly_j_ideals(R: FiniteRing) -> FrozenSet[FrozenSet[int]]:
    return frozenset(
        I.members for I in enumerate_ideals(R)
        if not I.is_whole and check_ideal_variants(I)["weakly_j_ideal"].holds
    )


@lru_cache(maxsize=None)
def j_ideals(R: FiniteRing) -> FrozenSet[FrozenSet[int]]:
    return frozenset(
        I.members for I in enumerate_ideals(R)
        if not I.is_whole and check_ideal_variants(I)["j_ideal"].holds
    )


def is_weakly_j_ideal(I: Ideal) -> bool:
    return I.members in weakly_j_ideals(I.ring)


def is_j_ideal(I: Ideal) -> bool:
    return I.members in j_ideals(I.ring)


# ==============================================================================
# PREDICADOS CLÁSICOS
# ==============================================================================

def _classical_excluded(N: Submodule, kind: str) -> np.ndarray:
    M = N.module
    R = M.ring
    if kind in ("prime", "weakly_prime"):
        return colon_into_ring(N).mask
    if kind in ("primary", "weakly_primary"):
        return radical_of_ideal(R, colon_into_ring(N)).mask
    return radical_of_ideal(R, colon_into_ring(Submodule(M, frozenset({0})))).mask


def check_classical(N: Submodule, M: Optional[FiniteModule] = None, kind: str = "prime") -> Verdict:
    """
    Predicados clásicos: prime, weakly_prime, primary, weakly_primary,
    n_submodule.

    Raises:
        PreconditionError: si N = M o el tipo es desconocido
    """
    _require_proper(N, M)
    if kind not in CLASSICAL_KINDS:
        raise PreconditionError(f"predicado clásico desconocido: {kind}")
    weak = kind.startswith("weakly")
    return _pair_scan(N, _classical_excluded(N, kind), weak, kind.replace("_", "-"))


def is_weakly_primary(N: Submodule) -> bool:
    return not N.is_whole and check_classical(N, kind="weakly_primary").holds


# ==============================================================================
# PRESIMPLIFICABLE Y MAXIMALIDAD
# ==============================================================================

def check_j_presimplifiable(M: FiniteModule) -> Verdict:
    """
    Z(M) ⊆ (J(R)M:M). Testigo (r, m) con rm = 0, m ≠ 0, r ∉ (J(R)M:M).
    """
    inside = jacobson_threshold(M).mask
    nonzero_m = np.arange(M.order) != 0
    premise = (M.act == 0) & nonzero_m[None, :]
    conclusion = np.broadcast_to(inside[:, None], premise.shape)
    return _scan(premise, conclusion, "j-presimplifiable")


def check_maximal_weakly_j(N: Submodule, M: Optional[FiniteModule] = None) -> Verdict:
    """
    Ningún submódulo weakly J propio contiene a N estrictamente.

    Raises:
        PreconditionError: si N = M o N no es weakly J
    """
    M = _require_proper(N, M)
    if not is_weakly_j_submodule(N):
        raise PreconditionError("check_maximal_weakly_j: N no es weakly J")
    checks = 0
    for K in proper_submodules(M):
        checks += 1
        if N < K and is_weakly_j_submodule(K):
            return Verdict(False, K.sorted_members, checks, predicate="maximal-weakly-j")
    return Verdict(True, None, checks, predicate="maximal-weakly-j")


def is_maximal_weakly_j(N: Submodule) -> bool:
    return is_weakly_j_submodule(N) and check_maximal_weakly_j(N).holds


# ==============================================================================
# CARACTERIZACIÓN EN CUATRO CONDICIONES
# ==============================================================================

def characterization_conditions(N: Submodule, M: Optional[FiniteModule] = None) -> Dict[str, bool]:
    """
    Las cuatro condiciones equivalentes para un N propio:

        1. N es weakly J
        2. para m ∉ N: (N : Rm) ⊆ (J(R)M:M) ∪ (0 : Rm)
        3. 0 ≠ Im ⊆ N  ⇒ I ⊆ (J(R)M:M) o m ∈ N
        4. 0 ≠ IK ⊆ N  ⇒ I ⊆ (J(R)M:M) o K ⊆ N
    """
    M = _require_proper(N, M)
    Q = jacobson_threshold(M)
    zero = Submodule(M, frozenset({0}))
    ideals = enumerate_ideals(M.ring)

    cond2 = True
    for m in M.elements:
        if m in N:
            continue
        cyc = cyclic_submodule(M, m)
        allowed = Q.members | colon_of_set(zero, cyc.members).members
        if not colon_of_set(N, cyc.members).members <= allowed:
            cond2 = False
            break

    cond3 = True
    for I in ideals:
        if I <= Q:
            continue
        for m in M.elements:
            image = frozenset(int(M.act[a, m]) for a in I.members)
            if image != {0} and image <= N.members and m not in N:
                cond3 = False
                break
        if not cond3:
            break

    cond4 = True
    for I in ideals:
        if I <= Q:
            continue
        for K in enumerate_submodules(M):
            IK = ideal_action(I, K)
            if not IK.is_zero and IK <= N and not K <= N:
                cond4 = False
                break
        if not cond4:
            break

    return {
        "weakly_j": is_weakly_j_submodule(N),
        "colon_ciclico": cond2,
        "ideal_elemento": cond3,
        "ideal_submodulo": cond4,
    }


# ==============================================================================
# REVALIDACIÓN DE TESTIGOS
# ==============================================================================

def _condition_violated(
    N: Submodule, r: int, m: int, excluded: FrozenSet[int], weak: bool
) -> bool:
    rm = int(N.module.act[r, m])
    fires = rm in N.members and r not in excluded and (rm != 0 or not weak)
    return fires and m not in N.members


def witness_is_valid(predicate: str, N: Submodule, witness: Tuple[int, ...]) -> bool:
    """
    Sustituye el testigo en la condición que define el predicado y
    confirma que la viola. Para ideales, N es el ideal visto en R-como-
    módulo-sobre-sí-mismo.
    """
    M = N.module
    if predicate == "maximal-weakly-j":
        K = Submodule(M, frozenset(witness))
        return N < K and not K.is_whole and check_weakly_j_submodule(K).holds

    r, m = witness
    if predicate in ("weakly-j-submodule", "j-submodule"):
        excluded = jacobson_threshold(M).members
        return _condition_violated(N, r, m, excluded, predicate.startswith("weakly"))
    if predicate in ("weakly-j-ideal", "j-ideal"):
        excluded = jacobson_radical(M.ring).members
        return _condition_violated(N, r, m, excluded, predicate.startswith("weakly"))
    if predicate == "j-presimplifiable":
        return (
            int(M.act[r, m]) == 0 and m != 0
            and r not in jacobson_threshold(M).members
        )
    kind = predicate.replace("-", "_")
    if kind in CLASSICAL_KINDS:
        excluded = frozenset(int(x) for x in np.flatnonzero(_classical_excluded(N, kind)))
        return _condition_violated(N, r, m, excluded, kind.startswith("weakly"))
    raise PreconditionError(f"predicado desconocido: {predicate}")


# ==============================================================================
# REGISTRO PARA LA CLI
# ==============================================================================

def _ideal_predicate(key: str) -> Callable[[Submodule], Verdict]:
    def run(N: Submodule) -> Verdict:
        R = N.module.ring
        return check_ideal_variants(Ideal(R, N.members), R)[key]
    return run


# Predicados que reciben un submódulo N (los de ideales: N dentro de R como módulo)
SUBMODULE_PREDICATES: Dict[str, Callable[[Submodule], Verdict]] = {
    "weakly-j-submodule": check_weakly_j_submodule,
    "j-submodule": check_j_submodule,
    "prime": lambda N: check_classical(N, kind="prime"),
    "weakly-prime": lambda N: check_classical(N, kind="weakly_prime"),
    "primary": lambda N: check_classical(N, kind="primary"),
    "weakly-primary": lambda N: check_classical(N, kind="weakly_primary"),
    "n-submodule": lambda N: check_classical(N, kind="n_submodule"),
    "maximal-weakly-j": check_maximal_weakly_j,
    "j-ideal": _ideal_predicate("j_ideal"),
    "weakly-j-ideal": _ideal_predicate("weakly_j_ideal"),
}
IDEAL_PREDICATES = ("j-ideal", "weakly-j-ideal")
MODULE_PREDICATES = ("j-presimplifiable",)
PREDICATE_NAMES = tuple(sorted(set(SUBMODULE_PREDICATES) | set(MODULE_PREDICATES)))


def ideal_as_submodule(I: Ideal) -> Submodule:
    """I dentro de R visto como módulo sobre sí mismo."""
    return Submodule(_self_module_cached(I.ring), I.members)


@lru_cache(maxsize=None)
def _self_module_cached(R: FiniteRing) -> FiniteModule:
    return self_module(R)



def clear_caches() -> None:
    """Vacía las cachés de predicados y el módulo R sobre sí mismo."""
    for cached in (
        jacobson_threshold, weakly_j_submodules, j_submodules,
        weakly_j_ideals, j_ideals, _self_module_cached,
    ):
        cached.cache_clear()
