# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Verificación 5: Oráculos ingenuos
==============================================================================

Descripción:
    Segunda implementación, deliberadamente lenta, de los retículos y
    predicados del núcleo. Sólo lee las tablas (convertidas a listas de
    Python) y expande los cuantificadores con bucles anidados; no usa
    máscaras numpy ni las funciones de ring_core/module_core.

    Los tests comparan cada predicado del núcleo con su oráculo sobre el
    corpus: el acuerdo debe ser exacto.

Límites:
    Los retículos se obtienen recorriendo subconjuntos, así que sólo se
    admiten estructuras de orden ≤ ORACLE_MAX_ORDER.

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

from itertools import combinations
from typing import FrozenSet, List, Set

from errores import PreconditionError

ORACLE_MAX_ORDER = 16


def _tables(structure) -> tuple:
    if structure.order > ORACLE_MAX_ORDER:
        raise PreconditionError(
            f"oráculo: orden {structure.order} supera {ORACLE_MAX_ORDER}"
        )
    add = structure.add.tolist()
    action = structure.mul.tolist() if hasattr(structure, "mul") else structure.act.tolist()
    return add, action


def _closed_subsets(order: int, add: List[List[int]], action: List[List[int]], scalars: int) -> List[FrozenSet[int]]:
    """Subconjuntos con 0, cerrados bajo suma y bajo la acción."""
    found = []
    rest = list(range(1, order))
    for size in range(order):
        for combo in combinations(rest, size):
            S = {0, *combo}
            if all(add[a][b] in S for a in S for b in S) and all(
                action[r][a] in S for r in range(scalars) for a in S
            ):
                found.append(frozenset(S))
    return found


def _span(add: List[List[int]], seeds: Set[int]) -> FrozenSet[int]:
    closed = set(seeds) | {0}
    grew = True
    while grew:
        grew = False
        for a in list(closed):
            for b in list(closed):
                if add[a][b] not in closed:
                    closed.add(add[a][b])
                    grew = True
    return frozenset(closed)


# ==============================================================================
# RETÍCULOS
# ==============================================================================

def naive_ideals(R) -> List[FrozenSet[int]]:
    add, mul = _tables(R)
    return _closed_subsets(R.order, add, mul, R.order)


def naive_submodules(M) -> List[FrozenSet[int]]:
    add, act = _tables(M)
    return _closed_subsets(M.order, add, act, M.ring.order)


def naive_jacobson(R) -> FrozenSet[int]:
    """Intersección de los ideales propios maximales por inclusión."""
    proper = [I for I in naive_ideals(R) if len(I) < R.order]
    maximal = [I for I in proper if not any(I < K for K in proper)]
    result = frozenset(range(R.order))
    for I in maximal:
        result &= I
    return result


def naive_colon(M, N: FrozenSet[int]) -> FrozenSet[int]:
    """(N : M) = {r : rm ∈ N para todo m}."""
    act = M.act.tolist()
    return frozenset(
        r for r in range(M.ring.order) if all(act[r][m] in N for m in range(M.order))
    )


def naive_radical(R, I: FrozenSet[int]) -> FrozenSet[int]:
    mul = R.mul.tolist()
    result = set()
    for r in range(R.order):
        power = r
        for _ in range(R.order):
            if power in I:
                result.add(r)
                break
            power = mul[power][r]
    return frozenset(result)


def naive_threshold(M) -> FrozenSet[int]:
    """(J(R)M : M)."""
    act = M.act.tolist()
    J = naive_jacobson(M.ring)
    JM = _span(M.add.tolist(), {act[j][m] for j in J for m in range(M.order)})
    return naive_colon(M, JM)


# ==============================================================================
# PREDICADOS
# ==============================================================================

def _pair_condition(M, N: FrozenSet[int], excluded: FrozenSet[int], weak: bool) -> bool:
    act = M.act.tolist()
    for r in range(M.ring.order):
        if r in excluded:
            continue
        for m in range(M.order):
            rm = act[r][m]
            if weak and rm == 0:
                continue
            if rm in N and m not in N:
                return False
    return True


def naive_weakly_j(M, N: FrozenSet[int]) -> bool:
    return _pair_condition(M, N, naive_threshold(M), weak=True)


def naive_j(M, N: FrozenSet[int]) -> bool:
    return _pair_condition(M, N, naive_threshold(M), weak=False)


def naive_ideal_variants(R, I: FrozenSet[int]) -> dict:
    mul = R.mul.tolist()
    J = naive_jacobson(R)
    strong = weak = True
    for a in range(R.order):
        if a in J:
            continue
        for b in range(R.order):
            ab = mul[a][b]
            if ab in I and b not in I:
                strong = False
                if ab != 0:
                    weak = False
    return {"j_ideal": strong, "weakly_j_ideal": weak}


def naive_classical(M, N: FrozenSet[int], kind: str) -> bool:
    if kind in ("prime", "weakly_prime"):
        excluded = naive_colon(M, N)
    elif kind in ("primary", "weakly_primary"):
        excluded = naive_radical(M.ring, naive_colon(M, N))
    elif kind == "n_submodule":
        excluded = naive_radical(M.ring, naive_colon(M, frozenset({0})))
    else:
        raise PreconditionError(f"oráculo: tipo desconocido {kind}")
    return _pair_condition(M, N, excluded, weak=kind.startswith("weakly"))


def naive_presimplifiable(M) -> bool:
    act = M.act.tolist()
    Q = naive_threshold(M)
    return all(
        r in Q
        for r in range(M.ring.order)
        for m in range(1, M.order)
        if act[r][m] == 0
    )
