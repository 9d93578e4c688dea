# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Núcleo 4: Idealización R(+)M y localización S⁻¹R / S⁻¹M
==============================================================================

Descripción:
    Las dos construcciones de anillos del laboratorio, con sus hechos
    estructurales comprobados como postcondiciones.

    Idealización:
    ─────────────
    - Elementos (r, m) codificados como r·|M| + m
    - (r1, m1)(r2, m2) = (r1 r2, r1 m2 + r2 m1)
    - Postcondición: J(R(+)M) = J(R)(+)M
    - I(+)N es ideal si y solo si IM ⊆ N; al construirlo se comprueba
      √(I(+)N) = √I(+)M

    Localización:
    ─────────────
    - Pares (x, s) con s ∈ S, (x1,s1) ~ (x2,s2) si u(x1 s2 - x2 s1) = 0
      para algún u ∈ S
    - Representante de clase: el par mínimo en orden lexicográfico
    - Postcondición: x ↦ x/1 es homomorfismo y S va a unidades
    - S debe ser multiplicativamente cerrado, con 1 ∈ S y 0 ∉ S

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from errores import ConsistencyError, ConstructionError, PreconditionError
from module_core import (
    FiniteModule,
    Submodule,
    build_module,
    construct_module,
    enumerate_submodules,
    ideal_action,
)
from ring_core import (
    FiniteRing,
    Ideal,
    build_ring,
    construct_ring,
    enumerate_ideals,
    jacobson_radical,
    radical_of_ideal,
)

logger = logging.getLogger("JModLab.construcciones")


# ==============================================================================
# IDEALIZACIÓN
# ==============================================================================

@dataclass(frozen=True, eq=False)
class IdealizationRing:
    """R(+)M junto con referencias a sus componentes."""

    ring: FiniteRing
    base: FiniteRing
    module: FiniteModule

    def index(self, r: int, m: int) -> int:
        return r * self.module.order + m

    def pair(self, x: int) -> Tuple[int, int]:
        return divmod(int(x), self.module.order)

    def idealized(self, ring_part: Iterable[int], module_part: Iterable[int]) -> FrozenSet[int]:
        """Índices de {(a, n) : a ∈ ring_part, n ∈ module_part}."""
        module_part = list(module_part)
        return frozenset(self.index(a, n) for a in ring_part for n in module_part)


@lru_cache(maxsize=None)
def idealization(R: FiniteRing, M: FiniteModule) -> IdealizationRing:
    """
    Construye R(+)M y comprueba J(R(+)M) = J(R)(+)M.

    Raises:
        ConstructionError: si M no es módulo sobre R
        ConsistencyError: si falla la identidad del radical de Jacobson
    """
    if M.ring is not R:
        raise ConstructionError(f"idealization: {M.label} no es módulo sobre {R.label}")

    k = M.order
    n = R.order * k
    idx = np.arange(n)
    r, m = idx // k, idx % k
    ra, rb = r[:, None], r[None, :]
    ma, mb = m[:, None], m[None, :]

    add = R.add[ra, rb] * k + M.add[ma, mb]
    mul = R.mul[ra, rb] * k + M.add[M.act[ra, mb], M.act[rb, ma]]
    labels = [f"({R.element_labels[a]},{M.element_labels[b]})" for a, b in zip(r, m)]
    ring = build_ring(
        add, mul, R.one * k, "idealization",
        f"idealization({R.label},{M.label})", labels,
    )
    result = IdealizationRing(ring, R, M)

    expected = result.idealized(jacobson_radical(R).members, M.elements)
    if jacobson_radical(ring).members != expected:
        raise ConsistencyError(f"{ring.label}: J(R(+)M) ≠ J(R)(+)M")
    logger.debug(f"Idealización validada: {ring.label} (|J| = {len(expected)})")
    return result


def idealization_ideal(ID: IdealizationRing, I: Ideal, N: Submodule) -> Ideal:
    """
    I(+)N como ideal de R(+)M; comprueba √(I(+)N) = √I(+)M.

    Raises:
        PreconditionError: si IM ⊄ N
        ConsistencyError: si falla la identidad del radical
    """
    if not ideal_action(I, ID.module) <= N:
        raise PreconditionError("I(+)N no es ideal: IM ⊄ N")
    A = Ideal(ID.ring, ID.idealized(I.members, N.members))

    expected = ID.idealized(radical_of_ideal(ID.base, I).members, ID.module.elements)
    if radical_of_ideal(ID.ring, A).members != expected:
        raise ConsistencyError(f"{ID.ring.label}: √(I(+)N) ≠ √I(+)M")
    return A


def idealization_ideals(ID: IdealizationRing) -> Tuple[Tuple[Ideal, Submodule], ...]:
    """Todos los pares (I, N) con IM ⊆ N, en orden canónico."""
    return tuple(
        (I, N)
        for I in enumerate_ideals(ID.base)
        for N in enumerate_submodules(ID.module)
        if ideal_action(I, ID.module) <= N
    )


def decompose_ideal(ID: IdealizationRing, A: Ideal) -> Optional[Tuple[Ideal, Submodule]]:
    """
    Escribe A = I(+)N si tiene esa forma.

    Returns:
        (I, N) o None
    """
    pairs = [ID.pair(x) for x in A.members]
    I = Ideal(ID.base, frozenset(a for a, _ in pairs))
    N = Submodule(ID.module, frozenset(b for a, b in pairs if a == 0))
    if ID.idealized(I.members, N.members) != A.members:
        return None
    return I, N


def check_ideal_correspondence(ID: IdealizationRing) -> bool:
    """
    Recorre ambos sentidos: cada ideal de la forma I(+)N cumple IM ⊆ N y
    cada par con IM ⊆ N da un ideal.
    """
    for A in enumerate_ideals(ID.ring):
        parts = decompose_ideal(ID, A)
        if parts is not None and not ideal_action(parts[0], ID.module) <= parts[1]:
            return False
    lattice = {A.members for A in enumerate_ideals(ID.ring)}
    return all(
        ID.idealized(I.members, N.members) in lattice
        for I, N in idealization_ideals(ID)
    )


# ==============================================================================
# LOCALIZACIÓN
# ==============================================================================

@dataclass(frozen=True, eq=False)
class LocalizedStructure:
    """
    S⁻¹R (y opcionalmente S⁻¹M) con sus representantes de clase.

    Para un módulo, `ring` es S⁻¹R y `module` es S⁻¹M; canonical_map y
    representatives se refieren a la estructura localizada principal
    (el módulo si existe, el anillo si no).
    """

    base_ring: FiniteRing
    multiplicative_set: FrozenSet[int]
    ring: FiniteRing
    representatives: Tuple[Tuple[int, int], ...]
    canonical_map: Tuple[int, ...]
    class_index: Dict[Tuple[int, int], int] = field(repr=False)
    base_module: Optional[FiniteModule] = None
    module: Optional[FiniteModule] = None
    ring_structure: Optional["LocalizedStructure"] = field(default=None, repr=False)

    def fraction(self, x: int, s: int) -> int:
        """Índice de la clase de x/s."""
        return self.class_index[(int(x), int(s))]


def is_multiplicatively_closed(R: FiniteRing, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return all(int(R.mul[a, b]) in S for a in S for b in S)


def multiplicative_closure(R: FiniteRing, seed: Iterable[int]) -> FrozenSet[int]:
    """Menor subconjunto multiplicativamente cerrado que contiene seed ∪ {1}."""
    closure = {R.one} | {int(s) for s in seed}
    frontier = list(closure)
    while frontier:
        a = frontier.pop()
        for b in list(closure):
            c = int(R.mul[a, b])
            if c not in closure:
                closure.add(c)
                frontier.append(c)
    return frozenset(closure)


def _check_multiplicative_set(R: FiniteRing, S: FrozenSet[int]) -> None:
    if R.one not in S:
        raise ConstructionError("localization: 1 ∉ S")
    if 0 in S:
        raise ConstructionError("localization: 0 ∈ S (colapsa al anillo nulo)")
    if not is_multiplicatively_closed(R, S):
        raise ConstructionError("localization: S no es multiplicativamente cerrado")


def _fraction_classes(
    xs_order: int,
    S: Tuple[int, ...],
    related,
) -> Tuple[List[Tuple[int, int]], Dict[Tuple[int, int], int]]:
    """
    Agrupa los pares (x, s) en clases; `related(x1, s1, xs, ss)` devuelve
    la máscara de pares equivalentes a (x1, s1).
    """
    pairs = [(x, s) for x in range(xs_order) for s in S]
    xs = np.array([p[0] for p in pairs])
    ss = np.array([p[1] for p in pairs])
    assigned = np.full(len(pairs), -1, dtype=np.int64)
    reps: List[Tuple[int, int]] = []

    for i, (x, s) in enumerate(pairs):
        if assigned[i] >= 0:
            continue
        same = related(x, s, xs, ss) & (assigned < 0)
        assigned[same] = len(reps)
        reps.append((x, s))

    class_index = {p: int(c) for p, c in zip(pairs, assigned)}
    return reps, class_index


@lru_cache(maxsize=None)
def localization(R: FiniteRing, S: FrozenSet[int]) -> LocalizedStructure:
    """
    S⁻¹R por clases de pares.

    Raises:
        ConstructionError: S no multiplicativamente cerrado, 1 ∉ S o 0 ∈ S
        ConsistencyError: el mapa canónico no es homomorfismo o S no va
        a unidades
    """
    S = frozenset(int(s) for s in S)
    _check_multiplicative_set(R, S)
    s_list = tuple(sorted(S))
    killed = (R.mul[list(s_list), :] == 0).any(axis=0)

    def related(x1, s1, xs, ss):
        diff = R.add[R.mul[x1, ss], R.neg[R.mul[xs, s1]]]
        return killed[diff]

    reps, class_index = _fraction_classes(R.order, s_list, related)
    c = len(reps)
    add = np.zeros((c, c), dtype=np.int64)
    mul = np.zeros((c, c), dtype=np.int64)
    for i, (x1, s1) in enumerate(reps):
        for j, (x2, s2) in enumerate(reps):
            den = int(R.mul[s1, s2])
            num = int(R.add[R.mul[x1, s2], R.mul[x2, s1]])
            add[i, j] = class_index[(num, den)]
            mul[i, j] = class_index[(int(R.mul[x1, x2]), den)]

    seed = ",".join(str(s) for s in s_list)
    labels = [f"{R.element_labels[x]}/{R.element_labels[s]}" for x, s in reps]
    ring = build_ring(
        add, mul, class_index[(R.one, R.one)], "localization",
        f"localization({R.label},[{seed}])", labels,
    )
    canonical = tuple(class_index[(x, R.one)] for x in R.elements)
    _check_canonical_ring_map(R, ring, canonical, S)

    logger.debug(f"Localización validada: {ring.label} (orden {ring.order})")
    return LocalizedStructure(
        base_ring=R,
        multiplicative_set=S,
        ring=ring,
        representatives=tuple(reps),
        canonical_map=canonical,
        class_index=class_index,
    )


def _check_canonical_ring_map(
    R: FiniteRing, L: FiniteRing, canonical: Tuple[int, ...], S: FrozenSet[int]
) -> None:
    phi = np.array(canonical)
    additive = np.array_equal(phi[R.add], L.add[phi[:, None], phi[None, :]])
    multiplicative = np.array_equal(phi[R.mul], L.mul[phi[:, None], phi[None, :]])
    if not (additive and multiplicative and phi[R.one] == L.one):
        raise ConsistencyError(f"{L.label}: x ↦ x/1 no es homomorfismo de anillos")
    if not all(L.unit_mask[phi[s]] for s in S):
        raise ConsistencyError(f"{L.label}: la imagen de S contiene no-unidades")


@lru_cache(maxsize=None)
def localize_module(
    M: FiniteModule, S: FrozenSet[int], loc: Optional[LocalizedStructure] = None
) -> LocalizedStructure:
    """
    S⁻¹M como módulo sobre S⁻¹R.

    Raises:
        ConstructionError: condiciones sobre S como en localization
    """
    R = M.ring
    loc = localization(R, frozenset(S)) if loc is None else loc
    S = loc.multiplicative_set
    s_list = tuple(sorted(S))
    killed = (M.act[list(s_list), :] == 0).any(axis=0)

    def related(m1, s1, ms, ss):
        diff = M.add[M.act[ss, m1], M.neg[M.act[s1, ms]]]
        return killed[diff]

    reps, class_index = _fraction_classes(M.order, s_list, related)
    c = len(reps)
    add = np.zeros((c, c), dtype=np.int64)
    for i, (m1, s1) in enumerate(reps):
        for j, (m2, s2) in enumerate(reps):
            num = int(M.add[M.act[s2, m1], M.act[s1, m2]])
            add[i, j] = class_index[(num, int(R.mul[s1, s2]))]
    act = np.zeros((loc.ring.order, c), dtype=np.int64)
    for a, (x, t) in enumerate(loc.representatives):
        for j, (m, s) in enumerate(reps):
            act[a, j] = class_index[(int(M.act[x, m]), int(R.mul[t, s]))]

    labels = [f"{M.element_labels[m]}/{R.element_labels[s]}" for m, s in reps]
    module = build_module(
        loc.ring, add, act, "localization",
        f"localization({M.label},[{','.join(str(s) for s in s_list)}])", labels,
    )
    canonical = tuple(class_index[(m, R.one)] for m in M.elements)
    return LocalizedStructure(
        base_ring=R,
        multiplicative_set=S,
        ring=loc.ring,
        representatives=tuple(reps),
        canonical_map=canonical,
        class_index=class_index,
        base_module=M,
        module=module,
        ring_structure=loc,
    )


def localize_ideal(loc: LocalizedStructure, I: Ideal) -> Ideal:
    """S⁻¹I = {x/s : x ∈ I, s ∈ S} como ideal de S⁻¹R."""
    ring_loc = loc.ring_structure or loc
    return Ideal(
        ring_loc.ring,
        frozenset(ring_loc.fraction(x, s) for x in I.members for s in ring_loc.multiplicative_set),
    )


def localize_submodule(loc: LocalizedStructure, N: Submodule) -> Submodule:
    """S⁻¹N = {n/s : n ∈ N, s ∈ S} como submódulo de S⁻¹M."""
    if loc.module is None:
        raise PreconditionError("localize_submodule requiere una localización de módulo")
    return Submodule(
        loc.module,
        frozenset(loc.fraction(n, s) for n in N.members for s in loc.multiplicative_set),
    )


def jacobson_hypothesis_holds(loc: LocalizedStructure) -> bool:
    """S⁻¹J(R) = J(S⁻¹R)."""
    return localize_ideal(loc, jacobson_radical(loc.base_ring)) == jacobson_radical(loc.ring)


# ==============================================================================
# DESCRIPTORES
# ==============================================================================

def ring_from_node(node: tuple) -> FiniteRing:
    """Resuelve los descriptores idealization(...) y localization(...)."""
    base = construct_ring(node[1])
    if node[0] == "idealization":
        return idealization(base, construct_module(base, node[2])).ring
    S = multiplicative_closure(base, node[2])
    return localization(base, S).ring


def clear_caches() -> None:
    idealization.cache_clear()
    localization.cache_clear()
    localize_module.cache_clear()
