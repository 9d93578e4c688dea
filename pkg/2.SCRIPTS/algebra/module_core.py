# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Núcleo 2: Módulos finitos sobre anillos finitos
==============================================================================

Descripción:
    Módulos finitos con acción validada de un FiniteRing: retículo de
    submódulos, operadores colon / residual / anulador, clasificación
    estructural (fiel, de multiplicación, reducido; puro, pequeño),
    producto de submódulos, conjuntos de divisores de cero y
    homomorfismos de módulos.

    Constructores:
    ──────────────
    self                 → R sobre sí mismo
    cyclic(d)            → Z_d con r·m = k(r)·m, donde r = k(r)·1
    product(M1, ..., Mk) → producto directo en orden mixto
    quotient(M, gens)    → M / ⟨gens⟩
    submodule(M, gens)   → ⟨gens⟩ visto como módulo

Decisiones de diseño:
    - La acción es una tabla numpy |R| x |M| (act[r, m] = r·m)
    - Los axiomas de grupo y de acción se comprueban exhaustivamente
    - Producto NK con ideales de presentación canónicos (N:M) y (K:M)
    - Homomorfismos por imágenes de generadores + validación completa
      de aditividad y linealidad (como mucho 3 generadores)

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from descriptores import parse_module_spec
from errores import (
    BudgetExceededError,
    ConsistencyError,
    ConstructionError,
    PreconditionError,
)
from ring_core import (
    FiniteRing,
    Ideal,
    IndexSet,
    _check_cap,
    _check_elements,
    _coset_classes,
    _readonly,
    additive_closure,
    colon_ideal,
    enumerate_ideals,
    ideal_product,
    jacobson_radical,
    sum_of_subgroups,
    verify_group_axioms,
)


# ==============================================================================
# CONFIGURACIÓN
# ==============================================================================

MAX_HOM_GENERATORS = 3
MAX_HOM_CANDIDATES = 20000

logger = logging.getLogger("JModLab.modulos")


# ==============================================================================
# TIPOS
# ==============================================================================

@dataclass(frozen=True, eq=False)
class FiniteModule:
    """Módulo finito sobre `ring`. Igualdad por identidad."""

    ring: FiniteRing
    order: int
    add: np.ndarray
    neg: np.ndarray
    act: np.ndarray
    provenance: str
    label: str
    element_labels: Tuple[str, ...]
    factors: Tuple["FiniteModule", ...] = ()

    def __repr__(self) -> str:
        return f"FiniteModule({self.label} sobre {self.ring.label}, orden={self.order})"

    @property
    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class Submodule(IndexSet):
    """Submódulo de un FiniteModule, dado por sus índices."""

    module: FiniteModule
    members: FrozenSet[int]

    @property
    def universe_order(self) -> int:
        return self.module.order

    def __repr__(self) -> str:
        return "Submodule{" + ",".join(str(a) for a in self.sorted_members) + "}"


@dataclass(frozen=True, eq=False)
class ModuleHom:
    """Homomorfismo de R-módulos, dado por la imagen de cada elemento."""

    source: FiniteModule
    target: FiniteModule
    images: Tuple[int, ...]

    def __call__(self, m: int) -> int:
        return self.images[m]


@dataclass(frozen=True)
class StructureFlags:
    faithful: bool
    multiplication: bool
    reduced: bool
    finitely_generated: bool = True


@dataclass(frozen=True)
class SubmoduleFlags:
    pure: bool
    small: bool


# ==============================================================================
# VALIDACIÓN Y CONSTRUCCIÓN
# ==============================================================================

def verify_module_axioms(R: FiniteRing, add: np.ndarray, act: np.ndarray) -> Optional[str]:
    """
    Comprueba grupo abeliano y los cuatro axiomas de acción.

    Returns:
        None si todo se cumple, o un mensaje con el primer contraejemplo
    """
    message = verify_group_axioms(add)
    if message:
        return message

    n = add.shape[0]
    idx = np.arange(n)
    ridx = np.arange(R.order)

    if act.shape != (R.order, n):
        return f"tabla de acción con forma {act.shape}"
    if act.min() < 0 or act.max() >= n:
        return "tabla de acción con índices fuera de rango"

    # r(m + m') = rm + rm'
    ok = act[:, add] == add[act[:, :, None], act[:, None, :]]
    if not ok.all():
        r, m, m2 = (int(v) for v in np.argwhere(~ok)[0])
        return f"r(m+m') ≠ rm+rm' en r={r}, m={m}, m'={m2}"
    # (r + r')m = rm + r'm
    ok = act[R.add] == add[act[:, None, :], act[None, :, :]]
    if not ok.all():
        r, r2, m = (int(v) for v in np.argwhere(~ok)[0])
        return f"(r+r')m ≠ rm+r'm en r={r}, r'={r2}, m={m}"
    # (rr')m = r(r'm)
    ok = act[R.mul] == act[ridx[:, None, None], act[None, :, :]]
    if not ok.all():
        r, r2, m = (int(v) for v in np.argwhere(~ok)[0])
        return f"(rr')m ≠ r(r'm) en r={r}, r'={r2}, m={m}"
    if not np.array_equal(act[R.one], idx):
        return "1·m ≠ m"
    return None


def build_module(
    R: FiniteRing,
    add: np.ndarray,
    act: np.ndarray,
    provenance: str,
    label: str,
    element_labels: Optional[Sequence[str]] = None,
    factors: Tuple[FiniteModule, ...] = (),
) -> FiniteModule:
    """
    Valida tablas de grupo y acción y devuelve el FiniteModule.

    Raises:
        CapExceededError: orden por encima del límite
        ConstructionError: axioma violado
    """
    add = np.asarray(add)
    act = np.asarray(act)
    n = int(add.shape[0])
    _check_cap(n, f"módulo {label}")

    message = verify_module_axioms(R, add, act)
    if message:
        raise ConstructionError(f"{label} sobre {R.label}: {message}")

    neg = np.argmax(add == 0, axis=1)
    labels = tuple(element_labels) if element_labels else tuple(str(i) for i in range(n))
    logger.debug(f"Módulo validado: {label} sobre {R.label} (orden {n})")
    return FiniteModule(
        ring=R,
        order=n,
        add=_readonly(add),
        neg=_readonly(neg),
        act=_readonly(act),
        provenance=provenance,
        label=label,
        element_labels=labels,
        factors=tuple(factors),
    )


def self_module(R: FiniteRing) -> FiniteModule:
    return build_module(R, R.add, R.mul, "self", "self", R.element_labels)


def _integer_lift(R: FiniteRing) -> Dict[int, int]:
    """k(r) tal que r = k·1, para r en el subanillo primo."""
    lift = {0: 0}
    x = R.one
    k = 1
    while x not in lift:
        lift[x] = k
        x = int(R.add[x, R.one])
        k += 1
    return lift


def cyclic_module(R: FiniteRing, d: int) -> FiniteModule:
    """
    Z_d con la acción de reducción r·m = k(r)·m mod d.

    Raises:
        ConstructionError: si algún r no es múltiplo de 1 o si la acción
        no es compatible (p. ej. d no divide la característica)
    """
    if d < 1:
        raise ConstructionError(f"cyclic({d}): se requiere d >= 1")
    lift = _integer_lift(R)
    missing = [r for r in R.elements if r not in lift]
    if missing:
        raise ConstructionError(
            f"cyclic({d}) sobre {R.label}: acción mal definida, "
            f"{missing[0]} no es múltiplo de 1"
        )
    idx = np.arange(d)
    ks = np.array([lift[r] for r in R.elements])
    act = np.multiply.outer(ks, idx) % d
    return build_module(R, np.add.outer(idx, idx) % d, act, "cyclic", f"cyclic({d})")


def product_module(modules: Sequence[FiniteModule]) -> FiniteModule:
    """Producto directo M1 x ... x Mk (factor izquierdo más significativo)."""
    if len(modules) < 2:
        raise ConstructionError("product: se requieren al menos dos factores")
    R = modules[0].ring
    if any(M.ring is not R for M in modules):
        raise ConstructionError("product: los factores deben compartir anillo")

    shape = tuple(M.order for M in modules)
    n = int(np.prod(shape))
    _check_cap(n, "producto de módulos")
    digits = np.unravel_index(np.arange(n), shape)

    add = np.ravel_multi_index(
        [M.add[d[:, None], d[None, :]] for M, d in zip(modules, digits)], shape
    )
    act = np.ravel_multi_index([M.act[:, d] for M, d in zip(modules, digits)], shape)
    labels = [
        "(" + ",".join(M.element_labels[int(d[i])] for M, d in zip(modules, digits)) + ")"
        for i in range(n)
    ]
    label = "product(" + ",".join(M.label for M in modules) + ")"
    return build_module(R, add, act, "product", label, labels, factors=tuple(modules))


@lru_cache(maxsize=None)
def _quotient_data(M: FiniteModule, L: Submodule) -> Tuple[FiniteModule, Tuple[int, ...]]:
    class_of, reps = _coset_classes(M.add, L.sorted_members)
    reps_arr = np.array(reps)
    add = class_of[M.add[np.ix_(reps_arr, reps_arr)]]
    act = class_of[M.act[:, reps_arr]]
    labels = [f"{M.element_labels[m]}+N" for m in reps]
    label = f"quotient({M.label},{{{','.join(str(x) for x in L.sorted_members)}}})"
    Q = build_module(M.ring, add, act, "quotient", label, labels)
    return Q, tuple(int(c) for c in class_of)


def quotient_module(M: FiniteModule, N: Submodule) -> FiniteModule:
    """M/N con la acción inducida (N propio o impropio)."""
    return _quotient_data(M, N)[0]


@lru_cache(maxsize=None)
def submodule_as_module(N: Submodule) -> FiniteModule:
    """N visto como R-módulo; sus índices son las posiciones en N ordenado."""
    M = N.module
    members = np.array(N.sorted_members)
    position = np.full(M.order, -1, dtype=np.int64)
    position[members] = np.arange(len(members))
    add = position[M.add[np.ix_(members, members)]]
    act = position[M.act[:, members]]
    labels = [M.element_labels[m] for m in N.sorted_members]
    label = f"submodule({M.label},{{{','.join(str(x) for x in N.sorted_members)}}})"
    return build_module(M.ring, add, act, "submodule", label, labels)


def construct_module(R: FiniteRing, spec: Union[str, tuple]) -> FiniteModule:
    """
    Construye un módulo sobre R a partir de un descriptor.

    Raises:
        SpecParseError: descriptor mal formado
        ConstructionError: acción mal definida o axioma violado
    """
    node = parse_module_spec(spec) if isinstance(spec, str) else spec
    kind = node[0]

    if kind == "self":
        return self_module(R)
    if kind == "cyclic":
        return cyclic_module(R, node[1])
    if kind == "product":
        return product_module([construct_module(R, f) for f in node[1]])
    if kind in ("quotient", "submodule"):
        inner = construct_module(R, node[1])
        _check_elements(inner.order, node[2], inner.label)
        N = submodule_generated(inner, node[2])
        if kind == "quotient":
            return quotient_module(inner, N)
        return submodule_as_module(N)
    raise ConstructionError(f"descriptor de módulo desconocido: {kind}")


# ==============================================================================
# SUBMÓDULOS Y RETÍCULO
# ==============================================================================

def zero_submodule(M: FiniteModule) -> Submodule:
    return Submodule(M, frozenset({0}))


def whole_submodule(M: FiniteModule) -> Submodule:
    return Submodule(M, frozenset(range(M.order)))


def make_submodule(M: FiniteModule, members: Iterable[int]) -> Submodule:
    """
    Envuelve un conjunto dado a mano, comprobando que es submódulo.

    Raises:
        ConstructionError: si el conjunto no es cerrado
    """
    ms = frozenset(int(x) for x in members)
    _check_elements(M.order, ms, M.label)
    if 0 not in ms:
        raise ConstructionError("un submódulo debe contener 0")
    arr = np.array(sorted(ms))
    mask = np.zeros(M.order, dtype=bool)
    mask[arr] = True
    if not mask[M.add[np.ix_(arr, arr)]].all() or not mask[M.act[:, arr]].all():
        raise ConstructionError("el conjunto no es un submódulo")
    return Submodule(M, ms)


def submodule_generated(M: FiniteModule, gens: Iterable[int]) -> Submodule:
    """Menor submódulo que contiene `gens`."""
    gens = sorted({int(g) for g in gens})
    _check_elements(M.order, gens, M.label)
    if not gens:
        return zero_submodule(M)
    return Submodule(M, additive_closure(M.add, M.act[:, gens].ravel()))


@lru_cache(maxsize=None)
def cyclic_submodule(M: FiniteModule, m: int) -> Submodule:
    return submodule_generated(M, [m])


@lru_cache(maxsize=None)
def enumerate_submodules(M: FiniteModule) -> Tuple[Submodule, ...]:
    """
    Retículo completo de submódulos (incluye {0} y M).

    Mismo esquema que enumerate_ideals: cierre de los cíclicos ⟨m⟩
    bajo sumas hasta punto fijo.
    """
    cyclic = {cyclic_submodule(M, m).members for m in M.elements}
    lattice = set(cyclic)
    frontier = list(lattice)
    while frontier:
        found = []
        for current in frontier:
            for c in cyclic:
                s = sum_of_subgroups(M.add, current, c)
                if s not in lattice:
                    lattice.add(s)
                    found.append(s)
        frontier = found

    subs = sorted((Submodule(M, s) for s in lattice), key=lambda N: N.sort_key)
    logger.debug(f"{M.label}: {len(subs)} submódulos")
    return tuple(subs)


def proper_submodules(M: FiniteModule) -> Tuple[Submodule, ...]:
    return tuple(N for N in enumerate_submodules(M) if not N.is_whole)


def submodule_sum(N: Submodule, K: Submodule) -> Submodule:
    return Submodule(N.module, sum_of_subgroups(N.module.add, N.members, K.members))


def submodule_intersection(N: Submodule, K: Submodule) -> Submodule:
    return Submodule(N.module, N.members & K.members)


def lattice_ops(N: Submodule, K: Submodule) -> Tuple[Submodule, Submodule]:
    """Devuelve (N + K, N ∩ K)."""
    return submodule_sum(N, K), submodule_intersection(N, K)


def maximal_submodules(M: FiniteModule) -> Tuple[Submodule, ...]:
    proper = proper_submodules(M)
    return tuple(N for N in proper if not any(N < K for K in proper))


# ==============================================================================
# COLON, RESIDUAL Y ACCIÓN DE IDEALES
# ==============================================================================

def colon_of_set(N: Submodule, X: Iterable[int]) -> Ideal:
    """(N :_R X) = {r : rX ⊆ N} para un subconjunto X no vacío de M."""
    M = N.module
    cols = sorted({int(x) for x in X})
    if not cols:
        raise PreconditionError("colon: el conjunto de elementos no puede ser vacío")
    ok = N.mask[M.act[:, cols]].all(axis=1)
    return Ideal(M.ring, frozenset(int(r) for r in np.flatnonzero(ok)))


@lru_cache(maxsize=None)
def colon_into_ring(N: Submodule, M: Optional[FiniteModule] = None) -> Ideal:
    """
    (N : M) = {r : rM ⊆ N}; (0 : M) es Ann(M).

    Raises:
        PreconditionError: si N no es submódulo de M
    """
    if M is not None and N.module is not M:
        raise PreconditionError("colon_into_ring: N no es submódulo de M")
    return colon_of_set(N, N.module.elements)


def annihilator_module(M: FiniteModule) -> Ideal:
    return colon_into_ring(zero_submodule(M))


def colon_into_module(N: Submodule, X: Iterable[int]) -> Submodule:
    """
    Residual (N :_M X) = {m : Xm ⊆ N} para X ⊆ R no vacío.

    Raises:
        PreconditionError: si X es vacío
    """
    M = N.module
    rows = sorted({int(x) for x in X})
    if not rows:
        raise PreconditionError("colon_into_module: X no puede ser vacío")
    ok = N.mask[M.act[rows, :]].all(axis=0)
    return Submodule(M, frozenset(int(m) for m in np.flatnonzero(ok)))


@lru_cache(maxsize=None)
def ideal_action(I: Ideal, N: Union[Submodule, FiniteModule]) -> Submodule:
    """IN: submódulo generado por {a·n : a ∈ I, n ∈ N}."""
    if isinstance(N, FiniteModule):
        M, members = N, list(N.elements)
    else:
        M, members = N.module, list(N.sorted_members)
    products = M.act[np.ix_(I.sorted_members, members)].ravel()
    return Submodule(M, additive_closure(M.add, products))


# ==============================================================================
# CLASIFICACIÓN ESTRUCTURAL
# ==============================================================================

def is_faithful(M: FiniteModule) -> bool:
    return annihilator_module(M).is_zero


def is_multiplication(M: FiniteModule) -> bool:
    """N = (N:M)M para todo submódulo N."""
    return all(
        ideal_action(colon_into_ring(N), M) == N for N in enumerate_submodules(M)
    )


def is_reduced(M: FiniteModule) -> bool:
    """a²m = 0 implica am = 0."""
    R = M.ring
    squares = R.mul[np.arange(R.order), np.arange(R.order)]
    bad = (M.act[squares] == 0) & (M.act != 0)
    return not bad.any()


@lru_cache(maxsize=None)
def structure_flags(M: FiniteModule) -> StructureFlags:
    """Flags {faithful, multiplication, reduced, finitely_generated}."""
    return StructureFlags(
        faithful=is_faithful(M),
        multiplication=is_multiplication(M),
        reduced=is_reduced(M),
    )


def is_pure(N: Submodule) -> bool:
    """IN = N ∩ IM para todo ideal I."""
    M = N.module
    return all(
        ideal_action(I, N) == submodule_intersection(N, ideal_action(I, M))
        for I in enumerate_ideals(M.ring)
    )


def is_small(N: Submodule) -> bool:
    """N + K = M obliga a K = M."""
    return all(
        K.is_whole or not submodule_sum(N, K).is_whole
        for K in enumerate_submodules(N.module)
    )


def submodule_flags(N: Submodule, M: Optional[FiniteModule] = None) -> SubmoduleFlags:
    if M is not None and N.module is not M:
        raise PreconditionError("submodule_flags: N no es submódulo de M")
    return SubmoduleFlags(pure=is_pure(N), small=is_small(N))


def _intersection_of_maximals(M: FiniteModule) -> Submodule:
    members = frozenset(M.elements)
    for K in maximal_submodules(M):
        members &= K.members
    return Submodule(M, members)


def module_jacobson(M: FiniteModule) -> Submodule:
    """
    J(M) como intersección de submódulos maximales.

    Para M = {0} devuelve M y lo registra como caso degenerado. Si M es
    fiel y de multiplicación comprueba además J(M) = J(R)M.

    Raises:
        ConsistencyError: si falla la comprobación J(M) = J(R)M
    """
    if M.order == 1:
        logger.warning(f"⚠ {M.label}: módulo nulo, J(M) degenerado (= M)")
        return whole_submodule(M)

    result = _intersection_of_maximals(M)
    flags = structure_flags(M)
    if flags.faithful and flags.multiplication:
        expected = ideal_action(jacobson_radical(M.ring), M)
        if expected != result:
            raise ConsistencyError(
                f"{M.label}: J(M) = {result} pero J(R)M = {expected}"
            )
    return result


# ==============================================================================
# PRODUCTO DE SUBMÓDULOS
# ==============================================================================

def submodule_product(N: Submodule, K: Submodule) -> Submodule:
    """
    NK = (N:M)(K:M)M en un módulo de multiplicación.

    Raises:
        PreconditionError: si el módulo ambiente no es de multiplicación
    """
    M = N.module
    if not structure_flags(M).multiplication:
        raise PreconditionError(f"{M.label} no es de multiplicación: NK no definido")
    return ideal_action(ideal_product(colon_into_ring(N), colon_into_ring(K)), M)


def element_product(M: FiniteModule, m1: int, m2: int) -> Submodule:
    """m1·m2 = ⟨m1⟩⟨m2⟩."""
    return submodule_product(cyclic_submodule(M, m1), cyclic_submodule(M, m2))


def presentation_ideals(N: Submodule) -> Tuple[Ideal, ...]:
    """Todos los ideales I con IM = N."""
    M = N.module
    return tuple(I for I in enumerate_ideals(M.ring) if ideal_action(I, M) == N)


# ==============================================================================
# DIVISORES DE CERO
# ==============================================================================

def zero_divisors(M: FiniteModule) -> FrozenSet[int]:
    """Z(M) = {r : rm = 0 para algún m ≠ 0}."""
    hit = (M.act[:, 1:] == 0).any(axis=1)
    return frozenset(int(r) for r in np.flatnonzero(hit))


def relative_zero_divisors(N: Submodule) -> FrozenSet[int]:
    """Z_N(M) = {r : rm ∈ N para algún m ∉ N}."""
    M = N.module
    outside = ~N.mask
    hit = (N.mask[M.act] & outside[None, :]).any(axis=1)
    return frozenset(int(r) for r in np.flatnonzero(hit))


def ring_relative_zero_divisors(I: Ideal) -> FrozenSet[int]:
    """Z_I(R) = {r : rs ∈ I para algún s ∉ I}."""
    R = I.ring
    outside = ~I.mask
    hit = (I.mask[R.mul] & outside[None, :]).any(axis=1)
    return frozenset(int(r) for r in np.flatnonzero(hit))


def zero_divisor_sets(
    M: FiniteModule,
    N: Optional[Submodule] = None,
    I: Optional[Ideal] = None,
) -> Dict[str, FrozenSet[int]]:
    """
    Conjuntos de divisores de cero (subconjuntos de R, no ideales).

    Returns:
        Diccionario con "Z(M)" y, si se pasan, "Z_N(M)" y "Z_I(R)"
    """
    result = {"Z(M)": zero_divisors(M)}
    if N is not None:
        result["Z_N(M)"] = relative_zero_divisors(N)
    if I is not None:
        result["Z_I(R)"] = ring_relative_zero_divisors(I)
    return result


# ==============================================================================
# PRODUCTOS DIRECTOS DE SUBMÓDULOS
# ==============================================================================

def _digits(M: FiniteModule) -> Tuple[np.ndarray, ...]:
    shape = tuple(F.order for F in M.factors)
    return np.unravel_index(np.arange(M.order), shape)


def product_submodule(M: FiniteModule, parts: Sequence[Submodule]) -> Submodule:
    """N1 x ... x Nk dentro del módulo producto M."""
    if not M.factors or len(parts) != len(M.factors):
        raise PreconditionError(f"{M.label} no es producto de {len(parts)} factores")
    shape = tuple(F.order for F in M.factors)
    members = itertools.product(*(P.sorted_members for P in parts))
    return Submodule(
        M, frozenset(int(np.ravel_multi_index(c, shape)) for c in members)
    )


def split_submodule(N: Submodule) -> Optional[Tuple[Submodule, ...]]:
    """
    Descompone N como N1 x ... x Nk si es un submódulo producto.

    Returns:
        Tupla de componentes o None si N no es de esa forma
    """
    M = N.module
    if not M.factors:
        return None
    digits = _digits(M)
    members = np.array(N.sorted_members)
    parts = tuple(
        Submodule(F, frozenset(int(x) for x in d[members]))
        for F, d in zip(M.factors, digits)
    )
    if product_submodule(M, parts) != N:
        return None
    return parts


# ==============================================================================
# HOMOMORFISMOS
# ==============================================================================

def generating_set(M: FiniteModule) -> Tuple[int, ...]:
    """Generadores elegidos en orden de índice (cada uno fuera del span previo)."""
    gens: List[int] = []
    span = frozenset({0})
    for m in M.elements:
        if m not in span:
            gens.append(m)
            span = submodule_generated(M, gens).members
    return tuple(gens)


def _coordinates(M: FiniteModule, gens: Sequence[int]) -> np.ndarray:
    """
    Coeficientes (r1, ..., rg) con x = Σ ri·gi para cada elemento x.

    Returns:
        Array |M| x g
    """
    reps: Dict[int, Tuple[int, ...]] = {0: ()}
    for g in gens:
        extended: Dict[int, Tuple[int, ...]] = {}
        for x, coeffs in sorted(reps.items()):
            for r in M.ring.elements:
                y = int(M.add[x, M.act[r, g]])
                if y not in extended:
                    extended[y] = coeffs + (r,)
        reps = extended
    coords = np.zeros((M.order, len(gens)), dtype=np.int64)
    for x, coeffs in reps.items():
        coords[x] = coeffs
    return coords


def _is_linear(M1: FiniteModule, M2: FiniteModule, phi: np.ndarray) -> bool:
    additive = np.array_equal(phi[M1.add], M2.add[phi[:, None], phi[None, :]])
    return additive and np.array_equal(phi[M1.act], M2.act[:, phi])


def make_hom(M1: FiniteModule, M2: FiniteModule, images: Sequence[int]) -> ModuleHom:
    """
    Envuelve una aplicación dada elemento a elemento, comprobando linealidad.

    Raises:
        PreconditionError: anillos distintos
        ConstructionError: la aplicación no es R-lineal
    """
    if M1.ring is not M2.ring:
        raise PreconditionError("hom: los módulos deben compartir anillo")
    phi = np.asarray(images, dtype=np.int64)
    if phi.shape != (M1.order,) or not _is_linear(M1, M2, phi):
        raise ConstructionError("la aplicación no es un homomorfismo de módulos")
    return ModuleHom(M1, M2, tuple(int(y) for y in phi))


def enumerate_homs(M1: FiniteModule, M2: FiniteModule) -> Tuple[ModuleHom, ...]:
    """
    Hom_R(M1, M2) por imágenes de generadores.

    Cada candidato respeta Ann(g) ⊆ Ann(imagen) y se valida con la
    comprobación completa de aditividad y linealidad.

    Raises:
        PreconditionError: anillos distintos
        BudgetExceededError: más de 3 generadores o demasiados candidatos
    """
    if M1.ring is not M2.ring:
        raise PreconditionError("hom: los módulos deben compartir anillo")

    gens = generating_set(M1)
    if len(gens) > MAX_HOM_GENERATORS:
        raise BudgetExceededError(
            f"{M1.label}: {len(gens)} generadores (máximo {MAX_HOM_GENERATORS})"
        )

    candidates = []
    for g in gens:
        killers = M1.act[:, g] == 0
        ok = (M2.act[killers, :] == 0).all(axis=0)
        candidates.append([int(y) for y in np.flatnonzero(ok)])
    total = int(np.prod([len(c) for c in candidates])) if candidates else 1
    if total > MAX_HOM_CANDIDATES:
        raise BudgetExceededError(
            f"Hom({M1.label}, {M2.label}): {total} candidatos "
            f"(máximo {MAX_HOM_CANDIDATES})"
        )

    coords = _coordinates(M1, gens)
    homs = []
    for choice in itertools.product(*candidates):
        phi = np.zeros(M1.order, dtype=np.int64)
        for i, y in enumerate(choice):
            phi = M2.add[phi, M2.act[coords[:, i], y]]
        if _is_linear(M1, M2, phi):
            homs.append(ModuleHom(M1, M2, tuple(int(v) for v in phi)))
    logger.debug(f"Hom({M1.label}, {M2.label}): {len(homs)} de {total} candidatos")
    return tuple(homs)


def identity_hom(M: FiniteModule) -> ModuleHom:
    return ModuleHom(M, M, tuple(M.elements))


def projection_hom(M: FiniteModule, L: Submodule) -> ModuleHom:
    """Proyección canónica M → M/L."""
    Q, class_of = _quotient_data(M, L)
    return ModuleHom(M, Q, class_of)


def inclusion_hom(N: Submodule) -> ModuleHom:
    """Inclusión N → M, con N visto como módulo."""
    return ModuleHom(submodule_as_module(N), N.module, N.sorted_members)


def hom_image(phi: ModuleHom, N: Submodule) -> Submodule:
    return Submodule(phi.target, frozenset(phi.images[n] for n in N.members))


def hom_kernel(phi: ModuleHom) -> Submodule:
    return Submodule(
        phi.source, frozenset(m for m, y in enumerate(phi.images) if y == 0)
    )


def hom_preimage(phi: ModuleHom, K: Submodule) -> Submodule:
    return Submodule(
        phi.source, frozenset(m for m, y in enumerate(phi.images) if y in K.members)
    )


def is_injective(phi: ModuleHom) -> bool:
    return len(set(phi.images)) == phi.source.order


def is_surjective(phi: ModuleHom) -> bool:
    return len(set(phi.images)) == phi.target.order


def clear_caches() -> None:
    """Vacía las cachés indexadas por módulo o submódulo."""
    for cached in (
        _quotient_data, submodule_as_module, cyclic_submodule,
        enumerate_submodules, colon_into_ring, ideal_action, structure_flags,
    ):
        cached.cache_clear()
