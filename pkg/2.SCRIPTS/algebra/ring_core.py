# -*- coding: utf-8 -*-
"""
==============================================================================
JMODLAB - LABORATORIO DE J-SUBMÓDULOS
Núcleo 1: Anillos conmutativos finitos e ideales
==============================================================================

Descripción:
    Construcción y aritmética de anillos conmutativos finitos con unidad y
    todos los cálculos a nivel de ideal: retículo de ideales, radical de
    Jacobson, radical de un ideal, cociente (colon) y anulador.

    Codificación de elementos:
    ──────────────────────────
    - Índices canónicos 0..n-1, con 0 = neutro aditivo
    - zn(n): el índice es el residuo
    - product(R1, ..., Rk): orden mixto, factor izquierdo más significativo
    - quotient(R, I): clases ordenadas por su representante mínimo

Decisiones de diseño:
    - Tablas de suma y producto como arrays numpy (n x n) de solo lectura
    - Los axiomas de anillo se comprueban exhaustivamente al construir
      (vectorizado con numpy, cúbico en n)
    - El anillo nulo (1 = 0) se rechaza
    - Ideales como frozenset de índices; orden canónico (tamaño, miembros)
    - Retículo de ideales por cierre de ideales cíclicos bajo sumas hasta
      punto fijo (no se recorren los 2^n subconjuntos)
    - J(R) se calcula por intersección de maximales y por el criterio de
      unidades; si discrepan se lanza ConsistencyError
    - Límite de orden configurable con JMODLAB_MAX_ORDER (.env)

Uso:
    R = construct_ring("zn(12)")
    jacobson_radical(R).sorted_members  # → (0, 6)

Autor: Joan
Fecha: 2026
Proyecto: JModLab
"""

import logging
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import FrozenSet, Iterable, Optional, Sequence, Tuple, Union

import numpy as np
from dotenv import load_dotenv

from descriptores import parse_ring_spec
from errores import (
    CapExceededError,
    ConsistencyError,
    ConstructionError,
    PreconditionError,
)


# ==============================================================================
# CONFIGURACIÓN
# ==============================================================================

load_dotenv()

DEFAULT_MAX_ORDER = 64

logger = logging.getLogger("JModLab.anillos")


def get_max_order() -> int:
    """
    Límite de orden para anillos y módulos construidos.

    Se lee en cada llamada para que la CLI (y los tests) puedan
    modificarlo vía variable de entorno sin reimportar.

    Returns:
        int: valor de JMODLAB_MAX_ORDER o 64 por defecto
    """
    raw = os.getenv("JMODLAB_MAX_ORDER")
    if not raw:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"⚠ JMODLAB_MAX_ORDER inválido ('{raw}'), se usa {DEFAULT_MAX_ORDER}")
        return DEFAULT_MAX_ORDER


def _check_cap(order: int, what: str) -> None:
    cap = get_max_order()
    if order > cap:
        raise CapExceededError(f"{what} de orden {order} supera el límite {cap}")


# ==============================================================================
# TIPOS
# ==============================================================================

@dataclass(frozen=True, eq=False)
class FiniteRing:
    """
    Anillo conmutativo finito con unidad.

    La igualdad es por identidad: dos construcciones distintas son
    anillos distintos aunque sus tablas coincidan.
    """

    order: int
    one: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    provenance: str
    label: str
    element_labels: Tuple[str, ...]

    def __repr__(self) -> str:
        return f"FiniteRing({self.label}, orden={self.order})"

    @property
    def elements(self) -> range:
        return range(self.order)

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    @cached_property
    def unit_mask(self) -> np.ndarray:
        mask = (self.mul == self.one).any(axis=1)
        mask.setflags(write=False)
        return mask


class IndexSet:
    """
    Comportamiento común de Ideal y Submodule: conjunto de índices
    canónicos dentro de una estructura de orden `universe_order`.
    """

    members: FrozenSet[int]

    @property
    def universe_order(self) -> int:
        raise NotImplementedError

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.sorted_members)

    def __le__(self, other: "IndexSet") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "IndexSet") -> bool:
        return self.members < other.members

    @cached_property
    def sorted_members(self) -> Tuple[int, ...]:
        return tuple(sorted(self.members))

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.universe_order, dtype=bool)
        mask[list(self.members)] = True
        mask.setflags(write=False)
        return mask

    @property
    def is_zero(self) -> bool:
        return self.members == frozenset({0})

    @property
    def is_whole(self) -> bool:
        return len(self.members) == self.universe_order

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self.members), self.sorted_members)


@dataclass(frozen=True)
class Ideal(IndexSet):
    """Ideal de un FiniteRing, dado por sus índices."""

    ring: FiniteRing
    members: FrozenSet[int]

    @property
    def universe_order(self) -> int:
        return self.ring.order

    def __repr__(self) -> str:
        return "Ideal{" + ",".join(str(a) for a in self.sorted_members) + "}"


# ==============================================================================
# VALIDACIÓN DE AXIOMAS
# ==============================================================================

def _first_failure(ok: np.ndarray) -> Tuple[int, ...]:
    return tuple(int(v) for v in np.argwhere(~ok)[0])


def verify_group_axioms(add: np.ndarray) -> Optional[str]:
    """
    Comprueba que `add` define un grupo abeliano con neutro 0.

    Returns:
        None si todo se cumple, o un mensaje con el primer contraejemplo
    """
    n = add.shape[0]
    idx = np.arange(n)

    if add.shape != (n, n):
        return f"tabla de suma con forma {add.shape}"
    if add.min() < 0 or add.max() >= n:
        return "tabla de suma con índices fuera de rango"
    if not np.array_equal(add[0], idx):
        return "0 no es neutro aditivo"
    ok = add == add.T
    if not ok.all():
        return f"suma no conmutativa en {_first_failure(ok)}"
    ok = (add == 0).any(axis=1)
    if not ok.all():
        return f"sin opuesto aditivo para {_first_failure(ok)[0]}"
    left = add[add[:, :, None], idx[None, None, :]]
    right = add[idx[:, None, None], add[None, :, :]]
    ok = left == right
    if not ok.all():
        return f"suma no asociativa en {_first_failure(ok)}"
    return None


def verify_ring_axioms(add: np.ndarray, mul: np.ndarray, one: int) -> Optional[str]:
    """
    Comprueba exhaustivamente los axiomas de anillo conmutativo unitario.

    Args:
        add: tabla de suma (n x n)
        mul: tabla de producto (n x n)
        one: índice del neutro multiplicativo

    Returns:
        None si todo se cumple, o un mensaje con el primer contraejemplo
    """
    message = verify_group_axioms(add)
    if message:
        return message

    n = add.shape[0]
    idx = np.arange(n)

    if mul.shape != (n, n):
        return f"tabla de producto con forma {mul.shape}"
    if mul.min() < 0 or mul.max() >= n:
        return "tabla de producto con índices fuera de rango"
    if not 0 <= one < n or not np.array_equal(mul[one], idx):
        return f"{one} no es neutro multiplicativo"
    ok = mul == mul.T
    if not ok.all():
        return f"producto no conmutativo en {_first_failure(ok)}"
    left = mul[mul[:, :, None], idx[None, None, :]]
    right = mul[idx[:, None, None], mul[None, :, :]]
    ok = left == right
    if not ok.all():
        return f"producto no asociativo en {_first_failure(ok)}"
    # a(b + c) = ab + ac
    left = mul[idx[:, None, None], add[None, :, :]]
    right = add[mul[:, :, None], mul[:, None, :]]
    ok = left == right
    if not ok.all():
        return f"no distributivo en {_first_failure(ok)}"
    return None


def _readonly(table: np.ndarray) -> np.ndarray:
    table = np.array(table, dtype=np.int64)
    table.setflags(write=False)
    return table


def build_ring(
    add: np.ndarray,
    mul: np.ndarray,
    one: int,
    provenance: str,
    label: str,
    element_labels: Optional[Sequence[str]] = None,
) -> FiniteRing:
    """
    Valida unas tablas y devuelve el FiniteRing correspondiente.

    Raises:
        CapExceededError: orden por encima de JMODLAB_MAX_ORDER
        ConstructionError: anillo nulo o axioma violado
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    n = int(add.shape[0])
    _check_cap(n, f"anillo {label}")
    if n < 2 or one == 0:
        raise ConstructionError(f"{label}: el anillo nulo (1 = 0) no está permitido")

    message = verify_ring_axioms(add, mul, one)
    if message:
        raise ConstructionError(f"{label}: {message}")

    neg = np.argmax(add == 0, axis=1)
    labels = tuple(element_labels) if element_labels else tuple(str(i) for i in range(n))

    logger.debug(f"Anillo validado: {label} (orden {n})")
    return FiniteRing(
        order=n,
        one=int(one),
        add=_readonly(add),
        mul=_readonly(mul),
        neg=_readonly(neg),
        provenance=provenance,
        label=label,
        element_labels=labels,
    )


# ==============================================================================
# CONSTRUCTORES
# ==============================================================================

def zn(n: int) -> FiniteRing:
    """Anillo Z_n con residuos como índices."""
    if n < 2:
        raise ConstructionError(f"zn({n}): se requiere n >= 2")
    idx = np.arange(n)
    return build_ring(
        np.add.outer(idx, idx) % n,
        np.multiply.outer(idx, idx) % n,
        one=1,
        provenance="zn",
        label=f"zn({n})",
    )


def product_ring(rings: Sequence[FiniteRing]) -> FiniteRing:
    """
    Producto directo R1 x ... x Rk en orden mixto.

    El índice de (x1, ..., xk) es ravel_multi_index con el primer
    factor como dígito más significativo.
    """
    if len(rings) < 2:
        raise ConstructionError("product: se requieren al menos dos factores")

    shape = tuple(R.order for R in rings)
    n = int(np.prod(shape))
    _check_cap(n, "producto de anillos")
    digits = np.unravel_index(np.arange(n), shape)

    add = np.ravel_multi_index(
        [R.add[d[:, None], d[None, :]] for R, d in zip(rings, digits)], shape
    )
    mul = np.ravel_multi_index(
        [R.mul[d[:, None], d[None, :]] for R, d in zip(rings, digits)], shape
    )
    one = int(np.ravel_multi_index([R.one for R in rings], shape))
    labels = [
        "(" + ",".join(R.element_labels[int(d[i])] for R, d in zip(rings, digits)) + ")"
        for i in range(n)
    ]
    label = "product(" + ",".join(R.label for R in rings) + ")"
    return build_ring(add, mul, one, "product", label, labels)


def quotient_ring(R: FiniteRing, ideal: Ideal) -> FiniteRing:
    """
    Anillo cociente R/I; cada clase se representa por su índice mínimo.

    Raises:
        ConstructionError: si I = R
    """
    if ideal.is_whole:
        raise ConstructionError(f"quotient: cociente de {R.label} por el anillo entero")

    class_of, reps = _coset_classes(R.add, ideal.sorted_members)
    reps_arr = np.array(reps)
    add = class_of[R.add[np.ix_(reps_arr, reps_arr)]]
    mul = class_of[R.mul[np.ix_(reps_arr, reps_arr)]]
    gens = ",".join(str(a) for a in _minimal_generators(R, ideal))
    labels = [f"{R.element_labels[r]}+I" for r in reps]
    return build_ring(
        add, mul, int(class_of[R.one]), "quotient",
        f"quotient({R.label},[{gens}])", labels,
    )


def _coset_classes(add: np.ndarray, subgroup: Sequence[int]) -> Tuple[np.ndarray, list]:
    """
    Clases laterales de un subgrupo aditivo.

    Returns:
        (class_of, reps): class_of[x] es el índice de la clase de x;
        reps[c] es el representante mínimo de la clase c
    """
    n = add.shape[0]
    class_of = np.full(n, -1, dtype=np.int64)
    reps = []
    sub = np.array(subgroup)
    for x in range(n):
        if class_of[x] >= 0:
            continue
        class_of[add[x, sub]] = len(reps)
        reps.append(x)
    return class_of, reps


def construct_ring(spec: Union[str, tuple]) -> FiniteRing:
    """
    Construye un anillo a partir de un descriptor (texto o árbol).

    Idealización y localización se delegan en constructions, que se
    importa aquí para no crear un ciclo de imports.

    Raises:
        SpecParseError: descriptor mal formado
        ConstructionError: parámetros inválidos
    """
    node = parse_ring_spec(spec) if isinstance(spec, str) else spec
    kind = node[0]

    if kind == "zn":
        return zn(node[1])
    if kind == "product":
        return product_ring([construct_ring(f) for f in node[1]])
    if kind == "quotient":
        base = construct_ring(node[1])
        _check_elements(base.order, node[2], base.label)
        return quotient_ring(base, ideal_generated(base, node[2]))
    if kind in ("idealization", "localization"):
        from constructions import ring_from_node
        return ring_from_node(node)
    raise ConstructionError(f"descriptor de anillo desconocido: {kind}")


def _check_elements(order: int, elements: Iterable[int], label: str) -> None:
    for x in elements:
        if not 0 <= int(x) < order:
            raise ConstructionError(f"{label}: el índice {x} no es un elemento")


# ==============================================================================
# IDEALES
# ==============================================================================

def additive_closure(add: np.ndarray, seeds: Iterable[int]) -> FrozenSet[int]:
    """Subgrupo aditivo generado por `seeds` (recorrido en anchura desde 0)."""
    gens = sorted({int(g) for g in seeds} - {0})
    result = {0}
    frontier = [0]
    while frontier:
        a = frontier.pop()
        for g in gens:
            s = int(add[a, g])
            if s not in result:
                result.add(s)
                frontier.append(s)
    return frozenset(result)


def sum_of_subgroups(add: np.ndarray, a: Iterable[int], b: Iterable[int]) -> FrozenSet[int]:
    """A + B como conjunto de sumas (ya es un subgrupo)."""
    a_idx = np.fromiter(a, dtype=np.int64)
    b_idx = np.fromiter(b, dtype=np.int64)
    return frozenset(int(x) for x in np.unique(add[np.ix_(a_idx, b_idx)]))


def make_ideal(R: FiniteRing, members: Iterable[int]) -> Ideal:
    """
    Envuelve un conjunto dado a mano, comprobando que es un ideal.

    Raises:
        ConstructionError: si el conjunto no es cerrado
    """
    ms = frozenset(int(x) for x in members)
    _check_elements(R.order, ms, R.label)
    if 0 not in ms:
        raise ConstructionError("un ideal debe contener 0")
    arr = np.array(sorted(ms))
    mask = np.zeros(R.order, dtype=bool)
    mask[arr] = True
    if not mask[R.add[np.ix_(arr, arr)]].all():
        raise ConstructionError("el conjunto no es cerrado para la suma")
    if not mask[R.mul[:, arr]].all():
        raise ConstructionError("el conjunto no es cerrado para el producto por R")
    return Ideal(R, ms)


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, frozenset({0}))


def whole_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, frozenset(range(R.order)))


def ideal_generated(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    """
    Menor ideal que contiene `gens`: subgrupo aditivo generado por
    todos los productos r·g.
    """
    gens = sorted({int(g) for g in gens})
    _check_elements(R.order, gens, R.label)
    if not gens:
        return zero_ideal(R)
    products = R.mul[:, gens].ravel()
    return Ideal(R, additive_closure(R.add, products))


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, sum_of_subgroups(I.ring.add, I.members, J.members))


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, I.members & J.members)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    """IJ: ideal generado por los productos ab con a ∈ I, b ∈ J."""
    R = I.ring
    products = R.mul[np.ix_(I.sorted_members, J.sorted_members)].ravel()
    return Ideal(R, additive_closure(R.add, products))


@lru_cache(maxsize=None)
def enumerate_ideals(R: FiniteRing) -> Tuple[Ideal, ...]:
    """
    Retículo completo de ideales.

    Parte de los ideales cíclicos ⟨a⟩ y suma ideales cíclicos a cada
    ideal conocido hasta que no aparece ninguno nuevo.

    Returns:
        Tupla de ideales en orden canónico (tamaño, miembros)
    """
    cyclic = {ideal_generated(R, [a]).members for a in R.elements}
    lattice = set(cyclic)
    frontier = list(lattice)
    while frontier:
        found = []
        for current in frontier:
            for c in cyclic:
                s = sum_of_subgroups(R.add, current, c)
                if s not in lattice:
                    lattice.add(s)
                    found.append(s)
        frontier = found

    ideals = sorted((Ideal(R, m) for m in lattice), key=lambda I: I.sort_key)
    logger.debug(f"{R.label}: {len(ideals)} ideales")
    return tuple(ideals)


def maximal_ideals(R: FiniteRing) -> Tuple[Ideal, ...]:
    proper = [I for I in enumerate_ideals(R) if not I.is_whole]
    return tuple(I for I in proper if not any(I < K for K in proper))


def units(R: FiniteRing) -> FrozenSet[int]:
    return frozenset(int(a) for a in np.flatnonzero(R.unit_mask))


def is_local(R: FiniteRing) -> bool:
    return len(maximal_ideals(R)) == 1


def jacobson_by_maximals(R: FiniteRing) -> Ideal:
    members = frozenset(R.elements)
    for m in maximal_ideals(R):
        members &= m.members
    return Ideal(R, members)


def jacobson_by_units(R: FiniteRing) -> Ideal:
    """r ∈ J(R) si 1 - rs es unidad para todo s."""
    one_minus = R.add[R.one, R.neg[R.mul]]
    in_j = R.unit_mask[one_minus].all(axis=1)
    return Ideal(R, frozenset(int(a) for a in np.flatnonzero(in_j)))


@lru_cache(maxsize=None)
def jacobson_radical(R: FiniteRing) -> Ideal:
    """
    Radical de Jacobson, calculado por dos vías que deben coincidir.

    Raises:
        ConsistencyError: si intersección de maximales y criterio de
        unidades discrepan
    """
    by_maximals = jacobson_by_maximals(R)
    by_units = jacobson_by_units(R)
    if by_maximals != by_units:
        raise ConsistencyError(
            f"{R.label}: J(R) por maximales {by_maximals} "
            f"≠ por unidades {by_units}"
        )
    return by_maximals


def radical_of_ideal(R: FiniteRing, I: Ideal) -> Ideal:
    """√I = {a : a^k ∈ I para algún 1 <= k <= |R|}."""
    idx = np.arange(R.order)
    power = idx.copy()
    found = I.mask[power].copy()
    for _ in range(R.order - 1):
        power = R.mul[power, idx]
        found |= I.mask[power]
    return Ideal(R, frozenset(int(a) for a in np.flatnonzero(found)))


def nilradical(R: FiniteRing) -> Ideal:
    return radical_of_ideal(R, zero_ideal(R))


def colon_ideal(R: FiniteRing, I: Ideal, J: Iterable[int]) -> Ideal:
    """
    (I : J) = {r : rJ ⊆ I} para un subconjunto J no vacío de R.

    Raises:
        PreconditionError: si J es vacío
    """
    cols = sorted({int(x) for x in J})
    if not cols:
        raise PreconditionError("colon_ideal: el conjunto J no puede ser vacío")
    ok = I.mask[R.mul[:, cols]].all(axis=1)
    return Ideal(R, frozenset(int(a) for a in np.flatnonzero(ok)))


def annihilator(R: FiniteRing, X: Iterable[int]) -> Ideal:
    return colon_ideal(R, zero_ideal(R), X)


def is_multiplication_ideal(I: Ideal) -> bool:
    """
    I como R-módulo es de multiplicación: todo ideal K ⊆ I cumple
    K = (K : I) I.
    """
    R = I.ring
    for K in enumerate_ideals(R):
        if K <= I and ideal_product(colon_ideal(R, K, I.members), I) != K:
            return False
    return True


def is_faithful_multiplication_ideal(I: Ideal) -> bool:
    return annihilator(I.ring, I.members).is_zero and is_multiplication_ideal(I)


def _minimal_generators(R: FiniteRing, I: Ideal) -> Tuple[int, ...]:
    """Generadores elegidos en orden de índice (para etiquetas legibles)."""
    gens = []
    span = frozenset({0})
    for a in I.sorted_members:
        if a not in span:
            gens.append(a)
            span = ideal_generated(R, gens).members
    return tuple(gens)


def format_ideal(I: Ideal) -> str:
    """Representación corta: {0,6}."""
    return "{" + ",".join(str(a) for a in I.sorted_members) + "}"


def clear_caches() -> None:
    """Vacía las cachés indexadas por anillo."""
    enumerate_ideals.cache_clear()
    jacobson_radical.cache_clear()
