# -*- coding: utf-8 -*-
"""
Leyes algebraicas con Hypothesis.

Cada test elige un anillo (o módulo) de una lista fija y sortea ideales
o submódulos de su retículo; las leyes deben cumplirse siempre:

1. Adjunción del colon: IJ ⊆ K  ⟺  I ⊆ (K : J)
2. Radical: I ⊆ √I, √√I = √I, √(I ∩ K) = √I ∩ √K
3. Retículo modular de ideales y de submódulos
4. (N : M)M ⊆ N y Ann(M) ⊆ (J(R)M : M)
5. J ⇒ weakly J, prime ⇒ weakly prime
"""

from functools import lru_cache

from hypothesis import HealthCheck, given, settings, strategies as st

from module_core import (
    colon_into_ring,
    construct_module,
    enumerate_homs,
    enumerate_submodules,
    hom_kernel,
    hom_preimage,
    ideal_action,
    annihilator_module,
    submodule_intersection,
    submodule_sum,
)
from predicates import check_classical, check_j_submodule, check_weakly_j_submodule, jacobson_threshold
from ring_core import (
    colon_ideal,
    enumerate_ideals,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    jacobson_radical,
    radical_of_ideal,
    zn,
)

RING_ORDERS = [4, 6, 8, 9, 12, 16, 18]
MODULE_CASES = [
    (12, "self"),
    (12, "cyclic(6)"),
    (12, "product(Z4, Z3)"),
    (8, "product(Z4, Z2)"),
    (4, "product(Z2, Z2)"),
    (18, "cyclic(6)"),
]

LAWS = settings(
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)


@lru_cache(maxsize=None)
def ring(n):
    return zn(n)


@lru_cache(maxsize=None)
def module(case):
    n, spec = case
    return construct_module(ring(n), spec)


def draw_ideals(data, k):
    R = ring(data.draw(st.sampled_from(RING_ORDERS), label="n"))
    lattice = enumerate_ideals(R)
    return R, [data.draw(st.sampled_from(lattice)) for _ in range(k)]


def draw_submodules(data, k):
    M = module(data.draw(st.sampled_from(MODULE_CASES), label="modulo"))
    lattice = enumerate_submodules(M)
    return M, [data.draw(st.sampled_from(lattice)) for _ in range(k)]


# ==============================================================================
# IDEALES
# ==============================================================================

@LAWS
@given(st.data())
def test_colon_adjunction(data):
    R, (I, J, K) = draw_ideals(data, 3)
    assert (ideal_product(I, J) <= K) == (I <= colon_ideal(R, K, J.members))


@LAWS
@given(st.data())
def test_radical_laws(data):
    R, (I, K) = draw_ideals(data, 2)
    rad = radical_of_ideal(R, I)
    assert I <= rad
    assert radical_of_ideal(R, rad) == rad
    assert radical_of_ideal(R, ideal_intersection(I, K)) == ideal_intersection(
        rad, radical_of_ideal(R, K)
    )


@LAWS
@given(st.data())
def test_ideal_lattice_is_modular(data):
    R, (I, K, L) = draw_ideals(data, 3)
    lattice = set(enumerate_ideals(R))
    assert ideal_sum(I, K) in lattice and ideal_intersection(I, K) in lattice
    if I <= K:
        assert ideal_sum(I, ideal_intersection(L, K)) == ideal_intersection(ideal_sum(I, L), K)


@LAWS
@given(st.data())
def test_product_inside_intersection(data):
    R, (I, K) = draw_ideals(data, 2)
    assert ideal_product(I, K) <= ideal_intersection(I, K)


# ==============================================================================
# SUBMÓDULOS
# ==============================================================================

@LAWS
@given(st.data())
def test_submodule_lattice_is_modular(data):
    M, (N, K, L) = draw_submodules(data, 3)
    lattice = set(enumerate_submodules(M))
    assert submodule_sum(N, K) in lattice and submodule_intersection(N, K) in lattice
    if N <= K:
        assert submodule_sum(N, submodule_intersection(L, K)) == submodule_intersection(
            submodule_sum(N, L), K
        )


@LAWS
@given(st.data())
def test_colon_action_inequality(data):
    M, (N,) = draw_submodules(data, 1)
    assert ideal_action(colon_into_ring(N), M) <= N


@LAWS
@given(st.data())
def test_threshold_contains_radical_and_annihilator(data):
    M = module(data.draw(st.sampled_from(MODULE_CASES)))
    threshold = jacobson_threshold(M)
    assert jacobson_radical(M.ring) <= threshold
    assert annihilator_module(M) <= threshold


@LAWS
@given(st.data())
def test_predicate_implications(data):
    M, (N,) = draw_submodules(data, 1)
    if N.is_whole:
        return
    if check_j_submodule(N).holds:
        assert check_weakly_j_submodule(N).holds
    if check_classical(N, kind="prime").holds:
        assert check_classical(N, kind="weakly_prime").holds


@LAWS
@given(st.data())
def test_kernels_and_preimages_are_submodules(data):
    M, (K,) = draw_submodules(data, 1)
    homs = enumerate_homs(M, M)
    phi = data.draw(st.sampled_from(homs))
    lattice = set(enumerate_submodules(M))
    assert hom_kernel(phi) in lattice
    assert hom_preimage(phi, K) in lattice
