# -*- coding: utf-8 -*-
"""Tests del núcleo de módulos: retículo, colon, clasificación y homomorfismos."""

import pytest

from errores import BudgetExceededError, ConstructionError, PreconditionError
from module_core import (
    colon_into_module,
    colon_into_ring,
    construct_module,
    cyclic_module,
    cyclic_submodule,
    element_product,
    enumerate_homs,
    enumerate_submodules,
    hom_image,
    hom_kernel,
    hom_preimage,
    ideal_action,
    identity_hom,
    inclusion_hom,
    is_injective,
    is_pure,
    is_reduced,
    is_small,
    is_surjective,
    lattice_ops,
    make_hom,
    make_submodule,
    module_jacobson,
    presentation_ideals,
    product_module,
    product_submodule,
    projection_hom,
    self_module,
    split_submodule,
    structure_flags,
    submodule_flags,
    submodule_generated,
    submodule_product,
    zero_divisor_sets,
    zero_divisors,
    zero_submodule,
)
from ring_core import ideal_generated, product_ring, zn


def members(structure):
    return set(structure.members)


# ==============================================================================
# CONSTRUCCIÓN
# ==============================================================================

def test_cyclic_module_action(z12_over_z6):
    M = z12_over_z6
    assert M.order == 6
    assert int(M.act[5, 5]) == 1
    assert int(M.act[6, 1]) == 0


def test_cyclic_module_requires_divisor_of_characteristic(z12):
    with pytest.raises(ConstructionError):
        cyclic_module(z12, 5)


def test_cyclic_module_requires_ring_generated_by_one():
    R = product_ring([zn(2), zn(2)])
    with pytest.raises(ConstructionError):
        cyclic_module(R, 2)


def test_product_module_rejects_foreign_factors(z12):
    with pytest.raises(ConstructionError):
        product_module([cyclic_module(z12, 4), cyclic_module(zn(12), 3)])


def test_construct_module_from_descriptor(z12):
    assert construct_module(z12, "quotient(self, [4])").order == 4
    assert construct_module(z12, "product(Z4, Z3)").order == 12
    assert construct_module(zn(8), "submodule(self, [2])").order == 4


# ==============================================================================
# RETÍCULO
# ==============================================================================

def test_lattice_sizes(z12_self, z12_over_z6, z12_over_z4_z3):
    assert len(enumerate_submodules(z12_self)) == 6
    assert len(enumerate_submodules(z12_over_z6)) == 4
    assert len(enumerate_submodules(z12_over_z4_z3)) == 6


def test_lattice_ops(z12_self):
    total, meet = lattice_ops(cyclic_submodule(z12_self, 4), cyclic_submodule(z12_self, 6))
    assert members(total) == set(range(0, 12, 2))
    assert members(meet) == {0}


def test_make_submodule_rejects_non_closed(z12_self):
    with pytest.raises(ConstructionError):
        make_submodule(z12_self, [0, 2])
    assert members(make_submodule(z12_self, [0, 4, 8])) == {0, 4, 8}


def test_product_submodule_indices(z12_over_z4_z3):
    M = z12_over_z4_z3
    left, right = M.factors
    N = product_submodule(M, [cyclic_submodule(left, 2), zero_submodule(right)])
    assert members(N) == {0, 6}
    parts = split_submodule(N)
    assert parts is not None
    assert members(parts[0]) == {0, 2}
    assert members(parts[1]) == {0}


def test_diagonal_does_not_split():
    R = zn(2)
    M = product_module([cyclic_module(R, 2), cyclic_module(R, 2)])
    diagonal = submodule_generated(M, [3])
    assert members(diagonal) == {0, 3}
    assert split_submodule(diagonal) is None


# ==============================================================================
# COLON Y ACCIÓN
# ==============================================================================

def test_colon_into_ring(z12_over_z6):
    assert members(colon_into_ring(zero_submodule(z12_over_z6))) == {0, 6}


def test_colon_into_module(z12_self):
    four = cyclic_submodule(z12_self, 4)
    assert members(colon_into_module(four, [2])) == set(range(0, 12, 2))
    with pytest.raises(PreconditionError):
        colon_into_module(four, [])


def test_ideal_action_and_presentations(z12, z12_over_z6):
    two = ideal_generated(z12, [2])
    N = ideal_action(two, z12_over_z6)
    assert members(N) == {0, 2, 4}
    assert [len(I) for I in presentation_ideals(N)] == [3, 6]


def test_submodule_product(z12_self):
    two = cyclic_submodule(z12_self, 2)
    three = cyclic_submodule(z12_self, 3)
    assert members(submodule_product(two, three)) == {0, 6}


def test_element_product(z12_self):
    assert members(element_product(z12_self, 2, 3)) == {0, 6}
    assert element_product(z12_self, 1, 4) == cyclic_submodule(z12_self, 4)


def test_submodule_product_requires_multiplication_module():
    R = zn(2)
    M = product_module([cyclic_module(R, 2), cyclic_module(R, 2)])
    assert not structure_flags(M).multiplication
    N = cyclic_submodule(M, 1)
    with pytest.raises(PreconditionError):
        submodule_product(N, N)


# ==============================================================================
# CLASIFICACIÓN
# ==============================================================================

def test_structure_flags(z12_self, z12_over_z6, z12_over_z4_z3):
    flags = structure_flags(z12_self)
    assert flags.faithful and flags.multiplication and not flags.reduced
    assert not structure_flags(z12_over_z6).faithful
    assert structure_flags(z12_over_z4_z3).faithful


def test_reduced_modules():
    assert is_reduced(self_module(zn(6)))
    assert not is_reduced(self_module(zn(12)))


def test_pure_and_small(z12_self):
    assert is_small(cyclic_submodule(z12_self, 6))
    assert not is_small(cyclic_submodule(z12_self, 2))
    assert is_pure(zero_submodule(z12_self))
    assert not is_pure(cyclic_submodule(z12_self, 2))


def test_submodule_flags(z12_self, z12_over_z6):
    flags = submodule_flags(cyclic_submodule(z12_self, 6), z12_self)
    assert flags.small and not flags.pure
    with pytest.raises(PreconditionError):
        submodule_flags(cyclic_submodule(z12_self, 6), z12_over_z6)


def test_module_jacobson(z12_self, z12_over_z6, z8_self):
    assert members(module_jacobson(z12_self)) == {0, 6}
    assert members(module_jacobson(z12_over_z6)) == {0}
    assert members(module_jacobson(z8_self)) == {0, 2, 4, 6}


def test_zero_divisors(z12_self):
    assert zero_divisors(z12_self) == {0, 2, 3, 4, 6, 8, 9, 10}


def test_zero_divisor_sets(z12, z12_self):
    four = cyclic_submodule(z12_self, 4)
    sets = zero_divisor_sets(z12_self, four, ideal_generated(z12, [4]))
    assert sets["Z(M)"] == zero_divisors(z12_self)
    assert sets["Z_N(M)"] == set(range(0, 12, 2))
    assert sets["Z_I(R)"] == sets["Z_N(M)"]
    assert list(zero_divisor_sets(z12_self)) == ["Z(M)"]


# ==============================================================================
# HOMOMORFISMOS
# ==============================================================================

def test_endomorphisms_of_z12(z12_self):
    homs = enumerate_homs(z12_self, z12_self)
    assert len(homs) == 12
    assert sum(is_injective(phi) for phi in homs) == 4


def test_hom_budget():
    R = zn(2)
    M = product_module([cyclic_module(R, 2) for _ in range(4)])
    with pytest.raises(BudgetExceededError):
        enumerate_homs(M, M)


def test_make_hom_rejects_non_linear_map():
    M = self_module(zn(4))
    with pytest.raises(ConstructionError):
        make_hom(M, M, [0, 1, 0, 1])
    assert make_hom(M, M, [0, 2, 0, 2]).images == (0, 2, 0, 2)


def test_identity_hom(z12_over_z6):
    phi = identity_hom(z12_over_z6)
    assert is_injective(phi) and is_surjective(phi)
    assert members(hom_kernel(phi)) == {0}


def test_projection_and_inclusion(z12_self):
    four = cyclic_submodule(z12_self, 4)
    pi = projection_hom(z12_self, four)
    assert pi.target.order == 4
    assert is_surjective(pi) and not is_injective(pi)
    assert hom_kernel(pi) == four
    assert hom_preimage(pi, zero_submodule(pi.target)) == four

    iota = inclusion_hom(four)
    assert is_injective(iota) and not is_surjective(iota)
    assert members(hom_image(iota, enumerate_submodules(iota.source)[-1])) == {0, 4, 8}
