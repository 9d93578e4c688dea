# -*- coding: utf-8 -*-
"""
Tests de los predicados: valores conocidos, testigos y acuerdo exacto
con los oráculos ingenuos sobre el corpus.
"""

import pytest

from contexto import resolve_instance
from errores import PreconditionError
from module_core import cyclic_module, cyclic_submodule, enumerate_submodules, product_module, self_module, zero_submodule
from oraculos import (
    naive_classical,
    naive_ideal_variants,
    naive_j,
    naive_jacobson,
    naive_presimplifiable,
    naive_submodules,
    naive_weakly_j,
)
from predicates import (
    CLASSICAL_KINDS,
    SUBMODULE_PREDICATES,
    characterization_conditions,
    check_classical,
    check_ideal_variants,
    check_j_presimplifiable,
    check_j_submodule,
    check_maximal_weakly_j,
    check_weakly_j_submodule,
    ideal_as_submodule,
    is_maximal_weakly_j,
    j_submodules,
    jacobson_threshold,
    weakly_j_submodules,
    witness_is_valid,
)
from ring_core import enumerate_ideals, jacobson_radical, zero_ideal, zn

ORACLE_ORDER = 12


def prime_divisors(n):
    return {p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))}


def small_contexts(corpus):
    for inst in corpus.instances:
        ctx = resolve_instance(inst)
        if ctx.R.order <= ORACLE_ORDER and ctx.M.order <= ORACLE_ORDER:
            yield ctx


# ==============================================================================
# VALORES CONOCIDOS
# ==============================================================================

def test_zero_in_z12_over_z6(z12_over_z6):
    N = zero_submodule(z12_over_z6)
    assert set(jacobson_threshold(z12_over_z6).members) == {0, 6}

    strong = check_j_submodule(N)
    assert not strong.holds
    assert strong.witness == (2, 3)
    assert strong.checks == 2 * 6 + 3 + 1

    weak = check_weakly_j_submodule(N)
    assert weak.holds and weak.vacuous


def test_nonzero_submodule_of_z12_is_not_weakly_j(z12_self):
    verdict = check_weakly_j_submodule(cyclic_submodule(z12_self, 2))
    assert not verdict.holds
    assert verdict.witness == (2, 1)


def test_local_ring_every_proper_submodule_is_j(z8_self):
    proper = [N for N in enumerate_submodules(z8_self) if not N.is_whole]
    assert len(proper) == 3
    assert weakly_j_submodules(z8_self) == j_submodules(z8_self) == {N.members for N in proper}


@pytest.mark.parametrize("n", range(2, 17))
def test_classification_by_support(n):
    M = self_module(zn(n))
    proper = {N.members for N in enumerate_submodules(M) if not N.is_whole}
    if len(prime_divisors(n)) == 1:
        assert weakly_j_submodules(M) == proper
        assert j_submodules(M) == proper
    else:
        assert weakly_j_submodules(M) == {frozenset({0})}
        assert j_submodules(M) == frozenset()


def test_whole_module_is_rejected(z12_self):
    with pytest.raises(PreconditionError):
        check_weakly_j_submodule(enumerate_submodules(z12_self)[-1])


def test_zero_ideal_of_z12(z12):
    variants = check_ideal_variants(zero_ideal(z12))
    assert variants["weakly_j_ideal"].holds
    assert not variants["j_ideal"].holds
    assert variants["j_ideal"].witness == (2, 6)


def test_classical_predicates(z12_self, z8_self):
    assert check_classical(cyclic_submodule(z12_self, 2), kind="prime").holds
    assert check_classical(zero_submodule(z12_self), kind="weakly_prime").holds
    assert not check_classical(zero_submodule(z12_self), kind="prime").holds

    four = cyclic_submodule(z8_self, 4)
    assert check_classical(four, kind="primary").holds
    verdict = check_classical(four, kind="prime")
    assert not verdict.holds
    assert verdict.witness == (2, 2)

    with pytest.raises(PreconditionError):
        check_classical(four, kind="semiprime")


def test_presimplifiable(z8_self, z12_self):
    assert check_j_presimplifiable(z8_self).holds
    verdict = check_j_presimplifiable(z12_self)
    assert not verdict.holds
    assert verdict.witness == (2, 6)


def test_maximal_weakly_j(z8_self, z12_self):
    verdict = check_maximal_weakly_j(cyclic_submodule(z8_self, 4))
    assert not verdict.holds
    assert verdict.witness == (0, 2, 4, 6)
    assert is_maximal_weakly_j(cyclic_submodule(z8_self, 2))
    assert is_maximal_weakly_j(zero_submodule(z12_self))
    with pytest.raises(PreconditionError):
        check_maximal_weakly_j(cyclic_submodule(z12_self, 2))


# ==============================================================================
# CARACTERIZACIÓN Y TESTIGOS
# ==============================================================================

@pytest.mark.parametrize("builder", [
    lambda: self_module(zn(12)),
    lambda: self_module(zn(8)),
    lambda: cyclic_module(zn(12), 6),
    lambda: product_module([cyclic_module(zn(2), 2), cyclic_module(zn(2), 2)]),
])
def test_characterization_conditions_agree(builder):
    M = builder()
    for N in enumerate_submodules(M):
        if N.is_whole:
            continue
        conditions = characterization_conditions(N)
        assert len(set(conditions.values())) == 1, (N, conditions)


def test_witnesses_revalidate(standard_corpus):
    for ctx in small_contexts(standard_corpus):
        for N in ctx.proper:
            for name in ("weakly-j-submodule", "j-submodule", "prime", "primary", "n-submodule"):
                verdict = SUBMODULE_PREDICATES[name](N)
                if not verdict.holds:
                    assert witness_is_valid(name, N, verdict.witness), (ctx.instance.name, name)
        for I in ctx.proper_ideals:
            N = ideal_as_submodule(I)
            for name in ("j-ideal", "weakly-j-ideal"):
                verdict = SUBMODULE_PREDICATES[name](N)
                if not verdict.holds:
                    assert witness_is_valid(name, N, verdict.witness)


def test_witness_is_valid_rejects_non_witness(z12_over_z6):
    N = zero_submodule(z12_over_z6)
    assert witness_is_valid("j-submodule", N, (2, 3))
    assert not witness_is_valid("j-submodule", N, (1, 3))
    assert not witness_is_valid("weakly-j-submodule", N, (2, 3))


# ==============================================================================
# ACUERDO CON LOS ORÁCULOS
# ==============================================================================

def test_lattices_match_oracle(standard_corpus):
    for ctx in small_contexts(standard_corpus):
        assert {N.members for N in ctx.submodules} == set(naive_submodules(ctx.M))
        assert set(jacobson_radical(ctx.R).members) == naive_jacobson(ctx.R)


def test_j_predicates_match_oracle(standard_corpus):
    for ctx in small_contexts(standard_corpus):
        name = ctx.instance.name
        for N in ctx.proper:
            assert check_weakly_j_submodule(N).holds == naive_weakly_j(ctx.M, N.members), name
            assert check_j_submodule(N).holds == naive_j(ctx.M, N.members), name
        assert check_j_presimplifiable(ctx.M).holds == naive_presimplifiable(ctx.M), name


def test_classical_predicates_match_oracle(standard_corpus):
    for ctx in small_contexts(standard_corpus):
        for N in ctx.proper:
            for kind in CLASSICAL_KINDS:
                expected = naive_classical(ctx.M, N.members, kind)
                assert check_classical(N, kind=kind).holds == expected, (ctx.instance.name, kind)


def test_ideal_predicates_match_oracle(standard_corpus):
    for ctx in small_contexts(standard_corpus):
        for I in enumerate_ideals(ctx.R):
            if I.is_whole:
                continue
            verdicts = check_ideal_variants(I)
            expected = naive_ideal_variants(ctx.R, I.members)
            assert {k: v.holds for k, v in verdicts.items()} == expected, ctx.instance.name
