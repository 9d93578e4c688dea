# -*- coding: utf-8 -*-
"""Tests del contexto de instancia: J(M) delegado al núcleo y vaciado de cachés."""

import pytest

import module_core
from contexto import RESOLVED_INSTANCES, Instance, clear_caches, resolve_instance
from errores import ConsistencyError
from module_core import enumerate_submodules
from ring_core import enumerate_ideals, jacobson_radical, zero_ideal


# ==============================================================================
# RADICAL DE JACOBSON DEL MÓDULO
# ==============================================================================

@pytest.mark.parametrize("name", ["Z12 sobre Z4 x Z3", "Z9 sobre Z9 x Z3", "Z8 sobre 2Z8"])
def test_module_jacobson_matches_kernel(standard_corpus, name):
    inst = next(i for i in standard_corpus.instances if i.name == name)
    ctx = resolve_instance(inst)
    assert ctx.module_jacobson.members == module_core.module_jacobson(ctx.M).members


def test_module_jacobson_runs_consistency_check(monkeypatch):
    ctx = resolve_instance(Instance.from_specs("Z8 con radical alterado", "zn(8)"))
    monkeypatch.setattr(module_core, "jacobson_radical", zero_ideal)
    with pytest.raises(ConsistencyError):
        ctx.module_jacobson


# ==============================================================================
# CACHÉS
# ==============================================================================

def test_resolved_instances_are_bounded():
    assert resolve_instance.cache_info().maxsize == RESOLVED_INSTANCES


def test_clear_caches_empties_every_layer():
    ctx = resolve_instance(Instance.from_specs("Z12 para cachés", "zn(12)"))
    enumerate_submodules(ctx.M)
    jacobson_radical(ctx.R)
    assert resolve_instance.cache_info().currsize > 0

    clear_caches()

    for cached in (resolve_instance, enumerate_submodules, enumerate_ideals, jacobson_radical):
        assert cached.cache_info().currsize == 0


def test_contexts_are_rebuilt_after_clearing():
    inst = Instance.from_specs("Z6 reconstruido", "zn(6)")
    before = resolve_instance(inst)
    clear_caches()
    after = resolve_instance(inst)
    assert after is not before
    assert len(after.proper) == len(before.proper)
