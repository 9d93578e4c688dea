# -*- coding: utf-8 -*-
"""Tests del arnés: estados, testigos, aislamiento de errores y búsqueda de contraejemplos."""

import pytest

from contexto import Instance, InstanceCaps, resolve_instance
from errores import PreconditionError
from registro_propiedades import PROPERTIES
from theorem_harness import (
    VACUOUS,
    VERIFIED,
    VIOLATED,
    check_property,
    get_statement,
    hunt_counterexample,
    revalidate,
    revalidate_report,
    run_corpus,
)
from variantes import VARIANTS


def by_name(corpus, name):
    return next(inst for inst in corpus.instances if inst.name == name)


def small_instances(corpus, limit=16):
    for inst in corpus.instances:
        ctx = resolve_instance(inst)
        if ctx.R.order <= limit and ctx.M.order <= limit:
            yield inst


# ==============================================================================
# REGISTRO
# ==============================================================================

def test_registry_ids():
    assert len(PROPERTIES) == 30
    assert sorted(VARIANTS) == ["V1", "V2", "V3", "V4", "V5", "V6", "V7"]
    assert all(v.variant and v.weakens in PROPERTIES for v in VARIANTS.values())
    assert not any(p.variant for p in PROPERTIES.values())


def test_variants_share_only_public_registry_helpers():
    import variantes

    shared = [
        name for name, value in vars(variantes).items()
        if getattr(value, "__module__", None) == "registro_propiedades"
    ]
    assert "members_of" in shared
    assert not [name for name in shared if name.startswith("_")]


def test_unknown_statement():
    with pytest.raises(PreconditionError):
        get_statement("THM_NOPE")
    with pytest.raises(PreconditionError):
        hunt_counterexample("DEF_IMPL", [])


# ==============================================================================
# UNA PROPIEDAD, UNA INSTANCIA
# ==============================================================================

def test_characterization_on_z12():
    report = check_property(get_statement("THM_EQ1"), Instance.from_specs("Z12", "zn(12)"))
    assert report.status == VERIFIED
    assert report.cases_scanned == 6
    assert report.hypothesis_count == 5
    assert report.conclusion_checks == report.hypothesis_count
    assert report.witness is None


def test_weakly_j_ideals_lie_in_jacobson():
    report = check_property(get_statement("LEM_L2"), Instance.from_specs("Z8", "zn(8)"))
    assert report.status == VERIFIED
    assert report.hypothesis_count == 3


def test_global_hypothesis_not_met():
    inst = Instance.from_specs("Z12 sobre Z6", "zn(12)", "cyclic(6)")
    report = check_property(get_statement("PROP_IM"), inst)
    assert report.status == VACUOUS
    assert report.cases_scanned == 0
    assert "la instancia no cumple las hipótesis globales" in report.notes


def test_variant_witness_carries_pair(standard_corpus):
    inst = by_name(standard_corpus, "Z12 sobre Z6")
    report = check_property(VARIANTS["V1"], inst)
    assert report.status == VIOLATED
    assert report.witness["N"] == [0]
    assert report.witness["detalle"]["par"] == [2, 3]
    assert report.to_record()["testigo"] == report.witness
    assert "segundos" not in report.to_record()
    assert "segundos" in report.to_record(timings=True)


def test_revalidation_rejects_tampered_witness(standard_corpus):
    inst = by_name(standard_corpus, "Z12 sobre Z6")
    ctx = resolve_instance(inst)
    report = check_property(VARIANTS["V1"], ctx)
    assert revalidate(VARIANTS["V1"], ctx, report.witness)
    assert revalidate_report(report, standard_corpus.by_id)

    tampered = dict(report.witness, detalle=dict(report.witness["detalle"], par=[1, 3]))
    assert not revalidate(VARIANTS["V1"], ctx, tampered)
    assert not revalidate(VARIANTS["V1"], ctx, {"N": [0, 2, 4]})


# ==============================================================================
# CORPUS
# ==============================================================================

def test_empty_corpus():
    result = run_corpus([], ["THM_EQ1"])
    assert result.reports == [] and result.errors == []
    assert result.summary()["registros"] == 0
    assert result.ok


def test_failed_instance_is_isolated():
    big = Instance.from_specs("Z36", "zn(36)")
    small = Instance.from_specs("Z4", "zn(4)")
    result = run_corpus([big, small], ["DEF_IMPL"], caps=InstanceCaps(12, 12))
    assert [r.instance_name for r in result.reports] == ["Z4"]
    assert len(result.errors) == 1
    assert result.errors[0]["propiedad"] == "*"
    assert "CapExceededError" in result.errors[0]["error"]
    assert not result.ok


def test_registered_properties_hold_on_standard_corpus(standard_corpus):
    result = run_corpus(standard_corpus.instances, sorted(PROPERTIES))
    summary = result.summary()
    assert summary["errores"] == 0, result.errors
    assert summary["violadas_registradas"] == 0, [
        (r.property_id, r.instance_name, r.witness) for r in result.reports if r.status == VIOLATED
    ]
    assert summary["sin_instancia_no_vacua"] == []
    assert result.ok

    eq1 = [r for r in result.reports if r.property_id == "THM_EQ1"]
    assert all(r.status == VERIFIED for r in eq1)
    assert sum(r.hypothesis_count for r in eq1) >= 500


def test_parallel_run_is_deterministic(standard_corpus):
    instances = list(small_instances(standard_corpus, limit=9))
    props = ["DEF_IMPL", "THM_EQ1", "LEM_L2", "V1"]
    serial = run_corpus(instances, props, jobs=1)
    parallel = run_corpus(instances, props, jobs=2)
    assert [r.to_record() for r in serial.reports] == [r.to_record() for r in parallel.reports]
    assert serial.summary() == parallel.summary()


def test_summary_counts_variants_apart(standard_corpus):
    inst = by_name(standard_corpus, "Z12 sobre Z6")
    result = run_corpus([inst], ["DEF_IMPL", "V1"])
    summary = result.summary()
    assert summary["violadas"] == 1
    assert summary["violadas_registradas"] == 0
    assert result.ok


# ==============================================================================
# BÚSQUEDA DE CONTRAEJEMPLOS
# ==============================================================================

def test_hunt_v1(standard_corpus):
    found = hunt_counterexample("V1", standard_corpus.instances)
    assert found
    keys = [(w["tamano"], w["instancia"], w["caso"]) for w in found]
    assert keys == sorted(keys)
    z12_z6 = next(w for w in found if w["nombre"] == "Z12 sobre Z6")
    assert z12_z6["testigo"]["detalle"]["par"] == [2, 3]


def test_hunt_v2(standard_corpus):
    found = hunt_counterexample("V2", standard_corpus.instances)
    first = next(w["testigo"] for w in found if w["nombre"] == "Z12 sobre Z4 x Z3")
    assert first["N1"] == [0, 2]
    assert first["N2"] == [0]


def test_hunt_v3(standard_corpus):
    found = hunt_counterexample("V3", standard_corpus.instances)
    z6 = next(w for w in found if w["nombre"] == "Z6")
    assert z6["testigo"]["N"] == [0, 3]


def test_hunt_on_fields_and_local_rings(fields_corpus, local_corpus):
    assert hunt_counterexample("V1", fields_corpus.instances) == []
    assert hunt_counterexample("V2", local_corpus.instances) == []


def count_violations(prop, ctx):
    if not prop.applies(ctx):
        return 0
    return sum(
        1 for a in prop.cases(ctx)
        if prop.hypothesis(ctx, a) and not prop.conclusion(ctx, a)
    )


@pytest.mark.parametrize("variant_id", sorted(VARIANTS))
def test_hunt_lists_every_violating_case(standard_corpus, variant_id):
    instances = list(small_instances(standard_corpus, limit=12))
    prop = VARIANTS[variant_id]
    expected = sum(count_violations(prop, resolve_instance(inst)) for inst in instances)
    assert len(hunt_counterexample(variant_id, instances)) == expected


def test_hunt_v5_collects_all_pairs_of_one_instance(standard_corpus):
    inst = by_name(standard_corpus, "Z9 sobre Z9 x Z3")
    found = hunt_counterexample("V5", [inst])
    assert len(found) == 15
    assert len(found) == count_violations(VARIANTS["V5"], resolve_instance(inst))
    cases = [w["caso"] for w in found]
    assert cases == sorted(set(cases))
    ctx = resolve_instance(inst)
    assert all(revalidate(VARIANTS["V5"], ctx, w["testigo"]) for w in found)


def test_hunt_first_witness_matches_check_property(standard_corpus):
    inst = by_name(standard_corpus, "Z9 sobre Z9 x Z3")
    report = check_property(VARIANTS["V5"], inst)
    assert report.status == VIOLATED
    assert hunt_counterexample("V5", [inst])[0]["testigo"] == report.witness


def test_parallel_hunt_is_deterministic(standard_corpus):
    instances = list(small_instances(standard_corpus, limit=9))
    assert hunt_counterexample("V3", instances, jobs=2) == hunt_counterexample("V3", instances)
