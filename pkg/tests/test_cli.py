# -*- coding: utf-8 -*-
"""Tests de la línea de comandos: códigos de salida, salida JSON e informes."""

import json

import pytest

import jmodlab
from ring_core import get_max_order

SMALL_CORPUS = {
    "_metadata": {"nombre": "corpus_pruebas", "max_orden_anillo": 16, "max_orden_modulo": 16},
    "instancias": [
        {"nombre": "Z4", "anillo": "zn(4)"},
        {"nombre": "Z6", "anillo": "zn(6)", "subconjuntos": {"S": [1, 3]}},
        {"nombre": "Z12 sobre Z6", "anillo": "zn(12)", "modulo": "cyclic(6)",
         "submodulos": {"cero": []}},
        {"nombre": "Z2 x Z2", "anillo": "product(zn(2),zn(2))"},
    ],
}


@pytest.fixture(autouse=True)
def _logs_in_tmp(tmp_path, monkeypatch):
    monkeypatch.setattr(jmodlab, "LOG_DIR", tmp_path / "logs")


@pytest.fixture
def corpus_file(tmp_path):
    path = tmp_path / "corpus_pruebas.json"
    path.write_text(json.dumps(SMALL_CORPUS, ensure_ascii=False), encoding="utf-8")
    return path


def last_json(capsys):
    out = capsys.readouterr().out.strip().splitlines()
    return json.loads(out[-1])


# ==============================================================================
# ARGUMENTOS
# ==============================================================================

def test_usage_errors():
    assert jmodlab.main([]) == 2
    assert jmodlab.main(["inspect"]) == 2
    assert jmodlab.main(["--help"]) == 0
    assert jmodlab.main(["hunt", "V1", "--jobs", "0"]) == 2


# ==============================================================================
# INSPECT Y CHECK
# ==============================================================================

def test_inspect_ring_and_module(capsys):
    assert jmodlab.main(["inspect", "zn(12)", "--module", "cyclic(6)", "--json"]) == 0
    record = last_json(capsys)
    assert record["orden"] == 12
    assert record["ideales"] == 6
    assert record["unidades"] == 4
    assert record["jacobson"] == [0, 6]
    assert record["local"] is False
    assert record["modulo"]["orden"] == 6
    assert record["modulo"]["umbral"] == [0, 6]
    assert record["modulo"]["fiel"] is False


def test_inspect_bad_descriptor():
    assert jmodlab.main(["inspect", "zn("]) == 2
    assert jmodlab.main(["inspect", "zn(1)"]) == 2


def test_check_j_submodule_fails_with_witness(capsys):
    code = jmodlab.main(["check", "j-submodule", "zn(12)", "--module", "cyclic(6)", "--json"])
    assert code == 1
    record = last_json(capsys)
    assert record["cumple"] is False
    assert record["N"] == [0]
    assert record["testigo"] == [2, 3]


def test_check_weakly_j_submodule_holds():
    assert jmodlab.main(["check", "weakly-j-submodule", "zn(12)", "--module", "cyclic(6)"]) == 0


def test_check_ideal_predicates(capsys):
    assert jmodlab.main(["check", "j-ideal", "zn(12)", "--json"]) == 1
    assert last_json(capsys)["testigo"] == [2, 6]
    assert jmodlab.main(["check", "weakly-j-ideal", "zn(12)"]) == 0


def test_check_presimplifiable():
    assert jmodlab.main(["check", "j-presimplifiable", "zn(8)"]) == 0
    assert jmodlab.main(["check", "j-presimplifiable", "zn(12)"]) == 1


def test_check_input_errors():
    assert jmodlab.main(["check", "semi-j", "zn(12)"]) == 2
    assert jmodlab.main(["check", "prime", "zn(12)", "--gens", "1"]) == 2


# ==============================================================================
# VERIFY
# ==============================================================================

def test_verify_writes_reports(corpus_file, tmp_path):
    out = tmp_path / "informes" / "informe.json"
    code = jmodlab.main([
        "verify", "--corpus", str(corpus_file), "--props", "DEF_IMPL,THM_EQ1,LEM_L2,V1",
        "--out", str(out), "--informe",
    ])
    assert code == 0

    report = json.loads(out.read_text(encoding="utf-8"))
    assert list(report) == [
        "herramienta", "version", "corpus", "propiedades", "registros", "resumen", "errores",
    ]
    assert report["corpus"]["nombre"] == "corpus_pruebas"
    assert [p["id"] for p in report["propiedades"]] == ["DEF_IMPL", "LEM_L2", "THM_EQ1", "V1"]
    assert len(report["registros"]) == 4 * len(SMALL_CORPUS["instancias"])
    assert report["resumen"]["violadas_registradas"] == 0
    assert report["resumen"]["violadas"] >= 1
    assert all("segundos" not in r for r in report["registros"])

    assert (out.parent / jmodlab.SUMMARY_NAME).read_text(encoding="utf-8-sig").startswith("propiedad,")
    assert (out.parent / jmodlab.INFORME_NAME).exists()


def test_verify_is_byte_identical_across_jobs(corpus_file, tmp_path):
    first = tmp_path / "a" / "informe.json"
    second = tmp_path / "b" / "informe.json"
    args = ["verify", "--corpus", str(corpus_file), "--props", "DEF_IMPL,PROP_INT,V1"]
    assert jmodlab.main(args + ["--out", str(first)]) == 0
    assert jmodlab.main(args + ["--out", str(second), "--jobs", "2"]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_verify_timings(corpus_file, tmp_path):
    out = tmp_path / "informe.json"
    args = ["verify", "--corpus", str(corpus_file), "--props", "LEM_L2", "--timings"]
    assert jmodlab.main(args + ["--out", str(out)]) == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert all("segundos" in r for r in report["registros"])


def test_verify_input_errors(tmp_path, corpus_file):
    broken = tmp_path / "roto.json"
    broken.write_text("{ no es json", encoding="utf-8")
    out = str(tmp_path / "informe.json")
    assert jmodlab.main(["verify", "--corpus", str(broken), "--out", out]) == 2
    assert jmodlab.main(["verify", "--corpus", str(tmp_path / "falta.json"), "--out", out]) == 2
    assert jmodlab.main(["verify", "--corpus", str(corpus_file), "--props", "NOPE", "--out", out]) == 2


def test_verify_reports_cap_errors(corpus_file, tmp_path):
    out = tmp_path / "informe.json"
    code = jmodlab.main([
        "verify", "--corpus", str(corpus_file), "--props", "LEM_L2",
        "--max-order", "8", "--out", str(out),
    ])
    assert code == 1
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["resumen"]["errores"] == 1
    assert report["errores"][0]["nombre"] == "Z12 sobre Z6"
    assert report["errores"][0]["propiedad"] == "*"


def test_max_order_only_raises_construction_limit(monkeypatch, corpus_file):
    monkeypatch.setenv("JMODLAB_MAX_ORDER", "64")
    hunt = ["hunt", "V1", "--corpus", str(corpus_file), "--max-order"]
    jmodlab.main(hunt + ["8"])
    assert get_max_order() == 64
    jmodlab.main(hunt + ["128"])
    assert get_max_order() == 128


# ==============================================================================
# HUNT
# ==============================================================================

def test_hunt_finds_witness(corpus_file, capsys):
    assert jmodlab.main(["hunt", "V1", "--corpus", str(corpus_file), "--json"]) == 0
    record = last_json(capsys)
    assert record["variante"] == "V1"
    names = [w["nombre"] for w in record["testigos"]]
    assert "Z12 sobre Z6" in names
    assert names[0] == "Z2 x Z2"


def test_hunt_without_witness():
    corpus = str(jmodlab.CORPUS_DIR / "corpus_cuerpos.json")
    assert jmodlab.main(["hunt", "V1", "--corpus", corpus]) == 1


def test_hunt_unknown_variant(corpus_file):
    assert jmodlab.main(["hunt", "V99", "--corpus", str(corpus_file)]) == 2
