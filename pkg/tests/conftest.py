# -*- coding: utf-8 -*-
"""
Configuración común de pytest para JModLab.

Los directorios numerados no son paquetes importables: igual que los
scripts del proyecto, se insertan en sys.path.
"""

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parent.parent
SCRIPTS_DIR = PROJECT_ROOT / "2.SCRIPTS"
CORPUS_DIR = PROJECT_ROOT / "1.CORPUS"

for _dir in (SCRIPTS_DIR, SCRIPTS_DIR / "verificacion", SCRIPTS_DIR / "algebra"):
    if str(_dir) not in sys.path:
        sys.path.insert(0, str(_dir))

from corpus import load_corpus  # noqa: E402
from module_core import cyclic_module, product_module, self_module  # noqa: E402
from ring_core import zn  # noqa: E402


@pytest.fixture(autouse=True)
def _default_max_order(monkeypatch):
    """Ningún test depende del .env local."""
    monkeypatch.delenv("JMODLAB_MAX_ORDER", raising=False)


@pytest.fixture
def z12():
    return zn(12)


@pytest.fixture
def z12_self(z12):
    return self_module(z12)


@pytest.fixture
def z12_over_z6(z12):
    return cyclic_module(z12, 6)


@pytest.fixture
def z8_self():
    return self_module(zn(8))


@pytest.fixture
def z12_over_z4_z3(z12):
    return product_module([cyclic_module(z12, 4), cyclic_module(z12, 3)])


@pytest.fixture(scope="session")
def standard_corpus():
    return load_corpus(CORPUS_DIR / "corpus_estandar.json")


@pytest.fixture(scope="session")
def fields_corpus():
    return load_corpus(CORPUS_DIR / "corpus_cuerpos.json")


@pytest.fixture(scope="session")
def local_corpus():
    return load_corpus(CORPUS_DIR / "corpus_locales.json")
