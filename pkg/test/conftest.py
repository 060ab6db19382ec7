# conftest.py - shared fixtures for the folcone tests

import os
import sys

import pytest

TEST_DIR = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.path.join(TEST_DIR, 'data')
GOLDEN_DIR = os.path.join(DATA_DIR, 'golden')

# folconetool.py lives at the repository root
sys.path.insert(0, os.path.dirname(TEST_DIR))

import folcone  # noqa: E402
from folcone import fake  # noqa: E402


def data_path(name):
    "Path of a fixture document"
    return os.path.join(DATA_DIR, name)


def golden(name):
    "Text of a golden file"
    with open(os.path.join(GOLDEN_DIR, name), encoding='utf-8') as f:
        return f.read()


def pinned(name, text):
    """Golden text for values that are only known once computed: the
    first run writes the file, later runs return what it holds."""
    path = os.path.join(GOLDEN_DIR, name)
    if not os.path.exists(path):
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
    return golden(name)


@pytest.fixture(autouse=True)
def fresh_opts():
    "Every test starts from the default tunables."
    saved = dict(folcone.opts)
    yield folcone.opts
    folcone.opts.clear()
    folcone.opts.update(saved)


@pytest.fixture
def gm():
    return fake.gm_system()


@pytest.fixture
def gm_negated(gm):
    return fake.negated_system(gm)


@pytest.fixture
def selfloop():
    return fake.self_loop_system(2)


@pytest.fixture
def product():
    return fake.product_system(2)


@pytest.fixture
def gordan():
    return fake.gordan_system()


@pytest.fixture
def cycle3():
    return fake.cycle_system(3)


@pytest.fixture
def gm_report(gm):
    return folcone.foliation_cone(gm)
