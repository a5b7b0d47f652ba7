from __future__ import annotations

import pytest

from qlogic import gen_boolean, gen_mo
from qlogic.modelfile import parse_model_text, realize_model
from qlogic.repro import fixture_text


@pytest.fixture(scope="session")
def mo2():
    return gen_mo(2)


@pytest.fixture(scope="session")
def mo3():
    return gen_mo(3)


@pytest.fixture(scope="session")
def boolean3():
    return gen_boolean(3)


@pytest.fixture(scope="session")
def example21():
    """The packaged six-element model with one conditional state, one s-map
    and two observables, fully realized."""
    return realize_model(parse_model_text(fixture_text("2.1")))


@pytest.fixture(scope="session")
def example22_corrected():
    return realize_model(parse_model_text(fixture_text("2.2-corrected")))
