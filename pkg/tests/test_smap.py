"""S-map validation and the two conversions."""

from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlogic import (
    classical_smap,
    conditional_from_smap,
    gen_boolean,
    gen_mo,
    random_smap,
    random_state,
    smap_from_conditional,
    validate_conditional_state,
    validate_smap,
    validate_state,
)
from qlogic.errors import (
    DegenerateDiagonal,
    DomainTooSmall,
    MissingTableEntry,
    S1Violation,
    S2Violation,
    S3Violation,
    ValueOutOfRange,
)
from qlogic.states import conditional_system_generated


def test_fixture_smap(example21):
    p = example21.smaps["p"]
    assert p("a", "b") == F(3, 25)
    assert p("b", "a") == F(2, 25)
    assert p("a", "b") != p("b", "a")  # simultaneous measurement, ordered
    nu = p.diagonal_state()
    assert nu("a") == F(2, 5) and nu("b'") == F(7, 10)


def test_diagonal_majorizes_rows(example21):
    p = example21.smaps["p"]
    nu = p.diagonal_state()
    for a in p.logic.names:
        for b in p.logic.names:
            assert p(a, b) <= nu(b)
            assert p(a, b) <= nu(a)  # p(a,b) <= p(a, 1) = nu(a)


def _tamper(p, a, b, value):
    values = dict(p.values)
    values[a, b] = F(value)
    return values


def test_s1_violation(example21):
    p = example21.smaps["p"]
    with pytest.raises(S1Violation) as exc:
        validate_smap(p.logic, _tamper(p, "1", "1", "99/100"))
    assert exc.value.value == F(99, 100)


def test_s2_violation(example21):
    p = example21.smaps["p"]
    with pytest.raises(S2Violation) as exc:
        validate_smap(p.logic, _tamper(p, "a", "a'", "1/100"))
    assert (exc.value.a, exc.value.b) == ("a", "a'")


def test_s3_violation_names_all_three_elements(example21):
    p = example21.smaps["p"]
    with pytest.raises(S3Violation) as exc:
        validate_smap(p.logic, _tamper(p, "b", "a", "1/10"))
    witness = {exc.value.a, exc.value.b, exc.value.c}
    assert "b" in witness or "a" in witness
    assert exc.value.lhs != exc.value.rhs


def test_smap_range_and_totality(example21):
    p = example21.smaps["p"]
    with pytest.raises(ValueOutOfRange):
        validate_smap(p.logic, _tamper(p, "a", "b", "-1/50"))
    short = dict(p.values)
    del short["a", "b"]
    with pytest.raises(MissingTableEntry):
        validate_smap(p.logic, short)


# -- conversions --------------------------------------------------------------


def test_conditional_to_smap_matches_fixture(example21):
    f = example21.conds["f"]
    p = example21.smaps["p"]
    assert smap_from_conditional(f).values == p.values


def test_smap_to_conditional_matches_fixture(example21):
    f = example21.conds["f"]
    p = example21.smaps["p"]
    back = conditional_from_smap(p)
    assert back.cs == f.cs
    assert back.values == f.values


def test_recovered_conditional_is_column_renormalization(example21):
    p = example21.smaps["p"]
    f = conditional_from_smap(p)
    nu = p.diagonal_state()
    for b in f.cs.sorted_members():
        for a in p.logic.names:
            assert f(a, b) == p(a, b) / nu(b)


def test_conversion_needs_total_conditioning(mo2, example21):
    f = example21.conds["f"]
    sub_cs = conditional_system_generated(mo2, {"a"})
    sub_values = {(b, a): f.values[b, a] for (b, a) in f.values if a in sub_cs}
    sub = validate_conditional_state(mo2, sub_cs, sub_values)
    with pytest.raises(DomainTooSmall) as exc:
        smap_from_conditional(sub)
    assert exc.value.missing == "1"  # first nonzero element outside the cs


def test_vanishing_diagonal_blocks_recovery(mo2):
    # nu(b) = 0 forces the whole b row and column to 0
    values = {}
    nu = {"0": F(0), "1": F(1), "a": F(1, 2), "a'": F(1, 2),
          "b": F(0), "b'": F(1)}
    for u in mo2.names:
        for v in mo2.names:
            if u == v:
                values[u, v] = nu[u]
            elif mo2.is_orthogonal(u, v):
                values[u, v] = F(0)
    for u in ("a", "a'"):
        values[u, "b"] = values["b", u] = F(0)
        values[u, "b'"] = values["b'", u] = nu[u]
        values[u, "1"] = values["1", u] = nu[u]
    for v in ("b", "b'"):
        values[v, "1"] = values["1", v] = nu[v]
    values["1", "1"] = F(1)
    for u in mo2.names:
        values[u, "0"] = values["0", u] = F(0)
    p = validate_smap(mo2, values)
    with pytest.raises(DegenerateDiagonal) as exc:
        conditional_from_smap(p)
    assert exc.value.element == "b"


def test_classical_smap_is_symmetric_meet_measure(boolean3):
    m = validate_state(boolean3, {
        "0": 0, "s1": "1/2", "s2": "1/3", "s3": "1/6",
        "s12": "5/6", "s13": "2/3", "s23": "1/2", "1": 1})
    p = classical_smap(m)
    for a in boolean3.names:
        for b in boolean3.names:
            assert p(a, b) == m(boolean3.meet(a, b))
            assert p(a, b) == p(b, a)


def test_classical_smap_fails_off_boolean(mo2):
    m = validate_state(mo2, {"0": 0, "1": 1, "a": "0.4", "a'": "0.6",
                             "b": "0.3", "b'": "0.7"})
    with pytest.raises(S3Violation):
        classical_smap(m)


def test_independence_product_rule(example21):
    p = example21.smaps["p"]
    assert p.is_independent_pair("a", "b")
    assert not p.is_independent_pair("b", "a")
    # complements inherit the verdict
    assert p.is_independent_pair("a'", "b")
    assert p.is_independent_pair("a", "b'")


@settings(deadline=None, max_examples=25)
@given(seed=st.integers(0, 10**6))
def test_random_roundtrip_mo3(seed):
    p = random_smap(gen_mo(3), seed)
    f = conditional_from_smap(p)
    assert smap_from_conditional(f).values == p.values


@settings(deadline=None, max_examples=25)
@given(seed=st.integers(0, 10**6))
def test_random_boolean_smap_is_classical(seed):
    logic = gen_boolean(2)
    p = random_smap(logic, seed)
    m = p.diagonal_state()
    for a in logic.names:
        for b in logic.names:
            assert p(a, b) == m(logic.meet(a, b))


def test_deterministic_generation(mo3):
    assert random_smap(mo3, 421).values == random_smap(mo3, 421).values
    assert random_state(mo3, 421).values == random_state(mo3, 421).values
    assert random_smap(mo3, 421).values != random_smap(mo3, 422).values
