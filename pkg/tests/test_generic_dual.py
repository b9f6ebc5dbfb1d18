from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings

from arthur_calc.dsl import parse, parse_generic, parse_parameter
from arthur_calc.generic_dual import (
    GenericDatum,
    generic_dual_chain,
    generic_dual_L,
    phi0_phi1_split,
    rests_on_working_hypothesis,
    standard_module_shape,
)
from arthur_calc.groups import GroupForm
from arthur_calc.params import Kind, ParameterError, arthur_to_L, hat

import strategies as S

H = Fraction(1, 2)


def L(text):
    return parse_parameter(text, Kind.L)


def test_so3_example(so3):
    g, phi = so3
    out = generic_dual_L(GenericDatum.build(g, [], phi))
    assert out == L("one[1,O]|1/2@S(1)xS(1) + one[1,O]|-1/2@S(1)xS(1)")


def test_all_a_one_is_fixed():
    g, phi = parse("Sp(2): a[1,O]@S(1)xS(1) + b[1,O]@S(1)xS(1) + c[1,O]@S(1)xS(1)")
    d = GenericDatum.build(g, [], phi)
    assert generic_dual_L(d) == d.phi()


def test_gl_part_is_hatted_and_expanded():
    g, gl, temp = parse_generic("Sp(4): r[1,N]@S(2)xS(1) ; one[1,O]@S(1)xS(1)")
    out = generic_dual_L(GenericDatum.build(g, gl, temp))
    assert out == L(
        "one[1,O]@S(1)xS(1) + r[1,N]|1/2@S(1)xS(1) + r[1,N]|-1/2@S(1)xS(1)"
        " + r_dual[1,N]|1/2@S(1)xS(1) + r_dual[1,N]|-1/2@S(1)xS(1)"
    )


def test_phi0_phi1_examples():
    phi0, phi1 = phi0_phi1_split(parse_parameter("one[1,O]@S(2)xS(1)"))
    assert len(phi0) == 0 and phi1 == L("one[1,O]|1/2@S(1)xS(1)")
    phi0, phi1 = phi0_phi1_split(parse_parameter("one[1,O]@S(1)xS(1)"))
    assert phi0 == L("one[1,O]@S(1)xS(1)") and len(phi1) == 0


def test_standard_module_and_chain_examples():
    shape = standard_module_shape(parse_parameter("one[1,O]@S(2)xS(1)"))
    assert [(r.label, e, m) for r, e, m in shape.twists] == [("one", -H, 1)] and len(shape.anchor) == 0
    chain = generic_dual_chain(parse_parameter("one[1,O]@S(2)xS(1)"))
    assert [(p.rho.label, p.exponent, p.m) for p in chain.peels] == [("one", -H, 1)]
    assert len(chain.terminal) == 0

    phi = parse_parameter("r[1,O]@S(1)xS(1) + r[1,O]@S(3)xS(1)")
    chain = generic_dual_chain(phi)
    assert [(p.rho.label, p.exponent, p.m) for p in chain.peels] == [("r", Fraction(-1), 1)]
    assert chain.terminal == parse_parameter("r[1,O]@S(1)xS(1)^2")
    shape = standard_module_shape(phi)
    assert shape.twist_multiset() == chain.twist_multiset() == Counter({("r", Fraction(-1)): 1})
    assert shape.anchor == L("r[1,O]@S(1)xS(1)^2")


def test_all_a_one_has_no_peels():
    assert generic_dual_chain(parse_parameter("a[1,O]@S(1)xS(1) + b[2,S]@S(1)xS(1)")).peels == ()


def test_working_hypothesis_flag():
    assert not rests_on_working_hypothesis(GroupForm.sp(4))
    assert not rests_on_working_hypothesis(GroupForm.so(5))
    assert rests_on_working_hypothesis(GroupForm.so(6))
    assert rests_on_working_hypothesis(GroupForm.u(3))


def test_rejects_mixed_parity_and_non_tempered():
    with pytest.raises(ParameterError):
        phi0_phi1_split(parse_parameter("r[1,O]@S(1)xS(1) + r[1,O]@S(2)xS(1)"))
    with pytest.raises(ParameterError):
        generic_dual_chain(parse_parameter("r[1,O]@S(1)xS(2)"))


@settings(max_examples=80, deadline=None)
@given(S.tempered_gp)
def test_generic_dual_identities(inst):
    phi, g = inst
    d = GenericDatum.build(g, [], phi)
    out = generic_dual_L(d)
    assert all(s.a == 1 for s in out)
    phi0, phi1 = phi0_phi1_split(phi)
    assert phi0 + phi1 + phi1.dual() == arthur_to_L(hat(phi)) == out
    shape = standard_module_shape(phi)
    assert shape.reassemble() == out
    assert generic_dual_chain(phi).twist_multiset() == shape.twist_multiset()
    for rho_label in {r.label for r, _, _ in shape.twists}:
        exps = [e for r, e, _ in shape.twists if r.label == rho_label]
        assert exps == sorted(set(exps)) and all(e < 0 for e in exps)


@settings(max_examples=60, deadline=None)
@given(S.generic)
def test_generic_datum_dual_dimension(d):
    out = generic_dual_L(d)
    assert out.dim == d.phi().dim
    assert all(s.a == 1 for s in out)
