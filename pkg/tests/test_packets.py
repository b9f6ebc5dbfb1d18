from __future__ import annotations

import pytest
from hypothesis import given, settings

from arthur_calc.component_group import SignCharacter
from arthur_calc.dsl import parse, parse_parameter, parse_sign_values
from arthur_calc.groups import GroupForm, witt_rank
from arthur_calc.packets import (
    LabelError,
    PacketLabel,
    UnrealizableLabel,
    arthur_lemma_comparison,
    az_dual_label,
    beta_rep,
    is_supercuspidal,
    prop74_check,
    reduction_chain,
    reduction_step,
)
from arthur_calc.params import hat, validate_for_group

import strategies as S


def label(text, char):
    g, phi = parse(text)
    keys = validate_for_group(phi, g.quasi_split()).gp_keys
    return PacketLabel(phi, SignCharacter(keys, parse_sign_values(char, keys)), g)


SP2 = "Sp(2): chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)"
SO3 = "SO(3,split): one[1,O]@S(2)xS(1)"


def test_supercuspidal_examples():
    assert not is_supercuspidal(label(SO3, "+"))
    assert is_supercuspidal(label("SO(3,inner): one[1,O]@S(2)xS(1)", "-"))
    ladder = "Sp(4): q[1,O]@S(1)xS(1) + r[1,O]@S(1)xS(1) + r[1,O]@S(3)xS(1)"
    assert is_supercuspidal(label(ladder, "q@S(1)xS(1)=-1, r@S(1)xS(1)=+1, r@S(3)xS(1)=-1"))
    assert not is_supercuspidal(label(ladder, "q@S(1)xS(1)=+1, r@S(1)xS(1)=+1, r@S(3)xS(1)=+1"))


def test_sp2_reduction_is_case_a():
    step = reduction_step(label(SP2, "+,+"))
    assert step.case_tag == "a"
    assert step.next.phi == parse_parameter("one[1,O]@S(1)xS(1)")
    assert step.gl_sign == 1 and step.rank_consumed == 1
    assert reduction_step(step.next) is None


def test_so3_reduction_is_case_c():
    step = reduction_step(label(SO3, "+"))
    assert step.case_tag == "c"
    assert len(step.next.phi) == 0 and step.gl_sign == 1


def test_beta_rep_examples():
    assert beta_rep(label(SP2, "+,+")) == 1
    assert beta_rep(label(SO3, "+")) == 1
    sc = label("Sp(4): q[1,O]@S(1)xS(1) + r[1,O]@S(1)xS(1) + r[1,O]@S(3)xS(1)", "-,+,-")
    assert reduction_chain(sc) == []
    assert beta_rep(sc) == (-1) ** witt_rank(sc.form)


def test_prop74_examples():
    assert prop74_check(label(SP2, "+,+")) == 1
    assert prop74_check(label(SO3, "+")) == 1


def test_dual_labels():
    psi, eps = az_dual_label(label(SP2, "+,+"))
    assert psi == parse(SP2)[1] and str(eps) == "-,+"
    psi, eps = az_dual_label(label(SO3, "+"))
    assert psi == parse_parameter("one[1,O]@S(1)xS(2)") and eps.is_trivial()
    # all multiplicities one: the character is carried over unchanged
    l = label("Sp(4): a[1,O]@S(1)xS(1) + b[1,O]@S(3)xS(1) + c[1,O]@S(1)xS(1)", "+,-,-")
    assert az_dual_label(l) == (hat(l.phi), l.eps.swapped())


def test_comparison_reports():
    rep = arthur_lemma_comparison(label(SP2, "+,+"))
    assert rep.verdict == "CONTRADICTION" and not rep.character_agrees and rep.original_sign_holds
    rep = arthur_lemma_comparison(label(SO3, "+"))
    assert rep.verdict == "CONTRADICTION" and rep.character_agrees and not rep.original_sign_holds
    assert rep.corrected_sign_holds
    rep = arthur_lemma_comparison(label("Sp(2): a[1,O]@S(1)xS(1) + b[1,O]@S(1)xS(1) + c[1,O]@S(1)xS(1)", "+,+,+"))
    assert rep.verdict == "AGREE"


def test_label_errors():
    with pytest.raises(LabelError):
        label("SO(3,split): one[1,O]@S(1)xS(2)", "+")  # not tempered
    with pytest.raises(LabelError):
        label(SO3, "-")  # belongs to the inner form
    with pytest.raises(LabelError):
        PacketLabel.trivial(parse_parameter("one[1,O]@S(1)xS(1)^6"), GroupForm.so(7, "inner"))  # not relevant


def test_unrealizable_label():
    # the determinant of this parameter is trivial, so it lives on split SO(4)
    l = label("SO(4,qs): r[1,O]@S(1)xS(1) + r[1,O]@S(3)xS(1)", "+,+")
    with pytest.raises(UnrealizableLabel):
        beta_rep(l)


@settings(max_examples=80, deadline=None)
@given(S.labels)
def test_prop74_and_order_independence(l):
    assert prop74_check(l) == 1
    assert beta_rep(l) == beta_rep(l, reverse=True)


@settings(max_examples=80, deadline=None)
@given(S.labels)
def test_supercuspidal_iff_no_reduction(l):
    assert is_supercuspidal(l) == (reduction_step(l) is None)


@settings(max_examples=60, deadline=None)
@given(S.labels)
def test_chain_lowers_dimension_and_ends_supercuspidal(l):
    chain = reduction_chain(l)
    last = chain[-1].next if chain else l
    assert is_supercuspidal(last)
    dims = [l.phi.dim] + [s.next.phi.dim for s in chain]
    assert dims == sorted(dims, reverse=True) and len(set(dims)) == len(dims)


@settings(max_examples=60, deadline=None)
@given(S.labels)
def test_dual_label_is_in_dual_packet(l):
    psi, eps = az_dual_label(l)
    assert psi == hat(l.phi)
    assert eps.keys == validate_for_group(psi, l.form.quasi_split()).gp_keys
