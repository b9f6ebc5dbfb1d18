from __future__ import annotations

import random
import warnings

import pytest
from hypothesis import given, settings

from arthur_calc import random_instances as ri
from arthur_calc.component_group import SignCharacter, pair
from arthur_calc.dsl import parse, parse_eigen
from arthur_calc.endoscopy import (
    ElementError,
    GeneralParameterWarning,
    SemisimpleElement,
    default_order,
    endoscopic_datum,
    image_in_component_group,
    lemma61_product,
    mw_character_closed,
    mw_character_xu,
)
from arthur_calc.groups import Family, Form, GroupForm
from arthur_calc.params import validate_for_group

import strategies as S

SP2 = "Sp(2): chi[1,O]@S(1)xS(1)^2 + one[1,O]@S(1)xS(1)"


def _element(text, eig):
    g, psi = parse(text)
    part = validate_for_group(psi, g.quasi_split())
    return g, psi, SemisimpleElement.build(part, parse_eigen(eig))


def test_identity_element():
    g, psi, s = _element(SP2, "")
    d = endoscopic_datum(psi, g, s)
    assert d.plus == (g, psi)
    assert d.minus[0] is None and not d.gl_factors
    assert image_in_component_group(s).is_trivial()
    assert lemma61_product(psi, g, s) == 1


def test_identity_element_on_inner_form():
    g, psi, s = _element("SO(7,inner): one[1,O]@S(1)xS(2)^3", "")
    assert lemma61_product(psi, g, s) == pair(mw_character_closed(psi, g), image_in_component_group(s)) == 1


def test_minus_one_everywhere():
    g, psi, s = _element("SO(5,split): a[1,O]@S(1)xS(2)^2", "a@S(1)xS(2): -1^2")
    d = endoscopic_datum(psi, g, s)
    assert d.plus[0] is None
    assert d.minus == (GroupForm.so(5), psi)


def test_sp2_example_element():
    g, psi, s = _element(SP2, "chi@S(1)xS(1): +1^1 -1^1")
    d = endoscopic_datum(psi, g, s)
    assert (d.plus[1].dim, d.minus[1].dim) == (2, 1)
    assert d.plus[0].family is Family.SO_EVEN and d.minus[0] == GroupForm.sp(0)
    assert str(image_in_component_group(s)) == "-,+"
    assert d.even_orthogonal() == ["plus"]
    # both split hints give the same product
    for form in ("split", "qs"):
        assert lemma61_product(psi, g, s, {"plus": form}) == -1
    assert pair(mw_character_closed(psi, g), image_in_component_group(s)) == -1


def test_gl_pair_does_not_change_image():
    text = "Sp(4): chi[1,O]@S(1)xS(1)^4 + one[1,O]@S(1)xS(1)"
    _, _, s1 = _element(text, "chi@S(1)xS(1): +1^2 -1^2")
    g, psi, s2 = _element(text, "chi@S(1)xS(1): L^1 Linv^1 -1^2")
    assert image_in_component_group(s1) == image_in_component_group(s2)
    d = endoscopic_datum(psi, g, s2)
    assert [(lam, p.dim) for lam, p in d.gl_factors] == [("L", 1)]
    assert lemma61_product(psi, g, s1) == lemma61_product(psi, g, s2)


def test_nsd_partner_translated():
    g, psi = parse("SO(4,split): t[1,N]@S(1)xS(2)+dual")
    part = validate_for_group(psi, g)
    a = SemisimpleElement.build(part, parse_eigen("t@S(1)xS(2): L^1"))
    b = SemisimpleElement.build(part, parse_eigen("t_dual@S(1)xS(2): Linv^1"))
    assert a == b


@pytest.mark.parametrize(
    "text, eig",
    [
        (SP2, "chi@S(1)xS(1): +1^1"),  # multiplicities do not sum
        (SP2, "chi@S(1)xS(1): L^2"),  # L without its inverse
        ("SO(4,split): a[1,O]@S(1)xS(1)^2 + b[1,O]@S(1)xS(1)^2", "a@S(1)xS(1): -1^1 +1^1"),  # det -1
        ("SO(8,split): a[1,O]@S(1)xS(1)^4 + q[1,O]@S(1)xS(2)^2", "q@S(1)xS(2): -1^1 +1^1"),  # bp parity
        (SP2, "zzz@S(1)xS(1): +1^1"),  # unknown summand
    ],
)
def test_invalid_elements(text, eig):
    with pytest.raises(ElementError):
        _element(text, eig)


def test_odd_eigenspace_in_even_orthogonal_group():
    g, psi, s = _element("SO(4,split): a[1,O]@S(1)xS(1)^2 + b[1,O]@S(1)xS(1)^2", "a@S(1)xS(1): -1^2")
    assert endoscopic_datum(psi, g, s).minus[1].dim == 2
    with pytest.raises(ElementError):
        endoscopic_datum(psi, g, s, {"third": "qs"})


def test_hint_on_odd_orthogonal_factor_rejected():
    g, psi, s = _element(SP2, "chi@S(1)xS(1): +1^1 -1^1")
    with pytest.raises(ElementError):
        endoscopic_datum(psi, g, s, {"minus": Form.QS})


def test_unitary_twist_note():
    g, psi, s = _element("U(3,split): a[1,CO]@S(1)xS(1)^2 + c[1,CO]@S(1)xS(1)", "a@S(1)xS(1): -1^1 +1^1")
    d = endoscopic_datum(psi, g, s)
    assert d.plus[0] == GroupForm.u(2) and d.minus[0] == GroupForm.u(1)
    assert any("conjugate-symplectic" in n for n in d.twist_note)


# eps^{M/MW} ------------------------------------------------------------------


def test_mw_examples():
    g, psi = parse(SP2)
    assert str(mw_character_closed(psi, g)) == "-,+"
    assert str(mw_character_xu(psi, g)) == "-,+"
    g, psi = parse("SO(3,split): one[1,O]@S(1)xS(2)")
    assert mw_character_closed(psi, g).is_trivial()
    g, psi = parse("SO(9,split): a[1,O]@S(1)xS(2) + a[1,O]@S(1)xS(4) + b[2,S]@S(1)xS(1)")
    assert mw_character_closed(psi, g).is_trivial() and mw_character_xu(psi, g).is_trivial()


def test_xu_rejects_order_violating_P():
    g, psi = parse("SO(7,split): a[1,O]@S(1)xS(2) + a[1,O]@S(1)xS(4)")
    part = validate_for_group(psi, g)
    order = {k: list(reversed(v)) for k, v in default_order(part).items()}
    with pytest.raises(ElementError):
        mw_character_xu(psi, g, order)


def test_xu_warns_outside_anti_tempered():
    g, psi = parse("SO(3,split): one[1,O]@S(2)xS(1)")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        mw_character_xu(psi, g)
    assert any(issubclass(w.category, GeneralParameterWarning) for w in caught)


@settings(max_examples=80, deadline=None)
@given(S.seeds)
def test_xu_order_independence(seed):
    rng = random.Random(seed)
    psi, g = ri.anti_tempered(rng, S.CFG)
    part = validate_for_group(psi, g.quasi_split())
    order = ri.random_admissible_order(rng, part)
    assert mw_character_xu(psi, g, order) == mw_character_closed(psi, g)


@settings(max_examples=80, deadline=None)
@given(S.seeds)
def test_endoscopic_sign_on_general_good_and_bad_parity(seed):
    rng = random.Random(seed)
    psi, g = ri.anti_tempered(rng, S.CFG, ngp=True)
    part = validate_for_group(psi, g.quasi_split())
    s = ri.random_element(rng, part)
    x = image_in_component_group(s)
    target = pair(mw_character_closed(psi, g), x)
    assert lemma61_product(psi, g, s) == target
    s2 = ri.random_element(rng, part, image=x)
    assert image_in_component_group(s2) == x
    assert lemma61_product(psi, g, s2) == target


@settings(max_examples=60, deadline=None)
@given(S.elements)
def test_datum_dimensions_and_types(inst):
    psi, g, s = inst
    d = endoscopic_datum(psi, g, s)
    total = d.plus[1].dim + d.minus[1].dim + 2 * sum(p.dim for _, p in d.gl_factors)
    assert total == psi.dim
    for h, p in (d.plus, d.minus):
        if h is not None:
            validate_for_group(p, h)
    assert isinstance(image_in_component_group(s), SignCharacter)
