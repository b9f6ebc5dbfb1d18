from __future__ import annotations

import pytest

from arthur_calc.groups import Family, Form, GroupError, GroupForm, chi_v, kottwitz_sign, witt_rank


@pytest.mark.parametrize(
    "g, r",
    [
        (GroupForm.sp(2), 1),
        (GroupForm.so(7, "inner"), 2),
        (GroupForm.so(4, "inner"), 0),
        (GroupForm.so(7), 3),
        (GroupForm.so(6, "qs"), 2),
        (GroupForm.u(5), 2),
        (GroupForm.u(4, "inner"), 1),
    ],
)
def test_witt_rank(g, r):
    assert witt_rank(g) == r


def test_kottwitz_sign_and_chi():
    assert kottwitz_sign(GroupForm.so(7, "inner")) == -1
    assert kottwitz_sign(GroupForm.so(8, "inner")) == 1  # rank drops by two
    assert kottwitz_sign(GroupForm.so(8, "qs")) == 1
    assert chi_v(GroupForm.so(3, "inner")) == -1
    assert chi_v(GroupForm.sp(4)) == 1


def test_eps_hat_and_param_dim():
    assert (GroupForm.sp(4).eps_hat, GroupForm.sp(4).param_dim) == (1, 5)
    assert (GroupForm.so(5).eps_hat, GroupForm.so(5).param_dim) == (-1, 4)
    assert (GroupForm.so(6).eps_hat, GroupForm.so(6).param_dim) == (1, 6)
    assert GroupForm.u(3).eps_hat == 1 and GroupForm.u(4).eps_hat == -1


@pytest.mark.parametrize(
    "make",
    [
        lambda: GroupForm.sp(3),
        lambda: GroupForm(Family.SP, 1, Form.INNER),
        lambda: GroupForm.so(5, "qs"),
        lambda: GroupForm.so(2, "inner"),
        lambda: GroupForm.u(4, "qs"),
        lambda: GroupForm.so(1, "inner"),
    ],
)
def test_invalid_forms(make):
    with pytest.raises(GroupError):
        make()


def test_carrying_and_reduction():
    g = GroupForm.carrying(Family.SO_ODD, 6, Form.INNER)
    assert g == GroupForm.so(7, "inner")
    assert g.reduced(2) == GroupForm.so(3, "inner")
    assert g.quasi_split() == GroupForm.so(7)
    assert str(GroupForm.sp(2)) == "Sp(2)"
