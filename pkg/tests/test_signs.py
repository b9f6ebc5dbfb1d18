from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from arthur_calc import random_instances as ri
from arthur_calc.dsl import parse, parse_parameter
from arthur_calc.groups import Family, Form, GroupForm, witt_rank
from arthur_calc.params import Kind, ParameterError, arthur_to_L, hat
from arthur_calc.signs import (
    GLFactor,
    alpha,
    beta_GL,
    beta_L,
    beta_L_on_form,
    beta_oracle_discrete,
    beta_phi_psi,
    beta_phi_psi_closed_form,
    sign_ledger,
)

import strategies as S


def test_alpha_examples():
    g = GroupForm.sp(2)
    assert alpha(g, [g]) == 1
    # Sp(2) against Sp(0) x (a rank-one factor)
    assert alpha(g, [GroupForm.sp(0), GroupForm.sp(2)]) == 1
    assert alpha(GroupForm.sp(4), [GroupForm.sp(2), GLFactor(1)]) == 1
    assert alpha(GroupForm.sp(4), [GroupForm.sp(2), None]) == -1


def test_alpha_symmetric_in_factors():
    g = GroupForm.so(9)
    a, b = GroupForm.so(5), GroupForm.so(5, "inner")
    assert alpha(g, [a, b]) * alpha(g, [b, a]) == 1


def test_beta_L_examples(so3, sp2):
    g, phi = so3
    assert beta_L(phi.as_kind(Kind.L), g) == -1
    g, phi = sp2
    assert beta_L(phi.as_kind(Kind.L), g) == 1
    g, psi = parse("SO(3,split): one[1,O]@S(1)xS(2)")
    assert beta_L(arthur_to_L(psi), g) == 1


def test_beta_L_needs_L_kind(so3):
    with pytest.raises(ParameterError):
        beta_L(so3[1], so3[0])


def test_beta_GL_examples():
    assert beta_GL(parse_parameter("r[3,N]|1/3@S(1)xS(1)", Kind.L)) == 1
    assert beta_GL(parse_parameter("r[2,N]@S(1)xS(1)", Kind.L)) == -1
    assert beta_GL(parse_parameter("r[1,O]|1/2@S(1)xS(1) + r[1,O]|-1/2@S(1)xS(1)", Kind.L)) == 1
    for d, a in [(1, 2), (2, 3), (3, 3)]:
        assert beta_GL(parse_parameter(f"r[{d},N]@S({a})xS(1)", Kind.L)) == (-1) ** (1 + d * a)


def test_beta_phi_psi_examples(sp2):
    g, psi = parse("SO(3,split): one[1,O]@S(1)xS(2)")
    assert beta_phi_psi(psi, g) == 1
    assert beta_phi_psi_closed_form(psi, g) == 1
    assert beta_phi_psi(sp2[1], sp2[0]) == 1


def test_beta_oracle_so3(so3):
    g, phi = so3
    assert beta_oracle_discrete(phi, g) == 1 == beta_phi_psi(hat(phi), g)


def test_beta_oracle_all_a_one():
    g, phi = parse("Sp(6): a[1,O]@S(1)xS(1) + b[2,O]@S(1)xS(1) + c[4,O]@S(1)xS(1)")
    assert beta_oracle_discrete(phi, g) == (-1) ** witt_rank(g) == beta_phi_psi(phi, g)


def test_beta_oracle_rejects_non_discrete(sp2):
    with pytest.raises(ParameterError):
        beta_oracle_discrete(*reversed(sp2))
    with pytest.raises(ParameterError):
        beta_oracle_discrete(sp2[1], sp2[0])


def test_closed_form_ngp_only():
    g, psi = parse("SO(4,split): t[1,N]@S(1)xS(2)+dual")
    assert beta_phi_psi_closed_form(psi, g) == beta_phi_psi(psi, g)


def test_closed_form_on_supercuspidal_dual_shape():
    # (-1)^f (-1)^r(G) with f the sum over even ladders of m(m+1)/2
    for m in range(1, 6):
        for n in range(0, 4):
            even = [f"r[1,O]@S(1)xS({2 * k})" for k in range(1, m + 1)]
            odd = [f"q[2,S]@S(1)xS({2 * k + 1})" for k in range(n)]
            dim = m * (m + 1) + n * n * 2
            g, psi = parse(f"SO({dim + 1},split): {' + '.join(even + odd)}")
            expected = (-1) ** (m * (m + 1) // 2) * (-1) ** witt_rank(g)
            assert beta_phi_psi_closed_form(psi, g) == expected == beta_phi_psi(psi, g)


@settings(max_examples=80, deadline=None)
@given(S.anti_tempered_ngp)
def test_closed_form_matches_definition(inst):
    psi, g = inst
    assert beta_phi_psi_closed_form(psi, g) == beta_phi_psi(psi, g)


@settings(max_examples=80, deadline=None)
@given(S.discrete)
def test_discrete_oracle_matches_definition(inst):
    phi, g = inst
    assert beta_oracle_discrete(phi, g) == beta_phi_psi(hat(phi), g)


@settings(max_examples=80, deadline=None)
@given(S.tempered)
def test_beta_L_depends_only_on_quasi_split_form(inst):
    p, g = inst
    phi = p.as_kind(Kind.L)
    assert beta_L(phi, g) == beta_L(phi, g.quasi_split())
    assert beta_L_on_form(phi, g) * beta_L(phi, g) == sign_ledger(g).kottwitz


@settings(max_examples=60, deadline=None)
@given(S.seeds)
def test_multiplicativity(seed):
    p, g, p0, g0, p1 = ri.random_L_split(random.Random(seed), S.CFG)
    assert beta_L(p, g) == beta_L(p0, g0) * beta_GL(p1)


def test_sign_ledger():
    led = sign_ledger(GroupForm.so(7, "inner"))
    assert (led.r_G, led.r_Gstar, led.kottwitz) == (2, 3, -1)
    assert sign_ledger(GroupForm(Family.U, 2, Form.INNER)).kottwitz == -1
