"""Witt ranks, Kottwitz signs, alpha and beta.

beta of an L-parameter is the parity of the corank of the minimal Levi
subgroup through which it factors.  Two closed forms for beta(phi_psi) are
kept here as oracles against the definitional route through arthur_to_L.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .groups import GroupForm, kottwitz_sign, witt_rank
from .params import (
    FormalParameter,
    Kind,
    ParameterError,
    arthur_to_L,
    validate_for_group,
)

__all__ = [
    "GLFactor",
    "SignLedger",
    "alpha",
    "beta_GL",
    "beta_L",
    "beta_L_on_form",
    "beta_oracle_discrete",
    "beta_phi_psi",
    "beta_phi_psi_closed_form",
    "beta_phi_psi_on_form",
    "kottwitz_sign",
    "sign_ledger",
    "witt_rank",
]


@dataclass(frozen=True)
class GLFactor:
    k: int


@dataclass(frozen=True)
class SignLedger:
    r_G: int
    r_Gstar: int
    kottwitz: int
    context: GroupForm


def sign_ledger(g: GroupForm) -> SignLedger:
    r, rs = witt_rank(g), witt_rank(g.quasi_split())
    return SignLedger(r, rs, (-1) ** (r - rs), g)


def alpha(g: GroupForm, gprime: Sequence[Union[GroupForm, GLFactor, None]]) -> int:
    total = 0
    for h in gprime:
        if h is None:
            continue
        total += h.k if isinstance(h, GLFactor) else witt_rank(h)
    return (-1) ** (witt_rank(g) - total)


def _m_phi(p: FormalParameter, g: GroupForm) -> int:
    part = validate_for_group(p, g.quasi_split())
    return (
        sum(s.m // 2 for s in part.gp)
        + sum(s.m // 2 for s in part.bp)
        + sum(s.m for s, _ in part.nsd)
    )


def beta_L(p: FormalParameter, g: GroupForm) -> int:
    """beta of an L-parameter, read on the quasi-split inner form."""
    if p.kind is not Kind.L:
        raise ParameterError("beta_L expects an L-parameter")
    return (-1) ** (_m_phi(p, g) + witt_rank(g.quasi_split()))


def beta_L_on_form(p: FormalParameter, g: GroupForm) -> int:
    """Same count with the minimal Levi of ``g`` itself: differs by e(G)."""
    return kottwitz_sign(g) * beta_L(p, g)


def beta_GL(p: FormalParameter) -> int:
    if p.kind is not Kind.L:
        raise ParameterError("beta_GL expects an L-parameter")
    return (-1) ** (p.count + p.dim)


def beta_phi_psi(psi: FormalParameter, g: GroupForm) -> int:
    return beta_L(arthur_to_L(psi), g)


def beta_phi_psi_on_form(psi: FormalParameter, g: GroupForm) -> int:
    return beta_L_on_form(arthur_to_L(psi), g)


def beta_phi_psi_closed_form(psi: FormalParameter, g: GroupForm) -> int:
    """Closed form for anti-tempered psi, from the gp / non-gp splitting."""
    if not psi.is_anti_tempered():
        raise ParameterError("closed form needs an anti-tempered parameter")
    part = validate_for_group(psi, g.quasi_split())

    # psi_ngp: half of every bp summand and one member of every nsd pair
    ngp = [s.with_m(s.m // 2) for s in part.bp] + [s for s, _ in part.nsd]
    phi_ngp = arthur_to_L(FormalParameter(tuple(ngp)))
    r_gp = witt_rank(g.quasi_split()) - phi_ngp.dim
    if r_gp < 0:
        raise AssertionError("negative rank for the good-parity group")

    by_rho: dict[str, list] = defaultdict(list)
    for s in part.gp:
        by_rho[s.rho.label].append(s)
    f = 0
    for items in by_rho.values():
        parities = {s.b % 2 for s in items}
        if len(parities) != 1:
            raise AssertionError("mixed b-parities for one rho in the good-parity part")
        if parities == {0}:
            f += sum(s.m * s.b // 2 for s in items)
        else:
            m_rho = sum(s.m for s in items)
            f += m_rho // 2 + sum(s.m * (s.b - 1) // 2 for s in items)
    return beta_GL(phi_ngp) * (-1) ** f * (-1) ** r_gp


def _segment(rho: str, start: Fraction, stop: Fraction) -> list[tuple[str, Fraction]]:
    out, e = [], start
    while e <= stop:
        out.append((rho, e))
        e += 1
    return out


def beta_oracle_discrete(phi: FormalParameter, g: GroupForm) -> int:
    """beta(phi_psi) for psi = hat(phi), via the theta-stable Levi of GL_N.

    The Levi is built from the tau segments attached to a discrete tempered
    phi; theta swaps each tau block with its mirror and fixes the middle
    block, so the theta-coinvariants of its centre have one dimension per
    mirrored pair.
    """
    if not phi.is_tempered():
        raise ParameterError("oracle needs a tempered parameter")
    part = validate_for_group(phi, g.quasi_split())
    if part.bp or part.nsd or any(s.m != 1 for s in part.gp):
        raise ParameterError("oracle needs a discrete parameter")

    by_rho: dict[str, list] = defaultdict(list)
    for s in part.gp:
        by_rho[s.rho.label].append(s)
    tau_blocks: list[list[tuple[str, Fraction]]] = []
    middle: list[str] = []
    dims = {s.rho.label: s.rho.dim for s in part.gp}
    for label, items in sorted(by_rho.items()):
        items.sort(key=lambda s: s.a)
        for i, s in enumerate(items, start=1):
            lo = Fraction(1 - s.a, 2)
            if (s.a + s.b) % 2:
                hi = Fraction(-1, 2)
            elif i % 2:
                hi = Fraction(-1)
            else:
                hi = Fraction(0)
            tau_blocks += [[blk] for blk in _segment(label, lo, hi)]
        if (items[0].a + items[0].b) % 2 == 0 and len(items) % 2:
            middle.append(label)

    # each tau block appears together with its theta-mirror
    size = 2 * sum(dims[rho] for blk in tau_blocks for rho, _ in blk)
    size += sum(dims[rho] for rho in middle)
    if size != phi.dim:
        raise AssertionError("Levi blocks do not fill GL_N")
    return (-1) ** witt_rank(g.quasi_split()) * (-1) ** len(tau_blocks)
