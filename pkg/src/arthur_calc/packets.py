"""Tempered packet labels (phi, eps): supercuspidality, reduction chains, beta(pi).

A label is never turned into a representation.  beta(pi(phi, eps)) is
computed by walking Moeglin's reductions down to a supercuspidal label and
multiplying the beta_GL contributions of the inducing GL factors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .component_group import (
    ComponentGroupInfo,
    SignCharacter,
    canonical_character,
    characters_for_form,
    component_info,
    eval_at_s_psi,
)
from .endoscopy import mw_character_closed
from .groups import GroupError, GroupForm, witt_rank
from .params import (
    FormalParameter,
    GpPartition,
    Kind,
    Summand,
    arthur_to_L,
    hat,
    is_relevant,
    validate_for_group,
)
from .signs import beta_GL, beta_L_on_form, beta_phi_psi_on_form


class LabelError(ValueError):
    pass


class UnrealizableLabel(LabelError):
    """The reduction chain needs more rank than the group has."""


@dataclass(frozen=True)
class PacketLabel:
    phi: FormalParameter
    eps: SignCharacter
    form: GroupForm
    part: GpPartition = field(init=False, compare=False, repr=False)
    info: ComponentGroupInfo = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.phi.kind is not Kind.ARTHUR or not self.phi.is_tempered():
            raise LabelError("a packet label needs a tempered parameter")
        part = validate_for_group(self.phi, self.form.quasi_split())
        info = component_info(part, self.form)
        if self.eps.keys != info.keys:
            raise LabelError("character is not defined on the good-parity summands")
        eps = canonical_character(self.eps, info)
        if eps not in characters_for_form(info, self.form):
            raise LabelError(f"character {eps} is not in the packet of {self.form}")
        if not self.form.is_quasi_split and not is_relevant(self.phi, self.form):
            raise LabelError(f"parameter is not relevant for {self.form}")
        object.__setattr__(self, "eps", eps)
        object.__setattr__(self, "part", part)
        object.__setattr__(self, "info", info)

    @classmethod
    def trivial(cls, phi: FormalParameter, form: GroupForm) -> PacketLabel:
        keys = validate_for_group(phi, form.quasi_split()).gp_keys
        return cls(phi, SignCharacter.trivial(keys), form)

    def is_discrete(self) -> bool:
        return not self.part.bp and not self.part.nsd and all(s.m == 1 for s in self.part.gp)


def is_supercuspidal(l: PacketLabel) -> bool:
    if not l.is_discrete():
        return False
    present = {(s.rho.label, s.a): s.key for s in l.part.gp}
    for s in l.part.gp:
        v = l.eps[s.key]
        if s.a == 2 and v != -1:
            return False
        if s.a >= 3:
            below = present.get((s.rho.label, s.a - 2))
            if below is None or l.eps[below] == v:
                return False
    return True


@dataclass(frozen=True)
class ReductionStep:
    case_tag: str
    gl_sign: int
    rank_consumed: int
    next: PacketLabel


def _next_label(l: PacketLabel, summands: list[Summand], values: dict, rank: int) -> PacketLabel:
    phi = FormalParameter(tuple(summands))
    try:
        form = l.form.reduced(rank)
        witt_rank(form)
    except GroupError as exc:
        raise UnrealizableLabel(f"{l.form} has no room for this reduction: {exc}") from None
    keys = validate_for_group(phi, form.quasi_split()).gp_keys
    eps = SignCharacter(keys, tuple(values[k] for k in keys))
    try:
        return PacketLabel(phi, eps, form)
    except LabelError as exc:
        raise AssertionError(f"reduction produced an invalid label: {exc}") from None


def _case_a(l: PacketLabel) -> ReductionStep:
    phi0, phi1 = [], []
    for s in l.part.gp:
        if s.m % 2:
            phi0.append(s.with_m(1))
        if s.m // 2:
            phi1.append(s.with_m(s.m // 2))
    phi1 += [s.with_m(s.m // 2) for s in l.part.bp]
    phi1 += [s for s, _ in l.part.nsd]
    p1 = FormalParameter(tuple(phi1))
    values = {s.key: l.eps[s.key] for s in phi0}
    nxt = _next_label(l, phi0, values, p1.dim)
    return ReductionStep("a", beta_GL(arthur_to_L(hat(p1))), p1.dim, nxt)


def reduction_step(l: PacketLabel, reverse: bool = False) -> Optional[ReductionStep]:
    """First applicable reduction, or None for a supercuspidal label.

    The scan runs over representations in label order and, within one
    representation, from the largest a down; ``reverse`` flips both.
    """
    if not l.is_discrete():
        return _case_a(l)
    gp = l.part.gp
    eps = dict(l.eps.items())
    present = {(s.rho.label, s.a): s for s in gp}
    scan = sorted(gp, key=lambda s: (s.rho.label, -s.a), reverse=reverse)
    for s in scan:
        d = s.rho.dim
        below = present.get((s.rho.label, s.a - 2))
        if s.a >= 3 and below is None:
            lowered = Summand(s.rho, s.x, s.a - 2, 1, 1)
            rest = [t for t in gp if t is not s] + [lowered]
            values = dict(eps)
            values[lowered.key] = eps[s.key]
            return ReductionStep("b1", (-1) ** (1 + d), d, _next_label(l, rest, values, d))
        if s.a >= 3 and eps[below.key] == eps[s.key]:
            rest = [t for t in gp if t is not s and t is not below]
            return ReductionStep(
                "b2", (-1) ** ((s.a - 1) * (d - 1)), (s.a - 1) * d, _next_label(l, rest, eps, (s.a - 1) * d)
            )
        if s.a == 2 and eps[s.key] == 1:
            rest = [t for t in gp if t is not s]
            return ReductionStep("c", (-1) ** (1 + d), d, _next_label(l, rest, eps, d))
    return None


def reduction_chain(l: PacketLabel, reverse: bool = False) -> list[ReductionStep]:
    chain = []
    cur = l
    while True:
        step = reduction_step(cur, reverse)
        if step is None:
            return chain
        if step.next.phi.dim >= cur.phi.dim:
            raise AssertionError("reduction did not lower the dimension")
        chain.append(step)
        cur = step.next


def beta_rep(l: PacketLabel, reverse: bool = False) -> int:
    chain = reduction_chain(l, reverse)
    sign = 1
    for step in chain:
        sign *= step.gl_sign
    r_final = witt_rank(l.form) - sum(step.rank_consumed for step in chain)
    final = chain[-1].next if chain else l
    if r_final != witt_rank(final.form):
        raise AssertionError("rank bookkeeping drifted along the chain")
    return sign * (-1) ** r_final


def _psi_side(l: PacketLabel):
    psi = hat(l.phi)
    info = component_info(validate_for_group(psi, l.form.quasi_split()), l.form)
    return psi, info, l.eps.swapped()


def prop74_check(l: PacketLabel) -> int:
    """eps(s_psi) beta(phi_psi) beta(pi) for psi = hat(phi); always +1.

    beta(phi_psi) is counted with the minimal Levi of the group of the label,
    which differs from the quasi-split count by the Kottwitz sign.
    """
    psi, info, eps = _psi_side(l)
    return eval_at_s_psi(eps, info) * beta_phi_psi_on_form(psi, l.form) * beta_rep(l)


def az_dual_label(l: PacketLabel) -> tuple[FormalParameter, SignCharacter]:
    if prop74_check(l) != 1:
        raise AssertionError("sign identity fails; the dual label would carry a sign")
    psi, info, eps = _psi_side(l)
    return psi, canonical_character(eps * mw_character_closed(psi, l.form), info)


@dataclass(frozen=True)
class ComparisonReport:
    psi: FormalParameter
    beta_phi: int
    beta_phi_psi: int
    beta_pi: int
    eps_at_s_psi: int
    original_character: SignCharacter
    corrected_character: SignCharacter
    character_agrees: bool
    original_sign_holds: bool
    corrected_sign_holds: bool

    @property
    def verdict(self) -> str:
        return "AGREE" if self.character_agrees and self.original_sign_holds else "CONTRADICTION"


def arthur_lemma_comparison(l: PacketLabel) -> ComparisonReport:
    """Naive transport of (phi, eps) to hat(phi) against the corrected rule.

    The naive rule keeps the character and predicts eps(s_psi) = beta(phi) beta(pi);
    the corrected rule multiplies by eps^{M/MW} and uses beta(phi_psi).
    """
    psi, info, eps = _psi_side(l)
    b_phi = beta_L_on_form(l.phi.as_kind(Kind.L), l.form)
    b_phi_psi = beta_phi_psi_on_form(psi, l.form)
    b_pi = beta_rep(l)
    at_s = eval_at_s_psi(eps, info)
    original = canonical_character(eps, info)
    corrected = canonical_character(eps * mw_character_closed(psi, l.form), info)
    return ComparisonReport(
        psi=psi,
        beta_phi=b_phi,
        beta_phi_psi=b_phi_psi,
        beta_pi=b_pi,
        eps_at_s_psi=at_s,
        original_character=original,
        corrected_character=corrected,
        character_agrees=original == corrected,
        original_sign_holds=b_phi * b_pi == at_s,
        corrected_sign_holds=b_phi_psi * b_pi == at_s,
    )


__all__ = [
    "ComparisonReport",
    "LabelError",
    "PacketLabel",
    "ReductionStep",
    "UnrealizableLabel",
    "arthur_lemma_comparison",
    "az_dual_label",
    "beta_rep",
    "is_supercuspidal",
    "prop74_check",
    "reduction_chain",
    "reduction_step",
]
