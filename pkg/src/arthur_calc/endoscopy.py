"""Endoscopic data cut out by a semisimple element, and the character eps^{M/MW}.

Eigenvalues are tokens: ``+1``, ``-1`` or an abstract label ``L`` whose
formal inverse is written ``Linv``.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import product
from typing import Mapping, Optional, Sequence

from .component_group import SignCharacter
from .groups import Family, Form, GroupForm, kottwitz_sign, witt_rank
from .params import (
    FormalParameter,
    GpPartition,
    Irrep,
    ParameterError,
    SdClass,
    Summand,
    SummandKey,
    arthur_to_L,
    validate_for_group,
)
from .signs import GLFactor, alpha, beta_GL, beta_phi_psi

PLUS, MINUS = "+1", "-1"
_INV = "inv"


class ElementError(ValueError):
    pass


class GeneralParameterWarning(UserWarning):
    """Xu's recipe used outside the anti-tempered case."""


def inverse(tok: str) -> str:
    if tok in (PLUS, MINUS):
        return tok
    return tok[: -len(_INV)] if tok.endswith(_INV) else tok + _INV


def base(tok: str) -> str:
    return tok[: -len(_INV)] if tok.endswith(_INV) else tok


@dataclass(frozen=True)
class SemisimpleElement:
    part: GpPartition = field(compare=False, repr=False)
    eigen: tuple[tuple[SummandKey, tuple[tuple[str, int], ...]], ...]

    @classmethod
    def build(cls, part: GpPartition, eigen: Mapping[SummandKey, Mapping[str, int]]) -> SemisimpleElement:
        """Validate eigenvalue data against ``part``; unlisted summands get +1."""
        reps: dict[SummandKey, tuple[str, Summand]] = {}
        for s in part.gp:
            reps[s.key] = ("gp", s)
        for s in part.bp:
            reps[s.key] = ("bp", s)
        partners = {}
        for s, t in part.nsd:
            reps[s.key] = ("nsd", s)
            partners[t.key] = s.key

        table: dict[SummandKey, dict[str, int]] = {}
        for k, eig in eigen.items():
            eig = {t: n for t, n in eig.items() if n}
            if any(n < 0 for n in eig.values()):
                raise ElementError("negative eigenvalue multiplicity")
            if k in partners:  # given on the partner: move to the representative
                k = partners[k]
                eig = {inverse(t): n for t, n in eig.items()}
            if k not in reps:
                raise ElementError(f"no summand {k} in the parameter")
            if k in table:
                raise ElementError(f"summand {k} listed twice")
            table[k] = eig

        neg_dim = 0
        for k, (kind, s) in reps.items():
            eig = table.setdefault(k, {PLUS: s.m})
            if sum(eig.values()) != s.m:
                raise ElementError(f"eigenvalue multiplicities on {k} do not sum to {s.m}")
            if kind in ("gp", "bp"):
                for t, n in eig.items():
                    if eig.get(inverse(t), 0) != n:
                        raise ElementError(f"eigenvalue {t} on {k} lacks its inverse")
            if kind == "bp" and (eig.get(PLUS, 0) % 2 or eig.get(MINUS, 0) % 2):
                raise ElementError(f"+1/-1 multiplicities on the bp summand {k} must be even")
            if kind != "nsd":
                neg_dim += eig.get(MINUS, 0) * s.unit_dim
        if part.group.family is Family.SO_EVEN and neg_dim % 2:
            raise ElementError("element has determinant -1 in the even orthogonal dual group")
        frozen = tuple(sorted((k, tuple(sorted(e.items()))) for k, e in table.items()))
        return cls(part, frozen)

    def eig(self, key: SummandKey) -> dict[str, int]:
        for k, e in self.eigen:
            if k == key:
                return dict(e)
        raise KeyError(key)

    def r(self, tok: str, key: SummandKey) -> int:
        return self.eig(key).get(tok, 0)

    def labels(self) -> list[str]:
        """Lambda: one token from each pair {lambda, lambda^-1} with lambda != +-1."""
        out = set()
        for _, e in self.eigen:
            out.update(base(t) for t, _ in e if t not in (PLUS, MINUS))
        return sorted(out)

    def as_dict(self) -> dict[SummandKey, dict[str, int]]:
        return {k: dict(e) for k, e in self.eigen}


def image_in_component_group(s: SemisimpleElement) -> SignCharacter:
    return SignCharacter.from_function(s.part.gp_keys, lambda k: (-1) ** s.r(MINUS, k))


@dataclass(frozen=True)
class EndoscopicDatum:
    plus: tuple[Optional[GroupForm], FormalParameter]
    minus: tuple[Optional[GroupForm], FormalParameter]
    gl_factors: tuple[tuple[str, FormalParameter], ...]
    twist_note: tuple[str, ...] = ()

    def groups(self) -> list:
        out = [self.plus[0], self.minus[0]]
        out += [GLFactor(p.dim) for _, p in self.gl_factors]
        return out

    def even_orthogonal(self) -> list[str]:
        return [
            name
            for name, (h, _) in (("plus", self.plus), ("minus", self.minus))
            if h is not None and h.family is Family.SO_EVEN
        ]


def _eigenspace(s: SemisimpleElement, tok: str) -> FormalParameter:
    part = s.part
    out = []
    for t in part.gp + part.bp:
        n = s.r(tok, t.key)
        if n:
            out.append(t.with_m(n))
    for rep, partner in part.nsd:
        n, n_inv = s.r(tok, rep.key), s.r(inverse(tok), rep.key)
        if n:
            out.append(rep.with_m(n))
        if n_inv:
            out.append(partner.with_m(n_inv))
    return FormalParameter(tuple(out))


def _flip_unitary(p: FormalParameter) -> FormalParameter:
    swap = {SdClass.CO: SdClass.CS, SdClass.CS: SdClass.CO}
    out = []
    for t in p:
        rho = Irrep(t.rho.label, t.rho.dim, swap.get(t.rho.sd, t.rho.sd))
        out.append(replace(t, rho=rho))
    return FormalParameter(tuple(out))


def _factor(g: GroupForm, p: FormalParameter, name: str, hint: Optional[Form], notes: list[str]):
    d = p.dim
    even_orth = (g.family is Family.SP and d % 2 == 0) or g.family is Family.SO_EVEN
    if hint is not None and not even_orth:
        raise ElementError(f"split hint supplied for the {name} factor, which is not even orthogonal")
    if d == 0:
        return None, p
    if g.family is Family.SP:
        if d % 2:
            notes.append(f"{name}: orthogonal dual SO_{d}; twist by eta = det(psi_{name})")
            return GroupForm.carrying(Family.SP, d), p
        notes.append(f"{name}: dual SO_{d} is even orthogonal; discriminant fixed by det(psi_{name})")
        return GroupForm.carrying(Family.SO_EVEN, d, hint or Form.SPLIT), p
    if g.family is Family.SO_ODD:
        return GroupForm.carrying(Family.SO_ODD, d), p
    if g.family is Family.SO_EVEN:
        if d % 2:
            raise ElementError("odd-dimensional eigenspace in the even orthogonal dual group")
        notes.append(f"{name}: discriminant fixed by det(psi_{name})")
        return GroupForm.carrying(Family.SO_EVEN, d, hint or Form.SPLIT), p
    h = GroupForm.u(d)
    if (g.param_dim - d) % 2:
        # a conjugate-self-dual character of the opposite sign moves the
        # summands to the good parity of U(d)
        notes.append(f"{name}: twisted by a conjugate-symplectic character")
        p = _flip_unitary(p)
    return h, p


def endoscopic_datum(
    psi: FormalParameter,
    g: GroupForm,
    s: SemisimpleElement,
    split_hints: Optional[Mapping[str, Form | str]] = None,
) -> EndoscopicDatum:
    part = validate_for_group(psi, g.quasi_split())
    if part != s.part:
        raise ElementError("element was built for a different parameter")
    hints = {k: Form(v) for k, v in (split_hints or {}).items()}
    if set(hints) - {"plus", "minus"}:
        raise ElementError("split hints are keyed by 'plus' and 'minus'")
    notes: list[str] = []
    plus = _factor(g, _eigenspace(s, PLUS), "plus", hints.get("plus"), notes)
    minus = _factor(g, _eigenspace(s, MINUS), "minus", hints.get("minus"), notes)
    gl = tuple((lam, _eigenspace(s, lam)) for lam in s.labels())
    gl = tuple((lam, p) for lam, p in gl if p.dim)
    total = plus[1].dim + minus[1].dim + 2 * sum(p.dim for _, p in gl)
    if total != psi.dim:
        raise AssertionError("endoscopic datum loses dimension")
    return EndoscopicDatum(plus, minus, gl, tuple(notes))


# eps^{M/MW} ---------------------------------------------------------------


def _anti_tempered_gp(psi: FormalParameter, g: GroupForm) -> GpPartition:
    if not psi.is_anti_tempered():
        raise ParameterError("parameter must be anti-tempered")
    return validate_for_group(psi, g.quasi_split())


def mw_character_closed(psi: FormalParameter, g: GroupForm) -> SignCharacter:
    part = _anti_tempered_gp(psi, g)
    m_rho: dict[str, int] = defaultdict(int)
    for t in part.gp:
        m_rho[t.rho.label] += t.m
    return SignCharacter.from_function(
        part.gp_keys, lambda k: (-1) ** (k.b * (m_rho[k.label] - 1))
    )


Index = tuple[SummandKey, int]


def _zeta(k: SummandKey) -> int:
    return 1 if k.a > k.b else -1


def _AB(k: SummandKey) -> tuple[Fraction, Fraction]:
    return Fraction(k.a + k.b, 2) - 1, _zeta(k) * Fraction(k.a - k.b, 2)


def default_order(part: GpPartition) -> dict[str, list[Index]]:
    order: dict[str, list[Index]] = defaultdict(list)
    for t in part.gp:
        order[t.rho.label] += [(t.key, c) for c in range(t.m)]
    for label in order:
        order[label].sort(key=lambda ix: (*_AB(ix[0]), ix[0], ix[1]))
    return dict(order)


def check_order(part: GpPartition, order: Mapping[str, Sequence[Index]]) -> None:
    expected = default_order(part)
    if set(order) != set(expected):
        raise ElementError("order does not cover the same representations")
    for label, seq in order.items():
        if sorted(seq) != sorted(expected[label]):
            raise ElementError(f"order for {label} is not a permutation of its indices")
        for i, (ki, _) in enumerate(seq):
            Ai, Bi = _AB(ki)
            for kj, _ in seq[i + 1:]:
                Aj, Bj = _AB(kj)
                if Ai > Aj and Bi > Bj and _zeta(ki) == _zeta(kj):
                    raise ElementError(f"order for {label} violates property (P)")


def mw_character_xu(
    psi: FormalParameter,
    g: GroupForm,
    order: Optional[Mapping[str, Sequence[Index]]] = None,
) -> SignCharacter:
    part = validate_for_group(psi, g.quasi_split())
    if not psi.is_anti_tempered():
        warnings.warn("Xu's recipe on a general parameter: no closed form to compare with", GeneralParameterWarning)
    if order is None:
        order = default_order(part)
    else:
        check_order(part, order)

    values: dict[SummandKey, set[int]] = defaultdict(set)
    for seq in order.values():
        odd = [k.a % 2 == 1 and k.b % 2 == 1 for k, _ in seq]
        for i, (k, _) in enumerate(seq):
            if not odd[i]:
                v = 1
            else:
                m = sum(1 for j in range(i + 1, len(seq)) if odd[j] and _zeta(seq[j][0]) == -1)
                if _zeta(k) == 1:
                    v = (-1) ** m
                else:
                    n = sum(1 for j in range(i) if odd[j])
                    v = (-1) ** (m + n)
            values[k].add(v)
    for k, vs in values.items():
        if len(vs) != 1:
            raise ElementError(f"copies of {k} disagree; the recipe is ill-defined for this order")
    return SignCharacter.from_function(part.gp_keys, lambda k: next(iter(values[k])))


# Endoscopic sign ---------------------------------------------------------


def _product(psi: FormalParameter, g: GroupForm, datum: EndoscopicDatum) -> int:
    beta_prime = 1
    for h, p in (datum.plus, datum.minus):
        if h is not None:
            beta_prime *= beta_phi_psi(p, h)
    for _, p in datum.gl_factors:
        beta_prime *= beta_GL(arthur_to_L(p))
    return kottwitz_sign(g) * alpha(g, datum.groups()) * beta_phi_psi(psi, g) * beta_prime


def lemma61_product(
    psi: FormalParameter,
    g: GroupForm,
    s: SemisimpleElement,
    hints: Optional[Mapping[str, Form | str]] = None,
) -> int:
    """e(G) alpha(G, G') beta(phi_psi) beta(phi_psi') from the endoscopic datum."""
    if not psi.is_anti_tempered():
        raise ParameterError("parameter must be anti-tempered")
    datum = endoscopic_datum(psi, g, s, hints)
    value = _product(psi, g, datum)
    names = datum.even_orthogonal()
    for forms in product((Form.SPLIT, Form.QS), repeat=len(names)):
        other = endoscopic_datum(psi, g, s, dict(zip(names, forms)))
        if _product(psi, g, other) != value:
            raise AssertionError("endoscopic sign product depends on the split hints")
    return value


def witt_ranks(datum: EndoscopicDatum) -> dict[str, int]:
    out = {}
    for name, (h, _) in (("plus", datum.plus), ("minus", datum.minus)):
        out[name] = witt_rank(h) if h is not None else 0
    return out
