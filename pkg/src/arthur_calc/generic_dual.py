"""L-parameter of the Aubert-Zelevinsky dual of a generic representation.

A generic representation is given by its Langlands-style datum: generic GL
pieces tau_i induced against a generic tempered representation.  The dual's
parameter is obtained by swapping the two SL2's and restricting to the torus.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .groups import Family, Form, GroupForm
from .params import (
    HALF,
    FormalParameter,
    Irrep,
    Kind,
    ParameterError,
    Summand,
    arthur_to_L,
    hat,
    phi_of_hat,
    validate_for_group,
)
from .packets import PacketLabel


@dataclass(frozen=True)
class GenericDatum:
    gl_parts: tuple[FormalParameter, ...]
    temp_part: PacketLabel
    form: GroupForm

    def __post_init__(self) -> None:
        if not self.temp_part.eps.is_trivial():
            raise ParameterError("the tempered part of a generic datum carries the trivial character")
        if self.temp_part.part.bp or self.temp_part.part.nsd:
            raise ParameterError("the tempered part must have good parity")
        for tau in self.gl_parts:
            if tau.kind is not Kind.L:
                raise ParameterError("GL parts are L-parameters")
        validate_for_group(self.phi(), self.form.quasi_split())

    @classmethod
    def build(cls, form: GroupForm, gl_parts, phi_temp: FormalParameter) -> GenericDatum:
        gl_parts = tuple(gl_parts)
        k = sum(t.dim for t in gl_parts)
        temp = PacketLabel.trivial(phi_temp, form.reduced(k))
        return cls(gl_parts, temp, form)

    def phi(self) -> FormalParameter:
        """The L-parameter of the generic representation itself."""
        out = self.temp_part.phi.as_kind(Kind.L)
        for tau in self.gl_parts:
            out = out + tau + tau.dual()
        return out


def generic_dual_L(d: GenericDatum) -> FormalParameter:
    out = arthur_to_L(hat(d.temp_part.phi))
    for tau in d.gl_parts:
        t = phi_of_hat(tau)
        out = out + t + t.dual()
    if any(s.a != 1 for s in out):
        raise AssertionError("dual parameter kept a nontrivial Deligne SL2")
    validate_for_group(out, d.form.quasi_split())
    return out


def rests_on_working_hypothesis(form: GroupForm) -> bool:
    """Whether the chain moves for this family are only conjectural."""
    return not (form.family is Family.SP or (form.family is Family.SO_ODD and form.form is Form.SPLIT))


def _ladders(phi_gp: FormalParameter) -> dict[str, tuple[Irrep, int, dict[int, int]]]:
    """Per rho: (rho, parity of a, {i: m_{rho,i}}) with a = 2i or 2i+1."""
    if not phi_gp.is_tempered():
        raise ParameterError("expected a tempered parameter")
    out: dict[str, tuple[Irrep, int, dict[int, int]]] = {}
    for s in phi_gp:
        if s.x != 0 or s.rho.sign is None:
            raise ParameterError("expected a good-parity parameter")
        rho, parity, m = out.setdefault(s.rho.label, (s.rho, s.a % 2, {}))
        if s.a % 2 != parity:
            raise ParameterError(f"mixed parities of a for {s.rho.label}")
        m[s.a // 2] = s.m
    return out


def _partial_sums(m: dict[int, int]) -> tuple[int, dict[int, int]]:
    top = max(m)
    M, acc = {}, 0
    for i in range(top, -1, -1):
        acc += m.get(i, 0)
        M[i] = acc
    return top, M


def phi0_phi1_split(phi_gp: FormalParameter) -> tuple[FormalParameter, FormalParameter]:
    phi0, phi1 = [], []
    for rho, parity, m in _ladders(phi_gp).values():
        top, M = _partial_sums(m)
        if parity:
            phi0.append(Summand(rho, Fraction(0), 1, 1, M[0]))
            phi1 += [Summand(rho, Fraction(i), 1, 1, M[i]) for i in range(1, top + 1)]
        else:
            phi1 += [Summand(rho, i - HALF, 1, 1, M[i]) for i in range(1, top + 1)]
    return FormalParameter(tuple(phi0), Kind.L), FormalParameter(tuple(phi1), Kind.L)


@dataclass(frozen=True)
class StandardModuleShape:
    twists: tuple[tuple[Irrep, Fraction, int], ...]
    anchor: FormalParameter

    def reassemble(self) -> FormalParameter:
        out = list(self.anchor)
        for rho, e, m in self.twists:
            out += [Summand(rho, e, 1, 1, m), Summand(rho.dual(), -e, 1, 1, m)]
        return FormalParameter(tuple(out), Kind.L)

    def twist_multiset(self) -> Counter:
        return Counter({(rho.label, e): m for rho, e, m in self.twists})


def standard_module_shape(phi_gp: FormalParameter) -> StandardModuleShape:
    # The exponent closest to zero carries the smallest partial sum.
    twists = []
    for label, (rho, parity, m) in sorted(_ladders(phi_gp).items()):
        top, M = _partial_sums(m)
        if parity:
            twists += [(rho, Fraction(-top + i), M[top - i]) for i in range(0, top)]
        else:
            twists += [(rho, -top - HALF + i, M[top + 1 - i]) for i in range(1, top + 1)]
    phi0, _ = phi0_phi1_split(phi_gp)
    return StandardModuleShape(tuple(twists), phi0)


@dataclass(frozen=True)
class Peel:
    rho: Irrep
    exponent: Fraction
    m: int
    A: int


@dataclass(frozen=True)
class ChainResult:
    peels: tuple[Peel, ...]
    terminal: FormalParameter

    def twist_multiset(self) -> Counter:
        out: Counter = Counter()
        for p in self.peels:
            out[(p.rho.label, p.exponent)] += p.m
        return out


def generic_dual_chain(phi_gp: FormalParameter) -> ChainResult:
    _ladders(phi_gp)  # validates the input
    cur: dict[str, Counter] = defaultdict(Counter)
    rhos = {}
    for s in phi_gp:
        cur[s.rho.label][s.a] += s.m
        rhos[s.rho.label] = s.rho
    peels = []
    budget = phi_gp.dim
    while True:
        tops = [(max(c), label) for label, c in cur.items() if c and max(c) >= 2]
        if not tops:
            break
        A = max(t[0] for t in tops)
        label = min(l for a, l in tops if a == A)
        m = cur[label].pop(A)
        peels.append(Peel(rhos[label], Fraction(1 - A, 2), m, A))
        if A - 2 >= 1:
            cur[label][A - 2] += m
        budget -= 1
        if budget < 0:
            raise AssertionError("chain failed to terminate")
    terminal = [Summand(rhos[l], Fraction(0), a, 1, m) for l, c in cur.items() for a, m in c.items() if m]
    return ChainResult(tuple(peels), FormalParameter(tuple(terminal)))
