"""Formal parameters: multisets of rho x S_a x S_b with exponent shifts."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Iterable, NamedTuple

from .groups import Family, GroupForm, witt_rank

HALF = Fraction(1, 2)
DUAL_SUFFIX = "_dual"


class ParameterError(ValueError):
    pass


class SdClass(str, Enum):
    O = "O"
    S = "S"
    CO = "CO"
    CS = "CS"
    N = "N"


_SIGN = {SdClass.O: 1, SdClass.CO: 1, SdClass.S: -1, SdClass.CS: -1}
_LEGAL_FIELD = {SdClass.O, SdClass.S, SdClass.N}
_LEGAL_UNITARY = {SdClass.CO, SdClass.CS, SdClass.N}


class Kind(str, Enum):
    ARTHUR = "arthur"
    L = "L"


def dual_label(label: str) -> str:
    if label.endswith(DUAL_SUFFIX):
        return label[: -len(DUAL_SUFFIX)]
    return label + DUAL_SUFFIX


@dataclass(frozen=True, order=True)
class Irrep:
    label: str
    dim: int
    sd: SdClass

    def __post_init__(self) -> None:
        object.__setattr__(self, "sd", SdClass(self.sd))
        if self.dim < 1:
            raise ParameterError(f"{self.label}: dimension must be positive")
        if self.sd is SdClass.S and self.dim % 2:
            raise ParameterError(f"{self.label}: a symplectic representation has even dimension")

    @property
    def sign(self) -> int | None:
        return _SIGN.get(self.sd)

    def dual(self) -> Irrep:
        if self.sd is SdClass.N:
            return Irrep(dual_label(self.label), self.dim, SdClass.N)
        return self


class SummandKey(NamedTuple):
    label: str
    x: Fraction
    a: int
    b: int

    def swapped(self) -> SummandKey:
        return SummandKey(self.label, self.x, self.b, self.a)


@dataclass(frozen=True)
class Summand:
    rho: Irrep
    x: Fraction
    a: int
    b: int
    m: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        for name in ("a", "b", "m"):
            if getattr(self, name) < 1:
                raise ParameterError(f"{name} must be positive in {self.rho.label}")

    @property
    def key(self) -> SummandKey:
        return SummandKey(self.rho.label, self.x, self.a, self.b)

    @property
    def unit_dim(self) -> int:
        return self.rho.dim * self.a * self.b

    @property
    def dim(self) -> int:
        return self.unit_dim * self.m

    @property
    def sign(self) -> int | None:
        """Sign of the invariant form on rho x S_a x S_b, or None if not self-dual."""
        if self.x != 0 or self.rho.sign is None:
            return None
        return self.rho.sign * (-1) ** (self.a + self.b)

    def partner(self) -> Summand:
        return Summand(self.rho.dual(), -self.x, self.a, self.b, self.m)

    def with_m(self, m: int) -> Summand:
        return replace(self, m=m)

    def sort_key(self) -> tuple:
        return (self.rho.label, self.x, self.a, self.b)


@dataclass(frozen=True)
class FormalParameter:
    """A merged, canonically ordered multiset of summands."""

    summands: tuple[Summand, ...] = ()
    kind: Kind = Kind.ARTHUR

    def __post_init__(self) -> None:
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        irreps: dict[str, Irrep] = {}
        mult: Counter = Counter()
        for s in self.summands:
            seen = irreps.setdefault(s.rho.label, s.rho)
            if seen != s.rho:
                raise ParameterError(f"label {s.rho.label!r} used with different attributes")
            mult[s.key] += s.m
        merged = tuple(
            Summand(irreps[k.label], k.x, k.a, k.b, m)
            for k, m in sorted(mult.items(), key=lambda kv: tuple(kv[0]))
        )
        object.__setattr__(self, "summands", merged)
        for s in merged:
            if kind is Kind.ARTHUR and abs(s.x) >= HALF:
                raise ParameterError(f"|x| >= 1/2 in {s.rho.label}; not an Arthur parameter")
            if kind is Kind.L and s.b != 1:
                raise ParameterError("L-parameters have b = 1 throughout")

    @classmethod
    def of(cls, summands: Iterable[Summand], kind: Kind | str = Kind.ARTHUR) -> FormalParameter:
        return cls(tuple(summands), Kind(kind))

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.summands)

    @property
    def count(self) -> int:
        """Number of irreducible constituents counted with multiplicity."""
        return sum(s.m for s in self.summands)

    def is_tempered(self) -> bool:
        return all(s.b == 1 for s in self.summands)

    def is_anti_tempered(self) -> bool:
        return all(s.a == 1 for s in self.summands)

    def __add__(self, other: FormalParameter) -> FormalParameter:
        return FormalParameter(self.summands + other.summands, self.kind)

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def dual(self) -> FormalParameter:
        return FormalParameter(tuple(s.partner() for s in self.summands), self.kind)

    def as_kind(self, kind: Kind | str) -> FormalParameter:
        return FormalParameter(self.summands, Kind(kind))

    def __str__(self) -> str:
        from .dsl import format_parameter

        return format_parameter(self)


@dataclass(frozen=True)
class GpPartition:
    gp: tuple[Summand, ...]
    bp: tuple[Summand, ...]
    nsd: tuple[tuple[Summand, Summand], ...]
    group: GroupForm = field(compare=False)

    @property
    def gp_keys(self) -> tuple[SummandKey, ...]:
        return tuple(s.key for s in self.gp)

    def gp_summand(self, key: SummandKey) -> Summand:
        for s in self.gp:
            if s.key == key:
                return s
        raise KeyError(key)


def _rep_first(s: Summand, t: Summand) -> bool:
    """Whether ``s`` is the stored representative of the pair {s, t}."""
    if s.x != t.x:
        return s.x > t.x
    return s.rho.label < t.rho.label


def validate_for_group(p: FormalParameter, g: GroupForm) -> GpPartition:
    legal = _LEGAL_UNITARY if g.family is Family.U else _LEGAL_FIELD
    for s in p:
        if p.kind is Kind.ARTHUR and abs(s.x) >= HALF:
            raise ParameterError(f"|x| >= 1/2 in {s.rho.label}")
        if s.rho.sd not in legal:
            raise ParameterError(f"class {s.rho.sd.value} of {s.rho.label} is not legal for {g}")
    gp, bp, loose = [], [], []
    for s in p:
        sign = s.sign
        if sign == g.eps_hat:
            gp.append(s)
        elif sign == -g.eps_hat:
            if s.m % 2:
                raise ParameterError(f"odd bp multiplicity for {s.rho.label}@S({s.a})xS({s.b})")
            bp.append(s)
        else:
            loose.append(s)
    by_key = {s.key: s for s in loose}
    pairs = []
    for s in loose:
        t = by_key.get(s.partner().key)
        if t is None or t.m != s.m or t.rho != s.rho.dual():
            raise ParameterError(f"unpaired nsd summand {s.rho.label}|{s.x}@S({s.a})xS({s.b})")
        if _rep_first(s, t):
            pairs.append((s, t))
    if p.dim != g.param_dim:
        raise ParameterError(f"dimension {p.dim} does not match {g} (needs {g.param_dim})")
    return GpPartition(tuple(gp), tuple(bp), tuple(pairs), g)


def hat(p: FormalParameter) -> FormalParameter:
    if p.kind is not Kind.ARTHUR:
        raise ParameterError("hat expects an Arthur-type parameter")
    return FormalParameter(tuple(replace(s, a=s.b, b=s.a) for s in p), Kind.ARTHUR)


def _expand(summands: Iterable[Summand], swap: bool) -> FormalParameter:
    out = []
    for s in summands:
        a, b = (s.b, s.a) if swap else (s.a, s.b)
        for k in range(b):
            out.append(Summand(s.rho, s.x + Fraction(b - 1, 2) - k, a, 1, s.m))
    return FormalParameter(tuple(out), Kind.L)


def arthur_to_L(p: FormalParameter) -> FormalParameter:
    """phi_psi: restrict the Arthur SL2 to its diagonal torus."""
    if p.kind is not Kind.ARTHUR:
        raise ParameterError("arthur_to_L expects an Arthur-type parameter")
    return _expand(p, swap=False)


def phi_of_hat(p: FormalParameter) -> FormalParameter:
    """L-parameter of the swapped parameter, for either kind.

    For a GL-parameter ``tau`` with large exponents this is the parameter of
    the dual of ``tau`` and skips the |x| < 1/2 check that ``hat`` enforces.
    """
    return _expand(p, swap=True)


def levi_rank(part: GpPartition) -> int:
    """GL-rank of the minimal Levi subgroup through which the parameter factors."""
    s = sum((t.m // 2) * t.unit_dim for t in part.gp)
    s += sum((t.m // 2) * t.unit_dim for t in part.bp)
    s += sum(t.m * t.unit_dim for t, _ in part.nsd)
    return s


def is_relevant(p: FormalParameter, g: GroupForm) -> bool:
    part = validate_for_group(p, g.quasi_split())
    return levi_rank(part) <= witt_rank(g)
