"""Component groups as sign vectors on good-parity summands."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from .groups import Family, GroupForm, chi_v
from .params import GpPartition, ParameterError, SummandKey


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class SignCharacter:
    """A function from good-parity summand keys to +1/-1.

    Used both for elements of the component group and for its characters.
    """

    keys: tuple[SummandKey, ...]
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.keys) != len(self.values):
            raise DomainError("keys and values differ in length")
        if any(v not in (1, -1) for v in self.values):
            raise DomainError("values must be +1 or -1")

    @classmethod
    def trivial(cls, keys: Iterable[SummandKey]) -> SignCharacter:
        keys = tuple(keys)
        return cls(keys, (1,) * len(keys))

    @classmethod
    def from_function(cls, keys: Iterable[SummandKey], f: Callable[[SummandKey], int]) -> SignCharacter:
        keys = tuple(keys)
        return cls(keys, tuple(f(k) for k in keys))

    def __getitem__(self, key: SummandKey) -> int:
        return self.values[self.keys.index(key)]

    def items(self):
        return zip(self.keys, self.values)

    def _check(self, other: SignCharacter) -> None:
        if self.keys != other.keys:
            raise DomainError("sign characters live on different domains")

    def __mul__(self, other: SignCharacter) -> SignCharacter:
        self._check(other)
        return SignCharacter(self.keys, tuple(u * v for u, v in zip(self.values, other.values)))

    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)

    def swapped(self) -> SignCharacter:
        """Transport along psi -> hat(psi), which swaps a and b in every key."""
        pairs = sorted((k.swapped(), v) for k, v in self.items())
        return SignCharacter(tuple(k for k, _ in pairs), tuple(v for _, v in pairs))

    def restrict(self, keys: Iterable[SummandKey]) -> SignCharacter:
        keys = tuple(keys)
        return SignCharacter(keys, tuple(self[k] for k in keys))

    def __str__(self) -> str:
        return ",".join("+" if v > 0 else "-" for v in self.values)


@dataclass(frozen=True)
class ComponentGroupInfo:
    keys: tuple[SummandKey, ...]
    mults: tuple[int, ...]
    unit_dims: tuple[int, ...]
    is_unitary_convention: bool
    e0: SignCharacter
    e_psi: SignCharacter
    eps0: SignCharacter  # the determinant character

    @property
    def gp_count(self) -> int:
        return len(self.keys)

    @property
    def order_C(self) -> int:
        return 2 ** len(self.keys)

    @property
    def det_parities(self) -> tuple[int, ...]:
        return tuple(d % 2 for d in self.unit_dims)

    @property
    def dim_parity(self) -> int:
        """Parity of dim M; bp and nsd parts always contribute evenly."""
        return sum(m * d for m, d in zip(self.mults, self.unit_dims)) % 2

    def det(self, e: SignCharacter) -> int:
        out = 1
        for v, d in zip(e.values, self.unit_dims):
            out *= v ** d
        return out


def component_info(part: GpPartition, g: GroupForm) -> ComponentGroupInfo:
    keys = part.gp_keys
    mults = tuple(s.m for s in part.gp)
    bs = tuple(s.b for s in part.gp)
    dims = tuple(s.unit_dim for s in part.gp)
    return ComponentGroupInfo(
        keys=keys,
        mults=mults,
        unit_dims=dims,
        is_unitary_convention=g.family is Family.U,
        e0=SignCharacter(keys, tuple((-1) ** m for m in mults)),
        e_psi=SignCharacter(keys, tuple((-1) ** ((b - 1) * m) for b, m in zip(bs, mults))),
        eps0=SignCharacter(keys, tuple((-1) ** d for d in dims)),
    )


def pair(eps: SignCharacter, e: SignCharacter) -> int:
    eps._check(e)
    out = 1
    for u, v in zip(eps.values, e.values):
        if u == -1 and v == -1:
            out = -out
    return out


def eval_at_s_psi(eps: SignCharacter, info: ComponentGroupInfo) -> int:
    if eps.keys != info.keys:
        raise DomainError("character and component group differ in domain")
    out = 1
    for k, v, m in zip(info.keys, eps.values, info.mults):
        out *= v ** (m * (k.b - 1))
    if out != pair(eps, info.e_psi):
        raise AssertionError("eval_at_s_psi disagrees with the pairing against e_psi")
    return out


def all_characters(keys: tuple[SummandKey, ...]) -> list[SignCharacter]:
    """Every sign vector, in lexicographic order with + before -."""
    return [SignCharacter(keys, vals) for vals in product((1, -1), repeat=len(keys))]


def canonical_character(eps: SignCharacter, info: ComponentGroupInfo) -> SignCharacter:
    """Representative of the class of ``eps`` modulo the determinant character.

    Under the unitary convention there is no quotient and ``eps`` is returned.
    """
    if info.is_unitary_convention:
        return eps
    other = eps * info.eps0
    if info.dim_parity:
        return eps if pair(eps, info.e0) == 1 else other
    rank = lambda c: tuple(v == -1 for v in c.values)
    return min(eps, other, key=rank)


def characters_for_form(info: ComponentGroupInfo, g: GroupForm) -> list[SignCharacter]:
    target = chi_v(g)
    out = []
    seen = set()
    for eps in all_characters(info.keys):
        rep = canonical_character(eps, info)
        if rep in seen:
            continue
        seen.add(rep)
        if pair(rep, info.e0) == target:
            out.append(rep)
    return out


def is_admissible(eps: SignCharacter, info: ComponentGroupInfo, g: GroupForm) -> bool:
    return canonical_character(eps, info) in characters_for_form(info, g)


def restrict_to_L_packet_domain(eps: SignCharacter) -> SignCharacter | None:
    if any(k.a != 1 for k in eps.keys):
        raise ParameterError("restriction to the L-packet domain needs an anti-tempered parameter")
    if any(v == -1 and k.b % 2 == 0 for k, v in eps.items()):
        return None
    return eps
