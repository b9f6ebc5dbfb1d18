"""Seeded generators of valid random instances for the property suites."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .component_group import SignCharacter, characters_for_form, component_info
from .endoscopy import MINUS, PLUS, SemisimpleElement
from .groups import Family, Form, GroupError, GroupForm
from .params import (
    FormalParameter,
    GpPartition,
    Irrep,
    Kind,
    ParameterError,
    SdClass,
    Summand,
    arthur_to_L,
    validate_for_group,
)

FLAVORS = ("anti_tempered_gp", "tempered_label", "generic_datum", "element")
_TRIES = 500


class NoInstance(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    count: int = 100
    bounds: tuple[int, int, int, int, int] = (30, 6, 3, 7, 7)

    def __post_init__(self) -> None:
        if len(self.bounds) != 5 or any(b < 1 for b in self.bounds):
            raise ValueError("bounds are five positive integers")
        if self.count < 0:
            raise ValueError("count must be nonnegative")

    @property
    def max_dim(self) -> int:
        return self.bounds[0]

    @property
    def max_gp(self) -> int:
        return self.bounds[1]

    @property
    def max_rho_dim(self) -> int:
        return self.bounds[2]

    @property
    def max_a(self) -> int:
        return self.bounds[3]

    @property
    def max_b(self) -> int:
        return self.bounds[4]


def rng_for(cfg: SuiteConfig, flavor: str, index: int) -> random.Random:
    return random.Random(f"{cfg.seed}/{flavor}/{index}")


# parameters ----------------------------------------------------------------


@dataclass
class _Shape:
    """Which SL2 carries the sizes, and which extra pieces are allowed."""

    slot: str  # "a" (tempered) or "b" (anti-tempered)
    ngp: bool = False
    discrete: bool = False
    extra: list = field(default_factory=list)


def _irrep(rng: random.Random, label: str, cfg: SuiteConfig, unitary: bool) -> Irrep:
    d = rng.randint(1, cfg.max_rho_dim)
    if unitary:
        return Irrep(label, d, rng.choice((SdClass.CO, SdClass.CS)))
    if d % 2 == 0 and rng.random() < 0.5:
        return Irrep(label, d, SdClass.S)
    return Irrep(label, d, SdClass.O)


def _sized(rho: Irrep, x: Fraction, size: int, slot: str, m: int) -> Summand:
    a, b = (size, 1) if slot == "a" else (1, size)
    return Summand(rho, x, a, b, m)


def _sizes_with_parity(parity: int, top: int) -> list[int]:
    return [n for n in range(1, top + 1) if n % 2 == parity]


def random_parameter(
    rng: random.Random, cfg: SuiteConfig, family: Family, eps_hat: int, shape: _Shape
) -> Optional[FormalParameter]:
    unitary = family is Family.U
    top = cfg.max_a if shape.slot == "a" else cfg.max_b
    summands: list[Summand] = []
    n_gp = 0
    for j in range(rng.randint(1, 3)):
        rho = _irrep(rng, f"r{j}", cfg, unitary)
        # rho x S_n has sign rho.sign * (-1)^(n-1); good parity fixes n mod 2
        parity = 1 if rho.sign == eps_hat else 0
        choices = _sizes_with_parity(parity, top)
        if not choices:
            continue
        k = rng.randint(1, min(3, len(choices), cfg.max_gp - n_gp) or 1)
        if n_gp >= cfg.max_gp:
            break
        for n in rng.sample(choices, k):
            m = 1 if shape.discrete else rng.choice((1, 1, 1, 2, 3))
            summands.append(_sized(rho, Fraction(0), n, shape.slot, m))
            n_gp += 1
    if shape.ngp and rng.random() < 0.6:
        for j in range(rng.randint(1, 2)):
            kind = rng.random()
            if kind < 0.4:  # bad parity, even multiplicity
                rho = _irrep(rng, f"q{j}", cfg, unitary)
                parity = 0 if rho.sign == eps_hat else 1
                choices = _sizes_with_parity(parity, min(top, 3))
                if choices:
                    summands.append(_sized(rho, Fraction(0), rng.choice(choices), shape.slot, 2))
            elif kind < 0.7:  # a non-self-dual rho and its dual
                rho = Irrep(f"n{j}", rng.randint(1, cfg.max_rho_dim), SdClass.N)
                s = _sized(rho, Fraction(0), rng.randint(1, min(top, 3)), shape.slot, rng.randint(1, 2))
                summands += [s, s.partner()]
            else:  # a self-dual rho with a small real twist
                rho = _irrep(rng, f"t{j}", cfg, unitary)
                x = rng.choice((Fraction(1, 4), Fraction(1, 3), Fraction(1, 6)))
                s = _sized(rho, x, rng.randint(1, min(top, 3)), shape.slot, rng.randint(1, 2))
                summands += [s, s.partner()]
    p = FormalParameter(tuple(summands))
    if p.dim == 0 or p.dim > cfg.max_dim:
        return None
    return p


def _fits(family: Family, eps_hat: int, dim: int) -> bool:
    if family is Family.SP:
        return dim % 2 == 1
    if family is Family.U:
        return (1 if dim % 2 else -1) == eps_hat
    return dim % 2 == 0


def random_form(rng: random.Random, family: Family, dim: int, quasi_split: bool = False) -> GroupForm:
    forms = [Form.SPLIT]
    if not quasi_split:
        forms.append(Form.INNER)
    if family is Family.SO_EVEN:
        forms.append(Form.QS)
    rng.shuffle(forms)
    for f in forms:
        try:
            return GroupForm.carrying(family, dim, f)
        except GroupError:
            continue
    raise NoInstance(f"no form of {family.value} for dimension {dim}")


def _family_and_sign(rng: random.Random) -> tuple[Family, int]:
    family = rng.choice(list(Family))
    if family is Family.SO_ODD:
        return family, -1
    if family is Family.U:
        return family, rng.choice((1, -1))
    return family, 1


def random_group_parameter(
    rng: random.Random, cfg: SuiteConfig, shape: _Shape, quasi_split: bool = False
) -> tuple[FormalParameter, GroupForm]:
    for _ in range(_TRIES):
        family, eps_hat = _family_and_sign(rng)
        p = random_parameter(rng, cfg, family, eps_hat, shape)
        if p is None or not _fits(family, eps_hat, p.dim):
            continue
        g = random_form(rng, family, p.dim, quasi_split)
        try:
            validate_for_group(p, g)
        except ParameterError:
            continue
        return p, g
    raise NoInstance("bounds admit no parameter of the requested shape")


def anti_tempered(rng: random.Random, cfg: SuiteConfig, ngp: bool = False):
    return random_group_parameter(rng, cfg, _Shape("b", ngp=ngp))


def anti_tempered_repeated(rng: random.Random, cfg: SuiteConfig):
    """Anti-tempered good-parity parameter with some multiplicity above one."""
    for _ in range(_TRIES):
        psi, g = anti_tempered(rng, cfg)
        if any(s.m > 1 for s in psi):
            return psi, g
    raise NoInstance("bounds admit no repeated summand")


def tempered(rng: random.Random, cfg: SuiteConfig, ngp: bool = False, discrete: bool = False, quasi_split=False):
    return random_group_parameter(rng, cfg, _Shape("a", ngp=ngp, discrete=discrete), quasi_split)


# labels ------------------------------------------------------------------


def random_label(rng: random.Random, cfg: SuiteConfig, discrete: Optional[bool] = None):
    from .packets import LabelError, PacketLabel, UnrealizableLabel, beta_rep

    for _ in range(_TRIES):
        disc = rng.random() < 0.4 if discrete is None else discrete
        phi, g = tempered(rng, cfg, ngp=not disc, discrete=disc)
        info = component_info(validate_for_group(phi, g.quasi_split()), g)
        chars = characters_for_form(info, g)
        if not chars:
            continue
        try:
            label = PacketLabel(phi, rng.choice(chars), g)
        except LabelError:
            continue
        if g.family is Family.SO_EVEN and g.form is not Form.SPLIT:
            # discriminants are not modelled: some labels here need a larger
            # split rank than the group has and describe nothing
            try:
                beta_rep(label)
            except UnrealizableLabel:
                continue
        return label
    raise NoInstance("bounds admit no packet label")


# elements ----------------------------------------------------------------


def _split_self_dual(rng: random.Random, m: int, even: bool, parity: Optional[int] = None) -> dict[str, int]:
    """Random eigenvalue multiset on an orthogonal (or symplectic) factor."""
    for _ in range(_TRIES):
        pairs = rng.randint(0, m // 2)
        rest = m - 2 * pairs
        neg = rng.randint(0, rest)
        pos = rest - neg
        if even and (neg % 2 or pos % 2):
            continue
        if parity is not None and neg % 2 != parity:
            continue
        out = {PLUS: pos, MINUS: neg}
        if pairs:
            lam = rng.choice(("L", "M"))
            k = rng.randint(0, pairs)
            out[lam] = out.get(lam, 0) + k
            out[lam + "inv"] = out.get(lam + "inv", 0) + k
            if pairs - k:
                out["M" if lam == "L" else "L"] = pairs - k
                out[("M" if lam == "L" else "L") + "inv"] = pairs - k
        return {t: n for t, n in out.items() if n}
    raise NoInstance("no eigenvalue split with the requested parity")


def random_element(
    rng: random.Random, part: GpPartition, image: Optional[SignCharacter] = None
) -> SemisimpleElement:
    for _ in range(_TRIES):
        eig = {}
        for s in part.gp:
            parity = None if image is None else (0 if image[s.key] == 1 else 1)
            eig[s.key] = _split_self_dual(rng, s.m, False, parity)
        for s in part.bp:
            eig[s.key] = _split_self_dual(rng, s.m, True)
        for s, _ in part.nsd:
            toks = [rng.choice((PLUS, MINUS, "L", "Linv", "M")) for _ in range(s.m)]
            eig[s.key] = {t: toks.count(t) for t in set(toks)}
        try:
            return SemisimpleElement.build(part, eig)
        except ValueError:
            continue
    raise NoInstance("no element with the requested image")


def random_element_instance(rng: random.Random, cfg: SuiteConfig, ngp: bool = True):
    psi, g = anti_tempered(rng, cfg, ngp=ngp and rng.random() < 0.3)
    part = validate_for_group(psi, g.quasi_split())
    return psi, g, random_element(rng, part)


# generic data ------------------------------------------------------------


def random_generic(rng: random.Random, cfg: SuiteConfig):
    from .generic_dual import GenericDatum

    for _ in range(_TRIES):
        phi, g = tempered(rng, cfg, quasi_split=True)
        gl = []
        for j in range(rng.randint(0, 2)):
            out = []
            for k in range(rng.randint(1, 2)):
                allowed = (SdClass.CO, SdClass.CS, SdClass.N) if g.family is Family.U else (SdClass.O, SdClass.S, SdClass.N)
                d, sd = rng.randint(1, cfg.max_rho_dim), rng.choice(allowed)
                if sd is SdClass.S and d % 2:
                    sd = SdClass.O
                rho = Irrep(f"g{j}{k}", d, sd)
                x = Fraction(rng.randint(-6, 6), rng.choice((1, 2, 4)))
                out.append(Summand(rho, x, rng.randint(1, 3), 1, 1))
            gl.append(FormalParameter(tuple(out), Kind.L))
        total = phi.dim + 2 * sum(t.dim for t in gl)
        if total > cfg.max_dim:
            continue
        try:
            big = g.reduced(-sum(t.dim for t in gl))
            return GenericDatum.build(big, gl, phi)
        except (ValueError, GroupError):
            continue
    raise NoInstance("bounds admit no generic datum")


def random_L_split(rng: random.Random, cfg: SuiteConfig):
    """(p, g, p0, g0, p1) with p = p0 + p1 + dual(p1) as L-parameters."""
    for _ in range(_TRIES):
        psi, g = anti_tempered(rng, cfg, ngp=True)
        p = arthur_to_L(psi)
        part = validate_for_group(p, g.quasi_split())
        moved = []
        for s in part.gp + part.bp:
            k = rng.randint(0, s.m // 2)
            if k:
                moved.append(s.with_m(k))
        for s, _ in part.nsd:
            k = rng.randint(0, s.m)
            if k:
                moved.append(s.with_m(k))
        p1 = FormalParameter(tuple(moved), Kind.L)
        removed = {**{s.key: s.m for s in p1}}
        for s in p1.dual():
            removed[s.key] = removed.get(s.key, 0) + s.m
        rest = [s.with_m(s.m - removed.get(s.key, 0)) for s in p if s.m > removed.get(s.key, 0)]
        p0 = FormalParameter(tuple(rest), Kind.L)
        try:
            g0 = g.quasi_split().reduced(p1.dim)
            validate_for_group(p0, g0)
        except (ValueError, GroupError):
            continue
        return p, g, p0, g0, p1
    raise NoInstance("no split found")


def generate_random_instance(cfg: SuiteConfig, flavor: str, index: int = 0):
    rng = rng_for(cfg, flavor, index)
    if flavor == "anti_tempered_gp":
        return anti_tempered(rng, cfg)
    if flavor == "tempered_label":
        return random_label(rng, cfg)
    if flavor == "generic_datum":
        return random_generic(rng, cfg)
    if flavor == "element":
        return random_element_instance(rng, cfg, ngp=False)
    raise ValueError(f"unknown flavor {flavor!r}")


def random_admissible_order(rng: random.Random, part: GpPartition):
    """A uniformly-chosen linear extension of the constraints of property (P)."""
    from .endoscopy import _AB, _zeta, default_order

    out = {}
    for label, seq in default_order(part).items():
        left = list(seq)
        chosen = []
        while left:
            # j must precede i when A_i > A_j, B_i > B_j and the zetas agree
            free = [
                i for i in left
                if not any(
                    j is not i and _zeta(i[0]) == _zeta(j[0])
                    and _AB(i[0])[0] > _AB(j[0])[0] and _AB(i[0])[1] > _AB(j[0])[1]
                    for j in left
                )
            ]
            pick = rng.choice(free)
            chosen.append(pick)
            left.remove(pick)
        out[label] = chosen
    return out


def distinct_admissible_order(rng: random.Random, part: GpPartition):
    """An admissible order different from the default one.

    Swaps two copies of a repeated summand when the random draw happens to
    reproduce the default order; raises when every order coincides.
    """
    from .endoscopy import default_order

    base = default_order(part)
    order = random_admissible_order(rng, part)
    if order != base:
        return order
    for label, seq in base.items():
        for i in range(len(seq) - 1):
            if seq[i][0] == seq[i + 1][0]:
                seq = list(seq)
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                return {**base, label: seq}
    raise NoInstance("the parameter has a single admissible order")
