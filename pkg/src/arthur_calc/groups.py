"""Classical groups up to pure inner form.

A group is recorded by its family, its rank parameter n and a form flag.
Only these three pieces of data feed the sign formulas, so the underlying
quadratic or hermitian space is never modelled.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum


class Family(str, Enum):
    SP = "Sp"
    SO_ODD = "SOodd"
    SO_EVEN = "SOeven"
    U = "U"


class Form(str, Enum):
    SPLIT = "split"
    QS = "qs"  # quasi-split but not split, even orthogonal only
    INNER = "inner"


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupForm:
    """Sp(2n), SO(2n+1), SO(2n) or U(N) with N = 2n or 2n+1.

    ``odd`` is only meaningful for the unitary family.
    """

    family: Family
    n: int
    form: Form = Form.SPLIT
    odd: bool = False

    def __post_init__(self) -> None:
        fam, n, form = Family(self.family), self.n, Form(self.form)
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "form", form)
        if not isinstance(n, int) or n < 0:
            raise GroupError(f"rank parameter must be a nonnegative integer, got {n!r}")
        if fam is not Family.U and self.odd:
            object.__setattr__(self, "odd", False)
        if fam is Family.SP and form is not Form.SPLIT:
            raise GroupError("Sp has no pure inner form other than itself")
        if fam is Family.SO_ODD:
            if form is Form.QS:
                raise GroupError("odd orthogonal groups are split or inner")
            if form is Form.INNER and n < 1:
                raise GroupError("SO(1) has no inner form")
        if fam is Family.SO_EVEN:
            if form is Form.QS and n < 1:
                raise GroupError("SO(0) has no quasi-split non-split form")
            if form is Form.INNER and n < 2:
                raise GroupError("inner forms of SO(2n) need n >= 2")
        if fam is Family.U:
            if form is Form.QS:
                raise GroupError("unitary groups use 'split' for the quasi-split form")
            if form is Form.INNER and self.odd:
                # both hermitian spaces of odd dimension give isomorphic groups
                object.__setattr__(self, "form", Form.SPLIT)
            elif form is Form.INNER and n < 1:
                raise GroupError("U(0) has no inner form")

    # constructors -------------------------------------------------------

    @classmethod
    def sp(cls, dim: int) -> GroupForm:
        if dim % 2:
            raise GroupError(f"Sp({dim}) needs an even dimension")
        return cls(Family.SP, dim // 2)

    @classmethod
    def so(cls, dim: int, form: str | Form = Form.SPLIT) -> GroupForm:
        fam = Family.SO_ODD if dim % 2 else Family.SO_EVEN
        return cls(fam, dim // 2, Form(form))

    @classmethod
    def u(cls, dim: int, form: str | Form = Form.SPLIT) -> GroupForm:
        return cls(Family.U, dim // 2, Form(form), odd=bool(dim % 2))

    @classmethod
    def carrying(cls, family: Family, param_dim: int, form: Form = Form.SPLIT) -> GroupForm:
        """The group of the given family whose parameters have dimension ``param_dim``."""
        family = Family(family)
        if family is Family.SP:
            if param_dim % 2 == 0:
                raise GroupError("parameters of Sp have odd dimension")
            return cls(family, (param_dim - 1) // 2, form)
        if family in (Family.SO_ODD, Family.SO_EVEN):
            if param_dim % 2:
                raise GroupError("parameters of orthogonal groups have even dimension")
            return cls(family, param_dim // 2, form)
        return cls.u(param_dim, form)

    # invariants ---------------------------------------------------------

    @property
    def space_dim(self) -> int:
        if self.family is Family.SO_ODD or (self.family is Family.U and self.odd):
            return 2 * self.n + 1
        return 2 * self.n

    @property
    def param_dim(self) -> int:
        """Dimension of the standard representation of the dual group."""
        if self.family is Family.SP:
            return 2 * self.n + 1
        if self.family is Family.SO_ODD:
            return 2 * self.n
        return self.space_dim

    @property
    def eps_hat(self) -> int:
        """Sign of the bilinear form preserved by the dual group's standard representation."""
        if self.family is Family.SO_ODD:
            return -1
        if self.family is Family.U:
            return 1 if self.odd else -1
        return 1

    @property
    def is_unitary(self) -> bool:
        return self.family is Family.U

    @property
    def is_quasi_split(self) -> bool:
        return self.form is not Form.INNER

    def quasi_split(self) -> GroupForm:
        if self.form is Form.INNER:
            return replace(self, form=Form.SPLIT)
        return self

    def reduced(self, k: int) -> GroupForm:
        """Same family and form flag, rank parameter lowered by ``k``."""
        return replace(self, n=self.n - k)

    def __str__(self) -> str:
        if self.family is Family.SP:
            return f"Sp({self.space_dim})"
        name = "U" if self.family is Family.U else "SO"
        return f"{name}({self.space_dim},{self.form.value})"


def witt_rank(g: GroupForm) -> int:
    n = g.n
    if g.form is Form.SPLIT:
        r = n
    elif g.form is Form.QS:
        r = n - 1
    elif g.family is Family.SO_EVEN:
        r = n - 2
    else:
        r = n - 1
    if r < 0:
        raise GroupError(f"{g} has negative Witt rank")
    return r


def kottwitz_sign(g: GroupForm) -> int:
    return (-1) ** (witt_rank(g.quasi_split()) - witt_rank(g))


def chi_v(g: GroupForm) -> int:
    """Value of the central character attached to the pure inner form at -1."""
    return -1 if g.form is Form.INNER else 1
