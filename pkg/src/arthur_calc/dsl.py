"""Text syntax for groups, parameters, characters and semisimple elements.

    input    := group ":" param
    group    := "Sp(" INT ")" | "SO(" INT "," form ")" | "U(" INT "," form ")"
    param    := summand ("+" summand)*
    summand  := IDENT "[" INT "," sd "]" ("|" RATIONAL)? "@S(" INT ")xS(" INT ")" ("^" INT)? ("+dual")?

Whitespace is ignored everywhere.  An empty param denotes the zero parameter.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .groups import Form, GroupError, GroupForm
from .params import (
    FormalParameter,
    Irrep,
    Kind,
    ParameterError,
    SdClass,
    Summand,
    SummandKey,
)

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_INT = re.compile(r"\d+")


class ParseError(ParameterError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at position {pos}" + (f": {text[pos:pos + 20]!r}" if text else ""))


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, lit: str) -> bool:
        self.ws()
        return self.text.startswith(lit, self.pos)

    def at_end(self) -> bool:
        self.ws()
        return self.pos >= len(self.text)

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.text, self.pos)

    def expect(self, lit: str) -> None:
        if not self.peek(lit):
            raise self.error(f"expected {lit!r}")
        self.pos += len(lit)

    def accept(self, lit: str) -> bool:
        if self.peek(lit):
            self.pos += len(lit)
            return True
        return False

    def regex(self, pattern: re.Pattern, what: str) -> str:
        self.ws()
        m = pattern.match(self.text, self.pos)
        if not m:
            raise self.error(f"expected {what}")
        self.pos = m.end()
        return m.group()

    def ident(self) -> str:
        return self.regex(_IDENT, "identifier")

    def integer(self, positive: bool = True) -> int:
        start = self.pos
        value = int(self.regex(_INT, "integer"))
        if positive and value < 1:
            raise ParseError("expected a positive integer", self.text, start)
        return value

    def rational(self) -> Fraction:
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        num = self.integer(positive=False)
        den = 1
        if self.accept("/"):
            den = self.integer()
        return sign * Fraction(num, den)


# groups ------------------------------------------------------------------


def _group(c: _Cursor) -> GroupForm:
    start = c.pos
    name = c.ident()
    c.expect("(")
    dim = c.integer(positive=False)
    form = Form.SPLIT
    if c.accept(","):
        word = c.ident()
        try:
            form = Form(word)
        except ValueError:
            raise c.error(f"unknown form {word!r}") from None
    c.expect(")")
    try:
        if name == "Sp":
            if form is not Form.SPLIT:
                raise GroupError("Sp takes no form flag")
            return GroupForm.sp(dim)
        if name == "SO":
            return GroupForm.so(dim, form)
        if name == "U":
            return GroupForm.u(dim, form)
    except GroupError as exc:
        raise ParseError(str(exc), c.text, start) from None
    raise ParseError(f"unknown group {name!r}", c.text, start)


def parse_group(text: str) -> GroupForm:
    c = _Cursor(text)
    g = _group(c)
    if not c.at_end():
        raise c.error("trailing input")
    return g


def format_group(g: GroupForm) -> str:
    return str(g)


# parameters --------------------------------------------------------------


def _summands(c: _Cursor, irreps: dict[str, Irrep]) -> list[Summand]:
    start = c.pos
    label = c.ident()
    c.expect("[")
    dim = c.integer()
    c.expect(",")
    sd_word = c.ident()
    try:
        sd = SdClass(sd_word)
    except ValueError:
        raise c.error(f"unknown self-duality class {sd_word!r}") from None
    c.expect("]")
    rho = Irrep(label, dim, sd)
    if irreps.setdefault(label, rho) != rho:
        raise ParseError(f"label {label!r} redeclared with different attributes", c.text, start)
    x = c.rational() if c.accept("|") else Fraction(0)
    c.expect("@")
    a, b = _sizes(c)
    m = c.integer() if c.accept("^") else 1
    out = [Summand(rho, x, a, b, m)]
    if _dual_flag(c):
        partner = out[0].partner()
        if partner.key == out[0].key:
            raise ParseError("+dual on a self-dual summand", c.text, start)
        if irreps.setdefault(partner.rho.label, partner.rho) != partner.rho:
            raise ParseError(f"label {partner.rho.label!r} clashes with its dual", c.text, start)
        out.append(partner)
    return out


def _dual_flag(c: _Cursor) -> bool:
    save = c.pos
    if c.accept("+"):
        c.ws()
        m = _IDENT.match(c.text, c.pos)
        if m and m.group() == "dual":
            c.pos = m.end()
            if not c.peek("["):
                return True
    c.pos = save
    return False


def _sizes(c: _Cursor) -> tuple[int, int]:
    c.expect("S")
    c.expect("(")
    a = c.integer()
    c.expect(")")
    c.expect("x")
    c.expect("S")
    c.expect("(")
    b = c.integer()
    c.expect(")")
    return a, b


def _param(c: _Cursor, kind: Kind) -> FormalParameter:
    irreps: dict[str, Irrep] = {}
    out: list[Summand] = []
    if c.at_end() or c.peek(";") or c.peek(","):
        return FormalParameter((), kind)
    out += _summands(c, irreps)
    while c.accept("+"):
        out += _summands(c, irreps)
    try:
        return FormalParameter(tuple(out), kind)
    except ParseError:
        raise
    except ParameterError as exc:
        raise ParseError(str(exc), c.text, c.pos) from None


def parse_parameter(text: str, kind: Kind | str = Kind.ARTHUR) -> FormalParameter:
    c = _Cursor(text)
    p = _param(c, Kind(kind))
    if not c.at_end():
        raise c.error("trailing input")
    return p


def parse(text: str, kind: Kind | str = Kind.ARTHUR) -> tuple[GroupForm, FormalParameter]:
    c = _Cursor(text)
    g = _group(c)
    c.expect(":")
    p = _param(c, Kind(kind))
    if not c.at_end():
        raise c.error("trailing input")
    return g, p


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def format_summand(s: Summand) -> str:
    out = f"{s.rho.label}[{s.rho.dim},{s.rho.sd.value}]"
    if s.x:
        out += f"|{format_rational(s.x)}"
    out += f"@S({s.a})xS({s.b})"
    if s.m > 1:
        out += f"^{s.m}"
    return out


def format_parameter(p: FormalParameter) -> str:
    return " + ".join(format_summand(s) for s in p)


def format_input(g: GroupForm, p: FormalParameter) -> str:
    return f"{g}: {format_parameter(p)}"


def format_key(k: SummandKey) -> str:
    shift = f"|{format_rational(k.x)}" if k.x else ""
    return f"{k.label}{shift}@S({k.a})xS({k.b})"


def _key(c: _Cursor) -> SummandKey:
    label = c.ident()
    if c.accept("["):  # tolerate a repeated [dim,sd] annotation
        c.integer()
        c.expect(",")
        c.ident()
        c.expect("]")
    x = c.rational() if c.accept("|") else Fraction(0)
    c.expect("@")
    a, b = _sizes(c)
    return SummandKey(label, x, a, b)


# characters --------------------------------------------------------------


def parse_sign_values(text: str, keys: tuple[SummandKey, ...]) -> tuple[int, ...]:
    """Sign values in the order of ``keys`` from a named or positional spec."""
    text = text.strip()
    if not text:
        if keys:
            raise ParseError("empty character on a nonempty domain", text, 0)
        return ()
    if "=" in text:
        c = _Cursor(text)
        got: dict[SummandKey, int] = {}
        while True:
            k = _key(c)
            c.expect("=")
            got[k] = _sign(c)
            if not c.accept(","):
                break
        if not c.at_end():
            raise c.error("trailing input")
        missing = set(keys) - set(got)
        extra = set(got) - set(keys)
        if missing or extra:
            names = ", ".join(format_key(k) for k in sorted(missing | extra))
            raise ParseError(f"character domain mismatch on {names}", text, 0)
        return tuple(got[k] for k in keys)
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != len(keys):
        raise ParseError(f"expected {len(keys)} signs, got {len(parts)}", text, 0)
    values = []
    for t in parts:
        c = _Cursor(t)
        values.append(_sign(c))
        if not c.at_end():
            raise c.error("bad sign")
    return tuple(values)


def _sign(c: _Cursor) -> int:
    if c.accept("+"):
        c.accept("1")
        return 1
    if c.accept("-"):
        c.accept("1")
        return -1
    if c.accept("1"):
        return 1
    raise c.error("expected a sign")


def format_sign(v: int) -> str:
    return "+" if v > 0 else "-"


def format_signs(values) -> str:
    return ",".join(format_sign(v) for v in values)


# semisimple elements -----------------------------------------------------


def parse_eigen(text: str) -> dict[SummandKey, dict[str, int]]:
    """``key: tok^k tok^k; key: ...`` with tokens +1, -1 or an identifier."""
    c = _Cursor(text)
    out: dict[SummandKey, dict[str, int]] = {}
    if c.at_end():
        return out
    while True:
        k = _key(c)
        if k in out:
            raise c.error(f"summand {format_key(k)} listed twice")
        c.expect(":")
        eig: dict[str, int] = {}
        while not (c.at_end() or c.peek(";")):
            if c.accept("+1"):
                tok = "+1"
            elif c.accept("-1"):
                tok = "-1"
            else:
                tok = c.ident()
            mult = c.integer() if c.accept("^") else 1
            eig[tok] = eig.get(tok, 0) + mult
        out[k] = eig
        if not c.accept(";"):
            break
    if not c.at_end():
        raise c.error("trailing input")
    return out


def format_eigen(eigen: dict[SummandKey, dict[str, int]]) -> str:
    chunks = []
    for k in sorted(eigen, key=tuple):
        toks = " ".join(f"{t}^{n}" for t, n in sorted(eigen[k].items()) if n)
        chunks.append(f"{format_key(k)}: {toks}")
    return "; ".join(chunks)


# generic data ------------------------------------------------------------


def parse_generic(text: str) -> tuple[GroupForm, list[FormalParameter], FormalParameter]:
    """``group: tau_1, tau_2, ... ; tempered part``.

    Each GL part is a sum of summands; exponents are unrestricted there.
    """
    c = _Cursor(text)
    g = _group(c)
    c.expect(":")
    gl: list[FormalParameter] = []
    if not c.peek(";"):
        while True:
            gl.append(_param(c, Kind.L))
            if not c.accept(","):
                break
    c.expect(";")
    temp = _param(c, Kind.ARTHUR)
    if not c.at_end():
        raise c.error("trailing input")
    return g, [t for t in gl if len(t)], temp


def format_generic(g: GroupForm, gl_parts, temp: FormalParameter) -> str:
    gl = ", ".join(format_parameter(t) for t in gl_parts)
    return f"{format_group(g)}: {gl} ; {format_parameter(temp)}".replace(":  ;", ": ;")
