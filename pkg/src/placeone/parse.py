"""Parsing and printing of polynomials in the tool's input grammar.

The grammar accepts integer and rational literals (like 3 or -2/3), the
declared variables, +, -, *, ^ (or **) with explicit nonnegative integer
exponents, and parentheses; whitespace is ignored.  Multiplication is always
explicit: write 3*x*y^2, not 3xy^2.

Multivariate values are recursive-dense Polys: for variables (x, y) the
outer Poly runs over y with inner Polys over x, and in general the last
declared variable is outermost.
"""

from __future__ import annotations

from .errors import ParseError
from .poly import Poly
from .rationals import QQ, qq_str

_MAX_EXP = 128


def nested_const(c, depth: int) -> Poly | QQ:
    """The scalar c embedded at the given nesting depth (0 = bare QQ)."""
    v = QQ(c)
    out = v
    for _ in range(depth):
        out = Poly((out,)) if out else Poly(())
    return out


def nested_var(index: int, depth: int) -> Poly:
    """Generator of variable #index (0 = innermost) nested to depth levels."""
    gen = Poly((nested_const(0, index), nested_const(1, index)))
    for _ in range(depth - index - 1):
        gen = Poly((gen,))
    return gen


class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.vars = variables
        self.depth = len(variables)
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def parse(self):
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("trailing input")
        return value

    def expr(self):
        sign = 1
        while True:
            if self.take("-"):
                sign = -sign
            elif self.take("+"):
                pass
            else:
                break
        value = self.term()
        if sign < 0:
            value = -value
        while True:
            c = self.peek()
            if c == "+":
                self.pos += 1
                value = value + self.term()
            elif c == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            save = self.pos
            self.pos += 1
            if self.peek() == "*":  # part of a ** exponent, not a product
                self.pos = save
                return value
            value = value * self.factor()
        return value

    def factor(self):
        if self.take("-"):
            return -self.factor()
        base = self.atom()
        self.skip_ws()
        if self.text.startswith("**", self.pos):
            self.pos += 2
        elif self.peek() == "^":
            self.pos += 1
        else:
            return base
        exp = self.integer("exponent")
        if exp < 0 or exp > _MAX_EXP:
            self.error(f"exponent out of range 0..{_MAX_EXP}")
        return base**exp

    def integer(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or not self.text[start:self.pos].lstrip("+-"):
            self.error(f"expected {what}")
        return int(self.text[start:self.pos])

    def atom(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            value = self.expr()
            if not self.take(")"):
                self.error("expected ')'")
            return value
        if c.isdigit():
            num = self.integer("number")
            save = self.pos
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == "/":
                self.pos += 1
                den = self.integer("denominator")
                if den == 0:
                    self.error("zero denominator")
                return nested_const(QQ(num) / QQ(den), self.depth)
            self.pos = save
            return nested_const(num, self.depth)
        if c.isalpha():
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.vars:
                self.pos = start
                self.error(f"unknown variable {name!r} (allowed: {', '.join(self.vars)})")
            return nested_var(self.vars.index(name), self.depth)
        self.error("expected a number, variable, or '('")


def parse_poly(text: str, variables: tuple[str, ...]) -> Poly:
    """Parse text into a nested Poly over the given variables, innermost
    first.  The result is always a Poly at full nesting depth."""
    if not isinstance(text, str) or not text.strip():
        raise ParseError("empty polynomial")
    # normalize unicode minus and times from copy-pasted sources
    cleaned = text.replace("−", "-").replace("·", "*")
    value = _Parser(cleaned, variables).parse()
    if not isinstance(value, Poly):
        value = nested_const(value, len(variables)) if value else Poly(())
    elif len(variables) == 0:
        raise ParseError("no variables declared")
    return _ensure_depth(value, len(variables))


def _ensure_depth(value, depth: int) -> Poly:
    # constants may come back at lower nesting; rewrap to full depth
    d = _depth_of(value)
    while d < depth:
        value = Poly((value,)) if value else Poly(())
        d += 1
    return value


def _depth_of(value) -> int:
    d = 0
    while isinstance(value, Poly):
        if not value.cs:
            return d + 1  # zero polys are depth-ambiguous; treat as shallow
        value = value.cs[-1]
        d += 1
    return d


def monomials(p: Poly, depth: int):
    """Yield (exponents, coefficient) with exponents innermost-first."""
    if depth == 1:
        for i, c in enumerate(p.cs):
            if c:
                yield (i,), c
        return
    for j, inner in enumerate(p.cs):
        if not inner:
            continue
        for exps, c in monomials(inner, depth - 1):
            yield exps + (j,), c


def format_poly(p: Poly, variables: tuple[str, ...]) -> str:
    """Canonical text form: outermost variable's degree descending, then the
    inner ones, with explicit '*' so output re-parses exactly."""
    depth = len(variables)
    terms = sorted(
        monomials(p, depth),
        key=lambda item: (sum(item[0]),) + tuple(reversed(item[0])),
        reverse=True,
    )
    if not terms:
        return "0"
    parts: list[str] = []
    for exps, coeff in terms:
        pieces = []
        for e, v in zip(exps, variables):
            if e == 1:
                pieces.append(v)
            elif e > 1:
                pieces.append(f"{v}^{e}")
        mag = coeff if coeff > 0 else -coeff
        if not pieces or mag != 1:
            pieces.insert(0, qq_str(mag))
        body = "*".join(pieces)
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


def coeff_lists(p: Poly, depth: int):
    """Nested ascending coefficient arrays with rationals as strings."""
    if depth == 0:
        return qq_str(p)
    if depth == 1:
        return [qq_str(c) for c in p.cs]
    return [coeff_lists(c, depth - 1) if c else [] for c in p.cs]
