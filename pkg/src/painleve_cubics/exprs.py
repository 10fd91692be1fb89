"""Parser for the compact expression strings used by the catalog files.

The catalogs store polynomials the way the formulas are usually written,
e.g.

    -e[s2+s3+p2/2+p3/2] - G3*e[s2+p2/2]
    x1*x2*x3 + x1^2 - (G1*Ginf + G2*G3)*x1 + Ginf^2

``e[...]`` is a monomial e^{linear combination of coordinates} on the
g_z = e^{z/2} convention; bare names are generators of the target ring or
entries of a caller-supplied symbol table (used to expand G-symbols into
their shear definitions at load time).  ``/`` builds genuine quotients,
so parsing always yields a RationalExpr; use ``.as_poly()`` when a
polynomial is expected.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .ring import LaurentPoly, RationalExpr, Ring, RingError, as_expr


class ExprSyntaxError(ValueError):
    pass


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.toks: list = []
        self._scan()
        self.i = 0

    def _scan(self) -> None:
        t, n = self.text, len(self.text)
        i = 0
        while i < n:
            ch = t[i]
            if ch.isspace():
                i += 1
                continue
            if ch in "+-*/^()[],":
                self.toks.append((ch, ch))
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and t[j].isdigit():
                    j += 1
                self.toks.append(("num", int(t[i:j])))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < n and (t[j].isalnum() or t[j] == "_"):
                    j += 1
                self.toks.append(("name", t[i:j]))
                i = j
                continue
            raise ExprSyntaxError(f"bad character {ch!r} in {self.text!r}")

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, got {tok} in {self.text!r}")
        return tok


class _Parser:
    def __init__(self, text: str, ring: Ring, symbols: Mapping[str, object]):
        self.toks = _Tokens(text)
        self.ring = ring
        self.symbols = symbols

    def parse(self) -> RationalExpr:
        value = self._sum()
        if self.toks.peek()[0] is not None:
            raise ExprSyntaxError(f"trailing input in {self.toks.text!r}")
        return value

    def _sum(self) -> RationalExpr:
        sign = 1
        kind, _ = self.toks.peek()
        if kind in ("+", "-"):
            self.toks.next()
            sign = -1 if kind == "-" else 1
        total = self._product() * sign
        while True:
            kind, _ = self.toks.peek()
            if kind == "+":
                self.toks.next()
                total = total + self._product()
            elif kind == "-":
                self.toks.next()
                total = total - self._product()
            else:
                return total

    def _product(self) -> RationalExpr:
        total = self._power()
        while True:
            kind, _ = self.toks.peek()
            if kind == "*":
                self.toks.next()
                total = total * self._power()
            elif kind == "/":
                self.toks.next()
                total = total / self._power()
            else:
                return total

    def _power(self) -> RationalExpr:
        base = self._atom()
        if self.toks.peek()[0] == "^":
            self.toks.next()
            sign = 1
            if self.toks.peek()[0] == "-":
                self.toks.next()
                sign = -1
            n = self.toks.expect("num")[1]
            return base ** (sign * n)
        return base

    def _atom(self) -> RationalExpr:
        kind, val = self.toks.next()
        if kind == "num":
            return as_expr(self.ring.const(val))
        if kind == "(":
            inner = self._sum()
            self.toks.expect(")")
            return inner
        if kind == "name":
            if val == "e" and self.toks.peek()[0] == "[":
                self.toks.next()
                mono = self._exponent_monomial()
                self.toks.expect("]")
                return as_expr(mono)
            if val in self.symbols:
                sym = self.symbols[val]
                return as_expr(sym)
            if val in self.ring.index:
                return as_expr(self.ring.gen(val))
            raise ExprSyntaxError(f"unknown symbol {val!r} in {self.toks.text!r}")
        raise ExprSyntaxError(f"unexpected token {(kind, val)} in {self.toks.text!r}")

    def _exponent_monomial(self) -> LaurentPoly:
        """Linear combination inside e[...]: items like s2, 2*s1, p2/2, 3*k1/2."""
        halves: dict = {}
        sign = 1
        kind, _ = self.toks.peek()
        if kind in ("+", "-"):
            self.toks.next()
            sign = -1 if kind == "-" else 1
        while True:
            coeff = Fraction(sign)
            kind, val = self.toks.peek()
            if kind == "num":
                self.toks.next()
                coeff *= val
                if self.toks.peek()[0] == "*":
                    self.toks.next()
            kind, val = self.toks.next()
            if kind != "name":
                raise ExprSyntaxError(f"expected coordinate name in e[...] of {self.toks.text!r}")
            if val not in self.ring.index:
                raise ExprSyntaxError(f"unknown coordinate {val!r} in e[...]")
            if self.toks.peek()[0] == "/":
                self.toks.next()
                coeff /= self.toks.expect("num")[1]
            halves[val] = halves.get(val, Fraction(0)) + coeff
            kind, _ = self.toks.peek()
            if kind == "+":
                self.toks.next()
                sign = 1
            elif kind == "-":
                self.toks.next()
                sign = -1
            else:
                return self.ring.e(halves)


def parse_expr(text: str, ring: Ring, symbols: Mapping[str, object] | None = None) -> RationalExpr:
    """Parse an expression string over ``ring`` (see module docstring)."""
    return _Parser(text, ring, symbols or {}).parse()


def parse_poly(text: str, ring: Ring, symbols: Mapping[str, object] | None = None) -> LaurentPoly:
    expr = parse_expr(text, ring, symbols)
    try:
        return expr.as_poly()
    except RingError as exc:
        raise ExprSyntaxError(f"{text!r} is not polynomial: {exc}") from exc
