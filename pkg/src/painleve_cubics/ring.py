"""Exact Laurent-polynomial and rational-expression arithmetic over Q.

Every symbolic quantity in this package lives in a ring of named,
invertible generators with exact rational coefficients:

    poly  =  sum of   coeff * g1^e1 * g2^e2 * ...

stored as a dict mapping exponent tuples (one slot per registered
generator) to nonzero Fraction coefficients.  No zero coefficients are
kept and terms carry a fixed graded-lexicographic order, so equality is
structural and printing is deterministic.

Convention for exponentiated coordinates: a generator named ``z`` of
shear/perimeter/cusp kind stands for e^{z/2}, so e^{z} is g_z^2 and
e^{z/2} is g_z^1.  Under this convention every exponent occurring in the
catalogs is an integer.  The single exception is the confluence
parameter (kind ``epsilon``), whose generator stands for the parameter
itself and may carry half-integer exponents produced by scalings like
z -> z - log(eps).

``RationalExpr`` is a quotient num/den of two polynomials.  Quotients by
monomials collapse back into the Laurent ring during normalisation;
equality of genuine quotients is tested by cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]

KINDS = (
    "shear",
    "perimeter",
    "cusp",
    "parameter-G",
    "surface-x",
    "cluster-y",
    "lambda",
    "epsilon",
    "auxiliary",
)


class RingError(ValueError):
    """Raised on malformed ring operations (mixed contexts, bad exponents...)."""


def _q(x: Scalar) -> Scalar:
    """Normalise a scalar: integral Fractions become ints."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return x
    if isinstance(x, int):
        return x
    raise RingError(f"non-exact scalar {x!r}")


class Ring:
    """A context of named invertible generators.

    Polynomials from different Ring objects never mix; use ``extend`` and
    ``LaurentPoly.cast`` to move between compatible contexts.
    """

    __slots__ = ("names", "kinds", "index", "_zero", "_eps_index")

    def __init__(self, names: Sequence[str], kinds: Mapping[str, str] | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise RingError(f"duplicate generator names in {names}")
        kinds = dict(kinds or {})
        for name, kind in kinds.items():
            if kind not in KINDS:
                raise RingError(f"unknown generator kind {kind!r}")
            if name not in names:
                raise RingError(f"kind given for unregistered generator {name!r}")
        self.names = names
        self.kinds = tuple(kinds.get(n, _default_kind(n)) for n in names)
        self.index = {n: i for i, n in enumerate(names)}
        self._zero = (0,) * len(names)
        eps = [i for i, k in enumerate(self.kinds) if k == "epsilon"]
        if len(eps) > 1:
            raise RingError("at most one epsilon generator per ring")
        self._eps_index = eps[0] if eps else None

    def __repr__(self) -> str:
        return f"Ring({', '.join(self.names)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    # -- constructors ------------------------------------------------

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return LaurentPoly(self, {self._zero: Fraction(1)})

    def const(self, c: Scalar) -> "LaurentPoly":
        c = Fraction(c)
        return LaurentPoly(self, {} if c == 0 else {self._zero: c})

    def gen(self, name: str, power: Scalar = 1) -> "LaurentPoly":
        return self.monomial({name: power})

    def monomial(self, exps: Mapping[str, Scalar], coeff: Scalar = 1) -> "LaurentPoly":
        c = Fraction(coeff)
        if c == 0:
            return self.zero()
        vec = [0] * len(self.names)
        for name, e in exps.items():
            if name not in self.index:
                raise RingError(f"generator {name!r} not in {self}")
            vec[self.index[name]] = _q(Fraction(e))
        self._check_exps(vec)
        return LaurentPoly(self, {tuple(vec): c})

    def e(self, halves: Mapping[str, Scalar], coeff: Scalar = 1) -> "LaurentPoly":
        """Monomial e^{sum c_z * z} on the g_z = e^{z/2} convention.

        The value for key ``z`` is the coefficient of z in the exponent of
        e, so the generator exponent is 2*c_z.
        """
        return self.monomial({n: 2 * Fraction(c) for n, c in halves.items()}, coeff)

    def poly(self, terms: Mapping[tuple, Scalar]) -> "LaurentPoly":
        out: dict = {}
        for exps, c in terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            vec = tuple(_q(Fraction(e)) for e in exps)
            if len(vec) != len(self.names):
                raise RingError("exponent tuple length mismatch")
            self._check_exps(vec)
            out[vec] = out.get(vec, Fraction(0)) + c
        return LaurentPoly(self, {k: v for k, v in out.items() if v != 0})

    def _check_exps(self, vec: Sequence[Scalar]) -> None:
        for i, e in enumerate(vec):
            if not isinstance(e, int) and i != self._eps_index:
                raise RingError(
                    f"non-integer exponent {e} on generator {self.names[i]!r}"
                )

    # -- derived rings -----------------------------------------------

    def extend(self, names: Sequence[str], kinds: Mapping[str, str] | None = None) -> "Ring":
        extra = dict(kinds or {})
        merged = dict(zip(self.names, self.kinds))
        merged.update(extra)
        return Ring(self.names + tuple(names), merged)

    def kind_of(self, name: str) -> str:
        return self.kinds[self.index[name]]


def _default_kind(name: str) -> str:
    if name == "eps":
        return "epsilon"
    if name.startswith("s"):
        return "shear"
    if name.startswith("p"):
        return "perimeter"
    if name.startswith("k"):
        return "cusp"
    if name.startswith("G"):
        return "parameter-G"
    if name.startswith("x"):
        return "surface-x"
    if name.startswith("y"):
        return "cluster-y"
    if name.startswith("w"):
        return "auxiliary"
    return "auxiliary"


def _grlex_key(exps: tuple):
    return (sum(exps), exps)


class LaurentPoly:
    """Immutable-by-convention sparse Laurent polynomial over Q."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {self.ring._zero: Fraction(1)}

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {self.ring._zero}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise RingError(f"not a constant: {self}")
        return self.terms.get(self.ring._zero, Fraction(0))

    def monomial_exps(self) -> tuple:
        if not self.is_monomial():
            raise RingError(f"not a monomial: {self}")
        return next(iter(self.terms))

    def num_terms(self) -> int:
        return len(self.terms)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def lead(self) -> tuple:
        """(exps, coeff) of the graded-lex leading term."""
        if not self.terms:
            raise RingError("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    def support_names(self) -> list:
        used = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e != 0:
                    used.add(i)
        return [self.ring.names[i] for i in sorted(used)]

    def content_exps(self) -> tuple:
        """Componentwise minimum exponent over the support (Laurent content)."""
        if not self.terms:
            raise RingError("zero polynomial has no content")
        cols = zip(*self.terms)
        return tuple(min(col) for col in cols) if self.ring.names else ()

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise RingError(f"mixed ring contexts {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for exps, c in other.terms.items():
            v = out.get(exps, Fraction(0)) + c
            if v == 0:
                out.pop(exps, None)
            else:
                out[exps] = v
        return LaurentPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RationalExpr):
            return NotImplemented
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(_q(a + b) for a, b in zip(e1, e2))
                v = out.get(exps, Fraction(0)) + c1 * c2
                if v == 0:
                    out.pop(exps, None)
                else:
                    out[exps] = v
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise RingError(f"exponent must be an integer, got {n!r}")
        if n < 0:
            if self.is_monomial():
                exps, c = next(iter(self.terms.items()))
                inv = LaurentPoly(self.ring, {tuple(_q(-e) for e in exps): 1 / c})
                return inv ** (-n)
            return RationalExpr.from_poly(self) ** n
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, RationalExpr):
            return RationalExpr.from_poly(self) / other
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalExpr(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return RationalExpr(other, self)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if isinstance(other, RationalExpr):
            return other == self
        return (
            isinstance(other, LaurentPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    __hash__ = None  # type: ignore[assignment]

    # -- calculus-style helpers ------------------------------------------

    def derivative(self, name: str) -> "LaurentPoly":
        """Formal d/dg_name (the generator itself, not e^{z/2} chain rules)."""
        i = self.ring.index[name]
        out: dict = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e == 0:
                continue
            new = list(exps)
            new[i] = _q(e - 1)
            key = tuple(new)
            v = out.get(key, Fraction(0)) + c * e
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
        return LaurentPoly(self.ring, out)

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        vals = {}
        for name in self.support_names():
            if name not in point:
                raise RingError(f"no value given for generator {name!r}")
            v = Fraction(point[name])
            if v == 0:
                raise RingError(f"generators must evaluate to nonzero values ({name})")
            vals[self.ring.index[name]] = v
        total = Fraction(0)
        for exps, c in self.terms.items():
            term = c
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if not isinstance(e, int):
                    raise RingError("cannot evaluate fractional exponents exactly")
                term *= vals[i] ** e
            total += term
        return total

    def cast(self, ring: Ring) -> "LaurentPoly":
        """Re-express in a ring containing (by name) every used generator."""
        if ring == self.ring:
            return self
        positions = []
        for i, name in enumerate(self.ring.names):
            positions.append(ring.index.get(name))
        out: dict = {}
        for exps, c in self.terms.items():
            vec = [0] * len(ring.names)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if positions[i] is None:
                    raise RingError(
                        f"generator {self.ring.names[i]!r} missing from {ring}"
                    )
                vec[positions[i]] = e
            key = tuple(vec)
            v = out.get(key, Fraction(0)) + c
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
        return LaurentPoly(ring, out)

    # -- substitution ------------------------------------------------------

    def substitute(self, images: Mapping[str, object], ring: Ring | None = None) -> "RationalExpr":
        """Substitute generators by expressions.

        ``images`` maps generator names to LaurentPoly / RationalExpr /
        GenImage values (all over one target ring); unmapped generators pass
        through unchanged and must exist in the target ring.  A GenImage of
        granularity k gives the image of g_name^k; occurrences whose exponent
        is not a multiple of k are an error.
        """
        norm: dict[str, GenImage] = {}
        target = ring
        for name, img in images.items():
            if name not in self.ring.index:
                raise RingError(f"substitution for unknown generator {name!r}")
            gi = img if isinstance(img, GenImage) else GenImage(as_expr(img))
            norm[name] = gi
            if target is None:
                target = gi.expr.ring
            elif gi.expr.ring != target:
                raise RingError("substitution images live in mixed ring contexts")
        if target is None:
            target = self.ring
        total = RationalExpr.from_poly(target.zero())
        for exps, c in self.terms.items():
            factor = RationalExpr.from_poly(target.const(c))
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                name = self.ring.names[i]
                gi = norm.get(name)
                if gi is None:
                    factor = factor * RationalExpr.from_poly(target.gen(name, e))
                    continue
                if not isinstance(e, int) or e % gi.granularity != 0:
                    if gi.expr.is_poly() and gi.expr.num.is_monomial():
                        factor = factor * gi.monomial_root_power(e)
                        continue
                    raise RingError("substitution requires half-power of non-monomial")
                factor = factor * (gi.expr ** (e // gi.granularity))
            total = total + factor
        return total

    # -- epsilon bookkeeping -----------------------------------------------

    def _eps_column(self) -> int:
        i = self.ring._eps_index
        if i is None:
            raise RingError(f"{self.ring} has no epsilon generator")
        return i

    def epsilon_min_degree(self) -> Fraction:
        if not self.terms:
            raise RingError("no leading part: zero polynomial")
        i = self._eps_column()
        return Fraction(min(exps[i] for exps in self.terms))

    def epsilon_leading(self) -> tuple:
        """(min eps-degree, eps-free coefficient polynomial of that degree)."""
        if not self.terms:
            raise RingError("no leading part: zero polynomial")
        i = self._eps_column()
        d = min(exps[i] for exps in self.terms)
        out = {}
        for exps, c in self.terms.items():
            if exps[i] == d:
                vec = list(exps)
                vec[i] = 0
                out[tuple(vec)] = c
        return Fraction(d), LaurentPoly(self.ring, out)

    # -- printing / serialisation -------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                name = self.ring.names[i]
                factors.append(name if e == 1 else f"{name}^{e}")
            mono = " * ".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} * {mono}"
            sign = "-" if c < 0 else "+"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    __str__ = to_text

    def __repr__(self) -> str:
        return f"<LaurentPoly {self.to_text()}>"

    def to_terms_json(self) -> list:
        out = []
        for exps, c in self.sorted_terms():
            entry = {"c": str(c), "e": {}}
            for i, e in enumerate(exps):
                if e != 0:
                    entry["e"][self.ring.names[i]] = str(e)
            out.append(entry)
        return out

    @staticmethod
    def from_terms_json(ring: Ring, data: Iterable[Mapping]) -> "LaurentPoly":
        total = ring.zero()
        for entry in data:
            exps = {n: Fraction(e) for n, e in entry["e"].items()}
            total = total + ring.monomial(exps, Fraction(entry["c"]))
        return total


class GenImage:
    """Substitution image of g_name^granularity (see LaurentPoly.substitute)."""

    __slots__ = ("expr", "granularity")

    def __init__(self, expr: "RationalExpr | LaurentPoly", granularity: int = 1):
        self.expr = as_expr(expr)
        if granularity < 1:
            raise RingError("granularity must be >= 1")
        self.granularity = granularity

    def monomial_root_power(self, e: Scalar) -> "RationalExpr":
        """Image of g_name^e when the image is a monomial (fractional powers ok)."""
        exps, c = next(iter(self.expr.num.terms.items()))
        ratio = Fraction(e) / self.granularity
        if ratio.denominator == 1:
            coeff = c ** int(ratio)
        elif c == 1:
            coeff = Fraction(1)
        else:
            raise RingError("substitution requires half-power of non-monomial")
        ring = self.expr.num.ring
        vec = {ring.names[i]: e_i * ratio for i, e_i in enumerate(exps) if e_i != 0}
        return RationalExpr.from_poly(ring.monomial(vec, coeff))


def as_expr(x) -> "RationalExpr":
    if isinstance(x, RationalExpr):
        return x
    if isinstance(x, LaurentPoly):
        return RationalExpr.from_poly(x)
    raise RingError(f"cannot interpret {x!r} as an expression")


def divide_exact(f: LaurentPoly, g: LaurentPoly):
    """Exact quotient f/g in the Laurent ring, or None when not divisible.

    Both arguments are reduced by their monomial content (units here), then
    ordinary multivariate lead-term division is run; a nonzero remainder
    means no quotient exists.
    """
    if g.is_zero():
        raise RingError("division by the zero polynomial")
    if f.is_zero():
        return f.ring.zero()
    if f.ring != g.ring:
        raise RingError("mixed ring contexts in divide_exact")
    ring = f.ring
    cf, cg = f.content_exps(), g.content_exps()
    shift = tuple(_q(a - b) for a, b in zip(cf, cg))
    fred = LaurentPoly(ring, {tuple(_q(a - b) for a, b in zip(e, cf)): c for e, c in f.terms.items()})
    gred = LaurentPoly(ring, {tuple(_q(a - b) for a, b in zip(e, cg)): c for e, c in g.terms.items()})
    glead_exps, glead_c = gred.lead()
    quotient: dict = {}
    rem = fred
    while not rem.is_zero():
        rexps, rc = rem.lead()
        diff = tuple(_q(a - b) for a, b in zip(rexps, glead_exps))
        if any((not isinstance(e, int)) or e < 0 for e in diff):
            return None
        qc = rc / glead_c
        quotient[diff] = quotient.get(diff, Fraction(0)) + qc
        rem = rem - LaurentPoly(ring, {diff: qc}) * gred
    return LaurentPoly(ring, {e: c for e, c in quotient.items() if c != 0}) * LaurentPoly(
        ring, {shift: Fraction(1)}
    )


class RationalExpr:
    """Quotient of two Laurent polynomials, normalised on construction.

    Monomial denominators (units of the Laurent ring) are folded into the
    numerator, and exactly-divisible denominators cancel, so ``den`` is 1
    whenever the quotient is actually a Laurent polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly):
        if num.ring != den.ring:
            raise RingError("numerator/denominator ring mismatch")
        if den.is_zero():
            raise RingError("zero denominator")
        ring = num.ring
        if num.is_zero():
            self.num, self.den = num, ring.one()
            return
        if den.is_monomial():
            self.num, self.den = num * den ** -1, ring.one()
            return
        q = divide_exact(num, den)
        if q is not None:
            self.num, self.den = q, ring.one()
            return
        cn, cd = num.content_exps(), den.content_exps()
        unit = LaurentPoly(ring, {tuple(_q(-e) for e in cd): Fraction(1)})
        num = num * unit
        den = den * unit
        _, lc = den.lead()
        if lc != 1:
            num = num * ring.const(1 / lc)
            den = den * ring.const(1 / lc)
        self.num, self.den = num, den

    @property
    def ring(self) -> Ring:
        return self.num.ring

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RationalExpr":
        return RationalExpr(p, p.ring.one())

    def is_poly(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> LaurentPoly:
        if not self.is_poly():
            raise RingError(f"not a Laurent polynomial: denominator {self.den}")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other) -> "RationalExpr":
        if isinstance(other, RationalExpr):
            return other
        if isinstance(other, LaurentPoly):
            return RationalExpr.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RationalExpr.from_poly(self.ring.const(other))
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalExpr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise RingError("division by zero expression")
        return RationalExpr(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise RingError("exponent must be an integer")
        if n == 0:
            return RationalExpr.from_poly(self.ring.one())
        if n < 0:
            if self.is_zero():
                raise RingError("negative power of zero")
            return RationalExpr(self.den, self.num) ** (-n)
        return RationalExpr(self.num ** n, self.den ** n)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __ne__(self, other) -> bool:
        return not self.__eq__(other)

    __hash__ = None  # type: ignore[assignment]

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise RingError("denominator vanishes at the evaluation point")
        return self.num.evaluate(point) / d

    def substitute(self, images: Mapping[str, object], ring: Ring | None = None) -> "RationalExpr":
        num = self.num.substitute(images, ring)
        den = self.den.substitute(images, ring)
        return num / den

    def cast(self, ring: Ring) -> "RationalExpr":
        return RationalExpr(self.num.cast(ring), self.den.cast(ring))

    def constant_value(self) -> Fraction:
        if not self.is_poly():
            raise RingError(f"not constant: {self}")
        return self.num.constant_value()

    def to_text(self) -> str:
        if self.is_poly():
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    __str__ = to_text

    def __repr__(self) -> str:
        return f"<RationalExpr {self.to_text()}>"
