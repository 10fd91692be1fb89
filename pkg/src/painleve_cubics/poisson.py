"""Log-canonical Poisson structures and the Jacobian bracket on cubics.

A PoissonStructure is a constant antisymmetric pairing P on the
generators of a ring, inducing {g^a, g^b} = (a^T P b) g^{a+b} on
monomials and extending bilinearly.  On exponentiated coordinates
(g_z = e^{z/2}) the pairing is the coordinate bracket over 4:
{z_i, z_j} = c  <=>  P(z_i, z_j) = c/4; ``from_log_brackets`` performs
that conversion, ``log_bracket`` inverts it.

NambuContext carries the bracket a cubic polynomial phi induces on
C[x1,x2,x3]: {x1,x2} = d(phi)/d(x3) and cyclic, extended as a
biderivation; phi itself is a Casimir by construction of the formula,
which the certificates confirm symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .ring import LaurentPoly, RationalExpr, Ring, RingError, as_expr


class PoissonStructure:
    __slots__ = ("ring", "_pairs")

    def __init__(self, ring: Ring, pairs: Mapping[tuple, Fraction]):
        """pairs maps (name_i, name_j) -> P(i,j); antisymmetry is implied."""
        self.ring = ring
        self._pairs: dict = {}
        for (u, v), c in pairs.items():
            c = Fraction(c)
            if u not in ring.index or v not in ring.index:
                raise RingError(f"pairing on unknown generators ({u},{v})")
            if u == v and c != 0:
                raise RingError("nonzero diagonal pairing")
            if c == 0:
                continue
            i, j = ring.index[u], ring.index[v]
            if i > j:
                i, j, c = j, i, -c
            existing = self._pairs.get((i, j))
            if existing is not None and existing != c:
                raise RingError(f"conflicting pairing on ({u},{v})")
            self._pairs[(i, j)] = c

    @classmethod
    def from_log_brackets(cls, ring: Ring, log_pairs: Mapping[tuple, Fraction]) -> "PoissonStructure":
        return cls(ring, {k: Fraction(v) / 4 for k, v in log_pairs.items()})

    def pair(self, u: str, v: str) -> Fraction:
        i, j = self.ring.index[u], self.ring.index[v]
        if i == j:
            return Fraction(0)
        if i < j:
            return self._pairs.get((i, j), Fraction(0))
        return -self._pairs.get((j, i), Fraction(0))

    def log_bracket(self, u: str, v: str) -> Fraction:
        return 4 * self.pair(u, v)

    def pair_exps(self, a: Sequence, b: Sequence) -> Fraction:
        total = Fraction(0)
        for (i, j), c in self._pairs.items():
            total += c * (a[i] * b[j] - a[j] * b[i])
        return total

    def bracket(self, f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
        if f.ring != self.ring or g.ring != self.ring:
            raise RingError("bracket arguments outside the structure's ring")
        out = self.ring.zero()
        for ea, ca in f.terms.items():
            for eb, cb in g.terms.items():
                coeff = self.pair_exps(ea, eb)
                if coeff == 0:
                    continue
                out = out + LaurentPoly(self.ring, {tuple(x + y for x, y in zip(ea, eb)): ca * cb * coeff})
        return out

    def bracket_expr(self, A, B) -> RationalExpr:
        """Bracket extended to quotients via the Leibniz rule."""
        A, B = as_expr(A), as_expr(B)
        p, q, r, s = A.num, A.den, B.num, B.den
        br = self.bracket
        num = (br(p, r) * q * s - br(p, s) * q * r - br(q, r) * p * s + br(q, s) * p * r)
        return RationalExpr(num, q * q * s * s)

    def jacobiator(self, f: LaurentPoly, g: LaurentPoly, h: LaurentPoly) -> LaurentPoly:
        br = self.bracket
        return br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))

    def monomial_coefficient(self, f: LaurentPoly, g: LaurentPoly) -> Fraction:
        """c with {f,g} = c f g, for monomial f, g."""
        return self.pair_exps(f.monomial_exps(), g.monomial_exps())

    def to_json(self) -> dict:
        out = {}
        for (i, j), c in sorted(self._pairs.items()):
            out[f"{self.ring.names[i]},{self.ring.names[j]}"] = str(4 * c)
        return out


@dataclass
class CasimirReport:
    rank: int
    kernel: list  # list of {name: int} exponent dicts over the input monomials

    def kernel_names(self) -> list:
        out = []
        for vec in self.kernel:
            parts = []
            for name, e in vec.items():
                parts.append(name if e == 1 else f"{name}^{e}")
            out.append("*".join(parts))
        return out


def casimir_kernel(structure: PoissonStructure, monomials: Mapping[str, LaurentPoly]) -> CasimirReport:
    """Kernel of the exponent pairing restricted to the given monomial lattice.

    Kernel vectors name monomial Casimirs (products of the inputs); the rank
    of the restricted pairing is the symplectic leaf dimension.
    """
    names = list(monomials)
    vecs = []
    for name in names:
        m = monomials[name]
        if not m.is_monomial():
            raise RingError(f"casimir_kernel needs monomials; {name} is not")
        vecs.append(m.monomial_exps())
    gram = [[structure.pair_exps(a, b) for b in vecs] for a in vecs]
    basis = linalg.kernel_basis(gram, len(names))
    kernel = [{names[i]: int(v[i]) for i in range(len(names)) if v[i] != 0} for v in basis]
    return CasimirReport(rank=linalg.rank(gram), kernel=kernel)


def is_casimir_product(structure: PoissonStructure, candidate: Mapping[str, int],
                       monomials: Mapping[str, LaurentPoly]) -> bool:
    """Does the monomial product named by ``candidate`` commute with every input?"""
    ring = structure.ring
    vec = [Fraction(0)] * len(ring.names)
    for name, e in candidate.items():
        for i, x in enumerate(monomials[name].monomial_exps()):
            vec[i] += e * x
    return all(structure.pair_exps(vec, m.monomial_exps()) == 0 for m in monomials.values())


@dataclass
class SolveResult:
    structure: "PoissonStructure | None"
    free_pairs: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.violations


def solve_structure(ring: Ring,
                    monomials: Mapping[str, LaurentPoly],
                    table: Mapping[tuple, Fraction],
                    fixed_log: Mapping[tuple, Fraction] | None = None,
                    central: Sequence[str] = ()) -> SolveResult:
    """Recover a generator pairing from pairwise bracket coefficients.

    ``table`` maps (name_u, name_v) to c_uv with {u, v} = c_uv * u * v.
    ``fixed_log`` pins individual coordinate brackets {z_i, z_j} (log level);
    ``central`` lists generators whose pairings are forced to zero.  The
    system is solved exactly; leftover freedom is reported (free pairs set
    to zero), and inconsistencies are returned as readable equations.
    """
    central = set(central)
    gens = [n for n in ring.names if n not in central]
    unknowns = [(gens[i], gens[j]) for i in range(len(gens)) for j in range(i + 1, len(gens))]
    col = {p: k for k, p in enumerate(unknowns)}

    rows, rhs, labels = [], [], []

    def add_equation(vec_u, vec_v, value, label):
        row = [Fraction(0)] * len(unknowns)
        iu = {ring.names[i]: vec_u[i] for i in range(len(vec_u))}
        iv = {ring.names[i]: vec_v[i] for i in range(len(vec_v))}
        for (a, b), k in col.items():
            row[k] = iu.get(a, 0) * iv.get(b, 0) - iu.get(b, 0) * iv.get(a, 0)
        rows.append(row)
        rhs.append(Fraction(value))
        labels.append(label)

    for (u, v), c in table.items():
        add_equation(monomials[u].monomial_exps(), monomials[v].monomial_exps(),
                     Fraction(c), f"{{{u},{v}}} = {c}*{u}*{v}")
    for (zu, zv), c in (fixed_log or {}).items():
        eu = [Fraction(0)] * len(ring.names)
        ev = [Fraction(0)] * len(ring.names)
        eu[ring.index[zu]] = Fraction(1)
        ev[ring.index[zv]] = Fraction(1)
        add_equation(eu, ev, Fraction(c) / 4, f"{{{zu},{zv}}} = {c}")

    if not rows:
        return SolveResult(structure=PoissonStructure(ring, {}),
                           free_pairs=list(unknowns), violations=[])
    x, free, bad = linalg.solve(rows, rhs)
    pairs = {unknowns[k]: x[k] for k in range(len(unknowns)) if x[k] != 0}
    structure = PoissonStructure(ring, pairs)
    return SolveResult(structure=structure,
                       free_pairs=[unknowns[k] for k in free],
                       violations=[labels[i] for i in bad])


class NambuContext:
    """The bracket {x_i, x_j} = d(phi)/d(x_k) (cyclic) on a cubic's ring."""

    def __init__(self, phi: LaurentPoly, xnames: Sequence[str] = ("x1", "x2", "x3")):
        self.ring = phi.ring
        self.phi = phi
        self.xnames = tuple(xnames)
        for name in self.xnames:
            if name not in self.ring.index:
                raise RingError(f"missing coordinate {name!r}")
        for exps in phi.terms:
            for name in self.xnames:
                if exps[self.ring.index[name]] < 0:
                    raise RingError("phi must be polynomial in the surface coordinates")
        x1, x2, x3 = self.xnames
        self._grad = (phi.derivative(x1), phi.derivative(x2), phi.derivative(x3))

    def bracket(self, f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
        x1, x2, x3 = self.xnames
        df = (f.derivative(x1), f.derivative(x2), f.derivative(x3))
        dg = (g.derivative(x1), g.derivative(x2), g.derivative(x3))
        total = self.ring.zero()
        for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            total = total + self._grad[k] * (df[i] * dg[j] - df[j] * dg[i])
        return total

    def jacobiator(self, f: LaurentPoly, g: LaurentPoly, h: LaurentPoly) -> LaurentPoly:
        br = self.bracket
        return br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))
