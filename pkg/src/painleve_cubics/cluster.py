"""Braid action, generalized exchange mutations, and Dehn twists.

The braid generators act on the cubic's coordinates as Vieta involutions
composed with transpositions; with the parameters transported alongside
(w_j <-> w_k) the cubic is preserved as an exact polynomial identity.
At the puncture value Ginf = 2 the shift y_i = x_i - G_i turns the braid
relation into the generalized exchange relation
y_i y_i' = y_j^2 + y_k^2 + G_i y_j y_k, whose iterates stay Laurent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arcs import lambda_catalog
from .certificates import Certificate, certify
from .cubics import cubic, omega_from_G
from .ring import LaurentPoly, RationalExpr, Ring, RingError, as_expr, divide_exact

W_NAMES = ("w1", "w2", "w3", "w4")


def braid_ring() -> Ring:
    return Ring(("x1", "x2", "x3") + W_NAMES)


def braid_images(i: int, ring: Ring | None = None) -> dict:
    """x_i -> -x_i - x_j x_k - w_i with x_j <-> x_k and w_j <-> w_k.

    This is the Vieta involution for the cubic with +w_i x_i linear terms;
    with the opposite sign convention on the w's it reads -x_i - x_j x_k + w_i.
    """
    if i not in (1, 2, 3):
        raise ValueError("braid index must be 1, 2 or 3")
    ring = ring or braid_ring()
    j, k = [t for t in (1, 2, 3) if t != i]
    x = {t: ring.gen(f"x{t}") for t in (1, 2, 3)}
    w = {t: ring.gen(f"w{t}") for t in (1, 2, 3)}
    return {
        f"x{i}": -x[i] - x[j] * x[k] - w[i],
        f"x{j}": x[k],
        f"x{k}": x[j],
        f"w{j}": w[k],
        f"w{k}": w[j],
    }


def braid_apply(i: int, point: tuple, omega: tuple) -> tuple:
    """Apply the braid to a rational point (exact arithmetic)."""
    x1, x2, x3 = (Fraction(v) for v in point)
    w = [Fraction(v) for v in omega]
    xs = [x1, x2, x3]
    j, k = [t for t in (1, 2, 3) if t != i]
    new = list(xs)
    new[i - 1] = -xs[i - 1] - xs[j - 1] * xs[k - 1] - w[i - 1]
    new[j - 1], new[k - 1] = xs[k - 1], xs[j - 1]
    return tuple(new)


def _generic_phi(ring: Ring) -> LaurentPoly:
    x1, x2, x3 = (ring.gen(n) for n in ("x1", "x2", "x3"))
    w1, w2, w3, w4 = (ring.gen(n) for n in W_NAMES)
    return (x1 * x2 * x3 + x1 ** 2 + x2 ** 2 + x3 ** 2
            + w1 * x1 + w2 * x2 + w3 * x3 + w4)


def braid_preserves_cubic(i: int) -> Certificate:
    ring = braid_ring()
    phi = _generic_phi(ring)
    res = phi.substitute(braid_images(i, ring)).as_poly() - phi
    return certify(f"braid-{i}", "braid preserves the cubic",
                   f"braid generator {i} on the four-hole cubic", res.is_zero(),
                   detail="with parameter transport w_j <-> w_k", residue=res)


def braid_involution_check(i: int) -> Certificate:
    ring = braid_ring()
    m = braid_images(i, ring)
    twice = {n: e.substitute(m).as_poly() for n, e in m.items()}
    ok = all(twice[n] == ring.gen(n) for n in twice)
    return certify(f"braid-involution-{i}", "braid squared is the identity",
                   f"braid generator {i}", ok)


# -- generalized mutations -----------------------------------------------------


def cluster_ring() -> Ring:
    return Ring(("y1", "y2", "y3", "G1", "G2", "G3"))


def shifted_cubic(ring: Ring | None = None) -> LaurentPoly:
    ring = ring or cluster_ring()
    y1, y2, y3 = (ring.gen(n) for n in ("y1", "y2", "y3"))
    G1, G2, G3 = (ring.gen(n) for n in ("G1", "G2", "G3"))
    return (y1 * y2 * y3 + y1 ** 2 + y2 ** 2 + y3 ** 2
            + G1 * y2 * y3 + G2 * y1 * y3 + G3 * y1 * y2)


def shifted_cubic_check() -> Certificate:
    """At Ginf = 2 the shift y_i = x_i - G_i kills linear and constant terms."""
    ring = Ring(("y1", "y2", "y3", "G1", "G2", "G3", "Ginf"))
    omega = omega_from_G((1, 1, 1), ring)
    x = {f"x{i}": ring.gen(f"y{i}") + ring.gen(f"G{i}") for i in (1, 2, 3)}
    xr = Ring(("x1", "x2", "x3", "G1", "G2", "G3", "Ginf"))
    phi = (xr.gen("x1") * xr.gen("x2") * xr.gen("x3")
           + xr.gen("x1") ** 2 + xr.gen("x2") ** 2 + xr.gen("x3") ** 2)
    for w, name in zip(omega_from_G((1, 1, 1), xr), ("x1", "x2", "x3", "")):
        phi = phi + (w * xr.gen(name) if name else w)
    shifted = phi.substitute(x, ring=ring).as_poly()
    shifted = shifted.substitute({"Ginf": ring.const(2)}).as_poly()
    target = shifted_cubic(ring)
    res = shifted - target
    return certify("shifted-cubic", "puncture normalisation of the cluster form",
                   "shifted cubic at Ginf = 2", res.is_zero(),
                   detail="linear and constant terms vanish identically", residue=res)


def exchange_polynomial(i: int, cluster: dict, ring: Ring) -> RationalExpr:
    j, k = [t for t in (1, 2, 3) if t != i]
    G = as_expr(ring.gen(f"G{i}"))
    return cluster[j] ** 2 + cluster[k] ** 2 + G * cluster[j] * cluster[k]


def mutate(i: int, cluster: dict, ring: Ring | None = None) -> dict:
    """One generalized exchange: y_i -> (y_j^2 + y_k^2 + G_i y_j y_k)/y_i."""
    ring = ring or cluster_ring()
    if cluster[i].is_zero():
        raise RingError("cannot mutate a vanishing cluster variable")
    new = dict(cluster)
    new[i] = exchange_polynomial(i, cluster, ring) / cluster[i]
    return new


def initial_cluster(ring: Ring | None = None) -> dict:
    ring = ring or cluster_ring()
    return {i: as_expr(ring.gen(f"y{i}")) for i in (1, 2, 3)}


def surface_invariance(i: int) -> Certificate:
    """The mutated cubic's numerator is exactly divisible by the cubic."""
    ring = cluster_ring()
    cl = initial_cluster(ring)
    mutated = mutate(i, cl, ring)
    phi = shifted_cubic(ring)
    y1, y2, y3 = (mutated[t] for t in (1, 2, 3))
    G1, G2, G3 = (as_expr(ring.gen(n)) for n in ("G1", "G2", "G3"))
    value = (y1 * y2 * y3 + y1 ** 2 + y2 ** 2 + y3 ** 2
             + G1 * y2 * y3 + G2 * y1 * y3 + G3 * y1 * y2)
    numerator = (value * (cl[i] ** 2)).as_poly()
    q = divide_exact(numerator, phi)
    expected = exchange_polynomial(i, cl, ring).as_poly()
    ok = q is not None and q == expected
    return certify(f"mutation-surface-{i}", "mutation maps the surface to itself",
                   f"exchange mutation {i} on the shifted cubic", ok,
                   detail="numerator = exchange polynomial times the cubic",
                   residue="not divisible" if q is None else "")


def mutation_involution_check(i: int) -> Certificate:
    ring = cluster_ring()
    cl = initial_cluster(ring)
    back = mutate(i, mutate(i, cl, ring), ring)
    ok = all(back[t] == cl[t] for t in (1, 2, 3))
    return certify(f"mutation-involution-{i}", "exchange relation is involutive",
                   f"exchange mutation {i}", ok)


def reduced_words(max_depth: int) -> list:
    words = []

    def grow(prefix: tuple, depth: int):
        if depth == 0:
            words.append(prefix)
            return
        for i in (1, 2, 3):
            if prefix and prefix[-1] == i:
                continue
            grow(prefix + (i,), depth - 1)

    for d in range(1, max_depth + 1):
        grow((), d)
    return words


def run_sequence(word: tuple, ring: Ring | None = None) -> dict:
    ring = ring or cluster_ring()
    cl = initial_cluster(ring)
    for i in word:
        cl = mutate(i, cl, ring)
    return cl


def laurent_check(max_depth: int = 4) -> Certificate:
    """Every mutation sequence of length <= max_depth yields Laurent variables.

    Certification is by exact division during expression normalisation
    (monomial content stripping plus trial division); a variable that stays
    a genuine quotient is reported with its denominator.
    """
    witnesses = []
    count = 0
    for word in reduced_words(max_depth):
        cl = run_sequence(word)
        count += 1
        for i in (1, 2, 3):
            if not cl[i].is_poly():
                witnesses.append((word, i, str(cl[i].den)[:80]))
    return certify("laurent-phenomenon", "iterated mutations stay Laurent",
                   f"all {count} reduced sequences of length <= {max_depth}",
                   not witnesses, residue=witnesses[:3])


# -- Dehn twists ----------------------------------------------------------------


@dataclass
class TwistCase:
    name: str
    catalog_tag: str
    variables: tuple      # mutating arc names, in role order
    frozen: tuple
    ring: Ring
    invariants: dict      # label -> RationalExpr


def twist_case(name: str) -> TwistCase:
    """The three catalogued twists (+ the degenerate alias of the first)."""
    if name == "PV":
        ring = lambda_catalog("PV").lambda_ring
        a, b, c = ring.gen("a"), ring.gen("b"), ring.gen("c")
        G1, G2 = ring.gen("G1"), ring.gen("G2")
        ggamma = G2 * c / b + G1 * c / a + a / b + b / a + c ** 2 / (a * b)
        return TwistCase(name=name, catalog_tag="PV", variables=("a", "b"),
                         frozen=("c", "d", "e", "G1", "G2"), ring=ring,
                         invariants={"G_gamma": ggamma})
    if name == "PVdeg":
        # degenerate alias: same formulas with the boundary arc d in the c-role
        ring = Ring(("a", "b", "d", "G1", "G2"),
                    {"a": "lambda", "b": "lambda", "d": "lambda"})
        a, b, c = ring.gen("a"), ring.gen("b"), ring.gen("d")
        G1, G2 = ring.gen("G1"), ring.gen("G2")
        ggamma = G2 * c / b + G1 * c / a + a / b + b / a + c ** 2 / (a * b)
        return TwistCase(name=name, catalog_tag="PVdeg", variables=("a", "b"),
                         frozen=("d", "G1", "G2"), ring=ring,
                         invariants={"G_gamma": ggamma})
    if name == "PIII_D6":
        cat = lambda_catalog("PIII_tilde")
        ring = cat.lambda_ring
        a, b, c, f, g, h = (ring.gen(n) for n in ("a", "b", "c", "f", "g", "h"))
        ggamma = a / b + b / a + h * c / (f * b) + g * c / (f * a)
        lam44 = g * b / f + h * a / f
        return TwistCase(name=name, catalog_tag="PIII_tilde",
                         variables=("b", "f", "a"), frozen=("c", "d", "e", "g", "h"),
                         ring=ring, invariants={"G_gamma": ggamma, "lambda_44": lam44})
    if name == "PIII_D8":
        ring = Ring(("a", "b", "lam11", "lam44"),
                    {"a": "lambda", "b": "lambda", "lam11": "lambda", "lam44": "lambda"})
        a, b, c, w = (ring.gen(n) for n in ring.names)
        ggamma = a / b + b / a + c * w / (a * b)
        return TwistCase(name=name, catalog_tag="PIII_D8",
                         variables=("b", "a"), frozen=("lam11", "lam44"),
                         ring=ring, invariants={"G_gamma": ggamma})
    raise KeyError(f"unknown twist case {name!r} (PV, PVdeg, PIII_D6, PIII_D8)")


def dehn_twist(case: TwistCase, values: dict) -> dict:
    """One full twist applied to the mutating variables (others fixed)."""
    ring = case.ring
    vals = dict(values)
    if case.name in ("PV", "PVdeg"):
        third = "c" if case.name == "PV" else "d"
        a, b = vals["a"], vals["b"]
        c = vals[third]
        G1, G2 = as_expr(ring.gen("G1")), as_expr(ring.gen("G2"))
        a2 = (b ** 2 + c ** 2 + G1 * b * c) / a
        b2 = (a2 ** 2 + c ** 2 + G2 * a2 * c) / b
        vals["a"], vals["b"] = a2, b2
        return vals
    if case.name == "PIII_D6":
        b, f, a = vals["b"], vals["f"], vals["a"]
        c, g, h = (as_expr(ring.gen(n)) for n in ("c", "g", "h"))
        vals["b"] = a
        vals["f"] = (f * a + h * c) / b
        vals["a"] = a ** 2 / b + h * c * a / (b * f) + g * c / f
        return vals
    if case.name == "PIII_D8":
        b, a = vals["b"], vals["a"]
        c, w = as_expr(ring.gen("lam11")), as_expr(ring.gen("lam44"))
        vals["b"] = a
        vals["a"] = (a ** 2 + c * w) / b
        return vals
    raise KeyError(case.name)


def base_values(case: TwistCase) -> dict:
    return {n: as_expr(case.ring.gen(n)) for n in case.ring.names}


def twist_invariants(case_name: str) -> Certificate:
    case = twist_case(case_name)
    before = base_values(case)
    after = dehn_twist(case, before)
    bad = []
    for label, inv in case.invariants.items():
        moved = inv.substitute({n: after[n] for n in case.variables})
        if moved != inv:
            bad.append((label, "not invariant"))
    return certify(f"twist-{case_name}", "twist invariants are preserved",
                   f"{case_name} Dehn twist", not bad,
                   detail=f"invariants: {', '.join(case.invariants)}",
                   residue=bad)


def twist_frozen_commutation(case_name: str) -> Certificate:
    """Twisted variables keep log-canonical brackets with the frozen arcs."""
    from .poisson import PoissonStructure

    case = twist_case(case_name)
    if case.name == "PV":
        S = lambda_catalog("PV").structure
    elif case.name == "PVdeg":
        # the alias ring: only {a,b} = ab survives, the boundary arc is central
        S = PoissonStructure(case.ring, {("a", "b"): Fraction(1)})
    elif case.name == "PIII_D6":
        S = lambda_catalog("PIII_tilde").structure
    else:  # PIII_D8: lam11 central, lam44 central on the mutating pair
        S = PoissonStructure(case.ring, {("a", "b"): Fraction(1, 2)})
    before = base_values(case)
    after = dehn_twist(case, before)
    bad = []
    for vname in case.variables:
        for frozen in case.frozen:
            if frozen not in case.ring.index:
                continue
            coeff = S.pair(vname, frozen)
            moved = after[vname]
            fro = as_expr(case.ring.gen(frozen))
            residue = S.bracket_expr(moved, fro) - coeff * moved * fro
            if not residue.is_zero():
                bad.append((vname, frozen))
    return certify(f"twist-frozen-{case_name}", "twists respect the frozen brackets",
                   f"{case_name} Dehn twist vs frozen arcs", not bad,
                   detail="twisted variables bracket like the originals", residue=bad)
