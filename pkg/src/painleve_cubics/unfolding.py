"""Change-of-variable certificates onto singularity normal forms.

The corank-3 case decomposes exactly: after the stated shifts and the
plane rotation, the cubic splits as a Morse term x3^2, an explicit
quartic square (the local-equivalence tail, recorded), and the shifted
normal form with the catalogued unfolding parameters.  The implicit
cases adjoin an auxiliary variable with its clearing-denominators
relation; reduction modulo the relation (monic in u up to an invertible
monomial, so division is exact) must leave zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import catalog, linalg
from .certificates import Certificate, certify
from .exprs import parse_expr, parse_poly
from .ring import LaurentPoly, RationalExpr, Ring, RingError, as_expr

W_RING = Ring(("x1", "x2", "x3", "w1", "w2", "w3", "w4"))


def reduce_mod_u(poly: LaurentPoly, relation: LaurentPoly, uname: str) -> tuple:
    """Remainder and quotient of ``poly`` modulo ``relation`` as polynomials in u.

    The relation's leading u-coefficient must be an invertible monomial, so
    each elimination step is exact; poly may carry negative u-powers, which
    are cleared first (the clearing power is returned).
    """
    ring = poly.ring
    ui = ring.index[uname]
    neg = min((exps[ui] for exps in poly.terms), default=0)
    clear = -min(0, neg)
    work = poly * ring.gen(uname, clear) if clear else poly
    rel_deg = max(exps[ui] for exps in relation.terms)
    lead = {exps: c for exps, c in relation.terms.items() if exps[ui] == rel_deg}
    if len(lead) != 1:
        raise RingError("relation leading u-coefficient is not a monomial")
    (lead_exps, lead_c), = lead.items()
    lead_mono = LaurentPoly(ring, {lead_exps: lead_c})
    quotient = ring.zero()
    while not work.is_zero():
        deg = max(exps[ui] for exps in work.terms)
        if deg < rel_deg:
            break
        top = LaurentPoly(ring, {e: c for e, c in work.terms.items() if e[ui] == deg})
        factor = top * lead_mono ** -1
        work = work - factor * relation
        quotient = quotient + factor
    return work, quotient, clear


def _substituted(phi: LaurentPoly, sub: dict, ring: Ring) -> RationalExpr:
    images = {name: parse_expr(text, ring) for name, text in sub.items()}
    return phi.cast(ring).substitute(images, ring=ring)


@catalog.cached
def _data() -> dict:
    return catalog.load("unfoldings")


def hat_param_table() -> dict:
    entry = _data()["d4"]
    return {name: parse_poly(text, W_RING) for name, text in entry["hat_params"].items()}


def hat_param_rank_check() -> Certificate:
    """The affine-linear part of w -> w-hat has full rank 4."""
    table = hat_param_table()
    rows = []
    for name in ("wh1", "wh2", "wh3", "wh4"):
        poly = table[name]
        row = []
        for w in ("w1", "w2", "w3", "w4"):
            i = W_RING.index[w]
            coeff = Fraction(0)
            for exps, c in poly.terms.items():
                if exps[i] == 1 and sum(abs(e) for e in exps) == 1:
                    coeff = c
            row.append(coeff)
        rows.append(row)
    rank = linalg.rank(rows)
    at_zero = []
    for name in ("wh1", "wh2", "wh3", "wh4"):
        p = table[name]
        for w in ("w1", "w2", "w3", "w4"):
            p = p.substitute({w: W_RING.const(0)}).as_poly()
        at_zero.append(p.constant_value())
    ok = rank == 4 and at_zero == [Fraction(-8), Fraction(0), Fraction(8), Fraction(4)]
    return certify("unfold-d4-params", "unfolding parameters are independent",
                   "corank-3 parameter map", ok,
                   detail=f"linear rank {rank}; value at 0 is (-8, 0, 8, 4)")


def unfold_d4() -> Certificate:
    """Exact decomposition: shifted cubic = Morse term + quartic tail + normal form."""
    entry = _data()["d4"]
    ring = W_RING
    x1, x2, x3 = (ring.gen(n) for n in ("x1", "x2", "x3"))
    w1, w2, w3, w4 = (ring.gen(n) for n in ("w1", "w2", "w3", "w4"))
    phi = (x1 * x2 * x3 + x1 ** 2 + x2 ** 2 + x3 ** 2
           + w1 * x1 + w2 * x2 + w3 * x3 + w4)
    shift = entry["pre_shift"]
    shifted = phi.substitute({n: ring.gen(n) + shift for n in ("x1", "x2", "x3")}).as_poly()
    result = _substituted(shifted, entry["diffeo"], ring).as_poly()
    # split off the x3 directions: nothing mixed, quadratic coefficient constant
    i3 = ring.index["x3"]
    degrees = {exps[i3] for exps in result.terms}
    pure = degrees <= {0, 2}
    morse = LaurentPoly(ring, {e: c for e, c in result.terms.items() if e[i3] == 2})
    kappa = morse * x3 ** -2
    plane = LaurentPoly(ring, {e: c for e, c in result.terms.items() if e[i3] == 0})
    tail = parse_poly(entry["tail"], ring)
    corrected = plane + tail
    moved = corrected.substitute({"x1": parse_expr(entry["post_shift_x1"], ring)}).as_poly()
    hats = hat_param_table()
    target = parse_poly(entry["target"], ring, symbols=hats)
    res = moved - target
    ok = pure and kappa.is_one() and res.is_zero()
    return certify("unfold-d4", "corank-3 normal form",
                   "four-hole cubic unfolding", ok,
                   detail="Morse coefficient 1; tail -(x1^2 - x2^2/4)^2/4 recorded",
                   residue=res)


def _implicit_case(key: str) -> Certificate:
    entry = _data()[key]
    params = tuple(entry["param_generators"])
    ring = Ring(("x1", "x2", "x3", "u") + params)
    if "cubic" in entry:
        phi = parse_poly(entry["cubic"], ring)
    else:
        omega = {w: parse_poly(text, ring) for w, text in entry["omega"].items()}
        x1, x2, x3 = (ring.gen(n) for n in ("x1", "x2", "x3"))
        eps = {"a3": (1, 1, 0), "a2": (1, 0, 0)}[key]
        phi = x1 * x2 * x3 + omega["w1"] * x1 + omega["w2"] * x2 + omega["w3"] * x3 + omega["w4"]
        for e, name in zip(eps, ("x1", "x2", "x3")):
            if e:
                phi = phi + ring.gen(name) ** 2
    out = _substituted(phi, entry["substitution"], ring).as_poly()
    target = parse_poly(entry["target"], ring)
    clear_pow = int(entry["relation_clear_power"])
    lhs = parse_expr(entry["relation_lhs"], ring)
    rhs = parse_expr(entry["relation_rhs"], ring)
    relation = ((lhs - rhs) * ring.gen("u", clear_pow)).as_poly()
    diff = out - target
    remainder, quotient, clear = reduce_mod_u(diff, relation, "u")
    reproduced = diff * ring.gen("u", clear) == quotient * relation + remainder
    sing = entry["singularity"]
    return certify(f"unfold-{key}", f"corank-1 normal form ({sing})",
                   f"{entry['tag']} unfolding", remainder.is_zero() and reproduced,
                   detail=f"reduced modulo the degree-{_udeg(relation, ring)} relation in u",
                   residue=remainder)


def _udeg(relation: LaurentPoly, ring: Ring) -> int:
    ui = ring.index["u"]
    return max(exps[ui] for exps in relation.terms)


def unfold_a3() -> Certificate:
    return _implicit_case("a3")


def unfold_a2() -> Certificate:
    return _implicit_case("a2")


def unfold_a1_pii() -> Certificate:
    return _implicit_case("a1_pii")


def unfold_a1_pvdeg() -> Certificate:
    """Both explicit charts map onto the Morse normal form, as rational identities."""
    entry = _data()["a1_pvdeg"]
    ring = Ring(("x1", "x2", "x3") + tuple(entry["param_generators"]))
    phi = parse_poly(entry["cubic"], ring)
    bad = []
    for i, chart in enumerate(entry["charts"], start=1):
        out = _substituted(phi, chart["substitution"], ring)
        target = parse_poly(chart["target"], ring)
        if out != as_expr(target):
            bad.append((i, out - as_expr(target)))
    return certify("unfold-a1-pvdeg", "corank-1 normal form (two charts)",
                   "degenerate fifth-equation unfolding", not bad,
                   detail="both chart maps verified by cross-multiplication",
                   residue=bad[:1])


def singular_points_check() -> Certificate:
    """The stated singular points of the most degenerate fibre, plus a regular probe."""
    from .cubics import singular_point_check

    entry = _data()["a1_pvdeg"]["singular_fibre"]
    gvals = {"G1": -int(entry["params"]["w1"]), "G2": -int(entry["params"]["w2"])}
    ok = all(singular_point_check("PVdeg", gvals, tuple(pt))
             for pt in entry["singular_points"])
    probe_singular = singular_point_check("PVdeg", gvals, tuple(entry["regular_probe"]))
    return certify("singular-points-pvdeg", "singular points of the degenerate fibre",
                   "PVdeg singular fibre", ok and not probe_singular,
                   detail=f"points {entry['singular_points']} singular; probe {entry['regular_probe']} is not")


def all_unfold_certs() -> list:
    return [unfold_d4(), hat_param_rank_check(), unfold_a3(), unfold_a2(),
            unfold_a1_pvdeg(), unfold_a1_pii(), singular_points_check()]
