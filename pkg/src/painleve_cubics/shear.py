"""Shear-coordinate charts, their verification, flips and coordinate changes.

A chart parametrises a cubic's coordinates x1, x2, x3 by Laurent
monomial sums in exponentiated shear coordinates; substituting the chart
(and its parameter definitions) into the cubic must give the zero
polynomial.  Flips act on the coordinates by the exponentiated exchange
relations; they only ever need integer powers of e^{s_i}, which is why
their images are registered with granularity 2 on the half-generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import catalog
from .certificates import Certificate, certify
from .cubics import G_NAMES, X_NAMES, cubic, mon_mf
from .exprs import parse_expr, parse_poly
from .poisson import PoissonStructure
from .ring import GenImage, LaurentPoly, RationalExpr, Ring, as_expr

SHEAR_NAMES = ("s1", "s2", "s3", "p1", "p2", "p3")


@dataclass
class ShearChart:
    tag: str
    ring: Ring
    x: tuple            # three LaurentPoly with parameters expanded
    x_sym: tuple        # the catalog strings (parameters symbolic)
    G: dict             # parameter name -> LaurentPoly in shear coordinates
    normalization: str


def shear_ring() -> Ring:
    return Ring(SHEAR_NAMES)


@catalog.cached
def chart(tag: str) -> ShearChart:
    data = catalog.load("charts")
    if tag not in data["charts"]:
        raise KeyError(f"no chart for tag {tag!r}")
    entry = data["charts"][tag]
    ring = shear_ring()
    G = {name: parse_poly(s, ring) for name, s in entry["G"].items()}
    xs = tuple(parse_poly(entry[n], ring, symbols=G) for n in X_NAMES)
    return ShearChart(tag=tag, ring=ring, x=xs,
                      x_sym=tuple(entry[n] for n in X_NAMES),
                      G=G, normalization=entry["normalization"])


def chart_phi_residue(tag: str) -> LaurentPoly:
    """phi(x1,x2,x3) with the chart's parameter values; zero iff the chart lies on the cubic."""
    ch = chart(tag)
    omega = tuple(w.substitute(ch.G, ring=ch.ring).as_poly() for w in cubic(tag).omega)
    phi = mon_mf(ch.ring.extend(X_NAMES), cubic(tag).eps,
                 tuple(w.cast(ch.ring.extend(X_NAMES)) for w in omega))
    images = {n: ch.x[i].cast(ch.ring.extend(X_NAMES)) for i, n in enumerate(X_NAMES)}
    return phi.substitute(images).as_poly().cast(ch.ring)


def verify_chart(tag: str) -> Certificate:
    res = chart_phi_residue(tag)
    return certify(f"chart-{tag}", "shear chart satisfies its cubic",
                   f"{tag} shear chart", res.is_zero(), residue=res)


def normalization_images(tag: str) -> dict:
    """The chart's parameter-fixing constraint as substitution images."""
    entry = catalog.load("charts")["charts"][tag]
    ring = shear_ring()
    images = {}
    for gen, spec in entry.get("normalization_subst", {}).items():
        granularity = 1 if spec["power"] == "half" else 2
        images[gen] = GenImage(parse_expr(spec["image"], ring), granularity)
    return images


def chart_normalization_check(tag: str) -> Certificate:
    """The constraint drives the parameter definitions to their stated values."""
    entry = catalog.load("charts")["charts"][tag]
    ch = chart(tag)
    images = normalization_images(tag)
    targets = entry.get("normalization_targets", {})
    bad = []
    for gname, want in targets.items():
        got = ch.G[gname].substitute(images) if images else as_expr(ch.G[gname])
        if want == "Ginf":
            expect = ch.G["Ginf"].substitute(images)
        else:
            expect = as_expr(parse_expr(want, ch.ring).num)
        if got != expect:
            bad.append((gname, want))
    detail = ", ".join(f"{g} = {w}" for g, w in targets.items()) or "no constraint needed"
    if "normalization_residual" in entry:
        detail += f"; {entry['normalization_residual']}"
    return certify(f"chart-normalization-{tag}", "normalisation fixes the parameters",
                   f"{tag} chart normalisation", not bad, detail=detail, residue=bad)


# -- flips ------------------------------------------------------------------


def flip(i: int) -> dict:
    """The i-th exchange move as substitution images on the shear generators.

    s-images carry granularity 2 (they are images of e^{s}); the x's only
    involve integer powers of e^{s_j}, so substitution never demands a half
    power of a non-monomial.
    """
    if i not in (1, 2, 3):
        raise ValueError("flip index must be 1, 2 or 3")
    ring = shear_ring()
    order = {1: ("s1", "s2", "s3", "p1", "p2", "p3"),
             2: ("s2", "s3", "s1", "p2", "p3", "p1"),
             3: ("s3", "s1", "s2", "p3", "p1", "p2")}[i]
    si, sj, sk, pi_, pj, pk = order
    return {
        si: GenImage(parse_expr(f"e[-{pi_}/2-{si}/2]", ring)),
        sj: GenImage(parse_expr(f"e[{sk}]*(1+e[{si}])*(1+e[{si}+{pi_}])", ring), granularity=2),
        sk: GenImage(parse_expr(f"e[{sj}]/((1+e[-{si}])*(1+e[-{si}-{pi_}]))", ring), granularity=2),
        pj: GenImage(parse_expr(f"e[{pk}/2]", ring)),
        pk: GenImage(parse_expr(f"e[{pj}/2]", ring)),
    }


def flip_involution_check(i: int) -> Certificate:
    """f_i composed with itself is the identity on the exponentiated coordinates."""
    ring = shear_ring()
    m = flip(i)
    probes = [ring.e({n: 1}) for n in ("s1", "s2", "s3")] + \
             [ring.e({n: Fraction(1, 2)}) for n in ("p1", "p2", "p3")]
    bad = []
    for probe in probes:
        once = probe.substitute(m)
        twice = once.substitute(m)
        if twice != as_expr(probe):
            bad.append(twice - as_expr(probe))
    ginf = chart("PVI").G["Ginf"]
    ginf_ok = ginf.substitute(m) == as_expr(ginf)
    return certify(f"flip-involution-{i}", "flip is an involution",
                   f"exchange move f{i}", not bad and ginf_ok,
                   detail="also fixes Ginf",
                   residue=bad[0] if bad else "")


def _braid_candidates(xs, omega):
    """All rational maps x -> beta_j(x) (both coefficient sign conventions)."""
    for j in (1, 2, 3):
        jj, kk = [t for t in (1, 2, 3) if t != j]
        for sgn, conv in ((-1, "-w"), (1, "+w")):
            rhs = {
                f"x{j}": as_expr(-xs[j - 1] - xs[jj - 1] * xs[kk - 1] + sgn * omega[j - 1]),
                f"x{jj}": as_expr(xs[kk - 1]),
                f"x{kk}": as_expr(xs[jj - 1]),
            }
            yield j, conv, rhs


def verify_flip_braid(i: int) -> Certificate:
    """Which coordinate braid does the flip f_i induce on the PVI chart?"""
    ch = chart("PVI")
    omega = tuple(w.substitute(ch.G, ring=ch.ring).as_poly()
                  for w in cubic("PVI").omega)
    m = flip(i)
    lhs = {n: ch.x[k].substitute(m) for k, n in enumerate(X_NAMES)}
    matches = []
    for j, conv, rhs in _braid_candidates(ch.x, omega):
        if all(lhs[n] == rhs[n] for n in X_NAMES):
            matches.append((j, conv))
    ok = len(matches) == 1
    detail = f"induces braid {matches[0][0]} ({matches[0][1]} convention)" if matches else "no braid matches"
    return certify(f"flip-braid-{i}", "flip induces a coordinate braid",
                   f"exchange move f{i} on the PVI chart", ok, detail=detail,
                   residue="" if ok else "all candidates left a residue")


# -- the PV -> PIII coordinate change ---------------------------------------


def _pv_structure() -> tuple:
    entry = catalog.load("lambdas")["catalogs"]["PV"]
    ring = Ring(tuple(entry["shear_generators"]))
    log = {tuple(k.split(",")): Fraction(v) for k, v in entry["solved_log_brackets"].items()}
    return ring, PoissonStructure.from_log_brackets(ring, log)


def pv_to_piii_hat_images() -> dict:
    """Exponentials of the flipped coordinates as expressions in the old ones.

    The product of exchange factors enters the new perimeter with a minus
    sign in the logarithm (i.e. as a denominator here); only that reading
    makes every chain-rule bracket constant.
    """
    ring, _ = _pv_structure()
    E = lambda s: parse_expr(s, ring)
    return {
        "s1": E("e[-s1-p1] / (1 + e[s2])"),
        "s2": E("e[-s2] * (1 + e[p1+s1] + e[p1+s1+s2]) * (1 + e[s1] + e[s1+s2])"),
        "s3": E("e[s3] / (1 + e[-s2])"),
        "p1": E("e[p1]"),
        "p2": E("e[p2+s2+p1+2*s1] * (1 + e[s2])^2"
                " / ((1 + e[p1+s1] + e[p1+s1+s2]) * (1 + e[s1] + e[s1+s2]))"),
        "k1": E("e[k1]"),
        "k2": E("e[k2]"),
    }


# log-level brackets of the flipped coordinates: the quoted list, with
# unlisted pairs zero and {s1, p1} = 0 forced by the cusp splitting of p1.
PV_TO_PIII_EXPECTED = {
    ("s1", "s2"): Fraction(1),
    ("s2", "s3"): Fraction(-1),
    ("s2", "p2"): Fraction(2),
    ("s1", "p2"): Fraction(-1),
    ("s3", "p2"): Fraction(-1),
    ("s3", "k1"): Fraction(1),
    ("s3", "k2"): Fraction(-1),
    ("k1", "k2"): Fraction(1),
}


def pv_to_piii_change() -> Certificate:
    """Chain-rule brackets of the flipped coordinates are the stated constants."""
    ring, S = _pv_structure()
    images = pv_to_piii_hat_images()
    names = list(images)
    bad = []
    computed = {}
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            u, v = names[a], names[b]
            expr = S.bracket_expr(images[u], images[v]) / (images[u] * images[v])
            if not expr.is_poly() or not expr.num.is_constant():
                bad.append((u, v, "non-constant bracket"))
                continue
            val = expr.num.constant_value()
            computed[(u, v)] = val
            expect = PV_TO_PIII_EXPECTED.get((u, v), PV_TO_PIII_EXPECTED.get((v, u)))
            expect = Fraction(0) if expect is None else (
                expect if (u, v) in PV_TO_PIII_EXPECTED else -expect)
            if val != expect:
                bad.append((u, v, f"got {val}, expected {expect}"))
    detail = "all chain-rule brackets constant; quoted values reproduced"
    return certify("pv-to-piii-change", "flipped coordinates have the stated brackets",
                   "PV flipped-chart coordinate brackets", not bad,
                   detail=detail, residue=bad[:4] if bad else "")


def pv_to_piii_bracket_table() -> dict:
    """The computed constant brackets {hat u, hat v} (log level), for display."""
    ring, S = _pv_structure()
    images = pv_to_piii_hat_images()
    names = list(images)
    out = {}
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            u, v = names[a], names[b]
            expr = S.bracket_expr(images[u], images[v]) / (images[u] * images[v])
            if expr.is_poly() and expr.num.is_constant():
                val = expr.num.constant_value()
                if val != 0:
                    out[f"{u},{v}"] = str(val)
    return out
