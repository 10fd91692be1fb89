"""Arc machinery: SL2 words, lambda catalogs, cusp brackets, signatures.

Arc lengths are traces of words in the right/left/edge matrices, closed
by the cusp matrix K; the catalogs record each surface's arcs as
monomials (or short sums) in exponentiated shear coordinates, the
pairwise bracket table, and the frozen arcs cutting out the monodromy
manifold.  The purely combinatorial cusp bracket gives the same
coefficients from arrival-order indices alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import catalog
from .certificates import Certificate, certify
from .cubics import G_NAMES, X_NAMES, cubic, mon_mf
from .exprs import parse_expr, parse_poly
from .poisson import PoissonStructure, casimir_kernel, is_casimir_product, solve_structure
from .ring import LaurentPoly, RationalExpr, Ring, RingError, as_expr

Matrix = tuple  # 2x2 nested tuples of LaurentPoly


# -- SL2 words ---------------------------------------------------------------


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2))
        for i in range(2)
    )


def mat_det(A: Matrix) -> LaurentPoly:
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def right_matrix(ring: Ring) -> Matrix:
    one, zero = ring.one(), ring.zero()
    return ((one, one), (-one, zero))


def left_matrix(ring: Ring) -> Matrix:
    one, zero = ring.one(), ring.zero()
    return ((zero, one), (-one, one))


def edge_matrix(ring: Ring, z: str) -> Matrix:
    zero = ring.zero()
    return ((zero, -ring.e({z: Fraction(1, 2)})), (ring.e({z: Fraction(-1, 2)}), zero))


def cusp_matrix(ring: Ring) -> Matrix:
    one, zero = ring.one(), ring.zero()
    return ((zero, zero), (-one, zero))


def word_matrix(ring: Ring, letters: list, close_with_K: bool = False) -> Matrix:
    """Product of word letters: 'R', 'L', or 'X(name)'; optionally right-closed by K."""
    out = None
    for letter in letters:
        if letter == "R":
            m = right_matrix(ring)
        elif letter == "L":
            m = left_matrix(ring)
        elif letter.startswith("X(") and letter.endswith(")"):
            m = edge_matrix(ring, letter[2:-1])
        else:
            raise ValueError(f"bad word letter {letter!r}")
        out = m if out is None else mat_mul(out, m)
    if out is None:
        raise ValueError("empty word")
    if close_with_K:
        out = mat_mul(out, cusp_matrix(ring))
    return out


def word_trace(ring: Ring, letters: list, close_with_K: bool = False) -> LaurentPoly:
    m = word_matrix(ring, letters, close_with_K)
    return m[0][0] + m[1][1]


PV_ARC_WORD = ["X(k1)", "R", "X(s3)", "R", "X(s2)", "R", "X(p2)", "R",
               "X(s2)", "L", "X(s3)", "L", "X(k1)"]


def arc_trace_check() -> Certificate:
    """The worked arc: the K-closed trace of the stated word against the catalog arc b."""
    ring = Ring(["s2", "s3", "p2", "k1"])
    trace = word_trace(ring, PV_ARC_WORD, close_with_K=True)
    b = ring.e({"k1": 1, "s2": 1, "s3": 1, "p2": Fraction(1, 2)})
    bare = word_matrix(ring, PV_ARC_WORD)
    unimodular = mat_det(bare).is_one()
    # deterministic documented outcome: the trace equals b exactly (factor 1)
    ok = (trace == b) and unimodular
    return certify("arc-trace-b", "worked arc trace equals the catalog monomial",
                   "PV arc b word trace", ok,
                   detail="trace = b exactly (discrepancy factor 1); det of the open word is 1",
                   residue=trace - b)


# -- combinatorial cusp bracket ----------------------------------------------


def _sign(k: int) -> int:
    return (k > 0) - (k < 0)


def comb_bracket(u: tuple, v: tuple) -> Fraction:
    """Coefficient c with {g_u, g_v} = c g_u g_v from cusp arrival indices.

    Each arc is ((hole, order), (hole, order)); sign(0) = 0 covers the
    self-index case.
    """
    (s, i), (t, j) = u
    (p, r), (q, l) = v
    total = (_sign(i - r) * (s == p) + _sign(j - r) * (t == p)
             + _sign(i - l) * (s == q) + _sign(j - l) * (t == q))
    return Fraction(total, 4)


def comb_bracket_check() -> Certificate:
    """Antisymmetry plus the worked index pairs against the PV table."""
    data = catalog.load("lambdas")["catalogs"]["PV"]
    idx = {name: tuple(tuple(pair) for pair in pairs)
           for name, pairs in data["cusp_indices"].items()}
    table = {tuple(k.split(",")): Fraction(v) for k, v in data["table"].items()}
    checks = []
    for (uname, u) in idx.items():
        for (vname, v) in idx.items():
            got = comb_bracket(u, v)
            if uname == vname:
                checks.append(got == 0)
            else:
                want = table.get((uname, vname))
                want = -table[(vname, uname)] if want is None else want
                checks.append(got == want)
            checks.append(got == -comb_bracket(v, u))
    # arcs sharing no cusp commute
    checks.append(comb_bracket((("1", 1), ("1", 2)), (("2", 1), ("3", 1))) == 0)
    return certify("comb-bracket", "combinatorial cusp bracket",
                   "cusp-index bracket formula", all(checks),
                   detail="antisymmetric; reproduces the indexed PV pairs")


# -- lambda catalogs -----------------------------------------------------------


@dataclass
class LambdaCatalog:
    tag: str
    shear_ring: Ring
    entries: dict                 # name -> LaurentPoly in shear coordinates
    table: dict                   # (u, v) -> Fraction
    params: tuple                 # central parameter symbols (loop lengths)
    lambda_ring: Ring             # arcs + params as direct generators
    structure: PoissonStructure   # log-canonical structure on lambda_ring
    shear_structure: "PoissonStructure | None"
    frozen: tuple
    identifications: dict         # cubic parameter symbol -> expression string
    casimirs: tuple
    leaf_dim: int
    xexprs: dict                  # x-name -> expression string over lambda_ring
    stated_log_brackets: dict
    solved_log_brackets: dict
    subset_of: "str | None" = None


LAMBDA_TAGS = ("PV", "PVdeg", "PIV", "PIII_hat", "PIII_tilde",
               "PIII_D7", "PIII_D8", "PII_JM", "PII_FN")


@catalog.cached
def lambda_catalog(tag: str) -> LambdaCatalog:
    data = catalog.load("lambdas")["catalogs"]
    if tag not in data:
        raise KeyError(f"no lambda catalog for {tag!r} (have {sorted(data)})")
    entry = data[tag]
    if "subset_of" in entry:
        parent = lambda_catalog(entry["subset_of"])
        names = tuple(entry["subset"])
        table = {(u, v): c for (u, v), c in parent.table.items()
                 if u in names and v in names}
        lring = Ring(names, {n: "lambda" for n in names})
        structure = PoissonStructure(lring, {(u, v): c for (u, v), c in table.items()})
        return LambdaCatalog(
            tag=tag, shear_ring=parent.shear_ring,
            entries={n: parent.entries[n] for n in names},
            table=table, params=(), lambda_ring=lring, structure=structure,
            shear_structure=parent.shear_structure,
            frozen=tuple(n for n in parent.frozen if n in names),
            identifications={}, casimirs=tuple(entry["casimirs"]),
            leaf_dim=int(entry["leaf_dim"]), xexprs={},
            stated_log_brackets={}, solved_log_brackets={},
            subset_of=entry["subset_of"])
    sring = Ring(tuple(entry["shear_generators"]))
    entries = {n: parse_poly(s, sring) for n, s in entry["entries"].items()}
    table_src = entry["table"] if "table" in entry else data[entry["table_ref"]]["table"]
    table = {tuple(k.split(",")): Fraction(v) for k, v in table_src.items()}
    params = tuple(entry.get("params", ()))
    names = tuple(entry["entries"]) + params
    lring = Ring(names, {n: "lambda" for n in entry["entries"]})
    structure = PoissonStructure(lring, {k: v for k, v in table.items()})
    stated = {tuple(k.split(",")): Fraction(v)
              for k, v in entry.get("stated_log_brackets", {}).items()}
    solved = {tuple(k.split(",")): Fraction(v)
              for k, v in entry.get("solved_log_brackets", {}).items()}
    shear_structure = (PoissonStructure.from_log_brackets(sring, solved)
                       if solved else
                       PoissonStructure.from_log_brackets(sring, stated) if stated else None)
    return LambdaCatalog(
        tag=tag, shear_ring=sring, entries=entries, table=table, params=params,
        lambda_ring=lring, structure=structure, shear_structure=shear_structure,
        frozen=tuple(entry.get("frozen", ())),
        identifications=dict(entry.get("identifications", {})),
        casimirs=tuple(entry.get("casimirs", ())),
        leaf_dim=int(entry.get("leaf_dim", 0)),
        xexprs=dict(entry.get("xexprs", {})),
        stated_log_brackets=stated, solved_log_brackets=solved)


def verify_lambda_table(tag: str) -> Certificate:
    """The shear-level structure reproduces every bracket coefficient of the table."""
    cat = lambda_catalog(tag)
    if cat.shear_structure is None:
        raise RingError(f"{tag} has no shear-level structure to verify against")
    S = cat.shear_structure
    bad = []
    for (u, v), c in cat.table.items():
        lhs = S.bracket(cat.entries[u], cat.entries[v])
        rhs = c * cat.entries[u] * cat.entries[v]
        if lhs != rhs:
            bad.append((u, v, lhs - rhs))
    central = catalog.load("lambdas")["catalogs"].get(tag, {}).get("central_shear", [])
    for z in central:
        for name, m in cat.entries.items():
            br = S.bracket(cat.shear_ring.gen(z), m)
            if not br.is_zero():
                bad.append((z, name, br))
    form = "sum entries" if tag == "PIII_hat" else "monomial entries"
    return certify(f"lambda-table-{tag}", "bracket table from the shear structure",
                   f"{tag} arc bracket table", not bad, detail=form,
                   residue=[(u, v, str(r)[:60]) for u, v, r in bad[:4]])


def solve_structure_check(tag: str) -> Certificate:
    """Re-derive the frozen shear structure from the table by a fresh exact solve."""
    cat = lambda_catalog(tag)
    central = catalog.load("lambdas")["catalogs"][tag].get("central_shear", [])
    res = solve_structure(cat.shear_ring, cat.entries, cat.table, central=central)
    ok = res.consistent and not res.free_pairs
    match = True
    stated_ok = True
    if ok:
        for (u, v), c in cat.solved_log_brackets.items():
            if res.structure.log_bracket(u, v) != c:
                match = False
        for (u, v), c in cat.stated_log_brackets.items():
            if res.structure.log_bracket(u, v) != c:
                stated_ok = False
    detail = "unique solution; matches frozen matrix"
    if cat.stated_log_brackets:
        detail += "; quoted coordinate brackets reproduced"
    return certify(f"lambda-solve-{tag}", "shear structure recovered from the table",
                   f"{tag} arc bracket table", ok and match and stated_ok,
                   detail=detail, residue=res.violations or res.free_pairs)


def casimir_check(tag: str) -> Certificate:
    """Kernel of the exponent pairing on the catalog monomials: Casimirs and rank.

    For catalogs with a shear-level structure the kernel is taken on the
    actual shear exponent lattice (loop parameters riding on their central
    perimeter); the subset catalogs use the arc pairing directly.
    """
    cat = lambda_catalog(tag)
    central = catalog.load("lambdas")["catalogs"].get(tag, {}).get("central_shear", [])
    if cat.shear_structure is not None and all(m.is_monomial() for m in cat.entries.values()):
        structure = cat.shear_structure
        mono = dict(cat.entries)
        for p, z in zip(cat.params, central):
            mono[p] = cat.shear_ring.gen(z)
    else:
        structure = cat.structure
        mono = {n: cat.lambda_ring.gen(n) for n in cat.lambda_ring.names}
    report = casimir_kernel(structure, mono)
    expected = []
    for text in cat.casimirs:
        vec = {}
        for part in text.split("*"):
            if "^" in part:
                name, e = part.split("^")
                vec[name] = int(e)
            else:
                vec[part] = 1
        expected.append(vec)
    members = all(is_casimir_product(structure, vec, mono) for vec in expected)
    ok = (report.rank == cat.leaf_dim
          and len(report.kernel) == len(expected) and members)
    # the kernel elements themselves must bracket-commute with every input
    recheck = all(is_casimir_product(structure, vec, mono) for vec in report.kernel)
    return certify(f"casimirs-{tag}", "Casimirs and symplectic leaf dimension",
                   f"{tag} arc algebra kernel", ok and recheck,
                   detail=f"rank {report.rank}, kernel {report.kernel_names()}",
                   residue=report.kernel_names())


def _xexpr_ring(cat: LambdaCatalog) -> Ring:
    return cat.lambda_ring


def x_in_lambda(tag: str) -> dict:
    cat = lambda_catalog(tag)
    ring = _xexpr_ring(cat)
    return {n: parse_expr(s, ring) for n, s in cat.xexprs.items()}


def commutant_check(tag: str) -> Certificate:
    """The x-expressions commute with the frozen arcs and satisfy the cubic."""
    cat = lambda_catalog(tag)
    ring = cat.lambda_ring
    xs = x_in_lambda(tag)
    S = cat.structure
    bad = []
    for xname, expr in xs.items():
        for frozen in cat.frozen:
            br = S.bracket_expr(expr, as_expr(ring.gen(frozen)))
            if not br.is_zero():
                bad.append((xname, frozen, "bracket does not vanish"))
    ident = {g: parse_expr(s, ring) for g, s in cat.identifications.items()}
    omega = []
    for w in cubic(cat.tag).omega:
        img = {}
        for gname in G_NAMES:
            if gname in ident:
                img[gname] = ident[gname]
            elif gname in ring.index:
                img[gname] = as_expr(ring.gen(gname))
            else:
                img[gname] = as_expr(ring.zero())
        omega.append(w.substitute(img, ring=ring))
    e1, e2, e3 = cubic(cat.tag).eps
    x1, x2, x3 = xs["x1"], xs["x2"], xs["x3"]
    phi = (x1 * x2 * x3 + e1 * x1 ** 2 + e2 * x2 ** 2 + e3 * x3 ** 2
           + omega[0] * x1 + omega[1] * x2 + omega[2] * x3 + omega[3])
    if not phi.is_zero():
        bad.append(("phi", cat.tag, "cubic not satisfied"))
    return certify(f"commutant-{tag}", "x-expressions: frozen commutation and cubic",
                   f"{tag} coordinates in arc lengths", not bad,
                   detail=f"frozen: {','.join(cat.frozen)}",
                   residue=bad[:4])


def pvi_from_pv_check() -> Certificate:
    """The four-hole coordinates recovered in the PV arc algebra satisfy their cubic."""
    data = catalog.load("lambdas")["pvi_from_pv"]
    cat = lambda_catalog("PV")
    ring = cat.lambda_ring
    xs = {n: parse_expr(s, ring) for n, s in data["xexprs"].items()}
    ident = {g: parse_expr(s, ring) for g, s in data["identifications"].items()}
    img = {}
    for gname in G_NAMES:
        if gname in ident:
            img[gname] = ident[gname]
        elif gname in ring.index:
            img[gname] = as_expr(ring.gen(gname))
    omega = [w.substitute(img, ring=ring) for w in cubic("PVI").omega]
    x1, x2, x3 = xs["x1"], xs["x2"], xs["x3"]
    phi = (x1 * x2 * x3 + x1 ** 2 + x2 ** 2 + x3 ** 2
           + omega[0] * x1 + omega[1] * x2 + omega[2] * x3 + omega[3])
    # specialisation e = 1 collapses the extra parameter to the value 2
    deg = parse_expr(data["identifications"]["G3"], ring).substitute(
        {"e": ring.one()}).as_poly()
    point = {n: v for n, v in zip(ring.names, (2, 3, 5, 7, 11, 13, 17))}
    spot = phi.evaluate(point) == 0
    ok = phi.is_zero() and deg.constant_value() == 2 and spot
    return certify("pvi-from-pv", "four-hole cubic inside the PV arc algebra",
                   "PVI coordinates from PV arcs", ok,
                   detail="identifications G3 = e + 1/e, Ginf = d + 1/d",
                   residue=phi)


def lamination_count_check(tag: str) -> Certificate:
    """Moduli dimension = number of arcs + number of loop parameters."""
    cat = lambda_catalog(tag)
    sig = signature({"PIII_hat": "PIII_D6", "PIII_tilde": "PIII_D6"}.get(tag, tag))
    count = len(cat.entries) + len(cat.params)
    ok = sig.dimension() == count
    return certify(f"lamination-count-{tag}", "arc count matches moduli dimension",
                   f"{tag} lamination", ok,
                   detail=f"dim {sig.dimension()} = {len(cat.entries)} arcs + {len(cat.params)} loops")


# -- signatures (irregularity bookkeeping) ------------------------------------


@dataclass
class Signature:
    tag: str
    holes: tuple       # cusps per hole of the actual surface
    row: tuple         # classical per-singular-point cusp tuple
    stated_dim: int
    in_table: bool
    phantom_hole: bool

    def genus(self) -> int:
        return 0

    def dimension(self) -> int:
        s, n = len(self.holes), sum(self.holes)
        return 6 * self.genus() - 6 + 3 * s + 2 * n

    def katz(self) -> tuple:
        return tuple(Fraction(c, 2) for c in self.row)

    def stokes_rays(self) -> tuple:
        return tuple(self.row)

    def pole_orders(self) -> tuple:
        return tuple(c + 2 for c in self.row)


@catalog.cached
def signature(tag: str) -> Signature:
    data = catalog.load("signatures")["signatures"]
    if tag not in data:
        raise KeyError(f"no signature for {tag!r}")
    entry = data[tag]
    return Signature(tag=tag, holes=tuple(entry["holes"]), row=tuple(entry["row"]),
                     stated_dim=int(entry["dim"]), in_table=bool(entry.get("in_table", True)),
                     phantom_hole=bool(entry.get("phantom_hole", False)))


def signature_check(tag: str) -> Certificate:
    sig = signature(tag)
    ok = sig.dimension() == sig.stated_dim
    katz = ",".join(str(k) for k in sig.katz())
    detail = (f"s={len(sig.holes)} n={sum(sig.holes)} dim={sig.dimension()} "
              f"katz={katz} stokes={','.join(map(str, sig.stokes_rays()))} "
              f"poles={','.join(map(str, sig.pole_orders()))}")
    if sig.phantom_hole:
        detail += " (row keeps a phantom uncusped point)"
    return certify(f"signature-{tag}", "irregularity arithmetic",
                   f"{tag} surface signature", ok, detail=detail)
