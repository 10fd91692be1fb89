"""Confluence limits between charts and the reversed algebra inclusions.

An arrow rescales shear coordinates by z -> z + c log(eps); on the
exponentiated generators this is g_z -> eps^{c/2} g_z, with half-integer
eps-weights tracked exactly.  The limit eps -> 0 is the minimal
eps-degree part, taken per coordinate (the three coordinates may sit at
different leading degrees); after expanding all parameter symbols it
must coincide with the target chart exactly.

The inclusion direction of the arc algebras runs opposite to the
cusp-removal arrows: each embedding sends the smaller catalog's arcs to
monomials of the bigger one, preserving every bracket coefficient.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import catalog
from .certificates import Certificate, certify
from .cubics import X_NAMES
from .arcs import lambda_catalog
from .exprs import parse_poly
from .ring import LaurentPoly, Ring, RingError
from .shear import SHEAR_NAMES, chart


@dataclass
class Arrow:
    src: str
    dst: str
    shift: dict          # coordinate -> coefficient of log(eps)
    label: str
    secondary: bool
    note: str


@catalog.cached
def arrows() -> tuple:
    data = catalog.load("arrows")["arrows"]
    return tuple(Arrow(src=a["src"], dst=a["dst"],
                       shift={k: Fraction(v) for k, v in a["shift"].items()},
                       label=a["label"], secondary=bool(a.get("secondary", False)),
                       note=a.get("note", "")) for a in data)


def arrow(src: str, dst: str) -> Arrow:
    for a in arrows():
        if a.src == src and a.dst == dst:
            return a
    raise KeyError(f"no confluence arrow {src} -> {dst}")


def eps_ring() -> Ring:
    return Ring(SHEAR_NAMES + ("eps",), {"eps": "epsilon"})


def scaled_chart_coords(a: Arrow) -> list:
    """Source chart coordinates after the arrow's eps-rescaling."""
    ring = eps_ring()
    images = {}
    for z, c in a.shift.items():
        images[z] = ring.monomial({z: 1, "eps": Fraction(c, 2)})
    return [x.cast(ring).substitute(images, ring=ring).as_poly()
            for x in chart(a.src).x]


def limit_chart_coords(a: Arrow) -> tuple:
    """(leading degrees, leading parts) of the rescaled source coordinates."""
    degrees, leads = [], []
    for scaled in scaled_chart_coords(a):
        d, lead = scaled.epsilon_leading()
        degrees.append(d)
        leads.append(lead)
    return degrees, leads


def confluent_limit(a: Arrow) -> Certificate:
    ring = eps_ring()
    degrees, leads = limit_chart_coords(a)
    target = [x.cast(ring) for x in chart(a.dst).x]
    bad = [lead - t for lead, t in zip(leads, target) if lead != t]
    degs = ",".join(str(d) for d in degrees)
    return certify(f"confluence-{a.src}-{a.dst}", "confluence limit lands on the target chart",
                   f"{a.src} -> {a.dst}", not bad,
                   detail=f"{a.label}; leading degrees {degs}",
                   residue=bad[0] if bad else "")


def degree_bound_check(a: Arrow) -> bool:
    """min eps-degree of phi(x(eps)) >= a crude product bound from the x-degrees."""
    from .cubics import cubic, mon_mf
    ring = eps_ring()
    scaled = scaled_chart_coords(a)
    G = {name: g.cast(ring).substitute(
            {z: ring.monomial({z: 1, "eps": Fraction(c, 2)}) for z, c in a.shift.items()},
            ring=ring).as_poly()
         for name, g in chart(a.src).G.items()}
    omega = [w.substitute(G, ring=ring).as_poly() for w in cubic(a.src).omega]
    x1, x2, x3 = scaled
    e1, e2, e3 = cubic(a.src).eps
    phi = (x1 * x2 * x3 + e1 * x1 ** 2 + e2 * x2 ** 2 + e3 * x3 ** 2
           + omega[0] * x1 + omega[1] * x2 + omega[2] * x3 + omega[3])
    if phi.is_zero():
        return True
    worst = min(x.epsilon_min_degree() for x in scaled)
    return phi.epsilon_min_degree() >= 2 * worst


def two_route_check() -> Certificate:
    """Both routes into the doubly-degenerate third-equation chart agree."""
    via_d6 = arrow("PIII_D6", "PIII_D7")
    via_deg = arrow("PVdeg", "PIII_D7")
    _, leads_a = limit_chart_coords(via_d6)
    _, leads_b = limit_chart_coords(via_deg)
    bad = [p - q for p, q in zip(leads_a, leads_b) if p != q]
    return certify("confluence-two-route", "route independence of the limit",
                   "PV -> PIII_D7 via PIII_D6 vs via PVdeg", not bad,
                   residue=bad[0] if bad else "")


# -- reversed embeddings ------------------------------------------------------


@dataclass
class EmbeddingMap:
    sub: str
    ambient: str
    images: dict          # sub arc name -> monomial string over the ambient arcs
    stated: tuple
    central_images: dict  # sub central parameter -> ambient monomial standing in
    param_images: dict    # sub parameter carried to an ambient parameter
    expected_mismatches: dict
    note: str


@catalog.cached
def embeddings() -> tuple:
    data = catalog.load("arrows")["embeddings"]
    return tuple(EmbeddingMap(
        sub=e["sub"], ambient=e["ambient"], images=dict(e["images"]),
        stated=tuple(e.get("stated", list(e["images"]))),
        central_images=dict(e.get("central_images", {})),
        param_images=dict(e.get("param_images", {})),
        expected_mismatches={tuple(k.split(",")): Fraction(v)
                             for k, v in e.get("expected_mismatches", {}).items()},
        note=e.get("note", "")) for e in data)


def embedding(sub: str, ambient: str) -> EmbeddingMap:
    for e in embeddings():
        if e.sub == sub and e.ambient == ambient:
            return e
    raise KeyError(f"no embedding of {sub} into {ambient}")


def _image_monomials(emb: EmbeddingMap) -> dict:
    amb = lambda_catalog(emb.ambient)
    ring = amb.lambda_ring
    out = {}
    for name, text in emb.images.items():
        mono = parse_poly(text, ring)
        if not mono.is_monomial():
            raise RingError(f"embedding image of {name} is not a monomial")
        out[name] = mono
    for pname, text in emb.param_images.items():
        out[pname] = parse_poly(text, ring)
    return out


def embedding_check(emb: EmbeddingMap) -> Certificate:
    """Ambient brackets of the images reproduce the sub-catalog's table."""
    sub = lambda_catalog(emb.sub)
    amb = lambda_catalog(emb.ambient)
    images = _image_monomials(emb)
    S = amb.structure
    bad, documented = [], []
    for (u, v), c in sub.table.items():
        if u not in images or v not in images:
            continue
        got = S.monomial_coefficient(images[u], images[v])
        if got == c:
            continue
        key = (u, v)
        if key in emb.expected_mismatches and emb.expected_mismatches[key] == got:
            documented.append(f"{{{u},{v}}}: ambient {got} vs own {c}")
        else:
            bad.append((u, v, got, c))
    # parameters carried across stay central on the image set
    for pname, text in {**emb.central_images, **emb.param_images}.items():
        carrier = parse_poly(text, amb.lambda_ring)
        for name, img in images.items():
            if S.monomial_coefficient(carrier, img) != 0:
                bad.append((pname, name, "carrier not central", 0))
    detail = f"{len(emb.images)} images"
    if documented:
        detail += f"; documented mismatches: {'; '.join(documented)}"
    return certify(f"embedding-{emb.sub}-in-{emb.ambient}",
                   "arc algebra inclusion preserves brackets",
                   f"{emb.sub} inside {emb.ambient}", not bad, detail=detail,
                   residue=bad[:4])


def composite_embedding_check() -> Certificate:
    """The PV arcs pushed through PIV land in PII_JM with the PV brackets."""
    first = embedding("PV", "PIV")
    second = embedding("PIV", "PII_JM")
    jm = lambda_catalog("PII_JM")
    ring = jm.lambda_ring
    second_imgs = {n: parse_poly(t, ring) for n, t in second.images.items()}
    composite = {}
    for name, text in first.images.items():
        piv_mono = parse_poly(text, lambda_catalog("PIV").lambda_ring)
        product = ring.one()
        exps = piv_mono.monomial_exps()
        for i, e in enumerate(exps):
            if e == 0:
                continue
            gname = lambda_catalog("PIV").lambda_ring.names[i]
            product = product * second_imgs[gname] ** int(e)
        composite[name] = product
    sub = lambda_catalog("PV")
    bad = []
    for (u, v), c in sub.table.items():
        if u not in composite or v not in composite:
            continue
        got = jm.structure.monomial_coefficient(composite[u], composite[v])
        if got != c:
            bad.append((u, v, got, c))
    return certify("embedding-composite-PV-PIIJM",
                   "embeddings compose along the diagram",
                   "PV inside PII_JM through PIV", not bad, residue=bad[:4])


# -- graph exports ------------------------------------------------------------


def confluence_dot() -> str:
    lines = ["digraph confluence {", "  rankdir=LR;"]
    for a in arrows():
        style = ' style=dashed' if a.secondary else ""
        lines.append(f'  "{a.src}" -> "{a.dst}" [label="{a.label}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def inclusion_dot() -> str:
    lines = ["digraph inclusions {", "  rankdir=LR;",
             '  label="arc algebra inclusions (arrows point into the bigger algebra)";']
    for e in embeddings():
        lines.append(f'  "{e.sub}" -> "{e.ambient}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json() -> str:
    payload = {
        "arrows": [{"src": a.src, "dst": a.dst,
                    "shift": {k: str(v) for k, v in a.shift.items()},
                    "label": a.label, "secondary": a.secondary}
                   for a in arrows()],
        "inclusions": [{"sub": e.sub, "ambient": e.ambient, "images": e.images}
                       for e in embeddings()],
    }
    return json.dumps(payload, indent=1, sort_keys=True) + "\n"
