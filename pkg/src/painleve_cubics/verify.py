"""Assembly of the full certificate suite.

Certificates are grouped by subsystem; ``run`` executes one group or all
of them and returns the certificates in a fixed order (sorted by id
within the declared group order), so reports are byte-deterministic.
"""

from __future__ import annotations

from typing import Callable

from . import arcs, cluster, confluence, cubics, shear, unfolding
from .certificates import Certificate

GROUPS = ("charts", "atlas", "cubics", "nambu", "confluence",
          "lambda", "casimirs", "commutant", "cluster", "twists",
          "signatures", "unfolding", "arcs")

SOLVE_TAGS = ("PV", "PVdeg", "PIV", "PIII_tilde", "PII_JM", "PII_FN")
TABLE_TAGS = ("PV", "PVdeg", "PIV", "PIII_hat", "PIII_tilde", "PII_JM", "PII_FN")
CASIMIR_TAGS = ("PV", "PVdeg", "PIV", "PIII_tilde", "PIII_D7", "PIII_D8",
                "PII_JM", "PII_FN")
COMMUTANT_TAGS = ("PV", "PVdeg", "PII_FN")
COUNT_TAGS = ("PV", "PVdeg", "PIV", "PIII_tilde", "PII_JM", "PII_FN")
SIGNATURE_TAGS = ("PVI", "PV", "PVdeg", "PIV", "PIII_D6", "PIII_D7", "PIII_D8",
                  "PII_FN", "PII_JM", "PI", "Weierstrass", "Airy")
TWIST_CASES = ("PV", "PVdeg", "PIII_D6", "PIII_D8")


def _suite() -> list:
    jobs: list = []

    def add(group: str, fn: Callable, *args):
        jobs.append((group, fn, args))

    for tag in cubics.tags():
        add("charts", shear.verify_chart, tag)
        add("charts", shear.chart_normalization_check, tag)
    for i in (1, 2, 3):
        add("atlas", shear.flip_involution_check, i)
        add("atlas", shear.verify_flip_braid, i)
    add("atlas", shear.pv_to_piii_change)
    for tag in cubics.tags():
        add("cubics", cubics.table1_check, tag)
        add("cubics", cubics.volume_form_check, tag)
        add("nambu", cubics.nambu_casimir_check, tag)
    add("cubics", cubics.torus_param_check)
    add("cubics", cubics.fn_jm_diffeo_check)
    for a in confluence.arrows():
        add("confluence", confluence.confluent_limit, a)
    add("confluence", confluence.two_route_check)
    for emb in confluence.embeddings():
        add("confluence", confluence.embedding_check, emb)
    add("confluence", confluence.composite_embedding_check)
    for tag in TABLE_TAGS:
        add("lambda", arcs.verify_lambda_table, tag)
    for tag in SOLVE_TAGS:
        add("lambda", arcs.solve_structure_check, tag)
    for tag in CASIMIR_TAGS:
        add("casimirs", arcs.casimir_check, tag)
    for tag in COMMUTANT_TAGS:
        add("commutant", arcs.commutant_check, tag)
    add("commutant", arcs.pvi_from_pv_check)
    for i in (1, 2, 3):
        add("cluster", cluster.braid_preserves_cubic, i)
        add("cluster", cluster.braid_involution_check, i)
        add("cluster", cluster.surface_invariance, i)
        add("cluster", cluster.mutation_involution_check, i)
    add("cluster", cluster.shifted_cubic_check)
    add("cluster", cluster.laurent_check)
    for case in TWIST_CASES:
        add("twists", cluster.twist_invariants, case)
        add("twists", cluster.twist_frozen_commutation, case)
    for tag in SIGNATURE_TAGS:
        add("signatures", arcs.signature_check, tag)
    for tag in COUNT_TAGS:
        add("signatures", arcs.lamination_count_check, tag)
    add("unfolding", unfolding.unfold_d4)
    add("unfolding", unfolding.hat_param_rank_check)
    add("unfolding", unfolding.unfold_a3)
    add("unfolding", unfolding.unfold_a2)
    add("unfolding", unfolding.unfold_a1_pvdeg)
    add("unfolding", unfolding.unfold_a1_pii)
    add("unfolding", unfolding.singular_points_check)
    add("arcs", arcs.arc_trace_check)
    add("arcs", arcs.comb_bracket_check)
    return jobs


def run(groups=None, depth: int | None = None) -> list:
    """Run the suite (or the named groups); returns certificates in report order."""
    selected = set(GROUPS if not groups else groups)
    unknown = selected - set(GROUPS)
    if unknown:
        raise KeyError(f"unknown suite group(s) {sorted(unknown)}; have {GROUPS}")
    results = []
    for group, fn, args in _suite():
        if group not in selected:
            continue
        if fn is cluster.laurent_check and depth is not None:
            cert = fn(depth)
        else:
            cert = fn(*args)
        results.append((group, cert))
    order = {g: i for i, g in enumerate(GROUPS)}
    results.sort(key=lambda gc: (order[gc[0]], gc[1].cid))
    return [c for _, c in results]


def report_lines(certs: list) -> list:
    lines = [c.line() for c in certs]
    passed = sum(c.passed for c in certs)
    lines.append(f"{passed}/{len(certs)} certificates passed")
    return lines
