"""Confluence limits, route independence, inclusions and graph exports."""

import json

from fractions import Fraction

import pytest

from painleve_cubics.confluence import (arrow, arrows, composite_embedding_check,
                                        confluence_dot, confluent_limit,
                                        degree_bound_check, embedding,
                                        embedding_check, embeddings, graph_json,
                                        inclusion_dot, limit_chart_coords,
                                        two_route_check)

EXPECTED_ARROWS = {
    ("PVI", "PV"), ("PV", "PVdeg"), ("PV", "PIV"), ("PV", "PIII_D6"),
    ("PIII_D6", "PIII_D7"), ("PVdeg", "PIII_D7"), ("PIII_D7", "PIII_D8"),
    ("PIV", "PII_JM"), ("PIV", "PII_FN"), ("PVdeg", "PII_FN"),
    ("PII_JM", "PI"), ("PII_FN", "PI"), ("PI", "Weierstrass"),
}


def test_arrow_set():
    assert {(a.src, a.dst) for a in arrows()} == EXPECTED_ARROWS


@pytest.mark.parametrize("src,dst", sorted(EXPECTED_ARROWS))
def test_all_limits(src, dst):
    assert confluent_limit(arrow(src, dst)).passed


def test_first_arrow_leading_degrees():
    degrees, _ = limit_chart_coords(arrow("PVI", "PV"))
    assert degrees == [Fraction(-1), Fraction(-1), Fraction(0)]


def test_half_integer_degrees_on_cusp_removal():
    degrees, _ = limit_chart_coords(arrow("PV", "PVdeg"))
    assert degrees == [Fraction(-1), Fraction(-1), Fraction(0)]
    degrees, _ = limit_chart_coords(arrow("PIII_D7", "PIII_D8"))
    assert Fraction(-1) in degrees


def test_two_routes_agree():
    assert two_route_check().passed


@pytest.mark.parametrize("src,dst", sorted(EXPECTED_ARROWS))
def test_degree_bound(src, dst):
    assert degree_bound_check(arrow(src, dst))


def test_embedding_pv_in_piv_first_pair():
    emb = embedding("PV", "PIV")
    from painleve_cubics.arcs import lambda_catalog
    amb = lambda_catalog("PIV")
    ring = amb.lambda_ring
    a_img = ring.gen("a") * ring.gen("b") ** 2
    b_img = ring.gen("b") * ring.gen("f")
    assert amb.structure.monomial_coefficient(a_img, b_img) == 1


@pytest.mark.parametrize("sub,ambient", [
    ("PV", "PIV"), ("PV", "PIII_tilde"), ("PIV", "PII_JM"), ("PVdeg", "PV"),
    ("PIII_D7", "PIII_tilde"), ("PIII_D8", "PIII_tilde"), ("PII_FN", "PIV"),
])
def test_embeddings(sub, ambient):
    assert embedding_check(embedding(sub, ambient)).passed


def test_fn_embedding_documents_its_mismatches():
    cert = embedding_check(embedding("PII_FN", "PIV"))
    assert cert.passed
    assert "documented mismatches" in cert.detail
    assert "{b,d}" in cert.detail and "{d,f}" in cert.detail


def test_composite_embedding():
    assert composite_embedding_check().passed


def test_dot_export_label():
    dot = confluence_dot()
    assert '"PVI" -> "PV" [label="p3 -= 2 log eps"]' in dot
    assert dot.startswith("digraph")


def test_inclusion_graph_points_into_largest_algebra():
    dot = inclusion_dot()
    assert '"PIV" -> "PII_JM"' in dot
    # no inclusion edge leaves the largest algebra
    assert '"PII_JM" ->' not in dot


def test_graph_json_round_trips():
    payload = json.loads(graph_json())
    assert {(a["src"], a["dst"]) for a in payload["arrows"]} == EXPECTED_ARROWS
    assert json.loads(json.dumps(payload)) == payload
    shifts = {(a["src"], a["dst"]): a["shift"] for a in payload["arrows"]}
    assert shifts[("PVI", "PV")] == {"p3": "-2"}
