"""Internal consistency of the shipped catalog files."""

from fractions import Fraction

from painleve_cubics import catalog, parse_expr, parse_poly
from painleve_cubics.cubics import tags


def test_every_tag_has_a_chart():
    charts = catalog.load("charts")["charts"]
    assert set(charts) == set(tags())


def test_arrow_endpoints_are_known_tags():
    known = set(tags())
    for a in catalog.load("arrows")["arrows"]:
        assert a["src"] in known and a["dst"] in known
        assert a["shift"], a


def test_embedding_names_exist_in_their_catalogs():
    lambdas = catalog.load("lambdas")["catalogs"]
    for emb in catalog.load("arrows")["embeddings"]:
        sub, amb = lambdas[emb["sub"]], lambdas[emb["ambient"]]
        sub_names = set(sub.get("entries") or sub["subset"])
        for name in emb["images"]:
            assert name in sub_names, (emb["sub"], name)


def test_lambda_tables_cover_all_pairs():
    lambdas = catalog.load("lambdas")["catalogs"]
    for tag, entry in lambdas.items():
        if "entries" not in entry or "table" not in entry:
            continue
        names = sorted(entry["entries"])
        want = {(u, v) for i, u in enumerate(names) for v in names[i + 1:]}
        got = {tuple(sorted(k.split(","))) for k in entry["table"]}
        assert got == want, tag


def test_solved_brackets_name_real_generators():
    lambdas = catalog.load("lambdas")["catalogs"]
    for tag, entry in lambdas.items():
        gens = set(entry.get("shear_generators", ()))
        for key in entry.get("solved_log_brackets", {}):
            u, v = key.split(",")
            assert u in gens and v in gens, (tag, key)


def test_all_catalog_expressions_parse():
    from painleve_cubics.ring import Ring

    charts = catalog.load("charts")["charts"]
    for tag, entry in charts.items():
        ring = Ring(tuple(catalog.load("charts")["generators"]))
        G = {name: parse_poly(s, ring) for name, s in entry["G"].items()}
        for n in ("x1", "x2", "x3"):
            parse_poly(entry[n], ring, symbols=G)
    cubics = catalog.load("cubics")["cubics"]
    gring = Ring(("x1", "x2", "x3", "G1", "G2", "G3", "Ginf"))
    for tag, entry in cubics.items():
        for s in entry["omega"]:
            parse_poly(s, gring)
        symbols = {w: parse_expr(s, gring) for w, s in entry["table1_params"].items()}
        parse_expr(entry["table1"], gring, symbols=symbols)


def test_signature_rows_are_consistent():
    sigs = catalog.load("signatures")["signatures"]
    for tag, entry in sigs.items():
        holes, row = entry["holes"], entry["row"]
        if entry.get("phantom_hole"):
            assert row == [0] + holes, tag
        else:
            assert row == holes, tag
        assert all(c >= 0 for c in holes)
