import itertools
from collections import Counter
from fractions import Fraction

import pytest

from genus2frob import fixtures as fx
from genus2frob import pipelines as pl
from genus2frob.curves import HyperellipticModel, frobenius_charpoly, is_perfect_square, is_smooth_genus2
from genus2frob.gf import Poly, field_make


def test_f2_totals(f2_report):
    r = f2_report
    assert (r.total, r.smooth, r.ordinary) == fx.F2_TOTALS
    assert r.non_distinguished == 0


def test_f2_distributions(f2_report):
    assert f2_report.ordinary_distribution == fx.F2_ORDINARY
    assert f2_report.non_ordinary_distribution == fx.F2_NON_ORDINARY
    assert sum(f2_report.class_hist.values()) == f2_report.smooth


def test_f2_routes_cover_everything(f2_report):
    routes = f2_report.routes
    assert sum(routes.values()) == 768
    assert routes["torsion"] == 16 + 32 + 48


def test_torsion_triangle(f2_report):
    c = f2_report.checks
    assert c["ordinary_charpolys_are_weil"]
    assert c["torsion_triangle_rows"] == 4 * f2_report.routes["torsion"]
    assert c["torsion_triangle_mismatches"] == 0


def test_excluded_classes_only_from_non_ordinary(f2_report):
    assert "4C" not in f2_report.class_hist
    assert "12C" not in f2_report.ordinary_distribution


def _bucket_models(target):
    for m in pl.f2_models():
        if not is_smooth_genus2(m):
            continue
        cp = frobenius_charpoly(m).charpoly.coeffs
        if tuple(cp) in target:
            yield m, tuple(cp)


@pytest.fixture(scope="module")
def ambiguous_bucket():
    # every model whose charpoly reduces to (1,0,2,0,1) mod 3
    polys = set(fx.F2_BUCKETS[0][2]) | {(4, 0, 2, 0, 1)}
    return list(_bucket_models(polys))


def test_6h_is_exactly_the_x4_minus_x2_plus_4_curves(ambiguous_bucket):
    for m, cp in ambiguous_bucket:
        label = pl.classify_f2_model(m, seed=0)[2]
        assert (label == "6H") == (cp == (4, 0, -1, 0, 1)), (m, cp, label)


def test_6h_count_is_seed_independent(ambiguous_bucket):
    for seed in (1, 7):
        labels = Counter(pl.classify_f2_model(m, seed=seed)[2] for m, _ in ambiguous_bucket)
        assert labels == Counter({"6G": 32 + 48, "6H": 16})


def test_f3_totals(f3_report):
    r = f3_report
    assert (r.total, r.smooth, r.ordinary, r.non_distinguished) == fx.F3_TOTALS


def test_f3_table_rows(f3_report):
    rows = {tuple(r["charpoly"]): r for r in f3_report.table_rows}
    assert len(rows) == len(fx.F3_TABLE)
    for cp, wp, anyc, count in fx.F3_TABLE:
        r = rows[cp]
        assert (r["wp_jacobian"], r["any_jacobian"], r["curves"]) == (wp, anyc, count), cp
        assert r["distinguished"] == (cp not in fx.F3_NON_DISTINGUISHED)


def test_f3_non_distinguished_counts(f3_report):
    rows = {tuple(r["charpoly"]): r["curves"] for r in f3_report.table_rows}
    for cp, k in fx.F3_NON_DISTINGUISHED.items():
        assert rows[cp] == k
        assert is_perfect_square(Poly(cp))
    assert sum(fx.F3_NON_DISTINGUISHED.values()) == f3_report.non_distinguished


def test_f3_histogram_via_generic_counter(f3_report):
    # second route: the general-purpose charpoly code on every model
    F = field_make(3)
    hist = Counter()
    for f in itertools.product(range(3), repeat=7):
        m = HyperellipticModel.make(list(f), [], F)
        if is_smooth_genus2(m):
            s = frobenius_charpoly(m)
            if s.ordinary:
                hist[tuple(s.charpoly.coeffs)] += 1
    rows = {tuple(r["charpoly"]): r["curves"] for r in f3_report.table_rows}
    assert {k: v for k, v in rows.items() if v} == dict(hist)


def test_f3_checks(f3_report):
    assert all(f3_report.checks.values())


def test_generalized_sweep(f3_report):
    g = f3_report.generalized
    assert (g["total"], g["smooth"], g["ordinary"], g["non_distinguished"]) == (177147, 104976, 69984, 810)
    assert g["ratios_preserved"] and g["charpoly_ratios_preserved"]


def test_weil_bucket_table():
    t = pl.weil_bucket_table(2)
    assert len(t) == len(fx.F2_BUCKETS)
    for key, classes, polys in fx.F2_BUCKETS:
        assert t[key]["classes"] == classes
        assert sorted(t[key]["polys"]) == sorted(polys)
    for key, e in t.items():
        for P in e["polys"]:
            assert tuple(c % 3 for c in P) == key
    with pytest.raises(pl.PipelineError):
        pl.weil_bucket_table(3)


def test_density(f2_report, f3_report):
    a, b = pl.density_factors(f2_report, f3_report)
    assert a == Fraction(624, 2048) == Fraction(39, 128)
    assert b == Fraction(854, 2187)
    d = pl.density_theorem_applicability(f2_report, f3_report)
    assert (d.numerator, d.denominator) == fx.DENSITY


def test_report_serialises(f2_report):
    d = f2_report.to_dict()
    assert d["smooth"] == 768 and d["field"] == 2
