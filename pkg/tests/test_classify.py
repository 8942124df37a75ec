import itertools

import pytest

from genus2frob import classify as cl
from genus2frob import fixtures as fx
from genus2frob.curves import (CurveError, HyperellipticModel, frobenius_charpoly,
                               has_rational_weierstrass_point, is_smooth_genus2)
from genus2frob.gf import field_make

TWELVE_C = dict(f=[1, 0, 0, 1], h=[0, 1, 0, 1])       # y^2 + (x^3 + x) y = x^3 + 1
GOOD_EVERYWHERE = dict(f=[1, 1], h=[1, 1, 0, 1])      # class 10A at 2, ordinary at 3
SQUARE_AT_3 = dict(f=[1, 0, 1, 0, 1, 0, 1])          # y^2 = x^6 + x^4 + x^2 + 1


def curve(d, label=None):
    return cl.CurveOverQ(d["f"], d.get("h", ()), label)


@pytest.mark.parametrize("name", sorted(fx.CURVES_AT_2))
def test_curves_at_2(name):
    d = fx.CURVES_AT_2[name]
    loc = cl.check_local_at_2(curve(d))
    assert loc.kind == "good-ordinary"
    assert loc.charpoly == d["charpoly"]
    assert loc.frob2_class == d["frob2_class"]
    # conductor divisible by 3: the given model is bad there
    assert d["conductor"] % 3 == 0
    assert not cl.check_local_at_3(curve(d)).smooth


@pytest.mark.parametrize("f, cp", fx.BELOW_THREE)
def test_below_three(f, cp):
    c = cl.CurveOverQ(f)
    loc = cl.check_local_at_3(c)
    assert loc.smooth and loc.ordinary and loc.distinguished and loc.weierstrass_point
    assert loc.charpoly == cp


@pytest.mark.parametrize("f, pattern, N", fx.LOCAL_AT_3)
def test_factor_patterns(f, pattern, N):
    assert N % 3 != 0
    assert cl.factor_pattern_at_3(cl.CurveOverQ(f)) == pattern


def test_z14_model():
    loc = cl.check_local_at_2(curve(fx.Z14_MODEL))
    assert loc.kind != "model-singular"
    assert sum(loc.charpoly) == fx.Z14_MODEL["jac_order"]


def test_non_ordinary_y():
    d = fx.NON_ORDINARY_Y
    loc = cl.check_local_at_2(curve(d))
    assert loc.kind == "good-non-ordinary"
    assert loc.charpoly == d["charpoly"] and loc.frob2_class == d["frob2_class"]


def test_weierstrass_model_singular_at_2():
    c = curve(fx.WEIERSTRASS_SINGULAR_AT_2)
    assert c.degree_five()
    assert cl.check_local_at_2(c).kind == "model-singular"


def test_bad_at_2_drew_route():
    c = curve(fx.BAD_AT_2, "bad2")
    v = cl.theorem_applies(c, cl.ASSUMPTIONS)
    assert v.reduction_at_2 == "model-singular"
    assert v.good_ordinary_at_3.status == "pass" and v.distinguished_at_3.status == "pass"
    assert v.overall == "applies-by-drew-route"
    assert cl.theorem_applies(c).overall == "insufficient-local-data"
    assert cl.theorem_applies(c, ["image-large"]).overall == "insufficient-local-data"


def test_good_route():
    v = cl.theorem_applies(curve(GOOD_EVERYWHERE), cl.ASSUMPTIONS)
    assert v.frob2_class == "10A"
    assert v.overall == "applies-by-Thm-1.1-route"
    # unramifiedness is automatic for a smooth model at 2
    assert cl.theorem_applies(curve(GOOD_EVERYWHERE), ["image-large"]).overall == v.overall


def test_twelve_c_fails():
    v = cl.theorem_applies(curve(TWELVE_C), cl.ASSUMPTIONS)
    assert v.reduction_at_2 == "good-non-ordinary" and v.frob2_class == "12C"
    assert v.good_ordinary_at_3.status == "pass" and v.distinguished_at_3.status == "pass"
    assert v.frob2_class_allowed.status == "fail"
    assert v.overall == "conditions-fail"


def test_square_charpoly_fails():
    v = cl.theorem_applies(curve(SQUARE_AT_3), cl.ASSUMPTIONS)
    assert v.charpoly_at_3 == (9, 12, 10, 4, 1)
    assert v.distinguished_at_3.status == "fail"
    assert v.overall == "conditions-fail"


def test_singular_at_3_is_insufficient():
    v = cl.theorem_applies(curve(fx.CURVES_AT_2["C1"]), cl.ASSUMPTIONS)
    assert v.good_ordinary_at_3.status == "unknown"
    assert v.overall == "insufficient-local-data"


@pytest.mark.parametrize("d", [fx.BAD_AT_2, GOOD_EVERYWHERE, TWELVE_C, SQUARE_AT_3,
                               fx.CURVES_AT_2["C2"], fx.NON_ORDINARY_Y])
def test_assumptions_are_monotone(d):
    order = {"fail": 0, "unknown": 1, "pass": 2}
    c = curve(d)
    verdicts = {a: cl.theorem_applies(c, a) for a in
                [(), ("unramified-at-2",), ("image-large",), cl.ASSUMPTIONS]}
    base = verdicts[()]
    for a, v in verdicts.items():
        for name in ("good_ordinary_at_3", "distinguished_at_3", "frob2_class_allowed",
                     "unramified_at_2", "image_mod3"):
            assert order[getattr(v, name).status] >= order[getattr(base, name).status]
        if base.overall == "conditions-fail":
            assert v.overall == "conditions-fail"


def test_unknown_assumption_rejected():
    with pytest.raises(ValueError):
        cl.theorem_applies(curve(GOOD_EVERYWHERE), ["modular"])


def test_heuristic_never_upgrades():
    v = cl.theorem_applies(curve(fx.CURVES_AT_2["C1"]), heuristic_bound=40)
    assert v.image_mod3.status == "unknown"
    assert "witnessed-large" in v.image_mod3.evidence
    assert v.witnesses


def test_heuristic_examples():
    c1 = curve(fx.CURVES_AT_2["C1"])
    assert cl.heuristic_image_mod3(c1, 40)[0] == "witnessed-large"
    assert cl.heuristic_image_mod3(c1, 10)[0] == "inconclusive"
    for f in ([1, 0, 0, 0, 0, 1], [0, -1, 0, 0, 0, 1], [2, 0, 0, 0, 0, 1]):
        assert cl.heuristic_image_mod3(cl.CurveOverQ(f), 40)[0] == "inconclusive"


def test_heuristic_witness_shape():
    _, w = cl.heuristic_image_mod3(curve(fx.CURVES_AT_2["C1"]), 40)
    for x in w:
        assert x["p"] != 3
        assert (x["projective_order"] is None) == (not x["regular_semisimple"])


def test_quintic_ordinary_models_are_distinguished():
    F = field_make(3)
    seen = 0
    for f in itertools.product(range(3), repeat=6):
        if f[5] == 0:
            continue
        m = HyperellipticModel.make(list(f), [], F)
        if not is_smooth_genus2(m):
            continue
        s = frobenius_charpoly(m)
        assert has_rational_weierstrass_point(m)
        if s.ordinary:
            seen += 1
            assert s.distinguished
    assert seen > 0


def test_odd_prime_counter_at_3_matches_field_code():
    F = field_make(3)
    checked = 0
    for f in itertools.product(range(3), repeat=7):
        if f[6] == 0 and f[5] == 0:
            continue
        m = HyperellipticModel.make(list(f), [], F)
        if not is_smooth_genus2(m):
            continue
        D = list(f) if f[6] else list(f[:6])
        assert cl._charpoly_odd_prime(D, 3) == frobenius_charpoly(m).charpoly.coeffs
        checked += 1
    assert checked == 1296


def _brute_counts(D, l, c):
    """#C(F_l), #C(F_{l^2}) with F_{l^2} = F_l[t]/(t^2 + t + c)."""
    def mul(x, y):
        a, b = x
        u, v = y
        # t^2 = -t - c
        return ((a * u - c * b * v) % l, (a * v + b * u - b * v) % l)

    def power(x, e):
        r = (1, 0)
        while e:
            if e & 1:
                r = mul(r, x)
            x = mul(x, x)
            e >>= 1
        return r

    def chi(x):
        if x == (0, 0):
            return 0
        return 1 if power(x, (l * l - 1) // 2) == (1, 0) else -1

    def ev(x):
        r = (0, 0)
        for a in reversed(D):
            r = mul(r, x)
            r = ((r[0] + a) % l, r[1])
        return r

    def leg(a):
        a %= l
        return 0 if a == 0 else (1 if pow(a, (l - 1) // 2, l) == 1 else -1)

    N1 = sum(1 + leg(ev((x, 0))[0]) for x in range(l))
    N2 = sum(1 + chi(ev((a, b))) for a in range(l) for b in range(l))
    if len(D) == 7:
        N1 += 1 + leg(D[6])
        N2 += 2
    else:
        N1 += 1
        N2 += 1
    return N1, N2


@pytest.mark.parametrize("l, c", [(5, 1), (7, 3)])
def test_odd_prime_counter_brute_force(l, c):
    curves = [[1, 0, 0, 0, 0, 1], [0, 1, 1, 0, 0, 1], [1, 2, 0, 3, 0, 1, 1], [2, 1, 1, 0, 1, 0, 3]]
    for D in curves:
        if not cl._zp_squarefree(D, l):
            continue
        N1, N2 = _brute_counts(D, l, c)
        P = cl._charpoly_odd_prime(D, l)
        s1 = l + 1 - N1
        s2 = l * l + 1 - N2
        assert P[3] == -s1 and P[2] == (s1 * s1 - s2) // 2


def test_frobenius_charpoly_at_bad_prime_is_none():
    c = curve(fx.CURVES_AT_2["C1"])
    assert cl.frobenius_charpoly_at(c, 3) is None
    assert cl.frobenius_charpoly_at(c, 83) is None  # 249 = 3 * 83


def test_curve_validation():
    with pytest.raises(CurveError):
        cl.CurveOverQ([0, 0, 1])
    with pytest.raises(CurveError):
        cl.CurveOverQ([0, 0, 1, 0, 0, 0, 1, 1])
    with pytest.raises(CurveError):
        cl.CurveOverQ([0, 0, 1, 2, 1])  # square factor
    with pytest.raises(CurveError):
        cl.factor_pattern_at_3(curve(fx.CURVES_AT_2["C1"]))


def test_quintic_route_applies():
    # y^2 + (x^2 + x) y = x^5 + 1: quintic, 6H at 2, ordinary at 3
    c = cl.CurveOverQ([1, 0, 0, 0, 0, 1], [0, 1, 1])
    assert c.degree_five()
    v = cl.theorem_applies(c, ["image-large"])
    assert v.reduction_at_2 == "good-ordinary" and v.frob2_class == "6H"
    assert v.distinguished_at_3.evidence == "quintic model"
    assert v.overall == "applies-by-Thm-1.1-route"


def test_sextic_reducing_to_x6_is_singular_at_3():
    c = cl.CurveOverQ([3, 3, 0, 0, 0, 0, 1])
    assert not cl.check_local_at_3(c).smooth
