import itertools
import time

import numpy as np
import pytest

from genus2frob import repthy as rt


@pytest.fixture(scope="module")
def reps():
    return rt.build_a5_reps()


@pytest.fixture(scope="module")
def report():
    t = time.time()
    r = rt.a5_report()
    r["_elapsed"] = time.time() - t
    return r


def _sign(p):
    seen, s = set(), 1
    for i in range(len(p)):
        if i in seen:
            continue
        j, n = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            n += 1
        s *= (-1) ** (n - 1)
    return s


def test_a5_is_the_even_permutations():
    G = rt.a5()
    assert len(G) == 60
    evens = {p for p in itertools.permutations(range(5)) if _sign(p) == 1}
    assert set(G) == evens


def test_reps_are_homomorphisms(reps):
    G = rt.a5()
    for lab in ("U", "U_sigma", "V"):
        R = reps[lab]
        for g in G[::3]:
            for h in G:
                lhs = R(rt.compose(g, h))
                rhs = (R(g).astype(np.int64) @ R(h).astype(np.int64)) % 2
                assert np.array_equal(lhs, rhs)


def test_u_is_faithful_into_sl2(reps):
    mats = {m.tobytes() for m in reps["U"].f4_mats.values()}
    assert len(mats) == 60


def test_dimensions(report):
    assert report["dims"] == (1, 2, 2, 4)


def test_brauer_table(report):
    b = report["brauer"]
    for lab in ("k", "U", "U_sigma", "V"):
        assert b[lab]["match"]
    assert b["consistent"]


def test_brauer_row_of_v_is_product_of_u_rows():
    # V = U (x) U_sigma, so its Brauer character is the product
    u, us, v = (rt.BRAUER_TABLE[x] for x in ("U", "U_sigma", "V"))
    for a, b, c in zip(u, us, v):
        assert abs(a * b - c) < 1e-12


def test_order_five_charpoly(report):
    assert report["order5_charpoly_V"] == (1, 1, 1, 1, 1)


def test_adequacy(report):
    assert report["weakly_adequate_V"] and report["weakly_adequate_k"]
    assert not report["weakly_adequate_C3_V"]


def test_cohomology(report):
    assert report["h1_k"] == 0
    assert report["h1_adV"] == 0
    assert report["h1_ad0"] == 1


def test_socle_and_sym3(report):
    assert report["socle_VxV"] == ["V", "k"]
    s = report["sym3"]
    assert s["sym3_iso_V"] and s["UxUs_iso_V"]
    assert s["V_free_over_klein"] and not s["k4_free_over_klein"]


def test_runtime(report):
    assert report["_elapsed"] < 60


def test_schur(reps):
    assert rt.hom_dim(reps["U"], reps["U"]) == 1
    assert rt.hom_dim(reps["U"], reps["U_sigma"]) == 0
    assert rt.hom_dim(reps["V"], reps["V"]) == 1


def _brute_h1(R):
    """Enumerate every function G -> M and count cocycles and coboundaries."""
    G = R.group
    n = R.n2
    vecs = [np.array(v, dtype=np.int64) for v in itertools.product(range(2), repeat=n)]
    z = 0
    for phi in itertools.product(range(len(vecs)), repeat=len(G)):
        f = dict(zip(G, (vecs[i] for i in phi)))
        if all(np.array_equal(f[rt.compose(g, h)], (f[g] + R(g) @ f[h]) % 2) for g in G for h in G):
            z += 1
    b = len({tuple(tuple(((R(g).astype(np.int64) @ v) + v) % 2) for g in G) for v in vecs})
    return z, b


@pytest.mark.parametrize("gens", [
    [rt.from_cycles(5, (1, 2), (3, 4))],
    [rt.from_cycles(5, (1, 2, 3))],
    [rt.from_cycles(5, (1, 2), (3, 4)), rt.from_cycles(5, (1, 3), (2, 4))],
])
def test_h1_against_enumeration(reps, gens):
    H = rt.closure(gens)
    for lab in ("k", "V"):
        R = reps[lab].restrict(H)
        if R.n2 * len(H) > 12:
            continue
        z, b = _brute_h1(R)
        c = rt.h1(R)
        assert 2 ** c.z1 == z and 2 ** c.b1 == b


def test_h1_trivial_module_on_cyclic_groups(reps):
    # H^1(C, F2) = Hom(C, F2)
    c2 = rt.closure([rt.from_cycles(5, (1, 2), (3, 4))])
    c3 = rt.closure([rt.from_cycles(5, (1, 2, 3))])
    klein = rt.closure(list(rt.KLEIN))
    assert rt.h1(reps["k"].restrict(c2)).h1 == 1
    assert rt.h1(reps["k"].restrict(c3)).h1 == 0
    assert rt.h1(reps["k"].restrict(klein)).h1 == 2


def test_fixed_dim_against_enumeration(reps):
    for lab in ("k", "V", "U"):
        R = reps[lab]
        n = R.n2
        count = sum(all(np.array_equal((R(g).astype(np.int64) @ v) % 2, v) for g in R.group)
                    for v in (np.array(v) for v in itertools.product(range(2), repeat=n)))
        d = rt.fixed_dim(R)
        assert count == 2 ** (d * (2 if R.omega is not None else 1))


def test_large_nullspace_matches_direct():
    rng = np.random.default_rng(5)
    for _ in range(5):
        K = rng.integers(0, 2, size=(6, 40), dtype=np.uint8)
        # tall matrix whose kernel is forced to be large
        A = (rng.integers(0, 2, size=(300, 6)) @ K % 2).astype(np.uint8)
        N1, N2 = rt.f2_nullspace(A), rt.f2_nullspace_large(A, seed=1)
        assert N1.shape == N2.shape
        assert rt.f2_rank(np.vstack([N1, N2])) == N1.shape[0]
        assert not np.any((A.astype(np.int64) @ N2.T.astype(np.int64)) % 2)


def test_bad_generator_images_rejected():
    x = rt.from_cycles(5, (1, 2), (3, 4))
    y = rt.from_cycles(5, (1, 3, 5))
    I = np.eye(2, dtype=np.uint8)
    J = np.array([[0, 1], [1, 0]], dtype=np.uint8)
    with pytest.raises(rt.RepError):
        rt._extend_hom([x, y], [J, I], rt.a5(), rt._f2mul)
