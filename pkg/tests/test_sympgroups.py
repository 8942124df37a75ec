import itertools

import numpy as np
import pytest

from genus2frob import sympgroups as sg

SIZES = {"2C": 36, "2D": 540, "4C": 540, "4D": 1620, "6G": 1440, "6H": 1440,
         "6I": 4320, "8A": 6480, "10A": 5184, "12C": 4320}


def _sp_order(n, q):
    out = q ** (n * n)
    for i in range(1, n + 1):
        out *= q ** (2 * i) - 1
    return out


@pytest.fixture(scope="module")
def gsp():
    return sg.generate_group("GSp4F3")


@pytest.fixture(scope="module")
def atlas(gsp):
    return sg.pgsp_outer_atlas(gsp)


def test_group_orders_match_the_order_formula(gsp):
    assert gsp.order == 2 * _sp_order(2, 3) == 103680
    assert sg.generate_group("Sp4F3").order == _sp_order(2, 3) == 51840
    assert sg.generate_group("Sp4F2").order == _sp_order(2, 2) == 720


def test_every_element_is_a_similitude(gsp):
    J = sg.J_form(2, 3)
    M = gsp.mats.astype(np.int64)
    G = np.einsum("nji,jk,nkl->nil", M, J, M) % 3
    nus = G[:, 0, 3]
    assert np.all(G == (nus[:, None, None] * J) % 3)
    assert np.count_nonzero(nus == 2) == 51840


def test_class_sizes_from_centralizers(gsp):
    # |class(g)| = |G| / |C(g)| with the centralizer counted by brute force
    M = gsp.mats.astype(np.int64)
    for c in gsp.classes[::7]:
        g = M[c.rep]
        comm = np.all((np.einsum("nij,jk->nik", M, g) % 3) == (np.einsum("ij,njk->nik", g, M) % 3),
                      axis=(1, 2))
        assert gsp.order // int(comm.sum()) == c.size


def test_outer_atlas(atlas):
    assert len(atlas) == 10
    assert {a.label: a.size for a in atlas} == SIZES
    assert sum(a.size for a in atlas) == 25920
    sg.check_atlas(atlas)


def test_atlas_charpolys_and_orders(atlas):
    for a in atlas:
        o, cps, _ = sg.ATLAS_REFERENCE[a.label]
        assert a.order == o
        assert set(map(tuple, a.charpolys)) == cps


def test_s40_cycle_types(atlas):
    by = {a.label: a.s40 for a in atlas}
    for lab, ct in sg.S40_REFERENCE.items():
        assert tuple(sorted(by[lab])) == tuple(sorted(ct))
    assert all(sum(a.s40) == 40 for a in atlas)


def test_s27_cycle_types_separate_6g_and_6h(atlas):
    by = {a.label: a.s27 for a in atlas}
    assert all(sum(a.s27) == 27 for a in atlas)
    assert by["6G"] != by["6H"]
    for lab, ct in sg.S27_REFERENCE.items():
        assert tuple(sorted(by[lab])) == tuple(sorted(ct))


def test_regular_semisimple_counts(gsp):
    inner, outer = sg.reg_ss_classes(gsp)
    assert (len(inner), len(outer)) == (3, 5)


def test_prebuild_oracle_finds_only_6g_6h_ambiguous():
    orc = sg.prebuild_oracle()
    assert orc["separates_6G_6H"] is False
    assert set(orc["ambiguous"].values()) == {("6G", "6H")}


def test_classify_agrees_with_conjugacy_classes(gsp, atlas):
    label_of = {ci: a.label for a in atlas for ci in a.gsp_classes}
    idx = np.nonzero(gsp.nus() == 2)[0]
    got = sg.classify_many(gsp.mats[idx])
    truth = [label_of[int(gsp.class_of[i])] for i in idx]
    assert len(idx) == 51840
    assert got == truth


def test_classify_class_rejects_inner_elements(gsp):
    with pytest.raises(sg.GroupError):
        sg.classify_class(np.eye(4, dtype=np.int64))


def test_classification_is_conjugation_invariant(gsp):
    rng = np.random.default_rng(0)
    outer = np.nonzero(gsp.nus() == 2)[0]
    for i in rng.choice(outer, 20, replace=False):
        g = gsp.mats[i].astype(np.int64)
        h = gsp.mats[rng.integers(gsp.order)].astype(np.int64)
        conj = (h @ g @ sg._inverse_mod(h, 3)) % 3
        assert sg.classify_class(conj) == sg.classify_class(g)


# -- Sp4(F2), S6 and oddness ----------------------------------------------------

def test_dictionary_generators():
    d = sg.s6_gsp4_dictionary()
    assert d.convention == "image"
    assert d.matches_reference and d.is_isomorphism and d.preserves_J and d.coxeter_ok
    for p, m in sg.S6_GENERATOR_IMAGES.items():
        assert np.array_equal(d.images[p], np.array(m))
    assert len(d.s5b) == 120 and len(d.a5b) == 60


def _inverse_perm(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def test_dictionary_on_two_more_permutations():
    # the matrices for (12)(345) and (125346) are images of the inverse
    # permutations in our convention; inverses are conjugate in S6 anyway
    d = sg.s6_gsp4_dictionary()
    a = (1, 0, 3, 4, 2, 5)
    b = (1, 4, 3, 5, 2, 0)
    A = np.array([[1, 0, 0, 1], [0, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]])
    B = np.array([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])
    assert np.array_equal(d.images[_inverse_perm(a)], A)
    assert np.array_equal(d.images[_inverse_perm(b)], B)


def test_siegel_parabolic():
    r = sg.siegel_parabolic_facts()
    assert r.order == 48
    assert r.equals_centralizer and r.corresponds_to_triple_transposition
    assert (r.center_order, r.derived_order, r.abelianization_order) == (2, 12, 4)
    assert r.s5b_intersection_order == 8 and r.s5b_intersection_is_d8
    assert r.order3_cycle_shapes == ((3, 3),)


@pytest.mark.parametrize("n", [1, 2])
def test_involution_class_counts(n):
    r = sg.involution_oddness(n)
    assert r.class_count == r.expected == n + 1 + n // 2
    assert all(size > 0 for _, _, size in r.classes)


def test_involution_counts_by_brute_force_sp4f2():
    t = sg.generate_group("Sp4F2")
    M = t.mats.astype(np.int64)
    sq = np.einsum("nij,njk->nik", M, M) % 2
    n_inv = int(np.all(sq == np.eye(4, dtype=np.int64), axis=(1, 2)).sum())
    r = sg.involution_oddness(2)
    assert sum(c[2] for c in r.classes) == n_inv


def test_involution_representatives():
    got = tuple(sg.is_odd_involution(np.array(A)) for A in sg.INVOLUTION_REPRESENTATIVES)
    assert got == (True, True, False)


def test_odd_involution_definition():
    # A J has a nonzero diagonal entry; check against the direct formula on all of Sp4(F2)
    t = sg.generate_group("Sp4F2")
    J = sg.J_form(2, 2)
    for A in t.mats[:200]:
        A = A.astype(np.int64)
        if np.array_equal(A @ A % 2, np.eye(4, dtype=np.int64)) and not np.array_equal(A, np.eye(4)):
            assert sg.is_odd_involution(A) == bool(np.any(np.diag((A @ J) % 2)))


def test_charpoly_against_numpy():
    rng = np.random.default_rng(3)
    for _ in range(20):
        g = rng.integers(0, 3, (4, 4))
        c = np.rint(np.poly(g)).astype(np.int64)[::-1] % 3
        assert sg.charpoly(g, 3) == tuple(int(x) for x in c)


def test_matrix_group_predicates():
    t = sg.generate_group("GSp4F3")
    # the whole group: irreducible with regular semisimple elements of both kinds
    assert sg.matrix_group_predicates(t.gens) == (True, True, True)
    # the centre alone is neither irreducible nor regular semisimple
    assert sg.matrix_group_predicates([2 * np.eye(4, dtype=np.int64)]) == (False, False, False)


def test_similitude_and_transvections():
    for v in itertools.islice(itertools.product(range(3), repeat=4), 1, 20):
        T = sg.transvection(v, 3)
        assert sg.similitude(T, 3) == 1
    assert sg.similitude(np.diag([1, 1, 2, 2]), 3) == 2
