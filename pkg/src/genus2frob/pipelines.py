"""Exhaustive sweeps over genus-2 models over F_2 and F_3.

Models are counted as Weierstrass data (f, h), not up to isomorphism.  Over
F_2 every smooth model gets the outer class of PGSp4(F3) containing the
Frobenius at 2 acting on Jac[3]; the class is read off the charpoly mod 3
when that is enough, then from the 3-rank of Jac(F_256), and only the
remaining 6G/6H candidates go through the full 3-torsion module.
"""
import itertools
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import jacobian as jb
from . import sympgroups as sg
from .curves import (HyperellipticModel, frobenius_charpoly, has_rational_weierstrass_point,
                     is_perfect_square, is_smooth_genus2, weil_poly_enumerate)
from .gf import Poly, field_make


class PipelineError(RuntimeError):
    pass


def fmt_poly(coeffs):
    return repr(Poly(coeffs))


@dataclass
class EnumerationReport:
    field: int
    total: int = 0
    smooth: int = 0
    ordinary: int = 0
    non_distinguished: int = 0
    charpoly_hist: dict = field(default_factory=dict)
    class_hist: dict = field(default_factory=dict)
    ordinary_distribution: dict = field(default_factory=dict)
    non_ordinary_distribution: dict = field(default_factory=dict)
    routes: dict = field(default_factory=dict)
    table_rows: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    generalized: dict = None

    def to_dict(self):
        return asdict(self)


# -- F2 -----------------------------------------------------------------------

def f2_models():
    """All 2^11 pairs (f, h), deg f <= 6, deg h <= 3, in canonical order."""
    F = field_make(2)
    for fb in range(128):
        for hb in range(16):
            f = [(fb >> i) & 1 for i in range(7)]
            h = [(hb >> i) & 1 for i in range(4)]
            yield HyperellipticModel.make(f, h, F)


@lru_cache(maxsize=None)
def _class_data():
    """Per mod-3 charpoly: candidate labels and their dim ker(g^8 - 1)."""
    t = sg.generate_group("GSp4F3")
    atlas = sg.pgsp_outer_atlas(t)
    reps = np.stack([t.mats[a.rep] for a in atlas])
    dk8 = sg._kernel_dims(reps, (8,))[8]
    buckets = {}
    for a, d in zip(atlas, dk8):
        for cp in a.charpolys:
            buckets.setdefault(tuple(cp), []).append((a.label, int(d)))
    return buckets


def torsion_class(m, seed=0):
    """Outer class of Frobenius on Jac[3] from the full torsion module."""
    T = jb.three_torsion_module(m, seed=seed)
    if T.M is None:
        raise PipelineError("no invariant form for %r: %s" % (m, T.flags))
    P = jb.symplectic_basis(T.M)
    g = (sg._inverse_mod(P, 3) @ np.array(T.g) @ P) % 3
    return sg.classify_class(g), T


def torsion_triangle(m, T, ks=(1, 2, 4, 8), seed=0):
    """Compare 3^dim ker(g^k - 1) with #Jac(F_{2^k})[3] found by sampling."""
    g = np.array(T.g, dtype=np.int64)
    dims = sg._kernel_dims(g[None], ks)
    out = []
    for k in ks:
        rank = len(jb.sylow3_structure(m, k, seed=seed))
        out.append((k, 3 ** int(dims[k][0]), 3 ** rank))
    return out


def classify_f2_model(m, seed=0, triangle=False):
    """(charpoly, ordinary, label, route, triangle rows) for a smooth model."""
    s = frobenius_charpoly(m)
    q3 = tuple(c % 3 for c in s.charpoly.coeffs)
    cands = _class_data().get(q3)
    if not cands:
        raise PipelineError("charpoly %s of %r matches no outer class" % (s.charpoly, m))
    route, tri = "charpoly", None
    if len(cands) > 1:
        route = "g8-rank"
        r = len(jb.sylow3_structure(m, 8, seed=seed))
        cands = [c for c in cands if c[1] == r]
    if len(cands) > 1:
        route = "torsion"
        label, T = torsion_class(m, seed)
        if label not in {c[0] for c in cands}:
            raise PipelineError("torsion class %s outside the candidates for %r" % (label, m))
        if triangle:
            tri = torsion_triangle(m, T, seed=seed)
        cands = [(label, None)]
    if len(cands) != 1:
        raise PipelineError("could not classify %r" % (m,))
    return s.charpoly.coeffs, s.ordinary, cands[0][0], route, tri


def _f2_task(args):
    f, h, seed, triangle = args
    m = HyperellipticModel.make(f, h, field_make(2))
    if not is_smooth_genus2(m):
        return None
    return classify_f2_model(m, seed, triangle)


def enumerate_f2(seed=0, triangle=True, mapper=map):
    """Sweep all 2^11 models over F_2; mapper lets the caller parallelise."""
    models = list(f2_models())
    jobs = [(m.f.coeffs, m.h.coeffs, seed, triangle) for m in models]
    results = list(mapper(_f2_task, jobs))
    rep = EnumerationReport(field=2, total=len(models))
    cp_hist, cls, ordd, nond, routes = Counter(), Counter(), Counter(), Counter(), Counter()
    weil = {tuple(P.coeffs) for P in weil_poly_enumerate(2)}
    bad_tri, tri_rows, off_list = [], 0, []
    for m, res in zip(models, results):
        if res is None:
            continue
        cp, ordinary, label, route, tri = res
        rep.smooth += 1
        cp_hist[fmt_poly(cp)] += 1
        cls[label] += 1
        routes[route] += 1
        if ordinary:
            rep.ordinary += 1
            ordd[label] += 1
            if cp not in weil:
                off_list.append(m)
            if is_perfect_square(Poly(cp)):
                rep.non_distinguished += 1
        else:
            nond[label] += 1
        for row in tri or ():
            tri_rows += 1
            if row[1] != row[2]:
                bad_tri.append((m.key(), row))
    rep.charpoly_hist = dict(sorted(cp_hist.items()))
    rep.class_hist = {k: cls[k] for k in sg.LABELS if cls[k]}
    rep.ordinary_distribution = {k: ordd[k] for k in sg.LABELS if ordd[k]}
    rep.non_ordinary_distribution = {k: nond[k] for k in sg.LABELS if nond[k]}
    rep.routes = dict(routes)
    rep.checks = {
        "ordinary_charpolys_are_weil": not off_list,
        "torsion_triangle_rows": tri_rows,
        "torsion_triangle_mismatches": len(bad_tri),
    }
    if off_list:
        raise PipelineError("ordinary charpoly missing from the Weil list: %r" % off_list[0])
    return rep


# -- F3 -----------------------------------------------------------------------

def _f3_base():
    """Stats for every y^2 = f, deg f <= 6, indexed by sum f_i 3^i."""
    F = field_make(3)
    rows = []
    for idx in range(3 ** 7):
        f = [(idx // 3 ** i) % 3 for i in range(7)]
        m = HyperellipticModel.make(f, (), F)
        if not is_smooth_genus2(m):
            rows.append(None)
            continue
        s = frobenius_charpoly(m)
        rows.append((s.charpoly.coeffs, s.ordinary, s.distinguished,
                     has_rational_weierstrass_point(m)))
    return rows


def _f9_powers():
    # F9 = F3[i], i^2 = -1; column j holds x^j for x = a + b i
    xs = [(a, b) for b in range(3) for a in range(3)]
    re = np.zeros((7, 9), dtype=np.int64)
    im = np.zeros((7, 9), dtype=np.int64)
    for c, (a, b) in enumerate(xs):
        r, s = 1, 0
        for j in range(7):
            re[j, c], im[j, c] = r, s
            r, s = (r * a - s * b) % 3, (r * b + s * a) % 3
    return xs, re, im


def _count_solutions(hr, hi, fr, fi, ys):
    """Number of y in ys with y^2 + h y = f, arrays of shape (n, cols)."""
    n = np.zeros(hr.shape, dtype=np.int64)
    for ya, yb in ys:
        sr = (ya * ya - yb * yb + hr * ya - hi * yb - fr) % 3
        si = (2 * ya * yb + hr * yb + hi * ya - fi) % 3
        n += (sr == 0) & (si == 0)
    return n


def _generalized_sweep(base):
    """All 3^11 models y^2 + h y = f over F_3, counted directly."""
    fs = np.array(list(itertools.product(range(3), repeat=7)), dtype=np.int64)[:, ::-1]
    hs = np.array(list(itertools.product(range(3), repeat=4)), dtype=np.int64)[:, ::-1]
    xs, re, im = _f9_powers()
    f_re, f_im = fs @ re % 3, fs @ im % 3
    h_re, h_im = hs @ re[:4] % 3, hs @ im[:4] % 3
    in_f3 = np.array([b == 0 for a, b in xs])
    y9 = [(a, b) for b in range(3) for a in range(3)]
    y3 = [(a, 0) for a in range(3)]
    # odd-characteristic form h^2 + 4 f decides smoothness
    smooth_of = np.array([r is not None for r in base])
    weights = 3 ** np.arange(7)
    stats = Counter()
    cp_hist = Counter()
    for hi_idx, h in enumerate(hs):
        hh = np.convolve(h, h)[:7]
        F = (hh[None, :] + fs) % 3
        key = F @ weights
        smooth = smooth_of[key]
        hr = np.broadcast_to(h_re[hi_idx], f_re.shape)
        him = np.broadcast_to(h_im[hi_idx], f_im.shape)
        aff9 = _count_solutions(hr, him, f_re, f_im, y9).sum(axis=1)
        aff3 = _count_solutions(hr[:, in_f3], him[:, in_f3], f_re[:, in_f3], f_im[:, in_f3], y3).sum(axis=1)
        h3 = np.full(len(fs), h[3])
        z = np.zeros(len(fs), dtype=np.int64)
        inf3 = _count_solutions(h3[:, None], z[:, None], fs[:, 6:7], z[:, None], y3)[:, 0]
        inf9 = _count_solutions(h3[:, None], z[:, None], fs[:, 6:7], z[:, None], y9)[:, 0]
        N1 = aff3 + inf3
        N2 = aff9 + inf9
        s1 = 4 - N1
        s2 = 10 - N2
        a = -s1
        b = (s1 * s1 - s2) // 2
        ordinary = smooth & (b % 3 != 0)
        stats["total"] += len(fs)
        stats["smooth"] += int(smooth.sum())
        stats["ordinary"] += int(ordinary.sum())
        for ai, bi in zip(a[ordinary], b[ordinary]):
            cp = (9, 3 * int(ai), int(bi), int(ai), 1)
            cp_hist[cp] += 1
            if is_perfect_square(Poly(cp)):
                stats["non_distinguished"] += 1
    return stats, cp_hist


def enumerate_f3(generalized=False):
    base = _f3_base()
    rep = EnumerationReport(field=3, total=len(base))
    weil = [tuple(P.coeffs) for P in weil_poly_enumerate(3)]
    counts, wp, cp_hist = Counter(), set(), Counter()
    for r in base:
        if r is None:
            continue
        rep.smooth += 1
        cp, ordinary, dist, has_wp = r
        cp_hist[fmt_poly(cp)] += 1
        if not ordinary:
            continue
        rep.ordinary += 1
        counts[cp] += 1
        if has_wp:
            wp.add(cp)
        if not dist:
            rep.non_distinguished += 1
    rep.charpoly_hist = dict(sorted(cp_hist.items()))
    rows = []
    for cp in sorted(weil, key=lambda c: (tuple(x % 3 for x in c), c)):
        rows.append({"charpoly": list(cp), "poly": fmt_poly(cp),
                     "mod3": [x % 3 for x in cp], "wp_jacobian": cp in wp,
                     "any_jacobian": counts[cp] > 0, "curves": counts[cp],
                     "distinguished": not is_perfect_square(Poly(cp))})
    rep.table_rows = rows
    rep.checks = {
        "ordinary_charpolys_are_weil": set(counts) <= set(weil),
        "wp_implies_distinguished": all(not is_perfect_square(Poly(c)) for c in wp),
        "distinguished_iff_not_square": all(
            (not is_perfect_square(Poly(cp))) == dist
            for cp, ordinary, dist, _ in (r for r in base if r) if ordinary),
    }
    if generalized:
        stats, gen_hist = _generalized_sweep(base)
        b = (rep.total, rep.smooth, rep.ordinary, rep.non_distinguished)
        g = (stats["total"], stats["smooth"], stats["ordinary"], stats["non_distinguished"])
        rep.generalized = {
            "total": g[0], "smooth": g[1], "ordinary": g[2], "non_distinguished": g[3],
            "ratios_preserved": all(gi * b[0] == bi * g[0] for gi, bi in zip(g, b)),
            "charpoly_ratios_preserved": all(
                gen_hist[cp] * b[0] == counts[cp] * g[0] for cp in set(gen_hist) | set(counts)),
        }
    return rep


# -- Weil polynomial buckets and density -------------------------------------

def weil_bucket_table(p=2):
    """Ordinary Weil polynomials at p grouped by reduction mod 3, with the
    outer classes of PGSp4(F3) whose lifts have that charpoly."""
    if p != 2:
        raise PipelineError("the class buckets are only meaningful for p = 2")
    cls = {}
    for a in sg.pgsp_outer_atlas():
        for cp in a.charpolys:
            cls.setdefault(tuple(cp), set()).add(a.label)
    table = {}
    for P in weil_poly_enumerate(p):
        key = tuple(c % 3 for c in P.coeffs)
        entry = table.setdefault(key, {"polys": [], "classes": ()})
        entry["polys"].append(tuple(P.coeffs))
        entry["classes"] = tuple(sorted(cls.get(key, ()), key=sg.LABELS.index))
    return table


def density_factors(f2, f3):
    excluded = f2.class_hist.get("4C", 0) + f2.class_hist.get("12C", 0)
    first = Fraction(f2.smooth - excluded, f2.total)
    second = Fraction(f3.ordinary - f3.non_distinguished, f3.total)
    return first, second


def density_theorem_applicability(f2=None, f3=None):
    f2 = f2 or enumerate_f2(triangle=False)
    f3 = f3 or enumerate_f3()
    a, b = density_factors(f2, f3)
    return a * b
