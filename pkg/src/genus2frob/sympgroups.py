"""Small symplectic groups by brute force: GSp4(F3), Sp4(F3), Sp4(F2), Sp6(F2).

Matrices act on column vectors and preserve J = [[0, S], [-S, 0]] up to a
scalar: g^T J g = nu(g) J, with S the antidiagonal matrix of ones.
"""
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components


class GroupError(ValueError):
    pass


LABELS = ("2C", "2D", "4C", "4D", "6G", "6H", "6I", "8A", "10A", "12C")

# Published reference table for the outer classes of PGSp4(F3): order, lift
# characteristic polynomials over F3 (low->high) and class size.  Only used to
# check the computed atlas, never to build it.
ATLAS_REFERENCE = {
    "2C": (2, {(1, 0, 2, 0, 1)}, 36),
    "2D": (2, {(1, 0, 1, 0, 1)}, 540),
    "4C": (4, {(1, 2, 2, 1, 1), (1, 1, 2, 2, 1)}, 540),
    "4D": (4, {(1, 0, 0, 0, 1)}, 1620),
    "6G": (6, {(1, 0, 2, 0, 1)}, 1440),
    "6H": (6, {(1, 0, 2, 0, 1)}, 1440),
    "6I": (6, {(1, 0, 1, 0, 1)}, 4320),
    "8A": (8, {(1, 2, 1, 1, 1), (1, 1, 1, 2, 1)}, 6480),
    "10A": (10, {(1, 2, 0, 1, 1), (1, 1, 0, 2, 1)}, 5184),
    "12C": (12, {(1, 2, 2, 1, 1), (1, 1, 2, 2, 1)}, 4320),
}

S40_REFERENCE = {
    "4C": (4,) * 10,
    "4D": (4,) * 10,
    "6G": (2, 2, 6, 6, 6, 6, 6, 6),
    "6H": (2, 2, 6, 6, 6, 6, 6, 6),
}

S27_REFERENCE = {
    "4C": (1, 2, 2, 2, 4, 4, 4, 4, 4),
    "4D": (1, 1, 1, 1, 1, 2, 4, 4, 4, 4, 4),
    "6G": (1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 6),
    "6H": (3, 3, 3, 3, 3, 6, 6),
}


# -- basic matrix helpers -----------------------------------------------------

def J_form(n=2, p=3):
    S = np.fliplr(np.eye(n, dtype=np.int64))
    Z = np.zeros((n, n), dtype=np.int64)
    return np.block([[Z, S], [-S, Z]]) % p


def similitude(g, p=3):
    """nu with g^T J g = nu J, or None."""
    g = np.asarray(g, dtype=np.int64) % p
    d = g.shape[0]
    J = J_form(d // 2, p)
    G = (g.T @ J @ g) % p
    for nu in range(1, p):
        if np.array_equal(G, (nu * J) % p):
            return nu
    return None


@dataclass(frozen=True)
class SympMatrix:
    entries: tuple
    p: int
    nu: int = field(init=False)

    def __post_init__(self):
        nu = similitude(np.array(self.entries), self.p)
        if nu is None:
            raise GroupError("matrix is not a symplectic similitude")
        object.__setattr__(self, "nu", nu)

    @classmethod
    def of(cls, g, p=3):
        g = np.asarray(g, dtype=np.int64) % p
        return cls(tuple(tuple(int(x) for x in row) for row in g), p)

    def array(self):
        return np.array(self.entries, dtype=np.int64)


def _arr(g, p):
    if isinstance(g, SympMatrix):
        return g.array()
    return np.asarray(g, dtype=np.int64) % p


def transvection(v, p=3):
    v = np.asarray(v, dtype=np.int64).reshape(-1, 1)
    d = v.shape[0]
    J = J_form(d // 2, p)
    return (np.eye(d, dtype=np.int64) - v @ (v.T @ J)) % p


def charpoly(g, p=3):
    """Characteristic polynomial of a square matrix over F_p, low->high."""
    g = _arr(g, p)
    d = g.shape[0]
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    for r in range(1, d + 1):
        s = 0
        for idx in itertools.combinations(range(d), r):
            s += _det_mod(g[np.ix_(idx, idx)], p)
        coeffs[d - r] = ((-1) ** r * s) % p
    return tuple(coeffs)


def _det_mod(A, p):
    A = [[int(x) % p for x in row] for row in A]
    n = len(A)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            det = -det
        det = det * A[c][c] % p
        inv = pow(A[c][c], p - 2, p)
        for r in range(c + 1, n):
            if A[r][c]:
                f = A[r][c] * inv % p
                A[r] = [(x - f * y) % p for x, y in zip(A[r], A[c])]
    return det % p


def rank_mod(A, p):
    A = [[int(x) % p for x in row] for row in np.asarray(A)]
    rows, cols = len(A), len(A[0]) if A else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        r += 1
    return r


def mat_order(g, p=3, projective=False):
    g = _arr(g, p)
    d = g.shape[0]
    I = np.eye(d, dtype=np.int64)
    x = g.copy()
    for n in range(1, 10000):
        if projective:
            if np.count_nonzero(x - np.diag(np.diag(x))) == 0 and len(set(np.diag(x))) == 1:
                return n
        elif np.array_equal(x, I):
            return n
        x = (x @ g) % p
    raise GroupError("element order too large")


def neg_charpoly(cp, p=3):
    """charpoly of -g from charpoly of g (degree even)."""
    return tuple((c * (-1) ** i) % p for i, c in enumerate(cp))


# -- brute-force generation -------------------------------------------------

def _encode(mats, p):
    n = mats.shape[0]
    flat = mats.reshape(n, -1).astype(np.int64)
    w = p ** np.arange(flat.shape[1], dtype=np.int64)
    return flat @ w


def _decode(codes, p, d):
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty((codes.shape[0], d * d), dtype=np.int8)
    c = codes.copy()
    for i in range(d * d):
        out[:, i] = c % p
        c //= p
    return out.reshape(-1, d, d)


def _decode_vecs(codes, p, n):
    c = np.asarray(codes, dtype=np.int64).copy()
    out = np.empty((c.shape[0], n), dtype=np.int64)
    for i in range(n):
        out[:, i] = c % p
        c //= p
    return out


def _closure(gens, p, limit=5_000_000):
    d = gens[0].shape[0]
    G = np.stack(gens).astype(np.int64)
    start = np.eye(d, dtype=np.int64)[None]
    seen = _encode(start, p)
    frontier = start
    chunks = [start.astype(np.int8)]
    while frontier.shape[0]:
        prods = np.einsum("fij,gjk->fgik", frontier, G).reshape(-1, d, d) % p
        codes = _encode(prods, p)
        uniq, idx = np.unique(codes, return_index=True)
        fresh = ~np.isin(uniq, seen, assume_unique=True)
        frontier = prods[idx[fresh]]
        seen = np.union1d(seen, uniq[fresh])
        chunks.append(frontier.astype(np.int8))
        if seen.shape[0] > limit:
            raise GroupError("closure exceeded the size limit")
    mats = np.concatenate(chunks)
    codes = _encode(mats, p)
    order = np.argsort(codes)
    return mats[order], codes[order]


@dataclass
class ClassInfo:
    index: int
    size: int
    rep: int
    order: int
    nu: int
    charpoly: tuple


@dataclass
class GroupTable:
    name: str
    p: int
    d: int
    mats: np.ndarray
    codes: np.ndarray
    gens: list
    class_of: np.ndarray = None
    classes: list = None

    @property
    def order(self):
        return int(self.mats.shape[0])

    def index(self, g):
        g = np.asarray(g, dtype=np.int64).reshape(1, self.d, self.d) % self.p
        c = _encode(g, self.p)[0]
        i = int(np.searchsorted(self.codes, c))
        if i >= len(self.codes) or self.codes[i] != c:
            raise GroupError("matrix is not in %s" % self.name)
        return i

    def indices(self, mats):
        c = _encode(np.asarray(mats, dtype=np.int64) % self.p, self.p)
        i = np.searchsorted(self.codes, c)
        i = np.minimum(i, len(self.codes) - 1)
        if not np.all(self.codes[i] == c):
            raise GroupError("some matrices are not in %s" % self.name)
        return i

    def nus(self):
        J = J_form(self.d // 2, self.p)
        M = self.mats.astype(np.int64)
        G = np.einsum("nji,jk,nkl->nil", M, J, M) % self.p
        # read nu off the (0, d-1) entry where J has a 1
        return G[:, 0, self.d - 1]


def _basis(d):
    return [np.eye(d, dtype=np.int64)[:, i] for i in range(d)]


def _default_gens(d, p):
    e = _basis(d)
    vs = list(e)
    for i in range(d - 1):
        vs.append(e[i] + e[i + 1])
    vs.append(e[0] + e[d - 1])
    return [transvection(v, p) for v in vs]


def generate_group(which):
    """GSp4F3, Sp4F3, Sp4F2 or Sp6F2 as a GroupTable with conjugacy classes."""
    which = which.replace("(", "").replace(")", "").replace("_", "")
    specs = {"GSp4F3": (4, 3, True), "Sp4F3": (4, 3, False),
             "Sp4F2": (4, 2, False), "Sp6F2": (6, 2, False)}
    if which not in specs:
        raise GroupError("unknown group %r" % which)
    return _generate(which, *specs[which])


@lru_cache(maxsize=None)
def _generate(name, d, p, outer):
    gens = _default_gens(d, p)
    if outer:
        gens.append(np.diag([1] * (d // 2) + [p - 1] * (d // 2)).astype(np.int64))
    for g in gens:
        if similitude(g, p) is None:
            raise GroupError("generator does not preserve J up to scalar")
    mats, codes = _closure(gens, p)
    t = GroupTable(name, p, d, mats, codes, gens)
    if t.order <= 200_000:
        _conjugacy_classes(t)
    return t


def _conjugacy_classes(t):
    n = t.order
    M = t.mats.astype(np.int64)
    rows, cols = [], []
    for s in t.gens:
        sinv = _inverse_mod(s, t.p)
        conj = np.einsum("ij,njk,kl->nil", s, M, sinv) % t.p
        rows.append(np.arange(n))
        cols.append(t.indices(conj))
    r = np.concatenate(rows)
    c = np.concatenate(cols)
    graph = coo_matrix((np.ones_like(r), (r, c)), shape=(n, n))
    ncomp, labels = connected_components(graph, directed=True, connection="weak")
    # canonical class numbering: by order of the smallest element code
    first = np.full(ncomp, n)
    np.minimum.at(first, labels, np.arange(n))
    perm = np.argsort(first)
    renum = np.empty(ncomp, dtype=np.int64)
    renum[perm] = np.arange(ncomp)
    t.class_of = renum[labels]
    sizes = np.bincount(t.class_of, minlength=ncomp)
    nus = t.nus()
    classes = []
    for ci in range(ncomp):
        rep = int(first[perm[ci]])
        g = t.mats[rep]
        classes.append(ClassInfo(ci, int(sizes[ci]), rep, mat_order(g, t.p),
                                 int(nus[rep]), charpoly(g, t.p)))
    t.classes = classes


def _inverse_mod(A, p):
    A = np.asarray(A, dtype=np.int64) % p
    d = A.shape[0]
    M = [list(map(int, row)) + [int(i == j) for j in range(d)] for i, row in enumerate(A)]
    for c in range(d):
        piv = next((r for r in range(c, d) if M[r][c] % p), None)
        if piv is None:
            raise GroupError("singular matrix")
        M[c], M[piv] = M[piv], M[c]
        inv = pow(M[c][c], p - 2, p)
        M[c] = [x * inv % p for x in M[c]]
        for r in range(d):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [(x - f * y) % p for x, y in zip(M[r], M[c])]
    return np.array([row[d:] for row in M], dtype=np.int64)


# -- permutation actions on 40 and 27 points ---------------------------------

def _canon_lines(vecs, p=3):
    """Canonical representative code of the line through each vector (mod +-)."""
    vecs = np.asarray(vecs, dtype=np.int64) % p
    w = p ** np.arange(vecs.shape[-1], dtype=np.int64)
    c1 = vecs @ w
    c2 = ((-vecs) % p) @ w
    return np.minimum(c1, c2)


@lru_cache(maxsize=None)
def _forty():
    pts = np.array(list(itertools.product(range(3), repeat=4)), dtype=np.int64)[1:]
    codes = _canon_lines(pts)
    keep = np.unique(codes)
    lookup = np.full(81, -1, dtype=np.int64)
    lookup[keep] = np.arange(len(keep))
    reps = _decode_vecs(keep, 3, 4)
    return reps, lookup


def _cycle_types(perms):
    """Sorted cycle types of a batch of permutations (n, m)."""
    n, m = perms.shape
    length = np.zeros((n, m), dtype=np.int64)
    cur = perms.copy()
    ar = np.arange(m)
    for k in range(1, 400):
        hit = (cur == ar) & (length == 0)
        length[hit] = k
        if np.all(length):
            break
        cur = np.take_along_axis(perms, cur, axis=1)
    out = []
    for row in length:
        vals, cnt = np.unique(row, return_counts=True)
        ct = []
        for v, c in zip(vals, cnt):
            ct.extend([int(v)] * int(c // v))
        out.append(tuple(sorted(ct)))
    return out


def s40_perms(mats):
    reps, lookup = _forty()
    M = np.asarray(mats, dtype=np.int64).reshape(-1, 4, 4)
    img = np.einsum("nij,mj->nmi", M, reps) % 3
    return lookup[_canon_lines(img)]


def s40_cycle_type(g):
    """Cycle type of g on the 40 points (F3^4 - 0)/+-1."""
    return _cycle_types(s40_perms(_arr(g, 3)[None]))[0]


_PAIRS = list(itertools.combinations(range(4), 2))


def _wedge2(mats):
    """Second exterior power in the basis e_i ^ e_j (i < j)."""
    M = np.asarray(mats, dtype=np.int64).reshape(-1, 4, 4)
    out = np.empty((M.shape[0], 6, 6), dtype=np.int64)
    for a, (i, j) in enumerate(_PAIRS):
        for b, (k, l) in enumerate(_PAIRS):
            out[:, a, b] = M[:, i, k] * M[:, j, l] - M[:, i, l] * M[:, j, k]
    return out % 3


def _pf(eta):
    # eta ^ eta = 2 * Pf(eta) e1234
    e = dict(zip(_PAIRS, eta))
    return (e[(0, 1)] * e[(2, 3)] - e[(0, 2)] * e[(1, 3)] + e[(0, 3)] * e[(1, 2)]) % 3


@lru_cache(maxsize=None)
def _frames():
    """The 27 orthogonal frames of the 5-dimensional quadratic space W.

    W is the kernel of x^y -> <x, y> inside the second exterior power of
    F3^4 and Q is the Pfaffian.  A frame is a set of five mutually orthogonal
    lines with equal nonzero Q; PGSp4(F3) permutes them."""
    J = J_form(2, 3)
    phi = np.array([J[i, j] for i, j in _PAIRS]) % 3
    vecs = [np.array(v) for v in itertools.product(range(3), repeat=6)
            if any(v) and int(np.dot(v, phi)) % 3 == 0]

    def B(x, y):
        return (_pf((x + y) % 3) - _pf(x) - _pf(y)) % 3

    best = None
    for c in (1, 2):
        lines = {}
        for v in vecs:
            if _pf(v) == c:
                code = int(_canon_lines(v[None])[0])
                lines.setdefault(code, v)
        codes = sorted(lines)
        idx = {cd: i for i, cd in enumerate(codes)}
        orth = {i: set() for i in range(len(codes))}
        for a, b in itertools.combinations(range(len(codes)), 2):
            if B(lines[codes[a]], lines[codes[b]]) == 0:
                orth[a].add(b)
                orth[b].add(a)
        frames = []

        def grow(clique, cand):
            if len(clique) == 5:
                frames.append(tuple(clique))
                return
            for x in sorted(cand):
                if x > clique[-1]:
                    grow(clique + [x], cand & orth[x])

        for a in range(len(codes)):
            grow([a], orth[a])
        if len(frames) == 27:
            best = (c, codes, frames)
    if best is None:
        raise GroupError("no orbit of 27 orthogonal frames found")
    c, codes, frames = best
    lookup = np.full(3 ** 6, -1, dtype=np.int64)
    lookup[np.array(codes)] = np.arange(len(codes))
    line_vecs = _decode_vecs(codes, 3, 6)
    masks = np.array([sum(1 << i for i in fr) for fr in frames], dtype=np.int64)
    order = np.argsort(masks)
    return c, line_vecs, lookup, np.array(frames)[order], masks[order]


def s27_perms(mats):
    c, line_vecs, lookup, frames, masks = _frames()
    W = _wedge2(mats)
    img = np.einsum("nij,mj->nmi", W, line_vecs) % 3
    lines = lookup[_canon_lines(img)]
    if np.any(lines < 0):
        raise GroupError("matrix does not preserve the frame lines")
    fm = np.zeros((lines.shape[0], len(frames)), dtype=np.int64)
    for k in range(5):
        fm |= np.left_shift(np.int64(1), lines[:, frames[:, k]])
    pos = np.searchsorted(masks, fm)
    return pos


def s27_cycle_type(g):
    """Cycle type of g on the 27 orthogonal frames."""
    return _cycle_types(s27_perms(_arr(g, 3)[None]))[0]


# -- outer atlas ------------------------------------------------------------

@dataclass
class OuterClass:
    label: str
    order: int
    charpolys: tuple
    size: int
    s40: tuple
    s27: tuple
    gsp_classes: tuple
    rep: int


def _kernel_dims(mats, ks):
    """dim ker(g^k - 1) over F3 for each k, batched via all 81 vectors."""
    M = np.asarray(mats, dtype=np.int64).reshape(-1, 4, 4)
    vecs = np.array(list(itertools.product(range(3), repeat=4)), dtype=np.int64).T
    out = {}
    P = np.broadcast_to(np.eye(4, dtype=np.int64), M.shape).copy()
    kmax = max(ks)
    for k in range(1, kmax + 1):
        P = np.einsum("nij,njk->nik", P, M) % 3
        if k in ks:
            A = (P - np.eye(4, dtype=np.int64)) % 3
            z = np.all((np.einsum("nij,jm->nim", A, vecs) % 3) == 0, axis=1).sum(axis=1)
            out[k] = np.rint(np.log(z) / np.log(3)).astype(np.int64)
    return out


def _proj_orders(mats):
    M = np.asarray(mats, dtype=np.int64).reshape(-1, 4, 4)
    n = M.shape[0]
    order = np.zeros(n, dtype=np.int64)
    P = M.copy()
    off = ~np.eye(4, dtype=bool)
    for k in range(1, 100):
        scalar = np.all(P[:, off] == 0, axis=1) & np.all(P[:, np.arange(4), np.arange(4)] == P[:, :1, 0], axis=1)
        hit = scalar & (order == 0)
        order[hit] = k
        if np.all(order):
            break
        P = np.einsum("nij,njk->nik", P, M) % 3
    return order


def _charpolys_batch(mats):
    M = np.asarray(mats, dtype=np.int64).reshape(-1, 4, 4).astype(np.float64)
    n = M.shape[0]
    out = np.zeros((n, 5), dtype=np.int64)
    out[:, 4] = 1
    for r in range(1, 5):
        s = np.zeros(n)
        for idx in itertools.combinations(range(4), r):
            sub = M[:, idx][:, :, idx]
            s += np.linalg.det(sub)
        out[:, 4 - r] = (np.rint(s).astype(np.int64) * (-1) ** r) % 3
    return out


@lru_cache(maxsize=None)
def _outer_atlas():
    t = generate_group("GSp4F3")
    outer = [c for c in t.classes if c.nu == 2]
    neg = (-t.mats.astype(np.int64)) % 3
    negcls = t.class_of[t.indices(neg[[c.rep for c in outer]])]
    seen, merged = set(), []
    for c, nc in zip(outer, negcls):
        if c.index in seen:
            continue
        pair = tuple(sorted({c.index, int(nc)}))
        seen.update(pair)
        merged.append(pair)
    out = []
    for pair in merged:
        cl = [t.classes[i] for i in pair]
        rep = cl[0].rep
        g = t.mats[rep].astype(np.int64)
        size = sum(c.size for c in cl) // 2
        cps = tuple(sorted({c.charpoly for c in cl} | {neg_charpoly(c.charpoly) for c in cl}))
        out.append(dict(order=mat_order(g, 3, projective=True), charpolys=cps, size=size,
                        s40=s40_cycle_type(g), s27=s27_cycle_type(g), gsp_classes=pair, rep=rep))
    # labels: order and charpolys, with 6G/6H told apart by fixed frames
    result = []
    for rec in out:
        cands = [lab for lab, (o, cps, _) in ATLAS_REFERENCE.items()
                 if o == rec["order"] and set(rec["charpolys"]) == cps]
        if len(cands) > 1:
            cands = [lab for lab in cands if S27_REFERENCE.get(lab) == rec["s27"]] or cands
        if len(cands) != 1:
            raise GroupError("cannot label outer class %r" % (rec,))
        result.append(OuterClass(cands[0], **rec))
    result.sort(key=lambda r: LABELS.index(r.label))
    return tuple(result)


def pgsp_outer_atlas(t=None):
    """The 10 outer classes of PGSp4(F3), labelled."""
    if t is not None and t.name != "GSp4F3":
        raise GroupError("the outer atlas needs the GSp4(F3) table")
    return list(_outer_atlas())


def check_atlas(atlas):
    """Raise if the computed atlas disagrees with the reference table."""
    if len(atlas) != 10 or sorted(a.label for a in atlas) != sorted(LABELS):
        raise GroupError("expected 10 labelled outer classes")
    for a in atlas:
        o, cps, size = ATLAS_REFERENCE[a.label]
        if a.order != o or set(a.charpolys) != cps or a.size != size:
            raise GroupError("atlas mismatch for %s" % a.label)
        if a.label in S40_REFERENCE and a.s40 != S40_REFERENCE[a.label]:
            raise GroupError("S40 mismatch for %s" % a.label)
        if a.label in S27_REFERENCE and a.s27 != S27_REFERENCE[a.label]:
            raise GroupError("S27 mismatch for %s" % a.label)
    return True


# -- classification of outer elements -------------------------------------------

_KS = (1, 2, 3, 4, 6, 8, 12)


def _signatures(mats):
    M = np.asarray(mats, dtype=np.int64).reshape(-1, 4, 4) % 3
    cps = _charpolys_batch(M)
    orders = _proj_orders(M)
    kd = _kernel_dims(M, _KS)
    sigs = []
    for i in range(M.shape[0]):
        cp = tuple(int(x) for x in cps[i])
        pair = tuple(sorted({cp, neg_charpoly(cp)}))
        sigs.append((pair, int(orders[i]), tuple(int(kd[k][i]) for k in _KS)))
    return sigs


@lru_cache(maxsize=None)
def prebuild_oracle():
    """Which outer classes the signature (charpoly pair, projective order,
    dim ker(g^k - 1)) fails to separate, checked on every outer element."""
    t = generate_group("GSp4F3")
    atlas = _outer_atlas()
    label_of_gsp = {}
    for a in atlas:
        for ci in a.gsp_classes:
            label_of_gsp[ci] = a.label
    nus = t.nus()
    idx = np.nonzero(nus == 2)[0]
    sigs = _signatures(t.mats[idx])
    table = {}
    for i, s in zip(idx, sigs):
        table.setdefault(s, set()).add(label_of_gsp[int(t.class_of[i])])
    ambiguous = {s: tuple(sorted(v)) for s, v in table.items() if len(v) > 1}
    s27_split = {}
    for a in atlas:
        s27_split.setdefault(a.s27, set()).add(a.label)
    return {
        "signature_table": {s: next(iter(v)) for s, v in table.items() if len(v) == 1},
        "ambiguous": ambiguous,
        "separates_6G_6H": not any({"6G", "6H"} <= set(v) for v in ambiguous.values()),
        "s27_table": {k: tuple(sorted(v)) for k, v in s27_split.items()},
    }


def classify_many(mats):
    """Labels for a batch of nu = -1 elements of GSp4(F3)."""
    M = np.asarray(mats, dtype=np.int64).reshape(-1, 4, 4) % 3
    J = J_form(2, 3)
    G = np.einsum("nji,jk,nkl->nil", M, J, M) % 3
    if not np.all(G == (2 * J) % 3):
        raise GroupError("classify_class expects similitude factor -1")
    orc = prebuild_oracle()
    sigs = _signatures(M)
    labels = [orc["signature_table"].get(s) for s in sigs]
    todo = [i for i, lab in enumerate(labels) if lab is None]
    if todo:
        types = _cycle_types(s27_perms(M[todo]))
        for i, ct in zip(todo, types):
            cands = [lab for lab in orc["ambiguous"].get(sigs[i], ())
                     if lab in orc["s27_table"].get(ct, ())]
            if len(cands) == 1:
                labels[i] = cands[0]
            else:
                labels[i] = _conjugacy_lookup(M[i])
    return labels


def _conjugacy_lookup(g):
    t = generate_group("GSp4F3")
    ci = int(t.class_of[t.index(g)])
    for a in _outer_atlas():
        if ci in a.gsp_classes:
            return a.label
    return "unclassified"


def classify_class(g, t=None):
    """ClassLabel of an element with g^T J g = -J."""
    g = _arr(g, 3)
    if similitude(g, 3) != 2:
        raise GroupError("classify_class expects similitude factor -1")
    return classify_many(g[None])[0]


# -- regular semisimple classes ---------------------------------------------

def _squarefree_mod(cp, p):
    from .gf import Poly, field_make, is_squarefree
    return is_squarefree(Poly(cp, field_make(p)))


def reg_ss_classes(t=None):
    """(nu = 1 classes, nu = -1 classes) of GSp4(F3) with squarefree charpoly."""
    t = t or generate_group("GSp4F3")
    inner, outer = [], []
    for c in t.classes:
        if _squarefree_mod(c.charpoly, 3):
            (inner if c.nu == 1 else outer).append(c)
    return inner, outer


# -- Sp4(F2) and S6 ---------------------------------------------------------

S6_GENERATOR_IMAGES = {
    (1, 0, 3, 2, 5, 4): ((1, 0, 1, 0), (0, 1, 0, 1), (0, 0, 1, 0), (0, 0, 0, 1)),
    (1, 0, 2, 3, 4, 5): ((1, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    (1, 2, 3, 4, 0, 5): ((0, 0, 1, 1), (1, 1, 0, 0), (1, 1, 1, 0), (1, 0, 1, 1)),
}

_E_BASIS = [(0, 1), (2, 3), (2, 4), (0, 5)]   # e1 = r1 - r2, ..., e4 = r1 - r6


def _perm_from_cycles(*cycles, n=6):
    p = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a - 1] = b - 1
    return tuple(p)


def _coords_mod_L(w):
    """Coordinates of an even-weight vector of F2^6 in e1..e4 modulo (1,...,1)."""
    E = np.zeros((6, 5), dtype=np.int64)
    for j, (a, b) in enumerate(_E_BASIS):
        E[a, j] = E[b, j] = 1
    E[:, 4] = 1
    for c in itertools.product(range(2), repeat=5):
        if np.array_equal((E @ np.array(c)) % 2, np.asarray(w) % 2):
            return c[:4]
    raise GroupError("vector not in U0")


def _perm_matrix(perm, convention):
    cols = []
    for a, b in _E_BASIS:
        w = np.zeros(6, dtype=np.int64)
        if convention == "image":
            w[perm[a]] = w[perm[b]] = 1
        else:
            inv = [perm.index(i) for i in range(6)]
            w[inv[a]] = w[inv[b]] = 1
        cols.append(_coords_mod_L(w))
    return np.array(cols, dtype=np.int64).T % 2


def _compose(p1, p2):
    # (p1 p2)(i) = p1(p2(i))
    return tuple(p1[p2[i]] for i in range(len(p2)))


@dataclass
class S6Dictionary:
    convention: str
    images: dict
    matches_reference: bool
    is_isomorphism: bool
    preserves_J: bool
    coxeter_ok: bool
    s5b: list
    a5b: list
    class_images: dict


@lru_cache(maxsize=None)
def s6_gsp4_dictionary():
    """The map S6 -> Sp4(F2) from the action on U0/L, with e1..e4 as basis."""
    perms = list(itertools.permutations(range(6)))
    J2 = J_form(2, 2)
    gram = np.zeros((4, 4), dtype=np.int64)
    vecs = []
    for a, b in _E_BASIS:
        w = np.zeros(6, dtype=np.int64)
        w[a] = w[b] = 1
        vecs.append(w)
    for i in range(4):
        for j in range(4):
            gram[i, j] = int(vecs[i] @ vecs[j]) % 2
    if not np.array_equal(gram, J2):
        raise GroupError("intersection pairing on e1..e4 is not J")
    chosen = None
    for conv in ("image", "preimage"):
        ok = all(np.array_equal(_perm_matrix(s, conv), np.array(m))
                 for s, m in S6_GENERATOR_IMAGES.items())
        if ok:
            chosen = conv
            break
    conv = chosen or "image"
    images = {s: _perm_matrix(s, conv) for s in perms}
    t = generate_group("Sp4F2")
    codes = {int(_encode(m[None], 2)[0]) for m in images.values()}
    iso = len(codes) == 720 == t.order and codes == set(int(c) for c in t.codes)
    hom = True
    rng = np.random.default_rng(0)
    for _ in range(200):
        a, b = (perms[i] for i in rng.integers(0, 720, 2))
        if conv == "image":
            lhs = images[_compose(a, b)]
        else:
            lhs = images[_compose(b, a)]
        hom &= np.array_equal(lhs, (images[a] @ images[b]) % 2)
    pres = all(np.array_equal((m.T @ J2 @ m) % 2, J2) for m in images.values())
    s = [_perm_from_cycles((i, i + 1)) for i in range(1, 6)]
    ident = np.eye(4, dtype=np.int64)

    def img(p):
        return images[p]

    def power_is_identity(m, k):
        x = ident.copy()
        for _ in range(k):
            x = (x @ m) % 2
        return np.array_equal(x, ident)

    cox = True
    for i in range(5):
        cox &= power_is_identity(img(s[i]), 2)
        for j in range(i + 1, 5):
            m = (img(s[i]) @ img(s[j])) % 2
            cox &= power_is_identity(m, 3 if j == i + 1 else 2)
    s5b = [p for p in perms if p[5] == 5]
    a5b = [p for p in s5b if _sign(p) == 1]
    class_images = {}
    for p in perms:
        ct = cycle_type_perm(p)
        class_images.setdefault(ct, []).append(p)
    return S6Dictionary(conv, images, chosen is not None, iso and hom, pres, cox,
                        s5b, a5b, {k: len(v) for k, v in class_images.items()})


def _sign(p):
    s, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, ln = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            ln += 1
        if ln % 2 == 0:
            s = -s
    return s


def cycle_type_perm(p):
    seen, out = set(), []
    for i in range(len(p)):
        if i in seen:
            continue
        j, ln = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            ln += 1
        out.append(ln)
    return tuple(sorted(out))


@dataclass
class SiegelReport:
    order: int
    equals_centralizer: bool
    corresponds_to_triple_transposition: bool
    center_order: int
    derived_order: int
    abelianization_order: int
    s5b_intersection_order: int
    s5b_intersection_is_d8: bool
    order3_cycle_shapes: tuple


def _subgroup_closure(elems, p=2):
    """Subgroup generated by a list of matrices (small groups)."""
    d = elems[0].shape[0]
    if not elems:
        return []
    mats, _ = _closure([np.asarray(e, dtype=np.int64) for e in elems], p)
    return mats


def siegel_parabolic_facts(t=None):
    t = t or generate_group("Sp4F2")
    M = t.mats.astype(np.int64)
    stab = M[np.all(M[:, 2:, :2] == 0, axis=(1, 2))]
    z = np.array(S6_GENERATOR_IMAGES[(1, 0, 3, 2, 5, 4)], dtype=np.int64)
    commute = np.all((np.einsum("nij,jk->nik", M, z) % 2) == (np.einsum("ij,njk->nik", z, M) % 2),
                     axis=(1, 2))
    cent = M[commute]
    codes_stab = set(_encode(stab, 2).tolist())
    codes_cent = set(_encode(cent, 2).tolist())
    dic = s6_gsp4_dictionary()
    trip = _perm_from_cycles((1, 2), (3, 4), (5, 6))
    cent_s6 = [p for p in itertools.permutations(range(6))
               if _compose(p, trip) == _compose(trip, p)]
    codes_img = {int(_encode(dic.images[p][None], 2)[0]) for p in cent_s6}
    # abstract structure: centre, derived subgroup, abelianization
    S = stab
    n = S.shape[0]
    comm_center = [i for i in range(n)
                   if all(np.array_equal((S[i] @ S[j]) % 2, (S[j] @ S[i]) % 2) for j in range(n))]
    invs = [_inverse_mod(S[i], 2) for i in range(n)]
    comms = {}
    for i in range(n):
        for j in range(n):
            c = (S[i] @ S[j] @ invs[i] @ invs[j]) % 2
            comms[int(_encode(c[None], 2)[0])] = c
    derived = _subgroup_closure(list(comms.values()))
    inter = [p for p in dic.s5b if p in set(cent_s6)]
    n_inv = sum(1 for p in inter if _perm_order(p) == 2)
    abelian = all(_compose(a, b) == _compose(b, a) for a in inter for b in inter)
    has4 = any(_perm_order(p) == 4 for p in inter)
    shapes = sorted({cycle_type_perm(p) for p in cent_s6 if _perm_order(p) == 3})
    return SiegelReport(
        order=int(n),
        equals_centralizer=codes_stab == codes_cent,
        corresponds_to_triple_transposition=codes_img == codes_stab,
        center_order=len(comm_center),
        derived_order=int(derived.shape[0]),
        abelianization_order=int(n) // int(derived.shape[0]),
        s5b_intersection_order=len(inter),
        s5b_intersection_is_d8=len(inter) == 8 and not abelian and n_inv == 5 and has4,
        order3_cycle_shapes=tuple(shapes),
    )


def _perm_order(p):
    from math import lcm
    o = 1
    for c in cycle_type_perm(p):
        o = lcm(o, c)
    return o


# -- involutions and oddness over F2 ------------------------------------------

def is_odd_involution(A):
    """A * J has a nonzero diagonal entry (quadratic form not alternating)."""
    A = np.asarray(A, dtype=np.int64) % 2
    J = J_form(A.shape[0] // 2, 2)
    return bool(np.any(np.diag((A @ J) % 2)))


@dataclass
class InvolutionReport:
    n: int
    class_count: int
    expected: int
    classes: list          # (rank of A - I, odd flag, size)

    @property
    def odd_count(self):
        return sum(1 for c in self.classes if c[1])


def involution_oddness(n):
    if n not in (1, 2, 3):
        raise GroupError("n must be 1, 2 or 3")
    d = 2 * n
    if n == 1:
        gens = _default_gens(2, 2)
        mats, codes = _closure(gens, 2)
    else:
        t = generate_group("Sp4F2" if n == 2 else "Sp6F2")
        mats, codes = t.mats, t.codes
        gens = t.gens
    M = mats.astype(np.int64)
    I = np.eye(d, dtype=np.int64)
    sq = np.einsum("nij,njk->nik", M, M) % 2
    inv_idx = np.nonzero(np.all(sq == I, axis=(1, 2)))[0]
    inv_codes = codes[inv_idx]
    pos = {int(c): i for i, c in enumerate(inv_codes)}
    parent = list(range(len(inv_idx)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in gens:
        sinv = _inverse_mod(s, 2)
        conj = np.einsum("ij,njk,kl->nil", s, M[inv_idx], sinv) % 2
        cc = _encode(conj, 2)
        for i, c in enumerate(cc):
            a, b = find(i), find(pos[int(c)])
            if a != b:
                parent[a] = b
    groups = {}
    for i in range(len(inv_idx)):
        groups.setdefault(find(i), []).append(i)
    classes = []
    for members in groups.values():
        A = M[inv_idx[members[0]]]
        r = rank_mod((A - I) % 2, 2)
        classes.append((r, is_odd_involution(A), len(members)))
    classes.sort()
    return InvolutionReport(n, len(classes), n + 1 + n // 2, classes)


INVOLUTION_REPRESENTATIVES = (
    ((1, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((1, 0, 0, 1), (0, 1, 1, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    ((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1), (0, 0, 0, 1)),
)


# -- predicates on subgroups of GSp4(F3) --------------------------------------

def matrix_group_predicates(gens):
    """(absolutely irreducible, has regular semisimple, has one with non-square nu)."""
    G = [_arr(g, 3) for g in gens]
    for g in G:
        if similitude(g, 3) is None:
            raise GroupError("generator not in GSp4(F3)")
    mats, _ = _closure(G, 3)
    span = rank_mod(mats.reshape(mats.shape[0], -1), 3)
    cps = _charpolys_batch(mats)
    J = J_form(2, 3)
    nus = (np.einsum("nji,jk,nkl->nil", mats.astype(np.int64), J, mats.astype(np.int64)) % 3)[:, 0, 3]
    rs_in = rs_out = False
    seen = {}
    for cp, nu in zip(map(tuple, cps), nus):
        if cp not in seen:
            seen[cp] = _squarefree_mod(cp, 3)
        if seen[cp]:
            if nu == 1:
                rs_in = True
            else:
                rs_out = True
    return span == 16, rs_in or rs_out, rs_out


def nullspace_mod(A, p):
    """Basis (list of vectors) of the right kernel of A over F_p."""
    A = [[int(x) % p for x in row] for row in np.asarray(A)]
    rows, cols = len(A), len(A[0]) if A else 0
    pivots, r = [], 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][c], p - 2, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * cols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-A[i][fc]) % p
        basis.append(np.array(v, dtype=np.int64))
    return basis
