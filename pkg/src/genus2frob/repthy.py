"""Mod-2 representations of A5: the irreducibles k, U, U^sigma, V over F4,
Brauer characters, adequacy predicates, H^1 and socles.

Everything is done over F2.  An F4-module of dimension d is stored as an
F2-module of dimension 2d together with the matrix of multiplication by w
(w^2 = w + 1); F4-linear maps are the F2-linear maps commuting with w.
"""
import cmath
import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .gf import field_make


class RepError(ValueError):
    pass


F4 = field_make(2, 2)
W = 2       # the class of x in F2[x]/(x^2+x+1)


# -- permutations --------------------------------------------------------------

def compose(a, b):
    """(a b)(i) = a(b(i))."""
    return tuple(a[b[i]] for i in range(len(b)))


def perm_inverse(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def from_cycles(n, *cycles):
    p = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            p[a - 1] = b - 1
    return tuple(p)


def perm_order(a):
    e = tuple(range(len(a)))
    x, n = a, 1
    while x != e:
        x = compose(x, a)
        n += 1
    return n


def closure(gens):
    n = len(gens[0])
    e = tuple(range(n))
    seen = {e}
    todo = [e]
    while todo:
        x = todo.pop()
        for g in gens:
            y = compose(g, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return sorted(seen)


@lru_cache(maxsize=None)
def a5():
    return tuple(closure([from_cycles(5, (1, 2, 3, 4, 5)), from_cycles(5, (1, 2, 3))]))


# -- F2 linear algebra ---------------------------------------------------------

def f2_rref(A):
    A = (np.asarray(A, dtype=np.uint8) & 1).copy()
    rows, cols = A.shape
    piv, r = [], 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            A[[r, p]] = A[[p, r]]
        mask = A[:, c].astype(bool)
        mask[r] = False
        A[mask] ^= A[r]
        piv.append(c)
        r += 1
    return A[:r], piv


def f2_rank(A):
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(f2_rref(A)[1])


def f2_nullspace(A):
    A = np.asarray(A, dtype=np.uint8)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=np.uint8)
    R, piv = f2_rref(A)
    free = [c for c in range(cols) if c not in set(piv)]
    N = np.zeros((len(free), cols), dtype=np.uint8)
    for k, fc in enumerate(free):
        N[k, fc] = 1
        for i, pc in enumerate(piv):
            N[k, pc] = R[i, fc]
    return N


def _matmul_mod2(A, B, chunk=4096):
    """A @ B mod 2 for 0/1 matrices, summed in float32 chunks (exact below 2^24)."""
    A = np.asarray(A)
    B = np.asarray(B)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.float64)
    for s in range(0, A.shape[1], chunk):
        out += A[:, s:s + chunk].astype(np.float32) @ B[s:s + chunk].astype(np.float32)
        out %= 2
    return out.astype(np.uint8)


def f2_nullspace_large(A, seed=0):
    """Kernel of a tall F2 system: kernel of R A for a random R, then every
    kernel vector is checked against A itself, so the answer is exact."""
    A = np.asarray(A, dtype=np.uint8)
    rows, cols = A.shape
    if rows <= 2 * cols:
        return f2_nullspace(A)
    rng = np.random.default_rng(seed)
    for extra in (64, 128, 256):
        R = rng.integers(0, 2, size=(cols + extra, rows), dtype=np.uint8)
        RA = _matmul_mod2(R, A)
        N = f2_nullspace(RA)
        if N.shape[0] == 0 or not np.any(_matmul_mod2(A, N.T)):
            return N
    return f2_nullspace(A)


# -- F4 <-> F2 -----------------------------------------------------------------

def _block(a):
    """2x2 F2 matrix of multiplication by a in the basis (1, w)."""
    a0, a1 = a & 1, (a >> 1) & 1
    return np.array([[a0, a1], [a1, a0 ^ a1]], dtype=np.uint8)


def f4_to_f2(M):
    M = np.asarray(M, dtype=np.int64)
    r, c = M.shape
    out = np.zeros((2 * r, 2 * c), dtype=np.uint8)
    for i in range(r):
        for j in range(c):
            out[2 * i:2 * i + 2, 2 * j:2 * j + 2] = _block(int(M[i, j]))
    return out


def omega_matrix(d):
    return f4_to_f2(np.eye(d, dtype=np.int64) * W)


def f4_matmul(A, B):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[0]):
        for j in range(B.shape[1]):
            s = 0
            for t in range(A.shape[1]):
                s ^= F4.mul(int(A[i, t]), int(B[t, j]))
            out[i, j] = s
    return out


# -- representations -----------------------------------------------------------

@dataclass
class FiniteGroupRep:
    """A representation of a permutation group: F2 matrices for every element
    (after restriction of scalars) and, for F4-modules, the w-matrix."""
    name: str
    field: str
    dim: int
    mats: dict
    omega: np.ndarray = None
    f4_mats: dict = None

    @property
    def n2(self):
        return next(iter(self.mats.values())).shape[0]

    @property
    def group(self):
        return sorted(self.mats)

    def __call__(self, g):
        return self.mats[g]

    def restrict(self, elems, name=None):
        return FiniteGroupRep(name or self.name, self.field, self.dim,
                              {g: self.mats[g] for g in elems}, self.omega,
                              None if self.f4_mats is None else {g: self.f4_mats[g] for g in elems})


def _extend_hom(gens, images, group, mul):
    """Expand generator images to the whole group, checking well-definedness."""
    n = len(gens[0])
    e = tuple(range(n))
    d = images[0].shape[0]
    table = {e: np.eye(d, dtype=images[0].dtype)}
    todo = [e]
    while todo:
        x = todo.pop()
        for g, G in zip(gens, images):
            y = compose(g, x)
            Y = mul(G, table[x])
            if y in table:
                if not np.array_equal(table[y], Y):
                    raise RepError("generator images do not define a homomorphism")
            else:
                table[y] = Y
                todo.append(y)
    if set(table) != set(group):
        raise RepError("generators do not generate the group")
    return table


def _f2mul(A, B):
    return (A.astype(np.int64) @ B.astype(np.int64) % 2).astype(np.uint8)


def trivial_rep(group, field="F2"):
    n2 = 2 if field == "F4" else 1
    mats = {g: np.eye(n2, dtype=np.uint8) for g in group}
    f4 = {g: np.eye(1, dtype=np.int64) for g in group} if field == "F4" else None
    return FiniteGroupRep("k", field, 1, mats, omega_matrix(1) if field == "F4" else None, f4)


def _sl2f4_generators():
    """x of order 2 and y of order 3 in SL2(F4) with xy of order 5."""
    mats = [np.array(m, dtype=np.int64).reshape(2, 2)
            for m in itertools.product(range(4), repeat=4)]
    sl2 = [m for m in mats if F4.sub(F4.mul(int(m[0, 0]), int(m[1, 1])),
                                      F4.mul(int(m[0, 1]), int(m[1, 0]))) == 1]

    def order(m):
        x, n = m, 1
        while not np.array_equal(x, np.eye(2, dtype=np.int64)):
            x = f4_matmul(x, m)
            n += 1
        return n

    inv2 = [m for m in sl2 if order(m) == 2]
    ord3 = [m for m in sl2 if order(m) == 3]
    for a in inv2:
        for b in ord3:
            if order(f4_matmul(a, b)) == 5:
                return a, b
    raise RepError("no (2,3,5) generators in SL2(F4)")


@lru_cache(maxsize=None)
def build_a5_reps():
    """k, U, U^sigma, V for A5 acting on {1,...,5}; V is also rebuilt as U (x) U^sigma."""
    G = a5()
    x = from_cycles(5, (1, 2), (3, 4))
    y = from_cycles(5, (1, 3, 5))
    if perm_order(x) != 2 or perm_order(y) != 3 or perm_order(compose(x, y)) != 5:
        raise RepError("bad A5 generators")
    a, b = _sl2f4_generators()
    U4 = _extend_hom([x, y], [a, b], G, f4_matmul)
    frob = np.vectorize(lambda t: F4.mul(int(t), int(t)))
    Us4 = {g: frob(m).astype(np.int64) for g, m in U4.items()}
    U = FiniteGroupRep("U", "F4", 2, {g: f4_to_f2(m) for g, m in U4.items()}, omega_matrix(2), U4)
    Us = FiniteGroupRep("U_sigma", "F4", 2, {g: f4_to_f2(m) for g, m in Us4.items()},
                        omega_matrix(2), Us4)
    V = _v_from_dictionary(G)
    k = trivial_rep(G, "F2")
    UUs = tensor_f4(U, Us, "U(x)U_sigma")
    return {"k": k, "U": U, "U_sigma": Us, "V": V, "UxUs": UUs}


def _v_from_dictionary(G):
    from .sympgroups import s6_gsp4_dictionary
    dic = s6_gsp4_dictionary()
    mats = {g: dic.images[g + (5,)].astype(np.uint8) for g in G}
    return FiniteGroupRep("V", "F2", 4, mats)


def tensor_f4(A, B, name):
    if A.f4_mats is None or B.f4_mats is None:
        raise RepError("tensor_f4 needs F4 matrices")
    mats4 = {g: np.kron(A.f4_mats[g], B.f4_mats[g]) for g in A.mats}
    # kron over F4: entrywise products
    for g in mats4:
        a, b = A.f4_mats[g], B.f4_mats[g]
        m = np.zeros((a.shape[0] * b.shape[0],) * 2, dtype=np.int64)
        for i, j in itertools.product(range(a.shape[0]), repeat=2):
            for s, t in itertools.product(range(b.shape[0]), repeat=2):
                m[i * b.shape[0] + s, j * b.shape[0] + t] = F4.mul(int(a[i, j]), int(b[s, t]))
        mats4[g] = m
    d = A.dim * B.dim
    return FiniteGroupRep(name, "F4", d, {g: f4_to_f2(m) for g, m in mats4.items()},
                          omega_matrix(d), mats4)


def tensor_f2(A, B, name):
    if A.field != "F2" or B.field != "F2":
        raise RepError("tensor_f2 needs F2 modules")
    return FiniteGroupRep(name, "F2", A.dim * B.dim,
                          {g: np.kron(A.mats[g], B.mats[g]) % 2 for g in A.mats})


def extend_to_f4(A, name=None):
    """M (x) F4 for an F2-module M."""
    if A.field == "F4":
        return A
    f4 = {g: m.astype(np.int64) for g, m in A.mats.items()}
    return FiniteGroupRep(name or A.name, "F4", A.dim,
                          {g: f4_to_f2(m) for g, m in f4.items()}, omega_matrix(A.dim), f4)


def direct_sum(A, B, name=None):
    if A.field != B.field:
        raise RepError("direct sum of modules over different fields")

    def bd(x, y):
        out = np.zeros((x.shape[0] + y.shape[0],) * 2, dtype=np.uint8)
        out[:x.shape[0], :x.shape[0]] = x
        out[x.shape[0]:, x.shape[0]:] = y
        return out

    mats = {g: bd(A.mats[g], B.mats[g]) for g in A.mats}
    om = None if A.omega is None else bd(A.omega, B.omega)
    return FiniteGroupRep(name or "%s+%s" % (A.name, B.name), A.field, A.dim + B.dim, mats, om)


def adjoint(A, name=None):
    """End(M) with g.X = g X g^-1 (over F2)."""
    if A.field != "F2":
        raise RepError("adjoint is built for F2 modules")
    d = A.n2
    mats = {}
    for g, m in A.mats.items():
        minv = A.mats[perm_inverse(g)]
        # vec(g X g^-1) = (g^-T kron g) vec(X) with row-major vec: kron(g, g^-T)
        mats[g] = np.kron(m, minv.T) % 2
    return FiniteGroupRep(name or "ad " + A.name, "F2", d * d, mats)


def quotient(A, sub_basis, name):
    """Quotient of an F2-module by the submodule spanned by the rows of sub_basis."""
    S = np.asarray(sub_basis, dtype=np.uint8)
    n = A.n2
    R, piv = f2_rref(S)
    comp = [c for c in range(n) if c not in set(piv)]
    # coordinates of a vector modulo span(S): reduce, then read off comp columns
    def reduce(v):
        v = v.copy()
        for row, c in zip(R, piv):
            if v[c]:
                v ^= row
        return v[comp]

    mats = {}
    for g, m in A.mats.items():
        cols = []
        for c in comp:
            e = np.zeros(n, dtype=np.uint8)
            e[c] = 1
            cols.append(reduce((m.astype(np.int64) @ e % 2).astype(np.uint8)))
        mats[g] = np.array(cols, dtype=np.uint8).T
    return FiniteGroupRep(name, "F2", len(comp), mats)


def sym3_f4(A, name="Sym3U"):
    """Third symmetric power of a 2-dimensional F4-module (degree-3 forms)."""
    if A.f4_mats is None or A.dim != 2:
        raise RepError("sym3 needs a 2-dimensional F4 module")
    mono = [(3 - i, i) for i in range(4)]     # e1^a e2^b
    mats4 = {}
    for g, m in A.f4_mats.items():
        # image of e_j is sum_i m[i, j] e_i
        out = np.zeros((4, 4), dtype=np.int64)
        for col, (a, b) in enumerate(mono):
            poly = {(0, 0): 1}
            for j in [0] * a + [1] * b:
                new = {}
                for (s, t), c in poly.items():
                    for i in (0, 1):
                        coef = F4.mul(c, int(m[i, j]))
                        if not coef:
                            continue
                        key = (s + (i == 0), t + (i == 1))
                        new[key] = new.get(key, 0) ^ coef
                poly = new
            for (s, t), c in poly.items():
                out[mono.index((s, t)), col] ^= c
        mats4[g] = out
    return FiniteGroupRep(name, "F4", 4, {g: f4_to_f2(m) for g, m in mats4.items()},
                          omega_matrix(4), mats4)


# -- Hom spaces ------------------------------------------------------------------

def _gens_of(rep):
    elems = rep.group
    if len(elems) == 60:
        return [from_cycles(5, (1, 2, 3, 4, 5)), from_cycles(5, (1, 2, 3))]
    return elems


def hom_space(A, B):
    """F2-basis of Hom_G(A, B) (F4-linear when both are F4-modules), as
    matrices of shape (n2(B), n2(A))."""
    if (A.omega is None) != (B.omega is None):
        raise RepError("Hom between modules over different fields")
    na, nb = A.n2, B.n2
    eqs = []
    ops = [(A.mats[g], B.mats[g]) for g in _gens_of(A)]
    if A.omega is not None:
        ops.append((A.omega, B.omega))
    # X a - b X = 0 with X row-major: vec(X a) = kron(I, a^T) vec X, vec(b X) = kron(b, I) vec X
    Ia, Ib = np.eye(na, dtype=np.uint8), np.eye(nb, dtype=np.uint8)
    for a, b in ops:
        eqs.append((np.kron(Ib, a.T) + np.kron(b, Ia)) % 2)
    N = f2_nullspace(np.vstack(eqs))
    return [row.reshape(nb, na) for row in N]


def hom_dim(A, B):
    d = len(hom_space(A, B))
    return d // 2 if A.omega is not None else d


# -- Brauer characters ---------------------------------------------------------

BRAUER_CLASSES = {
    "(12345)": from_cycles(5, (1, 2, 3, 4, 5)),
    "(13524)": from_cycles(5, (1, 3, 5, 2, 4)),
    "(123)": from_cycles(5, (1, 2, 3)),
}

_Z = cmath.exp(2j * cmath.pi / 5)
BRAUER_TABLE = {
    "k": (1, 1, 1),
    "U": (_Z + _Z ** -1, _Z ** 2 + _Z ** -2, -1),
    "U_sigma": (_Z ** 2 + _Z ** -2, _Z + _Z ** -1, -1),
    "V": (-1, -1, 1),
}

F16 = field_make(2, 4)


def _charpoly_f4(M):
    """Characteristic polynomial over F4 (low -> high) via Leverrier-free
    expansion of det(xI - M) over F4[x] for d <= 4."""
    M = np.asarray(M, dtype=np.int64)
    d = M.shape[0]
    from .gf import p_add, p_mul, p_trim

    def entry(i, j):
        c = int(M[i, j])
        return [c, 1] if i == j else [c]

    total = []
    for perm in itertools.permutations(range(d)):
        term = [1]
        for i, j in enumerate(perm):
            term = p_mul(F4, term, entry(i, j))
        total = p_add(F4, total, term)     # signs vanish in characteristic 2
    return p_trim(total)


def _eigen_lifts(M, t):
    """Sum of lifted eigenvalues of an F4 matrix.  With gamma the fixed
    generator of F16^*, gamma^j is sent to exp(2 pi i t j / 15)."""
    from .gf import p_divmod, p_eval
    emb = F16.embedding(F4)
    poly = [emb[c] for c in _charpoly_f4(M)]
    roots = []
    for x in range(1, 16):
        while len(poly) > 1 and p_eval(F16, poly, x) == 0:
            roots.append(x)
            poly = p_divmod(F16, poly, [x, 1])[0]
    if len(roots) != M.shape[0]:
        raise RepError("eigenvalues not in F16")
    return sum(cmath.exp(2j * cmath.pi * t * F16.log(x) / 15) for x in roots)


def brauer_values(rep, t=1):
    vals = []
    for cls, g in BRAUER_CLASSES.items():
        m = rep.f4_mats[g] if rep.f4_mats is not None else rep.mats[g]
        vals.append(_eigen_lifts(m, t))
    return tuple(vals)


def brauer_check(rep, label=None, tol=1e-9):
    """True iff exactly the expected embeddings reproduce the table row."""
    label = label or rep.name
    row = BRAUER_TABLE[label]
    hits = [t for t in (1, 2) if all(abs(a - b) < tol for a, b in zip(brauer_values(rep, t), row))]
    return bool(hits), hits


def brauer_report():
    reps = build_a5_reps()
    out = {}
    for lab in ("k", "U", "U_sigma", "V"):
        ok, hits = brauer_check(reps[lab], lab)
        out[lab] = {"match": ok, "embeddings": hits,
                    "values": [complex(round(v.real, 12), round(v.imag, 12))
                               for v in brauer_values(reps[lab], hits[0] if hits else 1)]}
    # one embedding must serve every row; U and U_sigma pin it down uniquely
    common = set.intersection(*(set(out[lab]["embeddings"]) for lab in ("k", "U", "U_sigma", "V")))
    out["consistent"] = len(common) == 1 and len(out["U"]["embeddings"]) == 1
    return out


# -- adequacy --------------------------------------------------------------------

def weakly_adequate(rep, elems=None):
    """Images of odd-order elements span End(V) (over the module's field)."""
    elems = elems or rep.group
    odd = [g for g in elems if perm_order(g) % 2]
    mats = [rep.mats[g] for g in odd]
    if rep.omega is not None:
        mats += [_f2mul(rep.omega, m) for m in mats]
        n2 = rep.n2
        span = f2_rank(np.array([m.ravel() for m in mats]))
        # F4-span dimension = F2 dimension / 2; End over F4 has F4-dim d^2
        return span // 2 == rep.dim ** 2
    return f2_rank(np.array([m.ravel() for m in mats])) == rep.dim ** 2


@dataclass
class CohomologySpace:
    z1: int
    b1: int

    @property
    def h1(self):
        return self.z1 - self.b1


def fixed_dim(rep):
    n = rep.n2
    I = np.eye(n, dtype=np.uint8)
    A = np.vstack([(rep.mats[g] ^ I) for g in _gens_of(rep)])
    d = n - f2_rank(A)
    return d // 2 if rep.omega is not None else d


def h1(rep, seed=0):
    """Cocycles phi(gh) = phi(g) + g phi(h) over all pairs (g, h), modulo
    coboundaries.  Dimensions are over the module's field."""
    G = rep.group
    idx = {g: i for i, g in enumerate(G)}
    n = rep.n2
    N = len(G)
    if N * n > 10 ** 4:
        raise RepError("system too large")
    rows = []
    I = np.eye(n, dtype=np.uint8)
    for g in G:
        for h in G:
            blk = np.zeros((n, N * n), dtype=np.uint8)
            gh = compose(g, h)
            blk[:, idx[gh] * n:(idx[gh] + 1) * n] ^= I
            blk[:, idx[g] * n:(idx[g] + 1) * n] ^= I
            blk[:, idx[h] * n:(idx[h] + 1) * n] ^= rep.mats[g]
            rows.append(blk)
    A = np.vstack(rows)
    Z = f2_nullspace_large(A, seed)
    z1 = Z.shape[0]
    fixed = n - f2_rank(np.vstack([(rep.mats[g] ^ I) for g in G]))
    b1 = n - fixed
    if rep.omega is not None:
        return CohomologySpace(z1 // 2, b1 // 2)
    return CohomologySpace(z1, b1)


def nearly_adequate(rep, elems=None):
    r = rep if elems is None else rep.restrict(elems)
    if not weakly_adequate(r):
        return False
    if h1(trivial_rep(r.group)).h1 != 0:
        return False
    base = r if r.field == "F2" else None
    if base is None:
        raise RepError("nearly_adequate is implemented for F2 modules")
    return h1(adjoint(base)).h1 == 0


# -- socle -----------------------------------------------------------------------

def simple_modules_f4():
    reps = build_a5_reps()
    return {"k": trivial_rep(a5(), "F4"), "U": reps["U"], "U_sigma": reps["U_sigma"],
            "V": extend_to_f4(reps["V"])}


def socle(rep):
    """Simple constituents of the socle with multiplicity (A5, over F4)."""
    M = extend_to_f4(rep)
    out = []
    for lab, S in simple_modules_f4().items():
        out += [lab] * hom_dim(S, M)
    return sorted(out)


# -- Sym^3 and projectivity ------------------------------------------------------

KLEIN = (from_cycles(5, (1, 2), (3, 4)), from_cycles(5, (1, 3), (2, 4)), from_cycles(5, (1, 4), (2, 3)))


def is_free_over_klein(rep):
    """An element v with v, av, bv, cv independent (rank-1 freeness over F2[V4])."""
    if rep.field != "F2" or rep.dim != 4:
        return False
    mats = [np.eye(4, dtype=np.uint8)] + [rep.mats[g] for g in KLEIN]
    for v in itertools.product(range(2), repeat=4):
        v = np.array(v, dtype=np.int64)
        if not v.any():
            continue
        orbit = np.array([(m.astype(np.int64) @ v) % 2 for m in mats])
        if f2_rank(orbit) == 4:
            return True
    return False


def _invertible_in(space, n2):
    """Some F2 combination of the matrices in space that is invertible (small spaces)."""
    for coeffs in itertools.product(range(2), repeat=len(space)):
        if not any(coeffs):
            continue
        X = sum(c * m for c, m in zip(coeffs, space)) % 2
        if f2_rank(X) == n2:
            return X
    return None


def sym3_and_projectivity_checks():
    reps = build_a5_reps()
    S3 = sym3_f4(reps["U"])
    V4 = extend_to_f4(reps["V"])
    homs = hom_space(S3, V4)
    iso = _invertible_in(homs, V4.n2) is not None
    uus = hom_space(reps["UxUs"], V4)
    k4 = FiniteGroupRep("k4", "F2", 4, {g: np.eye(4, dtype=np.uint8) for g in a5()})
    return {
        "sym3_hom_dim": len(homs) // 2,
        "sym3_iso_V": len(homs) // 2 == 1 and iso,
        "UxUs_hom_dim": len(uus) // 2,
        "UxUs_iso_V": len(uus) // 2 == 1 and _invertible_in(uus, V4.n2) is not None,
        "V_free_over_klein": is_free_over_klein(reps["V"]),
        "k4_free_over_klein": is_free_over_klein(k4),
    }


def a5_report():
    """All the A5 facts checked by the suite, in one dictionary."""
    reps = build_a5_reps()
    V = reps["V"]
    adV = adjoint(V)
    scal = np.eye(4, dtype=np.uint8).reshape(1, 16)
    ad0 = quotient(adV, scal, "ad/k")
    c3 = [g for g in a5() if g in closure([from_cycles(5, (1, 2, 3))])]
    five = V.mats[from_cycles(5, (1, 2, 3, 4, 5))]
    from .sympgroups import charpoly as mcp
    cp5 = mcp(five, 2)
    return {
        "dims": tuple(reps[x].dim for x in ("k", "U", "U_sigma", "V")),
        "brauer": brauer_report(),
        "order5_charpoly_V": cp5,
        "weakly_adequate_V": weakly_adequate(V),
        "weakly_adequate_k": weakly_adequate(reps["k"]),
        "weakly_adequate_C3_V": weakly_adequate(V.restrict(c3)),
        "h1_k": h1(reps["k"]).h1,
        "h1_adV": h1(adV).h1,
        "h1_ad0": h1(ad0).h1,
        "socle_VxV": socle(tensor_f2(V, V, "VxV")),
        "sym3": sym3_and_projectivity_checks(),
    }
