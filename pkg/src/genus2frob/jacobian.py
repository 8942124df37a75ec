"""Jacobians of genus-2 curves over finite fields.

Elements are degree-0 classes E - D_inf with E effective of degree 2, written
(u, v, n): E = div(u, v) + n*inf_plus + (2 - deg u - n)*inf_minus.  On an
imaginary model (one point at infinity) n is just 2 - deg u.  The identity is
(1, 0, 1) on a real model and (1, 0, 2) on an imaginary one.
"""
import random
from dataclasses import dataclass, field

from .curves import CurveError, HyperellipticModel, is_smooth_genus2
from .gf import (Poly, field_make, p_add, p_deriv, p_divmod, p_eval, p_gcd,
                 p_mod, p_monic, p_mul, p_neg, p_scale, p_sub, p_trim, p_xgcd)


class JacobianError(ValueError):
    pass


class SylowBudgetError(JacobianError):
    def __init__(self, msg, partial):
        super().__init__(msg)
        self.partial = partial


LAURENT_TERMS = 8


class Jacobian:
    """Group law on Jac(C)(K) for a smooth genus-2 model C over F_q, K ⊇ F_q."""

    def __init__(self, model, K=None):
        if not is_smooth_genus2(model):
            raise CurveError("Jacobian needs a smooth genus-2 model")
        base = model.base
        K = K or base
        if K.p != base.p or K.k % base.k:
            raise JacobianError("%r does not contain %r" % (K, base))
        self.model, self.K, self.base = model, K, base
        emb = K.embedding(base)
        f = [emb[c] for c in model.f.coeffs]
        h = [emb[c] for c in model.h.coeffs]
        f, h = self._normalize(K, f, h)
        self.f, self.h = f, h
        if K.p == 2:
            self.real = len(h) == 4
        else:
            self.real = len(f) == 7
        self.winf = None
        if self.real:
            roots = self._roots_at_infinity()
            if roots is None:
                raise JacobianError("points at infinity are not rational over %r" % K)
            self.winf = (self._laurent(roots[0]), self._laurent(roots[1]))
            # Frobenius of the base swaps inf_plus and inf_minus iff w0 is not in F_q
            w0 = roots[0]
            self.frob_swaps = K.pow(w0, base.q) != w0
        else:
            self.frob_swaps = False
        self.identity = ((1,), (), 1 if self.real else 2)

    # -- model normalization ----------------------------------------------
    @staticmethod
    def _normalize(K, f, h):
        f, h = list(f), list(h)
        if K.p != 2:
            # complete the square: y -> y - h/2
            if h:
                inv4 = K.inv(K.from_int(4))
                f = p_add(K, f, p_scale(K, p_mul(K, h, h), inv4))
                h = []
            return p_trim(f), h
        h = p_trim(h)
        if len(h) < 4 and len(f) == 7 and f[6]:
            # y -> y + c x^3 with c^2 = f6 pushes deg f down to 5
            c = K.sqrt(f[6])
            cx3h = [0, 0, 0] + p_scale(K, h, c)
            f = p_add(K, f, [0] * 6 + [f[6]])
            f = p_add(K, f, cx3h)
        return p_trim(f), h

    def _roots_at_infinity(self):
        K = self.K
        h3 = self.h[3] if len(self.h) > 3 else 0
        f6 = self.f[6] if len(self.f) > 6 else 0
        if K.p == 2:
            z = K.solve_artin_schreier(K.div(f6, K.mul(h3, h3)))
            if z is None:
                return None
            w = K.mul(z, h3)
            return (w, K.add(w, h3))
        r = K.sqrt(f6)
        if r is None:
            return None
        return (r, K.neg(r))

    def _laurent(self, w0):
        """Coefficients w_0, w_1, ... of y = sum w_i x^(3-i) at the point with
        leading coefficient w0."""
        K = self.K
        H = [self.h[3 - i] if 0 <= 3 - i < len(self.h) else 0 for i in range(LAURENT_TERMS)]
        G = [self.f[6 - i] if 0 <= 6 - i < len(self.f) else 0 for i in range(LAURENT_TERMS)]
        w = [w0]
        den = K.add(K.add(w0, w0), H[0])
        dinv = K.inv(den)
        for n in range(1, LAURENT_TERMS):
            s = G[n]
            for i in range(1, n):
                s = K.sub(s, K.mul(w[i], w[n - i]))
            for i in range(1, n + 1):
                s = K.sub(s, K.mul(H[i], w[n - i]))
            w.append(K.mul(s, dinv))
        return w

    # -- helpers ------------------------------------------------------------
    def _match(self, vp, side):
        """Number of leading Laurent coefficients of y at inf_side matched by vp."""
        w = self.winf[side]
        m = 0
        for i in range(LAURENT_TERMS):
            c = vp[3 - i] if 0 <= 3 - i < len(vp) else 0
            if c != w[i]:
                break
            m += 1
        return m

    def n_minus(self, D):
        u, v, n = D
        return 2 - (len(u) - 1) - n

    # -- group law ------------------------------------------------------------
    def neg(self, D):
        K = self.K
        u, v, n = D
        if len(u) == 1:
            nv = ()
        else:
            nv = tuple(p_mod(K, p_neg(K, p_add(K, list(v), self.h)), list(u)))
        if self.real:
            return (u, nv, 2 - (len(u) - 1) - n)
        return (u, nv, n)

    def add(self, D1, D2):
        K, f, h = self.K, self.f, self.h
        u1, v1, n1 = D1
        u2, v2, n2 = D2
        u1, v1, u2, v2 = list(u1), list(v1), list(u2), list(v2)
        # composition
        d1, e1, e2 = p_xgcd(K, u1, u2)
        if len(d1) == 1:
            d = [1]
            s1, s2, s3 = e1, e2, []
        else:
            d, c1, c2 = p_xgcd(K, d1, p_add(K, p_add(K, v1, v2), h))
            s1, s2, s3 = p_mul(K, c1, e1), p_mul(K, c1, e2), c2
        U = p_mul(K, u1, u2)
        if len(d) > 1:
            U = p_divmod(K, U, p_mul(K, d, d))[0]
        V = p_add(K, p_mul(K, p_mul(K, s1, u1), v2), p_mul(K, p_mul(K, s2, u2), v1))
        if s3:
            V = p_add(K, V, p_mul(K, s3, p_add(K, p_mul(K, v1, v2), f)))
        if len(d) > 1:
            V = p_divmod(K, V, d)[0]
        V = p_mod(K, V, U)
        dd = len(d) - 1
        if self.real:
            a = n1 + n2
            b = self.n_minus(D1) + self.n_minus(D2)
            c = min(a, b)
            a, b = a - c, b - c
        else:
            a = n1 + n2
            c = a // 2
            a -= 2 * c
            b = 0
        k = dd + c
        if k >= 2:
            return self.identity
        if k == 1:
            return (tuple(U), tuple(V), a if self.real else 2 - (len(U) - 1))
        return self._reduce(U, V, a, b)

    def _reduce(self, U, V, a, b):
        K, f, h = self.K, self.f, self.h
        if self.real:
            Vp = list(V)
            if a or b:
                side = 0 if a else 1
                cnt = a or b
                w = self.winf[side]
                du = len(U) - 1
                Vp = Vp + [0] * (4 - len(Vp))
                # choose t with deg t < cnt so V + U t matches the top cnt coefficients
                t = [0] * cnt
                for j in range(3, 3 - cnt, -1):
                    cur = Vp[j]
                    for i in range(du):
                        if 0 <= j - i < cnt:
                            cur = K.add(cur, K.mul(U[i], t[j - i]))
                    t[j - du] = K.sub(w[3 - j], cur)
                Vp = p_add(K, list(V), p_mul(K, U, t))
            Vp = p_trim(Vp)
            N = p_sub(K, p_sub(K, f, p_mul(K, h, Vp)), p_mul(K, Vp, Vp))
            Up, r = p_divmod(K, N, U)
            if r:
                raise JacobianError("reduction failed: U does not divide N")
            Up = p_monic(K, Up)
            mp, mm = self._match(Vp, 0), self._match(Vp, 1)
            plus = mm - b
            if mp < a or mm < b or len(Up) > 3:
                raise JacobianError("reduction failed: bad infinity bookkeeping")
        else:
            Vp = list(V)
            N = p_sub(K, p_sub(K, f, p_mul(K, h, Vp)), p_mul(K, Vp, Vp))
            Up, r = p_divmod(K, N, U)
            if r:
                raise JacobianError("reduction failed: U does not divide N")
            Up = p_monic(K, Up)
            if len(Up) > 3:
                return self._reduce(Up, p_mod(K, p_neg(K, p_add(K, Vp, h)), Up), 0, 0)
            plus = 2 - (len(Up) - 1)
        Vn = p_mod(K, p_neg(K, p_add(K, Vp, h)), Up) if len(Up) > 1 else []
        return (tuple(Up), tuple(Vn), plus)

    def double(self, D):
        return self.add(D, D)

    def mul(self, n, D):
        if n < 0:
            return self.mul(-n, self.neg(D))
        R = self.identity
        while n:
            if n & 1:
                R = self.add(R, D)
            n >>= 1
            if n:
                D = self.add(D, D)
        return R

    def is_valid(self, D):
        K = self.K
        u, v, n = D
        u, v = list(u), list(v)
        if not u or u[-1] != 1 or len(u) > 3 or len(v) >= len(u):
            return False
        if not 0 <= n <= 2 - (len(u) - 1):
            return False
        if not self.real and n != 2 - (len(u) - 1):
            return False
        if len(u) == 1:
            return not v
        lhs = p_sub(K, p_add(K, p_mul(K, v, v), p_mul(K, self.h, v)), self.f)
        return not p_mod(K, lhs, u)

    # -- Frobenius ----------------------------------------------------------
    def frobenius(self, D, power=1):
        """Action of x -> x^(q^power), q = size of the model's base field."""
        K = self.K
        u, v, n = D
        e = self.base.q ** power
        fu = tuple(K.pow(c, e) for c in u)
        fv = tuple(K.pow(c, e) for c in v)
        if self.real and self.frob_swaps and power % 2:
            n = 2 - (len(u) - 1) - n
        return (fu, fv, n)

    # -- points and sampling --------------------------------------------------
    @staticmethod
    def _solve_y(L, f, h, x):
        hx = p_eval(L, h, x)
        fx = p_eval(L, f, x)
        if L.p == 2:
            if hx == 0:
                return L.sqrt(fx)
            z = L.solve_artin_schreier(L.div(fx, L.mul(hx, hx)))
            return None if z is None else L.mul(z, hx)
        # odd characteristic models are normalized to h = 0
        return L.sqrt(fx)

    def point(self, x):
        """A point (x, y) over K, or None."""
        y = self._solve_y(self.K, self.f, self.h, x)
        return None if y is None else (x, y)

    def from_point(self, P):
        """P - inf_minus (real) or P - inf (imaginary), as (u, v, n)."""
        x, y = P
        return ((self.K.neg(x), 1), (y,) if y else (), 1)

    def _quadratic(self):
        if not hasattr(self, "_k2"):
            K = self.K
            ok = 2 * K.k <= (24 if K.p == 2 else 6)
            if ok:
                K2 = field_make(K.p, 2 * K.k)
                emb = K2.embedding(K)
                back = {b: a for a, b in enumerate(emb)}
                self._k2 = (K2, back, [emb[c] for c in self.f], [emb[c] for c in self.h])
            else:
                self._k2 = None
        return self._k2

    def random_prime_divisor(self, rng, tries=64):
        """A random K-rational effective divisor supported on one point and its
        conjugates: P + inf_plus, or P + sigma(P) with P over the quadratic
        extension.  Returned as a Jacobian element."""
        K = self.K
        quad = self._quadratic() if rng.random() < 0.5 else None
        if quad is not None:
            K2, back, f2, h2 = quad
            for _ in range(tries):
                x0 = rng.randrange(K2.q)
                if x0 in back:
                    continue
                y0 = self._solve_y(K2, f2, h2, x0)
                if y0 is None:
                    continue
                if rng.random() < 0.5:
                    y0 = K2.sub(K2.neg(y0), p_eval(K2, h2, x0))
                x1, y1 = K2.pow(x0, K.q), K2.pow(y0, K.q)
                slope = K2.div(K2.sub(y1, y0), K2.sub(x1, x0))
                u = (back[K2.mul(x0, x1)], back[K2.neg(K2.add(x0, x1))], 1)
                v = p_trim([back[K2.sub(y0, K2.mul(slope, x0))], back[slope]])
                return (u, tuple(v), 0)
        for _ in range(tries):
            x0 = rng.randrange(K.q)
            y0 = self._solve_y(K, self.f, self.h, x0)
            if y0 is None:
                continue
            if rng.random() < 0.5:
                y0 = K.sub(K.neg(y0), p_eval(K, self.h, x0))
            return self.from_point((x0, y0))
        return self.identity

    def random_element(self, rng, terms=3):
        D = self.identity
        for _ in range(terms):
            D = self.add(D, self.random_prime_divisor(rng))
        if self.real and rng.random() < 0.5:
            # inf_plus - inf_minus
            D = self.add(D, ((1,), (), 2))
        return D


# -- public wrappers -----------------------------------------------------------

class MumfordDivisor:
    """A Jacobian element with a reference to its Jacobian."""
    __slots__ = ("jac", "key")

    def __init__(self, jac, key):
        self.jac = jac
        self.key = key

    @property
    def u(self):
        return Poly(self.key[0], self.jac.K)

    @property
    def v(self):
        return Poly(self.key[1], self.jac.K)

    @property
    def n_plus(self):
        return self.key[2]

    def is_identity(self):
        return self.key == self.jac.identity

    def __add__(self, other):
        return jac_add(self, other)

    def __neg__(self):
        return MumfordDivisor(self.jac, self.jac.neg(self.key))

    def __sub__(self, other):
        return jac_add(self, -other)

    def __rmul__(self, n):
        return MumfordDivisor(self.jac, self.jac.mul(n, self.key))

    def __eq__(self, other):
        return isinstance(other, MumfordDivisor) and self.jac is other.jac and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "MumfordDivisor(u=%r, v=%r, n=%d)" % (self.u, self.v, self.key[2])


def jac_add(D1, D2):
    if D1.jac is not D2.jac:
        raise JacobianError("divisors on different Jacobians")
    return MumfordDivisor(D1.jac, D1.jac.add(D1.key, D2.key))


def _int_matmul(A, B):
    n = len(A)
    return [[sum(A[i][t] * B[t][j] for t in range(n)) for j in range(n)] for i in range(n)]


def _int_det(M):
    # Bareiss fraction-free elimination
    M = [list(r) for r in M]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def companion(Q):
    c = list(Q.coeffs)
    n = len(c) - 1
    C = [[0] * n for _ in range(n)]
    for i in range(1, n):
        C[i][i - 1] = 1
    for i in range(n):
        C[i][n - 1] = -c[i]
    return C


def jac_order_from_charpoly(Q, k=1):
    """#Jac(F_{q^k}) = det(I - C^k) for the companion matrix C of Q."""
    if Q.degree != 4 or Q.lc != 1:
        raise JacobianError("expected a monic quartic")
    C = companion(Q)
    P = [[int(i == j) for j in range(4)] for i in range(4)]
    for _ in range(k):
        P = _int_matmul(P, C)
    M = [[int(i == j) - P[i][j] for j in range(4)] for i in range(4)]
    return _int_det(M)


def _v3(n):
    v = 0
    while n % 3 == 0:
        n //= 3
        v += 1
    return v


# -- 3-primary structure ------------------------------------------------------

def _model_charpoly(m):
    from .curves import frobenius_charpoly
    return frobenius_charpoly(m).charpoly


def _span_add(jac, span, t):
    """Extend an F3-span (dict element -> coordinate tuple) by t."""
    if t in span:
        return False
    old = list(span.items())
    new = {}
    tt = jac.add(t, t)
    for c, mult in ((1, t), (2, tt)):
        for e, co in old:
            new[jac.add(e, mult)] = co + (c,)
    for e, co in old:
        new[e] = co + (0,)
    span.clear()
    span.update(new)
    return True


def _sylow_jacobian(m, k):
    """Jacobian over F_{q^k} and a map sending samples into Jac(F_{q^k})."""
    K = field_make(m.base.p, m.base.k * k)
    try:
        return Jacobian(m, K), None
    except JacobianError:
        pass
    lim = 24 if K.p == 2 else 6
    if 2 * K.k > lim:
        raise JacobianError("points at infinity need a field beyond the supported range")
    K2 = field_make(K.p, 2 * K.k)
    jac = Jacobian(m, K2)
    return jac, k


def _samples(jac, tr_power, rng):
    D = jac.random_element(rng)
    if tr_power is not None:
        D = jac.add(D, jac.frobenius(D, tr_power))
    return D


def sylow3_structure(m, k=1, seed=0, budget=400):
    """Invariants (3^e1, 3^e2, ...) with e1 >= e2 >= ... of Jac(F_{q^k})[3^oo].

    Random elements are pushed into the Sylow subgroup with the cofactor; an
    element of order 3^j contributes 3^(j-1) x to the spans S_r of
    3^r G intersected with G[3] for every r < j.  Sum of dim S_r equals the
    3-adic valuation of the group order once all spans are full."""
    Q = _model_charpoly(m)
    N = jac_order_from_charpoly(Q, k)
    v = _v3(N)
    if v == 0:
        return ()
    cof = N // 3 ** v
    jac, trp = _sylow_jacobian(m, k)
    rng = random.Random(seed)
    spans = []

    def partial():
        dims = [len(s).bit_length() and _log3(len(s)) for s in spans]
        return _invariants(dims)

    for _ in range(budget):
        x = jac.mul(cof, _samples(jac, trp, rng))
        if x == jac.identity:
            continue
        j, prev = 0, x
        while x != jac.identity:
            prev = x
            x = jac.mul(3, x)
            j += 1
        while len(spans) < j:
            spans.append({jac.identity: ()})
        for r in range(j):
            _span_add(jac, spans[r], prev)
        if sum(_log3(len(s)) for s in spans) == v:
            return tuple(3 ** e for e in partial())
    raise SylowBudgetError("sampling budget exhausted", tuple(3 ** e for e in partial()))


def _log3(n):
    e = 0
    while n > 1:
        n //= 3
        e += 1
    return e


def _invariants(dims):
    if not dims:
        return ()
    top = max(dims)
    return tuple(sum(1 for d in dims if d >= i) for i in range(1, top + 1))


# -- the 3-torsion module ---------------------------------------------------

@dataclass
class TorsionModule:
    """Jac[3] over F_{q^k} with Frobenius matrix g (columns = images of the
    basis) and the invariant alternating form M, g^T M g = nu M."""
    model: HyperellipticModel
    k: int
    basis: list
    g: tuple
    M: tuple
    nu: int
    form_space_dim: int
    pairing: bool
    points: int = 81
    flags: list = field(default_factory=list)


def _mat_order_mod3(C):
    import numpy as np
    C = np.array(C, dtype=np.int64) % 3
    I = np.eye(C.shape[0], dtype=np.int64)
    X = C.copy()
    for n in range(1, 200):
        if np.array_equal(X, I):
            return n
        X = (X @ C) % 3
    raise JacobianError("companion matrix has no small order")


def invariant_forms(g, nu, p=3):
    """Basis of {M alternating : g^T M g = nu M} over F_p."""
    import numpy as np
    from itertools import combinations
    from .sympgroups import nullspace_mod
    g = np.array(g, dtype=np.int64) % p
    d = g.shape[0]
    alts = []
    for i, j in combinations(range(d), 2):
        A = np.zeros((d, d), dtype=np.int64)
        A[i, j], A[j, i] = 1, p - 1
        alts.append(A)
    cols = [((g.T @ A @ g - nu * A) % p).ravel() for A in alts]
    ns = nullspace_mod(np.array(cols).T, p)
    return [sum(c * A for c, A in zip(vec, alts)) % p for vec in ns]


def three_torsion_module(m, seed=0, pairing=True):
    """Jac(C)[3] for a genus-2 model over F_2 (or F_3 for the group part)."""
    import numpy as np
    from .sympgroups import charpoly as mat_charpoly, rank_mod
    if m.base is None or m.base.p == 3:
        raise JacobianError("three_torsion_module needs a model over F_2")
    Q = _model_charpoly(m)
    Q3 = tuple(c % 3 for c in Q.coeffs)
    k = _mat_order_mod3(companion(Q))
    N = jac_order_from_charpoly(Q, k)
    if _v3(N) < 4:
        raise JacobianError("Jac[3] is not rational over the expected field")
    cof = N // 3 ** _v3(N)
    jac, trp = _sylow_jacobian(m, k)
    rng = random.Random(seed)
    span = {jac.identity: ()}
    basis = []
    for _ in range(2000):
        x = jac.mul(cof, _samples(jac, trp, rng))
        if x == jac.identity:
            continue
        prev = x
        while x != jac.identity:
            prev, x = x, jac.mul(3, x)
        if _span_add(jac, span, prev):
            basis.append(prev)
            if len(basis) == 4:
                break
    if len(basis) < 4:
        raise JacobianError("could not find four independent 3-torsion points")
    coords = span
    cols = []
    for b in basis:
        fb = jac.frobenius(b, 1)
        cols.append(coords[fb])
    g = np.array(cols, dtype=np.int64).T % 3
    if tuple(int(c) for c in mat_charpoly(g, 3)) != Q3:
        raise JacobianError("Frobenius matrix does not reduce to the charpoly mod 3")
    nu = m.base.q % 3
    forms = invariant_forms(g, nu)
    flags = []
    M, used_pairing = None, False
    if pairing:
        try:
            M = weil_gram(jac, basis, rng)
            used_pairing = True
        except JacobianError as exc:
            flags.append("pairing unavailable: %s" % exc)
    if M is not None:
        # the pairing must be alternating, nondegenerate and Galois-equivariant
        if (not np.array_equal(M, (-M.T) % 3) or rank_mod(M, 3) != 4
                or not np.array_equal((g.T @ M @ g) % 3, (nu * M) % 3)):
            raise JacobianError("computed Weil pairing fails its consistency checks")
    elif len(forms) == 1:
        M = forms[0]
    else:
        flags.append("invariant form not unique (dimension %d)" % len(forms))
    if M is not None and rank_mod(M, 3) != 4:
        raise JacobianError("invariant form is degenerate")
    tup = lambda A: tuple(tuple(int(x) for x in row) for row in A)
    return TorsionModule(m, k, [MumfordDivisor(jac, b) for b in basis], tup(g),
                         None if M is None else tup(M), nu, len(forms), used_pairing,
                         len(coords), flags)


def symplectic_basis(M, p=3):
    """P with P^T M P = J; columns [x1, x2, y2, y1] with <x1,y1> = <x2,y2> = 1."""
    import numpy as np
    M = np.array(M, dtype=np.int64) % p
    d = M.shape[0]
    if d != 4:
        raise JacobianError("symplectic_basis is implemented for 4x4 forms")
    pair = lambda a, b: int(a @ M @ b) % p
    vecs = [np.array(v, dtype=np.int64) for v in _all_vectors(d, p)]
    x1 = next((v for v in vecs if any(pair(v, w) for w in vecs)), None)
    if x1 is None:
        raise JacobianError("form is zero")
    y1 = next(w for w in vecs if pair(x1, w) == 1)
    rest = [w for w in vecs if pair(x1, w) == 0 and pair(y1, w) == 0]
    x2 = next((v for v in rest if any(pair(v, w) for w in rest)), None)
    if x2 is None:
        raise JacobianError("form is degenerate")
    y2 = next(w for w in rest if pair(x2, w) == 1)
    P = np.stack([x1, x2, y2, y1], axis=1) % p
    from .sympgroups import J_form
    if not np.array_equal((P.T @ M @ P) % p, J_form(2, p)):
        raise JacobianError("symplectic basis check failed")
    return P


def _all_vectors(d, p):
    from itertools import product
    return [v for v in product(range(p), repeat=d) if any(v)]


# -- Weil pairing on Jac[3] -------------------------------------------------
#
# Miller's method on an imaginary model Y^2 + H Y = F (one point at infinity).
# A real model is moved there by sending a Weierstrass point to infinity.

class _Degenerate(Exception):
    pass


class _Imaginary:
    def __init__(self, K, f, h):
        self.K, self.f, self.h = K, p_trim(list(f)), p_trim(list(h))
        if len(self.f) != 6 or len(self.h) > 3:
            raise JacobianError("not an imaginary genus-2 model")

    identity = ((1,), ())

    def add(self, D1, D2, factors=None):
        K, f, h = self.K, self.f, self.h
        u1, v1 = list(D1[0]), list(D1[1])
        u2, v2 = list(D2[0]), list(D2[1])
        d1, e1, e2 = p_xgcd(K, u1, u2)
        if len(d1) == 1:
            d, s1, s2, s3 = [1], e1, e2, []
        else:
            d, c1, c2 = p_xgcd(K, d1, p_add(K, p_add(K, v1, v2), h))
            s1, s2, s3 = p_mul(K, c1, e1), p_mul(K, c1, e2), c2
        U = p_mul(K, u1, u2)
        V = p_add(K, p_mul(K, p_mul(K, s1, u1), v2), p_mul(K, p_mul(K, s2, u2), v1))
        if s3:
            V = p_add(K, V, p_mul(K, s3, p_add(K, p_mul(K, v1, v2), f)))
        if len(d) > 1:
            U = p_divmod(K, U, p_mul(K, d, d))[0]
            V = p_divmod(K, V, d)[0]
            if factors is not None:
                factors.append(("x", d, 1))
        V = p_mod(K, V, U)
        while len(U) > 3:
            N = p_sub(K, p_sub(K, f, p_mul(K, h, V)), p_mul(K, V, V))
            Up, r = p_divmod(K, N, U)
            if r:
                raise JacobianError("reduction failed")
            Up = p_monic(K, Up)
            if factors is not None:
                factors.append(("y", V, 1))
                factors.append(("x", Up, -1))
            V = p_mod(K, p_neg(K, p_add(K, V, h)), Up)
            U = Up
        return (tuple(U), tuple(V))

    def neg(self, D):
        u, v = D
        if len(u) == 1:
            return D
        return (u, tuple(p_mod(self.K, p_neg(self.K, p_add(self.K, list(v), self.h)), list(u))))

    def is_valid(self, D):
        K = self.K
        u, v = list(D[0]), list(D[1])
        lhs = p_sub(K, p_add(K, p_mul(K, v, v), p_mul(K, self.h, v)), self.f)
        return not p_mod(K, lhs, u)

    def triple(self, D):
        """3D reduced, and Miller factors g with div(g) = 3D - (3D reduced)."""
        fac = []
        D2 = self.add(D, D, fac)
        D3 = self.add(D2, D, fac)
        return D3, fac

    def _norm(self, r, u):
        K = self.K
        r = p_mod(K, r, list(u))
        if len(u) == 1:
            return 1
        r0 = r[0] if r else 0
        r1 = r[1] if len(r) > 1 else 0
        if len(u) == 2:
            return K.sub(r0, K.mul(r1, u[0]))
        t = K.sub(K.mul(r0, r0), K.mul(K.mul(r0, r1), u[1]))
        return K.add(t, K.mul(K.mul(r1, r1), u[0]))

    def evaluate(self, factors, E):
        """Product of the factors at the effective affine divisor E."""
        K = self.K
        num, den = 1, 1
        u, v = E
        for kind, poly, e in factors:
            if kind == "x":
                val = self._norm(list(poly), u)
            else:
                val = self._norm(p_sub(K, list(v), list(poly)), u)
            if val == 0:
                raise _Degenerate()
            if e > 0:
                num = K.mul(num, val)
            else:
                den = K.mul(den, val)
        return K.div(num, den)

    def random_degree2(self, rng):
        K = self.K
        pts = []
        while len(pts) < 2:
            x = rng.randrange(K.q)
            y = Jacobian._solve_y(K, self.f, self.h, x)
            if y is None or any(x == q[0] for q in pts):
                continue
            if rng.random() < 0.5:
                y = K.sub(K.neg(y), p_eval(K, self.h, x))
            pts.append((x, y))
        D = self.identity
        for x, y in pts:
            D = self.add(D, ((K.neg(x), 1), (y,) if y else ()))
        return D

    def weil(self, D, E, rng, tries=40):
        K = self.K
        for _ in range(tries):
            R1, R2 = self.random_degree2(rng), self.random_degree2(rng)
            D1, E1 = self.add(D, R1), self.add(E, R2)
            if len(D1[0]) != 3 or len(E1[0]) != 3:
                continue
            tD1, gD1 = self.triple(D1)
            tR1, gR1 = self.triple(R1)
            tE1, gE1 = self.triple(E1)
            tR2, gR2 = self.triple(R2)
            if tD1 != tR1 or tE1 != tR2:
                raise JacobianError("pairing arguments are not 3-torsion")
            try:
                fD = K.div(K.mul(self.evaluate(gD1, E1), self.evaluate(gR1, R2)),
                           K.mul(self.evaluate(gD1, R2), self.evaluate(gR1, E1)))
                fE = K.div(K.mul(self.evaluate(gE1, D1), self.evaluate(gR2, R1)),
                           K.mul(self.evaluate(gE1, R1), self.evaluate(gR2, D1)))
            except _Degenerate:
                continue
            e = K.div(fD, fE)
            if K.pow(e, 3) != 1:
                raise JacobianError("pairing value is not a cube root of unity")
            return e
        raise JacobianError("no admissible auxiliary divisors found")


def _transform_poly(K, a, r, n):
    """X^n a(r + 1/X)."""
    out = []
    for i, c in enumerate(a):
        if not c:
            continue
        t = [c]
        for _ in range(i):
            t = p_mul(K, t, [1, r])
        out = p_add(K, out, [0] * (n - i) + t)
    return p_trim(out)


def _imaginary_image(jac):
    """An imaginary model over jac.K and a map from jac's elements into it."""
    K = jac.K
    if not jac.real:
        img = _Imaginary(K, jac.f, jac.h)
        return img, lambda D: (tuple(D[0]), tuple(D[1]))
    from .gf import poly_roots
    W = jac.h if K.p == 2 else jac.f
    roots = poly_roots(Poly(W, K))
    if not roots:
        raise JacobianError("no Weierstrass point rational over %r" % K)
    r = roots[0][0]
    H = _transform_poly(K, jac.h, r, 3)
    F = _transform_poly(K, jac.f, r, 6)
    c = 0
    if len(F) == 7:
        if K.p != 2:
            raise JacobianError("unexpected sextic after transformation")
        c = K.sqrt(F[6])
        F = p_trim(p_add(K, p_add(K, F, [0] * 6 + [F[6]]), [0, 0, 0] + p_scale(K, H, c)))
    img = _Imaginary(K, F, H)
    w = jac._roots_at_infinity()
    P = [((0, 1), (w[0],) if w[0] else ()), ((0, 1), (w[1],) if w[1] else ())]

    def image(D):
        u, v, n = list(D[0]), list(D[1]), D[2]
        m_ = 2 - (len(u) - 1) - n
        if len(u) > 1 and p_eval(K, u, r) == 0:
            u = p_divmod(K, u, [K.neg(r), 1])[0]
            v = p_mod(K, v, u) if len(u) > 1 else []
        S = img.identity
        if len(u) > 1:
            un = p_monic(K, _transform_poly(K, u, r, len(u) - 1))
            Y = p_add(K, _transform_poly(K, v, r, 3), [0, 0, 0, c] if c else [])
            S = (tuple(un), tuple(p_mod(K, Y, un)))
            if not img.is_valid(S):
                raise JacobianError("transformed divisor is not on the new model")
        for _ in range(n):
            S = img.add(S, P[0])
        for _ in range(m_):
            S = img.add(S, P[1])
        S = img.add(S, img.neg(P[0]))
        S = img.add(S, img.neg(P[1]))
        return S

    return img, image


def weil_gram(jac, basis, rng):
    """Gram matrix over F3 of the 3-Weil pairing on the given basis, with
    e(b_i, b_j) = zeta^{M_ij} for a fixed primitive cube root of unity zeta."""
    import numpy as np
    K = jac.K
    if (K.q - 1) % 3:
        raise JacobianError("no cube roots of unity in %r" % K)
    img, image = _imaginary_image(jac)
    B = [image(b) for b in basis]
    zeta = None
    M = np.zeros((4, 4), dtype=np.int64)
    vals = {}
    for i in range(4):
        for j in range(i + 1, 4):
            vals[i, j] = img.weil(B[i], B[j], rng)
    for e in vals.values():
        if e != 1:
            zeta = e
            break
    if zeta is None:
        raise JacobianError("pairing is trivial on the basis")
    z2 = K.mul(zeta, zeta)
    for (i, j), e in vals.items():
        x = 0 if e == 1 else 1 if e == zeta else 2 if e == z2 else None
        if x is None:
            raise JacobianError("pairing value outside mu_3")
        M[i, j], M[j, i] = x, (-x) % 3
    return M
