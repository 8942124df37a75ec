"""Finite fields F_{p^k} for p in {2, 3} and polynomials over them.

Elements are plain ints: the base-p digits of n are the coefficients of the
residue class of a polynomial in x, low digit first.  The prime field sits
inside every extension with the same encoding (0, 1, ..., p-1).
"""
from fractions import Fraction
from functools import lru_cache
import random


class FieldError(ValueError):
    pass


# -- prime-field polynomial helpers used while setting up a context ----------

def _pp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pp_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        if c:
            off = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[off + i] = (a[off + i] - c * mi) % p
        a.pop()
        _pp_trim(a)
    return _pp_trim(a)


def _pp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] = (r[i + j] + x * y) % p
    return _pp_mod(r, m, p)


def _pp_gcd(a, b, p):
    a, b = _pp_trim(list(a)), _pp_trim(list(b))
    while b:
        a, b = b, _pp_mod(a, b, p)
    return a


def _pp_is_irreducible(m, p):
    k = len(m) - 1
    xp = [0, 1]
    for _ in range(k // 2):
        # xp <- xp^p mod m
        r = [1]
        for _ in range(p):
            r = _pp_mulmod(r, xp, m, p)
        xp = r
        t = list(xp) + [0] * max(0, 2 - len(xp))
        t[1] = (t[1] - 1) % p
        g = _pp_gcd(m, _pp_trim(t), p)
        if len(g) > 1:
            return False
    return True


def _least_irreducible(p, k):
    if k == 1:
        return (0, 1)
    for n in range(p ** k):
        m = [(n // p ** i) % p for i in range(k)] + [1]
        if m[0] == 0:
            continue
        if _pp_is_irreducible(m, p):
            return tuple(m)
    raise FieldError("no irreducible polynomial found")


def _prime_factors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldCtx:
    """F_{p^k}.  Use field_make(p, k) to get a shared instance."""

    TABLE_LIMIT = 1 << 16

    def __init__(self, p, k):
        if p not in (2, 3):
            raise FieldError("only characteristic 2 and 3 are supported")
        if k < 1 or (p == 2 and k > 24) or (p == 3 and k > 6):
            raise FieldError("extension degree out of range")
        self.p, self.k = p, k
        self.q = p ** k
        self.modulus = _least_irreducible(p, k)
        self._tabled = self.q <= self.TABLE_LIMIT
        if p == 2:
            self._mbits = sum(1 << i for i, c in enumerate(self.modulus) if c)
        else:
            self._build_add_tables()
        self.gen = self._find_primitive()
        if self._tabled:
            self._build_log_tables()
        self._tr_mask = None
        self._as_basis = None
        self._sqrt_tab = None

    # -- construction ---------------------------------------------------------
    def _digits(self, a):
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return out

    def _undigits(self, d):
        n = 0
        for c in reversed(d):
            n = n * self.p + c
        return n

    def _build_add_tables(self):
        q, p = self.q, self.p
        digs = [self._digits(a) for a in range(q)]
        self._add = [[self._undigits([(x + y) % p for x, y in zip(digs[a], digs[b])])
                      for b in range(q)] for a in range(q)]
        self._neg = [self._undigits([(-x) % p for x in digs[a]]) for a in range(q)]

    def _slow_mul(self, a, b):
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a >> self.k:
                    a ^= self._mbits
            return r
        m = list(self.modulus)
        r = _pp_mulmod(_pp_trim(self._digits(a)), _pp_trim(self._digits(b)), m, self.p)
        return self._undigits(r + [0] * (self.k - len(r)))

    def _slow_pow(self, a, e):
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _find_primitive(self):
        n = self.q - 1
        if n == 1:
            return 1
        fs = _prime_factors(n)
        for g in range(2, self.q):
            if all(self._slow_pow(g, n // r) != 1 for r in fs):
                return g
        raise FieldError("no primitive element")

    def _build_log_tables(self):
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [0] * self.q
        x = 1
        g = self.gen
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp, self._log = exp, log

    # -- arithmetic -------------------------------------------------------
    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._add[a][b]

    def neg(self, a):
        if self.p == 2:
            return a
        return self._neg[a]

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        if not a or not b:
            return 0
        if self._tabled:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in F_%d" % self.q)
        if self._tabled:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self._slow_pow(a, self.q - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if e == 0:
            return 1
        if not a:
            return 0
        if self._tabled:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        e %= self.q - 1
        return self._slow_pow(a, e)

    def log(self, a):
        """Discrete log to base self.gen."""
        if not a:
            raise ZeroDivisionError("log of zero")
        if self._tabled:
            return self._log[a]
        # only used on small subgroups in practice; plain search
        x, i = 1, 0
        while x != a:
            x = self._slow_mul(x, self.gen)
            i += 1
        return i

    def frob(self, a, i=1):
        e = pow(self.p, i % self.k)
        return self.pow(a, e)

    def order(self, a):
        n = self.q - 1
        for r in _prime_factors(self.q - 1):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def from_int(self, n):
        return n % self.p

    def elements(self):
        return range(self.q)

    def random(self, rng):
        return rng.randrange(self.q)

    # -- traces, square roots, Artin-Schreier ---------------------------------
    def trace(self, a):
        """Absolute trace to the prime field."""
        if self.p == 2:
            if self._tr_mask is None:
                mask = 0
                for i in range(self.k):
                    x, t = 1 << i, 0
                    for _ in range(self.k):
                        t ^= x
                        x = self.mul(x, x)
                    if t:
                        mask |= 1 << i
                self._tr_mask = mask
            return bin(a & self._tr_mask).count("1") & 1
        t, x = 0, a
        for _ in range(self.k):
            t = self.add(t, x)
            x = self.frob(x)
        return t

    def is_square(self, a):
        if self.p == 2 or a == 0:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def sqrt(self, a):
        """A square root of a, or None."""
        if self.p == 2:
            return self.pow(a, self.q // 2)
        if a == 0:
            return 0
        if self._sqrt_tab is None:
            tab = {}
            for x in range(self.q):
                tab.setdefault(self.mul(x, x), x)
            self._sqrt_tab = tab
        return self._sqrt_tab.get(a)

    def solve_artin_schreier(self, c):
        """z with z^2 + z = c in characteristic 2, or None if Tr(c) = 1."""
        if self.p != 2:
            raise FieldError("Artin-Schreier solver is for characteristic 2")
        if self.trace(c):
            return None
        if self._as_basis is None:
            # columns of the F2-linear map z -> z^2 + z, then an elimination table
            rows = []
            for i in range(self.k):
                z = 1 << i
                rows.append((self.mul(z, z) ^ z, z))
            piv = {}
            for img, pre in rows:
                while img:
                    hb = img.bit_length() - 1
                    if hb in piv:
                        pi, pp = piv[hb]
                        img ^= pi
                        pre ^= pp
                    else:
                        piv[hb] = (img, pre)
                        break
            self._as_basis = piv
        z, c0 = 0, c
        while c0:
            hb = c0.bit_length() - 1
            if hb not in self._as_basis:
                return None
            pi, pp = self._as_basis[hb]
            c0 ^= pi
            z ^= pp
        return z

    # -- subfields ------------------------------------------------------------
    def embedding(self, sub):
        """List mapping each element of the subfield `sub` to this field."""
        return _embedding(sub, self)

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.k)

    def __reduce__(self):
        return (field_make, (self.p, self.k))

    def __call__(self, n):
        return FieldElem(self, n)


@lru_cache(maxsize=None)
def field_make(p, k=1):
    """The shared context for F_{p^k}."""
    return FieldCtx(p, k)


@lru_cache(maxsize=None)
def _embedding(sub, big):
    if sub.p != big.p or big.k % sub.k:
        raise FieldError("%r is not a subfield of %r" % (sub, big))
    if sub.k == 1:
        return tuple(range(sub.q))
    gamma = big.pow(big.gen, (big.q - 1) // (sub.q - 1))
    m = sub.modulus
    root = None
    x = 1
    for _ in range(sub.q - 1):
        acc = 0
        for c in reversed(m):
            acc = big.add(big.mul(acc, x), c)
        if acc == 0:
            root = x
            break
        x = big.mul(x, gamma)
    if root is None:
        raise FieldError("subfield modulus has no root")
    pw = [1]
    for _ in range(sub.k - 1):
        pw.append(big.mul(pw[-1], root))
    out = []
    for a in range(sub.q):
        acc, i = 0, 0
        while a:
            d = a % sub.p
            if d:
                acc = big.add(acc, big.mul(d, pw[i]))
            a //= sub.p
            i += 1
        out.append(acc)
    return tuple(out)


class FieldElem:
    """Thin operator wrapper around an int of a FieldCtx."""
    __slots__ = ("ctx", "n")

    def __init__(self, ctx, n):
        self.ctx = ctx
        if ctx.k == 1:
            n %= ctx.p
        self.n = n
        if not 0 <= n < ctx.q:
            raise FieldError("element code out of range")

    def _o(self, other):
        if isinstance(other, FieldElem):
            if other.ctx is not self.ctx:
                raise FieldError("elements of different fields")
            return other.n
        return int(other) % self.ctx.p

    def __add__(self, o):
        return FieldElem(self.ctx, self.ctx.add(self.n, self._o(o)))
    __radd__ = __add__

    def __sub__(self, o):
        return FieldElem(self.ctx, self.ctx.sub(self.n, self._o(o)))

    def __rsub__(self, o):
        return FieldElem(self.ctx, self.ctx.sub(self._o(o), self.n))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.n))

    def __mul__(self, o):
        return FieldElem(self.ctx, self.ctx.mul(self.n, self._o(o)))
    __rmul__ = __mul__

    def __truediv__(self, o):
        return FieldElem(self.ctx, self.ctx.div(self.n, self._o(o)))

    def __pow__(self, e):
        if e < 0:
            return FieldElem(self.ctx, self.ctx.pow(self.ctx.inv(self.n), -e))
        return FieldElem(self.ctx, self.ctx.pow(self.n, e))

    def __eq__(self, o):
        if isinstance(o, FieldElem):
            return self.ctx is o.ctx and self.n == o.n
        if isinstance(o, int):
            return self.n == o % self.ctx.p and self.n < self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.q, self.n))

    def __int__(self):
        return self.n

    def __repr__(self):
        return "%r(%d)" % (self.ctx, self.n)


def frobenius(x, i=1):
    """x -> x^(p^i) for a FieldElem (or (ctx, int) pair)."""
    if isinstance(x, FieldElem):
        return FieldElem(x.ctx, x.ctx.frob(x.n, i))
    ctx, n = x
    return ctx.frob(n, i)


# -- dense polynomial helpers over a FieldCtx; coefficient lists low->high ----

def p_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def p_add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    add = F.add
    for i, y in enumerate(b):
        r[i] = add(r[i], y)
    return p_trim(r)


def p_neg(F, a):
    return [F.neg(c) for c in a]


def p_sub(F, a, b):
    r = list(a) + [0] * (len(b) - len(a))
    sub = F.sub
    for i, y in enumerate(b):
        r[i] = sub(r[i], y)
    return p_trim(r)


def p_scale(F, a, c):
    if not c:
        return []
    mul = F.mul
    return [mul(x, c) for x in a]


def p_mul(F, a, b):
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    add, mul = F.add, F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    r[i + j] = add(r[i + j], mul(x, y))
    return p_trim(r)


def p_divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], p_trim(a)
    inv = F.inv(b[-1])
    qt = [0] * (len(a) - db)
    sub, mul = F.sub, F.mul
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = mul(c, inv)
            qt[i - db] = c
            off = i - db
            for j, y in enumerate(b):
                if y:
                    a[off + j] = sub(a[off + j], mul(c, y))
    return p_trim(qt), p_trim(a[:db])


def p_mod(F, a, b):
    return p_divmod(F, a, b)[1]


def p_monic(F, a):
    if not a or a[-1] == 1:
        return list(a)
    return p_scale(F, a, F.inv(a[-1]))


def p_gcd(F, a, b):
    a, b = p_trim(list(a)), p_trim(list(b))
    while b:
        a, b = b, p_mod(F, a, b)
    return p_monic(F, a)


def p_xgcd(F, a, b):
    """(g, s, t) with s*a + t*b = g monic."""
    r0, r1 = p_trim(list(a)), p_trim(list(b))
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        qt, r = p_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, p_sub(F, s0, p_mul(F, qt, s1))
        t0, t1 = t1, p_sub(F, t0, p_mul(F, qt, t1))
    if not r0:
        return [], [], []
    c = F.inv(r0[-1])
    return p_scale(F, r0, c), p_scale(F, s0, c), p_scale(F, t0, c)


def p_eval(F, a, x):
    acc = 0
    add, mul = F.add, F.mul
    for c in reversed(a):
        acc = add(mul(acc, x), c)
    return acc


def p_deriv(F, a):
    out = []
    for i in range(1, len(a)):
        c = a[i]
        m = i % F.p
        if m == 0 or not c:
            out.append(0)
        else:
            out.append(c if m == 1 else F.add(c, c) if m == 2 else 0)
    return p_trim(out)


def p_powmod(F, a, e, m):
    r = [1]
    a = p_mod(F, a, m)
    while e:
        if e & 1:
            r = p_mod(F, p_mul(F, r, a), m)
        e >>= 1
        if e:
            a = p_mod(F, p_mul(F, a, a), m)
    return r


def p_map(F, a, emb):
    """Push coefficients through a subfield embedding table."""
    return p_trim([emb[c] for c in a])


# -- public polynomial type ---------------------------------------------------

def _sym(n):
    return "ZZ" if n is None else repr(n)


class Poly:
    """Polynomial with coefficients low->high over a FieldCtx, or over the
    integers when ring is None."""
    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs, ring=None):
        c = list(coeffs)
        if ring is None:
            c = [int(x) for x in c]
        else:
            c = [x.n if isinstance(x, FieldElem) else int(x) for x in c]
            if ring.k == 1:
                c = [x % ring.p for x in c]
            if any(x >= ring.q for x in c):
                raise FieldError("coefficient code out of range for %r" % ring)
        self.coeffs = tuple(p_trim(c))
        self.ring = ring

    @classmethod
    def x(cls, ring=None):
        return cls([0, 1], ring)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring is other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, None if self.ring is None else self.ring.q))

    def _check(self, other):
        if isinstance(other, int):
            other = Poly([other % self.ring.p if self.ring else other], self.ring)
        if not isinstance(other, Poly) or other.ring is not self.ring:
            raise FieldError("polynomials over different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if self.ring is None:
            n = max(len(self), len(other))
            return Poly([self[i] + other[i] for i in range(n)])
        return Poly(p_add(self.ring, self.coeffs, other.coeffs), self.ring)
    __radd__ = __add__

    def __neg__(self):
        if self.ring is None:
            return Poly([-c for c in self.coeffs])
        return Poly(p_neg(self.ring, self.coeffs), self.ring)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        if self.ring is None:
            if not self.coeffs or not other.coeffs:
                return Poly([])
            r = [0] * (len(self) + len(other) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    r[i + j] += a * b
            return Poly(r)
        return Poly(p_mul(self.ring, self.coeffs, other.coeffs), self.ring)
    __rmul__ = __mul__

    def __pow__(self, e):
        r = Poly([1], self.ring)
        for _ in range(e):
            r = r * self
        return r

    def __divmod__(self, other):
        other = self._check(other)
        if self.ring is None:
            qt, r = _q_divmod([Fraction(c) for c in self.coeffs],
                              [Fraction(c) for c in other.coeffs])
            if any(c.denominator != 1 for c in qt + r):
                raise FieldError("inexact integer polynomial division")
            return Poly([int(c) for c in qt]), Poly([int(c) for c in r])
        qt, r = p_divmod(self.ring, self.coeffs, other.coeffs)
        return Poly(qt, self.ring), Poly(r, self.ring)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        if self.ring is None:
            acc = 0
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        n = x.n if isinstance(x, FieldElem) else x
        return p_eval(self.ring, self.coeffs, n)

    def derivative(self):
        if self.ring is None:
            return Poly([i * c for i, c in enumerate(self.coeffs)][1:])
        return Poly(p_deriv(self.ring, self.coeffs), self.ring)

    def monic(self):
        if self.ring is None:
            if self.lc not in (1, -1):
                raise FieldError("integer polynomial cannot be made monic")
            return self if self.lc == 1 else -self
        return Poly(p_monic(self.ring, self.coeffs), self.ring)

    def reduce(self, ring):
        """Integer polynomial -> polynomial over a prime field."""
        if self.ring is not None:
            raise FieldError("reduce() expects an integer polynomial")
        if ring.k != 1:
            raise FieldError("reduction target must be a prime field")
        return Poly([c % ring.p for c in self.coeffs], ring)

    def lift(self):
        """Prime-field polynomial -> integer polynomial with digits 0..p-1."""
        if self.ring is None or self.ring.k != 1:
            raise FieldError("lift() expects a prime-field polynomial")
        return Poly(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else "x" if i == 1 else "x^%d" % i
            if self.ring is None:
                sign = "-" if c < 0 else "+"
                a = abs(c)
                body = str(a) if not mono else (mono if a == 1 else "%d*%s" % (a, mono))
                terms.append((sign, body))
            else:
                body = str(c) if not mono else (mono if c == 1 else "%d*%s" % (c, mono))
                terms.append(("+", body))
        s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            s += " %s %s" % (sign, body)
        return s


def _q_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _q_divmod(a, b):
    a = _q_trim(list(a))
    b = _q_trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], a
    qt = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / b[-1]
        qt[i - db] = c
        if c:
            for j, y in enumerate(b):
                a[i - db + j] -= c * y
    return _q_trim(qt), _q_trim(a[:db])


def _zz_gcd(f, g):
    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    while b:
        a, b = b, _q_divmod(a, b)[1]
    if not a:
        return Poly([])
    # clear denominators, strip content, positive leading coefficient
    from math import gcd, lcm
    den = 1
    for c in a:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in a]
    cont = 0
    for c in ints:
        cont = gcd(cont, c)
    ints = [c // cont for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return Poly(ints)


def poly_gcd(f, g):
    """Monic gcd over a field; over the integers, the primitive gcd with
    positive leading coefficient (computed over Q)."""
    if f.ring is not g.ring:
        raise FieldError("polynomials over different rings")
    if f.is_zero() and g.is_zero():
        raise FieldError("gcd of two zero polynomials")
    if f.ring is None:
        return _zz_gcd(f, g)
    return Poly(p_gcd(f.ring, f.coeffs, g.coeffs), f.ring)


def is_squarefree(f):
    """gcd(f, f') = 1, with f' = 0 meaning f is a p-th power (not squarefree
    unless constant)."""
    if f.degree <= 0:
        return not f.is_zero()
    d = f.derivative()
    if d.is_zero():
        return False
    return poly_gcd(f, d).degree == 0


def _pth_root(F, a):
    # a(x) = b(x)^p; the coefficients of b are p-th roots (inverse Frobenius)
    out = []
    for i in range(0, len(a), F.p):
        out.append(F.frob(a[i], F.k - 1) if F.k > 1 else a[i])
    return p_trim(out)


def _squarefree_parts(F, f):
    """Musser: list of (g, multiplicity) with g squarefree, f = lc * prod g^m."""
    f = p_monic(F, f)
    out = []
    if len(f) <= 1:
        return out
    d = p_deriv(F, f)
    if not d:
        for g, m in _squarefree_parts(F, _pth_root(F, f)):
            out.append((g, m * F.p))
        return out
    c = p_gcd(F, f, d)
    w = p_divmod(F, f, c)[0]
    i = 1
    while len(w) > 1:
        y = p_gcd(F, w, c)
        z = p_divmod(F, w, y)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = p_divmod(F, c, y)[0]
    if len(c) > 1:
        for g, m in _squarefree_parts(F, _pth_root(F, c)):
            out.append((g, m * F.p))
    return out


def _distinct_degree(F, g):
    """For squarefree g: list of (d, product of all degree-d irreducible factors)."""
    out = []
    xq = [0, 1]
    d = 0
    while len(g) - 1 >= 2 * (d + 1):
        d += 1
        xq = p_powmod(F, xq, F.q, g)
        t = p_sub(F, xq, [0, 1])
        h = p_gcd(F, g, t)
        if len(h) > 1:
            out.append((d, h))
            g = p_divmod(F, g, h)[0]
            xq = p_mod(F, xq, g)
    if len(g) > 1:
        out.append((len(g) - 1, g))
    return out


def poly_factor_degrees(f):
    """Sorted degrees of the irreducible factors of f, with multiplicity."""
    if f.ring is None:
        raise FieldError("poly_factor_degrees needs a finite-field polynomial")
    if f.is_zero():
        raise FieldError("zero polynomial has no factorization")
    F = f.ring
    degs = []
    for g, m in _squarefree_parts(F, list(f.coeffs)):
        for d, h in _distinct_degree(F, g):
            degs.extend([d] * (((len(h) - 1) // d) * m))
    return sorted(degs)


def _split_linear(F, g, rng):
    """Roots of a squarefree product of distinct linear factors."""
    if len(g) <= 1:
        return []
    if len(g) == 2:
        return [F.div(F.neg(g[0]), g[1])]
    while True:
        a = rng.randrange(F.q)
        if F.p == 2:
            # trace map of b*x + a modulo g
            t = [a, 1 + rng.randrange(F.q - 1)]
            acc = list(t)
            for _ in range(F.k - 1):
                t = p_mod(F, p_mul(F, t, t), g)
                acc = p_add(F, acc, t)
            h = p_gcd(F, g, acc)
        else:
            t = p_powmod(F, [a, 1 + rng.randrange(F.q - 1)], (F.q - 1) // 2, g)
            h = p_gcd(F, g, p_sub(F, t, [1]))
        if 1 < len(h) < len(g):
            return (_split_linear(F, h, rng)
                    + _split_linear(F, p_divmod(F, g, h)[0], rng))


def poly_roots(f):
    """Roots of f in its coefficient field as a sorted list of (root, mult)."""
    if f.ring is None:
        raise FieldError("poly_roots needs a finite-field polynomial")
    if f.is_zero():
        raise FieldError("zero polynomial")
    F = f.ring
    a = list(f.coeffs)
    if F.q <= 4096:
        cands = [x for x in range(F.q) if p_eval(F, a, x) == 0]
    else:
        xq = p_powmod(F, [0, 1], F.q, a)
        g = p_gcd(F, a, p_sub(F, xq, [0, 1]))
        cands = sorted(_split_linear(F, g, random.Random(0)))
    out = []
    for r in cands:
        m, cur = 0, a
        while True:
            qt, rem = p_divmod(F, cur, [F.neg(r), 1])
            if rem:
                break
            m += 1
            cur = qt
        out.append((r, m))
    return out
