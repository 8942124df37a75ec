"""Genus-2 models y^2 + h(x) y = f(x) over F_2, F_3 (and extensions) or over
the integers: smoothness, point counts, Frobenius polynomials."""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .gf import FieldCtx, FieldError, Poly, field_make, is_squarefree, p_eval


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class HyperellipticModel:
    f: Poly
    h: Poly
    base: FieldCtx = None

    def __post_init__(self):
        if self.f.ring is not self.base or self.h.ring is not self.base:
            raise CurveError("f and h must live over the model's base")
        if self.f.degree > 6 or self.h.degree > 3:
            raise CurveError("need deg f <= 6 and deg h <= 3")

    @classmethod
    def make(cls, f, h=(), base=None):
        """Build from coefficient lists (low degree first)."""
        return cls(Poly(f, base), Poly(h, base), base)

    @property
    def p(self):
        return None if self.base is None else self.base.p

    @property
    def q(self):
        return None if self.base is None else self.base.q

    def odd_form(self):
        """F = h^2 + 4f, so that the model is (y + h/2)^2 = F/4 away from 2."""
        if self.base is not None and self.base.p == 2:
            raise CurveError("no odd-characteristic form in characteristic 2")
        return self.h * self.h + self.f * 4

    def key(self):
        return (tuple(self.f.coeffs), tuple(self.h.coeffs))

    def __repr__(self):
        return "y^2 + (%r)*y = %r over %s" % (
            self.h, self.f, "ZZ" if self.base is None else repr(self.base))


@dataclass(frozen=True)
class FrobeniusSummary:
    q: int
    a: int
    b: int
    N1: int = None
    N2: int = None
    charpoly: Poly = field(init=False)
    ordinary: bool = field(init=False)
    distinguished: bool = field(init=False)

    def __post_init__(self):
        q, a, b = self.q, self.a, self.b
        object.__setattr__(self, "charpoly", Poly([q * q, q * a, b, a, 1]))
        object.__setattr__(self, "ordinary", gcd(b, _char(q)) == 1)
        object.__setattr__(self, "distinguished", is_squarefree(self.charpoly))

    @classmethod
    def from_charpoly(cls, Q, q):
        c = Q.coeffs
        if len(c) != 5 or c[4] != 1 or c[0] != q * q or c[1] != q * c[3]:
            raise CurveError("not of the shape x^4 + a x^3 + b x^2 + q a x + q^2")
        return cls(q, c[3], c[2])


def _char(q):
    for p in (2, 3, 5, 7):
        if q % p == 0:
            return p
    d = 11
    while q % d:
        d += 2
    return d


# -- smoothness --------------------------------------------------------------

def _degree_ok(m):
    return max(2 * m.h.degree, m.f.degree) in (5, 6)


def is_smooth_genus2(m):
    """Smooth projective genus-2 model (affine part plus the chart at infinity)."""
    if m.base is None:
        raise CurveError("smoothness is decided over a finite field; reduce first")
    if m.f.degree > 6 or m.h.degree > 3:
        raise CurveError("degree bounds violated")
    if not _degree_ok(m):
        return False
    F = m.base
    if F.p == 2:
        h, f = m.h, m.f
        if h.is_zero():
            return False
        hd, fd = h.derivative(), f.derivative()
        s = hd * hd * f + fd * fd
        if not s.is_zero():
            from .gf import poly_gcd
            if poly_gcd(h, s).degree > 0:
                return False
        elif h.degree > 0:
            return False
        # chart at infinity: w^2 + H(z) w = G(z), H = z^3 h(1/z), G = z^6 f(1/z)
        h3, h2, f6, f5 = h[3], h[2], f[6], f[5]
        if h3 == 0 and F.mul(F.mul(h2, h2), f6) == F.mul(f5, f5):
            return False
        return True
    D = m.odd_form()
    return D.degree in (5, 6) and is_squarefree(D)


# -- point counting --------------------------------------------------------

def _lift_coeffs(m, ext):
    emb = ext.embedding(m.base)
    return [emb[c] for c in m.f.coeffs], [emb[c] for c in m.h.coeffs]


def points_at_infinity(m, ext):
    """Distinct roots of w^2 + h3 w - f6 over ext."""
    f, h = _lift_coeffs(m, ext)
    h3 = h[3] if len(h) > 3 else 0
    f6 = f[6] if len(f) > 6 else 0
    if ext.p == 2:
        if h3 == 0:
            return 1
        c = ext.div(f6, ext.mul(h3, h3))
        return 2 if ext.trace(c) == 0 else 0
    d = ext.add(ext.mul(h3, h3), ext.mul(ext.from_int(4), f6))
    if d == 0:
        return 1
    return 2 if ext.is_square(d) else 0


def _affine_count(ext, f, h):
    n = 0
    if ext.p == 2:
        mul, tr, inv = ext.mul, ext.trace, ext.inv
        for x in range(ext.q):
            hx = p_eval(ext, h, x)
            if hx == 0:
                n += 1
            else:
                fx = p_eval(ext, f, x)
                c = mul(fx, inv(mul(hx, hx)))
                if tr(c) == 0:
                    n += 2
        return n
    four = ext.from_int(4)
    for x in range(ext.q):
        hx = p_eval(ext, h, x)
        d = ext.add(ext.mul(hx, hx), ext.mul(four, p_eval(ext, f, x)))
        if d == 0:
            n += 1
        elif ext.is_square(d):
            n += 2
    return n


def count_points(m, k=1):
    """Number of projective points over F_{q^k}."""
    if not is_smooth_genus2(m):
        raise CurveError("point counts are only defined here for smooth models")
    ext = field_make(m.base.p, m.base.k * k)
    f, h = _lift_coeffs(m, ext)
    return _affine_count(ext, f, h) + points_at_infinity(m, ext)


def frobenius_charpoly(m):
    q = m.base.q
    N1 = count_points(m, 1)
    N2 = count_points(m, 2)
    s1 = q + 1 - N1
    s2 = q * q + 1 - N2
    if (s1 * s1 - s2) % 2:
        raise CurveError("inconsistent point counts")
    return FrobeniusSummary(q, -s1, (s1 * s1 - s2) // 2, N1, N2)


def is_ordinary(s):
    return gcd(s.b, _char(s.q)) == 1


def is_p_distinguished(s):
    return is_squarefree(s.charpoly)


def is_perfect_square(Q):
    """Q = R^2 for a monic integer quadratic R."""
    c = Q.coeffs
    if len(c) != 5 or c[4] != 1 or c[3] % 2:
        return False
    r1 = c[3] // 2
    r0_2 = c[2] - r1 * r1
    if r0_2 % 2:
        return False
    r0 = r0_2 // 2
    R = Poly([r0, r1, 1])
    return R * R == Q


# -- Weierstrass points -------------------------------------------------------

def _rational_roots(P):
    c = list(P.coeffs)
    if not c:
        return [Fraction(0)]
    roots = []
    while c and c[0] == 0:
        c.pop(0)
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    if len(c) <= 1:
        return roots

    def divisors(n):
        n = abs(n)
        out = set()
        for d in range(1, isqrt(n) + 1):
            if n % d == 0:
                out.update((d, n // d))
        return sorted(out)

    for num in divisors(c[0]):
        for den in divisors(c[-1]):
            for s in (1, -1):
                r = Fraction(s * num, den)
                if r in roots:
                    continue
                acc = Fraction(0)
                for a in reversed(c):
                    acc = acc * r + a
                if acc == 0:
                    roots.append(r)
    return roots


def has_rational_weierstrass_point(m):
    """Rational root of h^2 + 4f, or that form has degree 5 (point at infinity)."""
    if m.base is not None and m.base.p == 2:
        raise CurveError("Weierstrass points are not handled in characteristic 2")
    D = m.odd_form()
    if D.degree == 5:
        return True
    if m.base is None:
        return bool(_rational_roots(D))
    return any(D(x) == 0 for x in range(m.base.q))


def reduce_mod_p(m, p):
    if m.base is not None:
        raise CurveError("reduce_mod_p expects an integral model")
    F = field_make(p, 1)
    return HyperellipticModel(m.f.reduce(F), m.h.reduce(F), F)


# -- Weil polynomials ---------------------------------------------------------

def weil_poly_is_valid(a, b, p):
    """x^4 + a x^3 + b x^2 + p a x + p^2 is an ordinary Weil polynomial.

    With t = x + p/x the roots lie on |x| = sqrt(p) iff t^2 + a t + (b - 2p)
    has both roots real in [-2 sqrt(p), 2 sqrt(p)]; all tests are exact."""
    if gcd(b, p) != 1:
        return False
    c = b - 2 * p
    if a * a - 4 * c < 0:
        return False
    if a * a > 16 * p:
        return False
    # value at t = +-2 sqrt(p): 4p +- 2a sqrt(p) + c >= 0
    s = 4 * p + c
    if s < 0 or s * s < 4 * a * a * p:
        return False
    return True


def weil_poly(a, b, p):
    return Poly([p * p, p * a, b, a, 1])


def weil_poly_enumerate(p):
    out = []
    amax = isqrt(16 * p)
    for a in range(-amax, amax + 1):
        for b in range(-2 * p, a * a // 4 + 2 * p + 1):
            if weil_poly_is_valid(a, b, p):
                out.append(weil_poly(a, b, p))
    return out
