"""Local checks at 2 and 3 for genus-2 curves over Q and the rule engine
deciding which modularity criterion the local data supports.

Good reduction at p means the supplied model is smooth mod p; no minimal
model is searched for.  Global facts (unramifiedness at 2 when the model is
bad there, the size of the mod-3 image) only enter as assertions.
"""
from dataclasses import asdict, dataclass, field

import numpy as np

from . import sympgroups as sg
from .curves import (CurveError, HyperellipticModel, frobenius_charpoly, has_rational_weierstrass_point,
                     is_smooth_genus2, reduce_mod_p)
from .gf import Poly, field_make, is_squarefree, poly_factor_degrees
from .jacobian import companion

ASSUMPTIONS = ("unramified-at-2", "image-large")
EXCLUDED_AT_2 = ("4C", "12C")


@dataclass(frozen=True)
class CurveOverQ:
    f: tuple
    h: tuple = ()
    label: str = None

    def __post_init__(self):
        f = tuple(int(c) for c in self.f)
        h = tuple(int(c) for c in self.h)
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "h", h)
        if len(Poly(f).coeffs) > 7 or len(Poly(h).coeffs) > 4:
            raise CurveError("need deg f <= 6 and deg h <= 3")
        D = self.model.odd_form()
        if D.degree not in (5, 6) or not is_squarefree(D):
            raise CurveError("h^2 + 4f must be squarefree of degree 5 or 6")

    @property
    def model(self):
        return HyperellipticModel.make(self.f, self.h)

    def reduce(self, p):
        return reduce_mod_p(self.model, p)

    def degree_five(self):
        """The odd-characteristic form has degree 5 (rational Weierstrass point at infinity)."""
        return self.model.odd_form().degree == 5


@dataclass
class Local3:
    smooth: bool
    ordinary: bool = None
    distinguished: bool = None
    charpoly: tuple = None
    weierstrass_point: bool = None


@dataclass
class Local2:
    kind: str
    charpoly: tuple = None
    ordinary: bool = None
    frob2_class: str = None


def check_local_at_3(c):
    m = c.reduce(3)
    if not is_smooth_genus2(m):
        return Local3(False)
    s = frobenius_charpoly(m)
    return Local3(True, s.ordinary, s.distinguished, s.charpoly.coeffs,
                  has_rational_weierstrass_point(m))


def check_local_at_2(c, seed=0):
    from .pipelines import classify_f2_model
    m = c.reduce(2)
    if not is_smooth_genus2(m):
        return Local2("model-singular")
    cp, ordinary, label, _, _ = classify_f2_model(m, seed)
    return Local2("good-ordinary" if ordinary else "good-non-ordinary", cp, ordinary, label)


def factor_pattern_at_3(c):
    """Degrees of the factors of f over Q3, plus 1 for a quintic (the point at
    infinity); only for y^2 = f with f squarefree mod 3 and unit leading term."""
    if any(c.h):
        raise CurveError("factor patterns are taken for models y^2 = f")
    F = c.reduce(3).f
    if not is_squarefree(F) or F.degree != len(c.f) - 1:
        raise CurveError("f is not squarefree of full degree mod 3")
    degs = poly_factor_degrees(F)
    if F.degree == 5:
        degs = sorted(degs + [1])
    return tuple(degs)


# -- image heuristic ----------------------------------------------------------

def _primes(B):
    return [p for p in range(2, B + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def _zp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_squarefree(a, l):
    """gcd(a, a') = 1 over F_l for l odd."""
    a = _zp_trim([x % l for x in a])
    d = _zp_trim([i * a[i] % l for i in range(1, len(a))])
    if not d:
        return False
    x, y = a, d
    while y:
        inv = pow(y[-1], l - 2, l)
        x = list(x)
        while len(x) >= len(y):
            c = x[-1] * inv % l
            shift = len(x) - len(y)
            for i, t in enumerate(y):
                x[shift + i] = (x[shift + i] - c * t) % l
            x = _zp_trim(x)
        x, y = y, x
    return len(x) == 1


def _charpoly_odd_prime(D, l):
    """Frobenius charpoly of y^2 = D(x) over F_l (l >= 5) from the counts over
    F_l and F_{l^2}; the quadratic character on F_{l^2} is the Legendre symbol
    of the norm."""
    D = [x % l for x in D]
    leg = lambda a: 0 if a % l == 0 else (1 if pow(a, (l - 1) // 2, l) == 1 else -1)
    n = next(a for a in range(2, l) if leg(a) == -1)
    N1 = sum(1 + leg(sum(c * pow(x, i, l) for i, c in enumerate(D))) for x in range(l))
    N2 = 0
    for a in range(l):
        for b in range(l):
            # D(a + b sqrt(n)) by Horner in F_l[sqrt(n)]
            r, s = 0, 0
            for c in reversed(D):
                r, s = (r * a + s * b * n + c) % l, (r * b + s * a) % l
            N2 += 1 + leg(r * r - n * s * s)
    if len(D) == 7:
        N1 += 1 + leg(D[6])
        N2 += 2
    else:
        N1 += 1
        N2 += 1
    s1 = l + 1 - N1
    s2 = l * l + 1 - N2
    a, b = -s1, (s1 * s1 - s2) // 2
    return (l * l, l * a, b, a, 1)


def frobenius_charpoly_at(c, l):
    """Charpoly at a prime l where the given model is smooth, else None."""
    if l in (2, 3):
        m = c.reduce(l)
        return frobenius_charpoly(m).charpoly.coeffs if is_smooth_genus2(m) else None
    D = list(c.model.odd_form().coeffs)
    Dl = _zp_trim([x % l for x in D])
    if len(Dl) - 1 not in (5, 6) or not _zp_squarefree(Dl, l):
        return None
    return _charpoly_odd_prime(Dl, l)


def heuristic_image_mod3(c, B=40, seed=0):
    """One-sided evidence that the mod-3 image is large.

    Frobenius charpolys mod 3 at good primes l != 3 are collected; the result
    is witnessed-large when some regular semisimple Frobenius has projective
    order 5 or 10 and some l = 2 mod 3 (similitude -1) gives a regular
    semisimple witness of projective order 8.  A heuristic, not a proof.  The scan is
    deterministic; seed is accepted for interface symmetry only."""
    F3 = field_make(3)
    witnesses = []
    for p in _primes(B):
        if p == 3:
            continue
        Q = frobenius_charpoly_at(c, p)
        if Q is None:
            continue
        q3 = Poly(Q).reduce(F3)
        rs = is_squarefree(q3)
        # the companion matrix is conjugate to Frobenius only when rs
        po = sg.mat_order(np.array(companion(Poly(q3.coeffs))) % 3, 3, projective=True) if rs else None
        witnesses.append({"p": p, "charpoly_mod3": list(q3.coeffs), "nu": p % 3,
                          "regular_semisimple": rs, "projective_order": po})
    big = any(w["regular_semisimple"] and w["projective_order"] in (5, 10) for w in witnesses)
    outer = any(w["projective_order"] == 8 and w["nu"] == 2 for w in witnesses)
    return ("witnessed-large" if big and outer else "inconclusive"), witnesses


# -- rule engine ------------------------------------------------------------

@dataclass
class Condition:
    status: str
    evidence: str = ""


@dataclass
class Verdict:
    curve: str
    good_ordinary_at_3: Condition
    distinguished_at_3: Condition
    reduction_at_2: str
    frob2_class: str
    frob2_class_allowed: Condition
    unramified_at_2: Condition
    image_mod3: Condition
    overall: str
    charpoly_at_3: tuple = None
    charpoly_at_2: tuple = None
    witnesses: list = field(default_factory=list)

    def to_dict(self):
        return asdict(self)

    def line(self):
        parts = ["curve=%s" % self.curve, "overall=%s" % self.overall,
                 "reduction_at_2=%s" % self.reduction_at_2,
                 "frob2_class=%s" % (self.frob2_class or "unknown")]
        for name in ("good_ordinary_at_3", "distinguished_at_3", "frob2_class_allowed",
                     "unramified_at_2", "image_mod3"):
            parts.append("%s=%s" % (name, getattr(self, name).status))
        return " ".join(parts)


def _overall(conds, singular_at_2):
    statuses = [x.status for x in conds]
    if "fail" in statuses:
        return "conditions-fail"
    if all(s == "pass" for s in statuses):
        return "applies-by-drew-route" if singular_at_2 else "applies-by-Thm-1.1-route"
    return "insufficient-local-data"


def theorem_applies(c, assumptions=(), heuristic_bound=None, seed=0):
    bad = set(assumptions) - set(ASSUMPTIONS)
    if bad:
        raise ValueError("unknown assumptions: %s" % sorted(bad))
    at3 = check_local_at_3(c)
    at2 = check_local_at_2(c, seed)

    if not at3.smooth:
        good3 = Condition("unknown", "model singular mod 3")
        dist3 = Condition("unknown", "no good model at 3")
    else:
        good3 = Condition("pass" if at3.ordinary else "fail",
                          "ordinary" if at3.ordinary else "non-ordinary")
        if not at3.ordinary:
            dist3 = Condition("unknown", "not ordinary at 3")
        elif c.degree_five():
            # rational Weierstrass point and ordinary at 3 force distinguishedness
            if not at3.distinguished:
                raise AssertionError("quintic model with repeated Frobenius roots at 3")
            dist3 = Condition("pass", "quintic model")
        else:
            dist3 = Condition("pass" if at3.distinguished else "fail",
                              "charpoly squarefree" if at3.distinguished else "charpoly is a square")

    singular2 = at2.kind == "model-singular"
    if singular2:
        if "unramified-at-2" in assumptions:
            unram = Condition("pass", "asserted")
            allowed = Condition("pass", "bad reduction at 2 with unramified mod-3 representation")
        else:
            unram = Condition("unknown", "model singular mod 2")
            allowed = Condition("unknown", "class at 2 not computable")
    else:
        unram = Condition("pass", "smooth model mod 2")
        ok = at2.frob2_class not in EXCLUDED_AT_2
        allowed = Condition("pass" if ok else "fail", "class %s" % at2.frob2_class)

    witnesses = []
    if "image-large" in assumptions:
        image = Condition("pass", "asserted")
    elif heuristic_bound:
        res, witnesses = heuristic_image_mod3(c, heuristic_bound, seed)
        image = Condition("unknown", "heuristic: %s" % res)
    else:
        image = Condition("unknown", "not asserted")

    overall = _overall([good3, dist3, allowed, unram, image], singular2)
    return Verdict(c.label or _coeff_label(c), good3, dist3, at2.kind, at2.frob2_class,
                   allowed, unram, image, overall, at3.charpoly, at2.charpoly, witnesses)


def _coeff_label(c):
    return "[%s],[%s]" % (",".join(map(str, c.f)), ",".join(map(str, c.h)))
