"""Pinned curves and tables used as a regression corpus.

Polynomials are coefficient lists, lowest degree first.  Models over Q are
(f, h) with y^2 + h(x) y = f(x).
"""

# Frobenius charpolys at 2 grouped by their reduction mod 3, with the outer
# classes of PGSp4(F3) allowed for each reduction.
F2_BUCKETS = [
    ((1, 0, 2, 0, 1), ("2C", "6G", "6H"),
     [(4, 0, -1, 0, 1), (4, -6, 5, -3, 1), (4, 6, 5, 3, 1)]),
    ((1, 0, 1, 0, 1), ("2D", "6I"), [(4, 0, 1, 0, 1)]),
    ((1, 2, 2, 1, 1), ("4C", "12C"), [(4, -4, 5, -2, 1), (4, 2, -1, 1, 1)]),
    ((1, 1, 2, 2, 1), ("4C", "12C"), [(4, 4, 5, 2, 1), (4, -2, -1, -1, 1)]),
    ((1, 0, 0, 0, 1), ("4D",), [(4, 0, -3, 0, 1), (4, 0, 3, 0, 1)]),
    ((1, 2, 1, 1, 1), ("8A",), [(4, 2, 1, 1, 1)]),
    ((1, 1, 1, 2, 1), ("8A",), [(4, -2, 1, -1, 1)]),
    ((1, 2, 0, 1, 1), ("10A",), [(4, -4, 3, -2, 1), (4, 2, 3, 1, 1)]),
    ((1, 1, 0, 2, 1), ("10A",), [(4, 4, 3, 2, 1), (4, -2, 3, -1, 1)]),
]

F2_TOTALS = (2048, 768, 384)
F2_ORDINARY = {"6G": 32, "6H": 16, "6I": 48, "8A": 96, "10A": 192}
F2_NON_ORDINARY = {"6G": 48, "12C": 144, "4D": 48, "8A": 48, "10A": 96}

# Ordinary charpolys at 3 for y^2 = f(x): (charpoly, has a curve with a
# rational Weierstrass point, has any curve, number of curves).
F3_TABLE = [
    ((9, 0, -5, 0, 1), False, False, 0),
    ((9, 0, -2, 0, 1), True, True, 30),
    ((9, 0, 1, 0, 1), False, True, 24),
    ((9, 0, 4, 0, 1), True, True, 24),
    ((9, -9, 7, -3, 1), True, True, 24),
    ((9, 9, 7, 3, 1), True, True, 24),
    ((9, 0, -4, 0, 1), False, False, 0),
    ((9, 0, 5, 0, 1), False, True, 24),
    ((9, 0, 2, 0, 1), True, True, 36),
    ((9, -9, 8, -3, 1), False, False, 0),
    ((9, 9, 8, 3, 1), False, False, 0),
    ((9, 0, -1, 0, 1), False, True, 24),
    ((9, -9, 5, -3, 1), True, True, 24),
    ((9, 9, 5, 3, 1), True, True, 24),
    ((9, -6, 7, -2, 1), False, True, 4),
    ((9, 3, 4, 1, 1), True, True, 24),
    ((9, 12, 10, 4, 1), False, True, 1),
    ((9, -6, 1, -2, 1), False, True, 8),
    ((9, -6, 4, -2, 1), True, True, 48),
    ((9, 3, -2, 1, 1), True, True, 8),
    ((9, 3, 1, 1, 1), True, True, 48),
    ((9, -12, 10, -4, 1), False, True, 1),
    ((9, -3, 4, -1, 1), True, True, 24),
    ((9, 6, 7, 2, 1), False, True, 4),
    ((9, -3, -2, -1, 1), True, True, 8),
    ((9, -3, 1, -1, 1), True, True, 48),
    ((9, 6, 1, 2, 1), False, True, 8),
    ((9, 6, 4, 2, 1), True, True, 48),
    ((9, -12, 8, -4, 1), False, True, 6),
    ((9, -3, -1, -1, 1), True, True, 24),
    ((9, -3, 2, -1, 1), True, True, 48),
    ((9, -3, 5, -1, 1), True, True, 24),
    ((9, 6, 2, 2, 1), True, True, 36),
    ((9, 6, 5, 2, 1), False, True, 24),
    ((9, -6, 2, -2, 1), True, True, 36),
    ((9, -6, 5, -2, 1), False, True, 24),
    ((9, 3, -1, 1, 1), True, True, 24),
    ((9, 3, 2, 1, 1), True, True, 48),
    ((9, 3, 5, 1, 1), True, True, 24),
    ((9, 12, 8, 4, 1), False, True, 6),
]

F3_TOTALS = (2187, 1296, 864, 10)
F3_NON_DISTINGUISHED = {
    (9, -6, 7, -2, 1): 4, (9, 6, 7, 2, 1): 4,
    (9, 12, 10, 4, 1): 1, (9, -12, 10, -4, 1): 1,
}

DENSITY = (5551, 46656)

# Curves with good reduction at 2 and their Frobenius class there.
CURVES_AT_2 = {
    "C1": dict(f=[0, 1, 1, 0, 0, 0, 0], h=[1, 0, 0, 1],
               charpoly=(4, 4, 3, 2, 1), frob2_class="10A", conductor=249),
    "C2": dict(f=[-1, 1, 2, 1, 0, -1], h=[1, 0, 0, 1],
               charpoly=(4, 0, 1, 0, 1), frob2_class="6I", conductor=975),
    "C3": dict(f=[-1, -8, -16, 1, 2, 1], h=[0, 1, 1],
               charpoly=(4, 0, -1, 0, 1), frob2_class="6H", conductor=1947),
}

# Quintic models y^2 = f with good ordinary reduction at 3: (f, charpoly at 3).
BELOW_THREE = [
    ([1, 2, 0, 0, 0, 1], (9, 9, 7, 3, 1)),
    ([1, 1, 0, 1, 0, 1], (9, 9, 5, 3, 1)),
    ([0, 1, 1, 0, 0, 1], (9, -3, 2, -1, 1)),
    ([1, 0, 1, 0, 1, 1], (9, 3, 1, 1, 1)),
]

# y^2 = f with good reduction at 3: (f, factorization pattern over Q3 with
# the point at infinity counted for quintics, conductor).
LOCAL_AT_3 = [
    ([0, 4, 1, 64, 32, 4], (1, 1, 1, 1, 2), 1051),
    ([0, 4, -7, 0, 0, 4], (1, 1, 1, 3), 709),
    ([1, -2, 3, 6, -11, 4], (1, 1, 2, 2), 1415),
    ([28, 64, 1, -32, -6, 4, 1], (1, 1, 4), 389),
    ([-8, -4, 0, 4, 5, 2, 1], (1, 2, 3), 847),
    ([1, 2, -1, 0, 3, 2, 1], (1, 5), 349),
    ([1, 0, -8, 6, 4, 0, 1], (2, 2, 2), 7165),
    ([1, 2, 5, 2, 2, 0, 1], (2, 4), 353),
    ([1, -4, 10, -10, 5, 2, 1], (3, 3), 4889),
    ([1, -2, 1, 2, -6, 4, 1], (6,), 1343),
]

# Smooth model over Z_2 whose Jacobian has 14 points over F_2.
Z14_MODEL = dict(f=[0, 2, 4, 0, -3], h=[1, 0, 0, 1], jac_order=14)

# Good non-ordinary reduction at 2 with Frobenius class 6G (conductor 797).
NON_ORDINARY_Y = dict(f=[0, 0, 0, 1, -1, 1], h=[1], charpoly=(4, 0, 2, 0, 1),
                      frob2_class="6G", conductor=797)

# Rational Weierstrass point at infinity, singular model mod 2.
WEIERSTRASS_SINGULAR_AT_2 = dict(f=[8, -2, -43, 47, -4, 1], h=[-1, -1, -1])

# Bad reduction at 2, ordinary and distinguished at 3 (conductor 1982).
BAD_AT_2 = dict(f=[0, 0, 1, -1, 1, -1], h=[1, 1], conductor=1982)
