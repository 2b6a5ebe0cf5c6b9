"""
Recorded matrices of the certificates for cases 1 and 5, kept verbatim.

Used both as the fixed hyperbolic bases for replay and as reference values
to diff the recomputed pipeline against.
"""

from fractions import Fraction as F

from .exact_linalg import Matrix


def _m(rows):
    return Matrix([[F(e) for e in row] for row in rows])


def _elem(n, entries):
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for (i, j), v in entries.items():
        rows[i][j] = v
    return _m(rows)


CASE1 = {
    "A": _m([[0, 0, 0, 0, 1], [1, 0, 0, 0, -5], [0, 1, 0, 0, 10],
             [0, 0, 1, 0, -10], [0, 0, 0, 1, 5]]),
    "B": _m([[0, 0, 0, 0, -1], [1, 0, 0, 0, 1], [0, 1, 0, 0, -1],
             [0, 0, 1, 0, -1], [0, 0, 0, 1, 1]]),
    "C": _m([[1, 0, 0, 0, -4], [0, 1, 0, 0, 9], [0, 0, 1, 0, -11],
             [0, 0, 0, 1, 6], [0, 0, 0, 0, -1]]),
    "v": (-4, 9, -11, 6, -2),
    "orbit": [(-4, 9, -11, 6, -2), (2, -6, 11, -9, 4), (-4, 6, -10, 7, -5),
              (5, -9, 11, -5, 2), (-2, 7, -11, 9, -3)],
    "M_Q": _m([[-2, 4, -5, 2, -3], [4, -2, 4, -5, 2], [-5, 4, -2, 4, -5],
               [2, -5, 4, -2, 4], [-3, 2, -5, 4, -2]]),
    "T": _m([[-4, 2, -4, 5, -2], [9, -6, 6, -9, 7], [-11, 11, -10, 11, -11],
             [6, -9, 7, -5, 9], [-2, 4, -5, 2, -3]]),
    "eps1": (1, 0, 0, 1, 0),
    "eps1*": (-1, 7, -11, 10, -3),
    "u1": (1, 13, -21, 23, -8),
    "u2": (-1, 9, -11, 9, -2),
    "u3": (-1, -12, 21, -23, 9),
    "eps2": (-1, -2, 5, -7, 3),
    "eps2*": (0, 1, 0, 0, 1),
    "u": (0, 8, -16, 16, -8),
    # coefficients of the named vectors in the B-orbit basis v, Bv, ..., B^4 v
    "orbit_coords": {
        "eps1": (1, 0, 0, 1, 0),
        "eps1*": (1, 0, 0, 1, 1),
        "u1": (7, 0, 1, 7, 1),
        "u2": (4, 0, 0, 3, 0),
        "u3": (-7, 1, -1, -7, 0),
        "eps2": (F(-3, 2), 0, F(-1, 2), -2, F(-1, 2)),
        "eps2*": (0, 1, 0, 0, 1),
    },
    "L": _m([[1, 1, -1, -1, -1], [0, 13, 9, -12, 7], [0, -21, -11, 21, -11],
             [1, 23, 9, -23, 10], [0, -8, -2, 9, -3]]),
    "LtNL": _m([[0, 0, 0, 0, 1], [0, -14, -8, 13, 0], [0, -8, -2, 9, 0],
                [0, 13, 9, -12, 0], [1, 0, 0, 0, 0]]),
    "K": _m([[1, -1, 0, 0, -1], [0, -2, 8, 1, 7], [0, 5, -16, 0, -11],
             [1, -7, 16, 0, 10], [0, 3, -8, 1, -3]]),
    "lambdas": (F(1), F(1), F(-8)),
    "x": _m([[0, -1, 0, 0, 2], [0, 0, 0, 0, 1], [0, 1, -1, 0, -1],
             [1, 4, -8, 2, -4], [0, -4, 8, -1, 4]]),
    "y": _m([[0, -4, 8, -1, 5], [0, 0, 0, 0, 1], [0, 1, -1, 0, -1],
             [1, 1, 0, 1, -1], [0, -1, 0, 0, 1]]),
    "words": {
        "c11": _elem(5, {(3, 0): 2, (4, 1): -2}),
        "c14": _elem(5, {(2, 1): 8, (3, 1): 256, (3, 2): 64}),
        "c17": _elem(5, {(2, 0): -16, (4, 0): 1024, (4, 2): -128}),
        "c19": _elem(5, {(1, 0): 16, (4, 3): -16}),
    },
    "side": "negative",
}

CASE5 = {
    "A": CASE1["A"],
    "B": _m([[0, 0, 0, 0, -1], [1, 0, 0, 0, -1], [0, 1, 0, 0, -2],
             [0, 0, 1, 0, -2], [0, 0, 0, 1, -1]]),
    "C": _m([[1, 0, 0, 0, -6], [0, 1, 0, 0, 8], [0, 0, 1, 0, -12],
             [0, 0, 0, 1, 4], [0, 0, 0, 0, -1]]),
    # last column of C minus e_5
    "v": (-6, 8, -12, 4, -2),
    "M_Q": _m([[-2, 6, -14, 14, -2], [6, -2, 6, -14, 14], [-14, 6, -2, 6, -14],
               [14, -14, 6, -2, 6], [-2, 14, -14, 6, -2]]),
    "T": _m([[-6, 2, -6, 14, -14], [8, -4, -4, 8, 0], [-12, 12, -16, 24, -20],
             [4, -8, 0, 12, -4], [-2, 6, -14, 14, -2]]),
    "K": _m([[8, 0, -32, -5, F(15, 8)], [8, 4, 0, F(-5, 4), F(9, 8)],
             [8, 4, -32, F(-25, 4), F(25, 8)], [8, 4, 0, F(-9, 4), F(13, 8)],
             [0, 4, 0, F(-1, 4), F(7, 4)]]),
    "lambdas": (F(1), F(1), F(-32)),
    "x": _m([[0, -8, -4, F(-1, 32), F(-51, 16)], [2, 20, 0, F(-7, 8), F(35, 4)],
             [0, -4, -1, 0, F(-7, 4)], [0, 0, 0, 0, F(1, 2)], [0, -32, 0, 0, -14]]),
    "y": _m([[0, F(-1, 2), -4, F(-1, 2), F(3, 32)], [2, 0, 0, F(3, 8), 0],
             [0, 0, -1, F(-1, 4), 0], [0, 0, 0, 0, F(1, 2)], [0, 0, 0, -2, 0]]),
    "words": {
        "c2": _elem(5, {(0, 3): -1, (1, 4): 1}),
        "c10": _elem(5, {(0, 2): -128, (0, 4): 256, (2, 4): -4}),
        "c11": _elem(5, {(0, 1): -16, (3, 4): 16}),
        "c17": _elem(5, {(1, 2): 8192, (1, 3): 1048576, (2, 3): 256}),
    },
    "side": "positive",
}

GOLDEN = {1: CASE1, 5: CASE5}
