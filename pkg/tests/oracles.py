"""Independent reference implementations used only by the tests.

The spin module is rebuilt from weights: a sign vector ``s`` has weight
``s / 2`` in the epsilon basis, simple roots are the usual D_6 roots plus
``alpha_0 = -e1 - e2``, and ``f_k`` subtracts ``alpha_k`` whenever the result
is again a sign vector. Nothing here imports the package's spin module.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

ROOTS = {
    0: (-1, -1, 0, 0, 0, 0),
    1: (1, -1, 0, 0, 0, 0),
    2: (0, 1, -1, 0, 0, 0),
    3: (0, 0, 1, -1, 0, 0),
    4: (0, 0, 0, 1, -1, 0),
    5: (0, 0, 0, 0, 1, -1),
    6: (0, 0, 0, 0, 1, 1),
}

SIGNS = [s for s in itertools.product((1, -1), repeat=6) if s.count(-1) % 2 == 0]


def pairing(k, s):
    return sum(a * b for a, b in zip(ROOTS[k], s)) // 2


def lower(k, s):
    t = tuple(si - 2 * ri for si, ri in zip(s, ROOTS[k]))
    return t if t in SIGNS else None


def raise_(k, s):
    t = tuple(si + 2 * ri for si, ri in zip(s, ROOTS[k]))
    return t if t in SIGNS else None


def sigma(s):
    return tuple(-x for x in reversed(s))


def to_str(s):
    return "".join("+" if x > 0 else "-" for x in s)


def from_str(text):
    return tuple(1 if ch == "+" else -1 for ch in text)


def y_factor(k, c, vec):
    """``Y_k(c) = (1 + f_k / c) c^{h_k}`` on a dict ``sign tuple -> scalar``."""
    out = {}
    for s, r in vec.items():
        scaled = r * c ** pairing(k, s)
        out[s] = out.get(s, 0) + scaled
        t = lower(k, s)
        if t is not None:
            out[t] = out.get(t, 0) + scaled / c
    return out


def build(word, params, anchor):
    vec = {from_str(anchor): 1}
    for k, c in reversed(list(zip(word, params))):
        vec = y_factor(k, c, vec)
    return {to_str(s): r for s, r in vec.items() if r != 0}


V1_WORD = (6, 4, 3, 2, 5, 4, 3, 6, 4, 5, 1, 2, 3, 4, 6)
V2_WORD = (5, 4, 3, 2, 6, 4, 3, 5, 4, 6, 0, 2, 3, 4, 5)
V1_NAMES = ["x6_3", "x4_4", "x3_3", "x2_2", "x5_2", "x4_3", "x3_2", "x6_2",
            "x4_2", "x5_1", "x1_1", "x2_1", "x3_1", "x4_1", "x6_1"]
V2_NAMES = ["y5_3", "y4_4", "y3_3", "y2_2", "y6_2", "y4_3", "y3_2", "y5_2",
            "y4_2", "y6_1", "y0_1", "y2_1", "y3_1", "y4_1", "y5_1"]


def symbolic_v1():
    xs = sympy.symbols(V1_NAMES, positive=True)
    return dict(zip(V1_NAMES, xs)), build(V1_WORD, xs, "++++++")


def symbolic_v2():
    ys = sympy.symbols(V2_NAMES, positive=True)
    return dict(zip(V2_NAMES, ys)), build(V2_WORD, ys, "-++++-")


def numeric_v1(values):
    return build(V1_WORD, [Fraction(v) for v in values], "++++++")


def numeric_v2(values):
    return build(V2_WORD, [Fraction(v) for v in values], "-++++-")
