"""Positive geometric crystal for D_6^(1) at the spin node.

Two 15-parameter families of vectors in the spin module are built from
fixed words:

* ``V1(x)``, word ``6 4 3 2 5 4 3 6 4 5 1 2 3 4 6`` on ``++++++``
  (crystal for the D_6 subalgebra on nodes 1..6);
* ``V2(y)``, word ``5 4 3 2 6 4 3 5 4 6 0 2 3 4 5`` on ``-++++-``
  (crystal for the D_6 subalgebra on nodes 0, 2..6).

``sigma_bar`` maps ``V1`` to ``V2`` by solving ``V2(y) = a(x) sigma(V1(x))``
and the affine action ``e_0`` on ``V1`` is ``sigma_bar^-1 . e_6 . sigma_bar``,
which :func:`act_e0_v1` evaluates in closed form through the K-family.

The closed forms below are transcribed term for term and are deliberately
left unsimplified; the verifier checks them against the word engine in
:mod:`geomcrystal.unipotent` and against the defining vector identity.
Parameters are called ``x{m}_{l}`` for ``x_m^(l)``.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Mapping

from .exact_arith import DomainError, as_rational, format_rational, parse_rational
from .spin import HIGHEST_V1, HIGHEST_V2, SpinVector, apply_word
from .unipotent import PRESETS, V1_WORD, V2_WORD, generic_act_e, generic_epsilon, generic_gamma

__all__ = [
    "PointV1",
    "PointV2",
    "KFamily",
    "V1_NODES",
    "V2_NODES",
    "build_V1",
    "build_V2",
    "act_e_v1",
    "gamma_v1",
    "epsilon_v1",
    "act_e_v2",
    "gamma_v2",
    "epsilon_v2",
    "sigma_bar",
    "sigma_bar_inv",
    "k_family",
    "act_e0_v1",
    "act_e0_via_sigma",
]

V1_NODES = (0, 1, 2, 3, 4, 5, 6)
V2_NODES = (0, 2, 3, 4, 5, 6)


class _NamedPoint:
    """Shared behaviour for the two named 15-parameter points."""

    LETTER: ClassVar[str]
    WORD: ClassVar[tuple[int, ...]]

    def __post_init__(self):
        for f in dataclasses.fields(self):
            r = as_rational(getattr(self, f.name))
            if r == 0:
                raise DomainError(f"component {f.name} is zero")
            object.__setattr__(self, f.name, r)

    @classmethod
    def keys(cls) -> tuple[str, ...]:
        """JSON keys ``"m_l"`` in word order."""
        return tuple(f.name[1:] for f in dataclasses.fields(cls))

    @classmethod
    def from_values(cls, values):
        return cls(*values)

    @classmethod
    def ones(cls):
        return cls(*([Fraction(1)] * 15))

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(getattr(self, f.name) for f in dataclasses.fields(self))

    def __iter__(self):
        return iter(self.values)

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def is_positive(self) -> bool:
        return all(v > 0 for v in self.values)

    def to_json(self) -> dict:
        return {self.LETTER: {k: format_rational(v) for k, v in zip(self.keys(), self.values)}}

    @classmethod
    def from_json(cls, obj: Mapping):
        """Parse ``{"x": {"6_3": "1", ...}}`` or the shorthand ``{"all": "r"}``."""
        if not isinstance(obj, Mapping):
            raise ValueError("a point must be a JSON object")
        if set(obj) == {"all"}:
            r = parse_rational(str(obj["all"]))
            return cls(*([r] * 15))
        if cls.LETTER not in obj or not isinstance(obj[cls.LETTER], Mapping):
            raise ValueError(f'expected an object under key "{cls.LETTER}"')
        comps = obj[cls.LETTER]
        missing = [k for k in cls.keys() if k not in comps]
        extra = [k for k in comps if k not in cls.keys()]
        if missing or extra:
            raise ValueError(f"bad component keys: missing={missing} unexpected={extra}")
        return cls(*(parse_rational(str(comps[k])) for k in cls.keys()))


@dataclass(frozen=True)
class PointV1(_NamedPoint):
    x6_3: Fraction
    x4_4: Fraction
    x3_3: Fraction
    x2_2: Fraction
    x5_2: Fraction
    x4_3: Fraction
    x3_2: Fraction
    x6_2: Fraction
    x4_2: Fraction
    x5_1: Fraction
    x1_1: Fraction
    x2_1: Fraction
    x3_1: Fraction
    x4_1: Fraction
    x6_1: Fraction

    LETTER: ClassVar[str] = "x"
    WORD: ClassVar[tuple[int, ...]] = V1_WORD


@dataclass(frozen=True)
class PointV2(_NamedPoint):
    y5_3: Fraction
    y4_4: Fraction
    y3_3: Fraction
    y2_2: Fraction
    y6_2: Fraction
    y4_3: Fraction
    y3_2: Fraction
    y5_2: Fraction
    y4_2: Fraction
    y6_1: Fraction
    y0_1: Fraction
    y2_1: Fraction
    y3_1: Fraction
    y4_1: Fraction
    y5_1: Fraction

    LETTER: ClassVar[str] = "y"
    WORD: ClassVar[tuple[int, ...]] = V2_WORD


def _div(num: Fraction, den: Fraction, what: str) -> Fraction:
    if den == 0:
        raise DomainError(f"vanishing denominator in {what}")
    return num / den


def _scalar(c) -> Fraction:
    c = as_rational(c)
    if c == 0:
        raise DomainError("the action parameter c must be nonzero")
    return c


def _check_node(k: int, allowed: tuple[int, ...], variety: str) -> None:
    if k not in allowed:
        raise ValueError(f"node {k!r} is not valid for {variety}; expected one of {allowed}")


# -- vectors -----------------------------------------------------------------


def build_V1(p: PointV1) -> SpinVector:
    return apply_word(V1_WORD, p.values, HIGHEST_V1)


def build_V2(q: PointV2) -> SpinVector:
    return apply_word(V2_WORD, q.values, HIGHEST_V2)


# -- closed forms on V1, nodes 1..6 -----------------------------------------


def _ratio3(c, a, b, d, mask_num, mask_den, what):
    """``(sum of c-tagged terms) / (sum of c-tagged terms)`` for a 3-term pattern."""
    terms = (a, b, d)
    num = sum(((c if m else 1) * t for m, t in zip(mask_num, terms)), Fraction(0))
    den = sum(((c if m else 1) * t for m, t in zip(mask_den, terms)), Fraction(0))
    return _div(num, den, what)


def _four_multipliers(c, t1, t2, t3, t4, what):
    """Multipliers for a node that occurs four times in the word."""
    m1 = _div(c * t1 + t2 + t3 + t4, t1 + t2 + t3 + t4, what)
    m2 = _div(c * t1 + c * t2 + t3 + t4, c * t1 + t2 + t3 + t4, what)
    m3 = _div(c * t1 + c * t2 + c * t3 + t4, c * t1 + c * t2 + t3 + t4, what)
    return m1, m2, m3


def act_e_v1(k: int, c, p: PointV1) -> PointV1:
    """``e_k^c`` on ``V1(x)`` for ``k = 0..6`` (``k = 0`` dispatches to :func:`act_e0_v1`)."""
    _check_node(k, V1_NODES, "V1")
    c = _scalar(c)
    if k == 0:
        return act_e0_v1(c, p)
    x = p
    if k == 1:
        return x.replace(x1_1=c * x.x1_1)
    if k == 2:
        c2 = _div(
            c * x.x2_2 * x.x2_1 + x.x3_2 * x.x1_1,
            x.x2_2 * x.x2_1 + x.x3_2 * x.x1_1,
            "c_2",
        )
        return x.replace(x2_2=c2 * x.x2_2, x2_1=c / c2 * x.x2_1)
    if k == 3:
        a = x.x3_3 * x.x3_2**2 * x.x3_1
        b = x.x4_3 * x.x3_2 * x.x3_1 * x.x2_2
        d = x.x4_3 * x.x4_2 * x.x2_2 * x.x2_1
        c31 = _ratio3(c, a, b, d, (1, 0, 0), (0, 0, 0), "c_{3_1}")
        c32 = _ratio3(c, a, b, d, (1, 1, 0), (1, 0, 0), "c_{3_2}")
        return x.replace(
            x3_3=c31 * x.x3_3, x3_2=c32 * x.x3_2, x3_1=c / (c31 * c32) * x.x3_1
        )
    if k == 4:
        t1 = x.x4_4 * x.x4_3**2 * x.x4_2**2 * x.x4_1
        t2 = x.x5_2 * x.x4_3 * x.x4_2**2 * x.x4_1 * x.x3_3
        t3 = x.x6_2 * x.x5_2 * x.x4_2 * x.x4_1 * x.x3_3 * x.x3_2
        t4 = x.x6_2 * x.x5_2 * x.x5_1 * x.x3_3 * x.x3_2 * x.x3_1
        c41, c42, c43 = _four_multipliers(c, t1, t2, t3, t4, "c_{4_i}")
        return x.replace(
            x4_4=c41 * x.x4_4,
            x4_3=c42 * x.x4_3,
            x4_2=c43 * x.x4_2,
            x4_1=c / (c41 * c42 * c43) * x.x4_1,
        )
    if k == 5:
        c5 = _div(
            c * x.x5_2 * x.x5_1 + x.x4_3 * x.x4_2,
            x.x5_2 * x.x5_1 + x.x4_3 * x.x4_2,
            "c_5",
        )
        return x.replace(x5_2=c5 * x.x5_2, x5_1=c / c5 * x.x5_1)
    # k == 6
    a = x.x6_3 * x.x6_2**2 * x.x6_1
    b = x.x6_2 * x.x6_1 * x.x4_4 * x.x4_3
    d = x.x4_4 * x.x4_3 * x.x4_2 * x.x4_1
    c61 = _ratio3(c, a, b, d, (1, 0, 0), (0, 0, 0), "c_{6_1}")
    c62 = _ratio3(c, a, b, d, (1, 1, 0), (1, 0, 0), "c_{6_2}")
    return x.replace(x6_3=c61 * x.x6_3, x6_2=c62 * x.x6_2, x6_1=c / (c61 * c62) * x.x6_1)


def gamma_v1(k: int, p: PointV1) -> Fraction:
    _check_node(k, V1_NODES, "V1")
    x = p
    if k == 0:
        return 1 / (x.x2_2 * x.x2_1)
    if k == 1:
        return x.x1_1**2 / (x.x2_2 * x.x2_1)
    if k == 2:
        return (x.x2_2 * x.x2_1) ** 2 / (x.x3_3 * x.x3_2 * x.x3_1 * x.x1_1)
    if k == 3:
        return (x.x3_3 * x.x3_2 * x.x3_1) ** 2 / (
            x.x4_4 * x.x4_3 * x.x4_2 * x.x4_1 * x.x2_2 * x.x2_1
        )
    if k == 4:
        return (x.x4_4 * x.x4_3 * x.x4_2 * x.x4_1) ** 2 / (
            x.x6_3 * x.x6_2 * x.x6_1 * x.x5_2 * x.x5_1 * x.x3_3 * x.x3_2 * x.x3_1
        )
    if k == 5:
        return (x.x5_2 * x.x5_1) ** 2 / (x.x4_4 * x.x4_3 * x.x4_2 * x.x4_1)
    return (x.x6_3 * x.x6_2 * x.x6_1) ** 2 / (x.x4_4 * x.x4_3 * x.x4_2 * x.x4_1)


def epsilon_v1(k: int, p: PointV1) -> Fraction:
    _check_node(k, V1_NODES, "V1")
    x = p
    if k == 0:
        return k_family(p, 1).K
    if k == 1:
        return x.x2_2 / x.x1_1
    if k == 2:
        return x.x3_3 / x.x2_2 * (1 + x.x3_2 * x.x1_1 / (x.x2_2 * x.x2_1))
    if k == 3:
        return x.x4_4 / x.x3_3 * (
            1
            + x.x4_3 * x.x2_2 / (x.x3_3 * x.x3_2)
            + x.x4_3 * x.x4_2 * x.x2_2 * x.x2_1 / (x.x3_3 * x.x3_2**2 * x.x3_1)
        )
    if k == 4:
        return x.x6_3 / x.x4_4 * (
            1
            + x.x5_2 * x.x3_3 / (x.x4_4 * x.x4_3)
            + x.x6_2 * x.x5_2 * x.x3_3 * x.x3_2 / (x.x4_4 * x.x4_3**2 * x.x4_2)
            + x.x6_2 * x.x5_2 * x.x5_1 * x.x3_3 * x.x3_2 * x.x3_1
            / (x.x4_4 * x.x4_3**2 * x.x4_2**2 * x.x4_1)
        )
    if k == 5:
        return x.x4_4 / x.x5_2 * (1 + x.x4_3 * x.x4_2 / (x.x5_2 * x.x5_1))
    return 1 / x.x6_3 * (
        1
        + x.x4_4 * x.x4_3 / (x.x6_3 * x.x6_2)
        + x.x4_4 * x.x4_3 * x.x4_2 * x.x4_1 / (x.x6_3 * x.x6_2**2 * x.x6_1)
    )


# -- closed forms on V2, nodes 0, 2..6 --------------------------------------


def act_e_v2(k: int, c, q: PointV2) -> PointV2:
    _check_node(k, V2_NODES, "V2")
    c = _scalar(c)
    y = q
    if k == 0:
        return y.replace(y0_1=c * y.y0_1)
    if k == 2:
        c2 = _div(
            c * y.y2_2 * y.y2_1 + y.y3_2 * y.y0_1,
            y.y2_2 * y.y2_1 + y.y3_2 * y.y0_1,
            "bar c_2",
        )
        return y.replace(y2_2=c2 * y.y2_2, y2_1=c / c2 * y.y2_1)
    if k == 3:
        a = y.y3_3 * y.y3_2**2 * y.y3_1
        b = y.y4_3 * y.y3_2 * y.y3_1 * y.y2_2
        d = y.y4_3 * y.y4_2 * y.y2_2 * y.y2_1
        c31 = _ratio3(c, a, b, d, (1, 0, 0), (0, 0, 0), "bar c_{3_1}")
        c32 = _ratio3(c, a, b, d, (1, 1, 0), (1, 0, 0), "bar c_{3_2}")
        return y.replace(
            y3_3=c31 * y.y3_3, y3_2=c32 * y.y3_2, y3_1=c / (c31 * c32) * y.y3_1
        )
    if k == 4:
        t1 = y.y4_4 * y.y4_3**2 * y.y4_2**2 * y.y4_1
        t2 = y.y6_2 * y.y4_3 * y.y4_2**2 * y.y4_1 * y.y3_3
        t3 = y.y6_2 * y.y5_2 * y.y4_2 * y.y4_1 * y.y3_3 * y.y3_2
        t4 = y.y6_2 * y.y6_1 * y.y5_2 * y.y3_3 * y.y3_2 * y.y3_1
        c41, c42, c43 = _four_multipliers(c, t1, t2, t3, t4, "bar c_{4_i}")
        return y.replace(
            y4_4=c41 * y.y4_4,
            y4_3=c42 * y.y4_3,
            y4_2=c43 * y.y4_2,
            y4_1=c / (c41 * c42 * c43) * y.y4_1,
        )
    if k == 5:
        a = y.y5_3 * y.y5_2**2 * y.y5_1
        b = y.y5_2 * y.y5_1 * y.y4_4 * y.y4_3
        d = y.y4_4 * y.y4_3 * y.y4_2 * y.y4_1
        c51 = _ratio3(c, a, b, d, (1, 0, 0), (0, 0, 0), "bar c_{5_1}")
        c52 = _ratio3(c, a, b, d, (1, 1, 0), (1, 0, 0), "bar c_{5_2}")
        return y.replace(
            y5_3=c51 * y.y5_3, y5_2=c52 * y.y5_2, y5_1=c / (c51 * c52) * y.y5_1
        )
    # k == 6
    c6 = _div(
        c * y.y6_2 * y.y6_1 + y.y4_3 * y.y4_2,
        y.y6_2 * y.y6_1 + y.y4_3 * y.y4_2,
        "bar c_6",
    )
    return y.replace(y6_2=c6 * y.y6_2, y6_1=c / c6 * y.y6_1)


def gamma_v2(k: int, q: PointV2) -> Fraction:
    _check_node(k, V2_NODES, "V2")
    y = q
    if k == 0:
        return y.y0_1**2 / (y.y2_2 * y.y2_1)
    if k == 2:
        return (y.y2_2 * y.y2_1) ** 2 / (y.y3_3 * y.y3_2 * y.y3_1 * y.y0_1)
    if k == 3:
        return (y.y3_3 * y.y3_2 * y.y3_1) ** 2 / (
            y.y4_4 * y.y4_3 * y.y4_2 * y.y4_1 * y.y2_2 * y.y2_1
        )
    if k == 4:
        return (y.y4_4 * y.y4_3 * y.y4_2 * y.y4_1) ** 2 / (
            y.y6_2 * y.y6_1 * y.y5_3 * y.y5_2 * y.y5_1 * y.y3_3 * y.y3_2 * y.y3_1
        )
    if k == 5:
        return (y.y5_3 * y.y5_2 * y.y5_1) ** 2 / (y.y4_4 * y.y4_3 * y.y4_2 * y.y4_1)
    return (y.y6_2 * y.y6_1) ** 2 / (y.y4_4 * y.y4_3 * y.y4_2 * y.y4_1)


def epsilon_v2(k: int, q: PointV2) -> Fraction:
    _check_node(k, V2_NODES, "V2")
    y = q
    if k == 0:
        return y.y2_2 / y.y0_1
    if k == 2:
        return y.y3_3 / y.y2_2 * (1 + y.y3_2 * y.y0_1 / (y.y2_2 * y.y2_1))
    if k == 3:
        return y.y4_4 / y.y3_3 * (
            1
            + y.y4_3 * y.y2_2 / (y.y3_3 * y.y3_2)
            + y.y4_3 * y.y4_2 * y.y2_2 * y.y2_1 / (y.y3_3 * y.y3_2**2 * y.y3_1)
        )
    if k == 4:
        return y.y5_3 / y.y4_4 * (
            1
            + y.y6_2 * y.y3_3 / (y.y4_4 * y.y4_3)
            + y.y6_2 * y.y5_2 * y.y3_3 * y.y3_2 / (y.y4_4 * y.y4_3**2 * y.y4_2)
            + y.y6_2 * y.y6_1 * y.y5_2 * y.y3_3 * y.y3_2 * y.y3_1
            / (y.y4_4 * y.y4_3**2 * y.y4_2**2 * y.y4_1)
        )
    if k == 5:
        return 1 / y.y5_3 * (
            1
            + y.y4_4 * y.y4_3 / (y.y5_3 * y.y5_2)
            + y.y4_4 * y.y4_3 * y.y4_2 * y.y4_1 / (y.y5_3 * y.y5_2**2 * y.y5_1)
        )
    return y.y4_4 / y.y6_2 * (1 + y.y4_3 * y.y4_2 / (y.y6_2 * y.y6_1))


# -- word-engine counterparts -------------------------------------------------


def generic_act_e_v1(k: int, c, p: PointV1) -> PointV1:
    return PointV1.from_values(generic_act_e(PRESETS["d6spin-v1"], p.values, k, c))


def generic_gamma_v1(k: int, p: PointV1) -> Fraction:
    return generic_gamma(PRESETS["d6spin-v1"], p.values, k)


def generic_epsilon_v1(k: int, p: PointV1) -> Fraction:
    return generic_epsilon(PRESETS["d6spin-v1"], p.values, k)


def generic_act_e_v2(k: int, c, q: PointV2) -> PointV2:
    return PointV2.from_values(generic_act_e(PRESETS["d6spin-v2"], q.values, k, c))


def generic_gamma_v2(k: int, q: PointV2) -> Fraction:
    return generic_gamma(PRESETS["d6spin-v2"], q.values, k)


def generic_epsilon_v2(k: int, q: PointV2) -> Fraction:
    return generic_epsilon(PRESETS["d6spin-v2"], q.values, k)


# -- the twist sigma_bar and its inverse -------------------------------------


def sigma_bar(p: PointV1) -> tuple[PointV2, Fraction]:
    """Solve ``V2(y) = a(x) sigma(V1(x))``; returns ``(y, a(x))``."""
    x = p
    x63, x44, x33, x22, x52, x43, x32, x62, x42, x51, x11, x21, x31, x41, x61 = x.values

    a = 1 / (x52 * x51)
    y0_1 = x63 * x62 * x61 / (x52 * x51)
    y6_1 = 1 / x52
    y6_2 = 1 / x51

    s2 = (
        x52 * x51 / (x63 * x62)
        + x61 * x52 * x51 / (x63 * x42 * x41)
        + x62 * x61 * x52 * x51 / (x44 * x43 * x42 * x41)
    )
    y2_1 = _div(Fraction(1), s2, "y_2^(1)")
    y2_2 = x44 * x43 * x42 * x41 / (x52**2 * x51**2) * s2

    s3 = (
        x52 * x51 / (x63 * x42)
        + x62 * x52 * x51 / (x44 * x43 * x42)
        + x52 * x41 / (x63 * x31)
        + x62 * x52 * x41 / (x44 * x43 * x31)
        + x52 * x42 * x41 / (x44 * x32 * x31)
        + x43 * x42 * x41 / (x33 * x32 * x31)
    )
    t3 = (
        x33 * x32 * x31 / (x44 * x43 * x42)
        + x41 * x33 * x32 / (x51 * x44 * x43)
        + x42 * x41 * x33 / (x62 * x51 * x44)
        + x61 * x33 / (x51 * x44)
        + x43 * x42 * x41 / (x62 * x52 * x51)
        + x61 * x43 / (x52 * x51)
    )
    y3_1 = _div(Fraction(1), s3, "y_3^(1)")
    y3_2 = x33 * x32 * x31 / (x52**2 * x51**2) * s3 * _div(Fraction(1), t3, "y_3^(2)")
    y3_3 = t3

    s4 = (
        x52 / x63
        + x62 * x52 / (x44 * x43)
        + x52 * x42 / (x44 * x32)
        + x43 * x42 / (x33 * x32)
        + x52 * x31 / (x44 * x21)
        + x43 * x31 / (x33 * x21)
        + x32 * x31 / (x22 * x21)
    )
    t4 = (
        x22 * x21 / (x51 * x44 * x32)
        + x43 * x22 * x21 / (x52 * x51 * x33 * x32)
        + x31 * x22 / (x51 * x44 * x42)
        + x43 * x31 * x22 / (x52 * x51 * x42 * x33)
        + x41 * x22 / (x51**2 * x44)
        + x43 * x41 * x22 / (x52 * x51**2 * x33)
        + x32 * x31 / (x52 * x51 * x42)
        + x41 * x32 / (x52 * x51**2)
    )
    u4 = (
        x22 * x21 / (x33 * x32)
        + x31 * x22 / (x42 * x33)
        + x41 * x22 / (x51 * x33)
        + x32 * x31 / (x43 * x42)
        + x41 * x32 / (x51 * x43)
        + x42 * x41 / (x62 * x51)
        + x61 / x51
    )
    y4_1 = _div(Fraction(1), s4, "y_4^(1)")
    y4_2 = x22 * x21 / (x52**2 * x51**2) * s4 * _div(Fraction(1), t4, "y_4^(2)")
    y4_3 = t4 * _div(Fraction(1), u4, "y_4^(3)")
    y4_4 = u4

    s5 = x52 / x44 + x43 / x33 + x32 / x22 + x21 / x11
    t5 = x11 / x22 + x21 / x32 + x31 / x42 + x41 / x51
    y5_1 = _div(Fraction(1), s5, "y_5^(1)")
    y5_2 = x11 / (x52 * x51) * s5 * _div(Fraction(1), t5, "y_5^(2)")
    y5_3 = t5

    q = PointV2(
        y5_3=y5_3, y4_4=y4_4, y3_3=y3_3, y2_2=y2_2, y6_2=y6_2,
        y4_3=y4_3, y3_2=y3_2, y5_2=y5_2, y4_2=y4_2, y6_1=y6_1,
        y0_1=y0_1, y2_1=y2_1, y3_1=y3_1, y4_1=y4_1, y5_1=y5_1,
    )  # fmt: skip
    return q, a


def sigma_bar_inv(q: PointV2) -> PointV1:
    y53, y44, y33, y22, y62, y43, y32, y52, y42, y61, y01, y21, y31, y41, y51 = q.values

    x1_1 = y53 * y52 * y51 / (y62 * y61)
    x5_1 = 1 / y62
    x5_2 = 1 / y61

    s2 = (
        y62 * y61 / (y53 * y52)
        + y62 * y61 * y51 / (y53 * y42 * y41)
        + y62 * y61 * y52 * y51 / (y44 * y43 * y42 * y41)
    )
    x2_1 = _div(Fraction(1), s2, "x_2^(1)")
    x2_2 = y44 * y43 * y42 * y41 / (y62**2 * y61**2) * s2

    s3 = (
        y62 * y61 / (y53 * y42)
        + y62 * y61 * y52 / (y44 * y43 * y42)
        + y62 * y41 / (y53 * y31)
        + y62 * y52 * y41 / (y44 * y43 * y31)
        + y62 * y42 * y41 / (y44 * y32 * y31)
        + y43 * y42 * y41 / (y33 * y32 * y31)
    )
    t3 = (
        y33 * y32 * y31 / (y44 * y43 * y42)
        + y41 * y33 * y32 / (y61 * y44 * y43)
        + y42 * y41 * y33 / (y61 * y52 * y44)
        + y51 * y33 / (y61 * y44)
        + y43 * y42 * y41 / (y62 * y61 * y52)
        + y51 * y43 / (y62 * y61)
    )
    x3_1 = _div(Fraction(1), s3, "x_3^(1)")
    x3_2 = y33 * y32 * y31 / (y62**2 * y61**2) * s3 * _div(Fraction(1), t3, "x_3^(2)")
    x3_3 = t3

    s4 = (
        y62 / y53
        + y62 * y52 / (y44 * y43)
        + y62 * y42 / (y44 * y32)
        + y43 * y42 / (y33 * y32)
        + y62 * y31 / (y44 * y21)
        + y43 * y31 / (y33 * y21)
        + y32 * y31 / (y22 * y21)
    )
    t4 = (
        y22 * y21 / (y61 * y44 * y32)
        + y43 * y22 * y21 / (y62 * y61 * y33 * y32)
        + y31 * y22 / (y61 * y44 * y42)
        + y43 * y31 * y22 / (y62 * y61 * y42 * y33)
        + y41 * y22 / (y61**2 * y44)
        + y43 * y41 * y22 / (y62 * y61**2 * y33)
        + y32 * y31 / (y62 * y61 * y42)
        + y41 * y32 / (y62 * y61**2)
    )
    u4 = (
        y22 * y21 / (y33 * y32)
        + y31 * y22 / (y42 * y33)
        + y41 * y22 / (y61 * y33)
        + y32 * y31 / (y43 * y42)
        + y41 * y32 / (y61 * y43)
        + y42 * y41 / (y61 * y52)
        + y51 / y61
    )
    x4_1 = _div(Fraction(1), s4, "x_4^(1)")
    x4_2 = y22 * y21 / (y62**2 * y61**2) * s4 * _div(Fraction(1), t4, "x_4^(2)")
    x4_3 = t4 * _div(Fraction(1), u4, "x_4^(3)")
    x4_4 = u4

    s6 = y62 / y44 + y43 / y33 + y32 / y22 + y21 / y01
    t6 = y01 / y22 + y21 / y32 + y31 / y42 + y41 / y61
    x6_1 = _div(Fraction(1), s6, "x_6^(1)")
    x6_2 = y01 / (y62 * y61) * s6 * _div(Fraction(1), t6, "x_6^(2)")
    x6_3 = t6

    return PointV1(
        x6_3=x6_3, x4_4=x4_4, x3_3=x3_3, x2_2=x2_2, x5_2=x5_2,
        x4_3=x4_3, x3_2=x3_2, x6_2=x6_2, x4_2=x4_2, x5_1=x5_1,
        x1_1=x1_1, x2_1=x2_1, x3_1=x3_1, x4_1=x4_1, x6_1=x6_1,
    )  # fmt: skip


# -- the zero node ------------------------------------------------------------


@dataclass(frozen=True)
class KFamily:
    K: Fraction
    K3_1: Fraction
    K3_2: Fraction
    K4_1: Fraction
    K4_2: Fraction
    K4_3: Fraction
    K5_1: Fraction
    K6_1: Fraction
    K6_2: Fraction

    def as_dict(self) -> dict[str, Fraction]:
        return dataclasses.asdict(self)


def _k_terms(p: PointV1) -> tuple[Fraction, ...]:
    """The fourteen monomials of ``K``; term ``T_n`` is entry ``n - 1``."""
    x63, x44, x33, x22, x52, x43, x32, x62, x42, x51, x11, x21, x31, x41, x61 = p.values
    return (
        x61,
        x51 * x22 * x21 / (x33 * x32),
        x51 * x31 * x22 / (x42 * x33),
        x41 * x22 / x33,
        x51 * x32 * x31 / (x43 * x42),
        x41 * x32 / x43,
        x42 * x41 / x62,
        x22 * x21 / x63,
        x62 * x22 * x21 / (x44 * x43),
        x42 * x22 * x21 / (x44 * x32),
        x43 * x42 * x22 * x21 / (x52 * x33 * x32),
        x31 * x22 / x44,
        x43 * x31 * x22 / (x52 * x33),
        x32 * x31 / x52,
    )


def _tagged(terms, c, tagged: frozenset[int]) -> Fraction:
    """Sum of the K monomials with the 1-based terms in ``tagged`` multiplied by ``c``."""
    return sum(((c if n in tagged else 1) * t for n, t in enumerate(terms, start=1)), Fraction(0))


def _tags(*ns: int) -> frozenset[int]:
    return frozenset(ns)


_ALL = frozenset(range(1, 15))
_TAG_K3_1 = _tags(1, 3, 4, 5, 6, 7, 12, 13, 14)
_TAG_K3_2 = _tags(1, 5, 6, 7, 14)
_TAG_K4_1 = _tags(1, 4, 6, 7)
_TAG_K4_3 = _ALL - _tags(8, 9, 10, 12)
_TAG_K5_1 = _tags(1, 2, 3, 4, 5, 6, 7)
_TAG_K6_1 = _tags(1)
_TAG_K6_2 = _ALL - _tags(8)

# K_{4_2} = c T1 (..) + c T7 (..) + T8 (..) + T9 (..) + c (remaining terms) K
_K4_2_INNER = {
    1: (True, _ALL - _tags(8, 9)),
    7: (True, _ALL - _tags(8)),
    8: (False, _tags(1, 7)),
    9: (False, _tags(1)),
}
_K4_2_TAIL = _tags(2, 3, 4, 5, 6, 10, 11, 12, 13, 14)


def k_family(p: PointV1, c) -> KFamily:
    c = as_rational(c)
    T = _k_terms(p)
    K = sum(T, Fraction(0))
    k42 = Fraction(0)
    for n, (with_c, tags) in _K4_2_INNER.items():
        k42 += (c if with_c else 1) * T[n - 1] * _tagged(T, c, tags)
    k42 += c * sum((T[n - 1] for n in sorted(_K4_2_TAIL)), Fraction(0)) * K
    return KFamily(
        K=K,
        K3_1=_tagged(T, c, _TAG_K3_1),
        K3_2=_tagged(T, c, _TAG_K3_2),
        K4_1=_tagged(T, c, _TAG_K4_1),
        K4_2=k42,
        K4_3=_tagged(T, c, _TAG_K4_3),
        K5_1=_tagged(T, c, _TAG_K5_1),
        K6_1=_tagged(T, c, _TAG_K6_1),
        K6_2=_tagged(T, c, _TAG_K6_2),
    )


def act_e0_v1(c, p: PointV1) -> PointV1:
    """Closed-form ``e_0^c`` on ``V1(x)`` through the K-family."""
    c = _scalar(c)
    kf = k_family(p, c)
    for name, v in kf.as_dict().items():
        if v == 0:
            raise DomainError(f"{name} vanishes")
    K = kf.K
    x = p
    return x.replace(
        x1_1=x.x1_1 / c,
        x2_1=x.x2_1 / c,
        x2_2=x.x2_2 / c,
        x3_1=x.x3_1 * K / kf.K3_1,
        x3_2=x.x3_2 * kf.K3_1 / (c * kf.K3_2),
        x3_3=x.x3_3 * kf.K3_2 / (c * K),
        x4_1=x.x4_1 * K / kf.K4_1,
        x4_2=x.x4_2 * K * kf.K4_1 / kf.K4_2,
        x4_3=x.x4_3 * kf.K4_2 / (c * K * kf.K4_3),
        x4_4=x.x4_4 * kf.K4_3 / (c * K),
        x5_1=x.x5_1 * K / kf.K5_1,
        x5_2=x.x5_2 * kf.K5_1 / (c * K),
        x6_1=x.x6_1 * K / kf.K6_1,
        x6_2=x.x6_2 * kf.K6_1 / kf.K6_2,
        x6_3=x.x6_3 * kf.K6_2 / (c * K),
    )


def act_e0_via_sigma(c, p: PointV1) -> PointV1:
    """``e_0^c = sigma_bar^-1 . bar e_6^c . sigma_bar``, the defining route."""
    q, _ = sigma_bar(p)
    return sigma_bar_inv(act_e_v2(6, c, q))
