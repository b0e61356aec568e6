"""Geometric crystal structure on a product of one-parameter factors.

For a simply-laced Cartan matrix and a word ``(i_1, ..., i_l)`` the point
``Y_{i_1}(c_1) ... Y_{i_l}(c_l)`` carries explicit actions ``e_k^c`` and
functions ``gamma_k``, ``epsilon_k``. All three are expressed through the
partial monomials

    D_m = c_1^{a(i_1, k)} ... c_{m-1}^{a(i_{m-1}, k)} * c_m.

The upper summation limit in the standard statement of the ``e_k^c`` formula
is the word length ``l``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact_arith import DomainError, as_rational, rpow
from .spin import CARTAN

__all__ = [
    "SimplyLacedCartan",
    "WordCrystal",
    "partial_monomial",
    "generic_act_e",
    "generic_epsilon",
    "generic_gamma",
    "PRESETS",
    "get_preset",
]


@dataclass(frozen=True)
class SimplyLacedCartan:
    nodes: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.nodes)
        if len(set(self.nodes)) != n:
            raise ValueError("duplicate node labels")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("Cartan matrix shape does not match node count")
        for a in range(n):
            if self.entries[a][a] != 2:
                raise ValueError("diagonal entries must be 2")
            for b in range(n):
                if a != b:
                    if self.entries[a][b] not in (0, -1):
                        raise ValueError("off-diagonal entries must be 0 or -1")
                    if self.entries[a][b] != self.entries[b][a]:
                        raise ValueError("Cartan matrix must be symmetric")
        object.__setattr__(self, "_index", {k: a for a, k in enumerate(self.nodes)})

    def __call__(self, i: int, j: int) -> int:
        return self.entries[self._index[i]][self._index[j]]

    def __contains__(self, k: int) -> bool:
        return k in self._index

    @classmethod
    def restrict_affine_d6(cls, nodes: Sequence[int]) -> "SimplyLacedCartan":
        nodes = tuple(nodes)
        return cls(nodes, tuple(tuple(CARTAN[i][j] for j in nodes) for i in nodes))


@dataclass(frozen=True)
class WordCrystal:
    cartan: SimplyLacedCartan
    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if not self.word:
            raise ValueError("word must be non-empty")
        for i in self.word:
            if i not in self.cartan:
                raise ValueError(f"letter {i!r} is not a node of the Cartan matrix")

    def __len__(self) -> int:
        return len(self.word)

    def to_json(self) -> dict:
        return {
            "nodes": list(self.cartan.nodes),
            "cartan": [list(row) for row in self.cartan.entries],
            "word": list(self.word),
        }

    @classmethod
    def from_json(cls, obj) -> "WordCrystal":
        if isinstance(obj, str):
            obj = json.loads(obj)
        cartan = SimplyLacedCartan(
            tuple(obj["nodes"]), tuple(tuple(row) for row in obj["cartan"])
        )
        return cls(cartan, tuple(obj["word"]))


def _params(wc: WordCrystal, params) -> list[Fraction]:
    vals = [as_rational(c) for c in params]
    if len(vals) != len(wc.word):
        raise ValueError(f"expected {len(wc.word)} parameters, got {len(vals)}")
    if any(c == 0 for c in vals):
        raise DomainError("parameters must be nonzero")
    return vals


def _check_k(wc: WordCrystal, k: int) -> None:
    if k not in wc.cartan:
        raise ValueError(f"node {k!r} is not in the Cartan matrix")


def _all_partial_monomials(wc: WordCrystal, vals: list[Fraction], k: int) -> list[Fraction]:
    out = []
    prefix = Fraction(1)
    for i, c in zip(wc.word, vals):
        out.append(prefix * c)
        prefix *= rpow(c, wc.cartan(i, k))
    return out


def partial_monomial(wc: WordCrystal, params, k: int, m: int) -> Fraction:
    """``D_m`` for node ``k``; ``m`` is 1-based."""
    _check_k(wc, k)
    vals = _params(wc, params)
    if not 1 <= m <= len(vals):
        raise ValueError(f"position {m} outside 1..{len(vals)}")
    return _all_partial_monomials(wc, vals, k)[m - 1]


def generic_epsilon(wc: WordCrystal, params, k: int) -> Fraction:
    _check_k(wc, k)
    vals = _params(wc, params)
    d = _all_partial_monomials(wc, vals, k)
    return sum((1 / d[m] for m, i in enumerate(wc.word) if i == k), Fraction(0))


def generic_gamma(wc: WordCrystal, params, k: int) -> Fraction:
    _check_k(wc, k)
    vals = _params(wc, params)
    out = Fraction(1)
    for i, c in zip(wc.word, vals):
        out *= rpow(c, wc.cartan(i, k))
    return out


def generic_act_e(wc: WordCrystal, params, k: int, c) -> tuple[Fraction, ...]:
    """Return the parameter tuple of ``e_k^c`` applied to ``Y_i(params)``."""
    _check_k(wc, k)
    vals = _params(wc, params)
    c = as_rational(c)
    if c == 0:
        raise DomainError("e_k^c needs c != 0")
    d = _all_partial_monomials(wc, vals, k)
    hits = [m for m, i in enumerate(wc.word) if i == k]
    plain = [1 / d[m] for m in hits]
    out = list(vals)
    for j in hits:
        num = sum((c * t if m <= j else t for m, t in zip(hits, plain)), Fraction(0))
        den = sum((c * t if m < j else t for m, t in zip(hits, plain)), Fraction(0))
        if den == 0:
            raise DomainError(f"vanishing denominator for e_{k}^c at position {j + 1}")
        out[j] = vals[j] * num / den
    return tuple(out)


V1_WORD = (6, 4, 3, 2, 5, 4, 3, 6, 4, 5, 1, 2, 3, 4, 6)
V2_WORD = (5, 4, 3, 2, 6, 4, 3, 5, 4, 6, 0, 2, 3, 4, 5)

PRESETS = {
    "d6spin-v1": WordCrystal(SimplyLacedCartan.restrict_affine_d6((1, 2, 3, 4, 5, 6)), V1_WORD),
    "d6spin-v2": WordCrystal(SimplyLacedCartan.restrict_affine_d6((0, 2, 3, 4, 5, 6)), V2_WORD),
}


def get_preset(name: str) -> WordCrystal:
    try:
        return PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; known: {sorted(PRESETS)}") from None

