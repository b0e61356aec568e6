"""The 32-dimensional spin module of the affine algebra D_6^(1).

Basis vectors are sign sequences ``(i_1, ..., i_6)`` with an even number of
minus signs. Internally a basis vector is the integer
``sum(b_j << (j - 1))`` with ``b_j = 1`` exactly when ``i_j`` is ``-``;
externally it is a six character string such as ``"++++--"``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional

from .exact_arith import DomainError, as_rational, format_rational, parse_rational, rpow

__all__ = [
    "NODES",
    "CARTAN",
    "SIGMA",
    "BASIS",
    "HIGHEST_V1",
    "HIGHEST_V2",
    "cartan_entry",
    "basis_from_signs",
    "signs_of",
    "lowering_action",
    "raising_action",
    "coroot_pairing",
    "sigma_on_basis",
    "SpinVector",
    "apply_Y",
    "apply_sigma",
    "apply_word",
]

NODES = (0, 1, 2, 3, 4, 5, 6)

_EDGES = {(1, 2), (2, 3), (3, 4), (4, 5), (0, 2), (4, 6)}


def _build_cartan() -> tuple[tuple[int, ...], ...]:
    rows = []
    for i in NODES:
        row = []
        for j in NODES:
            if i == j:
                row.append(2)
            elif (i, j) in _EDGES or (j, i) in _EDGES:
                row.append(-1)
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


CARTAN = _build_cartan()

# diagram automorphism: 0<->6, 1<->5, 2<->4, 3 fixed
SIGMA = {0: 6, 1: 5, 2: 4, 3: 3, 4: 2, 5: 1, 6: 0}


def cartan_entry(i: int, j: int) -> int:
    return CARTAN[i][j]


def _check_node(k: int) -> None:
    if k not in SIGMA:
        raise ValueError(f"invalid node index {k!r}; expected one of {NODES}")


def _bit(v: int, pos: int) -> int:
    """1 if position ``pos`` (1-based) carries a minus sign."""
    return (v >> (pos - 1)) & 1


def _parity_ok(v: int) -> bool:
    return 0 <= v < 64 and bin(v).count("1") % 2 == 0


BASIS = tuple(v for v in range(64) if _parity_ok(v))


def basis_from_signs(signs: str | Iterable) -> int:
    """Accept ``"++++--"``, a sequence of ``'+'/'-'`` or a sequence of ``+1/-1``."""
    if isinstance(signs, str):
        items = list(signs.strip().replace("−", "-"))
    else:
        items = list(signs)
    if len(items) != 6:
        raise ValueError(f"a basis vector has six signs, got {signs!r}")
    v = 0
    for pos, s in enumerate(items, start=1):
        if s in ("-", -1):
            v |= 1 << (pos - 1)
        elif s not in ("+", 1):
            raise ValueError(f"bad sign {s!r} in {signs!r}")
    if not _parity_ok(v):
        raise ValueError(f"{signs!r} has an odd number of minus signs")
    return v


def signs_of(v: int) -> str:
    return "".join("-" if _bit(v, pos) else "+" for pos in range(1, 7))


def _pair_positions(k: int) -> tuple[int, int]:
    if k == 0:
        return 1, 2
    if k == 6:
        return 5, 6
    return k, k + 1


def _lower_pattern(k: int) -> tuple[int, int]:
    # bit pattern (b_p, b_q) on which f_k acts, and the image pattern
    if k == 0:
        return 1, 1
    if k == 6:
        return 0, 0
    return 0, 1


def _image(k: int, v: int, pattern: tuple[int, int]) -> Optional[int]:
    p, q = _pair_positions(k)
    if (_bit(v, p), _bit(v, q)) != pattern:
        return None
    # every rule toggles both signs of the pair
    return v ^ (1 << (p - 1)) ^ (1 << (q - 1))


def lowering_action(k: int, v: int) -> Optional[int]:
    """Image of basis vector ``v`` under ``f_k``; ``None`` when ``f_k v = 0``."""
    _check_node(k)
    return _image(k, v, _lower_pattern(k))


def raising_action(k: int, v: int) -> Optional[int]:
    """Image of basis vector ``v`` under ``e_k``; ``None`` when ``e_k v = 0``."""
    _check_node(k)
    b0, b1 = _lower_pattern(k)
    return _image(k, v, (1 - b0, 1 - b1))


def coroot_pairing(k: int, v: int) -> int:
    _check_node(k)
    if lowering_action(k, v) is not None:
        return 1
    if raising_action(k, v) is not None:
        return -1
    return 0


def sigma_on_basis(v: int) -> int:
    """``(i_1, ..., i_6) -> (-i_6, ..., -i_1)``."""
    out = 0
    for pos in range(1, 7):
        if not _bit(v, 7 - pos):
            out |= 1 << (pos - 1)
    return out


@dataclass(frozen=True)
class SpinVector:
    """Sparse vector in the spin module; zero coefficients are never stored."""

    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for v, r in self.coeffs.items():
            if v not in BASIS:
                raise ValueError(f"{v!r} is not a basis index")
            r = as_rational(r)
            if r != 0:
                clean[v] = r
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def unit(cls, v: int | str) -> "SpinVector":
        if isinstance(v, str):
            v = basis_from_signs(v)
        return cls({v: Fraction(1)})

    def __getitem__(self, v: int | str) -> Fraction:
        if isinstance(v, str):
            v = basis_from_signs(v)
        return self.coeffs.get(v, Fraction(0))

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self.coeffs.items())

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpinVector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __add__(self, other: "SpinVector") -> "SpinVector":
        out = dict(self.coeffs)
        for v, r in other.coeffs.items():
            out[v] = out.get(v, Fraction(0)) + r
        return SpinVector(out)

    def scale(self, r) -> "SpinVector":
        r = as_rational(r)
        return SpinVector({v: r * x for v, x in self.coeffs.items()})

    def to_json(self) -> dict[str, str]:
        return {signs_of(v): format_rational(r) for v, r in self.coeffs.items()}

    def full_json(self) -> dict[str, str]:
        """All 32 coefficients, zeros included, in basis-index order."""
        return {signs_of(v): format_rational(self[v]) for v in BASIS}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "SpinVector":
        return cls({basis_from_signs(k): parse_rational(str(r)) for k, r in obj.items()})


def apply_Y(k: int, c, vec: SpinVector) -> SpinVector:
    """Apply ``Y_k(c) = (1 + f_k / c) c^{h_k}``, valid because ``f_k**2 = 0``."""
    _check_node(k)
    c = as_rational(c)
    if c == 0:
        raise DomainError("Y_k(c) needs c != 0")
    out: dict[int, Fraction] = {}
    for v, r in vec.coeffs.items():
        p = coroot_pairing(k, v)
        scaled = r * rpow(c, p)
        out[v] = out.get(v, Fraction(0)) + scaled
        w = lowering_action(k, v)
        if w is not None:
            out[w] = out.get(w, Fraction(0)) + scaled / c
    return SpinVector(out)


def apply_word(word: Iterable[int], params: Iterable, anchor: int) -> SpinVector:
    """``Y_{i_1}(c_1) ... Y_{i_l}(c_l)`` applied to the unit vector at ``anchor``.

    The rightmost factor acts first.
    """
    pairs = list(zip(word, params, strict=True))
    vec = SpinVector.unit(anchor)
    for k, c in reversed(pairs):
        vec = apply_Y(k, c, vec)
    return vec


def apply_sigma(vec: SpinVector) -> SpinVector:
    return SpinVector({sigma_on_basis(v): r for v, r in vec.coeffs.items()})


HIGHEST_V1 = basis_from_signs("++++++")
HIGHEST_V2 = basis_from_signs("-++++-")
