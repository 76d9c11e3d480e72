"""Signatures, basis blades, and the blade-level geometric product.

A blade is stored as an n-bit mask: bit ``i`` set means generator ``e_{i+1}``
is a factor.  The identity element is the empty mask.  Everything downstream
(multivectors, subspaces, centralizers) is built on the two facts computed
here: the product of two blades is ``sign * (a XOR b)`` with ``sign`` in
{-1, 0, +1}, and the sign is 0 exactly when the blades share a generator
that squares to zero.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Tuple

MAX_DIM = 16

Blade = int  # n-bit mask over generators 1..n


@dataclass(frozen=True)
class Signature:
    """Diagonal metric with p generators squaring to +1, q to -1, r to 0.

    Generator indices are 1-based and blocked: 1..p square to +1,
    p+1..p+q square to -1, and the trailing p+q+1..n are degenerate.
    """

    p: int
    q: int
    r: int

    @property
    def n(self) -> int:
        return self.p + self.q + self.r

    @property
    def negative_mask(self) -> int:
        """Mask of the generators squaring to -1."""
        return ((1 << self.q) - 1) << self.p

    @property
    def degenerate_mask(self) -> int:
        """Mask of the generators squaring to 0 (the trailing r indices)."""
        return ((1 << self.r) - 1) << (self.p + self.q)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def metric_sign(self, i: int) -> int:
        """Square of generator e_i (1-based): +1, -1, or 0."""
        if not 1 <= i <= self.n:
            raise ValueError(f"generator index {i} out of range 1..{self.n}")
        if i <= self.p:
            return 1
        if i <= self.p + self.q:
            return -1
        return 0

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q},{self.r})"


def make_signature(p: int, q: int, r: int) -> Signature:
    """Validate and build a Signature; n = p+q+r must lie in [1, 16]."""
    for name, value in (("p", p), ("q", q), ("r", r)):
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"{name} must be a non-negative integer, got {value!r}")
    n = p + q + r
    if n < 1:
        raise ValueError("signature needs at least one generator")
    if n > MAX_DIM:
        raise ValueError(f"n = {n} exceeds the supported bound {MAX_DIM}")
    return Signature(p, q, r)


class ScaledBlade(NamedTuple):
    """A blade with a sign; sign 0 means the product annihilated."""

    sign: int
    blade: Blade


class CommuteClass(enum.Enum):
    COMMUTE = "commute"
    ANTICOMMUTE = "anticommute"
    ANNIHILATE = "annihilate"


def blade_grade(blade: Blade) -> int:
    return blade.bit_count()


def blade_indices(blade: Blade) -> Tuple[int, ...]:
    """1-based generator indices of a blade mask, ascending."""
    out = []
    i = 1
    while blade:
        if blade & 1:
            out.append(i)
        blade >>= 1
        i += 1
    return tuple(out)


def blade_from_indices(indices) -> Blade:
    """Build a blade mask from 1-based indices; they must be strictly ascending."""
    mask = 0
    prev = 0
    for i in indices:
        if i <= prev:
            raise ValueError(f"indices must be strictly ascending, got {tuple(indices)}")
        mask |= 1 << (i - 1)
        prev = i
    return mask


def check_blade(sig: Signature, blade: Blade) -> None:
    if blade < 0 or blade > sig.full_mask:
        raise ValueError(f"blade {blade:#x} not valid for {sig}")


def blade_product(sig: Signature, a: Blade, b: Blade) -> ScaledBlade:
    """Product of two basis blades: sign * (a XOR b).

    The sign combines the transposition parity of merging the two ascending
    index lists with the metric signs of the squared (shared) generators.
    A shared degenerate generator annihilates the product (sign 0).
    """
    check_blade(sig, a)
    check_blade(sig, b)
    shared = a & b
    if shared & sig.degenerate_mask:
        return ScaledBlade(0, 0)
    # Each index i of b moves left past the indices of a greater than i.
    swaps = 0
    rest = b
    while rest:
        low = rest & -rest
        swaps += (a & ~(2 * low - 1)).bit_count()
        rest ^= low
    sign = -1 if swaps & 1 else 1
    if (shared & sig.negative_mask).bit_count() & 1:
        sign = -sign
    return ScaledBlade(sign, a ^ b)


def commute_class(sig: Signature, a: Blade, b: Blade) -> CommuteClass:
    """Classify the pair: ab = +ba, ab = -ba, or ab = ba = 0."""
    ab = blade_product(sig, a, b)
    if ab.sign == 0:
        return CommuteClass.ANNIHILATE
    ba = blade_product(sig, b, a)
    return CommuteClass.COMMUTE if ab.sign == ba.sign else CommuteClass.ANTICOMMUTE


def involution_signs(blade: Blade) -> Tuple[int, int]:
    """(hat, tilde) signs of a blade: ((-1)^k, (-1)^(k(k-1)/2)) for grade k."""
    k = blade_grade(blade)
    hat = -1 if k & 1 else 1
    tilde = -1 if (k * (k - 1) // 2) & 1 else 1
    return hat, tilde


def hat_sign(blade: Blade) -> int:
    return -1 if blade_grade(blade) & 1 else 1


def tilde_sign(blade: Blade) -> int:
    k = blade_grade(blade)
    return -1 if (k * (k - 1) // 2) & 1 else 1


_BLADE_RE = re.compile(r"^e\[(\d+(?:,\d+)*)?\]$")


def parse_blade(text: str) -> Blade:
    """Parse ``e[]`` or ``e[i1,i2,...]`` with strictly ascending indices."""
    m = _BLADE_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed blade {text!r}; expected e[] or e[i1,i2,...]")
    if not m.group(1):
        return 0
    indices = [int(s) for s in m.group(1).split(",")]
    if any(i < 1 for i in indices):
        raise ValueError(f"blade indices must be >= 1 in {text!r}")
    return blade_from_indices(indices)


def format_blade(blade: Blade) -> str:
    return "e[" + ",".join(str(i) for i in blade_indices(blade)) + "]"


def blade_sort_key(blade: Blade) -> Tuple[int, Tuple[int, ...]]:
    """Global enumeration order: by grade, then lexicographic index list."""
    return (blade_grade(blade), blade_indices(blade))


def all_blades(sig: Signature) -> Iterator[Blade]:
    """All 2^n blades of the algebra in the global enumeration order."""
    return iter(sorted(range(1 << sig.n), key=blade_sort_key))
