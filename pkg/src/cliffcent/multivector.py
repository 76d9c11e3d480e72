"""Sparse multivectors with exact rational coefficients.

A multivector is a map from basis blades to nonzero Fractions.  Every
verification in this package reduces to exact identities between such maps,
so no floating point appears anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple, Union

from . import _linalg
from .blades import (
    Blade,
    Signature,
    all_blades,
    blade_grade,
    blade_product,
    check_blade,
    format_blade,
    hat_sign,
    tilde_sign,
)

Rational = Union[int, Fraction]


class Multivector:
    """Element of Cl(p,q,r) as a sparse blade -> Fraction map.

    Instances are immutable; arithmetic returns new objects.  Zero
    coefficients are never stored, so equality is plain dict equality.
    """

    __slots__ = ("signature", "_terms")

    def __init__(self, signature: Signature, terms: Dict[Blade, Fraction]):
        self.signature = signature
        self._terms = terms

    # -- construction ------------------------------------------------------

    @classmethod
    def from_terms(cls, sig: Signature,
                   terms: Iterable[Tuple[Blade, Rational]]) -> "Multivector":
        acc: Dict[Blade, Fraction] = {}
        for blade, coeff in terms:
            check_blade(sig, blade)
            c = acc.get(blade, Fraction(0)) + Fraction(coeff)
            if c:
                acc[blade] = c
            else:
                acc.pop(blade, None)
        return cls(sig, acc)

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return cls(sig, {})

    @classmethod
    def scalar(cls, sig: Signature, value: Rational) -> "Multivector":
        return cls.from_terms(sig, [(0, value)])

    @classmethod
    def basis_blade(cls, sig: Signature, blade: Blade) -> "Multivector":
        return cls.from_terms(sig, [(blade, 1)])

    # -- inspection --------------------------------------------------------

    def coeff(self, blade: Blade) -> Fraction:
        return self._terms.get(blade, Fraction(0))

    def blades(self) -> Tuple[Blade, ...]:
        return tuple(self._terms)

    def terms(self) -> Dict[Blade, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.signature == other.signature and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.signature, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"Multivector({self.signature}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        from .blades import blade_sort_key
        for blade in sorted(self._terms, key=blade_sort_key):
            c = self._terms[blade]
            parts.append(f"{c}*{format_blade(blade)}")
        return " + ".join(parts)

    # -- linear structure ----------------------------------------------------

    def _require_same_signature(self, other: "Multivector") -> None:
        if self.signature != other.signature:
            raise ValueError(
                f"signature mismatch: {self.signature} vs {other.signature}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._require_same_signature(other)
        acc = dict(self._terms)
        for blade, coeff in other._terms.items():
            c = acc.get(blade, Fraction(0)) + coeff
            if c:
                acc[blade] = c
            else:
                del acc[blade]
        return Multivector(self.signature, acc)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + other.scale(-1)

    def scale(self, c: Rational) -> "Multivector":
        c = Fraction(c)
        if not c:
            return Multivector(self.signature, {})
        return Multivector(self.signature,
                           {b: c * v for b, v in self._terms.items()})

    def __neg__(self) -> "Multivector":
        return self.scale(-1)

    # -- products and involutions ---------------------------------------------

    def __mul__(self, other: "Multivector") -> "Multivector":
        self._require_same_signature(other)
        sig = self.signature
        acc: Dict[Blade, Fraction] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                sign, blade = blade_product(sig, a, b)
                if sign == 0:
                    continue
                c = acc.get(blade, Fraction(0)) + sign * ca * cb
                if c:
                    acc[blade] = c
                else:
                    del acc[blade]
        return Multivector(sig, acc)

    def grade_project(self, k: int) -> "Multivector":
        return Multivector(self.signature, {
            b: v for b, v in self._terms.items() if blade_grade(b) == k})

    def parity_project(self, l: int) -> "Multivector":
        if l not in (0, 1):
            raise ValueError(f"parity must be 0 or 1, got {l}")
        return Multivector(self.signature, {
            b: v for b, v in self._terms.items() if blade_grade(b) & 1 == l})

    def grade_involute(self) -> "Multivector":
        return Multivector(self.signature, {
            b: v if hat_sign(b) == 1 else -v for b, v in self._terms.items()})

    def reverse(self) -> "Multivector":
        return Multivector(self.signature, {
            b: v if tilde_sign(b) == 1 else -v for b, v in self._terms.items()})


# -- spec-named operation layer ------------------------------------------------

def mv_from_terms(sig: Signature,
                  terms: Iterable[Tuple[Blade, Rational]]) -> Multivector:
    return Multivector.from_terms(sig, terms)


def geometric_product(u: Multivector, v: Multivector) -> Multivector:
    return u * v


def mv_add(u: Multivector, v: Multivector) -> Multivector:
    return u + v


def mv_scale(c: Rational, u: Multivector) -> Multivector:
    return u.scale(c)


def grade_project(u: Multivector, k: int) -> Multivector:
    return u.grade_project(k)


def parity_project(u: Multivector, l: int) -> Multivector:
    return u.parity_project(l)


def grade_involute(u: Multivector) -> Multivector:
    return u.grade_involute()


def reverse(u: Multivector) -> Multivector:
    return u.reverse()


def commutator(u: Multivector, v: Multivector) -> Multivector:
    """UV - VU."""
    return u * v - v * u


# -- regular representation and inverses ---------------------------------------

def _blade_order(sig: Signature) -> List[Blade]:
    return list(all_blades(sig))


def left_regular_matrix(t: Multivector) -> List[List[Fraction]]:
    """Dense 2^n x 2^n matrix of U -> T*U in the global blade order.

    Column j holds the coefficients of T * blade_j.
    """
    sig = t.signature
    order = _blade_order(sig)
    position = {b: i for i, b in enumerate(order)}
    size = len(order)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for j, blade in enumerate(order):
        col = t * Multivector.basis_blade(sig, blade)
        for b, v in col.terms().items():
            matrix[position[b]][j] = v
    return matrix


def _regular_columns(t: Multivector) -> Tuple[List[Dict[int, Fraction]], Dict[Blade, int]]:
    sig = t.signature
    order = _blade_order(sig)
    position = {b: i for i, b in enumerate(order)}
    columns = []
    for blade in order:
        col = t * Multivector.basis_blade(sig, blade)
        columns.append({position[b]: v for b, v in col.terms().items()})
    return columns, position


def _inverse_coeffs(t: Multivector) -> Optional[List[Fraction]]:
    """Solve T*X = 1; None when T is singular.

    A solution of T*X = 1 in a finite-dimensional associative algebra forces
    the left-regular matrix of T to be surjective, hence invertible, so X is
    the two-sided inverse.
    """
    columns, position = _regular_columns(t)
    rhs = {position[0]: Fraction(1)}
    return _linalg.solve(columns, rhs)


def is_invertible(t: Multivector) -> bool:
    return _inverse_coeffs(t) is not None


def inverse_of(t: Multivector) -> Multivector:
    coeffs = _inverse_coeffs(t)
    if coeffs is None:
        raise ZeroDivisionError(f"multivector is not invertible: {t}")
    order = _blade_order(t.signature)
    return Multivector.from_terms(
        t.signature, [(order[i], c) for i, c in enumerate(coeffs) if c])


# -- adjoint actions ------------------------------------------------------------

def adjoint(t: Multivector, u: Multivector) -> Multivector:
    """ad_T(U) = T U T^-1."""
    return t * u * inverse_of(t)


def adjoint_hat(t: Multivector, u: Multivector) -> Multivector:
    """Grade-involution twist: hat(T) U T^-1."""
    return t.grade_involute() * u * inverse_of(t)


def adjoint_tilde(t: Multivector, u: Multivector) -> Multivector:
    """Parity-mixing twist: T <U>_0 T^-1 + hat(T) <U>_1 T^-1."""
    t_inv = inverse_of(t)
    return (t * u.parity_project(0) * t_inv
            + t.grade_involute() * u.parity_project(1) * t_inv)
