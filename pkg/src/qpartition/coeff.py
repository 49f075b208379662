"""Exact Laurent polynomials in one variable q over the rationals.

Everything downstream works over Z[q, q^-1] tensored with Q, so the
coefficient type has to support negative exponents (q is a unit) and
exact arithmetic.  Coefficients are `fractions.Fraction`; terms with
coefficient zero are never stored.

>>> p = Q + 1
>>> p * p
LaurentPoly({0: Fraction(1, 1), 1: Fraction(2, 1), 2: Fraction(1, 1)})
>>> (Q ** -1 * p).evaluate(Fraction(2))
Fraction(3, 2)
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    'LaurentPoly',
    'ZeroSpecialization',
    'Q',
    'ONE',
    'ZERO',
    'lp',
]

Scalar = Union[int, Fraction]


class ZeroSpecialization(ValueError):
    """Raised when a Laurent polynomial is evaluated at q = 0.

    q must specialize to a unit of the base ring; 0 never qualifies.
    """


class LaurentPoly:
    """Immutable sparse Laurent polynomial sum_e c_e q^e with c_e in Q."""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Fraction] = {}
        for e, c in items:
            c = Fraction(c)
            if c:
                acc[e] = acc.get(e, Fraction(0)) + c
                if not acc[e]:
                    del acc[e]
        self._terms = tuple(sorted(acc.items()))
        self._hash = hash(self._terms)

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        """Sorted (exponent, coefficient) pairs, no zero coefficients."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: LaurentPoly | Scalar) -> LaurentPoly:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly([(e, -c) for e, c in self._terms])

    def __sub__(self, other: LaurentPoly | Scalar) -> LaurentPoly:
        return self + (-other if isinstance(other, LaurentPoly) else LaurentPoly({0: -Fraction(other)}))

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return LaurentPoly({0: other}) - self

    def __mul__(self, other: LaurentPoly | Scalar) -> LaurentPoly:
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return LaurentPoly([(e, c * other) for e, c in self._terms])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = e1 + e2
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            return NotImplemented
        if len(self._terms) == 1:
            e, c = self._terms[0]
            return LaurentPoly({e * k: c ** k})
        if k < 0:
            raise ValueError('negative power of a non-monomial Laurent polynomial')
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def evaluate(self, q0: Scalar) -> Fraction:
        """Specialize q to the nonzero rational q0.

        >>> (Q**2 - 1).evaluate(Fraction(7, 5))
        Fraction(24, 25)
        """
        q0 = Fraction(q0)
        if not q0:
            raise ZeroSpecialization('q must specialize to a unit, got 0')
        out = Fraction(0)
        for e, c in self._terms:
            out += c * q0 ** e
        return out

    def min_exponent(self) -> int:
        if not self._terms:
            raise ValueError('zero polynomial has no exponents')
        return self._terms[0][0]

    def max_exponent(self) -> int:
        if not self._terms:
            raise ValueError('zero polynomial has no exponents')
        return self._terms[-1][0]

    def coefficient(self, e: int) -> Fraction:
        for e1, c in self._terms:
            if e1 == e:
                return c
        return Fraction(0)

    def to_json(self) -> list[list]:
        """Encode as [[exponent, "num", "den"], ...] sorted by exponent."""
        return [[e, str(c.numerator), str(c.denominator)] for e, c in self._terms]

    @classmethod
    def from_json(cls, data: Iterable[Iterable]) -> LaurentPoly:
        return cls([(int(e), Fraction(int(num), int(den))) for e, num, den in data])

    def __repr__(self) -> str:
        return f'LaurentPoly({dict(self._terms)!r})'

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for e, c in self._terms:
            if e == 0:
                parts.append(str(c))
            else:
                var = 'q' if e == 1 else f'q^{e}'
                if c == 1:
                    parts.append(var)
                elif c == -1:
                    parts.append(f'-{var}')
                else:
                    parts.append(f'{c}*{var}')
        out = parts[0]
        for p in parts[1:]:
            out += f' + {p}' if not p.startswith('-') else f' - {p[1:]}'
        return out


def lp(c: Scalar, e: int = 0) -> LaurentPoly:
    """Monomial c * q^e."""
    return LaurentPoly({e: c})


Q = LaurentPoly({1: 1})
ONE = LaurentPoly({0: 1})
ZERO = LaurentPoly()
