"""Dense exact-integer polynomials.

Carrier type for h, g, h' and the shelling contribution polynomials.  All
arithmetic is exact; coefficients are Python ints, stored ascending by
degree with trailing zeros stripped.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Sequence


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    last = len(coeffs)
    while last > 0 and coeffs[last - 1] == 0:
        last -= 1
    return tuple(coeffs[:last])


def add_lists(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Coefficient-list sum; lists may have different lengths."""
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def scale_list(a: Sequence[int], c: int) -> list[int]:
    return [c * x for x in a]


@lru_cache(maxsize=None)
def x_minus_one_power(t: int) -> tuple[int, ...]:
    """Coefficients of (x-1)^t, ascending."""
    if t < 0:
        raise ValueError(f"exponent must be >= 0, got {t}")
    return tuple(comb(t, i) * (-1) ** (t - i) for i in range(t + 1))


class IntPolynomial:
    """Immutable polynomial with integer coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = list(coefficients)
        if not all(isinstance(c, int) for c in coeffs):
            raise ValueError("coefficients must be integers")
        object.__setattr__(self, "coefficients", _strip(coeffs))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls(())

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coefficient])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(add_lists(self.coefficients, other.coefficients))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coefficients])

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(scale_list(self.coefficients, other))
        out = [0] * (len(self.coefficients) + len(other.coefficients))
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def taylor_shift(self, c: int) -> IntPolynomial:
        """The polynomial p(x + c)."""
        out = [0] * len(self.coefficients)
        for i, a in enumerate(self.coefficients):
            if a:
                for j in range(i + 1):
                    out[j] += a * comb(i, j) * c ** (i - j)
        return IntPolynomial(out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntPolynomial)
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        if not self.coefficients:
            return "IntPolynomial(0)"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}x" if c != 1 else "x")
            else:
                terms.append(f"{c}x^{i}" if c != 1 else f"x^{i}")
        return "IntPolynomial(" + " + ".join(terms) + ")"
