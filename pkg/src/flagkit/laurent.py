"""
Sparse Laurent polynomials with integer coefficients.

The Hecke algebra lives over Z[v, v^-1] with v = q^(1/2). Kazhdan-Lusztig
polynomials are ordinary polynomials in q; they use the same class with the
variable name set to "q".

>>> v = LaurentPoly.monomial(1)
>>> (v - v.bar()) * (v + v.bar())
-v^-2 + v^2
>>> LaurentPoly({0: 1, 1: 1}, var="q")
1+q
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = ["LaurentPoly", "ZERO", "ONE", "V", "V_INV", "V_MINUS_V_INV"]

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    """An element of Z[x, x^-1] stored as {exponent: coefficient}.

    Instances are treated as immutable. Zero coefficients are never stored.
    """

    __slots__ = ("_c", "var", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None, var: str = "v"):
        self._c = {e: c for e, c in (coeffs or {}).items() if c}
        self.var = var
        self._hash = None

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "v") -> LaurentPoly:
        return cls({exp: coeff}, var=var)

    @classmethod
    def constant(cls, c: int, var: str = "v") -> LaurentPoly:
        return cls({0: c}, var=var)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]], var: str = "v") -> LaurentPoly:
        out: dict[int, int] = {}
        for e, c in pairs:
            out[int(e)] = out.get(int(e), 0) + int(c)
        return cls(out, var=var)

    # -- inspection ---------------------------------------------------------

    def items(self):
        return sorted(self._c.items())

    def coefficient(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def low_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def __len__(self) -> int:
        return len(self._c)

    # -- ring structure -----------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other}, var=self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, var=self.var)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._c.items()}, var=self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly(var=self.var)
            return LaurentPoly({e: c * other for e, c in self._c.items()}, var=self.var)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            (e, c), = self._c.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly({-e * (-n): c ** (-n)}, var=self.var)
        result = LaurentPoly({0: 1}, var=self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by x^k."""
        return LaurentPoly({e + k: c for e, c in self._c.items()}, var=self.var)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- involutions and substitutions --------------------------------------

    def bar(self) -> LaurentPoly:
        """The involution x -> x^-1."""
        return LaurentPoly({-e: c for e, c in self._c.items()}, var=self.var)

    def negate_invert(self) -> LaurentPoly:
        """The substitution x -> -x^-1 (a ring automorphism of the Hecke algebra)."""
        return LaurentPoly({-e: c if e % 2 == 0 else -c for e, c in self._c.items()}, var=self.var)

    def substitute_power(self, k: int, var: str | None = None) -> LaurentPoly:
        """x -> y^k, e.g. q -> v^2."""
        return LaurentPoly({e * k: c for e, c in self._c.items()}, var=var or self.var)

    def halve_exponents(self, var: str | None = None) -> LaurentPoly:
        """Inverse of substitute_power(2); every exponent must be even."""
        if any(e % 2 for e in self._c):
            raise ValueError("odd exponent present")
        return LaurentPoly({e // 2: c for e, c in self._c.items()}, var=var or self.var)

    def evaluate(self, x) -> Fraction | int:
        x = Fraction(x)
        if x == 0 and any(e < 0 for e in self._c):
            raise ZeroDivisionError("negative power evaluated at 0")
        total = sum((c * x ** e for e, c in self._c.items()), Fraction(0))
        return int(total) if total.denominator == 1 else total

    # -- serialization --------------------------------------------------------

    def to_pairs(self) -> list[list[int]]:
        return [[e, c] for e, c in sorted(self._c.items())]

    def coefficient_list(self) -> list[int]:
        """Dense coefficients from degree 0; requires no negative exponents."""
        if not self._c:
            return []
        if min(self._c) < 0:
            raise ValueError("negative exponent present")
        return [self._c.get(e, 0) for e in range(max(self._c) + 1)]

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, c in sorted(self._c.items()):
            if e == 0:
                mono = str(abs(c))
            else:
                power = self.var if e == 1 else f"{self.var}^{e}"
                mono = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        sep = "" if self.var == "q" else " "
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            text += f"{sep}{sign}{sep}{mono}"
        return text

    def __repr__(self) -> str:
        return str(self)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
V = LaurentPoly({1: 1})
V_INV = LaurentPoly({-1: 1})
V_MINUS_V_INV = LaurentPoly({1: 1, -1: -1})
