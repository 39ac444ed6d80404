"""Binary Laurent polynomials in the delay variable ``D``.

A polynomial is stored as the frozen set of exponents whose coefficient is one,
so negative exponents (``D^-1``) cost nothing extra.
"""

from __future__ import annotations

import re
from collections.abc import Iterable

__all__ = ["LaurentPoly", "PolyParseError", "ZERO", "ONE", "D"]


class PolyParseError(ValueError):
    """Raised when polynomial text does not follow the ``1+D+D^-2`` syntax."""

    def __init__(self, message: str, column: int = 0) -> None:
        super().__init__(message)
        self.column = column


_TERM = re.compile(r"^(?:(?P<one>1)|D(?:\^(?P<exp>-?[0-9]{1,9}))?)$")


class LaurentPoly:
    """Immutable polynomial over GF(2) in ``D`` and ``D^-1``."""

    __slots__ = ("_support", "_hash")

    def __init__(self, exponents: Iterable[int] = ()) -> None:
        support: set[int] = set()
        for e in exponents:
            # repeated exponents cancel in characteristic 2
            support ^= {int(e)}
        self._support = frozenset(support)
        self._hash = hash(self._support)

    @classmethod
    def monomial(cls, exponent: int) -> LaurentPoly:
        return cls((exponent,))

    @classmethod
    def _from_support(cls, support: frozenset[int]) -> LaurentPoly:
        obj = cls.__new__(cls)
        obj._support = support
        obj._hash = hash(support)
        return obj

    @property
    def support(self) -> frozenset[int]:
        return self._support

    def is_zero(self) -> bool:
        return not self._support

    def min_degree(self) -> int:
        if not self._support:
            raise ValueError("zero polynomial has no degree")
        return min(self._support)

    def max_degree(self) -> int:
        if not self._support:
            raise ValueError("zero polynomial has no degree")
        return max(self._support)

    def coefficient(self, exponent: int) -> int:
        return 1 if exponent in self._support else 0

    def reciprocal(self) -> LaurentPoly:
        """Substitute ``D -> D^-1``."""
        return LaurentPoly._from_support(frozenset(-e for e in self._support))

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``D^k``."""
        if k == 0:
            return self
        return LaurentPoly._from_support(frozenset(e + k for e in self._support))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return LaurentPoly._from_support(self._support ^ other._support)

    __sub__ = __add__

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._support or not other._support:
            return ZERO
        acc: set[int] = set()
        for a in self._support:
            for b in other._support:
                acc ^= {a + b}
        return LaurentPoly._from_support(frozenset(acc))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._support == other._support
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._support)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.format()!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self) -> str:
        """Canonical text, ascending exponents, e.g. ``D^-1+1+D^2``; zero is ``0``."""
        if not self._support:
            return "0"
        terms = []
        for e in sorted(self._support):
            if e == 0:
                terms.append("1")
            elif e == 1:
                terms.append("D")
            else:
                terms.append(f"D^{e}")
        return "+".join(terms)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse ``1+D``, ``D^-1``, ``0`` and the like; whitespace is ignored."""
        compact = "".join(text.split())
        if not compact:
            raise PolyParseError("empty polynomial")
        if compact == "0":
            return ZERO
        exponents = []
        col = 0
        for term in compact.split("+"):
            m = _TERM.match(term)
            if m is None:
                raise PolyParseError(f"bad polynomial term {term!r}", column=col)
            if m.group("one"):
                exponents.append(0)
            elif m.group("exp") is not None:
                exponents.append(int(m.group("exp")))
            else:
                exponents.append(1)
            col += len(term) + 1
        return cls(exponents)


ZERO = LaurentPoly()
ONE = LaurentPoly((0,))
D = LaurentPoly((1,))
