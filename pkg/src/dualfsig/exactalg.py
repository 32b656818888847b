"""Exact arithmetic: binomials, lex-ordered monomials, sparse rational polynomials."""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping

Monomial = tuple[int, ...]


class AmbientMismatchError(ValueError):
    """Raised when objects living in polynomial rings of different arity meet."""


def binomial(a: int, b: int) -> int:
    """Exact binomial coefficient, zero outside ``0 <= b <= a``."""
    if a < 0:
        raise ValueError(f"binomial requires a >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def total_degree(m: Monomial) -> int:
    return sum(m)


def lex_key(m: Monomial) -> tuple[int, ...]:
    """The monomial spelled as a sorted word of variable indices.

    ``x_1**2 * x_3`` becomes ``(0, 0, 2)``.  Comparing words in dictionary
    order with letters ``x_1 < x_2 < ... < x_n`` is the monomial order used
    throughout: within one degree, more ``x_1`` means smaller, ties broken
    by ``x_2`` and so on.
    """
    return tuple(i for i, a in enumerate(m) for _ in range(a))


def lex_compare(m1: Monomial, m2: Monomial) -> int:
    """Compare two exponent vectors; returns -1, 0 or 1.

    ``x_1**r`` is the smallest monomial of degree ``r``.
    """
    if len(m1) != len(m2):
        raise AmbientMismatchError(f"exponent vectors of length {len(m1)} and {len(m2)}")
    k1, k2 = lex_key(m1), lex_key(m2)
    return (k1 > k2) - (k1 < k2)


def monomials_of_degree(n: int, r: int) -> list[Monomial]:
    """All exponent vectors in ``n`` variables of total degree ``r``, lex-increasing."""
    if r < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), r):
        exps = [0] * n
        for v in combo:
            exps[v] += 1
        out.append(tuple(exps))
    out.sort(key=lex_key)
    return out


def _coerce(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Immutable sparse polynomial over the rationals in ``nvars`` variables.

    Terms map exponent tuples to nonzero ``Fraction`` coefficients.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | Iterable = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise AmbientMismatchError(f"monomial {mono} is not in {nvars} variables")
            c = clean.get(mono, 0) + _coerce(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Fraction]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        c = _coerce(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, exps: Monomial, c=1) -> "Polynomial":
        exps = tuple(exps)
        c = _coerce(c)
        return cls._raw(len(exps), {exps: c} if c else {})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "Polynomial":
        """The variable ``x_{i+1}`` (zero-based index ``i``)."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[i] = 1
        return cls._raw(nvars, {tuple(exps): Fraction(1)})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def monomials(self) -> list[Monomial]:
        """Support of the polynomial in increasing lex order."""
        return sorted(self._terms, key=lex_key)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=lex_key)

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise AmbientMismatchError(f"{self.nvars} vs {other.nvars} variables")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono in reversed(self.monomials()):
            c = self._terms[mono]
            factors = [
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}"
                for i, a in enumerate(mono)
                if a
            ]
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_add(p1: Polynomial, p2: Polynomial) -> Polynomial:
    return p1 + p2


def poly_mul(p1: Polynomial, p2: Polynomial) -> Polynomial:
    return p1 * p2


def poly_scale(p: Polynomial, c) -> Polynomial:
    return p.scale(c)


def clear_denominators(row: Iterable) -> list[int]:
    """Scale a row of rationals to integers by the lcm of its denominators."""
    row = [_coerce(v) for v in row]
    lcm = 1
    for v in row:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    return [int(v * lcm) for v in row]


def exact_rank(rows: list[list]) -> int:
    """Rank over the rationals of a matrix given as a list of rows.

    Each row is cleared to integers first; the integer kernels then
    decide the rank exactly.
    """
    from . import kernels

    int_rows = [clear_denominators(r) for r in rows]
    return kernels.integer_rank(int_rows)
