"""Dual F-signature of S^(d): generator-count upper bound, surjection-chain
lower bound, and the two closed forms they are compared against.

Everything is normalised by p^{ne}, the rank of the Frobenius pushforward
of the canonical module.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardError
from .exactalg import binomial
from .frobenius import FrobeniusParams, decompose_roots, splitting_number
from .veronese import VeroneseContext, canonical_class

DEFAULT_MAX_RANK = 10**18


@dataclass(frozen=True)
class ChainLink:
    i: int
    e: int
    f: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.f, self.e)


@dataclass(frozen=True)
class SurjectionChain:
    """e_i copies of S_[i] surject onto f_i copies of S_[k], for 0 <= i <= k."""

    n: int
    d: int
    k: int
    links: tuple[ChainLink, ...]

    def __getitem__(self, i: int) -> ChainLink:
        return self.links[i]


def surjection_chain(ctx: VeroneseContext) -> SurjectionChain:
    """Compose banded surjections S_[i]^{n+i} -> S_[i+1]^{i+1} down from S_[k]."""
    k = canonical_class(ctx)
    e, f = 1, 1
    links = [ChainLink(k, e, f)]
    for i in range(k - 1, -1, -1):
        e *= ctx.n + i
        f *= i + 1
        links.append(ChainLink(i, e, f))
    return SurjectionChain(ctx.n, ctx.d, k, tuple(reversed(links)))


def _canonical_multiplicities(params: FrobeniusParams) -> tuple[int, tuple[int, ...]]:
    k = canonical_class(params.ctx)
    return k, decompose_roots(params, k).multiplicities


def upper_bound(params: FrobeniusParams) -> Fraction:
    """Generator count: N <= sum_{i<=k} mu(S_[i]) n_i / mu(S_[k])."""
    k, mult = _canonical_multiplicities(params)
    n = params.n
    num = sum(binomial(n + i - 1, n - 1) * mult[i] for i in range(k + 1))
    return Fraction(num, binomial(n + k - 1, n - 1))


def lower_bound(params: FrobeniusParams) -> int:
    """Copies of S_[k] certified by the chain: sum_i f_i * floor(n_i / e_i)."""
    k, mult = _canonical_multiplicities(params)
    chain = surjection_chain(params.ctx)
    return sum(link.f * (mult[link.i] // link.e) for link in chain.links)


def closed_form_prop(ctx: VeroneseContext) -> Fraction:
    """(1/n) * ceil(n/d), the common limit of both bounds."""
    return Fraction(-(-ctx.n // ctx.d), ctx.n)


def closed_form_thm(ctx: VeroneseContext) -> Fraction:
    """(1/d) * ceil(d/n), the value stated in the theorem header."""
    return Fraction(-(-ctx.d // ctx.n), ctx.d)


def binomial_sum_form(ctx: VeroneseContext) -> Fraction:
    """binom(n+k, n) / (d * binom(n+k-1, n-1)), before simplification."""
    n, k = ctx.n, canonical_class(ctx)
    return Fraction(binomial(n + k, n), ctx.d * binomial(n + k - 1, n - 1))


def f_signature_estimate(params: FrobeniusParams) -> Fraction:
    """a_e / p^{ne}; the residue field is perfect so no extra exponent enters."""
    return Fraction(splitting_number(params), params.rank)


@dataclass(frozen=True)
class SignatureReport:
    n: int
    d: int
    p: int
    e: int
    rank: int
    upper_bound_N: Fraction
    lower_bound_N: int
    closed_form_prop: Fraction
    closed_form_thm: Fraction

    @property
    def upper_normalized(self) -> Fraction:
        return self.upper_bound_N / self.rank

    @property
    def lower_normalized(self) -> Fraction:
        return Fraction(self.lower_bound_N, self.rank)

    @property
    def gap(self) -> Fraction:
        """(upper - lower) / p^{ne}."""
        return self.upper_normalized - self.lower_normalized

    @property
    def closed_forms_agree(self) -> bool:
        return self.closed_form_prop == self.closed_form_thm


def signature_report(params: FrobeniusParams) -> SignatureReport:
    if not params.coprime:
        raise ValueError(f"gcd(p={params.p}, d={params.d}) != 1")
    return SignatureReport(
        params.n,
        params.d,
        params.p,
        params.e,
        params.rank,
        upper_bound(params),
        lower_bound(params),
        closed_form_prop(params.ctx),
        closed_form_thm(params.ctx),
    )


def convergence_table(
    ctx: VeroneseContext, p: int, e_max: int, max_rank: int = DEFAULT_MAX_RANK
) -> list[SignatureReport]:
    """One report per e = 1..e_max."""
    if e_max < 1:
        raise ValueError(f"e_max must be >= 1, got {e_max}")
    if math.gcd(p, ctx.d) != 1:
        raise ValueError(f"gcd(p={p}, d={ctx.d}) != 1")
    FrobeniusParams(ctx, p, 1)  # validates p
    if p ** (ctx.n * e_max) > max_rank:
        raise GuardError(f"p^(n*e_max) = {p}^{ctx.n * e_max} exceeds guard {max_rank}")
    return [signature_report(FrobeniusParams(ctx, p, e)) for e in range(1, e_max + 1)]
