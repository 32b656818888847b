"""Decomposition of Frobenius root modules (S_[j])^{1/p^e} over S^(d).

A root x^{c/p^e} with c = a*p^e + b (0 <= b_i < p^e) lies in the summand
generated by x^{b/p^e}.  Over S^(d) that summand is a copy of S_[m]
where m is fixed by sum(a) mod d.  When gcd(p, d) = 1 the class m is
determined by sum(b) mod d alone, so the multiplicities are residue
counts of coordinate sums, computed by cyclic convolution.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import GuardError, PaperAmbiguityError
from .veronese import VeroneseContext

DEFAULT_MAX_ENUM = 10**6


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def p_valuation(d: int, p: int) -> int:
    s = 0
    while d % p == 0:
        d //= p
        s += 1
    return s


@dataclass(frozen=True)
class FrobeniusParams:
    ctx: VeroneseContext
    p: int
    e: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p!r}")
        if not isinstance(self.e, int) or self.e < 1:
            raise ValueError(f"Frobenius exponent e must be >= 1, got {self.e!r}")

    @classmethod
    def of(cls, n: int, d: int, p: int, e: int) -> "FrobeniusParams":
        return cls(VeroneseContext(n, d), p, e)

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def d(self) -> int:
        return self.ctx.d

    @property
    def root_degree(self) -> int:
        """p^e, the bound on each b-coordinate."""
        return self.p**self.e

    @property
    def rank(self) -> int:
        """p^{ne}: number of b-vectors, the generic rank of the root module."""
        return self.p ** (self.n * self.e)

    @property
    def k_e(self) -> int:
        """Remainder of p^{ne} modulo d."""
        return self.rank % self.d

    @property
    def coprime(self) -> bool:
        return math.gcd(self.p, self.d) == 1

    @property
    def p_part_exponent(self) -> int:
        """v_p(d)."""
        return p_valuation(self.d, self.p)

    @property
    def coprime_part(self) -> int:
        """d / p^{v_p(d)}."""
        return self.d // self.p**self.p_part_exponent


@dataclass(frozen=True)
class DecompositionMultiset:
    """Multiplicities n_m of S_[m], m = 0..d-1, in a root module."""

    multiplicities: tuple[int, ...]
    experimental: bool = False

    @property
    def d(self) -> int:
        return len(self.multiplicities)

    @property
    def total(self) -> int:
        return sum(self.multiplicities)

    def __getitem__(self, m: int) -> int:
        return self.multiplicities[m]

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.multiplicities))


def residue_counts(q: int, d: int) -> list[int]:
    """#{0 <= b < q : b = t mod d} for t = 0..d-1."""
    base, extra = divmod(q, d)
    return [base + (1 if t < extra else 0) for t in range(d)]


def cyclic_convolve(a: list[int], b: list[int], d: int) -> list[int]:
    out = [0] * d
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[(i + j) % d] += ai * bj
    return out


def sum_residue_counts(n: int, q: int, d: int) -> list[int]:
    """#{b in {0..q-1}^n : sum(b) = t mod d}, by n-fold cyclic convolution."""
    single = residue_counts(q, d)
    hist = [1] + [0] * (d - 1)
    for _ in range(n):
        hist = cyclic_convolve(hist, single, d)
    return hist


def decompose_roots(params: FrobeniusParams, source: int) -> DecompositionMultiset:
    """Multiplicities of (S_[source])^{1/p^e} when gcd(p, d) = 1.

    n_m counts b-vectors with sum(b) = source - m*p^e (mod d).
    """
    params.ctx.check_class(source)
    if not params.coprime:
        raise ValueError(
            f"gcd(p={params.p}, d={params.d}) != 1; use decompose_roots_general"
        )
    d, q = params.d, params.root_degree
    hist = sum_residue_counts(params.n, q, d)
    mult = tuple(hist[(source - m * q) % d] for m in range(d))
    return DecompositionMultiset(mult)


def _crt(r1: int, m1: int, r2: int, m2: int) -> int:
    # coprime moduli
    if m2 == 1:
        return r1 % m1
    return (r1 + m1 * (((r2 - r1) * pow(m1, -1, m2)) % m2)) % (m1 * m2)


def decompose_roots_general(params: FrobeniusParams, source: int) -> DecompositionMultiset:
    """Literal reading of the p | d decomposition.  EXPERIMENTAL.

    With s = v_p(d) and d = p^s * q', b-vectors with sum(b) != source
    (mod p^s) are dropped; every other b-vector contributes one copy of
    the class m with m = source (mod p^s) and m*p^e + sum(b) = source
    (mod q').  Each contributing vector stands for p^s units of rank, and
    that accounting is checked against p^{ne}.
    """
    params.ctx.check_class(source)
    if params.coprime:
        raise ValueError("gcd(p, d) = 1; use decompose_roots")
    s = params.p_part_exponent
    if params.e <= s:
        raise ValueError(f"need e > v_p(d) = {s}, got e = {params.e}")
    d, ps, cq = params.d, params.p**s, params.coprime_part
    q = params.root_degree
    hist = sum_residue_counts(params.n, q, d)
    inv = pow(q, -1, cq) if cq > 1 else 0
    mult = [0] * d
    for t, count in enumerate(hist):
        if not count or (t - source) % ps:
            continue
        k_b = ((source - t) * inv) % cq
        mult[_crt(source % ps, ps, k_b, cq)] += count
    result = DecompositionMultiset(tuple(mult), experimental=True)
    if result.total * ps != params.rank:
        raise PaperAmbiguityError(
            f"paper ambiguity encountered: {result.total} contributing vectors * p^s={ps}"
            f" != p^(ne)={params.rank}"
        )
    return result


def enumerate_oracle(
    params: FrobeniusParams, source: int, max_enum: int = DEFAULT_MAX_ENUM
) -> DecompositionMultiset:
    """Brute-force twin of decompose_roots / decompose_roots_general.

    Enumerates every b-vector and searches 0 <= m < d directly for the
    class it contributes to.
    """
    params.ctx.check_class(source)
    if params.rank > max_enum:
        raise GuardError(f"p^(ne) = {params.rank} exceeds enumeration guard {max_enum}")
    d, q = params.d, params.root_degree
    ps = params.p**params.p_part_exponent
    cq = params.coprime_part
    hist = kernels.enum_sum_histogram(params.n, q, d)
    mult = [0] * d
    for t, count in enumerate(hist):
        if not count:
            continue
        hits = [
            m
            for m in range(d)
            if (t - source) % ps == 0
            and (m - source) % ps == 0
            and (m * q + t - source) % cq == 0
        ]
        if len(hits) > 1:
            raise PaperAmbiguityError(f"residue {t} matches classes {hits}")
        for m in hits:
            mult[m] += count
    return DecompositionMultiset(tuple(mult), experimental=not params.coprime)


def splitting_number(params: FrobeniusParams) -> int:
    """Free rank a_e of (S^(d))^{1/p^e}: the multiplicity of S_[0] = S^(d)."""
    return decompose_roots(params, 0)[0]


def pinch_values(params: FrobeniusParams) -> tuple[int, int]:
    """The two values (p^{ne} - k_e)/d and that plus one."""
    lo = (params.rank - params.k_e) // params.d
    return lo, lo + 1


def pinch_holds(params: FrobeniusParams, dec: DecompositionMultiset) -> bool:
    allowed = pinch_values(params)
    return all(v in allowed for v in dec.multiplicities)
