"""Banded matrices M(n, r), their maximal minors, and the ideal they generate.

M(n, r) is the r x (n + r - 1) matrix whose row i carries x_1, ..., x_n
starting in column i.  Its maximal minors generate (x_1, ..., x_n)^r;
two independent checks are provided: a rank computation on the
coefficient vectors of all minors, and explicit certificates built in
increasing lex order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import kernels
from .errors import CertificateError, GuardError
from .exactalg import (
    Monomial,
    Polynomial,
    binomial,
    exact_rank,
    lex_compare,
    lex_key,
    monomials_of_degree,
)

PolyMatrix = list[list[Polynomial]]

DEFAULT_MAX_MINORS = 10**5
DEFAULT_MAX_DIM = 10**4


@dataclass(frozen=True)
class BandMatrix:
    n: int
    r: int
    entries: tuple[tuple[Polynomial, ...], ...] = field(repr=False, compare=False)

    @property
    def ncols(self) -> int:
        return self.n + self.r - 1

    def as_lists(self) -> PolyMatrix:
        return [list(row) for row in self.entries]

    def column(self, c: int) -> list[Polynomial]:
        return [row[c] for row in self.entries]


def build_band_matrix(n: int, r: int) -> BandMatrix:
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    zero = Polynomial.zero(n)
    xs = [Polynomial.variable(i, n) for i in range(n)]
    rows = tuple(
        tuple(xs[c - i] if 0 <= c - i < n else zero for c in range(n + r - 1))
        for i in range(r)
    )
    return BandMatrix(n, r, rows)


@dataclass(frozen=True)
class ColumnSelection:
    """Exponent vector alpha picking r columns of M(n, r), r = sum(alpha).

    Rows of the square submatrix are split into consecutive blocks of
    sizes alpha_1, ..., alpha_n; a row j in block k (both zero-based)
    takes the column where x_{k+1} sits on row j, which is column j + k.
    """

    alpha: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        if not self.alpha or any(a < 0 for a in self.alpha):
            raise ValueError(f"alpha must be a non-empty tuple of non-negative ints: {self.alpha}")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def r(self) -> int:
        return sum(self.alpha)

    @property
    def columns(self) -> tuple[int, ...]:
        cols = []
        row = 0
        for k, a in enumerate(self.alpha):
            for _ in range(a):
                cols.append(row + k)
                row += 1
        return tuple(cols)


def build_submatrix(sel: ColumnSelection, r: int | None = None) -> PolyMatrix:
    """The r x r matrix M_alpha(r)."""
    if r is not None and sel.r != r:
        raise ValueError(f"sum(alpha) = {sel.r} does not equal r = {r}")
    if sel.r < 1:
        raise ValueError("alpha must have positive sum")
    band = build_band_matrix(sel.n, sel.r)
    cols = sel.columns
    return [[row[c] for c in cols] for row in band.entries]


def determinant(m: PolyMatrix) -> Polynomial:
    """Exact determinant by row-wise Laplace expansion, memoised on column subsets."""
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("determinant of a non-square matrix")
    if size == 0:
        raise ValueError("determinant of an empty matrix")
    nvars = m[0][0].nvars
    memo: dict[int, Polynomial] = {}

    def minor(i: int, mask: int) -> Polynomial:
        # rows i.. against the columns set in mask
        if i == size:
            return Polynomial.constant(nvars, 1)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        acc = Polynomial.zero(nvars)
        pos = 0
        for c in range(size):
            if not mask >> c & 1:
                continue
            entry = m[i][c]
            if entry:
                term = entry * minor(i + 1, mask & ~(1 << c))
                acc = acc - term if pos % 2 else acc + term
            pos += 1
        memo[mask] = acc
        return acc

    return minor(0, (1 << size) - 1)


@lru_cache(maxsize=4096)
def minor_of(alpha: tuple[int, ...]) -> Polynomial:
    """det M_alpha(sum(alpha)), cached."""
    return determinant(build_submatrix(ColumnSelection(alpha)))


@dataclass(frozen=True)
class MinorIdealVerdict:
    n: int
    r: int
    holds: bool
    rank_found: int
    expected_rank: int
    minor_count: int
    homogeneous: bool


def verify_minor_ideal(n: int, r: int, max_minors: int = DEFAULT_MAX_MINORS) -> MinorIdealVerdict:
    """Span check for I_r(M(n, r)) = (x_1..x_n)^r.

    All maximal minors are homogeneous of degree r, so equality holds iff
    their coefficient vectors span the degree-r monomial space.
    """
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    count = binomial(n + r - 1, r)
    if count > max_minors:
        raise GuardError(
            f"{count} maximal minors exceed guard {max_minors}; try the certificate method"
        )
    basis = monomials_of_degree(n, r)
    rows = []
    homogeneous = True
    for alpha in basis:
        det = minor_of(alpha)
        if det and (not det.is_homogeneous() or det.degree() != r):
            homogeneous = False
        rows.append([det.coeff(m) for m in basis])
    rank = exact_rank(rows)
    expected = binomial(n + r - 1, n - 1)
    return MinorIdealVerdict(n, r, homogeneous and rank == expected, rank, expected, count, homogeneous)


@dataclass(frozen=True)
class MinorCertificate:
    """target = sum(coefficient * det M_selection) over the listed terms."""

    target: Monomial
    terms: tuple[tuple[Polynomial, ColumnSelection], ...]
    pivot_sign: int

    def expand(self) -> Polynomial:
        acc = Polynomial.zero(len(self.target))
        for coeff, sel in self.terms:
            acc = acc + coeff * minor_of(sel.alpha)
        return acc

    def verify(self) -> bool:
        return self.expand() == Polynomial.monomial(self.target)


@lru_cache(maxsize=64)
def certify_all(n: int, r: int) -> dict[Monomial, MinorCertificate]:
    """Certificates for every degree-r monomial, built in increasing lex order.

    For x^alpha the minor det M_alpha(r) contains x^alpha with coefficient
    +-1 and otherwise only lex-smaller monomials, each already certified;
    subtracting their certificates isolates x^alpha.
    """
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    combos: dict[Monomial, dict[tuple[int, ...], Fraction]] = {}
    certs: dict[Monomial, MinorCertificate] = {}
    for alpha in monomials_of_degree(n, r):
        det = minor_of(alpha)
        lead = det.coeff(alpha)
        if lead not in (1, -1):
            raise CertificateError(
                f"det M_{alpha}({r}) has coefficient {lead} on its own monomial", alpha
            )
        combo: dict[tuple[int, ...], Fraction] = {alpha: Fraction(1) / lead}
        for mono, c in det.items():
            if mono == alpha:
                continue
            if lex_compare(mono, alpha) > 0:
                raise CertificateError(
                    f"det M_{alpha}({r}) contains lex-larger monomial {mono}", alpha
                )
            prior = combos.get(mono)
            if prior is None:
                raise CertificateError(f"monomial {mono} has no prior certificate", alpha)
            for sel, v in prior.items():
                combo[sel] = combo.get(sel, 0) - c / lead * v
        combo = {sel: v for sel, v in combo.items() if v}
        combos[alpha] = combo
        cert = MinorCertificate(
            alpha,
            tuple(
                (Polynomial.constant(n, v), ColumnSelection(sel))
                for sel, v in sorted(combo.items(), key=lambda kv: lex_key(kv[0]))
            ),
            int(lead),
        )
        if not cert.verify():
            raise CertificateError(f"certificate for {alpha} does not expand to it", alpha)
        certs[alpha] = cert
    return certs


def monomial_certificate(n: int, r: int, target: Monomial) -> MinorCertificate:
    target = tuple(target)
    if len(target) != n or any(a < 0 for a in target) or sum(target) != r:
        raise ValueError(f"target {target} is not a degree-{r} monomial in {n} variables")
    return certify_all(n, r)[target]


@dataclass(frozen=True)
class SurjectivityVerdict:
    n: int
    k: int
    j: int
    surjective: bool
    rank: int
    target_dim: int
    domain_dim: int


def surjective_in_degree(n: int, k: int, j: int, max_dim: int = DEFAULT_MAX_DIM) -> SurjectivityVerdict:
    """Is the degree-j part of Psi = M(n, k): S(-1)^{n+k-1} -> S^k onto?

    Rows of the scalar matrix index (target copy, degree-j monomial),
    columns index (domain copy, degree-(j-1) monomial).
    """
    if j < 0:
        raise ValueError(f"degree must be >= 0, got {j}")
    band = build_band_matrix(n, k)
    target_basis = monomials_of_degree(n, j)
    target_dim = k * len(target_basis)
    if target_dim > max_dim:
        raise GuardError(f"target dimension {target_dim} exceeds guard {max_dim}")
    index = {(row, m): row * len(target_basis) + t for row in range(k) for t, m in enumerate(target_basis)}
    domain_basis = monomials_of_degree(n, j - 1)
    columns = []
    for c in range(band.ncols):
        for u in domain_basis:
            image = Polynomial.monomial(u)
            col = [0] * target_dim
            for row in range(k):
                for mono, coeff in (band.entries[row][c] * image).items():
                    col[index[(row, mono)]] += coeff
            columns.append(col)
    if not columns:
        rank = 0
    else:
            rank = exact_rank([list(r) for r in zip(*columns)])
    return SurjectivityVerdict(n, k, j, rank == target_dim, rank, target_dim, len(columns))
