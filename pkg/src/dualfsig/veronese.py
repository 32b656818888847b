"""The Veronese subring S^(d) of k[x_1..x_n] and its residue classes S_[j].

A class S_[j] collects the homogeneous pieces of S whose degree is
congruent to j mod d.  Classes are plain integers here; everything a
module statement needs is reduced to counting.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactalg import binomial


@dataclass(frozen=True)
class VeroneseContext:
    n: int
    d: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"need n >= 1 variables, got {self.n!r}")
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(f"need Veronese degree d >= 1, got {self.d!r}")

    def check_class(self, j: int) -> int:
        if not 0 <= j < self.d:
            raise ValueError(f"class index {j} outside 0..{self.d - 1}")
        return j


def canonical_class(ctx: VeroneseContext) -> int:
    """Residue class k of the canonical module: the degrees -n + i*d, so k = -n mod d."""
    return (-ctx.n) % ctx.d


def min_generators(ctx: VeroneseContext, j: int) -> int:
    """Minimal number of S^(d)-generators of S_[j]: the monomials of degree j."""
    ctx.check_class(j)
    return binomial(ctx.n + j - 1, ctx.n - 1)


def hilbert_function(ctx: VeroneseContext, j: int, i: int) -> int:
    """dim_k of the i-th piece of S_[j], i.e. of S_{j + i*d}."""
    ctx.check_class(j)
    if i < 0:
        raise ValueError(f"grade index must be >= 0, got {i}")
    return binomial(ctx.n - 1 + j + i * ctx.d, ctx.n - 1)


def class_of_degree(ctx: VeroneseContext, t: int) -> tuple[int, int]:
    """(class j, grade i) holding the degree-t piece of S."""
    return t % ctx.d, t // ctx.d
