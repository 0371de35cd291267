"""Crossing-weighted products of moment weights and the averaging limit.

The q-product multiplies per-color weights by a factor q[c(p), c(p')] for
every crossing of the colored partition.  Averaging the n-fold product of
one weight over all colorings, with the matrix extended periodically,
converges to a pure crossing kernel; both sides are computed exactly here
so convergence rates can be asserted as rational identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .broken import BrokenPairPartition, gram_matrix
from .moments import Scalar, TFunction, UncoloredTFunction
from .partitions import (
    CapacityError,
    ColoredPairPartition,
    PairPartition,
    crossings,
)

MAX_COLORING_SUMS = 5_000_000
PSD_TOLERANCE = -1e-9


@dataclass(frozen=True)
class QMatrix:
    """Symmetric matrix of coupling constants in [-1, 1]."""

    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        k = len(self.entries)
        for row in self.entries:
            if len(row) != k:
                raise ValueError("matrix must be square")
        for i in range(k):
            for j in range(k):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("matrix must be symmetric")
                if not -1 <= self.entries[i][j] <= 1:
                    raise ValueError("entries must lie in [-1, 1]")

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "QMatrix":
        return cls(tuple(tuple(_as_scalar(x) for x in row) for row in rows))

    @classmethod
    def constant(cls, size: int, q: Scalar) -> "QMatrix":
        """The matrix with every entry equal to q."""
        q = _as_scalar(q)
        return cls(((q,) * size,) * size)

    @property
    def size(self) -> int:
        return len(self.entries)

    def at(self, i: int, j: int) -> Scalar:
        """Entry for 0-based color ids."""
        return self.entries[i][j]

    def periodic(self, i: int, j: int) -> Scalar:
        """Entry for 1-based indices of any size, reduced mod the base size."""
        return self.entries[(i - 1) % self.size][(j - 1) % self.size]


def _as_scalar(x) -> Scalar:
    if isinstance(x, float):
        return x
    return Fraction(x)


def _crossing_index_pairs(v: PairPartition) -> list[tuple[int, int]]:
    index = {pair: j for j, pair in enumerate(v.pairs)}
    return [(index[p1], index[p2]) for p1, p2 in crossings(v)]


def _subpartition(v: PairPartition, pair_ids: list[int]) -> PairPartition:
    points = sorted(p for j in pair_ids for p in v.pairs[j])
    relabel = {p: i + 1 for i, p in enumerate(points)}
    return PairPartition.of(
        (relabel[v.pairs[j][0]], relabel[v.pairs[j][1]]) for j in pair_ids
    )


def q_product_eval(
    ts: Sequence[UncoloredTFunction], q: QMatrix, p: ColoredPairPartition
) -> Scalar:
    """Crossing product times the per-color component weights."""
    if len(ts) != p.num_colors or q.size != p.num_colors:
        raise ValueError("need one component weight per color and a matching matrix")
    value: Scalar = Fraction(1)
    for (p1, p2) in crossings(p.base):
        value *= q.at(p.point_color(p1[0]), p.point_color(p2[0]))
    for b in range(p.num_colors):
        value *= ts[b](p.color_class(b))
    return value


def q_product_handle(ts: Sequence[UncoloredTFunction], q: QMatrix) -> TFunction:
    return lambda p: q_product_eval(ts, q, p)


def t_q_star_n(
    t: UncoloredTFunction, q_base: QMatrix, n: int, v: PairPartition
) -> Scalar:
    """Coloring-averaged n-fold product with the periodically extended matrix:
    n^-|V| sum over colorings of (crossing product) * (per-class weights)."""
    m = v.m
    if n < 1:
        raise ValueError("n must be positive")
    if n**m > MAX_COLORING_SUMS:
        raise CapacityError("coloring sum exceeds the budget")
    cross = _crossing_index_pairs(v)
    total: Scalar = Fraction(0)
    assignment = [0] * m

    def rec(j: int, partial: Scalar):
        nonlocal total
        if j == m:
            value = partial
            for color in set(assignment):
                ids = [jj for jj in range(m) if assignment[jj] == color]
                value *= t(_subpartition(v, ids))
                if value == 0:
                    return
            total += value
            return
        for color in range(1, n + 1):
            assignment[j] = color
            factor: Scalar = Fraction(1)
            for (j1, j2) in cross:
                if j2 == j:
                    factor *= q_base.periodic(assignment[j1], color)
            new_partial = partial * factor
            if new_partial == 0:
                continue
            rec(j + 1, new_partial)

    rec(0, Fraction(1))
    return total / Fraction(n**m)


def t_q_limit(q_base: QMatrix, v: PairPartition) -> Scalar:
    """The limit kernel: N^-|V| sum over colorings into the base colors of
    the crossing product alone."""
    m = v.m
    n = q_base.size
    if n**m > MAX_COLORING_SUMS:
        raise CapacityError("coloring sum exceeds the budget")
    cross = _crossing_index_pairs(v)
    total: Scalar = Fraction(0)
    for assignment in itertools.product(range(1, n + 1), repeat=m):
        value: Scalar = Fraction(1)
        for (j1, j2) in cross:
            value *= q_base.periodic(assignment[j1], assignment[j2])
        total += value
    return total / Fraction(n**m)


def clt_error_curve(
    t: UncoloredTFunction,
    q_base: QMatrix,
    v: PairPartition,
    n_values: Sequence[int],
) -> list[tuple[int, Scalar]]:
    """|averaged n-fold product - limit kernel| for each requested n."""
    limit = t_q_limit(q_base, v)
    return [(n, abs(t_q_star_n(t, q_base, n, v) - limit)) for n in n_values]


def gram_psd_check(
    family: Sequence[BrokenPairPartition], t: TFunction
) -> tuple[float, bool]:
    """Minimum eigenvalue of the Gram matrix t_hat(d_i* d_j) and whether it
    clears the positive-semidefiniteness tolerance."""
    gram = gram_matrix(family, t)
    matrix = np.array([[float(x) for x in row] for row in gram], dtype=float)
    if not np.allclose(matrix, matrix.T):
        raise AssertionError("gram matrix must be symmetric")
    min_eig = float(np.linalg.eigvalsh(matrix)[0])
    return min_eig, min_eig >= PSD_TOLERANCE


def _permutation_cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        count += 1
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = perm[cur]
    return count


def _stirling_unsigned(n: int) -> list[int]:
    """Row n of the unsigned cycle-count triangle: coefficients of
    x(x+1)...(x+n-1)."""
    row = [1]  # n = 0
    for size in range(n):
        new = [0] * (len(row) + 1)
        for k, val in enumerate(row):
            new[k] += size * val
            new[k + 1] += val
        row = new
    return row


def stirling_check(n: int) -> tuple[int, bool]:
    """Sum of N^(cycle count) over all permutations of 1..|N|+1, computed by
    enumeration and through the rising-factorial identity; both must agree
    and vanish for negative N."""
    if n >= 0:
        raise ValueError("the cancellation holds for negative N")
    if -n > 7:
        raise CapacityError("factorial budget limited to |N| <= 7")
    degree = -n + 1
    by_enum = sum(
        n ** _permutation_cycle_count(perm)
        for perm in itertools.permutations(range(degree))
    )
    row = _stirling_unsigned(degree)
    by_identity = sum(coef * n**k for k, coef in enumerate(row))
    rising = 1
    for j in range(degree):
        rising *= n + j
    assert by_enum == by_identity == rising
    return by_enum, by_enum == 0
