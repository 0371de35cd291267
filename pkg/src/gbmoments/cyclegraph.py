"""Directed cycle graph of a two-colored pair partition.

Everything here is for num_colors == 2.  Color id 0 plays the role of the
"minus" color and id 1 the "plus" color: arcs of plus-colored pairs run left
to right, arcs of minus-colored pairs are reversed.  The graph on [2m] built
from the partition's arcs together with the arcs of the derived bar-partition
decomposes into vertex-disjoint directed cycles; the number of maximal
increasing paths per cycle is the statistic that drives the two-colored
moment formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import ColorArityError, ColoredPairPartition, PairPartition

D = "D"
S = "S"


def _require_two_colors(p: ColoredPairPartition):
    if p.num_colors != 2:
        raise ColorArityError("cycle-graph analysis is defined for exactly 2 colors")


@dataclass(frozen=True)
class ColorProfile:
    """Path-count profiles of a two-colored pair partition.

    counts[b][u] is the number of b-colored pairs (l, r) with l <= u <= r,
    for u in [0, 2m+1]; r_values[k-1] is the count for k's own color.
    """

    counts: tuple[tuple[int, ...], tuple[int, ...]]
    r_values: tuple[int, ...]

    def p(self, color: int, u: int) -> int:
        return self.counts[color][u]

    def r(self, k: int) -> int:
        return self.r_values[k - 1]


def profile(p: ColoredPairPartition) -> ColorProfile:
    """Per-color span counts p_b(u) and the own-color count r(k)."""
    _require_two_colors(p)
    n = p.size
    counts = [[0] * (n + 2), [0] * (n + 2)]
    for (l, r), c in zip(p.base.pairs, p.colors):
        for u in range(l, r + 1):
            counts[c][u] += 1
    prof = (tuple(counts[0]), tuple(counts[1]))
    r_values = tuple(prof[p.point_color(k)][k] for k in range(1, n + 1))
    return ColorProfile(prof, r_values)


def classify(p: ColoredPairPartition) -> dict[int, str]:
    """Split points into dominant ('D') and subordinate ('S').

    Point k is dominant iff its own-color count r(k) exceeds the other
    color's count at k.
    """
    prof = profile(p)
    out = {}
    for k in range(1, p.size + 1):
        c = p.point_color(k)
        out[k] = D if prof.r(k) > prof.p(1 - c, k) else S
    return out


def z_map(p: ColoredPairPartition) -> dict[int, int]:
    """The fixed-point-free involution pairing each point with the nearest
    point of equal r-value on the prescribed side.

    Dominant left points and subordinate right points look right;
    dominant right points and subordinate left points look left.
    """
    prof = profile(p)
    cls = classify(p)
    lefts = p.base.left_points()
    n = p.size
    z = {}
    for k in range(1, n + 1):
        rk = prof.r(k)
        look_right = (k in lefts) == (cls[k] == D)
        if look_right:
            candidates = [k2 for k2 in range(k + 1, n + 1) if prof.r(k2) == rk]
            assert candidates, f"no equivalent point right of {k}"
            z[k] = min(candidates)
        else:
            candidates = [k2 for k2 in range(1, k) if prof.r(k2) == rk]
            assert candidates, f"no equivalent point left of {k}"
            z[k] = max(candidates)
    for k, k2 in z.items():
        assert k2 != k and z[k2] == k, "z must be a fixed-point-free involution"
    return z


def bar_partition(p: ColoredPairPartition) -> tuple[PairPartition, tuple[int, ...]]:
    """The pair partition {(k, Z(k))} with its induced coloring.

    A bar pair keeps the color of its subordinate endpoints and flips the
    color of dominant ones; the two endpoints always agree on the result.
    """
    z = z_map(p)
    cls = classify(p)
    pairs = sorted((k, z[k]) for k in z if k < z[k])
    colors = []
    for k, k2 in pairs:
        c1 = p.point_color(k) if cls[k] == S else 1 - p.point_color(k)
        c2 = p.point_color(k2) if cls[k2] == S else 1 - p.point_color(k2)
        assert c1 == c2, "bar coloring must not depend on the endpoint"
        colors.append(c1)
    return PairPartition(tuple(pairs)), tuple(colors)


def _oriented(pair: tuple[int, int], color: int) -> tuple[int, int]:
    # color id 1: keep (u, v); color id 0: reverse.
    return pair if color == 1 else (pair[1], pair[0])


@dataclass(frozen=True)
class CycleGraphAnalysis:
    """Full analysis of the directed graph attached to a 2-colored partition."""

    classification: dict[int, str]
    z: dict[int, int]
    bar_pairs: PairPartition
    bar_colors: tuple[int, ...]
    arcs_pairs: tuple[tuple[int, int], ...]
    arcs_bar: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]
    path_counts: tuple[int, ...]

    @property
    def gamma(self) -> dict[int, int]:
        """Histogram: maximal-increasing-path count -> number of cycles."""
        out: dict[int, int] = {}
        for c in self.path_counts:
            out[c] = out.get(c, 0) + 1
        return out

    @property
    def total_increasing_paths(self) -> int:
        return sum(self.path_counts)

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    def to_json(self) -> dict:
        return {
            "classification": {str(k): v for k, v in sorted(self.classification.items())},
            "z": {str(k): v for k, v in sorted(self.z.items())},
            "bar": {
                "pairs": [list(p) for p in self.bar_pairs.pairs],
                "colors": list(self.bar_colors),
            },
            "cycles": [
                {"vertices": list(vs), "inc_paths": n}
                for vs, n in zip(self.cycles, self.path_counts)
            ],
            "gamma": {str(k): v for k, v in sorted(self.gamma.items())},
        }


def maximal_monotone_paths(
    cycle_vertices: tuple[int, ...]
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Maximal increasing and decreasing vertex runs of a directed cycle.

    The cycle is given in arc order; each arc is increasing or decreasing
    and maximal runs of equal direction form the monotone paths.  A 2-cycle
    has exactly one of each.
    """
    n = len(cycle_vertices)
    signs = [cycle_vertices[i] < cycle_vertices[(i + 1) % n] for i in range(n)]
    increasing, decreasing = [], []
    starts = [i for i in range(n) if signs[i] != signs[i - 1]]
    for i in starts:
        j = i
        while signs[j % n] == signs[i]:
            j += 1
        run = tuple(cycle_vertices[k % n] for k in range(i, j + 1))
        (increasing if signs[i] else decreasing).append(run)
    return increasing, decreasing


def _increasing_run_count(cycle_vertices: tuple[int, ...]) -> int:
    """Number of maximal increasing runs in the cyclic arc sequence."""
    n = len(cycle_vertices)
    signs = [
        cycle_vertices[i] < cycle_vertices[(i + 1) % n] for i in range(n)
    ]
    return sum(
        1 for i in range(n) if signs[i] and not signs[(i + 1) % n]
    )


def build_graph(p: ColoredPairPartition) -> CycleGraphAnalysis:
    """Build the directed graph and extract its cycle/path statistics."""
    _require_two_colors(p)
    cls = classify(p)
    z = z_map(p)
    bar_pp, bar_colors = bar_partition(p)

    arcs_pairs = tuple(
        _oriented(pair, c) for pair, c in zip(p.base.pairs, p.colors)
    )
    arcs_bar = tuple(
        _oriented(pair, c) for pair, c in zip(bar_pp.pairs, bar_colors)
    )
    assert not set(arcs_pairs) & set(arcs_bar), "arc sets must be disjoint"

    succ: dict[int, int] = {}
    for u, v in arcs_pairs + arcs_bar:
        assert u not in succ, "every vertex must have out-degree 1"
        succ[u] = v
    assert sorted(succ) == list(range(1, p.size + 1))
    assert sorted(succ.values()) == list(range(1, p.size + 1))

    seen: set[int] = set()
    cycles = []
    for start in range(1, p.size + 1):
        if start in seen:
            continue
        cyc = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            cyc.append(cur)
            cur = succ[cur]
        cycles.append(tuple(cyc))

    path_counts = tuple(_increasing_run_count(c) for c in cycles)
    return CycleGraphAnalysis(
        classification=cls,
        z=z,
        bar_pairs=bar_pp,
        bar_colors=bar_colors,
        arcs_pairs=arcs_pairs,
        arcs_bar=arcs_bar,
        cycles=tuple(cycles),
        path_counts=path_counts,
    )
