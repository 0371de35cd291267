"""The *-semigroup of colored broken pair partitions.

A broken pair partition is a diagram on base points 1..n where every point
either belongs to a colored pair or carries a single open leg (left or
right) of some color; the legs of each color/side are numbered bijectively
1..count.  Multiplication concatenates diagrams and joins right legs of the
first factor with left legs of the second factor of the same color:
the lowest-numbered legs join first (number k with number k), so a freshly
opened right leg carries number 1 and is the first one consumed; leg
numbers count outward from the seam.  Surviving legs of the outer factor
are renumbered above the inner factor's legs.  Equality is structural on
this canonical form, which encodes equivalence up to order-preserving
relabeling of base points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .partitions import CapacityError, ColoredPairPartition

MAX_PRODUCT_POINTS = 64

Legs = tuple[tuple[int, int], ...]  # sorted (point, leg number)


def _check_legs(legs: Sequence[tuple[int, int]], what: str):
    numbers = sorted(num for _, num in legs)
    if numbers != list(range(1, len(legs) + 1)):
        raise ValueError(f"{what} numbering must be a bijection onto 1..count")


@dataclass(frozen=True)
class BrokenPairPartition:
    """Canonical-form broken pair partition on base points 1..n."""

    n: int
    num_colors: int
    pairs: tuple[tuple[tuple[int, int], ...], ...]
    left_legs: tuple[Legs, ...]
    right_legs: tuple[Legs, ...]

    def __post_init__(self):
        for group in (self.pairs, self.left_legs, self.right_legs):
            if len(group) != self.num_colors:
                raise ValueError("need one entry per color")
        used = []
        for a in range(self.num_colors):
            for l, r in self.pairs[a]:
                if not 1 <= l < r <= self.n:
                    raise ValueError(f"bad pair ({l},{r})")
                used += [l, r]
            _check_legs(self.left_legs[a], "left leg")
            _check_legs(self.right_legs[a], "right leg")
            used += [p for p, _ in self.left_legs[a]]
            used += [p for p, _ in self.right_legs[a]]
        if sorted(used) != list(range(1, self.n + 1)):
            raise ValueError("roles must partition the base set 1..n")

    @property
    def has_legs(self) -> bool:
        return any(self.left_legs) or any(self.right_legs)

    def leg_counts(self, a: int) -> tuple[int, int]:
        return len(self.left_legs[a]), len(self.right_legs[a])

    def as_colored(self) -> ColoredPairPartition:
        """View a leg-free diagram as a colored pair partition."""
        if self.has_legs:
            raise ValueError("diagram has open legs")
        pairs = []
        colors = []
        for a in range(self.num_colors):
            pairs += list(self.pairs[a])
            colors += [a] * len(self.pairs[a])
        return ColoredPairPartition.of(pairs, colors, self.num_colors)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "colors": self.num_colors,
            "per_color": [
                {
                    "pairs": [list(p) for p in self.pairs[a]],
                    "left_legs": {str(p): num for p, num in self.left_legs[a]},
                    "right_legs": {str(p): num for p, num in self.right_legs[a]},
                }
                for a in range(self.num_colors)
            ],
        }


def broken_from_json(obj: dict) -> BrokenPairPartition:
    k = obj["colors"]
    pairs, lefts, rights = [], [], []
    for entry in obj["per_color"]:
        pairs.append(tuple(sorted((min(p), max(p)) for p in entry["pairs"])))
        lefts.append(
            tuple(sorted((int(p), num) for p, num in entry.get("left_legs", {}).items()))
        )
        rights.append(
            tuple(sorted((int(p), num) for p, num in entry.get("right_legs", {}).items()))
        )
    return BrokenPairPartition(obj["n"], k, tuple(pairs), tuple(lefts), tuple(rights))


def empty(num_colors: int = 2) -> BrokenPairPartition:
    none: tuple = ((),) * num_colors
    return BrokenPairPartition(0, num_colors, none, none, none)


def left_hook(color: int, num_colors: int = 2) -> BrokenPairPartition:
    """One point with a single open left leg of the given color."""
    lefts = tuple(((1, 1),) if a == color else () for a in range(num_colors))
    none: tuple = ((),) * num_colors
    return BrokenPairPartition(1, num_colors, none, lefts, none)


def right_hook(color: int, num_colors: int = 2) -> BrokenPairPartition:
    """One point with a single open right leg of the given color."""
    rights = tuple(((1, 1),) if a == color else () for a in range(num_colors))
    none: tuple = ((),) * num_colors
    return BrokenPairPartition(1, num_colors, none, none, rights)


def embed(p: ColoredPairPartition) -> BrokenPairPartition:
    """A colored pair partition as a leg-free broken diagram."""
    pairs = tuple(
        tuple(
            pair
            for pair, c in zip(p.base.pairs, p.colors)
            if c == a
        )
        for a in range(p.num_colors)
    )
    none: tuple = ((),) * p.num_colors
    return BrokenPairPartition(p.size, p.num_colors, pairs, none, none)


def multiply(d1: BrokenPairPartition, d2: BrokenPairPartition) -> BrokenPairPartition:
    """Concatenate d1 and d2 and join legs across the seam.

    Per color, min(|R_1|, |L_2|) pairs form; joined legs are matched by
    equal numbers starting at 1, the new pair's left point lying in d1.
    Surviving right legs of d1 are renumbered above d2's right legs, and
    surviving left legs of d2 above d1's left legs.
    """
    if d1.num_colors != d2.num_colors:
        raise ValueError("operands must share the color set")
    shift = d1.n
    pairs, lefts, rights = [], [], []
    for a in range(d1.num_colors):
        r1 = {num: p for p, num in d1.right_legs[a]}
        l2 = {num: p + shift for p, num in d2.left_legs[a]}
        m = min(len(r1), len(l2))
        joined = [(r1[j], l2[j]) for j in range(1, m + 1)]
        pairs.append(
            tuple(
                sorted(
                    list(d1.pairs[a])
                    + [(l + shift, r + shift) for l, r in d2.pairs[a]]
                    + joined
                )
            )
        )
        n_l1 = len(d1.left_legs[a])
        n_r2 = len(d2.right_legs[a])
        lefts.append(
            tuple(
                sorted(
                    list(d1.left_legs[a])
                    + [
                        (p + shift, num + n_l1 - m)
                        for p, num in d2.left_legs[a]
                        if num > m
                    ]
                )
            )
        )
        rights.append(
            tuple(
                sorted(
                    [(p + shift, num) for p, num in d2.right_legs[a]]
                    + [
                        (p, num + n_r2 - m)
                        for p, num in d1.right_legs[a]
                        if num > m
                    ]
                )
            )
        )
    return BrokenPairPartition(
        d1.n + d2.n, d1.num_colors, tuple(pairs), tuple(lefts), tuple(rights)
    )


def involution(d: BrokenPairPartition) -> BrokenPairPartition:
    """Mirror reflection: base order reversed, left and right legs swapped."""
    flip = lambda p: d.n + 1 - p
    pairs = tuple(
        tuple(sorted((flip(r), flip(l)) for l, r in d.pairs[a]))
        for a in range(d.num_colors)
    )
    lefts = tuple(
        tuple(sorted((flip(p), num) for p, num in d.right_legs[a]))
        for a in range(d.num_colors)
    )
    rights = tuple(
        tuple(sorted((flip(p), num) for p, num in d.left_legs[a]))
        for a in range(d.num_colors)
    )
    return BrokenPairPartition(d.n, d.num_colors, pairs, lefts, rights)


def evaluate_t_hat(
    d: BrokenPairPartition, t: Callable[[ColoredPairPartition], object]
):
    """Extension of a pair-partition weight: t on leg-free diagrams, 0 else."""
    if d.has_legs:
        return Fraction(0)
    return t(d.as_colored())


def gram_matrix(
    family: Sequence[BrokenPairPartition],
    t: Callable[[ColoredPairPartition], object],
) -> list[list]:
    """The matrix t_hat(d_i* . d_j) over the given family."""
    if not family:
        raise ValueError("family must be nonempty")
    stars = [involution(d) for d in family]
    out = []
    for di in stars:
        row = []
        for dj in family:
            if di.n + dj.n > MAX_PRODUCT_POINTS:
                raise CapacityError("gram product exceeds the size budget")
            row.append(evaluate_t_hat(multiply(di, dj), t))
        out.append(row)
    return out


# ---------------------------------------------------------------------------
# standard form


@dataclass(frozen=True)
class RightHookRun:
    colors: tuple[int, ...]


@dataclass(frozen=True)
class LeftHookRun:
    colors: tuple[int, ...]


@dataclass(frozen=True)
class PermutationBlock:
    """Renumbering of the currently open right legs, one permutation per
    color in 0-based one-line notation: leg number j becomes perms[a][j-1]+1."""

    perms: tuple[tuple[int, ...], ...]


Factor = RightHookRun | LeftHookRun | PermutationBlock


@dataclass(frozen=True)
class StandardForm:
    num_colors: int
    factors: tuple[Factor, ...]


def permute_right_legs(
    d: BrokenPairPartition, perms: Sequence[Sequence[int]]
) -> BrokenPairPartition:
    rights = []
    for a in range(d.num_colors):
        perm = perms[a]
        if sorted(perm) != list(range(len(d.right_legs[a]))):
            raise ValueError("permutation must match the open leg count")
        rights.append(
            tuple(sorted((p, perm[num - 1] + 1) for p, num in d.right_legs[a]))
        )
    return BrokenPairPartition(
        d.n, d.num_colors, d.pairs, d.left_legs, tuple(rights)
    )


def standard_form(p: ColoredPairPartition) -> StandardForm:
    """Factor p into right-hook runs, leg permutations, and left-hook runs.

    Hook products alone close the most recently opened leg of each color, so
    a permutation block is inserted immediately before a left-hook run
    whenever the pairs it closes are not already on top, and nowhere else.
    """
    lefts = p.base.left_points()
    factors: list[Factor] = []
    # per color: open pair ids, position 0 = leg number 1 (most recent)
    open_: list[list[int]] = [[] for _ in range(p.num_colors)]

    k = 1
    while k <= p.size:
        if k in lefts:
            run = []
            while k <= p.size and k in lefts:
                c = p.point_color(k)
                run.append(c)
                open_[c].insert(0, p.base.pair_index(k))
                k += 1
            factors.append(RightHookRun(tuple(run)))
        else:
            run_points = []
            while k <= p.size and k not in lefts:
                run_points.append(k)
                k += 1
            closing: list[list[int]] = [[] for _ in range(p.num_colors)]
            for pt in run_points:
                closing[p.point_color(pt)].append(p.base.pair_index(pt))
            perms = []
            nontrivial = False
            for a in range(p.num_colors):
                rest = [q for q in open_[a] if q not in closing[a]]
                desired = closing[a] + rest
                perm = tuple(desired.index(q) for q in open_[a])
                perms.append(perm)
                if perm != tuple(range(len(perm))):
                    nontrivial = True
                open_[a] = desired
            if nontrivial:
                factors.append(PermutationBlock(tuple(perms)))
            factors.append(LeftHookRun(tuple(p.point_color(pt) for pt in run_points)))
            for pt in run_points:
                open_[p.point_color(pt)].pop(0)
    return StandardForm(p.num_colors, tuple(factors))


def standard_form_product(sf: StandardForm) -> BrokenPairPartition:
    """Multiply the factors of a standard form back out."""
    acc = empty(sf.num_colors)
    for factor in sf.factors:
        if isinstance(factor, RightHookRun):
            for c in factor.colors:
                acc = multiply(acc, right_hook(c, sf.num_colors))
        elif isinstance(factor, LeftHookRun):
            for c in factor.colors:
                acc = multiply(acc, left_hook(c, sf.num_colors))
        else:
            acc = permute_right_legs(acc, factor.perms)
    return acc


def enumerate_broken(
    max_points: int, num_colors: int, include_right_legs: bool = False
) -> list[BrokenPairPartition]:
    """All broken diagrams on at most max_points base points.

    By default only diagrams without right legs are produced: in any Gram
    matrix t_hat(d_i* . d_j) the rows of right-legged diagrams vanish
    identically, so they add nothing to a positivity check.
    """
    sides = ("L", "R") if include_right_legs else ("L",)
    out: list[BrokenPairPartition] = []
    for n in range(max_points + 1):
        for diagram in _enumerate_broken_exact(n, num_colors, sides):
            out.append(diagram)
    return out


def _enumerate_broken_exact(
    n: int, num_colors: int, sides: tuple[str, ...]
) -> Iterable[BrokenPairPartition]:
    def matchings(points: list[int]):
        if not points:
            yield []
            return
        first, rest = points[0], points[1:]
        # first point stays single
        for match in matchings(rest):
            yield match
        for j, other in enumerate(rest):
            for match in matchings(rest[:j] + rest[j + 1 :]):
                yield [(first, other)] + match

    for match in matchings(list(range(1, n + 1))):
        paired = {p for pair in match for p in pair}
        singles = [p for p in range(1, n + 1) if p not in paired]
        for pair_colors in itertools.product(range(num_colors), repeat=len(match)):
            pairs = [[] for _ in range(num_colors)]
            for pair, c in zip(match, pair_colors):
                pairs[c].append(pair)
            for roles in itertools.product(
                [(s, c) for s in sides for c in range(num_colors)],
                repeat=len(singles),
            ):
                groups: dict[tuple[str, int], list[int]] = {}
                for pt, role in zip(singles, roles):
                    groups.setdefault(role, []).append(pt)
                for numbered in _leg_numberings(groups):
                    lefts = [[] for _ in range(num_colors)]
                    rights = [[] for _ in range(num_colors)]
                    for (side, c), legs in numbered.items():
                        (lefts if side == "L" else rights)[c] = legs
                    yield BrokenPairPartition(
                        n,
                        num_colors,
                        tuple(tuple(sorted(ps)) for ps in pairs),
                        tuple(tuple(sorted(ls)) for ls in lefts),
                        tuple(tuple(sorted(rs)) for rs in rights),
                    )


def _leg_numberings(groups: dict[tuple[str, int], list[int]]):
    keys = sorted(groups)
    pools = [
        [list(zip(groups[key], perm)) for perm in itertools.permutations(range(1, len(groups[key]) + 1))]
        for key in keys
    ]
    for combo in itertools.product(*pools):
        yield dict(zip(keys, combo))
