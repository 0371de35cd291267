import random

import pytest

from gbmoments.broken import (
    BrokenPairPartition,
    LeftHookRun,
    PermutationBlock,
    RightHookRun,
    broken_from_json,
    embed,
    empty,
    enumerate_broken,
    evaluate_t_hat,
    gram_matrix,
    involution,
    left_hook,
    multiply,
    right_hook,
    standard_form,
    standard_form_product,
)
from gbmoments.moments import t_uncolored, thoma_n, tn_handle
from gbmoments.partitions import ColoredPairPartition, enumerate_colored


def figure_d() -> BrokenPairPartition:
    # solid (0): right legs at 1 (number 2) and 3 (number 1)
    # dotted (1): left leg at 2, right leg at 4
    return BrokenPairPartition(
        n=4,
        num_colors=2,
        pairs=((), ()),
        left_legs=((), ((2, 1),)),
        right_legs=(((1, 2), (3, 1)), ((4, 1),)),
    )


def figure_dbar() -> BrokenPairPartition:
    return BrokenPairPartition(
        n=6,
        num_colors=2,
        pairs=(((1, 4),), ((3, 6),)),
        left_legs=(((2, 1),), ()),
        right_legs=((), ((5, 1),)),
    )


def test_hook_products():
    assert multiply(right_hook(0), left_hook(0)) == embed(
        ColoredPairPartition.of([(1, 2)], [0])
    )
    d = multiply(left_hook(0), right_hook(0))
    assert d.pairs == ((), ())
    assert d.left_legs[0] == ((1, 1),)
    assert d.right_legs[0] == ((2, 1),)


def test_cross_color_hooks_do_not_join():
    d = multiply(right_hook(0), left_hook(1))
    assert d.pairs == ((), ())
    assert d.right_legs[0] == ((1, 1),)
    assert d.left_legs[1] == ((2, 1),)


def test_figure_multiplication():
    # Leg numbering matches the source diagram throughout; the solid join
    # consumes leg number 1 (the stack rule), closing (3, 6).
    prod = multiply(figure_d(), figure_dbar())
    assert prod.n == 10
    assert prod.pairs[0] == ((3, 6), (5, 8))
    assert prod.pairs[1] == ((7, 10),)
    assert prod.left_legs == ((), ((2, 1),))
    assert prod.right_legs == (((1, 1),), ((4, 2), (9, 1)))


def test_figure_involution():
    # solid left leg at 2 becomes a solid right leg at 5 and vice versa
    got = involution(figure_dbar())
    assert got == BrokenPairPartition(
        n=6,
        num_colors=2,
        pairs=(((3, 6),), ((1, 4),)),
        left_legs=((), ((2, 1),)),
        right_legs=(((5, 1),), ()),
    )


def test_involution_basics():
    assert involution(left_hook(1)) == right_hook(1)
    single = embed(ColoredPairPartition.of([(1, 2)], [0]))
    assert involution(single) == single


@pytest.fixture(scope="module")
def diagram_pool():
    return enumerate_broken(3, 2, include_right_legs=True)


def test_associativity_randomized(diagram_pool):
    rng = random.Random(20240)
    for _ in range(200):
        d1, d2, d3 = (rng.choice(diagram_pool) for _ in range(3))
        if d1.n + d2.n + d3.n > 8:
            continue
        assert multiply(multiply(d1, d2), d3) == multiply(d1, multiply(d2, d3))


def test_involution_antihomomorphism_randomized(diagram_pool):
    rng = random.Random(20241)
    for _ in range(200):
        d1, d2 = rng.choice(diagram_pool), rng.choice(diagram_pool)
        assert involution(multiply(d1, d2)) == multiply(
            involution(d2), involution(d1)
        )
        assert involution(involution(d1)) == d1


def test_evaluate_t_hat():
    tn = tn_handle(2)
    assert evaluate_t_hat(left_hook(0), tn) == 0
    assert evaluate_t_hat(empty(2), tn) == 1
    single = multiply(right_hook(1), left_hook(1))
    assert evaluate_t_hat(single, tn) == 1


def test_t_hat_extends_t():
    tn = tn_handle(2)
    from gbmoments.moments import t_n

    for p in enumerate_colored(3, 2):
        assert evaluate_t_hat(embed(p), tn) == t_n(2, p)


def test_gram_examples():
    tn = tn_handle(2)
    g = gram_matrix([left_hook(0), left_hook(1)], tn)
    assert g == [[1, 0], [0, 1]]
    assert gram_matrix([empty(2)], tn) == [[1]]


def test_gram_psd_two_point_one_color():
    import numpy as np

    family = enumerate_broken(2, 1, include_right_legs=True)
    assert len(family) == 10
    handle = lambda p: t_uncolored(thoma_n(2), p.base)
    g = gram_matrix(family, handle)
    eig = np.linalg.eigvalsh(np.array([[float(x) for x in row] for row in g]))
    assert eig.min() >= -1e-9


def test_standard_form_single_pair():
    sf = standard_form(ColoredPairPartition.of([(1, 2)], [0]))
    assert sf.factors == (RightHookRun((0,)), LeftHookRun((0,)))


def test_standard_form_crossing_needs_transposition():
    sf = standard_form(ColoredPairPartition.of([(1, 3), (2, 4)], [1, 1]))
    blocks = [f for f in sf.factors if isinstance(f, PermutationBlock)]
    assert len(blocks) == 1
    assert blocks[0].perms[1] == (1, 0)


def test_standard_form_ten_point_round_trip():
    p = ColoredPairPartition.of(
        [(1, 5), (2, 8), (3, 6), (4, 10), (7, 9)], [0, 0, 1, 1, 0]
    )
    assert standard_form_product(standard_form(p)) == embed(p)


def test_standard_form_round_trip_exhaustive():
    for m in range(1, 5):
        for p in enumerate_colored(m, 2):
            assert standard_form_product(standard_form(p)) == embed(p)


def test_enumerate_broken_counts():
    assert len(enumerate_broken(2, 1, include_right_legs=True)) == 10
    assert len(enumerate_broken(4, 1)) == 53


def test_json_round_trip():
    d = figure_dbar()
    assert broken_from_json(d.to_json()) == d
