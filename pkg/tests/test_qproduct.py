from fractions import Fraction

import pytest

from gbmoments.broken import enumerate_broken
from gbmoments.moments import (
    t_free,
    t_tensor,
    t_uncolored,
    thoma_n,
    tn_handle,
    tn_uncolored_handle,
)
from gbmoments.partitions import (
    CapacityError,
    ColoredPairPartition,
    PairPartition,
    crossings,
    enumerate_colored,
    enumerate_pair_partitions,
)
from gbmoments.qproduct import (
    QMatrix,
    clt_error_curve,
    gram_psd_check,
    q_product_eval,
    q_product_handle,
    stirling_check,
    t_q_limit,
    t_q_star_n,
)

HALF = Fraction(1, 2)
CROSSING = PairPartition.of([(1, 3), (2, 4)])


def test_qmatrix_validation():
    with pytest.raises(ValueError):
        QMatrix.of([[1, HALF], [Fraction(1, 3), 1]])
    with pytest.raises(ValueError):
        QMatrix.of([[2]])
    q = QMatrix.of([[1, -1], [-1, 1]])
    assert q.periodic(3, 4) == -1
    assert q.periodic(1, 3) == 1


def test_q_product_examples():
    ones = lambda v: Fraction(1)
    q = QMatrix.of([[1, Fraction(1, 3)], [Fraction(1, 3), 1]])
    p = ColoredPairPartition.of([(1, 2), (3, 4)], [0, 1])
    assert q_product_eval([ones, ones], q, p) == 1
    p = ColoredPairPartition.of([(1, 3), (2, 4)], [0, 1])
    assert q_product_eval([ones, ones], q, p) == Fraction(1, 3)


def test_q_product_all_ones_is_tensor():
    q1 = QMatrix.constant(2, 1)
    comp = tn_uncolored_handle(2)
    for m in range(1, 4):
        for p in enumerate_colored(m, 2):
            assert q_product_eval([comp, comp], q1, p) == t_tensor(comp, comp, p)


def test_q_product_color_relabel_symmetry():
    q = QMatrix.of([[1, -HALF], [-HALF, Fraction(1, 4)]])
    q_swapped = QMatrix.of([[Fraction(1, 4), -HALF], [-HALF, 1]])
    free2 = lambda v: t_free(v)
    for p in enumerate_colored(3, 2):
        swapped = ColoredPairPartition(
            p.base, tuple(1 - c for c in p.colors), 2
        )
        assert q_product_eval([free2, t_free], q, p) == q_product_eval(
            [t_free, free2], q_swapped, swapped
        )


def test_single_color_reduction():
    q = QMatrix.of([[-HALF]])
    comp = tn_uncolored_handle(2)
    for v in enumerate_pair_partitions(3):
        p = ColoredPairPartition(v, (0,) * v.m, 1)
        expected = (-HALF) ** len(crossings(v)) * comp(v)
        assert q_product_eval([comp], q, p) == expected


def test_t_q_star_n_examples():
    single = PairPartition.of([(1, 2)])
    q = QMatrix.constant(2, HALF)
    for n in (1, 2, 5):
        assert t_q_star_n(t_free, q, n, single) == 1
    # closed form q(1 - 1/n) for the crossing under the free weight
    for n in (2, 4, 8):
        assert t_q_star_n(t_free, q, n, CROSSING) == HALF * (1 - Fraction(1, n))


def test_t_q_star_n_at_base_size():
    q = QMatrix.of([[1, -HALF], [-HALF, Fraction(1, 4)]])
    got = t_q_star_n(t_free, q, 2, CROSSING)
    # direct two-color sum: only off-diagonal colorings survive the free weight
    assert got == Fraction(2, 4) * (-HALF)


def test_t_q_limit_examples():
    q = QMatrix.constant(3, HALF)
    for v in enumerate_pair_partitions(3):
        assert t_q_limit(q, v) == HALF ** len(crossings(v))
    mixed = QMatrix.of([[1, -1], [-1, 1]])
    assert t_q_limit(mixed, CROSSING) == 0


def test_clt_exact_rate():
    q = QMatrix.constant(2, HALF)
    curve = clt_error_curve(t_free, q, CROSSING, [4, 8, 16, 32])
    assert curve == [(n, HALF / n) for n in (4, 8, 16, 32)]


def test_clt_noncrossing_zero_error():
    q = QMatrix.constant(2, HALF)
    v = PairPartition.of([(1, 2), (3, 4)])
    assert clt_error_curve(t_free, q, v, [2, 8]) == [(2, 0), (8, 0)]


def test_clt_mixed_matrix_monotone():
    mixed = QMatrix.of([[1, -1], [-1, 1]])
    curve = dict(clt_error_curve(t_free, mixed, CROSSING, [8, 32]))
    assert curve[32] <= curve[8]


def test_coloring_sum_capacity():
    v = PairPartition.of([(1, 5), (2, 6), (3, 7), (4, 8)])
    with pytest.raises(CapacityError):
        t_q_star_n(t_free, QMatrix.constant(2, HALF), 64, v)


def test_gram_psd_orthonormal_hooks():
    from gbmoments.broken import left_hook

    min_eig, ok = gram_psd_check([left_hook(0), left_hook(1)], tn_handle(2))
    assert ok and min_eig == pytest.approx(1.0)


def test_gram_psd_families():
    one_color = enumerate_broken(3, 1)
    handle = lambda p: t_uncolored(thoma_n(2), p.base)
    min_eig, ok = gram_psd_check(one_color, handle)
    assert ok, min_eig

    two_color = enumerate_broken(3, 2)
    min_eig, ok = gram_psd_check(two_color, tn_handle(2))
    assert ok, min_eig

    q = QMatrix.of([[Fraction(1), Fraction(-1)], [Fraction(-1), Fraction(1)]])
    handle = q_product_handle([tn_uncolored_handle(2)] * 2, q)
    min_eig, ok = gram_psd_check(two_color, handle)
    assert ok, min_eig


def test_stirling_examples():
    assert stirling_check(-1) == (0, True)
    assert stirling_check(-2) == (0, True)
    assert stirling_check(-3) == (0, True)
    with pytest.raises(ValueError):
        stirling_check(2)
    with pytest.raises(CapacityError):
        stirling_check(-8)
