import itertools

import pytest

from conftest import brute_orders
from helly_orders import oracle
from helly_orders.constructions import gen_natural, gen_two_extreme_tight
from helly_orders.core import MarkVariant, build_clique, check_order, relabel_order
from helly_orders.helly import SplitMix64, planted_clique, random_clique, random_hypergraph

VARIANTS = list(MarkVariant)


def test_natural_order_is_found():
    H = gen_natural(3, 4, MarkVariant.TWO_EXTREME)
    result = oracle.decide(H)
    assert result.exists and result.order.seq == (1, 2, 3, 4)


def test_tight_two_extreme_r4():
    H = gen_two_extreme_tight(4)
    assert not oracle.decide(H).exists
    for U in itertools.combinations(H.vertices, 5):
        result = oracle.decide(H, U)
        assert result.exists
        assert check_order(H, result.order).agrees


def test_unique_up_to_duality_when_n_is_large():
    H = gen_natural(4, 7, MarkVariant.TWO_EXTREME)
    orders = oracle.enumerate_orders(H)
    assert [o.seq for o in orders] == [tuple(range(1, 8)), tuple(range(7, 0, -1))]
    assert orders[0].dual() == orders[1]


def test_single_edge_r4_has_swappable_middle():
    H = build_clique(4, 4, MarkVariant.TWO_EXTREME, [(1, 4)])
    orders = oracle.enumerate_orders(H)
    assert len(orders) == 4
    assert len(oracle.enumerate_orders(H, limit=3)) == 3


def test_empty_subset_has_one_order():
    H = gen_natural(3, 4, MarkVariant.MIN_MARKED)
    assert [o.seq for o in oracle.enumerate_orders(H, [])] == [()]
    assert oracle.count(H, []).count == 1


def test_brute_force_helper_agrees_with_numpy_filter():
    H = gen_two_extreme_tight(3)
    assert [o.seq for o in oracle.brute_force(H)] == brute_orders(H) == []
    H = gen_natural(3, 5, MarkVariant.ONE_EXTREME)
    assert [o.seq for o in oracle.brute_force(H)] == brute_orders(H)


@pytest.mark.parametrize("variant", VARIANTS)
def test_matches_permutation_filter(variant):
    rng = SplitMix64(2024 + VARIANTS.index(variant))
    for trial in range(60):
        r = 3 + rng.below(2)
        n = r + rng.below(7 - r)
        kind = trial % 3
        if kind == 0:
            H = random_clique(variant, r, n, rng)
        elif kind == 1:
            H = planted_clique(variant, r, n, rng)
        else:
            H = random_hypergraph(variant, r, n, rng, keep_permille=300)
        expected = brute_orders(H)
        got = [o.seq for o in oracle.enumerate_orders(H)]
        assert got == expected
        result = oracle.decide(H)
        assert result.exists == bool(expected)
        assert result.order is None or result.order.seq == expected[0]


@pytest.mark.parametrize("variant", [MarkVariant.TWO_EXTREME, MarkVariant.ONE_EXTREME])
def test_orders_closed_under_dual(variant):
    rng = SplitMix64(99)
    for _ in range(25):
        H = planted_clique(variant, 3, 5, rng)
        orders = {o.seq for o in oracle.enumerate_orders(H)}
        assert orders and len(orders) % 2 == 0
        assert orders == {s[::-1] for s in orders}


def test_subset_semantics_match_induced_instance():
    rng = SplitMix64(5)
    for variant in VARIANTS:
        H = planted_clique(variant, 3, 6, rng)
        for U in [(1, 2, 4, 6), (2, 3, 5), (1, 3, 4, 5, 6)]:
            direct = oracle.decide(H, U)
            induced = oracle.decide(H.induced(U))
            assert direct.exists == induced.exists
            assert direct.order == relabel_order(induced.order, U)


def test_count_reports_first_order():
    H = gen_natural(3, 4, MarkVariant.ONE_EXTREME)
    result = oracle.count(H)
    assert result.exists and result.count == len(brute_orders(H))
    assert result.order.seq == brute_orders(H)[0]
