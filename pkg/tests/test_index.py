import math
import random

import pytest

from absindex import (
    abs_index,
    complete_graph,
    edge_contributions,
    edge_weight,
    enumerate_connected,
    from_edges,
    gain_contrast,
    shift_gain,
    turan,
)

EXACT = 1e-12


def cycle(n):
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n):
    return from_edges(n, [(0, v) for v in range(1, n)])


class TestEdgeWeight:
    def test_degenerate_zero(self):
        assert edge_weight(1, 1) == 0.0

    def test_known_values(self):
        assert edge_weight(2, 2) == pytest.approx(math.sqrt(0.5), abs=EXACT)
        assert edge_weight(3, 4) == pytest.approx(math.sqrt(5 / 7), abs=EXACT)

    def test_real_arguments(self):
        assert edge_weight(1.5, 2.5) == pytest.approx(math.sqrt(0.5), abs=EXACT)

    def test_range(self):
        for x in (1, 2, 7.5, 40):
            for y in (1, 3.5, 50):
                assert 0 <= edge_weight(x, y) < 1

    def test_domain_rejection(self):
        with pytest.raises(ValueError):
            edge_weight(0.5, 2)
        with pytest.raises(ValueError):
            edge_weight(2, 0.99)


class TestShiftGain:
    def test_value_at_one(self):
        assert shift_gain(1, 1, 1) == pytest.approx(math.sqrt(1 / 3), abs=EXACT)

    def test_value_at_two(self):
        expected = math.sqrt(3 / 5) - math.sqrt(0.5)
        assert shift_gain(1, 2, 2) == pytest.approx(expected, abs=EXACT)

    def test_positive_sampled(self):
        rng = random.Random(1)
        for _ in range(200):
            s = rng.uniform(0.1, 5)
            x = rng.uniform(1, 30)
            y = rng.uniform(1, 30)
            assert shift_gain(s, x, y) > 0

    def test_rejects_nonpositive_shift(self):
        with pytest.raises(ValueError):
            shift_gain(0, 2, 2)


class TestGainContrast:
    def test_zero_at_equal_bounds(self):
        assert gain_contrast(2, 3, 3, 1.5) == 0.0

    def test_value(self):
        expected = (math.sqrt(1 / 3) - 0) - (math.sqrt(0.5) - math.sqrt(1 / 3))
        assert gain_contrast(1, 1, 2, 1) == pytest.approx(expected, abs=EXACT)

    def test_shrinks_in_x(self):
        # the contrast toward the smaller bound decays as x grows
        assert gain_contrast(1, 1, 3, 2) > gain_contrast(1, 1, 3, 5)

    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            gain_contrast(1, 3, 2, 1)
        with pytest.raises(ValueError):
            gain_contrast(1, 0.5, 2, 1)


class TestAbsIndex:
    def test_k2_zero(self):
        assert abs_index(from_edges(2, [(0, 1)])) == 0.0

    def test_c5(self):
        assert abs_index(cycle(5)) == pytest.approx(5 * math.sqrt(0.5), abs=EXACT)

    def test_k4(self):
        assert abs_index(complete_graph(4)) == pytest.approx(
            6 * math.sqrt(2 / 3), abs=EXACT
        )

    def test_p3(self):
        g = from_edges(3, [(0, 1), (1, 2)])
        assert abs_index(g) == pytest.approx(2 * math.sqrt(1 / 3), abs=EXACT)

    def test_edgeless(self):
        assert abs_index(from_edges(3, [])) == 0.0

    def test_bounded_by_edge_count(self):
        for n in range(2, 7):
            for g in enumerate_connected(n):
                assert 0 <= abs_index(g) < g.edge_count or g.edge_count == 0

    def test_edge_degree_form_equivalent(self):
        # the edge-degree formulation sums sqrt(1 - 2/(d_e + 2))
        for n in range(2, 6):
            for g in enumerate_connected(n):
                via_edge_degree = sum(
                    math.sqrt(1 - 2 / (g.edge_degree(u, v) + 2))
                    for u, v in g.edges()
                )
                assert abs_index(g) == pytest.approx(via_edge_degree, abs=EXACT)

    def test_isomorphism_invariance(self):
        rng = random.Random(17)
        for _ in range(100):
            n = rng.randint(2, 8)
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if rng.random() < 0.5
            ]
            g = from_edges(n, edges)
            perm = list(range(n))
            rng.shuffle(perm)
            h = from_edges(n, [(perm[u], perm[v]) for u, v in edges])
            # same multiset of summands, so equality is exact
            assert abs_index(h) == abs_index(g)


class TestEdgeContributions:
    def test_star_symmetric(self):
        contribs = edge_contributions(star(5))
        assert len(contribs) == 4
        for c in contribs:
            assert c.value == pytest.approx(math.sqrt(3 / 5), abs=EXACT)

    def test_k2_single_zero(self):
        contribs = edge_contributions(from_edges(2, [(0, 1)]))
        assert [c.value for c in contribs] == [0.0]

    def test_turan_5_3_classes(self):
        values = sorted(c.value for c in edge_contributions(turan(5, 3)))
        expected = sorted([math.sqrt(2 / 3)] * 4 + [math.sqrt(5 / 7)] * 4)
        assert values == pytest.approx(expected, abs=EXACT)

    def test_sum_matches_index(self):
        for g in enumerate_connected(5):
            total = sum(c.value for c in edge_contributions(g))
            assert total == pytest.approx(abs_index(g), abs=EXACT)
