# -*- coding: utf-8; -*-

import pytest
from hypothesis import given, settings, strategies as st

from lclbench.algorithms.paths import (REDUCE_ROUNDS, THREE_COLORS, cv_iterations,
                                       cv_reduce, first_free, forest_parents, path_order,
                                       three_color_path, two_color_path)
from lclbench.exc import InvalidTree
from lclbench.formulas import iterated_log
from lclbench.labels import BLACK, RED, WHITE
from lclbench.tree import build_tree, path_graph


def proper(tree, colors):
    return all(colors[u] != colors[v] for u, v in tree.edges())


class TestPathOrder(object):
    def test_starts_at_lower_id(self):
        tree = path_graph(4).with_ids([9, 3, 5, 2])
        assert path_order(tree) == [3, 2, 1, 0]

    def test_subset(self):
        assert path_order(path_graph(6), [2, 3, 4]) == [2, 3, 4]

    def test_not_a_path(self):
        with pytest.raises(InvalidTree):
            path_order(build_tree([(0, 1), (0, 2), (0, 3)]))
        with pytest.raises(InvalidTree):
            path_order(path_graph(5), [0, 1, 3])


class TestTwoColoring(object):
    def test_anchor(self):
        colors = two_color_path(path_graph(5))
        assert [colors[v] for v in range(5)] == [WHITE, BLACK, WHITE, BLACK, WHITE]

    def test_anchor_black_from_other_end(self):
        tree = path_graph(4).with_ids([10, 20, 30, 1])
        colors = two_color_path(tree, anchor=BLACK)
        assert colors[3] == BLACK
        assert colors[0] == WHITE


class TestColeVishkin(object):
    def test_reduce(self):
        assert cv_reduce(0b1010, 0b1000) == 3
        assert cv_reduce(5, None) == 1
        assert cv_reduce(6, 7) == 0

    def test_iterations(self):
        assert cv_iterations(5) == 0
        assert cv_iterations(100000) == 4

    def test_first_free(self):
        assert first_free({0, 1}) == 2
        assert first_free(set()) == 0
        with pytest.raises(AssertionError):
            first_free({0, 1, 2})

    def test_forest_parents(self):
        assert forest_parents(5, [3, 7, 9]) == (7, 9)
        assert forest_parents(5, [8]) == (8, None)
        assert forest_parents(5, [3]) == (None, None)

    def test_single_node(self):
        assert three_color_path(path_graph(1)) == ({0: RED}, 0)

    def test_long_path(self):
        n = 10 ** 5
        tree = path_graph(n)
        colors, rounds = three_color_path(tree)
        assert proper(tree, colors)
        assert set(colors.values()) <= set(THREE_COLORS)
        assert rounds == 1 + 4 + REDUCE_ROUNDS
        assert rounds <= iterated_log(n) + 10

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 60).flatmap(
        lambda n: st.tuples(st.just(n), st.permutations(range(1, 3 * n)))))
    def test_shuffled_ids(self, drawn):
        n, ids = drawn
        tree = path_graph(n).with_ids(ids[:n])
        colors, _ = three_color_path(tree)
        assert proper(tree, colors)
