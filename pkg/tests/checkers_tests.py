# -*- coding: utf-8; -*-

import pytest

from lclbench.checkers import (check_dfree, check_hier_labeling, check_khier,
                               check_weight_augmented, check_weighted, make_problem)
from lclbench.exc import InvalidLabel, ParameterError
from lclbench.labels import (ACTIVE, CONNECT, COPY, DECLINE, IN, NONE, OUT, WEIGHT,
                             HierLabel, WeightOutput)
from lclbench.tree import balanced_regular_tree, build_tree, compute_levels, path_graph

STAR = [(0, 1), (0, 2), (0, 3)]


class TestKHier(object):
    def setup_method(self, method):
        self.tree = path_graph(4)
        self.levels = compute_levels(self.tree, 2)

    def test_alternating_path(self):
        assert check_khier(self.tree, self.levels, ['W', 'B', 'W', 'B'], 2, '2.5')

    def test_same_color_neighbours(self):
        verdict = check_khier(self.tree, self.levels, ['W', 'W', 'B', 'W'], 2, '2.5')
        assert not verdict
        assert verdict.rules() == ['same-color']
        assert verdict.violations[0].node == 0

    def test_all_decline_below_top_level(self):
        assert check_khier(self.tree, self.levels, ['D'] * 4, 2, '2.5')

    def test_color_next_to_decline(self):
        verdict = check_khier(self.tree, self.levels, ['W', 'D', 'D', 'D'], 2, '2.5')
        assert verdict.rules() == ['color-decline']

    def test_level_k_may_not_decline(self):
        levels = compute_levels(self.tree, 1)
        verdict = check_khier(self.tree, levels, ['W', 'B', 'W', 'D'], 1, '2.5')
        assert 'level-k-label' in verdict.rules()

    def test_exempt_needs_a_trigger(self):
        tree = build_tree(STAR)
        levels = compute_levels(tree, 2)
        assert check_khier(tree, levels, ['E', 'W', 'B', 'W'], 2, '2.5')
        verdict = check_khier(tree, levels, ['E', 'D', 'D', 'D'], 2, '2.5')
        assert 'exempt-iff' in verdict.rules()

    def test_three_colors_at_top(self):
        tree = build_tree(STAR)
        levels = compute_levels(tree, 1)
        assert check_khier(tree, levels, ['E', 'R', 'G', 'Y'], 1, '3.5')
        verdict = check_khier(tree, levels, ['E', 'W', 'G', 'Y'], 1, '3.5')
        assert verdict.rules() == ['level-k-label']

    def test_label_outside_alphabet(self):
        with pytest.raises(InvalidLabel):
            check_khier(self.tree, self.levels, ['R', 'B', 'W', 'B'], 2, '2.5')

    def test_level_map_for_other_k(self):
        with pytest.raises(ParameterError):
            check_khier(self.tree, compute_levels(self.tree, 3), ['W'] * 4, 2, '2.5')


class TestWeighted(object):
    def test_all_active(self):
        tree = path_graph(4)
        assert check_weighted(tree, [ACTIVE] * 4, ['W', 'B', 'W', 'B'], '2.5', 5, 2, 2)

    def test_decline_next_to_active(self):
        tree = build_tree([(0, 1)])
        verdict = check_weighted(tree, [ACTIVE, WEIGHT], ['W', WeightOutput(DECLINE)],
                                 '2.5', 5, 2, 2)
        assert verdict.rules() == ['weight-adjacent']

    def test_copy_must_match_active(self):
        tree = build_tree([(0, 1), (1, 2)])
        inputs = [ACTIVE, WEIGHT, WEIGHT]
        good = ['W', WeightOutput(COPY, 'W'), WeightOutput(COPY, 'W')]
        assert check_weighted(tree, inputs, good, '2.5', 5, 2, 2)
        bad = ['W', WeightOutput(COPY, 'B'), WeightOutput(COPY, 'W')]
        assert check_weighted(tree, inputs, bad, '2.5', 5, 2, 2).rules() == ['weight-copy']

    def test_secondary_iff_copy(self):
        tree = build_tree([(0, 1)])
        with pytest.raises(InvalidLabel):
            check_weighted(tree, [ACTIVE, WEIGHT], ['W', WeightOutput(CONNECT, 'W')],
                           '2.5', 5, 2, 2)

    def test_needs_room_for_declines(self):
        with pytest.raises(ParameterError):
            check_weighted(path_graph(2), [ACTIVE] * 2, ['W', 'B'], '2.5', 4, 2, 2)


class TestDFree(object):
    def test_all_decline_without_a(self):
        assert check_dfree(path_graph(3), ['W'] * 3, [DECLINE] * 3, 1)

    def test_copy_with_too_many_declines(self):
        tree = build_tree(STAR)
        verdict = check_dfree(tree, ['A', 'W', 'W', 'W'], [COPY] + [DECLINE] * 3, 2)
        assert verdict.rules() == ['dfree-copy']

    def test_connect_between_two_a(self):
        tree = path_graph(4)
        assert check_dfree(tree, ['A', 'W', 'W', 'A'], [CONNECT] * 4, 1)

    def test_a_may_not_decline(self):
        verdict = check_dfree(path_graph(2), ['A', 'W'], [DECLINE, DECLINE], 1)
        assert verdict.rules() == ['dfree-adjacent']

    def test_active_counts_as_a(self):
        assert check_dfree(path_graph(2), [ACTIVE, WEIGHT], [COPY, COPY], 1)


def _hier(tag, orient, secondary=None):
    return HierLabel(tag, orient, secondary)


class TestHierLabeling(object):
    def test_star_points_to_center(self):
        tree = build_tree(STAR)
        out = [_hier('R1', {1: IN, 2: IN, 3: IN})] + [_hier('R1', {0: OUT})] * 3
        assert check_hier_labeling(tree, out, 2)

    def test_adjacent_compress_layers(self):
        tree = path_graph(2)
        out = [_hier('C1', {1: NONE}), _hier('C2', {0: NONE})]
        assert 'compress-disjoint' in check_hier_labeling(tree, out, 3).rules()

    def test_edge_towards_lower_label(self):
        tree = path_graph(2)
        out = [_hier('R2', {1: OUT}), _hier('R1', {0: IN})]
        assert 'ordered' in check_hier_labeling(tree, out, 2).rules()

    def test_two_outgoing_edges(self):
        tree = path_graph(3)
        out = [_hier('R1', {1: IN}), _hier('R1', {0: OUT, 2: OUT}), _hier('R1', {1: IN})]
        assert check_hier_labeling(tree, out, 2).rules() == ['one-outgoing']

    def test_unoriented_rake_edge(self):
        tree = path_graph(2)
        out = [_hier('R1', {1: NONE}), _hier('R1', {0: NONE})]
        assert check_hier_labeling(tree, out, 2).rules() == ['rake-oriented']

    def test_inconsistent_edge_records(self):
        tree = path_graph(2)
        out = [_hier('R1', {1: OUT}), _hier('R1', {0: OUT})]
        with pytest.raises(InvalidLabel):
            check_hier_labeling(tree, out, 2)


class TestWeightAugmented(object):
    def _instance(self):
        weights = balanced_regular_tree(5, 5)
        edges = [(0, 1)] + [(1 + a, 1 + b) for a, b in weights.edges()]
        return build_tree(edges), [ACTIVE] + [WEIGHT] * 5

    def test_weights_copy_the_active_node(self):
        tree, inputs = self._instance()
        out = ['W', _hier('R1', {0: OUT, 2: IN, 3: IN, 4: IN, 5: IN}, 'W')]
        out += [_hier('R1', {1: OUT}, 'W')] * 4
        assert check_weight_augmented(tree, inputs, out, 2)

    def test_weight_with_other_secondary(self):
        tree, inputs = self._instance()
        out = ['W', _hier('R1', {0: OUT, 2: IN, 3: IN, 4: IN, 5: IN}, 'W')]
        out += [_hier('R1', {1: OUT}, 'W')] * 3 + [_hier('R1', {1: OUT}, 'B')]
        assert check_weight_augmented(tree, inputs, out, 2).rules() == ['copy-weight']

    def test_compress_next_to_active_declines(self):
        tree = path_graph(2)
        out = ['W', _hier('C1', {0: OUT}, DECLINE)]
        assert 'decline' in check_weight_augmented(tree, [ACTIVE, WEIGHT], out, 2).rules()

    def test_rake_declines(self):
        tree = path_graph(2)
        out = ['W', _hier('R1', {0: OUT}, DECLINE)]
        assert 'decline' in check_weight_augmented(tree, [ACTIVE, WEIGHT], out, 2).rules()


class TestMakeProblem(object):
    def test_variant_from_name(self):
        problem = make_problem('khier-3.5', path_graph(3), k=2)
        assert problem.variant == '3.5'

    def test_missing_parameter(self):
        with pytest.raises(ParameterError, match='missing parameter'):
            make_problem('weighted', path_graph(3), [ACTIVE] * 3, variant='2.5', k=2)

    def test_unknown(self):
        with pytest.raises(ParameterError):
            make_problem('nope', path_graph(3))
