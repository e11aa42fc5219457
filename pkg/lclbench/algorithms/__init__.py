# -*- coding: utf-8; -*-

"""Solvers, and :func:`solve` to run one by name on an instance."""

from collections import namedtuple

from lclbench import formulas
from lclbench.algorithms.apoly import a_poly
from lclbench.algorithms.generic import generic_khier
from lclbench.algorithms.hierarchical import hier_labeling_solve, weight_augmented_solve
from lclbench.algorithms.weight import dfree_algorithm_a
from lclbench.exc import ParameterError

ALGORITHMS = (
    ('generic', 'phased 2.5 / 3.5-coloring of an all-Active tree'),
    ('apoly', 'weighted coloring: phased solver on Active, d-free solver on Weight nodes'),
    ('dfree', 'd-free weight solver on A / W inputs'),
    ('labeling', 'k-hierarchical labeling from a rake-and-compress layering'),
    ('waug', 'weight-augmented 2.5-coloring'),
)

Solution = namedtuple('Solution', 'trace problem params')


def default_gammas(n, k, variant):
    """log* schedule for 3.5, n ** (2**(i-1) / (2**k - 1)) for 2.5."""
    if variant == '3.5':
        return 'logstar'
    return formulas.poly_gammas(n, formulas.alpha_seq_poly(0, k))


def solve(algorithm, tree, inputs=None, k=2, variant='2.5', delta=None, d=2,
          gammas=None, max_rounds=None):
    """Run ``algorithm`` and name the problem its output must solve.

    Returns a :class:`Solution` whose ``problem`` and ``params`` feed
    :func:`lclbench.checkers.make_problem` and the labeling file format.
    """
    if inputs is None:
        inputs = tree.inputs
    if delta is None:
        delta = tree.max_degree

    if algorithm == 'generic':
        if gammas is None:
            gammas = default_gammas(tree.n, k, variant)
        trace = generic_khier(tree, k, variant, gammas, max_rounds=max_rounds)
        return Solution(trace, 'khier', {'k': k, 'variant': variant})
    if algorithm == 'apoly':
        trace = a_poly(tree, inputs, delta, d, k, variant, gammas, max_rounds=max_rounds)
        return Solution(trace, 'weighted',
                        {'k': k, 'variant': variant, 'delta': delta, 'd': d})
    if algorithm == 'dfree':
        trace = dfree_algorithm_a(tree, inputs, d, delta=delta, max_rounds=max_rounds)
        return Solution(trace, 'dfree', {'d': d})
    if algorithm == 'labeling':
        return Solution(hier_labeling_solve(tree, k), 'hier-labeling', {'k': k})
    if algorithm == 'waug':
        return Solution(weight_augmented_solve(tree, inputs, k), 'weight-augmented', {'k': k})
    raise ParameterError('unknown algorithm %r, expected one of %s'
                         % (algorithm, ', '.join(name for name, _ in ALGORITHMS)))
