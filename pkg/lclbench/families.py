# -*- coding: utf-8; -*-

"""Instance families: lower-bound graphs and their weighted versions."""

import logging
from collections import namedtuple

from lclbench import formulas
from lclbench.exc import ParameterError
from lclbench.labels import ACTIVE, WEIGHT
from lclbench.tree import (LevelMap, balanced_regular_tree, build_tree,
                           compute_levels, path_graph, permute_ids, random_tree)

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

Instance = namedtuple('Instance', 'tree inputs meta')

FAMILIES = (
    ('lb', 'hierarchical lower-bound graph, all nodes Active'),
    ('weighted', 'lower-bound core with balanced weight trees on levels 2..k'),
    ('augmented', 'weighted construction tuned for efficiency factor 1'),
    ('path', 'a single path, all nodes Active'),
    ('random', 'uniform attachment tree with bounded degree, all nodes Active'),
)


def _attachments(path_nbrs, has_parent, pad):
    if not pad:
        return 1
    return max(1, 3 - path_nbrs - (1 if has_parent else 0))


def _build_lower_bound(lengths, pad):
    k = len(lengths)
    edges = []
    design = []

    def new_path(level, length):
        start = len(design)
        design.extend([level] * length)
        edges.extend((start + j, start + j + 1) for j in range(length - 1))
        return list(range(start, start + length))

    paths = [(new_path(k, lengths[k - 1]), False)]
    for level in range(k, 1, -1):
        children = []
        for path, has_parent in paths:
            for j, u in enumerate(path):
                path_nbrs = (j > 0) + (j < len(path) - 1)
                for _ in range(_attachments(path_nbrs, has_parent and j == 0, pad)):
                    q = new_path(level - 1, lengths[level - 2])
                    edges.append((u, q[0]))
                    children.append((q, True))
        paths = children
    return edges, design


def lower_bound_graph(lengths, pad_endpoints=True, max_degree=None):
    """Spine of ``lengths[-1]`` nodes, level-i paths of ``lengths[i-1]`` below.

    With ``pad_endpoints`` path ends carry extra level-(i-1) paths so every
    node above level 1 has degree 3 and level peeling recovers the
    construction levels. Without it every node carries exactly one path.
    Returns ``(tree, levels)``.
    """
    lengths = [int(l) for l in lengths]
    k = len(lengths)
    if k < 2:
        raise ParameterError('lower-bound graphs need k >= 2 lengths')
    if any(l < 1 for l in lengths):
        raise ParameterError('all lengths must be >= 1: %r' % (lengths,))

    edges, design = _build_lower_bound(lengths, pad_endpoints)
    tree = build_tree(edges, n=len(design))
    if max_degree is not None and tree.max_degree > max_degree:
        raise ParameterError('construction has degree %d > %d' % (tree.max_degree, max_degree))
    levels = compute_levels(tree, k)
    if pad_endpoints and levels != LevelMap(design, k):
        raise AssertionError('padded lower-bound graph lost its level structure')
    return tree, levels


def level_sizes(lengths, pad_endpoints=True):
    """Closed-form ``{level: node count}`` of :func:`lower_bound_graph`."""
    k = len(lengths)
    sizes = {k: lengths[k - 1]}
    if pad_endpoints:
        paths = lengths[k - 1] + 2
        for i in range(k - 1, 0, -1):
            sizes[i] = paths * lengths[i - 1]
            paths *= lengths[i - 1] + 1
    else:
        for i in range(k - 1, 0, -1):
            sizes[i] = sizes[i + 1] * lengths[i - 1]
    return sizes


def _core_lengths(n, lengths, k, roundings):
    scale = k ** (1.0 / k)
    core = []
    for i, l in enumerate(lengths[:-1], 1):
        value = formulas.round_half_up(l / scale)
        roundings.append(('l%d_prime' % i, l / scale, value))
        core.append(max(1, value))
    # subtree hanging below one level-(k-1) attachment
    subtree = 0
    for l in core:
        subtree = l + (l + 1) * subtree
    budget = n // k
    raw = (budget - 2 * subtree) / float(1 + subtree)
    top = max(1, formulas.round_half_up(raw))
    roundings.append(('l%d_prime' % k, raw, top))
    return core + [top]


def weighted_construction(n, lengths, delta, d, k, seed=0):
    """Lower-bound core on about n/k Active nodes, n/k weight nodes per level 2..k.

    ``d=None`` skips the ``delta >= d + 3`` check (weight-augmented use).
    """
    if k < 2:
        raise ParameterError('weighted construction needs k >= 2 to attach weight')
    if len(lengths) != k:
        raise ParameterError('expected %d lengths, got %d' % (k, len(lengths)))
    if d is not None and delta < d + 3:
        raise ParameterError('need delta >= d + 3 (delta=%d, d=%d)' % (delta, d))

    roundings = []
    core = _core_lengths(n, lengths, k, roundings)
    edges, design = _build_lower_bound(core, True)
    levels = LevelMap(design, k)
    size = len(design)
    inputs = [ACTIVE] * size

    budget = n // k
    per_level = {}
    for i in range(2, k + 1):
        holders = levels.nodes_at(i)
        if not holders:
            raise ParameterError('level %d of the core is empty' % i)
        base, rest = divmod(budget, len(holders))
        per_level[i] = (base, rest)
        for j, v in enumerate(holders):
            w = base + (1 if j < rest else 0)
            if not w:
                continue
            weight_tree = balanced_regular_tree(delta, w)
            edges.append((v, size))
            edges.extend((size + a, size + b) for a, b in weight_tree.edges())
            inputs.extend([WEIGHT] * w)
            size += w

    tree = build_tree(edges, inputs=inputs, n=size)
    if tree.max_degree > delta:
        raise ParameterError('construction needs degree %d > delta=%d' % (tree.max_degree, delta))
    meta = {
        'family': 'weighted', 'n_target': n, 'k': k, 'delta': delta, 'd': d,
        'lengths': list(lengths), 'lengths_prime': core,
        'active': len(design), 'weight_per_level': per_level,
        'roundings': roundings, 'seed': seed,
    }
    log.debug('weighted construction: %d active, %d total', len(design), size)
    return Instance(tree, inputs, meta)


def _default_alphas(family, k, delta, d, regime):
    if family == 'lb':
        return formulas.alpha_seq(0, k, regime)
    if family == 'augmented':
        return formulas.alpha_seq(1, k, regime)
    return formulas.alpha_seq(formulas.x_factor(delta, d), k, regime)


def make_instance(family, n, k=2, delta=5, d=2, alphas=None, lengths=None,
                  regime='poly', seed=0, id_factor=1, rounding='half-up'):
    """Generate one member of a named family.

    Lengths come from ``lengths`` if given, else from ``alphas`` (defaulting
    to the optimal exponents of the family) rounded as ``rounding`` says.

    Seed 0 keeps the ids 1..n unless ``id_factor > 1``; any other seed draws
    the ids from 1..n*id_factor, so seeds of the fixed-shape families differ
    in their id assignment.
    """
    meta = {'family': family, 'n_target': n, 'k': k, 'seed': seed, 'regime': regime}
    if family in ('lb', 'weighted', 'augmented'):
        if lengths is None:
            if alphas is None:
                alphas = _default_alphas(family, k, delta, d, regime)
            meta['alphas'] = [float(a) for a in alphas]
            meta['rounding'] = rounding
            lengths = formulas.lengths_from_exponents(n, alphas, regime, rounding)
        if family == 'lb':
            tree, levels = lower_bound_graph(lengths)
            meta.update({'lengths': list(lengths), 'level_sizes': levels.sizes()})
            instance = Instance(tree.with_inputs([ACTIVE] * tree.n), [ACTIVE] * tree.n, meta)
        else:
            built = weighted_construction(n, lengths, delta,
                                          d if family == 'weighted' else None, k, seed)
            built.meta.update(meta)
            built.meta['family'] = family
            instance = built
        instance.meta.update({'delta': delta, 'd': d if family == 'weighted' else None})
    elif family == 'path':
        tree = path_graph(n)
        instance = Instance(tree.with_inputs([ACTIVE] * n), [ACTIVE] * n, meta)
    elif family == 'random':
        tree = random_tree(n, delta, seed)
        meta['delta'] = delta
        instance = Instance(tree.with_inputs([ACTIVE] * n), [ACTIVE] * n, meta)
    else:
        raise ParameterError('unknown family %r, expected one of %s'
                             % (family, ', '.join(name for name, _ in FAMILIES)))

    if id_factor > 1 or seed:
        instance = instance._replace(tree=permute_ids(instance.tree, id_factor, seed))
        instance.meta['id_factor'] = id_factor
    return instance
