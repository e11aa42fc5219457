# -*- coding: utf-8; -*-

"""Path subroutines: anchored 2-coloring and Cole-Vishkin 3-coloring."""

from lclbench.exc import InvalidTree
from lclbench.labels import BLACK, GREEN, RED, WHITE, YELLOW

THREE_COLORS = (RED, GREEN, YELLOW)

# rounds spent after color reduction: 3 for 6 -> 3 per forest, 6 for 9 -> 3
REDUCE_ROUNDS = 9


def path_order(tree, nodes=None):
    """Nodes of a path in walking order, starting at the lower-id end."""
    members = set(tree.nodes() if nodes is None else nodes)
    if not members:
        return []
    nbrs = dict((v, [u for u in tree.neighbours(v) if u in members]) for v in members)
    if any(len(a) > 2 for a in nbrs.values()):
        raise InvalidTree('node set is not a path')
    ends = sorted((v for v in members if len(nbrs[v]) <= 1), key=lambda v: tree.ids[v])
    if not ends:
        raise InvalidTree('node set is not a path')
    order = [ends[0]]
    prev = None
    while True:
        nxt = [u for u in nbrs[order[-1]] if u != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    if len(order) != len(members):
        raise InvalidTree('node set is not a connected path')
    return order


def two_color_path(tree, nodes=None, anchor=WHITE):
    """Alternate W/B along a path, the lower-id endpoint gets ``anchor``."""
    other = BLACK if anchor == WHITE else WHITE
    order = path_order(tree, nodes)
    return dict((v, anchor if i % 2 == 0 else other) for i, v in enumerate(order))


def cv_reduce(color, parent_color):
    """One Cole-Vishkin step; a root (no parent) keeps bit 0."""
    if parent_color is None:
        index = 0
    else:
        diff = color ^ parent_color
        index = (diff & -diff).bit_length() - 1
    return 2 * index + ((color >> index) & 1)


def cv_iterations(id_bound):
    """Steps needed to bring colors 0..id_bound down to at most 6 values."""
    m = id_bound + 1
    count = 0
    while m > 6:
        m = 2 * (m - 1).bit_length()
        count += 1
    return count


def first_free(taken, palette=3):
    for c in range(palette):
        if c not in taken:
            return c
    raise AssertionError('no free color among %d with %r taken' % (palette, taken))


def forest_parents(my_id, nbr_ids):
    """Parents in the two forests: the smaller and larger higher-id neighbour."""
    higher = sorted(i for i in nbr_ids if i > my_id)
    return (higher[0] if higher else None,
            higher[1] if len(higher) > 1 else None)


def three_color_path(tree, nodes=None, id_bound=None):
    """Proper R/G/Y coloring of a path and the LOCAL rounds it takes.

    Round 0 exchanges ids; then colors are reduced in two forests
    (each node's higher-id neighbours are its parents), shrunk to 3 colors
    per forest, combined into 9 colors and shrunk to 3.
    """
    order = path_order(tree, nodes)
    if len(order) == 1:
        return {order[0]: RED}, 0
    ids = dict((v, tree.ids[v]) for v in order)
    if id_bound is None:
        id_bound = max(tree.ids)
    members = set(order)
    nbrs = dict((v, [u for u in tree.neighbours(v) if u in members]) for v in order)
    by_id = dict((ids[v], v) for v in order)
    parents = dict((v, [by_id.get(p) for p in forest_parents(ids[v], [ids[u] for u in nbrs[v]])])
                   for v in order)

    colors = dict((v, [ids[v], ids[v]]) for v in order)
    iterations = cv_iterations(id_bound)
    for _ in range(iterations):
        colors = dict((v, [cv_reduce(colors[v][f], colors[parents[v][f]][f]
                                     if parents[v][f] is not None else None)
                           for f in (0, 1)])
                      for v in order)

    for target in (5, 4, 3):
        new = dict((v, list(c)) for v, c in colors.items())
        for v in order:
            for f in (0, 1):
                if colors[v][f] == target:
                    new[v][f] = first_free(set(colors[u][f] for u in nbrs[v]))
        colors = new

    combined = dict((v, 3 * colors[v][0] + colors[v][1]) for v in order)
    for target in range(8, 2, -1):
        new = dict(combined)
        for v in order:
            if combined[v] == target:
                new[v] = first_free(set(combined[u] for u in nbrs[v]))
        combined = new

    return (dict((v, THREE_COLORS[combined[v]]) for v in order),
            1 + iterations + REDUCE_ROUNDS)
