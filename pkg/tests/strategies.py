# -*- coding: utf-8; -*-

from hypothesis import strategies as st

from lclbench.labels import A, W_INPUT
from lclbench.tree import build_tree


@st.composite
def trees(draw, min_nodes=1, max_nodes=9, max_degree=4):
    """Random trees with shuffled ids; every node has degree <= max_degree."""
    n = draw(st.integers(min_nodes, max_nodes))
    degree = [0] * n
    edges = []
    for v in range(1, n):
        parent = draw(st.sampled_from([u for u in range(v) if degree[u] < max_degree]))
        edges.append((parent, v))
        degree[parent] += 1
        degree[v] += 1
    ids = draw(st.permutations(range(1, n + 1)))
    return build_tree(edges, ids=ids, n=n)


@st.composite
def dfree_instances(draw, max_nodes=9):
    tree = draw(trees(max_nodes=max_nodes))
    inputs = draw(st.lists(st.sampled_from([A, W_INPUT]), min_size=tree.n, max_size=tree.n))
    return tree, inputs
