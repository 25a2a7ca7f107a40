"""Seeded instance generators for tests, lemma checks, and the CLI.

All functions take a random.Random so that callers control determinism; the
package-wide default seed lives here. Planted families build instances that
satisfy a structural hypothesis by construction: quarters that are pairwise
independent (only cross-block edges are sampled) or quarters that are cliques
(a positive equal-size clique cover instance).
"""

from __future__ import annotations

import random

from .graphs import Graph, complete_graph, cycle_graph, is_connected, mask_of
from .trees import ReassemblingTree

DEFAULT_SEED = 31415

FAMILIES = ("cycle", "clique", "random", "planted-cover")


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """G(n, p) with a deterministic edge scan order."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, frozenset(edges))


def random_connected_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    """Resample G(n, p) until connected."""
    for _ in range(100_000):
        g = random_graph(n, rng, p)
        if is_connected(g):
            return g
    raise RuntimeError(f"could not draw a connected graph with n={n}, p={p}")


def random_balanced_tree(n: int, rng: random.Random) -> ReassemblingTree:
    """Uniformly structured balanced tree: recursive random equal halving."""
    if n < 1 or n & (n - 1):
        raise ValueError("balanced trees need a power-of-two vertex count")
    clusters = []

    def split(vertices):
        clusters.append(mask_of(vertices))
        if len(vertices) == 1:
            return
        chosen = rng.sample(vertices, len(vertices) // 2)
        rest = [v for v in vertices if v not in chosen]
        split(sorted(chosen))
        split(rest)

    split(list(range(n)))
    return ReassemblingTree.from_masks(n, clusters)


def random_tree(n: int, rng: random.Random) -> ReassemblingTree:
    """Arbitrary-shape reassembling tree from random pairwise merges."""
    if n < 1:
        raise ValueError("trees need at least one vertex")
    active = [1 << v for v in range(n)]
    clusters = list(active)
    while len(active) > 1:
        i, j = sorted(rng.sample(range(len(active)), 2))
        merged = active[i] | active[j]
        active[i] = merged
        active.pop(j)
        clusters.append(merged)
    return ReassemblingTree.from_masks(n, clusters)


def random_permutation(n: int, rng: random.Random) -> tuple:
    perm = list(range(n))
    rng.shuffle(perm)
    return tuple(perm)


def _random_quarter_blocks(n: int, rng: random.Random) -> tuple:
    perm = list(range(n))
    rng.shuffle(perm)
    q = n // 4
    return tuple(mask_of(perm[i * q : (i + 1) * q]) for i in range(4))


def planted_independent_quarters(n: int, rng: random.Random, cross_p: float = 0.5):
    """Graph with four planted independent blocks of size n/4: only edges
    between different blocks are sampled. Returns (graph, blocks)."""
    if n % 4:
        raise ValueError("planted quarters need n divisible by 4")
    blocks = _random_quarter_blocks(n, rng)
    of_block = {}
    for idx, block in enumerate(blocks):
        for v in range(n):
            if block & (1 << v):
                of_block[v] = idx
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if of_block[u] != of_block[v] and rng.random() < cross_p
    ]
    return Graph(n, frozenset(edges)), blocks


def planted_clique_cover(n: int, rng: random.Random, cross_p: float = 0.5):
    """Positive equal-size clique cover instance: four planted blocks of size
    n/4 are complete, plus random cross edges. Returns (graph, blocks)."""
    if n % 4:
        raise ValueError("planted cover needs n divisible by 4")
    blocks = _random_quarter_blocks(n, rng)
    of_block = {}
    for idx, block in enumerate(blocks):
        for v in range(n):
            if block & (1 << v):
                of_block[v] = idx
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if of_block[u] == of_block[v] or rng.random() < cross_p
    ]
    return Graph(n, frozenset(edges)), blocks


def generate_family(family: str, n: int, seed: int = DEFAULT_SEED) -> Graph:
    """Graph families exposed by the CLI."""
    if family == "cycle":
        return cycle_graph(n)
    if family == "clique":
        return complete_graph(n)
    if family == "random":
        return random_graph(n, random.Random(seed))
    if family == "planted-cover":
        return planted_clique_cover(n, random.Random(seed))[0]
    raise ValueError(f"unknown family {family!r} (choose from {', '.join(FAMILIES)})")
