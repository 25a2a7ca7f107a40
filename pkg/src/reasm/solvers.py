"""Exact and heuristic optimization of balanced reassembling trees.

A balanced tree over n = 2^p vertices is necessarily full: every cluster has
a power-of-two size and splits into two equal halves. That makes exact
optimization a dynamic program over equal halvings of vertex subsets, and
makes exhaustive enumeration feasible for n <= 8 (1, 3, and 315 trees for
n = 2, 4, 8).

The quadratic-program encoding targets beta maximization. With grandchildren
X1..X4 at height p-2 (X1, X2 under one root child, X3, X4 under the other),
an edge contributes 2p when its endpoints fall across the two root halves,
2(p-1) when they fall in the sibling classes {X1,X2} or {X3,X4}, and the
relaxed credit 2(p-2) when both endpoints share one block. Writing theta for
the objective, m for the edge count, theta1 for the number of sibling-class
edges and theta2 for the number of same-block edges gives the identity
theta = 2pm - 2*theta1 - 4*theta2.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph, boundary_size, bridge_count, mask_of, vertices_of
from .trees import MeasurePair, ReassemblingTree, measures

MAX_DP_N = 16
MAX_ENUMERATION_N = 8

CROSS_CLASSES = ((1, 3), (1, 4), (2, 3), (2, 4))
SIBLING_CLASSES = ((1, 2), (3, 4))
SAME_CLASSES = ((1, 1), (2, 2), (3, 3), (4, 4))


def _check_power_of_two(n: int, what: str):
    if n < 1 or n & (n - 1):
        raise ValueError(f"{what} needs a power-of-two vertex count, got {n}")


def _halvings(mask: int):
    """Unordered equal splits {a, b} of mask; a always holds mask's lowest bit."""
    bits = vertices_of(mask)
    half = len(bits) // 2
    pivot = 1 << bits[0]
    for combo in itertools.combinations(bits[1:], half - 1):
        a = pivot | mask_of(combo)
        yield a, mask ^ a


def optimize_balanced(g: Graph, objective: str = "beta", sense: str = "min"):
    """Exact optimum of alpha or beta over all balanced trees of g.

    Returns (tree, value). Subset dynamic program over equal halvings; ties
    between optimal halvings break toward the numerically smallest block, so
    the returned tree is deterministic.
    """
    if objective not in ("alpha", "beta"):
        raise ValueError("objective must be 'alpha' or 'beta'")
    if sense not in ("min", "max"):
        raise ValueError("sense must be 'min' or 'max'")
    _check_power_of_two(g.n, "balanced optimization")
    if g.n > MAX_DP_N:
        raise ValueError(f"balanced optimization is capped at n <= {MAX_DP_N}")
    pick = min if sense == "min" else max
    summing = objective == "beta"
    deg = {}
    val = {}

    def degree(mask):
        d = deg.get(mask)
        if d is None:
            d = deg[mask] = boundary_size(g, mask)
        return d

    def solve(mask):
        v = val.get(mask)
        if v is not None:
            return v
        if mask & (mask - 1) == 0:
            v = degree(mask)
        else:
            inner = pick(
                solve(a) + solve(b) if summing else max(solve(a), solve(b))
                for a, b in _halvings(mask)
            )
            v = degree(mask) + inner if summing else max(degree(mask), inner)
        val[mask] = v
        return v

    full = g.full_mask
    solve(full)

    clusters = []

    def rebuild(mask):
        clusters.append(mask)
        if mask & (mask - 1) == 0:
            return
        best = None
        choice = None
        for a, b in _halvings(mask):
            inner = val[a] + val[b] if summing else max(val[a], val[b])
            key = (inner, min(a, b)) if sense == "min" else (-inner, min(a, b))
            if best is None or key < best:
                best = key
                choice = (a, b)
        rebuild(choice[0])
        rebuild(choice[1])

    rebuild(full)
    tree = ReassemblingTree.from_masks(g.n, clusters)
    return tree, val[full]


def enumerate_balanced_trees(n: int):
    """Yield every balanced tree over n vertices exactly once, in a canonical
    order. Only feasible for n <= 8 (315 trees at n = 8)."""
    _check_power_of_two(n, "balanced enumeration")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"balanced enumeration is capped at n <= {MAX_ENUMERATION_N}")

    def rec(mask):
        if mask & (mask - 1) == 0:
            yield (mask,)
            return
        for a, b in _halvings(mask):
            for ta in rec(a):
                for tb in rec(b):
                    yield ta + tb + (mask,)

    for masks in rec((1 << n) - 1):
        yield ReassemblingTree.from_masks(n, masks)


@lru_cache(maxsize=None)
def all_balanced_trees(n: int) -> tuple:
    """Cached tuple of every balanced tree over n vertices (n <= 8)."""
    return tuple(enumerate_balanced_trees(n))


def balanced_tree_count(n: int) -> int:
    """Number of balanced trees over n = 2^p vertices: T(2) = 1 and
    T(n) = C(n, n/2)/2 * T(n/2)^2."""
    _check_power_of_two(n, "balanced tree count")
    if n <= 2:
        return 1
    return math.comb(n, n // 2) // 2 * balanced_tree_count(n // 2) ** 2


def beta_complete_closed_form(n: int) -> int:
    """beta of the complete graph on n = 2^p vertices under any balanced tree:
    (p-1)*4^p + 2^p. The value does not depend on the tree."""
    _check_power_of_two(n, "complete-graph closed form")
    if n < 2:
        raise ValueError("closed form needs n >= 2")
    p = n.bit_length() - 1
    return (p - 1) * 4**p + 2**p


# -- quadratic program for beta maximization ----------------------------------


@dataclass(frozen=True)
class QPModel:
    """Binary quadratic program whose optimum is the maximum beta.

    Variables x[i][k] for vertex i and block k in 1..4 say that vertex i
    lands in grandchild block X_k. Each term (i, k, j, l, coeff) with k <= l
    stands for the unordered class "edge {i, j} has endpoints in blocks
    {k, l}": it fires on x[i][k]*x[j][l], plus x[i][l]*x[j][k] when k < l.
    Constraints: each x binary, each block holds exactly n/4 vertices, each
    vertex lies in exactly one block.
    """

    n: int
    p: int
    block_size: int
    terms: tuple

    @property
    def m(self) -> int:
        return len(self.terms) // 10

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "variables": [f"x[{i}][{k}]" for i in range(self.n) for k in range(1, 5)],
            "terms": [list(t) for t in self.terms],
            "constraints": {
                "binary": "x[i][k] in {0, 1}",
                "blockSize": self.block_size,
                "blocksPerVertex": 1,
            },
        }


def encode_beta_max_qp(g: Graph) -> QPModel:
    """Encode beta maximization over balanced trees of g as a QP.

    Needs n = 2^p with p >= 2 so that the grandchildren level exists. Terms
    are emitted edge by edge in serializer order, ten classes per edge.
    """
    _check_power_of_two(g.n, "QP encoding")
    if g.n < 4:
        raise ValueError("QP encoding needs n >= 4 (two levels below the root)")
    p = g.n.bit_length() - 1
    coeff = {}
    for k, l in CROSS_CLASSES:
        coeff[(k, l)] = 2 * p
    for k, l in SIBLING_CLASSES:
        coeff[(k, l)] = 2 * (p - 1)
    for k, l in SAME_CLASSES:
        coeff[(k, l)] = 2 * (p - 2)
    terms = []
    for u, v in g.sorted_edges():
        for (k, l), c in coeff.items():
            terms.append((u, k, v, l, c))
    return QPModel(n=g.n, p=p, block_size=g.n // 4, terms=tuple(terms))


@dataclass(frozen=True)
class QPValue:
    theta: int
    m: int
    theta1: int
    theta2: int


def qp_objective(model: QPModel, block_of) -> QPValue:
    """Evaluate the QP objective for an assignment (block_of[v] in 1..4).

    Checks the size constraints, then sums the objective term by term and
    cross-checks it against the identity theta = 2pm - 2*theta1 - 4*theta2.
    """
    blocks = tuple(block_of)
    if len(blocks) != model.n:
        raise ValueError(f"assignment must cover all {model.n} vertices")
    if any(k not in (1, 2, 3, 4) for k in blocks):
        raise ValueError("assignment values must be block ids 1..4")
    for k in range(1, 5):
        size = sum(1 for b in blocks if b == k)
        if size != model.block_size:
            raise ValueError(
                f"constraint (ii) violated: block {k} holds {size} vertices, "
                f"expected {model.block_size}"
            )
    theta = 0
    theta1 = 0
    theta2 = 0
    for i, k, j, l, c in model.terms:
        bi, bj = blocks[i], blocks[j]
        fires = (bi == k and bj == l) or (k != l and bi == l and bj == k)
        if not fires:
            continue
        theta += c
        if (k, l) in SIBLING_CLASSES:
            theta1 += 1
        elif k == l:
            theta2 += 1
    m = model.m
    if theta != 2 * model.p * m - 2 * theta1 - 4 * theta2:
        raise ArithmeticError("objective decomposition identity failed")
    return QPValue(theta=theta, m=m, theta1=theta1, theta2=theta2)


def iter_assignments(n: int):
    """Yield every assignment of n vertices into four ordered blocks of n/4."""
    if n % 4:
        raise ValueError("assignments need n divisible by 4")
    q = n // 4
    vertices = range(n)
    for b1 in itertools.combinations(vertices, q):
        rest1 = [v for v in vertices if v not in b1]
        for b2 in itertools.combinations(rest1, q):
            rest2 = [v for v in rest1 if v not in b2]
            for b3 in itertools.combinations(rest2, q):
                b4 = [v for v in rest2 if v not in b3]
                assign = [0] * n
                for v in b1:
                    assign[v] = 1
                for v in b2:
                    assign[v] = 2
                for v in b3:
                    assign[v] = 3
                for v in b4:
                    assign[v] = 4
                yield tuple(assign)


def maximize_qp(model: QPModel):
    """Exhaustive maximization of the QP (n <= 8). Returns (best QPValue,
    list of maximizing assignments)."""
    if model.n > MAX_ENUMERATION_N:
        raise ValueError(f"exhaustive QP maximization is capped at n <= {MAX_ENUMERATION_N}")
    best = None
    winners = []
    for assign in iter_assignments(model.n):
        value = qp_objective(model, assign)
        if best is None or value.theta > best.theta:
            best = value
            winners = [assign]
        elif value.theta == best.theta:
            winners.append(assign)
    return best, winners


# -- heuristic ----------------------------------------------------------------


def greedy_balanced_heuristic(g: Graph, objective: str = "beta"):
    """Top-down recursive bisection: split each cluster to minimize the cut
    between the halves, by exhaustive search on clusters of up to 4 vertices
    and single-swap hill climbing above that. Returns (tree, value) where the
    value is the chosen measure of the heuristic tree (an upper bound on the
    true minimum)."""
    if objective not in ("alpha", "beta"):
        raise ValueError("objective must be 'alpha' or 'beta'")
    _check_power_of_two(g.n, "greedy balanced heuristic")
    clusters = []

    def split(mask):
        clusters.append(mask)
        size = mask.bit_count()
        if size == 1:
            return
        if size <= 4:
            best = None
            choice = None
            for a, b in _halvings(mask):
                key = (bridge_count(g, a, b), min(a, b))
                if best is None or key < best:
                    best = key
                    choice = (a, b)
            a, b = choice
        else:
            bits = vertices_of(mask)
            a = mask_of(bits[: len(bits) // 2])
            b = mask ^ a
            cut = bridge_count(g, a, b)
            improved = True
            while improved:
                improved = False
                best_cut = cut
                best_swap = None
                for u in vertices_of(a):
                    for v in vertices_of(b):
                        a2 = (a ^ (1 << u)) | (1 << v)
                        c2 = bridge_count(g, a2, mask ^ a2)
                        if c2 < best_cut:
                            best_cut = c2
                            best_swap = (u, v)
                if best_swap is not None:
                    u, v = best_swap
                    a = (a ^ (1 << u)) | (1 << v)
                    b = mask ^ a
                    cut = best_cut
                    improved = True
        split(a)
        split(b)

    split(g.full_mask)
    tree = ReassemblingTree.from_masks(g.n, clusters)
    pair = measures(g, tree)
    return tree, (pair.alpha if objective == "alpha" else pair.beta)
