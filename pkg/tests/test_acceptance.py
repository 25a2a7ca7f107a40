"""Acceptance suite: twelve desk-scale checks, one pass/fail line each.

Every check is exact (integer arithmetic, no tolerances) and exhaustive at
its scale: tree enumerations cover all 315 balanced shapes on 8 vertices,
bisection oracles scan every equal split, and the QP checks scan every
admissible assignment. Run with `pytest tests/test_acceptance.py -v -s` to
see the per-criterion lines.
"""

import random

from reasm.generators import (
    DEFAULT_SEED,
    random_balanced_tree,
    random_connected_graph,
    random_graph,
    random_permutation,
    random_tree,
)
from reasm.graphs import bridge_count, complete_graph, mask_of, relabel, vertices_of
from reasm.oracles import (
    bisection_type,
    find_equal_size_cover4,
    find_fixed_size_cover4,
    min_bisections,
    p4_closed_form,
    partitions4,
)
from reasm.reductions import (
    augment,
    equal_size_gadget,
    min_bisection_via_augment,
    verify_lemma,
)
from reasm.solvers import (
    all_balanced_trees,
    encode_beta_max_qp,
    optimize_balanced,
    qp_objective,
)
from reasm.trees import (
    beta_via_edge_heights,
    cluster_degree,
    measures,
    tree_violations,
)


def _report(index: int, label: str, problems: list) -> None:
    status = "FAIL" if problems else "PASS"
    print(f"criterion {index:02d} {status}: {label}")
    detail = "; ".join(str(p) for p in problems[:3])
    assert not problems, f"criterion {index:02d} ({label}): {detail}"


def _connected_instances():
    """The shared 20-instance stream used by the two bisection criteria."""
    rng = random.Random(DEFAULT_SEED)
    return [random_connected_graph(4 if i % 2 == 0 else 6, rng) for i in range(20)]


def test_criterion_01_complete_graph_beta_closed_form():
    problems = []
    expected_counts = {1: 1, 2: 3, 3: 315}
    for p in (1, 2, 3):
        n = 2 ** p
        value = (p - 1) * 4 ** p + 2 ** p
        trees = all_balanced_trees(n)
        if len(trees) != expected_counts[p]:
            problems.append(f"n={n}: {len(trees)} balanced trees, expected {expected_counts[p]}")
        g = complete_graph(n)
        off = sum(1 for t in trees if measures(g, t).beta != value)
        if off:
            problems.append(f"n={n}: {off} trees with beta != {value}")
    _report(1, "complete-graph beta matches the closed form on every balanced tree", problems)


def test_criterion_02_beta_equals_twice_edge_height_sum():
    rng = random.Random(DEFAULT_SEED)
    problems = []
    for index in range(500):
        n = rng.choice((4, 8))
        g = random_graph(n, rng)
        t = random_balanced_tree(n, rng)
        direct = measures(g, t).beta
        via = beta_via_edge_heights(g, t)
        if direct != via:
            problems.append(f"pair {index}: beta {direct}, twice the height sum {via}")
    _report(2, "beta equals twice the edge-height sum on 500 seeded pairs", problems)


def test_criterion_03_augmented_minimum_bisections_separate_added_cliques():
    problems = []
    for index, g in enumerate(_connected_instances()):
        ag = augment(g)
        _, optima = min_bisections(ag.graph)
        mixed = sum(1 for b in optima if not bisection_type(b, ag.h_mask, ag.i_mask))
        if mixed:
            problems.append(f"instance {index}: {mixed} of {len(optima)} minimum bisections mix the added cliques")
    _report(3, "every minimum bisection of an augmented graph separates the added cliques", problems)


def test_criterion_04_bisection_pipeline_matches_direct_oracle():
    problems = []
    for index, g in enumerate(_connected_instances()):
        direct, _ = min_bisections(g)
        via, _ = min_bisection_via_augment(g)
        if direct != via:
            problems.append(f"instance {index}: pipeline {via}, direct oracle {direct}")
    _report(4, "minimum bisection recovered through the augmentation matches the oracle", problems)


def test_criterion_05_alpha_optimal_root_split_recovers_minimum_bisection():
    rng = random.Random(DEFAULT_SEED)
    problems = []
    trees = all_balanced_trees(8)
    for index in range(20):
        g = random_connected_graph(4, rng)
        ag = augment(g)
        big = ag.graph
        alphas = [measures(big, t).alpha for t in trees]
        best = min(alphas)
        _, dp = optimize_balanced(big, "alpha", "min")
        if dp != best:
            problems.append(f"instance {index}: DP alpha {dp}, enumeration {best}")
            continue
        c, _ = min_bisections(g)
        target = g.n * g.n // 2 + c
        big_min, _ = min_bisections(big)
        if big_min != target:
            problems.append(f"instance {index}: augmented minimum {big_min}, expected {target}")
            continue
        for t, alpha in zip(trees, alphas):
            if alpha != best:
                continue
            a, b = t.children_of(t.root)
            if bridge_count(big, a, b) != target:
                problems.append(f"instance {index}: an optimal root split cuts {bridge_count(big, a, b)}, not {target}")
                break
            ra, rb = a & ag.g_mask, b & ag.g_mask
            if ra.bit_count() != g.n // 2 or bridge_count(g, ra, rb) != c:
                problems.append(f"instance {index}: the restriction misses the base minimum {c}")
                break
    _report(5, "alpha-optimal root splits carry minimum bisections of the base graph", problems)


def test_criterion_06_partition_count_closed_form():
    problems = []
    for n in range(4, 201):
        enumerated = len(partitions4(n))
        closed = p4_closed_form(n)
        if enumerated != closed:
            problems.append(f"n={n}: enumerated {enumerated}, closed form {closed}")
    _report(6, "four-part partition counts match the closed form for n = 4..200", problems)


def test_criterion_07_qp_objective_identity():
    rng = random.Random(DEFAULT_SEED)
    problems = []
    for index in range(200):
        g = random_graph(8, rng)
        model = encode_beta_max_qp(g)
        order = list(range(8))
        rng.shuffle(order)
        assign = [0] * 8
        for position, v in enumerate(order):
            assign[v] = position // 2 + 1
        value = qp_objective(model, assign)
        t1 = t2 = 0
        for u, v in g.edges:
            bu, bv = assign[u], assign[v]
            if bu == bv:
                t2 += 1
            elif (min(bu, bv), max(bu, bv)) in ((1, 2), (3, 4)):
                t1 += 1
        expected = 2 * model.p * g.m - 2 * t1 - 4 * t2
        if (value.theta, value.m, value.theta1, value.theta2) != (expected, g.m, t1, t2):
            problems.append(f"pair {index}: {value} but recount gives ({expected}, {g.m}, {t1}, {t2})")
    _report(7, "QP objective equals 2pm - 2*theta1 - 4*theta2 on 200 seeded pairs", problems)


def test_criterion_08_beta_maximal_grandchildren_are_independent():
    report = verify_lemma(5, instances=20, seed=DEFAULT_SEED)
    problems = [] if report.passed else [report.counterexample.get("detail")]
    _report(8, "planted instances: beta-maximal grandchildren independent, QP reaches theta2 = 0", problems)


def test_criterion_09_beta_minimal_grandchildren_form_clique_covers():
    report = verify_lemma(6, instances=20, seed=DEFAULT_SEED)
    problems = [] if report.passed else [report.counterexample.get("detail")]
    _report(9, "planted cover instances: beta-minimal grandchildren form verified covers", problems)


def test_criterion_10_gadget_preserves_cover_existence():
    rng = random.Random(DEFAULT_SEED)
    problems = []
    for index in range(10):
        n = 4 if index % 2 == 0 else 5
        g = random_graph(n, rng)
        for sizes in partitions4(n):
            gadget = equal_size_gadget(g, sizes)
            if gadget.n != 4 * n:
                problems.append(f"instance {index}: gadget on {gadget.n} vertices, expected {4 * n}")
            direct = find_fixed_size_cover4(g, sizes) is not None
            via = find_equal_size_cover4(gadget) is not None
            if direct != via:
                problems.append(f"instance {index} sizes {sizes}: fixed-size {direct}, gadget {via}")
    _report(10, "fixed-size covers exist exactly when the gadget has an equal-size cover", problems)


def test_criterion_11_cluster_count_and_bijection_invariance():
    rng = random.Random(DEFAULT_SEED)
    problems = []
    for n in range(1, 9):
        for _ in range(5):
            t = random_tree(n, rng)
            if len(t.clusters) != 2 * n - 1:
                problems.append(f"tree over {n} vertices has {len(t.clusters)} clusters")
    for n in (1, 2, 4, 8):
        t = random_balanced_tree(n, rng)
        if len(t.clusters) != 2 * n - 1:
            problems.append(f"balanced tree over {n} vertices has {len(t.clusters)} clusters")
    for index in range(50):
        n = rng.choice((4, 6, 8))
        g = random_graph(n, rng)
        t = random_tree(n, rng)
        perm = random_permutation(n, rng)
        mapped = t.apply_bijection(perm)
        h = relabel(g, perm)
        if tree_violations(n, mapped.clusters):
            problems.append(f"bijection {index} broke validity")
            continue
        for x in t.clusters:
            y = mask_of(perm[v] for v in vertices_of(x))
            if mapped.cluster_height(y) != t.cluster_height(x):
                problems.append(f"bijection {index} changed a cluster height")
                break
            if cluster_degree(h, mapped, y) != cluster_degree(g, t, x):
                problems.append(f"bijection {index} changed a cluster degree")
                break
    _report(11, "trees hold 2n-1 clusters; bijections preserve shape, heights, degrees", problems)


def test_criterion_12_dp_matches_enumeration_on_both_measures():
    rng = random.Random(DEFAULT_SEED)
    problems = []
    for index in range(50):
        n = 4 if index % 2 == 0 else 8
        g = random_graph(n, rng)
        pairs = [measures(g, t) for t in all_balanced_trees(n)]
        for objective in ("alpha", "beta"):
            values = [getattr(pair, objective) for pair in pairs]
            for sense, brute in (("min", min(values)), ("max", max(values))):
                _, dp = optimize_balanced(g, objective, sense)
                if dp != brute:
                    problems.append(f"instance {index} {objective} {sense}: DP {dp}, enumeration {brute}")
    _report(12, "DP optima equal naive enumeration for both measures and senses", problems)
