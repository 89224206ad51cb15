"""Acceptance gate: seven verdicts, one test and one pass/fail line each.

Every criterion is decided against independent oracles (bounded subset
enumeration, budget-capped branching, brute minimum covers) or against
structure that can be checked directly.  Sweeps are exhaustive over atlases
of small graphs up to isomorphism; where a grid is trimmed, a monotonicity
argument stated inline shows the tested boundary decides the whole range.
"""

import itertools
import json
import random

import pytest

import oracles
from helpers import make_graph, make_instance
from spmve import (
    CERT_OPTIMAL,
    INF,
    Instance,
    TripartiteGraph,
    brute_force,
    build_sp_tree,
    cluster_vertex_deletion_set,
    cvd_fpt,
    diameter,
    evaluate_solution,
    feedback_edge_set,
    gen_complete_reduction,
    gen_gap_reduction,
    gen_random,
    gen_split_reduction,
    gen_subdivision,
    gen_vc_reduction,
    greedy_ell_approx,
    kernelize,
    max_length,
    param_approx_max_length,
    search_tree,
    solve_complete_unit,
    solve_diameter2,
    sp_max_length,
    sp_min_cost,
    st_distance,
    xp_by_max_degree,
)
from spmve.cli import main

# --------------------------------------------------------------- shared kit


def _terminal_orbits(n, edges):
    """Terminal pairs of one graph, deduped up to isomorphisms that respect
    the (unordered) terminal pair, so "every instance" means every instance
    once."""
    seen = set()
    out = []
    for s, t in itertools.combinations(range(n), 2):
        keys = []
        for a, b in ((s, t), (t, s)):
            relabel = {a: 0, b: 1}
            nxt = 2
            for v in range(n):
                if v not in relabel:
                    relabel[v] = nxt
                    nxt += 1
            mapped = [(relabel[u], relabel[v]) for u, v in edges]
            keys.append(oracles._parted_canon(1, 1, n - 2, mapped))
        key = min(keys)
        if key not in seen:
            seen.add(key)
            out.append((s, t))
    return out


def _connected_triples(max_n):
    """(n, edges, s, t) for every connected graph with n <= max_n and every
    terminal orbit."""
    atlas = oracles.graph_atlas(max_n)
    out = []
    for n in range(2, max_n + 1):
        for rows in atlas[n]:
            edges = oracles.rows_to_edges(rows)
            if not oracles.connected(n, edges):
                continue
            for s, t in _terminal_orbits(n, edges):
                out.append((n, edges, s, t))
    return out


@pytest.fixture(scope="module")
def tripartite_atlas7():
    """Every vertex-part-labeled tripartite graph with at most 7 vertices,
    one per part-respecting isomorphism class."""
    atlas = oracles.tripartite_atlas(7)
    assert len([x for x in atlas if sum(x[:3]) <= 6]) == 3369
    return [TripartiteGraph(tuple(range(a)), tuple(range(a, a + b)),
                            tuple(range(a + b, a + b + c)), edges)
            for a, b, c, edges in atlas]


@pytest.fixture(scope="module")
def diam2_graphs():
    """Every connected graph of diameter <= 2 with n <= 7, one per class."""
    atlas = oracles.graph_atlas(6)
    out = []
    for n in range(2, 7):
        for rows in atlas[n]:
            edges = oracles.rows_to_edges(rows)
            if oracles.connected(n, edges) and \
                    oracles.diameter_at_most_2(rows):
                out.append((n, edges))
    found = set()
    for rows in atlas[6]:
        base = oracles.rows_to_edges(rows)
        for mask in range(1, 1 << 6):
            edges = base + tuple((u, 6) for u in range(6) if mask >> u & 1)
            rows7 = [0] * 7
            for u, v in edges:
                rows7[u] |= 1 << v
                rows7[v] |= 1 << u
            if oracles.diameter_at_most_2(rows7) and \
                    oracles.connected(7, edges):
                found.add(oracles.canonical_form(7, edges))
    out += [(7, oracles.rows_to_edges(rows)) for rows in sorted(found)]
    return out


# ------------------------------------------------- vertex-cover gadget kit
#
# In the cover gadgets every edge is either a single "selection" edge (both
# endpoints among s, t, originals, copies) or lies on one of tg.n internally
# disjoint equal-length chains of a bundle.  With any budget below tg.n each
# bundle keeps an intact chain, interior vertices have degree two, so the
# metric after deleting S equals the metric after deleting only S's
# selection edges.  That licenses an exact oracle on the contracted graph:
# bundles become fixed weighted edges, and only selection-edge subsets are
# enumerated.

GADGET_DISTANCE = (2, 2, 5, 4, 4)


def _reduced_model(tg, glens):
    g12, g23, g13, gs2, g2t = glens
    n = tg.n
    part = tg.part_of
    orig = {v: 2 + v for v in range(n)}
    copy = {v: 2 + n + i for i, v in enumerate(tg.v2)}
    sel = [(orig[v], copy[v]) for v in tg.v2]
    sel += [(0, orig[u]) for u in tg.v1]
    sel += [(orig[w], 1) for w in tg.v3]
    bundles = []
    for u, v in tg.edges:
        if part[u] > part[v]:
            u, v = v, u
        if (part[u], part[v]) == (1, 2):
            bundles.append((orig[u], orig[v], g12))
        elif (part[u], part[v]) == (2, 3):
            bundles.append((copy[u], orig[v], g23))
        else:
            bundles.append((orig[u], orig[v], g13))
    for v in tg.v2:
        bundles.append((0, orig[v], gs2))
    for v in tg.v2:
        bundles.append((copy[v], 1, g2t))
    return 2 + n + len(tg.v2), sel, bundles


def _verify_gadget_layout(graph, tg, glens):
    """The generated graph must be exactly the reduced model with every
    bundle blown up into tg.n parallel degree-two chains."""
    nr, sel, bundles = _reduced_model(tg, glens)
    assert set(graph.lengths) == {1}
    adj = {v: [] for v in range(graph.n)}
    for u, v in graph.edges:
        adj[u].append(v)
        adj[v].append(u)
    low = sorted(tuple(sorted(e)) for e in graph.edges if max(e) < nr)
    assert low == sorted(tuple(sorted(e)) for e in sel)
    found = []
    seen = set()
    for a in range(nr):
        for first in adj[a]:
            if first < nr or (a, first) in seen:
                continue
            prev, cur, steps = a, first, 1
            while cur >= nr:
                assert len(adj[cur]) == 2
                nxt = adj[cur][0] if adj[cur][1] == prev else adj[cur][1]
                prev, cur, steps = cur, nxt, steps + 1
            seen.add((a, first))
            seen.add((cur, prev))
            found.append((min(a, cur), max(a, cur), steps))
    want = []
    for u, v, alpha in bundles:
        want += [(min(u, v), max(u, v), alpha)] * tg.n
    assert sorted(found) == sorted(want)


def _reduced_distance(nr, wedges, s=0, t=1):
    dist = [INF] * nr
    dist[s] = 0
    for _ in range(nr):
        changed = False
        for u, v, w in wedges:
            if dist[u] + w < dist[v]:
                dist[v] = dist[u] + w
                changed = True
            if dist[v] + w < dist[u]:
                dist[u] = dist[v] + w
                changed = True
        if not changed:
            break
    return dist[t]


def _gadget_decision(tg, glens, k, ell):
    nr, sel, bundles = _reduced_model(tg, glens)
    for size in range(min(k, len(sel)) + 1):
        for combo in itertools.combinations(range(len(sel)), size):
            gone = set(combo)
            wedges = bundles + [(u, v, 1) for i, (u, v) in enumerate(sel)
                                if i not in gone]
            if _reduced_distance(nr, wedges) >= ell:
                return True
    return False


def _gadget_max_length(tg, glens, k):
    nr, sel, bundles = _reduced_model(tg, glens)
    best = 0
    for size in range(min(k, len(sel)) + 1):
        for combo in itertools.combinations(range(len(sel)), size):
            gone = set(combo)
            wedges = bundles + [(u, v, 1) for i, (u, v) in enumerate(sel)
                                if i not in gone]
            best = max(best, _reduced_distance(nr, wedges))
    return best


def _cover_size(tg):
    return oracles.min_vertex_cover_size(tg.n, tg.edges)


def _eligibility(tg):
    """Inputs on which the gadget's distance/diameter postconditions are
    pinned: no isolated vertices, nonempty outer parts, and every middle
    vertex adjacent to both outer parts."""
    deg = {v: 0 for v in range(tg.n)}
    to1 = {v: False for v in tg.v2}
    to3 = dict(to1)
    part = tg.part_of
    for u, v in tg.edges:
        deg[u] += 1
        deg[v] += 1
        for p, q in ((u, v), (v, u)):
            if part[p] == 2:
                if part[q] == 1:
                    to1[p] = True
                elif part[q] == 3:
                    to3[p] = True
    return (bool(tg.v1) and bool(tg.v3)
            and all(deg[v] > 0 for v in range(tg.n))
            and all(to1[v] and to3[v] for v in tg.v2))


# ================================================================ criteria


def test_criterion_1_exact_solvers_match_oracles(weighted_corpus):
    """Decision answers of all exact solvers equal ground truth computed by
    bounded subset enumeration, for every unit instance with n <= 6 and for
    500 random weighted instances with m <= 12, across every budget up to
    the terminal cut and every target up to metric saturation (larger
    targets are equivalent to the saturation target, since all finite
    distances stay below it)."""
    checks = disagreements = 0

    for n, edges, s, t in _connected_triples(6):
        m = len(edges)
        lengths = [1] * m
        cut = oracles.min_edge_cut_size(n, edges, s, t)
        table = oracles.max_dist_table(n, edges, lengths, s, t, cut)
        g = make_graph(n, edges)
        decomposition = cluster_vertex_deletion_set(g)
        for k in range(cut + 1):
            for ell in range(1, 8):
                expected = table[k] >= ell
                inst = make_instance(n, edges, s, t, k=k, ell=ell)
                for solver in (brute_force, search_tree, xp_by_max_degree):
                    got = solver(inst) is not None
                    checks += 1
                    disagreements += got != expected
                got = cvd_fpt(inst, decomposition) is not None
                checks += 1
                disagreements += got != expected

    sp_members = 0
    for n, edges, lengths, s, t in weighted_corpus:
        assert len(edges) <= 12
        cut = oracles.min_edge_cut_size(n, edges, s, t)
        kmax = min(cut, 4)
        table = oracles.max_dist_table(n, edges, lengths, s, t, kmax)
        finite = [v for v in table if v < INF]
        top = (max(finite) if finite else 0) + 2
        g = make_graph(n, edges, lengths)
        tree = build_sp_tree(g, s, t)
        leaf_len = {pair: g.lengths[i] for i, pair in enumerate(g.edges)}
        sp_members += tree is not None
        for k in range(kmax + 1):
            for ell in range(1, top + 1):
                expected = table[k] >= ell
                inst = make_instance(n, edges, s, t, k=k, ell=ell,
                                     lengths=lengths)
                for solver in (brute_force, search_tree, xp_by_max_degree):
                    got = solver(inst) is not None
                    checks += 1
                    disagreements += got != expected
            if tree is not None:
                value, _ = sp_max_length(tree, leaf_len, k)
                checks += 1
                disagreements += value != table[k]
        if tree is not None:
            for ell in range(1, top + 1):
                cost, _ = sp_min_cost(tree, leaf_len, ell)
                want = min((j for j in range(kmax + 1) if table[j] >= ell),
                           default=None)
                checks += 1
                if want is not None:
                    disagreements += cost != want
                else:
                    disagreements += cost <= kmax

    assert disagreements == 0
    assert sp_members >= 50
    print(f"criterion 1 PASS - oracle equivalence: {checks} checks, "
          f"{disagreements} disagreements ({sp_members} SP members)")


def test_criterion_2_kernel_bounds_and_answer_preservation():
    """1000 random connected instances across four families: every kernel
    obeys the 5f+2 vertex and 6f+2 edge bounds, and on the m <= 14 subset
    the whole budget-to-max-distance profile (hence every decision answer)
    is unchanged."""
    rng = random.Random(61)
    instances = []
    while len(instances) < 1000:
        family = ("erdos-renyi", "tree-plus-f-edges", "series-parallel",
                  "cluster-plus-x")[len(instances) % 4]
        seed = rng.randrange(10 ** 9)
        if family == "erdos-renyi":
            inst = gen_random(family, seed=seed, n=rng.randint(6, 18),
                              p=rng.choice((0.15, 0.25, 0.4)))
        elif family == "tree-plus-f-edges":
            inst = gen_random(family, seed=seed, n=rng.randint(6, 30),
                              f=rng.randint(0, 4))
        elif family == "series-parallel":
            inst = gen_random(family, seed=seed, m=rng.randint(4, 25))
        else:
            inst = gen_random(family, seed=seed, n=rng.randint(6, 16),
                              x=rng.randint(0, 3))
        g = inst.graph
        if not oracles.connected(g.n, list(g.edges)):
            continue
        instances.append(inst)

    preserved = 0
    for inst in instances:
        g = inst.graph
        f = len(feedback_edge_set(g))
        trace = kernelize(inst)
        kg = trace.kernel.graph
        assert kg.n <= 5 * f + 2
        assert kg.m <= 6 * f + 2
        if g.m <= 14:
            cut = oracles.min_edge_cut_size(g.n, list(g.edges), inst.s,
                                            inst.t)
            kmax = min(cut, 3)
            before = oracles.max_dist_table(g.n, list(g.edges),
                                            list(g.lengths), inst.s, inst.t,
                                            kmax)
            ki = trace.kernel
            after = oracles.max_dist_table(kg.n, list(kg.edges),
                                           list(kg.lengths), ki.s, ki.t,
                                           kmax)
            assert before == after, inst
            preserved += 1

    assert preserved >= 300
    print(f"criterion 2 PASS - kernel bounds on 1000 instances, "
          f"answer profile preserved on {preserved} (m<=14)")


def test_criterion_3_closed_forms_match_oracle(diam2_graphs):
    """Closed forms versus ground truth on every qualifying instance with
    n <= 7.  For targets >= 5 the rule "yes iff the budget covers the
    smaller terminal degree" is checked against the branching oracle at the
    two monotone boundaries, which decide every other budget and target:
    a yes survives budget growth, a no survives budget cuts, and for unit
    graphs on <= 7 vertices any target above 7 behaves like 7 because
    finite distances never exceed 6."""
    checks = 0
    for n, edges in diam2_graphs:
        lengths = [1] * len(edges)
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        for s, t in _terminal_orbits(n, edges):
            mindeg = min(deg[s], deg[t])
            for k in range(mindeg + 2):
                for ell in (5, 6, 7, 11):
                    inst = make_instance(n, edges, s, t, k=k, ell=ell)
                    sol = solve_diameter2(inst)
                    assert (sol is not None) == (k >= mindeg)
                    if sol is not None:
                        assert sol.cardinality <= k
                        assert sol.achieved_distance >= ell
                    checks += 1
            assert oracles.branch_decision(n, edges, lengths, s, t,
                                           mindeg, 7)
            checks += 1
            if mindeg > 0:
                assert not oracles.branch_decision(n, edges, lengths, s, t,
                                                   mindeg - 1, 5)
                checks += 1
            # small targets take the generic exact path; compare it to the
            # oracle across the full budget range anyway
            cut = oracles.min_edge_cut_size(n, edges, s, t)
            for k in {0, 1, max(cut - 1, 0), cut}:
                for ell in (1, 2, 3, 4):
                    inst = make_instance(n, edges, s, t, k=k, ell=ell)
                    got = solve_diameter2(inst) is not None
                    want = oracles.branch_decision(n, edges, lengths, s, t,
                                                   k, ell)
                    assert got == want, (n, edges, s, t, k, ell)
                    checks += 1

    for n in range(2, 8):
        edges = list(itertools.combinations(range(n), 2))
        lengths = [1] * len(edges)
        kmax = min(n - 1, len(edges))
        table = oracles.max_dist_table(n, edges, lengths, 0, 1, kmax)
        for s, t in itertools.combinations(range(n), 2):
            for k in range(kmax + 1):
                for ell in range(1, 9):
                    inst = make_instance(n, edges, s, t, k=k, ell=ell)
                    sol = solve_complete_unit(inst)
                    # terminals are interchangeable in a complete graph, so
                    # the (0, 1) table is the table for every pair
                    assert (sol is not None) == (table[k] >= ell)
                    if sol is not None:
                        assert sol.achieved_distance >= ell
                    checks += 1

    print(f"criterion 3 PASS - closed forms: {checks} checks, "
          f"{len(diam2_graphs)} diameter-2 graphs, complete graphs to n=7")


def test_criterion_4_approximation_guarantees():
    """On a 1000-instance corpus the greedy rounds always end feasible; on
    the oracle-tractable subset the deletion count is at most target times
    the optimum and the round count at most the optimum.  The parameterized
    scheme's optimal certificates equal the oracle optimum."""
    rng = random.Random(733)
    corpus = []
    while len(corpus) < 1000:
        n = rng.randint(4, 12)
        pool = list(itertools.combinations(range(n), 2))
        m = rng.randint(n - 1, min(len(pool), 3 * n))
        edges = rng.sample(pool, m)
        if not oracles.connected(n, edges):
            continue
        unit = rng.random() < 0.5
        lengths = [1] * m if unit else [rng.randint(1, 4) for _ in range(m)]
        s, t = rng.sample(range(n), 2)
        corpus.append((n, sorted(edges), lengths, s, t))

    feasible = ratio_checked = optimal_checked = 0
    for n, edges, lengths, s, t in corpus:
        g = make_graph(n, edges, lengths)
        dist = st_distance(g, s, t)
        ell = dist + rng.choice((1, 2, 3))
        sol, rounds = greedy_ell_approx(g, s, t, ell)
        assert sol.achieved_distance >= ell
        recomputed = evaluate_solution(g, s, t, sol.deleted_edges)
        assert recomputed.achieved_distance >= ell
        feasible += 1
        if len(edges) <= 12:
            cut = oracles.min_edge_cut_size(n, edges, s, t)
            opt = oracles.oracle_min_cost(n, edges, lengths, s, t, ell, cut)
            assert opt is not None
            assert rounds <= opt
            assert sol.cardinality <= ell * opt
            ratio_checked += 1
        if set(lengths) == {1} and len(edges) <= 12:
            cut = oracles.min_edge_cut_size(n, edges, s, t)
            if cut == 0:
                continue
            k = rng.randrange(cut)
            table = oracles.max_dist_table(n, edges, lengths, s, t, k)
            inst = make_instance(n, edges, s, t, k=k, ell=None)
            psol, cert = param_approx_max_length(inst, 1.0)
            assert psol.achieved_distance <= table[k]
            if cert.kind == CERT_OPTIMAL:
                assert psol.achieved_distance == table[k], (n, edges, s, t, k)
                optimal_checked += 1

    assert feasible == 1000
    assert ratio_checked >= 300
    assert optimal_checked >= 100
    print(f"criterion 4 PASS - greedy feasible on {feasible}/1000, ratio "
          f"checked on {ratio_checked}, {optimal_checked} optimal "
          f"certificates equal the oracle")


def test_criterion_5_reduction_soundness(tripartite_atlas7, weighted_corpus):
    """Cover reduction: a cover of size h exists iff the gadget instance is
    a yes, for every tripartite graph with <= 7 vertices and every budget
    below the vertex count.  The gadget graph does not depend on the budget
    and yes-instances survive budget growth, so the two boundary budgets
    (minimum cover size and one less) decide every other budget.  Gap
    thresholds, subdivision, split and completion transfers are checked on
    their corpora against brute force or exact transfer oracles."""
    st_cross = 0
    rng = random.Random(417)
    for tg in tripartite_atlas7:
        vc = _cover_size(tg)
        inst = gen_vc_reduction(tg, vc)
        _verify_gadget_layout(inst.graph, tg, GADGET_DISTANCE)
        assert (inst.k, inst.ell) == (vc, 9)
        assert _gadget_decision(tg, GADGET_DISTANCE, vc, 9)
        if vc >= 1:
            low = gen_vc_reduction(tg, vc - 1)
            assert low.graph == inst.graph
            assert not _gadget_decision(tg, GADGET_DISTANCE, vc - 1, 9)
        # tie the independent contracted-graph oracle to the real solver
        if tg.n <= 6 or rng.random() < 0.02:
            assert search_tree(inst) is not None
            if vc >= 1:
                assert search_tree(gen_vc_reduction(tg, vc - 1)) is None
            st_cross += 1

    gap_checked = 0
    for tg in tripartite_atlas7:
        if tg.n > 4:
            continue
        vc = _cover_size(tg)
        for x in (2, 3):
            glens = (x, x, 3 * x, 2 * x, 2 * x)
            for h in sorted({max(vc - 1, 0), vc}):
                inst, (high, low) = gen_gap_reduction(tg, h, x)
                assert (high, low) == (4 * x + 1, 3 * x + 2)
                _verify_gadget_layout(inst.graph, tg, glens)
                value = _gadget_max_length(tg, glens, h)
                if vc <= h:
                    assert value >= high, (tg, h, x, value)
                else:
                    assert value <= low, (tg, h, x, value)
                gap_checked += 1
                if tg.n <= 3:
                    got, _ = max_length(inst.graph, inst.s, inst.t, inst.k)
                    assert got == value

    sub_checked = 0
    for n, edges, _lengths, s, t in weighted_corpus:
        if len(edges) > 10:
            continue
        for k, ell in ((1, 2), (1, 3), (2, 4), (2, 6)):
            orig = make_instance(n, edges, s, t, k=k, ell=ell)
            sub = gen_subdivision(orig)
            assert (brute_force(orig) is None) == (brute_force(sub) is None)
        sub_checked += 1
        if sub_checked >= 80:
            break

    split_checked = 0
    atlas = oracles.graph_atlas(4)
    for n in (3, 4):
        for rows in atlas[n]:
            edges = oracles.rows_to_edges(rows)
            if not oracles.connected(n, edges):
                continue
            for s, t in _terminal_orbits(n, edges):
                dist = oracles.bf_distance(n, edges, [1] * len(edges), s, t)
                for k in (0, 1, 2):
                    for ell in (dist + 1, dist + 2):
                        orig = make_instance(n, edges, s, t, k=k, ell=ell)
                        split = gen_split_reduction(orig)
                        want = brute_force(orig) is not None
                        got = oracles.split_decision(
                            n, list(edges), s, t, n * n, split.k, split.ell)
                        assert got == want, (n, edges, s, t, k, ell)
                        split_checked += 1

    comp_checked = 0
    for n, edges, lengths, s, t in weighted_corpus:
        if len(edges) > 8 or any(
                all(v not in e for e in edges) for v in range(n)):
            continue
        for k, ell in ((1, 2), (1, 4), (2, 3)):
            orig = make_instance(n, edges, s, t, k=k, ell=ell,
                                 lengths=lengths)
            comp = gen_complete_reduction(orig)
            assert (brute_force(orig) is None) == (brute_force(comp) is None)
        comp_checked += 1
        if comp_checked >= 60:
            break

    assert st_cross >= 3369
    assert gap_checked >= 500
    assert sub_checked == 80 and comp_checked == 60 and split_checked >= 100
    print(f"criterion 5 PASS - cover reduction exhaustive to n=7 "
          f"({len(tripartite_atlas7)} classes, {st_cross} solver "
          f"cross-checks), gap {gap_checked}, subdivision {sub_checked}, "
          f"split {split_checked}, completion {comp_checked}")


def test_criterion_6_generated_structure(tripartite_atlas7):
    """Structural postconditions on generated instances: terminal distance 7
    and diameter 8 for cover gadgets (on inputs where every vertex
    participates; a single middle vertex leaves the diameter at 7),
    bipartiteness and degeneracy <= 2 after subdivision, the clique/
    independent-set split with the budget arithmetic, and completeness."""
    rng = random.Random(5150)
    eligible = [tg for tg in tripartite_atlas7 if _eligibility(tg)]
    small = [tg for tg in eligible if tg.n <= 6]
    big = [tg for tg in eligible if tg.n == 7]
    dist_checked = diam_checked = 0
    for tg in small + rng.sample(big, 60):
        inst = gen_vc_reduction(tg, 0)
        assert st_distance(inst.graph, inst.s, inst.t) == 7
        dist_checked += 1
        want = 8 if len(tg.v2) >= 2 else 7
        assert diameter(inst.graph) == want, tg
        diam_checked += 1

    for seed in range(150):
        inst = gen_random("erdos-renyi", seed=seed, n=5 + seed % 6, p=0.4)
        sub = gen_subdivision(Instance(inst.graph, inst.s, inst.t, 1, 2))
        n, edges = sub.graph.n, list(sub.graph.edges)
        assert oracles.is_bipartite(n, edges)
        assert oracles.degeneracy(n, edges) <= 2
        assert all(sub.graph.degree(v) == 2
                   for v in range(inst.graph.n, n))

    completions = 0
    for seed in range(50):
        base = gen_random("erdos-renyi", seed=1000 + seed, n=4 + seed % 4,
                          p=0.5)
        orig = Instance(base.graph, base.s, base.t, 1 + seed % 2, 3)
        split = gen_split_reduction(orig)
        n = orig.graph.n
        mult = n * n
        edge_set = {frozenset(e) for e in split.graph.edges}
        assert oracles.is_clique(range(n), edge_set)
        assert oracles.is_independent(range(n, split.graph.n), edge_set)
        assert split.graph.n == n + orig.graph.m * mult
        assert split.k == n * (n - 1) // 2 + orig.k * mult
        assert split.ell == 2 * orig.ell

        if any(orig.graph.degree(v) == 0 for v in range(n)):
            continue  # completion refuses isolated vertices
        comp = gen_complete_reduction(orig)
        completions += 1
        assert 2 * comp.graph.m == n * (n - 1)
        kept = {tuple(e): l for e, l in zip(comp.graph.edges,
                                            comp.graph.lengths)}
        for e, l in zip(orig.graph.edges, orig.graph.lengths):
            assert kept[tuple(e)] == l
        assert all(l == orig.ell + 1 for e, l in kept.items()
                   if not orig.graph.has_edge(*e))
    assert completions >= 35

    print(f"criterion 6 PASS - gadget distance on {dist_checked} eligible "
          f"inputs, diameter on {diam_checked}, subdivision 150, split 50, "
          f"completion {completions}")


def test_criterion_7_byte_determinism(tmp_path, capsys):
    """Identical inputs produce byte-identical output: generator emissions
    compare equal as bytes, and solver JSON compares equal as bytes after
    removing the wall-clock field."""

    def run(*argv):
        code = main(list(argv))
        out = capsys.readouterr().out
        assert code == 0
        return out

    gens = (("--family", "erdos-renyi", "--seed", "9", "--n", "9",
             "--p", "0.35", "--max-length", "3"),
            ("--family", "series-parallel", "--seed", "5", "--m", "11"),
            ("--family", "cluster-plus-x", "--seed", "3", "--n", "10",
             "--x", "2"),
            ("--family", "tree-plus-f-edges", "--seed", "8", "--n", "12",
             "--f", "2"))
    gen_runs = 0
    for flags in gens:
        assert run("gen", *flags) == run("gen", *flags)
        gen_runs += 1

    diamond = tmp_path / "diamond.mve"
    diamond.write_text("p mve 4 4\ns 1\nt 4\ne 1 2 1\ne 2 4 1\ne 1 3 1\n"
                       "e 3 4 1\n")
    k5 = tmp_path / "k5.mve"
    k5.write_text("p mve 5 10\ns 1\nt 5\n" + "".join(
        f"e {u} {v} 1\n"
        for u, v in itertools.combinations(range(1, 6), 2)))
    er = tmp_path / "er.mve"
    er.write_text(run("gen", "--family", "erdos-renyi", "--seed", "9",
                      "--n", "9", "--p", "0.35", "--max-length", "3"))
    sp = tmp_path / "sp.mve"
    sp.write_text(run("gen", "--family", "series-parallel", "--seed", "5",
                      "--m", "11"))

    jobs = []
    for inst in (diamond, er, sp):
        for alg in ("auto", "bruteforce", "searchtree"):
            for kern in ("on", "off"):
                jobs.append((inst, alg, ("--variant", "decision", "--ell",
                                         "3", "--k", "2", "--kernelize",
                                         kern)))
            jobs.append((inst, alg, ("--variant", "mincost", "--ell", "4")))
            jobs.append((inst, alg, ("--variant", "maxlength", "--k", "2")))
    jobs += [(diamond, "spdp", ("--variant", "decision", "--ell", "3",
                                "--k", "1")),
             (sp, "spdp", ("--variant", "mincost", "--ell", "4")),
             (sp, "spdp", ("--variant", "maxlength", "--k", "2")),
             (diamond, "cvd", ("--variant", "decision", "--ell", "3",
                               "--k", "1")),
             (k5, "complete", ("--variant", "decision", "--ell", "3",
                               "--k", "4")),
             (k5, "diam2", ("--variant", "decision", "--ell", "5",
                            "--k", "4")),
             (diamond, "greedy", ("--variant", "mincost", "--ell", "3")),
             (diamond, "paramapprox", ("--variant", "maxlength",
                                       "--k", "1"))]
    for inst, alg, flags in jobs:
        outs = []
        for _ in range(2):
            payload = json.loads(run("solve", str(inst), "--alg", alg,
                                     *flags))
            payload.pop("wall_ms")
            outs.append(json.dumps(payload, sort_keys=True))
        assert outs[0] == outs[1], (inst, alg, flags)

    print(f"criterion 7 PASS - {gen_runs} generator emissions and "
          f"{len(jobs)} solver runs byte-stable")
