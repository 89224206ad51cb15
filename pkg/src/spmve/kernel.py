"""Answer-preserving kernelization for most-vital-edges instances.

Two rules, each applied to exhaustion in ascending vertex-id order, repeated
until neither fires:

  Rule 1  delete a degree-one vertex that is not a terminal;
  Rule 2  replace a degree-two non-terminal v with neighbors u,w (u,w not
          already adjacent) by an edge {u,w} of length tau(u,v) + tau(v,w).

Components containing neither terminal are discarded first; if s and t are in
different components the kernel is the edgeless graph on {s,t} (the distance
is already infinite, so every budget/target is a yes).

For a connected input whose feedback edge set has size f, the kernel has at
most 5f+2 vertices and 6f+2 edges (asserted).

Every reduced edge remembers the ordered list of original edges it stands for,
oriented from its smaller original endpoint; lifting a kernel solution swaps
each created edge for the first original edge in its list.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, Instance, Solution, connected_components, edge_key, \
    evaluate_solution, feedback_edge_set


@dataclass(frozen=True)
class DeleteDegreeOne:
    vertex: int
    neighbor: int


@dataclass(frozen=True)
class ContractDegreeTwo:
    vertex: int
    neighbors: tuple          # (smaller, larger) original ids
    created: tuple            # the new edge, as an original-id pair
    created_length: int
    constituents: tuple       # original edges, ordered from created[0]


@dataclass(frozen=True)
class KernelTrace:
    """Everything needed to replay the reduction and lift solutions back."""

    original: Instance
    kernel: Instance
    events: tuple
    discarded_vertices: tuple
    kernel_vertices: tuple    # kernel id i <-> original id kernel_vertices[i]
    edge_constituents: tuple  # per kernel edge id: ordered original edges


class _Reducer:
    """Mutable adjacency keyed by original vertex ids.

    adj[u][v] = (length, constituents) where constituents is the ordered tuple
    of original edges the current edge stands for, oriented from min(u, v).
    """

    def __init__(self, graph: Graph, s: int, t: int, keep):
        self.s = s
        self.t = t
        self.adj = {v: {} for v in keep}
        for i, (u, v) in enumerate(graph.edges):
            if u in self.adj and v in self.adj:
                self.adj[u][v] = (graph.lengths[i], ((u, v),))
                self.adj[v][u] = (graph.lengths[i], ((u, v),))
        self.events = []

    def _oriented(self, a: int, b: int):
        """Constituents of current edge {a,b} oriented from a."""
        length, chain = self.adj[a][b]
        if a == min(a, b):
            return length, chain
        return length, tuple(reversed(chain))

    def rule1_once(self) -> bool:
        for v in sorted(self.adj):
            if v in (self.s, self.t) or len(self.adj[v]) != 1:
                continue
            (u,) = self.adj[v]
            del self.adj[u][v]
            del self.adj[v]
            self.events.append(DeleteDegreeOne(v, u))
            return True
        return False

    def rule2_once(self) -> bool:
        for v in sorted(self.adj):
            if v in (self.s, self.t) or len(self.adj[v]) != 2:
                continue
            a, b = sorted(self.adj[v])
            if b in self.adj[a]:
                continue  # would create a parallel edge
            len_a, chain_a = self._oriented(a, v)
            len_b, chain_b = self._oriented(v, b)
            length = len_a + len_b
            chain = chain_a + chain_b
            del self.adj[a][v]
            del self.adj[b][v]
            del self.adj[v]
            self.adj[a][b] = (length, chain)
            self.adj[b][a] = (length, chain)
            self.events.append(ContractDegreeTwo(v, (a, b), (a, b), length, chain))
            return True
        return False

    def run_rule(self, step) -> bool:
        fired = False
        while step():
            fired = True
        return fired

    def run_all(self):
        while True:
            fired = self.run_rule(self.rule1_once)
            fired |= self.run_rule(self.rule2_once)
            if not fired:
                return


def _finalize(instance: Instance, reducer: _Reducer, discarded) -> KernelTrace:
    kept = sorted(reducer.adj)
    index = {orig: i for i, orig in enumerate(kept)}
    pairs = []
    lengths = []
    constituents = []
    seen = set()
    for u in kept:
        for v in sorted(reducer.adj[u]):
            pair = edge_key(u, v)
            if pair in seen:
                continue
            seen.add(pair)
            length, chain = reducer.adj[pair[0]][pair[1]]
            pairs.append((index[pair[0]], index[pair[1]]))
            lengths.append(length)
            constituents.append(chain)
    kernel_graph = Graph(len(kept), pairs, lengths)
    kernel = Instance(kernel_graph, index[instance.s], index[instance.t],
                      instance.k, instance.ell)
    return KernelTrace(
        original=instance,
        kernel=kernel,
        events=tuple(reducer.events),
        discarded_vertices=tuple(sorted(discarded)),
        kernel_vertices=tuple(kept),
        edge_constituents=tuple(constituents),
    )


def _split_components(instance: Instance):
    comps = connected_components(instance.graph)
    comp_s = next(c for c in comps if instance.s in c)
    if instance.t in comp_s:
        keep = set(comp_s)
    else:
        keep = {instance.s, instance.t}
    discarded = [v for v in range(instance.graph.n) if v not in keep]
    return keep, discarded


def apply_rule1(instance: Instance):
    """Exhaust Rule 1 only.  Returns (reduced instance, events)."""
    keep, discarded = _split_components(instance)
    reducer = _Reducer(instance.graph, instance.s, instance.t, keep)
    reducer.run_rule(reducer.rule1_once)
    trace = _finalize(instance, reducer, discarded)
    return trace.kernel, trace.events


def apply_rule2(instance: Instance):
    """Exhaust Rule 2 only (conventionally after Rule 1 is exhausted)."""
    keep, discarded = _split_components(instance)
    reducer = _Reducer(instance.graph, instance.s, instance.t, keep)
    reducer.run_rule(reducer.rule2_once)
    trace = _finalize(instance, reducer, discarded)
    return trace.kernel, trace.events


def kernelize(instance: Instance) -> KernelTrace:
    """Run both rules to their joint fixpoint and bound-check the kernel."""
    keep, discarded = _split_components(instance)
    reducer = _Reducer(instance.graph, instance.s, instance.t, keep)
    reducer.run_all()
    trace = _finalize(instance, reducer, discarded)
    if len(connected_components(instance.graph)) == 1:
        f = len(feedback_edge_set(instance.graph))
        assert trace.kernel.graph.n <= 5 * f + 2, "kernel vertex bound violated"
        assert trace.kernel.graph.m <= 6 * f + 2, "kernel edge bound violated"
    return trace


def lift_solution(trace: KernelTrace, kernel_solution: Solution) -> Solution:
    """Map a kernel solution to an original-graph solution of the same size:
    each deleted kernel edge is replaced by the first original edge in its
    constituent list."""
    kernel_graph = trace.kernel.graph
    lifted = []
    for u, v in kernel_solution.deleted_edges:
        try:
            eid = kernel_graph.edge_id(u, v)
        except InputError:
            raise InputError(f"solution edge ({u},{v}) is not a kernel edge") from None
        lifted.append(trace.edge_constituents[eid][0])
    solution = evaluate_solution(trace.original.graph, trace.original.s,
                                 trace.original.t, lifted)
    assert solution.cardinality == kernel_solution.cardinality
    return solution


def replay(trace: KernelTrace) -> Graph:
    """Re-apply the recorded discards and events to the original graph; used
    to check that the trace reproduces the kernel exactly."""
    adj = {v: {} for v in range(trace.original.graph.n)
           if v not in set(trace.discarded_vertices)}
    g = trace.original.graph
    for i, (u, v) in enumerate(g.edges):
        if u in adj and v in adj:
            adj[u][v] = g.lengths[i]
            adj[v][u] = g.lengths[i]
    for ev in trace.events:
        if isinstance(ev, DeleteDegreeOne):
            del adj[ev.neighbor][ev.vertex]
            del adj[ev.vertex]
        else:
            a, b = ev.neighbors
            del adj[a][ev.vertex]
            del adj[b][ev.vertex]
            del adj[ev.vertex]
            adj[a][b] = ev.created_length
            adj[b][a] = ev.created_length
    kept = sorted(adj)
    index = {orig: i for i, orig in enumerate(kept)}
    pairs = []
    lengths = []
    for u in kept:
        for v in sorted(adj[u]):
            if u < v:
                pairs.append((index[u], index[v]))
                lengths.append(adj[u][v])
    return Graph(len(kept), pairs, lengths)
