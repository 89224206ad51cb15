"""Bridging helpers between plain-tuple test graphs and package objects."""

from spmve import Graph, Instance


def make_graph(n, edges, lengths=None):
    edges = list(edges)
    if lengths is None:
        lengths = [1] * len(edges)
    return Graph(n, edges, list(lengths))


def make_instance(n, edges, s, t, k=0, ell=None, lengths=None):
    return Instance(make_graph(n, edges, lengths), s, t, k, ell)


def as_tuple(graph):
    return graph.n, list(graph.edges), list(graph.lengths)


def solution_pairs(solution):
    return sorted(tuple(sorted(e)) for e in solution.deleted_edges)
