"""Valuated strict gammoids: weighted digraphs, linkings, and the bridge
between row presentations and digraph presentations.

Vertices are {0..n-1}; absent edges weigh inf and every vertex reaches
itself at cost 0.  All valuations here arise by tropical minors of the
reduction matrix, whose rows are indexed by the non-sink vertices.
"""

from .errors import (NegativeCycle, NoBasis, NotMinimalMatching,
                     TroplinError)
from .trop import INF, ZERO, min_assignment, stiefel, trop_minor
from .util import bits, elems, list1, mask_of
from .valuated import v_dual


def _fmt(v):
    return "inf" if v == INF else str(v)


class WeightedDigraph:
    def __init__(self, n, sinks, weights):
        if n <= 0:
            raise ValueError("need at least one vertex")
        full = (1 << n) - 1
        if sinks == 0 or sinks & ~full:
            raise ValueError("sinks must be a nonempty subset of vertices")
        edges = {}
        for (i, j), w in weights.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError("edge endpoint out of range")
            if w == INF:
                continue
            if i == j:
                if w != 0:
                    raise ValueError("self-loops must weigh 0")
                continue
            edges[(i, j)] = w
        self.n = n
        self.sinks = sinks
        self.edges = edges
        self._check_cycles()

    def _check_cycles(self):
        "Bellman-Ford from a virtual source; a relaxing nth pass is a cycle."
        n = self.n
        dist = [ZERO] * n
        pred = [-1] * n
        bad = -1
        for it in range(n):
            bad = -1
            for (i, j), w in self.edges.items():
                if dist[i] + w < dist[j]:
                    dist[j] = dist[i] + w
                    pred[j] = i
                    bad = j
            if bad < 0:
                return
        v = bad
        for _ in range(n):
            v = pred[v]
        cycle = [v]
        u = pred[v]
        while u != v:
            cycle.append(u)
            u = pred[u]
        cycle.reverse()
        raise NegativeCycle("digraph has a negative cycle",
                            witness=[u + 1 for u in cycle])

    def weight(self, i, j):
        if i == j:
            return ZERO
        return self.edges.get((i, j), INF)

    def sources(self):
        return self.n_full() ^ self.sinks

    def n_full(self):
        return (1 << self.n) - 1

    def reduction_matrix(self):
        "One row per non-sink vertex, entries the outgoing edge weights."
        rows = elems(self.n_full() ^ self.sinks)
        return [[self.weight(i, j) for j in range(self.n)] for i in rows]


def linking_value(g, subset):
    """Min total weight of a vertex-disjoint path system from `subset`
    onto the sinks, as the raw (unnormalized) tropical minor of the
    reduction matrix at the complementary columns.
    """
    d = g.sinks.bit_count()
    if subset.bit_count() != d:
        raise ValueError("need a subset the size of the sink set")
    if g.sinks == g.n_full():
        return ZERO
    return trop_minor(g.reduction_matrix(), g.n_full() ^ subset)


def gammoid_valuation(g):
    "The valuated matroid of min-weight linkings onto the sinks."
    from .valuated import ValuatedMatroid
    from .util import ksubsets

    d = g.sinks.bit_count()
    n = g.n
    if g.sinks == g.n_full():
        return ValuatedMatroid(n, n, {g.n_full(): ZERO})
    a = g.reduction_matrix()
    entries = {}
    for b in ksubsets(n, d):
        v = trop_minor(a, g.n_full() ^ b)
        if v != INF:
            entries[b] = v
    vm = ValuatedMatroid(n, d, entries)
    if vm != v_dual(stiefel(a)):
        raise TroplinError("linking values disagree with the dual minors")
    return vm


def digraph_from_presentation(points, basis=None, matching=None):
    """Turn a row presentation into a digraph presenting the dual.

    Rows are matched minimally onto a basis of their span; each matched
    column becomes a non-sink vertex whose outgoing weights are its row,
    rescaled so the matched entry is 0.  Defaults: the lexicographically
    least basis, and the matching the assignment solver reports first.
    """
    a = [tuple(row) for row in points]
    w = stiefel(a)
    uw = w.underlying()
    d, n = len(a), w.n
    if basis is None:
        basis = min(uw.bases, key=lambda b: tuple(bits(b)))
    elif basis not in uw.baseset:
        raise NoBasis("not a basis of the row span", witness=list1(basis))
    cols = elems(basis)
    value, match = min_assignment([[row[c] for c in cols] for row in a])
    best = value
    if matching is None:
        sigma = [cols[match[r]] for r in range(d)]
    else:
        sigma = list(matching)
        if sorted(sigma) != cols:
            raise ValueError("matching is not a bijection onto the basis")
        total = ZERO
        for r in range(d):
            if a[r][sigma[r]] == INF:
                total = INF
                break
            total += a[r][sigma[r]]
        if total != best:
            raise NotMinimalMatching(
                "matching does not attain the tropical minor",
                witness={"weight": _fmt(total), "minimum": _fmt(best)})
    weights = {}
    for r in range(d):
        i = sigma[r]
        base = a[r][i]
        for j in range(n):
            if j == i or a[r][j] == INF:
                continue
            weights[(i, j)] = a[r][j] - base
    return WeightedDigraph(n, ((1 << n) - 1) ^ basis, weights)


def stable_intersect_hyperplanes(apices, target):
    """Fold the apices' min-plus hyperplanes by stable intersection and
    compare with the target valuation."""
    from .valuated import hyperplane, stable_intersection

    if not apices:
        raise ValueError("need at least one apex")
    n = len(apices[0])
    if target.n != n or target.d != n - len(apices):
        raise ValueError("target rank does not match the apex count")
    cur = hyperplane(apices[0])
    for apex in apices[1:]:
        cur = stable_intersection(cur, hyperplane(apex))
    return cur == target
