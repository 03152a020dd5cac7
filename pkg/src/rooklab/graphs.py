"""Simplicial rook graphs and companion constructions.

The simplicial rook graph SR(m, n) has one vertex for every length-m vector
of nonnegative integers summing to n; two vertices are adjacent when they
differ in exactly two coordinate positions.  Degenerate corners follow the
usual conventions: SR(m, 0) and SR(1, n) are single vertices, SR(0, n) with
n > 0 has no vertices at all, SR(m, 1) is the complete graph K_m and
SR(2, n) is K_{n+1}.

Vertices carry hashable labels (integer tuples for SR and Johnson graphs);
adjacency is stored as one Python-int bit row per vertex, which keeps edge
tests, common-neighbour counts and induced subgraphs cheap and exact.
"""

from __future__ import annotations

import itertools
from math import comb

import numpy as np


class Graph:
    """Immutable undirected graph with labelled vertices and bitset rows."""

    __slots__ = ("labels", "rows", "index", "family", "params")

    def __init__(self, labels, rows, family=None, params=None):
        self.labels = tuple(labels)
        self.rows = tuple(rows)
        if len(self.labels) != len(self.rows):
            raise ValueError("labels and adjacency rows disagree in length")
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("vertex labels must be distinct")
        self.family = family
        self.params = params

    @classmethod
    def from_edges(cls, labels, edges, family=None, params=None):
        """Build a graph from vertex labels and an iterable of label pairs."""
        labels = tuple(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        rows = [0] * len(labels)
        for a, b in edges:
            i, j = index[a], index[b]
            if i == j:
                raise ValueError("loops are not allowed")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(labels, rows, family=family, params=params)

    @property
    def order(self):
        return len(self.labels)

    def has_edge(self, i, j):
        return (self.rows[i] >> j) & 1 == 1

    def degree(self, i):
        return self.rows[i].bit_count()

    def degrees(self):
        return [r.bit_count() for r in self.rows]

    def neighbors(self, i):
        row = self.rows[i]
        out = []
        while row:
            low = row & -row
            out.append(low.bit_length() - 1)
            row ^= low
        return out

    def edge_count(self):
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self):
        """Yield edges as index pairs (i, j) with i < j, in row order."""
        for i, row in enumerate(self.rows):
            row >>= i + 1
            j = i + 1
            while row:
                low = row & -row
                yield (i, j + low.bit_length() - 1)
                row ^= low

    def is_regular(self):
        degs = self.degrees()
        return len(set(degs)) <= 1

    def adjacency_matrix(self):
        """Dense adjacency matrix as an int64 numpy array."""
        v = self.order
        a = np.zeros((v, v), dtype=np.int64)
        for i, row in enumerate(self.rows):
            for j in _bits(row):
                a[i, j] = 1
        return a

    def complement(self):
        v = self.order
        full = (1 << v) - 1
        rows = [full & ~(r | (1 << i)) for i, r in enumerate(self.rows)]
        return Graph(self.labels, rows)

    def relabeled(self, perm):
        """Image of the graph under perm: new vertex perm[i] is old vertex i."""
        v = self.order
        if sorted(perm) != list(range(v)):
            raise ValueError("not a permutation of the vertex indices")
        labels = [None] * v
        rows = [0] * v
        for i in range(v):
            labels[perm[i]] = self.labels[i]
            acc = 0
            for j in _bits(self.rows[i]):
                acc |= 1 << perm[j]
            rows[perm[i]] = acc
        return Graph(labels, rows)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.rows == other.rows

    def __hash__(self):
        return hash((self.labels, self.rows))

    def __repr__(self):
        fam = f" {self.family}{self.params}" if self.family else ""
        return f"<Graph{fam} v={self.order} e={self.edge_count()}>"


def _bits(row):
    while row:
        low = row & -row
        yield low.bit_length() - 1
        row ^= low


def sr_vertices(m, n):
    """All length-m nonnegative integer vectors summing to n, lexicographic.

    sr_vertices(0, 0) is [()]: the empty vector is the one way to write 0
    as a sum of zero parts.  sr_vertices(0, n) for n > 0 is empty.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    if m == 0:
        return [()] if n == 0 else []
    if m == 1:
        return [(n,)]
    out = []
    for first in range(n + 1):
        for rest in sr_vertices(m - 1, n - first):
            out.append((first,) + rest)
    return out


def sr_graph(m, n):
    """The simplicial rook graph SR(m, n).

    Vertices in lexicographic order; x ~ y iff they differ in exactly two
    coordinates.  The graph is n(m-1)-regular with C(n+m-1, n) vertices.
    """
    verts = sr_vertices(m, n)
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    # Generate each neighbour directly: move d units from coordinate i to j.
    for u, ui in index.items():
        acc = 0
        for i in range(m):
            for d in range(1, u[i] + 1):
                for j in range(m):
                    if j == i:
                        continue
                    w = list(u)
                    w[i] -= d
                    w[j] += d
                    acc |= 1 << index[tuple(w)]
        rows[ui] = acc
    return Graph(verts, rows, family="sr", params=(m, n))


def johnson_graph(v, n):
    """The Johnson graph J(v, n): n-subsets of {0..v-1}, adjacent when the
    intersection has size n-1.  Labels are sorted tuples."""
    if v < 0 or n < 0:
        raise ValueError("parameters must be nonnegative")
    verts = [tuple(c) for c in itertools.combinations(range(v), n)]
    index = {s: i for i, s in enumerate(verts)}
    rows = [0] * len(verts)
    for s, si in index.items():
        acc = 0
        sset = set(s)
        for out in s:
            for inn in range(v):
                if inn in sset:
                    continue
                t = tuple(sorted(sset - {out} | {inn}))
                acc |= 1 << index[t]
        rows[si] = acc
    return Graph(verts, rows, family="johnson", params=(v, n))


def complete_graph(n):
    full = (1 << n) - 1
    rows = [full & ~(1 << i) for i in range(n)]
    return Graph(range(n), rows)


def complete_bipartite(a, b):
    left = (1 << a) - 1
    right = ((1 << b) - 1) << a
    rows = [right] * a + [left] * b
    return Graph(range(a + b), rows)


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    rows = [(1 << ((i + 1) % n)) | (1 << ((i - 1) % n)) for i in range(n)]
    return Graph(range(n), rows)


def cartesian_product(g, h):
    """Cartesian product: (a,b) ~ (a',b') iff a=a', b~b' or b=b', a~a'.

    Vertex (i, j) of the product sits at index i*h.order + j and carries
    the label pair (g.labels[i], h.labels[j]).
    """
    hv = h.order
    labels = [(la, lb) for la in g.labels for lb in h.labels]
    rows = [0] * (g.order * hv)
    for i in range(g.order):
        gi = g.rows[i]
        for j in range(hv):
            acc = 0
            for j2 in _bits(h.rows[j]):
                acc |= 1 << (i * hv + j2)
            for i2 in _bits(gi):
                acc |= 1 << (i2 * hv + j)
            rows[i * hv + j] = acc
    return Graph(labels, rows)


def cube_graph(d):
    """The d-dimensional hypercube Q_d as an iterated product of K_2."""
    g = complete_graph(2)
    if d == 0:
        return complete_graph(1)
    out = g
    for _ in range(d - 1):
        out = cartesian_product(out, g)
    return out


def induced_subgraph(g, indices):
    """Induced subgraph on the given vertex indices, kept in sorted order."""
    idx = sorted(indices)
    if len(set(idx)) != len(idx):
        raise ValueError("duplicate vertex index")
    if idx and (idx[0] < 0 or idx[-1] >= g.order):
        raise IndexError("vertex index out of range")
    pos = {x: i for i, x in enumerate(idx)}
    rows = []
    for x in idx:
        acc = 0
        row = g.rows[x]
        for y in idx:
            if (row >> y) & 1:
                acc |= 1 << pos[y]
        rows.append(acc)
    return Graph([g.labels[x] for x in idx], rows)


def subgraph_on_labels(g, labels):
    """Induced subgraph on a collection of vertex labels."""
    return induced_subgraph(g, [g.index[lab] for lab in labels])


def sr_order(m, n):
    """Number of vertices of SR(m, n)."""
    return comb(n + m - 1, n) if m >= 1 else (1 if n == 0 else 0)
