"""Godsil-McKay switching on 4-sets of vertices.

A 4-set B qualifies when it induces a regular subgraph and every vertex
outside B is adjacent to exactly 0, 2 or 4 of its members.  Switching flips
adjacency between each outside vertex with exactly 2 neighbours in B and all
of B, which preserves the spectrum; repeated switching from SR(4,3) yields
hundreds of pairwise nonisomorphic graphs sharing its spectrum.

Named sets: on SR(4,n) the four vertices n*e_i form a switching 4-clique,
and on SR(m,3) so do the four vertices a*e_1 + b*e_2 with a+b=3.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph
from .invariants import SizeLimit, canonical_form


class NotSwitchable(Exception):
    """Carries the first outside vertex violating the 0/2/4 condition, or a
    description of the induced-regularity failure."""

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


_ENUM_LIMIT = 100


@dataclass(frozen=True)
class SwitchingSet:
    """Four vertex indices inducing a regular subgraph such that every
    outside vertex sees 0, 2 or 4 of them.  kind records the induced
    subgraph: "clique" when it is K_4, otherwise "regular"."""

    members: tuple
    kind: str


def validate_switching_set(g: Graph, b) -> SwitchingSet:
    """Check the Godsil-McKay conditions for the 4-set b and return the
    validated SwitchingSet; NotSwitchable otherwise."""
    members = tuple(sorted(b))
    if len(members) != 4 or len(set(members)) != 4:
        raise ValueError("a switching set consists of 4 distinct vertices")
    if not all(0 <= u < g.order for u in members):
        raise ValueError("vertex index out of range")
    mask = 0
    for u in members:
        mask |= 1 << u
    inner = [(g.rows[u] & mask).bit_count() for u in members]
    if len(set(inner)) != 1:
        raise NotSwitchable(f"induced subgraph on {members} is not regular")
    outside = ~mask
    for u in range(g.order):
        if (outside >> u) & 1:
            count = (g.rows[u] & mask).bit_count()
            if count not in (0, 2, 4):
                raise NotSwitchable(
                    f"vertex {u} is adjacent to {count} members of {members}",
                    vertex=u)
    kind = "clique" if inner[0] == 3 else "regular"
    return SwitchingSet(members, kind)


def gm_switch(g: Graph, b: SwitchingSet) -> Graph:
    """Switched graph: adjacency flipped exactly for pairs (x in B, c not in
    B) where c has 2 neighbours in B.  Same degree sequence, same spectrum;
    applying the same set twice returns the original graph."""
    if not isinstance(b, SwitchingSet):
        b = validate_switching_set(g, b)
    mask = 0
    for u in b.members:
        mask |= 1 << u
    rows = list(g.rows)
    for c in range(g.order):
        if (mask >> c) & 1:
            continue
        if (rows[c] & mask).bit_count() == 2:
            rows[c] ^= mask
            for u in b.members:
                rows[u] ^= 1 << c
    return Graph(g.labels, rows, family=None,
                 params=(g.family, g.params, b.members))


def enumerate_switching_sets(g: Graph) -> list:
    """Every valid switching 4-set, ordered by sorted member tuple.  The
    vertex count is capped: the scan is quartic."""
    v = g.order
    if v > _ENUM_LIMIT:
        raise SizeLimit(f"switching enumeration is capped at {_ENUM_LIMIT} "
                        f"vertices, got {v}")
    out = []
    rows = g.rows
    full = (1 << v) - 1
    for a in range(v):
        for b in range(a + 1, v):
            for c in range(b + 1, v):
                mask3 = (1 << a) | (1 << b) | (1 << c)
                for d in range(c + 1, v):
                    mask = mask3 | (1 << d)
                    members = (a, b, c, d)
                    inner0 = (rows[a] & mask).bit_count()
                    if any((rows[u] & mask).bit_count() != inner0
                           for u in (b, c, d)):
                        continue
                    ok = True
                    rest = full & ~mask
                    while rest:
                        low = rest & -rest
                        rest ^= low
                        if (rows[low.bit_length() - 1] & mask).bit_count() not in (0, 2, 4):
                            ok = False
                            break
                    if ok:
                        out.append(SwitchingSet(
                            members, "clique" if inner0 == 3 else "regular"))
    return out


@dataclass(frozen=True)
class ClosureResult:
    """Isomorphism classes reachable from the start graph by repeated valid
    switchings.  graphs holds one representative per class in BFS discovery
    order (the start graph first); capped reports whether the class cap cut
    the exploration short, making count a lower bound."""

    graphs: tuple
    capped: bool

    @property
    def count(self):
        return len(self.graphs)


def switching_closure(g: Graph, limit: int) -> ClosureResult:
    """BFS over graphs reachable by repeated switching at any valid 4-set,
    deduplicated by canonical certificate, capped at `limit` classes."""
    if g.order > _ENUM_LIMIT:
        raise SizeLimit(f"closure exploration is capped at {_ENUM_LIMIT} "
                        f"vertices, got {g.order}")
    if limit < 1:
        raise ValueError("class cap must be positive")
    seen = {canonical_form(g).certificate}
    reps = [g]
    queue = deque([g])
    while queue:
        current = queue.popleft()
        for b in enumerate_switching_sets(current):
            mate = gm_switch(current, b)
            cert = canonical_form(mate).certificate
            if cert in seen:
                continue
            if len(reps) >= limit:
                return ClosureResult(tuple(reps), True)
            seen.add(cert)
            reps.append(mate)
            queue.append(mate)
    return ClosureResult(tuple(reps), False)


def named_switching_set(g: Graph, name: str) -> SwitchingSet:
    """The two switching families singled out on SR graphs, by name.

    "v1": the four vertices n*e_i of SR(4, n).
    "e12": the four vertices a*e_1 + b*e_2, a+b = 3, of SR(m, 3), m >= 2.
    "ones": the four vertices with support of size 3 in SR(4, 3).
    """
    if g.family != "sr":
        raise ValueError("named switching sets are defined on SR graphs")
    m, n = g.params
    if name == "v1":
        if m != 4 or n < 1:
            raise ValueError('"v1" needs SR(4, n) with n >= 1')
        labels = [tuple(n if k == i else 0 for k in range(4)) for i in range(4)]
    elif name == "e12":
        if n != 3 or m < 2:
            raise ValueError('"e12" needs SR(m, 3) with m >= 2')
        labels = [(a, 3 - a) + (0,) * (m - 2) for a in range(4)]
    elif name == "ones":
        if (m, n) != (4, 3):
            raise ValueError('"ones" needs SR(4, 3)')
        labels = [tuple(0 if k == i else 1 for k in range(4)) for i in range(4)]
    else:
        raise ValueError(f"unknown switching set name {name!r}")
    return validate_switching_set(g, [g.index[lab] for lab in labels])
