"""Explicit eigenvector families of SR(m, n) and the graphs they live on.

Two constructions produce exact eigenvectors for the extreme negative
eigenvalues.  For a permutation pi with n inversions, F_pi is a signed
indicator vector supported on X_pi = {x(sigma) : sigma pi-admissible} and is
an eigenvector for -n; the X_pi themselves induce bipartite n-regular
subgraphs Gamma(m, n, pi) whose isomorphism classes are classified here for
small n.  For an orbit {p + sigma(w)} of pairwise distinct vertices, F_pw is
an eigenvector for -binom(m, 2); the canonical half-integral w gives a family
of size binom(n - binom(m-1, 2), m-1).

The hand-built sparse eigenvectors used in the n = 3 and n = 4 spectrum
proofs (eigenvalues m-3, 2m-5 and m-6) are provided under small_n_eigenvector.

Everything is integer or Fraction arithmetic; eigenvector claims are meant to
be checked exactly with linalg.verify_eigenvector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb

from .graphs import Graph, sr_vertices
from .invariants import canonical_form
from .linalg import SpectrumProbe, try_integral_spectrum


class InvalidOrbit(Exception):
    """The points p + sigma(w) fail to be pairwise distinct vertices."""


def _check_permutation(pi):
    pi = tuple(pi)
    if sorted(pi) != list(range(len(pi))):
        raise ValueError(f"{pi!r} is not a permutation of range({len(pi)})")
    return pi


def inversion_vector(pi) -> tuple:
    """a_i = #{j > i : pi_i > pi_j}; entries satisfy a_i <= m-1-i and the sum
    is the inversion count, so a is itself a vertex of SR(m, inversions)."""
    pi = _check_permutation(pi)
    m = len(pi)
    return tuple(sum(1 for j in range(i + 1, m) if pi[i] > pi[j]) for i in range(m))


def inversion_count(pi) -> int:
    return sum(inversion_vector(pi))


def sign(pi) -> int:
    """Permutation sign from inversion parity (= transposition parity)."""
    return -1 if inversion_count(pi) & 1 else 1


def permutations_with_inversions(m: int, n: int):
    """All pi in Sym(m) with exactly n inversions, in lexicographic order of
    the inversion vector.  Decodes the vector like a Lehmer code, so only the
    matching permutations are ever materialized."""
    bounds = [m - 1 - i for i in range(m)]
    tails = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        tails[i] = tails[i + 1] + bounds[i]
    prefix = [0] * m
    out = []

    def rec(i, remaining):
        if i == m:
            available = list(range(m))
            out.append(tuple(available.pop(prefix[k]) for k in range(m)))
            return
        for a in range(max(0, remaining - tails[i + 1]),
                       min(bounds[i], remaining) + 1):
            prefix[i] = a
            rec(i + 1, remaining - a)

    if 0 <= n <= tails[0]:
        rec(0, n)
    return out


def admissible_set(pi) -> list:
    """All (sigma, x(sigma)) with x(sigma)_i = a_i + i - sigma_i >= 0 for all
    i; x(sigma) then sums to the inversion count of pi, so it is a vertex of
    SR(m, n).  The map sigma -> x(sigma) is injective."""
    pi = _check_permutation(pi)
    a = inversion_vector(pi)
    m = len(a)
    out = []
    sigma = [0] * m
    used = [False] * m

    def rec(i):
        if i == m:
            s = tuple(sigma)
            out.append((s, tuple(a[k] + k - s[k] for k in range(m))))
            return
        for v in range(min(a[i] + i, m - 1) + 1):
            if not used[v]:
                used[v] = True
                sigma[i] = v
                rec(i + 1)
                used[v] = False

    rec(0)
    return out


def f_pi(pi) -> dict:
    """F_pi = sum over admissible sigma of sgn(sigma) e_{x(sigma)}, as a
    sparse mapping from vertex label to +-1.  Exact eigenvector of
    SR(m, inversions(pi)) for eigenvalue -inversions(pi)."""
    return {x: sign(s) for s, x in admissible_set(pi)}


def canonical_w(m: int) -> tuple:
    """w = (1-m, 3-m, ..., m-1)/2: the equally spaced half-integral weight
    whose orbit vectors realize the full -binom(m, 2) multiplicity bound."""
    return tuple(Fraction(2 * j + 1 - m, 2) for j in range(m))


def f_pw(p, w, m: int, n: int) -> dict:
    """F_pw = sum over sigma in Sym(m) of sgn(sigma) e_{p + sigma(w)}, as a
    sparse mapping from vertex label to +-1.  Exact eigenvector of SR(m, n)
    for eigenvalue -binom(m, 2) whenever the orbit points are pairwise
    distinct vertices; otherwise InvalidOrbit."""
    p = tuple(Fraction(t) for t in p)
    w = tuple(Fraction(t) for t in w)
    if len(p) != m or len(w) != m:
        raise ValueError("p and w must both have length m")
    vec = {}
    for sig in permutations(range(m)):
        point = tuple(p[i] + w[sig[i]] for i in range(m))
        if any(t.denominator != 1 or t < 0 for t in point):
            raise InvalidOrbit(f"orbit point {point} is not a lattice point")
        label = tuple(int(t) for t in point)
        if sum(label) != n:
            raise InvalidOrbit(f"orbit point {label} does not sum to {n}")
        if label in vec:
            raise InvalidOrbit(f"orbit points collide at {label}")
        vec[label] = sign(sig)
    return vec


def f_pw_family(m: int, n: int) -> list:
    """All (p, F_pw) for the canonical w, one per base point p = q + (m-1)/2
    with q a vertex of SR(m, n - binom(m, 2)); family size is
    binom(n - binom(m-1, 2), m-1)."""
    rest = n - comb(m, 2)
    if rest < 0:
        return []
    w = canonical_w(m)
    shift = Fraction(m - 1, 2)
    out = []
    for q in sr_vertices(m, rest):
        p = tuple(shift + t for t in q)
        out.append((p, f_pw(p, w, m, n)))
    return out


def gamma_graph(m: int, pi) -> Graph:
    """Induced subgraph of SR(m, n) on X_pi, built directly from the labels.
    Construction postconditions: every edge joins permutations of opposite
    sign (bipartite by sign) and the graph is n-regular, n = inversions(pi)."""
    pi = _check_permutation(pi)
    if len(pi) != m:
        raise ValueError(f"pi has length {len(pi)}, expected {m}")
    adm = admissible_set(pi)
    n = inversion_count(pi)
    labels = [x for _, x in adm]
    sign_of = {x: sign(s) for s, x in adm}
    edges = []
    for u, v in combinations(labels, 2):
        if sum(1 for k in range(m) if u[k] != v[k]) == 2:
            edges.append((u, v))
    g = Graph.from_edges(labels, edges, family="gamma", params=(m, n, pi))
    for i, j in g.edges():
        if sign_of[g.labels[i]] == sign_of[g.labels[j]]:
            raise RuntimeError("gamma graph edge inside one sign class")
    if any(d != n for d in g.degrees()):
        raise RuntimeError("gamma graph is not n-regular")
    return g


@dataclass(frozen=True)
class GammaClass:
    """One isomorphism class of Gamma(m, n, pi) graphs.

    graph is the first representative found (scan order: m ascending, then
    inversion-vector order); occurrences counts the (m, pi) pairs landing in
    the class; probe is the lenient integer spectrum sweep of the
    representative, whose residual is 0 exactly when the spectrum is integral.
    """

    graph: Graph
    m: int
    pi: tuple
    occurrences: int
    probe: SpectrumProbe

    @property
    def is_integral(self):
        return self.probe.is_integral

    def to_json(self):
        return {
            "order": self.graph.order,
            "valency": self.graph.params[1],
            "bipartite": True,
            "first_m": self.m,
            "first_pi": list(self.pi),
            "occurrences": self.occurrences,
            "integral": self.is_integral,
            "spectrum": (str(self.probe.spectrum()) if self.is_integral
                         else {"pairs": [list(p) for p in self.probe.pairs],
                               "residual": self.probe.residual}),
        }


def classify_gamma(n: int) -> list:
    """Isomorphism classes of Gamma(m, n, pi) over all pi with n inversions
    and all m.  Scanning m <= 2n suffices: larger m reproduce graphs already
    seen there.  Classes come back in first-discovery order."""
    if n < 0:
        raise ValueError("inversion count must be nonnegative")
    if n == 0:
        g = gamma_graph(1, (0,))
        return [GammaClass(g, 1, (0,), 1, try_integral_spectrum(g))]
    found = {}
    order = []
    for m in range(2, 2 * n + 1):
        for pi in permutations_with_inversions(m, n):
            g = gamma_graph(m, pi)
            cert = canonical_form(g).certificate
            if cert in found:
                found[cert][3] += 1
            else:
                found[cert] = [g, m, pi, 1]
                order.append(cert)
    return [
        GammaClass(g, m, pi, count, try_integral_spectrum(g))
        for g, m, pi, count in (found[cert] for cert in order)
    ]


def cayley_transpositions(m: int) -> Graph:
    """Cayley graph of Sym(m) with respect to all transpositions: vertices
    are the permutations of range(m), adjacent when they differ in exactly
    two positions."""
    labels = list(permutations(range(m)))
    edges = []
    for lab in labels:
        for i, j in combinations(range(m), 2):
            swapped = list(lab)
            swapped[i], swapped[j] = swapped[j], swapped[i]
            other = tuple(swapped)
            if lab < other:
                edges.append((lab, other))
    return Graph.from_edges(labels, edges, family="cayley", params=(m,))


SMALL_N_KINDS = ("n3_m-3", "n4_2m-5", "n4_m-6")


def small_n_eigenvalue(kind: str, m: int) -> int:
    if kind == "n3_m-3":
        return m - 3
    if kind == "n4_2m-5":
        return 2 * m - 5
    if kind == "n4_m-6":
        return m - 6
    raise ValueError(f"unknown kind {kind!r}")


def small_n_eigenvector(kind: str, m: int, anchor) -> dict:
    """The hand-built sparse eigenvectors from the n = 3, 4 spectrum proofs.

    kind "n3_m-3" on SR(m, 3), anchor h: +1 on 2e_h + e_i, -1 on e_h + 2e_i.
    kind "n4_2m-5" on SR(m, 4), anchor h: -1 on 2e_h + 2e_i and 3e_h + e_i,
        +2 on e_h + 3e_i, -2 on 2e_h + e_i + e_j, +1 on e_h + 2e_i + e_j.
    kind "n4_m-6" on SR(m, 4), anchor (h, i): +1 on e_h + 3e_j, 2e_i + 2e_j
        and 2e_h + e_i + e_j; -1 on e_i + 3e_j, 2e_h + 2e_j and
        e_h + 2e_i + e_j.

    The matching eigenvalues are m-3, 2m-5 and m-6; coordinates are 0-based.
    """

    def unit(*pairs):
        x = [0] * m
        for idx, amount in pairs:
            x[idx] += amount
        return tuple(x)

    vec = {}
    if kind == "n3_m-3":
        if m < 3:
            raise ValueError("n3 construction needs m >= 3")
        h = anchor
        for i in range(m):
            if i == h:
                continue
            vec[unit((h, 2), (i, 1))] = 1
            vec[unit((h, 1), (i, 2))] = -1
    elif kind == "n4_2m-5":
        if m < 4:
            raise ValueError("n4 constructions need m >= 4")
        h = anchor
        others = [i for i in range(m) if i != h]
        for i in others:
            vec[unit((h, 2), (i, 2))] = -1
            vec[unit((h, 3), (i, 1))] = -1
            vec[unit((h, 1), (i, 3))] = 2
        for i, j in combinations(others, 2):
            vec[unit((h, 2), (i, 1), (j, 1))] = -2
            vec[unit((h, 1), (i, 2), (j, 1))] = 1
            vec[unit((h, 1), (i, 1), (j, 2))] = 1
    elif kind == "n4_m-6":
        if m < 4:
            raise ValueError("n4 constructions need m >= 4")
        h, i = anchor
        if h == i:
            raise ValueError("anchor pair must be distinct")
        for j in range(m):
            if j in (h, i):
                continue
            vec[unit((h, 1), (j, 3))] = 1
            vec[unit((i, 2), (j, 2))] = 1
            vec[unit((h, 2), (i, 1), (j, 1))] = 1
            vec[unit((i, 1), (j, 3))] = -1
            vec[unit((h, 2), (j, 2))] = -1
            vec[unit((h, 1), (i, 2), (j, 1))] = -1
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return vec
