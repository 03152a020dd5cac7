"""Exact integer linear algebra: rank, nullity, and integral spectra.

Everything is integer-exact.  rank/nullity run fraction-free Bareiss
elimination on Python ints, so entries stay exact determinantal minors and
no rounding ever happens.  integral_spectrum computes eigenvalue
multiplicities as nullity(A - cI) over a complete candidate range; for
graphs too large for big-int elimination it switches to the certified
modular path in modular.py, whose answers are proven exact before being
returned (and which falls back to Bareiss if a certificate fails).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import comb

import numpy as np

from . import modular
from .graphs import Graph, sr_vertices

# Plain row-major list-of-lists of Python ints.
IntMatrix = "list[list[int]]"

_EXACT_CUTOFF = 40
_LENIENT_LIMIT = 512


class IncompleteSpectrum(Exception):
    """The candidate sweep did not account for every dimension.

    For the graphs this library targets that means the spectrum is not
    integral; pairs holds what was found, residual the missing dimension
    count.
    """

    def __init__(self, pairs, residual):
        self.pairs = tuple(pairs)
        self.residual = residual
        super().__init__(
            f"integral eigenvalues cover {sum(m for _, m in pairs)} dimensions, "
            f"{residual} unaccounted for")


def merge_pairs(items):
    """Combine (eigenvalue, multiplicity) items: equal eigenvalues add,
    zero multiplicities drop, and a negative total is an error.  Returns
    pairs sorted by descending eigenvalue."""
    acc = {}
    for c, m in items:
        acc[c] = acc.get(c, 0) + m
    out = []
    for c in sorted(acc, reverse=True):
        m = acc[c]
        if m < 0:
            raise ValueError(f"negative multiplicity {m} at eigenvalue {c}")
        if m:
            out.append((int(c), int(m)))
    return tuple(out)


@dataclass(frozen=True)
class Spectrum:
    """Integer spectrum as (eigenvalue, multiplicity) pairs, descending."""

    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", merge_pairs(self.pairs))

    @property
    def total(self):
        return sum(m for _, m in self.pairs)

    def multiplicity(self, c):
        for ev, m in self.pairs:
            if ev == c:
                return m
        return 0

    @property
    def eigenvalues(self):
        return tuple(c for c, _ in self.pairs)

    @property
    def min_eigenvalue(self):
        if not self.pairs:
            raise ValueError("empty spectrum")
        return self.pairs[-1][0]

    @property
    def max_eigenvalue(self):
        if not self.pairs:
            raise ValueError("empty spectrum")
        return self.pairs[0][0]

    def is_submultiset_of(self, other):
        return all(m <= other.multiplicity(c) for c, m in self.pairs)

    def __str__(self):
        return " ".join(
            f"{c}^{m}" if c >= 0 else f"({c})^{m}" for c, m in self.pairs)

    @classmethod
    def from_string(cls, text):
        """Parse the exponent notation, e.g. "9^1 3^4 (-1)^6 (-3)^6"."""
        pairs = []
        for tok in text.split():
            m = re.fullmatch(r"\(?(-?\d+)\)?\^\{?(\d+)\}?", tok)
            if not m:
                raise ValueError(f"bad spectrum token {tok!r}")
            pairs.append((int(m.group(1)), int(m.group(2))))
        return cls(tuple(pairs))

    def to_json(self):
        return {"pairs": [[c, m] for c, m in self.pairs]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple((int(c), int(m)) for c, m in data["pairs"]))


@dataclass(frozen=True)
class SpectrumProbe:
    """Lenient sweep result: integer pairs found plus leftover dimensions."""

    pairs: tuple
    residual: int

    @property
    def is_integral(self):
        return self.residual == 0

    def spectrum(self):
        if not self.is_integral:
            raise IncompleteSpectrum(self.pairs, self.residual)
        return Spectrum(self.pairs)


def rank(rows):
    """Rank of an integer matrix (list of rows) via Bareiss elimination.

    Fraction-free: every intermediate entry is a minor of the input, every
    division is exact.  Pivots are the first nonzero entry in column order.
    """
    m = [[int(x) for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    prev = 1
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv_row = None
        for i in range(r, nr):
            if m[i][c]:
                piv_row = i
                break
        if piv_row is None:
            continue
        if piv_row != r:
            m[r], m[piv_row] = m[piv_row], m[r]
        piv = m[r][c]
        for i in range(r + 1, nr):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, nc):
                row_i[j] = (piv * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        r += 1
    return r


def nullity(rows, ncols=None):
    """Dimension of the integer kernel: columns minus rank."""
    if ncols is None:
        if not rows:
            raise ValueError("pass ncols for a matrix with zero rows")
        ncols = len(rows[0])
    return ncols - rank(rows)


def _shifted_rows(g, c):
    v = g.order
    out = []
    for i in range(v):
        bits = g.rows[i]
        row = [(bits >> j) & 1 for j in range(v)]
        row[i] -= c
        out.append(row)
    return out


def _candidate_range(g):
    """Complete integer candidate range for the graph's eigenvalues."""
    if g.order == 0:
        return range(0)
    delta = max(g.degrees())
    if g.family == "sr":
        m, n = g.params
        lo = -min(n, comb(m, 2))
    else:
        lo = -delta
    return range(lo, delta + 1)


def _exact_pairs(g, candidates):
    pairs = []
    for c in candidates:
        mult = nullity(_shifted_rows(g, c), ncols=g.order)
        if mult:
            pairs.append((c, mult))
    pairs.sort(key=lambda t: -t[0])
    return pairs


def _self_check(g, pairs):
    v = g.order
    total = sum(m for _, m in pairs)
    first = sum(c * m for c, m in pairs)
    second = sum(c * c * m for c, m in pairs)
    if total != v or first != 0 or second != 2 * g.edge_count():
        raise RuntimeError("internal spectrum self-check failed "
                           f"(totals {total}/{v}, moments {first}, {second})")


def integral_spectrum(g: Graph, method="auto") -> Spectrum:
    """Exact spectrum of a graph known to have all-integer eigenvalues.

    Raises IncompleteSpectrum when the integer candidates do not account
    for every dimension (i.e. the spectrum is not integral after all).
    method: "auto" picks per size, "exact" forces per-candidate Bareiss
    nullity, "modular" forces the certified modular path.
    """
    if method not in ("auto", "exact", "modular"):
        raise ValueError(f"unknown method {method!r}")
    v = g.order
    if v == 0:
        return Spectrum(())
    candidates = _candidate_range(g)
    if method == "exact" or (method == "auto" and v <= _EXACT_CUTOFF):
        pairs = _exact_pairs(g, candidates)
    else:
        a = g.adjacency_matrix()
        try:
            pairs = modular.certified_symmetric_spectrum(a, candidates)
        except modular.NotIntegral as exc:
            raise IncompleteSpectrum(exc.pairs, exc.residual) from None
        if pairs is None:
            pairs = _exact_pairs(g, candidates)
    residual = v - sum(m for _, m in pairs)
    if residual:
        raise IncompleteSpectrum(pairs, residual)
    _self_check(g, pairs)
    return Spectrum(tuple(pairs))


def try_integral_spectrum(g: Graph) -> SpectrumProbe:
    """Lenient sweep: report integer eigenvalues found and the residual
    dimension count instead of raising.  Pure Bareiss, so size-capped."""
    v = g.order
    if v > _LENIENT_LIMIT:
        raise ValueError(f"lenient sweep is exact-only and capped at "
                         f"{_LENIENT_LIMIT} vertices, got {v}")
    if v == 0:
        return SpectrumProbe((), 0)
    delta = max(g.degrees())
    pairs = _exact_pairs(g, range(-delta, delta + 1))
    return SpectrumProbe(tuple(pairs), v - sum(m for _, m in pairs))


def verify_eigenvector(g: Graph, vec, eigenvalue: int) -> bool:
    """Exact check that A @ vec == eigenvalue * vec.

    vec is a sparse mapping whose keys are vertex indices or vertex labels;
    zero entries may be omitted.  An all-zero vector is rejected.
    """
    entries = {}
    for key, val in vec.items():
        idx = key if isinstance(key, int) else g.index[key]
        if not 0 <= idx < g.order:
            raise IndexError(f"vertex index {idx} out of range")
        if val:
            entries[idx] = int(val)
    if not entries:
        raise ValueError("eigenvector must be nonzero")
    affected = set(entries)
    for i in entries:
        affected.update(g.neighbors(i))
    for u in affected:
        row = g.rows[u]
        lhs = sum(val for i, val in entries.items() if (row >> i) & 1)
        if lhs != eigenvalue * entries.get(u, 0):
            return False
    return True


def halved_factorization_check(m: int, n: int) -> bool:
    """Check A + nI == N N^T for SR(m, n), where N is the bipartite
    incidence between sum-n vectors and sum-<n vectors differing in exactly
    one coordinate."""
    if m < 1 or n < 0:
        raise ValueError("need m >= 1, n >= 0")
    top = sr_vertices(m, n)
    low = []
    for s in range(n):
        low.extend(sr_vertices(m, s))
    v = len(top)
    nmat = np.zeros((v, max(len(low), 1)), dtype=np.int64)
    for i, u in enumerate(top):
        for j, w in enumerate(low):
            if sum(1 for a, b in zip(u, w) if a != b) == 1:
                nmat[i, j] = 1
    from .graphs import sr_graph
    a = sr_graph(m, n).adjacency_matrix()
    return bool(np.array_equal(a + n * np.eye(v, dtype=np.int64),
                               nmat @ nmat.T))
