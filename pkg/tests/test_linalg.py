"""Exact linear algebra: spectra, rank, nullity, eigenvector checks.

sympy provides the independent exact oracle (charpoly factorization and
rank over the rationals); the code under test never imports it.
"""

import random
from math import comb

import pytest
import sympy

from rooklab.graphs import (complete_bipartite, complete_graph, cycle_graph,
                            johnson_graph, sr_graph)
from rooklab.linalg import (IncompleteSpectrum, Spectrum,
                            halved_factorization_check, integral_spectrum,
                            merge_pairs, nullity, rank, try_integral_spectrum,
                            verify_eigenvector)


def sympy_spectrum(g):
    a = sympy.Matrix(g.adjacency_matrix())
    pairs = sorted(a.eigenvals().items(), key=lambda kv: -kv[0])
    return tuple((int(ev), int(mult)) for ev, mult in pairs)


class TestSpectrum:
    def test_merge_and_sort(self):
        s = Spectrum(((1, 2), (3, 1), (1, 1), (-2, 4)))
        assert s.pairs == ((3, 1), (1, 3), (-2, 4))

    def test_zero_multiplicities_dropped(self):
        assert merge_pairs(((2, 0), (1, 3))) == ((1, 3),)

    def test_string_notation(self):
        s = Spectrum(((9, 1), (3, 4), (1, 3), (-1, 6), (-3, 6)))
        assert str(s) == "9^1 3^4 1^3 (-1)^6 (-3)^6"

    def test_from_string_roundtrip(self):
        text = "9^1 3^4 1^3 (-1)^6 (-3)^6"
        assert str(Spectrum.from_string(text)) == text

    def test_from_string_brace_notation(self):
        s = Spectrum.from_string("9^{1} 3^{4} (-3)^{6}")
        assert s.pairs == ((9, 1), (3, 4), (-3, 6))

    def test_accessors(self):
        s = Spectrum(((4, 1), (-1, 4)))
        assert s.total == 5
        assert s.eigenvalues == (4, -1)
        assert s.min_eigenvalue == -1
        assert s.max_eigenvalue == 4
        assert s.multiplicity(4) == 1
        assert s.multiplicity(7) == 0


class TestRankNullity:
    def test_against_sympy_on_random_integer_matrices(self):
        rng = random.Random(3)
        for trial in range(40):
            nr = rng.randrange(1, 8)
            nc = rng.randrange(1, 8)
            rows = [[rng.randrange(-5, 6) for _ in range(nc)]
                    for _ in range(nr)]
            assert rank(rows) == sympy.Matrix(rows).rank()

    def test_rank_deficient_by_construction(self):
        rows = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
        assert rank(rows) == 2
        assert nullity(rows) == 1

    def test_nullity_of_singular_shift(self):
        g = complete_graph(4)
        a = g.adjacency_matrix()
        shifted = [[a[i][j] - (-1 if i == j else 0) for j in range(4)]
                   for i in range(4)]
        # -1 has multiplicity 3 in K_4.
        assert nullity(shifted) == 3

    def test_empty_and_zero(self):
        assert rank([]) == 0
        assert nullity([[0, 0], [0, 0]]) == 2


class TestIntegralSpectrum:
    def test_known_closed_forms(self):
        assert integral_spectrum(complete_graph(5)).pairs == ((4, 1), (-1, 4))
        assert integral_spectrum(complete_bipartite(3, 3)).pairs == \
            ((3, 1), (0, 4), (-3, 1))
        assert integral_spectrum(cycle_graph(4)).pairs == \
            ((2, 1), (0, 2), (-2, 1))

    def test_against_sympy_on_sr_graphs(self, sr_spectrum):
        for m, n in ((3, 3), (4, 2), (4, 3), (5, 2)):
            assert sr_spectrum(m, n).pairs == sympy_spectrum(sr_graph(m, n))

    def test_against_sympy_on_johnson(self):
        g = johnson_graph(6, 3)
        assert integral_spectrum(g).pairs == sympy_spectrum(g)

    def test_methods_agree(self):
        g = sr_graph(4, 4)
        assert integral_spectrum(g, method="exact").pairs == \
            integral_spectrum(g, method="modular").pairs

    def test_non_integral_graph_raises(self):
        with pytest.raises(IncompleteSpectrum):
            integral_spectrum(cycle_graph(5))

    def test_probe_reports_residual(self):
        probe = try_integral_spectrum(cycle_graph(5))
        assert not probe.is_integral
        assert probe.residual == 4  # C_5: only the valency 2 is an integer
        probe = try_integral_spectrum(sr_graph(3, 3))
        assert probe.is_integral
        assert probe.residual == 0

    def test_total_matches_order(self, sr_spectrum):
        for m, n in ((3, 4), (4, 3), (5, 2)):
            assert sr_spectrum(m, n).total == comb(n + m - 1, n)


class TestVerifyEigenvector:
    def test_accepts_true_eigenvector(self):
        g = complete_graph(4)
        assert verify_eigenvector(g, {0: 1, 1: -1}, -1)
        assert verify_eigenvector(g, {0: 1, 1: 1, 2: 1, 3: 1}, 3)

    def test_rejects_wrong_eigenvalue(self):
        g = complete_graph(4)
        assert not verify_eigenvector(g, {0: 1, 1: -1}, 1)

    def test_rejects_non_eigenvector(self):
        g = cycle_graph(6)
        assert not verify_eigenvector(g, {0: 1, 1: 1}, 2)

    def test_label_keys(self):
        g = sr_graph(2, 2)  # K_3 with tuple labels
        vec = {(0, 2): 1, (2, 0): -1}
        assert verify_eigenvector(g, vec, -1)

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            verify_eigenvector(complete_graph(3), {}, 0)


class TestHalvedFactorization:
    def test_grid(self):
        for m in range(1, 6):
            for n in range(1, 6):
                assert halved_factorization_check(m, n)

    def test_hand_expansion_sr22(self):
        # SR(2,2) = K_3, valency 2: A + 2I must equal N N^T where N maps
        # vertices to the n-multisets refining them.
        g = sr_graph(2, 2)
        a = g.adjacency_matrix()
        target = [[a[i][j] + (2 if i == j else 0) for j in range(3)]
                  for i in range(3)]
        assert all(target[i][i] == 2 for i in range(3))
        assert halved_factorization_check(2, 2)
