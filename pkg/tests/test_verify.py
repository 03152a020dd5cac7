"""Verification battery plumbing: report records, workers, suite wiring."""

import pytest

from rooklab.verify import (SUITES, SpectrumCache, VerificationReport, _run,
                            run_suites, thread_count)


class TestThreadCount:
    def test_default_is_one(self, monkeypatch):
        monkeypatch.delenv("ROOKLAB_THREADS", raising=False)
        assert thread_count() == 1

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("ROOKLAB_THREADS", "6")
        assert thread_count() == 6

    def test_garbage_and_nonpositive_fall_back(self, monkeypatch):
        monkeypatch.setenv("ROOKLAB_THREADS", "zebra")
        assert thread_count() == 1
        monkeypatch.setenv("ROOKLAB_THREADS", "-3")
        assert thread_count() == 1


class TestRun:
    def test_exception_becomes_failure(self):
        def boom():
            raise RuntimeError("kaput")

        reports = _run([("x", boom)], workers=1)
        assert reports[0].status == "fail"
        assert "kaput" in reports[0].actual

    def test_order_preserved_with_workers(self):
        items = [(f"item{i}", lambda i=i: ("pass", i, i)) for i in range(20)]
        seq = _run(items, workers=1)
        par = _run(items, workers=4)
        assert [r.claim for r in par] == [r.claim for r in seq]
        assert all(r.status == "pass" for r in par)

    def test_report_serialization(self):
        r = VerificationReport("c", "pass", "1", "1", 7)
        assert r.to_json() == {"claim": "c", "status": "pass",
                               "expected": "1", "actual": "1",
                               "runtime_ms": 7}


class TestSuites:
    def test_known_suites(self):
        assert SUITES == ("spectra", "partitions", "invariants",
                          "switching", "gamma")

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            run_suites(["spectra", "nope"])

    def test_partitions_suite_green(self):
        reports = run_suites(["partitions"])
        assert reports
        assert all(r.status == "pass" for r in reports)

    def test_max_vertices_prunes_sweeps(self):
        from rooklab.verify import suite_spectra
        pruned = suite_spectra(max_vertices=50, cache=SpectrumCache())
        wide = suite_spectra(max_vertices=1000, cache=SpectrumCache())
        assert len(pruned) < len(wide)
        pruned_claims = {c for c, _ in pruned}
        # Golden-table rows always stay.
        assert all(f"table1.n={n}" in pruned_claims for n in range(16))

    def test_cache_shared_between_items(self):
        cache = SpectrumCache()
        g1 = cache.graph(3, 3)
        assert cache.graph(3, 3) is g1
        s1 = cache.spectrum(3, 3)
        assert cache.spectrum(3, 3) is s1
