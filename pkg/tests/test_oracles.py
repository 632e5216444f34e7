"""Closed-form oracles and the differential verifier."""

import pytest

from topoidx.errors import ParamsOutOfStatedRange
from topoidx.exact import ExpPoly
from topoidx.oracles import (
    baseline_from_results,
    compare_to_baseline,
    load_baseline,
    oracle_entries,
    oracle_eval,
    oracle_ids,
    run_verification,
)


class TestOracleEval:
    def test_wheel_value(self):
        assert oracle_eval("RL1/wheel", n=4) == 256

    def test_regular_zero(self):
        assert oracle_eval("RL4/regular", n=8, r=3) == 0

    def test_wheel_polynomial(self):
        assert oracle_eval("RL2exp/wheel", n=4) == ExpPoly({13: 4, 9: 4})

    def test_coinciding_exponents_merge(self):
        # At n=3 both displayed terms are x^27; coefficients must add.
        assert oracle_eval("RL1exp/wheel", n=3) == ExpPoly({27: 6})

    def test_out_of_stated_range(self):
        with pytest.raises(ParamsOutOfStatedRange):
            oracle_eval("RL1/path", n=2)
        with pytest.raises(ParamsOutOfStatedRange):
            oracle_eval("DRL1/kmn", m=1, n=3)
        with pytest.raises(ParamsOutOfStatedRange):
            oracle_eval("nope/nowhere")

    def test_every_entry_evaluates_at_default_point(self):
        defaults = {"n": 4, "r": 2, "m": 3, "p": 2, "q": 2}
        for oracle_id, entry in oracle_entries().items():
            params = {
                name: defaults[name]
                for name in entry.formula.__code__.co_varnames[: entry.formula.__code__.co_argcount]
            }
            if entry.family == "windmill":
                params = {"n": 4, "m": 3}
            if entry.family == "kmn":
                params = {"m": 2, "n": 4}
            value = entry.eval(**params)
            assert value is not None, oracle_id


class TestVerification:
    def test_cycle_rl1_confirmed(self):
        results = run_verification(ids=["RL1/cycle"], lo=3, hi=10)
        assert len(results) == 8
        assert all(r.verdict == "CONFIRMED" for r in results)

    def test_nrl1_cycle_discrepancy_values(self):
        results = {dict(r.params)["n"]: r
                   for r in run_verification(ids=["NRL1/cycle"], lo=3, hi=10)}
        assert results[4].verdict == "DISCREPANT"
        assert results[4].oracle_value == "432/1"
        assert results[4].direct_value == "192/1"
        # Coincidental equality at n=3 only.
        assert results[3].verdict == "CONFIRMED"
        assert all(r.verdict == "DISCREPANT" for n, r in results.items() if n != 3)

    def test_rlkv1_cycle_discrepancy(self):
        (r,) = run_verification(ids=["RLKV1/cycle"], lo=3, hi=3)
        assert r.verdict == "DISCREPANT"
        assert (r.oracle_value, r.direct_value) == ("288/1", "144/1")

    def test_exponential_compared_term_by_term(self):
        results = run_verification(ids=["RL1exp/sunflower"], lo=3, hi=8)
        assert all(r.verdict == "CONFIRMED" for r in results)

    def test_results_sorted_and_deterministic(self):
        first = run_verification(families=["wheel"], lo=3, hi=6)
        second = run_verification(families=["wheel"], lo=3, hi=6)
        assert first == second
        assert first == sorted(first, key=lambda r: (r.oracle_id, r.params))


class TestBaseline:
    def test_shipped_baseline_matches_current_behavior(self):
        # Verdict stability: the default grid must reproduce the shipped
        # baseline exactly (no flapping verdicts, no unknown points).
        results = run_verification(lo=3, hi=10)
        deviations, unknown = compare_to_baseline(results, load_baseline())
        assert deviations == []
        assert unknown == []

    def test_baseline_regenerates_identically(self):
        results = run_verification(lo=3, hi=10)
        assert baseline_from_results(results) == load_baseline()

    def test_known_confirmations_and_discrepancies(self):
        baseline = load_baseline()
        assert baseline["RL1/wheel"]["default"] == "CONFIRMED"
        assert baseline["RL1exp/wheel"]["default"] == "CONFIRMED"
        assert baseline["RLKV1/wheel"]["default"] == "CONFIRMED"
        assert baseline["NRL1/cycle"]["default"] == "DISCREPANT"
        assert baseline["NRL1/cycle"]["exceptions"] == {"n=3": "CONFIRMED"}
        assert baseline["DRL1/star"]["default"] == "DISCREPANT"
        assert baseline["DRL1/windmill"]["default"] == "DISCREPANT"

    def test_every_oracle_covered(self):
        assert set(load_baseline()) == set(oracle_ids())
