import pytest

from pydickson.util.enums import Suite
from pydickson.verify import (
    check_definitions,
    check_evaluators,
    check_filters,
    check_h,
    check_identities,
    check_notes,
    check_sums,
    run_suites,
)


class TestSuites:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_identities(self, q):
        outcome = check_identities(q)
        assert outcome.passed, outcome.counterexample

    @pytest.mark.parametrize("q", [32, 49])
    def test_identities_sampled(self, q):
        outcome = check_identities(q)
        assert outcome.passed, outcome.counterexample

    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    def test_evaluators(self, q):
        assert check_evaluators(q).passed

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_h(self, q):
        outcome = check_h(q)
        assert outcome.passed
        assert outcome.cases == q * q + 1

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25])
    def test_sums(self, q):
        outcome = check_sums(q)
        assert outcome.passed, outcome.counterexample
        assert outcome.cases == (q * q - 1 if q % 2 == 0 else q * q - 2)

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27])
    def test_notes(self, q):
        assert check_notes(q).passed

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
    def test_definitions(self, q):
        assert check_definitions(q).passed

    @pytest.mark.parametrize("q", [3, 4, 5, 7, 8])
    def test_filters(self, q):
        outcome = check_filters(q)
        assert outcome.passed, outcome.counterexample


class TestRunSuites:
    def test_all(self):
        outcomes = run_suites([3, 4])
        assert [o.suite for o in outcomes] == [s.value for s in Suite if s != Suite.all] * 2
        assert all(o.passed for o in outcomes)

    def test_single(self):
        outcomes = run_suites([5], Suite.sums, jobs=2)
        assert len(outcomes) == 1
        assert outcomes[0].cases == 23
