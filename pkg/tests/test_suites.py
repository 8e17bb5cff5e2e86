import pytest

from binary_k1 import suites
from binary_k1.fields import GF, QQ
from binary_k1.randgen import trial_seed

F101 = GF(101)


@pytest.mark.parametrize("name", list(suites.SUITES))
def test_every_suite_passes_briefly(name, field):
    rep = suites.run_suite(name, field, trials=4, seed=11)
    assert rep.passed, rep.failures
    assert rep.checks >= 4


def test_all_runs_every_suite():
    rep = suites.run_suite("all", F101, trials=2)
    assert rep.trials == 2 * len(suites.SUITES) and rep.passed


def test_unknown_suite():
    with pytest.raises(KeyError):
        suites.run_suite("nope", QQ, 1)


def test_report_is_deterministic():
    a = suites.run_suite("ladder", F101, trials=5, seed=3).to_json()
    b = suites.run_suite("ladder", F101, trials=5, seed=3).to_json()
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b


def test_failures_carry_replayable_seeds(monkeypatch):
    def flaky(field, rng):
        v = int(rng.integers(10))
        return [("odd_draw", v % 2, 0)]

    monkeypatch.setitem(suites.SUITES, "flaky", flaky)
    rep = suites.run_suite("flaky", F101, trials=20, seed=1)
    assert rep.failures
    for f in rep.failures:
        assert f["seed"] in {trial_seed(1, i) for i in range(20)}
        again = suites.run_suite("flaky", F101, trials=1, replay=f["seed"])
        assert again.failures and again.failures[0]["lhs"] == f["lhs"]


def test_exceptions_become_failures(monkeypatch):
    def boom(field, rng):
        raise ValueError("bad construction")

    monkeypatch.setitem(suites.SUITES, "boom", boom)
    rep = suites.run_suite("boom", QQ, trials=1)
    assert not rep.passed and rep.failures[0]["identity"] == "error"


def test_identity_checks_detect_a_wrong_shortening(monkeypatch):
    # swapping in sw(P) for short(P) must break the shortening identity
    from binary_k1 import binary
    monkeypatch.setattr(suites, "grayson_shorten", lambda p: binary.swap_top_bottom(p))
    rep = suites.run_suite("shortening", QQ, trials=20)
    assert not rep.passed
