"""Named verification suites: every identity is checked through the torsion invariant.

A check function takes ``(field, rng)`` and returns a list of
``(identity, lhs, rhs)`` triples; the identity holds when ``lhs == rhs``.
Trial ``i`` of a run with seed ``S`` draws from ``default_rng(trial_seed(S, i))``,
so a failing trial is replayed from its reported seed alone.
"""

from __future__ import annotations

import time
import traceback
from dataclasses import dataclass, field as dc_field

import numpy as np

from .binary import (shift_binary, swap_top_bottom, tau_swap, two_term, is_involution,
                     validate_ladder, validate_ses)
from .fields import Scalar
from .matrix import Matrix, det
from .randgen import (GenConfig, gen_binary, gen_ladder, gen_nenashev, gen_ses, random_invertible,
                      trial_seed)
from .shortening import (grayson_shorten, include_ik, shorten_ladder, shorten_pk, ses_shorten,
                         tau_of, truncate_ge1, truncate_le2)
from .torsion import binary_torsion as t, eval_torsion
from .totals import ladder_total, remark_objects

MAX_RANK = 2


def _cfg(field, length: int, max_rank: int = MAX_RANK) -> GenConfig:
    return GenConfig(field=field, length=length, max_rank=max_rank)


def _len(rng, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi + 1))


def _one(field) -> Scalar:
    return Scalar.one(field)


def generator_product(sigma, tau, field) -> Scalar:
    """prod_i t(<sigma_i | tau_i>) ** (-1)**i, skipping zero objects."""
    acc = _one(field)
    for i, (a, b) in enumerate(zip(sigma, tau)):
        if a.nrows:
            acc = acc * t(two_term(a, b)) ** (-1) ** i
    return acc


def tau_value(field, n: int) -> Scalar:
    return t(tau_swap(field, n))


# -- per-instance identities -------------------------------------------------------


def generator_checks(a: Matrix, b: Matrix):
    return [("generator_law", t(two_term(a, b)), det(a) / det(b))]


def diagonal_checks(p):
    return [("diagonal_vanishing", t(p), _one(p.field))]


def switching_checks(p):
    return [("switching", t(swap_top_bottom(p)), t(p).inverse())]


def shift_checks(p):
    return [("shift_by_one", t(shift_binary(p, 1)), t(p).inverse()),
            ("shift_by_two", t(shift_binary(p, 2)), t(p))]


def ladder_checks(l):
    f = l.source.field
    prod = generator_product(l.sigma, l.tau, f)
    return [("ladder_relation", t(l.target) / t(l.source), prod),
            ("ladder_total", t(ladder_total(l)), prod)]


def shortened_ladder_checks(l):
    f = l.source.field
    s = shorten_ladder(l)
    involutive = all(is_involution(m) for m in s.sigma + s.tau)
    return [("shortened_ladder_valid", validate_ladder(s), True),
            ("shortened_ladder_involutive", involutive, True),
            ("shortened_ladder_inverts", generator_product(s.sigma, s.tau, f),
             generator_product(l.sigma, l.tau, f).inverse())]


def shortening_checks(p):
    return [("shortening_inverse", t(p) * t(grayson_shorten(p)) * t(tau_of(p)), _one(p.field))]


def inverse_pair_checks(p):
    """p_k after i_k, and p_k alone, both evaluate back to t(p)."""
    return [("inverse_pair_p_after_i", eval_torsion(shorten_pk(include_ik(p)), p.field), t(p)),
            ("inverse_pair_p", eval_torsion(shorten_pk(p), p.field), t(p))]


def truncation_checks(p, label="truncation"):
    rhs = t(truncate_ge1(p)) / t(truncate_le2(p)) / t(tau_of(p))
    return [(label, t(grayson_shorten(p)), rhs)]


def ses_checks(s):
    short = ses_shorten(s)
    return [("ses_input_multiplicative", t(s.total), t(s.sub) * t(s.quot)),
            ("ses_shortened_valid", validate_ses(short), True),
            ("ses_shortened_multiplicative", t(short.total), t(short.sub) * t(short.quot))]


def nenashev_checks(d, objs=None):
    objs = objs or remark_objects(d)
    return [("nenashev_relation", t(d.P) / t(d.N) * t(d.M),
             t(objs["C_0"]) / t(objs["C_1"]) * t(objs["C_2"])),
            ("nenashev_total", t(objs["T"]), t(d.P) / t(d.N) * t(d.M))]


def remark_checks(d, objs=None):
    f = d.field
    objs = objs or remark_objects(d)
    tau = lambda n: tau_value(f, n)  # noqa: E731
    N, M, P = d.N.dims, d.M.dims, d.P.dims
    return [
        ("t_prime_decomposition", t(objs["T'"]),
         t(objs["T_b(P)"]) * t(objs["T_bf(sw(N))"]) * t(objs["T_f(M)"])),
        ("t_b_relation", t(objs["T_b(P)"]), t(d.P) * tau(P[2])),
        ("t_f_relation", t(objs["T_f(M)"]), t(d.M) * tau(M[0])),
        ("t_bf_relation", t(objs["T_bf(sw(N))"]), t(d.N).inverse() * tau(N[0]) * tau(N[2])),
        ("tau_n0_n2_vs_n1", tau(N[0]) * tau(N[2]), tau(N[1])),
        ("tau_n1_vs_p1_m1", tau(N[1]), tau(P[1]) * tau(M[1])),
    ]


def tau_k0_checks(field, n: int):
    I = Matrix.identity(field, n)
    sign = Scalar.of(field, (-1) ** n)
    return [("tau_is_sign", tau_value(field, n), sign),
            ("tau_is_id_minus_id", tau_value(field, n), t(two_term(I, -I)))]


def well_definedness_checks(p, rng, rechoices: int):
    base = t(p)
    return [("torsion_rechoice", t(p, rng), base) for _ in range(rechoices)]


# -- suites: (field, rng) -> checks ---------------------------------------------------


def _generator(field, rng):
    n = _len(rng, 1, 6)
    return generator_checks(random_invertible(rng, field, n), random_invertible(rng, field, n))


def _diagonal(field, rng):
    return diagonal_checks(gen_binary(_cfg(field, _len(rng, 1, 5)), rng, diagonal=True))


def _switching(field, rng):
    return switching_checks(gen_binary(_cfg(field, _len(rng, 1, 5)), rng))


def _shift(field, rng):
    return shift_checks(gen_binary(_cfg(field, _len(rng, 1, 5)), rng))


def _ladder(field, rng):
    l = gen_ladder(_cfg(field, _len(rng, 2, 5)), rng)
    return ladder_checks(l) + shortened_ladder_checks(l)


def _shortening(field, rng):
    return shortening_checks(gen_binary(_cfg(field, _len(rng, 3, 5)), rng))


def _truncation(field, rng):
    length = _len(rng, 2, 5)
    kind = int(rng.integers(3))
    p = gen_binary(_cfg(field, length), rng, diagonal=kind == 1, p0_zero=kind == 2)
    label = ("truncation", "truncation_diagonal", "truncation_p0_zero")[kind]
    return truncation_checks(p, label)


def _inverse_pair(field, rng):
    return inverse_pair_checks(gen_binary(_cfg(field, _len(rng, 3, 5)), rng))


def _ses(field, rng):
    return ses_checks(gen_ses(_cfg(field, _len(rng, 1, 4)), rng))


def diagram_rank(field) -> int:
    # tensor diagrams grow fast; rational entries grow faster still
    return 1 if field.kind == "Q" else 2


def _nenashev(field, rng):
    return nenashev_checks(gen_nenashev(_cfg(field, 2, diagram_rank(field)), rng))


def _remark(field, rng):
    return remark_checks(gen_nenashev(_cfg(field, 2, diagram_rank(field)), rng))


def _tau_k0(field, rng):
    return tau_k0_checks(field, _len(rng, 0, 8))


def _well_definedness(field, rng):
    p = gen_binary(_cfg(field, _len(rng, 1, 4)), rng)
    return well_definedness_checks(p, rng, 5)


SUITES = {
    "generator": _generator,
    "diagonal": _diagonal,
    "switching": _switching,
    "shift": _shift,
    "ladder": _ladder,
    "shortening": _shortening,
    "truncation": _truncation,
    "inverse_pair": _inverse_pair,
    "ses": _ses,
    "nenashev": _nenashev,
    "remark_decomposition": _remark,
    "tau_k0": _tau_k0,
    "well_definedness": _well_definedness,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


# -- running ---------------------------------------------------------------------


def _encode(v):
    if isinstance(v, Scalar):
        return v.encode()
    return v


@dataclass
class SuiteReport:
    suite: str
    field: str
    seed: int
    trials: int
    checks: int = 0
    failures: list = dc_field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: SuiteReport):
        self.trials += other.trials
        self.checks += other.checks
        self.failures.extend(other.failures)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "field": self.field,
            "seed": self.seed,
            "trials": self.trials,
            "checks": self.checks,
            "passed": self.passed,
            "failures": self.failures,
            "elapsed": round(self.elapsed, 4),
        }


def _field_name(field) -> str:
    return "q" if field.kind == "Q" else f"fp:{field.p}"


def run_trial(suite: str, field, tseed: int):
    """(checks run, failures) for one trial seed."""
    rng = np.random.default_rng(tseed)
    try:
        results = SUITES[suite](field, rng)
    except Exception as e:  # a construction blowing up is a failure, not a crash
        msg = "".join(traceback.format_exception_only(type(e), e)).strip()
        return 1, [{"seed": tseed, "identity": "error", "lhs": msg, "rhs": None}]
    fails = [{"seed": tseed, "identity": name, "lhs": _encode(a), "rhs": _encode(b)}
             for name, a, b in results if a != b]
    return len(results), fails


def run_suite(suite: str, field, trials: int, seed: int = 0, replay: int | None = None) -> SuiteReport:
    if suite != "all" and suite not in SUITES:
        raise KeyError(suite)
    start = time.perf_counter()
    report = SuiteReport(suite, _field_name(field), seed, 0)
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        seeds = [replay] if replay is not None else [trial_seed(seed, i) for i in range(trials)]
        for s in seeds:
            n, fails = run_trial(name, field, s)
            report.checks += n
            for f_ in fails:
                f_["suite"] = name
            report.failures.extend(fails)
        report.trials += len(seeds)
    report.elapsed = time.perf_counter() - start
    return report
