"""Named verification suites.

Each suite replays one of the package's exact identities over a grid or a
seeded random sample and reports pass/fail with replayable
counterexamples (the seed and the offending inputs are printed, never
summarized away).  Suites are deterministic functions of (trials, seed).

``bterm-experiment`` is different in kind: it compares the raw and
reduced forms of the trisecant (b) term, whose agreement is under
investigation, and passes by producing a complete match/mismatch report
rather than by asserting equality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bundles import ChernVector
from .combinat import (
    koszul_rank_identity,
    wedge_resolution_sum_shifted,
    wedge_resolution_sum_unit,
)
from .fiberring import closed_form_top_chern, recursion_top_chern
from .rationals import format_rational
from .secants import (
    goettsche_b_full,
    goettsche_b_reduced,
    goettsche_c_full,
    goettsche_c_reduced,
    trisecant_closed,
    trisecant_double_sum,
)

SUITE_NAMES = (
    "recursion-oracle",
    "trisecant-identity",
    "lemma51",
    "cterm",
    "bterm-experiment",
)

# criterion grid for the recursion oracle
ORACLE_AMBIENT_DIMS = range(3, 9)
ORACLE_CODIMS = range(1, 4)
ORACLE_SECANT_KS = range(1, 4)


@dataclass
class SuiteReport:
    name: str
    passed: bool
    lines: list[str] = field(default_factory=list)

    def add(self, line: str):
        self.lines.append(line)

    def finish(self) -> "SuiteReport":
        status = "PASS" if self.passed else "FAIL"
        self.add(f"suite {self.name}: {status}")
        return self


def _random_chern_vector(rng: random.Random, n: int, r: int, bound: int) -> ChernVector:
    c = [1] + [rng.randint(-bound, bound) for _ in range(r)]
    return ChernVector.make(n, c)


def oracle_grid() -> list[tuple[int, int, int]]:
    return [
        (n, r, k)
        for n in ORACLE_AMBIENT_DIMS
        for r in ORACLE_CODIMS
        for k in ORACLE_SECANT_KS
    ]


def run_recursion_oracle(trials: int = 200, seed: int = 0) -> SuiteReport:
    """recursion class == closed-form class, exact normal-form equality.

    Trials cycle round-robin over the full (n, r, k) grid so every cell is
    exercised; Chern data is drawn fresh per trial with |c_i| <= 5.
    """
    rng = random.Random(seed)
    grid = oracle_grid()
    report = SuiteReport("recursion-oracle", True)
    report.add("suite: recursion-oracle")
    report.add(f"trials: {trials}, seed: {seed}")
    report.add("grid: n in 3..8, r in 1..3, k in 1..3, |c_i| <= 5")
    failures = 0
    for trial in range(trials):
        n, r, k = grid[trial % len(grid)]
        cv = _random_chern_vector(rng, n, r, 5)
        if recursion_top_chern(cv, k) != closed_form_top_chern(cv, k):
            failures += 1
            report.add(
                f"[FAIL] trial {trial}: n={n} r={r} k={k} c={cv.c} "
                "(recursion != closed form)"
            )
    if failures:
        report.passed = False
        report.add(f"failures: {failures}/{trials}")
    else:
        report.add(f"exact matches: {trials}/{trials}")
    return report.finish()


def run_trisecant_identity(trials: int = 1000, seed: int = 0) -> SuiteReport:
    """trisecant double sum == trisecant closed form, exact."""
    rng = random.Random(seed)
    report = SuiteReport("trisecant-identity", True)
    report.add("suite: trisecant-identity")
    report.add(f"trials: {trials}, seed: {seed}")
    report.add("sample: r in 1..6, |c_i| <= 9")
    failures = 0
    for trial in range(trials):
        r = rng.randint(1, 6)
        cv = _random_chern_vector(rng, max(2 * r - 1, 2), r, 9)
        if trisecant_double_sum(cv) != trisecant_closed(cv):
            failures += 1
            report.add(f"[FAIL] trial {trial}: r={r} c={cv.c}")
    if failures:
        report.passed = False
        report.add(f"failures: {failures}/{trials}")
    else:
        report.add(f"exact matches: {trials}/{trials}")
    return report.finish()


def run_lemma51(trials: int = 0, seed: int = 0) -> SuiteReport:
    """Both binomial identities on their full grids (exhaustive, so the
    trials/seed arguments are accepted for interface uniformity only).

    The telescoping sum is checked in its corrected form (== (-1)^t) and
    in the off-by-one printed form, which instead equals (-1)^t (t+1);
    the discrepancy witness at (n=2, t=1) is always reported.
    """
    del trials, seed  # exhaustive grids
    report = SuiteReport("lemma51", True)
    report.add("suite: lemma51")
    report.add(
        "grid: rank identity for l+p <= 40, t <= 40; alternating sums for n, t <= 30"
    )
    first_cases = first_bad = 0
    for m in range(41):
        for l in range(m + 1):
            for t in range(41):
                lhs, rhs = koszul_rank_identity(l, m - l, t)
                first_cases += 1
                if lhs != rhs:
                    first_bad += 1
                    report.add(f"[FAIL] rank identity: l={l} p={m - l} t={t}")
    report.add(f"rank identity: {first_cases - first_bad}/{first_cases} exact")

    unit_cases = unit_bad = 0
    shifted_cases = shifted_bad = 0
    for n in range(31):
        for t in range(31):
            unit_cases += 1
            if wedge_resolution_sum_unit(n, t) != (-1) ** t:
                unit_bad += 1
                report.add(f"[FAIL] unit alternating sum: n={n} t={t}")
            shifted_cases += 1
            if wedge_resolution_sum_shifted(n, t) != (-1) ** t * (t + 1):
                shifted_bad += 1
                report.add(f"[FAIL] shifted alternating sum: n={n} t={t}")
    report.add(f"unit alternating sum == (-1)^t: {unit_cases - unit_bad}/{unit_cases}")
    report.add(
        "shifted alternating sum == (-1)^t*(t+1): "
        f"{shifted_cases - shifted_bad}/{shifted_cases}"
    )
    witness = wedge_resolution_sum_shifted(2, 1)
    report.add(
        f"note: misprint witness at (n=2, t=1): shifted form gives {witness}, "
        "not the unit value -1; the unit form requires the symmetric-power "
        "dimension binom(n+i, i)"
    )
    report.passed = first_bad == 0 and unit_bad == 0 and shifted_bad == 0
    return report.finish()


def run_cterm(trials: int = 200, seed: int = 0) -> SuiteReport:
    """(c)-term raw sum == closed form d*c_(r-1) + d^2*(r-1), exact."""
    rng = random.Random(seed)
    report = SuiteReport("cterm", True)
    report.add("suite: cterm")
    report.add(f"trials: {trials}, seed: {seed}")
    report.add("sample: r in 1..6, n in max(1, 2r-2)..30, |c_i| <= 9, d = c_r")
    failures = 0
    worked = ChernVector.make(4, [1, 4, 4])
    full, reduced = goettsche_c_full(worked), goettsche_c_reduced(worked)
    if full == reduced == 32:
        report.add("worked instance n=4 r=2 c=(1,4,4): both routes give 32")
    else:
        failures += 1
        report.add(
            f"[FAIL] worked instance: full={full} reduced={reduced}, expected 32"
        )
    for trial in range(trials):
        r = rng.randint(1, 6)
        n = rng.randint(max(1, 2 * r - 2), 30)
        cv = _random_chern_vector(rng, n, r, 9)
        if goettsche_c_full(cv) != goettsche_c_reduced(cv):
            failures += 1
            report.add(f"[FAIL] trial {trial}: n={n} r={r} c={cv.c}")
    if failures:
        report.passed = False
        report.add(f"failures: {failures}")
    else:
        report.add(f"exact matches: {trials}/{trials}")
    return report.finish()


def bterm_grid(seed: int = 0, cases: int = 50) -> list[ChernVector]:
    """The fixed comparison grid: codimension cycles 1..5, the ambient
    dimension stays just above 2r-2, Chern data comes from one seeded
    stream."""
    rng = random.Random(seed)
    grid = []
    for case in range(cases):
        r = case % 5 + 1
        n = max(1, 2 * r - 2) + case % 4 + 1
        grid.append(_random_chern_vector(rng, n, r, 5))
    return grid


def run_bterm_experiment(trials: int = 50, seed: int = 0) -> SuiteReport:
    """Compare the raw triple-sum (b) term against its reduced double sum
    on the fixed grid.

    The suite passes by reporting every case; agreement is recorded, not
    required.
    """
    report = SuiteReport("bterm-experiment", True)
    report.add("suite: bterm-experiment")
    report.add(f"cases: {trials} (fixed grid, chern data seed {seed})")
    matches = 0
    for idx, cv in enumerate(bterm_grid(seed, trials)):
        full = goettsche_b_full(cv)
        reduced = goettsche_b_reduced(cv)
        verdict = "match" if full == reduced else "mismatch"
        matches += verdict == "match"
        report.add(
            f"[case {idx:02d}] n={cv.ambient_dim} r={cv.codim} c={cv.c}: "
            f"full={format_rational(full)} reduced={format_rational(reduced)} {verdict}"
        )
    report.add(f"summary: {matches}/{trials} match, {trials - matches}/{trials} mismatch")
    report.add("report complete; the comparison is observational")
    return report.finish()


_RUNNERS = {
    "recursion-oracle": (run_recursion_oracle, 200),
    "trisecant-identity": (run_trisecant_identity, 1000),
    "lemma51": (run_lemma51, 0),
    "cterm": (run_cterm, 200),
    "bterm-experiment": (run_bterm_experiment, 50),
}


def run_suite(name: str, trials: int | None = None, seed: int = 0) -> SuiteReport:
    if name not in _RUNNERS:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}"
        )
    if trials is not None and trials < 0:
        raise ValueError(f"trials must be >= 0, got {trials}")
    runner, default_trials = _RUNNERS[name]
    return runner(default_trials if trials is None else trials, seed)
