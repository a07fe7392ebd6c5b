"""Decision procedures for projective-normality criteria.

Every check returns a ``Verdict`` listing the hypotheses of the cited
criterion with both evaluated sides.  These criteria are sufficient, not
necessary, so an unmet hypothesis never asserts non-normality: the
outcome "fails" means the numeric bounds of the criterion are violated,
while "inapplicable" means a gating hypothesis (e.g. nonemptiness of the
secant locus) is not established and the criterion is silent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bundles import BundleSpec, ChernVector, top_chern_twisted
from .errors import HypothesisError
from .rationals import format_rational

HOLDS = "holds"
FAILS = "fails"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Hypothesis:
    name: str
    condition: str
    left: int | Fraction | bool
    right: int | Fraction | bool
    satisfied: bool

    def render_sides(self) -> tuple[str, str]:
        def side(v) -> str:
            if isinstance(v, bool):
                return "yes" if v else "no"
            return format_rational(v)

        return side(self.left), side(self.right)


@dataclass(frozen=True)
class Verdict:
    outcome: str
    hypotheses: tuple[Hypothesis, ...]
    citation: str
    notes: tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return self.outcome == HOLDS


def _ineq(name: str, condition: str, left, right) -> Hypothesis:
    return Hypothesis(name, condition, left, right, left <= right)


def _nonzero(name: str, condition: str, value) -> Hypothesis:
    # rendered as |value| >= 1 is wrong for rationals; keep value vs 0
    return Hypothesis(name, condition, value, 0, value != 0)


def check_jnormal_general(
    m: int, r: int, j: int, secants_nonempty: bool
) -> Verdict:
    """j-normality via the secant construction for X^m in P^(m+r).

    Hypotheses: the (j+1)-secant locus through a generic external point is
    nonempty, 2(r+1)j <= m-r, and (j+1)((r+1)j-1) <= m-1.  If the secant
    hypothesis is not established the criterion is silent (inapplicable);
    if it is but a bound fails, the verdict is "fails".
    """
    if m < 1 or r < 1 or j < 1:
        raise HypothesisError(
            f"parameters must be positive: m={m}, r={r}, j={j}"
        )
    gate = Hypothesis(
        "secants_nonempty",
        "(j+1)-secant locus through a generic external point is nonempty",
        secants_nonempty,
        True,
        secants_nonempty,
    )
    first = _ineq("codim_bound", "2(r+1)j <= m-r", 2 * (r + 1) * j, m - r)
    second = _ineq(
        "intersection_bound", "(j+1)((r+1)j-1) <= m-1", (j + 1) * ((r + 1) * j - 1), m - 1
    )
    hyps = (gate, first, second)
    if not secants_nonempty:
        outcome = INAPPLICABLE
    elif first.satisfied and second.satisfied:
        outcome = HOLDS
    else:
        outcome = FAILS
    return Verdict(outcome, hyps, "jnormal-secant-criterion")


def check_jnormal_bundle(e: BundleSpec, j: int) -> Verdict:
    """j-normality for the zero locus of a section of a rank-r bundle.

    The secant hypothesis is replaced by nonvanishing of the twisted top
    Chern classes c_r(E(-i)) for i = 1..j, combined with the two numeric
    bounds at m = n - r.  The untwisted value c_r(E) also enters the
    product formula for the secant degree; it is reported as a note since
    the criterion's displayed range starts at i = 1.
    """
    if j < 1:
        raise HypothesisError(f"j must be >= 1, got {j}")
    n, r = e.ambient_dim, e.rank
    m = n - r
    if m < 1:
        raise HypothesisError(
            f"ambient dimension {n} leaves no positive-dimensional X for rank {r}"
        )
    hyps = []
    for i in range(1, j + 1):
        value = top_chern_twisted(e, -i)
        hyps.append(
            _nonzero(
                f"top_chern_nonzero_twist_{i}", f"c_r(E(-{i})) != 0", value
            )
        )
    hyps.append(_ineq("codim_bound", "2(r+1)j <= m-r", 2 * (r + 1) * j, m - r))
    hyps.append(
        _ineq(
            "intersection_bound",
            "(j+1)((r+1)j-1) <= m-1",
            (j + 1) * ((r + 1) * j - 1),
            m - 1,
        )
    )
    untwisted = top_chern_twisted(e, 0)
    note = (
        f"c_r(E) = {format_rational(untwisted)} "
        + (
            "(nonzero; the untwisted factor of the secant product)"
            if untwisted != 0
            else "(zero; the untwisted factor of the secant product vanishes)"
        )
    )
    outcome = HOLDS if all(h.satisfied for h in hyps) else FAILS
    return Verdict(outcome, tuple(hyps), "jnormal-bundle-criterion", (note,))


def check_2normal(m: int, r: int, cv: ChernVector) -> Verdict:
    """Quadratic normality: c_r(N(-2)) != 0 and 6r <= m-4."""
    if m < 1 or r < 1:
        raise HypothesisError(f"parameters must be positive: m={m}, r={r}")
    value = top_chern_twisted(cv, -2)
    hyps = (
        _nonzero("twisted_top_chern_nonzero", "c_r(N(-2)) != 0", value),
        _ineq("codim_bound", "6r <= m-4", 6 * r, m - 4),
    )
    outcome = HOLDS if all(h.satisfied for h in hyps) else FAILS
    return Verdict(outcome, hyps, "quadratic-normality-criterion")


def check_linear_normality_zak(n: int, r: int) -> Verdict:
    """Zak's linear-normality bound: holds when n >= 4r.

    Below the bound the criterion says nothing, so the verdict is
    "inapplicable" rather than "fails".
    """
    if not n > r >= 1:
        raise HypothesisError(f"need n > r >= 1, got n={n}, r={r}")
    hyp = _ineq("barth_range", "4r <= n", 4 * r, n)
    return Verdict(
        HOLDS if hyp.satisfied else INAPPLICABLE,
        (hyp,),
        "zak-linear-normality",
    )


def ran_min_ambient_dim(j: int) -> int:
    """Smallest n for which the codimension-2 j-normality bound holds:
    n = 3j^2 + 2j + 2."""
    if j < 1:
        raise HypothesisError(f"j must be >= 1, got {j}")
    return 3 * j * j + 2 * j + 2


def jnormal_min_ambient_dim(r: int, j: int) -> int:
    """Smallest n = m + r satisfying both j-normality bounds:
    n = r + max(2(r+1)j + r, (j+1)((r+1)j-1) + 1)."""
    if r < 1 or j < 1:
        raise HypothesisError(f"parameters must be positive: r={r}, j={j}")
    return r + max(2 * (r + 1) * j + r, (j + 1) * ((r + 1) * j - 1) + 1)


def lines_in_hypersurface_through_point(n: int, j: int) -> tuple[int, int]:
    """(dimension, degree) of the family of lines through a fixed point of
    a generic degree-j hypersurface in P^n: a complete intersection of
    dimension n-1-j and degree j!."""
    if not 1 <= j <= n - 1:
        raise IndexError(f"need 1 <= j <= n-1, got j={j}, n={n}")
    return n - 1 - j, math.factorial(j)


def gaffney_lazarsfeld_condition(n: int, r: int, k: int) -> bool:
    """Whether r*k >= n, the branched-covering condition forcing a
    k-secant on which all k points come together."""
    if n < 1 or r < 1 or k < 1:
        raise HypothesisError(f"parameters must be positive: n={n}, r={r}, k={k}")
    return r * k >= n
