"""
Verification suites: every closed form checked against its oracle over a
set of field orders.
"""

import logging
import random
from typing import Callable, Dict, List, Sequence, Tuple

from .lucas import binom_exact_mod_p, binom_mod_p, reflection_lhs, reflection_rhs
from .models import SuiteOutcome
from .polyring import first_sums_from_h, h_closed, h_rational
from .power_sums import (
    T_cases_even,
    T_closed_even,
    T_closed_odd,
    T_direct_even,
    cube_sum_closed,
    odd_parts,
    odd_parts_direct,
    oracle_sums,
    sum_d_closed,
    term_I,
    term_I_cases,
    term_II,
    term_II_cases,
    term_III,
    term_III_cases,
)
from .rdp import build_tower, d_sequence_slow, reduce_index
from .search import (
    frobenius_violations,
    is_permutation,
    is_permutation_by_power_sums,
    search_desirable,
)
from .sweep import Sweep
from .util import constants as C
from .util.enums import FilterVerdict, Suite
from .util.helper import factor_prime_power

logger = logging.getLogger(name="DicksonVerify")


def check_identities(q: int, jobs: int = C.DEFAULT_JOBS) -> SuiteOutcome:
    """
    Lucas' theorem against factorials, the binomial reflection identity,
    the cube identity and the endpoint n = q^2-1.
    """
    del jobs
    out = SuiteOutcome(suite=Suite.identities.value, q=q)
    p, _ = factor_prime_power(q)

    for m in range(C.LUCAS_CHECK_MIN_M + 1):
        for k in range(m + 1):
            lhs, rhs = binom_mod_p(m, k, p), binom_exact_mod_p(m, k, p)
            out.record(lhs == rhs, f"lucas m={m} k={k}", None, lhs, rhs)

    for alpha in range(q):
        for v in range(q):
            lhs, rhs = reflection_lhs(q, alpha, v), reflection_rhs(q, alpha, v)
            out.record(lhs == rhs, f"reflection alpha={alpha} v={v}", None, lhs, rhs)

    tower = build_tower(q)
    ctx, table = tower.ctx_q, tower.table
    N = q * q - 1
    if q <= C.EXHAUSTIVE_CUBE_MAX_Q:
        grid: Sequence[Tuple[int, int]] = [
            (n, a) for n in range(1, N + 1) for a in range(q)
        ]
    else:
        rng = random.Random(C.FIELD_SPOT_CHECK_SEED)
        grid = [
            (rng.randint(1, N), rng.randrange(q)) for _ in range(C.CUBE_SAMPLE_SIZE)
        ]
    three = ctx.from_int(3)
    for n, a in grid:
        d = table.value(n, a)
        residual = ctx.sub(
            ctx.sub(ctx.pow(d, 3), table.value(reduce_index(3 * n, q), a)),
            ctx.mul(ctx.mul(three, ctx.pow(a, n)), d),
        )
        out.record(residual == 0, f"cube identity a={a}", n, residual, 0)

    for a in range(q):
        lhs, rhs = table.value(N, a), ctx.add(ctx.pow(a, q - 1), 1)
        out.record(lhs == rhs, f"d_(q^2-1) a={a}", N, lhs, rhs)
    if p != 2:
        first = oracle_sums(q, N).first
        out.record(first == p - 1, "sum d_(q^2-1) = -1", N, first, p - 1)
    return out


def check_evaluators(q: int, jobs: int = C.DEFAULT_JOBS) -> SuiteOutcome:
    """Pair table evaluation against the recurrence, periodicity and Frobenius."""
    del jobs
    out = SuiteOutcome(suite=Suite.evaluators.value, q=q)
    tower = build_tower(q)
    ctx, ctx2, table = tower.ctx_q, tower.ctx_q2, tower.table
    N = q * q - 1

    for a, x in table.roots.items():
        got = ctx2.mul(x, ctx2.sub(1, x))
        out.record(got == a, f"x(1-x) for a={a}", None, got, a)

    for a in range(q):
        slow = d_sequence_slow(ctx, a, C.EVALUATOR_MAX_N)
        for n in range(C.EVALUATOR_MAX_N + 1):
            fast = table.value(n, a)
            out.record(fast == slow[n], f"recurrence a={a}", n, fast, slow[n])
        for n in range(1, N + 1):
            d = table.value(n, a)
            shifted = table.value(n + N, a)
            out.record(d == shifted, f"periodicity a={a}", n, d, shifted)
            frob = table.value(reduce_index(n * q, q), a)
            out.record(d == frob, f"frobenius a={a}", n, d, frob)
    return out


def check_h(q: int, jobs: int = C.DEFAULT_JOBS) -> SuiteOutcome:
    """h(t) from its closed form against the exact quotient, and its first sums."""
    del jobs
    out = SuiteOutcome(suite=Suite.h.value, q=q)
    p, e = factor_prime_power(q)
    rational = h_rational(p, e)
    closed = h_closed(p, e)
    out.record(
        closed == rational,
        "h closed = h rational",
        None,
        list(closed.coeffs),
        list(rational.coeffs),
    )
    out.record(
        closed.degree == (q - 1) ** 2, "deg h", None, closed.degree, (q - 1) ** 2
    )
    for n, value in first_sums_from_h(rational, q).items():
        expected = sum_d_closed(q, n)
        out.record(value == expected, "first sum from h", n, value, expected)
    return out


def _sums_chunk(ns: Sequence[int], q: int) -> List[Tuple[int, List[Tuple]]]:
    p, _ = factor_prime_power(q)
    ctx = build_tower(q).ctx_q
    rows = []
    for n in ns:
        oracle = oracle_sums(q, n)
        weighted = T_closed_even(q, n) if p == 2 else T_closed_odd(q, n)
        checks = [
            ("cube sum", ctx.from_int(cube_sum_closed(q, n)), oracle.cube),
            ("weighted sum", ctx.from_int(weighted), oracle.weighted),
            ("first sum", ctx.from_int(sum_d_closed(q, n)), oracle.first),
        ]
        rows.append((n, [c for c in checks if c[1] != c[2]]))
    return rows


def check_sums(q: int, jobs: int = C.DEFAULT_JOBS) -> SuiteOutcome:
    """
    Cube, weighted and first power sums: closed form against the oracle.

    One case per n in [1, q^2-2], plus n = q^2-1 for even q.
    """
    out = SuiteOutcome(suite=Suite.sums.value, q=q)
    last = q * q - 1 if q % 2 == 0 else q * q - 2
    build_tower(q)
    rows = Sweep(concurrency=jobs).map(_sums_chunk, list(range(1, last + 1)), args=(q,))
    for n, failed in rows:
        if failed:
            check, lhs, rhs = failed[0]
            out.record(False, check, n, lhs, rhs)
        else:
            out.record(True, "sums", n, None, None)
    return out


def check_notes(q: int, jobs: int = C.DEFAULT_JOBS) -> SuiteOutcome:
    """Specialized case formulas against the general sums, u+v in (0, 2(q-1))."""
    del jobs
    out = SuiteOutcome(suite=Suite.notes.value, q=q)
    Q = q - 1
    for v in range(q):
        for u in range(q):
            if not 0 < u + v < 2 * Q:
                continue
            n = u + v * q
            if q % 2 == 0:
                lhs, rhs = T_cases_even(q, n), T_closed_even(q, n)
                out.record(lhs == rhs, "T cases", n, lhs, rhs)
                continue
            lhs, rhs = term_I_cases(q, u, v), term_I(q, u, v)
            out.record(lhs == rhs, "I cases", n, lhs, rhs)
            lhs, rhs = term_II_cases(q, u, v), term_II(q, u, v)
            out.record(lhs == rhs, "II cases", n, lhs, rhs)
            if q >= C.NOTES_III_MIN_Q:
                lhs, rhs = term_III_cases(q, u, v), term_III(q, u, v)
                out.record(lhs == rhs, "III cases", n, lhs, rhs)
    return out


def check_definitions(q: int, jobs: int = C.DEFAULT_JOBS) -> SuiteOutcome:
    """General sums against the constrained sums over (alpha, beta, k, j)."""
    del jobs
    out = SuiteOutcome(suite=Suite.definitions.value, q=q)
    if q % 2 == 0:
        for n, direct in T_direct_even(q).items():
            closed = T_closed_even(q, n)
            out.record(direct == closed, "T direct", n, direct, closed)
        return out
    direct_parts = odd_parts_direct(q)
    for n in range(1, q * q - 1):
        direct, closed = direct_parts[n], odd_parts(q, n)
        out.record(
            direct == closed,
            "I/II/III direct",
            n,
            direct.model_dump(),
            closed.model_dump(),
        )
    return out


def check_filters(q: int, jobs: int = C.DEFAULT_JOBS) -> SuiteOutcome:
    """
    Soundness of the filter on a brute-forced search, filter/cube-sum
    agreement, the power-sum bijectivity criterion and Frobenius closure.
    """
    out = SuiteOutcome(suite=Suite.filters.value, q=q)
    report = search_desirable(q, use_filter=True, verify=True, jobs=jobs)
    Q = q - 1
    failed = (FilterVerdict.fail_uv.value, FilterVerdict.fail_identity.value)
    for r in report.records:
        out.record(
            not (r.is_permutation and r.filter_verdict in failed),
            "soundness",
            r.n,
            r.filter_verdict,
            r.is_permutation,
        )
        if r.filter_verdict != FilterVerdict.not_applicable.value and (r.u + r.v) % Q:
            agrees = (r.filter_verdict == FilterVerdict.passed.value) == (r.cube_sum == 0)
            out.record(agrees, "filter/cube agreement", r.n, r.filter_verdict, r.cube_sum)
        by_sums = is_permutation_by_power_sums(q, r.n)
        out.record(
            by_sums == r.is_permutation, "power-sum criterion", r.n, by_sums, r.is_permutation
        )
    for n in frobenius_violations(report):
        image = reduce_index(n * q, q)
        out.record(False, "frobenius closure", n, True, is_permutation(q, image))
    return out


SUITES: Dict[Suite, Callable[[int, int], SuiteOutcome]] = {
    Suite.identities: check_identities,
    Suite.evaluators: check_evaluators,
    Suite.h: check_h,
    Suite.sums: check_sums,
    Suite.notes: check_notes,
    Suite.definitions: check_definitions,
    Suite.filters: check_filters,
}


def run_suites(
    qset: Sequence[int], suite: Suite = Suite.all, jobs: int = C.DEFAULT_JOBS
) -> List[SuiteOutcome]:
    suite = Suite(suite)
    names = list(SUITES) if suite == Suite.all else [suite]
    outcomes = []
    for q in qset:
        for name in names:
            outcome = SUITES[name](q, jobs)
            if outcome.passed:
                logger.info(f"Suite {name.value} q={q}: {outcome.cases} cases passed")
            else:
                logger.error(
                    f"Suite {name.value} q={q}: {outcome.failures} of {outcome.cases} failed, "
                    f"first {outcome.counterexample}"
                )
            outcomes.append(outcome)
    return outcomes
