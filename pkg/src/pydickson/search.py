"""
Permutation testing for d_n over F_q and the search for desirable pairs.
"""

import logging
import math
from typing import Any, Dict, List, Sequence

from .power_sums import (
    T_closed_even,
    cube_sum_closed,
    odd_parts,
    sum_d_closed,
    triple_index,
)
from .models import DesirablePair, SearchRecord, SearchReport, SearchSummary
from .rdp import build_tower, reduce_index
from .sweep import Sweep
from .util import constants as C
from .util.enums import FilterVerdict
from .util.exceptions import RangeError
from .util.helper import factor_prime_power

logger = logging.getLogger(name="DicksonSearch")


def _check_n(n: int, q: int) -> None:
    if not 1 <= n <= q * q - 1:
        raise RangeError(f"n={n} outside [1, {q * q - 1}] for q={q}")


def is_permutation(q: int, n: int) -> bool:
    """True iff the q values d_n(a) are pairwise distinct."""
    _check_n(n, q)
    return len(set(build_tower(q).table.values(n))) == q


def is_permutation_by_power_sums(q: int, n: int) -> bool:
    """
    Bijectivity criterion: the sums of d_n(a)^i vanish for 1 <= i <= q-2
    and not for i = q-1.
    """
    _check_n(n, q)
    tower = build_tower(q)
    ctx = tower.ctx_q
    values = tower.table.values(n)
    powers = list(values)
    for i in range(1, q):
        total = 0
        for x in powers:
            total = ctx.add(total, x)
        if i < q - 1 and total != 0:
            return False
        if i == q - 1:
            return total != 0
        powers = [ctx.mul(x, y) for x, y in zip(powers, values)]
    return False


def filter_pass(q: int, n: int) -> FilterVerdict:
    """
    Necessary condition for d_n to permute F_q.

    Even q needs q > 4 and odd q needs q > 3; otherwise the verdict is
    `not_applicable`. A `fail_*` verdict proves (q, n) is not desirable.

    Raises
    ------
    RangeError
        If n is outside [1, q^2-1], or for odd q at n = q^2-1.
    """
    _check_n(n, q)
    p, _ = factor_prime_power(q)
    u, v = n % q, n // q
    Q, w = q - 1, u + v
    rhs = sum_d_closed(q, triple_index(n, q).index(q))

    if p == 2:
        if q <= 4:
            return FilterVerdict.not_applicable
        if w % Q == 0:
            return FilterVerdict.fail_uv
        lhs = T_closed_even(q, n)
    else:
        if n == q * q - 1:
            raise RangeError(f"n=q^2-1={n} is outside the closed-form range for odd q")
        if q == 3:
            return FilterVerdict.not_applicable
        if w == Q:
            return FilterVerdict.fail_uv
        parts = odd_parts(q, n)
        lhs = 3 * (parts.I + parts.II - parts.III) % p

    return FilterVerdict.passed if lhs == rhs else FilterVerdict.fail_identity


def _search_chunk(
    ns: Sequence[int], q: int, use_filter: bool, verify: bool
) -> List[Dict[str, Any]]:
    rows = []
    for n in ns:
        verdict = filter_pass(q, n)
        pruned = use_filter and not verify and verdict in (
            FilterVerdict.fail_uv,
            FilterVerdict.fail_identity,
        )
        tp = triple_index(n, q)
        rows.append(
            {
                "q": q,
                "n": n,
                "u": n % q,
                "v": n // q,
                "u_prime": tp.u_p,
                "v_prime": tp.v_p,
                "cube_sum": cube_sum_closed(q, n),
                "filter_verdict": verdict,
                "is_permutation": False if pruned else is_permutation(q, n),
                "brute_forced": not pruned,
            }
        )
    return rows


def summarize(q: int, records: List[SearchRecord]) -> SearchSummary:
    failed = (FilterVerdict.fail_uv.value, FilterVerdict.fail_identity.value)
    desirable = [r.n for r in records if r.is_permutation]
    return SearchSummary(
        total=len(records),
        filter_pass=sum(r.filter_verdict == FilterVerdict.passed.value for r in records),
        desirable=len(desirable),
        pruned=sum(not r.brute_forced for r in records),
        lost=sum(r.is_permutation and r.filter_verdict in failed for r in records),
        desirable_pairs=[
            DesirablePair(n=n, gcd=math.gcd(n, q * q - 1)) for n in desirable
        ],
    )


def search_desirable(
    q: int,
    use_filter: bool = True,
    verify: bool = False,
    jobs: int = C.DEFAULT_JOBS,
) -> SearchReport:
    """
    Classify every n in [1, q^2-2] for the field of order `q`.

    Parameters
    ----------
    q : int
        Field order.
    use_filter : bool, default True
        Skip the brute-force permutation test for n rejected by
        `filter_pass`.
    verify : bool, default False
        Brute-force every n regardless of the filter verdict; `lost` in the
        summary then counts desirable n that a filter rejected.
    jobs : int, default 1
        Worker processes; the report does not depend on it.
    """
    from . import __version__

    build_tower(q)
    logger.info(f"Searching q={q} (filters={use_filter}, verify={verify})")
    rows = Sweep(concurrency=jobs).map(
        _search_chunk, list(range(1, q * q - 1)), args=(q, use_filter, verify)
    )
    records = [SearchRecord(**row) for row in rows]
    summary = summarize(q, records)
    if summary.lost:
        logger.error(f"q={q}: {summary.lost} desirable n rejected by the filter")
    logger.info(
        f"q={q}: {summary.desirable} desirable of {summary.total}, {summary.pruned} pruned"
    )
    meta = {
        "version": __version__,
        "command": "search",
        "q": q,
        "filters": use_filter,
        "verify": verify,
    }
    return SearchReport(meta=meta, records=records, summary=summary)


def frobenius_violations(report: SearchReport) -> List[int]:
    """Desirable n whose image n*q mod q^2-1 is not desirable."""
    q = report.meta["q"]
    desirable = set(report.desirable)
    return [n for n in sorted(desirable) if reduce_index(n * q, q) not in desirable]
