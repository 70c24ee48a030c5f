"""
Point evaluation of the reversed Dickson polynomial d_n(a) = D_n(1, a).

Every a in F_q is x(1-x) for some x in F_{q^2}, so d_n(a) = x^n + (1-x)^n
is computed in the quadratic extension with O(log n) multiplications.
"""

import logging
from functools import lru_cache
from typing import Dict, List

from .field import FieldCtx, make_field_ctx, make_quadratic_extension
from .models import FieldElement
from .util import constants as C
from .util.exceptions import (
    ContextMismatch,
    FieldConstructionError,
    NegativeInput,
    RangeError,
    ResultNotInBaseField,
)
from .util.helper import factor_prime_power

logger = logging.getLogger(name="DicksonField")


class PairTable:
    """
    One root x in F_{q^2} of X^2 - X + a for every a in F_q.

    The value x^n + (1-x)^n does not depend on which of the two roots is
    stored, since the other one is 1-x.
    """

    def __init__(self, ctx_q: FieldCtx, ctx_q2: FieldCtx, roots: Dict[int, int]) -> None:
        if len(roots) != ctx_q.order:
            raise FieldConstructionError(
                f"Pair table covers {len(roots)} of {ctx_q.order} elements"
            )
        self.ctx_q = ctx_q
        self.ctx_q2 = ctx_q2
        self.roots = roots
        self.co_roots = {a: ctx_q2.sub(1, x) for a, x in roots.items()}
        self._two = ctx_q.from_int(2)

    def __len__(self) -> int:
        return len(self.roots)

    def value(self, n: int, a: int) -> int:
        """Code of d_n(a) for the F_q code `a`."""
        if n == 0:
            return self._two
        f = self.ctx_q2
        r = f.add(f.pow(self.roots[a], n), f.pow(self.co_roots[a], n))
        if not f.in_base(r):
            raise ResultNotInBaseField(
                f"x^{n} + (1-x)^{n} = {r} is outside {self.ctx_q.name} for a={a}"
            )
        return r

    def values(self, n: int) -> List[int]:
        return [self.value(n, a) for a in range(self.ctx_q.order)]


class Tower:
    """F_q, its quadratic extension and the pair table, built once per q."""

    def __init__(self, ctx_q: FieldCtx, ctx_q2: FieldCtx, table: PairTable) -> None:
        self.ctx_q = ctx_q
        self.ctx_q2 = ctx_q2
        self.table = table
        self.p = ctx_q.p
        self.q = ctx_q.order


def build_pair_table(ctx_q: FieldCtx, ctx_q2: FieldCtx) -> PairTable:
    """
    Enumerate F_{q^2} once, keeping the first x found for each a = x(1-x)
    that lies in F_q.
    """
    if ctx_q2.base is None or ctx_q2.base.name != ctx_q.name or ctx_q2.degree != 2:
        raise ContextMismatch(f"{ctx_q2.name} is not the quadratic extension of {ctx_q.name}")
    roots: Dict[int, int] = {}
    for x in range(ctx_q2.order):
        a = ctx_q2.mul(x, ctx_q2.sub(1, x))
        if ctx_q2.in_base(a) and a not in roots:
            roots[a] = x
            if len(roots) == ctx_q.order:
                break
    return PairTable(ctx_q, ctx_q2, roots)


@lru_cache(maxsize=None)
def build_tower(q: int, bound: int = C.DEFAULT_Q_BOUND) -> Tower:
    p, e = factor_prime_power(q)
    ctx_q = make_field_ctx(p, e, bound)
    ctx_q2 = make_quadratic_extension(ctx_q)
    table = build_pair_table(ctx_q, ctx_q2)
    logger.info(f"Pair table ready for q={q}")
    return Tower(ctx_q, ctx_q2, table)


def reduce_index(n: int, q: int) -> int:
    """Representative of n in [1, q^2-1]; d_n is unchanged on F_q."""
    if n < 1:
        raise RangeError(f"n={n} must be >= 1")
    return (n - 1) % (q * q - 1) + 1


def d_eval(table: PairTable, n: int, a: FieldElement) -> FieldElement:
    if n < 0:
        raise NegativeInput(f"n={n} must be >= 0")
    ctx = table.ctx_q
    return ctx.element(table.value(n, ctx.code(a)))


def d_sequence_slow(ctx_q: FieldCtx, a: int, n_max: int) -> List[int]:
    """[d_0(a), ..., d_{n_max}(a)] from d_n = d_{n-1} - a d_{n-2}."""
    seq = [ctx_q.from_int(2), 1]
    for _ in range(2, n_max + 1):
        seq.append(ctx_q.sub(seq[-1], ctx_q.mul(a, seq[-2])))
    return seq[: n_max + 1]


def d_eval_slow(ctx_q: FieldCtx, n: int, a: FieldElement) -> FieldElement:
    if n < 0:
        raise NegativeInput(f"n={n} must be >= 0")
    return ctx_q.element(d_sequence_slow(ctx_q, ctx_q.code(a), n)[n])


def cube_identity_residual(table: PairTable, n: int, a: FieldElement) -> FieldElement:
    """d_n(a)^3 - d_{3n}(a) - 3 a^n d_n(a); always zero."""
    if n < 1:
        raise RangeError(f"n={n} must be >= 1")
    ctx = table.ctx_q
    x = ctx.code(a)
    d = table.value(n, x)
    d3n = table.value(reduce_index(3 * n, ctx.order), x)
    cross = ctx.mul(ctx.mul(ctx.from_int(3), ctx.pow(x, n)), d)
    residual = ctx.sub(ctx.sub(ctx.pow(d, 3), d3n), cross)
    return ctx.element(residual)
