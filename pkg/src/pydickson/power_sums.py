"""
Power sums of reversed Dickson polynomials over F_q.

Brute-force oracles run over the pair table of `rdp`; the closed forms
return residues in F_p. Every inequality with a rational bound such as
s - (u+v)/(q-1) is cross-multiplied by q-1 and evaluated on integers.
"""

import logging
from typing import Dict, List, Tuple

from .lucas import binom_mod_p, delta_n, inv_pow2_mod_p, sign
from .models import IndexPair, OddSumParts, OracleSums, TripleIndex
from .rdp import build_tower
from .util.decorators import requires_parity
from .util.enums import Parity
from .util.exceptions import OutOfWindow, RangeError
from .util.helper import factor_prime_power

logger = logging.getLogger(name="DicksonSums")


def _check_n(n: int, q: int) -> None:
    if not 1 <= n <= q * q - 1:
        raise RangeError(f"n={n} outside [1, {q * q - 1}] for q={q}")


def uv_decompose(n: int, q: int) -> IndexPair:
    _check_n(n, q)
    return IndexPair(u=n % q, v=n // q)


def triple_index(n: int, q: int) -> TripleIndex:
    """(u', v') of the nonzero representative of 3n mod q^2-1."""
    _check_n(n, q)
    m = 3 * n % (q * q - 1) or q * q - 1
    return TripleIndex(u_p=m % q, v_p=m // q)


####
## Oracles
####


def oracle_sums(q: int, n: int) -> OracleSums:
    """
    Sums of d_n, d_n^2, d_n^3 and a^n d_n over F_q in a single pass.

    All four are returned as F_q codes; they lie in the prime subfield.
    """
    _check_n(n, q)
    tower = build_tower(q)
    ctx, table = tower.ctx_q, tower.table
    first = second = cube = weighted = 0
    for a in range(ctx.order):
        d = table.value(n, a)
        d2 = ctx.mul(d, d)
        first = ctx.add(first, d)
        second = ctx.add(second, d2)
        cube = ctx.add(cube, ctx.mul(d2, d))
        weighted = ctx.add(weighted, ctx.mul(ctx.pow(a, n), d))
    sums = OracleSums(first=first, second=second, cube=cube, weighted=weighted)
    logger.debug(f"Oracle sums q={q} n={n}: {sums}")
    return sums


def power_sum_oracle(q: int, n: int, i: int) -> int:
    if i < 1:
        raise RangeError(f"Power {i} must be >= 1")
    _check_n(n, q)
    tower = build_tower(q)
    ctx, table = tower.ctx_q, tower.table
    total = 0
    for a in range(ctx.order):
        total = ctx.add(total, ctx.pow(table.value(n, a), i))
    return total


def weighted_sum_oracle(q: int, n: int) -> int:
    _check_n(n, q)
    tower = build_tower(q)
    ctx, table = tower.ctx_q, tower.table
    total = 0
    for a in range(ctx.order):
        total = ctx.add(total, ctx.mul(ctx.pow(a, n), table.value(n, a)))
    return total


####
## First power sum
####


def sum_d_closed(q: int, n: int) -> int:
    """
    Sum of d_n(a) over F_q as a residue mod p.

    Parameters
    ----------
    q : int
        Field order.
    n : int
        Index in [1, q^2-1].

    Notes
    -----
    With n = u + vq: for odd q the value is
    -2^-(u+v) binom(u+v, q-1) + binom(2(q-1)-u-v, q-1-u), and -1 at the
    endpoint n = q^2-1. For even q it is binom(2(q-1)-u-v, q-1-u) when
    u+v >= q and 0 otherwise.
    """
    _check_n(n, q)
    p, _ = factor_prime_power(q)
    u, v = n % q, n // q
    w = u + v
    if p == 2:
        return binom_mod_p(2 * (q - 1) - w, q - 1 - u, 2) if w >= q else 0
    if n == q * q - 1:
        return p - 1
    value = -inv_pow2_mod_p(w, p) * binom_mod_p(w, q - 1, p)
    value += binom_mod_p(2 * (q - 1) - w, q - 1 - u, p)
    return value % p


####
## Weighted sum, even q
####


def _eps_window(s: int, u: int, v: int, q: int) -> List[int]:
    """
    Integers e with max{s-(u+v)/(q-1), v-q+1} <= e < min{s-(u+v)/(q-1)+1, v}.
    """
    Q, w = q - 1, u + v
    return [
        e
        for e in range(v - q + 1, v)
        if e * Q >= s * Q - w and e * Q < (s + 1) * Q - w
    ]


@requires_parity(Parity.EVEN)
def T_closed_even(q: int, n: int) -> int:
    """
    Sum of a^n d_n(a) over F_q in F_2, q even.

    Notes
    -----
    With n = u + vq, A = u+v-(s-e)(q-1) and K = (s-2e+1)(q-1), the sum is
    delta_n plus binom(A, K-2u-2v) + binom(A+v-e, K-2u-v-e) over
    s in [-1, 2] and e in `_eps_window(s, u, v, q)`.
    """
    _check_n(n, q)
    u, v = n % q, n // q
    Q, w = q - 1, u + v
    total = delta_n(n, q)
    for s in range(-1, 3):
        for e in _eps_window(s, u, v, q):
            A, K = w - (s - e) * Q, (s - 2 * e + 1) * Q
            total += binom_mod_p(A, K - 2 * w, 2)
            total += binom_mod_p(A + v - e, K - 2 * u - v - e, 2)
    return total % 2


@requires_parity(Parity.EVEN)
def T_cases_even(q: int, n: int) -> int:
    """
    Specialized forms of `T_closed_even` for 0 < u+v < 2(q-1).

    Below q-1 only s in {-1, 0} contribute, with e = s. From q-1 on,
    e = s-1 and only s in {-1, 0, 1} contribute.

    Raises
    ------
    OutOfWindow
        If u+v is 0 or 2(q-1).
    """
    _check_n(n, q)
    u, v = n % q, n // q
    Q, w = q - 1, u + v
    if not 0 < w < 2 * Q:
        raise OutOfWindow(f"u+v={w} outside (0, {2 * Q}) for q={q}")

    def b(m: int, k: int) -> int:
        return binom_mod_p(m, k, 2)

    if w < Q:
        total = b(w, 2 * Q - 2 * w) + b(w + v + 1, 2 * Q - 2 * w + v + 1)
        if v >= 1:
            total += b(w, Q - 2 * w) + b(w + v, Q - 2 * w + v)
        return total % 2

    m = w - Q
    total = delta_n(n, q)
    if v <= Q - 2:
        total += b(m, 4 * Q - 2 * w) + b(m + v + 2, 4 * Q - 2 * w + v + 2)
    if v <= Q - 1:
        total += b(m, 3 * Q - 2 * w) + b(m + v + 1, 3 * Q - 2 * w + v + 1)
    if v >= 1:
        total += (w == Q) + b(m + v, v - 2 * m)
    return total % 2


@requires_parity(Parity.EVEN)
def T_direct_even(q: int) -> Dict[int, int]:
    """
    Sum of a^n d_n(a) for every n in [1, q^2-1], from the constrained sum
    over (alpha, beta, k, j) it is defined by, plus delta_n.
    """
    Q = q - 1
    kj = _kj_terms(q, 2)
    table = {n: delta_n(n, q) for n in range(1, q * q)}
    for alpha in range(q - 1):
        for beta in range(q - 1 - alpha):
            c = binom_mod_p(alpha + beta, alpha, 2)
            if not c:
                continue
            for k, j, coeff in kj:
                if (2 * k - j - alpha - beta) % Q:
                    continue
                n = q * Q + k - j - (alpha + beta * q)
                if n in table:
                    table[n] = (table[n] + c * coeff) % 2
    return table


def _kj_terms(q: int, p: int, signed: bool = False) -> List[Tuple[int, int, int]]:
    """(k, j, binom(q-1-k, j) [(-1)^j]) for k >= 1, j >= 0, k+j <= q-1, nonzero only."""
    out = []
    for k in range(1, q):
        for j in range(q - k):
            c = binom_mod_p(q - 1 - k, j, p)
            if signed:
                c = sign(j) * c % p
            if c:
                out.append((k, j, c))
    return out


####
## Weighted sum, odd q
####


@requires_parity(Parity.ODD)
def term_I(q: int, u: int, v: int) -> int:
    p, _ = factor_prime_power(q)
    Q, w = q - 1, u + v
    total = 0
    for s in range(0, 3):
        if s * Q > (v - q) * Q + w and s * Q <= (v - q + 1) * Q + w:
            total += binom_mod_p(w - (s - v + q - 1) * Q, (s - 2 * v + 2 * q) * Q - 2 * w, p)
    return total % p


@requires_parity(Parity.ODD)
def term_II(q: int, u: int, v: int) -> int:
    p, _ = factor_prime_power(q)
    Q, w = q - 1, u + v
    total = 0
    for s in range(0, 3):
        for alpha in range(1, q):
            if alpha * Q > (v - s) * Q + w and alpha * Q <= (v - s + 1) * Q + w:
                total += binom_mod_p(
                    w - (s + alpha - v - 1) * Q, (s + 2 * alpha - 2 * v) * Q - 2 * w, p
                )
    return total % p


@requires_parity(Parity.ODD)
def term_III(q: int, u: int, v: int) -> int:
    p, _ = factor_prime_power(q)
    Q, w = q - 1, u + v
    total = 0
    for s in range(-1, 2):
        for e in _eps_window(s, u, v, q):
            total += sign(v + e) * binom_mod_p(
                u + 2 * v - (s - e) * Q - e, (s - 2 * e + 1) * Q - 2 * u - v - e, p
            )
    for s in range(-1, 2):
        if s * Q > (v - q) * Q + w and s * Q <= (v - q + 1) * Q + w:
            total -= binom_mod_p(w - (s - v + q - 1) * Q, (s - 2 * v + 2 * q) * Q - 2 * w, p)
    return total % p


def _check_window(q: int, u: int, v: int) -> None:
    w = u + v
    if not 0 < w < 2 * (q - 1):
        raise OutOfWindow(f"u+v={w} outside (0, {2 * (q - 1)}) for q={q}")


@requires_parity(Parity.ODD)
def term_I_cases(q: int, u: int, v: int) -> int:
    _check_window(q, u, v)
    p, _ = factor_prime_power(q)
    Q, w = q - 1, u + v
    if w < Q or v < q - 2:
        return 0
    return binom_mod_p(w - Q, (q + 2 - v) * Q - 2 * w, p)


@requires_parity(Parity.ODD)
def term_II_cases(q: int, u: int, v: int) -> int:
    _check_window(q, u, v)
    p, _ = factor_prime_power(q)
    Q, w = q - 1, u + v

    def b(m: int, k: int) -> int:
        return binom_mod_p(m, k, p)

    if w < Q:
        if v == 0:
            return b(u, 2 * Q - 2 * u)
        return (b(w, 2 * Q - 2 * w) + b(w, Q - 2 * w)) % p
    if w == Q:
        return 0 if v == 0 else 1
    if v == q - 1:
        return 0
    if v == q - 2:
        return b(u - 1, q + 1 - 2 * u)
    m = w - Q
    return (b(m, 4 * Q - 2 * w) + b(m, 3 * Q - 2 * w)) % p


@requires_parity(Parity.ODD)
def term_III_cases(q: int, u: int, v: int) -> int:
    """
    Specialized forms of `term_III`; they need q > 3.

    Raises
    ------
    RangeError
        If q = 3.
    OutOfWindow
        If u+v is 0 or 2(q-1).
    """
    if q == 3:
        raise RangeError("The specialized forms of III assume q > 3")
    _check_window(q, u, v)
    p, _ = factor_prime_power(q)
    Q, w = q - 1, u + v

    def b(m: int, k: int) -> int:
        return binom_mod_p(m, k, p)

    if w < Q:
        if v == 0:
            return -b(u + 1, 2 * Q - 2 * u + 1) % p
        value = sign(v + 1) * b(u + 2 * v + 1, 2 * Q - 2 * u - v + 1)
        value += sign(v) * b(u + 2 * v, Q - 2 * u - v)
        return value % p
    if v == 0:
        return 0
    if v == q - 1:
        return (b(u + q - 1, q - 2 * u - 1) - b(u, q - 2 * u - 1)) % p
    if v == q - 2:
        value = b(u + q - 2, 2 * q - 2 * u) - b(u + q - 3, q - 2 * u)
        return (value - b(u - 1, 2 * q - 2 * u)) % p
    value = sign(v) * b(u + 2 * v - q + 3, 4 * Q - 2 * u - v + 2)
    value += sign(v + 1) * b(u + 2 * v - q + 2, 3 * Q - 2 * u - v + 1)
    value += sign(v) * b(u + 2 * v - q + 1, 2 * Q - 2 * u - v)
    return value % p


def odd_parts(q: int, n: int) -> OddSumParts:
    _check_n(n, q)
    if n == q * q - 1:
        raise RangeError(f"n=q^2-1={n} is outside the closed-form range for odd q")
    u, v = n % q, n // q
    return OddSumParts(I=term_I(q, u, v), II=term_II(q, u, v), III=term_III(q, u, v))


@requires_parity(Parity.ODD)
def T_closed_odd(q: int, n: int) -> int:
    """
    Sum of a^n d_n(a) over F_q as -delta_n - I - II + III, q odd.

    Raises
    ------
    RangeError
        For n = q^2-1, which only the oracle serves.
    """
    p, _ = factor_prime_power(q)
    parts = odd_parts(q, n)
    return (-delta_n(n, q) - parts.I - parts.II + parts.III) % p


@requires_parity(Parity.ODD)
def odd_parts_direct(q: int) -> Dict[int, OddSumParts]:
    """
    I, II and III for every n in [1, q^2-1] from their defining sums over
    (alpha, beta, k, j).
    """
    p, _ = factor_prime_power(q)
    Q = q - 1
    kj = _kj_terms(q, p, signed=True)
    parts = {n: [0, 0, 0] for n in range(1, q * q)}

    for k, j, c in kj:
        if (2 * k - j) % Q:
            continue
        n = q * Q + k - j
        if n in parts:
            parts[n][0] = (parts[n][0] + c) % p

    for beta in range(q - 1):
        for alpha in range(q - beta):
            ab = alpha + beta
            if ab == 0:
                continue
            c2 = pow(2, ab, p) * binom_mod_p(2 * Q - ab, Q, p) % p
            c3 = binom_mod_p(ab, alpha, p)
            for k, j, c in kj:
                if (2 * k - j - ab) % Q:
                    continue
                n = q * Q + k - j - (alpha + beta * q)
                if n in parts:
                    parts[n][1] = (parts[n][1] + c2 * c) % p
                    parts[n][2] = (parts[n][2] + c3 * c) % p

    return {n: OddSumParts(I=i, II=ii, III=iii) for n, (i, ii, iii) in parts.items()}


####
## Cube sum
####


def cube_sum_closed(q: int, n: int) -> int:
    """
    Sum of d_n(a)^3 over F_q as a residue mod p.

    Even q: T + S(u', v') in F_2 for every n in [1, q^2-1]. Odd q:
    3T + S(u', v') for n <= q^2-2, where S is the first power sum at the
    nonzero representative u' + v'q of 3n mod q^2-1.

    Raises
    ------
    RangeError
        For odd q and n = q^2-1.
    """
    _check_n(n, q)
    p, _ = factor_prime_power(q)
    m3 = triple_index(n, q).index(q)
    if p == 2:
        return (T_closed_even(q, n) + sum_d_closed(q, m3)) % 2
    return (3 * T_closed_odd(q, n) + sum_d_closed(q, m3)) % p


def sum_closed(q: int, n: int, power: int) -> int:
    """Closed form for the `power`-th power sum; only powers 1 and 3 have one."""
    if power == 1:
        return sum_d_closed(q, n)
    if power == 3:
        return cube_sum_closed(q, n)
    raise RangeError(f"No closed form for the power sum with i={power}")
