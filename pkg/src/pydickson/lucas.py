"""
Binomial coefficients modulo a prime and the scalar helpers used by the
closed-form power sums.
"""

import math
from typing import List

from .util.exceptions import EvenCharacteristic, NegativeInput, RangeError
from .util.helper import factor_prime_power, to_digits


def digits_base_p(m: int, p: int) -> List[int]:
    """
    Little-endian base-`p` digits of `m` (empty for 0).

    Raises
    ------
    NegativeInput
        If `m` is negative.
    """
    return to_digits(m, p)


def binom_mod_p(m: int, k: int, p: int) -> int:
    """
    binom(m, k) mod p by Lucas' theorem.

    Total: any out-of-range index (k < 0, k > m, m < 0) gives 0, and
    binom(0, 0) = 1.
    """
    if m < 0 or k < 0 or k > m:
        return 0
    result = 1
    while k:
        m, mi = divmod(m, p)
        k, ki = divmod(k, p)
        if ki > mi:
            return 0
        result = result * math.comb(mi, ki) % p
    return result


def binom_exact_mod_p(m: int, k: int, p: int) -> int:
    """Factorial-based oracle for `binom_mod_p`."""
    if m < 0 or k < 0 or k > m:
        return 0
    return math.factorial(m) // (math.factorial(k) * math.factorial(m - k)) % p


def _check_reflection_range(q: int, alpha: int, v: int) -> None:
    if not (0 <= alpha <= q - 1 and 0 <= v <= q - 1):
        raise RangeError(f"alpha={alpha}, v={v} must lie in [0, {q - 1}]")


def reflection_lhs(q: int, alpha: int, v: int) -> int:
    """binom(q-1+alpha-v, alpha) in F_p."""
    _check_reflection_range(q, alpha, v)
    p, _ = factor_prime_power(q)
    return binom_mod_p(q - 1 + alpha - v, alpha, p)


def reflection_rhs(q: int, alpha: int, v: int) -> int:
    """(-1)^alpha * binom(v, alpha) in F_p."""
    _check_reflection_range(q, alpha, v)
    p, _ = factor_prime_power(q)
    return sign(alpha) * binom_mod_p(v, alpha, p) % p


def delta_n(n: int, q: int) -> int:
    """1 if (q-1) divides n, else 0."""
    if n < 1:
        raise RangeError(f"n={n} must be >= 1")
    return 1 if n % (q - 1) == 0 else 0


def inv_pow2_mod_p(m: int, p: int) -> int:
    """
    2^(-m) mod p.

    Raises
    ------
    EvenCharacteristic
        If `p` is 2.
    NegativeInput
        If `m` is negative.
    """
    if p == 2:
        raise EvenCharacteristic("2 is not invertible in characteristic 2")
    if m < 0:
        raise NegativeInput(f"Exponent {m} must be >= 0")
    return pow(pow(2, p - 2, p), m, p)


def sign(exponent: int) -> int:
    """(-1)^exponent as +1 or -1."""
    return -1 if exponent % 2 else 1
