from functools import lru_cache
from typing import List, Tuple

from .exceptions import NegativeInput, NonPrime


def is_prime(n: int) -> bool:
    """Trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def factor_prime_power(q: int) -> Tuple[int, int]:
    """
    Return `(p, e)` with `q = p**e`.

    Raises
    ------
    NonPrime
        If `q` is not a prime power.
    """
    if q < 2:
        raise NonPrime(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise NonPrime(f"{q} is not a prime power")
    return p, e


def to_digits(m: int, base: int) -> List[int]:
    """Little-endian digits of `m`; empty for 0."""
    if m < 0:
        raise NegativeInput(f"Cannot expand negative integer {m}")
    digits = []
    while m:
        m, r = divmod(m, base)
        digits.append(r)
    return digits


def parse_int_list(s: str) -> List[int]:
    """Parse `"2,3,4"` into `[2, 3, 4]`."""
    return [int(tok) for tok in s.split(",") if tok.strip()]
