from typing import Dict, Iterable, Tuple

from .lucas import binom_mod_p
from .util import constants as C
from .util.decorators import requires_parity
from .util.enums import Parity
from .util.exceptions import (
    BoundExceeded,
    ContextMismatch,
    DicksonError,
    DivisionByZero,
    InexactDivision,
    NonPrime,
)
from .util.helper import is_prime


class PolyFp:
    """
    Dense univariate polynomial over F_p.

    Coefficients are stored little-endian and trimmed, so the zero
    polynomial has an empty coefficient tuple and degree -1.

    Parameters
    ----------
    p : int
        Characteristic.
    coeffs : Iterable[int]
        Coefficients, constant term first. Reduced mod `p` on construction.

    Notes
    -----
    Multiplication and division are schoolbook, O(d1 * d2); both skip zero
    coefficients, which keeps the sparse numerators of h(t) cheap.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()) -> None:
        cs = [c % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs: Tuple[int, ...] = tuple(cs)

    @classmethod
    def monomial(cls, p: int, degree: int, c: int = 1) -> "PolyFp":
        return cls(p, [0] * degree + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def _check(self, other: "PolyFp") -> None:
        if other.p != self.p:
            raise ContextMismatch(
                f"Polynomials over F_{self.p} and F_{other.p} cannot be combined"
            )

    def __add__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return PolyFp(self.p, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self) -> "PolyFp":
        return PolyFp(self.p, [-c for c in self.coeffs])

    def __sub__(self, other: "PolyFp") -> "PolyFp":
        return self + (-other)

    def __mul__(self, other: "PolyFp") -> "PolyFp":
        self._check(other)
        if self.is_zero() or other.is_zero():
            return PolyFp(self.p)
        p = self.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        terms = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in terms:
                out[i + j] = (out[i + j] + a * b) % p
        return PolyFp(p, out)

    def __divmod__(self, other: "PolyFp") -> Tuple["PolyFp", "PolyFp"]:
        self._check(other)
        if other.is_zero():
            raise DivisionByZero("Division by the zero polynomial")
        p = self.p
        db = other.degree
        if self.degree < db:
            return PolyFp(p), self
        inv_lead = pow(other.lead, p - 2, p)
        terms = [(j, b) for j, b in enumerate(other.coeffs[:-1]) if b]
        rem = list(self.coeffs)
        quot = [0] * (self.degree - db + 1)
        for i in range(self.degree - db, -1, -1):
            c = rem[i + db] * inv_lead % p
            if c == 0:
                continue
            quot[i] = c
            rem[i + db] = 0
            for j, b in terms:
                rem[i + j] = (rem[i + j] - c * b) % p
        return PolyFp(p, quot), PolyFp(p, rem[:db])

    def __floordiv__(self, other: "PolyFp") -> "PolyFp":
        return divmod(self, other)[0]

    def __mod__(self, other: "PolyFp") -> "PolyFp":
        return divmod(self, other)[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyFp):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return f"PolyFp(p={self.p}, 0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return f"PolyFp(p={self.p}, {' + '.join(terms)})"


def poly_exact_div(num: PolyFp, den: PolyFp) -> PolyFp:
    """
    Quotient `num / den`, which must divide exactly.

    Raises
    ------
    InexactDivision
        If the remainder is nonzero.
    DivisionByZero
        If `den` is the zero polynomial.
    """
    quot, rem = divmod(num, den)
    if not rem.is_zero():
        raise InexactDivision(f"{den} does not divide {num}: remainder {rem}")
    return quot


def _order(p: int, e: int, bound: int) -> int:
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    q = p**e
    if q > bound:
        raise BoundExceeded(f"q={q} exceeds the bound {bound}")
    return q


def h_rational(p: int, e: int, bound: int = C.DEFAULT_Q_BOUND) -> PolyFp:
    """
    h(t) = (t-2)(t^(q^2-1)-1) / ((t^(q-1)-1)(t^q-t^(q-1)-1)) over F_p.
    """
    q = _order(p, e, bound)
    one = PolyFp(p, [1])
    num = PolyFp(p, [-2, 1]) * (PolyFp.monomial(p, q * q - 1) - one)
    den = (PolyFp.monomial(p, q - 1) - one) * (
        PolyFp.monomial(p, q) - PolyFp.monomial(p, q - 1) - one
    )
    h = poly_exact_div(num, den)
    if h.degree != (q - 1) ** 2:
        raise DicksonError(f"deg h = {h.degree}, expected {(q - 1) ** 2} for q={q}")
    return h


@requires_parity(Parity.EVEN)
def h_closed_even(p: int, e: int, bound: int = C.DEFAULT_Q_BOUND) -> PolyFp:
    q = _order(p, e, bound)
    top = (q - 1) ** 2
    coeffs = [0] * (top + 1)
    for s in range(q - 1):
        for alpha in range(s + 1):
            beta = s - alpha
            exponent = top - (alpha + beta * q)
            coeffs[exponent] += binom_mod_p(s, alpha, 2)
    return PolyFp(2, coeffs)


@requires_parity(Parity.ODD)
def h_closed_odd(p: int, e: int, bound: int = C.DEFAULT_Q_BOUND) -> PolyFp:
    q = _order(p, e, bound)
    top = (q - 1) ** 2
    coeffs = [0] * (top + 1)
    coeffs[top] = 1
    for beta in range(q - 1):
        for alpha in range(q - beta):
            s = alpha + beta
            if s == 0:
                continue
            c = pow(2, s, p) * binom_mod_p(2 * (q - 1) - s, q - 1, p)
            c -= binom_mod_p(s, alpha, p)
            coeffs[top - (alpha + beta * q)] += c
    return PolyFp(p, coeffs)


def h_closed(p: int, e: int, bound: int = C.DEFAULT_Q_BOUND) -> PolyFp:
    if p == 2:
        return h_closed_even(p, e, bound)
    return h_closed_odd(p, e, bound)


def first_sums_from_h(h: PolyFp, q: int) -> Dict[int, int]:
    """
    First power sums read off h(t).

    The coefficient of t^n in -t^(2(q-1)) h(t) is the sum of d_n(a) over
    F_q for 2(q-1) <= n <= q^2-1; below 2(q-1) the sums vanish.
    """
    shift = 2 * (q - 1)
    sums: Dict[int, int] = {}
    for n in range(1, q * q):
        sums[n] = 0 if n < shift else (-h.coeff(n - shift)) % h.p
    return sums
