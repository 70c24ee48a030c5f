import itertools
import logging
import random
from typing import Callable, List, Optional, Sequence

from .models import FieldElement, PrimePower
from .polyring import PolyFp
from .util import constants as C
from .util.exceptions import (
    BoundExceeded,
    ContextMismatch,
    DivisionByZero,
    FieldConstructionError,
    NegativeInput,
    NonPrime,
)
from .util.helper import is_prime


class FieldCtx:
    """
    Finite field realized as base[T] / (modulus).

    The base is F_p when `base` is None, otherwise another `FieldCtx`; the
    quadratic extension F_{q^2} is built over F_q this way so that F_q sits
    inside it as the constant polynomials.

    Elements are handled internally as integer codes sum(c_i * radix**i) where
    `c_i` are base-field codes and `radix` is the base-field order. Over F_p
    this is the code sum(digit_i * p**i); over F_q it extends that code to
    the 2e base-p digits of an F_{q^2} element.

    Parameters
    ----------
    pp : PrimePower
        Characteristic data of the prime field at the bottom of the tower.
    modulus : Sequence[int]
        Monic irreducible modulus over the base, as base-field codes, constant
        term first, leading 1 included.
    base : Optional[FieldCtx], default None
        Base field; `None` means F_p.

    Notes
    -----
    A context is immutable after construction apart from lazily built lookup
    tables, and can be shared read-only between workers.
    """

    def __init__(
        self,
        pp: PrimePower,
        modulus: Sequence[int],
        base: Optional["FieldCtx"] = None,
    ) -> None:
        self.logger = logging.getLogger(name="DicksonField")

        self.pp = pp
        self.p = pp.p
        self.base = base
        self.radix = pp.p if base is None else base.order
        self.modulus = tuple(modulus)
        self.degree = len(self.modulus) - 1
        if self.degree < 1 or self.modulus[-1] != 1:
            raise FieldConstructionError(f"Modulus {self.modulus} is not monic")
        self.order = self.radix**self.degree
        if base is None:
            self.name = f"GF({pp.p}^{self.degree})"
        else:
            self.name = f"GF({base.order}^{self.degree})/{base.name}"

        if base is None:
            p = pp.p
            self._cadd: Callable[[int, int], int] = lambda x, y: (x + y) % p
            self._csub: Callable[[int, int], int] = lambda x, y: (x - y) % p
            self._cmul: Callable[[int, int], int] = lambda x, y: x * y % p
            self._cinv: Callable[[int], int] = lambda x: pow(x, p - 2, p)
        else:
            self._cadd = base.add
            self._csub = base.sub
            self._cmul = base.mul
            self._cinv = base.inv

        self._add_table: Optional[List[int]] = None
        self._exp: Optional[List[int]] = None
        self._log: Optional[List[int]] = None
        if self.order <= C.MUL_TABLE_MAX_ORDER and self.degree > 1:
            self._build_tables()

    def __repr__(self) -> str:
        return f"FieldCtx({self.name}, modulus={self.modulus})"

    ####
    ## Codes
    ####

    def split(self, x: int) -> List[int]:
        cs = []
        for _ in range(self.degree):
            x, r = divmod(x, self.radix)
            cs.append(r)
        return cs

    def join(self, cs: Sequence[int]) -> int:
        x = 0
        for c in reversed(cs):
            x = x * self.radix + c
        return x

    def element(self, code: int) -> FieldElement:
        if not 0 <= code < self.order:
            raise ContextMismatch(f"{code} is not an element code of {self.name}")
        return FieldElement.model_construct(
            field=self.name, radix=self.radix, coeffs=tuple(self.split(code))
        )

    def code(self, a: FieldElement) -> int:
        if a.field != self.name or len(a.coeffs) != self.degree:
            raise ContextMismatch(f"Element of {a.field} used with {self.name}")
        return a.code

    def from_int(self, k: int) -> int:
        """Code of the integer `k` in the prime subfield."""
        return k % self.p

    def in_base(self, x: int) -> bool:
        return x < self.radix

    ####
    ## Arithmetic on codes
    ####

    def add(self, x: int, y: int) -> int:
        if self._add_table is not None:
            return self._add_table[x * self.order + y]
        if self.degree == 1:
            return self._cadd(x, y)
        if self.base is None and self.p == 2:
            return x ^ y
        return self.join(
            [self._cadd(a, b) for a, b in zip(self.split(x), self.split(y))]
        )

    def neg(self, x: int) -> int:
        if self.degree == 1:
            return self._csub(0, x)
        return self.join([self._csub(0, a) for a in self.split(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if self._exp is not None:
            if x == 0 or y == 0:
                return 0
            return self._exp[(self._log[x] + self._log[y]) % (self.order - 1)]
        return self._mul_generic(x, y)

    def _mul_generic(self, x: int, y: int) -> int:
        if self.degree == 1:
            return self._cmul(x, y)
        a = self.split(x)
        b = self.split(y)
        d = self.degree
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = self._cadd(prod[i + j], self._cmul(ai, bj))
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c == 0:
                continue
            prod[k] = 0
            for i in range(d):
                if self.modulus[i]:
                    prod[k - d + i] = self._csub(
                        prod[k - d + i], self._cmul(c, self.modulus[i])
                    )
        return self.join(prod[:d])

    def pow(self, x: int, n: int) -> int:
        """Log-table lookup when built, otherwise square-and-multiply; 0^0 = 1."""
        if n < 0:
            raise NegativeInput(f"Exponent {n} must be >= 0")
        if self._exp is not None and x != 0:
            return self._exp[self._log[x] * n % (self.order - 1)]
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            n >>= 1
        return result

    def inv(self, x: int) -> int:
        """Inverse by the extended Euclidean algorithm on coefficient polynomials."""
        if x == 0:
            raise DivisionByZero(f"0 has no inverse in {self.name}")
        if self.degree == 1:
            return self._cinv(x)
        r0, r1 = list(self.modulus), self._trim(self.split(x))
        s0, s1 = [], [1]
        while r1:
            quot, rem = self._poly_divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, self._poly_sub(s0, self._poly_mul(quot, s1))
        # r0 is a nonzero constant since the modulus is irreducible
        c = self._cinv(r0[0])
        coeffs = [self._cmul(c, s) for s in s0] + [0] * self.degree
        return self.join(coeffs[: self.degree])

    ####
    ## Polynomials over the base field (for inversion)
    ####

    @staticmethod
    def _trim(a: List[int]) -> List[int]:
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        return a

    def _poly_sub(self, a: List[int], b: List[int]) -> List[int]:
        n = max(len(a), len(b))
        a = a + [0] * (n - len(a))
        b = b + [0] * (n - len(b))
        return self._trim([self._csub(x, y) for x, y in zip(a, b)])

    def _poly_mul(self, a: List[int], b: List[int]) -> List[int]:
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = self._cadd(out[i + j], self._cmul(x, y))
        return self._trim(out)

    def _poly_divmod(self, a: List[int], b: List[int]):
        rem = list(a)
        inv_lead = self._cinv(b[-1])
        quot = [0] * max(len(a) - len(b) + 1, 0)
        for i in range(len(a) - len(b), -1, -1):
            c = self._cmul(rem[i + len(b) - 1], inv_lead)
            quot[i] = c
            if c:
                for j, y in enumerate(b):
                    rem[i + j] = self._csub(rem[i + j], self._cmul(c, y))
        return self._trim(quot), self._trim(rem[: len(b) - 1])

    ####
    ## Tables and checks
    ####

    def _build_tables(self) -> None:
        """
        Exp/log tables from a primitive element, plus an addition table for
        odd characteristic. The cycle length of the primitive element is the
        multiplicative group order check.
        """
        q1 = self.order - 1
        for g in range(2, self.order):
            exp = [1]
            x = g
            while x != 1 and len(exp) <= q1:
                exp.append(x)
                x = self._mul_generic(x, g)
            if len(exp) == q1:
                break
        else:
            raise FieldConstructionError(f"No primitive element found in {self.name}")
        log = [0] * self.order
        for i, x in enumerate(exp):
            log[x] = i
        self._exp, self._log = exp, log

        if self.base is None and self.p != 2 and self.order <= C.ADD_TABLE_MAX_ORDER:
            self._add_table = [
                self.join(
                    [(a + b) % self.p for a, b in zip(self.split(x), self.split(y))]
                )
                for x in range(self.order)
                for y in range(self.order)
            ]
        self.logger.debug(f"Built lookup tables for {self.name} (generator {g})")

    def spot_check(self, samples: int = C.FIELD_SPOT_CHECKS) -> None:
        """x^(order-1) = 1 for sampled nonzero x."""
        rng = random.Random(C.FIELD_SPOT_CHECK_SEED)
        nonzero = range(1, self.order)
        for x in rng.sample(nonzero, min(samples, len(nonzero))):
            if self.pow(x, self.order - 1) != 1:
                raise FieldConstructionError(
                    f"{x}^{self.order - 1} != 1 in {self.name}: modulus is not irreducible"
                )


def _is_irreducible_fp(poly: PolyFp) -> bool:
    """No root and no monic factor of degree <= deg/2 over F_p."""
    p, d = poly.p, poly.degree
    if d <= 1:
        return True
    if any(poly.evaluate(x) == 0 for x in range(p)):
        return False
    for k in range(2, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            if (poly % PolyFp(p, list(tail) + [1])).is_zero():
                return False
    return True


def smallest_irreducible(p: int, e: int) -> List[int]:
    """
    Lexicographically smallest monic irreducible polynomial of degree `e`
    over F_p, coefficients compared constant term first.
    """
    for tail in itertools.product(range(p), repeat=e):
        coeffs = list(tail) + [1]
        if _is_irreducible_fp(PolyFp(p, coeffs)):
            return coeffs
    raise FieldConstructionError(f"No irreducible polynomial of degree {e} over F_{p}")


def make_field_ctx(p: int, e: int, bound: int = C.DEFAULT_Q_BOUND) -> FieldCtx:
    """
    Construct GF(p^e) with the lexicographically smallest monic irreducible
    modulus.

    Raises
    ------
    NonPrime
        If `p` is composite.
    BoundExceeded
        If p^e exceeds `bound`.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if e < 1:
        raise NegativeInput(f"Extension degree {e} must be >= 1")
    if p**e > bound:
        raise BoundExceeded(f"q={p ** e} exceeds the bound {bound}")
    pp = PrimePower(p=p, e=e, q=p**e)
    ctx = FieldCtx(pp, smallest_irreducible(p, e))
    ctx.spot_check()
    ctx.logger.info(f"Constructed {ctx.name} with modulus {ctx.modulus}")
    return ctx


def make_quadratic_extension(ctx_q: FieldCtx) -> FieldCtx:
    """
    Degree-2 extension of `ctx_q` by the lexicographically smallest monic
    irreducible quadratic T^2 + c1*T + c0 (c0 compared first).
    """
    q = ctx_q.order
    for c0, c1 in itertools.product(range(q), repeat=2):
        has_root = any(
            ctx_q.add(ctx_q.add(ctx_q.mul(x, x), ctx_q.mul(c1, x)), c0) == 0
            for x in range(q)
        )
        if not has_root:
            break
    else:
        raise FieldConstructionError(f"No irreducible quadratic over {ctx_q.name}")
    ctx = FieldCtx(ctx_q.pp, [c0, c1, 1], base=ctx_q)
    ctx.spot_check()
    ctx.logger.info(f"Constructed {ctx.name} with modulus {ctx.modulus}")
    return ctx


def field_add(ctx: FieldCtx, a: FieldElement, b: FieldElement) -> FieldElement:
    return ctx.element(ctx.add(ctx.code(a), ctx.code(b)))


def field_sub(ctx: FieldCtx, a: FieldElement, b: FieldElement) -> FieldElement:
    return ctx.element(ctx.sub(ctx.code(a), ctx.code(b)))


def field_neg(ctx: FieldCtx, a: FieldElement) -> FieldElement:
    return ctx.element(ctx.neg(ctx.code(a)))


def field_mul(ctx: FieldCtx, a: FieldElement, b: FieldElement) -> FieldElement:
    return ctx.element(ctx.mul(ctx.code(a), ctx.code(b)))


def field_inv(ctx: FieldCtx, a: FieldElement) -> FieldElement:
    return ctx.element(ctx.inv(ctx.code(a)))


def field_pow(ctx: FieldCtx, a: FieldElement, n: int) -> FieldElement:
    return ctx.element(ctx.pow(ctx.code(a), n))


def enumerate_elements(ctx: FieldCtx) -> List[FieldElement]:
    """All elements in ascending integer-code order."""
    return [ctx.element(x) for x in range(ctx.order)]


def lift_to_quadratic(
    ctx_q: FieldCtx, ctx_q2: FieldCtx, a: FieldElement
) -> FieldElement:
    """Canonical embedding of F_q into F_{q^2}: constants stay constants."""
    if ctx_q2.base is None or ctx_q2.base.name != ctx_q.name or ctx_q2.degree != 2:
        raise ContextMismatch(f"{ctx_q2.name} is not the quadratic extension of {ctx_q.name}")
    return ctx_q2.element(ctx_q.code(a))


def lift_scalar(ctx: FieldCtx, residue: int) -> FieldElement:
    """Residue in F_p as an element of the prime subfield of `ctx`."""
    return ctx.element(ctx.from_int(residue))
