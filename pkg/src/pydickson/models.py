from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing_extensions import Annotated

from .util import constants as C
from .util.enums import Command, FilterVerdict, Method, OutputFormat, Suite
from .util.helper import factor_prime_power, is_prime


class PrimePower(BaseModel, extra="forbid", frozen=True):
    p: Annotated[int, Field(ge=2)]
    e: Annotated[int, Field(ge=1)]
    q: Annotated[int, Field(ge=2)]

    @model_validator(mode="after")
    def q_is_p_to_the_e(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.q != self.p**self.e:
            raise ValueError(f"q={self.q} is not {self.p}^{self.e}")
        return self

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        p, e = factor_prime_power(q)
        return cls(p=p, e=e, q=q)


class FieldElement(BaseModel, extra="forbid", frozen=True):
    """
    Element of a field context, as its coefficient vector over the base field.

    `coeffs` are base-field integer codes, constant term first; `radix` is the
    base-field order, so `code` is the integer encoding sum(c_i * radix**i).
    """

    field: str
    radix: Annotated[int, Field(ge=2)]
    coeffs: Tuple[int, ...]

    @model_validator(mode="after")
    def coeffs_are_reduced(self):
        if not self.coeffs:
            raise ValueError("An element needs at least one coefficient")
        if any(not 0 <= c < self.radix for c in self.coeffs):
            raise ValueError(f"Coefficients {self.coeffs} not reduced mod {self.radix}")
        return self

    @property
    def code(self) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * self.radix + c
        return value


class IndexPair(BaseModel, extra="forbid", frozen=True):
    u: Annotated[int, Field(ge=0)]
    v: Annotated[int, Field(ge=0)]

    def index(self, q: int) -> int:
        return self.u + self.v * q


class TripleIndex(BaseModel, extra="forbid", frozen=True):
    u_p: Annotated[int, Field(ge=0)]
    v_p: Annotated[int, Field(ge=0)]

    def index(self, q: int) -> int:
        return self.u_p + self.v_p * q


class OddSumParts(BaseModel, extra="forbid", frozen=True):
    I: int
    II: int
    III: int


class OracleSums(BaseModel, extra="forbid", frozen=True):
    """Brute-force sums over F_q, as integer codes of F_q elements."""

    first: int
    second: int
    cube: int
    weighted: int


class SearchRecord(BaseModel):
    model_config = ConfigDict(
        use_enum_values=True, extra="forbid", populate_by_name=True
    )

    q: int
    n: int
    u: int
    v: int
    u_p: int = Field(alias="u_prime")
    v_p: int = Field(alias="v_prime")
    cube_sum: Optional[int]
    filter_verdict: FilterVerdict
    is_permutation: bool
    brute_forced: bool = True


class DesirablePair(BaseModel, extra="forbid"):
    n: int
    gcd: int


class SearchSummary(BaseModel, extra="forbid"):
    total: int = 0
    filter_pass: int = 0
    desirable: int = 0
    pruned: int = 0
    lost: int = 0
    desirable_pairs: List[DesirablePair] = []


class SearchReport(BaseModel, extra="forbid"):
    meta: Dict[str, Any]
    records: List[SearchRecord]
    summary: SearchSummary

    @property
    def desirable(self) -> List[int]:
        return [r.n for r in self.records if r.is_permutation]


class SumRecord(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    q: int
    n: int
    u: int
    v: int
    u_p: int = Field(alias="u_prime")
    v_p: int = Field(alias="v_prime")
    closed: Optional[int] = None
    oracle: Optional[int] = None
    match: Optional[bool] = None


class Counterexample(BaseModel, extra="forbid"):
    check: str
    q: int
    n: Optional[int] = None
    lhs: Any
    rhs: Any


class SuiteOutcome(BaseModel, extra="forbid"):
    suite: str
    q: int
    cases: int = 0
    failures: int = 0
    counterexample: Optional[Counterexample] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(
        self, ok: bool, check: str, n: Optional[int], lhs: Any, rhs: Any
    ) -> bool:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = Counterexample(
                    check=check, q=self.q, n=n, lhs=lhs, rhs=rhs
                )
        return ok


class RunConfig(BaseModel):
    model_config = ConfigDict(use_enum_values=True, extra="forbid")

    command: Command
    q: Optional[int] = None
    p: Optional[int] = None
    e: Optional[Annotated[int, Field(ge=1)]] = None
    n: Optional[Annotated[int, Field(ge=0)]] = None
    a: Optional[Annotated[int, Field(ge=0)]] = None
    power: Annotated[int, Field(ge=1)] = 3
    method: Method = Method.both
    qset: List[int] = []
    suite: Suite = Suite.all
    filters: bool = True
    verify: bool = False
    format: OutputFormat = OutputFormat.text
    out: Optional[Path] = None
    jobs: Annotated[int, Field(ge=1)] = C.DEFAULT_JOBS
    bound: Annotated[int, Field(ge=2)] = C.DEFAULT_Q_BOUND

    @field_validator("qset")
    @classmethod
    def qset_are_prime_powers(cls, qset):
        del cls
        for q in qset:
            factor_prime_power(q)
        return qset

    @model_validator(mode="after")
    def resolve_field(self):
        if self.p is not None or self.e is not None:
            if self.p is None:
                raise ValueError("--e given without --p")
            pp = PrimePower(p=self.p, e=self.e or 1, q=self.p ** (self.e or 1))
            if self.q is not None and self.q != pp.q:
                raise ValueError(f"--q {self.q} is inconsistent with --p/--e ({pp.q})")
            self.q = pp.q
        if self.q is not None:
            PrimePower.from_q(self.q)
            if self.q > self.bound:
                raise ValueError(f"q={self.q} exceeds the bound {self.bound}")
        for q in self.qset:
            if q > self.bound:
                raise ValueError(f"q={q} in --qset exceeds the bound {self.bound}")

        if self.command in (Command.eval, Command.sum, Command.search, Command.field_info):
            if self.q is None:
                raise ValueError(f"`{self.command}` needs --q or --p/--e")
        if self.command in (Command.eval, Command.sum) and self.n is None:
            raise ValueError(f"`{self.command}` needs --n")
        if self.command == Command.sum and not 1 <= self.n <= self.q**2 - 1:
            raise ValueError(f"n={self.n} outside [1, {self.q ** 2 - 1}]")
        if self.a is not None and self.q is not None and self.a >= self.q:
            raise ValueError(f"a={self.a} is not an element code of F_{self.q}")
        if self.command == Command.verify and not self.qset:
            raise ValueError("`verify` needs a nonempty --qset")
        return self


class SumReport(BaseModel, extra="forbid"):
    meta: Dict[str, Any]
    records: List[SumRecord]


class VerifyReport(BaseModel, extra="forbid"):
    meta: Dict[str, Any]
    suites: List[SuiteOutcome]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def first_counterexample(self) -> Optional[Counterexample]:
        return next(
            (s.counterexample for s in self.suites if s.counterexample is not None),
            None,
        )
