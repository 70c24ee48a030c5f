from enum import Enum


class Parity(Enum):
    EVEN = 1
    ODD = 2


class FilterVerdict(str, Enum):
    passed = "pass"
    fail_uv = "fail_uv"
    fail_identity = "fail_identity"
    not_applicable = "not_applicable"


class Method(str, Enum):
    closed = "closed"
    oracle = "oracle"
    both = "both"


class OutputFormat(str, Enum):
    csv = "csv"
    json = "json"
    text = "text"


class Command(str, Enum):
    eval = "eval"
    sum = "sum"
    verify = "verify"
    search = "search"
    field_info = "field-info"


class Suite(str, Enum):
    identities = "identities"
    evaluators = "evaluators"
    h = "h"
    sums = "sums"
    notes = "notes"
    definitions = "definitions"
    filters = "filters"
    all = "all"
