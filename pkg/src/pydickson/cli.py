import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from . import __version__
from .models import RunConfig, SumRecord, SumReport, VerifyReport
from .power_sums import power_sum_oracle, sum_closed, triple_index, uv_decompose
from .rdp import build_tower
from .report import render, to_csv, write_report
from .search import search_desirable
from .util import constants as C
from .util.enums import Command, Method, OutputFormat, Suite
from .util.exceptions import BoundExceeded, NonPrime, RangeError
from .util.helper import parse_int_list
from .verify import run_suites

logger = logging.getLogger(name="DicksonCLI")


FIELD_OPTIONS = {"q", "p", "e"}
META_FIELDS = {
    Command.eval.value: FIELD_OPTIONS | {"n", "a"},
    Command.sum.value: FIELD_OPTIONS | {"n", "power", "method"},
    Command.verify.value: {"qset", "suite"},
    Command.search.value: FIELD_OPTIONS | {"filters", "verify"},
    Command.field_info.value: FIELD_OPTIONS,
}

USAGE_ERRORS = (ValidationError, NonPrime, BoundExceeded, RangeError)


def _meta(config: RunConfig) -> Dict[str, Any]:
    """Version, command, format and the options the command reads."""
    include = META_FIELDS[config.command] | {"command", "format"}
    echo = config.model_dump(mode="json", include=include, exclude_none=True)
    return {"version": __version__, **echo}


def run_eval(config: RunConfig) -> Tuple[str, int]:
    tower = build_tower(config.q)
    codes = [config.a] if config.a is not None else list(range(config.q))
    rows = [{"a": a, "value": tower.table.value(config.n, a)} for a in codes]
    if config.format == OutputFormat.json.value:
        data = {"meta": _meta(config), "values": rows}
        return json.dumps(data, sort_keys=True, indent=2) + "\n", C.EXIT_OK
    if config.format == OutputFormat.csv.value:
        return to_csv(rows, ["a", "value"]), C.EXIT_OK
    if config.a is not None:
        return f"{rows[0]['value']}\n", C.EXIT_OK
    return "".join(f"{r['a']} {r['value']}\n" for r in rows), C.EXIT_OK


def run_sum(config: RunConfig) -> Tuple[str, int]:
    q, n = config.q, config.n
    uv, tp = uv_decompose(n, q), triple_index(n, q)
    record = SumRecord(q=q, n=n, u=uv.u, v=uv.v, u_p=tp.u_p, v_p=tp.v_p)
    if config.method in (Method.closed.value, Method.both.value):
        try:
            record.closed = sum_closed(q, n, config.power)
        except RangeError as err:
            raise RangeError(f"outside closed-form range: {err}") from err
    if config.method in (Method.oracle.value, Method.both.value):
        record.oracle = power_sum_oracle(q, n, config.power)
    code = C.EXIT_OK
    if config.method == Method.both.value:
        ctx = build_tower(q).ctx_q
        record.match = ctx.from_int(record.closed) == record.oracle
        if not record.match:
            logger.error(f"Mismatch for q={q} n={n}: closed={record.closed} oracle={record.oracle}")
            code = C.EXIT_MISMATCH
    report = SumReport(meta=_meta(config), records=[record])
    return render(report, config.format), code


def run_verify(config: RunConfig) -> Tuple[str, int]:
    outcomes = run_suites(config.qset, config.suite, config.jobs)
    report = VerifyReport(meta=_meta(config), suites=outcomes)
    if report.passed:
        return render(report, config.format), C.EXIT_OK
    cx = report.first_counterexample
    print(
        f"counterexample ({cx.check}): q={cx.q} n={cx.n} lhs={cx.lhs} rhs={cx.rhs}",
        file=sys.stderr,
    )
    return render(report, config.format), C.EXIT_MISMATCH


def run_search(config: RunConfig) -> Tuple[str, int]:
    report = search_desirable(
        config.q, use_filter=config.filters, verify=config.verify, jobs=config.jobs
    )
    code = C.EXIT_MISMATCH if report.summary.lost else C.EXIT_OK
    return render(report, config.format), code


def run_field_info(config: RunConfig) -> Tuple[str, int]:
    tower = build_tower(config.q)
    ctx, ctx2 = tower.ctx_q, tower.ctx_q2
    info = {
        "p": ctx.p,
        "e": ctx.degree,
        "q": ctx.order,
        "modulus": list(ctx.modulus),
        "quadratic_modulus": list(ctx2.modulus),
    }
    if config.format == OutputFormat.json.value:
        data = {"meta": _meta(config), "field": info}
        return json.dumps(data, sort_keys=True, indent=2) + "\n", C.EXIT_OK
    if config.format == OutputFormat.csv.value:
        flat = {k: " ".join(map(str, v)) if isinstance(v, list) else v for k, v in info.items()}
        return to_csv([flat], list(info)), C.EXIT_OK
    return "".join(f"{k}: {v}\n" for k, v in info.items()), C.EXIT_OK


RUNNERS = {
    Command.eval.value: run_eval,
    Command.sum.value: run_sum,
    Command.verify.value: run_verify,
    Command.search.value: run_search,
    Command.field_info.value: run_field_info,
}


def _on_off(value: str) -> bool:
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError(f"expected 'on' or 'off', got {value!r}")
    return value == "on"


def _int_list(value: str) -> List[int]:
    try:
        return parse_int_list(value)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from err


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default="text")
    common.add_argument("--out", default=None, help="Write the report here instead of stdout")
    common.add_argument("--jobs", type=int, default=C.DEFAULT_JOBS, help="Worker processes")
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    noise.add_argument("--quiet", action="store_true", help="Log warnings and errors only")

    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--q", type=int, help="Field order, a prime power")
    field.add_argument("--p", type=int, help="Characteristic (with --e)")
    field.add_argument("--e", type=int, help="Extension degree (with --p)")

    parser = argparse.ArgumentParser(
        prog="pydickson",
        description="Reversed Dickson polynomials over finite fields: values, power sums and permutation search.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common, field], help="Evaluate d_n(a)")
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--a", type=int, help="Element code; all of F_q when omitted")

    sm = sub.add_parser("sum", parents=[common, field], help="Power sum of d_n over F_q")
    sm.add_argument("--n", type=int, required=True)
    sm.add_argument("--power", type=int, default=3)
    sm.add_argument("--method", choices=[m.value for m in Method], default=Method.both.value)

    vf = sub.add_parser("verify", parents=[common], help="Run the verification suites")
    vf.add_argument("--qset", type=_int_list, required=True, help="Comma-separated field orders")
    vf.add_argument("--suite", choices=[s.value for s in Suite], default=Suite.all.value)

    se = sub.add_parser("search", parents=[common, field], help="Search desirable pairs")
    se.add_argument("--filters", type=_on_off, default=True, help="on|off")
    se.add_argument(
        "--verify", action="store_true", help="Brute-force n rejected by the filter too"
    )

    sub.add_parser("field-info", parents=[common, field], help="Show the field moduli")
    return parser


def setup_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(
        format="%(asctime)s %(levelname)-8s %(message)s",
        level=level,
        datefmt="%Y-%m-%d %H:%M:%S",
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose, args.quiet)

    fields = {
        k: v
        for k, v in vars(args).items()
        if k not in ("verbose", "quiet") and v is not None
    }
    try:
        config = RunConfig(**fields)
        text, code = RUNNERS[config.command](config)
    except USAGE_ERRORS as err:
        logger.error(f"{type(err).__name__}: {err}")
        print(f"pydickson: error: {err}", file=sys.stderr)
        return C.EXIT_USAGE

    write_report(text, config.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
