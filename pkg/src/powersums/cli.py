"""Command-line interface.

Grammar::

    powersum <d> [--method lhopital|matrix|stirling|euler-maclaurin|all]
                 [--format plain|latex|json|coeffs] [--eval <n>]
    fallingsum <k> [--format plain|latex|json|coeffs] [--eval <n>]
    fib <n> [--method doubling|binet]
    geom <a0> <r> <n>
    verify [--dmax D] [--nmax N] [--json]
    bench [--dmax D] [--json]

Exit codes: 0 success, 1 usage error, 2 verification failure or internal
invariant breach.  Machine output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import json
import re
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exact import format_rational, parse_rational
from .formatting import FORMATS, format_polynomial, polynomial_to_json
from .methods import MethodTag, brute_force_power_sum, falling_power_sum_poly, power_sum
from .poly import Polynomial
from .sequences import fib_binet, fib_doubling, geometric_sum

USAGE = __doc__.split("Grammar::", 1)[1].split("Exit codes", 1)[0].strip("\n")

VERIFY_DEFAULT_DMAX = 20
VERIFY_DEFAULT_NMAX = 50
BENCH_DEFAULT_DMAX = 10

# CLI spelling <-> MethodTag
METHOD_NAMES = {
    "lhopital": MethodTag.LHOPITAL,
    "matrix": MethodTag.MATRIX,
    "stirling": MethodTag.STIRLING,
    "euler-maclaurin": MethodTag.EULER_MACLAURIN,
}
CLI_NAME = {tag: name for name, tag in METHOD_NAMES.items()}
FIB_METHODS = ("doubling", "binet")

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class HelpRequested(Exception):
    pass


@dataclass(frozen=True)
class PowerSum:
    d: int
    method: str = "lhopital"
    fmt: str = "plain"
    eval_at: Optional[int] = None


@dataclass(frozen=True)
class FallingSum:
    k: int
    fmt: str = "plain"
    eval_at: Optional[int] = None


@dataclass(frozen=True)
class Fib:
    n: int
    method: str = "doubling"


@dataclass(frozen=True)
class Geom:
    a0: Fraction
    r: Fraction
    n: int


@dataclass(frozen=True)
class Verify:
    dmax: int = VERIFY_DEFAULT_DMAX
    nmax: int = VERIFY_DEFAULT_NMAX
    as_json: bool = False


@dataclass(frozen=True)
class Bench:
    dmax: int = BENCH_DEFAULT_DMAX
    as_json: bool = False


Command = Union[PowerSum, FallingSum, Fib, Geom, Verify, Bench]

_NAT = re.compile(r"^\d+$")


def _nat(token: str, what: str) -> int:
    if not _NAT.match(token):
        raise UsageError(f"{what} must be a non-negative integer, got {token!r}")
    return int(token)


def _rat(token: str, what: str) -> Fraction:
    try:
        return parse_rational(token)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{what} must be a rational p or p/q, got {token!r}") from None


def _choice(token: str, options: Sequence[str], what: str) -> str:
    if token not in options:
        raise UsageError(f"unknown {what} {token!r}; expected one of {', '.join(options)}")
    return token


def _split(argv: Sequence[str], valued: set[str], flags: set[str]) -> tuple[list[str], dict[str, str]]:
    """Separate positionals from ``--opt value`` / ``--opt=value`` / ``--flag``."""
    positional: list[str] = []
    opts: dict[str, str] = {}
    it = iter(argv)
    for tok in it:
        if tok in ("-h", "--help"):
            raise HelpRequested
        # negative rationals are positionals, not options
        if tok.startswith("-") and not re.match(r"^-\d", tok):
            name, eq, val = tok.partition("=")
            if name in flags and not eq:
                opts[name] = ""
            elif name in valued:
                if not eq:
                    val = next(it, None)
                    if val is None:
                        raise UsageError(f"option {name} requires a value")
                opts[name] = val
            else:
                raise UsageError(f"unknown option {tok!r}")
        else:
            positional.append(tok)
    return positional, opts


def _arity(cmd: str, positional: list[str], expected: int) -> None:
    if len(positional) != expected:
        extra = positional[expected:] if len(positional) > expected else None
        if extra:
            raise UsageError(f"{cmd}: unexpected argument {extra[0]!r}")
        raise UsageError(f"{cmd}: expected {expected} positional argument(s), got {len(positional)}")


def parse_args(argv: Sequence[str]) -> Command:
    """Parse ``argv`` (without the program name) into a command object."""
    if not argv:
        raise UsageError("missing subcommand")
    cmd, rest = argv[0], list(argv[1:])
    if cmd in ("-h", "--help", "help"):
        raise HelpRequested

    if cmd == "powersum":
        pos, opts = _split(rest, {"--method", "--format", "--eval"}, set())
        _arity(cmd, pos, 1)
        method = _choice(opts.get("--method", "lhopital"), [*METHOD_NAMES, "all"], "method")
        fmt = _choice(opts.get("--format", "plain"), FORMATS, "format")
        at = _nat(opts["--eval"], "--eval") if "--eval" in opts else None
        return PowerSum(_nat(pos[0], "d"), method, fmt, at)
    if cmd == "fallingsum":
        pos, opts = _split(rest, {"--format", "--eval"}, set())
        _arity(cmd, pos, 1)
        fmt = _choice(opts.get("--format", "plain"), FORMATS, "format")
        at = _nat(opts["--eval"], "--eval") if "--eval" in opts else None
        return FallingSum(_nat(pos[0], "k"), fmt, at)
    if cmd == "fib":
        pos, opts = _split(rest, {"--method"}, set())
        _arity(cmd, pos, 1)
        return Fib(_nat(pos[0], "n"), _choice(opts.get("--method", "doubling"), FIB_METHODS, "method"))
    if cmd == "geom":
        pos, _ = _split(rest, set(), set())
        _arity(cmd, pos, 3)
        return Geom(_rat(pos[0], "a0"), _rat(pos[1], "r"), _nat(pos[2], "n"))
    if cmd == "verify":
        pos, opts = _split(rest, {"--dmax", "--nmax"}, {"--json"})
        _arity(cmd, pos, 0)
        return Verify(
            _nat(opts.get("--dmax", str(VERIFY_DEFAULT_DMAX)), "--dmax"),
            _nat(opts.get("--nmax", str(VERIFY_DEFAULT_NMAX)), "--nmax"),
            "--json" in opts,
        )
    if cmd == "bench":
        pos, opts = _split(rest, {"--dmax"}, {"--json"})
        _arity(cmd, pos, 0)
        return Bench(_nat(opts.get("--dmax", str(BENCH_DEFAULT_DMAX)), "--dmax"), "--json" in opts)
    raise UsageError(f"unknown subcommand {cmd!r}")


def to_argv(command: Command) -> list[str]:
    """Inverse of :func:`parse_args`."""
    if isinstance(command, PowerSum):
        argv = ["powersum", str(command.d), "--method", command.method, "--format", command.fmt]
        return argv + (["--eval", str(command.eval_at)] if command.eval_at is not None else [])
    if isinstance(command, FallingSum):
        argv = ["fallingsum", str(command.k), "--format", command.fmt]
        return argv + (["--eval", str(command.eval_at)] if command.eval_at is not None else [])
    if isinstance(command, Fib):
        return ["fib", str(command.n), "--method", command.method]
    if isinstance(command, Geom):
        return ["geom", format_rational(command.a0), format_rational(command.r), str(command.n)]
    if isinstance(command, Verify):
        argv = ["verify", "--dmax", str(command.dmax), "--nmax", str(command.nmax)]
        return argv + (["--json"] if command.as_json else [])
    if isinstance(command, Bench):
        return ["bench", "--dmax", str(command.dmax)] + (["--json"] if command.as_json else [])
    raise TypeError(f"not a command: {command!r}")


# -- verification -----------------------------------------------------------


@dataclass
class DegreeRecord:
    d: int
    polynomial: Optional[Polynomial] = None
    agree: dict[str, bool] = field(default_factory=dict)
    oracle_ok: bool = False
    # None: not applicable (d = 0)
    degree_ok: Optional[bool] = None
    leading_ok: Optional[bool] = None
    constant_ok: Optional[bool] = None
    elapsed_micros: dict[str, int] = field(default_factory=dict)
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        shape = (self.degree_ok, self.leading_ok, self.constant_ok)
        return (
            self.error is None
            and bool(self.agree)
            and all(self.agree.values())
            and self.oracle_ok
            and all(f is not False for f in shape)
        )

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "polynomial": polynomial_to_json(self.polynomial) if self.polynomial is not None else None,
            "agree": self.agree,
            "oracle_ok": self.oracle_ok,
            "degree_ok": self.degree_ok,
            "leading_ok": self.leading_ok,
            "constant_ok": self.constant_ok,
            "elapsed_micros": self.elapsed_micros,
            "error": self.error,
            "passed": self.passed,
        }


@dataclass
class VerifyReport:
    dmax: int
    nmax: int
    records: list[DegreeRecord]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.passed else EXIT_FAIL

    def to_json(self) -> dict:
        return {
            "dmax": self.dmax,
            "nmax": self.nmax,
            "passed": self.passed,
            "records": [r.to_json() for r in self.records],
        }

    def render_text(self) -> str:
        lines = [f"verify dmax={self.dmax} nmax={self.nmax}"]
        for r in self.records:
            status = "PASS" if r.passed else "FAIL"
            if r.error is not None:
                lines.append(f"d={r.d:<3} {status}  error: {r.error}")
                continue
            disagree = [m for m, ok in r.agree.items() if not ok]
            shape = "n/a" if r.degree_ok is None else (
                "ok" if (r.degree_ok and r.leading_ok and r.constant_ok) else "BAD"
            )
            lines.append(
                f"d={r.d:<3} {status}  methods={'agree' if not disagree else 'DISAGREE ' + ','.join(disagree)}"
                f"  oracle={'ok' if r.oracle_ok else 'BAD'}  shape={shape}"
                f"  p = {format_polynomial(r.polynomial)}"
            )
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def verify_degree(d: int, nmax: int) -> DegreeRecord:
    rec = DegreeRecord(d)
    try:
        results = {}
        for tag in MethodTag:
            t0 = time.perf_counter_ns()
            results[CLI_NAME[tag]] = power_sum(d, tag)
            rec.elapsed_micros[CLI_NAME[tag]] = (time.perf_counter_ns() - t0) // 1000
        ref = results["lhopital"]
        rec.polynomial = ref
        rec.agree = {name: p == ref for name, p in results.items()}
        rec.oracle_ok = all(ref.eval(n) == brute_force_power_sum(d, n) for n in range(nmax + 1))
        if d >= 1:
            rec.degree_ok = ref.degree == d + 1
            rec.leading_ok = ref.leading_coefficient() == Fraction(1, d + 1)
            rec.constant_ok = ref[0] == 0
    except Exception as exc:  # reported, fails the run
        rec.error = f"{type(exc).__name__}: {exc}"
    return rec


def run_verify(dmax: int, nmax: int) -> VerifyReport:
    if dmax < 0 or nmax < 0:
        raise ValueError("dmax and nmax must be non-negative")
    return VerifyReport(dmax, nmax, [verify_degree(d, nmax) for d in range(dmax + 1)])


# -- benchmark --------------------------------------------------------------


def bench_records(dmax: int) -> list[dict]:
    records = []
    for d in range(dmax + 1):
        for tag in MethodTag:
            t0 = time.perf_counter_ns()
            power_sum(d, tag)
            micros = (time.perf_counter_ns() - t0) // 1000
            records.append({"d": d, "method": CLI_NAME[tag], "micros": micros})
    return records


def run_bench(dmax: int, fmt: str = "text") -> str:
    """Wall-time of each method for ``d = 0..dmax`` as a text table or JSON array."""
    if dmax < 0:
        raise ValueError("dmax must be non-negative")
    records = bench_records(dmax)
    if fmt == "json":
        return json.dumps(records)
    if fmt != "text":
        raise ValueError(f"unknown bench format {fmt!r}")
    names = [CLI_NAME[t] for t in MethodTag]
    width = max(len(n) for n in names) + 2
    lines = ["d".rjust(4) + "".join(n.rjust(width) for n in names) + "   (microseconds)"]
    by_d: dict[int, dict[str, int]] = {}
    for r in records:
        by_d.setdefault(r["d"], {})[r["method"]] = r["micros"]
    for d in sorted(by_d):
        lines.append(str(d).rjust(4) + "".join(str(by_d[d][n]).rjust(width) for n in names))
    return "\n".join(lines)


# -- execution --------------------------------------------------------------


def _render_poly_or_value(p: Polynomial, fmt: str, at: Optional[int]) -> str:
    if at is None:
        return format_polynomial(p, fmt)
    value = p.eval(at)
    if fmt == "json":
        return json.dumps({"n": at, "value": format_rational(value, strict=True)})
    return format_rational(value)


def _run_powersum(cmd: PowerSum, out) -> int:
    if cmd.method != "all":
        p = power_sum(cmd.d, METHOD_NAMES[cmd.method])
        print(_render_poly_or_value(p, cmd.fmt, cmd.eval_at), file=out)
        return EXIT_OK
    results = {name: power_sum(cmd.d, tag) for name, tag in METHOD_NAMES.items()}
    ref = results["lhopital"]
    disagree = [name for name, p in results.items() if p != ref]
    if disagree:
        for name, p in results.items():
            print(f"{name}: {format_polynomial(p)}", file=sys.stderr)
        print(f"error: methods disagree: {', '.join(disagree)}", file=sys.stderr)
        return EXIT_FAIL
    if cmd.fmt == "json":
        obj = json.loads(_render_poly_or_value(ref, "json", cmd.eval_at))
        obj["methods_agree"] = list(results)
        print(json.dumps(obj), file=out)
    else:
        print(_render_poly_or_value(ref, cmd.fmt, cmd.eval_at), file=out)
        print(f"methods agree: {', '.join(results)}", file=out)
    return EXIT_OK


def execute(cmd: Command, out=None) -> int:
    out = sys.stdout if out is None else out
    if isinstance(cmd, PowerSum):
        return _run_powersum(cmd, out)
    if isinstance(cmd, FallingSum):
        print(_render_poly_or_value(falling_power_sum_poly(cmd.k), cmd.fmt, cmd.eval_at), file=out)
    elif isinstance(cmd, Fib):
        print(fib_doubling(cmd.n) if cmd.method == "doubling" else fib_binet(cmd.n), file=out)
    elif isinstance(cmd, Geom):
        print(format_rational(geometric_sum(cmd.a0, cmd.r, cmd.n)), file=out)
    elif isinstance(cmd, Verify):
        report = run_verify(cmd.dmax, cmd.nmax)
        print(json.dumps(report.to_json()) if cmd.as_json else report.render_text(), file=out)
        return report.exit_code
    elif isinstance(cmd, Bench):
        print(run_bench(cmd.dmax, "json" if cmd.as_json else "text"), file=out)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cmd = parse_args(argv)
    except HelpRequested:
        print("usage:\n" + USAGE, file=sys.stdout)
        print(f"\nverify defaults: --dmax {VERIFY_DEFAULT_DMAX} --nmax {VERIFY_DEFAULT_NMAX}; "
              f"bench default: --dmax {BENCH_DEFAULT_DMAX}")
        return EXIT_OK
    except UsageError as exc:
        print(f"error: {exc}\nusage:\n{USAGE}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return execute(cmd)
    except Exception as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
