"""Command-line front end.

Operands are inline matrices (``"1 2; 3 4"`` or a JSON document) or ``@path``
to read a file (``@-`` for stdin).  Output is exact unless ``--decimal`` or
``--precision`` is given.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 domain error,
4 a verification suite failed.
"""
import argparse
import json
import sys
import time

from . import equivalence as eq
from . import quotient as q
from .errors import DomainError, ParseError
from .matrix import kron
from .matrixio import format_matrix, load_matrix, to_document
from .projection import project
from .stp import stp
from .suites import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3, 4
DEFAULT_PRECISION = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class _Out:
    """Collects labelled results and renders them as text or JSON."""

    def __init__(self, fmt):
        self.fmt = fmt
        self.items = []

    def matrix(self, key, m):
        self.items.append((key, m))

    def value(self, key, v):
        self.items.append((key, v))

    def render(self):
        if self.fmt == "structured":
            return json.dumps(self._document(), indent=None)
        lines = []
        for key, v in self.items:
            if hasattr(v, "entries"):
                lines.append(f"{key}:" if key else "")
                lines.append(format_matrix(v))
            elif isinstance(v, bool):
                lines.append(f"{key}: {str(v).lower()}")
            else:
                lines.append(f"{key}: {v}")
        return "\n".join(line for line in lines if line != "")

    def _document(self):
        doc = {}
        # the first matrix is promoted to the top level so the output parses back as a matrix
        primary = next((i for i, (_, v) in enumerate(self.items) if hasattr(v, "entries")), None)
        for i, (key, v) in enumerate(self.items):
            if hasattr(v, "entries"):
                if i == primary:
                    doc.update(to_document(v))
                    if key:
                        doc["name"] = key
                else:
                    doc[key] = to_document(v)
            elif isinstance(v, (bool, int)):
                doc[key] = v
            else:
                doc[key] = str(v)
        return doc


def _common(p, default=None):
    # subcommands use SUPPRESS so an unset flag does not clobber one given before the subcommand
    p.add_argument("--format", choices=("text", "structured"), default=default, help="output format (default text)")
    p.add_argument("--precision", type=int, default=default, metavar="N",
                   help=f"decimal places for norms and distances (implies --decimal; default {DEFAULT_PRECISION})")
    p.add_argument("--decimal", action="store_true", default=default, help="also print decimal norms/distances")


def build_parser():
    parser = _Parser(prog="crossdim", description="Exact semi-tensor product and cross-dimensional matrix algebra.")
    _common(parser)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def cmd(name, help_, operands):
        p = sub.add_parser(name, help=help_)
        for op in operands:
            p.add_argument(op, help="matrix literal or @file")
        _common(p, argparse.SUPPRESS)
        return p

    cmd("stp", "semi-tensor product A |x B", ["A", "B"])
    cmd("kron", "Kronecker product", ["A", "B"])
    cmd("root", "irreducible root and multiplicity", ["A"])
    cmd("equiv", "equivalence test with least common multiple and greatest common divisor", ["A", "B"])
    cmd("info", "shape ratio and component index", ["A"])
    cmd("add", "class sum, printed as a root", ["A", "B"])
    cmd("sub", "class difference, printed as a root", ["A", "B"])
    cmd("inner", "weighted inner product of the classes", ["A", "B"])
    cmd("norm", "class norm", ["A"])
    cmd("dist", "distance between classes", ["A", "B"])
    p = cmd("project", "orthogonal projection onto a component index", ["A"])
    p.add_argument("--target", type=int, required=True, metavar="ALPHA", help="target component index")
    p.add_argument("--residual", action="store_true", help="also print the lifted residual matrix")
    p = sub.add_parser("verify", help="run a randomized property suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--cases", type=int, default=None, help="override the number of random cases")
    p.add_argument("--seed", type=int, default=0)
    _common(p, argparse.SUPPRESS)
    return parser


def _emit_root(out, key, sq, args):
    out.value(f"{key}_sq", sq)
    exact = q.exact_sqrt(sq)
    if exact is not None:
        out.value(key, exact)
    elif args.decimal:
        out.value(key, q.sqrt_decimal(sq, args.precision))


def _dispatch(args, stdin):
    out = _Out(args.format)
    c = args.command
    if c == "verify":
        t0 = time.perf_counter()
        checks = run_suite(args.suite, args.cases, args.seed)
        ok = all(ch.passed for ch in checks)
        if args.format == "structured":
            print(json.dumps({"suite": args.suite, "passed": ok,
                              "checks": [{"name": ch.name, "passed": ch.passed, "detail": ch.detail} for ch in checks]}))
        else:
            for ch in checks:
                print(ch.line())
            print(f"suite {args.suite}: {'PASS' if ok else 'FAIL'} ({time.perf_counter() - t0:.2f}s)")
        return EXIT_OK if ok else EXIT_VERIFY

    a = load_matrix(args.A, stdin)
    b = load_matrix(args.B, stdin) if hasattr(args, "B") else None
    if c == "stp":
        out.matrix("", stp(a, b))
    elif c == "kron":
        out.matrix("", kron(a, b))
    elif c == "root":
        f = eq.root(a)
        out.matrix("root", f.divisor)
        out.value("multiplicity", f.multiplicity)
    elif c == "equiv":
        th = eq.theta(a, b)
        out.value("equivalent", th is not None)
        if th is not None:
            out.matrix("theta", th)
            out.matrix("lambda", eq.lambda_gcd(a, b))
    elif c == "info":
        mu, k = eq.classify(a)
        f = eq.root(a)
        out.value("shape", f"{a.rows}x{a.cols}")
        out.value("mu", mu)
        out.value("index", k)
        out.value("root_index", k // f.multiplicity)
    elif c in ("add", "sub"):
        r = q.class_add(a, b) if c == "add" else q.class_sub(a, b)
        out.matrix("root", r.root)
    elif c == "inner":
        out.value("inner", q.class_inner(a, b))
    elif c == "norm":
        _emit_root(out, "norm", q.norm_sq(a), args)
    elif c == "dist":
        _emit_root(out, "dist", q.distance_sq(a, b), args)
    elif c == "project":
        if args.target < 1:
            raise DomainError(f"project: --target must be a positive integer, got {args.target}")
        r = project(a, args.target)
        out.matrix("projection", r.projection.root)
        out.value("target_index", r.target_index)
        out.value("lift_index", r.lift_index)
        out.value("block_size", r.block_size)
        _emit_root(out, "distance", r.distance_sq_to_target, args)
        if args.residual:
            out.matrix("residual", r.residual_lift)
    print(out.render())
    return EXIT_OK


def _resolve_globals(args):
    if args.format is None:
        args.format = "text"
    if args.precision is not None:
        if args.precision < 0:
            raise UsageError("--precision must be nonnegative")
        args.decimal = True
    else:
        args.precision = DEFAULT_PRECISION
    args.decimal = bool(args.decimal)


def run(argv=None, stdin=None):
    """Run the CLI, returning the exit code."""
    parser = build_parser()
    stdin = sys.stdin if stdin is None else stdin
    try:
        args = parser.parse_args(argv)
        _resolve_globals(args)
        return _dispatch(args, stdin)
    except SystemExit as exc:
        # --help
        return exc.code or EXIT_OK
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
