"""Command-line interface.

Exit status: 0 on success, 1 on domain or usage errors (message on
stderr), 2 when a verification suite finds a counterexample.
"""
import argparse
import json
import sys

from . import config, expr, symfunc
from .birig import antipode, coaddition, comultiplication, verify_birig_axioms
from .characters import char_table, kronecker_coeff
from .errors import LambdaRingError
from .oracle import schur_image_dim
from .partitions import parse_partition
from .plethysm import adams, plethysm, verify_plethory

DEFAULT_MAX_DEGREE = {"birig": 8, "plethory": 6}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--basis", choices=symfunc.BASES, default="s", help="basis for results (default s)")
    common.add_argument("--cap", type=int, default=None, help=f"degree cap (default ${config.ENV_VAR} or {config.DEFAULT_CAP})")
    return common


def build_parser():
    common = _common()
    parser = _Parser(prog="lambdaring", description="Exact symmetric functions, plethysm and biring structure.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("convert", parents=[common], help="rewrite an expression in --basis")
    p.add_argument("expr")
    for verb in ("add", "mul", "plethysm"):
        p = sub.add_parser(verb, parents=[common])
        p.add_argument("left")
        p.add_argument("right")
    p = sub.add_parser("adams", parents=[common])
    p.add_argument("n", type=int)
    p.add_argument("expr")
    p = sub.add_parser("coprod", parents=[common], help="coaddition or comultiplication")
    p.add_argument("--kind", choices=("add", "mul"), required=True)
    p.add_argument("expr")
    p = sub.add_parser("antipode", parents=[common])
    p.add_argument("expr")
    p = sub.add_parser("eval", parents=[common], help="specialize to d ones, or p_n -> given values")
    p.add_argument("expr")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--dim", type=int)
    group.add_argument("--phi", help="comma-separated values of p_1, p_2, ...")
    p = sub.add_parser("char", parents=[common])
    p.add_argument("--n", type=int, required=True)
    for verb in ("lr", "kronecker"):
        p = sub.add_parser(verb, parents=[common])
        for name in ("first", "second", "third"):
            p.add_argument(name, type=parse_partition)
    p = sub.add_parser("schur-dim", parents=[common])
    p.add_argument("--shape", type=parse_partition, required=True)
    p.add_argument("--dim", type=int, required=True)
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--suite", choices=("birig", "plethory"), required=True)
    p.add_argument("--max-degree", type=int, default=None)
    return parser


def _emit(args, text, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _sym(args, f):
    f = f.to_basis(args.basis)
    _emit(args, str(f), expr.symfunc_to_json(f))


def _tensor(args, t):
    t = t.to_bases(args.basis)
    _emit(args, str(t), expr.tensor_to_json(t))


def _scalar(args, value):
    _emit(args, symfunc.format_coeff(value), expr.scalar_to_json(value))


def _phi_values(text):
    values = [symfunc.Fraction(v.strip()) for v in text.split(",") if v.strip()]
    return {i + 1: v for i, v in enumerate(values)}


def run(args):
    """Execute parsed arguments; returns the exit status."""
    cap = args.cap if args.cap is not None else config.get_cap()
    parse = lambda src: expr.parse_expression(src, cap=cap)  # noqa: E731
    verb = args.verb
    with config.degree_cap(cap):
        if verb == "convert":
            _sym(args, parse(args.expr))
        elif verb == "add":
            _sym(args, symfunc.add(parse(args.left), parse(args.right)))
        elif verb == "mul":
            _sym(args, symfunc.mul(parse(args.left), parse(args.right)))
        elif verb == "plethysm":
            _sym(args, plethysm(parse(args.left), parse(args.right)))
        elif verb == "adams":
            _sym(args, adams(args.n, parse(args.expr)))
        elif verb == "coprod":
            op = coaddition if args.kind == "add" else comultiplication
            _tensor(args, op(parse(args.expr)))
        elif verb == "antipode":
            _sym(args, antipode(parse(args.expr)))
        elif verb == "eval":
            f = parse(args.expr)
            if args.dim is not None:
                _scalar(args, symfunc.eval_principal(f, args.dim))
            else:
                _scalar(args, symfunc.eval_adams(f, _phi_values(args.phi)))
        elif verb == "char":
            table = char_table(args.n, cap=cap)
            _emit(args, table.format(), table.to_json())
        elif verb == "lr":
            _scalar(args, symfunc.lr_coeff(args.first, args.second, args.third))
        elif verb == "kronecker":
            _scalar(args, kronecker_coeff(args.first, args.second, args.third))
        elif verb == "schur-dim":
            rank = schur_image_dim(args.shape, args.dim)
            hook = symfunc.principal_schur(args.shape, args.dim)
            text = f"rank {rank}  hook-content {symfunc.format_coeff(hook)}"
            _emit(args, text, {"shape": list(args.shape), "dim": args.dim, "rank": str(rank), "hook_content": symfunc.format_coeff(hook)})
        elif verb == "verify":
            max_degree = args.max_degree if args.max_degree is not None else DEFAULT_MAX_DEGREE[args.suite]
            if args.suite == "birig":
                report = verify_birig_axioms(max_degree, cap=cap)
            else:
                report = verify_plethory(max_degree, cap=cap)
            _emit(args, report.format(), report.to_json())
            return 0 if report.passed else 2
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except LambdaRingError as exc:
        print(f"lambdaring: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
