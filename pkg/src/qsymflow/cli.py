"""
Command-line front end.

    qsymflow expand "D[2,1]" --to M
    qsymflow mul "M[1]" "M[1]" --check-oracle
    qsymflow comul "G[1,2,1]"
    qsymflow verify scf-morphism --nu 2 --nu 3 --max-grade 4
    qsymflow table wt --n 4

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

import argparse
import logging
from typing import List, Optional

from pydantic import ValidationError

from .BaseBasis import set_log_level, setup_logger
from .exceptions import QSymError
from .load_suite import load_suite, suite_names
from .oracle import oracle_diffs, oracle_product
from .qsym import BASIS_NAMES, BasisTag, antipode, comul, convert, mul, specialize, to_M
from .render import as_json, render_element, render_suite, render_table, render_tensor
from .schemas import QSymConfig
from .syntax import parse_element, parse_point
from .tables import TABLE_KINDS, transition_table

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

logger = setup_logger("qsymflow")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["text", "json"], default=None, help="Output format (default: text).")
    common.add_argument("--config", default=None, help="JSON/JSON5/YAML config file (default: $QSYM_CONFIG).")
    common.add_argument("--nu", type=int, action="append", default=None, help="Value of ν. Repeatable.")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr.")
    return common


def _algebra(common: argparse.ArgumentParser) -> argparse.ArgumentParser:
    algebra = argparse.ArgumentParser(add_help=False, parents=[common])
    algebra.add_argument("--basis", choices=BASIS_NAMES, default=None, help="Basis whose rule is applied.")
    algebra.add_argument("--at", default=None, help="Specialize the result at q=<rat>,t=<rat>.")
    return algebra


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsymflow", description="Quasisymmetric functions over Q(q, t).")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()
    algebra = _algebra(common)

    expand = sub.add_parser("expand", parents=[common], help="Rewrite an element in another basis.")
    expand.add_argument("element")
    expand.add_argument("--to", choices=BASIS_NAMES, required=True)
    expand.add_argument("--at", default=None, help="Specialize the result at q=<rat>,t=<rat>.")

    product = sub.add_parser("mul", parents=[algebra], help="Multiply two elements.")
    product.add_argument("left")
    product.add_argument("right")
    product.add_argument("--check-oracle", action="store_true", help="Cross-check against polynomial multiplication.")
    product.add_argument("--oracle-vars", type=int, default=None)

    for name, text in (("comul", "Coproduct of an element."), ("antipode", "Antipode of an element.")):
        one = sub.add_parser(name, parents=[algebra], help=text)
        one.add_argument("element")

    verify = sub.add_parser("verify", parents=[common], help="Run a verification suite.")
    verify.add_argument("suite", help=f"One of {', '.join(suite_names())}.")
    verify.add_argument("--max-grade", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--cases", type=int, default=None, help="Random cases per ν.")
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--oracle-vars", type=int, default=None)

    table = sub.add_parser("table", parents=[common], help="Print a weight table or transition matrix.")
    table.add_argument("kind", choices=TABLE_KINDS)
    table.add_argument("--n", type=int, required=True)
    return parser


def _config(args: argparse.Namespace) -> QSymConfig:
    config = QSymConfig(args.config)
    return config.merge({
        "output": args.output,
        "nus": args.nu,
        "max_grade": getattr(args, "max_grade", None),
        "seed": getattr(args, "seed", None),
        "cases": getattr(args, "cases", None),
        "workers": getattr(args, "workers", None),
        "oracle_vars": getattr(args, "oracle_vars", None),
    })


def _tag(name: str, config: QSymConfig) -> BasisTag:
    return BasisTag(name=name, nu=config.nus[0] if name == "K" else None)


def _specialized(x, at: Optional[str]):
    if not at:
        return x
    point = parse_point(at)
    return specialize(x, point.get("q"), point.get("t"))


def _emit(x, config: QSymConfig, label: str = "") -> None:
    if config.output == "json":
        print(as_json(x))
    elif hasattr(x, "left"):
        print(render_tensor(x, label))
    else:
        print(render_element(x, label))


def cmd_expand(args, config) -> int:
    x = parse_element(args.element)
    y = _specialized(convert(x, _tag(args.to, config)), args.at)
    _emit(y, config)
    return EXIT_OK


def cmd_mul(args, config) -> int:
    x, y = parse_element(args.left), parse_element(args.right)
    if args.basis:
        tag = _tag(args.basis, config)
        x, y = convert(x, tag), convert(y, tag)
    result = mul(x, y)
    if args.check_oracle:
        diffs = oracle_diffs(to_M(result), oracle_product(x, y, config.oracle_vars))
        if diffs:
            logger.error(f"product rule of {result.basis} disagrees with the oracle on {len(diffs)} compositions")
            for d in diffs:
                print(d.model_dump_json() if config.output == "json" else f"{d.comp}: rule {d.rule} | oracle {d.oracle}")
            return EXIT_FAILED
        logger.info("product rule agrees with the oracle")
    _emit(_specialized(result, args.at), config)
    return EXIT_OK


def cmd_comul(args, config) -> int:
    x = parse_element(args.element)
    if args.basis:
        x = convert(x, _tag(args.basis, config))
    _emit(_specialized(comul(x), args.at), config)
    return EXIT_OK


def cmd_antipode(args, config) -> int:
    x = parse_element(args.element)
    if args.basis:
        x = convert(x, _tag(args.basis, config))
    _emit(_specialized(antipode(x), args.at), config)
    return EXIT_OK


def cmd_verify(args, config) -> int:
    result = load_suite(args.suite).run_suite(config)
    print(as_json(result) if config.output == "json" else render_suite(result))
    return EXIT_OK if result.passed else EXIT_FAILED


def cmd_table(args, config) -> int:
    table = transition_table(args.kind, args.n, args.nu[0] if args.nu else None)
    print(as_json(table) if config.output == "json" else render_table(table))
    return EXIT_OK


COMMANDS = {
    "expand": cmd_expand,
    "mul": cmd_mul,
    "comul": cmd_comul,
    "antipode": cmd_antipode,
    "verify": cmd_verify,
    "table": cmd_table,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    set_log_level(logging.DEBUG if args.verbose else logging.INFO)
    try:
        config = _config(args)
        return COMMANDS[args.command](args, config)
    except ValidationError as e:
        logger.error(f"invalid configuration or input: {e.error_count()} errors")
        logger.error(str(e))
        return EXIT_USAGE
    except (QSymError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
