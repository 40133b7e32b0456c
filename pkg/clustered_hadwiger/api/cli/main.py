"""
Command-Line Interface

Subcommands for coloring, connectivity, separations, contraction, minors and
the tightness construction. Every run prints one JSON document to stdout;
logs go to stderr.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Tuple, Type

from pydantic import ValidationError

from ...application.use_cases.build_watkins import BuildWatkinsUseCase
from ...application.use_cases.check_connectivity import CheckConnectivityUseCase
from ...application.use_cases.contract_graph import ContractGraphUseCase
from ...application.use_cases.find_minor import FindMinorUseCase
from ...application.use_cases.find_separation import FindSeparationUseCase
from ...application.use_cases.generate_instance import GenerateInstanceUseCase
from ...application.use_cases.partition_graph import PartitionGraphUseCase
from ...application.use_cases.verify_result import KINDS, VerifyResultUseCase
from ...config import LOG_LEVELS, Settings
from ...domain.errors import (
    AdjacentPair,
    BudgetExceeded,
    CaseIVFailure,
    ColoringNotVerified,
    DocumentError,
    GraphParseError,
    HadwigerError,
    InvalidGraph,
    InvalidLists,
    InvalidParams,
    InvalidSeparation,
    InvariantBroken,
    NoEdgeFound,
    NotAnEdge,
    PreconditionViolated,
    ResultNotConnectedEnough,
    UnknownVertex,
    UsageError,
)
from ...infrastructure.documents.result_document import ErrorDocument, ResultDocument
from ...infrastructure.generators.random_graphs import FAMILIES
from ...infrastructure.parsers.graph_parser import GraphParser

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_PRECONDITION = 4
EXIT_BUDGET = 5
EXIT_INTERNAL = 6

EXIT_CODES: Tuple[Tuple[Type[HadwigerError], int], ...] = (
    (UsageError, EXIT_USAGE),
    (GraphParseError, EXIT_PARSE),
    (DocumentError, EXIT_PARSE),
    (BudgetExceeded, EXIT_BUDGET),
    (InvariantBroken, EXIT_INTERNAL),
    (ColoringNotVerified, EXIT_INTERNAL),
    (PreconditionViolated, EXIT_PRECONDITION),
    (NoEdgeFound, EXIT_PRECONDITION),
    (ResultNotConnectedEnough, EXIT_PRECONDITION),
    (CaseIVFailure, EXIT_PRECONDITION),
    (InvalidLists, EXIT_PRECONDITION),
    (InvalidParams, EXIT_PRECONDITION),
    (InvalidSeparation, EXIT_PRECONDITION),
    (AdjacentPair, EXIT_PRECONDITION),
    (UnknownVertex, EXIT_PRECONDITION),
    (NotAnEdge, EXIT_PRECONDITION),
    (InvalidGraph, EXIT_PRECONDITION),
)


def exit_code_for(error: HadwigerError) -> int:
    for error_type, code in EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return EXIT_INTERNAL


class _ArgumentParser(argparse.ArgumentParser):
    """Raise instead of exiting so usage errors become error documents."""

    def error(self, message: str):
        raise UsageError(message, {"usage": self.format_usage().strip()})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--log-level", default="WARNING", choices=LOG_LEVELS)
    common.add_argument("--budget", type=int, default=None, help="minor-search node budget")

    parser = _ArgumentParser(
        prog="clustered-hadwiger",
        description="Clustered coloring, contraction to high connectivity and clique minors.",
    )
    commands = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    commands.required = True

    partition = commands.add_parser("partition", parents=[common], help="clustered list coloring")
    partition.add_argument("--t", type=int, required=True)
    partition.add_argument("--capacity", type=int, required=True)
    partition.add_argument("--precolor", default=None, help="file of '<vertex> <color>' lines")
    partition.add_argument("--lists", default=None, help="file of '<vertex> <color> ...' lines")
    partition.add_argument("--no-audit", action="store_true", help="skip the witness minor search")
    partition.add_argument("input")

    connectivity = commands.add_parser("connectivity", parents=[common], help="k-connectivity")
    connectivity.add_argument("--k", type=int, required=True)
    connectivity.add_argument("input")

    separation = commands.add_parser("separation", parents=[common], help="Z-good separation")
    separation.add_argument("--t", type=int, required=True)
    separation.add_argument("--z", default="", help="comma-separated vertices")
    separation.add_argument("input")

    contract = commands.add_parser("contract", parents=[common], help="contract to k-connected")
    contract.add_argument("--k", type=int, required=True)
    contract.add_argument("--z", required=True, help="comma-separated vertices")
    contract.add_argument("input")

    minor = commands.add_parser("minor", parents=[common], help="clique-minor search")
    minor.add_argument("--t", type=int, required=True)
    minor.add_argument("--hadwiger", action="store_true", help="also bound the Hadwiger number")
    minor.add_argument("input")

    watkins = commands.add_parser("watkins", parents=[common], help="tightness instance")
    watkins.add_argument("--k", type=int, required=True)
    watkins.add_argument("--n", type=int, required=True)
    watkins.add_argument("-o", "--output", default=None)

    verify = commands.add_parser("verify", parents=[common], help="re-check a result document")
    verify.add_argument("--kind", required=True, choices=sorted(KINDS))
    verify.add_argument("result")
    verify.add_argument("input", nargs="?", default=None)

    generate = commands.add_parser("generate", parents=[common], help="seeded random instance")
    generate.add_argument("--family", required=True, choices=FAMILIES)
    generate.add_argument("--n", type=int, required=True)
    generate.add_argument("--seed", type=int, required=True)
    generate.add_argument("--p", type=float, default=0.3, help="edge probability for gnp")
    generate.add_argument("--k", type=int, default=4, help="connectivity for hope")
    generate.add_argument("--z-size", type=int, default=2, help="|Z| for hope")
    generate.add_argument("-o", "--output", default=None)

    return parser


def _settings(args: argparse.Namespace) -> Settings:
    overrides = {"log_level": args.log_level}
    if args.budget is not None:
        overrides.update(minor_budget=args.budget, audit_budget=args.budget)
    try:
        return Settings(**overrides)
    except ValidationError as exc:
        raise UsageError("invalid settings", {"errors": [e["msg"] for e in exc.errors()]}) from exc


def _configure_logging(level: str) -> None:
    root = logging.getLogger("clustered_hadwiger")
    root.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(level)
    root.propagate = False


def _dispatch(args: argparse.Namespace, settings: Settings) -> ResultDocument:
    parser = GraphParser()
    handlers: Dict[str, Callable[[], ResultDocument]] = {
        "partition": lambda: PartitionGraphUseCase(parser, settings).execute(
            args.input, args.t, args.capacity, args.precolor, args.lists, not args.no_audit
        ),
        "connectivity": lambda: CheckConnectivityUseCase(parser).execute(args.input, args.k),
        "separation": lambda: FindSeparationUseCase(parser).execute(args.input, args.t, args.z),
        "contract": lambda: ContractGraphUseCase(parser).execute(args.input, args.k, args.z),
        "minor": lambda: FindMinorUseCase(parser, settings).execute(
            args.input, args.t, settings.minor_budget, args.hadwiger
        ),
        "watkins": lambda: BuildWatkinsUseCase(parser).execute(args.k, args.n, args.output),
        "verify": lambda: VerifyResultUseCase(parser, settings).execute(
            args.kind, args.result, args.input
        ),
        "generate": lambda: GenerateInstanceUseCase(parser).execute(
            args.family, args.n, args.seed, args.output, args.p, args.k, args.z_size
        ),
    }
    return handlers[args.command]()


def _fail(command: str, error: HadwigerError, code: int) -> int:
    document = ErrorDocument(
        command=command,
        error=error.kind,
        message=error.message,
        witness=error.witness,
        exit_code=code,
    )
    print(document.to_json())
    return code


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; returns the process exit code."""
    raw = list(sys.argv[1:] if argv is None else argv)
    command = next((a for a in raw if not a.startswith("-")), "")
    try:
        args = build_parser().parse_args(raw)
        settings = _settings(args)
    except UsageError as exc:
        return _fail(command, exc, EXIT_USAGE)

    _configure_logging(settings.log_level)
    logger.info("%s started", args.command)
    try:
        document = _dispatch(args, settings)
    except HadwigerError as exc:
        code = exit_code_for(exc)
        logger.warning("%s failed: %s", args.command, exc.message)
        return _fail(args.command, exc, code)
    except OSError as exc:
        error = GraphParseError(0, f"cannot read input: {exc}")
        return _fail(args.command, error, EXIT_PARSE)

    print(document.to_json())
    logger.info(
        "%s finished: outcome=%s digest=%s verified=%s",
        args.command,
        document.outcome,
        document.input_digest or "-",
        document.verification.ok,
    )
    return EXIT_OK if document.verification.ok else EXIT_VERIFICATION_FAILED


def run() -> None:
    sys.exit(main())
