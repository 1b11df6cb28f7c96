"""Command-line front end: ``crlab <command> ...``."""
from __future__ import annotations

import argparse
import logging
import sys
import time
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from crlab.cli.manager import CRLabManager
from crlab.cli.schemas import (
    ChainInput,
    ClassifyInput,
    GradeInput,
    PresetInput,
    ProlongInput,
    RealizeInput,
    Report,
    SymmetriesInput,
    ValidateInput,
)
from crlab.config import Settings
from crlab.errors import CRLabError, UsageError, jsonable
from crlab.lie.presets import preset_names

logger = logging.getLogger(__name__)


def validate_schema(config: ValidateInput, manager: CRLabManager) -> dict:
    return manager.validate(config.algebra)


def chain_schema(config: ChainInput, manager: CRLabManager) -> dict:
    if config.kind == "contact":
        if config.l is None:
            raise UsageError("chain contact needs --l")
        return manager.chain_contact(config.algebra, config.l, config.h)
    if config.q is None:
        raise UsageError("chain cr needs --q")
    return manager.chain_cr(config.algebra, config.q)


def classify_schema(config: ClassifyInput, manager: CRLabManager) -> dict:
    return manager.classify(config.algebra, config.q)


def grade_schema(config: GradeInput, manager: CRLabManager) -> dict:
    return manager.grade(config.algebra, config.l, config.q)


def prolong_schema(config: ProlongInput, manager: CRLabManager) -> dict:
    return manager.prolong(config.algebra, config.l, config.q, config.g0, config.max_degree)


def realize_schema(config: RealizeInput, manager: CRLabManager) -> dict:
    return manager.realize(config.algebra, config.h, config.order, config.basis, config.complement)


def symmetries_schema(config: SymmetriesInput, manager: CRLabManager) -> dict:
    return manager.symmetries(config.algebra, config.h, config.l, config.q, config.order)


def preset_schema(config: PresetInput, manager: CRLabManager) -> dict:
    return manager.export_preset(config.name, config.out)


TOOLS: Dict[str, Tuple[type, Callable[[BaseModel, CRLabManager], dict]]] = {
    "validate": (ValidateInput, validate_schema),
    "chain": (ChainInput, chain_schema),
    "classify": (ClassifyInput, classify_schema),
    "grade": (GradeInput, grade_schema),
    "prolong": (ProlongInput, prolong_schema),
    "realize": (RealizeInput, realize_schema),
    "symmetries": (SymmetriesInput, symmetries_schema),
    "preset": (PresetInput, preset_schema),
}


def get_schema() -> dict:
    return {name: model.model_json_schema() for name, (model, _) in TOOLS.items()}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print the JSON report")
    common.add_argument("--timing", action="store_true", help="Add wall-clock time to the report")
    common.add_argument("--verbose", "-v", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="crlab",
        description="Exact computations for Lie algebras with contact and CR structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="Check the Jacobi identity")
    p.add_argument("algebra", help="Manifest path or preset:NAME[:PARAM]")

    p = sub.add_parser("chain", parents=[common], help="Contact filtration or CR chains")
    p.add_argument("kind", choices=["contact", "cr"])
    p.add_argument("algebra")
    p.add_argument("--l", help="Contact distribution l0")
    p.add_argument("--h", help="Isotropy h0")
    p.add_argument("--q", help="Complex subalgebra q")

    p = sub.add_parser("classify", parents=[common], help="Nondegeneracy flags of a CR algebra")
    p.add_argument("algebra")
    p.add_argument("--q", required=True)

    p = sub.add_parser("grade", parents=[common], help="Associated graded algebra")
    p.add_argument("algebra")
    p.add_argument("--l")
    p.add_argument("--q")

    p = sub.add_parser("prolong", parents=[common], help="Tanaka prolongation")
    p.add_argument("algebra")
    p.add_argument("--l")
    p.add_argument("--q")
    p.add_argument("--g0", choices=["graded", "all", "j-linear"])
    p.add_argument("--max-degree", dest="max_degree", type=int)

    p = sub.add_parser("realize", parents=[common], help="Star fields of a pair (g0, h0)")
    p.add_argument("algebra")
    p.add_argument("--h")
    p.add_argument("--order", type=int)
    p.add_argument("--basis", nargs="+")
    p.add_argument("--complement")

    p = sub.add_parser("symmetries", parents=[common], help="Truncated symmetry dimensions")
    p.add_argument("algebra")
    p.add_argument("--h")
    p.add_argument("--l")
    p.add_argument("--q")
    p.add_argument("--order", type=int)

    p = sub.add_parser("preset", parents=[common], help=f"Write a preset as manifests ({', '.join(preset_names())})")
    p.add_argument("name")
    p.add_argument("--out", required=True)
    return parser


def render(value, indent: int = 0) -> List[str]:
    """Plain-text tables for the human-readable mode."""
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _flat_list(item):
                lines.append(f"{pad}{key}:")
                lines.extend(render(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_inline(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and not _flat_list(item):
                lines.append(f"{pad}-")
                lines.extend(render(item, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(item)}")
    else:
        lines.append(f"{pad}{_inline(value)}")
    return lines


def _flat_list(item) -> bool:
    return isinstance(item, list) and all(not isinstance(x, (dict, list)) for x in item)


def _inline(item) -> str:
    if isinstance(item, list):
        return "[" + ", ".join(_inline(x) for x in item) + "]"
    if item is None:
        return "-"
    if isinstance(item, bool):
        return "yes" if item else "no"
    return str(item)


def run(argv: Optional[List[str]] = None, settings: Optional[Settings] = None) -> Tuple[Optional[Report], int]:
    """Parse, dispatch and print; returns the report and the exit code."""
    settings = settings or Settings.from_env()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return None, e.code if isinstance(e.code, int) else 2

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr)
    else:
        logging.basicConfig(level=getattr(logging, settings.log_level, logging.WARNING), stream=sys.stderr)

    model, handler = TOOLS[args.command]
    fields = {k: v for k, v in vars(args).items() if k in model.model_fields}
    config = model(**fields)
    report = Report(command=args.command, input=config.model_dump(exclude_none=True))
    manager = CRLabManager(settings=settings)
    start = time.perf_counter()
    code = 0
    try:
        report.result = handler(config, manager)
    except UsageError as e:
        report.error, code = e.payload(), 2
    except CRLabError as e:
        report.error, code = e.payload(), 1
    if args.timing:
        report.timing = round(time.perf_counter() - start, 6)
    logger.info("%s finished with exit code %d", args.command, code)

    if args.json:
        print(report.model_dump_json(exclude_none=True, indent=settings.json_indent))
    elif report.error is not None:
        print(f"error ({report.error['error']}): {report.error['message']}", file=sys.stderr)
        for line in render({k: v for k, v in report.error.items() if k not in ("error", "message")}):
            print(line, file=sys.stderr)
    else:
        for line in render(jsonable(report.result)):
            print(line)
        if report.timing is not None:
            print(f"time: {report.timing}s")
    return report, code


def main(argv: Optional[List[str]] = None) -> None:
    _, code = run(argv)
    sys.exit(code)
