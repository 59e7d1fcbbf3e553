"""Command-line front end for building and checking knot diagram matrices."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Sequence

from dotenv import load_dotenv
from pydantic import BaseModel, ValidationError, root_validator, validator

from dehngoeritz import __version__
from dehngoeritz.analysis import Analysis, analyze
from dehngoeritz.colorability import coloring_report
from dehngoeritz.errors import DehnGoeritzError, InvariantError, MalformedRecordError
from dehngoeritz.goeritz import reduced
from dehngoeritz.pdcode import is_prime_diagram, parse_pd
from dehngoeritz.reconstruct import (
    ALGEBRAIC,
    INDEXED,
    reconstruct_algebraically,
    reconstruct_with_indices,
)

logger = logging.getLogger(__name__)

COMMANDS = ("regions", "dehn", "goeritz", "reconstruct", "det", "colorable", "check")
FORMATS = ("pretty", "json", "csv")
INPUT_ERROR_EXIT = 2

# older method names, still accepted by --method
METHOD_ALIASES = {"thm1": INDEXED, "thm2": ALGEBRAIC}


class RunConfig(BaseModel):
    r"""
    Settings for one command-line invocation.

    :param command:
        the subcommand to run

    :param pd_text:
        inline planar diagram code

    :param input_path:
        file holding a planar diagram code, used instead of ``pd_text``

    :param shade:
        a region to put in the shaded class

    :param output_format:
        ``"pretty"``, ``"json"`` or ``"csv"``

    :param moduli:
        moduli for the ``colorable`` command

    :param method:
        reconstruction method, ``"indexed"`` or ``"algebraic"``

    :param anchors:
        anchor row for each shaded column of the algebraic method

    :param raw:
        keep the algebraic reconstruction's first row as solved instead of
        normalizing the global sign
    """

    command: str
    pd_text: Optional[str] = None
    input_path: Optional[str] = None
    shade: Optional[int] = None
    output_format: str = "pretty"
    moduli: List[int] = []
    method: str = INDEXED
    anchors: Dict[int, int] = {}
    raw: bool = False

    @validator("command")
    def command_is_known(cls, value):
        if value not in COMMANDS:
            raise ValueError(f'unknown command "{value}"')
        return value

    @validator("output_format")
    def format_is_known(cls, value):
        if value not in FORMATS:
            raise ValueError(f'output format must be one of {", ".join(FORMATS)}')
        return value

    @validator("method")
    def method_is_known(cls, value):
        if value not in (INDEXED, ALGEBRAIC):
            raise ValueError(f'method must be "{INDEXED}" or "{ALGEBRAIC}"')
        return value

    @root_validator(skip_on_failure=True)
    def one_input_and_moduli(cls, values):
        if (values.get("pd_text") is None) == (values.get("input_path") is None):
            raise ValueError("give either inline PD text or --input, not both or neither")
        if values["command"] == "colorable" and not values.get("moduli"):
            raise ValueError("the colorable command needs at least one -p modulus")
        return values

    def read_pd_text(self) -> str:
        if self.input_path is not None:
            try:
                with open(self.input_path, encoding="utf-8") as f:
                    return f.read()
            except UnicodeDecodeError as error:
                raise MalformedRecordError(f"{self.input_path} is not UTF-8 text: {error}")
        return self.pd_text or ""

    @property
    def diagram_name(self) -> Optional[str]:
        if self.input_path is None:
            return None
        return os.path.splitext(os.path.basename(self.input_path))[0]


def parse_anchor(text: str) -> Dict[int, int]:
    """Read an anchor override written ``COLUMN:ROW``."""
    try:
        column, row = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f'anchor must look like COLUMN:ROW, not "{text}"')
    return {column: row}


def _parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("pd", nargs="?", help="inline PD code, e.g. 'X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]'")
    common.add_argument("--input", "-i", dest="input_path", help="file holding a PD code")
    common.add_argument("--shade", type=int, help="region index to put in the shaded class")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=FORMATS,
        default=os.getenv("DEHNGOERITZ_FORMAT", "pretty"),
        help="output format (default from DEHNGOERITZ_FORMAT, else pretty)",
    )
    common.add_argument("--verbose", "-v", action="store_true", help="log pipeline steps")

    parser = argparse.ArgumentParser(
        prog="dehngoeritz",
        description="Build Dehn coloring and Goeritz matrices of knot diagrams.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    subparsers.add_parser("regions", parents=[common], help="list regions and the checkerboard coloring")
    subparsers.add_parser("dehn", parents=[common], help="print the Dehn coloring matrix")
    subparsers.add_parser("goeritz", parents=[common], help="print the Goeritz matrix")
    rebuild = subparsers.add_parser(
        "reconstruct", parents=[common], help="rebuild the Goeritz matrix from the Dehn matrix"
    )
    rebuild.add_argument(
        "--method", choices=(INDEXED, ALGEBRAIC, *METHOD_ALIASES), default=INDEXED
    )
    rebuild.add_argument(
        "--anchor",
        action="append",
        type=parse_anchor,
        default=[],
        metavar="COL:ROW",
        help="anchor row for a shaded column (algebraic method; repeatable)",
    )
    rebuild.add_argument(
        "--raw", action="store_true", help="keep the first solved row instead of normalizing the sign"
    )
    subparsers.add_parser("det", parents=[common], help="print the knot determinant")
    colorable = subparsers.add_parser(
        "colorable", parents=[common], help="test Dehn colorability for each modulus"
    )
    colorable.add_argument(
        "-p", dest="moduli", type=int, action="append", required=True, help="modulus (repeatable)"
    )
    subparsers.add_parser("check", parents=[common], help="compare every construction")
    return parser.parse_args(argv)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    method = getattr(args, "method", INDEXED)
    anchors: Dict[int, int] = {}
    for anchor in getattr(args, "anchor", []):
        anchors.update(anchor)
    return RunConfig(
        command=args.command,
        pd_text=args.pd,
        input_path=args.input_path,
        shade=args.shade,
        output_format=args.output_format,
        moduli=getattr(args, "moduli", None) or [],
        method=METHOD_ALIASES.get(method, method),
        anchors=anchors,
        raw=getattr(args, "raw", False),
    )


def load_analysis(cfg: RunConfig) -> Analysis:
    diagram = parse_pd(cfg.read_pd_text(), name=cfg.diagram_name)
    return analyze(diagram, shade=cfg.shade)


def cmd_regions(cfg: RunConfig) -> Dict[str, Any]:
    analysis = load_analysis(cfg)
    board = analysis.board
    return {
        "m": analysis.regions.region_count,
        "b": board.b,
        "regions": [
            {
                "index": index,
                "corners": [list(corner) for corner in corners],
                "shaded": board.is_shaded(index),
            }
            for index, corners in enumerate(analysis.regions.regions)
        ],
        "shaded": sorted(board.shaded),
        "ordering": list(board.ordering),
        "prime": analysis.is_prime,
    }


def cmd_dehn(cfg: RunConfig) -> Dict[str, Any]:
    return load_analysis(cfg).dehn.as_dict()


def cmd_goeritz(cfg: RunConfig) -> Dict[str, Any]:
    analysis = load_analysis(cfg)
    result = analysis.goeritz.as_dict()
    result["indices"] = list(analysis.indices.index)
    return result


def cmd_reconstruct(cfg: RunConfig) -> Dict[str, Any]:
    analysis = load_analysis(cfg)
    if cfg.method == ALGEBRAIC:
        result = reconstruct_algebraically(
            analysis.dehn,
            analysis.diagram,
            analysis.regions,
            anchors=cfg.anchors,
            normalize=not cfg.raw,
        )
    else:
        result = reconstruct_with_indices(analysis.dehn, analysis.indices)
    return result.as_dict()


def cmd_det(cfg: RunConfig) -> Dict[str, Any]:
    analysis = load_analysis(cfg)
    return {
        "determinant": analysis.determinant(),
        "deleted_index": analysis.goeritz.b - 1,
        "reduced": reduced(analysis.goeritz).as_list(),
    }


def cmd_colorable(cfg: RunConfig) -> Dict[str, Any]:
    analysis = load_analysis(cfg)
    return coloring_report(analysis, cfg.moduli).as_dict()


def cmd_check(cfg: RunConfig) -> Dict[str, Any]:
    """Run both reconstructions against the direct Goeritz matrix."""
    analysis = load_analysis(cfg)
    goeritz = analysis.goeritz.matrix
    indexed = reconstruct_with_indices(analysis.dehn, analysis.indices)
    report: Dict[str, Any] = {
        "dehn": analysis.dehn.as_dict(),
        "goeritz": analysis.goeritz.as_dict(),
        "indexed": indexed.as_dict(),
        "indexed_exact_match": indexed.left == goeritz,
        "right_block_zero": indexed.right_block_zero,
    }
    if is_prime_diagram(analysis.diagram, analysis.regions):
        algebraic = reconstruct_algebraically(
            analysis.dehn, analysis.diagram, analysis.regions
        )
        report["algebraic"] = algebraic.as_dict()
        report["algebraic_match_up_to_sign"] = algebraic.left in (goeritz, -goeritz)
        report["right_block_zero"] = report["right_block_zero"] and algebraic.right_block_zero
    else:
        report["algebraic"] = "skipped: not prime"
        report["algebraic_match_up_to_sign"] = None
    report["thm1_exact_match"] = report["indexed_exact_match"]
    report["thm2_match_up_to_sign"] = report["algebraic_match_up_to_sign"]
    return report


HANDLERS = {
    "regions": cmd_regions,
    "dehn": cmd_dehn,
    "goeritz": cmd_goeritz,
    "reconstruct": cmd_reconstruct,
    "det": cmd_det,
    "colorable": cmd_colorable,
    "check": cmd_check,
}


def _is_matrix(value: Any) -> bool:
    return isinstance(value, list) and bool(value) and all(isinstance(row, list) for row in value)


def render_pretty(payload: Dict[str, Any], indent: str = "") -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(render_pretty(value, indent + "  "))
        elif _is_matrix(value):
            width = max(len(str(v)) for row in value for v in row) if any(value) else 1
            lines.append(f"{indent}{key}:")
            lines.extend(
                indent + "  " + " ".join(str(v).rjust(width) for v in row) for row in value
            )
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(indent + "  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines)


def render_csv(payload: Dict[str, Any]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if _is_matrix(payload.get("matrix")):
        writer.writerows(payload["matrix"])
    elif isinstance(payload.get("rows"), list):
        dict_writer = csv.DictWriter(out, fieldnames=list(payload["rows"][0]), lineterminator="\n")
        dict_writer.writeheader()
        dict_writer.writerows(payload["rows"])
    else:
        for key, value in payload.items():
            if not isinstance(value, (dict, list)):
                writer.writerow([key, value])
    return out.getvalue()


def render(payload: Dict[str, Any], output_format: str) -> str:
    if output_format == "json":
        return json.dumps(payload, indent=2)
    if output_format == "csv":
        return render_csv(payload)
    return render_pretty(payload)


def run(cfg: RunConfig) -> Dict[str, Any]:
    return HANDLERS[cfg.command](cfg)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one subcommand and print its report.

    :returns:
        0 on success, 2 for unreadable input, 3 when an operation's
        precondition fails, 4 when an internal invariant breaks
    """
    load_dotenv()
    args = _parse_args(argv)
    level = "DEBUG" if args.verbose else os.getenv("DEHNGOERITZ_LOG_LEVEL", "WARNING")
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        cfg = config_from_args(args)
    except ValidationError as error:
        print(f"error: {error}", file=sys.stderr)
        return INPUT_ERROR_EXIT
    try:
        payload = run(cfg)
    except ValidationError as error:
        logger.error("model check failed while running %s", cfg.command)
        print(f"error: {error}", file=sys.stderr)
        return InvariantError.exit_code
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return INPUT_ERROR_EXIT
    except DehnGoeritzError as error:
        logger.debug("%s", type(error).__name__)
        print(f"error: {type(error).__name__}: {error}", file=sys.stderr)
        return error.exit_code
    print(render(payload, cfg.output_format))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
