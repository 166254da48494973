"""
Command-Line Interface

Front end of the application: catalog inspection, point queries, equilibrium
solving, flow runs, grid sampling with CSV/SVG output, the verification
suites and catalog export. Every command writes deterministic text to stdout
and logs to stderr.
"""

import argparse
import csv
import json
import logging
import re
import sys
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import replace
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, TextIO

from tabulate import tabulate

from core.catalog import (
    HermannActionSpec,
    PointInB,
    build_simplex,
    export_catalog,
    find_action,
    import_catalog,
    instantiate,
    load_catalog,
)
from core.errors import CatalogIntegrityError, HermannFlowError, NoConvergenceError, WallContactError
from core.field import field_at, potential, second_fundamental_norm_sq, touching_walls
from core.flow import FlowIntegrator, FlowParameters, TerminationKind, Trajectory, collapse_diagnostics
from core.solver import EquilibriumKind, SolverSettings, solve_all
from core.verification import SUITES, VerificationHarness
from ui.grid import sample_grid, write_csv
from ui.svg import SvgStyle, render_svg
from utils.helpers import (
    format_number,
    get_output_dir,
    load_config,
    parse_params,
    parse_point,
    sanitize_filename,
    setup_logging,
)


EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3

TRAJECTORY_HEADER = ["t", "x1", "x2", "speed", "h_norm_sq"]

# options whose value may start with a minus sign, e.g. --at -1,0
POINT_OPTIONS = ("--at", "--from")
_NEGATIVE_VALUE = re.compile(r"^-[\d.]")

logger = logging.getLogger(__name__)


# below solver precision
COORDINATE_ZERO = 1e-13


def _coord(value: float) -> str:
    return format_number(0.0 if abs(value) < COORDINATE_ZERO else value)


def _pair(x1: float, x2: float) -> str:
    return f"({_coord(x1)}, {_coord(x2)})"


def _table(rows: List[List[Any]], headers: List[str]) -> str:
    return tabulate(rows, headers=headers, tablefmt="simple", disable_numparse=True)


def _attach_point_values(argv: List[str]) -> List[str]:
    attached: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        if (token in POINT_OPTIONS and index + 1 < len(argv)
                and _NEGATIVE_VALUE.match(argv[index + 1])):
            attached.append(f"{token}={argv[index + 1]}")
            index += 2
        else:
            attached.append(token)
            index += 1
    return attached


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser for every subcommand."""
    parser = argparse.ArgumentParser(
        prog="hermann-flow",
        description="Mean curvature flow of Hermann action orbits",
    )
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
                        help="console log level (default from config)")
    parser.add_argument("--config", default=None, help="JSON or YAML settings file")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    commands.add_parser("list", help="list catalog actions")

    def with_action(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("action", help="catalog action id")
        sub.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                         help="re-evaluate a parametric row, e.g. --param q=5")
        return sub

    with_action("info", "show root data, simplex and printed values")

    field_parser = with_action("field", "evaluate the field at a point")
    field_parser.add_argument("--at", required=True, metavar="X1,X2", help="point of the flat section")

    with_action("equilibrium", "solve for the interior and edge equilibria")

    flow_parser = with_action("flow", "integrate the flow from a point")
    flow_parser.add_argument("--from", dest="start", required=True, metavar="X1,X2", help="start point")
    flow_parser.add_argument("--t-max", type=float, default=None, help="final time")
    flow_parser.add_argument("--csv", default=None, metavar="PATH", help="write the trajectory")
    flow_parser.add_argument("--reverse", action="store_true", help="integrate Z' = -X")

    grid_parser = with_action("grid", "sample the field on a lattice")
    grid_parser.add_argument("--res", type=int, default=None, metavar="N", help="points per axis")
    grid_parser.add_argument("--out", default=None, metavar="PATH", help="output .csv or .svg")
    grid_parser.add_argument("--workers", type=int, default=None, help="evaluation threads")

    verify_parser = commands.add_parser("verify", help="run the verification suites")
    verify_parser.add_argument("--all", action="store_true", help="check every catalog action")
    verify_parser.add_argument("--action", action="append", default=[], metavar="ID",
                               help="check one action (repeatable)")
    verify_parser.add_argument("--suite", action="append", default=[], choices=SUITES,
                               help="restrict to a suite (repeatable)")
    verify_parser.add_argument("--workers", type=int, default=None, help="verification threads")

    export_parser = commands.add_parser("export-catalog", help="write the catalog as JSON")
    export_parser.add_argument("--out", default=None, metavar="PATH", help="output file, stdout by default")
    export_parser.add_argument("--check", action="store_true", help="verify the JSON round trip")
    return parser


class CommandRunner:
    """Executes one parsed command against a configuration."""

    def __init__(self, config: Dict[str, Any], out: TextIO):
        self.config = config
        self.out = out
        self.logger = logging.getLogger(__name__)

    def emit(self, text: str = "") -> None:
        print(text, file=self.out)

    def resolve(self, args: argparse.Namespace) -> HermannActionSpec:
        action = find_action(args.action)
        params = parse_params(args.param)
        return instantiate(action, **params) if params else action

    def run(self, args: argparse.Namespace) -> int:
        handler: Callable[[argparse.Namespace], int] = getattr(self, "cmd_" + args.command.replace("-", "_"))
        return handler(args)

    def cmd_list(self, args: argparse.Namespace) -> int:
        rows = [[action.id, action.display_name, str(action.kind)] for action in load_catalog()]
        self.emit(_table(rows, ["id", "action", "kind"]))
        return EXIT_OK

    def cmd_info(self, args: argparse.Namespace) -> int:
        action = self.resolve(args)
        simplex = build_simplex(action)
        self.emit(f"{action.id}: {action.display_name}")
        self.emit(f"dual: {action.dual_name}")
        self.emit(f"L*: {action.l_star_name}")
        self.emit(f"kind: {action.kind}")
        if action.params:
            self.emit("params: " + ", ".join(f"{p.name}={p.value} (min {p.minimum})" for p in action.params))
        self.emit()

        values = action.param_values
        rows = [[root.label, root.mult_total.evaluate(values), root.mult_v.evaluate(values),
                 root.mult_h.evaluate(values)] for root in action.roots]
        self.emit(_table(rows, ["root", "m", "m_V", "m_H"]))
        self.emit()

        self.emit("vertices: " + ", ".join(_pair(v.x1, v.x2) for v in simplex.vertices))
        for edge in simplex.edges:
            walls = ", ".join(wall.label for wall in edge.coincident_walls)
            self.emit(f"edge {edge.index}: {_pair(*edge.start)} - {_pair(*edge.end)} on {walls}")

        if action.table31 is not None:
            golden = action.table31
            if golden.interior is not None:
                self.emit(f"printed interior: {_pair(golden.interior.x1, golden.interior.x2)}")
            for index, point in enumerate(golden.edges):
                self.emit(f"printed edge {index}: {_pair(point.x1, point.x2)}")
        for note in action.known_inconsistencies:
            self.emit(f"note: {note}")
        return EXIT_OK

    def cmd_field(self, args: argparse.Namespace) -> int:
        action = self.resolve(args)
        point = PointInB(*parse_point(args.at))
        eps = float(self.config["field"]["wall_eps"])
        value = field_at(action, point, eps)
        self.emit(f"point: {_pair(point.x1, point.x2)}")
        self.emit(f"X: {_pair(*value.vector)}")
        self.emit(f"|X|: {format_number(value.norm)}")
        if value.on_boundary:
            walls = ", ".join(wall.label for wall in touching_walls(action, point, eps))
            self.emit(f"boundary: {walls}")
        else:
            self.emit(f"phi: {format_number(potential(action, point, eps))}")
        try:
            h_norm = second_fundamental_norm_sq(action, point, eps, allow_boundary=value.on_boundary)
            self.emit(f"|h|^2: {format_number(h_norm)}")
        except WallContactError as e:
            self.logger.debug(f"|h|^2 undefined at {point}: {e}")
        return EXIT_OK

    def cmd_equilibrium(self, args: argparse.Namespace) -> int:
        action = self.resolve(args)
        interior, edges = solve_all(action, SolverSettings.from_config(self.config))
        rows = []
        for result in [interior] + edges:
            stratum = result.kind_label
            if result.edge_index is not None and result.kind == EquilibriumKind.VERTEX:
                stratum += f" (edge {result.edge_index})"
            rows.append([stratum, _coord(result.location.x1), _coord(result.location.x2),
                         f"{result.residual:.3e}", str(result.iterations)])
        self.emit(_table(rows, ["stratum", "x1", "x2", "residual", "iterations"]))
        return EXIT_OK

    def cmd_flow(self, args: argparse.Namespace) -> int:
        action = self.resolve(args)
        params = FlowParameters.from_config(self.config)
        if args.t_max is not None:
            if args.t_max <= 0:
                raise ValueError(f"--t-max must be positive, got {args.t_max}")
            params = replace(params, t_max=args.t_max)
        start = PointInB(*parse_point(args.start))
        trajectory = FlowIntegrator(params).integrate(action, start, direction=-1 if args.reverse else 1)

        final = trajectory.final
        self.emit(f"termination: {trajectory.termination}")
        self.emit(f"steps: {len(trajectory) - 1}")
        self.emit(f"t: {format_number(final.t)}")
        self.emit(f"final: {_pair(final.point.x1, final.point.x2)}")
        self.emit(f"speed: {format_number(final.speed)}")
        if trajectory.termination.kind == TerminationKind.WALL_CONTACT:
            diagnostics = collapse_diagnostics(action, trajectory, params.wall_eps)
            self.emit(f"collapse time: {format_number(diagnostics.collapse_time)}")
            self.emit(f"limit stratum: {diagnostics.stratum}")
            self.emit(f"type-I statistic: {format_number(diagnostics.statistic)} "
                      f"({'bounded' if diagnostics.bounded else 'growing'})")

        if args.csv:
            path = _write_trajectory_csv(trajectory, Path(args.csv))
            self.emit(f"wrote {path}")
        return EXIT_OK

    def cmd_grid(self, args: argparse.Namespace) -> int:
        action = self.resolve(args)
        grid_config = self.config["grid"]
        resolution = args.res if args.res is not None else int(grid_config["default_resolution"])
        workers = args.workers if args.workers is not None else int(grid_config["workers"])

        if args.out:
            path = Path(args.out)
        else:
            path = get_output_dir(self.config) / f"{sanitize_filename(action.id)}_grid_{resolution}.csv"
        suffix = path.suffix.lower()
        if suffix not in (".csv", ".svg"):
            raise ValueError(f"Grid output must end in .csv or .svg, got {path}")

        sample = sample_grid(action, resolution, workers, float(self.config["field"]["wall_eps"]))
        if suffix == ".csv":
            write_csv(sample, path)
        else:
            simplex = build_simplex(action)
            try:
                interior, edges = solve_all(action, SolverSettings.from_config(self.config))
                markers = [interior.location] + [edge.location for edge in edges]
            except NoConvergenceError as e:
                self.logger.warning(f"No equilibrium markers: {e}")
                markers = []
            path.parent.mkdir(parents=True, exist_ok=True)
            document = render_svg(sample, SvgStyle.from_config(self.config), simplex, markers)
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(document)
        self.emit(f"wrote {len(sample)} points to {path}")
        return EXIT_OK

    def cmd_verify(self, args: argparse.Namespace) -> int:
        config = json.loads(json.dumps(self.config))
        if args.workers is not None:
            config["verify"]["workers"] = args.workers
        actions = None if args.all else [find_action(action_id) for action_id in args.action]

        report = VerificationHarness(config, args.suite or None).run(actions)
        self.emit(_table([record.as_row() for record in report.records],
                         ["suite", "action", "check", "status", "detail"]))
        self.emit(json.dumps(report.counts(), sort_keys=True))
        return EXIT_VERIFY_FAILED if report.failed else EXIT_OK

    def cmd_export_catalog(self, args: argparse.Namespace) -> int:
        document = export_catalog()
        if args.check:
            again = export_catalog(import_catalog(document))
            if again != document:
                raise CatalogIntegrityError("Catalog JSON does not round-trip")
        if args.out:
            path = Path(args.out)
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(document)
            self.emit(f"wrote {len(load_catalog())} actions to {path}")
        elif not args.check:
            self.out.write(document)
        if args.check:
            self.emit("catalog round trip OK")
        return EXIT_OK


def _write_trajectory_csv(trajectory: Trajectory, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(TRAJECTORY_HEADER)
        for sample in trajectory.samples:
            writer.writerow([format_number(value) for value in
                             (sample.t, sample.point.x1, sample.point.x2, sample.speed, sample.h_norm_sq)])
    return path


def run_command(argv: Optional[List[str]] = None, out: Optional[TextIO] = None,
                err: Optional[TextIO] = None) -> int:
    """
    Parse argv, run one command and return its exit code.

    Returns:
        0 on success, 1 on domain errors, 2 on usage errors, 3 when verification fails
    """
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    argv = _attach_point_values(list(sys.argv[1:] if argv is None else argv))
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.command == "verify" and not args.all and not args.action:
        parser.print_usage(err)
        print("hermann-flow verify: error: give --all or at least one --action", file=err)
        return EXIT_USAGE

    try:
        config = load_config(args.config)
        logging_config = config.get("logging", {})
        setup_logging(args.log_level or logging_config.get("level", "WARNING"),
                      file_logging=bool(logging_config.get("file_logging", False)))
        return CommandRunner(config, out).run(args)
    except (HermannFlowError, ValueError) as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"error: {e}", file=err)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
