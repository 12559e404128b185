"""Command-line front door.

Subcommands: ``trop``, ``fan validate|star|decolor``, ``balance
check|solve-colors``, ``catalog list``, ``plot``.  Exit codes form a stable
contract for shell harnesses: 0 on success (balanced / valid / feasible),
1 on a domain failure (unbalanced, invalid fan, infeasible, point off the
space), 2 on input errors (parse or schema problems).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, documents, plotting
from .balance import assemble, check_balancing, solve_colored_weights
from .luna_vust import (
    InvalidColoredConeError,
    decolor,
    star,
    validate_colored_fan,
)
from .puiseux import PuiseuxParseError, parse_puiseux
from .tropicalize import (
    CurveBranch,
    NonIntegerRayError,
    OffSpaceError,
    branch_rays,
    trop_point,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2


class _CliInputError(Exception):
    pass


def _emit(doc, args):
    if getattr(args, "json", False):
        text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    else:
        text = documents.dumps(doc)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_doc(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise _CliInputError(str(exc)) from None
    return documents.load_text(text)


def _fixture_doc(name):
    from .catalog import CurveFixture, reference_fixture

    try:
        fixture = reference_fixture(name)
    except KeyError as exc:
        raise _CliInputError(str(exc)) from None
    from .luna_vust import ColoredFan

    if isinstance(fixture, ColoredFan):
        return documents.fan_to_doc(fixture)
    if isinstance(fixture, CurveFixture):
        return documents.curve_to_doc(
            fixture.space, fixture.branches, fixture.colored_weights, fixture.expected
        )
    raise _CliInputError(
        "fixture %r is parametric; materialize it through the library" % name
    )


def _input_doc(args):
    if getattr(args, "fixture", None):
        if args.input:
            raise _CliInputError("give either an input file or --fixture, not both")
        return _fixture_doc(args.fixture)
    if not args.input:
        raise _CliInputError("an input file (or --fixture) is required")
    return _read_doc(args.input)


def _parse_coordinates(text):
    """A vector ``(p1, p2, ...)`` or matrix ``[[p11, ...], ...]`` of polynomials."""
    stripped = text.strip()
    if stripped.startswith("[["):
        if not stripped.endswith("]]"):
            raise _CliInputError("unterminated matrix literal")
        body = stripped[1:-1]
        rows = []
        depth = 0
        current = []
        for ch in body:
            if ch == "[":
                depth += 1
                if depth == 1:
                    current = []
                    continue
            elif ch == "]":
                depth -= 1
                if depth == 0:
                    rows.append("".join(current))
                    continue
            if depth >= 1:
                current.append(ch)
        matrix = [
            [parse_puiseux(cell) for cell in row.split(",")] for row in rows
        ]
        return CurveBranch.from_matrix(matrix)
    if stripped.startswith("(") and stripped.endswith(")"):
        stripped = stripped[1:-1]
    elif stripped.startswith("[") and stripped.endswith("]"):
        stripped = stripped[1:-1]
    cells = [cell for cell in stripped.split(",") if cell.strip()]
    if not cells:
        raise _CliInputError("empty coordinate list")
    return CurveBranch(tuple(parse_puiseux(cell) for cell in cells))


def cmd_trop(args):
    space_id = args.space_flag or args.space
    coordinates = args.coordinates
    if args.space_flag and coordinates is None:
        coordinates = args.space  # the lone positional is the coordinates
    if not space_id or not coordinates:
        print("error: trop needs a space id and coordinates", file=sys.stderr)
        return EXIT_INPUT
    try:
        space = catalog.space_by_id(space_id)
    except KeyError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    try:
        branch = _parse_coordinates(coordinates)
    except (PuiseuxParseError, _CliInputError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    try:
        point = trop_point(space, branch)
    except OffSpaceError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN
    _emit(documents.tropical_point_to_doc(point), args)
    return EXIT_OK


def cmd_fan(args):
    doc = _input_doc(args)
    fan = documents.fan_from_doc(doc)
    if args.action == "validate":
        report = validate_colored_fan(fan)
        _emit(documents.validation_report_to_doc(report), args)
        return EXIT_OK if report.ok else EXIT_DOMAIN
    if args.action == "decolor":
        try:
            toroidal, report = decolor(fan)
        except InvalidColoredConeError as exc:
            _emit(documents.validation_report_to_doc(exc.report), args)
            return EXIT_DOMAIN
        _emit(documents.fan_to_doc(toroidal), args)
        return EXIT_OK if report.ok else EXIT_DOMAIN
    if args.action == "star":
        if args.cone_index is None:
            print("error: star needs --cone-index", file=sys.stderr)
            return EXIT_INPUT
        if not 0 <= args.cone_index < len(fan.cones):
            print("error: cone index %d out of range" % args.cone_index, file=sys.stderr)
            return EXIT_INPUT
        survivors = None
        if args.colors is not None:
            survivors = frozenset(
                fan.space.color_index(label) for label in args.colors.split(",") if label
            )
        try:
            result = star(fan, fan.cones[args.cone_index], survivors)
        except (InvalidColoredConeError, ValueError) as exc:
            print("error: %s" % exc, file=sys.stderr)
            return EXIT_DOMAIN
        _emit(documents.star_to_doc(result), args)
        return EXIT_OK
    raise AssertionError(args.action)


def _weighted_fan_from_input(doc):
    if doc["format"] == "weighted-fan/1":
        return documents.weighted_fan_from_doc(doc)
    if doc["format"] == "curve/1":
        space, branches, colored, _ = documents.curve_from_doc(doc)
        try:
            rays = branch_rays(space, branches)
        except (OffSpaceError, NonIntegerRayError) as exc:
            raise _DomainError(str(exc)) from None
        return assemble(space, rays, colored)
    raise documents.DocumentError(
        "balance expects a weighted-fan/1 or curve/1 document, got %r" % doc["format"]
    )


class _DomainError(Exception):
    pass


def cmd_balance(args):
    doc = _input_doc(args)
    try:
        wf = _weighted_fan_from_input(doc)
    except _DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN
    if args.action == "check":
        report = check_balancing(wf)
        _emit(documents.balance_report_to_doc(report), args)
        return EXIT_OK if report.balanced else EXIT_DOMAIN
    if args.action == "solve-colors":
        solution = solve_colored_weights(wf.space, wf.rays)
        if solution is None:
            _emit({"format": "colored-weights/1", "feasible": False}, args)
            return EXIT_DOMAIN
        _emit(
            {
                "format": "colored-weights/1",
                "feasible": True,
                "weights": {wf.space.palette[j][0]: str(m) for j, m in solution},
            },
            args,
        )
        return EXIT_OK
    raise AssertionError(args.action)


def cmd_catalog(args):
    _emit({"format": "catalog/1", **catalog.catalog_listing()}, args)
    return EXIT_OK


def cmd_plot(args):
    doc = _input_doc(args)
    if doc["format"] == "weighted-fan/1":
        wf = documents.weighted_fan_from_doc(doc)
        svg = plotting.render_fan(wf.space, wf.rays, wf.colored_weights)
    elif doc["format"] == "curve/1":
        space, branches, colored, expected = documents.curve_from_doc(doc)
        if expected is None:
            raise documents.DocumentError("curve document has no expected fan to plot")
        svg = plotting.render_fan(space, expected.rays, expected.colored_weights)
    elif doc["format"] == "fan/1":
        fan = documents.fan_from_doc(doc)
        svg = plotting.render_fan(fan.space, cones=fan.cones)
    else:
        raise documents.DocumentError(
            "plot expects a weighted-fan/1, curve/1, or fan/1 document, got %r"
            % doc["format"]
        )
    with open(args.out, "w") as fh:
        fh.write(svg)
    return EXIT_OK


def _common_output_flags(parser):
    parser.add_argument("--out", help="write the result document here instead of stdout")
    parser.add_argument(
        "--json", action="store_true", help="compact single-line JSON output"
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sphertrop",
        description="Exact spherical tropicalization, colored fans, and balancing checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_trop = sub.add_parser("trop", help="tropicalize a point or matrix over the Puiseux field")
    p_trop.add_argument("space", nargs="?", help="space id, e.g. torus2, sl2u, gln2")
    p_trop.add_argument("coordinates", nargs="?", help="vector '(t, 1-t)' or matrix '[[t+1,t],[t,0]]'")
    p_trop.add_argument("--space", dest="space_flag", help="space id (alternative to the positional)")
    _common_output_flags(p_trop)
    p_trop.set_defaults(handler=cmd_trop)

    p_fan = sub.add_parser("fan", help="validate, decolor, or take the star of a colored fan")
    p_fan.add_argument("action", choices=("validate", "star", "decolor"))
    p_fan.add_argument("input", nargs="?", help="fan/1 JSON file")
    p_fan.add_argument("--fixture", help="use a built-in fixture instead of a file")
    p_fan.add_argument("--cone-index", type=int, default=None, help="member index for star")
    p_fan.add_argument("--colors", default=None, help="comma-separated surviving colors for star")
    _common_output_flags(p_fan)
    p_fan.set_defaults(handler=cmd_fan)

    p_bal = sub.add_parser("balance", help="check balancing or solve for colored weights")
    p_bal.add_argument("action", choices=("check", "solve-colors"))
    p_bal.add_argument("input", nargs="?", help="weighted-fan/1 or curve/1 JSON file")
    p_bal.add_argument("--fixture", help="use a built-in fixture instead of a file")
    _common_output_flags(p_bal)
    p_bal.set_defaults(handler=cmd_balance)

    p_cat = sub.add_parser("catalog", help="list built-in spaces and fixtures")
    p_cat.add_argument("action", choices=("list",))
    _common_output_flags(p_cat)
    p_cat.set_defaults(handler=cmd_catalog)

    p_plot = sub.add_parser("plot", help="render a rank-1 or rank-2 fan as SVG")
    p_plot.add_argument("input", nargs="?", help="weighted-fan/1, curve/1, or fan/1 JSON file")
    p_plot.add_argument("--fixture", help="use a built-in fixture instead of a file")
    p_plot.add_argument("--out", required=True, help="output SVG path")
    p_plot.set_defaults(handler=cmd_plot)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (documents.DocumentError, PuiseuxParseError, _CliInputError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except plotting.PlotError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT
    except json.JSONDecodeError as exc:  # pragma: no cover - wrapped upstream
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
