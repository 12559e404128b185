"""Versioned JSON documents for spaces, fans, curves, and reports.

All rationals are encoded as strings ``"p/q"`` (or ``"p"``) so no binary
float ever reaches a persisted artifact; Puiseux polynomials use the text
format of :mod:`sphertrop.puiseux`.  ``parse(print(x)) == x`` on canonical
forms, and every document carries a top-level ``format`` field.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .balance import WeightedRayFan
from .lattice import Cone
from .luna_vust import ColoredCone, ColoredFan, SphericalSpace
from .puiseux import PuiseuxParseError, format_puiseux, parse_puiseux
from .tropicalize import CurveBranch

FORMATS = (
    "space/1",
    "fan/1",
    "weighted-fan/1",
    "curve/1",
    "tropical-point/1",
    "balance-report/1",
    "validation-report/1",
    "star/1",
)


class DocumentError(ValueError):
    """A JSON document violates its schema."""


def rational_to_str(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


_RATIONAL_TEXT = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def rational_from_str(text):
    if not isinstance(text, str) or not _RATIONAL_TEXT.match(text):
        raise DocumentError("bad rational %r (expected 'p' or 'p/q')" % (text,))
    return Fraction(text)


def integer_from_str(text):
    value = rational_from_str(text)
    if value.denominator != 1:
        raise DocumentError("expected an integer, got %r" % (text,))
    return int(value)


def vector_to_doc(v):
    return [rational_to_str(a) for a in v]


def int_vector_from_doc(doc):
    if not isinstance(doc, list):
        raise DocumentError("expected a vector, got %r" % (doc,))
    return tuple(integer_from_str(a) for a in doc)


def rational_vector_from_doc(doc):
    if not isinstance(doc, list):
        raise DocumentError("expected a vector, got %r" % (doc,))
    return tuple(rational_from_str(a) for a in doc)


def _require(doc, key):
    if not isinstance(doc, dict) or key not in doc:
        raise DocumentError("missing field %r" % (key,))
    return doc[key]


def _check_format(doc, expected):
    fmt = _require(doc, "format")
    if fmt != expected:
        raise DocumentError("expected format %r, got %r" % (expected, fmt))


# ---------------------------------------------------------------------------
# spaces


def space_to_doc(space):
    return {
        "format": "space/1",
        "name": space.name,
        "rank": space.rank,
        "family": space.family,
        "family_size": space.family_size,
        "valuation_cone": {"generators": [vector_to_doc(g) for g in space.valuation_cone.generators]},
        "palette": [
            {"label": label, "vector": vector_to_doc(v)} for label, v in space.palette
        ],
        "characters": list(space.character_basis_labels),
    }


def space_from_doc(doc):
    """Accepts either ``{"builtin": "gln2"}`` or a full space/1 document."""
    from . import catalog

    if isinstance(doc, dict) and "builtin" in doc:
        try:
            return catalog.space_by_id(doc["builtin"])
        except KeyError as exc:
            raise DocumentError(str(exc)) from None
    _check_format(doc, "space/1")
    rank = _require(doc, "rank")
    if not isinstance(rank, int) or rank < 1:
        raise DocumentError("bad rank %r" % (rank,))
    cone_doc = _require(doc, "valuation_cone")
    gens = [int_vector_from_doc(g) for g in _require(cone_doc, "generators")]
    palette = []
    for entry in doc.get("palette", ()):
        palette.append((str(_require(entry, "label")), int_vector_from_doc(_require(entry, "vector"))))
    return SphericalSpace(
        name=str(doc.get("name", "space")),
        rank=rank,
        valuation_cone=Cone(gens, rank),
        palette=tuple(palette),
        character_basis_labels=tuple(doc.get("characters", ())),
        family=doc.get("family"),
        family_size=doc.get("family_size"),
    )


# ---------------------------------------------------------------------------
# fans


def fan_to_doc(fan):
    return {
        "format": "fan/1",
        "space": space_to_doc(fan.space),
        "cones": [
            {
                "generators": [vector_to_doc(g) for g in cc.cone.generators],
                "colors": [fan.space.palette[j][0] for j in sorted(cc.colors)],
            }
            for cc in fan.cones
        ],
    }


def fan_from_doc(doc):
    _check_format(doc, "fan/1")
    space = space_from_doc(_require(doc, "space"))
    cones = []
    for entry in _require(doc, "cones"):
        gens = [int_vector_from_doc(g) for g in _require(entry, "generators")]
        colors = set()
        for label in entry.get("colors", ()):
            try:
                colors.add(space.color_index(label))
            except KeyError as exc:
                raise DocumentError(str(exc)) from None
        cones.append(ColoredCone(Cone(gens, space.rank), frozenset(colors)))
    return ColoredFan(space, tuple(cones))


# ---------------------------------------------------------------------------
# weighted ray fans


def weighted_fan_to_doc(wf):
    return {
        "format": "weighted-fan/1",
        "space": space_to_doc(wf.space),
        "rays": [
            {"vector": vector_to_doc(v), "weight": str(m)} for v, m in wf.rays
        ],
        "colored_weights": [
            {"color": wf.space.palette[j][0], "weight": str(m)}
            for j, m in wf.colored_weights
        ],
    }


def weighted_fan_from_doc(doc):
    _check_format(doc, "weighted-fan/1")
    space = space_from_doc(_require(doc, "space"))
    rays = []
    for entry in _require(doc, "rays"):
        rays.append(
            (int_vector_from_doc(_require(entry, "vector")), integer_from_str(_require(entry, "weight")))
        )
    colored = _colored_weights_from_doc(doc.get("colored_weights", ()), space)
    try:
        return WeightedRayFan(space, tuple(rays), colored)
    except (ValueError, KeyError) as exc:
        raise DocumentError("bad weighted fan: %s" % exc) from None


def _colored_weights_from_doc(entries, space):
    colored = []
    for entry in entries:
        label = _require(entry, "color")
        try:
            j = space.color_index(label)
        except KeyError as exc:
            raise DocumentError(str(exc)) from None
        colored.append((j, integer_from_str(_require(entry, "weight"))))
    return tuple(colored)


# ---------------------------------------------------------------------------
# curves


def _branch_to_doc(branch, space):
    if space.family == "gln":
        n = space.family_size
        return {
            "matrix": [
                [format_puiseux(p) for p in row] for row in branch.matrix(n)
            ]
        }
    return {"coords": [format_puiseux(p) for p in branch.coords]}


def curve_to_doc(space, branches, colored_weights=(), expected=None):
    doc = {
        "format": "curve/1",
        "space": space_to_doc(space),
        "branches": [_branch_to_doc(b, space) for b in branches],
        "colored_weights": [
            {"color": space.palette[j][0], "weight": str(m)} for j, m in colored_weights
        ],
    }
    if expected is not None:
        doc["expected"] = weighted_fan_to_doc(expected)
    return doc


def curve_from_doc(doc):
    """Returns (space, branches, colored weight pairs, expected fan or None)."""
    _check_format(doc, "curve/1")
    space = space_from_doc(_require(doc, "space"))
    branches = []
    for entry in _require(doc, "branches"):
        try:
            if "matrix" in entry:
                rows = [[parse_puiseux(cell) for cell in row] for row in entry["matrix"]]
                branches.append(CurveBranch.from_matrix(rows))
            elif "coords" in entry:
                branches.append(CurveBranch(tuple(parse_puiseux(c) for c in entry["coords"])))
            else:
                raise DocumentError("branch needs 'coords' or 'matrix'")
        except PuiseuxParseError as exc:
            raise DocumentError("bad branch coordinates: %s" % exc) from None
    colored = _colored_weights_from_doc(doc.get("colored_weights", ()), space)
    expected = None
    if "expected" in doc:
        expected = weighted_fan_from_doc(doc["expected"])
    return space, tuple(branches), colored, expected


# ---------------------------------------------------------------------------
# results


def tropical_point_to_doc(point):
    return {
        "format": "tropical-point/1",
        "space": point.space.name,
        "coords": vector_to_doc(point.coords),
    }


def balance_report_to_doc(report):
    return {
        "format": "balance-report/1",
        "balanced": report.balanced,
        "residual": vector_to_doc(report.residual),
        "quotient_residual": vector_to_doc(report.quotient_residual),
        "per_character": {label: str(value) for label, value in report.per_character},
    }


def validation_report_to_doc(report):
    return {
        "format": "validation-report/1",
        "valid": report.ok,
        "violations": [
            {
                "member": v.member,
                "axiom": v.axiom,
                "message": v.message,
                "witness": None if v.witness is None else vector_to_doc(v.witness),
            }
            for v in report.violations
        ],
    }


def star_to_doc(result):
    return {
        "format": "star/1",
        "projection": [vector_to_doc(row) for row in result.projection],
        "kernel_basis": [vector_to_doc(v) for v in result.kernel_basis],
        "space": space_to_doc(result.space),
        "fan": fan_to_doc(result.fan),
    }


def dumps(doc):
    """Serialize a document deterministically."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_text(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("not valid JSON: %s" % exc) from None
    if not isinstance(doc, dict) or "format" not in doc:
        raise DocumentError("document needs a top-level 'format' field")
    return doc
