"""Built-in spherical space descriptors and reference fixtures.

Three families are shipped:

* ``torus(n)``: rank n, valuation cone all of R^n, empty palette;
* ``sl2_u``: rank 1, valuation cone all of R, one color at +1;
* ``gln(n)``: rank n, valuation cone ``mu_1 >= ... >= mu_n`` in the dual
  basis of the characters of the nested lower-right minors, palette
  ``E_j -> e_j - e_{j-1}`` for j = 2..n.

The gln palette vectors follow from the orders of the character basis
functions along the divisor of the j-th minor; the n = 2 value is pinned
independently and the general rule is validated by an order-computation
oracle in the test suite.  Reference fans and curves live in JSON fixture
files so other tooling can share them byte-for-byte.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from .lattice import Cone
from .luna_vust import SphericalSpace


def builtin_space(name, n=None):
    """Construct a catalog space descriptor by family name."""
    if name == "torus":
        if n is None or n < 1:
            raise ValueError("torus needs a positive rank")
        return SphericalSpace(
            name="torus%d" % n,
            rank=n,
            valuation_cone=_whole_space(n),
            palette=(),
            character_basis_labels=tuple("x%d" % (i + 1) for i in range(n)),
            family="torus",
            family_size=n,
        )
    if name in ("sl2_u", "sl2u"):
        return SphericalSpace(
            name="sl2u",
            rank=1,
            valuation_cone=_whole_space(1),
            palette=(("E1", (1,)),),
            character_basis_labels=("chi1",),
            family="sl2_u",
            family_size=2,
        )
    if name == "gln":
        if n is None or n < 1:
            raise ValueError("gln needs a positive size")
        normals = []
        for i in range(n - 1):
            row = [0] * n
            row[i] = 1
            row[i + 1] = -1
            normals.append(tuple(row))
        palette = []
        for j in range(2, n + 1):
            v = [0] * n
            v[j - 1] = 1
            v[j - 2] = -1
            palette.append(("E%d" % j, tuple(v)))
        return SphericalSpace(
            name="gln%d" % n,
            rank=n,
            valuation_cone=Cone.from_inequalities(normals, n),
            palette=tuple(palette),
            character_basis_labels=tuple("chi%d" % (i + 1) for i in range(n)),
            family="gln",
            family_size=n,
        )
    raise ValueError("unknown space family %r" % (name,))


def _whole_space(n):
    gens = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        gens.append(e)
        gens.append(tuple(-a for a in e))
    return Cone(gens, n)


_SPACE_ID_RE = re.compile(r"^(torus|gln)(\d+)$")


def space_by_id(ident):
    """Resolve CLI-style space identifiers: ``torus2``, ``gln3``, ``sl2u``."""
    if ident in ("sl2u", "sl2_u"):
        return builtin_space("sl2_u")
    m = _SPACE_ID_RE.match(ident)
    if not m:
        raise KeyError("unknown space id %r" % (ident,))
    return builtin_space(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class CurveFixture:
    """A reference curve: branches plus the fan its tropicalization must give."""

    name: str
    space: SphericalSpace
    branches: tuple
    colored_weights: tuple
    expected: object  # WeightedRayFan


FIXTURE_FILES = {
    "gl2_fig1_fan": "gl2_fig1_fan.json",
    "gl2_line_curve": "gl2_line_curve.json",
    "torus_line_curve": "torus_line_curve.json",
    "sl2u_family": "sl2u_family.json",
}


def fixture_names():
    return tuple(sorted(FIXTURE_FILES))


def _load_fixture_doc(name):
    try:
        filename = FIXTURE_FILES[name]
    except KeyError:
        raise KeyError("unknown fixture %r" % (name,)) from None
    path = resources.files("sphertrop").joinpath("fixtures", filename)
    return json.loads(path.read_text())


def reference_fixture(name):
    """Load a named fixture.

    ``gl2_fig1_fan`` gives a ColoredFan; the curve fixtures give
    :class:`CurveFixture` objects; ``sl2u_family`` gives the two-parameter
    family as a callable ``(d, e) -> WeightedRayFan``.
    """
    from . import documents

    if name == "sl2u_family":
        return sl2u_family
    doc = _load_fixture_doc(name)
    if doc.get("format") == "fan/1":
        return documents.fan_from_doc(doc)
    if doc.get("format") == "curve/1":
        space, branches, colored, expected = documents.curve_from_doc(doc)
        return CurveFixture(name, space, branches, colored, expected)
    raise ValueError("fixture %r has unsupported format %r" % (name, doc.get("format")))


_SYMBOL_RE = re.compile(r"^[a-z]+$")


def _eval_linear(text, values):
    """Evaluate small integer expressions like ``d``, ``e``, ``d-e``, ``3``."""
    total = 0
    sign = 1
    for token in re.findall(r"[+-]|[a-z]+|\d+", str(text).replace(" ", "")):
        if token == "+":
            sign = 1
        elif token == "-":
            sign = -1
        elif _SYMBOL_RE.match(token):
            total += sign * values[token]
            sign = 1
        else:
            total += sign * int(token)
            sign = 1
    return total


def sl2u_family(d, e):
    """The one-parameter degree-d family with colored weight e.

    Rays ``(-1)`` with weight d and ``(+1)`` with weight d - e, plus colored
    weight e on the single color; requires ``1 <= d`` and ``0 <= e <= d``.
    The weight-zero ray at e = d is dropped at assembly.
    """
    from .balance import assemble

    if d < 1 or not 0 <= e <= d:
        raise ValueError("need 1 <= d and 0 <= e <= d, got d=%r e=%r" % (d, e))
    doc = _load_fixture_doc("sl2u_family")
    space = space_by_id(doc["space"]["builtin"])
    values = {"d": d, "e": e}
    rays = []
    for entry in doc["rays"]:
        vector = tuple(int(a) for a in entry["vector"])
        weight = _eval_linear(entry["weight"], values)
        rays.append((vector, weight))
    colored = []
    for entry in doc["colored_weights"]:
        j = space.color_index(entry["color"])
        colored.append((j, _eval_linear(entry["weight"], values)))
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")  # the e = d case drops a zero ray
        return assemble(space, rays, colored)


def catalog_listing():
    """Human-oriented list of built-in spaces and fixtures for the CLI."""
    return {
        "spaces": [
            {"id": "torus<n>", "rank": "n", "palette": 0},
            {"id": "sl2u", "rank": 1, "palette": 1},
            {"id": "gln<n>", "rank": "n", "palette": "n-1"},
        ],
        "fixtures": list(fixture_names()),
    }


# ---------------------------------------------------------------------------
# symbolic semi-invariants
#
# The character basis of each catalog space is realized by concrete
# functions: coordinates for the torus, the second coordinate for sl2_u,
# and ratios of nested lower-right minors for gln.  They are kept here so
# character pairings can be demonstrated on explicit branches (note that a
# raw evaluation computes the valuation at the specific point, not the
# generic-translate valuation that defines the tropicalization).


def nested_minor(matrix, i):
    """Determinant of the lower-right block starting at row/column i (1-based)."""
    from .puiseux import determinant

    sub = [row[i - 1 :] for row in matrix[i - 1 :]]
    return determinant(sub)


def character_function(space, index):
    """Evaluator for the index-th character basis function of a catalog space.

    Returns a callable CurveBranch -> PuiseuxFraction realizing the basis
    semi-invariant: x_i for torus(n), y for sl2_u, and the minor ratio
    h_i / h_{i+1} for gln(n).
    """
    from .puiseux import PuiseuxFraction

    if not 0 <= index < space.rank:
        raise IndexError("character index %d out of range" % index)
    if space.family == "torus":
        return lambda branch: PuiseuxFraction(branch.coords[index])
    if space.family == "sl2_u":
        return lambda branch: PuiseuxFraction(branch.coords[1])
    if space.family == "gln":
        n = space.family_size
        i = index + 1

        def evaluate(branch):
            matrix = branch.matrix(n)
            numerator = nested_minor(matrix, i)
            if i == n:
                return PuiseuxFraction(numerator)
            return PuiseuxFraction(numerator, nested_minor(matrix, i + 1))

        return evaluate
    raise ValueError("no symbolic characters for space kind %r" % (space.family,))
