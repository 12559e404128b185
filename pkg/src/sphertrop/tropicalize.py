"""Spherical tropicalization maps for the catalog spaces.

Points and parametrized curve branches over the Puiseux field are sent to
the valuation cone: coordinatewise valuations for tori, min of the two
coordinate valuations for sl2_u, and invariant-factor valuations (Cartan
decomposition) for gln.  Branches are expected in normalized local
parameter ``s = t``; approach to different boundary points is encoded by
separate branches (substitute e.g. ``s = t^(-1)`` explicitly).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .lattice import primitive
from .puiseux import INF, PuiseuxFraction, PuiseuxPoly, minor_valuation_profile


class OffSpaceError(ValueError):
    """The point or branch does not lie in the homogeneous space."""


class ZeroTropicalizationError(ValueError):
    """The branch does not approach the boundary (tropicalizes to zero)."""


class NonIntegerRayError(ValueError):
    """The tropical point has non-integer coordinates; rescale the parameter."""


@dataclass(frozen=True)
class TropicalPoint:
    """Exact rational point in the valuation cone of its space."""

    space: object
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))


@dataclass(frozen=True)
class CurveBranch:
    """Coordinates of a curve branch over the Puiseux field.

    One entry per ambient coordinate of the space: n for torus(n), 2 for
    sl2_u, and n*n (row-major) for gln(n).
    """

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        if any(not isinstance(p, PuiseuxPoly) for p in self.coords):
            raise TypeError("branch coordinates must be Puiseux polynomials")

    @classmethod
    def from_matrix(cls, rows):
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("expected a square coordinate matrix")
        return cls(tuple(p for row in rows for p in row))

    def matrix(self, n):
        if len(self.coords) != n * n:
            raise ValueError("branch has %d coordinates, expected %d" % (len(self.coords), n * n))
        return [list(self.coords[i * n : (i + 1) * n]) for i in range(n)]


def trop_torus(coords):
    """Coordinatewise valuation vector; every coordinate must be nonzero."""
    values = []
    for i, p in enumerate(coords):
        if p.is_zero:
            raise OffSpaceError("coordinate %d vanishes: point is off the torus" % i)
        values.append(p.val())
    return tuple(values)


def trop_sl2u(x, y):
    """Minimum of the two coordinate valuations, as a rank-1 vector."""
    if x.is_zero and y.is_zero:
        raise OffSpaceError("both coordinates vanish: point is off the space")
    return (min(x.val(), y.val()),)


def invariant_factor_valuations(M):
    """Decreasing valuations of the diagonal in a Cartan decomposition.

    Computed through minor valuations: with d_k the minimum valuation over
    all k x k minors, the increasing invariant-factor valuations are the
    consecutive differences of the d_k, and the result is their reversal.
    Raises :class:`OffSpaceError` on singular matrices.
    """
    ds = minor_valuation_profile(M)
    if ds[-1] == INF:
        raise OffSpaceError("matrix is singular: point is off the general linear group")
    increasing = []
    prev = Fraction(0)
    for d in ds:
        increasing.append(d - prev)
        prev = d
    return tuple(reversed(increasing))


def cartan_valuations_by_elimination(M):
    """Independent cross-check of :func:`invariant_factor_valuations`.

    Gaussian elimination over the fraction field of Puiseux polynomials,
    always pivoting on a minimal-valuation entry so that all multipliers are
    integral at t=0; the pivot valuations are the invariant factors.
    """
    n = len(M)
    work = [[PuiseuxFraction(M[i][j]) for j in range(n)] for i in range(n)]
    increasing = []
    for step in range(n):
        size = n - step
        best = None
        where = None
        for i in range(size):
            for j in range(size):
                if work[i][j].is_zero:
                    continue
                v = work[i][j].val()
                if best is None or v < best:
                    best = v
                    where = (i, j)
        if where is None:
            raise OffSpaceError("matrix is singular: point is off the general linear group")
        pi, pj = where
        work[0], work[pi] = work[pi], work[0]
        for row in work:
            row[0], row[pj] = row[pj], row[0]
        pivot = work[0][0]
        increasing.append(pivot.val())
        for i in range(1, size):
            if not work[i][0].is_zero:
                f = work[i][0] / pivot
                work[i] = [a - f * b for a, b in zip(work[i], work[0])]
        for j in range(1, size):
            if not work[0][j].is_zero:
                f = work[0][j] / pivot
                for i in range(size):
                    work[i][j] = work[i][j] - f * work[i][0]
        work = [row[1:] for row in work[1:]]
    increasing.sort()
    return tuple(reversed(increasing))


def trop_point(space, branch):
    """Tropicalize a branch in the given catalog space.

    Dispatches on the space's family and checks that the result lies in the
    valuation cone.
    """
    coords = branch.coords
    if space.family == "torus":
        _expect_len(coords, space.rank)
        values = trop_torus(coords)
    elif space.family == "sl2_u":
        _expect_len(coords, 2)
        values = trop_sl2u(*coords)
    elif space.family == "gln":
        n = space.family_size
        _expect_len(coords, n * n)
        values = invariant_factor_valuations(branch.matrix(n))
    else:
        raise ValueError("unsupported space kind %r" % (space.family,))
    point = TropicalPoint(space, values)
    if not space.valuation_cone.contains(point.coords):
        raise OffSpaceError("tropical point %r escapes the valuation cone" % (values,))
    return point


def _expect_len(coords, n):
    if len(coords) != n:
        raise OffSpaceError("branch has %d coordinates, expected %d" % (len(coords), n))


def trop_branch_ray(space, branch):
    """Primitive ray and lattice multiplicity of a branch tropicalization.

    The multiplicity is the stretch factor onto the primitive generator.
    Zero tropicalizations (the branch stays in the interior) and fractional
    coordinates are rejected with dedicated errors.
    """
    point = trop_point(space, branch)
    if all(c == 0 for c in point.coords):
        raise ZeroTropicalizationError("branch tropicalizes to zero; no boundary ray")
    ints = []
    for c in point.coords:
        if c.denominator != 1:
            raise NonIntegerRayError(
                "tropical point %r is fractional; rescale the branch parameter"
                % (point.coords,)
            )
        ints.append(int(c))
    return primitive(tuple(ints))


def branch_rays(space, branches):
    """Rays with multiplicities from a list of branches.

    Branches tropicalizing to zero are excluded from ray assembly with a
    warning, per their error contract.
    """
    out = []
    for i, branch in enumerate(branches):
        try:
            out.append(trop_branch_ray(space, branch))
        except ZeroTropicalizationError:
            warnings.warn(
                "branch %d tropicalizes to zero and is excluded from the ray fan" % i
            )
    return out
