"""Weighted ray fans and the balancing condition for tropical curves.

The central check: the weighted sum of the primitive rays of a curve's
tropical fan equals minus the weighted sum of the color vectors, i.e. the
residual ``sum(m_r * v_r) + sum(m_c * v_c)`` vanishes.  Residuals are
reported as exact integer vectors so failures always carry a witness.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .lattice import (
    dot,
    mat_vec,
    matrix_rank,
    primitive,
    quotient_projection,
    solve_linear_system,
    vec_add,
    vec_scale,
)


@dataclass(frozen=True)
class WeightedRayFan:
    """Primitive rays with positive integer weights plus colored weights.

    ``rays`` maps primitive vectors in the valuation cone to weights;
    ``colored_weights`` maps palette indices to nonnegative weights.  Both
    are stored sorted and duplicate-free.
    """

    space: object
    rays: tuple = ()
    colored_weights: tuple = ()

    def __post_init__(self):
        rays = tuple((tuple(v), int(m)) for v, m in self.rays)
        seen = set()
        for v, m in rays:
            if len(v) != self.space.rank:
                raise ValueError("ray %r has the wrong dimension" % (v,))
            p, scale = primitive(v)
            if scale != 1 or p != v:
                raise ValueError("ray %r is not primitive" % (v,))
            if not self.space.valuation_cone.contains(v):
                raise ValueError("ray %r is outside the valuation cone" % (v,))
            if m <= 0:
                raise ValueError("ray %r has nonpositive weight %d" % (v, m))
            if v in seen:
                raise ValueError("duplicate ray %r" % (v,))
            seen.add(v)
        colored = tuple((int(j), int(m)) for j, m in self.colored_weights)
        seen_colors = set()
        for j, m in colored:
            self.space.palette_vector(j)  # raises KeyError when out of range
            if m < 0:
                raise ValueError("colored weight for index %d is negative" % j)
            if j in seen_colors:
                raise ValueError("duplicate colored weight for index %d" % j)
            seen_colors.add(j)
        object.__setattr__(self, "rays", tuple(sorted(rays)))
        object.__setattr__(self, "colored_weights", tuple(sorted(colored)))


@dataclass(frozen=True)
class BalanceReport:
    """Outcome of a balancing check, with exact residual witnesses."""

    residual: tuple
    balanced: bool
    quotient_residual: tuple
    per_character: tuple  # (character label, integer residual) pairs

    def per_character_dict(self):
        return dict(self.per_character)


def assemble(space, ray_contributions, colored=()):
    """Merge branch ray contributions and colored weights into a fan.

    Equal rays are merged with summed multiplicities; zero-weight rays are
    dropped with a warning; output ordering is lexicographic, hence
    deterministic.
    """
    totals = {}
    for v, m in ray_contributions:
        v = tuple(v)
        p, scale = primitive(v)
        if scale != 1:
            raise ValueError("ray %r is not primitive" % (v,))
        if not space.valuation_cone.contains(v):
            raise ValueError("ray %r is outside the valuation cone" % (v,))
        m = int(m)
        if m < 0:
            raise ValueError("negative multiplicity %d for ray %r" % (m, v))
        totals[v] = totals.get(v, 0) + m
    rays = []
    for v in sorted(totals):
        if totals[v] == 0:
            warnings.warn("ray %r has weight zero and is dropped from the fan" % (v,))
        else:
            rays.append((v, totals[v]))
    color_totals = {}
    for j, m in colored:
        color_totals[int(j)] = color_totals.get(int(j), 0) + int(m)
    colored_weights = tuple(sorted(color_totals.items()))
    return WeightedRayFan(space, tuple(rays), colored_weights)


def residual_vector(wf):
    """Exact integer residual ``sum(m_r * v_r) + sum(m_c * v_c)``."""
    n = wf.space.rank
    total = (0,) * n
    for v, m in wf.rays:
        total = vec_add(total, vec_scale(m, v))
    for j, m in wf.colored_weights:
        total = vec_add(total, vec_scale(m, wf.space.palette_vector(j)))
    return total


def palette_projection(space):
    """Quotient projection of the lattice by the span of the palette vectors."""
    vectors = [v for _, v in space.palette]
    return quotient_projection(vectors, space.rank)


def check_quotient_balancing(wf):
    """Residual after projecting along the palette directions.

    Colored weights are ignored: their vectors map to zero by construction
    of the projection.
    """
    projection = palette_projection(wf.space)
    m = len(projection)
    total = (0,) * m
    for v, weight in wf.rays:
        total = vec_add(total, vec_scale(weight, mat_vec(projection, v)))
    return total


def check_balancing(wf):
    """Full balancing report: residual, quotient residual, character pairings."""
    residual = residual_vector(wf)
    balanced = all(a == 0 for a in residual)
    per_character = tuple(
        (label, residual[i]) for i, label in enumerate(wf.space.character_basis_labels)
    )
    return BalanceReport(
        residual=residual,
        balanced=balanced,
        quotient_residual=check_quotient_balancing(wf),
        per_character=per_character,
    )


def pairing_residual(wf, character):
    """Pairing of the residual against an integer character vector.

    Vanishing on all basis characters is equivalent to balancing.
    """
    if len(character) != wf.space.rank:
        raise ValueError("character %r has the wrong dimension" % (character,))
    return dot(residual_vector(wf), tuple(character))


def solve_colored_weights(space, rays):
    """Nonnegative integer colored weights that balance the given rays.

    Returns the solution minimizing the total colored weight, ties broken
    lexicographically by palette index, or None when no solution exists.
    Linearly independent palettes are solved exactly; dependent ones fall
    back to exhaustive search bounded by the total ray mass.
    """
    wf = WeightedRayFan(space, tuple(rays), ())
    target = tuple(-a for a in residual_vector(wf))
    vectors = [v for _, v in space.palette]
    r = len(vectors)
    if r == 0:
        return () if all(a == 0 for a in target) else None
    columns = [[v[i] for v in vectors] for i in range(space.rank)]
    if matrix_rank(vectors) == r:
        solution = solve_linear_system(columns, target)
        if solution is None:
            return None
        weights = []
        for x in solution:
            if x.denominator != 1 or x < 0:
                return None
            weights.append(int(x))
        return tuple((j, weights[j]) for j in range(r))
    bound = sum(m * sum(abs(a) for a in v) for v, m in wf.rays)
    for total in range(bound + 1):
        for weights in _compositions(total, r):
            combo = (0,) * space.rank
            for w, v in zip(weights, vectors):
                combo = vec_add(combo, vec_scale(w, v))
            if combo == target:
                return tuple(enumerate(weights))
    return None


def _compositions(total, parts):
    """All nonnegative integer tuples of the given length and sum, in lex order."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail
