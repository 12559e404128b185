"""Deterministic SVG rendering of rank-1 and rank-2 fans.

The drawing shows the valuation cone as a shaded region, the palette as
labeled dots, and rays with their weight labels.  All geometry is computed
with exact rationals and formatted with fixed-point integer arithmetic, so
identical input yields identical bytes.
"""

from __future__ import annotations

from fractions import Fraction

BOX = 200  # half-width of the drawing area in user units
UNIT = 55  # pixels per lattice step
RAY_LEN = 165
AXIS_LEN = 190


class PlotError(ValueError):
    """The fan cannot be drawn (unsupported rank)."""


def _fmt(x):
    """Fixed-point decimal with two digits, via integer arithmetic only."""
    x = Fraction(x)
    scaled = x * 100
    # round half away from zero, deterministically
    n, d = scaled.numerator, scaled.denominator
    if n >= 0:
        i = (2 * n + d) // (2 * d)
    else:
        i = -((-2 * n + d) // (2 * d))
    sign = "-" if i < 0 else ""
    i = abs(i)
    return "%s%d.%02d" % (sign, i // 100, i % 100)


def _pt(v):
    """Map a rational plane point to SVG coordinates (y axis flipped)."""
    return "%s,%s" % (_fmt(v[0]), _fmt(-v[1]))


def _stretch(v, length):
    m = max(abs(Fraction(a)) for a in v)
    return tuple(Fraction(a) * length / m for a in v)


def _angle_key(v):
    """Exact circular order of a nonzero plane vector, starting at +x."""
    x, y = Fraction(v[0]), Fraction(v[1])
    if y > 0 or (y == 0 and x > 0):
        half = 0
    else:
        half = 1
    # within a half-turn, order by decreasing x/r: compare via cross products
    return (half, _HalfTurnKey(x, y))


class _HalfTurnKey:
    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = x
        self.y = y

    def __lt__(self, other):
        # cross > 0 means self is counterclockwise-before other
        return self.y * other.x - self.x * other.y < 0

    def __eq__(self, other):
        return self.y * other.x - self.x * other.y == 0

    __hash__ = None


def _region_polygon(cone):
    """Vertices of cone intersect box, counterclockwise; None if trivial."""
    if cone.is_zero:
        return None
    corners = [(BOX, BOX), (-BOX, BOX), (-BOX, -BOX), (BOX, -BOX)]
    if not cone.inequalities:  # the whole plane
        return [tuple(map(Fraction, c)) for c in corners]
    points = []
    for g in cone.generators:
        points.append(_stretch(g, BOX))
    for c in corners:
        if cone.contains(c):
            points.append(tuple(map(Fraction, c)))
    unique = []
    for p in points:
        if any(p == q for q in unique):
            continue
        unique.append(p)
    unique.sort(key=_angle_key)
    if cone.is_pointed():
        origin = (Fraction(0), Fraction(0))
        # open the wedge at the origin: start after the widest angular gap
        unique = _rotate_past_gap(unique)
        return [origin] + unique
    return unique


def _rotate_past_gap(points):
    """Rotate a circularly sorted list so it starts after the largest gap.

    For a pointed cone the boundary rays bound an angular gap of more than
    zero; the polygon must run through the cone, not the gap.  The gap is
    located exactly: consecutive points u, v (circularly) are inside the
    cone's span iff every point lies weakly between them going ccw.
    """
    n = len(points)
    if n <= 1:
        return points
    best_i = 0
    best = None
    for i in range(n):
        u = points[i]
        v = points[(i + 1) % n]
        # angular size of the arc u -> v, measured by ordering: use cross sign
        key = _gap_size(u, v)
        if best is None or key > best:
            best = key
            best_i = i
    return points[best_i + 1 :] + points[: best_i + 1]


def _gap_size(u, v):
    """Comparable proxy for the ccw arc angle from u to v.

    The cotangent of the arc angle is dot/cross and is strictly decreasing
    on (0, 180) and on (180, 360), so (quadrant class, -dot/cross) orders
    arcs exactly without any trigonometry.
    """
    cross = u[0] * v[1] - u[1] * v[0]
    dotp = u[0] * v[0] + u[1] * v[1]
    if cross == 0:
        return (0, Fraction(0)) if dotp > 0 else (2, Fraction(0))
    if cross > 0:
        return (1, -Fraction(dotp) / Fraction(cross))
    return (3, -Fraction(dotp) / Fraction(cross))


def _svg(parts):
    header = (
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="%d %d %d %d">'
        % (-BOX - 20, -BOX - 20, 2 * BOX + 40, 2 * BOX + 40)
    )
    return header + "\n" + "\n".join(parts) + "\n</svg>\n"


def _text(x, y, content, size=13, anchor="middle", fill="#000000"):
    return (
        '<text x="%s" y="%s" font-size="%d" font-family="monospace" '
        'text-anchor="%s" fill="%s">%s</text>' % (_fmt(x), _fmt(-y), size, anchor, fill, content)
    )


def render_rank2(space, rays, colored_weights=(), cones=()):
    parts = []
    region = _region_polygon(space.valuation_cone)
    if region:
        parts.append(
            '<polygon points="%s" fill="#f4c7c3" stroke="none"/>'
            % " ".join(_pt(p) for p in region)
        )
    for i in range(-3, 4):
        for j in range(-3, 4):
            parts.append(
                '<circle cx="%s" cy="%s" r="1.5" fill="#555555"/>'
                % (_fmt(Fraction(i * UNIT)), _fmt(Fraction(-j * UNIT)))
            )
    parts.append('<line x1="%d" y1="0" x2="%d" y2="0" stroke="#888888"/>' % (-AXIS_LEN, AXIS_LEN))
    parts.append('<line x1="0" y1="%d" x2="0" y2="%d" stroke="#888888"/>' % (-AXIS_LEN, AXIS_LEN))

    for cc in cones:
        for g in cc.cone.generators:
            tip = _stretch(g, RAY_LEN - 25)
            parts.append(
                '<line x1="0" y1="0" x2="%s" y2="%s" stroke="#bbbbbb" stroke-width="2"/>'
                % (_fmt(tip[0]), _fmt(-tip[1]))
            )

    for v, m in rays:
        tip = _stretch(v, RAY_LEN)
        parts.append(
            '<line x1="0" y1="0" x2="%s" y2="%s" stroke="#000000" stroke-width="3"/>'
            % (_fmt(tip[0]), _fmt(-tip[1]))
        )
        label_at = tuple(a * Fraction(6, 10) for a in tip)
        offset = (label_at[0] + 12, label_at[1] + 12)
        parts.append(_text(offset[0], offset[1], str(m)))

    for idx, (label, v) in enumerate(space.palette):
        dot_at = tuple(Fraction(a * UNIT) for a in v)
        parts.append(
            '<circle cx="%s" cy="%s" r="4" fill="#3355cc"/>' % (_fmt(dot_at[0]), _fmt(-dot_at[1]))
        )
        weight = dict(colored_weights).get(idx)
        text = label if weight is None else "%s (%s)" % (label, weight)
        parts.append(_text(dot_at[0], dot_at[1] + 14, text, fill="#3355cc"))
    return _svg(parts)


def render_rank1(space, rays, colored_weights=()):
    parts = []
    region = space.valuation_cone
    lo = -AXIS_LEN if region.contains((-1,)) else 0
    hi = AXIS_LEN if region.contains((1,)) else 0
    parts.append(
        '<rect x="%d" y="-6" width="%d" height="12" fill="#f4c7c3"/>' % (lo, hi - lo)
    )
    parts.append('<line x1="%d" y1="0" x2="%d" y2="0" stroke="#888888"/>' % (-AXIS_LEN, AXIS_LEN))
    for i in range(-3, 4):
        parts.append(
            '<line x1="%d" y1="-4" x2="%d" y2="4" stroke="#555555"/>' % (i * UNIT, i * UNIT)
        )
    for v, m in rays:
        tip = RAY_LEN if v[0] > 0 else -RAY_LEN
        parts.append(
            '<line x1="0" y1="0" x2="%d" y2="0" stroke="#000000" stroke-width="3"/>' % tip
        )
        parts.append(_text(Fraction(tip * 6, 10), Fraction(20), str(m)))
    for idx, (label, v) in enumerate(space.palette):
        x = Fraction(v[0] * UNIT)
        parts.append('<circle cx="%s" cy="0" r="4" fill="#3355cc"/>' % _fmt(x))
        weight = dict(colored_weights).get(idx)
        text = label if weight is None else "%s (%s)" % (label, weight)
        parts.append(_text(x, Fraction(-18), text, fill="#3355cc"))
    return _svg(parts)


def render_fan(space, rays=(), colored_weights=(), cones=()):
    """SVG text for a weighted or plain fan; ranks 1 and 2 only."""
    if space.rank == 2:
        return render_rank2(space, rays, colored_weights, cones)
    if space.rank == 1:
        return render_rank1(space, rays, colored_weights)
    raise PlotError("plotting supports rank 1 and 2, got rank %d" % space.rank)
