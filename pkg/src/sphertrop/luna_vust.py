"""Colored cones and colored fans with full axiom validation.

A colored cone is a pair (cone, set of palette indices); a colored fan is a
finite collection of colored cones over a fixed spherical space descriptor.
Validity is checked, never assumed: constructors accept raw data and the
``validate_*`` functions return structured reports, so axiom failures can be
demonstrated as first-class results.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import (
    Cone,
    is_zero_vector,
    quotient_projection,
    relint_common_point,
    relint_meets_region,
    saturation_basis,
    mat_vec,
)


@dataclass(frozen=True)
class SphericalSpace:
    """Combinatorial descriptor of a spherical homogeneous space.

    ``rank`` is the dimension of the cocharacter-side lattice, in which the
    valuation cone lives; ``palette`` lists the color labels with their
    vectors; ``character_basis_labels`` names the dual basis used for
    character pairings.  ``family``/``family_size`` tag catalog entries so
    tropicalization can dispatch.
    """

    name: str
    rank: int
    valuation_cone: Cone
    palette: tuple = ()
    character_basis_labels: tuple = ()
    family: str | None = None
    family_size: int | None = None

    def __post_init__(self):
        if not self.character_basis_labels:
            object.__setattr__(
                self,
                "character_basis_labels",
                tuple("chi%d" % (i + 1) for i in range(self.rank)),
            )

    def palette_labels(self):
        return tuple(label for label, _ in self.palette)

    def palette_vector(self, j):
        if not 0 <= j < len(self.palette):
            raise KeyError("unknown palette index %r" % (j,))
        return self.palette[j][1]

    def color_index(self, label):
        for j, (name, _) in enumerate(self.palette):
            if name == label:
                return j
        raise KeyError("unknown color label %r" % (label,))

    def invariant_problems(self):
        """Violations of the descriptor's own invariants, as strings."""
        problems = []
        if self.valuation_cone.ambient_dim != self.rank:
            problems.append("valuation cone lives in the wrong dimension")
        for label, v in self.palette:
            if len(v) != self.rank:
                problems.append("color %s has the wrong dimension" % label)
            elif is_zero_vector(v):
                problems.append("color %s has the zero vector" % label)
        if len(self.character_basis_labels) != self.rank:
            problems.append("character basis has the wrong size")
        return problems


@dataclass(frozen=True)
class ColoredCone:
    """A cone together with the palette indices of its colors."""

    cone: Cone
    colors: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "colors", frozenset(self.colors))

    def sort_key(self):
        return (self.cone.sort_key(), tuple(sorted(self.colors)))


@dataclass(frozen=True)
class ColoredFan:
    """A finite collection of colored cones over one space."""

    space: SphericalSpace
    cones: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "cones", tuple(self.cones))

    def member_index(self, cc):
        for i, member in enumerate(self.cones):
            if member.cone == cc.cone and member.colors == cc.colors:
                return i
        return None


@dataclass(frozen=True)
class Violation:
    member: int | None
    axiom: str
    message: str
    witness: tuple | None = None


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def axioms(self):
        return {v.axiom for v in self.violations}

    def add(self, member, axiom, message, witness=None):
        self.violations.append(Violation(member, axiom, message, witness))

    def extend(self, other):
        self.violations.extend(other.violations)

    def __str__(self):
        if self.ok:
            return "valid"
        return "; ".join(
            "[%s] member=%s %s" % (v.axiom, v.member, v.message) for v in self.violations
        )


class InvalidColoredConeError(ValueError):
    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


def validate_colored_cone(space, cc, member=None):
    """Check the colored-cone axioms plus strict convexity.

    CC1: the cone is generated by its color vectors together with its
    intersection with the valuation cone.  CC2: the relative interior meets
    the valuation cone.  CC3: no selected color vector is zero.  SC: the
    cone contains no line.  Unknown palette indices raise KeyError.
    """
    report = ValidationReport()
    sigma = cc.cone
    if sigma.ambient_dim != space.rank:
        report.add(member, "SPACE", "cone dimension %d != rank %d" % (sigma.ambient_dim, space.rank))
        return report
    color_vectors = [space.palette_vector(j) for j in sorted(cc.colors)]

    for j in sorted(cc.colors):
        if is_zero_vector(space.palette_vector(j)):
            report.add(member, "CC3", "color %s maps to the zero vector" % space.palette[j][0])

    intersection = sigma.intersect(space.valuation_cone)
    regenerated = Cone(
        [v for v in color_vectors if not is_zero_vector(v)] + list(intersection.generators),
        space.rank,
    )
    if regenerated != sigma:
        report.add(
            member,
            "CC1",
            "cone is not generated by its colors plus its valuation-cone part",
        )

    if not relint_meets_region(sigma, space.valuation_cone):
        report.add(member, "CC2", "relative interior misses the valuation cone")

    if not sigma.is_pointed():
        report.add(member, "SC", "cone contains a line (not strictly convex)")
    return report


def colored_faces(space, cc):
    """All colored faces of a valid colored cone, the cone itself included.

    The colors of a face are exactly the selected colors whose vectors lie
    in the face.  Raises :class:`InvalidColoredConeError` when ``cc`` fails
    validation.
    """
    report = validate_colored_cone(space, cc)
    if not report.ok:
        raise InvalidColoredConeError(report)
    out = []
    for face in cc.cone.faces():
        face_colors = frozenset(
            j for j in cc.colors if face.contains(space.palette_vector(j))
        )
        out.append(ColoredCone(face, face_colors))
    return out


def validate_colored_fan(fan):
    """Check every member's cone axioms plus the fan axioms CF1 and CF2.

    CF1: every supported colored face of a member is a member, where
    supported means the face's relative interior meets the valuation cone
    (an unsupported face is not a colored cone at all, so requiring it
    would outlaw every fan with colors off the valuation cone).  CF2:
    inside the valuation cone, relative interiors of distinct members are
    disjoint; violations carry an exact rational witness point.
    """
    space = fan.space
    report = ValidationReport()
    for problem in space.invariant_problems():
        report.add(None, "SPACE", problem)

    member_ok = []
    for i, cc in enumerate(fan.cones):
        sub = validate_colored_cone(space, cc, member=i)
        report.extend(sub)
        member_ok.append(sub.ok)

    for i, cc in enumerate(fan.cones):
        if not member_ok[i]:
            continue
        for face in colored_faces(space, cc):
            if not relint_meets_region(face.cone, space.valuation_cone):
                continue
            if fan.member_index(face) is None:
                report.add(
                    i,
                    "CF1",
                    "colored face %r with colors %s is missing from the fan"
                    % (list(face.cone.generators), sorted(face.colors)),
                )

    for i in range(len(fan.cones)):
        for j in range(i + 1, len(fan.cones)):
            witness = relint_common_point(
                fan.cones[i].cone, fan.cones[j].cone, space.valuation_cone
            )
            if witness is not None:
                report.add(
                    i,
                    "CF2",
                    "relative interiors of members %d and %d share the point %s inside the valuation cone"
                    % (i, j, list(witness)),
                    witness=witness,
                )
    return report


def is_toroidal(fan):
    """True iff no member carries a color."""
    return all(not cc.colors for cc in fan.cones)


def decolor(fan):
    """Strip colors and intersect every cone with the valuation cone.

    The result is closed under faces and toroidal; it is re-validated and
    the report returned alongside the fan.
    """
    base = validate_colored_fan(fan)
    if not base.ok:
        raise InvalidColoredConeError(base)
    space = fan.space
    collected = []

    def add(cone):
        for existing in collected:
            if existing == cone:
                return
        collected.append(cone)

    for cc in fan.cones:
        clipped = cc.cone.intersect(space.valuation_cone)
        add(clipped)
        for face in clipped.faces():
            add(face)
    collected.sort(key=lambda c: c.sort_key())
    out = ColoredFan(space, tuple(ColoredCone(c, frozenset()) for c in collected))
    return out, validate_colored_fan(out)


@dataclass(frozen=True)
class StarResult:
    """Star of a colored cone: the fan of the corresponding orbit closure."""

    projection: tuple  # rows of the quotient map Z^n -> Z^m
    kernel_basis: tuple  # saturated lattice basis of the projected-away span
    space: SphericalSpace
    fan: ColoredFan


def star(fan, cc, restriction_colors=None):
    """Quotient fan of the orbit closure attached to a member colored cone.

    Members of ``fan`` having ``cc`` as a colored face are mapped through the
    projection killing the saturated span of ``cc``'s cone.  Colors that
    survive on the orbit closure cannot be derived combinatorially, so they
    are the explicit parameter ``restriction_colors`` (palette indices);
    it defaults to the empty set, which is the correct value for colorless
    fans, and is required when ``cc`` itself has colors.
    """
    base = validate_colored_fan(fan)
    if not base.ok:
        raise InvalidColoredConeError(base)
    space = fan.space
    if fan.member_index(cc) is None:
        raise ValueError("the given colored cone is not a member of the fan")
    if cc.colors and restriction_colors is None:
        raise ValueError(
            "a colored cone needs explicit surviving colors for its star"
        )
    survivors = frozenset(restriction_colors or ())
    for j in survivors:
        space.palette_vector(j)  # raises KeyError when unknown

    vs = list(cc.cone.generators)
    projection = tuple(quotient_projection(vs, space.rank))
    kernel = tuple(saturation_basis(vs, space.rank))
    m = len(projection)

    new_palette = []
    index_map = {}
    for j in sorted(survivors):
        label, v = space.palette[j]
        image = mat_vec(projection, v)
        index_map[j] = len(new_palette)
        new_palette.append((label, image))

    quotient_space = SphericalSpace(
        name="%s/star" % space.name,
        rank=m,
        valuation_cone=Cone(
            [mat_vec(projection, g) for g in space.valuation_cone.generators],
            m,
        ),
        palette=tuple(new_palette),
        character_basis_labels=tuple("q%d" % (i + 1) for i in range(m)),
    )

    members = []
    for member in fan.cones:
        face_targets = colored_faces(space, member)
        if not any(
            f.cone == cc.cone and f.colors == cc.colors for f in face_targets
        ):
            continue
        image_cone = Cone([mat_vec(projection, g) for g in member.cone.generators], m)
        image_colors = frozenset(index_map[j] for j in member.colors & survivors)
        candidate = ColoredCone(image_cone, image_colors)
        if all(
            not (existing.cone == candidate.cone and existing.colors == candidate.colors)
            for existing in members
        ):
            members.append(candidate)
    members.sort(key=lambda c: c.sort_key())
    return StarResult(projection, kernel, quotient_space, ColoredFan(quotient_space, tuple(members)))
