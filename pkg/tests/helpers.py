"""Shared random generators for the test suite (all seeded by callers)."""

from fractions import Fraction

from sphertrop.lattice import Cone, primitive, is_zero_vector
from sphertrop.puiseux import PuiseuxPoly

EXPONENTS = [Fraction(n, 2) for n in range(-4, 5)]


def random_poly(rng, min_terms=1, max_terms=3, allow_zero=False):
    if allow_zero and rng.random() < 0.15:
        return PuiseuxPoly.zero()
    nterms = rng.randint(min_terms, max_terms)
    terms = []
    for _ in range(nterms):
        coeff = 0
        while coeff == 0:
            coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        terms.append((rng.choice(EXPONENTS), coeff))
    p = PuiseuxPoly(terms)
    if p.is_zero and not allow_zero:
        return random_poly(rng, min_terms, max_terms, allow_zero)
    return p


def random_matrix(rng, n, allow_zero=True):
    return [[random_poly(rng, allow_zero=allow_zero) for _ in range(n)] for _ in range(n)]


def random_nonsingular_matrix(rng, n):
    from sphertrop.puiseux import determinant

    while True:
        M = random_matrix(rng, n)
        if not determinant(M).is_zero:
            return M


def random_unit_matrix(rng, n):
    """Matrix with valuation >= 0 entries and invertible reduction at t=0.

    Built as a unimodular integer matrix plus positive-valuation noise, so
    the constant-term determinant is +-1 and never vanishes.
    """
    base = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            base[i][k] += c * base[j][k]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = PuiseuxPoly.constant(base[i][j])
            if rng.random() < 0.5:
                exp = rng.choice([Fraction(1, 2), 1, 2])
                coeff = rng.randint(-3, 3)
                entry = entry + PuiseuxPoly.t_power(exp, coeff)
            row.append(entry)
        out.append(row)
    return out


def random_cone(rng, dim, max_gens=None):
    max_gens = max_gens or dim + 2
    k = rng.randint(1, max_gens)
    gens = []
    for _ in range(k):
        v = tuple(rng.randint(-3, 3) for _ in range(dim))
        if not is_zero_vector(v):
            gens.append(v)
    if not gens:
        return random_cone(rng, dim, max_gens)
    return Cone(gens, dim)


def random_valuation_ray(rng, space):
    """Primitive integer ray inside the valuation cone of a catalog space."""
    while True:
        if space.family == "gln":
            entries = sorted((rng.randint(-4, 4) for _ in range(space.rank)), reverse=True)
            v = tuple(entries)
        else:
            v = tuple(rng.randint(-4, 4) for _ in range(space.rank))
        if is_zero_vector(v):
            continue
        p, _ = primitive(v)
        if space.valuation_cone.contains(p):
            return p


def random_balanced_fan(rng, space, max_rays=3):
    """Exactly balanced weighted fan: random rays/colors, last ray solves.

    Follows the construction the balancing properties call for: pick rays
    and colored weights freely, then close the configuration with one extra
    ray carrying the residual (kept only when it lands in the valuation
    cone, else retry).
    """
    from sphertrop.balance import assemble, residual_vector, WeightedRayFan

    while True:
        nrays = rng.randint(1, max_rays)
        rays = {}
        for _ in range(nrays):
            rays[random_valuation_ray(rng, space)] = rng.randint(1, 4)
        colored = []
        for j in range(len(space.palette)):
            if rng.random() < 0.7:
                colored.append((j, rng.randint(0, 3)))
        partial = WeightedRayFan(space, tuple(rays.items()), tuple(colored))
        residual = residual_vector(partial)
        if all(a == 0 for a in residual):
            return partial
        closing = tuple(-a for a in residual)
        p, multiplier = primitive(closing)
        if not space.valuation_cone.contains(p):
            continue
        contributions = list(rays.items()) + [(p, multiplier)]
        return assemble(space, contributions, colored)
