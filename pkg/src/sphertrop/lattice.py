"""Exact integer/rational linear algebra and polyhedral cone primitives.

Everything here works over ``int`` and ``fractions.Fraction``; no decision
is ever made with floating point.  Vectors are plain tuples.  A linear
inequality is a pair ``(a, b)`` meaning ``a . x >= b``; cone descriptions
are homogeneous, so they are stored as bare normal vectors ``n`` meaning
``n . x >= 0``.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd


class ZeroVectorError(ValueError):
    """An operation that needs a direction received the zero vector."""


# ---------------------------------------------------------------------------
# vectors


def dot(u, v):
    if len(u) != len(v):
        raise ValueError("dimension mismatch: %d vs %d" % (len(u), len(v)))
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def is_zero_vector(v):
    return all(a == 0 for a in v)


def primitive(v):
    """Write an integer vector as ``m * p`` with ``p`` primitive and ``m >= 1``.

    Returns ``(p, m)``.  Raises :class:`ZeroVectorError` on the zero vector,
    which spans no ray.
    """
    if any(not isinstance(a, int) for a in v):
        raise TypeError("primitive() expects integer entries, got %r" % (v,))
    g = 0
    for a in v:
        g = gcd(g, abs(a))
    if g == 0:
        raise ZeroVectorError("zero vector has no direction")
    return tuple(a // g for a in v), g


def integral_direction(v):
    """Primitive integer vector spanning the same ray as the rational ``v``."""
    fr = [Fraction(a) for a in v]
    if all(a == 0 for a in fr):
        raise ZeroVectorError("zero vector has no direction")
    common = 1
    for a in fr:
        common = common * a.denominator // gcd(common, a.denominator)
    ints = [int(a * common) for a in fr]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    return tuple(a // g for a in ints)


def leading_positive(v):
    """Flip the sign of ``v`` if its first nonzero entry is negative."""
    for a in v:
        if a != 0:
            return v if a > 0 else tuple(-x for x in v)
    return tuple(v)


# ---------------------------------------------------------------------------
# matrices (lists of row tuples)


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def mat_vec(rows, x):
    return tuple(dot(tuple(row), x) for row in rows)


def mat_mul(A, B):
    Bt = list(zip(*B))
    return [[dot(tuple(row), col) for col in Bt] for row in A]


def matrix_rank(rows):
    """Rank over the rationals, by Gaussian elimination on Fractions."""
    work = [[Fraction(a) for a in row] for row in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, len(work)):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pv = work[rank][col]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col] / pv
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def rational_det(rows):
    """Exact determinant of a square matrix, over Fractions."""
    n = len(rows)
    work = [[Fraction(a) for a in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if work[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        pv = work[col][col]
        det *= pv
        for i in range(col + 1, n):
            if work[i][col] != 0:
                f = work[i][col] / pv
                work[i] = [a - f * b for a, b in zip(work[i], work[col])]
    return det


def solve_linear_system(rows, rhs):
    """One exact solution of ``rows . x = rhs`` or None if inconsistent.

    Free variables, if any, are set to zero.  Entries may be ints or
    Fractions; the solution is a tuple of Fractions.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [[Fraction(a) for a in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        pivot_row = None
        for i in range(r, m):
            if aug[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        pv = aug[r][col]
        aug[r] = [a / pv for a in aug[r]]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return tuple(x)


# ---------------------------------------------------------------------------
# Smith normal form


def _row_op(D, U, Uinv, i, k, q):
    # R_i -= q * R_k  on D and U; inverse op on columns of Uinv.
    D[i] = [a - q * b for a, b in zip(D[i], D[k])]
    U[i] = [a - q * b for a, b in zip(U[i], U[k])]
    for row in Uinv:
        row[k] += q * row[i]


def _col_op(D, V, j, k, q):
    # C_j -= q * C_k  on D and V.
    for row in D:
        row[j] -= q * row[k]
    for row in V:
        row[j] -= q * row[k]


def _swap_rows(D, U, Uinv, i, k):
    if i == k:
        return
    D[i], D[k] = D[k], D[i]
    U[i], U[k] = U[k], U[i]
    for row in Uinv:
        row[i], row[k] = row[k], row[i]


def _swap_cols(D, V, j, k):
    if j == k:
        return
    for row in D:
        row[j], row[k] = row[k], row[j]
    for row in V:
        row[j], row[k] = row[k], row[j]


def _snf(A):
    """Smith normal form with tracked inverse of U.

    Returns (U, D, V, Uinv) with ``U A V = D``; U, V unimodular; D diagonal
    with nonnegative entries satisfying d1 | d2 | ... .  Deterministic:
    pivots are the smallest-magnitude nonzero entries, ties broken in
    row-major order.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(a) for a in row] for row in A]
    U = identity_matrix(m)
    Uinv = identity_matrix(m)
    V = identity_matrix(n)

    def pick_pivot(k):
        best = None
        where = None
        for i in range(k, m):
            for j in range(k, n):
                a = D[i][j]
                if a != 0 and (best is None or abs(a) < best):
                    best = abs(a)
                    where = (i, j)
        return where

    def reduce_at(k):
        # Clear row k and column k beyond the diagonal, pivoting at (k, k).
        while True:
            where = pick_pivot(k)
            if where is None:
                return False
            _swap_rows(D, U, Uinv, k, where[0])
            _swap_cols(D, V, k, where[1])
            dirty = False
            for i in range(k + 1, m):
                if D[i][k] != 0:
                    q = D[i][k] // D[k][k]
                    _row_op(D, U, Uinv, i, k, q)
                    if D[i][k] != 0:
                        dirty = True
            for j in range(k + 1, n):
                if D[k][j] != 0:
                    q = D[k][j] // D[k][k]
                    _col_op(D, V, j, k, q)
                    if D[k][j] != 0:
                        dirty = True
            if not dirty:
                return True

    k = 0
    limit = min(m, n)
    while k < limit:
        if not reduce_at(k):
            break
        k += 1
    rank = k

    # Enforce the divisibility chain d_i | d_{i+1}.
    i = 0
    while i < rank - 1:
        a, b = D[i][i], D[i + 1][i + 1]
        if b % a != 0:
            # Fold d_{i+1} into column i and re-reduce from position i.
            _col_op(D, V, i, i + 1, -1)
            j = i
            while j < rank:
                reduce_at(j)
                j += 1
            i = 0
            continue
        i += 1

    for i in range(rank):
        if D[i][i] < 0:
            D[i] = [-a for a in D[i]]
            U[i] = [-a for a in U[i]]
            for row in Uinv:
                row[i] = -row[i]
    return U, D, V, Uinv


def smith_normal_form(A):
    """Return (U, D, V) with ``U A V = D`` in Smith normal form.

    U and V are unimodular; D is diagonal, nonnegative, with each diagonal
    entry dividing the next.  Output is deterministic for fixed input.
    """
    U, D, V, _ = _snf(A)
    return U, D, V


def quotient_projection(vs, dim):
    """Integer projection matrix killing exactly the saturated span of ``vs``.

    Returns a list of row tuples defining a surjection Z^dim -> Z^m with
    m = dim - rank(vs), whose rational kernel is span(vs).  Rows are sign
    normalized so their first nonzero entry is positive; for fixed input the
    output is deterministic.
    """
    for v in vs:
        if len(v) != dim:
            raise ValueError("vector %r does not live in Z^%d" % (v, dim))
    if not vs:
        return [tuple(row) for row in identity_matrix(dim)]
    cols = [[int(v[i]) for v in vs] for i in range(dim)]
    U, D, _, _ = _snf(cols)
    rank = sum(1 for i in range(min(dim, len(vs))) if D[i][i] != 0)
    return [leading_positive(tuple(U[i])) for i in range(rank, dim)]


def saturation_basis(vs, dim):
    """Lattice basis of the saturation of span(vs) inside Z^dim.

    Basis vectors are primitive with positive leading entry; the list is
    empty when ``vs`` is empty or all zero.
    """
    for v in vs:
        if len(v) != dim:
            raise ValueError("vector %r does not live in Z^%d" % (v, dim))
    if not vs:
        return []
    cols = [[int(v[i]) for v in vs] for i in range(dim)]
    _, D, _, Uinv = _snf(cols)
    rank = sum(1 for i in range(min(dim, len(vs))) if D[i][i] != 0)
    return [leading_positive(tuple(Uinv[i][j] for i in range(dim))) for j in range(rank)]


# ---------------------------------------------------------------------------
# exact linear feasibility (Fourier-Motzkin with witness reconstruction)


def _normalize_ineq(coeffs, rhs):
    """Scale ``coeffs . x >= rhs`` by a positive rational to primitive ints."""
    fr = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
    common = 1
    for a in fr:
        common = common * a.denominator // gcd(common, a.denominator)
    ints = [int(a * common) for a in fr]
    g = 0
    for a in ints:
        g = gcd(g, abs(a))
    if g > 1:
        ints = [a // g for a in ints]
    return tuple(ints[:-1]), ints[-1]


def feasible_point(ineqs, nvars):
    """Exact witness for a system of inequalities ``a . x >= b``, or None.

    ``ineqs`` is an iterable of ``(coeffs, rhs)`` pairs over ``nvars``
    variables.  Fourier-Motzkin elimination with Imbert's acceleration: a
    derived row combining more than ``eliminated + 1`` original rows is
    redundant and dropped, which keeps desk-scale systems small.
    """
    rows = {}
    for idx, (coeffs, rhs) in enumerate(ineqs):
        if len(coeffs) != nvars:
            raise ValueError("inequality arity %d != %d" % (len(coeffs), nvars))
        row = _normalize_ineq(coeffs, rhs)
        if all(c == 0 for c in row[0]):
            if row[1] > 0:
                return None
            continue
        ancestors = rows.get(row)
        if ancestors is None or len(ancestors) > 1:
            rows[row] = frozenset((idx,))
    return _feasible(rows, nvars, 1)


def _feasible(rows, nvars, step):
    if nvars == 0:
        return () if all(r <= 0 for (_, r) in rows) else None
    k = nvars - 1
    pos = [(row, anc) for row, anc in rows.items() if row[0][k] > 0]
    neg = [(row, anc) for row, anc in rows.items() if row[0][k] < 0]
    rest = {}
    contradiction = []

    def push(coeffs, rhs, ancestors):
        if all(c == 0 for c in coeffs):
            if rhs > 0:
                contradiction.append(True)
            return
        row = _normalize_ineq(coeffs, rhs)
        old = rest.get(row)
        if old is None or len(ancestors) < len(old):
            rest[row] = ancestors

    for (coeffs, rhs), anc in rows.items():
        if coeffs[k] == 0:
            push(coeffs[:k], rhs, anc)
    bound = step + 1
    for (cp, rp), anc_p in pos:
        for (cn, rn), anc_n in neg:
            ancestors = anc_p | anc_n
            if len(ancestors) > bound:
                continue
            a, b = -cn[k], cp[k]
            coeffs = tuple(a * x + b * y for x, y in zip(cp[:k], cn[:k]))
            push(coeffs, a * rp + b * rn, ancestors)
    if contradiction:
        return None
    sub = _feasible(rest, k, step + 1)
    if sub is None:
        return None
    lo = None
    for (coeffs, rhs), _ in pos:
        value = Fraction(rhs - dot(coeffs[:k], sub), coeffs[k])
        if lo is None or value > lo:
            lo = value
    hi = None
    for (coeffs, rhs), _ in neg:
        value = Fraction(rhs - dot(coeffs[:k], sub), coeffs[k])
        if hi is None or value < hi:
            hi = value
    if lo is not None and hi is not None:
        x = (lo + hi) / 2
    elif lo is not None:
        x = lo
    elif hi is not None:
        x = hi
    else:
        x = Fraction(0)
    return sub + (x,)


def _implied(normal, others, dim):
    """Is ``normal . x >= 0`` implied by ``o . x >= 0`` for all ``o``?"""
    rows = [(o, 0) for o in others]
    rows.append((tuple(-a for a in normal), 1))
    return feasible_point(rows, dim) is None


def _prune_normals(normals, dim):
    rows = sorted(set(normals))
    i = 0
    while i < len(rows):
        others = rows[:i] + rows[i + 1 :]
        if _implied(rows[i], others, dim):
            rows.pop(i)
        else:
            i += 1
    return rows


def _fm_homogeneous(rows, keep):
    """Eliminate all variables past index ``keep`` from homogeneous rows.

    Rows are primitive integer vectors meaning ``row . y >= 0``.  Imbert's
    acceleration applies: combinations of more than ``eliminated + 1``
    original rows are redundant and dropped on the spot.
    """
    current = {}
    for idx, row in enumerate(rows):
        if any(row):
            g = 0
            for a in row:
                g = gcd(g, abs(a))
            current.setdefault(tuple(a // g for a in row), frozenset((idx,)))
    nextra = (len(rows[0]) - keep) if rows else 0
    step = 0
    for k in range(keep + nextra - 1, keep - 1, -1):
        step += 1
        bound = step + 1
        out = {}

        def push(row, ancestors):
            if not any(row):
                return
            g = 0
            for v in row:
                g = gcd(g, abs(v))
            key = tuple(v // g for v in row)
            old = out.get(key)
            if old is None or len(ancestors) < len(old):
                out[key] = ancestors

        pos = [(r, a) for r, a in current.items() if r[k] > 0]
        neg = [(r, a) for r, a in current.items() if r[k] < 0]
        for r, a in current.items():
            if r[k] == 0:
                push(r[:k] + r[k + 1 :], a)
        for p, anc_p in pos:
            for q, anc_n in neg:
                ancestors = anc_p | anc_n
                if len(ancestors) > bound:
                    continue
                a, b = -q[k], p[k]
                row = tuple(a * x + b * y for x, y in zip(p, q))
                push(row[:k] + row[k + 1 :], ancestors)
        current = out
    return sorted(current)


def dual_description(vectors, dim):
    """The two-way bridge between generators and inequalities of a cone.

    Given generators, returns the irredundant inequality normals; given
    inequality normals, the same computation returns generators.  Both are
    instances of computing the dual cone's extreme data via Fourier-Motzkin
    elimination.
    """
    vecs = []
    for v in vectors:
        if len(v) != dim:
            raise ValueError("vector %r does not live in dimension %d" % (v, dim))
        if not is_zero_vector(v):
            vecs.append(integral_direction(v))
    if not vecs:
        # The zero cone: cut out by +-e_i for every coordinate.
        normals = []
        for i in range(dim):
            e = tuple(1 if j == i else 0 for j in range(dim))
            normals.append(e)
            normals.append(tuple(-a for a in e))
        return normals
    k = len(vecs)
    rows = []
    for i in range(dim):
        row = [0] * (dim + k)
        row[i] = 1
        for j, g in enumerate(vecs):
            row[dim + j] = -g[i]
        rows.append(tuple(row))
        rows.append(tuple(-a for a in row))
    for j in range(k):
        row = [0] * (dim + k)
        row[dim + j] = 1
        rows.append(tuple(row))
    projected = _fm_homogeneous(rows, dim)
    return _prune_normals(projected, dim)


# ---------------------------------------------------------------------------
# cones


class Cone:
    """Finitely generated rational convex cone.

    Stored by primitive integer generators (redundant generators are pruned
    deterministically); the inequality description is computed lazily by
    Fourier-Motzkin elimination and cached.  The zero cone has an empty
    generator list.  Instances are immutable; equality is set equality,
    decided by mutual containment.
    """

    __slots__ = ("ambient_dim", "generators", "_normals")

    def __init__(self, generators, ambient_dim=None, _normals=None):
        gens = list(generators)
        if ambient_dim is None:
            if not gens:
                raise ValueError("ambient dimension required for the zero cone")
            ambient_dim = len(gens[0])
        dirs = []
        for g in gens:
            if len(g) != ambient_dim:
                raise ValueError("generator %r not in dimension %d" % (g, ambient_dim))
            if not is_zero_vector(g):
                d = integral_direction(g)
                if d not in dirs:
                    dirs.append(d)
        dirs.sort()
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "generators", tuple(_reduce_generators(dirs, ambient_dim)))
        object.__setattr__(self, "_normals", _normals)

    def __setattr__(self, name, value):
        raise AttributeError("Cone is immutable")

    @classmethod
    def from_inequalities(cls, normals, ambient_dim):
        """Cone cut out by ``n . x >= 0`` for the given normals."""
        norm = []
        for n in normals:
            if len(n) != ambient_dim:
                raise ValueError("normal %r not in dimension %d" % (n, ambient_dim))
            if not is_zero_vector(n):
                norm.append(integral_direction(n))
        pruned = _prune_normals(norm, ambient_dim)
        gens = dual_description(pruned, ambient_dim)
        # A vacuous system describes the whole space, not the zero cone.
        if not pruned:
            gens = []
            for i in range(ambient_dim):
                e = tuple(1 if j == i else 0 for j in range(ambient_dim))
                gens.append(e)
                gens.append(tuple(-a for a in e))
        cone = cls(gens, ambient_dim)
        object.__setattr__(cone, "_normals", tuple(pruned))
        return cone

    @property
    def inequalities(self):
        """Irredundant primitive normals with ``n . x >= 0`` cutting out the cone."""
        if self._normals is None:
            normals = tuple(dual_description(self.generators, self.ambient_dim))
            object.__setattr__(self, "_normals", normals)
        return self._normals

    @property
    def is_zero(self):
        return not self.generators

    def dim(self):
        if not self.generators:
            return 0
        return matrix_rank(self.generators)

    def is_pointed(self):
        """True iff the cone contains no line."""
        if not self.generators:
            return True
        return matrix_rank(self.inequalities) == self.ambient_dim

    def contains(self, x):
        if len(x) != self.ambient_dim:
            raise ValueError("point %r not in dimension %d" % (x, self.ambient_dim))
        return all(dot(n, x) >= 0 for n in self.inequalities)

    def contains_cone(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains(g) for g in other.generators)

    def dual(self):
        """The dual cone ``{m : m . x >= 0 on self}`` as a Cone."""
        return Cone(self.inequalities, self.ambient_dim)

    def intersect(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Cone.from_inequalities(
            list(self.inequalities) + list(other.inequalities), self.ambient_dim
        )

    def faces(self):
        """All faces, including the cone itself and its minimal face."""
        normals = self.inequalities
        gen_sets = set()
        for r in range(len(normals) + 1):
            for subset in itertools.combinations(normals, r):
                kept = tuple(
                    g for g in self.generators if all(dot(n, g) == 0 for n in subset)
                )
                gen_sets.add(kept)
        faces = [Cone(gens, self.ambient_dim) for gens in gen_sets]
        faces.sort(key=lambda c: c.sort_key())
        return faces

    def sort_key(self):
        return (self.dim(), self.generators)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        if other.ambient_dim != self.ambient_dim:
            return False
        if self.generators == other.generators:
            return True
        return self.contains_cone(other) and other.contains_cone(self)

    __hash__ = None

    def __repr__(self):
        return "Cone(%r, dim=%d)" % (list(self.generators), self.ambient_dim)


def _member_of_cone(x, gens, dim):
    """Is ``x`` a nonnegative combination of ``gens``?  Exact feasibility."""
    if is_zero_vector(x):
        return True
    if not gens:
        return False
    k = len(gens)
    rows = []
    for i in range(dim):
        coeffs = tuple(g[i] for g in gens)
        rows.append((coeffs, x[i]))
        rows.append((tuple(-c for c in coeffs), -x[i]))
    for j in range(k):
        rows.append((tuple(1 if i == j else 0 for i in range(k)), 0))
    return feasible_point(rows, k) is not None


def _reduce_generators(dirs, dim):
    """Greedily drop generators lying in the cone of the others."""
    out = list(dirs)
    i = 0
    while i < len(out):
        others = out[:i] + out[i + 1 :]
        if _member_of_cone(out[i], others, dim):
            out.pop(i)
        else:
            i += 1
    return out


# spec-facing functional aliases ------------------------------------------------


def cone_contains(cone, x):
    """Exact membership of a rational point in a closed cone."""
    return cone.contains(x)


def cone_dual(cone):
    """Inequality description of ``cone``: normals of its supporting halfspaces."""
    return cone.inequalities


def relint_meets(cone_a, cone_b):
    """Does the relative interior of ``cone_a`` intersect ``cone_b``?

    Decided exactly: relint(cone_a) is the set of strictly positive
    combinations of its generators, and by homogeneity strict positivity
    can be normalized to ``lambda_i >= 1``.
    """
    if cone_b.ambient_dim != cone_a.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    gens = cone_a.generators
    if not gens:
        return True  # relint({0}) = {0}, and 0 is in every cone
    k = len(gens)
    rows = []
    for n in cone_b.inequalities:
        rows.append((tuple(dot(n, g) for g in gens), 0))
    for j in range(k):
        rows.append((tuple(1 if i == j else 0 for i in range(k)), 1))
    return feasible_point(rows, k) is not None


def relint_meets_region(cone, region):
    """Alias of :func:`relint_meets` for checks against a valuation region."""
    return relint_meets(cone, region)


def relint_common_point(cone_a, cone_b, region=None):
    """Exact rational point in relint(a) & relint(b) (& region), or None."""
    dim = cone_a.ambient_dim
    if cone_b.ambient_dim != dim or (region is not None and region.ambient_dim != dim):
        raise ValueError("ambient dimension mismatch")
    ga, gb = cone_a.generators, cone_b.generators
    ka, kb = len(ga), len(gb)
    nv = ka + kb
    rows = []
    for j in range(ka):
        rows.append((tuple(1 if i == j else 0 for i in range(nv)), 1))
    for j in range(kb):
        rows.append((tuple(1 if i == ka + j else 0 for i in range(nv)), 1))
    for i in range(dim):
        coeffs = tuple(g[i] for g in ga) + tuple(-g[i] for g in gb)
        rows.append((coeffs, 0))
        rows.append((tuple(-c for c in coeffs), 0))
    if region is not None:
        for n in region.inequalities:
            rows.append((tuple(dot(n, g) for g in ga) + (0,) * kb, 0))
    witness = feasible_point(rows, nv)
    if witness is None:
        return None
    point = [Fraction(0)] * dim
    for lam, g in zip(witness[:ka], ga):
        for i in range(dim):
            point[i] += lam * g[i]
    return tuple(point)


def faces(cone):
    """All faces of a cone; see :meth:`Cone.faces`."""
    return cone.faces()
