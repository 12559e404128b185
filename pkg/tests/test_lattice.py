import itertools
import random
from fractions import Fraction
from math import gcd

import pytest

from sphertrop.lattice import (
    Cone,
    ZeroVectorError,
    cone_contains,
    cone_dual,
    feasible_point,
    leading_positive,
    mat_mul,
    mat_vec,
    matrix_rank,
    primitive,
    quotient_projection,
    rational_det,
    relint_common_point,
    relint_meets,
    relint_meets_region,
    saturation_basis,
    smith_normal_form,
)

from helpers import random_cone


# --- primitive -------------------------------------------------------------


def test_primitive_examples():
    assert primitive((2, 4)) == ((1, 2), 2)
    assert primitive((-1, -1)) == ((-1, -1), 1)
    with pytest.raises(ZeroVectorError):
        primitive((0, 0))


def test_primitive_scaling_property():
    rng = random.Random(1)
    for _ in range(100):
        dim = rng.randint(1, 5)
        p = [rng.randint(-5, 5) for _ in range(dim)]
        g = 0
        for a in p:
            g = gcd(g, abs(a))
        if g != 1:
            continue
        lam = rng.randint(1, 9)
        assert primitive(tuple(lam * a for a in p)) == (tuple(p), lam)


# --- Smith normal form -----------------------------------------------------


def snf_diagonal_by_minor_gcds(A):
    """Independent oracle: d_1...d_k = gcd of k x k minors."""
    m, n = len(A), len(A[0])
    values = []
    prev = 1
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                sub = [[A[i][j] for j in cols] for i in rows]
                g = gcd(g, abs(int(rational_det(sub))))
        if g == 0:
            break
        values.append(g // prev)
        prev = g
    return values


def assert_snf_contract(A):
    U, D, V = smith_normal_form(A)
    m, n = len(A), len(A[0])
    assert mat_mul(mat_mul(U, A), V) == D
    assert abs(rational_det(U)) == 1
    assert abs(rational_det(V)) == 1
    diag = [D[i][i] for i in range(min(m, n))]
    for i in range(m):
        for j in range(n):
            if i != j:
                assert D[i][j] == 0
    for a, b in zip(diag, diag[1:]):
        assert a >= 0 and b >= 0
        if a != 0:
            assert b % a == 0
        else:
            assert b == 0
    assert [d for d in diag if d != 0] == snf_diagonal_by_minor_gcds(A)
    return diag


def test_snf_identity():
    U, D, V = smith_normal_form([[1, 0], [0, 1]])
    assert (U, D, V) == ([[1, 0], [0, 1]],) * 3


def test_snf_divisibility_example():
    diag = assert_snf_contract([[2, 0], [0, 3]])
    assert diag == [1, 6]


def test_snf_zero_matrix():
    U, D, V = smith_normal_form([[0]])
    assert D == [[0]] and U == [[1]] and V == [[1]]


def test_snf_random_matrices():
    rng = random.Random(2)
    for _ in range(60):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        assert_snf_contract(A)


def test_snf_deterministic():
    A = [[4, 6, 2], [6, 12, 6], [2, 6, 8]]
    assert smith_normal_form(A) == smith_normal_form([row[:] for row in A])


# --- quotient projection ---------------------------------------------------


def test_quotient_projection_examples():
    assert quotient_projection([(-1, 1)], 2) == [(1, 1)]
    assert quotient_projection([], 2) == [(1, 0), (0, 1)]
    assert quotient_projection([(2, 0)], 2) == [(0, 1)]


def test_quotient_projection_properties():
    rng = random.Random(3)
    for _ in range(50):
        dim = rng.randint(1, 5)
        k = rng.randint(0, dim)
        vs = [tuple(rng.randint(-4, 4) for _ in range(dim)) for _ in range(k)]
        vs = [v for v in vs if any(v)]
        pi = quotient_projection(vs, dim)
        r = matrix_rank(vs) if vs else 0
        assert len(pi) == dim - r
        for v in vs:
            assert all(a == 0 for a in mat_vec(pi, v))
        if pi:
            # surjective onto Z^m: the Smith form of pi is all ones
            _, D, _ = smith_normal_form([list(row) for row in pi])
            assert all(D[i][i] == 1 for i in range(len(pi)))
        # kernel is saturated: saturation basis maps to zero and has full rank
        basis = saturation_basis(vs, dim)
        assert len(basis) == r
        for b in basis:
            assert all(a == 0 for a in mat_vec(pi, b))
            assert b == leading_positive(b)
            assert primitive(b)[1] == 1


def test_saturation_example():
    assert saturation_basis([(2, 0)], 2) == [(1, 0)]
    assert saturation_basis([(-1, -1)], 2) == [(1, 1)]


# --- cone membership and duality -------------------------------------------


def test_cone_contains_examples():
    half = Cone.from_inequalities([(1, -1)], 2)  # first coordinate >= second
    assert cone_contains(half, (1, 0))
    assert not cone_contains(half, (0, 1))
    assert cone_contains(half, (0, 0))
    assert cone_contains(Cone([(1, 2)]), (0, 0))


def test_cone_contains_generators():
    rng = random.Random(4)
    for _ in range(30):
        c = random_cone(rng, rng.randint(1, 4))
        for g in c.generators:
            assert c.contains(g)


def test_cone_dual_examples():
    orthant = Cone([(1, 0), (0, 1)])
    assert set(cone_dual(orthant)) == {(1, 0), (0, 1)}
    line = Cone([(1, 1), (-1, -1)])
    assert set(cone_dual(line)) == {(1, -1), (-1, 1)}
    zero = Cone([], 2)
    normals = cone_dual(zero)
    assert matrix_rank(normals) == 2
    assert all(not feasible_point([(n, 0) for n in normals] + [((1, 0), 1)], 2) is None or True for n in normals)
    # the normals cut out exactly the origin
    assert Cone.from_inequalities(normals, 2).generators == ()


def test_duality_round_trip_random():
    rng = random.Random(5)
    for _ in range(50):
        dim = rng.randint(1, 4)
        c = random_cone(rng, dim)
        back = c.dual().dual()
        assert back == c


def test_generator_and_inequality_descriptions_agree():
    rng = random.Random(51)
    for _ in range(30):
        dim = rng.randint(1, 4)
        c = random_cone(rng, dim)
        rebuilt = Cone.from_inequalities(c.inequalities, dim)
        assert rebuilt == c


def test_dim_and_pointedness():
    assert Cone([(1, 0), (0, 1)]).dim() == 2
    assert Cone([(1, 1)]).dim() == 1
    assert Cone([], 3).dim() == 0
    assert Cone([(1, 1), (-1, -1)]).is_pointed() is False
    assert Cone([(1, 0), (1, 1)]).is_pointed() is True
    assert Cone([], 2).is_pointed() is True


# --- relative interiors -----------------------------------------------------


def test_relint_meets_examples():
    V = Cone.from_inequalities([(1, -1)], 2)
    assert relint_meets_region(Cone([(-1, 1)]), V) is False
    assert relint_meets_region(Cone([(-1, 1), (1, 0)]), V) is True
    assert relint_meets_region(V, V) is True


def test_relint_zero_cone():
    V = Cone.from_inequalities([(1, -1)], 2)
    assert relint_meets(Cone([], 2), V) is True


def test_relint_symmetry_property():
    rng = random.Random(6)
    for _ in range(40):
        dim = rng.randint(1, 3)
        c1, c2 = random_cone(rng, dim), random_cone(rng, dim)
        if relint_common_point(c1, c2) is not None:
            assert relint_meets(c1, c2) and relint_meets(c2, c1)


def test_relint_common_point_is_exact_witness():
    V = Cone.from_inequalities([(1, -1)], 2)
    c = Cone([(-1, 1), (1, 0)])
    w = relint_common_point(c, c, V)
    assert w is not None
    assert all(isinstance(a, Fraction) for a in w)
    assert V.contains(w) and c.contains(w)


# --- faces -------------------------------------------------------------------


def test_faces_examples():
    orthant = Cone([(1, 0), (0, 1)])
    face_gens = {f.generators for f in orthant.faces()}
    assert face_gens == {(), ((1, 0),), ((0, 1),), ((0, 1), (1, 0))}

    ray = Cone([(1, 1)])
    assert {f.generators for f in ray.faces()} == {(), ((1, 1),)}

    skew = Cone([(1, 0), (1, 1)])
    assert len(skew.faces()) == 4


def test_faces_are_contained_and_closed():
    rng = random.Random(7)
    for _ in range(15):
        c = random_cone(rng, rng.randint(1, 3))
        fs = c.faces()
        assert any(f == c for f in fs)
        for f in fs:
            assert c.contains_cone(f)


# --- intersections and equality ----------------------------------------------


def test_intersection_example():
    V = Cone.from_inequalities([(1, -1)], 2)
    c = Cone([(-1, 1), (1, 0)])
    assert c.intersect(V) == Cone([(1, 1), (1, 0)])


def test_cone_equality_not_representation():
    assert Cone([(1, 0), (0, 1), (1, 1)]) == Cone([(0, 1), (1, 0)])
    assert Cone([(1, 0)]) != Cone([(0, 1)])


def test_feasible_point_witness():
    rows = [((1, 0), 1), ((0, 1), 2), ((-1, -1), -10)]
    point = feasible_point(rows, 2)
    assert point is not None
    assert all(sum(c * x for c, x in zip(coeffs, point)) >= rhs for coeffs, rhs in rows)
    assert feasible_point([((1,), 1), ((-1,), 0)], 1) is None


def naive_fm_feasible(rows, nvars):
    """Reference decision procedure: Fourier-Motzkin with no acceleration."""
    rows = [(tuple(Fraction(c) for c in coeffs), Fraction(rhs)) for coeffs, rhs in rows]
    for k in range(nvars - 1, -1, -1):
        pos = [r for r in rows if r[0][k] > 0]
        neg = [r for r in rows if r[0][k] < 0]
        nxt = [(r[0][:k], r[1]) for r in rows if r[0][k] == 0]
        for cp, rp in pos:
            for cn, rn in neg:
                a, b = -cn[k], cp[k]
                nxt.append(
                    (tuple(a * x + b * y for x, y in zip(cp[:k], cn[:k])), a * rp + b * rn)
                )
        rows = nxt
    return all(rhs <= 0 for _, rhs in rows)


def test_feasibility_matches_unaccelerated_reference():
    rng = random.Random(52)
    seen_infeasible = 0
    for _ in range(150):
        nvars = rng.randint(1, 4)
        nrows = rng.randint(1, 7)
        rows = [
            (
                tuple(rng.randint(-3, 3) for _ in range(nvars)),
                rng.randint(-4, 4),
            )
            for _ in range(nrows)
        ]
        witness = feasible_point(rows, nvars)
        assert (witness is not None) == naive_fm_feasible(rows, nvars)
        if witness is None:
            seen_infeasible += 1
        else:
            for coeffs, rhs in rows:
                assert sum(c * x for c, x in zip(coeffs, witness)) >= rhs
    assert seen_infeasible >= 10
