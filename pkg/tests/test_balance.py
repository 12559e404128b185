import random
import warnings

import pytest

from sphertrop.balance import (
    WeightedRayFan,
    assemble,
    check_balancing,
    check_quotient_balancing,
    pairing_residual,
    residual_vector,
    solve_colored_weights,
)
from sphertrop.catalog import builtin_space

from helpers import random_balanced_fan

GL2 = builtin_space("gln", 2)
SL2U = builtin_space("sl2_u")
TORUS2 = builtin_space("torus", 2)


def gl2_reference_fan():
    return WeightedRayFan(GL2, (((-1, -1), 1), ((1, 0), 2)), ((0, 1),))


# --- assembly -------------------------------------------------------------------


def test_assemble_reference_example():
    wf = assemble(GL2, [((1, 0), 2), ((-1, -1), 1)], [(0, 1)])
    assert wf.rays == (((-1, -1), 1), ((1, 0), 2))
    assert wf.colored_weights == ((0, 1),)


def test_assemble_merges_equal_rays():
    wf = assemble(TORUS2, [((1, 0), 2), ((1, 0), 3)])
    assert wf.rays == (((1, 0), 5),)


def test_assemble_empty():
    wf = assemble(TORUS2, [])
    assert wf.rays == () and wf.colored_weights == ()
    assert check_balancing(wf).balanced


def test_assemble_drops_zero_weight_with_warning():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        wf = assemble(SL2U, [((-1,), 3), ((1,), 0)], [(0, 3)])
    assert wf.rays == (((-1,), 3),)
    assert any("weight zero" in str(w.message) for w in caught)


def test_assemble_rejects_bad_rays():
    with pytest.raises(ValueError):
        assemble(TORUS2, [((2, 4), 1)])  # not primitive
    with pytest.raises(ValueError):
        assemble(GL2, [((-1, 1), 1)])  # outside the valuation cone


def test_weighted_fan_invariants():
    with pytest.raises(ValueError):
        WeightedRayFan(GL2, (((1, 0), 0),), ())
    with pytest.raises(ValueError):
        WeightedRayFan(GL2, (((1, 0), 1), ((1, 0), 1)), ())
    with pytest.raises(KeyError):
        WeightedRayFan(GL2, (), ((4, 1),))
    with pytest.raises(ValueError):
        WeightedRayFan(GL2, (), ((0, -1),))


# --- balancing ------------------------------------------------------------------


def test_check_balancing_reference_curve():
    report = check_balancing(gl2_reference_fan())
    assert report.residual == (0, 0)
    assert report.balanced
    assert report.quotient_residual == (0,)
    assert report.per_character == (("chi1", 0), ("chi2", 0))


def test_check_balancing_torus_line():
    wf = WeightedRayFan(TORUS2, (((-1, -1), 1), ((0, 1), 1), ((1, 0), 1)), ())
    assert check_balancing(wf).balanced


def test_check_balancing_sl2u_example():
    wf = assemble(SL2U, [((-1,), 3), ((1,), 2)], [(0, 1)])
    report = check_balancing(wf)
    assert report.residual == (0,) and report.balanced


def test_check_balancing_unbalanced_witness():
    wf = WeightedRayFan(GL2, (((1, 0), 1),), ())
    report = check_balancing(wf)
    assert report.residual == (1, 0)
    assert not report.balanced


# --- pairing form ------------------------------------------------------------------


def test_pairing_residual_examples():
    balanced = gl2_reference_fan()
    assert pairing_residual(balanced, (1, 0)) == 0
    unbalanced = WeightedRayFan(GL2, (((1, 0), 1),), ())
    assert pairing_residual(unbalanced, (1, 0)) == 1
    assert pairing_residual(unbalanced, (0, 0)) == 0
    with pytest.raises(ValueError):
        pairing_residual(balanced, (1, 0, 0))


def test_pairing_reconstructs_residual():
    rng = random.Random(31)
    for _ in range(50):
        wf = random_balanced_fan(rng, builtin_space("gln", rng.choice([2, 3])))
        residual = residual_vector(wf)
        n = wf.space.rank
        basis = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
        assert tuple(pairing_residual(wf, e) for e in basis) == residual


# --- quotient balancing ---------------------------------------------------------------


def test_quotient_balancing_examples():
    assert check_quotient_balancing(gl2_reference_fan()) == (0,)
    torus_fan = WeightedRayFan(TORUS2, (((1, 0), 1),), ())
    assert check_quotient_balancing(torus_fan) == residual_vector(torus_fan) == (1, 0)
    unbalanced = WeightedRayFan(GL2, (((1, 0), 1),), ())
    assert check_quotient_balancing(unbalanced) == (1,)


def test_balanced_implies_quotient_balanced():
    rng = random.Random(32)
    for _ in range(150):
        space = builtin_space("gln", rng.choice([2, 3]))
        wf = random_balanced_fan(rng, space)
        report = check_balancing(wf)
        assert report.balanced
        assert all(a == 0 for a in report.quotient_residual)


def test_colored_terms_lie_in_projection_kernel():
    from sphertrop.balance import palette_projection
    from sphertrop.lattice import mat_vec

    for space in (GL2, builtin_space("gln", 3), SL2U):
        pi = palette_projection(space)
        for _, v in space.palette:
            assert all(a == 0 for a in mat_vec(pi, v))


# --- colored weight solver --------------------------------------------------------------


def test_solver_examples():
    assert solve_colored_weights(GL2, (((1, 0), 2), ((-1, -1), 1))) == ((0, 1),)
    assert solve_colored_weights(TORUS2, (((1, 0), 1), ((-1, 0), 1))) == ()
    assert solve_colored_weights(TORUS2, (((1, 0), 1),)) is None
    assert solve_colored_weights(SL2U, (((-1,), 3), ((1,), 2))) == ((0, 1),)


def test_solver_infeasible_cases():
    # residual not in the palette span
    assert solve_colored_weights(GL2, (((1, 1), 1),)) is None
    # needs a negative weight
    assert solve_colored_weights(GL2, (((-1, -1), 1), ((1, 0), 1))) is None


def test_solver_solution_balances():
    rng = random.Random(33)
    found = 0
    while found < 40:
        space = builtin_space("gln", rng.choice([2, 3]))
        wf = random_balanced_fan(rng, space)
        solution = solve_colored_weights(space, wf.rays)
        if solution is None:
            continue
        found += 1
        rebuilt = WeightedRayFan(space, wf.rays, solution)
        assert check_balancing(rebuilt).balanced


# --- scaling and splitting invariances -----------------------------------------------------


def test_weight_scaling_preserves_balance():
    wf = gl2_reference_fan()
    for c in (2, 3, 7):
        scaled = WeightedRayFan(
            GL2,
            tuple((v, c * m) for v, m in wf.rays),
            tuple((j, c * m) for j, m in wf.colored_weights),
        )
        assert check_balancing(scaled).balanced


def test_split_ray_weights_preassembly():
    merged = assemble(GL2, [((1, 0), 2), ((-1, -1), 1)], [(0, 1)])
    split = assemble(GL2, [((1, 0), 1), ((1, 0), 1), ((-1, -1), 1)], [(0, 1)])
    assert merged == split
    assert check_balancing(merged) == check_balancing(split)
