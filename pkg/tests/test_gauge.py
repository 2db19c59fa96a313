from fractions import Fraction

import pytest

from hopfdeform.errors import PreconditionError
from hopfdeform.hseries import HSeries
from hopfdeform.identities import gauge_act, twist_defect
from hopfdeform.lie import dj_r_matrix
from hopfdeform.solvers import associator_for_twist, gauge_equivalent, solve_twist
from hopfdeform.tensor import TensorPoly, embed_wedge


def test_identical_solutions(sl2, sl2_assoc4, sl2_twist4):
    g = gauge_equivalent(sl2_twist4.F, sl2_twist4.F, sl2_assoc4.phi)
    assert g.ok
    assert g.u == HSeries.unit(sl2, 1, 4, g.u.degree_cap)
    assert g.unit_antipode_product


def test_pivot_permuted_runs(sl2, sl2_assoc4, sl2_twist4):
    other = solve_twist(sl2, dj_r_matrix(sl2), sl2_assoc4, 4, pivot_reverse=True)
    g = gauge_equivalent(sl2_twist4.F, other.F, sl2_assoc4.phi)
    assert g.ok
    assert g.unit_antipode_product


def test_synthetic_gauge_recovered(sl2, sl2_assoc4, sl2_twist4):
    z = HSeries.from_terms(
        sl2, 1, 4,
        {2: TensorPoly(sl2, 1, {((1, 0, 0),): Fraction(1, 2)}),
         3: TensorPoly(sl2, 1, {((0, 1, 0),): Fraction(1, 3)})},
    )
    u0 = z.exp()
    F2 = gauge_act(u0, sl2_twist4.F)
    assert twist_defect(F2, sl2_assoc4.phi).is_zero()
    g = gauge_equivalent(sl2_twist4.F, F2, sl2_assoc4.phi)
    assert g.ok and g.unit_antipode_product
    assert gauge_act(g.u, F2) == sl2_twist4.F


def test_parameter_drift_rejected(sl2, sl2_assoc4, sl2_twist4):
    drift = sl2_twist4.F.add_term(
        3, embed_wedge(sl2, dj_r_matrix(sl2)).scale(Fraction(1, 5))
    )
    g = gauge_equivalent(sl2_twist4.F, drift, sl2_assoc4.phi)
    assert not g.ok
    assert g.failure_order == 3
    assert not g.residual.is_zero()


def test_different_infinitesimals_rejected(sl2, sl2_assoc4, sl2_twist4):
    other = sl2_twist4.F.add_term(1, embed_wedge(sl2, dj_r_matrix(sl2)))
    with pytest.raises(PreconditionError):
        gauge_equivalent(sl2_twist4.F, other, sl2_assoc4.phi)
