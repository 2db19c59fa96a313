from fractions import Fraction

import pytest

from hopfdeform.errors import PreconditionError
from hopfdeform.hseries import HSeries
from hopfdeform.identities import (
    antipode_axiom_defects,
    antipode_swap_defect_a,
    antipode_swap_defect_b,
    deformed_coproduct,
    swap_flip_defect,
    theta_flip_defect,
    twist_defect,
    twisted_antipode_element,
)
from hopfdeform.lie import dj_r_matrix, load_lie_algebra
from hopfdeform.schouten import schouten
from hopfdeform.solvers import associator_for_twist, gauge_equivalent, solve_pentagon, solve_twist
from hopfdeform.tensor import TensorPoly, embed_wedge
from hopfdeform.uea import UEElem, coproduct, multiply
from hopfdeform.wedge import WedgeElem


def test_sl2_twist_certificate(sl2, sl2_assoc4, sl2_twist4):
    F = sl2_twist4.F
    phi = sl2_assoc4.phi
    assert twist_defect(F, phi).is_zero()
    assert antipode_swap_defect_a(F).is_zero()
    assert antipode_swap_defect_b(F).is_zero()
    assert swap_flip_defect(F).is_zero()
    assert theta_flip_defect(F).is_zero()
    assert F.is_weight_zero()
    assert F.coefficient(1) == embed_wedge(sl2, dj_r_matrix(sl2))
    assert sl2_twist4.h3_report["h3_dim"] == 0
    assert sl2_twist4.notes["theta_symmetry_holds"]


def test_sl2_deformed_coproduct(sl2, sl2_twist4):
    F = sl2_twist4.F
    gens = [UEElem.generator(sl2, i) for i in range(3)]
    H = gens[1]
    assert deformed_coproduct(F, H) == HSeries.from_terms(sl2, 2, 4, {0: coproduct(H)})
    h2 = multiply(H, H)
    assert deformed_coproduct(F, h2) == HSeries.from_terms(sl2, 2, 4, {0: coproduct(h2)})
    ft = embed_wedge(sl2, dj_r_matrix(sl2))
    for a in gens:
        da = coproduct(a)
        assert deformed_coproduct(F, a).coefficient(1) == ft.mul(da) - da.mul(ft)


def test_sl2_twisted_antipode(sl2, sl2_twist4):
    F = sl2_twist4.F
    w = twisted_antipode_element(F)
    assert w == sl2_twist4.w
    for a in (UEElem.generator(sl2, 0), multiply(UEElem.generator(sl2, 0), UEElem.generator(sl2, 2))):
        d1, d2 = antipode_axiom_defects(F, w, a)
        assert d1.is_zero() and d2.is_zero()


def test_abelian_twist_and_gauge(abelian3):
    f = WedgeElem.single((0, 1))
    ac = associator_for_twist(abelian3, f, 6)
    tc = solve_twist(abelian3, f, ac, 6)
    Fexp = HSeries.from_terms(abelian3, 2, 6, {1: embed_wedge(abelian3, f)}).exp()
    assert twist_defect(Fexp, HSeries.unit(abelian3, 3, 6)).is_zero()
    g = gauge_equivalent(tc.F, Fexp, ac.phi)
    assert g.ok and g.unit_antipode_product


def test_heisenberg_commuting_twist(heisenberg):
    f = WedgeElem.single((0, 2))  # X ^ Z with [X, Z] = 0
    ac = associator_for_twist(heisenberg, f, 6)
    tc = solve_twist(heisenberg, f, ac, 6)
    Fexp = HSeries.from_terms(heisenberg, 2, 6, {1: embed_wedge(heisenberg, f)}).exp()
    g = gauge_equivalent(tc.F, Fexp, ac.phi)
    assert g.ok and g.unit_antipode_product


def test_twist_rejects_wrong_lead(sl2):
    f = dj_r_matrix(sl2)
    wrong = solve_pentagon(
        sl2, schouten(sl2, f, f), 4, even_parameter=True
    )  # missing the 2/3 factor
    with pytest.raises(PreconditionError):
        solve_twist(sl2, f, wrong, 4)


def test_twist_rejects_odd_parameter_cert(sl2):
    f = dj_r_matrix(sl2)
    phi_w = schouten(sl2, f, f).scale(Fraction(2, 3))
    plain = solve_pentagon(sl2, phi_w, 2, even_parameter=False)
    with pytest.raises(PreconditionError):
        solve_twist(sl2, f, plain, 2)


def test_twist_rejects_noninvariant_infinitesimal():
    L = load_lie_algebra(
        {
            "dim": 4,
            "basis": ["X", "Y", "U", "V"],
            "brackets": [{"i": 0, "j": 1, "terms": [["1", 1]]}],
        }
    )
    f = WedgeElem(2, {(0, 2): Fraction(1), (1, 3): Fraction(1)})
    fake = associator_for_twist(L, WedgeElem.zero(2).__class__.single((2, 3)), 2)
    with pytest.raises(PreconditionError):
        solve_twist(L, f, fake, 2)


def test_heisenberg_noncommuting_twist(heisenberg):
    # f = X ^ Y has [[f, f]] = 2 Z^X^Y != 0 but invariant; the twist exists
    f = WedgeElem.single((0, 1))
    ac = associator_for_twist(heisenberg, f, 3)
    tc = solve_twist(heisenberg, f, ac, 3)
    assert twist_defect(tc.F, ac.phi).is_zero()
    assert antipode_swap_defect_a(tc.F).is_zero()
    assert swap_flip_defect(tc.F).is_zero()


def test_twist_deterministic(sl2, sl2_assoc4, sl2_twist4):
    again = solve_twist(sl2, dj_r_matrix(sl2), sl2_assoc4, 4)
    assert again.F == sl2_twist4.F
