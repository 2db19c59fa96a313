from fractions import Fraction

import pytest

from hopfdeform.cohomology import alt
from hopfdeform.errors import PreconditionError
from hopfdeform.lie import dj_r_matrix, load_lie_algebra
from hopfdeform.schouten import (
    ce_differential,
    dual_bracket,
    h3_invariant_test,
    schouten,
    theta_wedge,
    yang_baxter,
    yb_polarized,
)
from hopfdeform.tensor import TensorPoly, embed_wedge, extract_wedge
from hopfdeform.wedge import WedgeElem, sort_with_sign


def brute_schouten(L, a, b):
    """Independent expansion of the signed-contraction formula."""
    out = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            for i in range(len(ka)):
                for j in range(len(kb)):
                    sign = (-1) ** ((i + 1) + (j + 1))
                    rest = tuple(x for p, x in enumerate(ka) if p != i) + tuple(
                        y for q, y in enumerate(kb) if q != j
                    )
                    for k, c in L.bracket_basis(ka[i], kb[j]).items():
                        key, s2 = sort_with_sign((k,) + rest)
                        if s2:
                            out[key] = out.get(key, Fraction(0)) + sign * s2 * ca * cb * c
    return WedgeElem(a.degree + b.degree - 1, out)


def test_schouten_square_sl2_against_oracle(sl2):
    f = dj_r_matrix(sl2)
    ff = schouten(sl2, f, f)
    assert ff == brute_schouten(sl2, f, f)
    # 2 * H ^ E ^ F = -2 * E ^ H ^ F in the increasing order E < H < F
    assert ff == WedgeElem(3, {(0, 1, 2): Fraction(-2)})


def test_schouten_abelian(abelian3, rng):
    a = WedgeElem.single((0, 1))
    b = WedgeElem.single((1, 2))
    assert schouten(abelian3, a, b).is_zero()


def test_schouten_random_matches_oracle(sl3, rng):
    keys3 = [(0, 1, 2), (1, 3, 5), (2, 4, 6)]
    keys2 = [(0, 5), (1, 6), (3, 4)]
    a = WedgeElem(2, {k: Fraction(rng.randint(-3, 3)) for k in keys2})
    b = WedgeElem(3, {k: Fraction(rng.randint(-3, 3)) for k in keys3})
    assert schouten(sl3, a, b) == brute_schouten(sl3, a, b)


def test_schouten_graded_symmetry(sl2, sl3):
    # on two 2-wedges the bracket is symmetric
    for L, k1, k2 in ((sl2, (0, 1), (0, 2)), (sl3, (0, 4), (2, 7))):
        a = WedgeElem.single(k1)
        b = WedgeElem.single(k2)
        assert schouten(L, a, b) == schouten(L, b, a)


def test_yang_baxter_equals_embedded_square(sl2):
    f = dj_r_matrix(sl2)
    yb = yang_baxter(sl2, f)
    assert yb == embed_wedge(sl2, schouten(sl2, f, f))
    assert yb.is_invariant()


def test_yang_baxter_abelian(abelian3):
    assert yang_baxter(abelian3, WedgeElem.single((0, 1))).is_zero()


def test_polarization(sl2, rng):
    f = dj_r_matrix(sl2)
    assert yb_polarized(sl2, f, f) == yang_baxter(sl2, f).scale(2)
    assert yb_polarized(sl2, f, WedgeElem.zero(2)).is_zero()
    chi = WedgeElem(2, {(0, 1): Fraction(1), (1, 2): Fraction(-2)})
    # polarization identity: YB(f + chi) - YB(f) - YB(chi) = polarized
    lhs = (
        yang_baxter(sl2, f + chi)
        - yang_baxter(sl2, f)
        - yang_baxter(sl2, chi)
    )
    assert lhs == yb_polarized(sl2, f, chi)


def _quadratic_products(L, fT):
    """f23 (f12 + f13) - f12 (f13 + f23), products not commutators."""
    f12 = fT.leg_map((1, 2), 3)
    f13 = fT.leg_map((1, 3), 3)
    f23 = fT.leg_map((2, 3), 3)
    return f23.mul(f12 + f13) - f12.mul(f13 + f23)


def test_alt_of_quadratic_expression(sl2):
    f = dj_r_matrix(sl2)
    fT = embed_wedge(sl2, f)
    assert alt(_quadratic_products(sl2, fT)) == yang_baxter(sl2, f).scale(
        Fraction(-2, 3)
    )


def test_alt_of_polarized_products(sl2, rng):
    # alt(b(f, chi)) = -(2/3) * polarized Yang-Baxter
    f = dj_r_matrix(sl2)
    chi = WedgeElem(2, {(0, 1): Fraction(2), (0, 2): Fraction(-1), (1, 2): Fraction(3)})
    fT = embed_wedge(sl2, f)
    cT = embed_wedge(sl2, chi)

    def legs(t):
        return t.leg_map((1, 2), 3), t.leg_map((1, 3), 3), t.leg_map((2, 3), 3)

    f12, f13, f23 = legs(fT)
    c12, c13, c23 = legs(cT)
    b = (
        f23.mul(c12 + c13)
        + c23.mul(f12 + f13)
        - f12.mul(c13 + c23)
        - c12.mul(f13 + f23)
    )
    assert alt(b) == yb_polarized(sl2, f, chi).scale(Fraction(-2, 3))


def test_dual_bracket_abelian(abelian3):
    db = dual_bracket(abelian3, WedgeElem.single((0, 1)))
    assert not any(db.structure.values()) or all(
        not v for v in db.structure.values()
    )
    assert db.jacobi_failure() is None


def test_dual_bracket_sl2_jacobi(sl2):
    db = dual_bracket(sl2, dj_r_matrix(sl2))
    assert db.jacobi_failure() is None
    # some bracket must be nonzero
    assert any(db.structure.values())


NONINVARIANT_DOC = {
    "dim": 4,
    "basis": ["X", "Y", "U", "V"],
    "brackets": [{"i": 0, "j": 1, "terms": [["1", 1]]}],  # [X,Y] = Y
}


def test_dual_bracket_jacobi_iff_invariance():
    L = load_lie_algebra(NONINVARIANT_DOC)
    f = WedgeElem(2, {(0, 2): Fraction(1), (1, 3): Fraction(1)})  # X^U + Y^V
    yb = yang_baxter(L, f)
    assert not yb.is_invariant()
    db = dual_bracket(L, f)
    assert db.jacobi_failure() is not None
    # and the invariant direction passes both ways
    good = dual_bracket(L, WedgeElem.single((2, 3)))
    assert good.jacobi_failure() is None
    assert yang_baxter(L, WedgeElem.single((2, 3))).is_invariant()


def test_schouten_vs_adjoint_pairing(sl2):
    # [[X, f]] computed by the wedge formula equals the extracted leg-wise
    # adjoint action on the embedded tensor, for every basis X
    f = dj_r_matrix(sl2)
    fT = embed_wedge(sl2, f)
    for i in range(sl2.dim):
        lhs = schouten(sl2, WedgeElem.single((i,)), f)
        rhs = extract_wedge(fT.ad_legwise({i: 1}))
        assert lhs == rhs


def test_ce_differential_abelian(abelian3):
    f = WedgeElem.single((0, 1))
    assert ce_differential(abelian3, f, WedgeElem.single((1, 2))).is_zero()


def test_ce_differential_leibniz(sl2, rng):
    f = dj_r_matrix(sl2)
    a = WedgeElem.single((0,))  # degree 1
    b = WedgeElem.single((1, 2))  # degree 2
    lhs = ce_differential(sl2, f, a.wedge(b))
    rhs = ce_differential(sl2, f, a).wedge(b) - a.wedge(ce_differential(sl2, f, b))
    assert lhs == rhs


def test_ce_squares_to_zero(sl2):
    f = dj_r_matrix(sl2)
    for key in ((0,), (1,), (2,)):
        w = WedgeElem.single(key)
        assert ce_differential(sl2, f, ce_differential(sl2, f, w)).is_zero()
    for key in ((0, 1), (0, 2), (1, 2)):
        w = WedgeElem.single(key)
        assert ce_differential(sl2, f, ce_differential(sl2, f, w)).is_zero()


def test_h3_sl2(sl2):
    rep = h3_invariant_test(sl2, dj_r_matrix(sl2), theta_eigenvalue=1)
    assert rep["h3_dim"] == 0


def test_h3_sl3(sl3):
    rep = h3_invariant_test(sl3, dj_r_matrix(sl3), theta_eigenvalue=1)
    assert rep["h3_dim"] == 0


def test_h3_abelian_exact_hint(abelian3):
    rep = h3_invariant_test(abelian3, WedgeElem.single((0, 1)))
    assert rep["exact_exponential_hint"]
    assert rep["ce_action_trivial"]


def test_h3_heisenberg_nonzero_pairing(heisenberg):
    # [[f, f]] != 0 for f = X ^ Y kills the one-dimensional top wedge
    f = WedgeElem.single((0, 1))
    assert not schouten(heisenberg, f, f).is_zero()
    rep = h3_invariant_test(heisenberg, f)
    assert rep["h3_dim"] == 0


def test_h3_precondition(sl2):
    L = load_lie_algebra(NONINVARIANT_DOC)
    f = WedgeElem(2, {(0, 2): Fraction(1), (1, 3): Fraction(1)})
    with pytest.raises(PreconditionError):
        h3_invariant_test(L, f)


def test_theta_wedge_parities(sl2):
    f = dj_r_matrix(sl2)
    assert theta_wedge(sl2, f) == -f
    phi = schouten(sl2, f, f)
    assert theta_wedge(sl2, phi) == phi
