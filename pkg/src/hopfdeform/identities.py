"""Element-level identity machinery: the pentagon and hexagon expressions,
the twist defect, the gauge action, deformed Hopf data, and the symmetry
defects.  Shared by the solvers and by the independent verifier, which must
not touch solver code.

Superscript notation: X^{312} places tensor factor i into the slot written
in position i, matching the leg_map spec (so R^{13} is leg_map((1,3), 3)).
"""

from __future__ import annotations

from fractions import Fraction

from .hseries import HSeries
from .tensor import TensorPoly
from .uea import UEElem, coproduct


def unit_like(series, arity=None):
    return HSeries.unit(
        series.L, arity if arity is not None else series.arity, series.order,
        series.degree_cap,
    )


def superscript(series, slots, target_arity=None):
    """X^{slots}: factor i into slot slots[i], units elsewhere."""
    m = target_arity if target_arity is not None else max(slots)
    return series.leg_map(tuple(slots), m)


def pent(phi):
    """(1 (x) P) (id (x) D (x) id)P (P (x) 1) [(D (x) id2)P]^-1 [(id2 (x) D)P]^-1."""
    if not phi.is_unit_constant():
        raise ValueError("pentagon input needs unit constant term")
    one = superscript(phi, (2, 3, 4), 4)
    two = phi.coproduct_insert(2)
    three = superscript(phi, (1, 2, 3), 4)
    four = phi.coproduct_insert(1).inverse()
    five = phi.coproduct_insert(3).inverse()
    return one * two * three * four * five


def pentagon_defect(phi):
    return pent(phi) - unit_like(phi, 4)


def twist_defect(f_series, phi):
    """(1 (x) F)((id (x) D)F) Phi - (F (x) 1)(D (x) id)F."""
    lhs = superscript(f_series, (2, 3), 3) * f_series.coproduct_insert(2) * phi
    rhs = superscript(f_series, (1, 2), 3) * f_series.coproduct_insert(1)
    return lhs - rhs


def hexagon_defects(r_series, phi):
    """Both hexagon defects (lhs - rhs) as arity-3 series."""
    r13 = superscript(r_series, (1, 3), 3)
    r23 = superscript(r_series, (2, 3), 3)
    r12 = superscript(r_series, (1, 2), 3)
    a = r_series.coproduct_insert(1) - (
        superscript(phi, (3, 1, 2))
        * r13
        * superscript(phi, (1, 3, 2)).inverse()
        * r23
        * phi
    )
    b = r_series.coproduct_insert(2) - (
        superscript(phi, (2, 3, 1)).inverse()
        * r13
        * superscript(phi, (2, 1, 3))
        * r12
        * phi.inverse()
    )
    return a, b


def reversal_defect(x):
    """X^{rev} X - 1."""
    return x.reverse_legs() * x - unit_like(x)


def antipode_reversal_defect(x):
    """X^S X - 1 with S applied to every leg."""
    return x.antipode_legs() * x - unit_like(x)


def theta_defect(x):
    """X^theta - X."""
    return x.theta_legs() - x


def theta_flip_defect(x):
    """X^theta - X_{-h}."""
    return x.theta_legs() - x.flip_h()


def swap_flip_defect(f_series):
    """F^{21} - F_{-h}."""
    return f_series.reverse_legs() - f_series.flip_h()


def antipode_swap_defect_a(f_series):
    """(F^{21})^S F - 1."""
    return f_series.reverse_legs().antipode_legs() * f_series - unit_like(f_series)


def antipode_swap_defect_b(f_series):
    """F^S F^{21} - 1."""
    return f_series.antipode_legs() * f_series.reverse_legs() - unit_like(f_series)


def flip_invariance_defect(x):
    """X_{-h} - X (vanishes for even series)."""
    return x.flip_h() - x


def counit_leg_defect(x, position):
    """(id ... eps ... id)X - 1."""
    return x.counit_leg(position) - unit_like(x, x.arity - 1)


def deformed_coproduct(f_series, a):
    """F Delta(a) F^{-1} as an arity-2 series."""
    da = coproduct(a)
    mid = HSeries.from_terms(
        f_series.L, 2, f_series.order, {0: da}, f_series.degree_cap
    )
    return f_series * mid * f_series.inverse()


def gauge_act(u, f_series):
    """(u (x) u) F Delta(u^{-1})."""
    if u.arity != 1:
        raise ValueError("gauge element must have arity 1")
    uu = superscript(u, (1,), 2) * superscript(u, (2,), 2)
    return uu * f_series * u.inverse().coproduct_insert(1)


def twist_conjugation_defect(u, f_series, phi):
    """B(u.F, Phi) - (u (x) u (x) u) B(F, Phi) (D (x) id)(D(u^{-1}))."""
    lhs = twist_defect(gauge_act(u, f_series), phi)
    uuu = (
        superscript(u, (1,), 3)
        * superscript(u, (2,), 3)
        * superscript(u, (3,), 3)
    )
    rhs = uuu * twist_defect(f_series, phi) * u.inverse().coproduct_insert(1).coproduct_insert(1)
    return lhs - rhs


def twisted_antipode_element(f_series):
    """w = sum F_2 S(F_1), an arity-1 series."""
    return f_series.reverse_legs().multiply_legs((None, "S"))


def gamma_element(phi):
    """sum Phi_1 S(Phi_2) Phi_3."""
    return phi.multiply_legs((None, "S", None))


def conjugated_antipode_apply(w, a, f_series=None):
    """S~(a) = w^{-1} S(a) w as an arity-1 series."""
    from .uea import antipode

    sa = HSeries.from_terms(
        w.L, 1, w.order, {0: TensorPoly.from_ue(antipode(a))}, w.degree_cap
    )
    return w.inverse() * sa * w


def antipode_axiom_defects(f_series, w, a):
    """m(S~ (x) id) Delta_h(a) - eps(a) 1 and m(id (x) S~) Delta_h(a) - eps(a) 1."""
    from .uea import counit

    dh = deformed_coproduct(f_series, a)
    L = f_series.L
    w2 = superscript(w, (2,), 2)
    eps_a = HSeries.from_terms(
        L, 1, f_series.order, {0: TensorPoly.unit(L, 1, counit(a))}, f_series.degree_cap
    )
    # m(S~ (x) id): sum w^{-1} S(a1) w a2
    left = w.inverse() * (
        w2 * dh.map_coeffs(lambda c: c.antipode_leg(1))
    ).multiply_legs()
    # m(id (x) S~): sum a1 w^{-1} S(a2) w
    right = (
        w2.inverse() * dh.map_coeffs(lambda c: c.antipode_leg(2))
    ).multiply_legs() * w
    return left - eps_a, right - eps_a


def quasi_hopf_beta_defects(phi):
    """(10c)/(10d)-style products with alpha = 1, beta = gamma^{-1}.

    Returns (sum Phi_1 beta S(Phi_2) Phi_3 - 1, sum S(P1) P2 beta S(P3) - beta)
    for P = Phi^{-1}; both vanish for the certified associators.
    """
    gamma = gamma_element(phi)
    beta = gamma.inverse()
    L = phi.L
    # first: contract Phi with beta inserted after leg 1 and S on leg 2
    first = _insert_and_contract(phi, beta, mask=(None, "S", None), insert_after=1)
    first = first - unit_like(phi, 1)
    phinv = phi.inverse()
    second = _insert_and_contract(phinv, beta, mask=("S", None, "S"), insert_after=2)
    second = second - beta
    return first, second


def _insert_and_contract(phi, mid, mask, insert_after):
    """sum op1(P1) ... mid ... opn(Pn) with mid inserted after the given leg."""
    L = phi.L
    order = min(phi.order, mid.order)
    out = HSeries.zero(L, 1, order, phi.degree_cap)
    for k in range(order + 1):
        acc = TensorPoly.zero(L, 1)
        for i in range(k + 1):
            pc = phi.coefficient(i)
            mc = mid.coefficient(k - i)
            if pc.is_zero() or mc.is_zero():
                continue
            for key, c in pc.terms.items():
                legs = []
                for pos, mono in enumerate(key, start=1):
                    legs.append((mono, mask[pos - 1]))
                # multiply legs in order with mid inserted
                prod = TensorPoly.unit(L, 1, c)
                for pos, (mono, op) in enumerate(legs, start=1):
                    piece = TensorPoly(L, 1, {(mono,): Fraction(1)})
                    if op == "S":
                        piece = piece.antipode_leg(1)
                    prod = prod.mul(piece)
                    if pos == insert_after:
                        prod = prod.mul(mc)
                acc = acc + prod
        out = out.add_term(k, acc)
    return out
