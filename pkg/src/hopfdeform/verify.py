"""Independent certificate verification.

Recomputes every claimed identity from the serialized series using only
the algebra/series/cohomology primitives; no solver code is imported, so a
verifier pass cannot inherit solver state or solver bugs.
"""

from __future__ import annotations

from fractions import Fraction

from .certificates import load_certificate, wedge_from_json, tensor_terms_from_json
from .errors import VerificationError
from .hseries import HSeries
from .identities import (
    antipode_axiom_defects,
    antipode_reversal_defect,
    antipode_swap_defect_a,
    antipode_swap_defect_b,
    counit_leg_defect,
    deformed_coproduct,
    flip_invariance_defect,
    gamma_element,
    hexagon_defects,
    pentagon_defect,
    quasi_hopf_beta_defects,
    reversal_defect,
    superscript,
    swap_flip_defect,
    theta_defect,
    theta_flip_defect,
    twist_defect,
    twisted_antipode_element,
)
from .tensor import TensorPoly, embed_wedge
from .uea import UEElem, coproduct, multiply


def _first_bad_order(series):
    for k, c in enumerate(series.coeffs):
        if not c.is_zero():
            return k
    return None


class CheckList:
    def __init__(self):
        self.checks = []

    def add_series_zero(self, name, series, informational=False):
        bad = _first_bad_order(series)
        self.checks.append(
            {
                "identity": name,
                "ok": bad is None,
                "h_order": bad,
                "informational": informational,
            }
        )

    def add_bool(self, name, ok, informational=False, h_order=None):
        self.checks.append(
            {
                "identity": name,
                "ok": bool(ok),
                "h_order": h_order,
                "informational": informational,
            }
        )

    def report(self):
        failing = [
            c for c in self.checks if not c["ok"] and not c["informational"]
        ]
        return {
            "ok": not failing,
            "first_failure": failing[0] if failing else None,
            "checks": self.checks,
        }


def _invariance_check(cl, name, series):
    bad = None
    for k, c in enumerate(series.coeffs):
        if not c.is_invariant():
            bad = k
            break
    cl.add_bool(name, bad is None, h_order=bad)


def _weight_check(cl, name, series):
    bad = None
    for k, c in enumerate(series.coeffs):
        if not c.is_weight_zero():
            bad = k
            break
    cl.add_bool(name, bad is None, h_order=bad)


def _verify_associator_series(cl, L, phi, options, lead_wedge, prefix=""):
    lead = 2 if options.get("even_parameter") else 1
    unit_ok = phi.coefficient(0) == TensorPoly.unit(L, 3)
    cl.add_bool(prefix + "constant_term_unit", unit_ok)
    if not unit_ok:
        # the defect expressions need an invertible series; the failure is
        # already named, so stop here
        return
    cl.add_bool(
        prefix + "leading_term",
        phi.coefficient(lead) == embed_wedge(L, lead_wedge),
        h_order=lead,
    )
    cl.add_series_zero(prefix + "pentagon", pentagon_defect(phi))
    for leg in (1, 2, 3):
        cl.add_series_zero(prefix + f"counit_leg_{leg}", counit_leg_defect(phi, leg))
    _invariance_check(cl, prefix + "invariance", phi)
    if L.cartan is not None:
        _weight_check(cl, prefix + "weight_zero", phi)
    if options.get("cond_b"):
        cl.add_series_zero(prefix + "reversal_symmetry", reversal_defect(phi))
    if options.get("cond_d"):
        cl.add_series_zero(prefix + "antipode_symmetry", antipode_reversal_defect(phi))
        if options.get("cond_b"):
            cl.add_series_zero(
                prefix + "reversal_equals_antipode",
                phi.reverse_legs() - phi.antipode_legs(),
                informational=True,
            )
    if options.get("cond_c") and L.cartan is not None:
        cl.add_series_zero(prefix + "involution_symmetry", theta_defect(phi))
    if options.get("even_parameter"):
        cl.add_series_zero(prefix + "even_parameter", flip_invariance_defect(phi))
    # quasi-Hopf normalizations with alpha = 1, beta = gamma^{-1} (informational)
    gamma = gamma_element(phi)
    bad = None
    for k, c in enumerate(gamma.coeffs):
        if not c.is_invariant():
            bad = k
            break
    cl.add_bool(prefix + "gamma_invariance", bad is None, informational=True, h_order=bad)
    d10c, d10d = quasi_hopf_beta_defects(phi)
    cl.add_series_zero(prefix + "dual_pairing_normalization_left", d10c, informational=True)
    cl.add_series_zero(prefix + "dual_pairing_normalization_right", d10d, informational=True)


def verify_associator(doc, L, series):
    cl = CheckList()
    phi = series["associator"]
    lead_wedge = wedge_from_json(doc["leading_wedge"])
    _verify_associator_series(cl, L, phi, doc.get("options", {}), lead_wedge)
    return cl.report()


def _deformed_coassoc_defect(F, a):
    L = F.L
    F12 = superscript(F, (1, 2), 3)
    F23 = superscript(F, (2, 3), 3)
    d2a = HSeries.from_terms(L, 3, F.order, {0: coproduct(a).coproduct_insert(1)})
    lhs = F12 * F.coproduct_insert(1) * d2a * F.coproduct_insert(1).inverse() * F12.inverse()
    rhs = F23 * F.coproduct_insert(2) * d2a * F.coproduct_insert(2).inverse() * F23.inverse()
    return lhs - rhs


def verify_twist(doc, L, series):
    cl = CheckList()
    F = series["twist"]
    phi = series["associator"]
    f_wedge = wedge_from_json(doc["infinitesimal"])
    lead_wedge = wedge_from_json(doc["leading_wedge"])
    _verify_associator_series(
        cl, L, phi, doc.get("associator_options", {}), lead_wedge, prefix="associator:"
    )
    units_ok = F.coefficient(0) == TensorPoly.unit(L, 2)
    cl.add_bool("constant_term_unit", units_ok)
    if not units_ok or phi.coefficient(0) != TensorPoly.unit(L, 3):
        return cl.report()
    cl.add_bool("infinitesimal", F.coefficient(1) == embed_wedge(L, f_wedge), h_order=1)
    cl.add_series_zero("twist_equation", twist_defect(F, phi))
    cl.add_series_zero("antipode_swap_left", antipode_swap_defect_a(F))
    cl.add_series_zero("antipode_swap_right", antipode_swap_defect_b(F))
    cl.add_series_zero("swap_h_flip", swap_flip_defect(F))
    for leg in (1, 2):
        cl.add_series_zero(f"counit_leg_{leg}", counit_leg_defect(F, leg))
    if L.cartan is not None:
        _weight_check(cl, "torus_invariance", F)
        theta_mode = doc.get("notes", {}).get("theta_mode")
        if theta_mode == "flip":
            cl.add_series_zero(
                "involution_h_flip",
                theta_flip_defect(F),
                informational=not doc.get("notes", {}).get("theta_symmetry_holds"),
            )
        elif theta_mode == "fixed":
            cl.add_series_zero(
                "involution_symmetry",
                theta_defect(F),
                informational=not doc.get("notes", {}).get("theta_symmetry_holds"),
            )
    # deformed coproduct behavior
    ft = embed_wedge(L, f_wedge)
    gens = [UEElem.generator(L, i) for i in range(L.dim)]
    ok_first = True
    for a in gens:
        da = coproduct(a)
        expect = ft.mul(da) - da.mul(ft)
        if deformed_coproduct(F, a).coefficient(1) != expect:
            ok_first = False
            break
    cl.add_bool("first_order_coproduct_defect", ok_first, h_order=1)
    bad = None
    for a in gens:
        defect = _deformed_coassoc_defect(F, a)
        k = _first_bad_order(defect)
        if k is not None:
            bad = k
            break
    cl.add_bool("deformed_coassociativity", bad is None, h_order=bad)
    if L.cartan is not None:
        ok_torus = True
        for i in L.cartan.h_indices:
            a = gens[i]
            base = HSeries.from_terms(L, 2, F.order, {0: coproduct(a)})
            if deformed_coproduct(F, a) != base:
                ok_torus = False
                break
        h2 = multiply(gens[L.cartan.h_indices[0]], gens[L.cartan.h_indices[0]])
        if deformed_coproduct(F, h2) != HSeries.from_terms(L, 2, F.order, {0: coproduct(h2)}):
            ok_torus = False
        cl.add_bool("torus_coproduct_undeformed", ok_torus)
    # antipode element and axiom
    w = twisted_antipode_element(F)
    if "antipode_element" in series:
        cl.add_bool("antipode_element_matches", w == series["antipode_element"])
    bad = None
    for a in gens + [multiply(gens[0], gens[-1])]:
        d1, d2 = antipode_axiom_defects(F, w, a)
        k1 = _first_bad_order(d1)
        k2 = _first_bad_order(d2)
        if k1 is not None or k2 is not None:
            bad = k1 if k1 is not None else k2
            break
    cl.add_bool("twisted_antipode_axiom", bad is None, h_order=bad)
    if L.cartan is not None:
        # derived statement: theta is a coalgebra antiautomorphism for the
        # deformed coproduct (informational; convention-dependent)
        ok_theta = True
        for a in gens:
            from .uea import theta_apply

            lhs = deformed_coproduct(F, theta_apply(a))
            rhs = deformed_coproduct(F, a).theta_legs().reverse_legs()
            if lhs != rhs:
                ok_theta = False
                break
        cl.add_bool("involution_coalgebra_antiautomorphism", ok_theta, informational=True)
    return cl.report()


def verify_qt(doc, L, series):
    cl = CheckList()
    phi = series["associator"]
    R = series["braiding"]
    t = tensor_terms_from_json(L, 2, doc["t"])
    use_theta = doc.get("options", {}).get("use_theta") and L.cartan is not None
    cl.add_bool("t_symmetric", t == t.reverse_legs())
    cl.add_bool("t_invariant", t.is_invariant())
    r_unit = R.coefficient(0) == TensorPoly.unit(L, 2)
    phi_unit = phi.coefficient(0) == TensorPoly.unit(L, 3)
    cl.add_bool("braiding_constant_unit", r_unit)
    cl.add_bool("associator_constant_unit", phi_unit)
    if not (r_unit and phi_unit):
        return cl.report()
    cl.add_bool("braiding_first_order", R.coefficient(1) == t, h_order=1)
    cl.add_series_zero("pentagon", pentagon_defect(phi))
    da, db = hexagon_defects(R, phi)
    cl.add_series_zero("hexagon_first", da)
    cl.add_series_zero("hexagon_second", db)
    cl.add_series_zero("reversal_symmetry", reversal_defect(phi))
    cl.add_series_zero("braiding_symmetric", R.reverse_legs() - R)
    cl.add_series_zero("antipode_symmetry", antipode_reversal_defect(phi))
    cl.add_series_zero("braiding_antipode", R.antipode_legs() - R)
    cl.add_series_zero("associator_h_flip", flip_invariance_defect(phi))
    cl.add_series_zero(
        "braiding_unitarity",
        R.flip_h() * R - HSeries.unit(L, 2, R.order),
    )
    if use_theta:
        cl.add_series_zero("involution_symmetry", theta_defect(phi))
        cl.add_series_zero("braiding_involution", theta_defect(R))
    _invariance_check(cl, "associator_invariance", phi)
    _invariance_check(cl, "braiding_invariance", R)
    for leg in (1, 2, 3):
        cl.add_series_zero(f"associator_counit_leg_{leg}", counit_leg_defect(phi, leg))
    for leg in (1, 2):
        cl.add_series_zero(f"braiding_counit_leg_{leg}", counit_leg_defect(R, leg))
    return cl.report()


def verify_certificate(path_or_doc):
    """Re-verify a certificate file; returns (report, doc)."""
    doc, L, series = load_certificate(path_or_doc)
    kind = doc.get("type")
    if kind == "associator":
        report = verify_associator(doc, L, series)
    elif kind == "twist":
        report = verify_twist(doc, L, series)
    elif kind == "quasitriangular":
        report = verify_qt(doc, L, series)
    else:
        raise VerificationError(f"unknown certificate type {kind!r}")
    return report, doc
