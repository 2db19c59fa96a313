"""Order-by-order constructions: the pentagon solver, the twist solver with
its secondary (Chevalley-Eilenberg) obstruction pass, the quasitriangular
solver, and the gauge-equivalence constructor.

Every symmetry the constructions rely on is asserted exactly before use;
a failed assert raises InternalAssertionError rather than projecting the
problem away, so convention drift surfaces instead of corrupting output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .cohomology import (
    alt,
    delta,
    sector_project,
    solve_cobounding,
)
from .errors import (
    InternalAssertionError,
    ObstructionError,
    PreconditionError,
)
from .hseries import HSeries
from .identities import (
    antipode_axiom_defects,
    antipode_reversal_defect,
    antipode_swap_defect_a,
    antipode_swap_defect_b,
    deformed_coproduct,
    gauge_act,
    hexagon_defects,
    pentagon_defect,
    reversal_defect,
    swap_flip_defect,
    theta_defect,
    theta_flip_defect,
    twist_defect,
    twisted_antipode_element,
)
from .schouten import (
    ce_differential,
    h3_invariant_test,
    schouten,
    theta_project_wedge,
    theta_wedge,
    wedge_basis,
    yang_baxter,
)
from .tensor import TensorPoly, embed_wedge, extract_wedge, wedge_part
from .uea import UEElem
from .wedge import WedgeElem


# -- certificates ---------------------------------------------------------------


@dataclass
class AssociatorCertificate:
    L: object
    phi_wedge: object
    phi: HSeries
    order: int
    options: dict
    reports: list = field(default_factory=list)

    @property
    def even_parameter(self):
        return bool(self.options.get("even_parameter"))


@dataclass
class TwistCertificate:
    L: object
    f_wedge: object
    F: HSeries
    associator: AssociatorCertificate
    order: int
    reports: list = field(default_factory=list)
    w: HSeries = None
    h3_report: dict = None
    notes: dict = field(default_factory=dict)


@dataclass
class QTCertificate:
    L: object
    t: TensorPoly
    phi: HSeries
    R: HSeries
    order: int
    options: dict = field(default_factory=dict)
    reports: list = field(default_factory=list)


@dataclass
class GaugeResult:
    u: HSeries = None
    z: HSeries = None
    ok: bool = False
    failure_order: int = None
    residual: object = None
    unit_antipode_product: bool = None


# -- shared helpers ----------------------------------------------------------------


def _assert_zero(series_or_poly, message):
    if not series_or_poly.is_zero():
        raise InternalAssertionError(message)


def _assert_eq(a, b, message):
    if a != b:
        raise InternalAssertionError(message)


def _assert_invariant(poly, message):
    if not poly.is_invariant():
        raise InternalAssertionError(message)


def _wedge_kill(x):
    """Remove the wedge component of a solved increment (parameter drift)."""
    w = extract_wedge(alt(x))
    if w.is_zero():
        return x, w
    return x - embed_wedge(x.L, w), w


def _kill_linear_part(x):
    """Remove the degree-(1,...,1) component (frozen-complex kernel drift)."""
    lin = wedge_part(x)
    return x - lin, lin


def _solve_step(L, target, sectors, invariant, pivot_reverse, differential="delta",
                symmetric_columns=False):
    rep = solve_cobounding(
        L,
        -target,
        differential=differential,
        sectors=sectors,
        invariant=invariant,
        pivot_reverse=pivot_reverse,
        symmetric_columns=symmetric_columns,
    )
    return rep


# -- pentagon solver -----------------------------------------------------------------


def solve_pentagon(
    L,
    phi,
    order,
    cond_b=True,
    cond_c=None,
    cond_d=True,
    even_parameter=False,
    degree_cap=None,
    pivot_reverse=False,
):
    """Build an invariant series with unit counits solving the pentagon
    identity to the requested order, with the optional reversal, involution
    and antipode symmetries enforced on every increment.
    """
    if order < 1:
        raise PreconditionError("order must be at least 1")
    if cond_c is None:
        cond_c = L.cartan is not None
    if cond_c and L.cartan is None:
        raise PreconditionError("condition (c) needs Cartan data")
    if phi.degree != 3:
        raise PreconditionError("the leading term must be a 3-wedge")
    phi_t = embed_wedge(L, phi)
    if not phi_t.is_invariant():
        raise PreconditionError("the leading 3-wedge must be invariant")
    if cond_c and theta_wedge(L, phi) != phi:
        raise PreconditionError(
            "condition (c) requires the leading 3-wedge to be theta-invariant"
        )
    if degree_cap is None:
        degree_cap = 3 * order

    lead = 2 if even_parameter else 1
    series = HSeries.from_terms(
        L, 3, order, {0: TensorPoly.unit(L, 3), lead: phi_t}, degree_cap
    )
    reports = []
    sectors = [("tau", -1)]
    if cond_d:
        sectors.append(("antipode", -1))
    if cond_c:
        sectors.append(("theta", 1))

    for n in range(lead + 1, order + 1):
        entry = {"h_order": n, "steps": []}
        if cond_b:
            eta = reversal_defect(series.truncate(n)).coefficient(n)
            if not eta.is_zero():
                _assert_eq(eta.reverse_legs(), eta, "reversal pre-correction symmetry")
                _assert_invariant(eta, "reversal pre-correction invariance")
                series = series.add_term(n, eta.scale(Fraction(-1, 2)))
                entry["steps"].append("reversal_precorrection")
        if cond_d:
            chi = antipode_reversal_defect(series.truncate(n)).coefficient(n)
            if not chi.is_zero():
                _assert_eq(chi.reverse_legs(), -chi, "antipode pre-correction reversal parity")
                _assert_eq(chi.antipode_legs(), chi, "antipode pre-correction S parity")
                series = series.add_term(n, chi.scale(Fraction(-1, 2)))
                entry["steps"].append("antipode_precorrection")

        xi = pentagon_defect(series.truncate(n)).coefficient(n)
        if xi.is_zero():
            entry["steps"].append("no_obstruction")
            reports.append(entry)
            continue
        if even_parameter and n % 2:
            raise InternalAssertionError(
                f"odd-order pentagon obstruction at h^{n} despite even parameter"
            )
        _assert_zero(delta(xi), "pentagon obstruction is not a cocycle")
        _assert_invariant(xi, "pentagon obstruction invariance")
        if xi.has_unit_leg():
            raise InternalAssertionError("pentagon obstruction has a unit leg")
        if cond_b:
            _assert_eq(xi.reverse_legs(), -xi, "pentagon obstruction reversal parity")
        if cond_d:
            _assert_eq(xi.antipode_legs(), -xi, "pentagon obstruction antipode parity")
        if cond_c:
            _assert_eq(xi.theta_legs(), xi, "pentagon obstruction involution parity")

        rep = _solve_step(L, xi, sectors, True, pivot_reverse)
        if not rep.solved:
            raise ObstructionError(
                f"pentagon obstruction failed to cobound at h^{n}; "
                "this sector is acyclic, so a degree cap or convention is wrong",
                residual=rep.residual_class,
                order=n,
            )
        x, killed = _wedge_kill(rep.solution)
        series = series.add_term(n, x)
        entry["steps"].append("cobound")
        entry["solve"] = rep.summary()
        if not killed.is_zero():
            entry["normalized_wedge"] = repr(killed)
        reports.append(entry)

    _assert_zero(pentagon_defect(series), "pentagon identity after the recursion")
    options = {
        "cond_b": cond_b,
        "cond_c": cond_c,
        "cond_d": cond_d,
        "even_parameter": even_parameter,
        "degree_cap": degree_cap,
        "parameter": "h^2" if even_parameter else "h",
        "pivot_reverse": pivot_reverse,
    }
    return AssociatorCertificate(L, phi, series, order, options, reports)


# -- twist solver -------------------------------------------------------------------


def _ce_solve(L, f, target_wedge, pivot_reverse=False):
    """Solve [[f, chi]] = target over the weight-zero (theta-skew) 2-wedges."""
    use_theta = L.cartan is not None
    basis = []
    for key in wedge_basis(L, 2, weight_zero=L.cartan is not None):
        w = WedgeElem.single(key)
        if use_theta:
            w = theta_project_wedge(L, w, -1)
        if not w.is_zero():
            basis.append(w)
    columns = [dict(ce_differential(L, f, w).terms) for w in basis]
    if pivot_reverse:
        columns = list(reversed(columns))
        basis = list(reversed(basis))
    coeffs = linalg.solve_sparse(columns, dict(target_wedge.terms))
    if coeffs is None:
        return None, basis
    chi = WedgeElem.zero(2)
    for j, c in coeffs.items():
        chi = chi + basis[j].scale(c)
    return chi, basis


def solve_twist(L, f, associator_cert, order, pivot_reverse=False):
    """Build the coproduct-side equivalence with the given infinitesimal.

    Odd orders cobound directly in the acyclic sector; even orders may need
    the secondary pass: a 2-wedge correction one order down, solved in the
    dual-bracket cohomology, then the primary cobounding solve.
    """
    if f.degree != 2:
        raise PreconditionError("the infinitesimal must be a 2-wedge")
    ff = schouten(L, f, f)
    yb = yang_baxter(L, f)
    if not yb.is_invariant():
        raise PreconditionError(
            "the Schouten square of f is not invariant; the dual bracket "
            "fails Jacobi and no twist with this infinitesimal exists"
        )
    expected_phi = ff.scale(Fraction(2, 3))
    if associator_cert.phi_wedge != expected_phi:
        raise PreconditionError(
            "the associator certificate was not built from two thirds of "
            "the Schouten square of f"
        )
    if not associator_cert.even_parameter:
        raise PreconditionError("the twist construction needs the even-parameter associator")
    if associator_cert.order < order:
        raise PreconditionError("associator certificate order is too low")
    # Lemma guard: the Yang-Baxter expression must equal 3/2 of the leading term
    if yb != embed_wedge(L, expected_phi).scale(Fraction(3, 2)):
        raise PreconditionError(
            "Yang-Baxter expression does not match 3/2 of the associator lead"
        )

    theta_mode = None
    if L.cartan is not None:
        f_t = embed_wedge(L, f)
        if not f_t.is_weight_zero():
            raise PreconditionError("f must be torus-invariant (weight zero)")
        tw = theta_wedge(L, f)
        if tw == -f:
            theta_mode = "flip"
        elif tw == f:
            theta_mode = "fixed"
        else:
            raise PreconditionError("f must be a theta eigenvector")

    phi = associator_cert.phi.truncate(order)
    degree_cap = phi.degree_cap if phi.degree_cap is not None else 3 * order
    F = HSeries.from_terms(
        L, 2, order, {0: TensorPoly.unit(L, 2), 1: embed_wedge(L, f)}, degree_cap
    )
    h3 = None
    if L.cartan is not None:
        h3 = h3_invariant_test(L, f, theta_eigenvalue=1)

    reports = []
    for n in range(2, order + 1):
        entry = {"h_order": n, "passes": []}
        ce_inserted = None
        for attempt in (1, 2):
            passrec = {"attempt": attempt, "steps": []}
            eta = antipode_swap_defect_a(F.truncate(n)).coefficient(n)
            if not eta.is_zero():
                _assert_eq(
                    eta.reverse_legs().antipode_legs(), eta,
                    "twist pre-correction symmetry",
                )
                sign = 1 if n % 2 == 0 else -1
                _assert_eq(
                    eta.reverse_legs(), eta.scale(sign),
                    "twist pre-correction swap parity",
                )
                F = F.add_term(n, eta.scale(Fraction(-1, 2)))
                passrec["steps"].append("antipode_precorrection")
            _assert_zero(
                HSeries.from_terms(L, 2, n, {n: swap_flip_defect(F.truncate(n)).coefficient(n)}),
                "swap/h-flip symmetry broken before the solve",
            )

            xi = twist_defect(F.truncate(n), phi.truncate(n)).coefficient(n)
            if xi.is_zero():
                passrec["steps"].append("no_obstruction")
                entry["passes"].append(passrec)
                break
            _assert_zero(delta(xi), "twist obstruction is not a cocycle")
            if xi.has_unit_leg():
                raise InternalAssertionError("twist obstruction has a unit leg")
            if L.cartan is not None and not xi.is_weight_zero():
                raise InternalAssertionError("twist obstruction is not weight zero")
            sign = 1 if (n + 1) % 2 == 0 else -1
            _assert_eq(xi.tau(), xi.scale(sign), "twist obstruction tau parity")
            _assert_eq(xi.antipode_legs(), xi.scale(sign), "twist obstruction antipode parity")
            theta_ok = None
            if theta_mode is not None:
                tsign = 1 if theta_mode == "fixed" else (1 if n % 2 == 0 else -1)
                theta_ok = xi.theta_legs() == xi.scale(tsign)
                passrec["theta_parity"] = bool(theta_ok)

            a = alt(xi)
            if not a.is_zero():
                if n % 2:
                    raise InternalAssertionError(
                        f"odd-order twist obstruction has a nonzero class at h^{n}"
                    )
                if attempt == 2:
                    raise InternalAssertionError(
                        "secondary correction did not kill the obstruction class"
                    )
                if not (a - embed_wedge(L, extract_wedge(a))).is_zero():
                    raise InternalAssertionError(
                        "even twist obstruction class is not a pure 3-wedge"
                    )
                target = extract_wedge(a).scale(Fraction(3, 4))
                chi, basis = _ce_solve(L, f, target, pivot_reverse)
                if chi is None:
                    raise ObstructionError(
                        "secondary obstruction class does not cobound in the "
                        "dual-bracket cohomology; the vanishing hypothesis fails",
                        residual=target,
                        order=n,
                    )
                F = F.add_term(n - 1, embed_wedge(L, chi))
                ce_inserted = chi
                passrec["steps"].append("secondary_correction")
                passrec["ce_chi"] = repr(chi)
                entry["passes"].append(passrec)
                continue

            sectors = [("tau", sign), ("antipode", sign)]
            if theta_mode is not None and theta_ok:
                sectors.append(("theta", tsign))
            rep = _solve_step(L, xi, sectors, False, pivot_reverse)
            if not rep.solved:
                raise ObstructionError(
                    f"twist obstruction failed to cobound at h^{n}",
                    residual=rep.residual_class,
                    order=n,
                )
            x = rep.solution
            if n % 2:
                x, killed = _wedge_kill(x)
                if not killed.is_zero():
                    passrec["normalized_wedge"] = repr(killed)
            F = F.add_term(n, x)
            passrec["steps"].append("cobound")
            passrec["solve"] = rep.summary()
            entry["passes"].append(passrec)
            break
        if ce_inserted is not None:
            entry["ce_inserted_at"] = n - 1
        reports.append(entry)

    _assert_zero(twist_defect(F, phi), "twist equation after the recursion")
    _assert_zero(antipode_swap_defect_a(F), "antipode symmetry after the recursion")
    _assert_zero(swap_flip_defect(F), "swap/h-flip symmetry after the recursion")
    w = twisted_antipode_element(F)
    cert = TwistCertificate(
        L, f, F, associator_cert, order, reports, w, h3,
        notes={"theta_mode": theta_mode, "pivot_reverse": pivot_reverse},
    )
    theta_flip = None
    if theta_mode == "flip":
        theta_flip = theta_flip_defect(F).is_zero()
    elif theta_mode == "fixed":
        theta_flip = theta_defect(F).is_zero()
    cert.notes["theta_symmetry_holds"] = theta_flip
    return cert


# -- quasitriangular solver -----------------------------------------------------------


def solve_quasitriangular(L, t, order, use_theta=None, degree_cap=None, pivot_reverse=False):
    """Extend (1, 1 + h t) to a pentagon/hexagon pair with the auxiliary
    symmetries; even orders repair the hexagon by a 3-wedge shift of the
    associator, odd orders by a frozen-coboundary solve on the braiding.
    """
    if t.arity != 2:
        raise PreconditionError("t must live in two tensor factors")
    if t != t.reverse_legs():
        raise PreconditionError("t must be symmetric")
    if not t.is_invariant():
        raise PreconditionError("t must be invariant")
    if t.max_degree() > 2 or t.has_unit_leg():
        raise PreconditionError("t must be a two-tensor of Lie algebra elements")
    if use_theta is None:
        use_theta = L.cartan is not None
    if use_theta and L.cartan is None:
        raise PreconditionError("theta symmetry requested without Cartan data")
    if use_theta and t.theta_legs() != t:
        raise PreconditionError("theta does not preserve t")
    if degree_cap is None:
        degree_cap = 3 * order

    phi = HSeries.unit(L, 3, order, degree_cap)
    R = HSeries.from_terms(L, 2, order, {0: TensorPoly.unit(L, 2), 1: t}, degree_cap)
    reports = []
    pent_sectors = [("tau", -1), ("antipode", -1)]
    if use_theta:
        pent_sectors.append(("theta", 1))

    for n in range(2, order + 1):
        entry = {"h_order": n, "steps": []}
        # braiding unitarity pre-correction
        chi = (R.truncate(n).flip_h() * R.truncate(n)).coefficient(n)
        if n % 2:
            _assert_zero(
                HSeries.from_terms(L, 2, n, {n: chi}),
                "odd-order unitarity defect of the braiding",
            )
        elif not chi.is_zero():
            _assert_eq(chi.antipode_legs(), chi, "unitarity defect antipode parity")
            _assert_eq(chi.reverse_legs(), chi, "unitarity defect swap parity")
            _assert_invariant(chi, "unitarity defect invariance")
            R = R.add_term(n, chi.scale(Fraction(-1, 2)))
            entry["steps"].append("unitarity_precorrection")

        # associator extension (even parameter: nothing to do at odd orders)
        eta = reversal_defect(phi.truncate(n)).coefficient(n)
        if not eta.is_zero():
            _assert_eq(eta.reverse_legs(), eta, "reversal pre-correction symmetry")
            phi = phi.add_term(n, eta.scale(Fraction(-1, 2)))
            entry["steps"].append("reversal_precorrection")
        chis = antipode_reversal_defect(phi.truncate(n)).coefficient(n)
        if not chis.is_zero():
            phi = phi.add_term(n, chis.scale(Fraction(-1, 2)))
            entry["steps"].append("antipode_precorrection")
        xi = pentagon_defect(phi.truncate(n)).coefficient(n)
        if not xi.is_zero():
            if n % 2:
                raise InternalAssertionError(
                    "odd-order pentagon obstruction with even-parameter associator"
                )
            _assert_zero(delta(xi), "pentagon obstruction is not a cocycle")
            _assert_invariant(xi, "pentagon obstruction invariance")
            rep = _solve_step(L, xi, pent_sectors, True, pivot_reverse)
            if not rep.solved:
                raise ObstructionError(
                    f"pentagon obstruction failed to cobound at h^{n}",
                    residual=rep.residual_class,
                    order=n,
                )
            x, killed = _wedge_kill(rep.solution)
            phi = phi.add_term(n, x)
            entry["steps"].append("pentagon_cobound")
            entry["pentagon_solve"] = rep.summary()

        # hexagon obstruction
        psi = hexagon_defects(R.truncate(n), phi.truncate(n))[0].coefficient(n)
        if psi.is_zero():
            entry["steps"].append("hexagon_clear")
            reports.append(entry)
            continue
        _assert_invariant(psi, "hexagon obstruction invariance")
        if psi.has_unit_leg():
            raise InternalAssertionError("hexagon obstruction has a unit leg")
        sign = 1 if (n + 1) % 2 == 0 else -1
        _assert_eq(
            psi.permute_legs((1, 0, 2)).antipode_legs(), psi,
            "hexagon obstruction transposed antipode symmetry",
        )
        _assert_eq(psi.antipode_legs(), psi.scale(sign), "hexagon obstruction antipode parity")
        if use_theta:
            _assert_eq(psi.theta_legs(), psi, "hexagon obstruction involution parity")

        if n % 2 == 0:
            residual = psi - embed_wedge(L, extract_wedge(psi))
            if not residual.is_zero():
                raise InternalAssertionError(
                    "even hexagon obstruction is not a pure 3-wedge"
                )
            phi = phi.add_term(n, psi.scale(Fraction(1, 3)))
            entry["steps"].append("hexagon_wedge_shift")
        else:
            from .cohomology import delta_frozen

            _assert_zero(delta_frozen(psi), "hexagon obstruction frozen cocycle")
            sectors = [("antipode", 1)]
            if use_theta:
                sectors.append(("theta", 1))
            rep = _solve_step(
                L, psi, sectors, True, pivot_reverse,
                differential="delta_prime", symmetric_columns=True,
            )
            if not rep.solved:
                raise ObstructionError(
                    f"hexagon obstruction failed to cobound at h^{n}",
                    residual=rep.residual_class,
                    order=n,
                )
            r, killed = _kill_linear_part(rep.solution)
            _assert_eq(r.reverse_legs(), r, "braiding increment symmetry")
            R = R.add_term(n, r)
            entry["steps"].append("hexagon_frozen_cobound")
            entry["hexagon_solve"] = rep.summary()

        da, db = hexagon_defects(R.truncate(n), phi.truncate(n))
        for k in range(n + 1):
            if not da.coefficient(k).is_zero() or not db.coefficient(k).is_zero():
                raise InternalAssertionError(
                    f"hexagon defect survives at h^{k} after the order-{n} step"
                )
        reports.append(entry)

    _assert_zero(pentagon_defect(phi), "pentagon identity for the braided pair")
    da, db = hexagon_defects(R, phi)
    _assert_zero(da, "first hexagon identity")
    _assert_zero(db, "second hexagon identity")
    options = {"use_theta": use_theta, "degree_cap": degree_cap, "pivot_reverse": pivot_reverse}
    return QTCertificate(L, t, phi, R, order, options, reports)


# -- gauge equivalence ------------------------------------------------------------------


def gauge_equivalent(F, F2, phi):
    """Construct u with F = (u (x) u) F2 Delta(u^{-1}) and u S(u) = 1.

    u is accumulated as the exponential of an antipode-odd series, which
    makes u S(u) = 1 exact.  A wedge component of the order-n difference is
    absorbed by a primitive gauge term one order down (its leading effect
    is [[p, f]]); a wedge outside that image is a reparametrization of the
    deformation parameter, not a gauge, and is reported as the failure.
    """
    order = min(F.order, F2.order)
    L = F.L
    if F.coefficient(0) != TensorPoly.unit(L, 2) or F2.coefficient(0) != TensorPoly.unit(L, 2):
        raise PreconditionError("both solutions must start at the unit")
    if F.coefficient(1) != F2.coefficient(1):
        raise PreconditionError("the infinitesimals differ")
    f_wedge = extract_wedge(F.coefficient(1))
    prim_cols = [dict(schouten(L, WedgeElem.single((i,), 1), f_wedge).terms)
                 for i in range(L.dim)]

    z = HSeries.zero(L, 1, order, F.degree_cap)
    result = GaugeResult()
    for n in range(2, order + 1):
        u = z.exp()
        d = (F - gauge_act(u, F2)).coefficient(n)
        if d.is_zero():
            continue
        if not delta(d).is_zero():
            result.failure_order = n
            result.residual = d
            return result
        wpart = extract_wedge(alt(d))
        if not wpart.is_zero():
            combo = linalg.solve_sparse(prim_cols, dict(wpart.terms))
            if combo is None:
                result.failure_order = n
                result.residual = wpart
                return result
            terms = {}
            for i, c in combo.items():
                key = (tuple(1 if j == i else 0 for j in range(L.dim)),)
                terms[key] = c
            z = z.add_term(n - 1, TensorPoly(L, 1, terms))
            u = z.exp()
            d = (F - gauge_act(u, F2)).coefficient(n)
            if not extract_wedge(alt(d)).is_zero():
                raise InternalAssertionError(
                    "primitive gauge insertion did not absorb the wedge drift"
                )
        if d.is_zero():
            continue
        rep = solve_cobounding(
            L,
            d,
            differential="delta",
            weight_zero=False,
            check_cocycle=False,
        )
        if not rep.solved:
            result.failure_order = n
            result.residual = rep.residual_class
            return result
        from .uea import antipode

        v = rep.solution.to_ue()
        un = (v - antipode(v)).scale(Fraction(1, 2))
        z = z.add_term(n, TensorPoly.from_ue(un))
        u = z.exp()
        dcheck = (F - gauge_act(u, F2)).coefficient(n)
        if not dcheck.is_zero():
            result.failure_order = n
            result.residual = dcheck
            return result

    u = z.exp()
    if not (F - gauge_act(u, F2)).is_zero():
        result.failure_order = -1
        result.residual = F - gauge_act(u, F2)
        return result
    result.u = u
    result.z = z
    result.ok = True
    result.unit_antipode_product = (u * u.antipode_legs()) == HSeries.unit(L, 1, order, u.degree_cap)
    return result


# -- convenience builders ----------------------------------------------------------------


def associator_for_twist(L, f, order, degree_cap=None, pivot_reverse=False):
    """Pentagon certificate with leading term 2/3 [[f, f]], even parameter."""
    phi = schouten(L, f, f).scale(Fraction(2, 3))
    return solve_pentagon(
        L,
        phi,
        order,
        cond_b=True,
        cond_c=L.cartan is not None,
        cond_d=True,
        even_parameter=True,
        degree_cap=degree_cap,
        pivot_reverse=pivot_reverse,
    )
