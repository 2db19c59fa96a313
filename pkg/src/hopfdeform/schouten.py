"""Schouten bracket, Yang-Baxter expressions, the induced dual bracket,
and the degree-3 invariant cohomology test for the secondary obstruction
theory.

The dual bracket is defined operationally: the structure constant of
[l_k, l_l]* along x_i is the (k,l) wedge coefficient of the leg-wise
adjoint action of x_i on the embedded 2-wedge.  The Jacobi identity for it
is equivalent to invariance of the Yang-Baxter expression, independent of
embedding scales.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import PreconditionError
from .tensor import TensorPoly, embed_wedge, extract_wedge
from .wedge import WedgeElem


def schouten(L, a, b):
    """Graded bracket wedge^k x wedge^l -> wedge^(k+l-1)."""
    out = WedgeElem.zero(a.degree + b.degree - 1)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            for i, xi in enumerate(ka, start=1):
                rest_a = ka[:i - 1] + ka[i:]
                for j, yj in enumerate(kb, start=1):
                    rest_b = kb[:j - 1] + kb[j:]
                    sign = -1 if (i + j) % 2 else 1
                    for k, c in L.bracket_basis(xi, yj).items():
                        out = out + WedgeElem(
                            out.degree,
                            {(k,) + rest_a + rest_b: ca * cb * c * sign},
                        )
    return out


def yang_baxter(L, f):
    """[f12, f13 + f23] + [f13, f23] in U(G)^(x)3 for an embedded 2-wedge."""
    if f.degree != 2:
        raise ValueError("yang_baxter needs a 2-wedge")
    ft = embed_wedge(L, f)
    f12 = ft.leg_map((1, 2), 3)
    f13 = ft.leg_map((1, 3), 3)
    f23 = ft.leg_map((2, 3), 3)
    return f12.commutator(f13 + f23) + f13.commutator(f23)


def yb_polarized(L, f, chi):
    """Polarization: [f12,chi13+chi23] + [f13,chi23] + [chi12,f13+f23] + [chi13,f23]."""
    if f.degree != 2 or chi.degree != 2:
        raise ValueError("yb_polarized needs 2-wedges")
    ft = embed_wedge(L, f)
    ct = embed_wedge(L, chi)
    out = TensorPoly.zero(L, 3)
    for a, b in ((ft, ct), (ct, ft)):
        a12 = a.leg_map((1, 2), 3)
        a13 = a.leg_map((1, 3), 3)
        b13 = b.leg_map((1, 3), 3)
        b23 = b.leg_map((2, 3), 3)
        out = out + a12.commutator(b13 + b23) + a13.commutator(b23)
    return out


class DualBracket:
    """Structure constants of the bracket induced on the dual space."""

    def __init__(self, L, structure):
        self.L = L
        # {(k, l): {i: coeff}} for k < l
        self.structure = structure

    def bracket_basis(self, k, l):
        if k == l:
            return {}
        if k < l:
            return self.structure.get((k, l), {})
        return {i: -c for i, c in self.structure.get((l, k), {}).items()}

    def bracket(self, x, y):
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.bracket_basis(i, j).items():
                    v = out.get(k, Fraction(0)) + a * b * c
                    if v:
                        out[k] = v
                    elif k in out:
                        del out[k]
        return out

    def jacobi_failure(self):
        """First basis triple violating Jacobi, or None."""
        n = self.L.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    total = {}
                    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                        for m, cm in self.bracket_basis(a, b).items():
                            for p, cp in self.bracket_basis(m, c).items():
                                v = total.get(p, Fraction(0)) + cm * cp
                                if v:
                                    total[p] = v
                                elif p in total:
                                    del total[p]
                    if total:
                        return (i, j, k)
        return None


def dual_bracket(L, f):
    """Bracket on the dual induced by a 2-wedge."""
    if f.degree != 2:
        raise ValueError("dual_bracket needs a 2-wedge")
    ft = embed_wedge(L, f)
    structure = {}
    for i in range(L.dim):
        acted = extract_wedge(ft.ad_legwise({i: 1}))
        for (k, l), c in acted.terms.items():
            structure.setdefault((k, l), {})[i] = c
    return DualBracket(L, structure)


def ce_differential(L, f, u):
    """Chevalley-Eilenberg coboundary of the dual bracket, realized as [[f, .]]."""
    return schouten(L, f, u)


def wedge_basis(L, degree, weight_zero=False):
    """Strictly increasing index tuples, optionally of total weight zero."""
    out = []

    def rec(start, chosen):
        if len(chosen) == degree:
            out.append(tuple(chosen))
            return
        for i in range(start, L.dim):
            chosen.append(i)
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    if not weight_zero:
        return out
    zero = L.zero_weight()
    filtered = []
    for key in out:
        total = list(zero)
        for i in key:
            w = L.weight_of_basis(i)
            for pos in range(len(total)):
                total[pos] += w[pos]
        if tuple(total) == zero:
            filtered.append(key)
    return filtered


def theta_wedge(L, w):
    """Involution applied leg-wise to a wedge."""
    return w.apply_linear([L.theta_basis(i) for i in range(L.dim)])


def theta_project_wedge(L, w, eigenvalue):
    return (w + theta_wedge(L, w).scale(eigenvalue)).scale(Fraction(1, 2))


def _wedge_to_coords(w):
    return dict(w.terms)


def h3_invariant_test(L, f, weight_zero=None, theta_eigenvalue=None):
    """Dimension of the requested sector of H^3 of the dual-bracket complex.

    The complex is wedge^2 -> wedge^3 -> wedge^4 with differential [[f, .]].
    The wedge^3 sector is cut by total weight zero (when Cartan data is
    present) and by the given theta eigenvalue; wedge^2 sources carry the
    opposite theta parity when theta anticommutes with the differential
    (the case theta(f) = -f), the same parity when it commutes.
    """
    db = dual_bracket(L, f)
    bad = db.jacobi_failure()
    if bad is not None:
        raise PreconditionError(
            f"dual bracket fails Jacobi on basis triple {bad}; "
            "the Yang-Baxter expression of f is not invariant"
        )
    if weight_zero is None:
        weight_zero = L.cartan is not None
    use_theta = theta_eigenvalue is not None and L.cartan is not None

    theta_f_sign = None
    if use_theta:
        tf = theta_wedge(L, f)
        if tf == f:
            theta_f_sign = 1
        elif tf == -f:
            theta_f_sign = -1
        else:
            raise PreconditionError("f is not a theta eigenvector")

    def sector_basis(degree, eig):
        basis = []
        for key in wedge_basis(L, degree, weight_zero):
            w = WedgeElem.single(key)
            if eig is not None:
                w = theta_project_wedge(L, w, eig)
            if not w.is_zero():
                basis.append(w)
        return basis

    mid_eig = theta_eigenvalue if use_theta else None
    src_eig = None
    if use_theta:
        src_eig = theta_eigenvalue * theta_f_sign

    mid = sector_basis(3, mid_eig)
    src = sector_basis(2, src_eig)
    top_d = [_wedge_to_coords(ce_differential(L, f, w)) for w in mid]
    ker_combos = linalg.nullspace(top_d)
    im_cols = [_wedge_to_coords(ce_differential(L, f, w)) for w in src]
    im_rank = linalg.rank(im_cols)

    # representatives: kernel vectors reduced modulo the image
    basisred = linalg._IncrementalBasis()
    for col in im_cols:
        if col:
            basisred.add(col, {})
    reps = []
    for combo in ker_combos:
        vec = WedgeElem.zero(3)
        for j, c in combo.items():
            vec = vec + mid[j].scale(c)
        red, _ = basisred.reduce(_wedge_to_coords(vec), {})
        if red:
            basisred.add(red, {})
            reps.append(WedgeElem(3, red))

    d_on_sources_zero = all(not col for col in im_cols)
    return {
        "sector_dim_wedge3": len(mid),
        "kernel_dim": len(ker_combos),
        "image_rank": im_rank,
        "h3_dim": len(reps),
        "representatives": reps,
        "ce_action_trivial": d_on_sources_zero,
        "exact_exponential_hint": d_on_sources_zero
        and schouten(L, f, f).is_zero(),
    }
