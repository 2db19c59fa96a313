"""Coalgebra coboundary, its frozen-last-leg variant, antisymmetrization,
sector projections, and the exact cobounding solver.

The solver works degree block by degree block (the coboundary preserves
total degree and weight), restricts candidates to monomials with no unit
leg (counit normalization survives every solve) and to the connected
support component of the target, solves by deterministic sparse RREF over
Q, and projects the solution into the requested eigen-sectors, which all
commute with the coboundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from itertools import permutations

from . import linalg
from .errors import InternalAssertionError, PreconditionError
from .lie import killing_dual_pairs
from .tensor import TensorPoly, extract_wedge
from .uea import monomial_degree, unit_monomial, weight_of_monomial
from .wedge import WedgeElem, perm_sign


# -- differentials ------------------------------------------------------------


def delta(t):
    """Coalgebra coboundary: arity n -> n+1."""
    n = t.arity
    out = t.leg_map(tuple(range(2, n + 2)), n + 1)  # 1 (x) t
    for i in range(1, n + 1):
        term = t.coproduct_insert(i)
        out = out + (-term if i % 2 else term)
    tail = t.leg_map(tuple(range(1, n + 1)), n + 1)  # t (x) 1
    out = out + (-tail if (n + 1) % 2 else tail)
    return out


def delta_prime(r):
    """Frozen-last-leg coboundary in dimension 2: (Delta(x)id)r - r13 - r23."""
    if r.arity != 2:
        raise ValueError("delta_prime is defined on arity-2 elements")
    return r.coproduct_insert(1) - r.leg_map((1, 3), 3) - r.leg_map((2, 3), 3)


def delta_frozen(t):
    """Continuation of the frozen complex on arity 3 (last leg frozen)."""
    if t.arity != 3:
        raise ValueError("frozen continuation expects arity 3")
    out = t.leg_map((2, 3, 4), 4)
    out = out - t.coproduct_insert(1)
    out = out + t.coproduct_insert(2)
    out = out - t.leg_map((1, 2, 4), 4)
    return out


def alt(t):
    """Signed average over leg permutations (1/n! normalization)."""
    n = t.arity
    acc = TensorPoly.zero(t.L, n)
    for perm in permutations(range(n)):
        sign = perm_sign(perm)
        term = t.permute_legs(perm)
        acc = acc + (term if sign > 0 else -term)
    return acc.scale(Fraction(1, factorial(n)))


# -- sector projections --------------------------------------------------------


_SECTOR_OPS = {
    "tau": lambda t: t.tau(),
    "antipode": lambda t: t.antipode_legs(),
    "theta": lambda t: t.theta_legs(),
}


def apply_sector_op(t, name):
    try:
        return _SECTOR_OPS[name](t)
    except KeyError:
        raise ValueError(f"unknown sector operator {name!r}") from None


def sector_project(t, sectors):
    """Project onto the joint eigenspace of (operator, eigenvalue) pairs."""
    out = t
    for name, eig in sectors:
        if name == "weight0":
            out = out.weight_zero_part()
        else:
            out = (out + apply_sector_op(out, name).scale(eig)).scale(Fraction(1, 2))
    return out


def in_sectors(t, sectors):
    for name, eig in sectors:
        if name == "weight0":
            if not t.is_weight_zero():
                return False
        elif apply_sector_op(t, name) != t.scale(eig):
            return False
    return True


def restrict_sector(t, sectors):
    """Spec surface: joint eigenspace projection with commutation check."""
    ops = [s for s in sectors if s[0] != "weight0"]
    for a in range(len(ops)):
        for b in range(a + 1, len(ops)):
            na, _ = ops[a]
            nb, _ = ops[b]
            one = apply_sector_op(apply_sector_op(t, na), nb)
            two = apply_sector_op(apply_sector_op(t, nb), na)
            if one != two:
                raise PreconditionError(
                    f"sector operators {na} and {nb} do not commute on this input"
                )
    return sector_project(t, sectors)


# -- invariants via the Casimir ---------------------------------------------------


def casimir_matvec(L, arity):
    """Closure applying the Killing-dual Casimir of the leg-wise action."""
    pairs = killing_dual_pairs(L)

    def matvec(vec):
        t = TensorPoly(L, arity, vec)
        acc = TensorPoly.zero(L, arity)
        for i, j, c in pairs:
            acc = acc + t.ad_legwise({j: 1}).ad_legwise({i: 1}).scale(c)
        return dict(acc.terms)

    return matvec


def invariant_project(L, t):
    """Component of t in the invariants of the leg-wise action.

    Uses the spectral projection of the Casimir (exact Krylov minimal
    polynomial); valid whenever the Killing form is nondegenerate.
    """
    if L.is_abelian():
        return t
    matvec = casimir_matvec(L, t.arity)
    out = linalg.project_to_kernel(matvec, dict(t.terms))
    return TensorPoly(L, t.arity, out)


# -- candidate enumeration ---------------------------------------------------------


def monomials_of_degree(dim, d):
    out = []

    def rec(pos, remaining, acc):
        if pos == dim - 1:
            out.append(tuple(acc + [remaining]))
            return
        for e in range(remaining + 1):
            rec(pos + 1, remaining - e, acc + [e])

    rec(0, d, [])
    return out


def candidate_keys(L, arity, total_degree, reduced=True, weight_zero=False):
    """All arity-tuples of monomials with the given total degree."""
    min_leg = 1 if reduced else 0
    if total_degree < arity * min_leg:
        return []
    per_degree = {}

    def monos(d):
        if d not in per_degree:
            per_degree[d] = monomials_of_degree(L.dim, d)
        return per_degree[d]

    keys = []

    def rec(leg, remaining, acc):
        if leg == arity - 1:
            if remaining >= min_leg:
                for m in monos(remaining):
                    keys.append(tuple(acc + [m]))
            return
        hi = remaining - min_leg * (arity - 1 - leg)
        for d in range(min_leg, hi + 1):
            for m in monos(d):
                rec(leg + 1, remaining - d, acc + [m])

    rec(0, total_degree, [])
    if not weight_zero:
        return keys
    zero = L.zero_weight()
    filtered = []
    for key in keys:
        total = list(zero)
        for m in key:
            w = weight_of_monomial(L, m)
            for pos in range(len(total)):
                total[pos] += w[pos]
        if tuple(total) == zero:
            filtered.append(key)
    return filtered


def _component_restrict(columns, target_rows):
    """Indices of columns in the connected support component of the target."""
    row_to_cols = {}
    for jc, col in enumerate(columns):
        for rk in col:
            row_to_cols.setdefault(rk, []).append(jc)
    live_rows = list(target_rows)
    seen_rows = set(target_rows)
    seen_cols = set()
    while live_rows:
        rk = live_rows.pop()
        for jc in row_to_cols.get(rk, ()):
            if jc in seen_cols:
                continue
            seen_cols.add(jc)
            for rk2 in columns[jc]:
                if rk2 not in seen_rows:
                    seen_rows.add(rk2)
                    live_rows.append(rk2)
    return sorted(seen_cols)


# -- the solver ------------------------------------------------------------------


@dataclass
class SolveReport:
    solution: object = None
    residual_class: object = None
    block_dims: list = field(default_factory=list)
    sectors: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def solved(self):
        return self.solution is not None

    def summary(self):
        return {
            "solved": self.solved,
            "blocks": self.block_dims,
            "sectors": [[name, int(eig)] for name, eig in self.sectors],
            "residual": None
            if self.residual_class is None or self.residual_class.is_zero()
            else repr(self.residual_class),
            **self.notes,
        }


def _apply_columns(L, arity, keys, differential):
    cols = []
    for key in keys:
        img = differential(TensorPoly(L, arity, {key: Fraction(1)}))
        cols.append(dict(img.terms))
    return cols


def solve_cobounding(
    L,
    target,
    differential="delta",
    sectors=(),
    degree_cap=None,
    reduced=True,
    invariant=False,
    weight_zero=None,
    pivot_reverse=False,
    symmetric_columns=False,
    check_cocycle=True,
):
    """Solve d(x) = target exactly inside the finite block, or report the class.

    The unknown has arity target.arity - 1 for the coalgebra coboundary and
    arity 2 for the frozen variant.  Free variables are set to zero with
    pivot order lexicographic in (degree, key); pivot_reverse flips the
    column order to exercise a different free-variable choice.
    """
    if differential == "delta":
        d_fun = delta
        unknown_arity = target.arity - 1
        cocycle_defect = delta(target)
    elif differential == "delta_prime":
        d_fun = delta_prime
        unknown_arity = 2
        if target.arity != 3:
            raise ValueError("frozen solve expects an arity-3 target")
        cocycle_defect = delta_frozen(target)
    else:
        raise ValueError(f"unknown differential {differential!r}")

    sectors = list(sectors)
    if weight_zero is None:
        weight_zero = L.cartan is not None

    if check_cocycle and not cocycle_defect.is_zero():
        raise PreconditionError("target is not a cocycle for the requested coboundary")
    if not in_sectors(target, [(n, e) for n, e in sectors if n != "weight0"]):
        raise PreconditionError("target does not lie in the requested sectors")
    if weight_zero and not target.is_weight_zero():
        raise PreconditionError("target is not of weight zero")

    report = SolveReport(sectors=sectors)
    if target.is_zero():
        report.solution = TensorPoly.zero(L, unknown_arity)
        return report

    use_nullspace_invariants = False
    if invariant and not L.is_abelian():
        try:
            killing_dual_pairs(L)
        except PreconditionError:
            use_nullspace_invariants = True

    solution = TensorPoly.zero(L, unknown_arity)
    for deg in target.degrees():
        block = target.degree_slice(deg)
        if degree_cap is not None and deg > degree_cap:
            report.residual_class = extract_wedge(alt(target))
            report.notes["failure"] = f"degree {deg} exceeds cap {degree_cap}"
            return report
        keys = candidate_keys(L, unknown_arity, deg, reduced, weight_zero)
        keys.sort()
        if symmetric_columns and unknown_arity == 2:
            combos = []
            for key in keys:
                rkey = (key[1], key[0])
                if rkey < key:
                    continue
                combos.append([key] if rkey == key else [key, rkey])
        else:
            combos = [[key] for key in keys]
        columns = []
        for combo in combos:
            img = TensorPoly.zero(L, target.arity)
            for key in combo:
                img = img + d_fun(TensorPoly(L, unknown_arity, {key: Fraction(1)}))
            columns.append(dict(img.terms))

        comp = _component_restrict(columns, list(block.terms.keys()))
        comp_columns = [columns[j] for j in comp]
        comp_combos = [combos[j] for j in comp]

        if use_nullspace_invariants:
            # restrict candidates to the exact invariant subspace of the block
            flat_keys = sorted({k for combo in comp_combos for k in combo})
            ad_cols = []
            for key in flat_keys:
                stacked = {}
                tp = TensorPoly(L, unknown_arity, {key: Fraction(1)})
                for i in range(L.dim):
                    for rk, c in tp.ad_legwise({i: 1}).terms.items():
                        stacked[(i, rk)] = c
                ad_cols.append(stacked)
            inv_combos = linalg.nullspace(ad_cols)
            comp_combos = []
            comp_columns = []
            for combo in inv_combos:
                img = TensorPoly.zero(L, target.arity)
                pairs = []
                for j, c in combo.items():
                    pairs.append((flat_keys[j], c))
                    img = img + d_fun(
                        TensorPoly(L, unknown_arity, {flat_keys[j]: c})
                    )
                comp_combos.append(pairs)
                comp_columns.append(dict(img.terms))

        if pivot_reverse:
            comp_columns = list(reversed(comp_columns))
            comp_combos = list(reversed(comp_combos))

        coeffs = linalg.solve_sparse(comp_columns, dict(block.terms))
        report.block_dims.append(
            {
                "degree": deg,
                "candidates": len(columns),
                "component": len(comp_columns),
                "rows": len(set().union(*[set(c) for c in comp_columns] or [set()])
                            | set(block.terms)),
                "pivots": None if coeffs is None else len(coeffs),
            }
        )
        if coeffs is None:
            report.residual_class = extract_wedge(alt(target))
            report.notes["failure"] = f"inconsistent system in degree {deg}"
            return report
        terms = {}
        for j, c in coeffs.items():
            combo = comp_combos[j]
            if use_nullspace_invariants:
                for key, ck in combo:
                    terms[key] = terms.get(key, Fraction(0)) + c * ck
            else:
                for key in combo:
                    terms[key] = terms.get(key, Fraction(0)) + c
        solution = solution + TensorPoly(L, unknown_arity, terms)

    if invariant and not use_nullspace_invariants:
        solution = invariant_project(L, solution)
    if sectors and not symmetric_columns:
        solution = sector_project(solution, sectors)
    elif sectors and symmetric_columns:
        # symmetric candidates already enforce the leg swap; apply the rest
        solution = sector_project(
            solution, [(n, e) for n, e in sectors if n not in ("swap",)]
        )

    if d_fun(solution) != target:
        raise InternalAssertionError(
            "sector-projected solution no longer solves the system; "
            "an obstruction symmetry must have failed upstream"
        )
    report.solution = solution
    return report


# -- cohomology dimension reports ---------------------------------------------------


def invariant_basis_combos(L, keys, arity):
    """Exact basis of the invariant subspace spanned by the given keys."""
    ad_cols = []
    for key in keys:
        stacked = {}
        tp = TensorPoly(L, arity, {key: Fraction(1)})
        for i in range(L.dim):
            for rk, c in tp.ad_legwise({i: 1}).terms.items():
                stacked[(i, rk)] = c
        ad_cols.append(stacked)
    return linalg.nullspace(ad_cols)


def _filtered_block_keys(L, arity, degree_cap, weight_zero):
    keys = []
    for deg in range(arity, degree_cap + 1):
        keys.extend(candidate_keys(L, arity, deg, True, weight_zero))
    return sorted(keys)


def cartier_sector_dims(L, arity, degree_cap, invariant=True, weight_zero=None):
    """ker/im dimensions of the coboundary on the reduced block up to the cap.

    Invariance only respects the degree filtration (not the grading), so the
    whole filtered block is treated at once.
    """
    if weight_zero is None:
        weight_zero = L.cartan is not None
    keys = _filtered_block_keys(L, arity, degree_cap, weight_zero)
    combos = (
        invariant_basis_combos(L, keys, arity)
        if invariant
        else [{j: Fraction(1)} for j in range(len(keys))]
    )
    cols = []
    for combo in combos:
        t = TensorPoly(L, arity, {keys[j]: c for j, c in combo.items()})
        cols.append(dict(delta(t).terms))
    kdim = len(combos) - linalg.rank(cols)
    if arity >= 2:
        src_keys = _filtered_block_keys(L, arity - 1, degree_cap, weight_zero)
        src_combos = (
            invariant_basis_combos(L, src_keys, arity - 1)
            if invariant
            else [{j: Fraction(1)} for j in range(len(src_keys))]
        )
        src_cols = []
        for combo in src_combos:
            t = TensorPoly(L, arity - 1, {src_keys[j]: c for j, c in combo.items()})
            src_cols.append(dict(delta(t).terms))
        idim = linalg.rank(src_cols)
    else:
        idim = 0
    return {
        "arity": arity,
        "degree_cap": degree_cap,
        "block_dim": len(combos),
        "kernel": kdim,
        "image": idim,
        "h_dim": kdim - idim,
    }
