"""Exact sparse linear algebra over the rationals.

Vectors are dicts keyed by arbitrary sortable row keys.  Reduction order is
fixed (columns in given order, pivot row = smallest row key) so every solve
is reproducible across runs and platforms.
"""

from __future__ import annotations

from fractions import Fraction


def _assemble(columns, target=None):
    """Row-major sparse matrix from column dicts; returns (rows, b, row_keys)."""
    row_keys = set()
    for col in columns:
        row_keys.update(col.keys())
    if target:
        row_keys.update(target.keys())
    row_keys = sorted(row_keys)
    row_of = {k: r for r, k in enumerate(row_keys)}
    rows = [dict() for _ in row_keys]
    for j, col in enumerate(columns):
        for k, v in col.items():
            if v:
                rows[row_of[k]][j] = v
    b = [Fraction(0)] * len(row_keys)
    if target:
        for k, v in target.items():
            b[row_of[k]] = Fraction(v)
    return rows, b, row_keys


def _rref(rows, b, ncols):
    """In-place RREF; returns (pivots: col->row, inconsistent_rows)."""
    col_index = {}
    for r, row in enumerate(rows):
        for j in row:
            col_index.setdefault(j, set()).add(r)
    pivoted_rows = set()
    pivots = {}
    for j in range(ncols):
        cand = [r for r in col_index.get(j, ()) if r not in pivoted_rows]
        if not cand:
            continue
        # sparsest candidate row limits fill-in; ties break deterministically
        piv = min(cand, key=lambda r: (len(rows[r]), r))
        pivots[j] = piv
        pivoted_rows.add(piv)
        prow = rows[piv]
        pval = prow[j]
        if pval != 1:
            inv = Fraction(1) / pval
            for jj in prow:
                prow[jj] *= inv
            b[piv] *= inv
        for r in list(col_index.get(j, ())):
            if r == piv:
                continue
            row = rows[r]
            factor = row.get(j)
            if not factor:
                continue
            for jj, v in prow.items():
                nv = row.get(jj, Fraction(0)) - factor * v
                if nv:
                    row[jj] = nv
                    col_index.setdefault(jj, set()).add(r)
                else:
                    if jj in row:
                        del row[jj]
                        col_index[jj].discard(r)
            b[r] -= factor * b[piv]
        col_index[j] = {piv}
    bad = [r for r, row in enumerate(rows) if not row and b[r]]
    return pivots, bad


def solve_sparse(columns, target):
    """Solve sum_j x_j * columns[j] = target exactly.

    Returns a dict {j: Fraction} with free variables omitted (set to zero),
    or None if the system is inconsistent.
    """
    rows, b, _ = _assemble(columns, target)
    pivots, bad = _rref(rows, b, len(columns))
    if bad:
        return None
    return {j: b[r] for j, r in sorted(pivots.items()) if b[r]}


def nullspace(columns):
    """Basis of the kernel of the column map, one dict {j: coeff} per vector."""
    rows, b, _ = _assemble(columns, None)
    pivots, _ = _rref(rows, b, len(columns))
    free = [j for j in range(len(columns)) if j not in pivots]
    basis = []
    for jf in free:
        vec = {jf: Fraction(1)}
        for j, r in pivots.items():
            c = rows[r].get(jf)
            if c:
                vec[j] = -c
        basis.append(dict(sorted(vec.items())))
    return basis


def rank(columns):
    rows, b, _ = _assemble(columns, None)
    pivots, _ = _rref(rows, b, len(columns))
    return len(pivots)


def dense_inverse(mat):
    """Inverse of a small dense rational matrix; None if singular."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * p for a, p in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _sub_scaled(target, src, factor):
    for k, v in src.items():
        nv = target.get(k, Fraction(0)) - factor * v
        if nv:
            target[k] = nv
        elif k in target:
            del target[k]


class _IncrementalBasis:
    """Mutually reduced row storage of vectors with tracked combinations."""

    def __init__(self):
        self.rows = []  # list of [pivot_key, vec dict, combo dict]

    def reduce(self, vec, combo):
        vec = dict(vec)
        combo = dict(combo)
        for pkey, bvec, bcombo in self.rows:
            c = vec.get(pkey)
            if c:
                _sub_scaled(vec, bvec, c)
                _sub_scaled(combo, bcombo, c)
        return vec, combo

    def add(self, vec, combo):
        """Reduce and store; returns None if stored, else the dependency combo."""
        vec, combo = self.reduce(vec, combo)
        if not vec:
            return combo
        pkey = min(vec)
        pval = vec[pkey]
        vec = {k: v / pval for k, v in vec.items()}
        combo = {k: v / pval for k, v in combo.items()}
        for _, bvec, bcombo in self.rows:
            c = bvec.get(pkey)
            if c:
                _sub_scaled(bvec, vec, c)
                _sub_scaled(bcombo, combo, c)
        self.rows.append((pkey, vec, combo))
        return None


def cyclic_minimal_polynomial(matvec, v0, max_steps=200):
    """Minimal polynomial of the operator on the cyclic subspace of v0.

    Returns monic coefficients [c_0, ..., c_s] with sum c_i A^i v0 = 0.
    """
    if not v0:
        return [Fraction(1)]
    basis = _IncrementalBasis()
    vecs = [dict(v0)]
    dep = basis.add(v0, {0: Fraction(1)})
    step = 0
    while dep is None:
        step += 1
        if step > max_steps:
            raise RuntimeError("cyclic subspace did not close")
        nxt = matvec(vecs[-1])
        vecs.append(nxt)
        dep = basis.add(nxt, {step: Fraction(1)})
    deg = max(dep)
    lead = dep[deg]
    return [dep.get(i, Fraction(0)) / lead for i in range(deg + 1)]


def project_to_kernel(matvec, v):
    """Component of v in ker A, assuming A acts semisimply on v's cyclic space."""
    mu = cyclic_minimal_polynomial(matvec, v)
    if len(mu) == 1:
        return dict(v)
    if mu[0] != 0:
        return {}
    g = mu[1:]  # mu(T) = T * g(T); g(0) != 0 when mu is squarefree
    if g[0] == 0:
        raise RuntimeError("operator not semisimple on this vector")
    acc = {}
    power = dict(v)
    for i, c in enumerate(g):
        if c:
            for k, val in power.items():
                nv = acc.get(k, Fraction(0)) + c * val
                if nv:
                    acc[k] = nv
                elif k in acc:
                    del acc[k]
        if i + 1 < len(g):
            power = matvec(power)
    g0 = g[0]
    return {k: val / g0 for k, val in acc.items() if val}
