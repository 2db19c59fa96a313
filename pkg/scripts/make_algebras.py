#!/usr/bin/env python3
"""Regenerate the bundled example algebras in src/hopfdeform/data/.

sl2, sl3 and sl2+sl2 are built from matrix units so the structure constants
are derived, not hand-typed.  Basis order is positive root vectors, then
Cartan, then negative root vectors (weight-zero blocks stay contiguous).
"""

import json
import os
from fractions import Fraction

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "src", "hopfdeform", "data")


def matrix_units_bracket(n, a, b):
    """[e_a, e_b] for matrix units a=(i,j), b=(k,l) in gl_n: sparse dict."""
    (i, j), (k, l) = a, b
    out = {}
    if j == k:
        out[(i, l)] = out.get((i, l), 0) + 1
    if l == i:
        out[(k, j)] = out.get((k, j), 0) - 1
    return {key: v for key, v in out.items() if v}


def sl_n_algebra(n, name, labels=None):
    """sl_n in the basis [positive e_ij (i<j), h_i = e_ii - e_i+1,i+1, negative e_ij (i>j)]."""
    pos = [(i, j) for i in range(n) for j in range(n) if i < j]
    pos.sort(key=lambda ij: (ij[1] - ij[0], ij[0]))
    neg = [(j, i) for (i, j) in pos]
    cartan = [("h", i) for i in range(n - 1)]

    basis = [("e", ij) for ij in pos] + cartan + [("e", ij) for ij in neg]

    def expand(elem):
        """Element as dict[(i,j)] -> coeff in matrix units (traceless part)."""
        kind, payload = elem
        if kind == "e":
            return {payload: Fraction(1)}
        i = payload
        return {(i, i): Fraction(1), (i + 1, i + 1): Fraction(-1)}

    def to_basis(units):
        """Convert a traceless matrix-unit combination back to basis coords."""
        coords = {}
        units = dict(units)
        for idx, elem in enumerate(basis):
            kind, payload = elem
            if kind != "e":
                continue
            c = units.pop(payload, Fraction(0))
            if c:
                coords[idx] = c
        # remaining diagonal part: express via h_i
        diag = [units.get((i, i), Fraction(0)) for i in range(n)]
        # h_i basis: partial sums
        acc = Fraction(0)
        for i in range(n - 1):
            acc += diag[i]
            if acc:
                idx = basis.index(("h", i))
                coords[idx] = acc
        return coords

    def bracket(ea, eb):
        out = {}
        for ua, ca in expand(ea).items():
            for ub, cb in expand(eb).items():
                for key, v in matrix_units_bracket(n, ua, ub).items():
                    out[key] = out.get(key, Fraction(0)) + ca * cb * v
        return to_basis({k: v for k, v in out.items() if v})

    brackets = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            vec = bracket(basis[i], basis[j])
            if vec:
                brackets.append(
                    {"i": i, "j": j, "terms": [[str(c), k] for k, c in sorted(vec.items())]}
                )

    h_indices = [basis.index(("h", i)) for i in range(n - 1)]
    roots = []
    for ij in pos:
        e_idx = basis.index(("e", ij))
        f_idx = basis.index(("e", (ij[1], ij[0])))
        weight = []
        for pos_h, hi in enumerate(range(n - 1)):
            vec = bracket(("h", hi), ("e", ij))
            w = vec.get(e_idx, Fraction(0))
            if set(vec) - {e_idx}:
                raise RuntimeError("torus action not diagonal?")
            weight.append(str(w))
        roots.append({"weight": weight, "e": e_idx, "f": f_idx})

    if labels is None:
        labels = []
        for kind, payload in basis:
            if kind == "h":
                labels.append(f"H{payload + 1}")
            else:
                i, j = payload
                labels.append(f"E{i + 1}{j + 1}" if i < j else f"F{j + 1}{i + 1}")

    return {
        "name": name,
        "dim": len(basis),
        "basis": labels,
        "brackets": brackets,
        "cartan": {"h_indices": h_indices, "positive_roots": roots},
    }


def sl2():
    doc = sl_n_algebra(2, "sl2", labels=["E", "H", "F"])
    return doc


def sl2_sl2():
    """Direct sum, basis E1,E2,H1,H2,F1,F2."""
    one = sl_n_algebra(2, "x")
    # embed two copies: index map copy c: {0:Ec,1:Hc,2:Fc} -> global
    order = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3, (0, 2): 4, (1, 2): 5}
    glob = {}
    for copy in (0, 1):
        for local in range(3):
            glob[(copy, local)] = order[(copy, local)]
    labels = ["E1", "E2", "H1", "H2", "F1", "F2"]
    brackets = []
    for copy in (0, 1):
        for entry in one["brackets"]:
            i, j = glob[(copy, entry["i"])], glob[(copy, entry["j"])]
            terms = [[c, glob[(copy, k)]] for c, k in entry["terms"]]
            if i > j:
                i, j = j, i
                terms = [[str(-Fraction(c)), k] for c, k in terms]
            brackets.append({"i": i, "j": j, "terms": terms})
    brackets.sort(key=lambda e: (e["i"], e["j"]))
    roots = [
        {"weight": ["2", "0"], "e": glob[(0, 0)], "f": glob[(0, 2)]},
        {"weight": ["0", "2"], "e": glob[(1, 0)], "f": glob[(1, 2)]},
    ]
    return {
        "name": "sl2_sl2",
        "dim": 6,
        "basis": labels,
        "brackets": brackets,
        "cartan": {"h_indices": [glob[(0, 1)], glob[(1, 1)]], "positive_roots": roots},
    }


def abelian2():
    return {"name": "abelian2", "dim": 2, "basis": ["X", "Y"], "brackets": []}


def abelian3():
    return {"name": "abelian3", "dim": 3, "basis": ["X", "Y", "Z"], "brackets": []}


def heisenberg3():
    return {
        "name": "heisenberg3",
        "dim": 3,
        "basis": ["X", "Y", "Z"],
        "brackets": [{"i": 0, "j": 1, "terms": [["1", 2]]}],
    }


def main():
    os.makedirs(DATA, exist_ok=True)
    docs = {
        "sl2": sl2(),
        "sl3": sl_n_algebra(3, "sl3"),
        "sl2_sl2": sl2_sl2(),
        "abelian2": abelian2(),
        "abelian3": abelian3(),
        "heisenberg3": heisenberg3(),
    }
    for name, doc in docs.items():
        path = os.path.join(DATA, f"{name}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
            fh.write("\n")
        print("wrote", path)


if __name__ == "__main__":
    main()
