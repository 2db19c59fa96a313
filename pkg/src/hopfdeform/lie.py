"""Lie algebras given by structure constants over exact rationals.

Loading validates everything the downstream solvers rely on: antisymmetry
(implicit in the i<j storage), the Jacobi identity on all basis triples,
and, when Cartan data is present, a diagonal torus action with the declared
weights plus the involution built from e_a -> -f_a, f_a -> -e_a, h -> -h.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .errors import PreconditionError, SchemaError
from .linalg import dense_inverse
from .wedge import WedgeElem


def parse_rational(s):
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational literal {s!r}") from exc
    raise SchemaError(f"rational must be int or 'p/q' string, got {type(s).__name__}")


def format_rational(q):
    return str(q)


class CartanData:
    """Torus indices, positive root triples and the derived involution."""

    def __init__(self, h_indices, roots):
        self.h_indices = tuple(h_indices)
        # each root: (weight tuple over h_indices, e index, f index)
        self.roots = tuple(roots)

    @property
    def rank(self):
        return len(self.h_indices)


class LieAlgebra:
    def __init__(self, dim, labels, structure, cartan=None, name=None):
        self.dim = dim
        self.labels = tuple(labels)
        # structure: {(i, j): {k: Fraction}} for i < j only
        self.structure = structure
        self.cartan = cartan
        self.name = name
        self._theta = None
        self._weights = None
        self._mul_cache = {}
        self._antipode_cache = {}
        self._coproduct_cache = {}
        if cartan is not None:
            self._theta = self._build_theta()
            self._weights = self._build_weights()

    # -- basic bracket machinery ------------------------------------------

    def bracket_basis(self, i, j):
        """[x_i, x_j] as a sparse vector {k: coeff}."""
        if i == j:
            return {}
        if i < j:
            return self.structure.get((i, j), {})
        return {k: -c for k, c in self.structure.get((j, i), {}).items()}

    def bracket(self, x, y):
        """Bracket of sparse vectors {i: coeff}."""
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

    def ad_matrix(self, i):
        """Columns of ad(x_i): j -> {k: coeff}."""
        return {j: self.bracket_basis(i, j) for j in range(self.dim)}

    def is_abelian(self):
        return all(not v for v in self.structure.values())

    # -- cartan ------------------------------------------------------------

    def _build_theta(self):
        images = [None] * self.dim
        for h in self.cartan.h_indices:
            images[h] = {h: Fraction(-1)}
        for _, e, f in self.cartan.roots:
            images[e] = {f: Fraction(-1)}
            images[f] = {e: Fraction(-1)}
        if any(img is None for img in images):
            missing = [self.labels[i] for i, img in enumerate(images) if img is None]
            raise PreconditionError(
                f"Cartan data does not cover basis vectors {missing}"
            )
        return images

    def _build_weights(self):
        rank = self.cartan.rank
        weights = [None] * self.dim
        for h in self.cartan.h_indices:
            weights[h] = tuple([Fraction(0)] * rank)
        for weight, e, f in self.cartan.roots:
            weights[e] = tuple(weight)
            weights[f] = tuple(-w for w in weight)
        return weights

    def theta_basis(self, i):
        """theta(x_i) as a sparse vector."""
        if self._theta is None:
            raise PreconditionError("Cartan data required for the involution")
        return self._theta[i]

    def weight_of_basis(self, i):
        if self._weights is None:
            raise PreconditionError("Cartan data required for weights")
        return self._weights[i]

    def zero_weight(self):
        return tuple([Fraction(0)] * self.cartan.rank)

    # -- serialization ------------------------------------------------------

    def to_json_dict(self):
        brackets = []
        for (i, j), terms in sorted(self.structure.items()):
            brackets.append(
                {
                    "i": i,
                    "j": j,
                    "terms": [[format_rational(c), k] for k, c in sorted(terms.items())],
                }
            )
        doc = {"dim": self.dim, "basis": list(self.labels), "brackets": brackets}
        if self.cartan is not None:
            doc["cartan"] = {
                "h_indices": list(self.cartan.h_indices),
                "positive_roots": [
                    {
                        "weight": [format_rational(w) for w in weight],
                        "e": e,
                        "f": f,
                    }
                    for weight, e, f in self.cartan.roots
                ],
            }
        if self.name:
            doc["name"] = self.name
        return doc


def cartan_involution(L, coords):
    """Apply the involution to a dense coordinate vector."""
    out = [Fraction(0)] * L.dim
    for i, c in enumerate(coords):
        if c:
            for k, v in L.theta_basis(i).items():
                out[k] += Fraction(c) * v
    return tuple(out)


def killing_form(L):
    """K(x_i, x_j) = trace(ad x_i ad x_j), as a dense rational matrix."""
    ads = [L.ad_matrix(i) for i in range(L.dim)]
    K = [[Fraction(0)] * L.dim for _ in range(L.dim)]
    for i in range(L.dim):
        for j in range(i, L.dim):
            tr = Fraction(0)
            for a in range(L.dim):
                inner = ads[j][a]
                for k, c in inner.items():
                    tr += c * ads[i][k].get(a, Fraction(0))
            K[i][j] = tr
            K[j][i] = tr
    return K


def killing_dual_pairs(L):
    """Pairs (i, j, c) with sum c * x_i (x) x_j the Killing-dual Casimir tensor."""
    K = killing_form(L)
    Kinv = dense_inverse(K)
    if Kinv is None:
        raise PreconditionError("Killing form is degenerate")
    out = []
    for i in range(L.dim):
        for j in range(L.dim):
            if Kinv[i][j]:
                out.append((i, j, Kinv[i][j]))
    return out


def dj_r_matrix(L):
    """Sum of e_a ^ f_a over the declared positive roots, as a 2-wedge."""
    if L.cartan is None:
        raise PreconditionError("missing Cartan data")
    out = WedgeElem.zero(2)
    for _, e, f in L.cartan.roots:
        out = out + WedgeElem.single((e, f))
    return out


# -- loading ----------------------------------------------------------------


def _validate_jacobi(L):
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            for k in range(j + 1, L.dim):
                total = {}
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    inner = L.bracket_basis(a, b)
                    for m, cm in inner.items():
                        for n, cn in L.bracket_basis(m, c).items():
                            v = total.get(n, Fraction(0)) + cm * cn
                            if v:
                                total[n] = v
                            elif n in total:
                                del total[n]
                if total:
                    raise PreconditionError(
                        "Jacobi identity fails on basis triple "
                        f"({L.labels[i]}, {L.labels[j]}, {L.labels[k]})"
                    )


def _validate_cartan(L):
    cartan = L.cartan
    for a_pos, h in enumerate(cartan.h_indices):
        for h2 in cartan.h_indices[a_pos + 1 :]:
            if L.bracket_basis(h, h2):
                raise PreconditionError(
                    f"Cartan indices {h},{h2} do not commute"
                )
    seen = set(cartan.h_indices)
    for weight, e, f in cartan.roots:
        if len(weight) != cartan.rank:
            raise SchemaError("root weight length does not match h_indices")
        for idx in (e, f):
            if idx in seen:
                raise SchemaError(f"basis index {idx} used twice in Cartan data")
            seen.add(idx)
        for pos, h in enumerate(cartan.h_indices):
            for vec, sign, which in ((e, 1, "e"), (f, -1, "f")):
                expected = {vec: sign * weight[pos]} if weight[pos] else {}
                if L.bracket_basis(h, vec) != expected:
                    raise PreconditionError(
                        f"ad(h_{h}) is not diagonal with the declared weight on "
                        f"{which}-vector {L.labels[vec]}"
                    )
    if len(seen) != L.dim:
        missing = [L.labels[i] for i in range(L.dim) if i not in seen]
        raise PreconditionError(f"Cartan data misses basis vectors {missing}")
    # involution must be an automorphism (it is involutive by construction)
    theta = L._theta
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = {}
            for k, c in L.bracket_basis(i, j).items():
                for m, v in theta[k].items():
                    lhs[m] = lhs.get(m, Fraction(0)) + c * v
            rhs = L.bracket(theta[i], theta[j])
            lhs = {k: v for k, v in lhs.items() if v}
            if lhs != rhs:
                raise PreconditionError(
                    "involution is not an automorphism on pair "
                    f"({L.labels[i]}, {L.labels[j]})"
                )


def load_lie_algebra(source):
    """Build and validate a LieAlgebra from a dict, JSON text, or file path."""
    if isinstance(source, dict):
        doc = source
    elif isinstance(source, (str, os.PathLike)):
        text = None
        if isinstance(source, os.PathLike) or (
            isinstance(source, str) and (os.sep in source or source.endswith(".json") or os.path.exists(source))
        ):
            try:
                with open(source, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise SchemaError(f"cannot read algebra file {source}: {exc}") from exc
        else:
            text = source
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    else:
        raise SchemaError("algebra source must be dict, JSON text, or path")

    if not isinstance(doc, dict):
        raise SchemaError("algebra document must be a JSON object")
    try:
        dim = doc["dim"]
        basis = doc["basis"]
        brackets = doc.get("brackets", [])
    except KeyError as exc:
        raise SchemaError(f"missing field {exc}") from exc
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError("dim must be a positive integer")
    if not isinstance(basis, list) or len(basis) != dim:
        raise SchemaError("basis must list exactly dim labels")

    structure = {}
    for entry in brackets:
        try:
            i, j, terms = entry["i"], entry["j"], entry["terms"]
        except (TypeError, KeyError) as exc:
            raise SchemaError(f"malformed bracket entry {entry!r}") from exc
        if not (0 <= i < dim and 0 <= j < dim):
            raise SchemaError(f"bracket indices ({i},{j}) out of range")
        if i >= j:
            raise SchemaError(f"bracket entries must have i < j, got ({i},{j})")
        if (i, j) in structure:
            raise SchemaError(f"duplicate bracket entry for ({i},{j})")
        vec = {}
        for term in terms:
            if not (isinstance(term, list) and len(term) == 2):
                raise SchemaError(f"malformed bracket term {term!r}")
            c = parse_rational(term[0])
            k = term[1]
            if not (isinstance(k, int) and 0 <= k < dim):
                raise SchemaError(f"bracket target index {k!r} out of range")
            if k in vec:
                raise SchemaError(f"duplicate target index {k} in bracket ({i},{j})")
            if c:
                vec[k] = c
        structure[(i, j)] = vec

    cartan = None
    if "cartan" in doc and doc["cartan"] is not None:
        cdoc = doc["cartan"]
        try:
            h_indices = cdoc["h_indices"]
            roots_doc = cdoc["positive_roots"]
        except (TypeError, KeyError) as exc:
            raise SchemaError(f"malformed cartan block: missing {exc}") from exc
        if not all(isinstance(h, int) and 0 <= h < dim for h in h_indices):
            raise SchemaError("h_indices out of range")
        roots = []
        for rdoc in roots_doc:
            try:
                weight = tuple(parse_rational(w) for w in rdoc["weight"])
                e, f = rdoc["e"], rdoc["f"]
            except (TypeError, KeyError) as exc:
                raise SchemaError(f"malformed root entry {rdoc!r}") from exc
            if not (isinstance(e, int) and isinstance(f, int) and 0 <= e < dim and 0 <= f < dim):
                raise SchemaError("root e/f indices out of range")
            roots.append((weight, e, f))
        cartan = CartanData(h_indices, roots)

    L = LieAlgebra(dim, basis, structure, cartan, name=doc.get("name"))
    _validate_jacobi(L)
    if cartan is not None:
        _validate_cartan(L)
    return L
