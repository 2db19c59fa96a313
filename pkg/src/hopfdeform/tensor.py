"""Sparse elements of U(G)^(x)n and the wedge embedding.

Keys are n-tuples of PBW monomials.  The embedding of a k-wedge uses the
per-degree scale from wedge.embed_scale; extract_wedge inverts it exactly,
so extract_wedge(embed_wedge(w)) == w.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

from .uea import (
    UEElem,
    ad_monomial,
    coproduct_monomial,
    antipode_monomial,
    theta_monomial,
    mul_monomials,
    monomial_degree,
    unit_monomial,
    weight_of_monomial,
)
from .wedge import WedgeElem, embed_scale, perm_sign, sort_with_sign


class TensorPoly:
    __slots__ = ("L", "arity", "terms")

    def __init__(self, L, arity, terms=None):
        self.L = L
        self.arity = arity
        if not terms:
            self.terms = {}
            return
        clean = {}
        fr = Fraction
        for key, c in terms.items():
            if type(c) is not fr:
                c = fr(c)
            if c:
                prev = clean.get(key)
                if prev is None:
                    clean[key] = c
                else:
                    tot = prev + c
                    if tot:
                        clean[key] = tot
                    else:
                        del clean[key]
        self.terms = clean

    def sorted_terms(self):
        return sorted(self.terms.items())

    # -- constructors -------------------------------------------------------

    @classmethod
    def unit(cls, L, arity, coeff=1):
        return cls(L, arity, {(unit_monomial(L.dim),) * arity: Fraction(coeff)})

    @classmethod
    def zero(cls, L, arity):
        return cls(L, arity, {})

    @classmethod
    def from_ue(cls, a, arity=1):
        if arity != 1:
            raise ValueError("use leg_map to place an element in a bigger product")
        return cls(a.L, 1, {(m,): c for m, c in a.terms.items()})

    def to_ue(self):
        if self.arity != 1:
            raise ValueError("only arity-1 tensors convert to UE elements")
        return UEElem(self.L, {k[0]: c for k, c in self.terms.items()})

    # -- ring structure ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, TensorPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.arity, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return TensorPoly(self.L, self.arity, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorPoly(self.L, self.arity, {k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        return TensorPoly(self.L, self.arity, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorPoly):
            return self.mul(other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def mul(self, other):
        """Leg-wise normal-ordered product."""
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        L = self.L
        out = {}
        zero = Fraction(0)
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                legs = [mul_monomials(L, ma, mb) for ma, mb in zip(ka, kb)]
                if all(len(g) == 1 for g in legs):
                    key = []
                    c = ca * cb
                    for g in legs:
                        (m, cm), = g.items()
                        key.append(m)
                        if cm != 1:
                            c = c * cm
                    key = tuple(key)
                    v = out.get(key, zero) + c
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
                    continue
                acc = [((), ca * cb)]
                for leg in legs:
                    acc = [
                        (key + (m,), c * cm)
                        for key, c in acc
                        for m, cm in leg.items()
                    ]
                for key, c in acc:
                    v = out.get(key, zero) + c
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
        return TensorPoly(L, self.arity, out)

    def commutator(self, other):
        return self.mul(other) - other.mul(self)

    # -- structural queries ---------------------------------------------------

    def max_degree(self):
        return max(
            (sum(monomial_degree(m) for m in key) for key in self.terms), default=0
        )

    def degree_slice(self, d):
        return TensorPoly(
            self.L,
            self.arity,
            {
                k: c
                for k, c in self.terms.items()
                if sum(monomial_degree(m) for m in k) == d
            },
        )

    def degrees(self):
        return sorted({sum(monomial_degree(m) for m in k) for k in self.terms})

    def has_unit_leg(self):
        empty = unit_monomial(self.L.dim)
        return any(empty in key for key in self.terms)

    def key_weight(self, key):
        total = list(self.L.zero_weight())
        for m in key:
            w = weight_of_monomial(self.L, m)
            for pos in range(len(total)):
                total[pos] += w[pos]
        return tuple(total)

    def weight_zero_part(self):
        zero = self.L.zero_weight()
        return TensorPoly(
            self.L,
            self.arity,
            {k: c for k, c in self.terms.items() if self.key_weight(k) == zero},
        )

    def is_weight_zero(self):
        zero = self.L.zero_weight()
        return all(self.key_weight(k) == zero for k in self.terms)

    # -- leg operations ---------------------------------------------------------

    def leg_map(self, spec, target_arity):
        """Place leg i (1-based) into slot spec[i-1] (1-based), units elsewhere."""
        if len(spec) != self.arity:
            raise ValueError("spec length must equal arity")
        slots = set(spec)
        if len(slots) != len(spec) or not all(1 <= s <= target_arity for s in spec):
            raise ValueError("spec must be injective into the target slots")
        empty = unit_monomial(self.L.dim)
        out = {}
        for key, c in self.terms.items():
            nkey = [empty] * target_arity
            for pos, m in enumerate(key):
                nkey[spec[pos] - 1] = m
            nkey = tuple(nkey)
            out[nkey] = out.get(nkey, Fraction(0)) + c
        return TensorPoly(self.L, target_arity, out)

    def permute_legs(self, perm):
        """Relabel legs: output slot s holds input leg perm[s] (0-based tuple)."""
        out = {}
        for key, c in self.terms.items():
            nkey = tuple(key[perm[s]] for s in range(self.arity))
            out[nkey] = out.get(nkey, Fraction(0)) + c
        return TensorPoly(self.L, self.arity, out)

    def reverse_legs(self):
        return self.permute_legs(tuple(range(self.arity - 1, -1, -1)))

    def tau(self):
        """Signed reversal (-1)^(n(n+1)/2) u_n (x) ... (x) u_1."""
        n = self.arity
        sign = -1 if (n * (n + 1) // 2) % 2 else 1
        return self.reverse_legs().scale(sign)

    def coproduct_insert(self, position):
        """Apply Delta to the given leg (1-based); arity grows by one."""
        if not (1 <= position <= self.arity):
            raise ValueError("position out of range")
        L = self.L
        out = {}
        for key, c in self.terms.items():
            m = key[position - 1]
            for (ml, mr), c2 in coproduct_monomial(L, m).items():
                nkey = key[: position - 1] + (ml, mr) + key[position:]
                v = out.get(nkey, Fraction(0)) + c * c2
                if v:
                    out[nkey] = v
                elif nkey in out:
                    del out[nkey]
        return TensorPoly(L, self.arity + 1, out)

    def counit_leg(self, position):
        """Apply the counit to the given leg (1-based); arity drops by one."""
        if not (1 <= position <= self.arity):
            raise ValueError("position out of range")
        empty = unit_monomial(self.L.dim)
        out = {}
        for key, c in self.terms.items():
            if key[position - 1] != empty:
                continue
            nkey = key[: position - 1] + key[position:]
            out[nkey] = out.get(nkey, Fraction(0)) + c
        return TensorPoly(self.L, self.arity - 1, out)

    def antipode_leg(self, position):
        """Antipode applied to a single leg (1-based)."""
        if not (1 <= position <= self.arity):
            raise ValueError("position out of range")
        L = self.L
        out = {}
        for key, c in self.terms.items():
            for m2, c2 in antipode_monomial(L, key[position - 1]).items():
                nkey = key[: position - 1] + (m2,) + key[position:]
                v = out.get(nkey, Fraction(0)) + c * c2
                if v:
                    out[nkey] = v
                elif nkey in out:
                    del out[nkey]
        return TensorPoly(L, self.arity, out)

    def antipode_legs(self):
        """Antipode applied to every leg (no reversal)."""
        L = self.L
        out = {}
        for key, c in self.terms.items():
            acc = [((), c)]
            for m in key:
                img = antipode_monomial(L, m)
                acc = [(k + (m2,), v * c2) for k, v in acc for m2, c2 in img.items()]
            for k, v in acc:
                nv = out.get(k, Fraction(0)) + v
                if nv:
                    out[k] = nv
                elif k in out:
                    del out[k]
        return TensorPoly(L, self.arity, out)

    def theta_legs(self):
        """Involution applied to every leg."""
        L = self.L
        out = {}
        for key, c in self.terms.items():
            acc = [((), c)]
            for m in key:
                img = theta_monomial(L, m)
                acc = [(k + (m2,), v * c2) for k, v in acc for m2, c2 in img.items()]
            for k, v in acc:
                nv = out.get(k, Fraction(0)) + v
                if nv:
                    out[k] = nv
                elif k in out:
                    del out[k]
        return TensorPoly(L, self.arity, out)

    def ad_legwise(self, X):
        """Sum over legs of the adjoint action of X (dense or sparse vector)."""
        L = self.L
        if isinstance(X, dict):
            vec = [(i, Fraction(c)) for i, c in X.items() if c]
        else:
            vec = [(i, Fraction(c)) for i, c in enumerate(X) if c]
        out = {}
        zero = Fraction(0)
        unit = unit_monomial(L.dim)
        for key, c in self.terms.items():
            for leg in range(self.arity):
                m = key[leg]
                if m == unit:
                    continue
                head = key[:leg]
                tail = key[leg + 1 :]
                for i, ci in vec:
                    cci = c * ci
                    for m2, c2 in ad_monomial(L, i, m).items():
                        nkey = head + (m2,) + tail
                        v = out.get(nkey, zero) + cci * c2
                        if v:
                            out[nkey] = v
                        elif nkey in out:
                            del out[nkey]
        return TensorPoly(L, self.arity, out)

    def is_invariant(self):
        """Leg-wise adjoint action of every basis vector vanishes."""
        for i in range(self.L.dim):
            if not self.ad_legwise({i: 1}).is_zero():
                return False
        return True

    def multiply_legs(self, antipode_mask=None):
        """Multiply all legs together in order, optionally applying S per leg."""
        L = self.L
        mask = antipode_mask or (None,) * self.arity
        out = {}
        for key, c in self.terms.items():
            acc = {unit_monomial(L.dim): c}
            for m, op in zip(key, mask):
                imgs = antipode_monomial(L, m) if op == "S" else {m: Fraction(1)}
                nxt = {}
                for ma, ca in acc.items():
                    for mb, cb in imgs.items():
                        for mm, cm in mul_monomials(L, ma, mb).items():
                            v = nxt.get(mm, Fraction(0)) + ca * cb * cm
                            if v:
                                nxt[mm] = v
                            elif mm in nxt:
                                del nxt[mm]
                acc = nxt
            for m, v in acc.items():
                nv = out.get(m, Fraction(0)) + v
                if nv:
                    out[m] = nv
                elif m in out:
                    del out[m]
        return UEElem(L, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key, c in list(self.terms.items())[:8]:
            legs = []
            for m in key:
                word = "".join(
                    f"{self.L.labels[i]}" + (f"^{e}" if e > 1 else "")
                    for i, e in enumerate(m)
                    if e
                )
                legs.append(word or "1")
            bits.append(f"{c}*{'(x)'.join(legs)}")
        more = "" if len(self.terms) <= 8 else f" ... ({len(self.terms)} terms)"
        return " + ".join(bits) + more


# -- wedge embedding -----------------------------------------------------------


def _gen_monomial(dim, i):
    mono = [0] * dim
    mono[i] = 1
    return tuple(mono)


def embed_wedge(L, w):
    """Embed a k-wedge as an antisymmetric degree-(1,...,1) tensor."""
    k = w.degree
    scale = embed_scale(k)
    out = {}
    for key, c in w.terms.items():
        for perm in permutations(range(k)):
            sign = perm_sign(perm)
            tkey = tuple(_gen_monomial(L.dim, key[p]) for p in perm)
            out[tkey] = out.get(tkey, Fraction(0)) + c * scale * sign
    return TensorPoly(L, k, out)


def wedge_part(t):
    """Degree-(1,...,1) component of a tensor, as is."""
    out = {}
    for key, c in t.terms.items():
        if all(monomial_degree(m) == 1 for m in key):
            out[key] = c
    return TensorPoly(t.L, t.arity, out)


def extract_wedge(t):
    """Read the degree-(1,...,1) part as a wedge, inverting embed_wedge."""
    k = t.arity
    norm = Fraction(1) / (embed_scale(k) * factorial(k))
    out = {}
    for key, c in t.terms.items():
        if not all(monomial_degree(m) == 1 for m in key):
            continue
        idx = tuple(m.index(1) for m in key)
        skey, sign = sort_with_sign(idx)
        if sign:
            out[skey] = out.get(skey, Fraction(0)) + sign * c * norm
    return WedgeElem(k, out)


def wedge_residual(t):
    """t minus the embedding of its extracted wedge (exact purity check)."""
    return t - embed_wedge(t.L, extract_wedge(t))


def casimir_tensor(L):
    """Killing-dual invariant symmetric 2-tensor."""
    from .lie import killing_dual_pairs

    out = {}
    for i, j, c in killing_dual_pairs(L):
        key = (_gen_monomial(L.dim, i), _gen_monomial(L.dim, j))
        out[key] = out.get(key, Fraction(0)) + c
    return TensorPoly(L, 2, out)
