"""Antisymmetric elements of the exterior algebra on a fixed basis.

A WedgeElem of degree k is a sparse map from strictly increasing k-tuples
of basis indices to rational coefficients.  This module is pure
combinatorics; operations that need structure constants live in schouten.py.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations


def sort_with_sign(indices):
    """Sort an index tuple, returning (sorted tuple, sign); sign 0 on repeats."""
    idx = list(indices)
    sign = 1
    # insertion sort; counts transpositions exactly
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


class WedgeElem:
    """Element of the k-th exterior power, keyed by increasing index tuples."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree, terms=None):
        self.degree = degree
        clean = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                skey, sign = sort_with_sign(tuple(key))
                if sign == 0:
                    continue
                clean[skey] = clean.get(skey, Fraction(0)) + sign * c
        self.terms = {k: v for k, v in sorted(clean.items()) if v}

    @classmethod
    def single(cls, indices, coeff=1):
        return cls(len(indices), {tuple(indices): Fraction(coeff)})

    @classmethod
    def zero(cls, degree):
        return cls(degree, {})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return (
            isinstance(other, WedgeElem)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.degree, tuple(self.terms.items())))

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("wedge degrees differ")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return WedgeElem(self.degree, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return WedgeElem(self.degree, {k: -v for k, v in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        return WedgeElem(self.degree, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def wedge(self, other):
        """Exterior product, degree k+l."""
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key, sign = sort_with_sign(ka + kb)
                if sign:
                    out[key] = out.get(key, Fraction(0)) + sign * va * vb
        return WedgeElem(self.degree + other.degree, out)

    def apply_linear(self, images):
        """Push forward along a linear map given by images[i] = dict(j -> c)."""
        out = WedgeElem.zero(self.degree)
        for key, c in self.terms.items():
            factors = [images[i] for i in key]
            # expand the product of one-forms
            acc = [((), Fraction(1))]
            for img in factors:
                acc = [(k + (j,), v * cj) for k, v in acc for j, cj in img.items()]
            out = out + WedgeElem(self.degree, {k: c * v for k, v in acc})
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key, c in self.terms.items():
            bits.append(f"{c}*w{list(key)}")
        return " + ".join(bits)


def embed_scale(k):
    """Coefficient on each signed permutation when embedding a k-wedge in tensors.

    Fixed so that the Yang-Baxter expression of an embedded 2-wedge equals
    the embedding of its Schouten square: c_k = 2^(-k(k-1)/2).
    """
    return Fraction(1, 2 ** (k * (k - 1) // 2))


def wedge_permutations(key):
    """All (permuted tuple, sign) pairs of a strictly increasing tuple."""
    out = []
    for perm in permutations(range(len(key))):
        sign = perm_sign(perm)
        out.append((tuple(key[p] for p in perm), sign))
    return out


def perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign
