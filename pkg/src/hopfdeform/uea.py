"""Universal enveloping algebra in PBW normal form.

Monomials are exponent tuples in the fixed basis order.  Products are
normal-ordered by the rewriting y x -> x y - [x, y] applied to adjacent
out-of-order letters; recursion is on (total degree, inversion count), so
straightening terminates, and results are cached per algebra.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def unit_monomial(dim):
    return (0,) * dim


def monomial_degree(mono):
    return sum(mono)


def monomial_letters(mono):
    """Letters of the normal-ordered word, ascending."""
    out = []
    for i, e in enumerate(mono):
        out.extend([i] * e)
    return out


def _mono_times_gen(L, mono, gen):
    """Normal form of (monomial * x_gen), as {monomial: coeff}."""
    cache = L._mul_cache
    key = (mono, gen)
    hit = cache.get(key)
    if hit is not None:
        return hit
    top = None
    for i in range(L.dim - 1, -1, -1):
        if mono[i]:
            top = i
            break
    if top is None or top <= gen:
        lifted = list(mono)
        lifted[gen] += 1
        result = {tuple(lifted): Fraction(1)}
        cache[key] = result
        return result
    # strip one x_top:  m = m'' * x_top,  m * x_gen = (m'' * x_gen) * x_top + m'' * [x_top, x_gen]
    stripped = list(mono)
    stripped[top] -= 1
    stripped = tuple(stripped)
    result = {}
    for m2, c2 in _mono_times_gen(L, stripped, gen).items():
        for m3, c3 in _mono_times_gen(L, m2, top).items():
            v = result.get(m3, Fraction(0)) + c2 * c3
            if v:
                result[m3] = v
            elif m3 in result:
                del result[m3]
    for k, ck in L.bracket_basis(top, gen).items():
        for m3, c3 in _mono_times_gen(L, stripped, k).items():
            v = result.get(m3, Fraction(0)) + ck * c3
            if v:
                result[m3] = v
            elif m3 in result:
                del result[m3]
    cache[key] = result
    return result


def mul_monomials(L, ma, mb):
    """Normal form of the product of two PBW monomials."""
    cache = L._mul_cache
    key = (ma, mb)
    hit = cache.get(key)
    if hit is not None:
        return hit
    acc = {ma: Fraction(1)}
    for letter in monomial_letters(mb):
        nxt = {}
        for m, c in acc.items():
            for m2, c2 in _mono_times_gen(L, m, letter).items():
                v = nxt.get(m2, Fraction(0)) + c * c2
                if v:
                    nxt[m2] = v
                elif m2 in nxt:
                    del nxt[m2]
        acc = nxt
    cache[key] = acc
    return acc


def antipode_monomial(L, mono):
    """S(monomial): (-1)^deg times the reversed word, normal-ordered."""
    hit = L._antipode_cache.get(mono)
    if hit is not None:
        return hit
    acc = {unit_monomial(L.dim): Fraction(1)}
    for letter in reversed(monomial_letters(mono)):
        nxt = {}
        for m, c in acc.items():
            for m2, c2 in _mono_times_gen(L, m, letter).items():
                v = nxt.get(m2, Fraction(0)) + c * c2
                if v:
                    nxt[m2] = v
                elif m2 in nxt:
                    del nxt[m2]
        acc = nxt
    sign = -1 if monomial_degree(mono) % 2 else 1
    result = {m: sign * c for m, c in acc.items()}
    L._antipode_cache[mono] = result
    return result


def coproduct_monomial(L, mono):
    """Delta(monomial) as {(left mono, right mono): coeff}; binomial expansion.

    Generators are primitive and Delta is an algebra map, so the splits of
    distinct generators never need re-ordering.
    """
    hit = L._coproduct_cache.get(mono)
    if hit is not None:
        return hit
    dim = L.dim
    acc = {(unit_monomial(dim), unit_monomial(dim)): Fraction(1)}
    for i, e in enumerate(mono):
        if not e:
            continue
        nxt = {}
        for (la, rb), c in acc.items():
            for k in range(e + 1):
                bc = c * comb(e, k)
                left = list(la)
                left[i] += k
                right = list(rb)
                right[i] += e - k
                key = (tuple(left), tuple(right))
                nxt[key] = nxt.get(key, Fraction(0)) + bc
        acc = nxt
    L._coproduct_cache[mono] = acc
    return acc


def ad_monomial(L, gen, mono):
    """[x_gen, mono] in normal form, cached per algebra."""
    cache = L._mul_cache
    key = ("ad", gen, mono)
    hit = cache.get(key)
    if hit is not None:
        return hit
    gmono = [0] * L.dim
    gmono[gen] = 1
    gmono = tuple(gmono)
    result = dict(mul_monomials(L, gmono, mono))
    for m, c in mul_monomials(L, mono, gmono).items():
        v = result.get(m, Fraction(0)) - c
        if v:
            result[m] = v
        elif m in result:
            del result[m]
    cache[key] = result
    return result


def weight_of_monomial(L, mono):
    total = list(L.zero_weight())
    for i, e in enumerate(mono):
        if e:
            w = L.weight_of_basis(i)
            for pos in range(len(total)):
                total[pos] += e * w[pos]
    return tuple(total)


def theta_monomial(L, mono):
    """Involution applied multiplicatively to a monomial, normal-ordered."""
    key = ("theta", mono)
    hit = L._mul_cache.get(key)
    if hit is not None:
        return hit
    acc = {unit_monomial(L.dim): Fraction(1)}
    for letter in monomial_letters(mono):
        image = L.theta_basis(letter)
        nxt = {}
        for m, c in acc.items():
            for gen, cg in image.items():
                for m2, c2 in _mono_times_gen(L, m, gen).items():
                    v = nxt.get(m2, Fraction(0)) + c * cg * c2
                    if v:
                        nxt[m2] = v
                    elif m2 in nxt:
                        del nxt[m2]
        acc = nxt
    L._mul_cache[key] = acc
    return acc


class UEElem:
    """Sparse element of U(G) in PBW normal form."""

    __slots__ = ("L", "terms")

    def __init__(self, L, terms=None):
        self.L = L
        if not terms:
            self.terms = {}
            return
        clean = {}
        fr = Fraction
        for m, c in terms.items():
            if type(c) is not fr:
                c = fr(c)
            if c:
                prev = clean.get(m)
                if prev is None:
                    clean[m] = c
                else:
                    tot = prev + c
                    if tot:
                        clean[m] = tot
                    else:
                        del clean[m]
        self.terms = clean

    @classmethod
    def unit(cls, L, coeff=1):
        return cls(L, {unit_monomial(L.dim): Fraction(coeff)})

    @classmethod
    def zero(cls, L):
        return cls(L, {})

    @classmethod
    def generator(cls, L, i, coeff=1):
        mono = [0] * L.dim
        mono[i] = 1
        return cls(L, {tuple(mono): Fraction(coeff)})

    @classmethod
    def from_vector(cls, L, coords):
        terms = {}
        for i, c in enumerate(coords):
            if c:
                mono = [0] * L.dim
                mono[i] = 1
                terms[tuple(mono)] = Fraction(c)
        return cls(L, terms)

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((monomial_degree(m) for m in self.terms), default=0)

    def __eq__(self, other):
        return isinstance(other, UEElem) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return UEElem(self.L, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return UEElem(self.L, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        return UEElem(self.L, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UEElem):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m, c in self.terms.items():
            word = "".join(
                f"{self.L.labels[i]}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(m)
                if e
            )
            bits.append(f"{c}*{word or '1'}")
        return " + ".join(bits)


def multiply(a, b):
    """Normal-ordered product in U(G)."""
    out = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            c = ca * cb
            for m, cm in mul_monomials(a.L, ma, mb).items():
                v = out.get(m, Fraction(0)) + c * cm
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
    return UEElem(a.L, out)


def antipode(a):
    """Anti-homomorphism with S(x) = -x on basis vectors."""
    out = {}
    for m, c in a.terms.items():
        for m2, c2 in antipode_monomial(a.L, m).items():
            v = out.get(m2, Fraction(0)) + c * c2
            if v:
                out[m2] = v
            elif m2 in out:
                del out[m2]
    return UEElem(a.L, out)


def counit(a):
    """Coefficient of the unit monomial."""
    return a.terms.get(unit_monomial(a.L.dim), Fraction(0))


def coproduct(a):
    """Delta(a) in U(G) (x) U(G), returned as an arity-2 TensorPoly."""
    from .tensor import TensorPoly

    out = {}
    for m, c in a.terms.items():
        for (ml, mr), c2 in coproduct_monomial(a.L, m).items():
            key = (ml, mr)
            v = out.get(key, Fraction(0)) + c * c2
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return TensorPoly(a.L, 2, out)


def ad_action(X, a):
    """ad_X(a) = X a - a X for X given as a dense or sparse coordinate vector."""
    L = a.L
    if isinstance(X, dict):
        vec = X
    else:
        vec = {i: Fraction(c) for i, c in enumerate(X) if c}
    xelem = UEElem(L, {})
    for i, c in vec.items():
        mono = [0] * L.dim
        mono[i] = 1
        xelem = xelem + UEElem(L, {tuple(mono): Fraction(c)})
    return multiply(xelem, a) - multiply(a, xelem)


def theta_apply(a):
    """Involution extended multiplicatively to U(G)."""
    out = {}
    for m, c in a.terms.items():
        for m2, c2 in theta_monomial(a.L, m).items():
            v = out.get(m2, Fraction(0)) + c * c2
            if v:
                out[m2] = v
            elif m2 in out:
                del out[m2]
    return UEElem(a.L, out)


def weight(a):
    """Common weight of a weight-homogeneous element; None for 0."""
    w = None
    for m in a.terms:
        mw = weight_of_monomial(a.L, m)
        if w is None:
            w = mw
        elif w != mw:
            raise ValueError("element is not weight-homogeneous")
    return w
