"""Truncated formal power series in h with TensorPoly coefficients.

Every series carries its truncation order; mixed-order arithmetic truncates
to the minimum.  A per-series total-degree cap guards against runaway
coefficient growth: exceeding it raises instead of silently growing.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import DegreeCapError
from .tensor import TensorPoly


class HSeries:
    __slots__ = ("L", "arity", "order", "coeffs", "degree_cap")

    def __init__(self, L, arity, order, coeffs=None, degree_cap=None):
        self.L = L
        self.arity = arity
        self.order = order
        if coeffs is None:
            coeffs = [TensorPoly.zero(L, arity) for _ in range(order + 1)]
        if len(coeffs) != order + 1:
            raise ValueError("need one coefficient per h power up to the order")
        self.coeffs = list(coeffs)
        self.degree_cap = degree_cap
        if degree_cap is not None:
            for k, c in enumerate(self.coeffs):
                if c.max_degree() > degree_cap:
                    raise DegreeCapError(
                        f"coefficient of h^{k} has degree {c.max_degree()} > cap {degree_cap}"
                    )

    # -- constructors --------------------------------------------------------

    @classmethod
    def unit(cls, L, arity, order, degree_cap=None):
        coeffs = [TensorPoly.unit(L, arity)] + [
            TensorPoly.zero(L, arity) for _ in range(order)
        ]
        return cls(L, arity, order, coeffs, degree_cap)

    @classmethod
    def zero(cls, L, arity, order, degree_cap=None):
        return cls(L, arity, order, None, degree_cap)

    @classmethod
    def from_terms(cls, L, arity, order, terms, degree_cap=None):
        """terms: {h_power: TensorPoly}"""
        coeffs = [TensorPoly.zero(L, arity) for _ in range(order + 1)]
        for k, t in terms.items():
            if 0 <= k <= order:
                coeffs[k] = coeffs[k] + t
        return cls(L, arity, order, coeffs, degree_cap)

    def copy_with(self, coeffs):
        return HSeries(self.L, self.arity, self.order, coeffs, self.degree_cap)

    # -- structure -------------------------------------------------------------

    def coefficient(self, k):
        if k > self.order:
            raise ValueError(f"order {k} beyond truncation {self.order}")
        return self.coeffs[k]

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def is_unit_constant(self):
        return self.coeffs[0] == TensorPoly.unit(self.L, self.arity)

    def __eq__(self, other):
        return (
            isinstance(other, HSeries)
            and self.arity == other.arity
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def truncate(self, order):
        if order >= self.order:
            return self
        return HSeries(
            self.L, self.arity, order, self.coeffs[: order + 1], self.degree_cap
        )

    @staticmethod
    def _join_caps(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def _check_cap(self, poly, cap):
        if cap is not None and poly.max_degree() > cap:
            raise DegreeCapError(
                f"product coefficient degree {poly.max_degree()} exceeds cap {cap}"
            )
        return poly

    # -- linear operations -------------------------------------------------------

    def __add__(self, other):
        order = min(self.order, other.order)
        cap = self._join_caps(self.degree_cap, other.degree_cap)
        return HSeries(
            self.L,
            self.arity,
            order,
            [self.coeffs[k] + other.coeffs[k] for k in range(order + 1)],
            cap,
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return HSeries(
            self.L, self.arity, self.order, [-c for c in self.coeffs], self.degree_cap
        )

    def scale(self, c):
        c = Fraction(c)
        return HSeries(
            self.L,
            self.arity,
            self.order,
            [t.scale(c) for t in self.coeffs],
            self.degree_cap,
        )

    def add_term(self, k, poly):
        """self + poly * h^k."""
        coeffs = list(self.coeffs)
        if k <= self.order:
            coeffs[k] = coeffs[k] + poly
        return self.copy_with(coeffs)

    def map_coeffs(self, fn, arity=None):
        arity = arity if arity is not None else self.arity
        return HSeries(
            self.L, arity, self.order, [fn(c) for c in self.coeffs], self.degree_cap
        )

    # -- multiplicative operations -------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, HSeries):
            return self.scale(other)
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        order = min(self.order, other.order)
        cap = self._join_caps(self.degree_cap, other.degree_cap)
        coeffs = []
        for k in range(order + 1):
            acc = TensorPoly.zero(self.L, self.arity)
            for i in range(k + 1):
                a = self.coeffs[i]
                b = other.coeffs[k - i]
                if a.is_zero() or b.is_zero():
                    continue
                acc = acc + a.mul(b)
            coeffs.append(self._check_cap(acc, cap))
        return HSeries(self.L, self.arity, order, coeffs, cap)

    def inverse(self):
        """Order-by-order inverse; requires unit constant term."""
        if not self.is_unit_constant():
            raise ValueError("series inverse requires constant term 1")
        inv = [TensorPoly.unit(self.L, self.arity)]
        for k in range(1, self.order + 1):
            acc = TensorPoly.zero(self.L, self.arity)
            for j in range(k):
                a = self.coeffs[k - j]
                if a.is_zero() or inv[j].is_zero():
                    continue
                acc = acc + inv[j].mul(a)
            inv.append(self._check_cap(-acc, self.degree_cap))
        # a * a^{-1} = 1 requires the two-sided inverse; for unital series the
        # left inverse computed above is two-sided mod truncation
        return HSeries(self.L, self.arity, self.order, inv, self.degree_cap)

    def exp(self):
        """Exponential; requires zero constant term."""
        if not self.coeffs[0].is_zero():
            raise ValueError("series exp requires zero constant term")
        out = HSeries.unit(self.L, self.arity, self.order, self.degree_cap)
        power = HSeries.unit(self.L, self.arity, self.order, self.degree_cap)
        for k in range(1, self.order + 1):
            power = power * self
            if power.is_zero():
                break
            out = out + power.scale(Fraction(1, factorial(k)))
        return out

    # -- leg-wise operations ----------------------------------------------------

    def leg_map(self, spec, target_arity):
        return self.map_coeffs(lambda c: c.leg_map(spec, target_arity), target_arity)

    def coproduct_insert(self, position):
        return self.map_coeffs(
            lambda c: c.coproduct_insert(position), self.arity + 1
        )

    def counit_leg(self, position):
        return self.map_coeffs(lambda c: c.counit_leg(position), self.arity - 1)

    def tau(self):
        return self.map_coeffs(lambda c: c.tau())

    def reverse_legs(self):
        return self.map_coeffs(lambda c: c.reverse_legs())

    def permute_legs(self, perm):
        return self.map_coeffs(lambda c: c.permute_legs(perm))

    def antipode_legs(self):
        return self.map_coeffs(lambda c: c.antipode_legs())

    def theta_legs(self):
        return self.map_coeffs(lambda c: c.theta_legs())

    def flip_h(self):
        """h -> -h: negate odd-order coefficients."""
        coeffs = [
            (-c if k % 2 else c) for k, c in enumerate(self.coeffs)
        ]
        return self.copy_with(coeffs)

    def multiply_legs(self, antipode_mask=None):
        """Contract each coefficient to U(G); returns an arity-1 series."""
        from .tensor import TensorPoly as TP

        return HSeries(
            self.L,
            1,
            self.order,
            [TP.from_ue(c.multiply_legs(antipode_mask)) for c in self.coeffs],
            self.degree_cap,
        )

    def is_invariant(self):
        return all(c.is_invariant() for c in self.coeffs)

    def is_weight_zero(self):
        return all(c.is_weight_zero() for c in self.coeffs)

    def ad_legwise(self, X):
        return self.map_coeffs(lambda c: c.ad_legwise(X))

    def __repr__(self):
        bits = []
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                bits.append(f"h^{k}*[{c!r}]")
        return " + ".join(bits) if bits else "0"


# -- spec-facing functional aliases ---------------------------------------------


def series_mul(a, b):
    return a * b


def series_inverse(a):
    return a.inverse()


def series_exp(a):
    return a.exp()


def leg_map(a, spec, target_arity):
    return a.leg_map(spec, target_arity)


def coproduct_insert(a, position):
    return a.coproduct_insert(position)


def tau(a):
    return a.tau()


def antipode_legs(a):
    return a.antipode_legs()


def theta_legs(a):
    return a.theta_legs()


def flip_h(a):
    return a.flip_h()
