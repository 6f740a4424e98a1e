"""Truncated integer power series and the half-spin generating-function search.

The motive attached to a group at the prime 2 has a generating function that
is a product of cyclotomic quotients (1 - t^{d 2^j}) / (1 - t^d).  For the
projective linear group of a degree-2^s division algebra the function is the
single quotient with d = 1, j = s.  The search below enumerates candidate
exponent tuples for the half-spin side (d_i = 2i - 1) and confirms that all
products matching the projective-linear function have j_1 = s, so no match
exists under the constraint j_1 < s.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class IntSeries:
    """Integer power series truncated at order n (degrees 0..n-1)."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(self.coeffs) != self.order:
            object.__setattr__(
                self,
                "coeffs",
                tuple(self.coeffs[: self.order])
                + (0,) * (self.order - len(self.coeffs)),
            )

    @staticmethod
    def one(order: int) -> "IntSeries":
        return IntSeries((1,), order)

    @staticmethod
    def monomial(degree: int, order: int, coeff: int = 1) -> "IntSeries":
        c = [0] * order
        if 0 <= degree < order:
            c[degree] = coeff
        return IntSeries(tuple(c), order)

    def coefficient(self, degree: int) -> int:
        if not 0 <= degree < self.order:
            raise IndexError(f"degree {degree} outside truncation {self.order}")
        return self.coeffs[degree]

    def _merge_order(self, other: "IntSeries") -> int:
        return min(self.order, other.order)

    def add(self, other: "IntSeries") -> "IntSeries":
        n = self._merge_order(other)
        return IntSeries(
            tuple(self.coeffs[i] + other.coeffs[i] for i in range(n)), n
        )

    def sub(self, other: "IntSeries") -> "IntSeries":
        n = self._merge_order(other)
        return IntSeries(
            tuple(self.coeffs[i] - other.coeffs[i] for i in range(n)), n
        )

    def mul(self, other: "IntSeries") -> "IntSeries":
        n = self._merge_order(other)
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j, b in enumerate(other.coeffs[: n - i]):
                    if b:
                        out[i + j] += a * b
        return IntSeries(tuple(out), n)

    def divide_exact(self, other: "IntSeries") -> "IntSeries":
        """Quotient in the truncated ring; the divisor needs a unit constant
        term, which makes it invertible and the division exact."""
        n = self._merge_order(other)
        if not other.coeffs or other.coeffs[0] not in (1, -1):
            raise ValueError("divisor must have unit constant term")
        lead = other.coeffs[0]
        out = [0] * n
        rem = list(self.coeffs[:n])
        for i in range(n):
            q = rem[i] * lead
            out[i] = q
            if q:
                for j in range(n - i):
                    rem[i + j] -= q * other.coeffs[j]
        return IntSeries(tuple(out), n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntSeries):
            return NotImplemented
        n = self._merge_order(other)
        return self.coeffs[:n] == other.coeffs[:n]

    def __hash__(self):
        return hash((self.coeffs, self.order))


def cyclo_quotient(d: int, j: int, n: int) -> IntSeries:
    """(1 - t^{d 2^j}) / (1 - t^d) = 1 + t^d + ... + t^{(2^j - 1) d}."""
    if d < 1 or j < 0:
        raise ValueError("need d >= 1 and j >= 0")
    if n < 0:
        raise ValueError("truncation order must be nonnegative")
    out = [0] * n
    for k in range(2**j):
        deg = k * d
        if deg >= n:
            break
        out[deg] = 1
    return IntSeries(tuple(out), n)


def pgl_gen_function(s: int, n: int) -> IntSeries:
    """(1 - t^{2^s}) / (1 - t) = 1 + t + ... + t^{2^s - 1}."""
    if s < 0:
        raise ValueError("need s >= 0")
    return cyclo_quotient(1, s, n)


def product_series(js, n: int) -> IntSeries:
    """Product of cyclotomic quotients with d_i = 2i - 1 and exponents js."""
    out = IntSeries.one(n)
    for i, j in enumerate(js, start=1):
        out = out.mul(cyclo_quotient(2 * i - 1, j, n))
    return out


@dataclass(frozen=True)
class JParams:
    """Shape parameters of the exponent tuple for one group."""

    r: int
    d: tuple
    k: tuple
    s: int


def v2(n: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return v


def hspin_params(deg_a: int, ind_a: int) -> dict:
    """Exponent-tuple shape for the half-spin group of a degree-deg_a algebra.

    r = deg_a / 4 entries with d_i = 2i - 1; the first bound is
    k_1 = v2(deg_a / 2), which equals s - 1 exactly when deg_a / ind_a is
    odd (ind_a = 2^s).  Bounds beyond the first are not pinned down here
    and default to s.
    """
    if deg_a % 4:
        raise ValueError("degree must be divisible by 4")
    if ind_a < 1 or ind_a & (ind_a - 1):
        raise ValueError("index must be a power of 2")
    if deg_a % ind_a:
        raise ValueError("index must divide degree")
    s = v2(ind_a)
    r = deg_a // 4
    k1 = v2(deg_a // 2)
    params = JParams(
        r=r,
        d=tuple(2 * i - 1 for i in range(1, r + 1)),
        k=(k1,) + (s,) * (r - 1),
        s=s,
    )
    return {
        "params": params,
        "k1": k1,
        "odd_quotient": (deg_a // ind_a) % 2 == 1,
        "k1_equals_s_minus_1": k1 == s - 1,
    }


def degree_match(s: int, js) -> bool:
    """Degree identity sum d_i (2^{j_i} - 1) = 2^s - 1 for a full match."""
    total = sum((2 * i - 1) * (2**j - 1) for i, j in enumerate(js, start=1))
    return total == 2**s - 1


def search_equality(s: int, r: int, n: int = None) -> list:
    """All exponent tuples whose product equals the projective-linear series.

    Exhausts j_i in 0..s with d_i = 2i - 1, prunes by the degree identity,
    and compares truncated series.  Both sides are polynomials of degree
    less than n, so truncated equality is polynomial equality.  Every
    returned tuple is checked to have j_1 >= s: under the constraint
    j_1 < s there is no match.
    """
    if r < 1:
        raise ValueError("need at least one factor")
    if n is None:
        n = 2 * 2**s
    if n < 2**s:
        raise ValueError("truncation too small to distinguish")
    target = pgl_gen_function(s, n)
    found = []
    for js in itertools.product(range(s + 1), repeat=r):
        if not degree_match(s, js):
            continue
        if product_series(js, n) == target:
            found.append(js)
    for js in found:
        assert js[0] >= s, f"match {js} with leading exponent below {s}"
    return found


def trace_t2_t3(s: int, r: int) -> dict:
    """The low-coefficient consequence of a would-be equality.

    Among all candidate tuples with r >= 2 factors, agreement with the
    projective-linear series at t^2 and t^3 forces j_1 >= 2 and j_2 = 0.
    Returns the candidate count and whether the forcing held for each.
    """
    if r < 2:
        raise ValueError("the trace needs at least two factors")
    n = max(4, 2 * 2**s)
    target = pgl_gen_function(s, n)
    candidates = 0
    forced = True
    for js in itertools.product(range(s + 1), repeat=r):
        series = product_series(js, n)
        if (
            series.coefficient(2) == target.coefficient(2)
            and series.coefficient(3) == target.coefficient(3)
        ):
            candidates += 1
            if not (js[0] >= 2 and js[1] == 0):
                forced = False
    return {"candidates": candidates, "all_forced": forced}


def interpretation_rs(s: int, deg_a: int = None) -> list:
    """The two readings of the factor count: product limit s/2 vs deg/4."""
    out = [("product_limit", max(s // 2, 1))]
    if deg_a is not None:
        out.append(("entry_count", deg_a // 4))
    return out
