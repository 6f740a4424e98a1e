"""Quadratic forms and Witt-ring computations over Q and R.

Forms are diagonal with square-free integer entries (over R just signs).
Over these two base fields a Witt class is pinned down by dimension parity,
signed discriminant, Clifford invariant and signature, and the filtration by
powers of the fundamental ideal is decided from the same data: I^3 carries
no torsion here, so the third cohomological invariant reduces to a signature
condition.  All decision procedures below rely on exactly that.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

OO = "oo"  # the real place
LEVEL_CAP = 12
HYPERBOLIC_LEVEL = LEVEL_CAP + 1  # reported by i_level for hyperbolic classes

FIELDS = ("Q", "R")


# ---------------------------------------------------------------------------
# integer utilities


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ n)
    while True:
        c = rng.randrange(1, n)
        f = lambda x: (x * x + c) % n
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple:
    """Sorted tuple of (prime, exponent) pairs for |n|; trial division then rho."""
    n = abs(n)
    if n <= 1:
        return ()
    factors: dict[int, int] = {}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
        else:
            d = _pollard_rho(m)
            stack.extend([d, m // d])
    return tuple(sorted(factors.items()))


def squarefree(n: int) -> int:
    """Square-free part of n, keeping the sign."""
    if n == 0:
        raise ValueError("zero has no square class")
    sign = -1 if n < 0 else 1
    out = sign
    for p, e in factorize(n):
        if e % 2:
            out *= p
    return out


def square_class(x) -> int:
    """Square-free integer representing the square class of a nonzero rational."""
    fr = Fraction(x)
    if fr == 0:
        raise ValueError("zero has no square class")
    return squarefree(fr.numerator * fr.denominator)


def _prime_support(n: int) -> tuple:
    return tuple(p for p, _ in factorize(n))


# ---------------------------------------------------------------------------
# Hilbert symbols and quaternion (Brauer) classes


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ValueError("not a unit")
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def hilbert_symbol(a: int, b: int, place) -> int:
    """Hilbert symbol (a, b) at a finite prime or at OO; entries nonzero ints."""
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol needs nonzero entries")
    if place == OO:
        return -1 if (a < 0 and b < 0) else 1
    p = place
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"bad place {place!r}")
    a = squarefree(a)
    b = squarefree(b)
    alpha, u = 0, a
    while u % p == 0:
        u //= p
        alpha += 1
    beta, v = 0, b
    while v % p == 0:
        v //= p
        beta += 1
    if p != 2:
        eps = (p - 1) // 2
        res = 1
        if alpha % 2 and beta % 2:
            res *= (-1) ** eps
        if beta % 2:
            res *= _legendre(u, p)
        if alpha % 2:
            res *= _legendre(v, p)
        return res
    # p = 2, with u, v odd
    e = ((u - 1) // 2) * ((v - 1) // 2)
    if alpha % 2:
        e += (v * v - 1) // 8
    if beta % 2:
        e += (u * u - 1) // 8
    return -1 if e % 2 else 1


@lru_cache(maxsize=None)
def _hilbert(a: int, b: int, place) -> int:
    return hilbert_symbol(a, b, place)


@dataclass(frozen=True)
class Quaternion:
    """Quaternion algebra (a, b): i^2 = a, j^2 = b, ij = -ji."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == 0 or self.b == 0:
            raise ValueError("quaternion parameters must be nonzero")
        object.__setattr__(self, "a", squarefree(self.a))
        object.__setattr__(self, "b", squarefree(self.b))

    def norm_form(self, field: str = "Q") -> "QForm":
        a, b = self.a, self.b
        return QForm.diagonal((1, -a, -b, a * b), field)

    def pure_form(self, field: str = "Q") -> "QForm":
        a, b = self.a, self.b
        return QForm.diagonal((-a, -b, a * b), field)


@dataclass(frozen=True)
class BrauerClass2(object):
    """2-torsion Brauer class of Q or R, as its set of ramified places."""

    ramified: frozenset

    def __add__(self, other: "BrauerClass2") -> "BrauerClass2":
        return BrauerClass2(self.ramified ^ other.ramified)

    @property
    def is_zero(self) -> bool:
        return not self.ramified

    def places(self) -> list:
        return sorted(self.ramified, key=_place_key)

    def __repr__(self):
        return f"BrauerClass2({self.places()!r})"


def _place_key(place):
    return (1, 0) if place == OO else (0, place)


def brauer_class(q: Quaternion, field: str = "Q") -> BrauerClass2:
    """Ramification set of (a, b); over Q the set has even cardinality."""
    if field == "R":
        ram = {OO} if hilbert_symbol(q.a, q.b, OO) == -1 else set()
        return BrauerClass2(frozenset(ram))
    places = _critical_places((q.a, q.b))
    ram = frozenset(v for v in places if _hilbert(q.a, q.b, v) == -1)
    if len(ram) % 2:
        raise AssertionError(f"odd ramification for {q}: {sorted(ram, key=_place_key)}")
    return BrauerClass2(ram)


def brauer_sum(classes) -> BrauerClass2:
    total = BrauerClass2(frozenset())
    for c in classes:
        total = total + c
    return total


def _critical_places(values) -> tuple:
    """{2, oo} plus every prime dividing one of the square-free values."""
    primes = {2}
    for v in values:
        primes.update(_prime_support(v))
    return tuple(sorted(primes)) + (OO,)


# ---------------------------------------------------------------------------
# diagonal forms


@dataclass(frozen=True)
class QForm:
    """Nondegenerate diagonal quadratic form over Q or R."""

    field: str
    entries: tuple

    @staticmethod
    def diagonal(entries, field: str = "Q") -> "QForm":
        if field not in FIELDS:
            raise ValueError(f"unknown base field {field!r}")
        cleaned = []
        for e in entries:
            c = square_class(e)
            if field == "R":
                c = 1 if c > 0 else -1
            cleaned.append(c)
        return QForm(field, tuple(cleaned))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def concat(self, other: "QForm") -> "QForm":
        self._check_field(other)
        return QForm(self.field, self.entries + other.entries)

    def _check_field(self, other: "QForm"):
        if self.field != other.field:
            raise ValueError("mixed base fields")

    def __repr__(self):
        return f"QForm({self.field}, <{','.join(str(e) for e in self.entries)}>)"


def form_sum(*forms: QForm) -> QForm:
    if not forms:
        raise ValueError("empty sum")
    out = forms[0]
    for f in forms[1:]:
        out = out.concat(f)
    return out


def form_tensor(q1: QForm, q2: QForm) -> QForm:
    q1._check_field(q2)
    entries = tuple(square_class(a * b) for a in q1.entries for b in q2.entries)
    return QForm.diagonal(entries, q1.field)


def form_scale(q: QForm, s: int) -> QForm:
    if s == 0:
        raise ValueError("scaling by zero")
    return QForm.diagonal(tuple(s * e for e in q.entries), q.field)


def form_neg(q: QForm) -> QForm:
    return form_scale(q, -1)


def form_repeat(q: QForm, n: int) -> QForm:
    if n < 1:
        raise ValueError("need at least one copy")
    return QForm(q.field, q.entries * n)


def pfister(entries, field: str = "Q") -> QForm:
    """n-fold Pfister form <<a_1, ..., a_n>> = tensor of <1, -a_i>."""
    entries = tuple(entries)
    if not entries:
        raise ValueError("empty Pfister form")
    out = QForm.diagonal((1, -entries[0]), field)
    for a in entries[1:]:
        out = form_tensor(out, QForm.diagonal((1, -a), field))
    return out


def hyperbolic(n: int, field: str = "Q") -> QForm:
    return QForm.diagonal((1, -1) * n, field)


def form_algebra(kind: str, *args) -> QForm:
    """Dispatcher over the form constructors (sum, tensor, scale, pfister, diagonal)."""
    if kind == "sum":
        return form_sum(*args)
    if kind == "tensor":
        return form_tensor(*args)
    if kind == "scale":
        return form_scale(*args)
    if kind == "pfister":
        return pfister(*args)
    if kind == "diagonal":
        return QForm.diagonal(*args)
    raise ValueError(f"unknown constructor {kind!r}")


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class WittInvariants:
    dim: int
    disc: int  # signed discriminant, as a square-free integer
    clifford: BrauerClass2
    signature: int


def _hasse_correction(dim: int, disc: int, place) -> int:
    """Factor relating the Hasse product to the Witt-class Clifford invariant.

    Determined by c(H^k) = 1 and the step law eps(q + H) = eps(q) (-1, det q)
    with det q = (-1)^(n(n-1)/2) disc; note dims 3 and 0 share a value, as do
    4 and 7.
    """
    m = dim % 8
    if m in (1, 2):
        return 1
    if m in (3, 0):
        return _hilbert(-1, disc, place)
    if m in (4, 7):
        return _hilbert(-1, -disc, place)
    return _hilbert(-1, -1, place)


@lru_cache(maxsize=None)
def _profile(q: QForm):
    """(dim, signed disc, {place: clifford sign}, signature) of a form."""
    n = q.dim
    sig = sum(1 if e > 0 else -1 for e in q.entries)
    det = 1
    for e in q.entries:
        det = square_class(det * e)
    disc = square_class((-1) ** (n * (n - 1) // 2) * det)
    if q.field == "R":
        places = (OO,)
    else:
        places = _critical_places(q.entries + (disc,))
    counts: dict[int, int] = {}
    for e in q.entries:
        counts[e] = counts.get(e, 0) + 1
    values = sorted(counts)
    cliff = {}
    for v in places:
        s = 1
        for i, a in enumerate(values):
            na = counts[a]
            if na >= 2 and (na * (na - 1) // 2) % 2:
                s *= _hilbert(a, a, v)
            for b in values[i + 1:]:
                if (na * counts[b]) % 2:
                    s *= _hilbert(a, b, v)
        cliff[v] = s * _hasse_correction(n, disc, v)
    return n, disc, cliff, sig


def invariants(q: QForm) -> WittInvariants:
    """Dimension, signed discriminant, Clifford invariant, signature."""
    n, disc, cliff, sig = _profile(q)
    ram = frozenset(v for v, s in cliff.items() if s == -1)
    return WittInvariants(n, disc, BrauerClass2(ram), sig)


def _is_local_square(d: int, place) -> bool:
    if place == OO:
        return d > 0
    p = place
    if d % p == 0:
        return False  # d square-free, so v_p(d) = 1
    if p == 2:
        return d % 8 == 1
    return _legendre(d % p, p) == 1


def _class_isotropic(field: str, dim: int, disc: int, cliff: dict, sig: int) -> bool:
    """Isotropy of the anisotropic-candidate class with the given invariants."""
    if dim <= 1:
        return False
    if abs(sig) == dim:
        return False  # definite at the real place
    if field == "R":
        return True
    if dim == 2:
        # <a, b> is isotropic iff -ab is a square; -ab is the signed disc here.
        return disc == 1
    if dim >= 5:
        return True  # isotropic at every finite place, and indefinite
    for v, c in cliff.items():
        # Recover the Hasse product from the Witt-class invariant.
        eps = c * _hasse_correction(dim, disc, v)
        if dim == 3:
            # disc(form) = -signed disc for dim 3.
            if eps != _hilbert(-1, disc, v):
                return False
        else:
            d = disc  # unsigned disc = signed disc for dim 4
            if _is_local_square(d, v) and eps != _hilbert(-1, -1, v):
                return False
    return True


def is_isotropic(q: QForm) -> bool:
    n, disc, cliff, sig = _profile(q)
    return _class_isotropic(q.field, n, disc, cliff, sig)


@dataclass(frozen=True)
class WittDecomposition:
    witt_index: int
    kernel: WittInvariants


def witt_decompose(q: QForm) -> WittDecomposition:
    """Witt index and invariants of the anisotropic kernel, at the class level."""
    n, disc, cliff, sig = _profile(q)
    w = 0
    while _class_isotropic(q.field, n, disc, cliff, sig):
        n -= 2
        w += 1
    ram = frozenset(v for v, s in cliff.items() if s == -1)
    return WittDecomposition(w, WittInvariants(n, disc, BrauerClass2(ram), sig))


def is_hyperbolic(q: QForm) -> bool:
    n, disc, cliff, sig = _profile(q)
    return n % 2 == 0 and disc == 1 and sig == 0 and all(s == 1 for s in cliff.values())


def witt_equal(q1: QForm, q2: QForm) -> bool:
    """Equality in the Witt ring, decided via the hyperbolic profile of q1 - q2."""
    q1._check_field(q2)
    return is_hyperbolic(q1.concat(form_neg(q2)))


def in_In(q: QForm, n: int) -> bool:
    """Membership in the n-th power of the fundamental ideal."""
    if n < 1:
        raise ValueError("n must be positive")
    dim, disc, cliff, sig = _profile(q)
    if dim % 2:
        return False
    if n == 1:
        return True
    if disc != 1:
        return False
    if n == 2:
        return True
    if any(s == -1 for s in cliff.values()):
        return False
    if n == 3:
        return True
    return sig % (1 << n) == 0


def i_level(q: QForm) -> int:
    """Largest n <= LEVEL_CAP with q in I^n; HYPERBOLIC_LEVEL for hyperbolic q."""
    if is_hyperbolic(q):
        return HYPERBOLIC_LEVEL
    if not in_In(q, 1):
        return 0
    level = 1
    for n in range(2, LEVEL_CAP + 1):
        if not in_In(q, n):
            break
        level = n
    return level


def e3_zero(q: QForm) -> bool:
    """Vanishing of the degree-3 invariant; requires q in I^3."""
    if not in_In(q, 3):
        raise ValueError("form is not in I^3")
    return in_In(q, 4)


def e3_symbol_length(q: QForm) -> int:
    """Symbol length of e3(q) over Q or R: 0 or 1 (one symbol class in H^3)."""
    return 0 if e3_zero(q) else 1


# ---------------------------------------------------------------------------
# serialization


def format_form(q: QForm) -> str:
    return ",".join(str(e) for e in q.entries)


def parse_form(text: str, field: str = "Q") -> QForm:
    """Parse '1,-2,3' diagonals or '<<a,b,c>>' Pfister shorthand."""
    text = text.strip()
    if text.startswith("<<") and text.endswith(">>"):
        entries = [int(t) for t in text[2:-2].split(",") if t.strip()]
        return pfister(entries, field)
    entries = [int(t) for t in text.split(",") if t.strip()]
    if not entries:
        raise ValueError("empty form")
    return QForm.diagonal(entries, field)


def scaled_profile_equal(lhs: QForm, rhs: QForm, m: int) -> bool:
    """Witt equality lhs = <m> rhs for forms whose dimensions are divisible by 4.

    For dim divisible by 4 the scaled invariants transform as
    disc -> disc, clifford_v -> clifford_v * (m, disc)_v, sig -> sign(m) sig,
    so candidates can be screened without rebuilding the scaled form.
    """
    if lhs.dim % 4 or rhs.dim % 4:
        raise ValueError("dimensions must be divisible by 4")
    if lhs.dim != rhs.dim:
        return False
    m = squarefree(m)
    n1, d1, c1, s1 = _profile(lhs)
    n2, d2, c2, s2 = _profile(rhs)
    if d1 != d2:
        return False
    if s1 != (s2 if m > 0 else -s2):
        return False
    places = set(c1) | set(c2) | set(_critical_places((m,)))
    for v in places:
        a = c1.get(v, 1)
        b = c2.get(v, 1) * _hilbert(m, d2, v)
        if a != b:
            return False
    return True
