"""Explicit matrix models of involutions and quadratic-extension descent.

Everything here is concrete matrix arithmetic over Q or Q(sqrt(a)): the
antidiagonal bilinear forms S_n, the orthogonal and symplectic involutions
they define on matrix algebras, the Kronecker identification of a 2x8 tensor
product with M_16, and the computation of descended quadratic forms from an
order-2 cocycle eta via the fixed space of v -> eta * conj(v).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    diagonalize_symmetric,
    identity,
    kernel_basis,
    mat,
    mat_eq,
    mat_inv,
    mat_mul,
    transpose,
    zeros,
)
from .qform import QForm, square_class, witt_decompose


def second_diagonal(n: int) -> list:
    """S_n: ones in the (j, n+1-j) entries, zero elsewhere."""
    s = zeros(n, n)
    for j in range(n):
        s[j][n - 1 - j] = Fraction(1)
    return s


def symplectic_gram(n2: int) -> list:
    """The 2n x 2n block matrix [[0, S_n], [-S_n, 0]]."""
    if n2 % 2:
        raise ValueError("size must be even")
    n = n2 // 2
    g = zeros(n2, n2)
    for j in range(n):
        g[j][n2 - 1 - j] = Fraction(1)
        g[n + j][n - 1 - j] = Fraction(-1)
    return g


@dataclass(frozen=True)
class InvolutionAlgebra:
    """M_n with the involution x -> u x^t u^(-1) for an (anti)symmetric u."""

    n: int
    gram: tuple
    gram_inv: tuple
    kind: str

    @staticmethod
    def build(gram, kind: str) -> "InvolutionAlgebra":
        g = mat(gram)
        gt = transpose(g)
        if kind == "orthogonal":
            if not mat_eq(gt, g):
                raise ValueError("orthogonal involution needs a symmetric matrix")
        elif kind == "symplectic":
            if not mat_eq(gt, [[-x for x in row] for row in g]):
                raise ValueError("symplectic involution needs an antisymmetric matrix")
        else:
            raise ValueError(f"unknown kind {kind!r}")
        ginv = mat_inv(g)
        return InvolutionAlgebra(
            len(g),
            tuple(tuple(r) for r in g),
            tuple(tuple(r) for r in ginv),
            kind,
        )

    def apply(self, x) -> list:
        return mat_mul(mat_mul(self.gram, transpose(x)), self.gram_inv)

    def check_involution(self, samples: int = 20, seed: int = 0) -> bool:
        """sigma^2 = id and sigma(xy) = sigma(y) sigma(x) on random unit pairs."""
        rng = random.Random(seed)
        n = self.n
        for _ in range(samples):
            i, j, q, r = (rng.randrange(n) for _ in range(4))
            x = zeros(n, n)
            x[i][j] = Fraction(1)
            y = zeros(n, n)
            y[q][r] = Fraction(1)
            if not mat_eq(self.apply(self.apply(x)), x):
                return False
            lhs = self.apply(mat_mul(x, y))
            rhs = mat_mul(self.apply(y), self.apply(x))
            if not mat_eq(lhs, rhs):
                return False
        return True


def sigma_involution(n: int) -> InvolutionAlgebra:
    """sigma_n(x) = S_n x^t S_n^(-1), the split orthogonal involution."""
    return InvolutionAlgebra.build(second_diagonal(n), "orthogonal")


def gamma_involution(n2: int) -> InvolutionAlgebra:
    """gamma_2n(x) = J^(-1) x^t J for J = [[0, S_n], [-S_n, 0]], symplectic."""
    return InvolutionAlgebra.build(symplectic_gram(n2), "symplectic")


def sigma_prime_16() -> InvolutionAlgebra:
    """The orthogonal involution on M_16 matching gamma_2 tensor gamma_8."""
    p = zeros(16, 16)
    s4 = second_diagonal(4)
    blocks = {(0, 3): 1, (1, 2): -1, (2, 1): -1, (3, 0): 1}
    for (bi, bj), sgn in blocks.items():
        for r in range(4):
            for c in range(4):
                if s4[r][c]:
                    p[4 * bi + r][4 * bj + c] = Fraction(sgn)
    return InvolutionAlgebra.build(p, "orthogonal")


# ---------------------------------------------------------------------------
# Kronecker identification M_2 (x) M_8 = M_16


def kron_index(i: int, j: int, q: int, r: int) -> tuple:
    """Image of E_ij (x) E_qr as a matrix-unit index pair, all 1-indexed."""
    return (8 * (i - 1) + q, 8 * (j - 1) + r)


def kronecker_iso_report(samples: int = 10000, seed: int = 1) -> dict:
    """Verify multiplicativity of the Kronecker map on basis-unit products.

    Exhaustive over the block of indices <= 2, then random pairs; unit
    products are sparse so everything reduces to index arithmetic.
    """

    def check(u1, u2) -> bool:
        i, j, q, r = u1
        ii, jj, qq, rr = u2
        # E_ij E_ii'jj' = delta * E_i jj', same in the second slot.
        left = None
        if j == ii and r == qq:
            left = kron_index(i, jj, q, rr)
        a = kron_index(i, j, q, r)
        b = kron_index(ii, jj, qq, rr)
        right = (a[0], b[1]) if a[1] == b[0] else None
        return left == right

    small = [
        (i, j, q, r)
        for i in (1, 2)
        for j in (1, 2)
        for q in (1, 2)
        for r in (1, 2)
    ]
    exhaustive_bad = sum(
        1 for u1 in small for u2 in small if not check(u1, u2)
    )
    rng = random.Random(seed)
    random_bad = 0
    for _ in range(samples):
        u1 = (rng.randrange(1, 3), rng.randrange(1, 3), rng.randrange(1, 9), rng.randrange(1, 9))
        u2 = (rng.randrange(1, 3), rng.randrange(1, 3), rng.randrange(1, 9), rng.randrange(1, 9))
        if not check(u1, u2):
            random_bad += 1
    return {
        "exhaustive_pairs": len(small) ** 2,
        "exhaustive_bad": exhaustive_bad,
        "random_pairs": samples,
        "random_bad": random_bad,
    }


def _unit(n: int, i: int, j: int) -> list:
    x = zeros(n, n)
    x[i][j] = Fraction(1)
    return x


def _kron_matrix(x2, x8) -> list:
    out = zeros(16, 16)
    for i in range(2):
        for j in range(2):
            if x2[i][j] == 0:
                continue
            for q in range(8):
                for r in range(8):
                    if x8[q][r] == 0:
                        continue
                    out[8 * i + q][8 * j + r] = x2[i][j] * x8[q][r]
    return out


def involution_compat_report() -> dict:
    """Check gamma_2 (x) gamma_8 matches sigma'_16 on all 256 basis units."""
    g2 = gamma_involution(2)
    g8 = gamma_involution(8)
    sp = sigma_prime_16()
    bad = 0
    for i in range(2):
        for j in range(2):
            x2 = _unit(2, i, j)
            g2x = g2.apply(x2)
            for q in range(8):
                for r in range(8):
                    x8 = _unit(8, q, r)
                    lhs = _kron_matrix(g2x, g8.apply(x8))
                    rhs = sp.apply(_kron_matrix(x2, x8))
                    if not mat_eq(lhs, rhs):
                        bad += 1
    return {"basis_elements": 256, "bad": bad}


def conjugation_matrix() -> list:
    """Block matrix sending sigma'_16 to sigma_16 by conjugation."""
    u = zeros(16, 16)
    for r in range(4):
        u[r][r] = Fraction(1)
        u[4 + r][8 + r] = Fraction(1)
        u[8 + r][4 + r] = Fraction(-1)
        u[12 + r][12 + r] = Fraction(1)
    return u


def conjugation_iso_report() -> dict:
    """Check sigma_16(U x U^-1) = U sigma'_16(x) U^-1 on all 256 basis units."""
    u = conjugation_matrix()
    uinv = mat_inv(u)
    s16 = sigma_involution(16)
    sp = sigma_prime_16()
    bad = 0
    checked = 0
    for i in range(2):
        for j in range(2):
            for q in range(8):
                for r in range(8):
                    a, b = kron_index(i + 1, j + 1, q + 1, r + 1)
                    x = _unit(16, a - 1, b - 1)
                    lhs = s16.apply(mat_mul(mat_mul(u, x), uinv))
                    rhs = mat_mul(mat_mul(u, sp.apply(x)), uinv)
                    checked += 1
                    if not mat_eq(lhs, rhs):
                        bad += 1
    ut_u = mat_mul(transpose(u), u)
    diag_ok = all(
        ut_u[i][j] == 0 for i in range(16) for j in range(16) if i != j
    )
    return {"checked": checked, "bad": bad, "utu_diagonal": diag_ok}


def sl2_image() -> dict:
    """Image of E_12 (x) 1_8 under the Kronecker map then U-conjugation."""
    x = _kron_matrix(_unit(2, 0, 1), identity(8))
    u = conjugation_matrix()
    img = mat_mul(mat_mul(u, x), mat_inv(u))
    expected = zeros(16, 16)
    for r in range(4):
        expected[r][4 + r] = Fraction(1)
        expected[8 + r][12 + r] = Fraction(-1)
    sq = mat_mul(img, img)
    s16 = sigma_involution(16)
    skew = mat_eq(s16.apply(img), [[-v for v in row] for row in img])
    return {
        "matrix": img,
        "matches_expected": mat_eq(img, expected),
        "square_zero": all(v == 0 for row in sq for v in row),
        "sigma16_skew": skew,
    }


# ---------------------------------------------------------------------------
# quadratic-extension descent


@dataclass(frozen=True)
class QuadExtMatrix:
    """Matrix over Q(sqrt(a)), stored as rational matrices x + y sqrt(a)."""

    a: int
    x: tuple
    y: tuple

    @staticmethod
    def build(a: int, x, y=None) -> "QuadExtMatrix":
        xm = mat(x)
        ym = mat(y) if y is not None else zeros(len(xm), len(xm[0]))
        return QuadExtMatrix(
            a,
            tuple(tuple(r) for r in xm),
            tuple(tuple(r) for r in ym),
        )

    @property
    def n(self) -> int:
        return len(self.x)

    def conj(self) -> "QuadExtMatrix":
        return QuadExtMatrix(self.a, self.x, tuple(tuple(-v for v in r) for r in self.y))

    def mul(self, other: "QuadExtMatrix") -> "QuadExtMatrix":
        if self.a != other.a:
            raise ValueError("mixed extensions")
        x1, y1 = mat(self.x), mat(self.y)
        x2, y2 = mat(other.x), mat(other.y)
        xx = mat_mul(x1, x2)
        yy = mat_mul(y1, y2)
        xpart = [
            [xx[i][j] + self.a * yy[i][j] for j in range(len(xx[0]))]
            for i in range(len(xx))
        ]
        xy = mat_mul(x1, y2)
        yx = mat_mul(y1, x2)
        ypart = [
            [xy[i][j] + yx[i][j] for j in range(len(xy[0]))] for i in range(len(xy))
        ]
        return QuadExtMatrix.build(self.a, xpart, ypart)

    def is_identity(self) -> bool:
        n = self.n
        return mat_eq(mat(self.x), identity(n)) and all(
            v == 0 for row in self.y for v in row
        )


def descent_form(eta: QuadExtMatrix, s) -> QForm:
    """Descend the form with matrix s along the order-2 cocycle eta.

    The fixed space of v -> eta * conj(v) inside Q(sqrt(a))^n is an
    n-dimensional Q-subspace; the restriction of the bilinear form must be
    rational, and its diagonalization is returned as a QForm.
    """
    a = eta.a
    if square_class(a) == 1:
        raise ValueError("extension parameter is a square")
    if not eta.mul(eta.conj()).is_identity():
        raise ValueError("cocycle condition eta * conj(eta) = 1 fails")
    n = eta.n
    p, q = mat(eta.x), mat(eta.y)
    # v = x + y sqrt(a) is fixed iff (p - 1)x - a q y = 0 and q x - (p + 1)y = 0.
    big = zeros(2 * n, 2 * n)
    for i in range(n):
        for j in range(n):
            big[i][j] = p[i][j] - (1 if i == j else 0)
            big[i][n + j] = -a * q[i][j]
            big[n + i][j] = q[i][j]
            big[n + i][n + j] = -p[i][j] - (1 if i == j else 0)
    basis = kernel_basis(big)
    if len(basis) != n:
        raise ValueError(f"fixed space has dimension {len(basis)}, expected {n}")
    sm = mat(s)
    gram = zeros(n, n)
    for bi in range(n):
        for bj in range(n):
            xi, yi = basis[bi][:n], basis[bi][n:]
            xj, yj = basis[bj][:n], basis[bj][n:]
            rat = _bilin(xi, sm, xj) + a * _bilin(yi, sm, yj)
            irr = _bilin(xi, sm, yj) + _bilin(yi, sm, xj)
            if irr != 0:
                raise ValueError("descended form is not rational")
            gram[bi][bj] = rat
    diag = [d for d in diagonalize_symmetric(gram) if d != 0]
    if len(diag) != n:
        raise ValueError("descended form is degenerate")
    return QForm.diagonal(diag)


def _bilin(u, s, v):
    n = len(u)
    return sum(u[i] * s[i][j] * v[j] for i in range(n) for j in range(n))


def crux_matrix(b) -> list:
    """The 8x8 antidiagonal matrix with entries -1, 1/b, -b, 1, 1, -1/b, b, -1."""
    vals = [
        Fraction(-1),
        Fraction(1, 1) / b,
        Fraction(-b),
        Fraction(1),
        Fraction(1),
        Fraction(-1) / b,
        Fraction(b),
        Fraction(-1),
    ]
    m = zeros(8, 8)
    for r in range(8):
        m[r][7 - r] = vals[r]
    return m


def crux_form(a: int, b: int) -> dict:
    """Descend S_8 along the crux cocycle, plane by plane.

    Verifies the matrix preserves the four hyperbolic planes (e_j, e_{9-j}),
    descends each plane as in the 2x2 example, and reports the direct sum
    with its Witt index, which must be 4.
    """
    if b == 0:
        raise ValueError("b must be nonzero")
    m = crux_matrix(Fraction(b))
    planes = [(0, 7), (1, 6), (2, 5), (3, 4)]
    pieces = []
    for (u, v) in planes:
        for col in (u, v):
            for r in range(8):
                if m[r][col] != 0 and r not in (u, v):
                    raise ValueError("plane not preserved")
        sub = [[m[u][u], m[u][v]], [m[v][u], m[v][v]]]
        eta = QuadExtMatrix.build(a, sub)
        s2 = second_diagonal(2)
        pieces.append(descent_form(eta, s2))
    total = pieces[0]
    for piece in pieces[1:]:
        total = total.concat(piece)
    dec = witt_decompose(total)
    return {
        "form": total,
        "plane_forms": pieces,
        "witt_index": dec.witt_index,
        "hyperbolic": dec.witt_index == 4,
    }
