"""Chevalley bases for simply-laced Lie algebras and their Killing forms.

Basis: h_1..h_n (simple coroots) then one root vector per root.  Structure
constants come from a bimultiplicative sign cocycle on the root lattice, so
all N_{alpha,beta} are +-1 and [x_alpha, x_{-alpha}] = h_alpha.  The Killing
form is computed honestly as a trace of composed adjoint maps; closed-form
expectations (2 h^v on dual root-vector pairs, 2 h^v B on the Cartan block)
live in the tests, not here.
"""
from __future__ import annotations

import random
from fractions import Fraction

from .linalg import diagonalize_symmetric, mat_inv, mat_vec
from .qform import QForm
from .roots import RootSystem


def _height(v) -> int:
    return sum(v)


class LieAlgebra:
    """Split simply-laced Lie algebra in a Chevalley basis over the rationals."""

    def __init__(self, system: RootSystem):
        if max(system.lensq(r) for r in system.roots) != 2:
            raise ValueError("only simply-laced systems are supported")
        self.system = system
        self.rank = system.rank
        self.roots = system.roots
        self.dim = self.rank + len(self.roots)
        self.root_index = {r: self.rank + i for i, r in enumerate(self.roots)}
        self._root_set = set(self.roots)
        self._kappa = None
        self._build_cocycle()
        self._build_ad()

    # -- sign cocycle -------------------------------------------------------

    def _build_cocycle(self):
        n = self.rank
        b = self.system.gram
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = 1
            for j in range(i):
                m[i][j] = b[i][j] % 2
        # Bitmask per root of (alpha^T M) mod 2, for fast sign evaluation.
        self._left = {}
        self._parity = {}
        for r in self.roots:
            mask = 0
            for j in range(n):
                if sum(r[i] * m[i][j] for i in range(n)) % 2:
                    mask |= 1 << j
            self._left[r] = mask
            pmask = 0
            for j in range(n):
                if r[j] % 2:
                    pmask |= 1 << j
            self._parity[r] = pmask

    def eps(self, a, b) -> int:
        """Cocycle sign: (-1)^(a^T M b), bimultiplicative in both slots."""
        bits = self._left[a] & self._parity[b]
        return -1 if bin(bits).count("1") % 2 else 1

    def eta(self, a) -> int:
        return -1 if _height(a) < 0 else 1

    def structure_sign(self, a, b) -> int:
        """N_{a,b} for roots with a+b a root."""
        s = tuple(x + y for x, y in zip(a, b))
        return self.eps(a, b) * self.eta(a) * self.eta(b) * self.eta(s)

    # -- adjoint tables -----------------------------------------------------

    def pairing(self, alpha, i) -> int:
        """<alpha, alpha_i^v>."""
        a = self.system.cartan
        return sum(a[j][i] * alpha[j] for j in range(self.rank))

    def _build_ad(self):
        n = self.rank
        ad = [dict() for _ in range(self.dim)]
        for i in range(n):
            for r in self.roots:
                p = self.pairing(r, i)
                if p:
                    k = self.root_index[r]
                    ad[i][k] = {k: p}
        for a in self.roots:
            ia = self.root_index[a]
            for i in range(n):
                p = self.pairing(a, i)
                if p:
                    ad[ia][i] = {ia: -p}
            for b in self.roots:
                ib = self.root_index[b]
                s = tuple(x + y for x, y in zip(a, b))
                if all(x == 0 for x in s):
                    ad[ia][ib] = {i: a[i] for i in range(n) if a[i]}
                elif s in self._root_set:
                    ad[ia][ib] = {self.root_index[s]: self.structure_sign(a, b)}
        self.ad = ad

    def bracket_basis(self, i: int, j: int) -> dict:
        return dict(self.ad[i].get(j, {}))

    def bracket(self, u: dict, v: dict) -> dict:
        """Bracket of sparse coefficient vectors {basis index: coefficient}."""
        out: dict[int, int] = {}
        for i, cu in u.items():
            row = self.ad[i]
            for j, cv in v.items():
                entry = row.get(j)
                if not entry:
                    continue
                c = cu * cv
                for m, w in entry.items():
                    out[m] = out.get(m, 0) + c * w
        return {m: c for m, c in out.items() if c}

    # -- consistency checks -------------------------------------------------

    def jacobi_violation(self, i: int, j: int, k: int) -> dict:
        """[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]], sparse."""
        ei, ej, ek = {i: 1}, {j: 1}, {k: 1}
        total: dict[int, int] = {}
        for u, v, w in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
            term = self.bracket(u, self.bracket(v, w))
            for m, c in term.items():
                total[m] = total.get(m, 0) + c
        return {m: c for m, c in total.items() if c}

    def jacobi_check_exhaustive(self) -> int:
        """Number of basis triples violating Jacobi (0 for a Lie algebra)."""
        bad = 0
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                for k in range(j + 1, self.dim):
                    if self.jacobi_violation(i, j, k):
                        bad += 1
        return bad

    def jacobi_check_sampled(self, samples: int, seed: int = 0) -> int:
        rng = random.Random(seed)
        bad = 0
        for _ in range(samples):
            i, j, k = (rng.randrange(self.dim) for _ in range(3))
            if self.jacobi_violation(i, j, k):
                bad += 1
        return bad

    # -- Killing form -------------------------------------------------------

    def killing_matrix(self) -> list:
        """Full Gram matrix of the Killing form via traces of ad compositions."""
        if self._kappa is not None:
            return self._kappa
        d = self.dim
        ad = self.ad
        kappa = [[0] * d for _ in range(d)]
        for i in range(d):
            adi = ad[i]
            for j in range(i, d):
                t = 0
                for k, entry in ad[j].items():
                    for m, c in entry.items():
                        back = adi.get(m)
                        if back:
                            t += c * back.get(k, 0)
                kappa[i][j] = t
                kappa[j][i] = t
        self._kappa = kappa
        return kappa


def killing_form_class(algebra: LieAlgebra, reduced: bool = True) -> QForm:
    """Witt class input of the (reduced) Killing form as a diagonal form over Q."""
    kappa = algebra.killing_matrix()
    scale = 2 * algebra.system.dual_coxeter_number() if reduced else 1
    g = [[Fraction(x, scale) for x in row] for row in kappa]
    diag = [d for d in diagonalize_symmetric(g) if d != 0]
    if len(diag) != algebra.dim:
        raise AssertionError("Killing form is degenerate")
    return QForm.diagonal(diag)


def cartan_restriction_class(algebra: LieAlgebra, reduced: bool = True) -> QForm:
    """Witt class of the Killing form restricted to the Cartan subalgebra."""
    kappa = algebra.killing_matrix()
    scale = 2 * algebra.system.dual_coxeter_number() if reduced else 1
    n = algebra.rank
    g = [[Fraction(kappa[i][j], scale) for j in range(n)] for i in range(n)]
    diag = [d for d in diagonalize_symmetric(g) if d != 0]
    if len(diag) != n:
        raise AssertionError("degenerate Cartan restriction")
    return QForm.diagonal(diag)


def sublattice_split(algebra: LieAlgebra, columns) -> dict:
    """Split the root vectors by membership in the integer span of the columns.

    The columns must form a full-rank square basis of the ambient lattice
    tensored with Q; membership is decided by exact coordinate solving.
    """
    n = len(columns)
    if n != len(columns[0]):
        raise ValueError("need a square lattice basis")
    a = [[Fraction(columns[j][i]) for j in range(n)] for i in range(n)]
    inv = mat_inv(a)
    inside = []
    outside = []
    for r in algebra.roots:
        c = mat_vec(inv, [Fraction(x) for x in r])
        if all(x.denominator == 1 for x in c):
            inside.append(algebra.root_index[r])
        else:
            outside.append(algebra.root_index[r])
    return {"inside": inside, "outside": outside}


def branching_report(algebra: LieAlgebra, columns) -> dict:
    """Decompose the Killing form along a full-rank root sublattice.

    Checks the complement root vectors pair off into hyperbolic planes and
    that the two blocks are orthogonal, returning counts and the Witt-class
    data of the complement block.
    """
    split = sublattice_split(algebra, columns)
    inside, outside = split["inside"], split["outside"]
    kappa = algebra.killing_matrix()
    cross = [
        (i, j)
        for i in inside + list(range(algebra.rank))
        for j in outside
        if kappa[i][j] != 0
    ]
    # complement pairs: kappa couples x_alpha only with x_{-alpha}
    out_set = set(outside)
    planes = 0
    seen = set()
    unpaired = []
    for i in outside:
        if i in seen:
            continue
        partners = [j for j in outside if kappa[i][j] != 0]
        if len(partners) == 1 and partners[0] != i and partners[0] in out_set:
            planes += 1
            seen.add(i)
            seen.add(partners[0])
        else:
            unpaired.append(i)
    return {
        "inside_roots": len(inside),
        "cartan_dim": algebra.rank,
        "outside_roots": len(outside),
        "cross_terms": len(cross),
        "hyperbolic_planes": planes,
        "unpaired": len(unpaired),
    }


def complement_class(algebra: LieAlgebra, columns, reduced: bool = True) -> QForm:
    """Witt class of the Killing form restricted to the complement block."""
    split = sublattice_split(algebra, columns)
    outside = split["outside"]
    kappa = algebra.killing_matrix()
    scale = 2 * algebra.system.dual_coxeter_number() if reduced else 1
    g = [[Fraction(kappa[i][j], scale) for j in outside] for i in outside]
    diag = [d for d in diagonalize_symmetric(g) if d != 0]
    if len(diag) != len(outside):
        raise AssertionError("degenerate complement restriction")
    return QForm.diagonal(diag)
