"""Root systems in simple-root coordinates and coroot embeddings between them.

Roots are integer tuples of coefficients on the simple roots.  The inner
product comes from the Gram matrix of the simple roots, normalized so long
roots have length squared 2 in the simply-laced types and 4 in type C.
Embeddings are recorded as integer matrices sending simple coroots of the
source to coroot-lattice vectors of the target, with a declared scale factor
relating the two normalizations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import mat_inv, mat_vec

CARTAN = {
    "A1": ((2,),),
    "D4": (
        (2, -1, 0, 0),
        (-1, 2, -1, -1),
        (0, -1, 2, 0),
        (0, -1, 0, 2),
    ),
    "C4": (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -1, 2, -1),
        (0, 0, -2, 2),
    ),
    "D8": (
        (2, -1, 0, 0, 0, 0, 0, 0),
        (-1, 2, -1, 0, 0, 0, 0, 0),
        (0, -1, 2, -1, 0, 0, 0, 0),
        (0, 0, -1, 2, -1, 0, 0, 0),
        (0, 0, 0, -1, 2, -1, 0, 0),
        (0, 0, 0, 0, -1, 2, -1, -1),
        (0, 0, 0, 0, 0, -1, 2, 0),
        (0, 0, 0, 0, 0, -1, 0, 2),
    ),
    "E8": (
        (2, 0, -1, 0, 0, 0, 0, 0),
        (0, 2, 0, -1, 0, 0, 0, 0),
        (-1, 0, 2, -1, 0, 0, 0, 0),
        (0, -1, -1, 2, -1, 0, 0, 0),
        (0, 0, 0, -1, 2, -1, 0, 0),
        (0, 0, 0, 0, -1, 2, -1, 0),
        (0, 0, 0, 0, 0, -1, 2, -1),
        (0, 0, 0, 0, 0, 0, -1, 2),
    ),
}

ROOT_COUNT = {"A1": 2, "D4": 24, "C4": 32, "D8": 112, "E8": 240}

# Gram matrices of the simple roots: B = D A with D = diag(len^2 / 2).
_ROOT_LEN2 = {
    "A1": (2,),
    "D4": (2, 2, 2, 2),
    "C4": (2, 2, 2, 4),
    "D8": (2,) * 8,
    "E8": (2,) * 8,
}


def cartan_matrix(name: str) -> tuple:
    if name not in CARTAN:
        raise ValueError(f"unknown root system {name!r}")
    return CARTAN[name]


def gram_matrix(name: str) -> tuple:
    """Gram matrix of the simple roots; B_ij = a_ij (alpha_j, alpha_j) / 2."""
    a = cartan_matrix(name)
    len2 = _ROOT_LEN2[name]
    n = len(a)
    return tuple(
        tuple(a[i][j] * len2[j] // 2 for j in range(n)) for i in range(n)
    )


def coroot_gram_matrix(name: str) -> tuple:
    """Gram matrix of the simple coroots, scaled so short coroots have length
    squared 2; for simply-laced systems this equals the root Gram matrix."""
    b = gram_matrix(name)
    len2 = _ROOT_LEN2[name]
    bmax = max(len2)
    n = len(b)
    return tuple(
        tuple(2 * bmax * b[i][j] // (len2[i] * len2[j]) for j in range(n))
        for i in range(n)
    )


class RootSystem:
    """All roots of a finite root system, generated by simple reflections."""

    def __init__(self, name: str):
        self.name = name
        self.cartan = cartan_matrix(name)
        self.rank = len(self.cartan)
        self.gram = gram_matrix(name)
        self.roots = self._generate()
        if len(self.roots) != ROOT_COUNT[name]:
            raise AssertionError(
                f"{name}: got {len(self.roots)} roots, expected {ROOT_COUNT[name]}"
            )

    def _generate(self) -> tuple:
        n = self.rank
        simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(n):
                    # Pairing <v, alpha_i^v> = sum_j a_ji v_j.
                    c = sum(self.cartan[j][i] * v[j] for j in range(n))
                    w = tuple(
                        v[j] - c if j == i else v[j] for j in range(n)
                    )
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        for v in list(seen):
            neg = tuple(-x for x in v)
            if neg not in seen:
                raise AssertionError(f"{self.name}: roots not symmetric at {v}")
        return tuple(sorted(seen))

    def inner(self, v, w) -> int:
        b = self.gram
        n = self.rank
        return sum(v[i] * b[i][j] * w[j] for i in range(n) for j in range(n))

    def lensq(self, v) -> int:
        return self.inner(v, v)

    def height(self, v) -> int:
        return sum(v)

    def is_root(self, v) -> bool:
        return tuple(v) in set(self.roots)

    def positive_roots(self) -> tuple:
        return tuple(v for v in self.roots if self.height(v) > 0)

    def highest_root(self) -> tuple:
        return max(self.roots, key=self.height)

    def coroot(self, v) -> tuple:
        """Coefficients of 2v/(v,v) on the simple coroots."""
        l2 = self.lensq(v)
        len2 = _ROOT_LEN2[self.name]
        return tuple(Fraction(2 * v[i] * len2[i], 2 * l2) for i in range(self.rank))

    def coxeter_number(self) -> int:
        return self.height(self.highest_root()) + 1

    def dual_coxeter_number(self) -> int:
        # 1 + sum of the dual Kac labels (coroot coefficients of the highest root).
        total = sum(self.coroot(self.highest_root()))
        return int(total) + 1


def coroot_lattice_inner(name: str):
    """Inner product on coroot-lattice coordinates (coroot Gram matrix)."""
    g = coroot_gram_matrix(name)

    def inner(v, w) -> int:
        n = len(g)
        return sum(v[i] * g[i][j] * w[j] for i in range(n) for j in range(n))

    return inner


@dataclass(frozen=True)
class CorootMap:
    """Linear map on coroot lattices, columns = images of source simple coroots.

    ``scale`` declares the factor by which the map multiplies the source
    coroot inner product: image Gram = scale * source coroot Gram.
    """

    source: str
    target: str
    columns: tuple  # one target-coordinate tuple per source simple coroot
    scale: int = 1

    def image(self, v) -> tuple:
        cols = self.columns
        m = len(cols[0])
        return tuple(sum(v[k] * cols[k][j] for k in range(len(cols))) for j in range(m))


def verify_embedding(maps: list) -> list:
    """Check within-factor Grams (up to declared scale) and cross-factor orthogonality.

    Returns a list of mismatch strings; empty means everything checks out.
    """
    problems = []
    target = maps[0].target
    inner = coroot_lattice_inner(target)
    for m in maps:
        if m.target != target:
            problems.append(f"mixed targets {m.target} vs {target}")
            return problems
        g = coroot_gram_matrix(m.source)
        cols = m.columns
        for i in range(len(cols)):
            for j in range(len(cols)):
                got = inner(cols[i], cols[j])
                want = m.scale * g[i][j]
                if got != want:
                    problems.append(
                        f"{m.source}->{m.target}[{i},{j}]: {got} != {want}"
                    )
    for a in range(len(maps)):
        for b in range(a + 1, len(maps)):
            for i, u in enumerate(maps[a].columns):
                for j, w in enumerate(maps[b].columns):
                    got = inner(u, w)
                    if got != 0:
                        problems.append(
                            f"factors {a},{b} cols {i},{j}: inner {got} != 0"
                        )
    return problems


def rost_multiplier(m: CorootMap) -> int:
    """Half the target length squared of the image of a shortest source coroot."""
    g = coroot_gram_matrix(m.source)
    short_index = min(range(len(g)), key=lambda i: g[i][i])
    inner = coroot_lattice_inner(m.target)
    col = m.columns[short_index]
    val = inner(col, col)
    if val % 2:
        raise AssertionError("odd image length squared")
    return val // 2


# ---------------------------------------------------------------------------
# the embeddings used throughout


def d8_in_e8() -> CorootMap:
    """Subsystem D8 inside E8 (coroot = root coordinates, both simply laced)."""
    e8 = RootSystem("E8")
    eps = e8.highest_root()  # (2, 3, 4, 6, 5, 4, 3, 2)
    cols = (
        tuple(-x for x in eps),
        (0, 0, 0, 0, 0, 0, 0, 1),
        (0, 0, 0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0, 0, 0),
        (0, 0, 0, 1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0, 0),
    )
    return CorootMap("D8", "E8", cols)


def a1_in_d8() -> CorootMap:
    """The A1 factor of A1 x C4 inside D8, image of length squared 8."""
    return CorootMap("A1", "D8", ((1, 2, 3, 4, 3, 2, 1, 0),), scale=4)


def c4_in_d8() -> CorootMap:
    """The C4 factor of A1 x C4 inside D8 on simple coroots."""
    cols = (
        (1, 0, 0, 0, 0, 0, -1, 0),
        (0, 1, 0, 0, 0, -1, 0, 0),
        (0, 0, 1, 0, -1, 0, 0, 0),
        (0, 0, 0, 1, 2, 2, 1, 1),
    )
    return CorootMap("C4", "D8", cols)


def a1_in_e8() -> CorootMap:
    """The A1 factor of A1 x C4 inside E8 directly."""
    return CorootMap("A1", "E8", ((-2, -2, -4, -4, -2, 0, 0, 0),), scale=4)


def c4_in_e8() -> CorootMap:
    """The C4 factor of A1 x C4 inside E8 directly."""
    cols = (
        (-2, -4, -4, -6, -5, -4, -3, -2),
        (0, 0, 0, -1, 0, 0, 0, 1),
        (0, 0, 0, 0, -1, 0, 1, 0),
        (0, 1, 1, 2, 2, 1, 0, 0),
    )
    return CorootMap("C4", "E8", cols)


def pgl2_quad_in_e8() -> list:
    """Four commuting A1 coroot images in E8, each of length squared 8."""
    a1 = (-2, -2, -4, -4, -2, 0, 0, 0)
    a2 = (-2, -4, -4, -6, -4, -4, -4, -2)
    a3 = (-2, -4, -4, -6, -6, -4, -2, -2)
    a4 = (-2, -4, -4, -8, -6, -4, -2, 0)
    return [CorootMap("A1", "E8", (v,), scale=4) for v in (a1, a2, a3, a4)]


def compose(outer: CorootMap, inner: CorootMap) -> CorootMap:
    if inner.target != outer.source:
        raise ValueError("maps do not compose")
    cols = tuple(outer.image(c) for c in inner.columns)
    return CorootMap(inner.source, outer.target, cols, inner.scale * outer.scale)


# ---------------------------------------------------------------------------
# centralizers


@dataclass(frozen=True)
class Subsystem:
    """A root subsystem: ambient system name, the roots, and a recognized type."""

    ambient: str
    roots: tuple
    simple_roots: tuple
    type_name: str

    def highest_root_coeffs(self) -> tuple:
        """Coefficients of the highest root on the subsystem's simple roots."""
        base = _expand_in_base(self.roots, self.simple_roots)
        return max(base, key=sum)

    def highest_root_ambient(self) -> tuple:
        """The highest root as a vector in ambient simple-root coordinates."""
        coeffs = self.highest_root_coeffs()
        n = len(self.simple_roots[0])
        return tuple(
            sum(c * s[k] for c, s in zip(coeffs, self.simple_roots))
            for k in range(n)
        )


def _expand_in_base(roots, simple):
    """Coordinates of each root on the given simple roots (must be integral)."""
    cols = [list(s) for s in simple]
    a = [[Fraction(cols[j][i]) for j in range(len(simple))] for i in range(len(simple[0]))]
    # Solve a * c = v in the least-squares sense via normal equations; the
    # simple roots are independent so A^T A is invertible.
    at = list(zip(*a))
    ata = [[sum(at[i][k] * at[j][k] for k in range(len(a))) for j in range(len(at))] for i in range(len(at))]
    inv = mat_inv([list(map(Fraction, row)) for row in ata])
    out = []
    for v in roots:
        atv = [sum(at[i][k] * v[k] for k in range(len(v))) for i in range(len(at))]
        c = mat_vec(inv, [Fraction(x) for x in atv])
        ints = []
        for x in c:
            if x.denominator != 1:
                raise AssertionError("non-integral coefficient in subsystem base")
            ints.append(int(x))
        # check exactness
        for k in range(len(v)):
            if sum(ints[j] * simple[j][k] for j in range(len(simple))) != v[k]:
                raise AssertionError("root outside subsystem lattice")
        out.append(tuple(ints))
    return tuple(out)


def centralizer_roots(ambient: RootSystem, vectors) -> tuple:
    """Roots of the ambient system orthogonal to all the given lattice vectors."""
    out = []
    for r in ambient.roots:
        if all(ambient.inner(r, v) == 0 for v in vectors):
            out.append(r)
    return tuple(out)


def _root_positive(r) -> bool:
    for x in r:
        if x != 0:
            return x > 0
    return False


def recognize_subsystem(ambient: RootSystem, roots) -> Subsystem:
    """Identify the type of a root subsystem of a simply-laced ambient system."""
    roots = tuple(sorted(roots))
    pos = [r for r in roots if _root_positive(r)]
    pos_set = set(pos)
    simple = []
    for r in pos:
        decomposable = False
        for s in pos:
            if s == r:
                continue
            diff = tuple(a - b for a, b in zip(r, s))
            if diff in pos_set:
                decomposable = True
                break
        if not decomposable:
            simple.append(r)
    simple = tuple(sorted(simple))
    type_name = _classify(ambient, simple, len(roots))
    return Subsystem(ambient.name, roots, simple, type_name)


def _classify(ambient: RootSystem, simple, count: int) -> str:
    n = len(simple)
    degrees = []
    for i in range(n):
        d = sum(
            1
            for j in range(n)
            if j != i and ambient.inner(simple[i], simple[j]) != 0
        )
        degrees.append(d)
    degrees.sort()
    if n == 0:
        return "empty"
    if n == 1:
        return "A1"
    key = (n, count, tuple(degrees))
    table = {
        (2, 8, (1, 1)): "A2",
        (2, 4, (0, 0)): "A1xA1",
        (4, 24, (1, 1, 1, 3)): "D4",
        (4, 20, (1, 1, 2, 2)): "A4",
        (8, 112, (1, 1, 1, 2, 2, 2, 2, 3)): "D8",
        (8, 240, (1, 1, 1, 2, 2, 2, 2, 3)): "E8",
    }
    return table.get(key, f"rank{n}_size{count}")
