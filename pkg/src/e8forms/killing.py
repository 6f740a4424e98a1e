"""Witt-class formulas for the 248-dimensional groups built from four
quaternion algebras and a square class, plus the octonion-Albert construction.

Inputs are quadruples of quaternion algebras Q1..Q4 with a scalar c over Q
or R.  The module evaluates the closed-form reduced Killing form, the
difference class kappa = <2>(8<1> - redkill) with its ideal-filtration level,
the degree-3 invariant class, the conditional I^8 reduction with its
intermediate identities, the real classification, and an honest index hint.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .qform import (
    QForm,
    Quaternion,
    brauer_class,
    brauer_sum,
    e3_symbol_length,
    e3_zero,
    factorize,
    form_neg,
    form_repeat,
    form_scale,
    form_sum,
    form_tensor,
    hyperbolic,
    i_level,
    in_In,
    invariants,
    pfister,
    scaled_profile_equal,
    squarefree,
    witt_equal,
)

REAL_CLASSES = {8: "split", -24: "e8_minus24", -248: "compact"}


class InternalCheckError(AssertionError):
    """A built-in cross-check between two formulas failed."""


@dataclass(frozen=True)
class E8Input:
    field: str
    q1: Quaternion
    q2: Quaternion
    q3: Quaternion
    q4: Quaternion
    c: int

    def __post_init__(self):
        if self.field not in ("Q", "R"):
            raise ValueError(f"unknown base field {self.field!r}")
        if self.c == 0:
            raise ValueError("c must be nonzero")
        object.__setattr__(self, "c", squarefree(self.c))

    @property
    def quaternions(self) -> tuple:
        return (self.q1, self.q2, self.q3, self.q4)

    def norms(self) -> list:
        return [q.norm_form(self.field) for q in self.quaternions]

    def pures(self) -> list:
        return [q.pure_form(self.field) for q in self.quaternions]


def _triple_products(forms) -> list:
    return [
        form_tensor(form_tensor(forms[i], forms[j]), forms[l])
        for i, j, l in itertools.combinations(range(4), 3)
    ]


def _pair_products(forms) -> list:
    return [
        form_tensor(forms[i], forms[j])
        for i, j in itertools.combinations(range(4), 2)
    ]


def red_killing_form(inp: E8Input) -> QForm:
    """The 248-entry diagonal reduced Killing form of the constructed group.

    8<2c> plus the negation of <2><1,-c> tensored with the sum of the pure
    parts and their triple products: 8 + 2 * (12 + 108) = 248 entries.
    """
    f = inp.field
    pures = inp.pures()
    block = form_sum(*pures, *_triple_products(pures))
    twisted = form_tensor(QForm.diagonal((2, -2 * inp.c), f), block)
    head = form_repeat(QForm.diagonal((2 * inp.c,), f), 8)
    out = head.concat(form_neg(twisted))
    if out.dim != 248:
        raise InternalCheckError(f"reduced Killing form has dimension {out.dim}")
    return out


def kappa_form(inp: E8Input) -> QForm:
    """<<c>> [4 sum N_i - 2 sum N_i N_j + sum N_i N_j N_l] as a 1024-entry form.

    Internally asserts Witt-equality with <2>(8<1> - redkill), membership in
    I^5, and membership in I^4; failures signal a transcription bug.
    """
    f = inp.field
    norms = inp.norms()
    inner = form_sum(
        form_repeat(form_sum(*norms), 4),
        form_repeat(form_neg(form_sum(*_pair_products(norms))), 2),
        form_sum(*_triple_products(norms)),
    )
    kap = form_tensor(pfister((inp.c,), f), inner)
    if kap.dim != 1024:
        raise InternalCheckError(f"kappa has dimension {kap.dim}")
    redkill = red_killing_form(inp)
    expected = form_tensor(
        QForm.diagonal((2,), f),
        form_repeat(QForm.diagonal((1,), f), 8).concat(form_neg(redkill)),
    )
    if not witt_equal(kap, expected):
        raise InternalCheckError("kappa disagrees with <2>(8<1> - redkill)")
    if not in_In(kap, 5):
        raise InternalCheckError("kappa escapes I^5")
    if not in_In(kap, 4):
        raise InternalCheckError("kappa escapes I^4")
    return kap


def rost_class(inp: E8Input) -> dict:
    """Degree-3 invariant class of the construction, as a Witt representative.

    The class of the cup product (c, sum [Q_i]) is represented by
    <<c>> (N_1 + N_2 + N_3 + N_4) in I^3; it vanishes exactly when that
    form lies in I^4, which the degree-3 invariant detects over Q and R.
    """
    rep = form_tensor(pfister((inp.c,), inp.field), form_sum(*inp.norms()))
    return {"representative": rep, "is_zero": e3_zero(rep)}


def _witness_candidates(inp: E8Input):
    primes = set()
    for q in inp.quaternions:
        for v in (q.a, q.b):
            primes.update(p for p, _ in factorize(v))
    primes.update(p for p, _ in factorize(inp.c))
    primes = sorted(primes)[:12]
    for r in range(len(primes) + 1):
        for combo in itertools.combinations(primes, r):
            m = 1
            for p in combo:
                m *= p
            yield m
            yield -m


def find_scale_witness(inp: E8Input, lhs: QForm, rhs: QForm):
    """Search for m with lhs = <m> rhs in the Witt ring; None when not found."""
    for m in _witness_candidates(inp):
        if scaled_profile_equal(lhs, rhs, m):
            return m
    return None


def _square(q: QForm) -> QForm:
    return form_tensor(q, q)


def dwh_check(inp: E8Input) -> dict:
    """Conditional I^8 reduction of kappa, with the intermediate identities.

    Requires the degree-3 class to vanish.  Checks (i) kappa = 2<<c>>N1N2N4,
    (ii) filtration level >= 8, (iii) the same with every 3-subset of the
    algebras, (iv) the two-square identity, the annihilation identity, and
    the rescaling identity, instantiated at this input.  The scalar relating
    (Q1 - Q2) to (Q3 - Q4) is searched for; a miss is reported as not
    witnessed rather than as failure.
    """
    rc = rost_class(inp)
    if not rc["is_zero"]:
        raise ValueError("dwh_check needs a vanishing degree-3 class")
    f = inp.field
    c2 = pfister((inp.c,), f)
    norms = inp.norms()
    kap = kappa_form(inp)

    def diff(i, j):
        return norms[i].concat(form_neg(norms[j]))

    main = {}
    for subset in itertools.combinations(range(4), 3):
        prod = form_tensor(
            form_tensor(norms[subset[0]], norms[subset[1]]), norms[subset[2]]
        )
        rhs = form_repeat(form_tensor(c2, prod), 2)
        main[subset] = witt_equal(kap, rhs)

    level = i_level(kap)

    lhs12 = form_tensor(c2, diff(0, 1))
    rhs34 = form_tensor(c2, diff(2, 3))
    m = find_scale_witness(inp, lhs12, rhs34)

    sq12 = form_tensor(c2, form_tensor(diff(0, 1), diff(0, 1)))
    sq34 = form_tensor(c2, form_tensor(diff(2, 3), diff(2, 3)))
    ident_square = witt_equal(sq12, sq34)

    q1q2 = form_tensor(norms[0], norms[1])
    annihilate = witt_equal(
        form_tensor(c2, form_tensor(q1q2, diff(2, 3))),
        hyperbolic(1, f),
    )
    annihilate_via_m = None
    if m is not None:
        annihilate_via_m = witt_equal(
            form_tensor(c2, form_tensor(q1q2, diff(2, 3))),
            form_scale(form_tensor(c2, form_tensor(q1q2, diff(0, 1))), m),
        )

    rescale_lhs = form_tensor(c2, form_tensor(norms[0], _square(diff(2, 3))))
    rescale_mid = form_tensor(c2, form_tensor(norms[0], _square(diff(0, 1))))
    rescale_rhs = form_repeat(
        form_tensor(c2, form_tensor(norms[0], diff(0, 1))), 4
    )
    ident_rescale = witt_equal(rescale_lhs, rescale_mid) and witt_equal(
        rescale_mid, rescale_rhs
    )

    return {
        "main_124": main[(0, 1, 3)],
        "main_all_subsets": all(main.values()),
        "i_level": level,
        "i_level_ge_8": level >= 8,
        "m_witness": m,
        "ident_square": ident_square,
        "ident_annihilate": annihilate,
        "ident_annihilate_via_m": annihilate_via_m,
        "ident_rescale": ident_rescale,
    }


# ---------------------------------------------------------------------------
# octonion-Albert construction


@dataclass(frozen=True)
class TitsInput:
    field: str
    gamma3: tuple  # 3 entries of a 3-fold Pfister form
    phi3: tuple  # 3 entries
    phi5: tuple  # 5 entries extending phi3

    def __post_init__(self):
        if len(self.gamma3) != 3 or len(self.phi3) != 3 or len(self.phi5) != 5:
            raise ValueError("need 3, 3, and 5 Pfister entries")
        if tuple(self.phi5[:3]) != tuple(self.phi3):
            raise ValueError("phi3 must be a prefix of phi5")


def tits_construction(inp: TitsInput) -> dict:
    """Reduced Killing form and kappa of the octonion-Albert construction.

    redkill = <2>[8<1> - (4 gamma3 + 4 phi3 + <2> gamma3 (phi5 - phi3))],
    kappa = <2>(8<1> - redkill), and the order-15-part test of the degree-3
    invariant is the vanishing test of gamma3 - phi3.
    """
    f = inp.field
    g3 = pfister(inp.gamma3, f)
    p3 = pfister(inp.phi3, f)
    p5 = pfister(inp.phi5, f)
    two = QForm.diagonal((2,), f)
    eight = form_repeat(QForm.diagonal((1,), f), 8)
    inner = form_sum(
        form_repeat(g3, 4),
        form_repeat(p3, 4),
        form_tensor(two, form_tensor(g3, p5.concat(form_neg(p3)))),
    )
    redkill = form_tensor(two, eight.concat(form_neg(inner)))
    kappa = form_tensor(two, eight.concat(form_neg(redkill)))
    rost15_rep = g3.concat(form_neg(p3))
    return {
        "redkill": redkill,
        "kappa": kappa,
        "kappa_i_level": i_level(kappa),
        "rost15_zero": e3_zero(rost15_rep),
        "signature": invariants(redkill).signature,
    }


# ---------------------------------------------------------------------------
# half-spin block and the 4-Pfister corollary


def half_spin_block(inp: E8Input, m2: int = 1, m4: int = 1) -> QForm:
    """Contribution of the 128-dimensional representation to the Killing form.

    <2><c m2> sum_{i<j<l} Q'_i Q'_j Q'_l + <c m4> sum_i (<2> N_i + <6>),
    with both undetermined signs fixed to 1 by the real-signature argument.
    """
    f = inp.field
    pures = inp.pures()
    norms = inp.norms()
    first = form_tensor(
        QForm.diagonal((2 * inp.c * m2,), f), form_sum(*_triple_products(pures))
    )
    five = [
        form_tensor(QForm.diagonal((2,), f), n).concat(QForm.diagonal((6,), f))
        for n in norms
    ]
    second = form_tensor(QForm.diagonal((inp.c * m4,), f), form_sum(*five))
    out = first.concat(second)
    if out.dim != 128:
        raise InternalCheckError(f"half-spin block has dimension {out.dim}")
    return out


def example_pf4(q1_entries, q2_entries, field: str = "Q") -> dict:
    """Half-spin form for Q3 = Q1, Q4 = Q2, c = 1: must be 8 q1 q2."""
    a1, b1 = q1_entries
    a2, b2 = q2_entries
    inp = E8Input(
        field,
        Quaternion(a1, b1),
        Quaternion(a2, b2),
        Quaternion(a1, b1),
        Quaternion(a2, b2),
        1,
    )
    block = half_spin_block(inp)
    target = form_repeat(
        form_tensor(pfister((a1, b1), field), pfister((a2, b2), field)), 8
    )
    return {
        "block": block,
        "target": target,
        "witt_equal": witt_equal(block, target),
    }


# ---------------------------------------------------------------------------
# classification and reports


def _is_split(q: Quaternion, field: str) -> bool:
    return brauer_class(q, field).is_zero


def classify(inp: E8Input) -> dict:
    """Real classification by signature plus a Tits-index hint.

    The hint uses only one-directional facts: a split algebra gives
    isotropy, two split algebras or a split triple product give rank at
    least 2, a vanishing degree-3 class plus isotropy gives split, and with
    rank at least 2 the index is read off the symbol length.  Everything
    else is reported as undetermined.
    """
    rc = rost_class(inp)
    split_flags = [_is_split(q, inp.field) for q in inp.quaternions]
    nsplit = sum(split_flags)
    classes = [brauer_class(q, inp.field) for q in inp.quaternions]
    triple_split = any(
        brauer_sum(classes[i] for i in subset).is_zero
        for subset in itertools.combinations(range(4), 3)
    )
    isotropic_hint = nsplit >= 1
    rank2_hint = nsplit >= 2 or triple_split
    if isotropic_hint and rc["is_zero"]:
        hint = "split"
    elif rank2_hint:
        length = e3_symbol_length(rc["representative"])
        hint = {0: "split", 1: "kernel_D4", 2: "kernel_D6"}[length]
    else:
        hint = "undetermined"
    sig = invariants(red_killing_form(inp)).signature
    if inp.field == "R":
        real_class = REAL_CLASSES.get(sig)
        if real_class is None:
            raise InternalCheckError(f"unexpected real signature {sig}")
    else:
        real_class = "n/a"
    return {
        "signature": sig,
        "real_class": real_class,
        "index_hint": hint,
        "rost_zero": rc["is_zero"],
    }


def build_report(inp: E8Input) -> dict:
    """Full JSON-ready report for one input."""
    redkill = red_killing_form(inp)
    kap = kappa_form(inp)
    cls = classify(inp)
    return {
        "redkill": ",".join(str(e) for e in redkill.entries),
        "kappa": ",".join(str(e) for e in kap.entries),
        "kappa_i_level": i_level(kap),
        "rost_zero": cls["rost_zero"],
        "signature": cls["signature"],
        "real_class": cls["real_class"],
        "index_hint": cls["index_hint"],
    }
