"""Signatures, J-pairs and rejection criteria for signature-based runs.

A signature x^a*e_i is a module monomial: `index` is the 1-based position
of the originating generator, `mono` a squarefree monomial mask.  The
module order is position-over-term: a smaller index always wins, ties are
broken by grevlex on the monomial part.

Multiplying a signature by a monomial that meets its variables would leave
the squarefree module (the product has a square), so sig_mul returns None
for such products and the callers drop them; this replaces the Koszul
syzygies of the field polynomials.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

from .monomials import (
    BoolPoly,
    mono_deg,
    mono_divides,
    mono_lcm,
    mono_poly_mul,
    mono_quot,
    mono_str,
    rmono_cmp,
    rmono_mul,
)


class Sig(NamedTuple):
    index: int
    mono: int


def sig_key(s: Sig) -> tuple[int, int, int]:
    """Sort key ascending in the module order (position over term)."""
    return (-s.index, s.mono.bit_count(), -s.mono)


def sig_cmp(a: Sig, b: Sig) -> int:
    if a == b:
        return 0
    return -1 if sig_key(a) < sig_key(b) else 1


def sig_mul(t: int, s: Sig) -> Optional[Sig]:
    """t * s, or None when the product would square a variable."""
    if t & s.mono:
        return None
    return Sig(s.index, s.mono | t)


def sig_str(s: Sig) -> str:
    if s.mono == 0:
        return "e%d" % s.index
    return "%s*e%d" % (mono_str(s.mono), s.index)


class LabeledPoly:
    """A basis member carrying its signature.

    src_deg is the total degree of the generator the signature index
    refers to; serial is a global creation counter used for deterministic
    tie-breaking.
    """

    __slots__ = ("sig", "poly", "src_deg", "serial")

    def __init__(self, sig: Sig, poly: BoolPoly, src_deg: int, serial: int):
        self.sig = sig
        self.poly = poly
        self.src_deg = src_deg
        self.serial = serial

    def __repr__(self) -> str:
        return "LabeledPoly(%s, %s)" % (sig_str(self.sig), self.poly)


class JPair:
    """The higher-signature half of a critical pair, kept unevaluated.

    The pair stands for the product t * src.poly with signature
    t * src.sig; degree is the degree of that product before squares
    collapse, so deg(t) + deg(lm(src.poly)).  kind is "ordinary" for
    pairs of two basis members and "field" for pairs against a field
    polynomial x_v^2 + x_v.
    """

    __slots__ = ("t", "src", "sig", "degree", "kind")

    def __init__(self, t: int, src: LabeledPoly, sig: Sig, degree: int,
                 kind: str):
        self.t = t
        self.src = src
        self.sig = sig
        self.degree = degree
        self.kind = kind

    def realize(self) -> BoolPoly:
        return mono_poly_mul(self.t, self.src.poly)

    def __repr__(self) -> str:
        return "JPair(%s, t=%s, deg=%d, %s)" % (
            sig_str(self.sig), mono_str(self.t), self.degree, self.kind)


def make_jpair(a: LabeledPoly, b: LabeledPoly) -> Optional[JPair]:
    """J-pair of two members: the side with the larger shifted signature.

    The shifts t_a, t_b are the lcm cofactors of the leading monomials.
    Sides are compared as module monomials before squares collapse; equal
    sides or a square in the winning signature yield no pair.
    """
    lma, lmb = a.poly.lm, b.poly.lm
    lcm = mono_lcm(lma, lmb)
    ta, tb = mono_quot(lcm, lma), mono_quot(lcm, lmb)
    if a.sig.index != b.sig.index:
        winner = a if a.sig.index < b.sig.index else b
    else:
        c = rmono_cmp(rmono_mul(ta, a.sig.mono), rmono_mul(tb, b.sig.mono))
        if c == 0:
            return None
        winner = a if c > 0 else b
    t = ta if winner is a else tb
    sig = sig_mul(t, winner.sig)
    if sig is None:
        return None
    degree = mono_deg(t) + mono_deg(winner.poly.lm)
    return JPair(t, winner, sig, degree, "ordinary")


def field_jpairs(p: LabeledPoly, n_vars: int) -> list[JPair]:
    """J-pairs of p against the field polynomials x_v^2 + x_v.

    Only variables of lm(p) give a pair falling on the p side with a
    squarefree signature; multipliers already present in the signature
    are dropped by the square rule.
    """
    lm = p.poly.lm
    deg = mono_deg(lm)
    out = []
    m = lm
    while m:
        t = m & -m
        m ^= t
        sig = sig_mul(t, p.sig)
        if sig is not None:
            out.append(JPair(t, p, sig, deg + 1, "field"))
    return out


class SyzygySet:
    """Known syzygy signatures, kept divisor-minimal per index."""

    __slots__ = ("by_index",)

    def __init__(self):
        self.by_index: dict[int, list[int]] = {}

    def add(self, s: Sig) -> None:
        masks = self.by_index.setdefault(s.index, [])
        for m in masks:
            if mono_divides(m, s.mono):
                return
        masks[:] = [m for m in masks if not mono_divides(s.mono, m)]
        masks.append(s.mono)

    def rejects(self, s: Sig) -> bool:
        """True when some stored signature divides s."""
        return any(mono_divides(m, s.mono)
                   for m in self.by_index.get(s.index, ()))

    def signatures(self) -> list[Sig]:
        return [Sig(i, m) for i in sorted(self.by_index)
                for m in self.by_index[i]]


def syz_reject(s: Sig, H: SyzygySet) -> bool:
    return H.rejects(s)


def add_syzygy(H: SyzygySet, s: Sig) -> None:
    H.add(s)


def koszul_update(H: SyzygySet, new: LabeledPoly, G) -> None:
    """Record the leading signatures of product syzygies of `new` with G.

    In a boolean ring every polynomial is idempotent, so (1 + f) * (u, f)
    is a syzygy with leading signature lm(f)*sig(f); it is recorded when
    that product stays squarefree.  For each member g the Koszul syzygy
    g*new - new*g has leading signature max(lm(g)*sig(new), lm(new)*sig(g))
    in the module order; equal sides cancel and squared maxima are already
    handled by the square rule.
    """
    k, gamma = new.sig
    lm_new = new.poly.lm
    if lm_new and not gamma & lm_new:
        H.add(Sig(k, gamma | lm_new))
    for g in G:
        j, beta = g.sig
        ra = rmono_mul(g.poly.lm, gamma)
        rb = rmono_mul(lm_new, beta)
        if k != j:
            idx, r = (k, ra) if k < j else (j, rb)
        else:
            c = rmono_cmp(ra, rb)
            if c == 0:
                continue
            idx, r = (k, ra) if c > 0 else (j, rb)
        if r[1]:
            continue
        H.add(Sig(idx, r[0]))


class RuleTable:
    """Signature/lead pairs of all members, for the rewriting criterion."""

    __slots__ = ("by_index",)

    def __init__(self):
        self.by_index: dict[int, list[tuple[int, int]]] = {}

    def add(self, member: LabeledPoly) -> None:
        self.by_index.setdefault(member.sig.index, []).append(
            (member.sig.mono, member.poly.lm))

    def entries(self, index: int):
        return self.by_index.get(index, ())


def is_covered(s: Sig, target: tuple[int, int], rules: RuleTable) -> bool:
    """Rewriting check for a pair with signature s and product lead target.

    target is the lead of the pair's polynomial part before squares
    collapse, as a (support, doubled) monomial.  A member with signature
    u*e_i dividing s covers the pair when shifting its lead to signature s
    lands strictly below target, again comparing before squares collapse;
    collapsing here would invent smaller leads and reject needed pairs.
    """
    mono = s.mono
    for u, lmg in rules.entries(s.index):
        if mono_divides(u, mono):
            if rmono_cmp(rmono_mul(mono & ~u, lmg), target) < 0:
                return True
    return False


def regular_top_reduce(s: Sig, f: BoolPoly, G) -> BoolPoly:
    """Top-reduce f by members whose shifted signature stays below s.

    Used by the one-pair-at-a-time pipeline.  Among eligible reducers the
    one with the smallest shifted signature (then smallest serial) is
    applied; stops when the lead is irreducible or f is zero.
    """
    while f.lm is not None:
        m = f.lm
        best = None
        for g in G:
            lmg = g.poly.lm
            if not mono_divides(lmg, m):
                continue
            t = m & ~lmg
            s2 = sig_mul(t, g.sig)
            if s2 is None or sig_cmp(s2, s) >= 0:
                continue
            key = (sig_key(s2), g.serial)
            if best is None or key < best[0]:
                best = (key, t, g)
        if best is None:
            return f
        f = f + mono_poly_mul(best[1], best[2].poly)
    return f


def super_top_reducible(s: Sig, h: BoolPoly, G) -> bool:
    """True when some member reduces lm(h) with shifted signature == s."""
    m = h.lm
    for g in G:
        lmg = g.poly.lm
        if mono_divides(lmg, m):
            if sig_mul(m & ~lmg, g.sig) == s:
                return True
    return False


def is_mutant(s: Sig, h: BoolPoly, src_deg: int) -> bool:
    """True when h dropped degree: deg(sig) + deg(source) > deg(h)."""
    return mono_deg(s.mono) + src_deg > mono_deg(h.lm)
