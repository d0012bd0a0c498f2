"""Classic Buchberger algorithm over boolean polynomial rings.

Kept deliberately independent of the signature engine: it shares only the
monomial arithmetic, so the two implementations can check each other.
Pairs against the implicit field polynomials x_v^2 + x_v are handled for
every variable of a leading monomial; the S-polynomial with x_v^2 + x_v
works out to x_v * tail(f) + lm(f).
"""

from __future__ import annotations

import heapq
import random

from .monomials import (
    BoolPoly,
    mono_deg,
    mono_divides,
    mono_lcm,
    mono_poly_mul,
    mono_quot,
    reduce_basis,
    rem,
)


def s_polynomial(f: BoolPoly, g: BoolPoly) -> BoolPoly:
    lcm = mono_lcm(f.lm, g.lm)
    return (mono_poly_mul(mono_quot(lcm, f.lm), f)
            + mono_poly_mul(mono_quot(lcm, g.lm), g))


def field_s_polynomial(f: BoolPoly, v: int) -> BoolPoly:
    """S-polynomial of f with x_v^2 + x_v; v is a bit mask, v | lm(f)."""
    return mono_poly_mul(v, f.tail) + BoolPoly([f.lm])


def buchberger(F, shuffle_seed=None) -> list[BoolPoly]:
    """Groebner basis of F plus the field relations, raw (not reduced).

    Pairs are popped by ascending lcm degree.  The product criterion
    skips coprime leads, and a pair is dropped when a third basis element
    divides its lcm and both side pairs were already treated.
    """
    basis = [f for f in F if f.lm is not None]
    if shuffle_seed is not None:
        basis = list(basis)
        random.Random(shuffle_seed).shuffle(basis)
    if any(f.lm == 0 for f in basis):
        return [BoolPoly([0])]

    heap = []
    counter = 0
    done = set()

    def push_pairs(j: int) -> None:
        nonlocal counter
        lmj = basis[j].lm
        for i in range(j):
            deg = mono_deg(mono_lcm(basis[i].lm, lmj))
            counter += 1
            heapq.heappush(heap, (deg, counter, i, j))
        m = lmj
        while m:
            v = m & -m
            m ^= v
            counter += 1
            heapq.heappush(heap, (mono_deg(lmj) + 1, counter, -v, j))

    for j in range(len(basis)):
        push_pairs(j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if i < 0:
            s = field_s_polynomial(basis[j], -i)
        else:
            fi, fj = basis[i], basis[j]
            lcm = mono_lcm(fi.lm, fj.lm)
            if fi.lm & fj.lm == 0:
                done.add((i, j))
                continue
            chained = False
            for k in range(len(basis)):
                if k in (i, j) or not mono_divides(basis[k].lm, lcm):
                    continue
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    chained = True
                    break
            done.add((i, j))
            if chained:
                continue
            s = s_polynomial(fi, fj)
        r = rem(s, basis)
        if r.lm is None:
            continue
        if r.lm == 0:
            return [BoolPoly([0])]
        basis.append(r)
        push_pairs(len(basis) - 1)
    return basis


def gb_equal(A, B) -> bool:
    """Compare two Groebner bases of the same ideal via reduced form."""
    return reduce_basis(A) == reduce_basis(B)


def verify_groebner(G, F=None) -> bool:
    """Directly certify that G is a Groebner basis (field relations
    included) and, when F is given, that every f in F reduces to zero.

    Checks every ordinary and field S-polynomial of G for reduction to
    zero; quadratic in len(G), meant for tests and the verify command.
    """
    G = [g for g in G if g.lm is not None]
    if any(g.lm == 0 for g in G):
        return True
    for j in range(len(G)):
        for i in range(j):
            if rem(s_polynomial(G[i], G[j]), G).lm is not None:
                return False
        m = G[j].lm
        while m:
            v = m & -m
            m ^= v
            if rem(field_s_polynomial(G[j], v), G).lm is not None:
                return False
    if F is not None:
        for f in F:
            if rem(f, G).lm is not None:
                return False
    return True
