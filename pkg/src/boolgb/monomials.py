"""Monomial and polynomial arithmetic over boolean polynomial rings.

The ambient ring is GF(2)[x1..xn] modulo the field polynomials xi^2 + xi,
so monomials are squarefree and are stored as int bitmasks: bit v encodes
the variable x(v+1).  The mask 0 is the unit monomial 1.  Multiplication
collapses squares, which makes it a bitwise or.

The monomial ordering is graded reverse lexicographic with x1 the largest
variable.  Since bit 0 is x1, two distinct masks of equal degree compare
reversed as integers: the smaller mask is the larger monomial.

lm() of the zero polynomial is the distinguished value None; the constant
monomial 1 is the mask 0, so callers must test `lm is None`, not truth.
"""

from __future__ import annotations

MAX_VARS = 128


def mono_deg(m: int) -> int:
    """Degree of a squarefree monomial."""
    return m.bit_count()


def mono_mul(a: int, b: int) -> int:
    """Product in the quotient ring: squares collapse, so a union."""
    return a | b


def mono_divides(a: int, b: int) -> bool:
    """True iff a divides b, i.e. vars(a) is a subset of vars(b)."""
    return a & ~b == 0


def mono_lcm(a: int, b: int) -> int:
    return a | b


def mono_quot(b: int, a: int) -> int:
    """Quotient b/a of squarefree monomials; a must divide b."""
    if a & ~b:
        raise ValueError("quotient of non-divisor")
    return b & ~a


def mono_from_indices(indices) -> int:
    """Build a monomial from 1-based variable indices."""
    m = 0
    for i in indices:
        if i < 1:
            raise ValueError("variable index must be >= 1")
        m |= 1 << (i - 1)
    return m


def mono_indices(m: int) -> tuple[int, ...]:
    """1-based variable indices of a monomial, ascending."""
    out = []
    v = 1
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return tuple(out)


def mono_str(m: int) -> str:
    if m == 0:
        return "1"
    return "*".join("x%d" % i for i in mono_indices(m))


def grevlex_key(m: int) -> tuple[int, int]:
    """Sort key ascending in grevlex: by degree, then reversed as ints."""
    return (m.bit_count(), -m)


def grevlex_cmp(a: int, b: int) -> int:
    """-1, 0 or 1 as a precedes, equals or follows b in grevlex."""
    if a == b:
        return 0
    return -1 if grevlex_key(a) < grevlex_key(b) else 1


# Products of two squarefree monomials, kept before square collapse, are
# represented as (support, doubled) mask pairs: `support` holds every
# variable present, `doubled` the variables of exponent 2.  They are needed
# wherever the ordering must see the uncollapsed product.

def rmono_mul(a: int, b: int) -> tuple[int, int]:
    """Uncollapsed product of squarefree monomials as (support, doubled)."""
    return (a | b, a & b)


def rmono_deg(r: tuple[int, int]) -> int:
    return r[0].bit_count() + r[1].bit_count()


def rmono_cmp(a: tuple[int, int], b: tuple[int, int]) -> int:
    """Grevlex comparison of uncollapsed products (exponents at most 2)."""
    if a == b:
        return 0
    da, db = rmono_deg(a), rmono_deg(b)
    if da != db:
        return -1 if da < db else 1
    diff = (a[0] ^ b[0]) | (a[1] ^ b[1])
    bit = 1 << (diff.bit_length() - 1)
    ea = (1 if a[0] & bit else 0) + (1 if a[1] & bit else 0)
    eb = (1 if b[0] & bit else 0) + (1 if b[1] & bit else 0)
    # at the last differing variable the smaller exponent wins
    return 1 if ea < eb else -1


class BoolPoly:
    """A GF(2) sum of distinct squarefree monomials.

    Terms are stored as a tuple of masks sorted descending in grevlex, so
    terms[0] is the leading monomial.  Construction collapses duplicate
    masks mod 2, making BoolPoly((m, m)) the zero polynomial.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        seen = set()
        for m in terms:
            if m in seen:
                seen.discard(m)
            else:
                seen.add(m)
        object.__setattr__(self, "terms", tuple(
            sorted(seen, key=grevlex_key, reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("BoolPoly is immutable")

    @property
    def lm(self):
        """Leading monomial mask, or None for the zero polynomial."""
        return self.terms[0] if self.terms else None

    @property
    def tail(self) -> "BoolPoly":
        return BoolPoly(self.terms[1:])

    def mul_mono(self, t: int) -> "BoolPoly":
        return mono_poly_mul(t, self)

    def __add__(self, other: "BoolPoly") -> "BoolPoly":
        return BoolPoly(set(self.terms) ^ set(other.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, BoolPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(mono_str(m) for m in self.terms)

    def __repr__(self) -> str:
        return "BoolPoly(%s)" % self

    def max_var(self) -> int:
        """Largest 1-based variable index used, 0 if constant or zero."""
        return max((m.bit_length() for m in self.terms), default=0)


def poly_add(f: BoolPoly, g: BoolPoly) -> BoolPoly:
    """GF(2) sum: symmetric difference of the term sets."""
    return f + g


def mono_poly_mul(t: int, f: BoolPoly) -> BoolPoly:
    """Multiply every term by t; merged products cancel mod 2."""
    if t == 0:
        return f
    return BoolPoly(m | t for m in f.terms)


def rem(h: BoolPoly, F) -> BoolPoly:
    """Full normal form of h modulo the polynomials in F.

    Deterministic division: scan terms from the largest down, rewrite the
    first term divisible by some lm(f) using the first such f in list
    order, then restart the scan.  The result has no term divisible by any
    lm(f), f in F nonzero.
    """
    leads = [(f.lm, f) for f in F if f.lm is not None]
    if not leads:
        return h
    changed = True
    while changed:
        changed = False
        for m in h.terms:
            for lmf, f in leads:
                if mono_divides(lmf, m):
                    h = h + mono_poly_mul(mono_quot(m, lmf), f)
                    changed = True
                    break
            if changed:
                break
    return h


def reduce_basis(G) -> list[BoolPoly]:
    """Unique reduced Groebner basis from a Groebner basis G.

    Drops redundant leads, interreduces the rest to a fixpoint, and
    returns the result sorted descending by leading monomial.  Used as the
    canonical form when comparing bases.
    """
    polys = sorted({p for p in G if p.lm is not None},
                   key=lambda p: (grevlex_key(p.lm), p.terms))
    minimal = []
    for p in polys:
        if not any(mono_divides(q.lm, p.lm) for q in minimal):
            minimal.append(p)
    done = False
    while not done:
        done = True
        for i, p in enumerate(minimal):
            r = rem(p, minimal[:i] + minimal[i + 1:])
            if r != p:
                minimal[i] = r
                done = False
    minimal = [p for p in minimal if p.lm is not None]
    minimal.sort(key=lambda p: grevlex_key(p.lm), reverse=True)
    return minimal
