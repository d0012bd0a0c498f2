"""Bit-packed GF(2) matrices whose row elimination respects signatures.

Rows are Python ints: bit j of a row is the coefficient of col_monos[j],
with col_monos sorted descending in grevlex.  The leading term of a row is
therefore its lowest set bit.  Rows enter strictly ascending in signature
and elimination must pick, for every pivot column, the pending row of
smallest signature, so that every row keeps a signature-correct lead.

Two implementations are exposed: naive_sig_gauss is a literal
column-by-column sweep used as the reference, sig_ple reproduces it
faster (an insertion echelon form for small matrices, a numpy uint64
packed sweep for large ones).  ple_rows is the same packed sweep without
the signature bookkeeping, used as the speed baseline.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

import numpy as np

from .monomials import BoolPoly, grevlex_key
from .signatures import Sig, sig_key, sig_str

_PACKED_CUTOFF = 1 << 16


class SigMatrix:
    """Rows with strictly ascending signatures over a fixed column set."""

    __slots__ = ("sigs", "rows", "col_monos", "ncols")

    def __init__(self, sigs, rows, col_monos):
        sigs = list(sigs)
        rows = list(rows)
        col_monos = list(col_monos)
        if len(sigs) != len(rows):
            raise ValueError("sigs and rows differ in length")
        for a, b in zip(sigs, sigs[1:]):
            if sig_key(a) >= sig_key(b):
                raise ValueError("signatures not strictly ascending")
        for a, b in zip(col_monos, col_monos[1:]):
            if grevlex_key(a) <= grevlex_key(b):
                raise ValueError("columns not strictly descending")
        ncols = len(col_monos)
        for r in rows:
            if r < 0 or r >> ncols:
                raise ValueError("row has bits outside the column range")
        self.sigs = sigs
        self.rows = rows
        self.col_monos = col_monos
        self.ncols = ncols


class EliminationResult(NamedTuple):
    """Pivot rows in lead-column order, then zero rows ascending in sig."""

    sigs: list
    rows: list
    leads: list


def poly_to_row(p: BoolPoly, col_index: dict) -> int:
    r = 0
    for m in p.terms:
        r |= 1 << col_index[m]
    return r


def row_to_poly(row: int, col_monos) -> BoolPoly:
    terms = []
    j = 0
    while row:
        if row & 1:
            terms.append(col_monos[j])
        row >>= 1
        j += 1
    return BoolPoly(terms)


def dump(M: SigMatrix) -> str:
    """One line per row: signature, tab, bits with column 0 leftmost."""
    lines = []
    for s, r in zip(M.sigs, M.rows):
        bits = "".join("1" if r >> j & 1 else "0" for j in range(M.ncols))
        lines.append("%s\t%s" % (sig_str(s), bits))
    return "\n".join(lines)


def naive_sig_gauss(M: SigMatrix) -> EliminationResult:
    """Reference sweep: per column, the pending row of smallest signature
    becomes the pivot and clears that column from all other pending rows.

    Pending rows keep their ascending-signature order, so the first
    pending row holding the column bit is the minimal-signature choice.
    """
    rows = list(M.rows)
    pend = list(range(len(rows)))
    pivots = []
    for c in range(M.ncols):
        bit = 1 << c
        piv = None
        for i in pend:
            if rows[i] & bit:
                piv = i
                break
        if piv is None:
            continue
        pend.remove(piv)
        pr = rows[piv]
        for i in pend:
            if rows[i] & bit:
                rows[i] ^= pr
        pivots.append((c, piv))
    sigs = [M.sigs[i] for _, i in pivots] + [M.sigs[i] for i in pend]
    out = [rows[i] for _, i in pivots] + [rows[i] for i in pend]
    leads: list[Optional[int]] = [c for c, _ in pivots] + [None] * len(pend)
    return EliminationResult(sigs, out, leads)


def _eliminate_insertion(M: SigMatrix) -> EliminationResult:
    # rows arrive ascending in signature; claimed pivots never change, so
    # each row reduces against smaller-signature leads only
    pivots: dict[int, tuple[int, int]] = {}
    zeros = []
    for i, r in enumerate(M.rows):
        while r:
            lead = (r & -r).bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = (r, i)
                break
            r ^= p[0]
        else:
            zeros.append(i)
    items = sorted(pivots.items())
    sigs = [M.sigs[i] for _, (_, i) in items] + [M.sigs[i] for i in zeros]
    rows = [r for _, (r, _) in items] + [0] * len(zeros)
    leads: list[Optional[int]] = [c for c, _ in items] + [None] * len(zeros)
    return EliminationResult(sigs, rows, leads)


def _pack(rows, ncols: int) -> np.ndarray:
    words = max(1, (ncols + 63) // 64)
    buf = b"".join(r.to_bytes(words * 8, "little") for r in rows)
    return np.frombuffer(buf, dtype="<u8").reshape(len(rows), words).copy()


def _unpack(word_row: np.ndarray) -> int:
    return int.from_bytes(word_row.tobytes(), "little")


def _eliminate_packed(M: SigMatrix) -> EliminationResult:
    A = _pack(M.rows, M.ncols)
    pend = np.ones(len(M.rows), dtype=bool)
    pivots = []
    one = np.uint64(1)
    for c in range(M.ncols):
        w, s = c >> 6, np.uint64(c & 63)
        cand = pend & ((A[:, w] >> s) & one == one)
        if not cand.any():
            continue
        piv = int(cand.argmax())
        cand[piv] = False
        if cand.any():
            A[cand] ^= A[piv]
        pend[piv] = False
        pivots.append((c, piv))
    zeros = np.flatnonzero(pend).tolist()
    sigs = [M.sigs[i] for _, i in pivots] + [M.sigs[i] for i in zeros]
    rows = [_unpack(A[i]) for _, i in pivots] + [0] * len(zeros)
    leads: list[Optional[int]] = [c for c, _ in pivots] + [None] * len(zeros)
    return EliminationResult(sigs, rows, leads)


def sig_ple(M: SigMatrix, method: str = "auto") -> EliminationResult:
    """Signature-respecting PLE reduction of M.

    Produces the same result as naive_sig_gauss: every pivot row is the
    minimal-signature pending row for its column and keeps its tail, zero
    rows witness syzygy signatures.
    """
    if method == "auto":
        big = len(M.rows) * M.ncols >= _PACKED_CUTOFF
        method = "packed" if big else "insertion"
    if method == "insertion":
        return _eliminate_insertion(M)
    if method == "packed":
        return _eliminate_packed(M)
    raise ValueError("unknown method %r" % method)


def ple_rows(rows, ncols: int) -> list[int]:
    """Plain PLE with no signature constraint; nonzero rows by lead."""
    if not rows:
        return []
    if len(rows) * ncols >= _PACKED_CUTOFF:
        A = _pack(rows, ncols)
        pend = np.ones(len(rows), dtype=bool)
        pivots = []
        one = np.uint64(1)
        for c in range(ncols):
            w, s = c >> 6, np.uint64(c & 63)
            cand = pend & ((A[:, w] >> s) & one == one)
            if not cand.any():
                continue
            piv = int(cand.argmax())
            cand[piv] = False
            if cand.any():
                A[cand] ^= A[piv]
            pend[piv] = False
            pivots.append(piv)
        return [_unpack(A[i]) for i in pivots]
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            lead = (r & -r).bit_length() - 1
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = r
                break
            r ^= p
    return [r for _, r in sorted(pivots.items())]
