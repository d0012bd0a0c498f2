"""Symbolic preprocessing and batched elimination of J-pair rounds.

A round takes every queued J-pair of the current degree, realizes the
products, and closes the row set under reduction: for each monomial that
appears, the basis is searched for one admissible reducer, whose shifted
copy joins the matrix.  Admissibility reuses the signature criteria, so
the subsequent elimination never needs a pivot the theory would forbid.
"""

from __future__ import annotations

from .gf2matrix import EliminationResult, SigMatrix, poly_to_row, row_to_poly, sig_ple
from .monomials import grevlex_key, mono_divides, mono_poly_mul
from .signatures import (
    RuleTable,
    SyzygySet,
    add_syzygy,
    is_covered,
    sig_key,
    sig_mul,
    super_top_reducible,
    syz_reject,
)


class MacaulayBatch:
    """Deduplicated matrix rows of one round plus their column support."""

    __slots__ = ("rows", "monos", "done")

    def __init__(self, rows, monos, done):
        self.rows = rows
        self.monos = monos
        self.done = done

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.monos)


def _best_reducer(m: int, G, H: SyzygySet, rules: RuleTable):
    """Admissible member whose shifted lead is m, smallest signature first."""
    best = None
    for g in G:
        lmg = g.poly.lm
        if not mono_divides(lmg, m):
            continue
        t = m & ~lmg
        s2 = sig_mul(t, g.sig)
        if s2 is None or syz_reject(s2, H) or is_covered(s2, (m, 0), rules):
            continue
        key = (sig_key(s2), grevlex_key(lmg), g.serial)
        if best is None or key < best[1]:
            best = ((s2, t, g), key)
    return best[0] if best else None


def symbolic_process(pairs, G, H: SyzygySet, rules: RuleTable) -> MacaulayBatch:
    """Realize the batch of J-pairs and close it under one reducer per
    monomial.

    Every monomial of every row is searched, including the row leads
    themselves, so a J-pair row whose lead is already a basis lead picks
    up the matching basis row.  Rows sharing a signature are merged down
    to the one with the smallest lead.
    """
    rows = [(jp.sig, jp.realize()) for jp in pairs]
    monos = set()
    for _, p in rows:
        monos.update(p.terms)
    done = set()
    pending = set(monos)
    while pending:
        m = max(pending, key=grevlex_key)
        pending.discard(m)
        done.add(m)
        found = _best_reducer(m, G, H, rules)
        if found is None:
            continue
        s2, t, g = found
        realized = mono_poly_mul(t, g.poly)
        rows.append((s2, realized))
        fresh = set(realized.terms) - done
        monos.update(fresh)
        pending.update(fresh)

    def row_key(item):
        idx = item[0]
        s, p = item[1]
        lead = p.lm
        lm_key = (-1, 0) if lead is None else grevlex_key(lead)
        return (sig_key(s), lm_key, idx)

    ordered = sorted(enumerate(rows), key=row_key)
    unique = []
    last_sig = None
    for _, (s, p) in ordered:
        if s == last_sig:
            continue
        unique.append((s, p))
        last_sig = s
    return MacaulayBatch(unique, monos, done)


def eliminate_batch(P: MacaulayBatch, G, H: SyzygySet, rules: RuleTable):
    """Reduce the batch and split the surviving rows.

    Returns (new_rows, zero_sigs): new_rows are the nonzero reduced rows
    that are not super top-reducible by G, ascending in signature, as
    (sig, poly) pairs; zero_sigs are the signatures of vanished rows,
    which are also recorded in H.
    """
    col_monos = sorted(P.monos, key=grevlex_key, reverse=True)
    col_index = {m: j for j, m in enumerate(col_monos)}
    sigs = [s for s, _ in P.rows]
    ints = [poly_to_row(p, col_index) for _, p in P.rows]
    result: EliminationResult = sig_ple(SigMatrix(sigs, ints, col_monos))
    new_rows = []
    zero_sigs = []
    for s, r in zip(result.sigs, result.rows):
        if r == 0:
            zero_sigs.append(s)
            add_syzygy(H, s)
            continue
        h = row_to_poly(r, col_monos)
        if super_top_reducible(s, h, G):
            continue
        new_rows.append((s, h))
    new_rows.sort(key=lambda sp: sig_key(sp[0]))
    zero_sigs.sort(key=sig_key)
    return new_rows, zero_sigs
