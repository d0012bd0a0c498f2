"""Signature-driven Groebner basis engine for boolean polynomial rings.

The engine processes J-pairs by ascending (degree, signature).  The
default pipeline pops all pairs of the minimal degree, closes them into a
matrix and eliminates the whole batch; the sequential pipeline pops one
pair at a time and reduces it polynomially, which is slower but mirrors
the textbook loop and is kept for cross-checking.

With algo="mgvw" a reduced row whose degree dropped below the degree of
signature times source generator (a mutant) is promoted to a fresh
generator with a unit signature instead of being inserted as an ordinary
member, provided its degree is under cfg.deg_limit and it is not already
reducible to zero by the current generators.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field, replace
from typing import Callable, NamedTuple, Optional

from .monomials import BoolPoly, mono_deg, mono_mul, reduce_basis, rem, rmono_mul
from .signatures import (
    JPair,
    LabeledPoly,
    RuleTable,
    Sig,
    SyzygySet,
    field_jpairs,
    is_covered,
    is_mutant,
    koszul_update,
    make_jpair,
    regular_top_reduce,
    sig_key,
    super_top_reducible,
    syz_reject,
)
from .symbolic import eliminate_batch, symbolic_process


class EngineAbort(Exception):
    """Raised when a safety cap (rounds or degree) is exceeded."""


@dataclass
class EngineConfig:
    algo: str = "gvw"
    deg_limit: int = 4
    max_rounds: int = 1000000
    max_degree: Optional[int] = None
    pipeline: str = "matrix"
    n_vars: Optional[int] = None
    trace: Optional[Callable] = None


class TraceEvent(NamedTuple):
    sig: Optional[Sig]
    lm: Optional[int]
    degree: int
    action: str
    poly: Optional[BoolPoly] = None


@dataclass
class RoundStats:
    degree: int
    pairs: int
    rejected_syz: int
    rejected_rew: int
    rows: int
    cols: int
    new: int
    zero: int


class MaxMatrix(NamedTuple):
    rows: int
    cols: int
    degree: int


@dataclass
class RunStats:
    algo: str
    n_vars: int
    deg_limit: int
    rounds: list = field(default_factory=list)
    mutants_appended: int = 0
    max_matrix: MaxMatrix = MaxMatrix(0, 0, 0)
    basis_size: int = 0
    reduced_basis_size: int = 0
    wall_ms: float = 0.0


class JPairQueue:
    """Min-heap of J-pairs keyed by (degree, signature, creation order)."""

    __slots__ = ("heap", "seen", "counter")

    def __init__(self):
        self.heap = []
        self.seen = set()
        self.counter = 0

    def push(self, jp: JPair) -> None:
        key = (jp.sig, jp.src.serial, jp.t)
        if key in self.seen:
            return
        self.seen.add(key)
        self.counter += 1
        heapq.heappush(self.heap, (jp.degree, sig_key(jp.sig), self.counter, jp))

    def pop_min(self) -> JPair:
        return heapq.heappop(self.heap)[3]

    def select_batch(self) -> tuple[int, list]:
        """Remove and return all pairs of the current minimal degree."""
        degree = self.heap[0][0]
        batch = []
        while self.heap and self.heap[0][0] == degree:
            batch.append(heapq.heappop(self.heap)[3])
        return degree, batch

    def __len__(self) -> int:
        return len(self.heap)


class Engine:
    def __init__(self, F, cfg: EngineConfig):
        self.cfg = cfg
        polys = [f for f in F if f.lm is not None]
        self.trivial = any(f.lm == 0 for f in polys)
        self.generators: list[BoolPoly] = polys
        self.gen_degs: list[int] = [mono_deg(f.lm) for f in polys]
        inferred = max((f.max_var() for f in polys), default=1)
        self.n_vars = cfg.n_vars if cfg.n_vars is not None else max(inferred, 1)
        self.max_degree = (cfg.max_degree if cfg.max_degree is not None
                           else 2 * self.n_vars)
        self.G: list[LabeledPoly] = []
        self.H = SyzygySet()
        self.rules = RuleTable()
        self.queue = JPairQueue()
        self.serial = 0
        self.stats = RunStats(cfg.algo, self.n_vars, cfg.deg_limit)

    def _trace(self, sig, lm, degree, action, poly=None):
        if self.cfg.trace is not None:
            self.cfg.trace(TraceEvent(sig, lm, degree, action, poly))

    def insert_member(self, sig: Sig, poly: BoolPoly, src_deg: int) -> None:
        self.serial += 1
        member = LabeledPoly(sig, poly, src_deg, self.serial)
        koszul_update(self.H, member, self.G)
        for g in self.G:
            jp = make_jpair(member, g)
            if jp is not None:
                self.queue.push(jp)
        for jp in field_jpairs(member, self.n_vars):
            self.queue.push(jp)
        self.G.append(member)
        self.rules.add(member)
        self._trace(sig, poly.lm, mono_deg(sig.mono) + src_deg, "basis", poly)

    def append_generator(self, h: BoolPoly) -> None:
        self.generators.append(h)
        deg = mono_deg(h.lm)
        self.gen_degs.append(deg)
        self.insert_member(Sig(len(self.generators), 0), h, deg)

    def _mutant_gate(self, sig: Sig, h: BoolPoly) -> bool:
        """Promote h to a generator when it passes the mutant tests."""
        if self.cfg.algo != "mgvw":
            return False
        src_deg = self.gen_degs[sig.index - 1]
        if not is_mutant(sig, h, src_deg):
            return False
        if mono_deg(h.lm) >= self.cfg.deg_limit:
            return False
        r = rem(h, self.generators)
        if r.lm is None:
            return False
        self._trace(sig, h.lm, mono_deg(sig.mono) + src_deg, "mutant", h)
        self.stats.mutants_appended += 1
        self.append_generator(r)
        return True

    def _bump_max_matrix(self, degree: int, rows: int, cols: int) -> None:
        cand = MaxMatrix(rows, cols, degree)
        cur = self.stats.max_matrix
        if (cand.degree, cand.rows, cand.cols) > (cur.degree, cur.rows, cur.cols):
            self.stats.max_matrix = cand

    def _filter_batch(self, batch):
        survivors = []
        rej_syz = rej_rew = 0
        for jp in batch:
            if syz_reject(jp.sig, self.H):
                rej_syz += 1
                self._trace(jp.sig, mono_mul(jp.t, jp.src.poly.lm), jp.degree,
                            "reject-syzygy")
                continue
            if is_covered(jp.sig, rmono_mul(jp.t, jp.src.poly.lm), self.rules):
                rej_rew += 1
                self._trace(jp.sig, mono_mul(jp.t, jp.src.poly.lm), jp.degree,
                            "reject-cover")
                continue
            survivors.append(jp)
        return survivors, rej_syz, rej_rew

    def _run_matrix(self) -> None:
        rounds = 0
        while self.queue:
            if rounds >= self.cfg.max_rounds:
                raise EngineAbort("round limit %d exceeded" % self.cfg.max_rounds)
            degree, batch = self.queue.select_batch()
            if degree > self.max_degree:
                raise EngineAbort("degree limit %d exceeded" % self.max_degree)
            rounds += 1
            survivors, rej_syz, rej_rew = self._filter_batch(batch)
            nrows = ncols = 0
            new_rows, zero_sigs, super_sigs = [], [], []
            if survivors:
                self._trace(None, None, degree, "round")
                P = symbolic_process(survivors, self.G, self.H, self.rules)
                nrows, ncols = P.nrows, P.ncols
                new_rows, zero_sigs = eliminate_batch(P, self.G, self.H,
                                                      self.rules)
                survived = {s for s, _ in new_rows}
                vanished = set(zero_sigs)
                super_sigs = [s for s, _ in P.rows
                              if s not in survived and s not in vanished]
            for s in zero_sigs:
                self._trace(s, None, degree, "zero")
            for s in sorted(super_sigs, key=sig_key):
                self._trace(s, None, degree, "super")
            for sig, h in new_rows:
                if self._mutant_gate(sig, h):
                    continue
                self.insert_member(sig, h, self.gen_degs[sig.index - 1])
            self.stats.rounds.append(RoundStats(
                degree, len(batch), rej_syz, rej_rew, nrows, ncols,
                len(new_rows), len(zero_sigs)))
            if survivors:
                self._bump_max_matrix(degree, nrows, ncols)

    def _run_sequential(self) -> None:
        rounds = 0
        while self.queue:
            if rounds >= self.cfg.max_rounds:
                raise EngineAbort("round limit %d exceeded" % self.cfg.max_rounds)
            jp = self.queue.pop_min()
            if jp.degree > self.max_degree:
                raise EngineAbort("degree limit %d exceeded" % self.max_degree)
            rounds += 1
            survivors, rej_syz, rej_rew = self._filter_batch([jp])
            new = zero = 0
            if survivors:
                self._trace(None, None, jp.degree, "round")
                h = regular_top_reduce(jp.sig, jp.realize(), self.G)
                if h.lm is None:
                    self.H.add(jp.sig)
                    self._trace(jp.sig, None, jp.degree, "zero")
                    zero = 1
                elif super_top_reducible(jp.sig, h, self.G):
                    self._trace(jp.sig, None, jp.degree, "super")
                elif self._mutant_gate(jp.sig, h):
                    new = 1
                else:
                    self.insert_member(jp.sig, h, self.gen_degs[jp.sig.index - 1])
                    new = 1
            self.stats.rounds.append(RoundStats(
                jp.degree, 1, rej_syz, rej_rew, 0, 0, new, zero))
            if survivors:
                self._bump_max_matrix(jp.degree, 0, 0)

    def run(self) -> tuple[list[BoolPoly], RunStats]:
        t0 = time.perf_counter()
        if self.trivial:
            basis = [BoolPoly([0])]
        elif not self.generators:
            basis = []
        else:
            for j, f in enumerate(self.generators, start=1):
                self.insert_member(Sig(j, 0), f, self.gen_degs[j - 1])
            if self.cfg.pipeline == "sequential":
                self._run_sequential()
            elif self.cfg.pipeline == "matrix":
                self._run_matrix()
            else:
                raise ValueError("unknown pipeline %r" % self.cfg.pipeline)
            basis = [m.poly for m in self.G]
        self.stats.basis_size = len(basis)
        self.stats.reduced_basis_size = len(reduce_basis(basis))
        self.stats.wall_ms = (time.perf_counter() - t0) * 1000.0
        return basis, self.stats


def gvw_run(F, cfg: Optional[EngineConfig] = None):
    cfg = replace(cfg, algo="gvw") if cfg else EngineConfig(algo="gvw")
    return Engine(F, cfg).run()


def mgvw_run(F, cfg: Optional[EngineConfig] = None):
    cfg = replace(cfg, algo="mgvw") if cfg else EngineConfig(algo="mgvw")
    return Engine(F, cfg).run()
