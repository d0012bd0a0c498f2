"""Reading, writing and generating boolean polynomial systems.

The file format is line based: '#' starts a comment, blank lines are
skipped, the first significant line must be `vars: <n>`, and every
following line is one polynomial with '+'-separated terms whose factors
are '*'-separated `x<k>` names (1-based, k <= n) or the constant `1`.
Repeated variables inside a term collapse, `x2*x2` meaning `x2`.  A bare
`0` denotes the zero polynomial.  Parse errors carry 1-based line numbers.
"""

from __future__ import annotations

import itertools
import random
import re
from typing import NamedTuple

from .monomials import MAX_VARS, BoolPoly

_VAR_RE = re.compile(r"^x([0-9]+)$")


class SystemFile(NamedTuple):
    n_vars: int
    polys: list


def _parse_term(term: str, n_vars: int, lineno: int) -> int:
    mask = 0
    for factor in term.split("*"):
        factor = factor.strip()
        if factor == "1":
            continue
        m = _VAR_RE.match(factor)
        if not m:
            raise ValueError("line %d: bad factor %r" % (lineno, factor))
        k = int(m.group(1))
        if not 1 <= k <= n_vars:
            raise ValueError(
                "line %d: variable x%d out of range 1..%d" % (lineno, k, n_vars))
        mask |= 1 << (k - 1)
    return mask


def parse_system(text: str) -> SystemFile:
    n_vars = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n_vars is None:
            m = re.match(r"^vars\s*:\s*([0-9]+)$", line)
            if not m:
                raise ValueError("line %d: expected 'vars: <n>' header" % lineno)
            n_vars = int(m.group(1))
            if not 1 <= n_vars <= MAX_VARS:
                raise ValueError(
                    "line %d: vars must be in 1..%d" % (lineno, MAX_VARS))
            continue
        if line == "0":
            polys.append(BoolPoly())
            continue
        terms = [t.strip() for t in line.split("+")]
        if any(not t for t in terms):
            raise ValueError("line %d: empty term" % lineno)
        polys.append(BoolPoly(
            _parse_term(t, n_vars, lineno) for t in terms))
    if n_vars is None:
        raise ValueError("line 1: missing 'vars: <n>' header")
    return SystemFile(n_vars, polys)


def emit_basis(polys, n_vars: int) -> str:
    lines = ["vars: %d" % n_vars]
    lines.extend(str(p) for p in polys)
    return "\n".join(lines) + "\n"


def emit_stats(stats) -> str:
    """Stable text rendering of a RunStats record."""
    lines = [
        "algo: %s" % stats.algo,
        "n_vars: %d" % stats.n_vars,
        "deg_limit: %d" % stats.deg_limit,
    ]
    for r in stats.rounds:
        lines.append(
            "round: degree=%d pairs=%d rejected_syz=%d rejected_rew=%d"
            " rows=%d cols=%d new=%d zero=%d"
            % (r.degree, r.pairs, r.rejected_syz, r.rejected_rew,
               r.rows, r.cols, r.new, r.zero))
    mm = stats.max_matrix
    lines.append("mutants_appended: %d" % stats.mutants_appended)
    lines.append("max_matrix: rows=%d cols=%d degree=%d"
                 % (mm.rows, mm.cols, mm.degree))
    lines.append("basis_size: %d" % stats.basis_size)
    lines.append("reduced_basis_size: %d" % stats.reduced_basis_size)
    lines.append("wall_ms: %.1f" % stats.wall_ms)
    return "\n".join(lines) + "\n"


class RandomSpec(NamedTuple):
    n_vars: int
    n_polys: int
    max_degree: int
    density: float
    seed: int


def gen_random(spec: RandomSpec) -> SystemFile:
    """Seeded random system: each squarefree monomial of degree up to
    max_degree enters each polynomial independently with the given
    density.  Polynomials that come out zero are resampled.
    """
    if not 1 <= spec.n_vars <= MAX_VARS:
        raise ValueError("n_vars must be in 1..%d" % MAX_VARS)
    if not 0.0 < spec.density <= 1.0:
        raise ValueError("density must be in (0, 1]")
    if spec.max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    rng = random.Random(spec.seed)
    monos = []
    for d in range(spec.max_degree + 1):
        for combo in itertools.combinations(range(spec.n_vars), d):
            mask = 0
            for v in combo:
                mask |= 1 << v
            monos.append(mask)
    polys = []
    while len(polys) < spec.n_polys:
        terms = [m for m in monos if rng.random() < spec.density]
        if terms:
            polys.append(BoolPoly(terms))
    return SystemFile(spec.n_vars, polys)


def system_str(system: SystemFile) -> str:
    return emit_basis(system.polys, system.n_vars)
