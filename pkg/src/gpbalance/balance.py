"""W-sets, l-distance-balancedness and the u_0,v_j diameter-attainment scan.

All distances here come from the BFS oracle, never from the closed forms,
so every check is valid below the closed-form bound as well.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .core import GPParams, VertexId, distance_row, oracle_diameter
from .diameter import Strategy, diameter
from .errors import EllOutOfRange, InvalidParams, SameVertex


@dataclass(frozen=True)
class BalanceReport:
    x: VertexId
    y: VertexId
    pair_distance: int
    w_xy_size: int
    w_yx_size: int
    equidistant_size: int

    @property
    def balanced(self) -> bool:
        return self.w_xy_size == self.w_yx_size


@dataclass(frozen=True)
class Witness:
    x: VertexId
    y: VertexId
    w_xy_size: int
    w_yx_size: int


@dataclass(frozen=True)
class LBalanceVerdict:
    params: GPParams
    ell: int
    witness: Witness | None
    pairs_checked: int

    @property
    def holds(self) -> bool:
        return self.witness is None

    def as_dict(self) -> dict:
        w = self.witness
        return {
            "n": self.params.n,
            "k": self.params.k,
            "ell": self.ell,
            "holds": self.holds,
            "pairs_checked": self.pairs_checked,
            "witness_x": str(w.x) if w else None,
            "witness_y": str(w.y) if w else None,
            "w_xy": w.w_xy_size if w else None,
            "w_yx": w.w_yx_size if w else None,
        }


@dataclass(frozen=True)
class ConjectureRecord:
    n: int
    k: int
    diameter: int
    attaining_j: int | None

    @property
    def predicate(self) -> bool:
        return self.attaining_j is not None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "diameter": self.diameter,
            "attaining_j": self.attaining_j,
            "predicate": self.predicate,
        }


def _rows(p: GPParams, x: VertexId, y: VertexId) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if x == y:
        raise SameVertex(f"W-sets need two distinct vertices, got {x} twice")
    return distance_row(p, p.position(x)), distance_row(p, p.position(y))


def w_set(p: GPParams, x: VertexId, y: VertexId) -> frozenset[VertexId]:
    """Vertices strictly closer to ``x`` than to ``y``."""
    dx, dy = _rows(p, x, y)
    return frozenset(p.vertex_at(w) for w in range(p.order) if dx[w] < dy[w])


def _counts(dx: tuple[int, ...], dy: tuple[int, ...]) -> tuple[int, int, int]:
    closer_x = closer_y = 0
    for a, b in zip(dx, dy):
        if a < b:
            closer_x += 1
        elif b < a:
            closer_y += 1
    return closer_x, closer_y, len(dx) - closer_x - closer_y


def balance_report(p: GPParams, x: VertexId, y: VertexId) -> BalanceReport:
    dx, dy = _rows(p, x, y)
    wxy, wyx, eq = _counts(dx, dy)
    return BalanceReport(x, y, dx[p.position(y)], wxy, wyx, eq)


def _pairs_at_distance(p: GPParams, ell: int, reduce_symmetry: bool) -> Iterable[tuple[int, int]]:
    """Position pairs (a, b) with d(a, b) = ell in canonical scan order.

    With ``reduce_symmetry`` only u_0 and v_0 are used as first vertex: the
    rotation i -> i+1 carries every pair onto one containing u_0 or v_0.
    """
    sources = (0, p.n) if reduce_symmetry else range(p.order)
    for a in sources:
        row = distance_row(p, a)
        for b in range(p.order):
            if row[b] != ell:
                continue
            if reduce_symmetry:
                yield (a, b) if a < b else (b, a)
            elif a < b:
                yield a, b


def is_l_distance_balanced(
    p: GPParams, ell: int, reduce_symmetry: bool = True, diam: int | None = None
) -> LBalanceVerdict:
    if diam is None:
        diam = oracle_diameter(p)
    if not 1 <= ell <= diam:
        raise EllOutOfRange(f"ell={ell} outside [1, {diam}] for {p}")
    checked = 0
    for a, b in _pairs_at_distance(p, ell, reduce_symmetry):
        checked += 1
        wxy, wyx, _ = _counts(distance_row(p, a), distance_row(p, b))
        if wxy != wyx:
            witness = Witness(p.vertex_at(a), p.vertex_at(b), wxy, wyx)
            return LBalanceVerdict(p, ell, witness, checked)
    return LBalanceVerdict(p, ell, None, checked)


def is_diam_distance_balanced(p: GPParams, reduce_symmetry: bool = True) -> LBalanceVerdict:
    d = diameter(p, Strategy.AUTO).value
    return is_l_distance_balanced(p, d, reduce_symmetry, diam=d)


def is_highly_distance_balanced(p: GPParams, reduce_symmetry: bool = True) -> list[LBalanceVerdict]:
    d = oracle_diameter(p)
    return [is_l_distance_balanced(p, ell, reduce_symmetry, diam=d) for ell in range(1, d + 1)]


def conjecture_predicate(p: GPParams) -> ConjectureRecord:
    """Does some inner vertex v_j realise the diameter as d(u_0, v_j)?"""
    if p.k < 2:
        raise InvalidParams(f"the attainment predicate is defined for k >= 2, got {p}")
    d = diameter(p, Strategy.AUTO).value
    row = distance_row(p, 0)
    attaining = next((j for j in range(p.n) if row[p.n + j] == d), None)
    return ConjectureRecord(p.n, p.k, d, attaining)


def _scan_one(nk: tuple[int, int]) -> ConjectureRecord:
    return conjecture_predicate(GPParams(*nk))


def conjecture_scan(
    k_range: Iterable[int], n_limit: int, workers: int | None = 1
) -> list[ConjectureRecord]:
    """Every (n, k) with n <= n_limit whose predicate holds, sorted by (k, n).

    ``workers=None`` uses every available CPU; the output does not depend on
    the worker count.
    """
    ks = sorted(set(k_range))
    if ks and ks[0] < 2:
        raise InvalidParams("conjecture scans need k >= 2")
    tasks = [(n, k) for k in ks for n in range(2 * k + 1, n_limit + 1)]
    if workers is None:
        workers = os.cpu_count() or 1
    if workers <= 1 or len(tasks) < 2:
        records = map(_scan_one, tasks)
        hits = [r for r in records if r.predicate]
    else:
        chunk = max(1, len(tasks) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = [r for r in pool.map(_scan_one, tasks, chunksize=chunk) if r.predicate]
    return sorted(hits, key=lambda r: (r.k, r.n))
