"""Closed-form distances from u_0 to the inner vertices v_j.

A shortest u_0,v_j-path uses a single spoke and is one of four shapes:

    P1  u_0 -> u_{j0} (forward), spoke, inner steps +k up to v_j
    P2  u_0 -> u_{-(k-j0)} (backward), spoke, inner steps +k up to v_j
    P3  u_0 -> u_{-j1} (backward), spoke, inner steps -k down to v_j
    P4  u_0 -> u_{k-j1} (forward), spoke, inner steps -k down to v_j

with ``j = m0*k + j0`` and ``n - j = m1*k + j1``.  The minimum of the four
lengths is the exact distance once n is large enough relative to k; below
that bound it is only an upper bound (every shape is a real walk).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import GPParams, VertexId, distance_row
from .errors import InternalCaseGap, NotGuaranteed, OutOfRange


class PathType(enum.Enum):
    P1 = 1
    P2 = 2
    P3 = 3
    P4 = 4


def theorem_bound(k: int) -> int | None:
    """Smallest n for which the closed forms are proven, or None for k < 3."""
    if k < 3:
        return None
    if k == 3:
        return 8
    if k == 4:
        return 10
    if k % 2:
        return k * (k + 1) // 2
    return k * k // 2


def is_guaranteed(p: GPParams) -> bool:
    bound = theorem_bound(p.k)
    return bound is not None and p.n >= bound


@dataclass(frozen=True)
class Decomposition:
    j: int
    m0: int
    j0: int
    m1: int
    j1: int


def _check_j(p: GPParams, j: int) -> None:
    if not 0 <= j <= p.n:
        raise OutOfRange(f"j={j} outside [0, {p.n}] for {p}")


def decompose(p: GPParams, j: int) -> Decomposition:
    _check_j(p, j)
    m0, j0 = divmod(j, p.k)
    m1, j1 = divmod(p.n - j, p.k)
    return Decomposition(j, m0, j0, m1, j1)


def _lengths(k: int, dec: Decomposition) -> tuple[int, int, int, int]:
    return (
        dec.j0 + dec.m0 + 1,
        (k - dec.j0) + dec.m0 + 2,
        dec.j1 + dec.m1 + 1,
        (k - dec.j1) + dec.m1 + 2,
    )


def path_length(p: GPParams, j: int, t: PathType) -> int:
    return _lengths(p.k, decompose(p, j))[t.value - 1]


def path_walk(p: GPParams, j: int, t: PathType) -> list[VertexId]:
    """Vertex sequence of the path of type ``t`` from u_0 to v_j."""
    dec = decompose(p, j)
    k = p.k
    if t is PathType.P1:
        outer = range(0, dec.j0 + 1)
        inner = [dec.j0 + s * k for s in range(dec.m0 + 1)]
    elif t is PathType.P2:
        outer = range(0, -(k - dec.j0) - 1, -1)
        inner = [-(k - dec.j0)] + [dec.j0 + s * k for s in range(dec.m0 + 1)]
    elif t is PathType.P3:
        outer = range(0, -dec.j1 - 1, -1)
        inner = [-(dec.j1 + s * k) for s in range(dec.m1 + 1)]
    else:
        outer = range(0, k - dec.j1 + 1)
        inner = [k - dec.j1] + [-(dec.j1 + s * k) for s in range(dec.m1 + 1)]
    return [p.outer(i) for i in outer] + [p.inner(i) for i in inner]


@dataclass(frozen=True)
class DistanceProfile:
    j: int
    len_p1: int
    len_p2: int
    len_p3: int
    len_p4: int
    d12: int
    d34: int
    d: int
    guaranteed: bool

    def as_dict(self) -> dict:
        return {
            "j": self.j,
            "p1": self.len_p1,
            "p2": self.len_p2,
            "p3": self.len_p3,
            "p4": self.len_p4,
            "d12": self.d12,
            "d34": self.d34,
            "d": self.d,
            "guaranteed": self.guaranteed,
        }


def closed_distance(p: GPParams, j: int) -> DistanceProfile:
    l1, l2, l3, l4 = _lengths(p.k, decompose(p, j))
    d12 = min(l1, l2)
    d34 = min(l3, l4)
    return DistanceProfile(j, l1, l2, l3, l4, d12, d34, min(d12, d34), is_guaranteed(p))


def distance_table(p: GPParams, j_lo: int, j_hi: int) -> list[DistanceProfile]:
    if not 0 <= j_lo <= j_hi <= p.n:
        raise OutOfRange(f"window [{j_lo}, {j_hi}] not inside [0, {p.n}]")
    return [closed_distance(p, j) for j in range(j_lo, j_hi + 1)]


@dataclass(frozen=True)
class JStarResult:
    maximizers: tuple[int, ...]
    value: int


def _maximizers(values: list[int]) -> JStarResult:
    best = max(values)
    return JStarResult(tuple(j for j, d in enumerate(values) if d == best), best)


def jstar_scan(p: GPParams) -> JStarResult:
    """All j in [0, n//2] maximising the closed-form d(u_0, v_j)."""
    if not is_guaranteed(p):
        raise NotGuaranteed(f"{p} is below the closed-form bound")
    return _maximizers([closed_distance(p, j).d for j in range(p.n // 2 + 1)])


def jstar_oracle(p: GPParams) -> JStarResult:
    """Same maximiser set, but from BFS distances; valid for every (n, k)."""
    row = distance_row(p, 0)
    return _maximizers([row[p.n + j] for j in range(p.n // 2 + 1)])


def j_one(p: GPParams) -> int:
    """Smallest j in [0, n//2] maximising d12 (the search starting point)."""
    d12 = [closed_distance(p, j).d12 for j in range(p.n // 2 + 1)]
    return d12.index(max(d12))


def jstar_case_analysis(p: GPParams, check_bound: bool = True) -> int:
    return jstar_case(p, check_bound)[0]


def jstar_case(p: GPParams, check_bound: bool = True) -> tuple[int, str]:
    """j* from the explicit subcase formulas, plus the subcase tag.

    Where two values are offered for a subcase, the first is returned.
    Inequalities against half-integers are compared after doubling.
    ``check_bound=False`` evaluates the formulas below the proven bound
    (n >= 3k-1 for odd k, n >= 3k-2 for even k, still required); the
    answer must then be checked against :func:`jstar_oracle`.
    """
    if check_bound and not is_guaranteed(p):
        raise NotGuaranteed(f"{p} is below the closed-form bound")
    min_n = 3 * p.k - 1 if p.k % 2 else 3 * p.k - 2
    if p.k < 3 or p.n < min_n:
        raise NotGuaranteed(f"the j* case analysis needs k >= 3 and n >= {min_n}, got {p}")
    n, k = p.n, p.k
    half = n // 2
    m, j = divmod(half, k)
    if k % 2 == 1:
        h = (k + 1) // 2  # (k+1)/2
        if n % 2 == 0:
            if 2 * j >= k - 1:
                if 2 * j == k - 1:
                    return m * k + (k - 1) // 2, "1.1.1:j=(k-1)/2"
                if 2 * j == k + 1:
                    return m * k + h, "1.1.1:j=(k+1)/2"
                if 3 <= 2 * j - k <= h:
                    return m * k + j, "1.1.1:3<=2j-k<=(k+1)/2"
                if 2 * j - k > h:
                    return m * k + j - (k - 1) // 2, "1.1.1:2j-k>(k+1)/2"
            else:
                if j in (0, 1):
                    return (m - 1) * k + h, "1.1.2:j in {0,1}"
                if 4 <= 2 * j <= h:
                    return (m - 1) * k + h + j - 1, "1.1.2:4<=2j<=(k+1)/2"
                if 2 * j > h:
                    return (m - 1) * k + j + 1, "1.1.2:2j>(k+1)/2"
        else:
            if 2 * j >= k - 2:
                if 2 * j == k - 1:
                    return m * k + (k - 1) // 2, "1.2.1:j=(k-1)/2"
                if 2 <= 2 * j + 1 - k <= h:
                    return m * k + j, "1.2.1:2<=2j+1-k<=(k+1)/2"
                if 2 * j + 1 - k > h:
                    return m * k + j - (k - 3) // 2, "1.2.1:2j+1-k>(k+1)/2"
            else:
                if j == 0:
                    return (m - 1) * k + h, "1.2.2:j=0"
                if 3 <= 2 * j + 1 <= h:
                    return (m - 1) * k + h + j - 1, "1.2.2:3<=2j+1<=(k+1)/2"
                if 2 * j + 1 > h:
                    return (m - 1) * k + j + 2, "1.2.2:2j+1>(k+1)/2"
    else:
        h = k // 2
        if n % 2 == 0:
            if 2 * j >= k - 2:
                if 2 * j == k - 2:
                    return m * k + (k - 2) // 2, "2.1.1:j=(k-2)/2"
                if 2 * j == k:
                    return m * k + h, "2.1.1:j=k/2"
                if 2 <= 2 * j - k <= h:
                    return m * k + j, "2.1.1:2<=2j-k<=k/2"
                if 2 * j - k >= h + 1:
                    return m * k + j - h + 1, "2.1.1:2j-k>=(k+2)/2"
            else:
                if j in (0, 1):
                    return (m - 1) * k + h, "2.1.2:j in {0,1}"
                if 4 <= 2 * j <= h:
                    return (m - 1) * k + h + j - 1, "2.1.2:4<=2j<=k/2"
                if 2 * j >= h + 1:
                    return (m - 1) * k + j + 1, "2.1.2:2j>=(k+2)/2"
        else:
            if 2 * j >= k - 3:
                if 2 * j == k - 2:
                    return m * k + (k - 2) // 2, "2.2.1:j=(k-2)/2"
                if 2 * j == k:
                    return m * k + h, "2.2.1:j=k/2"
                if 3 <= 2 * j + 1 - k <= h:
                    return m * k + j, "2.2.1:3<=2j+1-k<=k/2"
                if 2 * j + 1 - k >= h + 1:
                    return m * k + j + 1 - h, "2.2.1:2j+1-k>=(k+2)/2"
            else:
                if j == 0:
                    return (m - 1) * k + h, "2.2.2:j=0"
                if 3 <= 2 * j + 1 <= h:
                    return (m - 1) * k + h + j, "2.2.2:3<=2j+1<=k/2"
                if 2 * j + 1 >= h + 1:
                    return (m - 1) * k + j + 2, "2.2.2:2j+1>=(k+2)/2"
    raise InternalCaseGap(f"no j* subcase matched for {p} (m={m}, j={j})")
