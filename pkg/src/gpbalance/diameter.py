"""Constant-time diameter of GP(n, k) with a BFS fallback.

Three sources are combined:

* the eight-item closed form, valid from the same bound as the
  path-form distances (:func:`gpbalance.pathform.theorem_bound`);
* a table of small-k values (k = 2 for all n, a few sporadic k in 3..6);
* breadth-first search for everything else.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import GPParams, oracle_diameter
from .errors import InternalCaseGap, NotGuaranteed
from .pathform import is_guaranteed


class Method(enum.Enum):
    THEOREM_CASE_1 = "TheoremCase1"
    THEOREM_CASE_2 = "TheoremCase2"
    THEOREM_CASE_3 = "TheoremCase3"
    THEOREM_CASE_4 = "TheoremCase4"
    THEOREM_CASE_5 = "TheoremCase5"
    THEOREM_CASE_6 = "TheoremCase6"
    THEOREM_CASE_7 = "TheoremCase7"
    THEOREM_CASE_8 = "TheoremCase8"
    SMALL_K = "SmallK"
    BFS_FALLBACK = "BfsFallback"


_ITEM_METHOD = {i: Method(f"TheoremCase{i}") for i in range(1, 9)}


class Strategy(enum.Enum):
    AUTO = "auto"
    THEOREM_ONLY = "theorem-only"
    ORACLE_ONLY = "oracle-only"


@dataclass(frozen=True)
class HalfDecomposition:
    half: int
    m: int
    j: int


def half_decompose(p: GPParams) -> HalfDecomposition:
    half = p.n // 2
    m, j = divmod(half, p.k)
    return HalfDecomposition(half, m, j)


@dataclass(frozen=True)
class DiameterResult:
    params: GPParams
    value: int
    method: Method
    case_detail: str

    def as_dict(self) -> dict:
        return {
            "n": self.params.n,
            "k": self.params.k,
            "diameter": self.value,
            "method": self.method.value,
            "case_detail": self.case_detail,
        }


def _theorem_subcases(n: int, k: int, m: int, j: int) -> tuple[int, list[tuple[str, int]]]:
    """Item number and every (tag, value) subcase whose inequality holds.

    Half-integer thresholds are handled by doubling both sides.
    """
    hits: list[tuple[str, int]] = []
    if k % 2 == 1:
        if n % 2 == 0:
            if 2 * j >= k - 1:
                item = 1
                if j in ((k - 1) // 2, (k + 1) // 2):
                    hits.append(("j=(k-1)/2 or j=(k+1)/2: m+2+j", m + 2 + j))
                if 3 <= 2 * j - k and 2 * (2 * j - k) <= k + 1:
                    hits.append(("3<=2j-k<=(k+1)/2: m+3+k-j", m + 3 + k - j))
                if 2 * (2 * j - k) > k + 1:
                    hits.append(("2j-k>(k+1)/2: m+2+j-(k-1)/2", m + 2 + j - (k - 1) // 2))
            else:
                item = 2
                if j in (0, 1):
                    hits.append(("j=0 or j=1: m+1+(k+1)/2", m + 1 + (k + 1) // 2))
                if 4 <= 2 * j and 4 * j <= k + 1:
                    hits.append(("4<=2j<=(k+1)/2: m+3+(k-1)/2-j", m + 3 + (k - 1) // 2 - j))
                if 4 * j > k + 1:
                    hits.append(("2j>(k+1)/2: m+2+j", m + 2 + j))
        else:
            if 2 * j >= k - 2:
                item = 3
                if 2 * j == k - 1:
                    hits.append(("j=(k-1)/2: m+2+(k-1)/2", m + 2 + (k - 1) // 2))
                if 2 <= 2 * j + 1 - k and 2 * (2 * j + 1 - k) <= k + 1:
                    hits.append(("2<=2j+1-k<=(k+1)/2: m+2+k-j", m + 2 + k - j))
                if 2 * (2 * j + 1 - k) > k + 1:
                    hits.append(("2j+1-k>(k+1)/2: m+2+j-(k-1)/2", m + 2 + j - (k - 1) // 2))
            else:
                item = 4
                if 1 <= 2 * j + 1 and 2 * (2 * j + 1) <= k + 1:
                    hits.append(("1<=2j+1<=(k+1)/2: m+2+(k-1)/2-j", m + 2 + (k - 1) // 2 - j))
                if 2 * (2 * j + 1) > k + 1:
                    hits.append(("2j+1>(k+1)/2: m+2+j", m + 2 + j))
    else:
        if n % 2 == 0:
            if 2 * j >= k - 2:
                item = 5
                if j in ((k - 2) // 2, k // 2):
                    hits.append(("j=(k-2)/2 or j=k/2: m+2+j", m + 2 + j))
                if 2 <= 2 * j - k and 2 * (2 * j - k) <= k:
                    hits.append(("2<=2j-k<=k/2: m+3+k-j", m + 3 + k - j))
                if 2 * (2 * j - k) >= k + 2:
                    hits.append(("2j-k>=(k+2)/2: m+2+j-k/2", m + 2 + j - k // 2))
            else:
                item = 6
                if j == 0:
                    hits.append(("j=0: m+1+k/2", m + 1 + k // 2))
                if 2 <= 2 * j and 4 * j <= k:
                    hits.append(("2<=2j<=k/2: m+2+k/2-j", m + 2 + k // 2 - j))
                if 4 * j >= k + 2:
                    hits.append(("2j>=(k+2)/2: m+2+j", m + 2 + j))
        else:
            if 2 * j >= k - 3:
                item = 7
                if 2 * j == k - 2:
                    hits.append(("j=(k-2)/2: m+2+(k-2)/2", m + 2 + (k - 2) // 2))
                if 1 <= 2 * j + 1 - k and 2 * (2 * j + 1 - k) <= k:
                    hits.append(("1<=2j+1-k<=k/2: m+2+k-j", m + 2 + k - j))
                if 2 * (2 * j + 1 - k) >= k + 2:
                    hits.append(("2j+1-k>=(k+2)/2: m+3+j-k/2", m + 3 + j - k // 2))
            else:
                item = 8
                if j == 0:
                    hits.append(("j=0: m+1+k/2", m + 1 + k // 2))
                if 3 <= 2 * j + 1 and 2 * (2 * j + 1) <= k:
                    hits.append(("3<=2j+1<=k/2: m+2+k/2-j", m + 2 + k // 2 - j))
                if 2 * (2 * j + 1) >= k + 2:
                    hits.append(("2j+1>=(k+2)/2: m+2+j", m + 2 + j))
    return item, hits


def theorem_subcases(p: GPParams) -> tuple[int, list[tuple[str, int]]]:
    """Matched item and all firing subcases (exactly one when correct)."""
    hd = half_decompose(p)
    return _theorem_subcases(p.n, p.k, hd.m, hd.j)


def diameter_theorem(p: GPParams) -> DiameterResult:
    if not is_guaranteed(p):
        raise NotGuaranteed(f"{p} is outside the closed-form diameter hypothesis")
    hd = half_decompose(p)
    item, hits = _theorem_subcases(p.n, p.k, hd.m, hd.j)
    if len(hits) != 1:
        raise InternalCaseGap(
            f"{p}: item {item} matched {len(hits)} subcases (m={hd.m}, j={hd.j})"
        )
    tag, value = hits[0]
    detail = f"item {item}, {tag} (m={hd.m}, j={hd.j})"
    return DiameterResult(p, value, _ITEM_METHOD[item], detail)


_SMALL_K_CONSTANTS = {
    (5, 2): 2,
    (6, 2): 4,
    (7, 2): 3,
    (7, 3): 3,
    (9, 4): 4,
    (11, 5): 5,
    (12, 5): 4,
    (13, 5): 4,
    (14, 5): 5,
    **{(n, 6): 5 for n in range(13, 18)},
}


def diameter_small_k(p: GPParams) -> DiameterResult | None:
    """Tabulated diameter for small k, or None when (n, k) is not covered."""
    value = _SMALL_K_CONSTANTS.get((p.n, p.k))
    if value is not None:
        return DiameterResult(p, value, Method.SMALL_K, f"constant for {p}")
    if p.k == 2:
        m, r = divmod(p.n, 4)
        if r in (0, 1):
            return DiameterResult(p, m + 2, Method.SMALL_K, f"k=2, n=4m+{r}: m+2 (m={m})")
        return DiameterResult(p, m + 3, Method.SMALL_K, f"k=2, n=4m+{r}: m+3 (m={m})")
    return None


def diameter_oracle(p: GPParams, detail: str = "breadth-first search") -> DiameterResult:
    return DiameterResult(p, oracle_diameter(p), Method.BFS_FALLBACK, detail)


def diameter(p: GPParams, strategy: Strategy = Strategy.AUTO) -> DiameterResult:
    """Dispatch: closed form when one applies, then BFS unless forbidden.

    ``THEOREM_ONLY`` never runs BFS and raises :class:`NotGuaranteed` instead;
    ``ORACLE_ONLY`` always runs BFS.
    """
    if strategy is Strategy.ORACLE_ONLY:
        return diameter_oracle(p, "oracle-only")
    if is_guaranteed(p):
        return diameter_theorem(p)
    small = diameter_small_k(p)
    if small is not None:
        return small
    if strategy is Strategy.THEOREM_ONLY:
        raise NotGuaranteed(f"no closed-form diameter covers {p}")
    return diameter_oracle(p)
