"""Generalized Petersen graphs GP(n, k) and the brute-force BFS oracle.

Vertices are enumerated as ``u_0 .. u_{n-1}`` followed by ``v_0 .. v_{n-1}``;
every array in the package (distance rows, serialized output) uses that order.
The oracle here is deliberately plain: FIFO breadth-first search over an
explicit adjacency list, with no use of the closed forms it is meant to check.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import InvalidParams


class Side(enum.Enum):
    OUTER = "u"
    INNER = "v"


@dataclass(frozen=True, order=True)
class GPParams:
    """Validated parameters of GP(n, k): ``n >= 3`` and ``1 <= k < n/2``."""

    n: int
    k: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or isinstance(self.k, bool):
            raise InvalidParams("n and k must be integers")
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise InvalidParams("n and k must be integers")
        if self.n < 3:
            raise InvalidParams(f"n must be at least 3, got n={self.n}")
        if self.k < 1:
            raise InvalidParams(f"k must be at least 1, got k={self.k}")
        if 2 * self.k >= self.n:
            raise InvalidParams(f"k must satisfy k < n/2, got n={self.n}, k={self.k}")

    def __str__(self) -> str:
        return f"GP({self.n},{self.k})"

    @property
    def order(self) -> int:
        return 2 * self.n

    def outer(self, i: int) -> "VertexId":
        return VertexId(Side.OUTER, i % self.n)

    def inner(self, i: int) -> "VertexId":
        return VertexId(Side.INNER, i % self.n)

    def vertices(self) -> Iterator["VertexId"]:
        """All 2n vertices in the fixed enumeration order."""
        for i in range(self.n):
            yield VertexId(Side.OUTER, i)
        for i in range(self.n):
            yield VertexId(Side.INNER, i)

    def position(self, v: "VertexId") -> int:
        """Index of ``v`` in the fixed enumeration."""
        self.check_vertex(v)
        return v.index if v.side is Side.OUTER else self.n + v.index

    def vertex_at(self, pos: int) -> "VertexId":
        if not 0 <= pos < 2 * self.n:
            raise ValueError(f"position {pos} outside [0, {2 * self.n})")
        if pos < self.n:
            return VertexId(Side.OUTER, pos)
        return VertexId(Side.INNER, pos - self.n)

    def check_vertex(self, v: "VertexId") -> None:
        if not 0 <= v.index < self.n:
            raise ValueError(f"{v} is not a vertex of {self}")


@dataclass(frozen=True)
class VertexId:
    side: Side
    index: int

    def __str__(self) -> str:
        return f"{self.side.value}{self.index}"

    @classmethod
    def parse(cls, text: str, p: GPParams) -> "VertexId":
        """Parse ``u3`` / ``v-2`` style labels, reducing the index mod n."""
        text = text.strip()
        if len(text) < 2 or text[0] not in "uv":
            raise ValueError(f"cannot parse vertex label {text!r}")
        i = int(text[1:])
        return p.outer(i) if text[0] == "u" else p.inner(i)


def make_params(n: int, k: int) -> GPParams:
    return GPParams(n, k)


@lru_cache(maxsize=256)
def adjacency(p: GPParams) -> tuple[tuple[int, int, int], ...]:
    """Adjacency list over enumeration positions."""
    n, k = p.n, p.k
    adj = []
    for i in range(n):
        adj.append(((i + 1) % n, (i - 1) % n, n + i))
    for i in range(n):
        adj.append((n + (i + k) % n, n + (i - k) % n, i))
    return tuple(adj)


def neighbors(p: GPParams, v: VertexId) -> frozenset[VertexId]:
    """The three neighbours of ``v``: two along its cycle plus the spoke."""
    p.check_vertex(v)
    i = v.index
    if v.side is Side.OUTER:
        return frozenset({p.outer(i + 1), p.outer(i - 1), p.inner(i)})
    return frozenset({p.inner(i + p.k), p.inner(i - p.k), p.outer(i)})


def edges(p: GPParams) -> list[tuple[VertexId, VertexId]]:
    """Each edge once, as (smaller, larger) by enumeration position."""
    adj = adjacency(p)
    out = []
    for a, nbrs in enumerate(adj):
        for b in nbrs:
            if a < b:
                out.append((p.vertex_at(a), p.vertex_at(b)))
    return out


@lru_cache(maxsize=8192)
def distance_row(p: GPParams, pos: int) -> tuple[int, ...]:
    """BFS distances from enumeration position ``pos`` to every vertex."""
    adj = adjacency(p)
    dist = [-1] * len(adj)
    dist[pos] = 0
    queue = deque([pos])
    while queue:
        a = queue.popleft()
        da = dist[a] + 1
        for b in adj[a]:
            if dist[b] < 0:
                dist[b] = da
                queue.append(b)
    if min(dist) < 0:
        raise RuntimeError(f"{p} produced a disconnected BFS from position {pos}")
    return tuple(dist)


@dataclass(frozen=True)
class DistanceMap:
    params: GPParams
    source: VertexId
    dist: tuple[int, ...]

    def __getitem__(self, v: VertexId) -> int:
        return self.dist[self.params.position(v)]

    def eccentricity(self) -> int:
        return max(self.dist)


def bfs_distances(p: GPParams, src: VertexId) -> DistanceMap:
    return DistanceMap(p, src, distance_row(p, p.position(src)))


def oracle_distance(p: GPParams, x: VertexId, y: VertexId) -> int:
    return distance_row(p, p.position(x))[p.position(y)]


def oracle_diameter(p: GPParams) -> int:
    """Diameter as the larger eccentricity of u_0 and v_0.

    The rotation i -> i+1 is an automorphism, so every vertex has the
    eccentricity of u_0 or of v_0.
    """
    return max(max(distance_row(p, 0)), max(distance_row(p, p.n)))


def oracle_diameter_full(p: GPParams) -> int:
    """Diameter from all 2n sources; no symmetry assumed."""
    return max(max(distance_row(p, s)) for s in range(p.order))
