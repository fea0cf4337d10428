"""Graph construction, distances, bipartiteness and serialization.

Vertices carry the integer labels used in the literature (1..n for Toeplitz
graphs, residues of Z_n for zero-divisor graphs); internally every vertex is
addressed by its 0-based position in the sorted label tuple.
"""

from __future__ import annotations

import csv
import io
import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .errors import EmptyGraphError, InvalidFamilyError, InvalidInputError

UNREACHABLE = -1
"""Distance-matrix entry for vertex pairs in different components.

Compares equal to itself and unequal to every finite hop count, which is the
semantics resolving neighborhoods rely on.
"""

EXPORT_FORMATS = ("json", "dot", "csv")


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph with positive-integer labels."""

    labels: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    name: str = ""

    def __post_init__(self) -> None:
        labels = tuple(int(x) for x in self.labels)
        if any(b <= a for a, b in zip(labels, labels[1:])):
            raise InvalidInputError("labels must be strictly increasing")
        if labels and labels[0] < 1:
            raise InvalidInputError("labels must be positive integers")
        n = len(labels)
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < j < n):
                raise InvalidInputError(f"edge {(i, j)} is not a canonical index pair")
            if (i, j) in seen:
                raise InvalidInputError(f"duplicate edge {(i, j)}")
            seen.add((i, j))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @classmethod
    def from_label_edges(
        cls, labels: Iterable[int], edges: Iterable[tuple[int, int]], name: str = ""
    ) -> "Graph":
        """Build from labels and label pairs; self-loops are rejected."""
        labels = tuple(sorted(set(int(x) for x in labels)))
        index = {lab: i for i, lab in enumerate(labels)}
        pairs = set()
        for u, v in edges:
            if u == v:
                raise InvalidInputError(f"self-loop at {u}")
            try:
                i, j = index[u], index[v]
            except KeyError as exc:
                raise InvalidInputError(f"edge endpoint {exc.args[0]} is not a vertex") from None
            pairs.add((min(i, j), max(i, j)))
        return cls(labels, tuple(sorted(pairs)), name)

    @property
    def order(self) -> int:
        return len(self.labels)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in self.labels]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def index(self) -> dict[int, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label: int) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise InvalidInputError(f"{label} is not a vertex label") from None

    def label_edges(self) -> list[tuple[int, int]]:
        lab = self.labels
        return [(lab[i], lab[j]) for i, j in self.edges]

    def has_edge(self, u: int, v: int) -> bool:
        i, j = self.index_of(u), self.index_of(v)
        return j in self.adjacency[i]

    def degree(self, label: int) -> int:
        return len(self.adjacency[self.index_of(label)])

    def neighbors(self, label: int) -> list[int]:
        return [self.labels[j] for j in self.adjacency[self.index_of(label)]]

    def components(self) -> list[list[int]]:
        """Connected components as sorted index lists, ordered by smallest member."""
        seen = [False] * self.order
        comps = []
        for s in range(self.order):
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [s], deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.order > 0 and len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.labels, self.edges))

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<Graph{tag} order={self.order} size={len(self.edges)}>"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop counts; ``entries`` is read-only with UNREACHABLE = -1."""

    labels: tuple[int, ...]
    entries: np.ndarray

    @property
    def order(self) -> int:
        return len(self.labels)

    def distance(self, u: int, v: int) -> Optional[int]:
        """Hop count between two labels, or None when unreachable."""
        idx = {lab: i for i, lab in enumerate(self.labels)}
        d = int(self.entries[idx[u], idx[v]])
        return None if d == UNREACHABLE else d

    def to_lists(self) -> list[list[Optional[int]]]:
        return [[None if d == UNREACHABLE else int(d) for d in row] for row in self.entries]


# --- builders -----------------------------------------------------------------


def build_toeplitz(n: int, S: Iterable[int]) -> Graph:
    """Toeplitz graph T_n<S>: vertices 1..n, p ~ q iff |p - q| in S."""
    diffs = sorted(set(int(s) for s in S))
    if n < 2:
        raise InvalidFamilyError(f"Toeplitz order must be at least 2, got {n}")
    if not diffs:
        raise InvalidFamilyError("Toeplitz difference set is empty")
    bad = [s for s in diffs if not 1 <= s <= n - 1]
    if bad:
        raise InvalidFamilyError(f"differences {bad} outside 1..{n - 1}")
    edges = sorted((i, i + s) for s in diffs for i in range(n - s))
    name = f"T_{n}<{','.join(map(str, diffs))}>"
    return Graph(tuple(range(1, n + 1)), tuple(edges), name)


def build_zero_divisor(n: int) -> Graph:
    """G(Z_n): nonzero zero divisors of Z_n, adjacent when the product is 0 mod n."""
    if n < 2:
        raise InvalidInputError(f"modulus must be at least 2, got {n}")
    labels = [x for x in range(1, n) if gcd(x, n) > 1]
    if not labels:
        raise EmptyGraphError(f"Z_{n} has no nonzero zero divisors ({n} is prime or 1)")
    edges = [
        (i, j)
        for i, u in enumerate(labels)
        for j in range(i + 1, len(labels))
        if (u * labels[j]) % n == 0
    ]
    return Graph(tuple(labels), tuple(edges), f"G(Z_{n})")


def build_zero_divisor_star(n: int) -> Graph:
    """G(Z*_n): vertices 1..n-1, adjacent when the product is not a unit of Z_n."""
    if n < 3:
        raise InvalidInputError(f"modulus must be at least 3, got {n}")
    # product uv is a unit iff both factors are units, so only pairs with a nonunit factor remain
    nonunit = [gcd(x, n) > 1 for x in range(n)]
    edges = [
        (u - 1, v - 1)
        for u in range(1, n)
        for v in range(u + 1, n)
        if nonunit[(u * v) % n]
    ]
    return Graph(tuple(range(1, n)), tuple(edges), f"G(Z*_{n})")


# --- distances ----------------------------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[Optional[int]]:
    """Single-source hop counts from a label, None where unreachable."""
    s = g.index_of(source)
    dist: list[Optional[int]] = [None] * g.order
    dist[s] = 0
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    n = g.order
    if g.edges:
        rows, cols = zip(*g.edges)
        adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(n, n))
        dist = shortest_path(adj, method="D", directed=False, unweighted=True)
        finite = np.isfinite(dist)
        entries = np.full((n, n), UNREACHABLE, dtype=np.int64)
        entries[finite] = dist[finite].astype(np.int64)
    else:
        entries = np.full((n, n), UNREACHABLE, dtype=np.int64)
        np.fill_diagonal(entries, 0)
    entries.setflags(write=False)
    return DistanceMatrix(g.labels, entries)


# --- bipartiteness ------------------------------------------------------------


def is_bipartite(g: Graph) -> tuple[bool, Optional[tuple[list[int], list[int]]]]:
    """Two-color each component from its lowest-labeled vertex (side A).

    Returns the flag and, when bipartite, the two sides as sorted label lists.
    """
    color: list[Optional[int]] = [None] * g.order
    for s in range(g.order):
        if color[s] is not None:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] is None:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False, None
    side_a = [g.labels[i] for i in range(g.order) if color[i] == 0]
    side_b = [g.labels[i] for i in range(g.order) if color[i] == 1]
    return True, (side_a, side_b)


# --- serialization ------------------------------------------------------------


def graph_to_dict(g: Graph) -> dict:
    return {
        "order": g.order,
        "labels": list(g.labels),
        "edges": [list(e) for e in g.label_edges()],
    }


def graph_from_dict(data: dict) -> Graph:
    g = Graph.from_label_edges(data["labels"], [tuple(e) for e in data["edges"]])
    if g.order != data.get("order", g.order):
        raise InvalidInputError("order field disagrees with labels")
    return g


def export_graph(g: Graph, fmt: str) -> bytes:
    """Serialize deterministically as json, dot or csv (UTF-8, LF newlines)."""
    if fmt == "json":
        text = json.dumps(graph_to_dict(g), separators=(",", ":")) + "\n"
    elif fmt == "dot":
        lines = ["graph G {"]
        lines += [f'  "{lab}";' for lab in g.labels]
        lines += [f'  "{u}" -- "{v}";' for u, v in g.label_edges()]
        lines.append("}")
        text = "\n".join(lines) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["u", "v"])
        writer.writerows(g.label_edges())
        text = buf.getvalue()
    else:
        raise InvalidInputError(f"unsupported export format {fmt!r}; choose from {EXPORT_FORMATS}")
    return text.encode("utf-8")


def complete_graph(n: int) -> Graph:
    return Graph(tuple(range(1, n + 1)), tuple((i, j) for i in range(n) for j in range(i + 1, n)), f"K_{n}")


def path_graph(n: int) -> Graph:
    return Graph(tuple(range(1, n + 1)), tuple((i, i + 1) for i in range(n - 1)), f"P_{n}")


def cycle_graph(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph(tuple(range(1, n + 1)), tuple(sorted(edges)), f"C_{n}")


def union_with_isolated(g: Graph, extra: Sequence[int]) -> Graph:
    """Copy of ``g`` with additional isolated vertices."""
    labels = sorted(set(g.labels) | set(extra))
    return Graph.from_label_edges(labels, g.label_edges(), g.name)
