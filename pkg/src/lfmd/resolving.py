"""Local and global resolving neighborhoods.

R{u,v} is the set of vertices x with d(x,u) != d(x,v). Unreachable distances
compare equal to each other, so a vertex in a third component never resolves.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .errors import InvalidInputError, NoEdgesError, NotAdjacentError
from .graphs import DistanceMatrix, Graph, all_pairs_distances

_CHUNK = 4096


@dataclass(frozen=True)
class EdgeRecord:
    edge: tuple[int, int]
    neighborhood: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return len(self.neighborhood)


@dataclass(frozen=True)
class ResolvingProfile:
    order: int
    records: tuple[EdgeRecord, ...]
    ell: int
    beta: int
    ell_witnesses: tuple[tuple[int, int], ...]
    beta_witnesses: tuple[tuple[int, int], ...]

    def cardinalities(self) -> dict[tuple[int, int], int]:
        return {r.edge: r.cardinality for r in self.records}

    def neighborhood(self, u: int, v: int) -> tuple[int, ...]:
        key = (min(u, v), max(u, v))
        for r in self.records:
            if r.edge == key:
                return r.neighborhood
        raise NotAdjacentError(f"{u} and {v} are not adjacent")

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "ell": self.ell,
            "beta": self.beta,
            "ell_witnesses": [list(e) for e in self.ell_witnesses],
            "beta_witnesses": [list(e) for e in self.beta_witnesses],
            "edges": [
                {"edge": list(r.edge), "cardinality": r.cardinality, "neighborhood": list(r.neighborhood)}
                for r in self.records
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["u", "v", "cardinality", "neighborhood"])
        for r in self.records:
            writer.writerow([r.edge[0], r.edge[1], r.cardinality, " ".join(map(str, r.neighborhood))])
        return buf.getvalue()


def _pair_mask(d: DistanceMatrix, i: int, j: int) -> np.ndarray:
    return d.entries[:, i] != d.entries[:, j]


def local_resolving_neighborhood(g: Graph, d: DistanceMatrix, edge: tuple[int, int]) -> tuple[int, ...]:
    u, v = edge
    if u == v or not g.has_edge(u, v):
        raise NotAdjacentError(f"{u} and {v} are not adjacent")
    mask = _pair_mask(d, g.index_of(u), g.index_of(v))
    return tuple(g.labels[x] for x in np.flatnonzero(mask))


def global_resolving_neighborhood(g: Graph, d: DistanceMatrix, pair: tuple[int, int]) -> tuple[int, ...]:
    u, v = pair
    if u == v:
        raise InvalidInputError("a resolving neighborhood needs two distinct vertices")
    mask = _pair_mask(d, g.index_of(u), g.index_of(v))
    return tuple(g.labels[x] for x in np.flatnonzero(mask))


def iter_masks(
    d: DistanceMatrix, pairs: list[tuple[int, int]], chunk: int = _CHUNK
) -> Iterator[np.ndarray]:
    """Yield boolean blocks of shape (len(block), order), one row per index pair."""
    ent = d.entries
    for start in range(0, len(pairs), chunk):
        block = np.asarray(pairs[start : start + chunk], dtype=np.intp)
        yield (ent[:, block[:, 0]] != ent[:, block[:, 1]]).T


def edge_cardinalities(g: Graph, d: Optional[DistanceMatrix] = None) -> np.ndarray:
    """|R{e}| for each edge in canonical order, without materializing the sets."""
    if d is None:
        d = all_pairs_distances(g)
    edges = list(g.edges)
    if not edges:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate([m.sum(axis=1) for m in iter_masks(d, edges)])


def ell_beta(g: Graph, d: Optional[DistanceMatrix] = None) -> tuple[int, int]:
    if not g.edges:
        raise NoEdgesError(f"{g!r} has no edges")
    card = edge_cardinalities(g, d)
    return int(card.min()), int(card.max())


def edge_resolving_profile(g: Graph, d: Optional[DistanceMatrix] = None) -> ResolvingProfile:
    if not g.edges:
        raise NoEdgesError(f"{g!r} has no edges")
    if d is None:
        d = all_pairs_distances(g)
    labels = g.labels
    records = []
    edges = list(g.edges)
    pos = 0
    for block in iter_masks(d, edges):
        for row in block:
            i, j = edges[pos]
            pos += 1
            records.append(EdgeRecord((labels[i], labels[j]), tuple(labels[x] for x in np.flatnonzero(row))))
    records.sort(key=lambda r: r.edge)
    cards = [r.cardinality for r in records]
    ell, beta = min(cards), max(cards)
    return ResolvingProfile(
        order=g.order,
        records=tuple(records),
        ell=ell,
        beta=beta,
        ell_witnesses=tuple(r.edge for r in records if r.cardinality == ell),
        beta_witnesses=tuple(r.edge for r in records if r.cardinality == beta),
    )


def diff_against_listing(
    profile: ResolvingProfile, vertices: tuple[int, ...], complements: dict[tuple[int, int], set[int]]
) -> list[dict]:
    """Compare computed neighborhoods with a printed listing of V minus R{u,v}.

    Returns one entry per listed pair whose recomputed set disagrees.
    """
    universe = set(vertices)
    out = []
    for (u, v), missing in sorted(complements.items(), key=lambda kv: (min(kv[0]), max(kv[0]))):
        key = (min(u, v), max(u, v))
        try:
            computed_missing = universe - set(profile.neighborhood(u, v))
        except NotAdjacentError:
            out.append({"edge": key, "problem": "listed pair is not an edge"})
            continue
        if computed_missing != set(missing):
            out.append(
                {"edge": key, "listed_missing": sorted(missing), "computed_missing": sorted(computed_missing)}
            )
    return out
