"""Weighted undirected graphs and Chinese Whispers label propagation.

Chinese Whispers: every node starts in its own cluster; nodes are visited in
a seeded random order, reshuffled every sweep, and each adopts the label
with the largest total incident edge weight among its neighbours (ties
broken uniformly from the same generator). Updates are sequential, so new
labels are visible within the sweep. The process stops when a sweep changes
nothing or after ``max_iterations`` sweeps.

Labels are propagated as node ids, and the visit order is a shuffle of the
id-sorted node list, so cluster memberships do not depend on node insertion
order (only the dense renumbering at the end does).
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass

import numpy as np

from .errors import DataError

DEFAULT_MAX_ITERATIONS = 20


class WeightedGraph:
    """Undirected graph with positive edge weights, nodes addressed by index."""

    def __init__(self, node_ids: list[str]):
        self.node_ids = [str(n) for n in node_ids]
        if len(set(self.node_ids)) != len(self.node_ids):
            raise ValueError("node ids must be unique")
        self.adj: list[list[tuple[int, float]]] = [[] for _ in self.node_ids]

    @property
    def n_nodes(self) -> int:
        return len(self.node_ids)

    @property
    def n_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def add_edge(self, i: int, j: int, weight: float) -> None:
        if i == j:
            raise ValueError("self-loops are not allowed")
        if weight <= 0:
            raise ValueError("edge weights must be positive")
        self.adj[i].append((j, float(weight)))
        self.adj[j].append((i, float(weight)))

    def degree(self, i: int) -> int:
        return len(self.adj[i])


def build_similarity_graph(
    ids: list[str],
    vectors: np.ndarray,
    *,
    threshold: float | None = None,
    allow_zero: bool = False,
) -> WeightedGraph:
    """Connect every vector pair whose cosine satisfies the edge rule:
    ``cos >= threshold`` when a threshold is given, ``cos > 0`` otherwise.
    The cosine becomes the edge weight. Zero vectors are rejected unless
    ``allow_zero`` is set, in which case they become isolated nodes."""
    graph = WeightedGraph(list(ids))
    matrix = np.asarray(vectors, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != graph.n_nodes:
        raise ValueError("vectors must be a 2-D array matching ids")
    norms = np.linalg.norm(matrix, axis=1)
    zero_rows = np.flatnonzero(norms == 0)
    if zero_rows.size and not allow_zero:
        raise DataError(f"zero vector for node {graph.node_ids[int(zero_rows[0])]!r}")
    safe_norms = np.where(norms == 0, 1.0, norms)
    sims = (matrix @ matrix.T) / np.outer(safe_norms, safe_norms)
    live = norms > 0
    n = graph.n_nodes
    for i in range(n):
        if not live[i]:
            continue
        for j in range(i + 1, n):
            if not live[j]:
                continue
            w = float(sims[i, j])
            if w <= 0:
                continue
            if threshold is None or w >= threshold:
                graph.add_edge(i, j, w)
    return graph


@dataclass
class Clustering:
    """Partition of graph nodes; cluster ids are dense integers from 0."""

    labels: list[int]

    def __post_init__(self):
        if self.labels:
            present = set(self.labels)
            if present != set(range(len(present))):
                raise ValueError("cluster ids must be dense from 0")

    @property
    def n_clusters(self) -> int:
        return len(set(self.labels))

    def clusters(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(self.n_clusters)]
        for node, cluster in enumerate(self.labels):
            groups[cluster].append(node)
        return groups

    def to_jsonl(self, node_ids: list[str]) -> str:
        lines = [
            json.dumps({"node": node_ids[i], "cluster": c}, ensure_ascii=False)
            for i, c in enumerate(self.labels)
        ]
        return "\n".join(lines) + ("\n" if lines else "")


def chinese_whispers(
    graph: WeightedGraph,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    seed: int = 0,
) -> Clustering:
    if max_iterations < 1:
        raise ValueError("max_iterations must be >= 1")
    rng = random.Random(seed)
    labels: list[str] = list(graph.node_ids)
    visit = sorted(range(graph.n_nodes), key=lambda i: graph.node_ids[i])
    for _ in range(max_iterations):
        rng.shuffle(visit)
        changed = 0
        for i in visit:
            if not graph.adj[i]:
                continue  # isolated nodes keep their own label
            tally: dict[str, float] = {}
            for j, weight in graph.adj[i]:
                label = labels[j]
                tally[label] = tally.get(label, 0.0) + weight
            best = max(tally.values())
            tied = sorted(label for label, total in tally.items() if total == best)
            winner = tied[0] if len(tied) == 1 else rng.choice(tied)
            if winner != labels[i]:
                labels[i] = winner
                changed += 1
        if changed == 0:
            break
    dense: dict[str, int] = {}
    renumbered = []
    for label in labels:
        if label not in dense:
            dense[label] = len(dense)
        renumbered.append(dense[label])
    return Clustering(renumbered)


def derive_seed(seed: int, *parts) -> int:
    """Stable per-task seed: master seed XOR a keyed digest of the parts.
    (Python's builtin hash() is salted per process, so it is not used.)"""
    digest = hashlib.blake2b(digest_size=8)
    for part in parts:
        digest.update(str(part).encode("utf-8"))
        digest.update(b"\x00")
    return (seed ^ int.from_bytes(digest.digest(), "big")) & 0x7FFFFFFFFFFFFFFF
