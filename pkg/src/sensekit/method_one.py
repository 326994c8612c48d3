"""Sense induction from embedding neighbourhoods, and occurrence assignment
via averaged context vectors.

Per lemma: collect the words most similar to it (everything at or above the
similarity floor when that yields enough items, otherwise simply the top
``minimum`` words), connect neighbour pairs at or above the floor into a
graph, cluster it with Chinese Whispers, then assign each occurrence to the
cluster closest to the mean vector of its context words.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clustering import (
    DEFAULT_MAX_ITERATIONS,
    build_similarity_graph,
    chinese_whispers,
)
from .corpus import Corpus, Occurrence, collect_occurrences, DEFAULT_OCCURRENCE_CAP
from .embeddings import EmbeddingStore, Neighbor
from .errors import UnknownWordError

DEFAULT_FLOOR = 0.4
DEFAULT_MINIMUM = 100
DEFAULT_WINDOW = 5
DEFAULT_MIN_SUPPORT = 4

VARIANTS = ("avg", "max")


@dataclass
class NeighborSet:
    """Collected neighbour set plus a record of which rule produced it."""

    lemma: str
    neighbors: list[Neighbor]
    rule: str  # "floor" (everything >= floor) or "top" (fallback top-minimum)
    floor: float
    minimum: int
    shortfall: bool  # fallback could not reach `minimum` items


def collect_neighbor_set(
    store: EmbeddingStore,
    lemma: str,
    floor: float = DEFAULT_FLOOR,
    minimum: int = DEFAULT_MINIMUM,
) -> NeighborSet:
    """Neighbours with similarity >= floor when at least ``minimum`` of them
    exist, otherwise the ``minimum`` most similar words regardless of floor."""
    if lemma not in store:
        raise UnknownWordError(lemma)
    above = store.nearest_neighbors(lemma, limit=len(store), floor=floor)
    if len(above) >= minimum:
        return NeighborSet(lemma, above, "floor", floor, minimum, False)
    top = store.nearest_neighbors(lemma, limit=minimum)
    return NeighborSet(lemma, top, "top", floor, minimum, len(top) < minimum)


@dataclass
class SenseClusters:
    """Clusters over a lemma's neighbour set; each cluster stands for a sense."""

    lemma: str
    pos: str
    clusters: list[list[str]]
    source: NeighborSet

    @property
    def n_clusters(self) -> int:
        return len(self.clusters)


def induce_senses(
    store: EmbeddingStore,
    lemma: str,
    pos: str,
    seed: int,
    floor: float = DEFAULT_FLOOR,
    minimum: int = DEFAULT_MINIMUM,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> SenseClusters:
    neighbor_set = collect_neighbor_set(store, lemma, floor=floor, minimum=minimum)
    words = [n.word for n in neighbor_set.neighbors]
    matrix = np.stack([store.vector(w) for w in words]) if words else np.zeros((0, store.dim))
    graph = build_similarity_graph(words, matrix, threshold=floor)
    clustering = chinese_whispers(graph, max_iterations=max_iterations, seed=seed)
    clusters: list[list[str]] = [[] for _ in range(clustering.n_clusters)]
    for index, cluster in enumerate(clustering.labels):
        clusters[cluster].append(words[index])
    return SenseClusters(lemma, pos, clusters, neighbor_set)


def _is_punctuation(lemma: str) -> bool:
    return not any(ch.isalnum() for ch in lemma)


@dataclass
class ContextVector:
    occurrence_id: str
    vector: np.ndarray
    support: int  # number of context words actually averaged


def context_vector(
    store: EmbeddingStore,
    occ: Occurrence,
    window: int = DEFAULT_WINDOW,
    min_support: int = DEFAULT_MIN_SUPPORT,
) -> ContextVector | None:
    """Mean vector of up to ``window`` non-punctuation lemmas on each side of
    the target. Out-of-vocabulary lemmas are dropped; fewer than
    ``min_support`` surviving words means no context vector."""
    tokens = occ.sentence.tokens
    lemmas: list[str] = []
    taken = 0
    for i in range(occ.token_index - 1, -1, -1):
        if taken == window:
            break
        if _is_punctuation(tokens[i].lemma):
            continue
        lemmas.append(tokens[i].lemma)
        taken += 1
    taken = 0
    for i in range(occ.token_index + 1, len(tokens)):
        if taken == window:
            break
        if _is_punctuation(tokens[i].lemma):
            continue
        lemmas.append(tokens[i].lemma)
        taken += 1
    vectors = [store.vector(lemma) for lemma in lemmas if lemma in store]
    if len(vectors) < min_support:
        return None
    return ContextVector(occ.id, np.mean(vectors, axis=0), len(vectors))


@dataclass
class Assignment:
    """Occurrence-to-cluster decision. ``cluster_index`` is None (score 0.0)
    when the context was too short to produce a context vector."""

    occurrence_id: str
    lemma: str
    cluster_index: int | None
    score: float
    variant: str

    def to_dict(self) -> dict:
        return {
            "occurrence": self.occurrence_id,
            "lemma": self.lemma,
            "cluster": self.cluster_index,
            "score": self.score,
            "variant": self.variant,
        }


def assign_occurrence(
    senses: SenseClusters,
    ctx: ContextVector,
    store: EmbeddingStore,
    variant: str,
) -> Assignment:
    """Score every cluster against the context vector: mean member similarity
    for ``avg``, best member similarity for ``max``. Ties go to the lowest
    cluster index."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if not senses.clusters:
        raise ValueError(f"no sense clusters for {senses.lemma!r}")
    best_index = 0
    best_score = -np.inf
    for index, words in enumerate(senses.clusters):
        sims = [store.cosine(word, ctx.vector) for word in words]
        score = float(np.mean(sims)) if variant == "avg" else float(max(sims))
        if score > best_score:
            best_index, best_score = index, score
    return Assignment(ctx.occurrence_id, senses.lemma, best_index, best_score, variant)


def run_method_one(
    store: EmbeddingStore,
    corpus: Corpus,
    lemma: str,
    pos: str,
    variant: str,
    seed: int,
    floor: float = DEFAULT_FLOOR,
    minimum: int = DEFAULT_MINIMUM,
    window: int = DEFAULT_WINDOW,
    min_support: int = DEFAULT_MIN_SUPPORT,
    cap: int = DEFAULT_OCCURRENCE_CAP,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> tuple[SenseClusters, list[Assignment]]:
    """Per-lemma pipeline: induce senses, then assign every occurrence."""
    senses = induce_senses(
        store, lemma, pos, seed, floor=floor, minimum=minimum, max_iterations=max_iterations
    )
    assignments: list[Assignment] = []
    for occ in collect_occurrences(corpus, lemma, pos, cap=cap):
        ctx = context_vector(store, occ, window=window, min_support=min_support)
        if ctx is None:
            assignments.append(Assignment(occ.id, lemma, None, 0.0, variant))
        else:
            assignments.append(assign_occurrence(senses, ctx, store, variant))
    return senses, assignments
