"""Occurrence clustering from masked-LM substitute predictions.

Per lemma: for each occurrence, draw substitute tokens into ``r`` sparse
count vectors (l per side in one-side mode, 2l from the single list in
both-sides mode), TF-IDF-weight the whole vector set, connect every
positive-cosine pair into a graph, cluster with Chinese Whispers and map
each occurrence to the cluster holding most of its vectors (exact vote ties
resolved by a seeded uniform choice).
"""

from __future__ import annotations

import json
import math
import random
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .clustering import (
    DEFAULT_MAX_ITERATIONS,
    Clustering,
    build_similarity_graph,
    chinese_whispers,
    derive_seed,
)
from .corpus import Corpus, collect_occurrences, DEFAULT_OCCURRENCE_CAP
from .errors import ConfigError, DataError

DEFAULT_K = 20
DEFAULT_R = 20
DEFAULT_L_ONE_SIDE = 4
DEFAULT_L_BOTH_SIDES = 6

MODES = ("one-side", "both-sides")
PATTERNS = ("and", "substitution")
RECORD_SIDES = ("left", "right", "both")


def default_l(mode: str) -> int:
    return DEFAULT_L_ONE_SIDE if mode == "one-side" else DEFAULT_L_BOTH_SIDES


@dataclass
class SubstituteRecord:
    """One prediction list for one (occurrence, side)."""

    occurrence_id: str
    lemma: str
    pos: str
    mode: str  # "left" | "right" | "both"
    pattern: str
    predictions: list[tuple[str, float]]  # ordered by score descending


def load_substitutes(
    path,
    lemma: str | None = None,
    pos: str | None = None,
    pattern: str | None = None,
    lowercase: bool = False,
) -> list[SubstituteRecord]:
    """Read a substitutes JSONL file, optionally filtered by lemma/pos/pattern.
    Predictions are sorted by score descending and any prediction equal to
    the record's own lemma is dropped (the file contract excludes the target,
    this just makes the exclusion hold defensively)."""
    records: list[SubstituteRecord] = []
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                raw = json.loads(line)
            except json.JSONDecodeError as exc:
                raise DataError(f"line {line_no}: invalid JSON ({exc.msg})") from None
            try:
                occurrence = raw["occurrence"]
                rec_lemma = raw["lemma"]
                rec_pos = raw["pos"]
                mode = raw["mode"]
                rec_pattern = raw["pattern"]
                predictions = raw["predictions"]
            except (KeyError, TypeError) as exc:
                raise DataError(f"line {line_no}: missing field {exc}") from None
            if mode not in RECORD_SIDES:
                raise DataError(f"line {line_no}: bad mode {mode!r}")
            if rec_pattern not in PATTERNS:
                raise DataError(f"line {line_no}: bad pattern {rec_pattern!r}")
            if not isinstance(predictions, list):
                raise DataError(f"line {line_no}: predictions must be a list")
            if lemma is not None and rec_lemma != lemma:
                continue
            if pos is not None and rec_pos != pos:
                continue
            if pattern is not None and rec_pattern != pattern:
                continue
            parsed: list[tuple[str, float]] = []
            for p in predictions:
                try:
                    token, score = p["token"], float(p["score"])
                except (KeyError, TypeError, ValueError):
                    raise DataError(f"line {line_no}: malformed prediction {p!r}") from None
                if lowercase:
                    token = token.lower()
                if token == rec_lemma:
                    continue
                parsed.append((token, score))
            parsed.sort(key=lambda ts: -ts[1])
            records.append(
                SubstituteRecord(occurrence, rec_lemma, rec_pos, mode, rec_pattern, parsed)
            )
    return records


@dataclass
class OccurrencePredictions:
    """Prediction token lists for one occurrence, keyed by side."""

    occurrence_id: str
    left: list[str] | None = None
    right: list[str] | None = None
    both: list[str] | None = None

    def empty(self) -> bool:
        return not (self.left or self.right or self.both)


def group_records(
    records: list[SubstituteRecord], mode: str
) -> tuple[dict[str, OccurrencePredictions], Counter]:
    """Group records by occurrence, keeping the sides relevant to ``mode``.
    Duplicate (occurrence, side) records keep the first one, counted as a
    warning."""
    wanted = ("left", "right") if mode == "one-side" else ("both",)
    grouped: dict[str, OccurrencePredictions] = {}
    warnings: Counter = Counter()
    for record in records:
        if record.mode not in wanted:
            continue
        preds = grouped.setdefault(record.occurrence_id, OccurrencePredictions(record.occurrence_id))
        tokens = [token for token, _ in record.predictions]
        if getattr(preds, record.mode) is not None:
            warnings["duplicate_records"] += 1
            continue
        setattr(preds, record.mode, tokens)
    return grouped, warnings


@dataclass
class RepresentativeVector:
    """Sparse count vector over drawn substitute tokens for one draw."""

    occurrence_id: str
    draw_index: int
    counts: dict[str, int]
    weighted: dict[str, float] | None = None
    short: bool = False  # a prediction list was shorter than the draw size

    @property
    def node_id(self) -> str:
        return f"{self.occurrence_id}#{self.draw_index}"


def build_representative_vectors(
    preds: OccurrencePredictions,
    mode: str,
    l: int,
    r: int,
    seed: int,
) -> list[RepresentativeVector]:
    """Draw ``r`` vectors for one occurrence, each sampling without
    replacement: l tokens per side in one-side mode (a token drawn on both
    sides counts twice), 2l tokens from the single list otherwise. A list
    shorter than its draw size is taken whole and the vector flagged short.
    An occurrence at a sentence edge has a single usable side in one-side
    mode; all 2l tokens then come from it."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if l < 1 or r < 1:
        raise ValueError("l and r must be positive")
    if preds.empty():
        raise DataError(f"no predictions for occurrence {preds.occurrence_id!r}")
    if mode == "both-sides" and preds.both is None:
        raise DataError(f"both-sides mode needs a 'both' record for {preds.occurrence_id!r}")
    rng = random.Random(seed)
    vectors: list[RepresentativeVector] = []
    if mode == "one-side" and preds.left and preds.right:
        for k in range(r):
            drawn = rng.sample(preds.left, min(l, len(preds.left)))
            drawn += rng.sample(preds.right, min(l, len(preds.right)))
            short = len(preds.left) < l or len(preds.right) < l
            vectors.append(
                RepresentativeVector(preds.occurrence_id, k, dict(Counter(drawn)), short=short)
            )
    else:
        pool = preds.both if mode == "both-sides" else (preds.left or preds.right)
        take = min(2 * l, len(pool))
        for k in range(r):
            drawn = rng.sample(pool, take)
            vectors.append(
                RepresentativeVector(
                    preds.occurrence_id, k, dict(Counter(drawn)), short=take < 2 * l
                )
            )
    return vectors


@dataclass
class RepresentativeSpace:
    """Per-lemma token-to-coordinate index over all drawn tokens."""

    lemma: str
    pos: str
    index: dict[str, int] = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.index)


def build_space(
    vectors: list[RepresentativeVector], lemma: str = "", pos: str = ""
) -> RepresentativeSpace:
    tokens = sorted({token for vector in vectors for token in vector.counts})
    return RepresentativeSpace(lemma, pos, {token: i for i, token in enumerate(tokens)})


def tfidf_transform(vectors: list[RepresentativeVector]) -> list[RepresentativeVector]:
    """Fill ``weighted`` with count * ln(N / df) per token, N the number of
    vectors and df the number of vectors containing the token. Tokens present
    in every vector get weight 0 and are dropped from the sparse map."""
    if not vectors:
        raise ValueError("at least one vector required")
    n = len(vectors)
    df: Counter = Counter()
    for vector in vectors:
        df.update(vector.counts.keys())
    for vector in vectors:
        weighted = {}
        for token, count in vector.counts.items():
            value = count * math.log(n / df[token])
            if value != 0.0:
                weighted[token] = value
        vector.weighted = weighted
    return vectors


def cluster_representatives(
    vectors: list[RepresentativeVector],
    seed: int,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> Clustering:
    """Chinese Whispers over the graph connecting every positive-cosine pair
    of TF-IDF-weighted vectors. All-zero vectors (every token at df = N)
    become isolated nodes, hence singleton clusters."""
    if not vectors:
        raise ValueError("at least one vector required")
    if any(vector.weighted is None for vector in vectors):
        raise ValueError("vectors must be TF-IDF-weighted first")
    space = build_space(vectors)
    matrix = np.zeros((len(vectors), space.size), dtype=np.float64)
    for row, vector in enumerate(vectors):
        for token, value in vector.weighted.items():
            matrix[row, space.index[token]] = value
    ids = [vector.node_id for vector in vectors]
    graph = build_similarity_graph(ids, matrix, threshold=None, allow_zero=True)
    return chinese_whispers(graph, max_iterations=max_iterations, seed=seed)


@dataclass
class OccurrenceMapping:
    occurrence_id: str
    cluster: int
    votes: dict[int, int]
    tie_broken: bool

    def to_dict(self) -> dict:
        return {
            "occurrence": self.occurrence_id,
            "cluster": self.cluster,
            "votes": {str(c): n for c, n in sorted(self.votes.items())},
            "tie_broken": self.tie_broken,
        }


def map_occurrences(
    clustering: Clustering,
    vectors: list[RepresentativeVector],
    seed: int,
) -> list[OccurrenceMapping]:
    """Map each occurrence to the cluster holding most of its vectors.
    Exact vote ties are resolved by a seeded uniform choice and flagged."""
    if len(clustering.labels) != len(vectors):
        raise ValueError("clustering does not cover all vectors")
    rng = random.Random(seed)
    order: list[str] = []
    votes_by_occ: dict[str, Counter] = {}
    for index, vector in enumerate(vectors):
        if vector.occurrence_id not in votes_by_occ:
            order.append(vector.occurrence_id)
            votes_by_occ[vector.occurrence_id] = Counter()
        votes_by_occ[vector.occurrence_id][clustering.labels[index]] += 1
    mappings = []
    for occurrence_id in order:
        votes = votes_by_occ[occurrence_id]
        best = max(votes.values())
        tied = sorted(cluster for cluster, n in votes.items() if n == best)
        winner = tied[0] if len(tied) == 1 else rng.choice(tied)
        mappings.append(
            OccurrenceMapping(occurrence_id, winner, dict(sorted(votes.items())), len(tied) > 1)
        )
    return mappings


def run_method_two(
    corpus: Corpus,
    lemma: str,
    pos: str,
    substitutes_path,
    mode: str,
    pattern: str,
    l: int | None = None,
    r: int = DEFAULT_R,
    seed: int = 0,
    cap: int = DEFAULT_OCCURRENCE_CAP,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    lowercase: bool = False,
) -> tuple[list[OccurrenceMapping], Counter]:
    """Full per-lemma pipeline from a substitutes file to an
    occurrence-to-cluster table. Occurrences without predictions are dropped
    with a warning count."""
    if mode not in MODES:
        raise ConfigError(f"mode must be one of {MODES}")
    if pattern not in PATTERNS:
        raise ConfigError(f"pattern must be one of {PATTERNS}")
    if mode == "both-sides" and pattern != "substitution":
        raise ConfigError("both-sides mode supports only the substitution pattern")
    if l is None:
        l = default_l(mode)
    records = load_substitutes(
        substitutes_path, lemma=lemma, pos=pos, pattern=pattern, lowercase=lowercase
    )
    grouped, warnings = group_records(records, mode)
    vectors: list[RepresentativeVector] = []
    for occ in collect_occurrences(corpus, lemma, pos, cap=cap):
        preds = grouped.get(occ.id)
        if preds is None or preds.empty():
            warnings["missing_predictions"] += 1
            continue
        vectors.extend(
            build_representative_vectors(preds, mode, l, r, derive_seed(seed, occ.id))
        )
    if not vectors:
        raise DataError(f"no usable predictions for {lemma}/{pos} in {substitutes_path}")
    tfidf_transform(vectors)
    clustering = cluster_representatives(
        vectors, derive_seed(seed, "cluster"), max_iterations=max_iterations
    )
    mappings = map_occurrences(clustering, vectors, derive_seed(seed, "map"))
    return mappings, warnings
