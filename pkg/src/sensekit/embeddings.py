"""Static word-embedding store with cosine and nearest-neighbour queries.

File format is word2vec text: a header line ``V D`` followed by V lines of
``word f_1 ... f_D``, space separated, UTF-8.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import DataError, EmbeddingFormatError, UnknownWordError


@dataclass(frozen=True)
class Neighbor:
    word: str
    similarity: float


class EmbeddingStore:
    """Vocabulary-indexed dense matrix. Rows are validated to be nonzero so
    every cosine query is well defined."""

    def __init__(self, vocab: list[str], matrix: np.ndarray, warnings: Counter | None = None):
        self.vocab = list(vocab)
        self.matrix = np.asarray(matrix, dtype=np.float64)
        self.warnings: Counter = warnings if warnings is not None else Counter()
        if self.matrix.ndim != 2 or self.matrix.shape[0] != len(self.vocab):
            raise ValueError("matrix rows must match vocabulary size")
        if len(set(self.vocab)) != len(self.vocab):
            raise ValueError("vocabulary entries must be unique")
        self.index = {word: i for i, word in enumerate(self.vocab)}
        self.norms = np.linalg.norm(self.matrix, axis=1)
        if len(self.vocab) and not np.all(self.norms > 0):
            bad = self.vocab[int(np.argmin(self.norms))]
            raise EmbeddingFormatError(f"zero vector for word {bad!r}")

    def __len__(self) -> int:
        return len(self.vocab)

    def __contains__(self, word: str) -> bool:
        return word in self.index

    @property
    def dim(self) -> int:
        return self.matrix.shape[1]

    def vector(self, word: str) -> np.ndarray:
        try:
            return self.matrix[self.index[word]]
        except KeyError:
            raise UnknownWordError(word) from None

    def _resolve(self, operand) -> tuple[np.ndarray, float]:
        if isinstance(operand, str):
            i = self.index.get(operand)
            if i is None:
                raise UnknownWordError(operand)
            return self.matrix[i], float(self.norms[i])
        vec = np.asarray(operand, dtype=np.float64)
        norm = float(np.linalg.norm(vec))
        if norm == 0.0:
            raise DataError("cannot take cosine of a zero vector")
        return vec, norm

    def cosine(self, a, b) -> float:
        """Cosine similarity between two words or raw vectors, in [-1, 1]."""
        va, na = self._resolve(a)
        vb, nb = self._resolve(b)
        return float(np.dot(va, vb) / (na * nb))

    def nearest_neighbors(
        self, word: str, limit: int, floor: float | None = None
    ) -> list[Neighbor]:
        """Up to ``limit`` words most similar to ``word`` (query excluded),
        sorted by similarity descending, ties broken by vocabulary order.
        With ``floor`` given, only neighbours with similarity >= floor."""
        if word not in self.index:
            raise UnknownWordError(word)
        if limit <= 0:
            return []
        qi = self.index[word]
        sims = self.matrix @ self.matrix[qi] / (self.norms * self.norms[qi])
        order = np.argsort(-sims, kind="stable")
        neighbors: list[Neighbor] = []
        for j in order:
            if j == qi:
                continue
            similarity = float(sims[j])
            if floor is not None and similarity < floor:
                break  # sorted descending, nothing below can qualify
            neighbors.append(Neighbor(self.vocab[j], similarity))
            if len(neighbors) == limit:
                break
        return neighbors


def load_embeddings(path) -> EmbeddingStore:
    """Load a word2vec text file. Zero vectors are skipped and duplicate
    words keep their first row, both counted in ``store.warnings``; a row
    with the wrong number of values raises with its line number."""
    warnings: Counter = Counter()
    with open(path, encoding="utf-8") as handle:
        header = handle.readline().split()
        if len(header) != 2:
            raise EmbeddingFormatError("line 1: header must be 'V D'")
        try:
            declared, dim = int(header[0]), int(header[1])
        except ValueError:
            raise EmbeddingFormatError("line 1: header must be two integers") from None
        if dim < 1:
            raise EmbeddingFormatError("line 1: dimension must be positive")
        vocab: list[str] = []
        rows: list[np.ndarray] = []
        seen: set[str] = set()
        for line_no, line in enumerate(handle, start=2):
            parts = line.split()
            if not parts:
                continue
            if len(parts) != dim + 1:
                raise EmbeddingFormatError(
                    f"line {line_no}: expected {dim} values, got {len(parts) - 1}"
                )
            word = parts[0]
            try:
                values = np.array([float(x) for x in parts[1:]], dtype=np.float64)
            except ValueError:
                raise EmbeddingFormatError(f"line {line_no}: non-numeric value") from None
            if word in seen:
                warnings["duplicate_word"] += 1
                continue
            if not np.any(values):
                warnings["zero_vector"] += 1
                continue
            seen.add(word)
            vocab.append(word)
            rows.append(values)
    if len(vocab) != declared:
        warnings["row_count_mismatch"] = abs(declared - len(vocab))
    matrix = np.vstack(rows) if rows else np.zeros((0, dim))
    return EmbeddingStore(vocab, matrix, warnings)
