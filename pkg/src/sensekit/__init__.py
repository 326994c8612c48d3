"""Unsupervised word sense induction and disambiguation toolkit.

Two pipelines over a tagged corpus: sense clusters induced from embedding
neighbourhoods with context-vector assignment, and occurrence clustering of
masked-LM substitute vectors; plus BCubed evaluation against gold senses.
"""

__version__ = "0.1.0"

from .corpus import (
    Corpus,
    Occurrence,
    SenseInventory,
    Sentence,
    Token,
    collect_occurrences,
    load_annotations,
    load_corpus,
    load_inventory,
)
from .embeddings import EmbeddingStore, Neighbor, load_embeddings
from .clustering import (
    Clustering,
    WeightedGraph,
    build_similarity_graph,
    chinese_whispers,
    derive_seed,
)
from .errors import (
    AnnotationError,
    ConfigError,
    CorpusFormatError,
    DataError,
    EmbeddingFormatError,
    SensekitError,
    UnknownWordError,
)

__all__ = [
    "AnnotationError",
    "Clustering",
    "ConfigError",
    "Corpus",
    "CorpusFormatError",
    "DataError",
    "EmbeddingFormatError",
    "EmbeddingStore",
    "Neighbor",
    "Occurrence",
    "SenseInventory",
    "SensekitError",
    "Sentence",
    "Token",
    "UnknownWordError",
    "WeightedGraph",
    "build_similarity_graph",
    "chinese_whispers",
    "collect_occurrences",
    "derive_seed",
    "load_annotations",
    "load_corpus",
    "load_embeddings",
    "load_inventory",
]
