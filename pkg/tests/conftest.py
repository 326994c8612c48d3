import json

import numpy as np
import pytest

from sensekit.corpus import Occurrence, Sentence, Token, load_corpus
from sensekit.embeddings import EmbeddingStore


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8") as handle:
        for row in rows:
            handle.write(json.dumps(row, ensure_ascii=False) + "\n")
    return path


def sentence_record(doc_id, sent_index, lemmas, pos="noun"):
    return {
        "doc_id": doc_id,
        "sent_index": sent_index,
        "tokens": [{"orth": lemma, "lemma": lemma, "pos": pos} for lemma in lemmas],
    }


def make_occurrence(lemmas, token_index, lemma=None, pos="noun", doc_id="d", sent_index=0):
    tokens = [Token(l, l, pos) for l in lemmas]
    sentence = Sentence(doc_id, sent_index, tokens)
    target = lemma if lemma is not None else lemmas[token_index]
    return Occurrence(
        id=f"{doc_id}:{sent_index}:{token_index}",
        lemma=target,
        pos=pos,
        sentence=sentence,
        token_index=token_index,
    )


def store_from(words_to_vectors):
    vocab = list(words_to_vectors)
    matrix = np.array([words_to_vectors[w] for w in vocab], dtype=float)
    return EmbeddingStore(vocab, matrix)


@pytest.fixture
def two_sentence_corpus(tmp_path):
    # 8 + 6 = 14 tokens in 2 sentences (counted by hand)
    path = tmp_path / "corpus.jsonl"
    write_jsonl(
        path,
        [
            sentence_record("d1", 0, ["the", "old", "bank", "by", "the", "river", "was", "quiet"]),
            sentence_record("d1", 1, ["a", "bank", "holds", "money", "for", "people"]),
        ],
    )
    return load_corpus(path)
