"""Corpus, annotation and sense-inventory ingestion.

All on-disk formats are UTF-8 JSONL, one record per line:

* corpus: ``{"doc_id": str, "sent_index": int, "tokens": [{"orth", "lemma", "pos"}]}``
* annotations: ``{"doc_id": str, "sent_index": int, "token_index": int, "sense": str}``
* inventory: ``{"lemma": str, "pos": str, "senses": [str, ...]}`` where list
  order defines the first sense.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from .errors import AnnotationError, CorpusFormatError

POS_TAGS = ("noun", "verb", "adj", "other")

DEFAULT_OCCURRENCE_CAP = 1000


@dataclass(frozen=True)
class Token:
    orth: str
    lemma: str
    pos: str


@dataclass
class Sentence:
    doc_id: str
    sent_index: int
    tokens: list[Token]

    @property
    def key(self) -> tuple[str, int]:
        return (self.doc_id, self.sent_index)


@dataclass
class Occurrence:
    """One target-word token in a sentence."""

    id: str
    lemma: str
    pos: str
    sentence: Sentence
    token_index: int
    gold_sense: str | None = None


def occurrence_id(doc_id: str, sent_index: int, token_index: int) -> str:
    return f"{doc_id}:{sent_index}:{token_index}"


class Corpus:
    """Sentences plus gold annotations; read-only once loading is done."""

    def __init__(self) -> None:
        self.sentences: list[Sentence] = []
        self.warnings: Counter = Counter()
        self._by_key: dict[tuple[str, int], Sentence] = {}
        self._gold: dict[tuple[str, int, int], str] = {}

    def __len__(self) -> int:
        return len(self.sentences)

    @property
    def n_tokens(self) -> int:
        return sum(len(s.tokens) for s in self.sentences)

    def sentence(self, doc_id: str, sent_index: int) -> Sentence | None:
        return self._by_key.get((doc_id, sent_index))

    def gold_sense(self, doc_id: str, sent_index: int, token_index: int) -> str | None:
        return self._gold.get((doc_id, sent_index, token_index))

    def _add_sentence(self, sentence: Sentence, line_no: int) -> None:
        if sentence.key in self._by_key:
            raise CorpusFormatError(
                f"line {line_no}: duplicate sentence key {sentence.key!r}"
            )
        self._by_key[sentence.key] = sentence
        self.sentences.append(sentence)


def _parse_token(raw: object, line_no: int, warnings: Counter) -> Token:
    if not isinstance(raw, dict):
        raise CorpusFormatError(f"line {line_no}: token is not an object: {raw!r}")
    try:
        orth, lemma, pos = raw["orth"], raw["lemma"], raw["pos"]
    except KeyError as exc:
        raise CorpusFormatError(f"line {line_no}: token missing field {exc}") from None
    if not isinstance(orth, str) or not orth:
        raise CorpusFormatError(f"line {line_no}: empty or non-string orth")
    if not isinstance(lemma, str) or not lemma:
        raise CorpusFormatError(f"line {line_no}: empty or non-string lemma")
    if pos not in POS_TAGS:
        warnings["unknown_pos"] += 1
        pos = "other"
    return Token(orth=orth, lemma=lemma, pos=pos)


def load_corpus(path) -> Corpus:
    """Read a JSONL corpus file. Unknown POS tags map to ``other`` (counted
    in ``corpus.warnings``); any malformed record raises with its line number."""
    corpus = Corpus()
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusFormatError(f"line {line_no}: invalid JSON ({exc.msg})") from None
            if not isinstance(record, dict):
                raise CorpusFormatError(f"line {line_no}: record is not an object")
            try:
                doc_id = record["doc_id"]
                sent_index = record["sent_index"]
                raw_tokens = record["tokens"]
            except KeyError as exc:
                raise CorpusFormatError(f"line {line_no}: missing field {exc}") from None
            if not isinstance(doc_id, str) or not doc_id:
                raise CorpusFormatError(f"line {line_no}: bad doc_id {doc_id!r}")
            if not isinstance(sent_index, int) or sent_index < 0:
                raise CorpusFormatError(f"line {line_no}: bad sent_index {sent_index!r}")
            if not isinstance(raw_tokens, list) or not raw_tokens:
                raise CorpusFormatError(f"line {line_no}: empty token list")
            tokens = [_parse_token(t, line_no, corpus.warnings) for t in raw_tokens]
            corpus._add_sentence(Sentence(doc_id, sent_index, tokens), line_no)
    return corpus


def collect_occurrences(
    corpus: Corpus, lemma: str, pos: str, cap: int = DEFAULT_OCCURRENCE_CAP
) -> list[Occurrence]:
    """All occurrences of (lemma, pos) in corpus order, at most ``cap`` of them.
    Gold senses are attached where an annotation exists; an absent lemma just
    yields an empty list."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    found: list[Occurrence] = []
    for sentence in corpus.sentences:
        for index, token in enumerate(sentence.tokens):
            if token.lemma != lemma or token.pos != pos:
                continue
            found.append(
                Occurrence(
                    id=occurrence_id(sentence.doc_id, sentence.sent_index, index),
                    lemma=lemma,
                    pos=pos,
                    sentence=sentence,
                    token_index=index,
                    gold_sense=corpus.gold_sense(
                        sentence.doc_id, sentence.sent_index, index
                    ),
                )
            )
            if len(found) >= cap:
                return found
    return found


def load_annotations(path, corpus: Corpus) -> int:
    """Attach gold senses to corpus tokens. Returns the number of distinct
    annotated tokens; duplicate records with the same sense are idempotent,
    conflicting or dangling records raise."""
    seen: set[tuple[str, int, int]] = set()
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise AnnotationError(f"line {line_no}: invalid JSON ({exc.msg})") from None
            try:
                doc_id = record["doc_id"]
                sent_index = record["sent_index"]
                token_index = record["token_index"]
                sense = record["sense"]
            except (KeyError, TypeError) as exc:
                raise AnnotationError(f"line {line_no}: missing field {exc}") from None
            sentence = corpus.sentence(doc_id, sent_index)
            if sentence is None or not 0 <= token_index < len(sentence.tokens):
                raise AnnotationError(
                    f"line {line_no}: dangling reference {record!r}"
                )
            key = (doc_id, sent_index, token_index)
            previous = corpus._gold.get(key)
            if previous is not None and previous != sense:
                raise AnnotationError(
                    f"line {line_no}: conflicting senses for {key!r}: "
                    f"{previous!r} vs {sense!r}"
                )
            corpus._gold[key] = sense
            seen.add(key)
    return len(seen)


def annotated_targets(corpus: Corpus) -> list[tuple[str, str]]:
    """Distinct (lemma, pos) pairs having at least one annotated token, sorted."""
    pairs = set()
    for (doc_id, sent_index, token_index) in corpus._gold:
        token = corpus.sentence(doc_id, sent_index).tokens[token_index]
        pairs.add((token.lemma, token.pos))
    return sorted(pairs)


@dataclass
class SenseInventory:
    """Ordered sense lists per (lemma, pos); list order defines the first sense."""

    entries: dict[tuple[str, str], list[str]] = field(default_factory=dict)

    def __contains__(self, key: tuple[str, str]) -> bool:
        return key in self.entries

    def senses(self, lemma: str, pos: str) -> list[str] | None:
        return self.entries.get((lemma, pos))

    def first_sense(self, lemma: str, pos: str) -> str | None:
        senses = self.entries.get((lemma, pos))
        return senses[0] if senses else None


def load_inventory(path) -> SenseInventory:
    inventory = SenseInventory()
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
                lemma, pos, senses = record["lemma"], record["pos"], record["senses"]
            except (json.JSONDecodeError, KeyError, TypeError):
                raise CorpusFormatError(f"line {line_no}: malformed inventory record") from None
            if not isinstance(senses, list) or not senses:
                raise CorpusFormatError(f"line {line_no}: empty sense list for {lemma!r}")
            inventory.entries.setdefault((lemma, pos), [str(s) for s in senses])
    return inventory
