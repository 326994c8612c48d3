#!/usr/bin/env python3
"""Generate the bundled fixture set under fixtures/.

Deterministic (fixed RNG seed): two ambiguous target words with planted
senses, an embedding file with one vector blob per sense, a tagged corpus
with gold annotations, a substitutes file for the prediction-based pipeline,
and ready-to-run config files. Run from the repository root:

    python3 scripts/make_fixtures.py
"""

import json
import os
from pathlib import Path

import numpy as np

SEED = 12345
DIM = 8
OUT = Path(__file__).resolve().parent.parent / "fixtures"

MONEY = ["loan", "credit", "deposit", "cash", "finance", "teller",
         "mortgage", "savings", "payment", "vault", "invest", "branch"]
RIVER = ["river", "shore", "stream", "water", "flood", "boat",
         "fishing", "mud", "reed", "tide", "delta", "wave"]
TEMP = ["cold", "icy", "frosty", "chilly", "freezing", "winter",
        "frost", "snow", "ice", "breeze"]
STYLE = ["trendy", "stylish", "hip", "fashionable", "modern", "elegant",
         "smart", "classy", "sleek", "chic"]
FILLER = ["city", "day", "house", "road", "tree", "door",
          "hand", "wall", "book", "night", "morning", "child"]

SUBS_MONEY = ["fund", "lender", "bursary", "treasury", "ledger", "cashier",
              "banker", "money", "wallet", "purse", "economy", "capital",
              "debt", "account", "cheque", "coin", "bill", "fee",
              "safe", "counter", "pay", "interest", "broker", "register"]
SUBS_RIVER = ["meadow", "levee", "embankment", "riverside", "waterfront",
              "marsh", "creek", "lagoon", "estuary", "dune", "cliff",
              "slope", "bluff", "ridge", "canal", "pond", "lake", "brook",
              "rapids", "waterfall", "gorge", "valley", "floodplain", "shoal"]
SUBS_COLD = ["arctic", "polar", "wintry", "brisk", "bitter", "raw",
             "glacial", "nippy", "bleak", "crisp", "harsh", "biting",
             "numbing", "piercing", "shivering", "stinging", "bracing",
             "keen", "cutting", "sharp", "frigid", "gelid", "boreal", "rimy"]
SUBS_STYLE = ["suave", "dapper", "polished", "refined", "swanky", "snazzy",
              "natty", "spiffy", "debonair", "urbane", "voguish", "chichi",
              "jaunty", "rakish", "snappy", "sporty", "swish", "mod",
              "groovy", "funky", "slick", "glamorous", "posh", "flashy"]


def unit(v):
    return v / np.linalg.norm(v)


def blob_vector(rng, center, spread=0.18):
    noise = rng.normal(size=DIM)
    return unit(center + spread * unit(noise))


def build_embeddings(rng):
    centers = {
        "money": unit(np.eye(DIM)[0]),
        "river": unit(np.eye(DIM)[1]),
        "temp": unit(np.eye(DIM)[2]),
        "style": unit(np.eye(DIM)[3]),
    }
    vectors = {}
    for word in MONEY:
        vectors[word] = blob_vector(rng, centers["money"])
    for word in RIVER:
        vectors[word] = blob_vector(rng, centers["river"])
    for word in TEMP:
        vectors[word] = blob_vector(rng, centers["temp"])
    for word in STYLE:
        vectors[word] = blob_vector(rng, centers["style"])
    vectors["bank"] = unit(centers["money"] + centers["river"])
    vectors["cool"] = unit(centers["temp"] + centers["style"])
    for word in FILLER:
        while True:
            v = unit(rng.normal(size=DIM))
            if abs(v @ vectors["bank"]) < 0.3 and abs(v @ vectors["cool"]) < 0.3:
                vectors[word] = v
                break

    # sanity: planted blobs separate cleanly at the 0.4 floor
    for group in (MONEY, RIVER, TEMP, STYLE):
        for a in group:
            for b in group:
                assert vectors[a] @ vectors[b] > 0.45, (a, b)
    for a in MONEY:
        for b in RIVER:
            assert vectors[a] @ vectors[b] < 0.35, (a, b)
    for a in TEMP:
        for b in STYLE:
            assert vectors[a] @ vectors[b] < 0.35, (a, b)
    for target, groups in (("bank", MONEY + RIVER), ("cool", TEMP + STYLE)):
        for word in groups:
            assert vectors[target] @ vectors[word] >= 0.4, (target, word)
    return vectors


def corpus_sentences(rng):
    """(doc_id, sent_index, tokens, target_index, sense) tuples."""
    sentences = []

    def context(pool, n):
        return [pool[i] for i in rng.permutation(len(pool))[:n]]

    for i in range(6):
        left, right = context(MONEY, 5), context(MONEY, 5)
        tokens = left + ["bank"] + right
        sentences.append(("money", i, tokens, 5, "bank%finance"))
    for i in range(6):
        left, right = context(RIVER, 5), context(RIVER, 5)
        # a punctuation token inside the window; it must not consume a slot
        tokens = left[:2] + [","] + left[2:] + ["bank"] + right
        sentences.append(("river", i, tokens, 6, "bank%river"))
    # degenerate: two context words only -> below the support threshold
    sentences.append(("short", 0, ["loan", "bank", "credit"], 1, "bank%finance"))
    # sentence-initial target: right-side context only
    sentences.append(("edge", 0, ["bank", "boat", "river", "shore", "water", "stream"], 0, "bank%river"))
    for i in range(4):
        left, right = context(TEMP, 5), context(TEMP, 5)
        tokens = left + ["cool"] + right
        sentences.append(("cold", i, tokens, 5, "cool%cold"))
    for i in range(4):
        left, right = context(STYLE, 5), context(STYLE, 5)
        # an out-of-vocabulary word inside the window
        tokens = left[:4] + ["zzyzx"] + [left[4]] + ["cool"] + right
        sentences.append(("style", i, tokens, 6, "cool%style"))
    return sentences


def write_corpus(sentences):
    target_pos = {"bank": "noun", "cool": "adj"}
    corpus_lines = []
    annotation_lines = []
    for doc_id, sent_index, tokens, target_index, sense in sentences:
        token_objs = []
        for position, lemma in enumerate(tokens):
            pos = target_pos.get(lemma, "other" if lemma == "," else "noun")
            if position == target_index:
                pos = target_pos[lemma]
            token_objs.append({"orth": lemma, "lemma": lemma, "pos": pos})
        corpus_lines.append(
            {"doc_id": doc_id, "sent_index": sent_index, "tokens": token_objs}
        )
        annotation_lines.append(
            {
                "doc_id": doc_id,
                "sent_index": sent_index,
                "token_index": target_index,
                "sense": sense,
            }
        )
    return corpus_lines, annotation_lines


def substitutes_records(rng, sentences):
    pools = {
        "bank%finance": SUBS_MONEY,
        "bank%river": SUBS_RIVER,
        "cool%cold": SUBS_COLD,
        "cool%style": SUBS_STYLE,
    }
    target_pos = {"bank": "noun", "cool": "adj"}
    records = []
    for doc_id, sent_index, tokens, target_index, sense in sentences:
        lemma = tokens[target_index]
        occurrence = f"{doc_id}:{sent_index}:{target_index}"
        pool = pools[sense]

        def prediction_list():
            chosen = [pool[i] for i in rng.permutation(len(pool))[:20]]
            return [
                {"token": token, "score": round(0.99 - 0.03 * rank, 4)}
                for rank, token in enumerate(chosen)
            ]

        sides = ["left", "right"] if target_index > 0 else ["right"]
        for pattern in ("substitution", "and"):
            for side in sides:
                records.append(
                    {
                        "occurrence": occurrence,
                        "lemma": lemma,
                        "pos": target_pos[lemma],
                        "mode": side,
                        "pattern": pattern,
                        "predictions": prediction_list(),
                    }
                )
        records.append(
            {
                "occurrence": occurrence,
                "lemma": lemma,
                "pos": target_pos[lemma],
                "mode": "both",
                "pattern": "substitution",
                "predictions": prediction_list(),
            }
        )
    return records


def write_jsonl(path, rows):
    with open(path, "w", encoding="utf-8") as handle:
        for row in rows:
            handle.write(json.dumps(row, ensure_ascii=False) + "\n")


def write_configs():
    base = {
        "corpus": "fixtures/corpus.jsonl",
        "annotations": "fixtures/annotations.jsonl",
        "inventory": "fixtures/inventory.jsonl",
        "targets": [["bank", "noun"], ["cool", "adj"]],
        "cap": 1000,
        "window": 5,
        "min_support": 4,
        "floor": 0.4,
        "neighbor_minimum": 20,
        "k": 20,
        "r": 20,
        "max_iterations": 20,
        "seed": 42,
        "workers": 1,
    }
    configs = {
        "run_method_one_avg.json": {
            **base,
            "method": "one",
            "variant": "avg",
            "embeddings": "fixtures/embeddings.txt",
            "output_dir": "out/method_one_avg",
        },
        "run_method_one_max.json": {
            **base,
            "method": "one",
            "variant": "max",
            "embeddings": "fixtures/embeddings.txt",
            "output_dir": "out/method_one_max",
        },
        "run_method_two_oneside.json": {
            **base,
            "method": "two",
            "mode": "one-side",
            "pattern": "substitution",
            "l": 4,
            "substitutes": "fixtures/substitutes.jsonl",
            "output_dir": "out/method_two_oneside",
        },
        "run_method_two_bothsides.json": {
            **base,
            "method": "two",
            "mode": "both-sides",
            "pattern": "substitution",
            "l": 6,
            "substitutes": "fixtures/substitutes.jsonl",
            "output_dir": "out/method_two_bothsides",
        },
    }
    for name, config in configs.items():
        with open(OUT / name, "w", encoding="utf-8") as handle:
            json.dump(config, handle, indent=2)
            handle.write("\n")


def main():
    rng = np.random.default_rng(SEED)
    OUT.mkdir(exist_ok=True)

    vectors = build_embeddings(rng)
    with open(OUT / "embeddings.txt", "w", encoding="utf-8") as handle:
        handle.write(f"{len(vectors)} {DIM}\n")
        for word, vector in vectors.items():
            values = " ".join(f"{x:.6f}" for x in vector)
            handle.write(f"{word} {values}\n")

    sentences = corpus_sentences(rng)
    corpus_lines, annotation_lines = write_corpus(sentences)
    write_jsonl(OUT / "corpus.jsonl", corpus_lines)
    write_jsonl(OUT / "annotations.jsonl", annotation_lines)
    write_jsonl(
        OUT / "inventory.jsonl",
        [
            {"lemma": "bank", "pos": "noun", "senses": ["bank%finance", "bank%river"]},
            {"lemma": "cool", "pos": "adj", "senses": ["cool%cold", "cool%style"]},
        ],
    )
    write_jsonl(OUT / "substitutes.jsonl", substitutes_records(rng, sentences))
    write_configs()

    print(f"wrote fixtures to {OUT}")
    print(f"  {len(corpus_lines)} sentences, {len(annotation_lines)} annotations")
    print(f"  {len(vectors)} embedding vectors, dim {DIM}")


if __name__ == "__main__":
    main()
