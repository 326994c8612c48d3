"""Acceptance suite: one test per release criterion, each printing a
PASS line with its runtime (run with -s to see them). Expected values come
from independent brute-force oracles or from fixtures whose ground truth is
known by construction."""

import json
import math
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from sensekit.clustering import WeightedGraph, chinese_whispers
from sensekit.corpus import load_annotations, load_corpus
from sensekit.embeddings import EmbeddingStore
from sensekit.evaluation import (
    LabeledItem,
    bcubed_scores,
    evaluate_partition,
    f1_score,
    first_sense_baseline,
    most_frequent_baseline,
)
from sensekit.corpus import SenseInventory
from sensekit.method_one import collect_neighbor_set, run_method_one
from sensekit.method_two import map_occurrences, run_method_two
from sensekit.clustering import Clustering

from conftest import make_occurrence, sentence_record, store_from, write_jsonl

REPO = Path(__file__).resolve().parent.parent


def report(number, name, started):
    print(f"acceptance {number:02d} {name}: PASS ({time.perf_counter() - started:.2f}s)")


# Independent oracle: literal per-item set counting with exact arithmetic.
def oracle_n_scores(pairs):
    precisions, recalls = [], []
    for c1, g1 in pairs:
        same_cluster = [p for p in pairs if p[0] == c1]
        same_gold = [p for p in pairs if p[1] == g1]
        both = [p for p in same_cluster if p[1] == g1]
        precisions.append(Fraction(len(both), len(same_cluster)))
        recalls.append(Fraction(len(both), len(same_gold)))
    return sum(precisions) / len(pairs), sum(recalls) / len(pairs)


def random_partition(rng):
    n = rng.randrange(1, 51)
    n_clusters = rng.randrange(1, 7)
    n_senses = rng.randrange(1, 7)
    return [(rng.randrange(n_clusters), f"s{rng.randrange(n_senses)}") for _ in range(n)]


def items_from(pairs):
    return [LabeledItem(f"o{i}", c, g) for i, (c, g) in enumerate(pairs)]


def test_criterion_01_bcubed_oracle_equivalence():
    started = time.perf_counter()
    rng = random.Random(20240501)
    for _ in range(200):
        pairs = random_partition(rng)
        p, r, f1 = bcubed_scores(items_from(pairs), "n")
        op, orc = oracle_n_scores(pairs)
        assert abs(p - float(op)) <= 1e-12
        assert abs(r - float(orc)) <= 1e-12
        assert abs(f1 - f1_score(float(op), float(orc))) <= 1e-12
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0
    report(1, "bcubed oracle equivalence", started)


def refine_once(rng, pairs):
    clusters = {}
    for i, (c, _) in enumerate(pairs):
        clusters.setdefault(c, []).append(i)
    splittable = [c for c, members in clusters.items() if len(members) > 1]
    if not splittable:
        return None
    target = rng.choice(splittable)
    members = clusters[target]
    chosen = set(rng.sample(members, rng.randrange(1, len(members))))
    new_id = max(clusters) + 1
    return [((new_id if i in chosen else c), g) for i, (c, g) in enumerate(pairs)]


def test_criterion_02_bcubed_boundary_laws():
    started = time.perf_counter()
    rng = random.Random(7160)

    perfect = items_from([(0, "a"), (0, "a"), (1, "b"), (2, "c"), (2, "c")])
    for weighting in ("n", "nc"):
        assert bcubed_scores(perfect, weighting) == (1.0, 1.0, 1.0)

    golds = ["a", "a", "b", "b", "c", "a"]
    singletons = items_from([(i, g) for i, g in enumerate(golds)])
    assert bcubed_scores(singletons, "n")[0] == 1.0
    lumped = items_from([(0, g) for g in golds])
    assert bcubed_scores(lumped, "n")[1] == 1.0

    steps = 0
    while steps < 100:
        pairs = random_partition(rng)
        refined = refine_once(rng, pairs)
        if refined is None:
            continue
        steps += 1
        p0, r0, _ = bcubed_scores(items_from(pairs), "n")
        p1, r1, _ = bcubed_scores(items_from(refined), "n")
        assert p1 >= p0 - 1e-12, "refinement decreased precision"
        assert r1 <= r0 + 1e-12, "refinement increased recall"
    report(2, "bcubed boundary laws", started)


def planted_community_graph(rng, n_communities):
    node_ids = []
    community_of = {}
    edges = []
    base = 0
    for community in range(n_communities):
        size = rng.randrange(5, 13)
        ids = [f"c{community}n{i}" for i in range(size)]
        for node_id in ids:
            community_of[node_id] = community
        for i in range(size):
            edges.append((base + i, base + (i + 1) % size))
        for i in range(size):
            for j in range(i + 2, size):
                if rng.random() < 0.75:
                    edges.append((base + i, base + j))
        node_ids.extend(ids)
        base += size
    graph = WeightedGraph(node_ids)
    seen = set()
    for i, j in edges:
        key = (min(i, j), max(i, j))
        if key not in seen and i != j:
            seen.add(key)
            graph.add_edge(i, j, 1.0)
    return graph, community_of


def test_criterion_03_chinese_whispers_planted_communities():
    started = time.perf_counter()
    rng = random.Random(91)
    splits = 0
    for trial in range(100):
        graph, community_of = planted_community_graph(rng, rng.randrange(2, 5))
        clustering = chinese_whispers(graph, seed=1000 + trial)
        by_cluster = {}
        for index, cluster in enumerate(clustering.labels):
            by_cluster.setdefault(cluster, set()).add(graph.node_ids[index])
        for group in by_cluster.values():
            communities = {community_of[node_id] for node_id in group}
            assert len(communities) == 1, "clusters must never span components"
        by_community = {}
        for index, cluster in enumerate(clustering.labels):
            by_community.setdefault(community_of[graph.node_ids[index]], set()).add(cluster)
        if any(len(clusters) > 1 for clusters in by_community.values()):
            splits += 1
        if trial == 0:
            rerun = chinese_whispers(graph, seed=1000)
            assert rerun.to_jsonl(graph.node_ids).encode() == clustering.to_jsonl(
                graph.node_ids
            ).encode()
    assert splits < 5, f"{splits} of 100 runs split a planted community"
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0
    report(3, f"chinese whispers planted communities (splits={splits})", started)


def planted_blob_store(per_blob=60, dim=10, seed=17, spread=0.15):
    rng = np.random.default_rng(seed)
    first, second = np.eye(dim)[0], np.eye(dim)[1]
    vectors = {"target": (first + second) / np.linalg.norm(first + second)}
    blobs = {"a": [], "b": []}
    for name, center in (("a", first), ("b", second)):
        for i in range(per_blob):
            noise = rng.normal(size=dim)
            v = center + spread * noise / np.linalg.norm(noise)
            vectors[f"{name}{i}"] = v / np.linalg.norm(v)
            blobs[name].append(f"{name}{i}")
    return store_from(vectors), blobs


def test_criterion_04_method_one_planted_recovery(tmp_path):
    started = time.perf_counter()
    store, blobs = planted_blob_store()
    lines, annotations = [], []
    for blob, sense in (("a", "sense_a"), ("b", "sense_b")):
        for i in range(20):
            words = blobs[blob]
            left = [words[(i * 3 + j) % len(words)] for j in range(5)]
            right = [words[(i * 5 + j + 7) % len(words)] for j in range(5)]
            lines.append(sentence_record(blob, i, left + ["target"] + right))
            annotations.append(
                {"doc_id": blob, "sent_index": i, "token_index": 5, "sense": sense}
            )
    violators = []
    for i, context in enumerate((["a0"], ["b0", "b1"], ["a1", "a2", "a3"])):
        lines.append(sentence_record("short", i, context[:1] + ["target"] + context[1:]))
        violators.append(f"short:{i}:1")
    corpus = load_corpus(write_jsonl(tmp_path / "corpus.jsonl", lines))
    load_annotations(write_jsonl(tmp_path / "annotations.jsonl", annotations), corpus)

    gold = {f"{blob}:{i}:5": f"sense_{blob}" for blob in "ab" for i in range(20)}
    for variant in ("avg", "max"):
        senses, assignments = run_method_one(
            store, corpus, "target", "noun", variant=variant, seed=23, minimum=100
        )
        dropped = {a.occurrence_id for a in assignments if a.cluster_index is None}
        assert dropped == set(violators), "support rule must drop exactly the short contexts"
        items = [
            LabeledItem(a.occurrence_id, a.cluster_index, gold[a.occurrence_id])
            for a in assignments
            if a.cluster_index is not None
        ]
        assert len(items) == 40
        _, _, f1 = bcubed_scores(items, "n")
        assert f1 >= 0.95, f"{variant}: F1_n {f1:.3f} below 0.95"
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0
    report(4, "method one planted recovery", started)


def graded_similarity_store(n_qualifying, n_filler=40, floor=0.4, dim=8, seed=5):
    rng = np.random.default_rng(seed)
    axis = np.zeros(dim)
    axis[0] = 1.0
    vectors = {"target": axis}

    def place(word, c):
        u = np.zeros(dim)
        rest = rng.normal(size=dim - 1)
        u[1:] = rest / np.linalg.norm(rest)
        vectors[word] = c * axis + math.sqrt(1 - c * c) * u

    for i in range(n_qualifying):
        place(f"hi{i}", floor + 0.005 + 0.5 * i / max(n_qualifying, 1))
    for i in range(n_filler):
        place(f"lo{i}", 0.05 + 0.25 * i / n_filler)
    return store_from(vectors)


def test_criterion_05_method_one_fallback_boundary():
    started = time.perf_counter()
    just_below = graded_similarity_store(99)
    nset = collect_neighbor_set(just_below, "target", floor=0.4, minimum=100)
    assert nset.rule == "top"
    assert len(nset.neighbors) == 100
    at_threshold = graded_similarity_store(100)
    nset = collect_neighbor_set(at_threshold, "target", floor=0.4, minimum=100)
    assert nset.rule == "floor"
    assert len(nset.neighbors) == 100
    assert all(n.similarity >= 0.4 for n in nset.neighbors)
    report(5, "method one fallback fires exactly below the minimum", started)


def method_two_fixture(tmp_path, n_each=10, pool_size=20):
    towns = [f"town{i}" for i in range(pool_size)]
    locks = [f"lock{i}" for i in range(pool_size)]
    lines, subs = [], []
    gold = {}
    for name, pool, sense in (("t", towns, "g1"), ("l", locks, "g2")):
        for i in range(n_each):
            lines.append(sentence_record(name, i, ["x", "zamek", "y"]))
            occurrence = f"{name}:{i}:1"
            gold[occurrence] = sense
            for side in ("left", "right"):
                subs.append(
                    {
                        "occurrence": occurrence,
                        "lemma": "zamek",
                        "pos": "noun",
                        "mode": side,
                        "pattern": "substitution",
                        "predictions": [
                            {"token": token, "score": 1.0 - 0.01 * rank}
                            for rank, token in enumerate(pool)
                        ],
                    }
                )
    corpus = load_corpus(write_jsonl(tmp_path / "corpus.jsonl", lines))
    subs_path = write_jsonl(tmp_path / "subs.jsonl", subs)
    return corpus, subs_path, gold


def test_criterion_06_method_two_planted_recovery(tmp_path):
    started = time.perf_counter()
    corpus, subs_path, gold = method_two_fixture(tmp_path)
    mappings, warnings = run_method_two(
        corpus, "zamek", "noun", subs_path,
        mode="one-side", pattern="substitution", l=4, r=20, seed=77,
    )
    assert warnings["missing_predictions"] == 0
    assert len(mappings) == 20
    assert len({m.cluster for m in mappings}) == 2, "pipeline must yield exactly 2 clusters"
    items = [LabeledItem(m.occurrence_id, m.cluster, gold[m.occurrence_id]) for m in mappings]
    _, _, f1 = bcubed_scores(items, "n")
    assert f1 == pytest.approx(1.0, abs=1e-12)

    # every representative vector stays within the 2l nonzero bound
    from sensekit.method_two import (
        build_representative_vectors,
        group_records,
        load_substitutes,
        tfidf_transform,
        OccurrencePredictions,
    )
    from sensekit.clustering import derive_seed

    grouped, _ = group_records(load_substitutes(subs_path), "one-side")
    vectors = []
    for occurrence_id, preds in grouped.items():
        vectors.extend(
            build_representative_vectors(preds, "one-side", 4, 20, derive_seed(77, occurrence_id))
        )
    assert all(len(v.counts) <= 8 for v in vectors)

    # and tokens present in every vector carry zero weight after TF-IDF
    forced = [
        OccurrencePredictions("z:0:0", left=["always", "l2"], right=["r1", "r2"]),
        OccurrencePredictions("z:1:0", left=["always", "l3"], right=["r3", "r4"]),
    ]
    forced_vectors = []
    for preds in forced:
        forced_vectors.extend(build_representative_vectors(preds, "one-side", 2, 3, seed=1))
    tfidf_transform(forced_vectors)
    assert all("always" not in v.weighted for v in forced_vectors)
    assert all(v.counts["always"] == 1 for v in forced_vectors)
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0
    report(6, "method two planted recovery", started)


def test_criterion_07_method_two_determinism(tmp_path):
    started = time.perf_counter()
    corpus, subs_path, _ = method_two_fixture(tmp_path)

    def mapping_bytes(seed):
        mappings, _ = run_method_two(
            corpus, "zamek", "noun", subs_path,
            mode="one-side", pattern="substitution", l=4, r=20, seed=seed,
        )
        payload = "\n".join(json.dumps(m.to_dict(), ensure_ascii=False) for m in mappings)
        return payload.encode(), mappings

    first_bytes, first = mapping_bytes(77)
    second_bytes, _ = mapping_bytes(77)
    assert first_bytes == second_bytes, "same seed must reproduce the mapping file byte for byte"

    def occurrence_votes(mappings):
        return {m.occurrence_id: sorted(m.votes.values()) for m in mappings}

    def winner_partition(mappings):
        groups = {}
        for m in mappings:
            groups.setdefault(m.cluster, set()).add(m.occurrence_id)
        return {frozenset(g) for g in groups.values()}

    reference_votes = occurrence_votes(first)
    reference_partition = winner_partition(first)
    for seed in (1, 2, 3, 99):
        _, other = mapping_bytes(seed)
        assert occurrence_votes(other) == reference_votes, "vote counts must not depend on the seed"
        assert winner_partition(other) == reference_partition

    # an exact vote tie: the seeded choice may flip, the votes never move
    from sensekit.method_two import RepresentativeVector

    tied_vectors = [RepresentativeVector("o1", i, {"t": 1}) for i in range(20)]
    tied_clustering = Clustering([0] * 10 + [1] * 10)
    winners = set()
    for seed in range(10):
        mapping = map_occurrences(tied_clustering, tied_vectors, seed=seed)[0]
        assert mapping.votes == {0: 10, 1: 10}
        assert mapping.tie_broken
        winners.add(mapping.cluster)
    assert winners == {0, 1}
    report(7, "method two determinism", started)


def test_criterion_08_harmonic_mean_column():
    started = time.perf_counter()
    assert f1_score(0.75, 0.75) == pytest.approx(0.75, abs=1e-12)
    # a partition with equal column values: F1 must equal them exactly
    items = items_from([(0, "a"), (1, "a"), (1, "b")])
    p, r, f1 = bcubed_scores(items, "n")
    assert p == pytest.approx(r, abs=1e-12)
    assert f1 == pytest.approx(p, abs=1e-12)
    rng = random.Random(55)
    for _ in range(50):
        row = evaluate_partition("w", "noun", items_from(random_partition(rng)))
        assert abs(row.F1_n - f1_score(row.P_n, row.R_n)) <= 1e-12
        assert abs(row.F1_nc - f1_score(row.P_nc, row.R_nc)) <= 1e-12
    report(8, "harmonic-mean column check", started)


def test_criterion_09_baselines():
    started = time.perf_counter()

    def occurrence(i, sense):
        occ = make_occurrence(["x", "w", "y"], 1, pos="noun", doc_id=f"d{i}")
        occ.gold_sense = sense
        return occ

    # gold equals the first sense everywhere -> perfect baseline
    uniform = [occurrence(i, "first") for i in range(5)]
    inventory = SenseInventory({("w", "noun"): ["first", "second"]})
    rows, _ = first_sense_baseline(uniform, inventory)
    assert rows[0].F1_n == pytest.approx(1.0, abs=1e-12)
    assert rows[0].F1_nc == pytest.approx(1.0, abs=1e-12)

    # 50/50 split: the most-frequent baseline must equal the oracle exactly
    split = [occurrence(i, "s1" if i % 2 == 0 else "s2") for i in range(8)]
    rows = most_frequent_baseline(split)
    pairs = [(0, occ.gold_sense) for occ in split]
    op, orc = oracle_n_scores(pairs)
    assert rows[0].P_n == float(op)
    assert rows[0].R_n == float(orc)
    assert rows[0].F1_n == f1_score(float(op), float(orc))
    assert rows[0].P_nc == 0.5  # single predicted cluster, mean item precision
    assert rows[0].R_nc == 1.0  # every class fully recalled by the one cluster
    report(9, "baselines against the brute-force oracle", started)


CONFIGS = [
    "run_method_one_avg.json",
    "run_method_one_max.json",
    "run_method_two_oneside.json",
    "run_method_two_bothsides.json",
]


def run_cli(config, out_dir):
    result = subprocess.run(
        [
            sys.executable,
            "-m",
            "sensekit",
            "run",
            "--config",
            str(REPO / "fixtures" / config),
            "--output-dir",
            str(out_dir),
        ],
        cwd=REPO,
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert result.returncode == 0, result.stderr
    return out_dir


def validate_artifacts(out_dir):
    manifest = json.loads((out_dir / "manifest.json").read_text())
    for key in ("config", "seed", "warnings", "artifacts", "wall_time_s"):
        assert key in manifest
    for name in manifest["artifacts"]:
        assert (out_dir / name).exists(), f"declared artifact missing: {name}"
    if (out_dir / "assignments.jsonl").exists():
        for line in (out_dir / "assignments.jsonl").read_text().splitlines():
            row = json.loads(line)
            assert set(row) == {"occurrence", "lemma", "cluster", "score", "variant"}
            assert row["cluster"] is None or isinstance(row["cluster"], int)
            assert isinstance(row["score"], float)
    if (out_dir / "mappings.jsonl").exists():
        for line in (out_dir / "mappings.jsonl").read_text().splitlines():
            row = json.loads(line)
            assert set(row) == {"occurrence", "cluster", "votes", "tie_broken"}
            assert isinstance(row["cluster"], int)
            assert all(isinstance(v, int) for v in row["votes"].values())
    report_payload = json.loads((out_dir / "report.json").read_text())
    assert report_payload["rows"], "report must carry per-word rows"
    for row in report_payload["rows"]:
        for column in ("P_n", "R_n", "F1_n", "P_nc", "R_nc", "F1_nc"):
            assert 0.0 <= row[column] <= 1.0


def compare_runs(first_dir, second_dir):
    first_files = sorted(p.name for p in first_dir.iterdir())
    second_files = sorted(p.name for p in second_dir.iterdir())
    assert first_files == second_files
    for name in first_files:
        if name == "manifest.json":
            a = json.loads((first_dir / name).read_text())
            b = json.loads((second_dir / name).read_text())
            a.pop("wall_time_s"), b.pop("wall_time_s")
            a["config"].pop("output_dir"), b["config"].pop("output_dir")
            assert a == b
        else:
            assert (first_dir / name).read_bytes() == (second_dir / name).read_bytes(), name


def test_criterion_10_cli_end_to_end(tmp_path):
    started = time.perf_counter()
    first_runs = {}
    budget = time.perf_counter()
    for config in CONFIGS:
        first_runs[config] = run_cli(config, tmp_path / config.replace(".json", "_1"))
    first_pass = time.perf_counter() - budget
    assert first_pass < 60.0, f"first pass took {first_pass:.1f}s"
    for config, first_dir in first_runs.items():
        validate_artifacts(first_dir)
        second_dir = run_cli(config, tmp_path / config.replace(".json", "_2"))
        compare_runs(first_dir, second_dir)
    report(10, f"cli end to end ({first_pass:.1f}s for 4 runs)", started)
