"""Command-line interface.

Subcommands expose each pipeline stage for debugging (neighbors, induce,
assign, repvec, map, evaluate, baseline) plus an end-to-end ``run`` driven
by a JSON config file whose keys are mirrored one-to-one by flags.

Exit codes: 0 ok, 2 config error, 3 data error, 4 internal error. Errors are
printed to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .clustering import derive_seed
from .config import RunConfig, load_run_config, validate_run_config
from .corpus import (
    Corpus,
    annotated_targets,
    collect_occurrences,
    load_annotations,
    load_corpus,
    load_inventory,
)
from .embeddings import load_embeddings
from .errors import ConfigError, DataError, SensekitError, UnknownWordError
from .evaluation import (
    aggregate,
    build_rows,
    first_sense_baseline,
    most_frequent_baseline,
)
from .method_one import (
    NeighborSet,
    SenseClusters,
    collect_neighbor_set,
    induce_senses,
    run_method_one,
)
from .method_two import (
    RepresentativeVector,
    cluster_representatives,
    group_records,
    build_representative_vectors,
    load_substitutes,
    map_occurrences,
    run_method_two,
    tfidf_transform,
)

log = logging.getLogger("sensekit")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_INTERNAL = 4


def _write_jsonl(path, dicts) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as handle:
        for d in dicts:
            handle.write(json.dumps(d, ensure_ascii=False))
            handle.write("\n")
            count += 1
    return count


def _write_json(path, obj) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(obj, handle, ensure_ascii=False, indent=2)
        handle.write("\n")


def _read_jsonl(path):
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if line.strip():
                try:
                    yield json.loads(line)
                except json.JSONDecodeError as exc:
                    raise DataError(f"{path}: line {line_no}: invalid JSON ({exc.msg})") from None


# ---------------------------------------------------------------- stages


def cmd_neighbors(args) -> int:
    store = load_embeddings(args.embeddings)
    nset = collect_neighbor_set(store, args.lemma, floor=args.floor, minimum=args.minimum)
    payload = {
        "lemma": nset.lemma,
        "rule": nset.rule,
        "floor": nset.floor,
        "minimum": nset.minimum,
        "shortfall": nset.shortfall,
        "neighbors": [{"word": n.word, "similarity": n.similarity} for n in nset.neighbors],
    }
    if args.out:
        _write_json(args.out, payload)
        log.info("wrote %d neighbors to %s", len(nset.neighbors), args.out)
    else:
        json.dump(payload, sys.stdout, ensure_ascii=False, indent=2)
        sys.stdout.write("\n")
    return EXIT_OK


def _senses_payload(senses: SenseClusters) -> dict:
    return {
        "lemma": senses.lemma,
        "pos": senses.pos,
        "rule": senses.source.rule,
        "floor": senses.source.floor,
        "minimum": senses.source.minimum,
        "shortfall": senses.source.shortfall,
        "n_neighbors": len(senses.source.neighbors),
        "clusters": senses.clusters,
    }


def _senses_from_payload(payload: dict) -> SenseClusters:
    source = NeighborSet(
        lemma=payload["lemma"],
        neighbors=[],
        rule=payload.get("rule", "floor"),
        floor=payload.get("floor", 0.4),
        minimum=payload.get("minimum", 100),
        shortfall=payload.get("shortfall", False),
    )
    return SenseClusters(payload["lemma"], payload["pos"], payload["clusters"], source)


def cmd_induce(args) -> int:
    store = load_embeddings(args.embeddings)
    senses = induce_senses(
        store,
        args.lemma,
        args.pos,
        seed=args.seed,
        floor=args.floor,
        minimum=args.minimum,
        max_iterations=args.max_iterations,
    )
    _write_json(args.out, _senses_payload(senses))
    log.info("induced %d clusters for %s/%s", senses.n_clusters, args.lemma, args.pos)
    if args.clusters_jsonl:
        rows = (
            {"node": word, "cluster": index}
            for index, words in enumerate(senses.clusters)
            for word in words
        )
        _write_jsonl(args.clusters_jsonl, rows)
    return EXIT_OK


def cmd_assign(args) -> int:
    store = load_embeddings(args.embeddings)
    corpus = load_corpus(args.corpus)
    if args.annotations:
        load_annotations(args.annotations, corpus)
    with open(args.senses, encoding="utf-8") as handle:
        senses = _senses_from_payload(json.load(handle))
    from .method_one import assign_occurrence, context_vector, Assignment

    assignments = []
    for occ in collect_occurrences(corpus, senses.lemma, senses.pos, cap=args.cap):
        ctx = context_vector(store, occ, window=args.window, min_support=args.min_support)
        if ctx is None:
            assignments.append(Assignment(occ.id, senses.lemma, None, 0.0, args.variant))
        else:
            assignments.append(assign_occurrence(senses, ctx, store, args.variant))
    _write_jsonl(args.out, (a.to_dict() for a in assignments))
    log.info("wrote %d assignments to %s", len(assignments), args.out)
    return EXIT_OK


def cmd_repvec(args) -> int:
    records = load_substitutes(
        args.substitutes,
        lemma=args.lemma,
        pos=args.pos,
        pattern=args.pattern,
        lowercase=args.lowercase_tokens,
    )
    grouped, warnings = group_records(records, args.mode)
    vectors: list[RepresentativeVector] = []
    for occurrence_id in grouped:
        preds = grouped[occurrence_id]
        if preds.empty():
            warnings["missing_predictions"] += 1
            continue
        vectors.extend(
            build_representative_vectors(
                preds, args.mode, args.l, args.r, derive_seed(args.seed, occurrence_id)
            )
        )
    if not vectors:
        raise DataError(f"no usable predictions in {args.substitutes}")
    tfidf_transform(vectors)
    rows = (
        {
            "occurrence": v.occurrence_id,
            "draw_index": v.draw_index,
            "counts": v.counts,
            "weighted": v.weighted,
            "short": v.short,
        }
        for v in vectors
    )
    count = _write_jsonl(args.out, rows)
    log.info("wrote %d representative vectors to %s (warnings: %s)", count, args.out, dict(warnings))
    return EXIT_OK


def cmd_map(args) -> int:
    vectors = [
        RepresentativeVector(
            occurrence_id=row["occurrence"],
            draw_index=row["draw_index"],
            counts={k: int(v) for k, v in row["counts"].items()},
            weighted={k: float(v) for k, v in row["weighted"].items()},
            short=bool(row.get("short", False)),
        )
        for row in _read_jsonl(args.repvec)
    ]
    if not vectors:
        raise DataError(f"no vectors in {args.repvec}")
    clustering = cluster_representatives(
        vectors, derive_seed(args.seed, "cluster"), max_iterations=args.max_iterations
    )
    mappings = map_occurrences(vectors=vectors, clustering=clustering, seed=derive_seed(args.seed, "map"))
    _write_jsonl(args.out, (m.to_dict() for m in mappings))
    log.info("mapped %d occurrences into %d clusters", len(mappings), clustering.n_clusters)
    return EXIT_OK


# ---------------------------------------------------------------- evaluation


def _occurrence_word(corpus: Corpus, occurrence_id: str) -> tuple[str, str] | None:
    parts = occurrence_id.rsplit(":", 2)
    if len(parts) != 3:
        return None
    doc_id, sent_index, token_index = parts[0], int(parts[1]), int(parts[2])
    sentence = corpus.sentence(doc_id, sent_index)
    if sentence is None or not 0 <= token_index < len(sentence.tokens):
        return None
    token = sentence.tokens[token_index]
    return (token.lemma, token.pos)


def _evaluate_and_write(
    corpus: Corpus,
    predictions: dict[str, int | None],
    words: list[tuple[str, str]],
    out_dir: Path,
    unassigned: str,
    inventory=None,
    figures: bool = True,
    stem: str = "report",
    cap: int = 10**9,
) -> tuple[dict, Counter]:
    from .report import (
        build_report,
        render_report_figures,
        write_report_json,
        write_report_text,
    )

    occurrences_by_word = {
        (lemma, pos): collect_occurrences(corpus, lemma, pos, cap=cap)
        for (lemma, pos) in words
    }
    rows, warnings = build_rows(occurrences_by_word, predictions, unassigned=unassigned)
    if not rows:
        raise DataError("nothing to evaluate: no annotated occurrences for the evaluated words")
    groups = []
    for grouping in ("pos", "selected-30", "ambiguous", "all"):
        grouped, notices = aggregate(rows, grouping)
        groups.extend(grouped)
        for notice in notices:
            log.info("%s", notice)
    annotated = [
        occ for occs in occurrences_by_word.values() for occ in occs if occ.gold_sense is not None
    ]
    baselines = {}
    mf_rows = most_frequent_baseline(annotated)
    if mf_rows:
        baselines["most-frequent"], _ = aggregate(mf_rows, "all")
    if inventory is not None:
        fs_rows, fs_warnings = first_sense_baseline(annotated, inventory)
        warnings += fs_warnings
        if fs_rows:
            baselines["first-sense"], _ = aggregate(fs_rows, "all")
    report = build_report(rows, groups, baselines)
    out_dir.mkdir(parents=True, exist_ok=True)
    write_report_json(report, out_dir / f"{stem}.json")
    write_report_text(report, out_dir / f"{stem}.txt")
    if figures:
        render_report_figures(report, out_dir, stem=stem)
    return report, warnings


def cmd_evaluate(args) -> int:
    corpus = load_corpus(args.corpus)
    load_annotations(args.annotations, corpus)
    inventory = load_inventory(args.inventory) if args.inventory else None
    predictions: dict[str, int | None] = {}
    words: set[tuple[str, str]] = set()
    for row in _read_jsonl(args.predictions):
        occurrence_id = row["occurrence"]
        predictions[occurrence_id] = row["cluster"]
        word = _occurrence_word(corpus, occurrence_id)
        if word is None:
            raise DataError(f"prediction for unknown occurrence {occurrence_id!r}")
        words.add(word)
    if not predictions:
        raise DataError(f"no predictions in {args.predictions}")
    unassigned = "exclude" if args.eval_mode == "assigned-only" else "error"
    report, warnings = _evaluate_and_write(
        corpus,
        predictions,
        sorted(words),
        Path(args.out_dir),
        unassigned,
        inventory=inventory,
        figures=not args.no_figures,
        stem=args.stem,
    )
    log.info("evaluated %d words (warnings: %s)", len(report["rows"]), dict(warnings))
    return EXIT_OK


def cmd_baseline(args) -> int:
    from .report import (
        build_report,
        render_report_figures,
        write_report_json,
        write_report_text,
    )

    corpus = load_corpus(args.corpus)
    load_annotations(args.annotations, corpus)
    annotated = []
    for (lemma, pos) in annotated_targets(corpus):
        annotated.extend(
            occ
            for occ in collect_occurrences(corpus, lemma, pos, cap=10**9)
            if occ.gold_sense is not None
        )
    warnings = Counter()
    if args.kind == "first-sense":
        if not args.inventory:
            raise ConfigError("first-sense baseline requires --inventory")
        inventory = load_inventory(args.inventory)
        rows, warnings = first_sense_baseline(annotated, inventory)
    else:
        rows = most_frequent_baseline(annotated)
    if not rows:
        raise DataError("no annotated occurrences to score")
    groups = []
    for grouping in ("pos", "selected-30", "ambiguous", "all"):
        grouped, _notices = aggregate(rows, grouping)
        groups.extend(grouped)
    report = build_report(rows, groups)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"baseline_{args.kind}"
    write_report_json(report, out_dir / f"{stem}.json")
    write_report_text(report, out_dir / f"{stem}.txt")
    if not args.no_figures:
        render_report_figures(report, out_dir, stem=stem)
    log.info("baseline %s over %d words (warnings: %s)", args.kind, len(rows), dict(warnings))
    return EXIT_OK


# ---------------------------------------------------------------- run


def _resolve_targets(cfg: RunConfig, corpus: Corpus) -> list[tuple[str, str]]:
    if cfg.targets == "all-annotated":
        targets = annotated_targets(corpus)
        if not targets:
            raise DataError("targets is 'all-annotated' but the corpus has no annotations")
        return targets
    return [(lemma, pos) for lemma, pos in cfg.targets]


def _run_targets(targets, worker, n_workers: int):
    """Run the per-target worker, in a thread pool when asked for; results
    come back in target order either way."""
    if n_workers > 1 and len(targets) > 1:
        with ThreadPoolExecutor(max_workers=n_workers) as pool:
            return list(pool.map(worker, targets))
    return [worker(t) for t in targets]


def cmd_run(args) -> int:
    overrides = {
        key: getattr(args, key)
        for key in vars(args)
        if key in RunConfig.__dataclass_fields__ and getattr(args, key) is not None
    }
    cfg = load_run_config(args.config, overrides)
    problems = validate_run_config(cfg)
    if problems:
        raise ConfigError(problems)

    start = time.perf_counter()
    out_dir = Path(cfg.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    warnings: Counter = Counter()
    corpus = load_corpus(cfg.corpus)
    warnings.update(corpus.warnings)
    annotation_count = 0
    if cfg.annotations:
        annotation_count = load_annotations(cfg.annotations, corpus)
    inventory = load_inventory(cfg.inventory) if cfg.inventory else None
    targets = _resolve_targets(cfg, corpus)
    skipped: list[dict] = []
    notes: list[dict] = []
    artifacts: list[str] = []
    predictions: dict[str, int | None] = {}

    if cfg.method == "one":
        store = load_embeddings(cfg.embeddings)
        warnings.update(store.warnings)

        def worker(target):
            lemma, pos = target
            seed = derive_seed(cfg.seed, lemma, pos)
            try:
                senses, assignments = run_method_one(
                    store,
                    corpus,
                    lemma,
                    pos,
                    variant=cfg.variant,
                    seed=seed,
                    floor=cfg.floor,
                    minimum=cfg.neighbor_minimum,
                    window=cfg.window,
                    min_support=cfg.min_support,
                    cap=cfg.cap,
                    max_iterations=cfg.max_iterations,
                )
            except UnknownWordError:
                return (target, None, None)
            return (target, senses, assignments)

        results = _run_targets(targets, worker, cfg.resolved_workers())
        senses_rows = []
        assignment_rows = []
        for (target, senses, assignments) in results:
            lemma, pos = target
            if senses is None:
                warnings["oov_targets"] += 1
                skipped.append({"lemma": lemma, "pos": pos, "reason": "not in embedding vocabulary"})
                continue
            senses_rows.append(_senses_payload(senses))
            assignment_rows.extend(a.to_dict() for a in assignments)
            for a in assignments:
                predictions[a.occurrence_id] = a.cluster_index
            unassigned = sum(1 for a in assignments if a.cluster_index is None)
            warnings["unassigned_occurrences"] += unassigned
            notes.append(
                {
                    "lemma": lemma,
                    "pos": pos,
                    "rule": senses.source.rule,
                    "shortfall": senses.source.shortfall,
                    "n_neighbors": len(senses.source.neighbors),
                    "n_clusters": senses.n_clusters,
                    "n_occurrences": len(assignments),
                    "n_unassigned": unassigned,
                }
            )
        _write_jsonl(out_dir / "senses.jsonl", senses_rows)
        _write_jsonl(out_dir / "assignments.jsonl", assignment_rows)
        artifacts += ["senses.jsonl", "assignments.jsonl"]
    else:

        def worker(target):
            lemma, pos = target
            seed = derive_seed(cfg.seed, lemma, pos)
            try:
                mappings, target_warnings = run_method_two(
                    corpus,
                    lemma,
                    pos,
                    cfg.substitutes,
                    mode=cfg.mode,
                    pattern=cfg.pattern,
                    l=cfg.resolved_l(),
                    r=cfg.r,
                    seed=seed,
                    cap=cfg.cap,
                    max_iterations=cfg.max_iterations,
                    lowercase=cfg.lowercase_tokens,
                )
            except DataError:
                return (target, None, None)
            return (target, mappings, target_warnings)

        results = _run_targets(targets, worker, cfg.resolved_workers())
        mapping_rows = []
        for (target, mappings, target_warnings) in results:
            lemma, pos = target
            if mappings is None:
                warnings["targets_without_predictions"] += 1
                skipped.append({"lemma": lemma, "pos": pos, "reason": "no usable predictions"})
                continue
            warnings.update(target_warnings)
            mapping_rows.extend(m.to_dict() for m in mappings)
            for m in mappings:
                predictions[m.occurrence_id] = m.cluster
            notes.append(
                {
                    "lemma": lemma,
                    "pos": pos,
                    "n_occurrences": len(mappings),
                    "n_clusters": len({m.cluster for m in mappings}),
                    "n_ties": sum(1 for m in mappings if m.tie_broken),
                }
            )
        _write_jsonl(out_dir / "mappings.jsonl", mapping_rows)
        artifacts.append("mappings.jsonl")

    if not predictions:
        raise DataError("no target could be processed; see skipped targets in the manifest")

    if annotation_count:
        evaluated = [t for t in targets if not any(s["lemma"] == t[0] and s["pos"] == t[1] for s in skipped)]
        unassigned_mode = "exclude" if cfg.eval_mode == "assigned-only" else "error"
        _report, eval_warnings = _evaluate_and_write(
            corpus,
            predictions,
            evaluated,
            out_dir,
            unassigned_mode,
            inventory=inventory,
            figures=cfg.figures,
            stem="report",
            cap=cfg.cap,
        )
        warnings.update(eval_warnings)
        artifacts += ["report.json", "report.txt"]
        if cfg.figures:
            artifacts += ["report_f1_by_word.png", "report_f1_by_group.png"]

    manifest = {
        "config": cfg.to_dict(),
        "seed": cfg.seed,
        "targets": [list(t) for t in targets],
        "skipped_targets": skipped,
        "target_notes": notes,
        "annotation_count": annotation_count,
        "warnings": {k: warnings[k] for k in sorted(warnings)},
        "artifacts": artifacts,
        "wall_time_s": round(time.perf_counter() - start, 3),
    }
    _write_json(out_dir / "manifest.json", manifest)
    log.info("run complete: %s (%.2fs)", out_dir, manifest["wall_time_s"])
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sensekit",
        description="Unsupervised word sense induction, assignment and evaluation.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("neighbors", help="collect the similarity neighbour set of a lemma")
    p.add_argument("--embeddings", required=True)
    p.add_argument("--lemma", required=True)
    p.add_argument("--floor", type=float, default=0.4)
    p.add_argument("--minimum", type=int, default=100)
    p.add_argument("--out")
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("induce", help="induce sense clusters over a lemma's neighbour set")
    p.add_argument("--embeddings", required=True)
    p.add_argument("--lemma", required=True)
    p.add_argument("--pos", required=True, choices=["noun", "verb", "adj", "other"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--floor", type=float, default=0.4)
    p.add_argument("--minimum", type=int, default=100)
    p.add_argument("--max-iterations", type=int, default=20)
    p.add_argument("--out", required=True)
    p.add_argument("--clusters-jsonl", help="also write node/cluster JSONL")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("assign", help="assign corpus occurrences to induced sense clusters")
    p.add_argument("--embeddings", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--annotations")
    p.add_argument("--senses", required=True, help="senses JSON written by 'induce'")
    p.add_argument("--variant", choices=["avg", "max"], default="avg")
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--min-support", type=int, default=4)
    p.add_argument("--cap", type=int, default=1000)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_assign)

    p = sub.add_parser("repvec", help="build TF-IDF-weighted representative vectors")
    p.add_argument("--substitutes", required=True)
    p.add_argument("--lemma")
    p.add_argument("--pos")
    p.add_argument("--mode", choices=["one-side", "both-sides"], default="one-side")
    p.add_argument("--pattern", choices=["and", "substitution"], default="substitution")
    p.add_argument("--l", type=int, default=4)
    p.add_argument("--r", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lowercase-tokens", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_repvec)

    p = sub.add_parser("map", help="cluster representative vectors and map occurrences")
    p.add_argument("--repvec", required=True, help="vectors JSONL written by 'repvec'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-iterations", type=int, default=20)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("evaluate", help="score a predictions file against gold senses")
    p.add_argument("--predictions", required=True, help="JSONL with occurrence/cluster fields")
    p.add_argument("--corpus", required=True)
    p.add_argument("--annotations", required=True)
    p.add_argument("--inventory")
    p.add_argument("--eval-mode", choices=["assigned-only", "strict"], default="assigned-only")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--stem", default="report")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("baseline", help="score the first-sense or most-frequent baseline")
    p.add_argument("--kind", choices=["first-sense", "most-frequent"], required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--annotations", required=True)
    p.add_argument("--inventory")
    p.add_argument("--out-dir", required=True)
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("run", help="end-to-end run from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--corpus")
    p.add_argument("--annotations")
    p.add_argument("--inventory")
    p.add_argument("--embeddings")
    p.add_argument("--substitutes")
    p.add_argument("--output-dir", dest="output_dir")
    p.add_argument("--method", choices=["one", "two"])
    p.add_argument("--variant", choices=["avg", "max"])
    p.add_argument("--mode", choices=["one-side", "both-sides"])
    p.add_argument("--pattern", choices=["and", "substitution"])
    p.add_argument("--l", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--window", type=int)
    p.add_argument("--min-support", dest="min_support", type=int)
    p.add_argument("--floor", type=float)
    p.add_argument("--neighbor-minimum", dest="neighbor_minimum", type=int)
    p.add_argument("--cap", type=int)
    p.add_argument("--max-iterations", dest="max_iterations", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--eval-mode", dest="eval_mode", choices=["assigned-only", "strict"])
    p.set_defaults(func=cmd_run)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(json.dumps({"error": "config", "messages": exc.messages}), file=sys.stderr)
        return EXIT_CONFIG
    except DataError as exc:
        print(json.dumps({"error": "data", "messages": [str(exc)]}), file=sys.stderr)
        return EXIT_DATA
    except SensekitError as exc:
        print(json.dumps({"error": "internal", "messages": [str(exc)]}), file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001 - the CLI boundary reports, not raises
        print(
            json.dumps({"error": "internal", "messages": [f"{type(exc).__name__}: {exc}"]}),
            file=sys.stderr,
        )
        return EXIT_INTERNAL


def entrypoint() -> None:
    sys.exit(main())
