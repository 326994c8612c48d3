"""BCubed scoring of induced clusters against gold senses, baselines, and
per-group aggregation.

Per-item precision is the fraction of the item's predicted cluster sharing
its gold sense; per-item recall is the fraction of its gold class sharing
its cluster (the item counts itself in all three sets). The ``n`` weighting
averages per-item scores uniformly; the ``nc`` weighting averages precision
per predicted cluster and recall per gold class before averaging the group
means.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

from .corpus import Occurrence, SenseInventory

WEIGHTINGS = ("n", "nc")
UNASSIGNED_MODES = ("exclude", "error")

# Curated ambiguous-word subset used for detailed per-word reporting.
SELECTED_WORDS: frozenset[tuple[str, str]] = frozenset(
    [
        ("badanie", "noun"),
        ("biuro", "noun"),
        ("blok", "noun"),
        ("głos", "noun"),
        ("historia", "noun"),
        ("interes", "noun"),
        ("język", "noun"),
        ("kierunek", "noun"),
        ("klasa", "noun"),
        ("kolej", "noun"),
        ("koło", "noun"),
        ("komórka", "noun"),
        ("linia", "noun"),
        ("zamek", "noun"),
        ("biały", "adj"),
        ("ciężki", "adj"),
        ("łagodny", "adj"),
        ("niski", "adj"),
        ("prawdziwy", "adj"),
        ("szybki", "adj"),
        ("zły", "adj"),
        ("działać", "verb"),
        ("należeć", "verb"),
        ("przyjąć", "verb"),
        ("uważać", "verb"),
        ("zakładać", "verb"),
        ("zamykać", "verb"),
        ("zobaczyć", "verb"),
        ("związać", "verb"),
        ("żyć", "verb"),
    ]
)

GROUPINGS = ("pos", "selected-30", "ambiguous", "all")


@dataclass(frozen=True)
class LabeledItem:
    """One occurrence with its predicted cluster and gold sense. A cluster
    of None marks an occurrence the method left unassigned."""

    occurrence_id: str
    cluster: int | None
    gold: str


def f1_score(p: float, r: float) -> float:
    return 0.0 if p + r == 0 else 2 * p * r / (p + r)


def bcubed_item(items: list[LabeledItem], index: int) -> tuple[float, float]:
    """Per-item (precision, recall) by direct set counting."""
    me = items[index]
    if me.cluster is None:
        return 0.0, 0.0
    cluster_size = sum(1 for it in items if it.cluster == me.cluster)
    class_size = sum(1 for it in items if it.gold == me.gold)
    both = sum(1 for it in items if it.cluster == me.cluster and it.gold == me.gold)
    return both / cluster_size, both / class_size


def bcubed_scores(
    items: list[LabeledItem],
    weighting: str = "n",
    unassigned: str = "exclude",
) -> tuple[float, float, float]:
    """(P, R, F1) over a labeled partition.

    ``unassigned="exclude"`` drops None-cluster items before scoring;
    ``unassigned="error"`` keeps them with zero precision and recall, each
    counting as its own group under the nc weighting.
    """
    if weighting not in WEIGHTINGS:
        raise ValueError(f"weighting must be one of {WEIGHTINGS}")
    if unassigned not in UNASSIGNED_MODES:
        raise ValueError(f"unassigned must be one of {UNASSIGNED_MODES}")
    if unassigned == "exclude":
        items = [it for it in items if it.cluster is not None]
    if not items:
        raise ValueError("empty partition")

    assigned = [it for it in items if it.cluster is not None]
    cluster_sizes = Counter(it.cluster for it in assigned)
    class_sizes = Counter(it.gold for it in items)
    joint = Counter((it.cluster, it.gold) for it in assigned)

    precisions: list[float] = []
    recalls: list[float] = []
    for it in items:
        if it.cluster is None:
            precisions.append(0.0)
            recalls.append(0.0)
        else:
            overlap = joint[(it.cluster, it.gold)]
            precisions.append(overlap / cluster_sizes[it.cluster])
            recalls.append(overlap / class_sizes[it.gold])

    if weighting == "n":
        precision = sum(precisions) / len(items)
        recall = sum(recalls) / len(items)
    else:
        by_cluster: dict[object, list[float]] = defaultdict(list)
        by_class: dict[str, list[float]] = defaultdict(list)
        for position, it in enumerate(items):
            group = it.cluster if it.cluster is not None else ("unassigned", it.occurrence_id)
            by_cluster[group].append(precisions[position])
            by_class[it.gold].append(recalls[position])
        precision = sum(sum(v) / len(v) for v in by_cluster.values()) / len(by_cluster)
        recall = sum(sum(v) / len(v) for v in by_class.values()) / len(by_class)
    return precision, recall, f1_score(precision, recall)


@dataclass
class EvalRow:
    word: str
    pos: str
    P_n: float
    R_n: float
    F1_n: float
    P_nc: float
    R_nc: float
    F1_nc: float
    n_items: int
    n_clusters: int
    n_senses: int

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "pos": self.pos,
            "P_n": self.P_n,
            "R_n": self.R_n,
            "F1_n": self.F1_n,
            "P_nc": self.P_nc,
            "R_nc": self.R_nc,
            "F1_nc": self.F1_nc,
            "n_items": self.n_items,
            "n_clusters": self.n_clusters,
            "n_senses": self.n_senses,
        }


def evaluate_partition(
    word: str,
    pos: str,
    items: list[LabeledItem],
    unassigned: str = "exclude",
) -> EvalRow:
    p_n, r_n, f1_n = bcubed_scores(items, "n", unassigned)
    p_nc, r_nc, f1_nc = bcubed_scores(items, "nc", unassigned)
    scored = [it for it in items if it.cluster is not None] if unassigned == "exclude" else items
    return EvalRow(
        word=word,
        pos=pos,
        P_n=p_n,
        R_n=r_n,
        F1_n=f1_n,
        P_nc=p_nc,
        R_nc=r_nc,
        F1_nc=f1_nc,
        n_items=len(scored),
        n_clusters=len({it.cluster for it in scored if it.cluster is not None}),
        n_senses=len({it.gold for it in scored}),
    )


def build_rows(
    occurrences_by_word: dict[tuple[str, str], list[Occurrence]],
    predictions: dict[str, int | None],
    unassigned: str = "exclude",
) -> tuple[list[EvalRow], Counter]:
    """EvalRows for every (word, pos) with annotated occurrences. Occurrences
    missing from ``predictions`` count as unassigned; words left with no
    scoreable items are skipped with a warning count."""
    rows: list[EvalRow] = []
    warnings: Counter = Counter()
    for (word, pos) in sorted(occurrences_by_word):
        items = [
            LabeledItem(occ.id, predictions.get(occ.id), occ.gold_sense)
            for occ in occurrences_by_word[(word, pos)]
            if occ.gold_sense is not None
        ]
        if not items:
            warnings["words_without_gold"] += 1
            continue
        if unassigned == "exclude" and all(it.cluster is None for it in items):
            warnings["words_fully_unassigned"] += 1
            continue
        rows.append(evaluate_partition(word, pos, items, unassigned))
    return rows, warnings


def _group_by_word(occurrences: list[Occurrence]) -> dict[tuple[str, str], list[Occurrence]]:
    grouped: dict[tuple[str, str], list[Occurrence]] = defaultdict(list)
    for occ in occurrences:
        grouped[(occ.lemma, occ.pos)].append(occ)
    return grouped


def first_sense_baseline(
    occurrences: list[Occurrence], inventory: SenseInventory
) -> tuple[list[EvalRow], Counter]:
    """Every occurrence predicted as its word's first inventory sense, i.e.
    the constant cluster 0, scored as a labeled partition. Words missing
    from the inventory are skipped, counting each skipped occurrence."""
    rows: list[EvalRow] = []
    warnings: Counter = Counter()
    grouped = _group_by_word([occ for occ in occurrences if occ.gold_sense is not None])
    for (word, pos) in sorted(grouped):
        occs = grouped[(word, pos)]
        if (word, pos) not in inventory:
            warnings["missing_inventory_entry"] += len(occs)
            continue
        items = [LabeledItem(occ.id, 0, occ.gold_sense) for occ in occs]
        rows.append(evaluate_partition(word, pos, items))
    return rows, warnings


def most_frequent_baseline(occurrences: list[Occurrence]) -> list[EvalRow]:
    """Every occurrence predicted as its word's modal gold sense (ties by
    lexicographic sense id), scored as a labeled partition."""
    rows: list[EvalRow] = []
    grouped = _group_by_word([occ for occ in occurrences if occ.gold_sense is not None])
    for (word, pos) in sorted(grouped):
        occs = grouped[(word, pos)]
        counts = Counter(occ.gold_sense for occ in occs)
        modal = min(counts, key=lambda sense: (-counts[sense], sense))
        senses = sorted(counts)
        items = [LabeledItem(occ.id, senses.index(modal), occ.gold_sense) for occ in occs]
        rows.append(evaluate_partition(word, pos, items))
    return rows


@dataclass
class GroupRow:
    group: str
    n_words: int
    P_n: float
    R_n: float
    F1_n: float
    P_nc: float
    R_nc: float
    F1_nc: float

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "n_words": self.n_words,
            "P_n": self.P_n,
            "R_n": self.R_n,
            "F1_n": self.F1_n,
            "P_nc": self.P_nc,
            "R_nc": self.R_nc,
            "F1_nc": self.F1_nc,
        }


def _mean_row(group: str, rows: list[EvalRow]) -> GroupRow:
    n = len(rows)
    return GroupRow(
        group=group,
        n_words=n,
        P_n=sum(r.P_n for r in rows) / n,
        R_n=sum(r.R_n for r in rows) / n,
        F1_n=sum(r.F1_n for r in rows) / n,
        P_nc=sum(r.P_nc for r in rows) / n,
        R_nc=sum(r.R_nc for r in rows) / n,
        F1_nc=sum(r.F1_nc for r in rows) / n,
    )


def aggregate(
    rows: list[EvalRow], grouping: str
) -> tuple[list[GroupRow], list[str]]:
    """Macro-average the metric columns within each group of the requested
    grouping. Empty groups are omitted, with a notice per omission."""
    if grouping not in GROUPINGS:
        raise ValueError(f"grouping must be one of {GROUPINGS}")
    if not rows:
        raise ValueError("no rows to aggregate")
    notices: list[str] = []
    groups: list[GroupRow] = []
    if grouping == "pos":
        for pos in ("noun", "verb", "adj", "other"):
            members = [r for r in rows if r.pos == pos]
            if members:
                groups.append(_mean_row(f"avg_{pos}", members))
    elif grouping == "selected-30":
        members = [r for r in rows if (r.word, r.pos) in SELECTED_WORDS]
        if members:
            groups.append(_mean_row("AVG_30", members))
        else:
            notices.append("selected-30 group empty, omitted")
    elif grouping == "ambiguous":
        members = [r for r in rows if r.n_senses >= 2]
        if members:
            groups.append(_mean_row("AVG_ambig", members))
        else:
            notices.append("ambiguous group empty, omitted")
    else:  # all
        groups.append(_mean_row("AVG_all", rows))
    return groups, notices
