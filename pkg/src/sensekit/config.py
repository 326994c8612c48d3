"""Run configuration: a declarative JSON file whose keys are mirrored
one-to-one by CLI flags. Defaults are the method parameters the toolkit is
calibrated around (floor 0.4, neighbour minimum 100, window 5, support 4,
k 20, r 20, l 4 one-side / 6 both-sides, occurrence cap 1000)."""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass

from .errors import ConfigError
from .method_two import MODES, PATTERNS, default_l
from .method_one import VARIANTS

METHODS = ("one", "two")
EVAL_MODES = ("assigned-only", "strict")


@dataclass
class RunConfig:
    corpus: str = ""
    output_dir: str = ""
    method: str = "one"
    targets: list | str = "all-annotated"  # [[lemma, pos], ...] or "all-annotated"
    annotations: str | None = None
    inventory: str | None = None
    embeddings: str | None = None
    substitutes: str | None = None
    variant: str = "avg"
    mode: str = "one-side"
    pattern: str = "substitution"
    l: int | None = None
    r: int = 20
    k: int = 20
    window: int = 5
    min_support: int = 4
    floor: float = 0.4
    neighbor_minimum: int = 100
    cap: int = 1000
    max_iterations: int = 20
    seed: int = 0
    workers: int | None = None  # None = available cores
    eval_mode: str = "assigned-only"
    figures: bool = True
    lowercase_tokens: bool = False

    def resolved_l(self) -> int:
        return self.l if self.l is not None else default_l(self.mode)

    def resolved_workers(self) -> int:
        return self.workers if self.workers is not None else (os.cpu_count() or 1)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)


CONFIG_KEYS = {f.name for f in dataclasses.fields(RunConfig)}


def load_run_config(path, overrides: dict | None = None) -> RunConfig:
    """Read a config file and apply explicit overrides on top of it."""
    try:
        with open(path, encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file is not valid JSON: {exc.msg}") from None
    if not isinstance(raw, dict):
        raise ConfigError("config file must hold a JSON object")
    unknown = sorted(set(raw) - CONFIG_KEYS)
    if unknown:
        raise ConfigError([f"unknown config key: {key}" for key in unknown])
    merged = dict(raw)
    if overrides:
        merged.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**merged)


def validate_run_config(cfg: RunConfig) -> list[str]:
    """Every violated constraint, not just the first."""
    problems: list[str] = []

    def check_file(name: str, value: str | None, required: bool) -> None:
        if not value:
            if required:
                problems.append(f"{name} is required for method {cfg.method!r}")
            return
        if not os.path.isfile(value):
            problems.append(f"{name} file not found: {value}")

    if cfg.method not in METHODS:
        problems.append(f"method must be one of {METHODS}, got {cfg.method!r}")
    if not cfg.output_dir:
        problems.append("output_dir is required")
    check_file("corpus", cfg.corpus, required=True)
    check_file("annotations", cfg.annotations, required=False)
    check_file("inventory", cfg.inventory, required=False)
    check_file("embeddings", cfg.embeddings, required=cfg.method == "one")
    check_file("substitutes", cfg.substitutes, required=cfg.method == "two")

    if cfg.variant not in VARIANTS:
        problems.append(f"variant must be one of {VARIANTS}, got {cfg.variant!r}")
    if cfg.mode not in MODES:
        problems.append(f"mode must be one of {MODES}, got {cfg.mode!r}")
    if cfg.pattern not in PATTERNS:
        problems.append(f"pattern must be one of {PATTERNS}, got {cfg.pattern!r}")
    if cfg.mode == "both-sides" and cfg.pattern != "substitution":
        problems.append("both-sides mode supports only the substitution pattern")

    for name, value, low in (
        ("r", cfg.r, 1),
        ("k", cfg.k, 1),
        ("window", cfg.window, 1),
        ("min_support", cfg.min_support, 1),
        ("neighbor_minimum", cfg.neighbor_minimum, 1),
        ("cap", cfg.cap, 1),
        ("max_iterations", cfg.max_iterations, 1),
    ):
        if not isinstance(value, int) or value < low:
            problems.append(f"{name} must be an integer >= {low}, got {value!r}")
    if cfg.l is not None and (not isinstance(cfg.l, int) or cfg.l < 1):
        problems.append(f"l must be a positive integer when given, got {cfg.l!r}")
    if not isinstance(cfg.floor, (int, float)) or not -1.0 <= cfg.floor <= 1.0:
        problems.append(f"floor must be a number in [-1, 1], got {cfg.floor!r}")
    if not isinstance(cfg.seed, int):
        problems.append(f"seed must be an integer, got {cfg.seed!r}")
    if cfg.workers is not None and (not isinstance(cfg.workers, int) or cfg.workers < 1):
        problems.append(f"workers must be a positive integer when given, got {cfg.workers!r}")
    if cfg.eval_mode not in EVAL_MODES:
        problems.append(f"eval_mode must be one of {EVAL_MODES}, got {cfg.eval_mode!r}")

    if cfg.targets != "all-annotated":
        if not isinstance(cfg.targets, list) or not cfg.targets:
            problems.append('targets must be "all-annotated" or a non-empty list of [lemma, pos]')
        else:
            for entry in cfg.targets:
                if (
                    not isinstance(entry, (list, tuple))
                    or len(entry) != 2
                    or not all(isinstance(part, str) and part for part in entry)
                ):
                    problems.append(f"bad target entry: {entry!r}")
    return problems
