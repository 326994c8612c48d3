import { readFileSync } from 'node:fs';

import { MASK, Prediction } from './types.js';

/** Raised when a model call fails; retryable failures may be re-attempted. */
export class ModelError extends Error {
  readonly retryable: boolean;

  constructor(message: string, retryable = false) {
    super(message);
    this.name = 'ModelError';
    this.retryable = retryable;
  }
}

export interface FillMaskModel {
  readonly name: string;
  /** Top candidates for the single MASK slot in `tokens`, best first. */
  fillMask(tokens: string[], k: number): Promise<Prediction[]>;
}

export type Associations = Record<string, Record<string, number>>;

/**
 * Deterministic offline model: candidate scores are summed association
 * weights between the context tokens and the candidate. Useful for fixtures
 * and tests; a lexicon file is a JSON object {contextToken: {candidate: weight}}.
 */
export class LexiconModel implements FillMaskModel {
  readonly name: string;
  private readonly associations: Associations;

  constructor(name: string, associations: Associations) {
    this.name = name;
    this.associations = associations;
  }

  static fromFile(name: string, path: string): LexiconModel {
    const raw = JSON.parse(readFileSync(path, 'utf-8'));
    return new LexiconModel(name, raw);
  }

  async fillMask(tokens: string[], k: number): Promise<Prediction[]> {
    const scores = new Map<string, number>();
    for (const token of tokens) {
      if (token === MASK) continue;
      const row = this.associations[token];
      if (!row) continue;
      for (const [candidate, weight] of Object.entries(row)) {
        scores.set(candidate, (scores.get(candidate) ?? 0) + weight);
      }
    }
    return [...scores.entries()]
      .map(([token, score]) => ({ token, score }))
      .sort((a, b) => b.score - a.score || a.token.localeCompare(b.token))
      .slice(0, k);
  }
}

/**
 * Client for an external fill-mask service: POST {tokens, k} to the
 * configured URL, expecting {predictions: [{token, score}]} back.
 */
export class HttpModel implements FillMaskModel {
  readonly name: string;
  private readonly url: string;
  private readonly timeoutMs: number;

  constructor(name: string, url: string, timeoutMs = 30000) {
    this.name = name;
    this.url = url;
    this.timeoutMs = timeoutMs;
  }

  async fillMask(tokens: string[], k: number): Promise<Prediction[]> {
    let response: Response;
    try {
      response = await fetch(this.url, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify({ tokens, k }),
        signal: AbortSignal.timeout(this.timeoutMs),
      });
    } catch (error) {
      throw new ModelError(`model ${this.name}: ${(error as Error).message}`, true);
    }
    if (!response.ok) {
      throw new ModelError(
        `model ${this.name}: HTTP ${response.status}`,
        response.status >= 500
      );
    }
    const payload = (await response.json()) as { predictions?: Prediction[] };
    if (!Array.isArray(payload.predictions)) {
      throw new ModelError(`model ${this.name}: malformed response`, false);
    }
    return payload.predictions;
  }
}

export interface ModelConfig {
  type: 'lexicon' | 'http';
  path?: string;
  url?: string;
  timeoutMs?: number;
}

/** Adapter config file: named model slots (two slots cover an A/B comparison). */
export interface AdapterConfig {
  models: Record<string, ModelConfig>;
}

export function loadModel(name: string, config: ModelConfig): FillMaskModel {
  if (config.type === 'lexicon') {
    if (!config.path) throw new Error(`model ${name}: lexicon model needs a path`);
    return LexiconModel.fromFile(name, config.path);
  }
  if (config.type === 'http') {
    if (!config.url) throw new Error(`model ${name}: http model needs a url`);
    return new HttpModel(name, config.url, config.timeoutMs);
  }
  throw new Error(`model ${name}: unknown type ${(config as { type: string }).type}`);
}

export function loadModelFromConfigFile(path: string, name: string): FillMaskModel {
  const config = JSON.parse(readFileSync(path, 'utf-8')) as AdapterConfig;
  const entry = config.models?.[name];
  if (!entry) {
    const known = Object.keys(config.models ?? {}).join(', ') || '(none)';
    throw new Error(`model ${name} not in config (known: ${known})`);
  }
  return loadModel(name, entry);
}
