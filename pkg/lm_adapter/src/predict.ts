import { FillMaskModel, ModelError } from './models.js';
import { MaskQuery, Prediction, SubstituteRecord } from './types.js';

export interface PredictOptions {
  /** Drop predictions with no letter or digit in them (documented switch). */
  filterPunctuation?: boolean;
  /** Lowercase surviving predictions (documented switch, off by default). */
  lowercase?: boolean;
  /** Retries for retryable model failures. */
  retries?: number;
  retryDelayMs?: number;
}

const DEFAULTS: Required<PredictOptions> = {
  filterPunctuation: true,
  lowercase: false,
  retries: 2,
  retryDelayMs: 250,
};

/** Word pieces and special tokens that do not stand alone as words. */
export function isSubtokenArtifact(token: string): boolean {
  if (token.startsWith('##')) return true;
  if (/^\[.*\]$/.test(token) || /^<.*>$/.test(token)) return true;
  if (token.replace(/^▁/, '').length === 0) return true;
  return false;
}

function isPurePunctuation(token: string): boolean {
  return !/[\p{L}\p{N}]/u.test(token);
}

const sleep = (ms: number) => new Promise((resolve) => setTimeout(resolve, ms));

async function callWithRetries(
  model: FillMaskModel,
  query: MaskQuery,
  want: number,
  options: Required<PredictOptions>
): Promise<Prediction[]> {
  let lastError: ModelError | undefined;
  for (let attempt = 0; attempt <= options.retries; attempt++) {
    try {
      return await model.fillMask(query.tokens, want);
    } catch (error) {
      if (!(error instanceof ModelError)) throw error;
      lastError = error;
      if (!error.retryable || attempt === options.retries) break;
      if (options.retryDelayMs) await sleep(options.retryDelayMs);
    }
  }
  throw new ModelError(
    `query ${query.occurrenceId} (${query.side}): ${lastError?.message ?? 'model failure'}`,
    lastError?.retryable ?? false
  );
}

/**
 * Run one query and shape the output record: the model's candidates minus
 * the target word itself (lemma and surface form), sub-token artifacts and
 * (by default) pure punctuation, truncated to the top k by score.
 */
export async function predict(
  model: FillMaskModel,
  query: MaskQuery,
  options: PredictOptions = {}
): Promise<SubstituteRecord> {
  const resolved = { ...DEFAULTS, ...options };
  // over-request so filtering still leaves k candidates where possible
  const raw = await callWithRetries(model, query, query.k * 3, resolved);
  const seen = new Set<string>();
  const predictions: Prediction[] = [];
  for (const { token, score } of [...raw].sort((a, b) => b.score - a.score)) {
    if (predictions.length === query.k) break;
    if (token === query.lemma || token === query.surface) continue;
    if (isSubtokenArtifact(token)) continue;
    if (resolved.filterPunctuation && isPurePunctuation(token)) continue;
    const shaped = resolved.lowercase ? token.toLowerCase() : token;
    if (seen.has(shaped)) continue;
    seen.add(shaped);
    predictions.push({ token: shaped, score });
  }
  return {
    occurrence: query.occurrenceId,
    lemma: query.lemma,
    pos: query.pos,
    mode: query.side,
    pattern: query.pattern,
    predictions,
  };
}
