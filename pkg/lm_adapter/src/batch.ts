import { collectOccurrences, readCorpus, readTargets } from './corpus.js';
import { emitRecords } from './emit.js';
import { FillMaskModel } from './models.js';
import { predict, PredictOptions } from './predict.js';
import { buildQueries } from './queries.js';
import { ContextMode, MaskQuery, Pattern, SubstituteRecord } from './types.js';

export interface BatchOptions extends PredictOptions {
  mode: ContextMode;
  pattern: Pattern;
  k?: number;
  conjunction?: string;
  /** Occurrence cap per target, matching the consumer's processing cap. */
  cap?: number;
  /** Queries processed concurrently; output order stays deterministic. */
  batchSize?: number;
}

export interface BatchResult {
  occurrences: number;
  queries: number;
  records: number;
}

export async function runBatch(
  corpusPath: string,
  targetsPath: string,
  model: FillMaskModel,
  outPath: string,
  options: BatchOptions
): Promise<BatchResult> {
  const sentences = readCorpus(corpusPath);
  const targets = readTargets(targetsPath);
  const occurrences = collectOccurrences(sentences, targets, options.cap ?? 1000);
  const k = options.k ?? 20;
  const queries: MaskQuery[] = [];
  for (const occurrence of occurrences) {
    queries.push(
      ...buildQueries(occurrence.sentence, occurrence.tokenIndex, options.mode, options.pattern, {
        k,
        conjunction: options.conjunction,
      })
    );
  }
  const records: SubstituteRecord[] = [];
  const batchSize = options.batchSize ?? 8;
  for (let start = 0; start < queries.length; start += batchSize) {
    const chunk = queries.slice(start, start + batchSize);
    const results = await Promise.all(chunk.map((query) => predict(model, query, options)));
    records.push(...results);
  }
  const count = emitRecords(records, outPath);
  return { occurrences: occurrences.length, queries: queries.length, records: count };
}
