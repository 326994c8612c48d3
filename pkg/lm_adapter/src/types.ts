import { z } from 'zod';

/** Sentinel used inside query token lists; models map it to their own mask token. */
export const MASK = '<mask>';

export type Side = 'left' | 'right' | 'both';
export type Pattern = 'and' | 'substitution';
export type ContextMode = 'one-side' | 'both-sides';

export interface Token {
  orth: string;
  lemma: string;
  pos: string;
}

export interface Sentence {
  doc_id: string;
  sent_index: number;
  tokens: Token[];
}

export interface Target {
  lemma: string;
  pos: string;
}

export interface TargetOccurrence {
  id: string;
  lemma: string;
  pos: string;
  sentence: Sentence;
  tokenIndex: number;
}

/** One masked model input; `tokens` contains exactly one MASK slot. */
export interface MaskQuery {
  occurrenceId: string;
  lemma: string;
  surface: string;
  pos: string;
  tokens: string[];
  side: Side;
  pattern: Pattern;
  k: number;
  degenerate?: boolean;
}

export interface Prediction {
  token: string;
  score: number;
}

/** One output record, in the exact shape the consumer pipeline reads. */
export interface SubstituteRecord {
  occurrence: string;
  lemma: string;
  pos: string;
  mode: Side;
  pattern: Pattern;
  predictions: Prediction[];
}

export const tokenSchema = z.object({
  orth: z.string().min(1),
  lemma: z.string().min(1),
  pos: z.string().min(1),
});

export const sentenceSchema = z.object({
  doc_id: z.string().min(1),
  sent_index: z.number().int().nonnegative(),
  tokens: z.array(tokenSchema).min(1),
});

export const targetSchema = z.object({
  lemma: z.string().min(1),
  pos: z.string().min(1),
});

export const maskQuerySchema = z.object({
  occurrenceId: z.string().min(1),
  lemma: z.string().min(1),
  surface: z.string().min(1),
  pos: z.string().min(1),
  tokens: z.array(z.string().min(1)).min(1),
  side: z.enum(['left', 'right', 'both']),
  pattern: z.enum(['and', 'substitution']),
  k: z.number().int().positive(),
  degenerate: z.boolean().optional(),
}).refine(
  (query) => query.tokens.filter((t) => t === MASK).length === 1,
  { message: `tokens must contain exactly one ${MASK} slot` }
);

export const substituteRecordSchema = z.object({
  occurrence: z.string().min(1),
  lemma: z.string().min(1),
  pos: z.string().min(1),
  mode: z.enum(['left', 'right', 'both']),
  pattern: z.enum(['and', 'substitution']),
  predictions: z.array(
    z.object({
      token: z.string().min(1),
      score: z.number(),
    })
  ),
});

export function occurrenceId(docId: string, sentIndex: number, tokenIndex: number): string {
  return `${docId}:${sentIndex}:${tokenIndex}`;
}
