import { ContextMode, MASK, MaskQuery, Pattern, Sentence, occurrenceId } from './types.js';

export interface QueryOptions {
  k: number;
  /** Conjunction appended beside the target in the and-pattern ('i' = Polish 'and'). */
  conjunction?: string;
}

/**
 * Build the masked model inputs for one occurrence.
 *
 * One-side mode produces a query per side. The and-pattern keeps the target
 * word and inserts a conjunction next to the mask; the substitution pattern
 * replaces the target with the mask. An occurrence at a sentence edge has
 * one empty context, and only the non-empty side is queried. Both-sides
 * mode masks the target inside the full sentence (substitution pattern
 * only) and yields exactly one query.
 */
export function buildQueries(
  sentence: Sentence,
  tokenIndex: number,
  mode: ContextMode,
  pattern: Pattern,
  options: QueryOptions
): MaskQuery[] {
  if (!sentence.tokens.length) {
    throw new Error(`${sentence.doc_id}:${sentence.sent_index}: empty sentence`);
  }
  if (tokenIndex < 0 || tokenIndex >= sentence.tokens.length) {
    throw new Error(
      `${sentence.doc_id}:${sentence.sent_index}: token index ${tokenIndex} out of range`
    );
  }
  if (mode === 'both-sides' && pattern !== 'substitution') {
    throw new Error('both-sides mode supports only the substitution pattern');
  }
  const conjunction = options.conjunction ?? 'i';
  const target = sentence.tokens[tokenIndex];
  const words = sentence.tokens.map((t) => t.orth);
  const before = words.slice(0, tokenIndex);
  const after = words.slice(tokenIndex + 1);
  const base = {
    occurrenceId: occurrenceId(sentence.doc_id, sentence.sent_index, tokenIndex),
    lemma: target.lemma,
    surface: target.orth,
    pos: target.pos,
    pattern,
    k: options.k,
  };

  if (mode === 'both-sides') {
    const query: MaskQuery = {
      ...base,
      tokens: [...before, MASK, ...after],
      side: 'both',
    };
    if (!before.length && !after.length) {
      query.degenerate = true;
    }
    return [query];
  }

  const queries: MaskQuery[] = [];
  if (before.length) {
    queries.push({
      ...base,
      side: 'left',
      tokens:
        pattern === 'and'
          ? [...before, target.orth, conjunction, MASK]
          : [...before, MASK],
    });
  }
  if (after.length) {
    queries.push({
      ...base,
      side: 'right',
      tokens:
        pattern === 'and'
          ? [MASK, conjunction, target.orth, ...after]
          : [MASK, ...after],
    });
  }
  return queries;
}
