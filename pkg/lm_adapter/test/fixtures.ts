import { mkdtempSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';

import { Associations } from '../src/models.js';
import { Sentence, Token } from '../src/types.js';

function tokens(words: string[], target: string): Token[] {
  return words.map((word) => ({
    orth: word,
    lemma: word,
    pos: word === target ? 'noun' : 'other',
  }));
}

/** Five sentences around the target: three mid-sentence occurrences, one
 * sentence-initial, one sentence-final. */
export const SENTENCES: Sentence[] = [
  {
    doc_id: 'a',
    sent_index: 0,
    tokens: tokens(
      ['saint', 'bernard', 'visited', 'towns', 'zamek', 'villages', 'around', 'france'],
      'zamek'
    ),
  },
  {
    doc_id: 'a',
    sent_index: 1,
    tokens: tokens(
      ['improved', 'security', 'systems', 'zamek', 'resist', 'modern', 'thieves'],
      'zamek'
    ),
  },
  {
    doc_id: 'b',
    sent_index: 0,
    tokens: tokens(['zamek', 'gates', 'opened', 'toward', 'hills'], 'zamek'),
  },
  {
    doc_id: 'b',
    sent_index: 1,
    tokens: tokens(['thieves', 'broke', 'the', 'rusty', 'zamek'], 'zamek'),
  },
  {
    doc_id: 'c',
    sent_index: 0,
    tokens: tokens(['stone', 'towers', 'guard', 'zamek', 'near', 'river'], 'zamek'),
  },
];

export const MID_OCCURRENCES = ['a:0:4', 'a:1:3', 'c:0:3'];
export const EDGE_OCCURRENCES = ['b:0:0', 'b:1:4'];

const building = (weight: number) => ({
  fortress: weight + 0.5,
  palace: weight + 0.4,
  tower: weight + 0.3,
  manor: weight + 0.2,
  citadel: weight + 0.1,
  stronghold: weight,
  // pollution the adapter must filter out:
  zamek: weight + 0.9,
  '##ek': weight + 0.8,
  ',': weight + 0.7,
  '[UNK]': weight + 0.6,
});

const fastener = (weight: number) => ({
  padlock: weight + 0.5,
  bolt: weight + 0.4,
  latch: weight + 0.3,
  deadbolt: weight + 0.2,
  mechanism: weight + 0.1,
  fastener: weight,
  zamek: weight + 0.9,
  '##ość': weight + 0.8,
  '...': weight + 0.7,
  '<pad>': weight + 0.6,
});

export const LEXICON: Associations = {
  saint: building(1.0),
  bernard: building(1.1),
  visited: building(0.9),
  towns: building(1.3),
  villages: building(1.2),
  around: building(0.8),
  france: building(1.0),
  gates: building(1.4),
  opened: building(0.9),
  toward: building(0.7),
  hills: building(1.1),
  stone: building(1.2),
  towers: building(1.3),
  guard: building(1.0),
  near: building(0.8),
  river: building(1.1),
  improved: fastener(0.9),
  security: fastener(1.3),
  systems: fastener(1.2),
  resist: fastener(1.0),
  modern: fastener(0.9),
  thieves: fastener(1.4),
  broke: fastener(1.1),
  the: fastener(0.6),
  rusty: fastener(1.2),
  i: building(0.1),
};

export interface FixtureFiles {
  dir: string;
  corpus: string;
  targets: string;
  lexicon: string;
}

export function writeFixtureFiles(): FixtureFiles {
  const dir = mkdtempSync(join(tmpdir(), 'lm-adapter-'));
  const corpus = join(dir, 'corpus.jsonl');
  writeFileSync(corpus, SENTENCES.map((s) => JSON.stringify(s)).join('\n') + '\n');
  const targets = join(dir, 'targets.jsonl');
  writeFileSync(targets, JSON.stringify({ lemma: 'zamek', pos: 'noun' }) + '\n');
  const lexicon = join(dir, 'lexicon.json');
  writeFileSync(lexicon, JSON.stringify(LEXICON));
  return { dir, corpus, targets, lexicon };
}
