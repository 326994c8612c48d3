#!/usr/bin/env node
import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';

import { runBatch } from './batch.js';
import { FillMaskModel, HttpModel, LexiconModel, loadModelFromConfigFile } from './models.js';
import { createService } from './service.js';

interface ModelArgs {
  config?: string;
  model?: string;
  lexicon?: string;
  url?: string;
}

function resolveModel(args: ModelArgs): FillMaskModel {
  if (args.config) {
    if (!args.model) throw new Error('--model is required with --config');
    return loadModelFromConfigFile(args.config, args.model);
  }
  if (args.lexicon) return LexiconModel.fromFile('lexicon', args.lexicon);
  if (args.url) return new HttpModel('http', args.url);
  throw new Error('give --config/--model, --lexicon or --url');
}

const modelOptions = {
  config: { type: 'string' as const, describe: 'adapter config JSON with named model slots' },
  model: { type: 'string' as const, describe: 'model slot name from --config' },
  lexicon: { type: 'string' as const, describe: 'lexicon model JSON file' },
  url: { type: 'string' as const, describe: 'fill-mask service URL' },
};

void yargs(hideBin(process.argv))
  .scriptName('lm-adapter')
  .command(
    'batch',
    'predict substitutes for every target occurrence and write JSONL',
    (y) =>
      y.options({
        ...modelOptions,
        corpus: { type: 'string', demandOption: true },
        targets: { type: 'string', demandOption: true, describe: 'JSONL of {lemma, pos}' },
        out: { type: 'string', demandOption: true },
        mode: { choices: ['one-side', 'both-sides'] as const, default: 'one-side' as const },
        pattern: { choices: ['and', 'substitution'] as const, default: 'substitution' as const },
        k: { type: 'number', default: 20 },
        cap: { type: 'number', default: 1000 },
        conjunction: { type: 'string', default: 'i' },
        'keep-punctuation': { type: 'boolean', default: false },
        lowercase: { type: 'boolean', default: false },
      }),
    async (args) => {
      const model = resolveModel(args);
      const result = await runBatch(args.corpus, args.targets, model, args.out, {
        mode: args.mode,
        pattern: args.pattern,
        k: args.k,
        cap: args.cap,
        conjunction: args.conjunction,
        filterPunctuation: !args['keep-punctuation'],
        lowercase: args.lowercase,
      });
      console.error(
        `wrote ${result.records} records for ${result.occurrences} occurrences to ${args.out}`
      );
    }
  )
  .command(
    'serve',
    'expose a single predict endpoint over HTTP',
    (y) =>
      y.options({
        ...modelOptions,
        port: { type: 'number', default: 8571 },
        'keep-punctuation': { type: 'boolean', default: false },
        lowercase: { type: 'boolean', default: false },
      }),
    (args) => {
      const model = resolveModel(args);
      const app = createService(model, {
        filterPunctuation: !args['keep-punctuation'],
        lowercase: args.lowercase,
      });
      app.listen(args.port, () => {
        console.error(`lm-adapter serving ${model.name} on :${args.port}`);
      });
    }
  )
  .demandCommand(1)
  .strict()
  .fail((message, error) => {
    console.error(error ? `error: ${error.message}` : message);
    process.exit(2);
  })
  .parse();
