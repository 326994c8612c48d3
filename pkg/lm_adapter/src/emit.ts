import { writeFileSync } from 'node:fs';

import { SubstituteRecord, substituteRecordSchema } from './types.js';

/**
 * Schema-validate every record, then write them as JSONL. Validation runs
 * before anything touches disk, so a bad record aborts the whole write.
 * Returns the record count.
 */
export function emitRecords(records: SubstituteRecord[], path: string): number {
  records.forEach((record, index) => {
    const parsed = substituteRecordSchema.safeParse(record);
    if (!parsed.success) {
      const issue = parsed.error.issues[0];
      const where = issue.path.join('.') || '(record)';
      throw new Error(
        `record ${index + 1} (${(record as { occurrence?: string }).occurrence ?? 'unknown'}): ` +
          `${where}: ${issue.message}`
      );
    }
  });
  const lines = records.map((record) => JSON.stringify(record));
  writeFileSync(path, lines.length ? lines.join('\n') + '\n' : '', 'utf-8');
  return records.length;
}
