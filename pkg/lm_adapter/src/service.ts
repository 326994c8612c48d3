import express, { Express } from 'express';

import { FillMaskModel, ModelError } from './models.js';
import { predict, PredictOptions } from './predict.js';
import { maskQuerySchema } from './types.js';

/**
 * Long-running service mode: a single endpoint accepting a mask query JSON
 * body and returning the substitute prediction record.
 */
export function createService(model: FillMaskModel, options: PredictOptions = {}): Express {
  const app = express();
  app.use(express.json());

  app.post('/predict', async (req, res) => {
    const parsed = maskQuerySchema.safeParse(req.body);
    if (!parsed.success) {
      res.status(400).json({
        error: 'invalid query',
        issues: parsed.error.issues.map((issue) => ({
          path: issue.path.join('.'),
          message: issue.message,
        })),
      });
      return;
    }
    try {
      res.json(await predict(model, parsed.data, options));
    } catch (error) {
      if (error instanceof ModelError) {
        res.status(502).json({ error: error.message, retryable: error.retryable });
      } else {
        res.status(500).json({ error: (error as Error).message });
      }
    }
  });

  app.get('/healthz', (_req, res) => {
    res.json({ model: model.name });
  });

  return app;
}
