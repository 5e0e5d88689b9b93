// Client for the sonification service.

import { BBox } from "./geo.js";

export interface HistogramDoc {
  bin_count: number;
  bin_width_deg: number;
  bins: number[];
  values: number[];
  source_total_m: number;
}

export interface PatternStep {
  level: number;
  instruments: string[];
  bass_degree: number | null;
}

export interface SonifyResult {
  histogram: HistogramDoc;
  pattern: { bin_count: number; steps: PatternStep[] };
  loop_id: string;
  loop_url: string;
  timing: { step_seconds: number; loop_seconds: number };
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export function histogramUrl(base: string, bbox: BBox, bins: number): string {
  const params = new URLSearchParams({
    min_lon: String(bbox.minLon),
    min_lat: String(bbox.minLat),
    max_lon: String(bbox.maxLon),
    max_lat: String(bbox.maxLat),
    bins: String(bins),
  });
  return `${base}/v1/histogram?${params}`;
}

async function readError(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { message?: string; error?: string };
    return body.message ?? body.error ?? `HTTP ${response.status}`;
  } catch {
    return `HTTP ${response.status}`;
  }
}

export async function fetchHistogram(
  base: string,
  bbox: BBox,
  bins: number,
  fetchImpl: FetchLike = fetch,
): Promise<HistogramDoc> {
  const response = await fetchImpl(histogramUrl(base, bbox, bins));
  if (!response.ok) throw new Error(await readError(response));
  return (await response.json()) as HistogramDoc;
}

export async function sonify(
  base: string,
  bbox: BBox,
  options: { bins?: number; bpm?: number } = {},
  fetchImpl: FetchLike = fetch,
): Promise<SonifyResult> {
  const body = {
    bbox: {
      min_lon: bbox.minLon,
      min_lat: bbox.minLat,
      max_lon: bbox.maxLon,
      max_lat: bbox.maxLat,
    },
    bins: options.bins ?? 16,
    bpm: options.bpm ?? 120,
  };
  const response = await fetchImpl(`${base}/v1/sonify`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!response.ok) throw new Error(await readError(response));
  return (await response.json()) as SonifyResult;
}

/**
 * Sequence-number guard for in-flight requests: responses for stale
 * viewports are ignored rather than racing the fresh ones.
 */
export class LatestOnly {
  private issued = 0;

  next(): number {
    return ++this.issued;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.issued;
  }
}
