// Client for the sonification service.
export function histogramUrl(base, bbox, bins) {
    const params = new URLSearchParams({
        min_lon: String(bbox.minLon),
        min_lat: String(bbox.minLat),
        max_lon: String(bbox.maxLon),
        max_lat: String(bbox.maxLat),
        bins: String(bins),
    });
    return `${base}/v1/histogram?${params}`;
}
async function readError(response) {
    try {
        const body = (await response.json());
        return body.message ?? body.error ?? `HTTP ${response.status}`;
    }
    catch {
        return `HTTP ${response.status}`;
    }
}
export async function fetchHistogram(base, bbox, bins, fetchImpl = fetch) {
    const response = await fetchImpl(histogramUrl(base, bbox, bins));
    if (!response.ok)
        throw new Error(await readError(response));
    return (await response.json());
}
export async function sonify(base, bbox, options = {}, fetchImpl = fetch) {
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
    if (!response.ok)
        throw new Error(await readError(response));
    return (await response.json());
}
/**
 * Sequence-number guard for in-flight requests: responses for stale
 * viewports are ignored rather than racing the fresh ones.
 */
export class LatestOnly {
    constructor() {
        this.issued = 0;
    }
    next() {
        return ++this.issued;
    }
    isCurrent(ticket) {
        return ticket === this.issued;
    }
}
