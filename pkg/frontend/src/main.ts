// Wiring: map + compass overlay + Sonify Me! + playback sync.

import { fetchHistogram, LatestOnly, sonify } from "./api.js";
import { drawCompass } from "./compass.js";
import { viewportBBox, Viewport } from "./geo.js";
import { MapView } from "./mapview.js";
import { LoopPlayer } from "./playback.js";

// The map opens on Vienna.
export const HOME = { lat: 48.2082, lon: 16.3738 };
export const HOME_ZOOM = 13;

interface UiConfig {
  service_url: string;
  tile_url: string;
}

const HISTOGRAM_DEBOUNCE_MS = 250;

async function boot(): Promise<void> {
  const config = (await (await fetch("./config.json")).json()) as UiConfig;
  const mapCanvas = document.getElementById("map") as HTMLCanvasElement;
  const overlay = document.getElementById("compass") as HTMLCanvasElement;
  const button = document.getElementById("sonify") as HTMLButtonElement;
  const bpmInput = document.getElementById("bpm") as HTMLInputElement;
  const status = document.getElementById("status") as HTMLElement;

  const map = new MapView(mapCanvas, config.tile_url, HOME, HOME_ZOOM);
  const player = new LoopPlayer();
  const guard = new LatestOnly();
  let values: number[] = new Array(16).fill(0);
  let bins = 16;
  let debounce: number | undefined;

  const say = (message: string) => {
    status.textContent = message;
  };

  async function refreshHistogram(view: Viewport): Promise<void> {
    const ticket = guard.next();
    try {
      const doc = await fetchHistogram(config.service_url, viewportBBox(view), bins);
      if (!guard.isCurrent(ticket)) return; // stale viewport, ignore
      values = doc.values;
      say(doc.source_total_m > 0 ? `${Math.round(doc.source_total_m).toLocaleString()} m of streets in view` : "no streets in view");
    } catch (err) {
      if (guard.isCurrent(ticket)) say(`histogram failed: ${(err as Error).message}`);
    }
  }

  map.onViewChange((view) => {
    window.clearTimeout(debounce);
    debounce = window.setTimeout(() => void refreshHistogram(view), HISTOGRAM_DEBOUNCE_MS);
  });
  void refreshHistogram(map.viewport);

  button.addEventListener("click", () => {
    void (async () => {
      button.disabled = true;
      say("sonifying…");
      try {
        const bpm = Math.max(40, Math.min(300, Number(bpmInput.value) || 120));
        const result = await sonify(config.service_url, viewportBBox(map.viewport), { bins, bpm });
        values = result.histogram.values;
        bins = result.histogram.bin_count;
        await player.play(config.service_url + result.loop_url, result.timing, bins);
        say(`looping ${result.timing.loop_seconds.toFixed(2)}s at ${bpm} bpm`);
      } catch (err) {
        say(`sonify failed: ${(err as Error).message}`);
      } finally {
        button.disabled = false;
      }
    })();
  });

  function frame(): void {
    const ratio = window.devicePixelRatio || 1;
    overlay.width = overlay.clientWidth * ratio;
    overlay.height = overlay.clientHeight * ratio;
    const ctx = overlay.getContext("2d");
    if (ctx !== null) {
      ctx.save();
      ctx.scale(ratio, ratio);
      ctx.clearRect(0, 0, overlay.clientWidth, overlay.clientHeight);
      const cx = overlay.clientWidth / 2;
      const cy = overlay.clientHeight / 2;
      const outer = Math.min(cx, cy) * 0.55;
      drawCompass(
        ctx,
        values,
        cx,
        cy,
        { innerRadius: outer * 0.18, outerRadius: outer },
        player.step(),
        player.angle(),
      );
      ctx.restore();
    }
    window.requestAnimationFrame(frame);
  }
  window.requestAnimationFrame(frame);

  document.getElementById("zoom-in")?.addEventListener("click", () => map.zoomBy(1));
  document.getElementById("zoom-out")?.addEventListener("click", () => map.zoomBy(-1));
}

if (typeof document !== "undefined") {
  void boot();
}
