// Canvas slippy map: raster tiles, drag to pan, wheel or buttons to zoom.

import {
  GeoPoint,
  TILE_SIZE,
  TilePlacement,
  Viewport,
  latToWorldY,
  lonToWorldX,
  tileUrl,
  tilesInView,
  worldXToLon,
  worldYToLat,
} from "./geo.js";

type ViewListener = (view: Viewport) => void;

export class MapView {
  private view: Viewport;
  private tiles = new Map<string, HTMLImageElement>();
  private listeners: ViewListener[] = [];
  private dragging = false;
  private lastX = 0;
  private lastY = 0;

  constructor(
    private canvas: HTMLCanvasElement,
    private tileTemplate: string,
    center: GeoPoint,
    zoom: number,
  ) {
    this.view = { center, zoom, width: canvas.clientWidth, height: canvas.clientHeight };
    canvas.addEventListener("pointerdown", (e) => this.onDown(e));
    canvas.addEventListener("pointermove", (e) => this.onMove(e));
    canvas.addEventListener("pointerup", () => (this.dragging = false));
    canvas.addEventListener("pointerleave", () => (this.dragging = false));
    canvas.addEventListener("wheel", (e) => this.onWheel(e), { passive: false });
    new ResizeObserver(() => this.onResize()).observe(canvas);
    this.onResize();
  }

  get viewport(): Viewport {
    return { ...this.view, center: { ...this.view.center } };
  }

  onViewChange(listener: ViewListener): void {
    this.listeners.push(listener);
  }

  zoomBy(delta: number): void {
    const zoom = Math.max(2, Math.min(19, this.view.zoom + delta));
    if (zoom !== this.view.zoom) {
      this.view = { ...this.view, zoom };
      this.emit();
    }
  }

  private emit(): void {
    this.render();
    for (const listener of this.listeners) listener(this.viewport);
  }

  private onResize(): void {
    const ratio = window.devicePixelRatio || 1;
    this.canvas.width = this.canvas.clientWidth * ratio;
    this.canvas.height = this.canvas.clientHeight * ratio;
    this.view = { ...this.view, width: this.canvas.clientWidth, height: this.canvas.clientHeight };
    this.emit();
  }

  private onDown(e: PointerEvent): void {
    this.dragging = true;
    this.lastX = e.clientX;
    this.lastY = e.clientY;
    this.canvas.setPointerCapture(e.pointerId);
  }

  private onMove(e: PointerEvent): void {
    if (!this.dragging) return;
    const dx = e.clientX - this.lastX;
    const dy = e.clientY - this.lastY;
    this.lastX = e.clientX;
    this.lastY = e.clientY;
    const z = this.view.zoom;
    const cx = lonToWorldX(this.view.center.lon, z) - dx;
    const cy = latToWorldY(this.view.center.lat, z) - dy;
    this.view = { ...this.view, center: { lat: worldYToLat(cy, z), lon: worldXToLon(cx, z) } };
    this.emit();
  }

  private onWheel(e: WheelEvent): void {
    e.preventDefault();
    this.zoomBy(e.deltaY < 0 ? 1 : -1);
  }

  private tileImage(tile: TilePlacement): HTMLImageElement {
    const key = `${tile.z}/${tile.x}/${tile.y}`;
    let img = this.tiles.get(key);
    if (img === undefined) {
      img = new Image();
      img.crossOrigin = "anonymous";
      img.src = tileUrl(this.tileTemplate, tile);
      img.onload = () => this.render();
      this.tiles.set(key, img);
      if (this.tiles.size > 400) {
        // drop the oldest half; Map preserves insertion order
        const keys = [...this.tiles.keys()].slice(0, 200);
        for (const stale of keys) this.tiles.delete(stale);
      }
    }
    return img;
  }

  render(): void {
    const ctx = this.canvas.getContext("2d");
    if (ctx === null) return;
    const ratio = window.devicePixelRatio || 1;
    ctx.save();
    ctx.scale(ratio, ratio);
    ctx.fillStyle = "#dde6ec";
    ctx.fillRect(0, 0, this.view.width, this.view.height);
    for (const tile of tilesInView(this.view)) {
      const img = this.tileImage(tile);
      if (img.complete && img.naturalWidth > 0) {
        ctx.drawImage(img, tile.screenX, tile.screenY, TILE_SIZE, TILE_SIZE);
      } else {
        ctx.strokeStyle = "#c3cdd4";
        ctx.strokeRect(tile.screenX + 0.5, tile.screenY + 0.5, TILE_SIZE - 1, TILE_SIZE - 1);
      }
    }
    ctx.restore();
  }
}
