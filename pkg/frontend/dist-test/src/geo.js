// Web Mercator math shared by the map view and the API layer.
export const TILE_SIZE = 256;
export const MAX_LATITUDE = 85.051128779807; // Mercator pole cutoff
export function worldSize(zoom) {
    return TILE_SIZE * Math.pow(2, zoom);
}
export function lonToWorldX(lon, zoom) {
    return ((lon + 180) / 360) * worldSize(zoom);
}
export function latToWorldY(lat, zoom) {
    const clamped = Math.max(-MAX_LATITUDE, Math.min(MAX_LATITUDE, lat));
    const phi = (clamped * Math.PI) / 180;
    const y = (1 - Math.log(Math.tan(phi) + 1 / Math.cos(phi)) / Math.PI) / 2;
    return y * worldSize(zoom);
}
export function worldXToLon(x, zoom) {
    return (x / worldSize(zoom)) * 360 - 180;
}
export function worldYToLat(y, zoom) {
    const n = Math.PI * (1 - (2 * y) / worldSize(zoom));
    return (Math.atan(Math.sinh(n)) * 180) / Math.PI;
}
/** Geographic box covered by the viewport; recomputed on every pan/zoom. */
export function viewportBBox(view) {
    const cx = lonToWorldX(view.center.lon, view.zoom);
    const cy = latToWorldY(view.center.lat, view.zoom);
    return {
        minLon: worldXToLon(cx - view.width / 2, view.zoom),
        maxLon: worldXToLon(cx + view.width / 2, view.zoom),
        minLat: worldYToLat(cy + view.height / 2, view.zoom),
        maxLat: worldYToLat(cy - view.height / 2, view.zoom),
    };
}
/** Tiles needed to paint the viewport, with their on-screen positions. */
export function tilesInView(view) {
    const z = Math.round(view.zoom);
    const count = Math.pow(2, z);
    const cx = lonToWorldX(view.center.lon, z);
    const cy = latToWorldY(view.center.lat, z);
    const left = cx - view.width / 2;
    const top = cy - view.height / 2;
    const tiles = [];
    const firstCol = Math.floor(left / TILE_SIZE);
    const lastCol = Math.floor((left + view.width) / TILE_SIZE);
    const firstRow = Math.max(0, Math.floor(top / TILE_SIZE));
    const lastRow = Math.min(count - 1, Math.floor((top + view.height) / TILE_SIZE));
    for (let col = firstCol; col <= lastCol; col++) {
        for (let row = firstRow; row <= lastRow; row++) {
            tiles.push({
                x: ((col % count) + count) % count, // wrap across the antimeridian
                y: row,
                z,
                screenX: col * TILE_SIZE - left,
                screenY: row * TILE_SIZE - top,
            });
        }
    }
    return tiles;
}
export function tileUrl(template, tile) {
    return template
        .replace("{z}", String(tile.z))
        .replace("{x}", String(tile.x))
        .replace("{y}", String(tile.y));
}
