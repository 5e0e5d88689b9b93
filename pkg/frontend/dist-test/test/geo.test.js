import assert from "node:assert/strict";
import { test } from "node:test";
import { TILE_SIZE, latToWorldY, lonToWorldX, tileUrl, tilesInView, viewportBBox, worldSize, worldXToLon, worldYToLat, } from "../src/geo.js";
const VIENNA = { lat: 48.2082, lon: 16.3738 };
test("world size doubles per zoom level", () => {
    assert.equal(worldSize(0), 256);
    assert.equal(worldSize(13), 256 * 8192);
});
test("prime meridian and equator sit at the world center", () => {
    assert.equal(lonToWorldX(0, 5), worldSize(5) / 2);
    assert.equal(latToWorldY(0, 5), worldSize(5) / 2);
});
test("mercator round-trips", () => {
    for (const point of [VIENNA, { lat: -33.9, lon: 151.2 }, { lat: 0.5, lon: -0.5 }]) {
        const x = lonToWorldX(point.lon, 13);
        const y = latToWorldY(point.lat, 13);
        assert.ok(Math.abs(worldXToLon(x, 13) - point.lon) < 1e-9);
        assert.ok(Math.abs(worldYToLat(y, 13) - point.lat) < 1e-9);
    }
});
test("viewport bbox contains its center and is well-formed", () => {
    const view = { center: VIENNA, zoom: 13, width: 900, height: 600 };
    const bbox = viewportBBox(view);
    assert.ok(bbox.minLon < VIENNA.lon && VIENNA.lon < bbox.maxLon);
    assert.ok(bbox.minLat < VIENNA.lat && VIENNA.lat < bbox.maxLat);
    assert.ok(bbox.minLon < bbox.maxLon && bbox.minLat < bbox.maxLat);
});
test("bbox recomputes under pan and zoom", () => {
    const base = viewportBBox({ center: VIENNA, zoom: 13, width: 900, height: 600 });
    const panned = viewportBBox({ center: { lat: VIENNA.lat, lon: VIENNA.lon + 0.01 }, zoom: 13, width: 900, height: 600 });
    assert.ok(panned.minLon > base.minLon);
    const zoomed = viewportBBox({ center: VIENNA, zoom: 14, width: 900, height: 600 });
    assert.ok(zoomed.maxLon - zoomed.minLon < base.maxLon - base.minLon);
});
test("tiles cover the viewport without gaps", () => {
    const view = { center: VIENNA, zoom: 13, width: 900, height: 600 };
    const tiles = tilesInView(view);
    assert.ok(tiles.length >= Math.ceil(900 / TILE_SIZE) * Math.ceil(600 / TILE_SIZE));
    const minScreenX = Math.min(...tiles.map((t) => t.screenX));
    const maxScreenX = Math.max(...tiles.map((t) => t.screenX + TILE_SIZE));
    const minScreenY = Math.min(...tiles.map((t) => t.screenY));
    const maxScreenY = Math.max(...tiles.map((t) => t.screenY + TILE_SIZE));
    assert.ok(minScreenX <= 0 && maxScreenX >= 900);
    assert.ok(minScreenY <= 0 && maxScreenY >= 600);
    for (const tile of tiles) {
        assert.ok(tile.x >= 0 && tile.x < 2 ** 13);
        assert.ok(tile.y >= 0 && tile.y < 2 ** 13);
    }
});
test("tile url template substitution", () => {
    const url = tileUrl("https://tiles.example/{z}/{x}/{y}.png", { x: 3, y: 5, z: 7, screenX: 0, screenY: 0 });
    assert.equal(url, "https://tiles.example/7/3/5.png");
});
