import assert from "node:assert/strict";
import { test } from "node:test";
import { wedgeRadius, wedgeSpan } from "../src/compass.js";
const GEOMETRY = { innerRadius: 20, outerRadius: 120 };
test("wedge radius is proportional to the normalized value", () => {
    assert.equal(wedgeRadius(0, GEOMETRY), 20);
    assert.equal(wedgeRadius(1, GEOMETRY), 120);
    assert.equal(wedgeRadius(0.5, GEOMETRY), 70);
});
test("bin zero is centered on north", () => {
    const { from, to } = wedgeSpan(0, 16);
    const width = (2 * Math.PI) / 16;
    assert.ok(Math.abs(from + width / 2) < 1e-12);
    assert.ok(Math.abs(to - width / 2) < 1e-12);
});
test("wedges tile the full circle", () => {
    const bins = 16;
    let total = 0;
    for (let i = 0; i < bins; i++) {
        const { from, to } = wedgeSpan(i, bins);
        total += to - from;
        if (i > 0) {
            const previous = wedgeSpan(i - 1, bins);
            assert.ok(Math.abs(previous.to - from) < 1e-12, `wedge ${i} starts where ${i - 1} ends`);
        }
    }
    assert.ok(Math.abs(total - 2 * Math.PI) < 1e-9);
});
test("mirror wedges sit half a turn apart", () => {
    const bins = 16;
    for (let i = 0; i < bins / 2; i++) {
        const a = wedgeSpan(i, bins);
        const b = wedgeSpan(i + bins / 2, bins);
        assert.ok(Math.abs(b.from - a.from - Math.PI) < 1e-12);
    }
});
