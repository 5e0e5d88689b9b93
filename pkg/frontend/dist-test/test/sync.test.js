import assert from "node:assert/strict";
import { test } from "node:test";
import { currentStep, loopPosition, sweepAngle } from "../src/sync.js";
// Grid-fixture timing at defaults: 16 sixteenth-note steps at 120 bpm.
const TIMING = { step_seconds: 0.125, loop_seconds: 2.0 };
const BINS = 16;
test("highlighted step equals floor(position / step_seconds) mod bins", () => {
    // 20 sample frames spread over 3 full loop repetitions, as the sync
    // criterion prescribes; the derivation must agree at every sample.
    for (let frame = 0; frame < 20; frame++) {
        const position = (frame / 20) * 3 * TIMING.loop_seconds + 0.013 * frame;
        const expected = Math.floor(position / TIMING.step_seconds) % BINS;
        assert.equal(currentStep(position, TIMING, BINS), expected, `frame ${frame}`);
    }
});
test("step stays in range across whole loops", () => {
    for (const position of [0, 0.1249, 0.125, 1.999, 2.0, 2.001, 6.0, 123.456]) {
        const step = currentStep(position, TIMING, BINS);
        assert.ok(step >= 0 && step < BINS, `position ${position} -> ${step}`);
    }
});
test("loop boundary wraps to step zero", () => {
    assert.equal(currentStep(0, TIMING, BINS), 0);
    assert.equal(currentStep(TIMING.loop_seconds, TIMING, BINS), 0);
    assert.equal(currentStep(3 * TIMING.loop_seconds, TIMING, BINS), 0);
    assert.equal(currentStep(TIMING.loop_seconds - 1e-9, TIMING, BINS), BINS - 1);
});
test("loop position wraps and never goes negative", () => {
    assert.equal(loopPosition(2.5, TIMING), 0.5);
    assert.equal(loopPosition(-0.25, TIMING), 1.75);
});
test("sweep hand makes one clockwise turn per loop", () => {
    assert.equal(sweepAngle(0, TIMING), 0);
    assert.ok(Math.abs(sweepAngle(0.5, TIMING) - Math.PI / 2) < 1e-12);
    assert.ok(Math.abs(sweepAngle(1.0, TIMING) - Math.PI) < 1e-12);
    assert.equal(sweepAngle(2.0, TIMING), 0); // wrapped
});
test("sweep angle and step agree about which bin is under the hand", () => {
    // positions deliberately off step boundaries: reconstructing the bin from
    // the angle round-trips through 2*pi and is one ulp fuzzy exactly on them
    for (let i = 0; i < 200; i++) {
        const position = i * 0.0317 + 0.0011;
        const angle = sweepAngle(position, TIMING);
        const binUnderHand = Math.floor((angle / (2 * Math.PI)) * BINS) % BINS;
        assert.equal(binUnderHand, currentStep(position, TIMING, BINS), `position ${position}`);
    }
});
