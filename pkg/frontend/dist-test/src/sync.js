// Audio/visual synchronization: which compass bin is sounding right now.
// Everything derives from the audio clock; there are no timers to drift.
/** Position within the loop in seconds, for any (possibly long) audio time. */
export function loopPosition(audioPosition, timing) {
    const wrapped = audioPosition % timing.loop_seconds;
    return wrapped < 0 ? wrapped + timing.loop_seconds : wrapped;
}
/** Index of the sounding step: floor(position / step_seconds) mod bins. */
export function currentStep(audioPosition, timing, bins) {
    const step = Math.floor(loopPosition(audioPosition, timing) / timing.step_seconds);
    return ((step % bins) + bins) % bins;
}
/** Sweep hand angle in radians, clockwise from north, one turn per loop. */
export function sweepAngle(audioPosition, timing) {
    return (loopPosition(audioPosition, timing) / timing.loop_seconds) * 2 * Math.PI;
}
