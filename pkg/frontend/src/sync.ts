// Audio/visual synchronization: which compass bin is sounding right now.
// Everything derives from the audio clock; there are no timers to drift.

export interface LoopTiming {
  step_seconds: number;
  loop_seconds: number;
}

/** Position within the loop in seconds, for any (possibly long) audio time. */
export function loopPosition(audioPosition: number, timing: LoopTiming): number {
  const wrapped = audioPosition % timing.loop_seconds;
  return wrapped < 0 ? wrapped + timing.loop_seconds : wrapped;
}

/** Index of the sounding step: floor(position / step_seconds) mod bins. */
export function currentStep(audioPosition: number, timing: LoopTiming, bins: number): number {
  const step = Math.floor(loopPosition(audioPosition, timing) / timing.step_seconds);
  return ((step % bins) + bins) % bins;
}

/** Sweep hand angle in radians, clockwise from north, one turn per loop. */
export function sweepAngle(audioPosition: number, timing: LoopTiming): number {
  return (loopPosition(audioPosition, timing) / timing.loop_seconds) * 2 * Math.PI;
}
