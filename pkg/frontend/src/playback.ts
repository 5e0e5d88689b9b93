// Gapless loop playback through Web Audio. The audio clock is the single
// source of truth: the UI asks position() every frame and never counts time
// itself.

import { LoopTiming, currentStep, sweepAngle } from "./sync.js";

export class LoopPlayer {
  private ctx: AudioContext | null = null;
  private source: AudioBufferSourceNode | null = null;
  private startedAt = 0;
  private timing: LoopTiming | null = null;
  private bins = 16;

  get playing(): boolean {
    return this.source !== null;
  }

  /** Fetch, decode, and start looping; the triggering click is the user gesture. */
  async play(loopUrl: string, timing: LoopTiming, bins: number): Promise<void> {
    if (this.ctx === null) {
      this.ctx = new AudioContext();
    }
    if (this.ctx.state === "suspended") {
      await this.ctx.resume();
    }
    const response = await fetch(loopUrl);
    if (!response.ok) throw new Error(`loop fetch failed: HTTP ${response.status}`);
    const buffer = await this.ctx.decodeAudioData(await response.arrayBuffer());

    this.stop();
    const source = this.ctx.createBufferSource();
    source.buffer = buffer;
    source.loop = true;
    source.connect(this.ctx.destination);
    source.start();
    this.source = source;
    this.startedAt = this.ctx.currentTime;
    this.timing = timing;
    this.bins = bins;
  }

  stop(): void {
    if (this.source !== null) {
      this.source.stop();
      this.source.disconnect();
      this.source = null;
    }
  }

  /** Seconds since loop start, straight off the audio clock. */
  position(): number | null {
    if (this.ctx === null || this.source === null || this.timing === null) return null;
    return this.ctx.currentTime - this.startedAt;
  }

  step(): number | null {
    const pos = this.position();
    return pos === null || this.timing === null ? null : currentStep(pos, this.timing, this.bins);
  }

  angle(): number | null {
    const pos = this.position();
    return pos === null || this.timing === null ? null : sweepAngle(pos, this.timing);
  }
}
