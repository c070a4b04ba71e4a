/** Browser audio output: wraps rendered stereo buffers in an AudioContext.
 * Only one rendering plays at a time; the A/B comparison queues the diotic
 * and three-point renderings back to back at equal length and loudness.
 */

import type { StereoBuffer } from "./synth.js";

export class Player {
  private context: AudioContext | null = null;
  private active: AudioBufferSourceNode[] = [];

  private ensureContext(): AudioContext {
    if (!this.context) {
      this.context = new AudioContext();
    }
    if (this.context.state === "suspended") {
      void this.context.resume();
    }
    return this.context;
  }

  get available(): boolean {
    return typeof AudioContext !== "undefined";
  }

  stop(): void {
    for (const source of this.active) {
      try {
        source.stop();
      } catch {
        // already finished
      }
    }
    this.active = [];
  }

  private toAudioBuffer(context: AudioContext, stereo: StereoBuffer): AudioBuffer {
    const buffer = context.createBuffer(2, stereo.left.length, stereo.sampleRate);
    buffer.copyToChannel(stereo.left, 0);
    buffer.copyToChannel(stereo.right, 1);
    return buffer;
  }

  /** Play renderings one after another with a short gap. */
  playSequence(buffers: StereoBuffer[], gapSeconds = 0.3): void {
    const context = this.ensureContext();
    this.stop();
    let at = context.currentTime + 0.05;
    for (const stereo of buffers) {
      const source = context.createBufferSource();
      source.buffer = this.toAudioBuffer(context, stereo);
      source.connect(context.destination);
      source.start(at);
      at += stereo.left.length / stereo.sampleRate + gapSeconds;
      this.active.push(source);
    }
  }

  play(buffer: StereoBuffer): void {
    this.playSequence([buffer], 0);
  }
}
