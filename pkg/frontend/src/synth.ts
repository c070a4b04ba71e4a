/** Offline stereo rendering of a panned chord.
 *
 * Each voice is an additive organ-ish tone (a few octave-spaced partials
 * with a touch of the twelfth) with a linear attack/release envelope. The
 * voice is synthesized once as a mono buffer and mixed into the two ears by
 * plain multiplication with its gain pair, so a swapped render is the exact
 * sample-for-sample mirror of the unswapped one.
 */

import { earGains } from "./gains.js";
import type { PanPosition } from "./types.js";

export interface SynthVoice {
  pitch: number;
  velocity: number;
  position: PanPosition;
}

export interface RenderOptions {
  sampleRate?: number;
  duration?: number;
  swap?: boolean;
  masterGain?: number;
}

export interface StereoBuffer {
  left: Float32Array<ArrayBuffer>;
  right: Float32Array<ArrayBuffer>;
  sampleRate: number;
}

const PARTIALS: ReadonlyArray<readonly [multiple: number, amplitude: number]> = [
  [1, 1.0],
  [2, 0.45],
  [3, 0.18],
  [4, 0.12],
];

const ATTACK_SECONDS = 0.015;
const RELEASE_SECONDS = 0.12;

export function pitchToFrequency(pitch: number): number {
  return 440 * Math.pow(2, (pitch - 69) / 12);
}

function voiceSamples(pitch: number, velocity: number, sampleRate: number,
                      length: number): Float32Array {
  const samples = new Float32Array(length);
  const frequency = pitchToFrequency(pitch);
  const amplitude = velocity / 127;
  const attack = Math.max(1, Math.round(ATTACK_SECONDS * sampleRate));
  const release = Math.max(1, Math.round(RELEASE_SECONDS * sampleRate));
  for (const [multiple, partialAmp] of PARTIALS) {
    const step = (2 * Math.PI * frequency * multiple) / sampleRate;
    for (let i = 0; i < length; i++) {
      samples[i] += partialAmp * Math.sin(step * i);
    }
  }
  for (let i = 0; i < length; i++) {
    let envelope = 1;
    if (i < attack) envelope = i / attack;
    const tail = length - 1 - i;
    if (tail < release) envelope = Math.min(envelope, tail / release);
    samples[i] *= amplitude * envelope;
  }
  return samples;
}

export function renderChord(voices: SynthVoice[], options: RenderOptions = {}): StereoBuffer {
  const sampleRate = options.sampleRate ?? 44100;
  const duration = options.duration ?? 1.5;
  const swap = options.swap ?? false;
  const masterGain = options.masterGain ?? 0.25;
  const length = Math.max(1, Math.round(sampleRate * duration));
  const left = new Float32Array(length);
  const right = new Float32Array(length);
  for (const voice of voices) {
    const mono = voiceSamples(voice.pitch, voice.velocity, sampleRate, length);
    const [gainLeft, gainRight] = earGains(voice.position, swap);
    for (let i = 0; i < length; i++) {
      left[i] += mono[i] * gainLeft;
      right[i] += mono[i] * gainRight;
    }
  }
  for (let i = 0; i < length; i++) {
    left[i] *= masterGain;
    right[i] *= masterGain;
  }
  return { left, right, sampleRate };
}
