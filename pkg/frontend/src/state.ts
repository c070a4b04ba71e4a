/** Explorer state and its pure transitions.
 *
 * Every number the UI displays is read straight off the last fetched
 * payload — the client never recomputes dissonance. Failed loads keep the
 * previous chord on screen with an inline error.
 */

import type { ChordPayload, ModeKey, PanPosition } from "./types.js";
import type { SynthVoice } from "./synth.js";

export interface ExplorerState {
  chordId: string;
  mode: ModeKey;
  swap: boolean;
  baseNote: number;
  chainPosition: number | null;
  chord: ChordPayload | null;
  error: string | null;
}

export function initialState(): ExplorerState {
  return {
    chordId: "3v1",
    mode: "3",
    swap: false,
    baseNote: 60,
    chainPosition: null,
    chord: null,
    error: null,
  };
}

export function chordLoaded(state: ExplorerState, payload: ChordPayload): ExplorerState {
  return { ...state, chord: payload, chordId: payload.id, error: null };
}

export function loadFailed(state: ExplorerState, message: string): ExplorerState {
  return { ...state, error: message };
}

/** The mode's total as the service reported it, or null when unavailable. */
export function displayedTdiss(state: ExplorerState, mode: ModeKey): number | null {
  return state.chord?.tdiss[mode] ?? null;
}

export function displayedAssignment(state: ExplorerState, mode: ModeKey): string | null {
  return state.chord?.assignments[mode] ?? null;
}

export function availableModes(payload: ChordPayload): ModeKey[] {
  return (["1", "2", "3"] as ModeKey[]).filter((mode) => payload.reports[mode]);
}

/** Voices with the mode's positions, ready for the synthesizer. */
export function voicesForMode(payload: ChordPayload, mode: ModeKey): SynthVoice[] {
  const report = payload.reports[mode];
  if (!report) {
    throw new Error(`mode ${mode} not available for ${payload.id}`);
  }
  return report.pitches.map((pitch, index) => ({
    pitch,
    velocity: report.velocities[index],
    position: report.positions[index],
  }));
}

const ID_PATTERN = /^(\d+)v(\d+)$/;

export function stepId(id: string, delta: number): string | null {
  const match = ID_PATTERN.exec(id.trim());
  if (!match) return null;
  const n = parseInt(match[1], 10);
  const a = parseInt(match[2], 10) + delta;
  if (n < 2 || a < 1) return null;
  return `${n}v${a}`;
}

export interface KeyView {
  pitch: number;
  offset: number;
  black: boolean;
  position: PanPosition | null;
}

/** One keyboard octave-and-a-bit around the chord, colored by pan position. */
export function keyboardView(payload: ChordPayload, mode: ModeKey): KeyView[] {
  const report = payload.reports[mode];
  const byPitch = new Map<number, PanPosition>();
  if (report) {
    report.pitches.forEach((pitch, index) => {
      byPitch.set(pitch, report.positions[index]);
    });
  }
  const low = payload.pitches[0];
  const high = payload.pitches[payload.pitches.length - 1];
  const start = low - (low % 12 === 0 ? 0 : low % 12);
  const end = Math.max(start + 12, high);
  const keys: KeyView[] = [];
  const blackNotes = new Set([1, 3, 6, 8, 10]);
  for (let pitch = start; pitch <= end; pitch++) {
    keys.push({
      pitch,
      offset: pitch - low,
      black: blackNotes.has(pitch % 12),
      position: byPitch.get(pitch) ?? null,
    });
  }
  return keys;
}
