/** Shapes of the analysis service's JSON payloads, as consumed by the UI. */

export type PanPosition = "left" | "center" | "right";

export type ModeKey = "1" | "2" | "3";

export interface PairBreakdown {
  i: number;
  j: number;
  interval: number;
  raw: number;
  factor: number;
  contribution: number;
}

export interface ModeReport {
  schema: number;
  mode: string;
  ppn: number;
  total: number;
  assignment: string;
  positions: PanPosition[];
  pitches: number[];
  velocities: number[];
  pairs: PairBreakdown[];
}

export interface ReferenceRow {
  ppn: number;
  composition: string;
  tdiss: number;
  pleasantness: number | null;
  ddiss: number | null;
  synergy: number | null;
  difference: number | null;
}

export interface ChordPayload {
  schema: number;
  id: string;
  n: number;
  a: number;
  composition: number[];
  pitches: number[];
  base_note: number;
  label: string | null;
  tdiss: Partial<Record<ModeKey, number>>;
  assignments: Partial<Record<ModeKey, string>>;
  reports: Partial<Record<ModeKey, ModeReport>>;
  reference: ReferenceRow[];
}

export interface ChainEntry {
  position: number;
  id: string;
  composition: number[];
  tdiss: number;
}

export interface ChainPayload {
  schema: number;
  n: number;
  limit: number;
  chain: ChainEntry[];
}
