/** Verbatim /api/chord responses from the running analysis service, used to
 * stub fetch in tests so displayed values are checked against real payloads. */

import type { ChordPayload } from "../src/types.js";

export const CHORD_3V8: ChordPayload = {
  schema: 1,
  id: "3v8",
  n: 3,
  a: 8,
  composition: [0, 2, 5],
  pitches: [60, 62, 65],
  base_note: 60,
  label: null,
  tdiss: { "1": 30, "2": 4, "3": 7 },
  assignments: { "1": "0,2,5", "2": "0-,5-,2+", "3": "0-,5,2+" },
  reports: {
    "1": {
      schema: 1, mode: "1", ppn: 1, total: 30, assignment: "0,2,5",
      positions: ["center", "center", "center"],
      pitches: [60, 62, 65], velocities: [100, 100, 100],
      pairs: [
        { i: 0, j: 1, interval: 2, raw: 16, factor: 1, contribution: 16 },
        { i: 0, j: 2, interval: 5, raw: 4, factor: 1, contribution: 4 },
        { i: 1, j: 2, interval: 3, raw: 10, factor: 1, contribution: 10 },
      ],
    },
    "2": {
      schema: 1, mode: "2", ppn: 2, total: 4, assignment: "0-,5-,2+",
      positions: ["left", "right", "left"],
      pitches: [60, 62, 65], velocities: [100, 100, 100],
      pairs: [
        { i: 0, j: 1, interval: 2, raw: 16, factor: 0, contribution: 0 },
        { i: 0, j: 2, interval: 5, raw: 4, factor: 1, contribution: 4 },
        { i: 1, j: 2, interval: 3, raw: 10, factor: 0, contribution: 0 },
      ],
    },
    "3": {
      schema: 1, mode: "3", ppn: 3, total: 7, assignment: "0-,5,2+",
      positions: ["left", "right", "center"],
      pitches: [60, 62, 65], velocities: [100, 100, 100],
      pairs: [
        { i: 0, j: 1, interval: 2, raw: 16, factor: 0, contribution: 0 },
        { i: 0, j: 2, interval: 5, raw: 4, factor: 0.5, contribution: 2 },
        { i: 1, j: 2, interval: 3, raw: 10, factor: 0.5, contribution: 5 },
      ],
    },
  },
  reference: [
    { ppn: 1, composition: "0,2,5", tdiss: 30, pleasantness: 2, ddiss: 0, synergy: 0, difference: 0 },
    { ppn: 2, composition: "2-,0+,5+", tdiss: 4, pleasantness: null, ddiss: -5, synergy: -3, difference: null },
    { ppn: 3, composition: "0-,5,2+", tdiss: 7, pleasantness: 4, ddiss: -2, synergy: -1, difference: 2 },
  ],
};

export const CHORD_3V19: ChordPayload = {
  schema: 1,
  id: "3v19",
  n: 3,
  a: 19,
  composition: [0, 4, 7],
  pitches: [60, 64, 67],
  base_note: 60,
  label: "мажор",
  tdiss: { "1": 18, "2": 2, "3": 4 },
  assignments: { "1": "0,4,7", "2": "0-,7-,4+", "3": "4-,0,7+" },
  reports: {
    "1": {
      schema: 1, mode: "1", ppn: 1, total: 18, assignment: "0,4,7",
      positions: ["center", "center", "center"],
      pitches: [60, 64, 67], velocities: [100, 100, 100],
      pairs: [
        { i: 0, j: 1, interval: 4, raw: 6, factor: 1, contribution: 6 },
        { i: 0, j: 2, interval: 7, raw: 2, factor: 1, contribution: 2 },
        { i: 1, j: 2, interval: 3, raw: 10, factor: 1, contribution: 10 },
      ],
    },
    "2": {
      schema: 1, mode: "2", ppn: 2, total: 2, assignment: "0-,7-,4+",
      positions: ["left", "right", "left"],
      pitches: [60, 64, 67], velocities: [100, 100, 100],
      pairs: [
        { i: 0, j: 1, interval: 4, raw: 6, factor: 0, contribution: 0 },
        { i: 0, j: 2, interval: 7, raw: 2, factor: 1, contribution: 2 },
        { i: 1, j: 2, interval: 3, raw: 10, factor: 0, contribution: 0 },
      ],
    },
    "3": {
      schema: 1, mode: "3", ppn: 3, total: 4, assignment: "4-,0,7+",
      positions: ["center", "left", "right"],
      pitches: [60, 64, 67], velocities: [100, 100, 100],
      pairs: [
        { i: 0, j: 1, interval: 4, raw: 6, factor: 0.5, contribution: 3 },
        { i: 0, j: 2, interval: 7, raw: 2, factor: 0.5, contribution: 1 },
        { i: 1, j: 2, interval: 3, raw: 10, factor: 0, contribution: 0 },
      ],
    },
  },
  reference: [
    { ppn: 1, composition: "0,4,7", tdiss: 18, pleasantness: 5, ddiss: 0, synergy: 0, difference: 0 },
    { ppn: 2, composition: "0-,7-,4+", tdiss: 2, pleasantness: null, ddiss: -2, synergy: -2, difference: null },
    { ppn: 3, composition: "4-,0,7+", tdiss: 4, pleasantness: 5, ddiss: -1, synergy: -1, difference: 3 },
  ],
};
