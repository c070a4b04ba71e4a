/** Per-ear gain matrix implementing the model's channel semantics.
 *
 * A left voice reaches only the left ear, a right voice only the right ear,
 * and a center voice reaches both ears at exactly half strength. Gains are
 * always one of 0, 0.5 or 1 before master volume; the swap toggle mirrors
 * the two ears and nothing else.
 */

import type { PanPosition } from "./types.js";

export type EarGains = readonly [left: number, right: number];

export function earGains(position: PanPosition, swap: boolean): EarGains {
  let gains: EarGains;
  switch (position) {
    case "left":
      gains = [1, 0];
      break;
    case "right":
      gains = [0, 1];
      break;
    case "center":
      gains = [0.5, 0.5];
      break;
  }
  return swap ? [gains[1], gains[0]] : gains;
}

export function gainMatrix(positions: PanPosition[], swap: boolean): EarGains[] {
  return positions.map((position) => earGains(position, swap));
}
