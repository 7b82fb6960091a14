/**
 * Bubble scene state.
 *
 * The bridge publishes state snapshots, not discrete actions, so spawns
 * are inferred: in part 4 every at-or-above-split note-on detunes that
 * note, so a note newly present in detuned_notes while part == 4 marks
 * exactly one spawn. Velocity is not in the snapshot; presses made on
 * the local keyboard supply it via a hint map, anything else gets the
 * default 64.
 */

import type { UiSnapshot } from './protocol.js';

export const BUBBLE_LIFETIME_MS = 3000;
export const DEFAULT_VELOCITY = 64;

export interface Bubble {
  note: number;
  /** Horizontal position, 0 (low notes, left) .. 1 (high notes, right). */
  x: number;
  /** Vertical position, aesthetic scatter in 0.2 .. 0.8. */
  y: number;
  /** Radius as a fraction of frame height. */
  radius: number;
  bornMs: number;
}

/** Spawn position: MIDI pitch maps linearly across the frame. */
export function bubbleX(note: number): number {
  return note / 127;
}

/** Radius fraction grows linearly with velocity: 0.06 .. 0.18. */
export function bubbleRadius(velocity: number): number {
  return 0.06 + 0.12 * (velocity / 127);
}

export class BubbleField {
  private bubbles: Bubble[] = [];
  private seenNotes = new Set<number>();
  private lastPart = 0;

  /**
   * Fold one snapshot into the field. `velocityHint` maps notes the
   * local keyboard is holding to their press velocities.
   */
  ingest(snapshot: UiSnapshot, nowMs: number, velocityHint?: Map<number, number>): void {
    const current = new Set(snapshot.detunedNotes.map((entry) => entry.note));
    if (snapshot.part === 4 && this.lastPart === 4) {
      for (const note of current) {
        if (this.seenNotes.has(note)) continue;
        const velocity = velocityHint?.get(note) ?? DEFAULT_VELOCITY;
        this.bubbles.push({
          note,
          x: bubbleX(note),
          // Deterministic scatter so replays of one performance look alike.
          y: 0.2 + 0.6 * ((note * 37 + 11) % 64) / 63,
          radius: bubbleRadius(velocity),
          bornMs: nowMs,
        });
      }
    }
    this.seenNotes = current;
    this.lastPart = snapshot.part;
  }

  /** Bubbles still alive at `nowMs`; expired ones are dropped here. */
  live(nowMs: number): Bubble[] {
    this.bubbles = this.bubbles.filter((b) => nowMs - b.bornMs < BUBBLE_LIFETIME_MS);
    return this.bubbles;
  }
}
