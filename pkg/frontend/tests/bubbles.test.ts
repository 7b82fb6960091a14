import { describe, expect, it } from 'vitest';

import { BUBBLE_LIFETIME_MS, BubbleField, bubbleRadius, bubbleX } from '../src/bubbles.js';
import { parseSnapshot, UiSnapshot } from '../src/protocol.js';
import { wireSnapshot } from './helpers.js';

function snapshotWithNotes(part: number, notes: number[]): UiSnapshot {
  return parseSnapshot(
    wireSnapshot({
      part,
      detuned_notes: notes.map((note) => ({
        note,
        fundamental: 440,
        overtones: [880, 1320, 1760],
        loss_applied: 0.1,
      })),
    }),
  );
}

describe('BubbleField', () => {
  it('spawns one bubble when a note joins the detuned set in part 4', () => {
    const field = new BubbleField();
    field.ingest(snapshotWithNotes(4, []), 0);
    field.ingest(snapshotWithNotes(4, [72]), 16);
    const live = field.live(20);
    expect(live).toHaveLength(1);
    expect(live[0].note).toBe(72);
    expect(live[0].bornMs).toBe(16);
  });

  it('does not respawn for notes that stay held', () => {
    const field = new BubbleField();
    field.ingest(snapshotWithNotes(4, []), 0);
    field.ingest(snapshotWithNotes(4, [72]), 16);
    field.ingest(snapshotWithNotes(4, [72]), 32);
    field.ingest(snapshotWithNotes(4, [72]), 48);
    expect(field.live(50)).toHaveLength(1);
  });

  it('spawns again after release and repress', () => {
    const field = new BubbleField();
    field.ingest(snapshotWithNotes(4, []), 0);
    field.ingest(snapshotWithNotes(4, [60]), 10);
    field.ingest(snapshotWithNotes(4, []), 20);
    field.ingest(snapshotWithNotes(4, [60]), 30);
    expect(field.live(40)).toHaveLength(2);
  });

  it('ignores notes outside part 4 and carryover into part 4', () => {
    const field = new BubbleField();
    field.ingest(snapshotWithNotes(1, [70]), 0);
    field.ingest(snapshotWithNotes(2, [70, 71]), 10);
    expect(field.live(20)).toHaveLength(0);
    // Notes already sounding when part 4 begins are not fresh spawns.
    field.ingest(snapshotWithNotes(4, [70, 71]), 30);
    expect(field.live(40)).toHaveLength(0);
    // A genuinely new note afterwards is.
    field.ingest(snapshotWithNotes(4, [70, 71, 75]), 50);
    expect(field.live(60)).toHaveLength(1);
  });

  it('expires bubbles after the lifetime, checked one frame later', () => {
    const field = new BubbleField();
    field.ingest(snapshotWithNotes(4, []), 0);
    field.ingest(snapshotWithNotes(4, [64]), 100);
    expect(field.live(100 + BUBBLE_LIFETIME_MS - 1)).toHaveLength(1);
    expect(field.live(100 + BUBBLE_LIFETIME_MS)).toHaveLength(0);
  });

  it('takes radius from the velocity hint when present', () => {
    const field = new BubbleField();
    field.ingest(snapshotWithNotes(4, []), 0);
    field.ingest(snapshotWithNotes(4, [72]), 10, new Map([[72, 127]]));
    field.ingest(snapshotWithNotes(4, [72, 74]), 20); // no hint for 74
    const [loud, soft] = field.live(30);
    expect(loud.radius).toBe(bubbleRadius(127));
    expect(soft.radius).toBe(bubbleRadius(64));
    expect(loud.radius).toBeGreaterThan(soft.radius);
  });
});

describe('spawn geometry', () => {
  it('maps low notes left and high notes right', () => {
    expect(bubbleX(0)).toBe(0);
    expect(bubbleX(127)).toBe(1);
    expect(bubbleX(30)).toBeLessThan(bubbleX(90));
  });

  it('radius grows with velocity and stays in frame scale', () => {
    expect(bubbleRadius(0)).toBeCloseTo(0.06, 12);
    expect(bubbleRadius(127)).toBeCloseTo(0.18, 12);
    expect(bubbleRadius(64)).toBeGreaterThan(bubbleRadius(32));
  });
});
