/**
 * HUD text: the compact training readout drawn beside the canvas.
 * Pure string building so tests can pin the contents.
 */

import type { ConnectionStatus } from './client.js';
import type { UiSnapshot } from './protocol.js';

const PART_LABELS: Record<number, string> = {
  1: 'part 1: cubic, note-driven',
  2: 'part 2: knot, chord-held',
  3: 'part 3: knot over video',
  4: 'part 4: cubic, bubbles',
};

export function formatLoss(loss: number): string {
  return loss.toExponential(3);
}

export function formatHud(
  snapshot: UiSnapshot | null,
  status: ConnectionStatus,
  badge: string | null,
): string[] {
  const lines: string[] = [];
  if (status !== 'open') {
    lines.push(status === 'connecting' ? 'connecting to engine...' : 'disconnected, retrying');
  }
  if (badge) {
    lines.push(`! ${badge}`);
  }
  if (!snapshot) {
    if (status === 'open') lines.push('waiting for first snapshot');
    return lines;
  }
  lines.push(PART_LABELS[snapshot.part] ?? `part ${snapshot.part}`);
  if (snapshot.kind === null) {
    lines.push('no target yet');
  } else {
    lines.push(`loss ${formatLoss(snapshot.loss)}  step ${snapshot.stepCount}`);
  }
  if (snapshot.detunedNotes.length) {
    const notes = snapshot.detunedNotes.map((entry) => entry.note).join(' ');
    lines.push(`sounding: ${notes}`);
  }
  return lines;
}
