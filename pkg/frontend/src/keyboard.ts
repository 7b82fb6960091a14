/**
 * Virtual keyboard model: C3..E5 (MIDI 48..76), two octaves plus a
 * third, spanning the engine's default bass/upper split at middle C
 * (60). Pure geometry and event bookkeeping; DOM wiring lives in
 * main.ts so this stays testable.
 */

export const LOW_NOTE = 48;
export const HIGH_NOTE = 76;
export const SPLIT_NOTE = 60;
export const DEFAULT_PRESS_VELOCITY = 96;

const BLACK_PITCH_CLASSES = new Set([1, 3, 6, 8, 10]);

export function isBlackKey(note: number): boolean {
  return BLACK_PITCH_CLASSES.has(((note % 12) + 12) % 12);
}

export interface KeyGeometry {
  note: number;
  black: boolean;
  /** Left edge and width, as fractions of the keyboard width. */
  x: number;
  width: number;
}

/**
 * Key layout across [0, 1): white keys tile the width evenly, black
 * keys straddle the boundary after their lower white neighbor.
 */
export function keyLayout(low = LOW_NOTE, high = HIGH_NOTE): KeyGeometry[] {
  const whites: number[] = [];
  for (let note = low; note <= high; note++) {
    if (!isBlackKey(note)) whites.push(note);
  }
  const whiteWidth = 1 / whites.length;
  const blackWidth = whiteWidth * 0.6;

  const keys: KeyGeometry[] = [];
  for (let note = low; note <= high; note++) {
    if (isBlackKey(note)) {
      const lowerWhiteIndex = whites.findIndex((w) => w > note) - 1;
      keys.push({
        note,
        black: true,
        x: (lowerWhiteIndex + 1) * whiteWidth - blackWidth / 2,
        width: blackWidth,
      });
    } else {
      keys.push({
        note,
        black: false,
        x: whites.indexOf(note) * whiteWidth,
        width: whiteWidth,
      });
    }
  }
  return keys;
}

/** x position of the bass/upper split marker, in keyboard fractions. */
export function splitMarkerX(layout: KeyGeometry[], splitNote = SPLIT_NOTE): number {
  const key = layout.find((k) => k.note === splitNote);
  return key ? key.x : 0;
}

/**
 * Key under a click at (x, y) in keyboard fractions (y = 0 top). Black
 * keys occupy the top 60% and win over the whites beneath them.
 */
export function keyAtPosition(layout: KeyGeometry[], x: number, y: number): number | null {
  if (y <= 0.6) {
    for (const key of layout) {
      if (key.black && x >= key.x && x < key.x + key.width) return key.note;
    }
  }
  for (const key of layout) {
    if (!key.black && x >= key.x && x < key.x + key.width) return key.note;
  }
  return null;
}

/** KeyboardEvent.code -> MIDI note. Bottom row plays the bass octave. */
export const QWERTY_MAP: Record<string, number> = {
  KeyZ: 48, KeyS: 49, KeyX: 50, KeyD: 51, KeyC: 52, KeyV: 53,
  KeyG: 54, KeyB: 55, KeyH: 56, KeyN: 57, KeyJ: 58, KeyM: 59,
  KeyQ: 60, Digit2: 61, KeyW: 62, Digit3: 63, KeyE: 64, KeyR: 65,
  Digit5: 66, KeyT: 67, Digit6: 68, KeyY: 69, Digit7: 70, KeyU: 71,
  KeyI: 72, Digit9: 73, KeyO: 74, Digit0: 75, KeyP: 76,
};

export interface KeyboardEvents {
  sendNote(on: boolean, note: number, velocity: number): void;
  sendAdvance(): void;
}

/**
 * Press/release bookkeeping. Deduplicates key repeat, remembers held
 * velocities (the bubble layer reads them), and forwards everything
 * through the outbound message sender.
 */
export class KeyboardModel {
  readonly layout = keyLayout();
  readonly heldVelocities = new Map<number, number>();

  constructor(private out: KeyboardEvents) {}

  press(note: number, velocity = DEFAULT_PRESS_VELOCITY): boolean {
    if (note < 0 || note > 127 || this.heldVelocities.has(note)) return false;
    this.heldVelocities.set(note, velocity);
    this.out.sendNote(true, note, velocity);
    return true;
  }

  release(note: number): boolean {
    if (!this.heldVelocities.delete(note)) return false;
    this.out.sendNote(false, note, 0);
    return true;
  }

  releaseAll(): void {
    for (const note of [...this.heldVelocities.keys()]) this.release(note);
  }

  advancePart(): void {
    this.out.sendAdvance();
  }

  /** Route one KeyboardEvent.code; Enter advances the part. */
  handleKey(code: string, down: boolean): boolean {
    if (code === 'Enter') {
      if (down) this.advancePart();
      return down;
    }
    const note = QWERTY_MAP[code];
    if (note === undefined) return false;
    return down ? this.press(note) : this.release(note);
  }
}
