/**
 * Additive synthesis of the detuned series.
 *
 * One voice per sounding note; one sine oscillator per frequency in
 * its series (fundamental plus overtones) at amplitude 1/(index + 1).
 * Frequency changes ramp over at most 10 ms, releases complete within
 * 250 ms. The synth talks to a structural subset of WebAudio so tests
 * can drive it with a fake; when no context is available it is
 * silently disabled and visuals continue.
 */

import type { DetunedNote } from './protocol.js';

export const FREQ_RAMP_S = 0.01;
export const RELEASE_S = 0.25;
export const ATTACK_S = 0.008;
/** Master level shared across voices; keeps a handful of notes unclipped. */
const MASTER_LEVEL = 0.1;

export interface ParamLike {
  value: number;
  setValueAtTime(value: number, time: number): unknown;
  linearRampToValueAtTime(value: number, time: number): unknown;
  cancelScheduledValues(time: number): unknown;
}

export interface OscillatorLike {
  type: string;
  frequency: ParamLike;
  connect(node: GainLike): unknown;
  start(time?: number): void;
  stop(time?: number): void;
}

export interface GainLike {
  gain: ParamLike;
  connect(node: unknown): unknown;
}

export interface AudioContextLike {
  currentTime: number;
  destination: unknown;
  createOscillator(): OscillatorLike;
  createGain(): GainLike;
}

interface Partial {
  osc: OscillatorLike;
  gain: GainLike;
}

interface Voice {
  partials: Partial[];
  envelope: GainLike;
}

export class DetunedSynth {
  private voices = new Map<number, Voice>();

  constructor(private ctx: AudioContextLike | null) {}

  get enabled(): boolean {
    return this.ctx !== null;
  }

  /** Reconcile the oscillator bank with one snapshot's detuned notes. */
  update(detunedNotes: DetunedNote[]): void {
    if (!this.ctx) return;
    const wanted = new Map(detunedNotes.map((entry) => [entry.note, entry]));

    for (const [note, voice] of this.voices) {
      if (!wanted.has(note)) {
        this.release(note, voice);
      }
    }
    for (const [note, entry] of wanted) {
      const series = [entry.fundamental, ...entry.overtones];
      const voice = this.voices.get(note);
      if (voice && voice.partials.length === series.length) {
        this.retune(voice, series);
      } else {
        if (voice) this.release(note, voice);
        this.voices.set(note, this.startVoice(series));
      }
    }
  }

  private startVoice(series: number[]): Voice {
    const ctx = this.ctx!;
    const now = ctx.currentTime;
    const envelope = ctx.createGain();
    envelope.gain.setValueAtTime(0, now);
    envelope.gain.linearRampToValueAtTime(1, now + ATTACK_S);
    envelope.connect(ctx.destination);

    const partials = series.map((freq, index) => {
      const osc = ctx.createOscillator();
      osc.type = 'sine';
      osc.frequency.setValueAtTime(freq, now);
      const gain = ctx.createGain();
      gain.gain.setValueAtTime(MASTER_LEVEL / (index + 1), now);
      osc.connect(gain);
      gain.connect(envelope);
      osc.start(now);
      return { osc, gain };
    });
    return { partials, envelope };
  }

  private retune(voice: Voice, series: number[]): void {
    const now = this.ctx!.currentTime;
    voice.partials.forEach((partial, index) => {
      const freq = partial.osc.frequency;
      if (freq.value === series[index]) return;
      freq.cancelScheduledValues(now);
      freq.setValueAtTime(freq.value, now);
      freq.linearRampToValueAtTime(series[index], now + FREQ_RAMP_S);
      freq.value = series[index];
    });
  }

  private release(note: number, voice: Voice): void {
    const now = this.ctx!.currentTime;
    voice.envelope.gain.cancelScheduledValues(now);
    voice.envelope.gain.setValueAtTime(voice.envelope.gain.value, now);
    voice.envelope.gain.linearRampToValueAtTime(0, now + RELEASE_S);
    for (const partial of voice.partials) {
      partial.osc.stop(now + RELEASE_S);
    }
    this.voices.delete(note);
  }

  /** Active voice count, for the HUD. */
  get voiceCount(): number {
    return this.voices.size;
  }
}
