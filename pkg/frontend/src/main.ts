/**
 * Browser entry point. Wires the bridge client, render loop, synth,
 * and keyboard to the DOM. Everything algorithmic lives in the
 * sibling modules; this file is deliberately just plumbing.
 */

import { DetunedSynth, AudioContextLike } from './audio.js';
import { BubbleField } from './bubbles.js';
import { BridgeClient } from './client.js';
import { cubicValue, knotOutline, splitKnotTarget } from './curves.js';
import { composeFrame, displacementGain, DistortionInput, PixelBubble } from './distortion.js';
import { createGlPipeline, GlPipeline, MAX_BUBBLES } from './gl.js';
import { formatHud } from './hud.js';
import { KeyboardModel, keyAtPosition, splitMarkerX, SPLIT_NOTE } from './keyboard.js';

const VIDEO_W = 320;
const VIDEO_H = 240;

function element<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
}

const videoCanvas = element<HTMLCanvasElement>('video-layer');
const overlay = element<HTMLCanvasElement>('overlay');
const keysCanvas = element<HTMLCanvasElement>('keys');
const hudElement = element<HTMLElement>('hud');
const advanceButton = element<HTMLButtonElement>('advance');

videoCanvas.width = VIDEO_W;
videoCanvas.height = VIDEO_H;

const wsUrl =
  new URLSearchParams(location.search).get('ws') ?? `ws://${location.hostname || '127.0.0.1'}:8765`;
const client = new BridgeClient(wsUrl, { wsFactory: (url) => new WebSocket(url) });

const keyboard = new KeyboardModel({
  sendNote: (on, note, velocity) => client.sendNote(on, note, velocity),
  sendAdvance: () => client.sendAdvance(),
});

const bubbles = new BubbleField();

// Audio starts on the first gesture; browsers refuse earlier contexts.
let synth = new DetunedSynth(null);
function ensureAudio(): void {
  if (synth.enabled) return;
  const Ctor = window.AudioContext;
  if (!Ctor) return;
  try {
    synth = new DetunedSynth(new Ctor() as unknown as AudioContextLike);
  } catch {
    // Stay silent; visuals continue.
  }
}

// Webcam feed for parts 3 and 4; a denied camera leaves it black.
const video = document.createElement('video');
video.muted = true;
video.playsInline = true;
let videoReady = false;
navigator.mediaDevices
  ?.getUserMedia({ video: { width: VIDEO_W, height: VIDEO_H } })
  .then((stream) => {
    video.srcObject = stream;
    return video.play().then(() => {
      videoReady = true;
    });
  })
  .catch(() => {});

const glPipeline: GlPipeline | null = createGlPipeline(videoCanvas);
const cpuContext = glPipeline ? null : videoCanvas.getContext('2d');
const scratch = document.createElement('canvas');
scratch.width = VIDEO_W;
scratch.height = VIDEO_H;
const scratchContext = scratch.getContext('2d', { willReadFrequently: true })!;

function pixelBubbles(nowMs: number): PixelBubble[] {
  return bubbles
    .live(nowMs)
    .slice(0, MAX_BUBBLES)
    .map((b) => ({
      centerX: b.x * VIDEO_W,
      centerY: b.y * VIDEO_H,
      radiusPx: b.radius * VIDEO_H,
    }));
}

function drawVideoLayer(nowMs: number): void {
  const snap = client.latest;
  const onVideo = snap !== null && snap.part >= 3;
  if (!onVideo || !videoReady) {
    if (glPipeline) {
      scratchContext.fillStyle = '#000';
      scratchContext.fillRect(0, 0, VIDEO_W, VIDEO_H);
      glPipeline.render(scratch, emptyInput());
    } else if (cpuContext) {
      cpuContext.fillStyle = '#000';
      cpuContext.fillRect(0, 0, VIDEO_W, VIDEO_H);
    }
    return;
  }
  const input: DistortionInput = {
    rgbOffsets: snap.distortion.rgbOffsets,
    bubbles: snap.part === 4 ? pixelBubbles(nowMs) : [],
    displacementPhase: snap.distortion.displacementPhase,
    gain: displacementGain(snap.distortion.scale, snap.loss),
    wobble: (2 * Math.PI * nowMs) / 2400,
  };
  if (glPipeline) {
    glPipeline.render(video, input);
  } else if (cpuContext) {
    scratchContext.drawImage(video, 0, 0, VIDEO_W, VIDEO_H);
    const frame = scratchContext.getImageData(0, 0, VIDEO_W, VIDEO_H);
    const out = composeFrame(
      { data: frame.data, width: VIDEO_W, height: VIDEO_H },
      input,
    );
    cpuContext.putImageData(new ImageData(new Uint8ClampedArray(out.data), VIDEO_W, VIDEO_H), 0, 0);
  }
}

function emptyInput(): DistortionInput {
  return {
    rgbOffsets: [
      [0, 0],
      [0, 0],
      [0, 0],
    ],
    bubbles: [],
    displacementPhase: [1, 1],
    gain: 0,
    wobble: 0,
  };
}

function drawPolyline(
  ctx: CanvasRenderingContext2D,
  points: [number, number][],
  toScreen: (p: [number, number]) => [number, number],
  color: string,
): void {
  ctx.strokeStyle = color;
  ctx.lineWidth = 2;
  ctx.beginPath();
  points.forEach((p, i) => {
    const [sx, sy] = toScreen(p);
    if (i === 0) ctx.moveTo(sx, sy);
    else ctx.lineTo(sx, sy);
  });
  ctx.stroke();
}

function drawCurves(nowMs: number): void {
  const ctx = overlay.getContext('2d')!;
  const { width, height } = overlay;
  ctx.clearRect(0, 0, width, height);
  const snap = client.latest;
  if (!snap || snap.kind === null) return;

  if (snap.kind === 'cubic') {
    // World box x in [-1, 1], y in [-3, 3].
    const toScreen = ([x, y]: [number, number]): [number, number] => [
      ((x + 1) / 2) * width,
      height - ((y + 3) / 6) * height,
    ];
    const sample = (theta: number[]): [number, number][] => {
      const points: [number, number][] = [];
      for (let i = 0; i < 128; i++) {
        const x = -1 + (2 * i) / 127;
        points.push([x, cubicValue(theta, x)]);
      }
      return points;
    };
    drawPolyline(ctx, sample(snap.target), toScreen, '#ffffff');
    drawPolyline(ctx, sample(snap.theta), toScreen, '#ff3b30');
  } else {
    // Projected knot coordinates reach ~2.12; keep them on-canvas.
    const toScreen = ([x, y]: [number, number]): [number, number] => [
      ((x + 2.2) / 4.4) * width,
      height - ((y + 2.2) / 4.4) * height,
    ];
    const { multipliers, phases } = splitKnotTarget(snap.target);
    drawPolyline(ctx, knotOutline(multipliers, phases, 512, nowMs), toScreen, '#ffffff');
    drawPolyline(ctx, knotOutline(multipliers, snap.theta, 512, nowMs), toScreen, '#ff3b30');
  }
}

function drawKeyboard(): void {
  const ctx = keysCanvas.getContext('2d')!;
  const { width, height } = keysCanvas;
  ctx.clearRect(0, 0, width, height);
  const disabled = !client.connected;
  for (const key of keyboard.layout.filter((k) => !k.black)) {
    const held = keyboard.heldVelocities.has(key.note);
    ctx.fillStyle = held ? '#ffd60a' : disabled ? '#777' : '#f4f4f4';
    ctx.fillRect(key.x * width + 1, 0, key.width * width - 2, height);
  }
  for (const key of keyboard.layout.filter((k) => k.black)) {
    const held = keyboard.heldVelocities.has(key.note);
    ctx.fillStyle = held ? '#ffd60a' : disabled ? '#333' : '#111';
    ctx.fillRect(key.x * width, 0, key.width * width, height * 0.6);
  }
  const splitX = splitMarkerX(keyboard.layout, SPLIT_NOTE) * width;
  ctx.strokeStyle = '#ff3b30';
  ctx.lineWidth = 3;
  ctx.beginPath();
  ctx.moveTo(splitX, 0);
  ctx.lineTo(splitX, height);
  ctx.stroke();
}

function frame(nowMs: number): void {
  const snap = client.latest;
  if (snap) {
    bubbles.ingest(snap, nowMs, keyboard.heldVelocities);
    synth.update(snap.detunedNotes);
  }
  drawVideoLayer(nowMs);
  drawCurves(nowMs);
  drawKeyboard();
  hudElement.textContent = formatHud(snap, client.status, client.protocolBadge).join('\n');
  advanceButton.disabled = !client.connected;
  requestAnimationFrame(frame);
}

keysCanvas.addEventListener('pointerdown', (event) => {
  ensureAudio();
  if (!client.connected) return;
  const rect = keysCanvas.getBoundingClientRect();
  const note = keyAtPosition(
    keyboard.layout,
    (event.clientX - rect.left) / rect.width,
    (event.clientY - rect.top) / rect.height,
  );
  if (note !== null) keyboard.press(note);
});
keysCanvas.addEventListener('pointerup', () => keyboard.releaseAll());
keysCanvas.addEventListener('pointerleave', () => keyboard.releaseAll());

window.addEventListener('keydown', (event) => {
  if (event.repeat) return;
  ensureAudio();
  if (keyboard.handleKey(event.code, true)) event.preventDefault();
});
window.addEventListener('keyup', (event) => {
  if (keyboard.handleKey(event.code, false)) event.preventDefault();
});
advanceButton.addEventListener('click', () => {
  ensureAudio();
  keyboard.advancePart();
});

requestAnimationFrame(frame);
