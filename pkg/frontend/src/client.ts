/**
 * WebSocket bridge client.
 *
 * The receive handler only writes the latest-snapshot slot; the render
 * loop reads it on its own clock. Outbound sends are dropped while
 * disconnected (the UI disables input then). Reconnects after a fixed
 * delay until close() is called.
 */

import { advancePartMessage, noteMessage, parseSnapshot, ProtocolError, UiSnapshot } from './protocol.js';

/**
 * Structural subset of WebSocket shared by browsers and the ws
 * package. Event parameters are `any` because the two families
 * disagree on event types; handlers only read `.data`.
 */
export interface WsLike {
  onopen: ((event: any) => void) | null;
  onmessage: ((event: any) => void) | null;
  onclose: ((event: any) => void) | null;
  onerror: ((event: any) => void) | null;
  send(data: string): void;
  close(): void;
}

export type WsFactory = (url: string) => WsLike;

export type ConnectionStatus = 'connecting' | 'open' | 'closed';

export interface BridgeClientOptions {
  wsFactory: WsFactory;
  reconnectDelayMs?: number;
  /** Scheduler hook, replaceable in tests; defaults to setTimeout. */
  schedule?: (fn: () => void, delayMs: number) => void;
}

export class BridgeClient {
  status: ConnectionStatus = 'connecting';
  latest: UiSnapshot | null = null;
  /** Badge text for the last rejected inbound message, if any. */
  protocolBadge: string | null = null;
  snapshotCount = 0;

  private ws: WsLike | null = null;
  private closed = false;
  private readonly reconnectDelayMs: number;
  private readonly schedule: (fn: () => void, delayMs: number) => void;

  constructor(private url: string, private options: BridgeClientOptions) {
    this.reconnectDelayMs = options.reconnectDelayMs ?? 1000;
    this.schedule = options.schedule ?? ((fn, ms) => setTimeout(fn, ms));
    this.connect();
  }

  private connect(): void {
    this.status = 'connecting';
    const ws = this.options.wsFactory(this.url);
    this.ws = ws;
    ws.onopen = () => {
      this.status = 'open';
    };
    ws.onmessage = (event) => this.handleMessage(event.data);
    ws.onerror = () => {};
    ws.onclose = () => {
      this.status = 'closed';
      this.ws = null;
      if (!this.closed) {
        this.schedule(() => {
          if (!this.closed) this.connect();
        }, this.reconnectDelayMs);
      }
    };
  }

  private handleMessage(data: unknown): void {
    let message: unknown;
    try {
      message = JSON.parse(String(data));
    } catch {
      this.protocolBadge = 'unparseable message';
      return;
    }
    const type = (message as Record<string, unknown> | null)?.type;
    if (type === 'error') {
      this.protocolBadge = `engine rejected input: ${String((message as Record<string, unknown>).error)}`;
      return;
    }
    try {
      this.latest = parseSnapshot(message);
      this.snapshotCount += 1;
      this.protocolBadge = null;
    } catch (exc) {
      if (exc instanceof ProtocolError) {
        this.protocolBadge = exc.message;
        return;
      }
      throw exc;
    }
  }

  get connected(): boolean {
    return this.status === 'open';
  }

  sendNote(on: boolean, note: number, velocity: number): boolean {
    return this.sendRaw(noteMessage(on, note, velocity));
  }

  sendAdvance(): boolean {
    return this.sendRaw(advancePartMessage());
  }

  private sendRaw(payload: string): boolean {
    if (!this.connected || !this.ws) return false;
    this.ws.send(payload);
    return true;
  }

  close(): void {
    this.closed = true;
    this.ws?.close();
    this.ws = null;
    this.status = 'closed';
  }
}
