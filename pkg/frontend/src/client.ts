// Session client: streams the current editor pose at a fixed rate and feeds
// server messages into the state store. Live-only: nothing is buffered while
// disconnected.

import { EditorSkeleton } from './skeleton';
import { Emergency, parseServerMessage, ServerMessage } from './protocol';

// Minimal socket surface so tests can substitute `ws` for the browser WebSocket.
export interface SocketLike {
  send(data: string): void;
  close(): void;
  onopen: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onerror: ((ev?: unknown) => void) | null;
}

export type SocketFactory = (url: string) => SocketLike;

export interface SessionClientOptions {
  url: string;
  rateHz: number;
  socketFactory?: SocketFactory;
  onMessage: (msg: ServerMessage) => void;
  onStatus: (status: 'disconnected' | 'connecting' | 'connected') => void;
  getSkeleton: () => EditorSkeleton;
  allHidden?: () => boolean;
}

export class SessionClient {
  private socket: SocketLike | null = null;
  private timer: ReturnType<typeof setInterval> | null = null;
  private seq = 0;
  private startedAt = 0;

  constructor(private opts: SessionClientOptions) {}

  setUrl(url: string): void {
    this.opts.url = url;
  }

  connect(): void {
    this.disconnect();
    this.opts.onStatus('connecting');
    const factory = this.opts.socketFactory ?? ((url) => new WebSocket(url) as unknown as SocketLike);
    const socket = factory(this.opts.url);
    this.socket = socket;
    socket.onopen = () => {
      this.opts.onStatus('connected');
      this.startedAt = Date.now();
      this.seq = 0;
      this.timer = setInterval(() => this.sendFrame(), 1000 / this.opts.rateHz);
    };
    socket.onmessage = (ev) => {
      this.opts.onMessage(parseServerMessage(String(ev.data)));
    };
    socket.onclose = () => {
      this.stopStreaming();
      this.opts.onStatus('disconnected');
    };
    socket.onerror = () => {
      this.stopStreaming();
      this.opts.onStatus('disconnected');
    };
  }

  disconnect(): void {
    this.stopStreaming();
    if (this.socket) {
      this.socket.onclose = null;
      this.socket.close();
      this.socket = null;
    }
    this.opts.onStatus('disconnected');
  }

  get connected(): boolean {
    return this.timer !== null;
  }

  sendEmergency(action: Emergency['action']): void {
    if (!this.socket) return;
    const msg: Emergency = { kind: 'emergency', action };
    this.socket.send(JSON.stringify(msg));
  }

  private sendFrame(): void {
    if (!this.socket) return;
    const t = (Date.now() - this.startedAt) / 1000;
    const frame = this.opts.getSkeleton().toFrameIn(this.seq++, t);
    if (this.opts.allHidden?.()) {
      frame.keypoints = null; // nobody in view
    }
    this.socket.send(JSON.stringify(frame));
  }

  private stopStreaming(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }
}
