// Single state store for the viewport: socket callbacks write, rendering reads.

import { ServerMessage, Telemetry } from './protocol';

export type ConnectionStatus = 'disconnected' | 'connecting' | 'connected';

export interface ViewportState {
  telemetry: Telemetry | null;
  telemetryReceivedAt: number; // ms epoch of the latest telemetry
  banner: string; // most recent command_out by seq
  bannerSeq: number;
  connection: ConnectionStatus;
  snapshotCount: number;
  lastError: string | null;
}

export function initialState(): ViewportState {
  return {
    telemetry: null,
    telemetryReceivedAt: 0,
    banner: '',
    bannerSeq: -1,
    connection: 'disconnected',
    snapshotCount: 0,
    lastError: null,
  };
}

export function applyMessage(state: ViewportState, msg: ServerMessage, now: number): ViewportState {
  switch (msg.kind) {
    case 'command_out':
      // the banner always reflects the newest command by seq
      if (msg.seq <= state.bannerSeq) return state;
      return { ...state, banner: msg.command, bannerSeq: msg.seq };
    case 'snapshot_event':
      return { ...state, snapshotCount: msg.count };
    case 'telemetry':
      if (state.telemetry && msg.seq <= state.telemetry.seq) return state;
      return {
        ...state,
        telemetry: msg,
        telemetryReceivedAt: now,
        snapshotCount: msg.snapshot_count,
      };
    case 'error':
      return { ...state, lastError: msg.message };
  }
}

export const STALE_AFTER_MS = 1000;

export function isStale(state: ViewportState, now: number): boolean {
  return state.telemetry === null || now - state.telemetryReceivedAt > STALE_AFTER_MS;
}
