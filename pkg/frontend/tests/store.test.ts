import { describe, expect, it } from 'vitest';

import { CommandOut, Telemetry } from '../src/protocol';
import { applyMessage, initialState, isStale, STALE_AFTER_MS } from '../src/store';

const telemetry = (seq: number, over: Partial<Telemetry> = {}): Telemetry => ({
  kind: 'telemetry', seq, t: seq / 30,
  position: [0, 0, 1], attitude: [0, 0, 0], velocity: [0, 0, 0],
  last_command: null, snapshot_count: 0, dropped_frames: 0,
  ...over,
});

const command = (seq: number, cmd: string): CommandOut =>
  ({ kind: 'command_out', seq, t: seq / 30, command: cmd });

describe('applyMessage', () => {
  it('banner follows the newest command_out by seq', () => {
    let s = initialState();
    s = applyMessage(s, command(5, 'up'), 0);
    expect(s.banner).toBe('up');
    s = applyMessage(s, command(3, 'left'), 0); // stale, ignored
    expect(s.banner).toBe('up');
    s = applyMessage(s, command(8, 'hover'), 0);
    expect(s.banner).toBe('hover');
  });

  it('telemetry is ordered by seq and drives the snapshot counter', () => {
    let s = initialState();
    s = applyMessage(s, telemetry(10, { snapshot_count: 2 }), 100);
    s = applyMessage(s, telemetry(7), 200); // out of order, ignored
    expect(s.telemetry!.seq).toBe(10);
    expect(s.snapshotCount).toBe(2);
  });

  it('snapshot_event bumps the gallery counter', () => {
    let s = initialState();
    s = applyMessage(s, { kind: 'snapshot_event', seq: 1, t: 0, count: 4 }, 0);
    expect(s.snapshotCount).toBe(4);
  });

  it('errors are recorded', () => {
    const s = applyMessage(initialState(), { kind: 'error', code: 'protocol', message: 'bad' }, 0);
    expect(s.lastError).toBe('bad');
  });
});

describe('isStale', () => {
  it('no telemetry is stale', () => {
    expect(isStale(initialState(), 0)).toBe(true);
  });

  it('fresh telemetry is not stale, old telemetry is', () => {
    const s = applyMessage(initialState(), telemetry(1), 1000);
    expect(isStale(s, 1500)).toBe(false);
    expect(isStale(s, 1000 + STALE_AFTER_MS + 1)).toBe(true);
  });
});
