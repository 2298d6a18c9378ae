// Message types for the bridge WebSocket protocol (path /session).
// One JSON object per text message, discriminated by `kind`.

export interface FrameIn {
  kind: 'frame_in';
  seq: number;
  t: number;
  keypoints: [number, number, number][] | null; // 18 triplets or null
}

export interface Emergency {
  kind: 'emergency';
  action: 'hover' | 'land';
}

export interface CommandOut {
  kind: 'command_out';
  seq: number;
  t: number;
  command: string;
}

export interface SnapshotEvent {
  kind: 'snapshot_event';
  seq: number;
  t: number;
  count: number;
}

export interface Telemetry {
  kind: 'telemetry';
  seq: number;
  t: number;
  position: [number, number, number];
  attitude: [number, number, number]; // roll, pitch, yaw
  velocity: [number, number, number];
  last_command: string | null;
  snapshot_count: number;
  dropped_frames: number;
}

export interface ErrorMsg {
  kind: 'error';
  code: string;
  message: string;
}

export type ServerMessage = CommandOut | SnapshotEvent | Telemetry | ErrorMsg;

const NUM_KEYPOINTS = 18;

function isVec3(v: unknown): v is [number, number, number] {
  return Array.isArray(v) && v.length === 3 && v.every((x) => typeof x === 'number');
}

export function validateFrameIn(msg: unknown): msg is FrameIn {
  if (typeof msg !== 'object' || msg === null) return false;
  const m = msg as Record<string, unknown>;
  if (m.kind !== 'frame_in') return false;
  if (typeof m.seq !== 'number' || typeof m.t !== 'number') return false;
  if (m.keypoints === null) return true;
  return (
    Array.isArray(m.keypoints) &&
    m.keypoints.length === NUM_KEYPOINTS &&
    m.keypoints.every(isVec3)
  );
}

export function parseServerMessage(data: string): ServerMessage {
  const msg = JSON.parse(data) as Record<string, unknown>;
  switch (msg.kind) {
    case 'command_out':
      if (typeof msg.seq !== 'number' || typeof msg.command !== 'string') break;
      return msg as unknown as CommandOut;
    case 'snapshot_event':
      if (typeof msg.seq !== 'number' || typeof msg.count !== 'number') break;
      return msg as unknown as SnapshotEvent;
    case 'telemetry':
      if (
        typeof msg.seq !== 'number' ||
        !isVec3(msg.position) ||
        !isVec3(msg.attitude) ||
        !isVec3(msg.velocity) ||
        typeof msg.snapshot_count !== 'number'
      ) {
        break;
      }
      return msg as unknown as Telemetry;
    case 'error':
      if (typeof msg.message !== 'string') break;
      return msg as unknown as ErrorMsg;
  }
  throw new Error(`malformed server message: ${data.slice(0, 120)}`);
}
