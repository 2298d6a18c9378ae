// Canvas rendering: the skeleton editor, and top-down / side drone views.

import { BONES, EditorSkeleton } from './skeleton';
import { Telemetry } from './protocol';
import { ViewportState, isStale } from './store';

export function drawSkeleton(ctx: CanvasRenderingContext2D, skeleton: EditorSkeleton,
                             width: number, height: number): void {
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = '#14181f';
  ctx.fillRect(0, 0, width, height);

  ctx.strokeStyle = '#4f8fd9';
  ctx.lineWidth = 3;
  for (const [a, b] of BONES) {
    const ja = skeleton.joints[a];
    const jb = skeleton.joints[b];
    if (!ja.visible || !jb.visible) continue;
    ctx.beginPath();
    ctx.moveTo(ja.x, ja.y);
    ctx.lineTo(jb.x, jb.y);
    ctx.stroke();
  }

  skeleton.joints.forEach((j, i) => {
    ctx.beginPath();
    ctx.arc(j.x, j.y, i === 0 ? 8 : 5, 0, 2 * Math.PI);
    ctx.fillStyle = j.visible ? (i === 4 || i === 6 ? '#f2b84b' : '#e8edf4') : '#444b57';
    ctx.fill();
  });
}

const WORLD_SCALE = 40; // px per meter

function drawArrow(ctx: CanvasRenderingContext2D, x: number, y: number, angle: number): void {
  ctx.save();
  ctx.translate(x, y);
  ctx.rotate(angle);
  ctx.beginPath();
  ctx.moveTo(14, 0);
  ctx.lineTo(-8, 7);
  ctx.lineTo(-8, -7);
  ctx.closePath();
  ctx.fill();
  ctx.restore();
}

export function drawTopDown(ctx: CanvasRenderingContext2D, state: ViewportState,
                            width: number, height: number, now: number): void {
  const stale = isStale(state, now);
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = stale ? '#2a2a2a' : '#101820';
  ctx.fillRect(0, 0, width, height);
  drawGrid(ctx, width, height);
  const t = state.telemetry;
  if (!t) return;
  const cx = width / 2 + t.position[0] * WORLD_SCALE;
  const cy = height / 2 - t.position[1] * WORLD_SCALE; // +y up on screen
  ctx.fillStyle = stale ? '#777' : '#5be07a';
  // screen angle: world yaw=0 points +x (right); canvas y is flipped
  drawArrow(ctx, cx, cy, -t.attitude[2]);
}

export function drawSide(ctx: CanvasRenderingContext2D, state: ViewportState,
                         width: number, height: number, now: number): void {
  const stale = isStale(state, now);
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = stale ? '#2a2a2a' : '#101820';
  ctx.fillRect(0, 0, width, height);
  // ground line
  const groundY = height - 20;
  ctx.strokeStyle = '#3a4450';
  ctx.beginPath();
  ctx.moveTo(0, groundY);
  ctx.lineTo(width, groundY);
  ctx.stroke();
  const t = state.telemetry;
  if (!t) return;
  const x = width / 2 + t.position[0] * WORLD_SCALE;
  const y = groundY - t.position[2] * WORLD_SCALE;
  ctx.fillStyle = stale ? '#777' : '#5be07a';
  ctx.fillRect(x - 10, y - 3, 20, 6);
  ctx.fillText(`z=${t.position[2].toFixed(2)} m`, x + 14, y);
}

function drawGrid(ctx: CanvasRenderingContext2D, width: number, height: number): void {
  ctx.strokeStyle = '#1d2630';
  ctx.lineWidth = 1;
  for (let x = width / 2 % WORLD_SCALE; x < width; x += WORLD_SCALE) {
    ctx.beginPath();
    ctx.moveTo(x, 0);
    ctx.lineTo(x, height);
    ctx.stroke();
  }
  for (let y = height / 2 % WORLD_SCALE; y < height; y += WORLD_SCALE) {
    ctx.beginPath();
    ctx.moveTo(0, y);
    ctx.lineTo(width, y);
    ctx.stroke();
  }
}

export function formatTelemetry(t: Telemetry | null): string {
  if (!t) return 'no telemetry';
  const [x, y, z] = t.position;
  const yawDeg = (t.attitude[2] * 180) / Math.PI;
  return `pos (${x.toFixed(2)}, ${y.toFixed(2)}, ${z.toFixed(2)}) m  yaw ${yawDeg.toFixed(0)}°` +
    `  drops ${t.dropped_frames}`;
}
