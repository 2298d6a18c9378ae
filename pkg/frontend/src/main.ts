// Playground wiring: skeleton editor canvas, preset buttons, session client,
// drone viewport, emergency controls.

import { SessionClient } from './client';
import { drawSide, drawSkeleton, drawTopDown, formatTelemetry } from './render';
import { EditorSkeleton } from './skeleton';
import { applyMessage, initialState, isStale, ViewportState } from './store';
import { PRESETS } from './presets';

const STREAM_RATE_HZ = 15;

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function main(): void {
  const editorCanvas = byId<HTMLCanvasElement>('editor');
  const topCanvas = byId<HTMLCanvasElement>('topdown');
  const sideCanvas = byId<HTMLCanvasElement>('side');
  const banner = byId<HTMLDivElement>('banner');
  const status = byId<HTMLSpanElement>('status');
  const telemetryLine = byId<HTMLDivElement>('telemetry');
  const snapshots = byId<HTMLSpanElement>('snapshots');
  const presetsDiv = byId<HTMLDivElement>('presets');
  const urlInput = byId<HTMLInputElement>('url');

  editorCanvas.width = PRESETS.canvas.width;
  editorCanvas.height = PRESETS.canvas.height;

  let skeleton = EditorSkeleton.fromPreset('wait');
  let state: ViewportState = initialState();
  let allHidden = false;

  const client = new SessionClient({
    url: urlInput.value,
    rateHz: STREAM_RATE_HZ,
    getSkeleton: () => skeleton,
    allHidden: () => allHidden,
    onMessage: (msg) => {
      state = applyMessage(state, msg, Date.now());
    },
    onStatus: (s) => {
      state = { ...state, connection: s };
    },
  });

  // preset gallery: one button per canonical gesture
  for (const preset of PRESETS.presets) {
    const button = document.createElement('button');
    button.textContent = preset.command.replace('_', ' ');
    button.onclick = () => {
      skeleton = EditorSkeleton.fromPreset(preset.command);
      allHidden = false;
    };
    presetsDiv.appendChild(button);
  }

  byId<HTMLButtonElement>('connect').onclick = () => {
    client.disconnect();
    client.setUrl(urlInput.value);
    client.connect();
  };
  byId<HTMLButtonElement>('disconnect').onclick = () => client.disconnect();
  byId<HTMLButtonElement>('emergency-hover').onclick = () => client.sendEmergency('hover');
  byId<HTMLButtonElement>('emergency-land').onclick = () => client.sendEmergency('land');
  byId<HTMLButtonElement>('hide-all').onclick = () => {
    allHidden = !allHidden;
    skeleton.setAllVisible(!allHidden);
  };

  // joint dragging
  let dragging: number | null = null;
  editorCanvas.addEventListener('mousedown', (ev) => {
    const rect = editorCanvas.getBoundingClientRect();
    dragging = skeleton.jointAt(ev.clientX - rect.left, ev.clientY - rect.top, 12);
  });
  editorCanvas.addEventListener('mousemove', (ev) => {
    if (dragging === null) return;
    const rect = editorCanvas.getBoundingClientRect();
    skeleton.moveJoint(dragging, ev.clientX - rect.left, ev.clientY - rect.top);
  });
  window.addEventListener('mouseup', () => {
    dragging = null;
  });

  const editorCtx = editorCanvas.getContext('2d')!;
  const topCtx = topCanvas.getContext('2d')!;
  const sideCtx = sideCanvas.getContext('2d')!;

  function frame(): void {
    const now = Date.now();
    drawSkeleton(editorCtx, skeleton, editorCanvas.width, editorCanvas.height);
    drawTopDown(topCtx, state, topCanvas.width, topCanvas.height, now);
    drawSide(sideCtx, state, sideCanvas.width, sideCanvas.height, now);
    banner.textContent = state.banner || '—';
    status.textContent = state.connection + (isStale(state, now) && state.connection === 'connected' ? ' (stale)' : '');
    telemetryLine.textContent = formatTelemetry(state.telemetry);
    snapshots.textContent = String(state.snapshotCount);
    requestAnimationFrame(frame);
  }
  requestAnimationFrame(frame);
}

main();
