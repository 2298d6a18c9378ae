"""WebSocket bridge: pose frames in, commands and telemetry out.

One isolated pipeline session per client on path ``/session``. Text
messages, one JSON object each:

  in   {"kind": "frame_in", "seq": int, "t": float, "keypoints": [[x,y,c]*18] | null}
  in   {"kind": "emergency", "action": "hover" | "land"}
  out  {"kind": "command_out", "seq": int, "t": float, "command": str}
  out  {"kind": "snapshot_event", "seq": int, "t": float, "count": int}
  out  {"kind": "telemetry", "seq": int, ..., "dropped_frames": int}
  out  {"kind": "error", "code": str, "message": str}

The session ticks at the configured rate; if frames arrive faster, only the
newest pending frame is classified per tick and the rest are dropped
(drop-oldest), with the drop count reported in telemetry. An emergency
message overrides the pose pipeline from the next tick on.
"""

from __future__ import annotations

import asyncio
import json
import logging

import numpy as np
from websockets.asyncio.server import serve as ws_serve
from websockets.exceptions import ConnectionClosed

from posepilot.keypoints import MalformedInput, frame_from_record
from posepilot.pipeline import PipelineSession, SessionConfig
from posepilot.sim import Setpoint

log = logging.getLogger(__name__)

LAND_SPEED = 0.3  # m/s descent while an emergency landing is active


class _ClientSession:
    def __init__(self, config: SessionConfig):
        self.pipeline = PipelineSession(config)
        self.pending_frame = None
        self.drops = 0
        self.override = None  # None | "hover" | "land"
        self.out_seq = 0

    def next_seq(self) -> int:
        self.out_seq += 1
        return self.out_seq

    def take_pending(self):
        frame, self.pending_frame = self.pending_frame, None
        return frame

    def offer_frame(self, frame) -> None:
        if self.pending_frame is not None:
            self.drops += 1
        self.pending_frame = frame

    def apply_override(self) -> None:
        sim = self.pipeline.sim
        if self.override == "hover":
            sim.setpoint = Setpoint()
            sim.last_command = "hover"
        elif self.override == "land":
            if sim.state.position[2] > 0.0:
                sim.setpoint = Setpoint(velocity=np.array([0.0, 0.0, -LAND_SPEED]))
            else:
                sim.setpoint = Setpoint()
            sim.last_command = "land"


async def _tick_loop(conn, session: _ClientSession):
    pipeline = session.pipeline
    dt = pipeline.tick_dt
    while True:
        frame = session.take_pending()
        if frame is not None:
            obs = pipeline.observe(frame)
            emitted = pipeline.debouncer.step(obs)
            snapshot = pipeline.sim.apply_emission(emitted)
            if emitted is not None and session.override is None:
                await conn.send(json.dumps({
                    "kind": "command_out",
                    "seq": session.next_seq(),
                    "t": pipeline.sim.time,
                    "command": emitted if isinstance(emitted, str) else emitted.value,
                }))
            if snapshot and session.override is None:
                await conn.send(json.dumps({
                    "kind": "snapshot_event",
                    "seq": session.next_seq(),
                    "t": pipeline.sim.time,
                    "count": pipeline.sim.snapshot_count,
                }))
        if session.override is not None:
            session.apply_override()
        pipeline.advance_sim()
        telemetry = pipeline.sim.telemetry()
        telemetry["kind"] = "telemetry"
        telemetry["seq"] = session.next_seq()
        telemetry["dropped_frames"] = session.drops
        await conn.send(json.dumps(telemetry))
        await asyncio.sleep(dt)


async def _handle_client(conn, config: SessionConfig):
    path = conn.request.path if conn.request else ""
    if path.split("?")[0] != "/session":
        await conn.close(code=1008, reason="connect to /session")
        return
    session = _ClientSession(config)
    ticker = asyncio.create_task(_tick_loop(conn, session))
    try:
        async for message in conn:
            try:
                doc = json.loads(message)
                if not isinstance(doc, dict):
                    raise MalformedInput("message must be a JSON object")
                kind = doc.get("kind")
                if kind == "frame_in":
                    session.offer_frame(frame_from_record(doc))
                elif kind == "emergency":
                    action = doc.get("action")
                    if action not in ("hover", "land"):
                        raise MalformedInput(f"unknown emergency action {action!r}")
                    session.override = action
                    session.apply_override()
                    await conn.send(json.dumps({
                        "kind": "command_out",
                        "seq": session.next_seq(),
                        "t": session.pipeline.sim.time,
                        "command": action,
                    }))
                else:
                    raise MalformedInput(f"unknown message kind {kind!r}")
            except (MalformedInput, json.JSONDecodeError, ValueError) as exc:
                await conn.send(json.dumps({
                    "kind": "error",
                    "code": "protocol",
                    "message": str(exc),
                }))
                await conn.close(code=1002, reason="protocol error")
                break
    except ConnectionClosed:
        pass
    finally:
        ticker.cancel()


def bridge_server(host: str, port: int, config: SessionConfig | None = None):
    """The listening server as an async context manager (port 0 picks a free
    port; the bound address is on ``server.sockets``)."""
    config = config or SessionConfig()

    async def handler(conn):
        try:
            await _handle_client(conn, config)
        except ConnectionClosed:
            pass
        except Exception:
            log.exception("session crashed")

    return ws_serve(handler, host, port)


async def serve_bridge(host: str, port: int, config: SessionConfig | None = None):
    """Run the bridge until cancelled. Raises OSError if the port is taken."""
    async with bridge_server(host, port, config) as server:
        log.info("bridge listening on ws://%s:%d/session", host, port)
        await server.serve_forever()
