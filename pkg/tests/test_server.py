import asyncio
import json

import pytest
from websockets.asyncio.client import connect
from websockets.exceptions import ConnectionClosed

from posepilot.classifier import Command
from posepilot.fixtures import canonical_points
from posepilot.pipeline import SessionConfig
from posepilot.server import bridge_server

TICK_RATE = 60.0


def frame_in(command, seq, t=None):
    joints = [[x, y, 1.0] for x, y in canonical_points(command)]
    return json.dumps({
        "kind": "frame_in",
        "seq": seq,
        "t": t if t is not None else seq / TICK_RATE,
        "keypoints": joints,
    })


async def recv_until(conn, predicate, limit=300):
    for _ in range(limit):
        msg = json.loads(await asyncio.wait_for(conn.recv(), timeout=5.0))
        if predicate(msg):
            return msg
    raise AssertionError("expected message never arrived")


async def send_frames(conn, command, count, start_seq=0):
    for i in range(count):
        await conn.send(frame_in(command, start_seq + i))
        await asyncio.sleep(1.2 / TICK_RATE)  # slower than the tick loop


def run(coro):
    return asyncio.run(asyncio.wait_for(coro, timeout=30.0))


async def open_bridge():
    config = SessionConfig(tick_rate=TICK_RATE)
    server = bridge_server("127.0.0.1", 0, config)
    return server


class TestSessionProtocol:
    def test_up_command_and_rising_altitude(self):
        async def scenario():
            async with await open_bridge() as server:
                port = server.sockets[0].getsockname()[1]
                async with connect(f"ws://127.0.0.1:{port}/session") as conn:
                    sender = asyncio.create_task(send_frames(conn, Command.UP, 8))
                    cmd = await recv_until(conn, lambda m: m["kind"] == "command_out")
                    assert cmd["command"] == "up"
                    t0 = await recv_until(conn, lambda m: m["kind"] == "telemetry")
                    t1 = await recv_until(
                        conn, lambda m: m["kind"] == "telemetry" and m["seq"] > t0["seq"] + 3)
                    assert t1["position"][2] > t0["position"][2]
                    await sender
        run(scenario())

    def test_snapshot_event(self):
        async def scenario():
            async with await open_bridge() as server:
                port = server.sockets[0].getsockname()[1]
                async with connect(f"ws://127.0.0.1:{port}/session") as conn:
                    sender = asyncio.create_task(send_frames(conn, Command.SNAPSHOT, 6))
                    evt = await recv_until(conn, lambda m: m["kind"] == "snapshot_event")
                    assert evt["count"] == 1
                    await sender
        run(scenario())

    def test_malformed_input_isolated_to_one_session(self):
        async def scenario():
            async with await open_bridge() as server:
                port = server.sockets[0].getsockname()[1]
                uri = f"ws://127.0.0.1:{port}/session"
                async with connect(uri) as healthy, connect(uri) as broken:
                    await broken.send("this is not json {")
                    err = await recv_until(broken, lambda m: m["kind"] == "error")
                    assert err["code"] == "protocol"
                    with pytest.raises(ConnectionClosed):
                        while True:
                            await asyncio.wait_for(broken.recv(), timeout=5.0)
                    # healthy session still works end to end
                    sender = asyncio.create_task(send_frames(healthy, Command.LEFT, 8))
                    cmd = await recv_until(healthy, lambda m: m["kind"] == "command_out")
                    assert cmd["command"] == "left"
                    await sender
        run(scenario())

    def test_emergency_hover_overrides_motion(self):
        async def scenario():
            async with await open_bridge() as server:
                port = server.sockets[0].getsockname()[1]
                async with connect(f"ws://127.0.0.1:{port}/session") as conn:
                    sender = asyncio.create_task(send_frames(conn, Command.UP, 6))
                    await recv_until(conn, lambda m: m["kind"] == "command_out")
                    await sender
                    await conn.send(json.dumps({"kind": "emergency", "action": "hover"}))
                    await recv_until(
                        conn,
                        lambda m: m["kind"] == "command_out" and m["command"] == "hover")
                    # keep streaming motion poses: the override must win
                    sender = asyncio.create_task(send_frames(conn, Command.UP, 6, start_seq=6))
                    last = await recv_until(
                        conn,
                        lambda m: m["kind"] == "telemetry" and m["last_command"] == "hover")
                    assert last["velocity"] == [0.0, 0.0, 0.0]
                    await sender
        run(scenario())

    def test_unknown_message_kind_rejected(self):
        async def scenario():
            async with await open_bridge() as server:
                port = server.sockets[0].getsockname()[1]
                async with connect(f"ws://127.0.0.1:{port}/session") as conn:
                    await conn.send(json.dumps({"kind": "warp"}))
                    err = await recv_until(conn, lambda m: m["kind"] == "error")
                    assert "warp" in err["message"]
        run(scenario())

    def test_wrong_path_rejected(self):
        async def scenario():
            async with await open_bridge() as server:
                port = server.sockets[0].getsockname()[1]
                async with connect(f"ws://127.0.0.1:{port}/elsewhere") as conn:
                    with pytest.raises(ConnectionClosed) as info:
                        await asyncio.wait_for(conn.recv(), timeout=5.0)
                    assert info.value.rcvd.code == 1008
        run(scenario())
