"""Command-line entry point.

Subcommands:
  classify   per-frame gesture classification of a keypoint file
  replay     run a recorded JSONL stream through the full pipeline
  serve      run the WebSocket bridge
  bench      throughput/latency benchmark of classify + debounce
  fixtures   write the canonical 10-gesture replay corpus

Exit codes: 0 ok, 1 input/parse failure, 2 bind error, 3 config error.
The BRIDGE_CONFIG env var may point to a SessionConfig JSON file.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import statistics
import sys
import time

from posepilot import fixtures
from posepilot.classifier import Command, classify_frame
from posepilot.debounce import Debouncer
from posepilot.geometry import extract_features, DegenerateVector
from posepilot.keypoints import (
    MalformedInput,
    NoPersonDetected,
    is_valid_for_gesture,
    parse_estimator_json,
    parse_replay_line,
)
from posepilot.pipeline import (
    ConfigError,
    SessionConfig,
    command_log_bytes,
    run_pipeline,
    telemetry_log_bytes,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BIND = 2
EXIT_CONFIG = 3


def _base_config(args) -> SessionConfig:
    path = os.environ.get("BRIDGE_CONFIG")
    config = SessionConfig.from_json(path) if path else SessionConfig()
    if getattr(args, "rate", None) is not None:
        config.tick_rate = args.rate
        SessionConfig.__post_init__(config)
    if getattr(args, "sim", None) is not None:
        config.sim_mode = args.sim
    if getattr(args, "min_confidence", None) is not None:
        config.min_confidence = args.min_confidence
        SessionConfig.__post_init__(config)
    return config


def _load_frames(path):
    """Read either a replay JSONL or a single estimator JSON export."""
    with open(path, "rb") as fh:
        data = fh.read()
    text = data.decode("utf-8")
    try:
        doc = json.loads(text)
        if isinstance(doc, dict) and "people" in doc:
            return [parse_estimator_json(text)]
    except json.JSONDecodeError:
        pass  # not a single JSON document; treat as JSONL below
    frames = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            frames.append(parse_replay_line(line))
        except MalformedInput as exc:
            raise MalformedInput(f"{path}:{lineno}: {exc}") from exc
    return frames


def cmd_classify(args) -> int:
    try:
        config = _base_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        frames = _load_frames(args.path)
    except (OSError, MalformedInput, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.trace:
        print("seq,alpha1,alpha2,s1,s2,command")
    for frame in frames:
        if isinstance(frame, NoPersonDetected) or not is_valid_for_gesture(frame, config.min_confidence):
            label, feats = "no-detection", None
        else:
            cmd = classify_frame(frame)
            label = cmd.value if cmd else "no-detection"
            try:
                feats = extract_features(frame)
            except DegenerateVector:
                feats = None
        if args.trace:
            if feats is None:
                print(f"{frame.seq},,,,,{label}")
            else:
                print(f"{frame.seq},{feats.alpha1:.4f},{feats.alpha2:.4f},"
                      f"{feats.s1:.4f},{feats.s2:.4f},{label}")
        else:
            print(label)
    return EXIT_OK


def cmd_replay(args) -> int:
    try:
        config = _base_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        frames = _load_frames(args.path)
    except (OSError, MalformedInput, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    result = run_pipeline(frames, config)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        with open(os.path.join(args.out, "commands.jsonl"), "wb") as fh:
            fh.write(command_log_bytes(result))
        with open(os.path.join(args.out, "telemetry.jsonl"), "wb") as fh:
            fh.write(telemetry_log_bytes(result))
    distinct = result.emitted_commands()
    print(f"frames: {result.frames}")
    print(f"emissions: {result.emissions}")
    print(f"distinct commands: {len(distinct)} ({', '.join(distinct)})")
    print(f"drops: {result.drops}")
    return EXIT_OK


def cmd_serve(args) -> int:
    from posepilot.server import serve_bridge

    try:
        config = _base_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        asyncio.run(serve_bridge(args.host, args.port, config))
    except OSError as exc:
        print(f"bind error: {exc}", file=sys.stderr)
        return EXIT_BIND
    except KeyboardInterrupt:
        pass
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.frames < 1000:
        print("bench needs --frames >= 1000", file=sys.stderr)
        return EXIT_CONFIG
    frames = []
    gallery = list(fixtures.GALLERY_ORDER)
    for i in range(args.frames):
        frames.append(fixtures.canonical_frame(gallery[(i // 4) % len(gallery)], seq=i, timestamp=i / 30.0))
    debouncer = Debouncer()
    latencies = []
    t_start = time.perf_counter()
    for frame in frames:
        t0 = time.perf_counter()
        obs = classify_frame(frame) if is_valid_for_gesture(frame) else None
        debouncer.step(obs)
        latencies.append(time.perf_counter() - t0)
    elapsed = time.perf_counter() - t_start
    latencies.sort()
    p50 = statistics.median(latencies)
    p99 = latencies[int(0.99 * (len(latencies) - 1))]
    print(f"frames: {args.frames}")
    print(f"throughput: {args.frames / elapsed:.0f} frames/s")
    print(f"p50 latency: {p50 * 1e6:.1f} us")
    print(f"p99 latency: {p99 * 1e6:.1f} us")
    return EXIT_OK


def cmd_fixtures(args) -> int:
    try:
        paths = fixtures.write_corpus(args.out)
        if args.presets:
            fixtures.write_presets(args.presets)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for p in paths:
        print(p)
    if args.presets:
        print(args.presets)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posepilot", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("classify", help="classify frames from a keypoint file")
    p.add_argument("path", help="estimator JSON export or replay JSONL")
    p.add_argument("--trace", action="store_true", help="print the CSV feature trace")
    p.add_argument("--min-confidence", type=float, default=None, dest="min_confidence",
                   help="keypoint confidence threshold (default 0.3)")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("replay", help="run a replay JSONL through the pipeline")
    p.add_argument("path", help="replay JSONL file")
    p.add_argument("--rate", type=float, default=None, help="pipeline tick rate in Hz")
    p.add_argument("--sim", choices=["kinematic", "dynamic"], default=None, help="simulator mode")
    p.add_argument("--out", default=None, help="directory for command/telemetry logs")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("serve", help="run the WebSocket bridge")
    p.add_argument("--host", default="127.0.0.1", help="bind address")
    p.add_argument("--port", type=int, default=8765, help="TCP port")
    p.add_argument("--rate", type=float, default=None, help="session tick rate in Hz")
    p.add_argument("--sim", choices=["kinematic", "dynamic"], default=None, help="simulator mode")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("bench", help="benchmark classify + debounce throughput")
    p.add_argument("--frames", type=int, default=10000, help="synthetic frame count (>= 1000)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("fixtures", help="write the canonical gesture corpus")
    p.add_argument("--out", default="fixtures", help="output directory for the JSONL corpus")
    p.add_argument("--presets", default=None, help="also write the UI presets JSON to this path")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
