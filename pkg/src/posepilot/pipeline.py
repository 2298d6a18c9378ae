"""The frame -> command -> simulator pipeline shared by replay and the server.

One PipelineSession owns a debouncer and a simulator; frames go in, command
and telemetry records come out. Everything is deterministic: the same frame
stream with the same config always produces byte-identical logs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from posepilot.classifier import Command, builtin_rule_table, classify_frame, load_rule_table
from posepilot.debounce import Debouncer, HOVER
from posepilot.keypoints import DEFAULT_MIN_CONFIDENCE, NoPersonDetected, PoseFrame, is_valid_for_gesture
from posepilot.sim import DEFAULT_LINEAR_SPEED, DEFAULT_YAW_SPEED, DroneSimulator


class ConfigError(ValueError):
    pass


@dataclass
class SessionConfig:
    min_confidence: float = DEFAULT_MIN_CONFIDENCE
    debounce_threshold: int = 2
    sim_mode: str = "kinematic"
    tick_rate: float = 30.0
    rule_table: str | None = None  # path to a JSON rule table, or None for builtin
    linear_speed: float = DEFAULT_LINEAR_SPEED
    yaw_speed: float = DEFAULT_YAW_SPEED

    def __post_init__(self):
        if not 0.0 <= self.min_confidence <= 1.0:
            raise ConfigError(f"min_confidence {self.min_confidence} outside [0,1]")
        if self.debounce_threshold < 1:
            raise ConfigError("debounce_threshold must be >= 1")
        if self.sim_mode not in ("kinematic", "dynamic"):
            raise ConfigError(f"unknown sim_mode {self.sim_mode!r}")
        if not 1.0 <= self.tick_rate <= 120.0:
            raise ConfigError(f"tick_rate {self.tick_rate} outside [1,120]")

    @classmethod
    def from_json(cls, path) -> "SessionConfig":
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        if not isinstance(doc, dict):
            raise ConfigError("config must be a JSON object")
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(doc) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        return cls(**doc)


@dataclass
class PipelineResult:
    command_log: list = field(default_factory=list)
    telemetry_log: list = field(default_factory=list)
    frames: int = 0
    emissions: int = 0
    drops: int = 0

    def emitted_commands(self) -> list[str]:
        """Distinct emissions in first-appearance order (hover excluded)."""
        seen = []
        for entry in self.command_log:
            cmd = entry["emitted"]
            if cmd is not None and cmd != HOVER and cmd not in seen:
                seen.append(cmd)
        return seen


class PipelineSession:
    """Sequential per-session pipeline: validate -> classify -> debounce -> sim."""

    def __init__(self, config: SessionConfig | None = None):
        self.config = config or SessionConfig()
        self.rules = (
            load_rule_table(self.config.rule_table)
            if self.config.rule_table
            else builtin_rule_table()
        )
        self.debouncer = Debouncer(threshold=self.config.debounce_threshold)
        self.sim = DroneSimulator(mode=self.config.sim_mode)
        self.tick_dt = 1.0 / self.config.tick_rate

    def observe(self, frame) -> Command | None:
        """Per-frame classification; None covers no-person, low-confidence
        and no-rule-matched alike (the debouncer does not distinguish them)."""
        if isinstance(frame, NoPersonDetected):
            return None
        if not is_valid_for_gesture(frame, self.config.min_confidence):
            return None
        return classify_frame(frame, self.rules)

    def process_frame(self, frame) -> dict:
        """Run one frame through the full chain and advance the simulator by
        one tick. Returns the command-log entry."""
        obs = self.observe(frame)
        emitted = self.debouncer.step(obs)
        snapshot = self.sim.apply_emission(emitted)
        self.advance_sim()
        return {
            "seq": frame.seq,
            "t": frame.timestamp,
            "observed": obs.value if isinstance(obs, Command) else None,
            "emitted": emitted.value if isinstance(emitted, Command) else emitted,
            "snapshot": snapshot,
        }

    def advance_sim(self) -> None:
        if self.sim.mode == "dynamic":
            # substep at 10 ms for integrator accuracy
            n = max(1, round(self.tick_dt / 0.01))
            for _ in range(n):
                self.sim.step(self.tick_dt / n)
        else:
            self.sim.step(self.tick_dt)


def run_pipeline(source, config: SessionConfig | None = None) -> PipelineResult:
    """Drive a whole frame stream (iterable of PoseFrame / NoPersonDetected)
    through one session; collects command and telemetry logs."""
    session = PipelineSession(config)
    result = PipelineResult()
    for frame in source:
        entry = session.process_frame(frame)
        result.command_log.append(entry)
        result.telemetry_log.append(session.sim.telemetry())
        result.frames += 1
        if entry["emitted"] is not None:
            result.emissions += 1
    return result


def command_log_bytes(result: PipelineResult) -> bytes:
    """Canonical JSONL serialization of the command log."""
    lines = [json.dumps(e, sort_keys=True) for e in result.command_log]
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""


def telemetry_log_bytes(result: PipelineResult) -> bytes:
    lines = [json.dumps(e, sort_keys=True) for e in result.telemetry_log]
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""
