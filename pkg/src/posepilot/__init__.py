"""Body-gesture teleoperation pipeline with a built-in quadrotor simulator."""

from posepilot.keypoints import (
    Keypoint,
    PoseFrame,
    NoPersonDetected,
    MalformedInput,
    parse_estimator_json,
    parse_replay_line,
    serialize_replay_line,
    is_valid_for_gesture,
)
from posepilot.geometry import GestureFeatures, DegenerateVector, angle_between, extract_features
from posepilot.classifier import Command, GestureRule, builtin_rule_table, classify_features, classify_frame
from posepilot.debounce import Debouncer, HOVER
from posepilot.sim import DroneState, VehicleParams, Setpoint, DroneSimulator, command_to_setpoint

__all__ = [
    "Keypoint",
    "PoseFrame",
    "NoPersonDetected",
    "MalformedInput",
    "parse_estimator_json",
    "parse_replay_line",
    "serialize_replay_line",
    "is_valid_for_gesture",
    "GestureFeatures",
    "DegenerateVector",
    "angle_between",
    "extract_features",
    "Command",
    "GestureRule",
    "builtin_rule_table",
    "classify_features",
    "classify_frame",
    "Debouncer",
    "HOVER",
    "DroneState",
    "VehicleParams",
    "Setpoint",
    "DroneSimulator",
    "command_to_setpoint",
]
