"""Parsing and validation of 2D pose keypoints.

Frames follow the 18-point body layout. Image coordinates: origin at the
top-left corner, y grows downward. Index 6 is the LEFT WRIST in this layout
(the estimator export we consume numbers the upper body that way).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

NUM_KEYPOINTS = 18

# Indices of the joints the gesture features are built from.
NOSE = 0
NECK = 1
R_SHOULDER = 2
R_WRIST = 4
L_SHOULDER = 5
L_WRIST = 6

GESTURE_KEYPOINTS = (NOSE, NECK, R_SHOULDER, R_WRIST, L_SHOULDER, L_WRIST)

DEFAULT_MIN_CONFIDENCE = 0.3


class MalformedInput(ValueError):
    """Input bytes/line cannot be decoded into a pose frame."""


class ConfidenceOutOfRange(MalformedInput):
    """A keypoint confidence lies outside [0, 1]."""


@dataclass(frozen=True)
class Keypoint:
    x: float
    y: float
    confidence: float

    @property
    def detected(self) -> bool:
        return self.confidence > 0.0


@dataclass(frozen=True)
class PoseFrame:
    timestamp: float
    seq: int
    keypoints: tuple[Keypoint, ...]  # always exactly 18 slots

    def __post_init__(self):
        if len(self.keypoints) != NUM_KEYPOINTS:
            raise MalformedInput(
                f"pose frame needs {NUM_KEYPOINTS} keypoints, got {len(self.keypoints)}"
            )


@dataclass(frozen=True)
class NoPersonDetected:
    """Sentinel frame: the estimator saw nobody (or the record said so)."""

    timestamp: float = 0.0
    seq: int = 0


def _keypoints_from_flat(flat, *, where: str) -> tuple[Keypoint, ...]:
    if len(flat) == 25 * 3:
        raise MalformedInput(
            f"{where}: got 25 keypoints; only the 18-point layout is supported"
        )
    if len(flat) != NUM_KEYPOINTS * 3:
        raise MalformedInput(
            f"{where}: expected {NUM_KEYPOINTS * 3} values, got {len(flat)}"
        )
    points = []
    for i in range(NUM_KEYPOINTS):
        x, y, c = flat[3 * i : 3 * i + 3]
        if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in (x, y, c)):
            raise MalformedInput(f"{where}: non-numeric entry at keypoint {i}")
        if math.isnan(c) or not 0.0 <= c <= 1.0:
            raise ConfidenceOutOfRange(f"{where}: confidence {c} at keypoint {i}")
        points.append(Keypoint(float(x), float(y), float(c)))
    return tuple(points)


def parse_estimator_json(data, timestamp: float = 0.0, seq: int = 0):
    """Parse one pose-estimator JSON export into a PoseFrame.

    The export carries a ``people`` list; each person is a flat 54-element
    ``pose_keypoints_2d`` array of x, y, confidence triplets. Only the first
    person is used. Returns NoPersonDetected when the list is empty.
    """
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedInput(f"not UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"not JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("people"), list):
        raise MalformedInput("missing 'people' list")
    people = doc["people"]
    if not people:
        return NoPersonDetected(timestamp=timestamp, seq=seq)
    person = people[0]
    if not isinstance(person, dict) or not isinstance(person.get("pose_keypoints_2d"), list):
        raise MalformedInput("person entry missing 'pose_keypoints_2d'")
    keypoints = _keypoints_from_flat(person["pose_keypoints_2d"], where="pose_keypoints_2d")
    return PoseFrame(timestamp=timestamp, seq=seq, keypoints=keypoints)


def parse_replay_line(line):
    """Parse one replay JSONL record: {seq, t, keypoints:[[x,y,c]*18] | null}."""
    if isinstance(line, (bytes, bytearray)):
        try:
            line = line.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedInput(f"not UTF-8: {exc}") from exc
    try:
        doc = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"not JSON: {exc}") from exc
    return frame_from_record(doc)


def frame_from_record(doc):
    """Build a frame from an already-decoded {seq, t, keypoints} object
    (replay records and the wire FrameIn message share this shape)."""
    if not isinstance(doc, dict):
        raise MalformedInput("replay record must be a JSON object")
    try:
        seq = int(doc["seq"])
        t = float(doc["t"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad seq/t: {exc}") from exc
    kps = doc.get("keypoints")
    if kps is None:
        return NoPersonDetected(timestamp=t, seq=seq)
    if not isinstance(kps, list) or not all(isinstance(p, list) and len(p) == 3 for p in kps):
        raise MalformedInput("keypoints must be a list of [x,y,c] triplets or null")
    flat = [v for triplet in kps for v in triplet]
    keypoints = _keypoints_from_flat(flat, where="keypoints")
    return PoseFrame(timestamp=t, seq=seq, keypoints=keypoints)


def serialize_replay_line(frame) -> str:
    """Inverse of parse_replay_line (without the trailing newline)."""
    if isinstance(frame, NoPersonDetected):
        return json.dumps({"seq": frame.seq, "t": frame.timestamp, "keypoints": None})
    kps = [[k.x, k.y, k.confidence] for k in frame.keypoints]
    return json.dumps({"seq": frame.seq, "t": frame.timestamp, "keypoints": kps})


def is_valid_for_gesture(frame: PoseFrame, min_confidence: float = DEFAULT_MIN_CONFIDENCE) -> bool:
    """True iff the six gesture keypoints are confident enough and the
    shoulders are not coincident (which would make the scale reference zero).
    """
    for idx in GESTURE_KEYPOINTS:
        if frame.keypoints[idx].confidence < min_confidence:
            return False
    rs = frame.keypoints[R_SHOULDER]
    ls = frame.keypoints[L_SHOULDER]
    if rs.x == ls.x and rs.y == ls.y:
        return False
    return True
