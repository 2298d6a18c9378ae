"""Canonical pose fixtures: one skeleton per gesture.

These are the single source of truth for "what each gesture looks like" —
the test suite classifies them, the CLI writes them out as replay corpora,
and the browser playground loads them as presets. All coordinates are image
pixels for a subject centered in a 640x480 frame.
"""

from __future__ import annotations

import json
import os

from posepilot.classifier import Command
from posepilot.keypoints import NUM_KEYPOINTS, Keypoint, PoseFrame

# Shared base skeleton (arms at rest). Index layout matches PoseFrame:
# 0 nose, 1 neck, 2/5 shoulders, 4 right wrist, 6 left wrist; the remaining
# indices are elbows, hips, legs, eyes and ears, present for realism only.
_BASE = [
    (320, 150),  # 0 nose
    (320, 200),  # 1 neck
    (280, 200),  # 2 right shoulder
    (275, 270),  # 3 right elbow
    (270, 340),  # 4 right wrist
    (360, 200),  # 5 left shoulder
    (370, 340),  # 6 left wrist
    (365, 270),  # 7 left elbow
    (290, 360),  # 8 right hip
    (290, 480),  # 9 right knee
    (290, 600),  # 10 right ankle
    (350, 360),  # 11 left hip
    (350, 480),  # 12 left knee
    (350, 600),  # 13 left ankle
    (310, 140),  # 14 right eye
    (330, 140),  # 15 left eye
    (300, 150),  # 16 right ear
    (340, 150),  # 17 left ear
]

# Per-gesture joint overrides: {index: (x, y)}. Only wrists (and elbows, for
# plausibility) move between gestures.
_OVERRIDES: dict[Command, dict[int, tuple[float, float]]] = {
    Command.WAIT: {},
    Command.SNAPSHOT: {4: (300, 140), 3: (255, 265), 6: (340, 140), 7: (385, 265)},
    Command.BACKWARD: {6: (340, 140), 7: (385, 265)},
    Command.FORWARD: {4: (300, 140), 3: (255, 265)},
    Command.LEFT: {6: (480, 200), 7: (420, 200)},
    Command.RIGHT: {4: (160, 200), 3: (220, 200)},
    Command.UP: {4: (260, 80), 3: (265, 140), 6: (380, 80), 7: (375, 140)},
    Command.DOWN: {4: (220, 300), 3: (250, 250), 6: (420, 300), 7: (390, 250)},
    Command.TURN_CW: {4: (216, 260), 3: (245, 230), 6: (424, 140), 7: (395, 170)},
    Command.TURN_CCW: {4: (216, 140), 3: (245, 170), 6: (424, 260), 7: (395, 230)},
}

# Presentation order of the corpus (matches the gesture gallery).
GALLERY_ORDER = (
    Command.SNAPSHOT,
    Command.BACKWARD,
    Command.FORWARD,
    Command.LEFT,
    Command.RIGHT,
    Command.UP,
    Command.DOWN,
    Command.TURN_CW,
    Command.TURN_CCW,
    Command.WAIT,
)


def canonical_points(command: Command) -> list[tuple[float, float]]:
    """The 18 (x, y) joint positions for a gesture."""
    pts = list(_BASE)
    for idx, xy in _OVERRIDES[command].items():
        pts[idx] = xy
    return pts


def canonical_frame(command: Command, seq: int = 0, timestamp: float = 0.0,
                    confidence: float = 1.0) -> PoseFrame:
    pts = canonical_points(command)
    kps = tuple(Keypoint(float(x), float(y), confidence) for x, y in pts)
    assert len(kps) == NUM_KEYPOINTS
    return PoseFrame(timestamp=timestamp, seq=seq, keypoints=kps)


def corpus_frames(frames_per_gesture: int = 5, fps: float = 30.0):
    """The full gallery as one frame stream: each gesture held for
    frames_per_gesture consecutive frames, globally increasing seq/t.
    """
    seq = 0
    out = []
    for command in GALLERY_ORDER:
        for _ in range(frames_per_gesture):
            out.append(canonical_frame(command, seq=seq, timestamp=seq / fps))
            seq += 1
    return out


def write_corpus(out_dir, frames_per_gesture: int = 5, fps: float = 30.0) -> list[str]:
    """Write one replay JSONL per gesture; returns the paths written."""
    from posepilot.keypoints import serialize_replay_line

    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for command in GALLERY_ORDER:
        path = os.path.join(out_dir, f"{command.value}.jsonl")
        with open(path, "w", encoding="utf-8") as fh:
            for i in range(frames_per_gesture):
                frame = canonical_frame(command, seq=i, timestamp=i / fps)
                fh.write(serialize_replay_line(frame) + "\n")
        paths.append(path)
    return paths


def presets_document() -> dict:
    """JSON document the browser playground consumes as its preset gallery."""
    return {
        "canvas": {"width": 640, "height": 640},
        "presets": [
            {"command": c.value, "joints": [[float(x), float(y)] for x, y in canonical_points(c)]}
            for c in GALLERY_ORDER
        ],
    }


def write_presets(path) -> None:
    """Write the preset gallery as JSON, or as a TypeScript module when the
    path ends in .ts (for the browser playground, which cannot import JSON)."""
    doc = presets_document()
    with open(path, "w", encoding="utf-8") as fh:
        if str(path).endswith(".ts"):
            fh.write("// generated by `posepilot fixtures --presets`; do not edit\n")
            fh.write("export const PRESETS = ")
            json.dump(doc, fh, indent=2)
            fh.write(" as const;\n")
        else:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
