"""Rule-based gesture classification.

Each rule constrains the two arm angles to intervals (or leaves one
unconstrained) and requires a conjunction of normalized-distance
inequalities. Rules are evaluated in a fixed priority order; the first match
wins. The intervals below overlap on purpose (e.g. an arm at exactly 82
degrees satisfies both the "up" and "turn" angle ranges), so first-match
order is part of the contract.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field

from posepilot.geometry import DegenerateVector, GestureFeatures, extract_features
from posepilot.keypoints import PoseFrame


class Command(str, enum.Enum):
    SNAPSHOT = "snapshot"
    BACKWARD = "backward"
    FORWARD = "forward"
    LEFT = "left"
    RIGHT = "right"
    UP = "up"
    DOWN = "down"
    TURN_CW = "turn_cw"
    TURN_CCW = "turn_ccw"
    WAIT = "wait"


@dataclass(frozen=True)
class AngleInterval:
    lo: float
    hi: float
    hi_closed: bool = False  # [lo, hi) by default

    def contains(self, angle: float) -> bool:
        if angle < self.lo:
            return False
        return angle <= self.hi if self.hi_closed else angle < self.hi


# Distance predicates: (feature, direction). "lt" means s < 1, "gt" means s > 1.
# Equality (s == 1) satisfies neither; isolated no-match frames are absorbed
# by debouncing downstream.
_PREDICATES = {
    "s1<1": ("s1", "lt"),
    "s1>1": ("s1", "gt"),
    "s2<1": ("s2", "lt"),
    "s2>1": ("s2", "gt"),
}


@dataclass(frozen=True)
class GestureRule:
    command: Command
    alpha1: AngleInterval | None
    alpha2: AngleInterval | None
    predicates: tuple[str, ...] = field(default_factory=tuple)

    def matches(self, f: GestureFeatures) -> bool:
        if self.alpha1 is not None and not self.alpha1.contains(f.alpha1):
            return False
        if self.alpha2 is not None and not self.alpha2.contains(f.alpha2):
            return False
        for name in self.predicates:
            feat, direction = _PREDICATES[name]
            value = getattr(f, feat)
            ok = value < 1.0 if direction == "lt" else value > 1.0
            if not ok:
                return False
        return True


def builtin_rule_table() -> tuple[GestureRule, ...]:
    """The ten built-in gesture rules, in priority order."""
    iv = AngleInterval
    return (
        GestureRule(Command.SNAPSHOT, None, None, ("s1<1", "s2<1")),
        GestureRule(Command.BACKWARD, iv(0, 40), None, ("s2<1",)),
        GestureRule(Command.FORWARD, None, iv(0, 40), ("s1<1",)),
        GestureRule(Command.LEFT, iv(0, 40), iv(70, 100), ("s1>1",)),
        GestureRule(Command.RIGHT, iv(70, 100), iv(0, 40), ("s2>1",)),
        GestureRule(Command.UP, iv(80, 180), iv(80, 180, hi_closed=True), ("s1>1", "s2>1")),
        GestureRule(Command.DOWN, iv(40, 80), iv(40, 80), ("s1>1", "s2>1")),
        GestureRule(Command.TURN_CW, iv(40, 85), iv(85, 180), ("s1>1", "s2>1")),
        GestureRule(Command.TURN_CCW, iv(85, 180), iv(40, 85), ("s1>1", "s2>1")),
        GestureRule(Command.WAIT, iv(0, 40), iv(0, 40), ("s1>1", "s2>1")),
    )


def load_rule_table(path) -> tuple[GestureRule, ...]:
    """Load a rule table from JSON: a list of
    {command, alpha1: [lo, hi] | {lo, hi, hi_closed} | null, alpha2: ..., predicates: [...]}.
    Semantics are identical to the built-in table.
    """
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    if not isinstance(doc, list):
        raise ValueError("rule table must be a JSON list")

    def interval(spec):
        if spec is None:
            return None
        if isinstance(spec, list):
            lo, hi = spec
            return AngleInterval(float(lo), float(hi))
        return AngleInterval(float(spec["lo"]), float(spec["hi"]), bool(spec.get("hi_closed", False)))

    rules = []
    for row in doc:
        preds = tuple(row.get("predicates", ()))
        for p in preds:
            if p not in _PREDICATES:
                raise ValueError(f"unknown predicate {p!r}")
        rules.append(
            GestureRule(
                command=Command(row["command"]),
                alpha1=interval(row.get("alpha1")),
                alpha2=interval(row.get("alpha2")),
                predicates=preds,
            )
        )
    return tuple(rules)


def classify_features(f: GestureFeatures, rules=None) -> Command | None:
    """First matching rule's command, or None if nothing matches."""
    for rule in rules if rules is not None else builtin_rule_table():
        if rule.matches(f):
            return rule.command
    return None


def classify_frame(frame: PoseFrame, rules=None) -> Command | None:
    """Extract features then classify. Degenerate geometry (wrist on the
    neck) and no-match both map to None ("no command detected").
    """
    try:
        features = extract_features(frame)
    except DegenerateVector:
        return None
    return classify_features(features, rules)
