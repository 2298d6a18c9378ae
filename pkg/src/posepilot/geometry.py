"""Geometric gesture features: two arm angles and two normalized distances.

The body reference frame is anchored at the neck. Arm vectors run neck ->
wrist; both are measured against the fixed reference direction r = (0, +1),
i.e. straight down in image coordinates. Nose-to-wrist distances are divided
by the shoulder distance, which makes the features invariant to uniform
scaling and translation of the whole skeleton.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from posepilot.keypoints import NOSE, NECK, R_SHOULDER, R_WRIST, L_SHOULDER, L_WRIST, PoseFrame

# Reference direction for arm angles: straight down in image coordinates.
REFERENCE_VECTOR = (0.0, 1.0)


class DegenerateVector(ValueError):
    """A zero-length vector has no direction."""


@dataclass(frozen=True)
class GestureFeatures:
    alpha1: float  # right-arm angle, degrees in [0, 180]
    alpha2: float  # left-arm angle, degrees in [0, 180]
    s1: float  # nose-to-right-wrist distance / shoulder distance
    s2: float  # nose-to-left-wrist distance / shoulder distance
    sr_pixels: float  # raw shoulder distance, for diagnostics


def angle_between(v, r=REFERENCE_VECTOR) -> float:
    """Angle in degrees between 2-vectors v and r, via the clamped arccos of
    the normalized dot product. Raises DegenerateVector on zero-length input.
    """
    vx, vy = v
    rx, ry = r
    nv = math.hypot(vx, vy)
    nr = math.hypot(rx, ry)
    if nv == 0.0 or nr == 0.0:
        raise DegenerateVector("cannot take the angle of a zero-length vector")
    cos_a = (vx * rx + vy * ry) / (nv * nr)
    cos_a = max(-1.0, min(1.0, cos_a))
    return math.degrees(math.acos(cos_a))


def _dist(p, q) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def extract_features(frame: PoseFrame) -> GestureFeatures:
    """Compute the four decision variables from a validated frame.

    Precondition: the frame passed gesture validation, so the six joints are
    present and the shoulders are distinct. Raises DegenerateVector if a
    wrist coincides with the neck.
    """
    kp = frame.keypoints
    neck = kp[NECK]
    a = (kp[R_WRIST].x - neck.x, kp[R_WRIST].y - neck.y)
    b = (kp[L_WRIST].x - neck.x, kp[L_WRIST].y - neck.y)
    alpha1 = angle_between(a)
    alpha2 = angle_between(b)
    sr = _dist(kp[R_SHOULDER], kp[L_SHOULDER])
    s1 = _dist(kp[NOSE], kp[R_WRIST]) / sr
    s2 = _dist(kp[NOSE], kp[L_WRIST]) / sr
    return GestureFeatures(alpha1=alpha1, alpha2=alpha2, s1=s1, s2=s2, sr_pixels=sr)
