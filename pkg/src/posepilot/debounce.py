"""Temporal smoothing of per-frame classifications.

A classification is only acted on once it has been observed on N consecutive
frames (N = 2 by default); likewise N consecutive no-detections trigger the
hover fallback. Motion commands are re-emitted while held (they are velocity
setpoints downstream), the snapshot command fires once per contiguous run.
"""

from __future__ import annotations

from posepilot.classifier import Command

# Emitted when no command has been detected for `threshold` consecutive frames.
HOVER = "hover"

# step() observations: a Command, or None meaning "no command detected".
# step() results: a Command, HOVER, or None meaning "nothing emitted".


class Debouncer:
    def __init__(self, threshold: int = 2, keepalive: int = 1):
        if threshold < 1:
            raise ValueError("threshold must be >= 1")
        if keepalive < 1:
            raise ValueError("keepalive must be >= 1")
        self.threshold = threshold
        self.keepalive = keepalive
        self.reset()

    def reset(self) -> None:
        self._last_obs = _EMPTY
        self._count = 0
        self.last_emitted = None

    def step(self, obs: Command | None):
        """Feed one observation; returns the emission for this step."""
        if obs == self._last_obs:
            self._count += 1
        else:
            self._last_obs = obs
            self._count = 1

        if self._count < self.threshold:
            return None
        held = self._count - self.threshold  # 0 on the confirming frame
        if obs is None:
            self.last_emitted = HOVER
            return HOVER if held % self.keepalive == 0 else None
        if obs is Command.SNAPSHOT:
            # edge-triggered: one photo per pose entry, not one per frame
            if held == 0:
                self.last_emitted = obs
                return obs
            return None
        self.last_emitted = obs
        return obs if held % self.keepalive == 0 else None


class _Empty:
    """Distinct from both None and any Command."""

    def __repr__(self):
        return "<empty>"


_EMPTY = _Empty()
