import pytest
from hypothesis import given, strategies as st

from posepilot.classifier import Command
from posepilot.debounce import HOVER, Debouncer


def run(observations, **kwargs):
    d = Debouncer(**kwargs)
    return [d.step(obs) for obs in observations]


class TestStep:
    def test_second_consecutive_emits(self):
        assert run([Command.WAIT, Command.WAIT]) == [None, Command.WAIT]

    def test_alternation_stays_silent(self):
        assert run([Command.UP, Command.LEFT, Command.UP]) == [None, None, None]

    def test_two_no_detections_emit_hover(self):
        assert run([None, None]) == [None, HOVER]

    def test_motion_command_reemits_while_held(self):
        assert run([Command.UP] * 4) == [None, Command.UP, Command.UP, Command.UP]

    def test_hover_reemits_while_held(self):
        assert run([None] * 4) == [None, HOVER, HOVER, HOVER]

    def test_snapshot_edge_triggered(self):
        obs = [Command.SNAPSHOT] * 5
        assert run(obs) == [None, Command.SNAPSHOT, None, None, None]

    def test_snapshot_refires_after_leaving_pose(self):
        obs = [Command.SNAPSHOT, Command.SNAPSHOT, None, None,
               Command.SNAPSHOT, Command.SNAPSHOT]
        assert run(obs) == [None, Command.SNAPSHOT, None, HOVER,
                            None, Command.SNAPSHOT]

    def test_change_resets_count(self):
        assert run([Command.UP, Command.DOWN, Command.DOWN]) == [None, None, Command.DOWN]

    def test_keepalive_interval(self):
        got = run([Command.UP] * 6, keepalive=2)
        assert got == [None, Command.UP, None, Command.UP, None, Command.UP]

    def test_threshold_three(self):
        got = run([Command.UP] * 3, threshold=3)
        assert got == [None, None, Command.UP]

    def test_bad_threshold(self):
        with pytest.raises(ValueError):
            Debouncer(threshold=0)


class TestReset:
    def test_reset_restarts_count(self):
        d = Debouncer()
        d.step(Command.UP)
        d.reset()
        assert d.step(Command.UP) is None
        assert d.step(Command.UP) is Command.UP

    def test_reset_idempotent(self):
        d = Debouncer()
        d.step(Command.UP)
        d.reset()
        state = (d._last_obs, d._count, d.last_emitted)
        d.reset()
        assert (d._last_obs, d._count, d.last_emitted) == state


observation = st.one_of(st.none(), st.sampled_from(list(Command)))


class TestProperties:
    @given(st.lists(observation, max_size=200))
    def test_emission_requires_two_consecutive(self, observations):
        emitted = run(observations)
        for i, e in enumerate(emitted):
            if e is None:
                continue
            if e == HOVER:
                assert observations[i] is None and observations[i - 1] is None
            else:
                assert observations[i] is e and observations[i - 1] is e

    @given(st.sampled_from(list(Command)), st.integers(2, 50))
    def test_first_emit_at_step_two(self, command, n):
        emitted = run([command] * n)
        assert emitted[0] is None
        assert emitted[1] is command

    @given(st.lists(observation, max_size=200))
    def test_snapshot_once_per_run(self, observations):
        emitted = run(observations)
        for i, e in enumerate(emitted):
            if e is Command.SNAPSHOT:
                # exactly at the entry confirmation: two snapshots in, and
                # either the run started there or the pre-run frame differed
                assert observations[i] is Command.SNAPSHOT
                assert observations[i - 1] is Command.SNAPSHOT
                assert i - 2 < 0 or observations[i - 2] is not Command.SNAPSHOT
