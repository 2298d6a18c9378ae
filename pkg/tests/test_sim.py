import math

import numpy as np
import pytest

from posepilot.classifier import Command
from posepilot.debounce import HOVER
from posepilot.sim import (
    DroneSimulator,
    DroneState,
    Setpoint,
    VehicleParams,
    attitude_acceleration,
    command_to_setpoint,
    integrate_rigid_body,
    step_kinematic,
    translational_acceleration,
    wrap_angle,
)

M, G = 0.5, 9.81


def state(attitude=(0, 0, 0), **kwargs):
    return DroneState(attitude=np.array(attitude, dtype=float), **kwargs)


class TestTranslationalAcceleration:
    def test_hover_equilibrium_exact(self):
        for psi in (0.0, 0.7, -2.0, math.pi):
            acc = translational_acceleration(
                state(attitude=(0, 0, psi)), VehicleParams(thrust=M * G))
            assert acc[0] == 0.0 and acc[1] == 0.0 and acc[2] == 0.0

    def test_free_fall(self):
        acc = translational_acceleration(state(), VehicleParams(thrust=0.0))
        assert np.allclose(acc, [0, 0, -G])

    def test_pitched_hover_thrust(self):
        # independent evaluation: theta=0.1, phi=psi=0, T=mg
        acc = translational_acceleration(
            state(attitude=(0.0, 0.1, 0.0)), VehicleParams(thrust=M * G))
        expected = np.array([G * math.sin(0.1), 0.0, G * math.cos(0.1) - G])
        assert np.allclose(acc, expected, atol=1e-9)
        assert acc[0] == pytest.approx(0.97936, abs=1e-5)
        assert acc[2] == pytest.approx(-0.04901, abs=1e-5)


class TestAttitudeAcceleration:
    @pytest.mark.parametrize("tau", [(0, 0, 0), (0.1, 0, 0), (0, -0.2, 0.3)])
    def test_identity(self, tau):
        assert np.allclose(attitude_acceleration(VehicleParams(torques=tau)), tau)


class TestCommandToSetpoint:
    def test_wait_and_hover_are_zero(self):
        for cmd in (Command.WAIT, HOVER, None):
            sp = command_to_setpoint(cmd)
            assert np.allclose(sp.velocity, 0) and sp.yaw_rate == 0 and not sp.snapshot

    def test_up(self):
        sp = command_to_setpoint(Command.UP)
        assert np.allclose(sp.velocity, [0, 0, 0.5]) and sp.yaw_rate == 0

    def test_snapshot_flag(self):
        sp = command_to_setpoint(Command.SNAPSHOT)
        assert sp.snapshot and np.allclose(sp.velocity, 0)

    def test_turn_signs(self):
        assert command_to_setpoint(Command.TURN_CW).yaw_rate < 0
        assert command_to_setpoint(Command.TURN_CCW).yaw_rate > 0


class TestKinematicStep:
    def test_zero_setpoint_holds_position(self):
        s0 = state()
        s1 = step_kinematic(s0, Setpoint(), 0.05)
        assert np.allclose(s1.position, s0.position)
        assert s1.attitude[2] == 0.0

    def test_forward_axis_aligned(self):
        s1 = state()
        for _ in range(10):
            s1 = step_kinematic(s1, Setpoint(velocity=np.array([0.5, 0, 0])), 0.1)
        assert s1.position[0] == pytest.approx(0.5)
        assert s1.position[1] == pytest.approx(0.0)

    def test_forward_rotated_by_yaw(self):
        s0 = state(attitude=(0, 0, math.pi / 2))
        s1 = s0
        for _ in range(10):
            s1 = step_kinematic(s1, Setpoint(velocity=np.array([0.5, 0, 0])), 0.1)
        assert s1.position[1] == pytest.approx(0.5, abs=1e-12)
        assert s1.position[0] == pytest.approx(0.0, abs=1e-12)

    def test_ground_clamp(self):
        s0 = DroneState(position=np.array([0.0, 0.0, 0.01]))
        s1 = step_kinematic(s0, Setpoint(velocity=np.array([0, 0, -1.0])), 0.1)
        assert s1.position[2] == 0.0

    def test_dt_bounds(self):
        with pytest.raises(ValueError):
            step_kinematic(state(), Setpoint(), 0.2)


class TestRigidBodyIntegration:
    def test_free_fall_matches_closed_form(self):
        p = VehicleParams(thrust=0.0)
        s = DroneState(position=np.array([0.0, 0.0, 10.0]))
        dt, steps = 0.01, 100
        for _ in range(steps):
            s = integrate_rigid_body(s, p, dt)
        expected = 10.0 - 0.5 * G * (dt * steps) ** 2
        assert s.position[2] == pytest.approx(expected, abs=1e-3)

    def test_ground_halts_descent(self):
        p = VehicleParams(thrust=0.0)
        s = DroneState(position=np.array([0.0, 0.0, 0.05]))
        for _ in range(200):
            s = integrate_rigid_body(s, p, 0.01)
        assert s.position[2] == 0.0
        assert s.velocity[2] >= 0.0


class TestDynamicMode:
    def test_hover_is_fixed_point(self):
        sim = DroneSimulator(mode="dynamic")
        before = sim.state
        sim.step(0.01)
        assert np.allclose(sim.state.position, before.position, atol=1e-9)
        assert np.allclose(sim.state.velocity, before.velocity, atol=1e-9)
        assert np.allclose(sim.state.attitude, before.attitude, atol=1e-9)

    def test_up_rises(self):
        sim = DroneSimulator(mode="dynamic")
        z0 = sim.state.position[2]
        sim.setpoint = command_to_setpoint(Command.UP)
        sim.run(2.0, 0.01)
        assert sim.state.position[2] > z0

    def test_turn_signs(self):
        for cmd, sign in ((Command.TURN_CCW, 1), (Command.TURN_CW, -1)):
            sim = DroneSimulator(mode="dynamic")
            sim.setpoint = command_to_setpoint(cmd)
            sim.run(1.0, 0.01)
            assert sign * sim.state.attitude[2] > 0

    def test_yaw_stays_wrapped(self):
        sim = DroneSimulator(mode="kinematic")
        sim.setpoint = command_to_setpoint(Command.TURN_CW)
        for _ in range(600):  # 20 s at 0.5 rad/s: several full turns
            sim.step(1.0 / 30.0)
            assert abs(sim.state.attitude[2]) <= math.pi + 1e-12


AXIS_SIGNS = {
    Command.FORWARD: (0, +1),
    Command.BACKWARD: (0, -1),
    Command.LEFT: (1, +1),
    Command.RIGHT: (1, -1),
    Command.UP: (2, +1),
    Command.DOWN: (2, -1),
}


class TestCommandSemantics:
    @pytest.mark.parametrize("mode", ["kinematic", "dynamic"])
    @pytest.mark.parametrize("command,axis_sign", list(AXIS_SIGNS.items()))
    def test_motion_direction(self, mode, command, axis_sign):
        axis, sign = axis_sign
        sim = DroneSimulator(mode=mode, initial_z=5.0)
        start = sim.state.position.copy()
        sim.setpoint = command_to_setpoint(command)
        dt = 0.01 if mode == "dynamic" else 1.0 / 30.0
        sim.run(2.0, dt)
        delta = sim.state.position - start
        assert sign * delta[axis] > 0
        others = [abs(delta[i]) for i in range(3) if i != axis]
        assert max(others) < abs(delta[axis])

    @pytest.mark.parametrize("command,axis_sign", list(AXIS_SIGNS.items()))
    def test_kinematic_dynamic_sign_agreement(self, command, axis_sign):
        # displacement sign agrees between modes for a 3 s hold
        axis, _ = axis_sign
        deltas = []
        for mode, dt in (("kinematic", 1.0 / 30.0), ("dynamic", 0.01)):
            sim = DroneSimulator(mode=mode, initial_z=5.0)
            start = sim.state.position.copy()
            sim.setpoint = command_to_setpoint(command)
            sim.run(3.0, dt)
            deltas.append(sim.state.position[axis] - start[axis])
        assert math.copysign(1, deltas[0]) == math.copysign(1, deltas[1])


class TestSnapshot:
    def test_snapshot_counts_and_holds_position(self):
        sim = DroneSimulator(mode="kinematic")
        pos0 = sim.state.position.copy()
        assert sim.apply_emission(Command.SNAPSHOT) is True
        sim.run(1.0, 1.0 / 30.0)
        assert sim.snapshot_count == 1
        assert np.allclose(sim.state.position, pos0)

    def test_non_snapshot_emissions_do_not_count(self):
        sim = DroneSimulator(mode="kinematic")
        assert sim.apply_emission(Command.UP) is False
        assert sim.apply_emission(HOVER) is False
        assert sim.apply_emission(None) is False
        assert sim.snapshot_count == 0


class TestWrapAngle:
    @pytest.mark.parametrize("a,expected", [
        (0.0, 0.0),
        (math.pi, math.pi),
        (-math.pi, math.pi),
        (3 * math.pi, math.pi),
        (2 * math.pi + 0.1, 0.1),
    ])
    def test_wrap(self, a, expected):
        assert wrap_angle(a) == pytest.approx(expected, abs=1e-12)
