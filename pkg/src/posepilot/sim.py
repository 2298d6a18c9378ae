"""Quadrotor simulator executing high-level commands.

World frame is z-up; attitude is roll/pitch/yaw Euler angles. Two modes:

- kinematic: first-order integration of the commanded body velocity, always
  level. Cheap, exact, good for desk-scale tests and the UI.
- dynamic: rigid-body translational model driven by total thrust and the
  simplified attitude model (angular accelerations equal the commanded
  torques), with a PD velocity -> attitude -> torque cascade on top.

Commands map to body-frame velocity setpoints (forward/left/up) plus a yaw
rate; "clockwise" seen from above is a negative yaw rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from posepilot.classifier import Command
from posepilot.debounce import HOVER


def _vec3(v) -> np.ndarray:
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    return a


def wrap_angle(a: float) -> float:
    """Wrap to (-pi, pi]."""
    a = math.fmod(a + math.pi, 2.0 * math.pi)
    if a <= 0.0:
        a += 2.0 * math.pi
    return a - math.pi


@dataclass(frozen=True)
class DroneState:
    position: np.ndarray = field(default_factory=lambda: np.zeros(3))
    velocity: np.ndarray = field(default_factory=lambda: np.zeros(3))
    attitude: np.ndarray = field(default_factory=lambda: np.zeros(3))  # roll, pitch, yaw
    angular_rate: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        object.__setattr__(self, "position", _vec3(self.position))
        object.__setattr__(self, "velocity", _vec3(self.velocity))
        object.__setattr__(self, "attitude", _vec3(self.attitude))
        object.__setattr__(self, "angular_rate", _vec3(self.angular_rate))


@dataclass
class VehicleParams:
    mass: float = 0.5  # kg
    gravity: float = 9.81  # m/s^2
    thrust: float = 0.0  # N, current commanded total thrust
    torques: tuple[float, float, float] = (0.0, 0.0, 0.0)  # rad/s^2 commands

    def __post_init__(self):
        if self.mass <= 0 or self.gravity <= 0:
            raise ValueError("mass and gravity must be positive")
        if self.thrust < 0:
            raise ValueError("thrust must be non-negative")


@dataclass(frozen=True)
class Setpoint:
    velocity: np.ndarray = field(default_factory=lambda: np.zeros(3))  # body: fwd, left, up
    yaw_rate: float = 0.0
    snapshot: bool = False

    def __post_init__(self):
        object.__setattr__(self, "velocity", _vec3(self.velocity))


HOVER_SETPOINT = Setpoint()

DEFAULT_LINEAR_SPEED = 0.5  # m/s
DEFAULT_YAW_SPEED = 0.5  # rad/s


def command_to_setpoint(cmd, linear_speed: float = DEFAULT_LINEAR_SPEED,
                        yaw_speed: float = DEFAULT_YAW_SPEED) -> Setpoint:
    """Map a high-level command (or HOVER) to a motion setpoint."""
    if cmd == HOVER or cmd in (Command.WAIT, None):
        return Setpoint()
    if cmd is Command.SNAPSHOT:
        return Setpoint(snapshot=True)
    v = np.zeros(3)
    yaw_rate = 0.0
    if cmd is Command.FORWARD:
        v[0] = linear_speed
    elif cmd is Command.BACKWARD:
        v[0] = -linear_speed
    elif cmd is Command.LEFT:
        v[1] = linear_speed
    elif cmd is Command.RIGHT:
        v[1] = -linear_speed
    elif cmd is Command.UP:
        v[2] = linear_speed
    elif cmd is Command.DOWN:
        v[2] = -linear_speed
    elif cmd is Command.TURN_CW:
        yaw_rate = -yaw_speed
    elif cmd is Command.TURN_CCW:
        yaw_rate = yaw_speed
    else:
        raise ValueError(f"unknown command {cmd!r}")
    return Setpoint(velocity=v, yaw_rate=yaw_rate)


def translational_acceleration(state: DroneState, params: VehicleParams) -> np.ndarray:
    """World-frame acceleration of the rigid body under total thrust T:

        (T/m) * [ s(psi) s(phi) + c(psi) s(theta) c(phi),
                 -c(psi) s(phi) + s(psi) s(theta) c(phi),
                  c(theta) c(phi) ]  -  [0, 0, g]
    """
    phi, theta, psi = state.attitude
    t_over_m = params.thrust / params.mass
    sph, cph = math.sin(phi), math.cos(phi)
    sth, cth = math.sin(theta), math.cos(theta)
    sps, cps = math.sin(psi), math.cos(psi)
    return np.array([
        t_over_m * (sps * sph + cps * sth * cph),
        t_over_m * (-cps * sph + sps * sth * cph),
        t_over_m * (cth * cph) - params.gravity,
    ])


def attitude_acceleration(params: VehicleParams) -> np.ndarray:
    """Simplified attitude model: angular accelerations equal the torque commands."""
    return np.asarray(params.torques, dtype=float)


def integrate_rigid_body(state: DroneState, params: VehicleParams, dt: float) -> DroneState:
    """One integration step of the rigid-body model under the thrust and
    torques currently set in params. Attitude is advanced first
    (semi-implicit); position uses the half-acceleration term so constant
    acceleration integrates exactly. Ground plane clamps z >= 0.
    """
    if not 0.0 < dt <= 0.05:
        raise ValueError("dynamic step requires 0 < dt <= 0.05")
    ang_acc = attitude_acceleration(params)
    rate = state.angular_rate + ang_acc * dt
    att = np.array([wrap_angle(a) for a in state.attitude + rate * dt])
    tilted = replace(state, attitude=att)
    acc = translational_acceleration(tilted, params)
    pos = state.position + state.velocity * dt + 0.5 * acc * dt * dt
    vel = state.velocity + acc * dt
    if pos[2] < 0.0:
        pos = pos.copy()
        vel = vel.copy()
        pos[2] = 0.0
        vel[2] = max(vel[2], 0.0)
    return DroneState(position=pos, velocity=vel, attitude=att, angular_rate=rate)


def step_kinematic(state: DroneState, setpoint: Setpoint, dt: float) -> DroneState:
    """First-order step: rotate the body velocity by yaw, integrate, stay level."""
    if not 0.0 < dt <= 0.1:
        raise ValueError("kinematic step requires 0 < dt <= 0.1")
    psi = state.attitude[2]
    c, s = math.cos(psi), math.sin(psi)
    vx, vy, vz = setpoint.velocity
    v_world = np.array([c * vx - s * vy, s * vx + c * vy, vz])
    pos = state.position + v_world * dt
    if pos[2] < 0.0:
        pos = pos.copy()
        pos[2] = 0.0
    psi = wrap_angle(psi + setpoint.yaw_rate * dt)
    return DroneState(
        position=pos,
        velocity=v_world,
        attitude=np.array([0.0, 0.0, psi]),
        angular_rate=np.array([0.0, 0.0, setpoint.yaw_rate]),
    )


@dataclass
class CascadeGains:
    vel_kp: float = 1.0
    vel_kd: float = 0.2
    att_kp: float = 8.0
    att_kd: float = 2.0
    max_tilt: float = 0.4  # rad


class DroneSimulator:
    """Stateful simulator: holds the vehicle state, the active setpoint, the
    PD cascade memory (dynamic mode) and the snapshot counter.
    """

    def __init__(self, mode: str = "kinematic", params: VehicleParams | None = None,
                 gains: CascadeGains | None = None, initial_z: float = 1.0):
        if mode not in ("kinematic", "dynamic"):
            raise ValueError(f"unknown sim mode {mode!r}")
        self.mode = mode
        self.params = params or VehicleParams()
        self.gains = gains or CascadeGains()
        self.state = DroneState(position=np.array([0.0, 0.0, float(initial_z)]))
        self.setpoint = HOVER_SETPOINT
        self.snapshot_count = 0
        self.last_command = None
        self.time = 0.0
        self._prev_vel_error = np.zeros(3)

    def apply_emission(self, emission) -> bool:
        """Apply a debouncer emission (Command, HOVER, or None).

        Returns True when a snapshot was captured on this call.
        """
        if emission is None:
            return False
        self.last_command = emission if isinstance(emission, str) else emission.value
        sp = command_to_setpoint(emission)
        if sp.snapshot:
            self.snapshot_count += 1
            self.setpoint = Setpoint()  # hold position while capturing
            return True
        self.setpoint = sp
        return False

    def step(self, dt: float) -> DroneState:
        if self.mode == "kinematic":
            self.state = step_kinematic(self.state, self.setpoint, dt)
        else:
            self._step_dynamic(dt)
        self.time += dt
        return self.state

    def run(self, duration: float, dt: float) -> DroneState:
        steps = max(1, round(duration / dt))
        for _ in range(steps):
            self.step(dt)
        return self.state

    def _step_dynamic(self, dt: float) -> None:
        g = self.gains
        p = self.params
        state = self.state
        psi = state.attitude[2]
        c, s = math.cos(psi), math.sin(psi)
        vx, vy, vz = self.setpoint.velocity
        v_des = np.array([c * vx - s * vy, s * vx + c * vy, vz])

        err = v_des - state.velocity
        d_err = (err - self._prev_vel_error) / dt if self.time > 0.0 else np.zeros(3)
        self._prev_vel_error = err
        a_cmd = g.vel_kp * err + g.vel_kd * d_err

        # thrust from the vertical channel, attitude targets from the horizontal
        phi, theta, _ = state.attitude
        ctc = max(math.cos(theta) * math.cos(phi), 0.1)
        thrust = max(p.mass * (p.gravity + a_cmd[2]) / ctc, 0.0)
        t_over_m = max(thrust / p.mass, 1e-6)
        phi_des = (s * a_cmd[0] - c * a_cmd[1]) / t_over_m
        theta_des = (c * a_cmd[0] + s * a_cmd[1]) / t_over_m
        phi_des = max(-g.max_tilt, min(g.max_tilt, phi_des))
        theta_des = max(-g.max_tilt, min(g.max_tilt, theta_des))

        torques = (
            g.att_kp * (phi_des - state.attitude[0]) - g.att_kd * state.angular_rate[0],
            g.att_kp * (theta_des - state.attitude[1]) - g.att_kd * state.angular_rate[1],
            g.att_kp * (self.setpoint.yaw_rate - state.angular_rate[2]),
        )
        p.thrust = thrust
        p.torques = torques
        self.state = integrate_rigid_body(state, p, dt)

    def telemetry(self) -> dict:
        st = self.state
        return {
            "t": round(self.time, 9),
            "position": [round(v, 9) for v in st.position],
            "attitude": [round(v, 9) for v in st.attitude],
            "velocity": [round(v, 9) for v in st.velocity],
            "last_command": self.last_command,
            "snapshot_count": self.snapshot_count,
        }
