// Editable 18-joint skeleton: the pose the playground streams to the bridge.
// Hidden joints are sent with confidence 0 (undetected), visible ones with 1.

import { PRESETS } from './presets';
import { FrameIn, validateFrameIn } from './protocol';

export const NUM_JOINTS = 18;

export const JOINT_NAMES = [
  'nose', 'neck',
  'r_shoulder', 'r_elbow', 'r_wrist',
  'l_shoulder', 'l_wrist', 'l_elbow',
  'r_hip', 'r_knee', 'r_ankle',
  'l_hip', 'l_knee', 'l_ankle',
  'r_eye', 'l_eye', 'r_ear', 'l_ear',
] as const;

// Limb connections for rendering (indices into the joint array).
export const BONES: [number, number][] = [
  [0, 1],
  [1, 2], [2, 3], [3, 4],
  [1, 5], [5, 7], [7, 6],
  [1, 8], [8, 9], [9, 10],
  [1, 11], [11, 12], [12, 13],
  [0, 14], [0, 15], [14, 16], [15, 17],
];

export interface Joint {
  x: number;
  y: number;
  visible: boolean;
}

export class EditorSkeleton {
  joints: Joint[];

  constructor(joints?: Joint[]) {
    if (joints) {
      if (joints.length !== NUM_JOINTS) {
        throw new Error(`skeleton needs ${NUM_JOINTS} joints, got ${joints.length}`);
      }
      this.joints = joints.map((j) => ({ ...j }));
    } else {
      this.joints = EditorSkeleton.fromPreset('wait').joints;
    }
  }

  static presetNames(): string[] {
    return PRESETS.presets.map((p) => p.command);
  }

  static fromPreset(command: string): EditorSkeleton {
    const preset = PRESETS.presets.find((p) => p.command === command);
    if (!preset) throw new Error(`unknown preset ${command}`);
    const joints = preset.joints.map(([x, y]) => ({ x, y, visible: true }));
    return new EditorSkeleton(joints);
  }

  setAllVisible(visible: boolean): void {
    for (const j of this.joints) j.visible = visible;
  }

  moveJoint(index: number, x: number, y: number): void {
    this.joints[index].x = x;
    this.joints[index].y = y;
  }

  jointAt(x: number, y: number, radius = 10): number | null {
    let best: number | null = null;
    let bestDist = radius;
    this.joints.forEach((j, i) => {
      const d = Math.hypot(j.x - x, j.y - y);
      if (d <= bestDist) {
        best = i;
        bestDist = d;
      }
    });
    return best;
  }

  toFrameIn(seq: number, t: number): FrameIn {
    const frame: FrameIn = {
      kind: 'frame_in',
      seq,
      t,
      keypoints: this.joints.map((j) => [j.x, j.y, j.visible ? 1.0 : 0.0]),
    };
    if (!validateFrameIn(frame)) throw new Error('editor produced an invalid frame');
    return frame;
  }
}
