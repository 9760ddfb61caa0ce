export interface SceneSummary {
  id: string;
  split: string;
  entities: number;
}

export interface Rle {
  size: [number, number]; // [height, width]
  counts: number[];
}

export interface SceneDetail {
  id: string;
  height: number;
  width: number;
  length: number;
  first_frame_uri: string;
  masks: { entity_id: number; rle: Rle }[];
  incircle_centers: [number, number][];
  incircle_radii: number[];
}

export type Point = [number, number]; // image-space pixels, pixel-center convention

export interface TrajectoryPayload {
  entity_id: number;
  points: Point[];
}

export type JobState = "queued" | "running" | "done" | "failed";

export interface Job {
  id: string;
  kind: string;
  state: JobState;
  artifacts: string[];
  error: string | null;
  resampled?: TrajectoryPayload[];
}
