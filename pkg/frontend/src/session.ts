import { ApiClient, ApiError, pollJob } from "./api.js";
import { hitTest, insideMask, type DecodedMask } from "./hittest.js";
import { clampToFrame, decimate } from "./polyline.js";
import { decodeRle } from "./rle.js";
import type { Job, Point, SceneDetail, TrajectoryPayload } from "./types.js";

export type SessionStatus = "idle" | "submitting" | "polling" | "done" | "error";

/**
 * One editing session on a scene: entity selection, per-entity drawn
 * polylines, and a single in-flight generation job.
 */
export class CanvasSession {
  readonly masks: DecodedMask[];
  selected: number | null = null;
  polylines = new Map<number, Point[]>();
  status: SessionStatus = "idle";
  lastError: string | null = null;
  job: Job | null = null;
  private drawing: Point[] | null = null;
  private inFlight = false;

  constructor(
    readonly scene: SceneDetail,
    private api: ApiClient,
  ) {
    this.masks = scene.masks.map((m) => ({ entityId: m.entity_id, bits: decodeRle(m.rle) }));
  }

  /** Click: select the topmost entity under the point, or deselect on background. */
  select(point: Point): number | null {
    this.selected = hitTest(this.masks, point, this.scene.height, this.scene.width);
    return this.selected;
  }

  /** Begin a drag; must start inside the selected entity's mask. */
  startDrag(point: Point): void {
    if (this.selected === null) {
      throw new Error("select an entity before dragging");
    }
    if (!insideMask(this.masks, this.selected, point, this.scene.height, this.scene.width)) {
      throw new Error("drag must start inside the selected entity");
    }
    this.drawing = [point];
  }

  extendDrag(point: Point): void {
    if (this.drawing) this.drawing.push(point);
  }

  /** Finish the drag: decimated to <= 64 points, clamped, anchored at pointer-down. */
  endDrag(): Point[] | null {
    if (!this.drawing || this.selected === null) {
      this.drawing = null;
      return null;
    }
    const anchor = this.drawing[0];
    let pts = decimate(this.drawing, 64);
    pts = clampToFrame(pts, this.scene.width, this.scene.height);
    pts[0] = anchor; // pointer-down position stays exact
    this.polylines.set(this.selected, pts); // redo replaces the prior polyline
    this.drawing = null;
    return pts;
  }

  clearPolyline(entityId: number): void {
    this.polylines.delete(entityId);
  }

  get canSubmit(): boolean {
    return this.polylines.size > 0 && !this.inFlight;
  }

  /**
   * Entities without a drawn polyline stay put: they get a single-point
   * trajectory at their incircle center (the server resamples to length L).
   */
  buildRequest(): TrajectoryPayload[] {
    const out: TrajectoryPayload[] = [];
    for (const mask of this.masks) {
      const drawn = this.polylines.get(mask.entityId);
      if (drawn) {
        out.push({ entity_id: mask.entityId, points: drawn });
      } else {
        const center = this.scene.incircle_centers[mask.entityId];
        out.push({ entity_id: mask.entityId, points: [center] });
      }
    }
    return out;
  }

  async submit(seed = 0, pollOpts = {}): Promise<Job> {
    if (this.polylines.size === 0) {
      throw new Error("draw at least one trajectory first");
    }
    if (this.inFlight) {
      throw new Error("a job is already in flight for this session");
    }
    this.inFlight = true;
    this.status = "submitting";
    this.lastError = null;
    try {
      const jobId = await this.api.generate(this.scene.id, this.buildRequest(), seed);
      this.status = "polling";
      const job = await pollJob(this.api, jobId, pollOpts);
      this.job = job;
      if (job.state === "failed") {
        this.status = "error";
        this.lastError = job.error ?? "generation failed";
      } else {
        this.status = "done";
      }
      return job;
    } catch (err) {
      this.status = "error";
      this.lastError =
        err instanceof ApiError ? `${err.status}: ${err.message}` : String(err);
      throw err;
    } finally {
      this.inFlight = false;
    }
  }
}
