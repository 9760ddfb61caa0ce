import type { Job, SceneDetail, SceneSummary, TrajectoryPayload } from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private base = "",
    private fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchImpl(this.base + path, init);
    if (!res.ok) {
      let detail = res.statusText;
      try {
        const body = await res.json();
        if (body && body.detail) detail = JSON.stringify(body.detail);
      } catch {
        // non-JSON error body; keep statusText
      }
      throw new ApiError(res.status, detail);
    }
    return (await res.json()) as T;
  }

  listScenes(): Promise<SceneSummary[]> {
    return this.request<SceneSummary[]>("/api/scenes");
  }

  getScene(id: string): Promise<SceneDetail> {
    return this.request<SceneDetail>(`/api/scenes/${id}`);
  }

  async generate(
    sceneId: string,
    trajectories: TrajectoryPayload[],
    seed = 0,
  ): Promise<string> {
    const body = JSON.stringify({ scene_id: sceneId, trajectories, seed });
    const out = await this.request<{ job_id: string }>("/api/generate", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body,
    });
    return out.job_id;
  }

  getJob(id: string): Promise<Job> {
    return this.request<Job>(`/api/jobs/${id}`);
  }

  frameUrl(job: Job, index: number): string {
    return this.base + job.artifacts[index];
  }

  heatmapUrl(sceneId: string, frame: number, trajectories?: TrajectoryPayload[]): string {
    let url = `${this.base}/api/scenes/${sceneId}/heatmap?frame=${frame}`;
    if (trajectories) {
      url += `&traj=${encodeURIComponent(JSON.stringify(trajectories))}`;
    }
    return url;
  }
}

/** Poll a job until it settles, with linear backoff. */
export async function pollJob(
  api: ApiClient,
  jobId: string,
  opts: { intervalMs?: number; timeoutMs?: number; sleep?: (ms: number) => Promise<void> } = {},
): Promise<Job> {
  const interval = opts.intervalMs ?? 500;
  const timeout = opts.timeoutMs ?? 120_000;
  const sleep = opts.sleep ?? ((ms) => new Promise((r) => setTimeout(r, ms)));
  const start = Date.now();
  let wait = interval;
  for (;;) {
    const job = await api.getJob(jobId);
    if (job.state === "done" || job.state === "failed") return job;
    if (Date.now() - start > timeout) {
      throw new ApiError(408, `job ${jobId} still ${job.state} after ${timeout} ms`);
    }
    await sleep(wait);
    wait = Math.min(wait + interval, 3000);
  }
}
