import { ApiClient, ApiError } from "./api.js";
import { FramePlayer } from "./playback.js";
import { canvasToImage } from "./polyline.js";
import { CanvasSession } from "./session.js";
import type { Job, Point, SceneDetail } from "./types.js";

const SCALE = 18;
const ENTITY_COLORS = ["#ff5252", "#448aff", "#69f0ae", "#ffd740", "#e040fb", "#18ffff"];

const api = new ApiClient("");
let session: CanvasSession | null = null;
let player: FramePlayer | null = null;
let heatmapOn = false;
let heatmaps: HTMLImageElement[] = [];

const sceneList = document.getElementById("scenes") as HTMLUListElement;
const editCanvas = document.getElementById("edit") as HTMLCanvasElement;
const playCanvas = document.getElementById("play") as HTMLCanvasElement;
const statusEl = document.getElementById("status") as HTMLDivElement;
const generateBtn = document.getElementById("generate") as HTMLButtonElement;
const clearBtn = document.getElementById("clear") as HTMLButtonElement;
const heatmapBtn = document.getElementById("heatmap") as HTMLButtonElement;
const seedInput = document.getElementById("seed") as HTMLInputElement;

let firstFrame: HTMLImageElement | null = null;

function setStatus(text: string, kind: "info" | "error" = "info"): void {
  statusEl.textContent = text;
  statusEl.className = kind;
}

function loadImage(url: string): Promise<HTMLImageElement> {
  return new Promise((resolve, reject) => {
    const img = new Image();
    img.onload = () => resolve(img);
    img.onerror = () => reject(new Error(`failed to load ${url}`));
    img.src = url;
  });
}

function drawEditor(): void {
  if (!session || !firstFrame) return;
  const { width, height } = session.scene;
  const ctx = editCanvas.getContext("2d")!;
  ctx.imageSmoothingEnabled = false;
  ctx.clearRect(0, 0, editCanvas.width, editCanvas.height);
  ctx.drawImage(firstFrame, 0, 0, width * SCALE, height * SCALE);

  if (session.selected !== null) {
    const mask = session.masks.find((m) => m.entityId === session!.selected);
    if (mask) {
      ctx.fillStyle = "rgba(255,255,255,0.35)";
      for (let r = 0; r < height; r++) {
        for (let c = 0; c < width; c++) {
          if (mask.bits[r * width + c]) {
            ctx.fillRect(c * SCALE, r * SCALE, SCALE, SCALE);
          }
        }
      }
    }
  }
  for (const [entityId, pts] of session.polylines) {
    drawPolyline(ctx, pts, ENTITY_COLORS[entityId % ENTITY_COLORS.length]);
  }
}

function drawPolyline(ctx: CanvasRenderingContext2D, pts: Point[], color: string): void {
  if (pts.length === 0) return;
  ctx.strokeStyle = color;
  ctx.fillStyle = color;
  ctx.lineWidth = 3;
  ctx.beginPath();
  ctx.moveTo(pts[0][0] * SCALE, pts[0][1] * SCALE);
  for (const [x, y] of pts.slice(1)) {
    ctx.lineTo(x * SCALE, y * SCALE);
  }
  ctx.stroke();
  const last = pts[pts.length - 1];
  ctx.beginPath();
  ctx.arc(last[0] * SCALE, last[1] * SCALE, 5, 0, 2 * Math.PI);
  ctx.fill();
}

function pointerToImage(ev: PointerEvent): Point {
  const rect = editCanvas.getBoundingClientRect();
  return canvasToImage(ev.clientX, ev.clientY, rect, session!.scene.width, session!.scene.height);
}

async function openScene(id: string): Promise<void> {
  player?.stop();
  const detail: SceneDetail = await api.getScene(id);
  session = new CanvasSession(detail, api);
  firstFrame = await loadImage(detail.first_frame_uri);
  editCanvas.width = detail.width * SCALE;
  editCanvas.height = detail.height * SCALE;
  playCanvas.width = detail.width * SCALE;
  playCanvas.height = detail.height * SCALE;
  heatmaps = [];
  setStatus(`scene ${id}: click an entity, then drag a trajectory`);
  drawEditor();
}

async function refreshScenes(): Promise<void> {
  const scenes = await api.listScenes();
  sceneList.innerHTML = "";
  for (const s of scenes) {
    const li = document.createElement("li");
    li.textContent = `${s.id} (${s.entities} entities)`;
    li.onclick = () => void openScene(s.id).catch((e) => setStatus(String(e), "error"));
    sceneList.appendChild(li);
  }
}

let dragging = false;
editCanvas.addEventListener("pointerdown", (ev) => {
  if (!session) return;
  const p = pointerToImage(ev);
  const hit = session.select(p);
  if (hit === null) {
    setStatus("background: selection cleared");
    drawEditor();
    return;
  }
  try {
    session.startDrag(p);
    dragging = true;
    editCanvas.setPointerCapture(ev.pointerId);
    setStatus(`entity ${hit}: dragging…`);
  } catch (err) {
    setStatus(String(err), "error");
  }
  drawEditor();
});

editCanvas.addEventListener("pointermove", (ev) => {
  if (!session || !dragging) return;
  session.extendDrag(pointerToImage(ev));
  drawEditor();
  const pts = (session as unknown as { drawing: Point[] | null }).drawing;
  if (pts) {
    const ctx = editCanvas.getContext("2d")!;
    drawPolyline(ctx, pts, "#ffffff");
  }
});

editCanvas.addEventListener("pointerup", () => {
  if (!session || !dragging) return;
  dragging = false;
  const pts = session.endDrag();
  if (pts) {
    setStatus(`entity ${session.selected}: trajectory with ${pts.length} points`);
  }
  drawEditor();
});

clearBtn.onclick = () => {
  if (session && session.selected !== null) {
    session.clearPolyline(session.selected);
    drawEditor();
  }
};

heatmapBtn.onclick = () => {
  heatmapOn = !heatmapOn;
  heatmapBtn.textContent = heatmapOn ? "heatmap: on" : "heatmap: off";
};

generateBtn.onclick = async () => {
  if (!session) return;
  if (!session.canSubmit) {
    setStatus("draw at least one trajectory first", "error");
    return;
  }
  generateBtn.disabled = true;
  try {
    setStatus("generating…");
    const job = await session.submit(parseInt(seedInput.value || "0", 10));
    if (job.state === "done") {
      setStatus(`done: ${job.artifacts.length} frames`);
      await startPlayback(job);
    } else {
      setStatus(`job failed: ${job.error}`, "error");
    }
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      setStatus("queue full, try again in a moment", "error");
    } else {
      setStatus(String(err), "error");
    }
  } finally {
    generateBtn.disabled = false;
  }
};

async function startPlayback(job: Job): Promise<void> {
  if (!session) return;
  player?.stop();
  const { width, height, length } = session.scene;
  if (heatmapOn) {
    const traj = job.resampled;
    heatmaps = await Promise.all(
      Array.from({ length }, (_, i) => loadImage(api.heatmapUrl(session!.scene.id, i, traj))),
    );
  }
  const ctx = playCanvas.getContext("2d")!;
  player = new FramePlayer((img, index) => {
    ctx.imageSmoothingEnabled = false;
    ctx.clearRect(0, 0, playCanvas.width, playCanvas.height);
    ctx.drawImage(img, 0, 0, width * SCALE, height * SCALE);
    if (heatmapOn && heatmaps[index]) {
      ctx.globalAlpha = 0.5;
      ctx.drawImage(heatmaps[index], 0, 0, width * SCALE, height * SCALE);
      ctx.globalAlpha = 1.0;
    }
    for (const t of job.resampled ?? []) {
      drawPolyline(ctx, t.points as Point[], ENTITY_COLORS[t.entity_id % ENTITY_COLORS.length]);
    }
  });
  await player.load(job.artifacts.map((_, i) => api.frameUrl(job, i)));
  player.start();
}

void refreshScenes().catch((e) => setStatus(String(e), "error"));
