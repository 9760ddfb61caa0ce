/** Looping frame index for a given elapsed time; pure so it is testable. */
export function frameAt(elapsedMs: number, frameCount: number, fps = 6): number {
  if (frameCount <= 0) return 0;
  const idx = Math.floor((elapsedMs / 1000) * fps);
  return ((idx % frameCount) + frameCount) % frameCount;
}

export class FramePlayer {
  private images: HTMLImageElement[] = [];
  private startedAt = 0;
  private raf = 0;
  playing = false;

  constructor(
    private draw: (img: HTMLImageElement, index: number) => void,
    private fps = 6,
    private now: () => number = () => performance.now(),
  ) {}

  async load(urls: string[]): Promise<void> {
    this.images = await Promise.all(
      urls.map(
        (url) =>
          new Promise<HTMLImageElement>((resolve, reject) => {
            const img = new Image();
            img.onload = () => resolve(img);
            img.onerror = () => reject(new Error(`failed to load ${url}`));
            img.src = url;
          }),
      ),
    );
  }

  start(): void {
    if (this.images.length === 0) return;
    this.playing = true;
    this.startedAt = this.now();
    const tick = () => {
      if (!this.playing) return;
      const index = frameAt(this.now() - this.startedAt, this.images.length, this.fps);
      this.draw(this.images[index], index);
      this.raf = requestAnimationFrame(tick);
    };
    tick();
  }

  stop(): void {
    this.playing = false;
    if (this.raf) cancelAnimationFrame(this.raf);
  }
}
