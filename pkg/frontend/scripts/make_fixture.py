"""Build a tiny dataset + checkpoint for the frontend integration test.

Usage: python3 scripts/make_fixture.py <out_dir>

The scene has L=8 frames and two entities that overlap in the first frame,
so the client's z-order hit-testing has something to disagree about.
"""

import json
import sys
from pathlib import Path

import torch

from dragvid.entity_rep import Entity
from dragvid.model import DragVideoModel, ModelConfig
from dragvid.synthdata import SceneSpec, ShapeSpec, generate_clip, save_clip
from dragvid.training import TrainClip, TrainConfig, train


def main(out_dir: str) -> None:
    out = Path(out_dir)
    data = out / "data"
    (data / "clips").mkdir(parents=True, exist_ok=True)
    spec = SceneSpec(
        shapes=[
            ShapeSpec(
                kind="circle", color=(255, 60, 60), size=7.0, path_family="linear",
                path_params={"start": [9.0, 9.0], "velocity": [0.6, 0.4]},
            ),
            ShapeSpec(  # overlaps entity 0 in the first frame; higher id on top
                kind="square", color=(60, 60, 255), size=7.0, path_family="linear",
                path_params={"start": [13.0, 12.0], "velocity": [-0.5, 0.5]},
            ),
        ],
        background={"kind": "solid", "color": [180, 180, 180]},
        length=8,
        height=24,
        width=24,
        seed=0,
    )
    clip = generate_clip(spec)
    assert (clip.full_masks[0, 0] & clip.full_masks[1, 0]).sum() > 0, "fixture needs overlap"
    save_clip(clip, data / "clips" / "demo_00000.npz")
    with open(data / "index.jsonl", "w") as f:
        f.write(json.dumps({"clip_id": "demo_00000", "path": "clips/demo_00000.npz",
                            "split": "test", "seed": 0, "entities": 2}) + "\n")

    torch.manual_seed(0)
    config = ModelConfig(
        image_size=24, clip_length=8, feature_dim=6, relation_heads=3, relation_d_qk=4,
        relation_kernels=8, base_channels=8, channel_mults=(1, 1, 2, 2), stem_width=4,
        num_diffusion_steps=32,
    )
    model = DragVideoModel(config)
    entities = [Entity.from_mask(k, clip.full_masks[k, 0]) for k in range(2)]
    clips = [TrainClip(frames_u8=clip.frames, entities=entities,
                       trajectories=clip.trajectory_list())]
    cfg = TrainConfig(steps=2, batch_size=1, seed=0, log_every=2, checkpoint_every=2)
    train(model, clips, cfg, out / "run", resume=False)
    print(json.dumps({"data": str(data), "checkpoint": str(out / "run" / "checkpoint")}))


if __name__ == "__main__":
    main(sys.argv[1])
