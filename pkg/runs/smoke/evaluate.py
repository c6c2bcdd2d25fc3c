"""Draw the samples scored by acceptance criterion 10.

    python3 runs/smoke/evaluate.py untrained   # initial weights, same architecture
    python3 runs/smoke/evaluate.py trained     # EMA weights of the final checkpoint
    python3 runs/smoke/evaluate.py trained --clip

--clip turns on x0 clamping inside the reverse loop (off by default) and writes
<which>_clip.* instead. Criterion 10 scores only the default files.

Writes runs/smoke/eval/<which>.npz (images in [-1, 1], conditioning masks) and
<which>.json (timing and provenance). The acceptance test recomputes every score
from these arrays.
"""
import json, logging, sys, time
from pathlib import Path

import numpy as np

from satdm.datakit import encode_masks, load_split
from satdm.runtime import tune_allocator
from satdm.sampler import SampleJob, sample
from satdm.schedule import build_schedule
from satdm.trainer import latest_checkpoint, load_model
from satdm.unet import DenoiserConfig, DenoiserModel

N_SAMPLES, GUIDANCE, SAMPLE_SEED = 256, 1.5, 2025

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
tune_allocator()
root = Path(__file__).parent
which = sys.argv[1]
clip = "--clip" in sys.argv[2:]
suffix = "_clip" if clip else ""
run_cfg = json.loads((root / "run_config.json").read_text())
if which == "untrained":
    model = DenoiserModel(DenoiserConfig.from_dict(run_cfg["model"]), seed=run_cfg["train"]["seed"]).eval()
    source = "initial weights"
elif which == "trained":
    ckpt = latest_checkpoint(root / "train")
    model = load_model(ckpt, use_ema=True)
    source = str(ckpt.relative_to(root))
else:
    raise SystemExit("usage: evaluate.py untrained|trained")

_, masks, ids = load_split(root / "data", "test")
masks, ids = masks[:N_SAMPLES], ids[:N_SAMPLES]
sched = build_schedule(run_cfg["train"]["T"])
job = SampleJob(encode_masks(masks), GUIDANCE, SAMPLE_SEED, clip_denoised=clip)
tic = time.time()
images, _ = sample(model, job, sched, batch_size=64, progress=lambda t: t % 25 == 0 and logging.info("%s t=%d", which, t))
out = root / "eval"
out.mkdir(exist_ok=True)
np.savez_compressed(out / f"{which}{suffix}.npz", images=images.astype(np.float32), masks=masks)
meta = {"source": source, "n": len(ids), "w": GUIDANCE, "seed": SAMPLE_SEED, "T": sched.T, "clip_denoised": clip, "seconds": round(time.time() - tic, 1)}
(out / f"{which}{suffix}.json").write_text(json.dumps(meta, indent=1) + "\n")
