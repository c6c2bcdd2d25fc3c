"""Launch the desk-scale training run used by acceptance criterion 10."""
import json, logging, sys, time
from pathlib import Path
from satdm.runtime import tune_allocator
from satdm.datakit import generate_toy_dataset
from satdm.trainer import TrainConfig, train
from satdm.unet import DenoiserConfig

logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
tune_allocator()
root = Path(__file__).parent
model_cfg = DenoiserConfig(model_channels=16, channel_mult=(1, 2, 4, 6), num_res_blocks=1,
                           attention_resolutions=(8, 4), head_channels=32, dropout=0.1, spade_hidden=16)
train_cfg = TrainConfig(iterations=20000, batch_size=8, lr0=2e-4, ema_decay=0.9995, ema_delay=500, T=250,
                        seed=0, checkpoint_every=1000)
if not (root / "data" / "manifest.json").exists():
    generate_toy_dataset(2000, 32, 2024, root / "data", n_test=256)
(root / "run_config.json").write_text(json.dumps({"model": model_cfg.to_dict(), "train": train_cfg.to_dict()}, indent=1))
tic = time.time()
train(train_cfg, root / "data", root / "train", model_cfg)
(root / "train_seconds.txt").write_text(f"{time.time() - tic:.1f}\n")
