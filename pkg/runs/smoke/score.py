"""Score a pair of sample sets the way criterion 10 does.

    python3 runs/smoke/score.py             # trained.npz vs untrained.npz
    python3 runs/smoke/score.py _clip       # trained_clip.npz vs untrained_clip.npz
"""
import sys
from pathlib import Path

import numpy as np

from satdm.datakit import encode_images, load_split
from satdm.evalkit import FeatureExtractor, extract_features, frechet_distance, miou, segment_classical

root = Path(__file__).parent
suffix = sys.argv[1] if len(sys.argv) > 1 else ""
real_u8, _, _ = load_split(root / "data", "test")
extractor = FeatureExtractor(seed=0, dim=64)
scores = {}
for which in ("untrained", "trained"):
    d = np.load(root / "eval" / f"{which}{suffix}.npz")
    n = len(d["images"])
    real = extract_features(encode_images(real_u8[:n]), extractor)
    fid = frechet_distance(extract_features(d["images"], extractor), real)
    scores[which] = fid
    print(f"{which:9s}  proxy-FID {fid:8.3f}  mIoU {miou(segment_classical(d['images']), d['masks']):.3f}")
print(f"ratio {scores['trained'] / scores['untrained']:.1%}")
