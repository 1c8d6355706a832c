"""Learned triplet binary descriptors.

FAST keypoint detection with intensity-centroid orientation, 512-bit
descriptor extraction over rotation-normalized 64x64 windows, brute-force
Hamming matching, pattern training and a synthetic-transformation
evaluation harness. Backed by the C++ core; images, keypoints, descriptors
and matches cross the boundary as numpy arrays.
"""

from ._core import (
    default_pattern,
    describe,
    descriptor_bits,
    descriptor_bytes,
    detect,
    evaluate,
    hamming,
    load_pgm,
    match,
    orientation_radius,
    save_pgm,
    train,
    warp,
    window_margin,
)

__all__ = [
    "default_pattern",
    "describe",
    "descriptor_bits",
    "descriptor_bytes",
    "detect",
    "evaluate",
    "hamming",
    "load_pgm",
    "match",
    "orientation_radius",
    "save_pgm",
    "train",
    "warp",
    "window_margin",
]
