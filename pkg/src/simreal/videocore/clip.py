"""Video clip data model.

Frames live in float64 [0,1] throughout the package; 8-bit only exists at
the I/O boundary. A clip rendered by the toy world keeps a reference to its
scene spec so downstream stages can use geometric ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from simreal.errors import InputError, ResampleError, ShapeError

SOURCE_TAGS = ("synthetic", "edited", "generated")


@dataclass
class VideoClip:
    frames: np.ndarray  # (T, H, W, C) float64 in [0, 1]
    fps: int
    clip_id: str
    source_tag: str = "synthetic"
    scene: Any = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        self.frames = np.asarray(self.frames, dtype=np.float64)
        if self.frames.ndim != 4:
            raise ShapeError(f"frames must be (T, H, W, C), got {self.frames.shape}")
        t, _, _, c = self.frames.shape
        if t < 1:
            raise ShapeError("a clip needs at least one frame")
        if c not in (1, 3):
            raise ShapeError(f"channel count must be 1 or 3, got {c}")
        if self.fps < 1:
            raise InputError(f"fps must be a positive integer, got {self.fps}")
        if self.source_tag not in SOURCE_TAGS:
            raise InputError(f"unknown source_tag {self.source_tag!r}")
        lo = float(self.frames.min())
        hi = float(self.frames.max())
        if lo < 0.0 or hi > 1.0:
            raise InputError(f"pixel values must lie in [0,1], got [{lo}, {hi}]")

    @property
    def num_frames(self) -> int:
        return self.frames.shape[0]

    @property
    def height(self) -> int:
        return self.frames.shape[1]

    @property
    def width(self) -> int:
        return self.frames.shape[2]

    @property
    def channels(self) -> int:
        return self.frames.shape[3]

    def with_frames(self, frames: np.ndarray, *, clip_id: str | None = None,
                    source_tag: str | None = None, fps: int | None = None) -> "VideoClip":
        return VideoClip(
            frames=frames,
            fps=self.fps if fps is None else fps,
            clip_id=self.clip_id if clip_id is None else clip_id,
            source_tag=self.source_tag if source_tag is None else source_tag,
            scene=self.scene,
        )


@dataclass
class EdgeMap:
    maps: np.ndarray  # (T, H, W) float64 in [0, 1]

    def __post_init__(self) -> None:
        self.maps = np.asarray(self.maps, dtype=np.float64)
        if self.maps.ndim != 3:
            raise ShapeError(f"edge maps must be (T, H, W), got {self.maps.shape}")


@dataclass
class DepthMap:
    maps: np.ndarray  # (T, H, W) float64 in [0, 1], larger = nearer

    def __post_init__(self) -> None:
        self.maps = np.asarray(self.maps, dtype=np.float64)
        if self.maps.ndim != 3:
            raise ShapeError(f"depth maps must be (T, H, W), got {self.maps.shape}")


def clips_equal(a: VideoClip, b: VideoClip) -> bool:
    """Bit-exact equality on persisted fields (scene is transient)."""
    return (
        a.clip_id == b.clip_id
        and a.fps == b.fps
        and a.source_tag == b.source_tag
        and a.frames.shape == b.frames.shape
        and bool(np.array_equal(a.frames, b.frames))
    )


def repeat_upsample(clip: VideoClip, target_fps: int, target_frames: int) -> VideoClip:
    """Raise frame rate by integer frame repetition, then cut to length.

    Each source frame is duplicated k = target_fps / fps times in order and
    the result is truncated to the first target_frames frames.
    """
    if target_fps % clip.fps != 0:
        raise ResampleError(
            f"target fps {target_fps} is not an integer multiple of {clip.fps}"
        )
    k = target_fps // clip.fps
    available = k * clip.num_frames
    if target_frames < 1:
        raise InputError("target_frames must be at least 1")
    if available < target_frames:
        raise ResampleError(
            f"only {available} frames available after x{k} repetition, "
            f"need {target_frames}"
        )
    frames = np.repeat(clip.frames, k, axis=0)[:target_frames]
    return clip.with_frames(frames, fps=target_fps)


def sample_frames_uniform(num_frames: int, n: int) -> list[int]:
    """n frame indices with both endpoints and maximally even spacing.

    Uses round-half-up on a linear grid, which is strictly increasing
    whenever n <= T.
    """
    if n < 1 or n > num_frames:
        raise InputError(f"cannot sample {n} frames from a clip of {num_frames}")
    if n == 1:
        return [0]
    step = (num_frames - 1) / (n - 1)
    return [int(np.floor(i * step + 0.5)) for i in range(n)]
