"""WAV reading and writing with a normalized mono float representation.

All processing in this package happens on mono float64 samples nominally
within [-1, 1]. Integer PCM is normalized by 2**(bits-1), so -1.0 is
reachable and +1.0 is not (zero is preserved exactly). Multichannel input
is downmixed by the per-frame arithmetic mean of the channels. No
resampling is performed; the pipeline operates at the native rate.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.io import wavfile


class AudioIOError(RuntimeError):
    """Raised when an audio file cannot be read or written."""


@dataclass(frozen=True, eq=False)
class AudioClip:
    """Mono sample sequence at a fixed sample rate.

    samples are float64; sample_rate is in Hz and must be positive.
    """

    samples: np.ndarray
    sample_rate: int
    source_path: str | None = None

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1:
            raise ValueError("AudioClip samples must be one-dimensional")
        if self.sample_rate <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        object.__setattr__(self, "samples", samples)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def duration_seconds(self) -> float:
        return self.samples.size / self.sample_rate


def read_audio(path: str | Path) -> AudioClip:
    """Read a WAV file into a normalized mono AudioClip.

    Supports PCM-16, PCM-24, PCM-32 and 32/64-bit float WAV. Integer PCM is
    mapped to [-1, 1] by dividing by the type's maximum positive value + 1;
    scipy widens 24-bit samples into int32, which the int32 scale covers.
    """
    try:
        rate, data = wavfile.read(str(path))
    except FileNotFoundError:
        raise AudioIOError(f"cannot read '{path}': file not found") from None
    except Exception as exc:
        raise AudioIOError(f"cannot read '{path}': {exc}") from exc
    if data.size == 0:
        raise AudioIOError(f"cannot read '{path}': zero-length audio stream")

    if data.dtype == np.int16:
        x = data / float(2**15)
    elif data.dtype == np.int32:
        x = data / float(2**31)
    elif data.dtype in (np.float32, np.float64):
        x = data.astype(np.float64)
    else:
        raise AudioIOError(
            f"cannot read '{path}': unsupported sample format '{data.dtype}'"
        )

    if x.ndim == 2:
        x = x.mean(axis=1)
    return AudioClip(x, int(rate), source_path=str(path))


def write_audio(clip: AudioClip, path: str | Path, format: str = "float32") -> None:
    """Write a clip as WAV.

    format "pcm16" clamps samples to [-1, 1] and rounds to the nearest
    16-bit level; "float32" stores samples as 32-bit floats (lossless for
    float32-representable values).
    """
    if format == "pcm16":
        levels = np.round(np.clip(clip.samples, -1.0, 1.0) * 2**15)
        payload = np.clip(levels, -(2**15), 2**15 - 1).astype(np.int16)
    elif format == "float32":
        payload = clip.samples.astype(np.float32)
    else:
        raise ValueError(f"unknown audio format '{format}' (use 'pcm16' or 'float32')")
    try:
        wavfile.write(str(path), clip.sample_rate, payload)
    except OSError as exc:
        raise AudioIOError(f"cannot write '{path}': {exc}") from exc
