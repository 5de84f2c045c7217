"""Deterministic random streams.

Each stream is a PCG64 generator keyed by (seed, stream_id) through numpy's
SeedSequence spawn mechanism, so distinct ids yield statistically independent
streams and the same pair always yields the same stream, across platforms.

Every primitive draw consumes exactly one raw 64-bit word:

    sign  = 1 - 2 * (word & 1)
    unit  = (word >> 11) / (2**53 - 1)        closed interval [0, 1]
    real  = clip(l + (r - l) * unit, l, r)

Fixed word-per-draw accounting is what lets callers draw candidates in large
blocks while remaining bit-identical to one-at-a-time drawing.
"""
from __future__ import annotations

import numpy as np

_MAX53 = float((1 << 53) - 1)
_FULL = 1 << 64


def words_to_signs(words: np.ndarray) -> np.ndarray:
    """Map raw words to +1/-1 via their low bit."""
    bits = (words & np.uint64(1)).astype(np.int64)
    return 1 - 2 * bits


def words_to_units(words: np.ndarray) -> np.ndarray:
    """Map raw words to floats covering [0, 1] on a 2**53-point grid."""
    return (words >> np.uint64(11)) / _MAX53


def scale_units(units, l: float, r: float):
    """Affine map of unit draws onto [l, r], clipped against rounding spill."""
    return np.clip(l + (r - l) * units, l, r)


class RngStream:
    """One deterministic substream. Construct via derive_stream."""

    def __init__(self, seed: int, stream_id: int):
        if not 0 <= seed < _FULL:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if stream_id < 0:
            raise ValueError("stream_id must be non-negative")
        self.seed = seed
        self.stream_id = stream_id
        ss = np.random.SeedSequence(entropy=seed, spawn_key=(stream_id,))
        self._gen = np.random.Generator(np.random.PCG64(ss))

    def raw_words(self, count: int) -> np.ndarray:
        """The next count raw 64-bit words. Primitive every draw builds on."""
        return self._gen.integers(0, _FULL, size=count, dtype=np.uint64)

    def next_sign(self) -> int:
        return int(words_to_signs(self.raw_words(1))[0])

    def next_signs(self, count: int) -> np.ndarray:
        return words_to_signs(self.raw_words(count))

    def next_real(self, l: float, r: float) -> float:
        if not l < r:
            raise ValueError("next_real requires l < r")
        return float(scale_units(words_to_units(self.raw_words(1))[0], l, r))

    def next_reals(self, l: float, r: float, count: int) -> np.ndarray:
        if not l < r:
            raise ValueError("next_reals requires l < r")
        return scale_units(words_to_units(self.raw_words(count)), l, r)


def derive_stream(seed: int, stream_id: int) -> RngStream:
    """Stream for (seed, stream_id); same pair, same draws, forever."""
    return RngStream(seed, stream_id)
