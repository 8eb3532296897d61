"""Binary PGM (P5) / PPM (P6) reading and writing.

Samples are one byte when maxval < 256, otherwise two bytes big-endian.
"""
from __future__ import annotations

import os

import numpy as np


class PnmError(ValueError):
    pass


def _tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    tokens, pos = [], 0
    while len(tokens) < count:
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if pos >= len(data):
            raise PnmError("truncated header")
        if data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos])
    # exactly one whitespace byte separates header and raster
    return tokens, pos + 1


def decode(data: bytes) -> np.ndarray:
    tokens, offset = _tokens(data, 4)
    magic = tokens[0]
    if magic not in (b"P5", b"P6"):
        raise PnmError(f"unsupported magic {magic!r}; only binary P5/P6 are read")
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError:
        raise PnmError("malformed header fields") from None
    if width <= 0 or height <= 0 or not 0 < maxval < 65536:
        raise PnmError(f"invalid header: {width}x{height}, maxval {maxval}")
    channels = 3 if magic == b"P6" else 1
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
    count = width * height * channels
    if len(data) - offset < count * dtype.itemsize:
        raise PnmError("truncated raster")
    raster = np.frombuffer(data, dtype=dtype, count=count, offset=offset)
    shape = (height, width, 3) if channels == 3 else (height, width)
    return raster.reshape(shape).astype(np.uint16 if maxval > 255 else np.uint8)


def encode(img, maxval: int | None = None) -> bytes:
    arr = np.asarray(img)
    if arr.ndim == 2:
        magic = b"P5"
    elif arr.ndim == 3 and arr.shape[2] == 3:
        magic = b"P6"
    else:
        raise PnmError(f"expected HxW or HxWx3 array, got shape {arr.shape}")
    if arr.size and arr.min() < 0:
        raise PnmError("negative samples cannot be stored")
    peak = int(arr.max()) if arr.size else 0
    if maxval is None:
        maxval = 255 if peak <= 255 else 1023 if peak <= 1023 else 65535
    if peak > maxval:
        raise PnmError(f"sample {peak} exceeds maxval {maxval}")
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
    h, w = arr.shape[:2]
    header = b"%s\n%d %d\n%d\n" % (magic, w, h, maxval)
    return header + arr.astype(dtype).tobytes()


def read_pnm(path: str | os.PathLike) -> np.ndarray:
    with open(path, "rb") as fh:
        return decode(fh.read())


def write_pnm(path: str | os.PathLike, img, maxval: int | None = None) -> None:
    with open(path, "wb") as fh:
        fh.write(encode(img, maxval))
