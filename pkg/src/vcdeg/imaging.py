"""Pixel buffers, PNG I/O, convolution, and resize primitives.

An image is a float32 numpy array of shape (height, width, 3), RGB
order, samples in [0, 1]. Every public operation clamps its output back
into [0, 1] before returning; quantization to 8 bits happens only at
file and codec boundaries.
"""

from __future__ import annotations

import enum
import struct
from pathlib import Path

import cv2
import numpy as np

from .errors import CorruptFile, KernelTooLarge, UnsupportedFormat

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


class ResizeMethod(enum.Enum):
    BICUBIC = "bicubic"
    BILINEAR = "bilinear"
    AREA = "area"


def require_image(img: np.ndarray) -> None:
    """Validate the (H, W, 3) float [0,1] contract; raises ValueError."""
    if not isinstance(img, np.ndarray) or img.ndim != 3 or img.shape[2] != 3:
        raise ValueError(f"expected (H, W, 3) array, got {getattr(img, 'shape', None)}")
    if img.shape[0] < 1 or img.shape[1] < 1:
        raise ValueError(f"empty image {img.shape}")
    if img.dtype not in (np.float32, np.float64):
        raise ValueError(f"expected float image, got {img.dtype}")


def clamp01(img: np.ndarray) -> np.ndarray:
    return np.clip(img, 0.0, 1.0)


def quantize_u8(img: np.ndarray) -> np.ndarray:
    """[0,1] float to uint8 with round-half-up, then clamp."""
    return np.clip(np.floor(img * 255.0 + 0.5), 0, 255).astype(np.uint8)


def from_u8(data: np.ndarray) -> np.ndarray:
    return (data.astype(np.float32)) / 255.0


def _png_header(path: Path) -> tuple[int, int]:
    """Return (bit_depth, color_type) from the IHDR chunk."""
    with open(path, "rb") as fh:
        head = fh.read(33)
    if len(head) < 33 or head[:8] != _PNG_MAGIC:
        raise UnsupportedFormat(f"not a PNG file: {path}")
    length, tag = struct.unpack(">I4s", head[8:16])
    if tag != b"IHDR" or length != 13:
        raise CorruptFile(f"malformed PNG header: {path}")
    bit_depth, color_type = head[24], head[25]
    return bit_depth, color_type


def load_png(path: str | Path) -> np.ndarray:
    """Load an 8- or 16-bit RGB/RGBA PNG into a float32 [0,1] image.

    Alpha, when present, is discarded. Samples are scaled by the
    bit-depth maximum (255 or 65535). Grayscale and palette PNGs are
    rejected as UnsupportedFormat.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(str(path))
    bit_depth, color_type = _png_header(path)
    if color_type == 3:
        raise UnsupportedFormat(f"palette PNG not supported: {path}")
    if color_type not in (2, 6):
        raise UnsupportedFormat(f"PNG color type {color_type} not supported (RGB/RGBA only): {path}")
    if bit_depth not in (8, 16):
        raise UnsupportedFormat(f"PNG bit depth {bit_depth} not supported: {path}")
    raw = cv2.imread(str(path), cv2.IMREAD_UNCHANGED)
    if raw is None:
        raise CorruptFile(f"PNG failed to decode: {path}")
    if raw.ndim != 3 or raw.shape[2] not in (3, 4):
        raise CorruptFile(f"unexpected decoded shape {raw.shape}: {path}")
    rgb = raw[:, :, 2::-1] if raw.shape[2] == 3 else raw[:, :, [2, 1, 0]]
    peak = 65535.0 if raw.dtype == np.uint16 else 255.0
    return (rgb.astype(np.float32)) / peak


def save_png(img: np.ndarray, path: str | Path) -> None:
    """Write an image as an 8-bit RGB PNG (round-half-up quantization)."""
    require_image(img)
    path = Path(path)
    if not path.parent.is_dir():
        raise OSError(f"parent directory does not exist: {path.parent}")
    bgr = quantize_u8(img)[:, :, ::-1]
    if not cv2.imwrite(str(path), bgr):
        raise OSError(f"PNG write failed: {path}")


def convolve(img: np.ndarray, kernel) -> np.ndarray:
    """Per-channel 2D correlation with reflect-101 borders.

    Accepts a BlurKernel or a bare odd-sized square weight matrix.
    Output has the input's dimensions and is clamped to [0, 1].
    """
    require_image(img)
    weights = np.asarray(getattr(kernel, "weights", kernel), dtype=np.float64)
    if weights.ndim != 2 or weights.shape[0] != weights.shape[1] or weights.shape[0] % 2 == 0:
        raise ValueError(f"kernel must be square with odd size, got {weights.shape}")
    size = weights.shape[0]
    if size > min(img.shape[0], img.shape[1]):
        raise KernelTooLarge(f"kernel {size} exceeds image {img.shape[1]}x{img.shape[0]}")
    if size == 1:
        return clamp01(img.astype(np.float32) * float(weights[0, 0]))
    out = cv2.filter2D(img.astype(np.float64), -1, weights, borderType=cv2.BORDER_REFLECT_101)
    return clamp01(out).astype(np.float32)


def _axis_weights_linear(n_in: int, n_out: int) -> np.ndarray:
    scale = n_in / n_out
    centers = (np.arange(n_out) + 0.5) * scale - 0.5
    base = np.floor(centers).astype(int)
    frac = centers - base
    w = np.zeros((n_out, n_in))
    for tap, tap_w in ((base, 1.0 - frac), (base + 1, frac)):
        idx = np.clip(tap, 0, n_in - 1)
        np.add.at(w, (np.arange(n_out), idx), tap_w)
    return w


def _catmull_rom(t: np.ndarray) -> np.ndarray:
    # Keys cubic with a = -0.5
    t = np.abs(t)
    out = np.zeros_like(t)
    near = t <= 1.0
    far = (t > 1.0) & (t < 2.0)
    out[near] = 1.5 * t[near] ** 3 - 2.5 * t[near] ** 2 + 1.0
    out[far] = -0.5 * t[far] ** 3 + 2.5 * t[far] ** 2 - 4.0 * t[far] + 2.0
    return out


def _axis_weights_cubic(n_in: int, n_out: int) -> np.ndarray:
    scale = n_in / n_out
    centers = (np.arange(n_out) + 0.5) * scale - 0.5
    base = np.floor(centers).astype(int)
    w = np.zeros((n_out, n_in))
    rows = np.arange(n_out)
    for offset in (-1, 0, 1, 2):
        tap = base + offset
        tap_w = _catmull_rom(centers - tap)
        np.add.at(w, (rows, np.clip(tap, 0, n_in - 1)), tap_w)
    return w


def _axis_weights_area(n_in: int, n_out: int) -> np.ndarray:
    scale = n_in / n_out
    w = np.zeros((n_out, n_in))
    for o in range(n_out):
        lo, hi = o * scale, (o + 1) * scale
        first, last = int(np.floor(lo)), int(np.ceil(hi)) - 1
        for i in range(first, min(last, n_in - 1) + 1):
            overlap = min(hi, i + 1) - max(lo, i)
            if overlap > 0:
                w[o, i] = overlap / scale
    return w


_AXIS_WEIGHTS = {
    ResizeMethod.BILINEAR: _axis_weights_linear,
    ResizeMethod.BICUBIC: _axis_weights_cubic,
    ResizeMethod.AREA: _axis_weights_area,
}


def resize(img: np.ndarray, out_w: int, out_h: int, method: ResizeMethod) -> np.ndarray:
    """Separable resize with half-pixel-center coordinate mapping.

    Bicubic uses Catmull-Rom (a = -0.5) taps; bilinear the 2-tap hat;
    area exact fractional box averaging. Edges replicate. Output is
    clamped to [0, 1].
    """
    require_image(img)
    if out_w < 1 or out_h < 1:
        raise ValueError(f"output dims must be positive, got {out_w}x{out_h}")
    if not isinstance(method, ResizeMethod):
        raise ValueError(f"unknown resize method {method!r}")
    h, w = img.shape[:2]
    if (out_w, out_h) == (w, h):
        return img.astype(np.float32)
    weights_fn = _AXIS_WEIGHTS[method]
    wh = weights_fn(h, out_h)
    ww = weights_fn(w, out_w)
    data = img.astype(np.float64)
    out = np.einsum("oi,ijc->ojc", wh, data, optimize=True)
    out = np.einsum("pj,ojc->opc", ww, out, optimize=True)
    return clamp01(out).astype(np.float32)


def reflect_pad(img: np.ndarray, left: int, top: int) -> np.ndarray:
    """Extend an image on the left/top by mirroring without edge repeat."""
    require_image(img)
    if left < 0 or top < 0:
        raise ValueError("padding must be nonnegative")
    if left >= img.shape[1] or top >= img.shape[0]:
        raise ValueError("reflect padding must be smaller than the image")
    return np.pad(img, ((top, 0), (left, 0), (0, 0)), mode="reflect")


def luminance(img: np.ndarray) -> np.ndarray:
    """BT.601 luma plane of an RGB image."""
    require_image(img)
    return img[:, :, 0] * 0.299 + img[:, :, 1] * 0.587 + img[:, :, 2] * 0.114
