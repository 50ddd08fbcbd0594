"""Exception taxonomy shared by all vcdeg modules."""


class VcdegError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedFormat(VcdegError):
    """Input file is not a format this package accepts."""


class CorruptFile(VcdegError):
    """File claims a supported format but cannot be decoded."""


class KernelTooLarge(VcdegError):
    """Convolution kernel exceeds the image dimensions."""


class InvalidParameter(VcdegError):
    """A numeric parameter is outside its documented domain."""


class ImageTooSmall(VcdegError):
    """Image is smaller than the requested patch size."""


class EmptyDataset(VcdegError):
    """Input directory contains no loadable images."""


class DimMismatch(VcdegError):
    """Two images that must share dimensions do not."""


class TooSmall(VcdegError):
    """Image is too small for the requested metric window."""


class ParseError(VcdegError):
    """Malformed or non-conforming JSON input.

    ``offset`` is the byte offset of the offending token where known,
    otherwise -1.
    """

    def __init__(self, message: str, offset: int = -1):
        super().__init__(f"{message} (byte offset {offset})" if offset >= 0 else message)
        self.offset = offset


class ConfigError(VcdegError):
    """Configuration file failed validation."""


class EncoderError(VcdegError):
    """Base class for external-encoder failures."""


class BinaryNotFound(EncoderError):
    """The encoder binary could not be resolved."""


class InvalidParams(EncoderError):
    """Codec parameters violate their invariants."""


class NonZeroExit(EncoderError):
    """Encoder process exited with a non-zero status.

    Carries the tail of stderr and the preserved workdir path.
    """

    def __init__(self, message: str, stderr_tail: str = "", workdir: str = ""):
        super().__init__(message)
        self.stderr_tail = stderr_tail
        self.workdir = workdir


class EncodeTimeout(EncoderError):
    """Encoder process exceeded its time budget and was terminated."""


class FrameCountMismatch(EncoderError):
    """Produced frame count differs from the expected count."""
