"""Exception hierarchy shared across the package.

The CLI maps each family to a distinct exit code, so raising the right
class is part of the contract: ConfigError for invalid settings, DataError
for bad or inconsistent inputs, NumericalError for runtime numerical
failures.
"""


class BandalignError(Exception):
    """Base class for all package errors."""


class ConfigError(BandalignError, ValueError):
    """Invalid configuration: bad parameter values, impossible presets."""


class DataError(BandalignError, ValueError):
    """Invalid or inconsistent input data."""


class UnreadableFileError(DataError):
    """File missing, not a RIFF/WAVE container, or structurally corrupt."""


class UnsupportedEncodingError(DataError):
    """WAV encoding outside 16-bit PCM / 32-bit float, mono or stereo."""


class EmptyAudioError(DataError):
    """WAV file contains no audio frames."""


class NumericalError(BandalignError, RuntimeError):
    """Numerical failure at runtime (divergence, non-finite results)."""
