"""Logarithmic mathematical morphology on numpy arrays."""

try:
    from ._lmm import *  # noqa: F401,F403
    from ._lmm import LmmError, StructuringFunction, PipelineConfig  # noqa: F401
except ImportError:  # development tree: the extension sits next to the package
    from _lmm import *  # noqa: F401,F403
    from _lmm import LmmError, StructuringFunction, PipelineConfig  # noqa: F401
