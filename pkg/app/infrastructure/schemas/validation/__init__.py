__all__ = (
    "Diagnostic",
    "FragmentKey",
    "ValidationReport",
)

from .diagnostics import Diagnostic, FragmentKey, ValidationReport
