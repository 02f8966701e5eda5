__all__ = (
    "CorpusStats",
    "FragmentRow",
    "ReleaseConfig",
    "ReleaseManifest",
)

from .release import CorpusStats, FragmentRow, ReleaseConfig, ReleaseManifest
