__all__ = (
    "AudioLayoutEnum",
    "DiagnosticCodeEnum",
    "FaultKindEnum",
    "FragmentKindEnum",
    "ISO_639_1_CODES",
    "OgReEnum",
    "SideEnum",
    "TierNameEnum",
)

from .corpus_enums import (
    AudioLayoutEnum,
    DiagnosticCodeEnum,
    FragmentKindEnum,
    OgReEnum,
    SideEnum,
    TierNameEnum,
)
from .iso639 import ISO_639_1_CODES
from .testkit_enums import FaultKindEnum
