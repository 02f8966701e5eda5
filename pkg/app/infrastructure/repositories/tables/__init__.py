__all__ = (
    "ABCTableRepository",
    "ConversationRepository",
    "DiagnosticReportRepository",
    "FragmentRepository",
    "ParticipantRepository",
    "ProducerRepository",
)

from .abc import ABCTableRepository
from .metadata import ConversationRepository, ParticipantRepository, ProducerRepository
from .releases import DiagnosticReportRepository, FragmentRepository
