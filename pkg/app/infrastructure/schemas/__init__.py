__all__ = ("ABCSchema",)

from .abc import ABCSchema
