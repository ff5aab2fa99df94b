"""Pydantic schemas for reports, documents and search results."""

from schemas.ideal import IdealDocument
from schemas.report import Comparison, Relation, Report, Verdict
from schemas.results import ColoringDocument, WitnessDocument
from schemas.search import ClassSummary, SurveyDocument

__all__ = [
    "ClassSummary",
    "ColoringDocument",
    "Comparison",
    "IdealDocument",
    "Relation",
    "Report",
    "SurveyDocument",
    "Verdict",
    "WitnessDocument",
]
