"""Persistent archive of reports."""

from archive.report_store import ReportStore

__all__ = ["ReportStore"]
