"""Observability: Logfire spans and report audit logging."""

import os
from contextlib import nullcontext
from typing import Any, ContextManager

# Optional Logfire integration
try:
    import logfire

    LOGFIRE_AVAILABLE = True
except ImportError:
    LOGFIRE_AVAILABLE = False

_configured = False


def configure_logfire() -> None:
    """Configure Logfire if available. Remote export only when LOGFIRE_TOKEN is set."""
    global _configured
    if not LOGFIRE_AVAILABLE or _configured:
        return
    logfire.configure(
        send_to_logfire=bool(os.environ.get("LOGFIRE_TOKEN")),
        console=False,
    )
    _configured = True


def span(name: str, **attributes: Any) -> ContextManager[Any]:
    """A Logfire span once configured, otherwise a no-op context."""
    if LOGFIRE_AVAILABLE and _configured:
        return logfire.span(name, **attributes)
    return nullcontext()


def log_info(message: str, **attributes: Any) -> None:
    if LOGFIRE_AVAILABLE and _configured:
        logfire.info(message, **attributes)


async def log_report_async(report_store: Any, report: Any) -> int | None:
    """Archive a report in the report store (async). Returns the record id."""
    if hasattr(report_store, "append_report"):
        return await report_store.append_report(report)
    return None
