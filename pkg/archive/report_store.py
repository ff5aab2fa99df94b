"""Async archive of reports."""

from pathlib import Path
from typing import Any

from sqlalchemy import select
from sqlalchemy.engine import make_url
from sqlalchemy.ext.asyncio import AsyncSession, async_sessionmaker, create_async_engine

from config import DATABASE_URL
from archive.db_models import Base, ReportRecord
from schemas.report import Report


class ReportStore:
    """Async store for reports produced by check and search runs."""

    def __init__(self, database_url: str | None = None) -> None:
        self._url = database_url or DATABASE_URL
        self._engine = create_async_engine(self._url, echo=False)
        self._session_factory = async_sessionmaker(
            self._engine,
            class_=AsyncSession,
            expire_on_commit=False,
            autoflush=False,
        )

    async def init_db(self) -> None:
        """Create the database directory (sqlite) and all tables."""
        url = make_url(self._url)
        if url.get_backend_name() == "sqlite" and url.database and url.database != ":memory:":
            Path(url.database).parent.mkdir(parents=True, exist_ok=True)
        async with self._engine.begin() as conn:
            await conn.run_sync(Base.metadata.create_all)

    async def append_report(self, report: Report) -> int:
        """Archive a report. Returns its id."""
        async with self._session_factory() as session:
            record = ReportRecord(
                theorem=report.theorem,
                status=report.status,
                verdict=report.verdict.value,
                field=report.field,
                subject=report.subject,
                payload=report.model_dump_json(),
            )
            session.add(record)
            await session.commit()
            return record.id

    async def list_reports(self, limit: int = 20, theorem: str | None = None) -> list[dict[str, Any]]:
        """Most recent reports first."""
        async with self._session_factory() as session:
            stmt = select(ReportRecord).order_by(ReportRecord.id.desc()).limit(limit)
            if theorem is not None:
                stmt = stmt.where(ReportRecord.theorem == theorem)
            result = await session.execute(stmt)
            rows = result.scalars().all()
        return [
            {
                "id": r.id,
                "theorem": r.theorem,
                "status": r.status,
                "verdict": r.verdict,
                "field": r.field,
                "subject": r.subject,
                "created_at": r.created_at.isoformat() if r.created_at else None,
            }
            for r in rows
        ]

    async def get_report(self, report_id: int) -> Report | None:
        async with self._session_factory() as session:
            row = await session.get(ReportRecord, report_id)
        if row is None:
            return None
        return Report.model_validate_json(row.payload)

    async def close(self) -> None:
        """Close the engine."""
        await self._engine.dispose()
