"""Report archive and observability helpers."""

from contextlib import nullcontext

import pytest
import pytest_asyncio

import observability
from archive.report_store import ReportStore
from bounds.verify import verify_bound
from observability import log_report_async, span
from schemas.report import Comparison, Relation, Report, Verdict
from tests.conftest import path_graph


@pytest_asyncio.fixture
async def store(tmp_path):
    store = ReportStore(f"sqlite+aiosqlite:///{tmp_path}/archive/reports.db")
    await store.init_db()
    yield store
    await store.close()


def _report(theorem: str, computed: int, bound: int) -> Report:
    return Report(
        theorem=theorem,
        field="QQ",
        subject="test ideal",
        comparisons=[Comparison(label="j=2", relation=Relation.AT_LEAST, computed=computed, bound=bound)],
    )


@pytest.mark.asyncio
async def test_append_and_get(store: ReportStore) -> None:
    """A stored report comes back equal, verdict included."""
    report = verify_bound("tree_lb", path_graph(6))
    record = await store.append_report(report)
    assert record == 1
    loaded = await store.get_report(record)
    assert loaded == report
    assert loaded.verdict is Verdict.HOLDS
    assert await store.get_report(42) is None


@pytest.mark.asyncio
async def test_list_reports(store: ReportStore) -> None:
    await store.append_report(_report("tree_lb", 7, 6))
    await store.append_report(_report("forest_lb", 1, 2))
    await store.append_report(_report("tree_lb", 6, 6))

    rows = await store.list_reports()
    assert [r["id"] for r in rows] == [3, 2, 1]
    assert [r["verdict"] for r in rows] == ["holds_with_equality", "violated", "holds"]
    assert rows[0]["created_at"] is not None

    only_tree = await store.list_reports(theorem="tree_lb", limit=1)
    assert [r["id"] for r in only_tree] == [3]


@pytest.mark.asyncio
async def test_log_report_async(store: ReportStore) -> None:
    assert await log_report_async(store, _report("b36", 20, 20)) == 1
    assert await log_report_async(object(), _report("b36", 20, 20)) is None


def test_span_is_a_no_op_until_configured(monkeypatch):
    monkeypatch.setattr(observability, "_configured", False)
    assert isinstance(span("betti_table", n=3), nullcontext)
    observability.log_info("ignored", level=1)


def test_report_verdicts():
    assert _report("tree_lb", 7, 6).strict == ["j=2"]
    assert _report("tree_lb", 6, 6).verdict is Verdict.EQUALITY
    failing = Report(theorem="beta35", checks={"taylor <= P(G')": False})
    assert failing.verdict is Verdict.VIOLATED
    assert Report(theorem="b36").verdict is Verdict.HOLDS
    assert _report("tree_lb", 5, 6).violations()[0].label == "j=2"
