from __future__ import annotations

import os

import pytest


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the order-243 tier")


def slow_enabled(config) -> bool:
    return bool(config.getoption("--slow")) or os.environ.get("SCHURLAB_SLOW") == "1"


def pytest_collection_modifyitems(config, items):
    if slow_enabled(config):
        return
    skip = pytest.mark.skip(reason="slow tier: pass --slow or set SCHURLAB_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def slow(request) -> bool:
    return slow_enabled(request.config)


_ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``criterion(id, text)`` then set ``.ok``."""
    store = request.config.stash.setdefault(_ACCEPTANCE_KEY, {})

    class Line:
        def __init__(self):
            self.cid, self.text, self.ok, self.seconds, self.budget = "?", "", False, 0.0, 0.0

        def __call__(self, cid: str, text: str, budget: float):
            self.cid, self.text, self.budget = cid, text, budget
            store[cid] = self
            return self

    return Line()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    store = config.stash.get(_ACCEPTANCE_KEY, {})
    skipped = [r.nodeid.split("::")[-1] for r in terminalreporter.stats.get("skipped", [])
               if "test_criterion_" in r.nodeid]
    if not store and not skipped:
        return
    terminalreporter.section("acceptance criteria")
    for name in skipped:
        terminalreporter.write_line(f"criterion {name.split('_')[2]:<4} SKIP  {name} (slow tier, use --slow)")
    for cid in sorted(store, key=lambda c: (int("".join(ch for ch in c if ch.isdigit()) or 0), c)):
        line = store[cid]
        verdict = "PASS" if line.ok else "FAIL"
        terminalreporter.write_line(
            f"criterion {cid:<4} {verdict}  {line.text}  [{line.seconds:.1f}s, budget {line.budget:.0f}s]"
        )
