"""Shared test configuration.

Hypothesis runs derandomized with no deadline, so the suite is reproducible
and slow exact-arithmetic examples never flake on timing.

The terminal summary hook prints one line per acceptance criterion at the
end of the run (collected by test_acceptance), so the pass/fail ledger is
visible even though pytest captures per-test output.
"""

import sys

from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=40,
                          derandomize=True)
settings.load_profile("suite")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None) if mod else None
    if not results:
        return
    from zigzagcat.acceptance import format_record

    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(format_record(results[number]))
