"""Emit one PASS/FAIL line per acceptance criterion.

The acceptance tests register their criterion number and title in
CRITERIA at import time; this hook prints the verdict line from the
reporting phase, where pytest's output capture is not active.
"""

import re

CRITERIA = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = re.search(r"test_acceptance\.py::(test_criterion_\w+)", report.nodeid)
    if not m or m.group(1) not in CRITERIA:
        return
    num, title = CRITERIA[m.group(1)]
    verdict = "PASS" if report.passed else "FAIL"
    print(f"\n{verdict}  [{num}] {title}", flush=True)
