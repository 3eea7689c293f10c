import itertools
from collections import Counter

import pytest

from setpeaks.qpoly import QPoly


def brute_rgs(n, k):
    """Every RGS of length n with max letter k, by filtering all of [k]^n.

    Shares no code with the successor-rule generator.
    """
    if n == 0:
        return [()] if k == 0 else []
    out = []
    for w in itertools.product(range(1, k + 1), repeat=n):
        top = 0
        for a in w:
            if a > top + 1:
                break
            top = max(top, a)
        else:
            if top == k:
                out.append(w)
    return out


def triples(w):
    return [(w[i], w[i + 1], w[i + 2]) for i in range(len(w) - 2)]


def brute_peak_dist(words, symmetric):
    hist = Counter()
    for w in words:
        hist[sum(1 for a, b, c in triples(w) if a < b > c and (a == c) == symmetric)] += 1
    return QPoly.from_counts(hist)


_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(cid, title): exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    cid, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[cid] = (title, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_acceptance):
        title, outcome = _acceptance[cid]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {cid}: {title}")
