import itertools
from collections import deque

import pytest

from dyoung.group import GroupFamily, SignedPermutation


def brute_elements(kind, n):
    """Independent enumeration: every signed window, filtered by parity."""
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            if kind == "D" and signs.count(-1) % 2:
                continue
            out.append(tuple(s * p for s, p in zip(signs, perm)))
    return out


def compose(a, b):
    """Windows composed as functions, a after b."""
    return tuple((a[abs(v) - 1] if v > 0 else -a[abs(v) - 1]) for v in b)


def bfs_lengths(kind, n):
    """Distance from the identity in the right Cayley graph, built from raw
    windows without the library's multiplication."""
    fam = GroupFamily(kind, n)
    gens = [g.window for g in fam.generators()]
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            v = compose(w, s)
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


@pytest.fixture(scope="session")
def d3():
    return GroupFamily("D", 3)


def sp(*window):
    return SignedPermutation(tuple(window))


_CRITERIA = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[props["criterion"]] = (report.outcome, props.get("detail", ""))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        outcome, detail = _CRITERIA[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {verdict}  {detail}")
