import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from subreg import matching  # noqa: E402
from subreg.multigraph import Multigraph, parse_multigraph  # noqa: E402

K4_TEXT = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


@pytest.fixture
def k4():
    return parse_multigraph(K4_TEXT)


@pytest.fixture
def triple():
    return Multigraph(2, ((0, 1), (0, 1), (0, 1)))


@pytest.fixture
def path3():
    return Multigraph(3, ((0, 1), (1, 2)))


def cycle_graph(k: int) -> Multigraph:
    return Multigraph(k, tuple((i, (i + 1) % k) for i in range(k)))


def balloon_star() -> Multigraph:
    """Centre 0 joined by cut-edges to three 3-vertex balloons (n = 10)."""
    edges = []
    n = 1
    for _ in range(3):
        s, p, q = n, n + 1, n + 2
        edges += [(0, s), (s, p), (p, q), (p, q), (q, s)]
        n += 3
    return Multigraph(n, tuple(edges))


# Acceptance criteria report their outcome here; printed after the run.
ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}

# Every LemmaViolation constructed anywhere in the run, caught or not.
LEMMA_VIOLATIONS: list[str] = []
_original_init = matching.LemmaViolation.__init__


def _recording_init(self, *args):
    LEMMA_VIOLATIONS.append(str(args[0]) if args else "")
    _original_init(self, *args)


matching.LemmaViolation.__init__ = _recording_init


def pytest_sessionfinish(session, exitstatus):
    if LEMMA_VIOLATIONS:
        ACCEPTANCE_RESULTS[5] = ("FAIL", f"lemma violation fired {len(LEMMA_VIOLATIONS)} times in the run")
        session.exitstatus = 1
    elif 5 in ACCEPTANCE_RESULTS:
        status, detail = ACCEPTANCE_RESULTS[5]
        ACCEPTANCE_RESULTS[5] = (status, detail.replace("so far in the run", "in the whole run"))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        status, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {status:4s}  {detail}")
