import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from latticetri.centers import Triangle  # noqa: E402

# origin-based example triangles (x1, y1, x2, y2)
FIG1 = (2, 0, 2, 3)
FIG2 = (12, 0, 12, 18)
FIG3 = (4, 2, 1, 5)
FIG4 = (6, 0, 8, 4)
RADIUS13 = (19, 17, 11, 23)
CONVERSE = (2, 0, 1, 3)
GH_NOT_F = (3, 3, 3, 18)
GH_EVEN_AREA_NOT_F = (12, 6, 12, 18)
ALL_SIX = (18, 0, 24, 12)


def tri(c):
    return Triangle.from_origin(*c)


@pytest.fixture
def fig1():
    return tri(FIG1)


def _nondegenerate(c):
    ax, ay, bx, by, cx, cy = c
    return (ax - cx) * (by - cy) - (ay - cy) * (bx - cx) != 0


def triangles(lo=-40, hi=40):
    c = st.integers(lo, hi)
    return (st.tuples(c, c, c, c, c, c).filter(_nondegenerate)
            .map(lambda v: Triangle((v[0], v[1]), (v[2], v[3]), (v[4], v[5]))))


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
