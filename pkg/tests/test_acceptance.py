"""Acceptance suite: one test per criterion, exact tolerances throughout.

Every check is a proven identity, so the tolerance everywhere is exact
equality of rationals, sets and multisets.  Each test prints its own
pass line (visible with -s or in captured output).  The sweep bound can
be lowered via YP_CATALOG_MAX_RANK for quick runs; the defaults cover
A1-A8, B2-B8, C2-C8, D4-D8, E6-E8, F4, G2.
"""

import pytest

from ypoles.selftest import CRITERIA

_BY_NUMBER = {number: (title, fn) for number, title, fn in CRITERIA}


@pytest.mark.parametrize("number", sorted(_BY_NUMBER), ids=lambda n: f"criterion_{n:02d}")
def test_acceptance_criterion(number):
    title, fn = _BY_NUMBER[number]
    fn()
    print(f"PASS criterion {number}: {title}")
