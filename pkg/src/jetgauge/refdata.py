"""Transcribed reference displays that the verification suites pin verbatim.

PROCA_TABLE_REFERENCE is the quoted 28x28 table of tr(h X_ij X_ij) values,
row for row.  JET_LISTING_REFERENCE is the quoted order-by-order listing of
timelike/spacelike jet monomials for four axes up to third order.
"""

from __future__ import annotations

_ROWS = """
0 0 0 0 -1 1 1 1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1
0 0 0 0 -1 1 1 1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1
0 0 0 0 -1 1 1 1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1
0 0 0 0 -1 1 1 1 1 1 1 1 1 1 1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1 -1
-1 -1 -1 -1 0 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2
1 1 1 1 0 0 2 2 2 2 2 2 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 0 2 0 2 2 2 2 2 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 0 2 2 0 2 2 2 2 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 0 2 2 2 0 2 2 2 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 0 2 2 2 2 0 2 2 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 0 2 2 2 2 2 0 2 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 0 2 2 2 2 2 2 0 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 0 2 2 2 2 2 2 2 0 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 0 2 2 2 2 2 2 2 2 0 2 0 0 0 0 0 0 0 0 0 0 0 0 0
1 1 1 1 0 2 2 2 2 2 2 2 2 2 0 0 0 0 0 0 0 0 0 0 0 0 0 0
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 0 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 0 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 0 -2 -2 -2 -2 -2 -2 -2 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 0 -2 -2 -2 -2 -2 -2 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 -2 0 -2 -2 -2 -2 -2 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 -2 -2 0 -2 -2 -2 -2 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 -2 -2 -2 0 -2 -2 -2 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 -2 -2 -2 -2 0 -2 -2 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 -2 -2 -2 -2 -2 0 -2 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 0 -2 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 0 -2
-1 -1 -1 -1 -2 0 0 0 0 0 0 0 0 0 0 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 -2 0
"""

PROCA_TABLE_REFERENCE: list[list[int]] = [
    [int(tok) for tok in line.split()] for line in _ROWS.strip().splitlines()
]

assert len(PROCA_TABLE_REFERENCE) == 28
assert all(len(row) == 28 for row in PROCA_TABLE_REFERENCE)

# (order, timelike?) -> quoted monomial labels, in quoted order
JET_LISTING_REFERENCE: dict[tuple[int, bool], list[str]] = {
    (1, True): ["t"],
    (1, False): ["x", "y", "z"],
    (2, True): ["tx", "ty", "tz"],
    (2, False): ["tt", "xx", "xy", "xz", "yy", "yz", "zz"],
    (3, True): ["ttt", "txx", "txy", "txz", "tyy", "tyz", "tzz"],
    (3, False): [
        "ttx", "tty", "ttz", "xxx", "xxy", "xxz", "xyy",
        "xyz", "xzz", "yyy", "yyz", "yzz", "zzz",
    ],
}

MODE_CENSUS_REFERENCE = {
    (3, 3): (21, 78, 91),
    (1, 3): (28, 52, 0),
    (2, 3): (21, 13, 46),
}
