"""Printed ASP count tables for n = 4..7, keyed by ``(r, l)``.

Values are the factorization strings as printed, with ``*`` for the product
sign. ``ERRATA`` lists cells where the printed value contradicts the
reflection symmetry ``(n, l, r) <-> (n, 2n-3-r, 2n-3-l)``, with the value that
symmetry (and brute-force enumeration) forces.
"""

from __future__ import annotations

import re

PRINTED: dict[int, dict[tuple[int, int], str]] = {
    4: {
        (3, 0): "2*7", (3, 1): "3^2", (3, 2): "0",
        (4, 0): "5*7", (4, 1): "2^2*7", (4, 2): "3^2",
        (5, 0): "2*3*7", (5, 1): "5*73", (5, 2): "2*7",
    },
    5: {
        (4, 0): "2*3*7", (4, 1): "2^2*7", (4, 2): "0", (4, 3): "0",
        (5, 0): "3*73", (5, 1): "2^3*23", (5, 2): "2^3*3^2", (5, 3): "0",
        (6, 0): "3^2*43", (6, 1): "3*5*23", (6, 2): "2^3*23", (6, 3): "2^2*7",
        (7, 0): "3*11*13", (7, 1): "3^2*43", (7, 2): "3*73", (7, 3): "2*3*7",
    },
    6: {
        (5, 0): "2^2*3*11", (5, 1): "2*3^2*5", (5, 2): "0", (5, 3): "0", (5, 4): "0",
        (6, 0): "2*797", (6, 1): "5^3*11", (6, 2): "3*199", (6, 3): "0", (6, 4): "0",
        (7, 0): "2*11*13*17", (7, 1): "5^2*179", (7, 2): "2*5^3*11", (7, 3): "3*199", (7, 4): "0",
        (8, 0): "7^2*11*13", (8, 1): "2*11*13*23", (8, 2): "5^2*179", (8, 3): "5^6*11", (8, 4): "2*3^2*5",
        (9, 0): "2^2*11*13^2", (9, 1): "7^2*11*13", (9, 2): "2*11*13*17", (9, 3): "2*797", (9, 4): "2^2*3*11",
    },
    7: {
        (6, 0): "3*11*13", (6, 1): "3^3*11", (6, 2): "0", (6, 3): "0", (6, 4): "0", (6, 5): "0",
        (7, 0): "5*13*199", (7, 1): "11*1031", (7, 2): "3^2*11*53", (7, 3): "0", (7, 4): "0", (7, 5): "0",
        (8, 0): "5*11*13*107", (8, 1): "3*11*13*167", (8, 2): "2*11^2*197", (8, 3): "11*31*37",
        (8, 4): "0", (8, 5): "0",
        (9, 0): "2^3*3*13^2*41", (9, 1): "13*12253", (9, 2): "13^2*709", (9, 3): "2*11^2*197",
        (9, 4): "3^2*11*53", (9, 5): "0",
        (10, 0): "2^5*3*13^3", (10, 1): "2^2*7*13^2*43", (10, 2): "13*12253", (10, 3): "3*11*13*167",
        (10, 4): "11*1031", (10, 5): "3^3*11",
        (11, 0): "2^2*13^2*17*19", (11, 1): "2^5*3*13^3", (11, 2): "2^3*3*13^2*41",
        (11, 3): "5*11*13*107", (11, 4): "5*13*199", (11, 5): "3*11*13",
    },
}

# (n, r, l) -> corrected value
ERRATA: dict[tuple[int, int, int], int] = {
    (4, 5, 1): 35,
    (6, 8, 3): 1375,
}


def parse_factorization(s: str) -> int:
    """``"2^2*7"`` -> 28; also accepts the middle dot as separator."""
    s = s.replace("·", "*").replace(" ", "")
    if not re.fullmatch(r"\d+(\^\d+)?(\*\d+(\^\d+)?)*", s):
        raise ValueError(f"not a factorization: {s!r}")
    v = 1
    for part in s.split("*"):
        base, _, exp = part.partition("^")
        v *= int(base) ** (int(exp) if exp else 1)
    return v
