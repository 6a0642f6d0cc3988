"""Exhaustive counting of triangular puzzle tilings.

A puzzle of size N is a tiling of an upward triangle, cut into N^2 unit
triangles, by a fixed set of labelled pieces; adjacent pieces must agree
on their shared edge.  Counting tilings with prescribed boundary labels
computes Schubert structure constants: the 1-step pieces (over {0,1})
compute classical Littlewood-Richardson numbers, the 2-step pieces (over
{0,1,2}) compute triple intersections on two-step flag varieties.

Boundary convention (clockwise reading): the north-west side is read
from the bottom-left corner up to the apex, the north-east side from the
apex down to the bottom-right corner, and the south side from the
bottom-right corner back to the bottom-left corner.

Internally every multi-triangle piece is cut into unit triangles whose
shared edges carry auxiliary glue labels that never appear on the
boundary.  For the 1-step set the single rhombus contributes glue 'x';
for the 2-step set the three unit rhombi contribute glues 'a', 'b', 'c'
(for the label pairs 1/0, 2/0, 2/1) and the two stretchable pieces
contribute glues 'd' and 'e'.  An upward triangle is stored as
(left, right, bottom) and a downward one as (top, left, right); each
table is closed under 120-degree rotation, and no reflected piece is
present.  The tables are pinned by the golden counts in the test suite,
which also checks the counts against the independent Pieri-based route.
"""

from __future__ import annotations

from collections import defaultdict

from .combinat import ALPHABET_01, ALPHABET_012, LabelString

_UP_PATTERNS_1 = [
    ("0", "0", "0"),
    ("1", "1", "1"),
    ("1", "0", "x"),
    ("0", "x", "1"),
    ("x", "1", "0"),
]

_DOWN_PATTERNS_1 = [
    ("0", "0", "0"),
    ("1", "1", "1"),
    ("x", "0", "1"),
    ("1", "x", "0"),
    ("0", "1", "x"),
]


def _rhombus_patterns(big: str, small: str, glue: str):
    """Unit-triangle halves of the rhombus carrying ``big`` over ``small``.

    In the vertical position the two '/'-edges carry ``big`` and the two
    '\\'-edges carry ``small``; the other two positions are its rotations.
    """
    ups = [(big, small, glue), (small, glue, big), (glue, big, small)]
    downs = [(glue, small, big), (big, glue, small), (small, big, glue)]
    return ups, downs


def _build_2step():
    ups = [("0", "0", "0"), ("1", "1", "1"), ("2", "2", "2")]
    downs = [("0", "0", "0"), ("1", "1", "1"), ("2", "2", "2")]
    for big, small, glue in [("1", "0", "a"), ("2", "0", "b"), ("2", "1", "c"),
                             ("2", "a", "d"), ("c", "0", "e")]:
        u, d = _rhombus_patterns(big, small, glue)
        ups += u
        downs += d
    return ups, downs

_UP_PATTERNS_2, _DOWN_PATTERNS_2 = _build_2step()


def _index(ups, downs):
    by_left = defaultdict(tuple)
    for left, right, bottom in ups:
        by_left[left] += ((right, bottom),)
    by_top_left = {}
    for top, left, right in downs:
        key = (top, left)
        if key in by_top_left:
            raise AssertionError(f"ambiguous downward piece at {key}")
        by_top_left[key] = right
    return dict(by_left), by_top_left

_TABLES = {
    "1step": _index(_UP_PATTERNS_1, _DOWN_PATTERNS_1),
    "2step": _index(_UP_PATTERNS_2, _DOWN_PATTERNS_2),
}

_row_cache: dict[tuple, tuple] = {}
_count_cache: dict[tuple, int] = {}

# caches never change results; they are dropped wholesale when oversized
_CACHE_LIMIT = 2_000_000


def _row_fillings(kind, top, left0, right_req, bottom_req):
    """All ways to fill one row given the bottom labels of the row above.

    ``top`` has r-1 labels for a row of r upward triangles; the row's
    outer NW edge is ``left0`` and its outer NE edge must be
    ``right_req``.  Returns the tuple of possible bottom-label rows.
    """
    key = (kind, top, left0, right_req, bottom_req)
    hit = _row_cache.get(key)
    if hit is not None:
        return hit
    ups, downs = _TABLES[kind]
    r = len(top) + 1
    out = []

    def rec(j, left, acc):
        for right, bottom in ups.get(left, ()):
            if bottom_req is not None and bottom != bottom_req[j]:
                continue
            if j == r - 1:
                if right == right_req:
                    out.append(acc + (bottom,))
            else:
                nxt = downs.get((top[j], right))
                if nxt is not None:
                    rec(j + 1, nxt, acc + (bottom,))

    rec(0, left0, ())
    result = tuple(out)
    if len(_row_cache) >= _CACHE_LIMIT:
        _row_cache.clear()
    _row_cache[key] = result
    return result


def _count(nw: str, ne: str, s: str, kind: str) -> int:
    key = (kind, nw, ne, s)
    hit = _count_cache.get(key)
    if hit is not None:
        return hit
    n = len(nw)
    target = tuple(reversed(s))
    frontiers = {(): 1}
    for r in range(1, n + 1):
        left0 = nw[n - r]
        right_req = ne[r - 1]
        bottom_req = target if r == n else None
        new: dict[tuple, int] = defaultdict(int)
        for top, cnt in frontiers.items():
            for bottoms in _row_fillings(kind, top, left0, right_req, bottom_req):
                new[bottoms] += cnt
        frontiers = new
        if not frontiers:
            break
    result = frontiers.get(target, 0)
    if len(_count_cache) >= _CACHE_LIMIT:
        _count_cache.clear()
    _count_cache[key] = result
    return result


def _as_text(s, alphabet: str) -> str:
    if isinstance(s, LabelString):
        if s.alphabet != alphabet:
            raise ValueError(f"expected alphabet {alphabet!r}, got {s.alphabet!r}")
        return s.symbols
    text = str(s)
    if set(text) - set(alphabet):
        raise ValueError(f"{text!r} is not a string over {alphabet!r}")
    return text


def count_puzzles_1step(nw, ne, s) -> int:
    """Number of 1-step puzzles with the given clockwise boundary 01-strings."""
    a, b, c = (_as_text(x, ALPHABET_01) for x in (nw, ne, s))
    if not (len(a) == len(b) == len(c)):
        raise ValueError("boundary strings must have equal length")
    return _count(a, b, c, "1step")


def count_puzzles_2step(nw, ne, s) -> int:
    """Number of 2-step puzzles with the given clockwise boundary 012-strings."""
    a, b, c = (_as_text(x, ALPHABET_012) for x in (nw, ne, s))
    if not (len(a) == len(b) == len(c)):
        raise ValueError("boundary strings must have equal length")
    for symbol in "012":
        if not (a.count(symbol) == b.count(symbol) == c.count(symbol)):
            raise ValueError(f"sides disagree on the multiplicity of {symbol!r}")
    return _count(a, b, c, "2step")


def dump_fillings(nw, ne, s, kind="1step", limit=None):
    """Plain-text cell dump of complete fillings, for debugging.

    Returns one list of row strings per filling, each row listing its
    upward triangles as left/right/bottom label triples.
    """
    nw, ne, s = str(nw), str(ne), str(s)
    ups, downs = _TABLES[kind]
    n = len(nw)
    results = []

    def fill_row(r, top, rows):
        left0 = nw[n - r]
        right_req = ne[r - 1]
        bottom_req = tuple(reversed(s)) if r == n else None

        def rec(j, left, acc):
            for right, bottom in ups.get(left, ()):
                if bottom_req is not None and bottom != bottom_req[j]:
                    continue
                cell = f"{left}{right}{bottom}"
                if j == r - 1:
                    if right == right_req:
                        advance(r, tuple(x[2] for x in acc + (cell,)),
                                rows + [" ".join(acc + (cell,))])
                else:
                    nxt = downs.get((top[j], right))
                    if nxt is not None:
                        rec(j + 1, nxt, acc + (cell,))

        rec(0, left0, ())

    def advance(r, bottoms, rows):
        if r == n:
            results.append(rows)
        elif limit is None or len(results) < limit:
            fill_row(r + 1, bottoms, rows)

    fill_row(1, (), [])
    return results[:limit] if limit is not None else results


def clear_caches():
    _row_cache.clear()
    _count_cache.clear()
