import logging

from ..qfield import QRat

logger = logging.getLogger(__name__)


def _size(value: QRat) -> int:
    return len(value.num.terms) + len(value.den.terms)


def _combine(row: dict, a: QRat, pivot_row: dict, b: QRat) -> dict:
    """a * row - b * pivot_row, dropping zeros"""
    out = {}
    for col, value in row.items():
        out[col] = value * a
    for col, value in pivot_row.items():
        v = out.get(col)
        v = -(value * b) if v is None else v - value * b
        if v:
            out[col] = v
        else:
            out.pop(col, None)
    return {col: v for col, v in out.items() if v}


def row_echelon(rows, columns):
    """
    Fraction-free Gaussian elimination over Q(q)

    Columns are eliminated in the given order. Among the rows with a nonzero
    entry in the current column the pivot is the one whose entry has the fewest
    terms, ties broken by the number of nonzero entries, and every other row r
    becomes a * r - b * pivot so no division happens.

    Parameters
    ----------
    rows : iterable of dict
        Sparse rows, column -> QRat (or anything `QRat.coerce` accepts); entries
        in columns not listed are ignored

    columns : sequence
        The column order

    Returns
    -------
    (list, list)
        The pivot columns in order, and the matching pivot rows
    """
    allowed = set(columns)
    remaining = []
    for row in rows:
        clean = {c: QRat.coerce(v) for c, v in row.items() if c in allowed}
        clean = {c: v for c, v in clean.items() if v}
        if clean:
            remaining.append(clean)

    pivots, pivot_rows = [], []
    for col in columns:
        best = None
        for idx, row in enumerate(remaining):
            value = row.get(col)
            if value is None:
                continue
            cost = (_size(value), len(row))
            if best is None or cost < best[0]:
                best = (cost, idx)
        if best is None:
            continue
        pivot = remaining.pop(best[1])
        a = pivot[col]
        reduced = []
        for row in remaining:
            b = row.get(col)
            if b is None:
                reduced.append(row)
                continue
            new = _combine(row, a, pivot, b)
            if new:
                reduced.append(new)
        remaining = reduced
        pivots.append(col)
        pivot_rows.append(pivot)
        if not remaining:
            break
    logger.debug("Elimination on %d columns found %d pivots", len(columns), len(pivots))
    return pivots, pivot_rows


def pivot_columns(rows, columns) -> list:
    return row_echelon(rows, columns)[0]


def rank(rows, columns) -> int:
    return len(pivot_columns(rows, columns))
