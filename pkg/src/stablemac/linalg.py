"""Exact sparse linear algebra over Q(q, t).

Rows are dicts ``column -> QtScalar``.  Elimination is ordinary
Gauss-Jordan over the fraction field; every entry is kept as a reduced
fraction, so there is no coefficient growth beyond the true minors.
"""

from __future__ import annotations

from .qt import QtScalar


class SingularMatrixError(ArithmeticError):
    pass


def _size(c: QtScalar) -> int:
    return len(c.num) + len(c.den)


class Echelon:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self):
        self.pivots = {}  # column -> row (dict), pivot entry normalized to 1

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v}
        for col in [c for c in row if c in self.pivots]:
            c = row.get(col)
            if not c:
                continue
            _axpy(row, self.pivots[col], -c)
        return row

    def add_row(self, row: dict, order=None, prefer=None) -> bool:
        """Insert ``row``; return True if it increased the rank.

        ``prefer`` names a column to pivot on when it survives reduction.
        """
        row = self.reduce(row)
        if not row:
            return False
        if prefer is not None and prefer in row:
            col = prefer
        elif order is None:
            col = min(row, key=lambda k: (_size(row[k]), repr(k)))
        else:
            col = min(row, key=order)
        inv = row[col].inverse()
        row = {k: v * inv for k, v in row.items()}
        for prow in self.pivots.values():
            c = prow.get(col)
            if c:
                _axpy(prow, row, -c)
        self.pivots[col] = row
        return True

    def kernel(self, columns) -> list:
        """Basis of the null space, one dict per free column."""
        free = [c for c in columns if c not in self.pivots]
        basis = []
        for f in free:
            vec = {f: QtScalar(1)}
            for pcol, prow in self.pivots.items():
                c = prow.get(f)
                if c:
                    vec[pcol] = -c
            basis.append(vec)
        return basis


def _axpy(row: dict, other: dict, a: QtScalar):
    for k, v in other.items():
        w = row.get(k)
        w = v * a if w is None else w + v * a
        if w:
            row[k] = w
        else:
            row.pop(k, None)


def kernel(rows, columns) -> list:
    ech = Echelon()
    for r in rows:
        ech.add_row(r)
    return ech.kernel(columns)


def rank(rows) -> int:
    ech = Echelon()
    for r in rows:
        ech.add_row(r)
    return ech.rank


def solve_triangular(columns_order, basis_rows, target: dict) -> dict:
    """Solve ``target = sum_j c_j basis_rows[j]`` when basis row ``j`` has
    leading entry at column ``columns_order[j]`` and no entries at columns
    earlier in the order.  Raises :class:`SingularMatrixError` otherwise."""
    rem = {k: v for k, v in target.items() if v}
    coeffs = {}
    for key, row in zip(columns_order, basis_rows):
        lead = row.get(key)
        if not lead:
            raise SingularMatrixError(f"zero diagonal entry at {key}")
        c = rem.get(key)
        if not c:
            continue
        c = c / lead
        coeffs[key] = c
        _axpy(rem, row, -c)
    if rem:
        raise SingularMatrixError(f"target not in the span; leftover {sorted(rem)[:3]}")
    return coeffs
