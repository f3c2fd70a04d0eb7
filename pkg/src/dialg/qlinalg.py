"""Exact rational linear algebra: RREF, rank, row-space membership.

Dense :class:`QMatrix` with fraction-free elimination for the auditable
matrices, and :class:`EchelonBasis`, an incremental sparse row space used when
many generator rows are streamed in.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Rational = Fraction


@dataclass(frozen=True)
class QMatrix:
    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], ncols: int | None = None) -> "QMatrix":
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for an empty matrix")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"row of length {len(r)} in a matrix with {ncols} columns")
        return cls(rows, ncols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.from_rows(([int(i == j) for j in range(n)] for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "QMatrix":
        if not self.rows:
            return QMatrix((), 0)
        return QMatrix(tuple(zip(*self.rows)), self.nrows)

    def stack(self, other: "QMatrix") -> "QMatrix":
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        return QMatrix(self.rows + other.rows, self.ncols)

    def head(self, k: int) -> "QMatrix":
        return QMatrix(self.rows[:k], self.ncols)

    def to_json(self) -> dict:
        return {"rows": self.nrows, "cols": self.ncols, "entries": [[str(x) for x in r] for r in self.rows]}


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    den = lcm(*(x.denominator for x in row)) if row else 1
    return [int(x * den) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    return [x // g for x in row] if g > 1 else row


def rref(m: QMatrix) -> tuple[QMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form, rank and pivot columns.

    Elimination runs on primitive integer rows (cross-multiplication followed by
    division by the row content), then each pivot row is scaled to a leading 1.
    """
    a = [_integer_row(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f, g = piv[c], a[i][c]
                a[i] = _primitive([f * x - g * y for x, y in zip(a[i], piv)])
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    out = []
    for i, c in enumerate(pivots):
        lead = a[i][c]
        out.append(tuple(Fraction(x, lead) for x in a[i]))
    zero = tuple(Fraction(0) for _ in range(m.ncols))
    out.extend(zero for _ in range(m.nrows - len(pivots)))
    return QMatrix(tuple(out), m.ncols), len(pivots), tuple(pivots)


def rank(m: QMatrix) -> int:
    return rref(m)[1]


def _reduce_dense(reduced: QMatrix, pivots: Sequence[int], v: Sequence[Fraction]) -> list[Fraction]:
    v = [Fraction(x) for x in v]
    for i, c in enumerate(pivots):
        if v[c]:
            f = v[c]
            row = reduced.rows[i]
            v = [x - f * y for x, y in zip(v, row)]
    return v


def row_space_contains(m: QMatrix, v: Sequence) -> bool:
    if len(v) != m.ncols:
        raise ValueError(f"vector of length {len(v)} against {m.ncols} columns")
    red, _, piv = rref(m)
    return not any(_reduce_dense(red, piv, v))


def row_space_equal(a: QMatrix, b: QMatrix) -> bool:
    if a.ncols != b.ncols:
        raise ValueError("column counts differ")
    ra, rb = rref(a), rref(b)
    # the nonzero rows of the RREF determine the row space
    return ra[1] == rb[1] and ra[0].rows[: ra[1]] == rb[0].rows[: rb[1]]


class EchelonBasis:
    """Incrementally built row space over Q with sparse rows ``{col: value}``.

    Stored rows are fully reduced against each other, so reducing a vector is a
    single pass over the pivot columns it touches.
    """

    def __init__(self, ncols: int | None = None):
        self.ncols = ncols
        self._rows: dict[int, dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    def reduce(self, vec: Mapping[int, Fraction]) -> dict[int, Fraction]:
        v = {c: Fraction(x) for c, x in vec.items() if x}
        for c in [c for c in v if c in self._rows]:
            f = v.get(c)
            if not f:
                continue
            for k, y in self._rows[c].items():
                x = v.get(k, 0) - f * y
                if x:
                    v[k] = x
                else:
                    v.pop(k, None)
        return v

    def add(self, vec: Mapping[int, Fraction]) -> bool:
        """Insert a vector; return True when the rank grows."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        lead = v[p]
        v = {k: x / lead for k, x in v.items()}
        for row in self._rows.values():
            f = row.get(p)
            if f:
                for k, y in v.items():
                    x = row.get(k, 0) - f * y
                    if x:
                        row[k] = x
                    else:
                        del row[k]
        self._rows[p] = v
        return True

    def extend(self, vecs: Iterable[Mapping[int, Fraction]]) -> int:
        return sum(self.add(v) for v in vecs)

    def contains(self, vec: Mapping[int, Fraction]) -> bool:
        return not self.reduce(vec)

    def copy(self) -> "EchelonBasis":
        out = EchelonBasis(self.ncols)
        out._rows = {p: dict(r) for p, r in self._rows.items()}
        return out

    def to_qmatrix(self) -> QMatrix:
        if self.ncols is None:
            raise ValueError("ncols unknown")
        rows = []
        for p in self.pivots:
            r = self._rows[p]
            rows.append([r.get(j, 0) for j in range(self.ncols)])
        return QMatrix.from_rows(rows, self.ncols)


def dense(vec: Mapping[int, Fraction], ncols: int) -> list[Fraction]:
    out = [Fraction(0)] * ncols
    for c, x in vec.items():
        out[c] = Fraction(x)
    return out


def sparse(v: Sequence) -> dict[int, Fraction]:
    return {i: Fraction(x) for i, x in enumerate(v) if x}


def dump_matrices(path, matrices: Mapping[str, QMatrix]) -> None:
    doc = {"schema": 1, "matrices": {k: m.to_json() for k, m in matrices.items()}}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
