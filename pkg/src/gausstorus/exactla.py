"""Sparse exact linear algebra over any exact field scalar.

Scalars must support +, -, *, equality against the ints 0 and 1, and
division either through an ``inv()`` method (CycNum) or through ``1/x``
(Fraction).  Matrices are immutable-by-convention sparse dicts mapping
(row, col) to a nonzero scalar; exact zeros are dropped eagerly, so
``==`` compares mathematical values.

Everything here is deliberately small-scale: row reduction, geometric
eigenspace dimensions, and the span closure of a unital matrix algebra.
The heavy verification paths build the same reductions directly in
structured coordinates; this module is the reference implementation
they are cross-checked against.
"""

from __future__ import annotations

from typing import Iterable, Mapping


def _inv(v):
    try:
        return v.inv()
    except AttributeError:
        return 1 / v


class ExactMatrix:
    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows: int, ncols: int, data: Mapping):
        self.nrows = nrows
        self.ncols = ncols
        clean = {}
        for (r, c), v in data.items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry {(r, c)} outside {nrows}x{ncols}")
            if v != 0:
                clean[(r, c)] = v
        self.data = clean

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        data = {}
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                data[(i, j)] = v
        return cls(len(rows), ncols, data)

    @classmethod
    def identity(cls, n: int, one) -> "ExactMatrix":
        return cls(n, n, {(i, i): one for i in range(n)})

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def nnz(self) -> int:
        return len(self.data)

    def get(self, r: int, c: int):
        """Entry at (r, c); exact zeros come back as the int 0."""
        return self.data.get((r, c), 0)

    def frozen(self):
        """Hashable canonical snapshot, usable as a dict key."""
        return (self.nrows, self.ncols, tuple(sorted(self.data.items())))

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"

    def __neg__(self):
        return ExactMatrix(
            self.nrows, self.ncols, {k: -v for k, v in self.data.items()}
        )

    def __add__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = dict(self.data)
        for k, v in other.data.items():
            cur = out.get(k)
            out[k] = v if cur is None else cur + v
        return ExactMatrix(self.nrows, self.ncols, out)

    def __sub__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError(
                    f"cannot multiply {self.shape} by {other.shape}"
                )
            rows_b: dict[int, list] = {}
            for (i, j), v in other.data.items():
                rows_b.setdefault(i, []).append((j, v))
            out: dict = {}
            for (i, k), v in self.data.items():
                for j, w in rows_b.get(k, ()):
                    cur = out.get((i, j))
                    out[(i, j)] = v * w if cur is None else cur + v * w
            return ExactMatrix(self.nrows, other.ncols, out)
        return ExactMatrix(
            self.nrows, self.ncols,
            {k: v * other for k, v in self.data.items()},
        )

    def __rmul__(self, other):
        # scalar * matrix; matrix * matrix never lands here
        return self * other

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError("matrix powers need an integer exponent >= 1")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            self.ncols, self.nrows,
            {(c, r): v for (r, c), v in self.data.items()},
        )

    def conj_transpose(self) -> "ExactMatrix":
        """Adjoint; scalars must provide conj()."""
        return ExactMatrix(
            self.ncols, self.nrows,
            {(c, r): v.conj() for (r, c), v in self.data.items()},
        )


def echelon_insert(basis: dict, vec: Mapping):
    """Reduce vec against an echelon basis {pivot: normalized row dict}.

    If a nonzero remainder survives it is normalized (pivot scaled to 1),
    inserted, and returned; otherwise returns None.  Keys only need a
    total order shared by all rows.
    """
    vec = {k: v for k, v in vec.items() if v != 0}
    while vec:
        p = min(vec)
        row = basis.get(p)
        if row is None:
            piv_inv = _inv(vec[p])
            newrow = {k: piv_inv * v for k, v in vec.items()}
            basis[p] = newrow
            return newrow
        f = vec.pop(p)
        for k, v in row.items():
            if k == p:
                continue
            cur = vec.get(k)
            nv = -(f * v) if cur is None else cur - f * v
            if nv == 0:
                vec.pop(k, None)
            else:
                vec[k] = nv
    return None


def rank(mat: ExactMatrix) -> int:
    rows: dict[int, dict] = {}
    for (i, j), v in mat.data.items():
        rows.setdefault(i, {})[j] = v
    basis: dict = {}
    for row in rows.values():
        echelon_insert(basis, row)
    return len(basis)


def kernel_dim(mat: ExactMatrix) -> int:
    return mat.ncols - rank(mat)


def eigenspace_multiplicities(mat: ExactMatrix, candidates) -> dict:
    """Geometric multiplicity of each candidate eigenvalue.

    The caller decides what a complete answer looks like (for a
    diagonalizable matrix the multiplicities sum to the size).
    """
    if mat.nrows != mat.ncols:
        raise ValueError("eigenvalues need a square matrix")
    n = mat.nrows
    out = {}
    for lam in candidates:
        data = dict(mat.data)
        for i in range(n):
            cur = data.get((i, i))
            nv = -lam if cur is None else cur - lam
            data[(i, i)] = nv
        out[lam] = kernel_dim(ExactMatrix(n, n, data))
    return out


def algebra_span_dim(generators: list[ExactMatrix]) -> int:
    """Linear dimension of the unital algebra the generators produce.

    Span closure over flattened matrices: keep an echelon basis keyed by
    (row, col) pivots, multiply every new basis element by every
    generator on both sides, and stop when nothing new appears.
    """
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].nrows
    for g in generators:
        if g.shape != (n, n):
            raise ValueError("generators must be square and of equal size")
    one = None
    for g in generators:
        for v in g.data.values():
            one = v * _inv(v)
            break
        if one is not None:
            break
    if one is None:
        return 1 if n else 0
    basis: dict = {}
    queue = []
    seed = echelon_insert(basis, {(i, i): one for i in range(n)})
    if seed is not None:
        queue.append(seed)
    while queue:
        m = ExactMatrix(n, n, queue.pop())
        for g in generators:
            for prod in (m * g, g * m):
                added = echelon_insert(basis, prod.data)
                if added is not None:
                    queue.append(added)
    return len(basis)


def projective_canonical(mat: ExactMatrix) -> ExactMatrix:
    """Scale so the first nonzero entry (in row-major order) equals 1.

    Matrices equal up to a scalar map to the same canonical form, which
    makes frozen() a projective-equality key."""
    if not mat.data:
        raise ValueError("zero matrix has no projective class")
    p = min(mat.data)
    return mat * _inv(mat.data[p])
