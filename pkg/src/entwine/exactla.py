"""Exact dense linear algebra over the rationals.

Every structure in this package is a matrix of Fractions over a chosen
basis; this module is the substrate they all compute on.  There is no
floating point and no tolerance anywhere: comparisons are exact equality
of canonical rationals.

Conventions fixed here and used everywhere else:

* column j of a Matrix is the image of basis vector j;
* the flat index of e_i (x) f_j in U (x) V is ``i * dim(V) + j`` (left
  factor major), and the same recursively for longer tensor products;
* rationals serialize as ``"p/q"`` (or ``"p"`` when q == 1), canonical
  form, ASCII, no whitespace.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RAT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class NotInvertibleError(ValueError):
    """Raised when a square matrix (or algebra element) has no inverse."""


def rat_to_str(x: Fraction) -> str:
    "Canonical string form of a rational: 'p/q' or 'p' when q == 1."
    return str(Fraction(x))


def rat_from_str(s: str) -> Fraction:
    """Parse a canonical rational string, rejecting non-canonical input.

    '2/4', '1/-2', '3/1' and anything with whitespace are all errors;
    load/save round trips must be bit-exact.
    """
    m = _RAT_RE.match(s)
    if not m:
        raise ValueError(f"malformed rational {s!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if den <= 0:
        raise ValueError(f"non-positive denominator in {s!r}")
    if den == 1:
        raise ValueError(f"non-canonical rational {s!r} (write {num} instead)")
    if gcd(abs(num), den) != 1:
        raise ValueError(f"non-canonical rational {s!r} (not in lowest terms)")
    return Fraction(num, den)


def _as_rat(x) -> Fraction:
    # hot path: internal construction already carries Fractions
    return x if type(x) is Fraction else Fraction(x)


class Vector:
    """Immutable coefficient vector over Q."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(_as_rat(c) for c in coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @staticmethod
    def zero(dim: int) -> "Vector":
        return Vector([ZERO] * dim)

    @staticmethod
    def basis(dim: int, i: int) -> "Vector":
        coords = [ZERO] * dim
        coords[i] = ONE
        return Vector(coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return Vector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Vector") -> "Vector":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return Vector([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "Vector":
        return Vector([-a for a in self.coords])

    def scale(self, c) -> "Vector":
        c = Fraction(c)
        return Vector([c * a for a in self.coords])

    def dot(self, other: "Vector") -> Fraction:
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        return sum((a * b for a, b in zip(self.coords, other.coords)), ZERO)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def sparse(self) -> dict[int, Fraction]:
        return {i: c for i, c in enumerate(self.coords) if c != 0}

    def __repr__(self):
        return "Vector([%s])" % ", ".join(rat_to_str(c) for c in self.coords)


class Matrix:
    """Immutable dense row-major matrix over Q.

    Treated as a linear map: ``nrows x ncols`` sends a ``ncols``-vector to
    a ``nrows``-vector; column j is the image of basis vector j.
    """

    __slots__ = ("nrows", "ncols", "_rows", "_colcache")

    def __init__(self, rows):
        self._rows = tuple(tuple(_as_rat(x) for x in row) for row in rows)
        self.nrows = len(self._rows)
        self.ncols = len(self._rows[0]) if self._rows else 0
        if any(len(r) != self.ncols for r in self._rows):
            raise ValueError("ragged rows")
        self._colcache = None

    @staticmethod
    def zero(nrows: int, ncols: int) -> "Matrix":
        return Matrix([[ZERO] * ncols for _ in range(nrows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def from_cols(cols: list[Vector] | list[list[Fraction]], nrows: int | None = None) -> "Matrix":
        cols = [list(c) for c in cols]
        if nrows is None:
            nrows = len(cols[0])
        return Matrix([[cols[j][i] for j in range(len(cols))] for i in range(nrows)])

    def row(self, i: int) -> Vector:
        return Vector(self._rows[i])

    def col(self, j: int) -> Vector:
        return Vector([self._rows[i][j] for i in range(self.nrows)])

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def rows(self):
        return self._rows

    def sparse_cols(self) -> list[list[tuple[int, Fraction]]]:
        "Cached nonzero entries per column, as (row, value) lists."
        if self._colcache is None:
            cols = [[] for _ in range(self.ncols)]
            for i, row in enumerate(self._rows):
                for j, x in enumerate(row):
                    if x != 0:
                        cols[j].append((i, x))
            self._colcache = cols
        return self._colcache

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash(self._rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self._rows])

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix([[c * a for a in r] for r in self._rows])

    def __mul__(self, other):
        "Composition with a Matrix, or application to a Vector."
        if isinstance(other, Vector):
            return self.apply(other)
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch in product")
        # iterate over the sparse columns of the right factor
        out = [[ZERO] * other.ncols for _ in range(self.nrows)]
        rcols = other.sparse_cols()
        for j in range(other.ncols):
            col = rcols[j]
            if not col:
                continue
            for i in range(self.nrows):
                row = self._rows[i]
                s = ZERO
                for k, x in col:
                    rk = row[k]
                    if rk != 0:
                        s += rk * x
                out[i][j] = s
        return Matrix(out)

    def apply(self, v: Vector) -> Vector:
        if self.ncols != v.dim:
            raise ValueError("shape mismatch in apply")
        out = [ZERO] * self.nrows
        for j, x in enumerate(v.coords):
            if x == 0:
                continue
            for i, m in self.sparse_cols()[j]:
                out[i] += m * x
        return Vector(out)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def is_identity(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(
            self._rows[i][j] == (ONE if i == j else ZERO)
            for i in range(self.nrows)
            for j in range(self.ncols)
        )

    def __repr__(self):
        body = "; ".join(
            " ".join(rat_to_str(x) for x in row) for row in self._rows
        )
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product realizing the tensor product of linear maps.

    (a (x) b)(v (x) w) = a(v) (x) b(w) under the left-factor-major flat
    index convention; shapes multiply.
    """
    out = [[ZERO] * (a.ncols * b.ncols) for _ in range(a.nrows * b.nrows)]
    for i in range(a.nrows):
        arow = a._rows[i]
        for j in range(a.ncols):
            x = arow[j]
            if x == 0:
                continue
            for k in range(b.nrows):
                brow = b._rows[k]
                orow = out[i * b.nrows + k]
                off = j * b.ncols
                for l in range(b.ncols):
                    if brow[l] != 0:
                        orow[off + l] = x * brow[l]
    return Matrix(out)


def kron_many(mats: list[Matrix]) -> Matrix:
    m = mats[0]
    for n in mats[1:]:
        m = kron(m, n)
    return m


@dataclass(frozen=True)
class AffineSolution:
    """Full solution set of a consistent affine system a.x = b.

    ``particular`` solves the inhomogeneous system; ``nullspace_basis``
    is a linearly independent basis of solutions of a.x = 0, so the set
    of all solutions is particular + span(nullspace_basis).
    """

    particular: Vector
    nullspace_basis: tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.nullspace_basis)


def _eliminate(rows: list[dict[int, Fraction]], ncols: int):
    """Gauss-Jordan elimination on sparse rows (in place).

    Pivot selection is deterministic: columns left to right, first row
    (in current order) with a nonzero entry in that column; the pivot
    column is cleared from every other row.  Returns the list of
    (row_index, pivot_col) pairs in elimination order.
    """
    pivots = []
    pivoted: set[int] = set()
    for col in range(ncols):
        piv = None
        for r in range(len(rows)):
            if r not in pivoted and rows[r].get(col, ZERO) != 0:
                piv = r
                break
        if piv is None:
            continue
        pivoted.add(piv)
        pivots.append((piv, col))
        prow = rows[piv]
        pval = prow[col]
        for r in range(len(rows)):
            if r == piv:
                continue
            rv = rows[r].get(col)
            if not rv:
                continue
            factor = rv / pval
            row = rows[r]
            for c, x in prow.items():
                nv = row.get(c, ZERO) - factor * x
                if nv == 0:
                    row.pop(c, None)
                else:
                    row[c] = nv
    return pivots


def solve_affine(a: Matrix, b: Vector) -> AffineSolution | None:
    """Exact affine solve of a.x = b; None when inconsistent.

    RHS is carried in the augmented column; free variables are set to 0
    for the particular solution and swept one at a time for the
    nullspace basis.
    """
    if a.nrows != b.dim:
        raise ValueError("rows(a) must equal dim(b)")
    n = a.ncols
    rows: list[dict[int, Fraction]] = []
    for i in range(a.nrows):
        row = {j: x for j, x in enumerate(a._rows[i]) if x != 0}
        if b[i] != 0:
            row[n] = b[i]  # augmented column
        rows.append(row)
    pivots = _eliminate(rows, n)
    piv_rows = {r for r, _ in pivots}
    for r, row in enumerate(rows):
        if r not in piv_rows and row.get(n, ZERO) != 0:
            return None
    piv_cols = {c for _, c in pivots}
    free_cols = [c for c in range(n) if c not in piv_cols]

    def backsub(free_values: dict[int, Fraction]) -> Vector:
        x = [ZERO] * n
        for c, v in free_values.items():
            x[c] = v
        for r, c in reversed(pivots):
            row = rows[r]
            s = row.get(n, ZERO)
            for cc, coeff in row.items():
                if cc != c and cc != n:
                    s -= coeff * x[cc]
            x[c] = s / row[c]
        return Vector(x)

    particular = backsub({})
    null_basis = []
    for f in free_cols:
        hom_rows = [dict(rows[r]) for r, _ in pivots]
        for row in hom_rows:
            row.pop(n, None)
        x = [ZERO] * n
        x[f] = ONE
        for (r, c), row in zip(reversed(pivots), reversed(hom_rows)):
            s = ZERO
            for cc, coeff in row.items():
                if cc != c:
                    s -= coeff * x[cc]
            x[c] = s / row[c]
        null_basis.append(Vector(x))
    return AffineSolution(particular, tuple(null_basis))


def invert(a: Matrix) -> Matrix:
    "Exact inverse of a square matrix; raises NotInvertibleError."
    if a.nrows != a.ncols:
        raise NotInvertibleError("matrix is not square")
    n = a.nrows
    rows: list[dict[int, Fraction]] = []
    for i in range(n):
        row = {j: x for j, x in enumerate(a._rows[i]) if x != 0}
        row[n + i] = ONE  # augmented identity block
        rows.append(row)
    pivots = _eliminate(rows, n)
    if len(pivots) < n:
        raise NotInvertibleError("matrix is rank-deficient")
    inv = [[ZERO] * n for _ in range(n)]
    for r, c in pivots:
        row = rows[r]
        pval = row[c]
        for cc, x in row.items():
            if cc >= n:
                inv[c][cc - n] = x / pval
    return Matrix(inv)


def try_invert(a: Matrix) -> Matrix | None:
    try:
        return invert(a)
    except NotInvertibleError:
        return None


# ---------------------------------------------------------------------------
# Sparse tensor-contraction kernel.
#
# Intermediate states of a structural computation (an axiom side, a
# structure-map column) are sparse vectors in a tensor product of basis
# spaces, keyed by index tuples.  A TensorOp applies one linear map to a
# contiguous block of legs; permutations rearrange legs.  Everything is
# exact and allocation-light: dims stay <= 16 throughout the corpus.
# ---------------------------------------------------------------------------

State = dict[tuple, Fraction]


def flatten_index(dims: tuple[int, ...], idx: tuple[int, ...]) -> int:
    flat = 0
    for d, i in zip(dims, idx):
        flat = flat * d + i
    return flat


def unflatten_index(dims: tuple[int, ...], flat: int) -> tuple[int, ...]:
    idx = []
    for d in reversed(dims):
        idx.append(flat % d)
        flat //= d
    return tuple(reversed(idx))


class TensorOp:
    """Sparse column view of a linear map between tensor-index spaces.

    Wraps a Matrix whose row/column spaces factor as ``out_dims`` and
    ``in_dims``; ``cols(legs)`` returns the image of a basis tuple as a
    list of (out_tuple, coefficient) pairs.
    """

    __slots__ = ("matrix", "in_dims", "out_dims", "arity_in", "arity_out", "_cols")

    def __init__(self, matrix: Matrix, in_dims, out_dims):
        self.matrix = matrix
        self.in_dims = tuple(in_dims)
        self.out_dims = tuple(out_dims)
        if prod(self.in_dims) != matrix.ncols or prod(self.out_dims) != matrix.nrows:
            raise ValueError("tensor dims inconsistent with matrix shape")
        self.arity_in = len(self.in_dims)
        self.arity_out = len(self.out_dims)
        self._cols: dict[tuple, list] = {}

    def cols(self, legs: tuple) -> list[tuple[tuple, Fraction]]:
        cached = self._cols.get(legs)
        if cached is None:
            flat = flatten_index(self.in_dims, legs)
            cached = [
                (unflatten_index(self.out_dims, i), x)
                for i, x in self.matrix.sparse_cols()[flat]
            ]
            self._cols[legs] = cached
        return cached


def basis_state(idx: tuple) -> State:
    return {tuple(idx): ONE}


def sv_apply(state: State, pos: int, op: TensorOp) -> State:
    "Apply op to the legs [pos, pos + op.arity_in) of every key."
    out: State = {}
    a_in = op.arity_in
    for key, c in state.items():
        head, legs, tail = key[:pos], key[pos : pos + a_in], key[pos + a_in :]
        for out_legs, x in op.cols(legs):
            nk = head + out_legs + tail
            nv = out.get(nk, ZERO) + c * x
            if nv == 0:
                out.pop(nk, None)
            else:
                out[nk] = nv
    return out


def sv_permute(state: State, perm: tuple[int, ...]) -> State:
    "Reorder legs: new_key[i] = old_key[perm[i]]."
    return {tuple(key[p] for p in perm): c for key, c in state.items()}


def sv_scale(state: State, c: Fraction) -> State:
    if c == 0:
        return {}
    return {k: c * v for k, v in state.items()}


def sv_add(dst: State, src: State, c: Fraction = ONE) -> None:
    for k, v in src.items():
        nv = dst.get(k, ZERO) + c * v
        if nv == 0:
            dst.pop(k, None)
        else:
            dst[k] = nv


def sv_equal(s1: State, s2: State) -> bool:
    return s1 == s2


def state_to_vector(state: State, dims: tuple[int, ...]) -> Vector:
    coords = [ZERO] * prod(dims) if dims else [ZERO]
    if not dims:
        # scalar-valued state: the only key is ()
        return Vector([state.get((), ZERO)])
    for key, c in state.items():
        coords[flatten_index(dims, key)] = c
    return Vector(coords)


def matrix_from_columns_fn(in_dims, out_dims, fn) -> Matrix:
    """Assemble the matrix of a map given column-wise on basis tuples.

    ``fn`` maps an input basis tuple to a State over ``out_dims``.
    """
    in_dims = tuple(in_dims)
    out_dims = tuple(out_dims)
    ncols = prod(in_dims)
    nrows = prod(out_dims)
    out = [[ZERO] * ncols for _ in range(nrows)]
    for idx in itertools.product(*(range(d) for d in in_dims)):
        j = flatten_index(in_dims, idx)
        for key, c in fn(idx).items():
            out[flatten_index(out_dims, key)][j] = c
    return Matrix(out)
