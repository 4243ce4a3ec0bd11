"""Exact rational linear algebra and bounded-polytope vertex enumeration.

Scalars are arbitrary precision: plain int for lattice data, fractions.Fraction
for everything else. There is no floating point and no epsilon anywhere;
equality of points means equality of reduced fractions.

Vectors are tuples, matrices are tuples of row tuples. An H-polytope is a
finite intersection of closed halfspaces {w : <normal, w> >= offset}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import EmptyPolytope, Unbounded

# The value type for every threshold and coordinate: exact p/q, reduced,
# positive denominator, arbitrary precision. fractions.Fraction guarantees
# all of that.
Rational = Fraction


# ---------------------------------------------------------------------------
# vector and matrix helpers


def dot(u: Sequence, v: Sequence):
    """Exact inner product of two equal-length vectors."""
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def primitive_vector(v: Sequence[int]) -> tuple[int, ...]:
    """The primitive part of a nonzero integer vector: v divided by gcd(v)."""
    g = 0
    for c in v:
        g = gcd(g, c)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return tuple(c // g for c in v)


def identity_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m))


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_det(m) -> Fraction:
    """Exact determinant by fraction elimination (matrices here are tiny)."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def mat_rank(rows: Iterable[Sequence]) -> int:
    """Rank over Q of a list of row vectors."""
    work = [[Fraction(x) for x in row] for row in rows]
    if not work:
        return 0
    width = len(work[0])
    rank = 0
    for col in range(width):
        piv = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        inv = 1 / work[rank][col]
        for r in range(rank + 1, len(work)):
            if work[r][col]:
                f = work[r][col] * inv
                work[r] = [x - f * y for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == min(len(work), width):
            break
    return rank


# ---------------------------------------------------------------------------
# H-polytopes


@dataclass(frozen=True)
class HalfSpace:
    """The closed halfspace {w : <normal, w> >= offset}."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        normal = tuple(Fraction(c) for c in self.normal)
        if not normal or all(c == 0 for c in normal):
            raise ValueError("halfspace normal must be nonzero")
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "offset", Fraction(self.offset))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def contains(self, point: Sequence) -> bool:
        return dot(self.normal, point) >= self.offset


@dataclass(frozen=True)
class HPolytope:
    """An intersection of finitely many halfspaces of one dimension."""

    halfspaces: tuple[HalfSpace, ...]

    def __post_init__(self):
        halfspaces = tuple(self.halfspaces)
        if not halfspaces:
            raise ValueError("need at least one halfspace")
        d = halfspaces[0].dim
        if any(h.dim != d for h in halfspaces):
            raise ValueError("halfspaces of mixed dimension")
        object.__setattr__(self, "halfspaces", halfspaces)

    @property
    def dim(self) -> int:
        return self.halfspaces[0].dim

    def contains(self, point: Sequence) -> bool:
        return all(h.contains(point) for h in self.halfspaces)


def _integer_rows(poly: HPolytope) -> list[tuple[int, ...]]:
    """Each halfspace rescaled to integer entries, as (normal..., offset)."""
    rows = []
    for h in poly.halfspaces:
        den = 1
        for c in (*h.normal, h.offset):
            den = lcm(den, c.denominator)
        rows.append(tuple(int(c * den) for c in (*h.normal, h.offset)))
    return rows


def _full_rank_subsets(rows, width: int, depth: int):
    """Yield a triangular form for every depth-subset of rows whose leading
    width columns are linearly independent.

    Rows are integer tuples and may carry trailing payload columns (offsets),
    which the elimination transforms alongside. Pivots are searched among the
    first width columns only. The elimination is fraction-free (Bareiss), so
    all intermediate entries stay integers; each yielded triangle is a list of
    (pivot_col, row) in elimination order.
    """

    def descend(tail, triangle, divisor, picked):
        if picked == depth:
            yield triangle
            return
        # keep enough rows below to still reach the target depth
        budget = len(tail) - (depth - picked) + 1
        for pos in range(budget):
            row = tail[pos]
            pc = next((c for c in range(width) if row[c]), -1)
            if pc < 0:
                continue
            piv = row[pc]
            reduced = []
            for r in tail[pos + 1:]:
                f = r[pc]
                if f:
                    r = tuple((piv * rc - f * pc_rc) // divisor
                              for rc, pc_rc in zip(r, row))
                else:
                    r = tuple(piv * rc // divisor for rc in r)
                if any(r[c] for c in range(width)):
                    reduced.append(r)
            yield from descend(reduced, triangle + [(pc, row)], piv, picked + 1)

    yield from descend(list(rows), [], 1, 0)


def _solve_triangle(triangle, width: int) -> tuple[Fraction, ...]:
    """Back-substitute a full triangular equality system <a, x> = b.

    triangle holds width rows of width+1 integers (last column is b); row k
    is zero at the pivot columns of rows 0..k-1.
    """
    x: list = [None] * width
    for pc, row in reversed(triangle):
        acc = Fraction(row[width])
        for c in range(width):
            if c != pc and row[c] and x[c] is not None:
                acc -= row[c] * x[c]
        x[pc] = acc / row[pc]
    return tuple(x)


def _kernel_vector(triangle, width: int) -> tuple[int, ...]:
    """Primitive integer generator of the kernel of width-1 independent rows."""
    pivot_cols = {pc for pc, _ in triangle}
    free = next(c for c in range(width) if c not in pivot_cols)
    d: list = [None] * width
    d[free] = Fraction(1)
    for pc, row in reversed(triangle):
        acc = Fraction(0)
        for c in range(width):
            if c != pc and row[c] and d[c] is not None:
                acc -= row[c] * d[c]
        d[pc] = acc / row[pc]
    den = 1
    for c in d:
        den = lcm(den, c.denominator)
    return primitive_vector(tuple(int(c * den) for c in d))


def is_bounded(poly: HPolytope) -> bool:
    """Exact boundedness test: true iff the recession cone {d : <a_i, d> >= 0
    for every i} is {0}, i.e. the normals positively span the ambient space.

    Decided by exhaustive sign analysis: if the normals do not span, any
    kernel direction recedes; otherwise the cone is pointed and a nonzero
    recession direction would lie on an extreme ray cut out by dim-1
    independent normals, so the kernel direction of every independent
    (dim-1)-subset is sign-tested against all normals.
    """
    n = poly.dim
    normals = [row[:-1] for row in _integer_rows(poly)]
    if mat_rank(normals) < n:
        return False
    for triangle in _full_rank_subsets(normals, n, n - 1):
        d = _kernel_vector(triangle, n)
        lo = hi = False
        for a in normals:
            s = dot(a, d)
            if s > 0:
                hi = True
            elif s < 0:
                lo = True
            if lo and hi:
                break
        if not (lo and hi):
            return False
    return True


def enumerate_vertices(poly: HPolytope) -> tuple[tuple[Fraction, ...], ...]:
    """All vertices of a bounded H-polytope, sorted lexicographically.

    Every dim-subset of halfspaces with independent normals is solved as an
    exact corner system; candidate corners failing any halfspace are dropped
    and coinciding corners deduplicated by exact equality.

    Raises Unbounded when the polytope has a recession direction and
    EmptyPolytope when no point satisfies all halfspaces.
    """
    if not is_bounded(poly):
        raise Unbounded("polytope has a recession direction")
    n = poly.dim
    rows = _integer_rows(poly)
    seen: dict[tuple[Fraction, ...], bool] = {}
    for triangle in _full_rank_subsets(rows, n, n):
        point = _solve_triangle(triangle, n)
        if point in seen:
            continue
        den = 1
        for c in point:
            den = lcm(den, c.denominator)
        nums = tuple(int(c * den) for c in point)
        ok = True
        for row in rows:
            s = 0
            for a, p in zip(row, nums):
                if a:
                    s += a * p
            if s < row[n] * den:
                ok = False
                break
        seen[point] = ok
    vertices = sorted(p for p, ok in seen.items() if ok)
    if not vertices:
        raise EmptyPolytope("no feasible point")
    return tuple(vertices)


def solve_square_system(matrix, rhs) -> tuple[Fraction, ...] | None:
    """Solve A x = b exactly; None when A is singular.

    Raises ValueError on dimension mismatch.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("dimension mismatch")
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col] * inv
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(aug[r][n] / aug[r][r] for r in range(n))


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """u @ a @ v == d with u, v unimodular and d = diag(d1 | d2 | ...) >= 0."""

    u: tuple[tuple[int, ...], ...]
    d: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]

    def reconstructs(self, matrix) -> bool:
        return mat_mul(mat_mul(self.u, matrix), self.v) == tuple(
            tuple(row) for row in self.d)


def smith_normal_form(matrix) -> SmithDecomposition:
    """Exact Smith decomposition of a square integer matrix.

    Classical pivoting: move a minimal nonzero entry to the diagonal, clear
    its row and column by Euclidean steps, then repair divisibility of the
    trailing block by folding an offending row into the pivot row. All
    operations are recorded in u (rows) and v (columns).
    """
    n = len(matrix)
    a = [list(map(int, row)) for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    u = [list(row) for row in identity_matrix(n)]
    v = [list(row) for row in identity_matrix(n)]

    def add_row(dst, src, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(n):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if a[i][j] and (best is None
                                    or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
                u[t], u[i] = u[i], u[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
                for row in v:
                    row[t], row[j] = row[j], row[t]
            p = a[t][t]
            dirty = False
            for r in range(t + 1, n):
                if a[r][t]:
                    add_row(r, t, -(a[r][t] // p))
                    dirty = dirty or bool(a[r][t])
            for c in range(t + 1, n):
                if a[t][c]:
                    add_col(c, t, -(a[t][c] // p))
                    dirty = dirty or bool(a[t][c])
            if dirty:
                continue
            p = a[t][t]
            offender = next((r for r in range(t + 1, n)
                             if any(x % p for x in a[r])), None)
            if offender is None:
                break
            add_row(t, offender, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    freeze = lambda m: tuple(tuple(row) for row in m)
    return SmithDecomposition(freeze(u), freeze(a), freeze(v))


# ---------------------------------------------------------------------------
# fixed subspaces of matrix groups


def fixed_subspace(gens) -> list[tuple[int, ...]]:
    """Basis of the common fixed subspace {w : g w = w for every g}.

    Computed as the kernel over Q of the stacked matrices g - I; basis
    vectors are returned as primitive integer vectors, one per free column
    of the reduced system, in ascending column order. The identity yields
    the standard basis; an empty list means the fixed subspace is {0}.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one matrix")
    n = len(gens[0])
    rows = []
    for g in gens:
        if len(g) != n or any(len(row) != n for row in g):
            raise ValueError("matrices must be square of one dimension")
        for i in range(n):
            row = [Fraction(g[i][j] - (i == j)) for j in range(n)]
            if any(row):
                rows.append(row)
    # reduced row echelon form
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][free]
        den = 1
        for c in vec:
            den = lcm(den, c.denominator)
        basis.append(primitive_vector(tuple(int(c * den) for c in vec)))
    return basis
