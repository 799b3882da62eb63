"""Exact integer linear algebra.

Smith normal form over the integers is the single engine behind everything
else in this module: integer linear solving, kernel bases, the splitting of a
chain group into cycles plus a complement, and finitely generated homology
groups presented by boundary matrices.  All arithmetic uses arbitrary
precision Python integers and fractions.Fraction; there is no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class IntMatrix:
    """Dense matrix of Python ints, stored row-major as tuples."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        data = tuple(tuple(row) for row in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("matrix data does not match dimensions")
        for row in data:
            for x in row:
                if not isinstance(x, int):
                    raise TypeError("IntMatrix entries must be int")
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def identity(cls, n):
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"

    def entry(self, i, j):
        return self.data[i][j]

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("matrix dimensions do not compose")
        rows = []
        for i in range(self.rows):
            a = self.data[i]
            rows.append(
                [
                    sum(a[k] * other.data[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
            )
        return IntMatrix(self.rows, other.cols, rows)

    def apply(self, vec):
        """Matrix times column vector; accepts ints or Fractions."""
        if len(vec) != self.cols:
            raise ValueError("vector length does not match matrix columns")
        return [
            sum(self.data[i][j] * vec[j] for j in range(self.cols))
            for i in range(self.rows)
        ]

    def transpose(self):
        return IntMatrix(
            self.cols,
            self.rows,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def det(self):
        """Determinant via fraction-free Bareiss elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]


class SnfDecomposition:
    """Factorization A = U * D * V with U, V unimodular and D diagonal.

    The diagonal entries of D are nonnegative and satisfy d1 | d2 | ... .
    u_inv and v_inv are the exact inverses of U and V, tracked during the
    reduction so that solving never needs a separate inversion step.
    """

    __slots__ = ("matrix", "U", "D", "V", "u_inv", "v_inv", "rank")

    def __init__(self, matrix, U, D, V, u_inv, v_inv):
        self.matrix = matrix
        self.U = U
        self.D = D
        self.V = V
        self.u_inv = u_inv
        self.v_inv = v_inv
        r = 0
        for i in range(min(D.rows, D.cols)):
            if D.data[i][i] != 0:
                r += 1
        self.rank = r

    def diagonal(self):
        return [self.D.data[i][i] for i in range(min(self.D.rows, self.D.cols))]


def _pivot(S, p, rows, cols):
    """Position of a nonzero entry of minimal absolute value in S[p:, p:].

    Ties break on the lexicographically smallest (row, column) so the whole
    reduction, and everything derived from it, is deterministic.
    """
    best = None
    best_abs = None
    for i in range(p, rows):
        row = S[i]
        for j in range(p, cols):
            x = row[j]
            if x != 0:
                ax = -x if x < 0 else x
                if best_abs is None or ax < best_abs:
                    best = (i, j)
                    best_abs = ax
                    if ax == 1:
                        return best
    return best


def smith_normal_form(A):
    """Smith normal form with unimodular transforms and their inverses.

    Pivoting picks the minimal-absolute-value entry of the working submatrix.
    The invariant A = U * S * V holds after every elementary step.
    """
    rows, cols = A.rows, A.cols
    S = [list(row) for row in A.data]
    U = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    Ui = [row[:] for row in U]
    V = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]
    Vi = [row[:] for row in V]

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        for r in range(rows):
            U[r][i], U[r][j] = U[r][j], U[r][i]
        Ui[i], Ui[j] = Ui[j], Ui[i]

    def row_add(i, j, t):
        # S.row[i] += t * S.row[j]
        Si, Sj = S[i], S[j]
        for c in range(cols):
            Si[c] += t * Sj[c]
        for r in range(rows):
            U[r][j] -= t * U[r][i]
        Uii, Uij = Ui[i], Ui[j]
        for c in range(rows):
            Uii[c] += t * Uij[c]

    def row_negate(i):
        S[i] = [-x for x in S[i]]
        for r in range(rows):
            U[r][i] = -U[r][i]
        Ui[i] = [-x for x in Ui[i]]

    def col_swap(i, j):
        for r in range(rows):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        V[i], V[j] = V[j], V[i]
        for r in range(cols):
            Vi[r][i], Vi[r][j] = Vi[r][j], Vi[r][i]

    def col_add(i, j, t):
        # S.col[i] += t * S.col[j]
        for r in range(rows):
            S[r][i] += t * S[r][j]
        Vj, Vii = V[j], V[i]
        for c in range(cols):
            Vj[c] -= t * Vii[c]
        for r in range(cols):
            Vi[r][i] += t * Vi[r][j]

    def col_negate(i):
        for r in range(rows):
            S[r][i] = -S[r][i]
        V[i] = [-x for x in V[i]]
        for r in range(cols):
            Vi[r][i] = -Vi[r][i]

    p = 0
    limit = min(rows, cols)
    while p < limit:
        pos = _pivot(S, p, rows, cols)
        if pos is None:
            break
        while True:
            i, j = pos
            if i != p:
                row_swap(p, i)
            if j != p:
                col_swap(p, j)
            d = S[p][p]
            dirty = False
            for r in range(p + 1, rows):
                if S[r][p] != 0:
                    q = S[r][p] // d
                    if q != 0:
                        row_add(r, p, -q)
                    if S[r][p] != 0:
                        dirty = True
            for c in range(p + 1, cols):
                if S[p][c] != 0:
                    q = S[p][c] // d
                    if q != 0:
                        col_add(c, p, -q)
                    if S[p][c] != 0:
                        dirty = True
            if dirty:
                pos = _pivot(S, p, rows, cols)
                continue
            # Row and column are clear; enforce divisibility of the rest.
            d = S[p][p]
            culprit = None
            for r in range(p + 1, rows):
                for c in range(p + 1, cols):
                    if S[r][c] % d != 0:
                        culprit = r
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            row_add(p, culprit, 1)
            pos = (p, p)
        if S[p][p] < 0:
            row_negate(p)
        if S[p][p] == 0:
            break
        p += 1

    D = IntMatrix(rows, cols, S)
    return SnfDecomposition(
        A,
        IntMatrix(rows, rows, U),
        D,
        IntMatrix(cols, cols, V),
        IntMatrix(rows, rows, Ui),
        IntMatrix(cols, cols, Vi),
    )


def solve_integer(snf_or_matrix, b):
    """Solve A x = b over the integers; None when no integer solution exists.

    Accepts either an IntMatrix or an already computed SnfDecomposition, so
    repeated solves against one matrix share the reduction.
    """
    snf = (
        snf_or_matrix
        if isinstance(snf_or_matrix, SnfDecomposition)
        else smith_normal_form(snf_or_matrix)
    )
    rows, cols = snf.D.rows, snf.D.cols
    if len(b) != rows:
        raise ValueError("right-hand side length does not match matrix rows")
    c = snf.u_inv.apply(b)
    y = [0] * cols
    for i in range(rows):
        d = snf.D.data[i][i] if i < cols else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    return snf.v_inv.apply(y)


def solve_rational(snf_or_matrix, b):
    """Solve A x = b over the rationals; None when the system is inconsistent."""
    snf = (
        snf_or_matrix
        if isinstance(snf_or_matrix, SnfDecomposition)
        else smith_normal_form(snf_or_matrix)
    )
    rows, cols = snf.D.rows, snf.D.cols
    if len(b) != rows:
        raise ValueError("right-hand side length does not match matrix rows")
    c = snf.u_inv.apply([Fraction(x) for x in b])
    y = [Fraction(0)] * cols
    for i in range(rows):
        d = snf.D.data[i][i] if i < cols else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            y[i] = Fraction(c[i], d)
    return snf.v_inv.apply(y)


def kernel_basis(snf_or_matrix):
    """Basis of the integer kernel lattice of A, as a list of column vectors.

    The vectors are the trailing columns of V^{-1}; together with the leading
    columns they form a basis of Z^cols, which is what makes the splitting
    below work.
    """
    snf = (
        snf_or_matrix
        if isinstance(snf_or_matrix, SnfDecomposition)
        else smith_normal_form(snf_or_matrix)
    )
    return [snf.v_inv.column(j) for j in range(snf.rank, snf.D.cols)]


class CycleSplitting:
    """Splitting of the degree-n chain group into cycles plus a complement.

    The short exact sequence 0 -> (cycles) -> (chains) -> (boundaries below)
    -> 0 splits because the boundary lattice is free.  `cycle_basis` spans
    the kernel of the boundary map, `complement_basis` completes it to a
    basis of the chain lattice, `projection` is the integer matrix of the
    projection onto cycles that restricts to the identity on cycles, and
    `section(b)` lifts a boundary b through the boundary map.
    """

    __slots__ = ("degree", "snf", "cycle_basis", "complement_basis", "projection")

    def __init__(self, degree, snf):
        self.degree = degree
        self.snf = snf
        cols = snf.D.cols
        r = snf.rank
        self.cycle_basis = [snf.v_inv.column(j) for j in range(r, cols)]
        self.complement_basis = [snf.v_inv.column(j) for j in range(r)]
        proj = []
        for i in range(cols):
            row = []
            for j in range(cols):
                row.append(
                    sum(
                        snf.v_inv.data[i][k] * snf.V.data[k][j]
                        for k in range(r, cols)
                    )
                )
            proj.append(row)
        self.projection = IntMatrix(cols, cols, proj)

    def cycle_coordinates(self, vec):
        """Coordinates of a cycle in the cycle basis; None if not a cycle."""
        y = self.snf.V.apply(vec)
        if any(y[i] != 0 for i in range(self.snf.rank)):
            return None
        return y[self.snf.rank :]

    def section(self, b):
        """Some x with (boundary matrix) x = b; None when b is not a boundary.

        The solution is supported in the complement, so it is a homomorphic
        section of the boundary map onto its image.
        """
        return solve_integer(self.snf, b)


def _boundary_matrix(complexlike, n):
    return complexlike.boundary_matrix(n)


def cycle_splitting(complexlike, n):
    """CycleSplitting of C_n for anything exposing boundary_matrix(n)."""
    return CycleSplitting(n, smith_normal_form(_boundary_matrix(complexlike, n)))


class QuotientPresentation:
    """The finitely generated abelian group ker(out) / im(in).

    Presented with an adapted generating set: torsion generators first (with
    their orders, each > 1), then free generators.  `coordinates` maps any
    kernel vector to (free coordinates, torsion residues); a class is zero
    iff both parts vanish.
    """

    __slots__ = (
        "betti",
        "torsion",
        "generator_vectors",
        "_out_snf",
        "_ker_dim",
        "_rel_snf",
        "_rel_rank",
        "_torsion_indices",
    )

    def __init__(self, out_matrix, in_matrix):
        if out_matrix.cols != in_matrix.rows:
            raise ValueError("boundary matrices do not compose")
        out_snf = smith_normal_form(out_matrix)
        r = out_snf.rank
        n = out_matrix.cols
        z = n - r
        # Image generators of in_matrix, written in cycle-basis coordinates.
        vin = out_snf.V.mul(in_matrix)
        rel = IntMatrix(
            z, in_matrix.cols, [vin.data[i] for i in range(r, n)]
        )
        rel_snf = smith_normal_form(rel)
        s = rel_snf.rank
        self._out_snf = out_snf
        self._ker_dim = z
        self._rel_snf = rel_snf
        self._rel_rank = s
        torsion = []
        torsion_idx = []
        for i in range(s):
            d = rel_snf.D.data[i][i]
            if d > 1:
                torsion.append(d)
                torsion_idx.append(i)
        self.torsion = torsion
        self._torsion_indices = torsion_idx
        self.betti = z - s
        # Generators in ambient coordinates: kernel basis times U' columns.
        gens = []
        for idx in torsion_idx + list(range(s, z)):
            col = rel_snf.U.column(idx)
            vec = [0] * n
            for t in range(z):
                coeff = col[t]
                if coeff == 0:
                    continue
                kb = out_snf.v_inv.column(r + t)
                for a in range(n):
                    vec[a] += coeff * kb[a]
            gens.append(vec)
        self.generator_vectors = gens

    def kernel_coordinates(self, vec):
        y = self._out_snf.V.apply(vec)
        r = self._out_snf.rank
        if any(y[i] != 0 for i in range(r)):
            return None
        return y[r:]

    def coordinates(self, vec):
        """(free coordinates, torsion residues) of the class of a kernel vector."""
        y = self.kernel_coordinates(vec)
        if y is None:
            raise ValueError("vector is not in the kernel")
        w = self._rel_snf.u_inv.apply(y)
        s = self._rel_rank
        free = tuple(w[i] for i in range(s, self._ker_dim))
        tors = tuple(
            w[i] % self._rel_snf.D.data[i][i] for i in self._torsion_indices
        )
        return free, tors

    def adapted_coordinates(self, vec):
        """Integer coordinates of a kernel vector in the adapted basis.

        Unlike `coordinates`, torsion entries are not reduced mod their
        orders; relation-lattice vectors show up as entries divisible by the
        corresponding orders.
        """
        y = self.kernel_coordinates(vec)
        if y is None:
            raise ValueError("vector is not in the kernel")
        return self._rel_snf.u_inv.apply(y)

    def torsion_positions(self):
        """Positions of the torsion coordinates within adapted_coordinates."""
        return list(self._torsion_indices)

    def free_positions(self):
        """Positions of the free coordinates within adapted_coordinates."""
        return list(range(self._rel_rank, self._ker_dim))

    def is_zero(self, vec):
        free, tors = self.coordinates(vec)
        return all(x == 0 for x in free) and all(x == 0 for x in tors)

    def class_order(self, vec):
        """Order of the class: a positive int, or 0 for infinite order."""
        free, tors = self.coordinates(vec)
        if any(x != 0 for x in free):
            return 0
        n = 1
        for residue, d in zip(tors, self.torsion):
            if residue != 0:
                q = d // gcd(d, residue)
                n = n * q // gcd(n, q)
        return n

    def same_class(self, vec_a, vec_b):
        diff = [a - b for a, b in zip(vec_a, vec_b)]
        return self.is_zero(diff)


class HomologyData:
    """Homology of a complex in one degree, with chain-level generators."""

    __slots__ = ("complexlike", "degree", "presentation", "generators")

    def __init__(self, complexlike, degree, presentation, generators):
        self.complexlike = complexlike
        self.degree = degree
        self.presentation = presentation
        self.generators = generators

    @property
    def betti(self):
        return self.presentation.betti

    @property
    def torsion(self):
        return self.presentation.torsion

    def coordinates(self, vec):
        return self.presentation.coordinates(vec)

    def is_zero(self, vec):
        return self.presentation.is_zero(vec)

    def class_order(self, vec):
        return self.presentation.class_order(vec)


def homology(complexlike, n):
    """H_n as a QuotientPresentation wrapped with generator vectors.

    Works for any object exposing boundary_matrix(n): simplicial complexes
    and mapping cones alike.  Generator chains are reconstructed by the
    caller from generator_vectors since only the caller knows the basis.
    """
    out = _boundary_matrix(complexlike, n)
    inn = _boundary_matrix(complexlike, n + 1)
    pres = QuotientPresentation(out, inn)
    return HomologyData(complexlike, n, pres, list(pres.generator_vectors))


def cohomology(complexlike, k):
    """Integral cohomology in degree k of the dual complex.

    Cochains in degree k are vectors indexed by k-simplices; the coboundary
    is the transpose of the boundary one degree up.
    """
    out = _boundary_matrix(complexlike, k + 1).transpose()
    inn = _boundary_matrix(complexlike, k).transpose()
    pres = QuotientPresentation(out, inn)
    return HomologyData(complexlike, k, pres, list(pres.generator_vectors))
