"""Anti-pre-Lie algebras as structure-constant tables.

A product on a based vector space is stored as a rank-3 tensor c with
c[i][j][k] = coefficient of e_k in e_i . e_j.  An anti-pre-Lie algebra is a
table satisfying, for all x, y, z and with [x,y] = x.y - y.x,

    x.(y.z) - y.(x.z) = [y,x].z            (exchange law)
    [x,y].z + [y,z].x + [z,x].y = 0        (cyclic law)

Checks run over all ordered basis triples and report exact residual vectors;
the evaluation is matrix-based (composed left/right multiplication operators),
with a naive nested-loop oracle kept in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional

from .fields import Field
from .linalg import Matrix, Tensor3, Vec, basis_vec, invert, lincomb, vec_is_zero, vec_sub

LAW_EXCHANGE = "exchange"
LAW_CYCLIC = "cyclic"


@dataclass(frozen=True)
class Violation:
    """One failed identity instance: the law, the basis indices, the exact residual."""

    law: str
    at: tuple
    residual: tuple

    def describe(self, field: Field) -> str:
        res = _render(self.residual, field)
        return f"{self.law} at {self.at}: residual {res}"


def _render(residual, field: Field):
    if residual and isinstance(residual[0], tuple):
        return [[field.to_str(x) for x in row] for row in residual]
    return [field.to_str(x) for x in residual]


@dataclass(frozen=True)
class Report:
    """Outcome of a verification: empty violations means the check passed."""

    subject: str
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def describe(self, field: Field) -> list[str]:
        return [v.describe(field) for v in self.violations]


class StructureError(ValueError):
    """A verified-structure precondition failed; carries the failing report."""

    def __init__(self, message: str, report: Optional[Report] = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class MultTable:
    """A bilinear product on a based space, as a structure-constant tensor."""

    tensor: Tensor3

    def __post_init__(self):
        d1, d2, d3 = self.tensor.dims
        if not d1 == d2 == d3:
            raise ValueError(f"multiplication table must be cubic, got dims {self.tensor.dims}")

    @property
    def dim(self) -> int:
        return self.tensor.dims[0]

    @property
    def field(self) -> Field:
        return self.tensor.field

    @staticmethod
    def zero(field: Field, n: int) -> "MultTable":
        return MultTable(Tensor3.zero(field, n, n, n))

    @staticmethod
    def from_entries(field: Field, entries) -> "MultTable":
        return MultTable(Tensor3.from_entries(field, entries))

    @staticmethod
    def from_dict(field: Field, n: int, nonzero: dict) -> "MultTable":
        """Build from {(i, j, k): scalar-or-int}; unlisted entries are zero."""
        z = field.zero()
        ent = [[[z for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for (i, j, k), v in nonzero.items():
            ent[i][j][k] = field.of_int(v) if isinstance(v, int) else v
        return MultTable.from_entries(field, ent)

    def basis_product(self, i: int, j: int) -> Vec:
        """e_i . e_j as a coordinate vector."""
        return self.tensor.fiber(i, j)

    def multiply(self, x: Vec, y: Vec) -> Vec:
        """Bilinear extension of the table to arbitrary coordinate vectors."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError(f"operands must have length {n}")
        z = self.field.zero()
        out = [z] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                fib = self.tensor.entries[i][j]
                for k in range(n):
                    if fib[k]:
                        out[k] = out[k] + c * fib[k]
        return tuple(out)

    def commutator(self, x: Vec, y: Vec) -> Vec:
        return vec_sub(self.multiply(x, y), self.multiply(y, x))

    def commutator_basis(self, i: int, j: int) -> Vec:
        return vec_sub(self.basis_product(i, j), self.basis_product(j, i))

    @cached_property
    def left_matrices(self) -> tuple:
        """L(e_i): y -> e_i . y, one matrix per basis vector."""
        n = self.dim
        return tuple(
            Matrix(self.field, n, n,
                   tuple(tuple(self.tensor.entries[i][j][k] for j in range(n)) for k in range(n)))
            for i in range(n)
        )

    @cached_property
    def right_matrices(self) -> tuple:
        """R(e_i): y -> y . e_i."""
        n = self.dim
        return tuple(
            Matrix(self.field, n, n,
                   tuple(tuple(self.tensor.entries[j][i][k] for j in range(n)) for k in range(n)))
            for i in range(n)
        )

    def left_matrix(self, x: Vec) -> Matrix:
        return lincomb(x, self.left_matrices)

    def right_matrix(self, x: Vec) -> Matrix:
        return lincomb(x, self.right_matrices)

    def conjugate(self, p: Matrix) -> "MultTable":
        """Basis change: the table of x *' y = P^{-1}(P(x) . P(y))."""
        if not p.is_square() or p.rows != self.dim:
            raise ValueError("change of basis must be a square matrix of the table's dimension")
        p_inv = invert(p)
        if p_inv is None:
            raise ValueError("change of basis must be invertible")
        n = self.dim
        cols = [p.col(j) for j in range(n)]
        ent = [[p_inv.apply(self.multiply(cols[i], cols[j])) for j in range(n)] for i in range(n)]
        return MultTable.from_entries(self.field, ent)


def transpose_table(table: MultTable) -> MultTable:
    """The opposite product: x *' y = y . x."""
    n = table.dim
    ent = [[table.basis_product(j, i) for j in range(n)] for i in range(n)]
    return MultTable.from_entries(table.field, ent)


def _apl_residual_matrices(table: MultTable) -> Iterator[tuple]:
    """Per ordered basis pair (i, j), the residual matrices of both laws.

    Column k of each yielded matrix is the residual vector of the law at the
    basis triple (e_i, e_j, e_k).  Exchange law as a matrix identity in z:
    L_i L_j - L_j L_i - L([e_j, e_i]); cyclic law:
    L([e_i, e_j]) + R_i (L_j - R_j) + R_j (R_i - L_i).
    """
    ell = table.left_matrices
    arr = table.right_matrices
    n = table.dim
    for i in range(n):
        for j in range(n):
            comm_ji = table.commutator_basis(j, i)
            m1 = ell[i] @ ell[j] - ell[j] @ ell[i] - table.left_matrix(comm_ji)
            comm_ij = table.commutator_basis(i, j)
            m2 = table.left_matrix(comm_ij) + arr[i] @ (ell[j] - arr[j]) + arr[j] @ (arr[i] - ell[i])
            yield i, j, m1, m2


def check_anti_pre_lie(table: MultTable) -> Report:
    """Verify both anti-pre-Lie laws on all basis triples, with exact residuals."""
    violations = []
    for i, j, m1, m2 in _apl_residual_matrices(table):
        for k in range(table.dim):
            c1 = m1.col(k)
            if not vec_is_zero(c1):
                violations.append(Violation(LAW_EXCHANGE, (i, j, k), c1))
            c2 = m2.col(k)
            if not vec_is_zero(c2):
                violations.append(Violation(LAW_CYCLIC, (i, j, k), c2))
    return Report("anti-pre-lie", tuple(violations))


def is_anti_pre_lie(table: MultTable) -> bool:
    """Early-exit boolean form of check_anti_pre_lie (used by the search corpus)."""
    for _, _, m1, m2 in _apl_residual_matrices(table):
        if not (m1.is_zero() and m2.is_zero()):
            return False
    return True


@dataclass(frozen=True)
class AntiPreLieAlgebra:
    """A multiplication table together with a record that verification passed."""

    table: MultTable
    verified: bool = False

    @classmethod
    def verify(cls, table: MultTable) -> "AntiPreLieAlgebra":
        report = check_anti_pre_lie(table)
        if not report.ok:
            raise StructureError(
                f"not an anti-pre-Lie table: {len(report.violations)} violated triples", report
            )
        return cls(table, True)

    @property
    def dim(self) -> int:
        return self.table.dim

    @property
    def field(self) -> Field:
        return self.table.field


@dataclass(frozen=True)
class LieTable:
    """Structure constants of a Lie bracket (antisymmetric, Jacobi verified)."""

    tensor: Tensor3

    @property
    def dim(self) -> int:
        return self.tensor.dims[0]

    @property
    def field(self) -> Field:
        return self.tensor.field

    def bracket_basis(self, i: int, j: int) -> Vec:
        return self.tensor.fiber(i, j)

    def bracket(self, x: Vec, y: Vec) -> Vec:
        return MultTable(self.tensor).multiply(x, y)


def check_lie_table(table: MultTable) -> Report:
    """Antisymmetry and the Jacobi identity on all basis pairs/triples."""
    n = table.dim
    violations = []
    for i in range(n):
        for j in range(n):
            s = tuple(a + b for a, b in zip(table.basis_product(i, j), table.basis_product(j, i)))
            if not vec_is_zero(s):
                violations.append(Violation("antisymmetry", (i, j), s))
    e = [basis_vec(table.field, n, i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                r = table.multiply(table.basis_product(i, j), e[k])
                r = tuple(a + b for a, b in zip(r, table.multiply(table.basis_product(j, k), e[i])))
                r = tuple(a + b for a, b in zip(r, table.multiply(table.basis_product(k, i), e[j])))
                if not vec_is_zero(r):
                    violations.append(Violation("jacobi", (i, j, k), r))
    return Report("lie", tuple(violations))


def commutator_table(table: MultTable) -> MultTable:
    n = table.dim
    ent = [[table.commutator_basis(i, j) for j in range(n)] for i in range(n)]
    return MultTable.from_entries(table.field, ent)


def sub_adjacent_lie(alg: AntiPreLieAlgebra) -> LieTable:
    """The commutator bracket [x,y] = x.y - y.x of a verified algebra.

    The bracket of an anti-pre-Lie product always satisfies antisymmetry and
    Jacobi; this is still asserted, and a failure signals a corrupted input.
    """
    if not alg.verified:
        raise StructureError("sub_adjacent_lie requires a verified algebra")
    bracket = commutator_table(alg.table)
    report = check_lie_table(bracket)
    if not report.ok:
        raise StructureError("commutator of a supposedly verified table fails the Lie laws", report)
    return LieTable(bracket.tensor)


def check_morphism(f: Matrix, src: MultTable, dst: MultTable) -> Report:
    """f(x . y) = f(x) .' f(y) on all basis pairs of the source."""
    if f.cols != src.dim or f.rows != dst.dim:
        raise ValueError(
            f"morphism matrix must be {dst.dim}x{src.dim}, got {f.rows}x{f.cols}"
        )
    violations = []
    fcols = [f.col(j) for j in range(src.dim)]
    for i in range(src.dim):
        for j in range(src.dim):
            res = vec_sub(f.apply(src.basis_product(i, j)), dst.multiply(fcols[i], fcols[j]))
            if not vec_is_zero(res):
                violations.append(Violation("morphism", (i, j), res))
    return Report("morphism", tuple(violations))
