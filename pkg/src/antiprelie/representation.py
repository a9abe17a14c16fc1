"""Representations (rho, mu) of anti-pre-Lie algebras.

A representation on V is a pair of linear actions satisfying, for all x, y,

    rho(x)rho(y) - rho(y)rho(x) = rho([y,x])
    mu(x.y) - rho(x)mu(y) = mu(y)rho(x) - mu(y)mu(x)
    mu(y)mu(x) - mu(x)mu(y) + rho([x,y]) = mu(y)rho(x) - mu(x)rho(y)

verified on basis pairs (bilinearity extends them; that is the normative
reading of "for all x, y").  The module also builds the regular
representation (L, R), semidirect products, the induced sub-adjacent Lie
action rho - mu, dual representations on V*, and the three-way equivalence
report for (mu - rho, mu) / (rho*, mu*) / mu(x.y) + mu(y.x) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .algebra import (
    AntiPreLieAlgebra,
    LieTable,
    MultTable,
    Report,
    StructureError,
    Violation,
)
from .fields import Field
from .linalg import Matrix, Vec, lincomb

AlgebraLike = Union[AntiPreLieAlgebra, MultTable]


def as_table(alg: AlgebraLike) -> MultTable:
    return alg.table if isinstance(alg, AntiPreLieAlgebra) else alg


@dataclass(frozen=True)
class Representation:
    """Paired actions on V: rho[i], mu[i] are the matrices of the e_i actions."""

    dim_a: int
    dim_v: int
    rho: tuple  # tuple[Matrix, ...], length dim_a, each dim_v x dim_v
    mu: tuple

    def __post_init__(self):
        if len(self.rho) != self.dim_a or len(self.mu) != self.dim_a:
            raise ValueError("need one rho and one mu matrix per algebra basis vector")
        for m in (*self.rho, *self.mu):
            if (m.rows, m.cols) != (self.dim_v, self.dim_v):
                raise ValueError(f"action matrices must be {self.dim_v}x{self.dim_v}")

    @property
    def field(self) -> Field:
        return self.rho[0].field if self.rho else None

    @staticmethod
    def zero(field: Field, dim_a: int, dim_v: int) -> "Representation":
        z = Matrix.zero(field, dim_v, dim_v)
        return Representation(dim_a, dim_v, (z,) * dim_a, (z,) * dim_a)

    def rho_of(self, x: Vec) -> Matrix:
        return lincomb(x, self.rho)

    def mu_of(self, x: Vec) -> Matrix:
        return lincomb(x, self.mu)


LAW_RHO = "rep-rho"
LAW_MIXED = "rep-mixed"
LAW_MU = "rep-mu"


def _representation_residuals(table: MultTable, rep: Representation) -> Iterator[tuple]:
    """Residual matrices of the three axioms at each ordered basis pair (i, j)."""
    n = table.dim
    rho, mu = rep.rho, rep.mu
    for i in range(n):
        for j in range(n):
            comm_ji = table.commutator_basis(j, i)
            comm_ij = table.commutator_basis(i, j)
            prod_ij = table.basis_product(i, j)
            r1 = rho[i] @ rho[j] - rho[j] @ rho[i] - rep.rho_of(comm_ji)
            r2 = rep.mu_of(prod_ij) - rho[i] @ mu[j] - mu[j] @ rho[i] + mu[j] @ mu[i]
            r3 = mu[j] @ mu[i] - mu[i] @ mu[j] + rep.rho_of(comm_ij) - mu[j] @ rho[i] + mu[i] @ rho[j]
            yield i, j, r1, r2, r3


def check_representation(alg: AlgebraLike, rep: Representation) -> Report:
    """Verify the three representation axioms on all basis pairs."""
    table = as_table(alg)
    if rep.dim_a != table.dim:
        raise ValueError(f"representation is over a dim-{rep.dim_a} algebra, table has dim {table.dim}")
    violations = []
    for i, j, r1, r2, r3 in _representation_residuals(table, rep):
        for law, res in ((LAW_RHO, r1), (LAW_MIXED, r2), (LAW_MU, r3)):
            if not res.is_zero():
                violations.append(Violation(law, (i, j), res.entries))
    return Report("representation", tuple(violations))


def is_representation(alg: AlgebraLike, rep: Representation) -> bool:
    table = as_table(alg)
    if rep.dim_a != table.dim:
        raise ValueError(f"representation is over a dim-{rep.dim_a} algebra, table has dim {table.dim}")
    for _, _, r1, r2, r3 in _representation_residuals(table, rep):
        if not (r1.is_zero() and r2.is_zero() and r3.is_zero()):
            return False
    return True


def verify_representation(alg: AlgebraLike, rep: Representation) -> Representation:
    report = check_representation(alg, rep)
    if not report.ok:
        raise StructureError(
            f"not a representation: {len(report.violations)} violated basis pairs", report
        )
    return rep


def regular_representation(alg: AntiPreLieAlgebra) -> Representation:
    """(A, L, R) with L(e_i): y -> e_i . y and R(e_i): y -> y . e_i."""
    table = as_table(alg)
    return Representation(table.dim, table.dim, table.left_matrices, table.right_matrices)


def semidirect_product(alg: AntiPreLieAlgebra, rep: Representation) -> AntiPreLieAlgebra:
    """The anti-pre-Lie structure on A + V with product

        (x + u) . (y + v) = x.y + rho(x)(v) + mu(y)(u),

    refusing representations that fail verification.  The result is verified
    before it is returned.
    """
    table = as_table(alg)
    verify_representation(table, rep)
    n, m = table.dim, rep.dim_v
    field = table.field
    z = field.zero()
    total = [[[z] * (n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            prod = table.basis_product(i, j)
            for k in range(n):
                total[i][j][k] = prod[k]
    for i in range(n):
        for b in range(m):
            col = rep.rho[i].col(b)
            for k in range(m):
                total[i][n + b][n + k] = col[k]
    for a in range(m):
        for j in range(n):
            col = rep.mu[j].col(a)
            for k in range(m):
                total[n + a][j][n + k] = col[k]
    result = MultTable.from_entries(field, total)
    return AntiPreLieAlgebra.verify(result)


@dataclass(frozen=True)
class LieRepresentation:
    """A single action of a Lie algebra: [action(x), action(y)] = action([x,y])."""

    dim_v: int
    action: tuple  # tuple[Matrix, ...]

    def action_of(self, x: Vec) -> Matrix:
        return lincomb(x, self.action)


def check_lie_representation(lie: LieTable, rep: LieRepresentation) -> Report:
    violations = []
    n = lie.dim
    for i in range(n):
        for j in range(n):
            res = (
                rep.action[i] @ rep.action[j]
                - rep.action[j] @ rep.action[i]
                - rep.action_of(lie.bracket_basis(i, j))
            )
            if not res.is_zero():
                violations.append(Violation("lie-action", (i, j), res.entries))
    return Report("lie-representation", tuple(violations))


def sub_adjacent_representation(alg: AntiPreLieAlgebra, rep: Representation) -> LieRepresentation:
    """(V, rho - mu), an action of the commutator Lie algebra; asserted valid."""
    from .algebra import sub_adjacent_lie

    action = tuple(r - m for r, m in zip(rep.rho, rep.mu))
    lierep = LieRepresentation(rep.dim_v, action)
    report = check_lie_representation(sub_adjacent_lie(alg), lierep)
    if not report.ok:
        raise StructureError("rho - mu fails the Lie action law; input was not a representation", report)
    return lierep


def dual_representation(rep: Representation) -> Representation:
    """The representation on V* with matrices (rho^T - mu^T, -mu^T).

    V* carries the dual basis, so dualizing an action is transpose-and-negate:
    the action pair (mu* - rho*, mu*) becomes the matrices above.  Applying
    this twice returns the original matrices exactly.
    """
    rho_d = tuple(r.transpose() - m.transpose() for r, m in zip(rep.rho, rep.mu))
    mu_d = tuple(-m.transpose() for m in rep.mu)
    return Representation(rep.dim_a, rep.dim_v, rho_d, mu_d)


def special_condition_report(alg: AlgebraLike, rep: Representation) -> tuple:
    """Three independently computed booleans, provably always equal:

    (i)   (V, mu - rho, mu) is a representation of the algebra,
    (ii)  (V*, rho*, mu*) is a representation,
    (iii) mu(x.y) + mu(y.x) = 0 on all basis pairs.
    """
    table = as_table(alg)
    swapped = Representation(
        rep.dim_a, rep.dim_v, tuple(m - r for r, m in zip(rep.rho, rep.mu)), rep.mu
    )
    cond1 = is_representation(table, swapped)

    starred = Representation(
        rep.dim_a,
        rep.dim_v,
        tuple(-r.transpose() for r in rep.rho),
        tuple(-m.transpose() for m in rep.mu),
    )
    cond2 = is_representation(table, starred)

    cond3 = True
    n = table.dim
    for i in range(n):
        for j in range(n):
            s = rep.mu_of(table.basis_product(i, j)) + rep.mu_of(table.basis_product(j, i))
            if not s.is_zero():
                cond3 = False
                break
        if not cond3:
            break
    return (cond1, cond2, cond3)
