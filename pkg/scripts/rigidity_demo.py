"""Flatten random deformations of a rigid algebra, order by order.

Takes the dim-2 table e0.e1 = e1, e1.e1 = e0 (second cohomology vanishes over
the regular representation), deforms it along random truncated isomorphisms,
and runs the elimination procedure, printing each eliminating map.

Usage: python scripts/rigidity_demo.py [order] [samples]
"""

import random
import sys
from fractions import Fraction

from antiprelie.algebra import AntiPreLieAlgebra, MultTable
from antiprelie.deformation import (
    TruncatedDeformation,
    TruncatedIsomorphism,
    apply_isomorphism,
    rigidity_certificate,
)
from antiprelie.fields import QQ
from antiprelie.linalg import Matrix


def main(order: int = 3, samples: int = 5, seed: int = 0):
    rng = random.Random(seed)
    alg = AntiPreLieAlgebra.verify(MultTable.from_dict(QQ, 2, {(0, 1, 1): 1, (1, 1, 0): 1}))

    def rand_matrix():
        return Matrix.from_rows(
            QQ, [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(2)] for _ in range(2)]
        )

    trivial = TruncatedDeformation.trivial(alg, order)
    defs = [trivial]
    for _ in range(samples - 1):
        iso = TruncatedIsomorphism(tuple(rand_matrix() for _ in range(order)))
        defs.append(apply_isomorphism(trivial, iso))

    cert = rigidity_certificate(alg, defs, order)
    print(f"dim H2(A;A) = {cert.h2_dim}; rigidity verified: {cert.rigid_verified}")
    for idx, run in enumerate(cert.eliminations):
        nonzero = sum(0 if phi.is_zero() else 1 for phi in run)
        print(f"sample {idx}: flattened through order {order} with {nonzero} nonzero eliminating maps")
        for n, phi in enumerate(run, start=1):
            if not phi.is_zero():
                rows = ["[" + ", ".join(str(x) for x in row) + "]" for row in phi.entries]
                print(f"  phi_{n} = {'; '.join(rows)}")


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:3]]
    main(*args)
