"""The symmetric bicharacter pairing the lattice bialgebra with itself.

On group-likes the pairing is r(e^v (x) e^w) = c(v, w) (x1 - x2)^{(v, w)};
the rest is forced by three rules:

  * multiplicativity through the coproduct in either slot,
    r(v1 v2 (x) w) = sum r(v1 (x) w_(1)) r(v2 (x) w_(2));
  * compatibility with the derivation, r(dv (x) w) = d/dx1 r(v (x) w);
  * the symmetry r(w (x) v) = r(v (x) w) with x1 and x2 exchanged.

Monomial pairs are memoized: the coproduct recursion revisits identical
subproblems exponentially often and the mode computations downstream hammer
the same small set of pairs.

The multi-point extension pairs a tensor over I1 against a tensor over I2 by
splitting every factor v_i with the |I2|-fold coproduct, every u_j with the
|I1|-fold one, and multiplying the pairwise values r(v_i^(j), u_j^(i))
evaluated in the variables (x_i, x_j).  It is the unique bimultiplicative
extension of the two-point pairing; the exactness of the singular
multiplication's associativity downstream is its correctness witness.
"""

from __future__ import annotations

from fractions import Fraction

from .bialgebra import (Element, Lattice, Monomial, Tensor, _split2, _splitn,
                        counit)
from .errors import StructureError
from .points import PointSet
from .rings import KIND_DIFF, Scalar

_ZERO = Fraction(0)

# canonical two-point home of pairwise values
P2 = PointSet.singletons((1, 2))
_SWAP = {1: 2, 2: 1}


class Bicharacter:
    """Evaluation context: a lattice plus memo tables.

    The memo is the only mutable state; either share one context per thread
    or accept the benign last-write-wins races of the CPython dict.  A
    ``peel_rng`` may be injected to randomize the recursion's peeling order
    (memoization is bypassed then); results must not depend on it.
    """

    def __init__(self, lattice: Lattice, peel_rng=None):
        self.lattice = lattice
        self.peel_rng = peel_rng
        self._memo: dict = {}
        self._mode_tables: dict = {}

    # -- two-point pairing -------------------------------------------

    def pair_monomials(self, m1: Monomial, m2: Monomial) -> Scalar:
        if self.peel_rng is not None:
            return self._evaluate(m1, m2)
        hit = self._memo.get((m1, m2))
        if hit is None:
            hit = self._evaluate(m1, m2)
            self._memo[(m1, m2)] = hit
        return hit

    def _evaluate(self, m1: Monomial, m2: Monomial) -> Scalar:
        if m1.is_vacuum:
            return Scalar.const(P2, KIND_DIFF, counit(m2))
        if m2.is_vacuum:
            return Scalar.const(P2, KIND_DIFF, counit(m1))
        if m1.sym:
            (a, k), rest = self._peel(m1)
            gen_vec = tuple(1 if b == a else 0 for b in range(len(m1.group)))
            gen = Monomial(gen_vec)
            acc = Scalar.zero(P2, KIND_DIFF)
            for (w1, w2), c in _split2(m2):
                base = self.pair_monomials(gen, w1)
                if not base.terms:
                    continue
                first = base.derive(1, k)  # r(l_a(k) (x) w1)
                if not first.terms:
                    continue
                second = self.pair_monomials(rest, w2)
                if not second.terms:
                    continue
                acc = acc + (first * second).scale(c)
            return acc
        if m2.sym:
            return self.pair_monomials(m2, m1).substitute(_SWAP, P2)
        sign = self.lattice.cocycle_eval(m1.group, m2.group)
        exponent = self.lattice.pairing(m1.group, m2.group)
        return Scalar.difference(P2, KIND_DIFF, 1, 2, exponent, sign)

    def _peel(self, m: Monomial):
        """Remove one sym generator occurrence; order must not matter."""
        pos = 0
        if self.peel_rng is not None:
            pos = self.peel_rng.randrange(len(m.sym))
        (a, k), mult = m.sym[pos]
        if mult == 1:
            rest = m.sym[:pos] + m.sym[pos + 1:]
        else:
            rest = m.sym[:pos] + (((a, k), mult - 1),) + m.sym[pos + 1:]
        return (a, k), Monomial(m.group, rest)

    def pair(self, v: Element, u: Element, labels=(1, 2),
             points: PointSet | None = None) -> Scalar:
        """Bilinear extension, evaluated in the variables (x_i, x_j)."""
        if v.lattice != self.lattice or u.lattice != self.lattice:
            raise StructureError("elements do not match this context's lattice")
        if points is None:
            points = PointSet.singletons(labels)
        acc = Scalar.zero(points, KIND_DIFF)
        relabel = {1: labels[0], 2: labels[1]}
        for m1, c1 in v.terms.items():
            for m2, c2 in u.terms.items():
                val = self.pair_monomials(m1, m2)
                if val.terms:
                    acc = acc + val.substitute(relabel, points).scale(c1 * c2)
        return acc

    # -- multi-point extension ------------------------------------------

    def multi(self, tv: Tensor, tu: Tensor) -> Scalar:
        if tv.lattice != self.lattice or tu.lattice != self.lattice:
            raise StructureError("tensors do not match this context's lattice")
        points = tv.points.union(tu.points)
        acc = Scalar.zero(points, KIND_DIFF)
        for av, cv in tv.terms.items():
            for au, cu in tu.terms.items():
                acc = acc + self.multi_assignments(
                    av, tv.points, au, tu.points, points).scale(cv * cu)
        return acc

    def multi_assignments(self, av, pv: PointSet, au, pu: PointSet,
                          points: PointSet | None = None) -> Scalar:
        """Pairwise-product extension on a single assignment pair."""
        if points is None:
            points = pv.union(pu)
        n1, n2 = len(pv), len(pu)
        if n1 == 0 or n2 == 0:
            return Scalar.one(points, KIND_DIFF)
        acc = Scalar.zero(points, KIND_DIFF)
        v_splits = [_splitn(m, n2) for m in av]
        u_splits = [_splitn(m, n1) for m in au]
        stack_v = [((), Fraction(1))]
        for splits in v_splits:
            stack_v = [(chosen + (legs,), c * w)
                       for chosen, c in stack_v for legs, w in splits]
        stack_u = [((), Fraction(1))]
        for splits in u_splits:
            stack_u = [(chosen + (legs,), c * w)
                       for chosen, c in stack_u for legs, w in splits]
        for legs_v, cv in stack_v:
            for legs_u, cu in stack_u:
                piece = Scalar.const(points, KIND_DIFF, cv * cu)
                dead = False
                for i_idx, i in enumerate(pv.labels):
                    for j_idx, j in enumerate(pu.labels):
                        val = self.pair_monomials(legs_v[i_idx][j_idx],
                                                  legs_u[j_idx][i_idx])
                        if not val.terms:
                            dead = True
                            break
                        piece = piece * val.substitute({1: i, 2: j}, points)
                    if dead:
                        break
                if not dead:
                    acc = acc + piece
        return acc
