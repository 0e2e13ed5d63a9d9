"""Tensor powers of the lattice bialgebra with localized scalar coefficients,
and the singular multiplication on them.

An element over a partitioned point set is a sparse sum of (per-point
monomial assignment) x (scalar) pairs; the scalar lives in the coefficient
ring of the partition, so poles only ever sit between inequivalent labels.
Over the differences-only ring a fully merged point set has constant
scalars.

The singular multiplication of two elements over disjoint point sets splits
every bialgebra factor in two with the coproduct, keeps the first legs in
place, and pays for the collision with the bicharacter of the second legs:

    mu(v (x) w) = (v_(1) (x) w_(1)) . r(v_(2) (x) w_(2)).

Together with the pushforwards along label maps and the derivation action
this is the entire ring structure; commutativity and associativity of mu
are exact identities checked by ``check_commutativity`` and
``check_associativity`` — they are the finite, exact witness for locality
of the extracted vertex operators.
"""

from __future__ import annotations

from fractions import Fraction

from .bialgebra import Element, Lattice, Monomial, Tensor
from .bicharacter import Bicharacter
from .errors import StructureError
from .points import PointSet
from .rings import KIND_DIFF, KIND_POLY, Scalar

_ZERO = Fraction(0)


class Singular:
    """A sparse sum of monomial assignments with scalar coefficients."""

    __slots__ = ("lattice", "points", "kind", "terms")

    def __init__(self, lattice: Lattice, points: PointSet, kind: str,
                 terms: dict):
        self.lattice = lattice
        self.points = points
        self.kind = kind
        self.terms = terms  # tuple[Monomial, ...] -> Scalar

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, lattice: Lattice, points: PointSet, kind: str = KIND_DIFF):
        return cls(lattice, points, kind, {})

    @classmethod
    def pure(cls, lattice: Lattice, points: PointSet, kind, assignment,
             scalar: Scalar | None = None) -> "Singular":
        assignment = tuple(assignment)
        if len(assignment) != len(points):
            raise StructureError("assignment length does not match the points")
        if scalar is None:
            scalar = Scalar.one(points, kind)
        if scalar.points != points or scalar.kind != kind:
            raise StructureError("scalar does not match the points or kind")
        return cls(lattice, points, kind, {assignment: scalar})

    @classmethod
    def from_element(cls, elem: Element, label: int,
                     kind: str = KIND_DIFF) -> "Singular":
        """A single-point element; its coefficients become constant scalars."""
        points = PointSet.singletons((label,))
        terms = {(m,): Scalar.const(points, kind, c)
                 for m, c in elem.terms.items()}
        return cls(elem.lattice, points, kind, terms)

    @classmethod
    def from_tensor(cls, tensor: Tensor, kind: str = KIND_DIFF) -> "Singular":
        points = tensor.points
        return cls(tensor.lattice, points, kind,
                   {legs: Scalar.const(points, kind, c)
                    for legs, c in tensor.terms.items()})

    def to_element(self) -> Element:
        """Inverse of from_element; scalars must be constants."""
        if len(self.points) != 1:
            raise StructureError("only single-point elements convert back")
        terms: dict = {}
        for (m,), s in self.terms.items():
            c = s.constant_value()
            if c:
                acc = terms.get(m, _ZERO) + c
                if acc:
                    terms[m] = acc
                else:
                    terms.pop(m, None)
        return Element(self.lattice, terms)

    # -- linear structure -------------------------------------------------

    def _check_mate(self, other: "Singular"):
        if (self.lattice != other.lattice or self.points != other.points
                or self.kind != other.kind):
            raise StructureError("operands live over different data")

    def _put(self, terms: dict, legs, scalar: Scalar):
        if not scalar.terms:
            return
        prev = terms.get(legs)
        if prev is None:
            terms[legs] = scalar
        else:
            acc = prev + scalar
            if acc.terms:
                terms[legs] = acc
            else:
                del terms[legs]

    def __add__(self, other: "Singular") -> "Singular":
        self._check_mate(other)
        terms = dict(self.terms)
        for legs, s in other.terms.items():
            self._put(terms, legs, s)
        return Singular(self.lattice, self.points, self.kind, terms)

    def __neg__(self) -> "Singular":
        return Singular(self.lattice, self.points, self.kind,
                        {legs: -s for legs, s in self.terms.items()})

    def __sub__(self, other: "Singular") -> "Singular":
        return self + (-other)

    def scale(self, value) -> "Singular":
        value = Fraction(value)
        if value == 0:
            return Singular.zero(self.lattice, self.points, self.kind)
        return Singular(self.lattice, self.points, self.kind,
                        {legs: s.scale(value) for legs, s in self.terms.items()})

    def mul_scalar(self, scalar: Scalar) -> "Singular":
        """The module action of the coefficient ring."""
        if scalar.points != self.points or scalar.kind != self.kind:
            raise StructureError("scalar does not match the points or kind")
        terms: dict = {}
        for legs, s in self.terms.items():
            self._put(terms, legs, s * scalar)
        return Singular(self.lattice, self.points, self.kind, terms)

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.terms.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Singular):
            return NotImplemented
        if (self.lattice != other.lattice or self.points != other.points
                or self.kind != other.kind):
            return False
        if self.terms == other.terms:
            return True
        return (self - other).is_zero()

    def __hash__(self):
        raise TypeError("Singular is not hashable; compare with ==")

    # -- structure maps ---------------------------------------------------

    def extend_scalars(self) -> "Singular":
        """Pass from the differences-only ring to the polynomial one."""
        if self.kind == KIND_POLY:
            return self
        return Singular(self.lattice, self.points, KIND_POLY,
                        {legs: s.retag(KIND_POLY)
                         for legs, s in self.terms.items()})

    def t_act(self, label: int, k: int = 1) -> "Singular":
        """Divided-power derivation at one label.

        Acts by the Leibniz sum over the bialgebra factor at the label and
        the coordinate derivative of the scalar part.
        """
        if label not in self.points:
            raise StructureError(f"unknown label {label} in {self.points.labels}")
        if k < 0:
            raise StructureError("derivative order must be non-negative")
        idx = self.points.index(label)
        terms: dict = {}
        for legs, s in self.terms.items():
            for p in range(k + 1):
                factor = Element.from_monomial(self.lattice, legs[idx]).derive(p)
                if factor.is_zero():
                    continue
                ds = s.derive(label, k - p)
                if not ds.terms:
                    continue
                for m, c in factor.terms.items():
                    key = legs[:idx] + (m,) + legs[idx + 1:]
                    self._put(terms, key, ds.scale(c))
        return Singular(self.lattice, self.points, self.kind, terms)

    def pushforward(self, mapping: dict[int, int],
                    target: PointSet) -> "Singular":
        """Multiply bialgebra factors along the fibers, substitute scalars.

        Labels missing from every fiber receive the vacuum.  Collapsing a
        pair that carries a pole raises a domain error from the scalar ring.
        """
        for i in self.points.labels:
            if mapping.get(i) not in target:
                raise StructureError(
                    f"label {i} maps to {mapping.get(i)} outside {target.labels}")
        rank = self.lattice.rank
        terms: dict = {}
        for legs, s in self.terms.items():
            fibers = [Monomial.vacuum(rank)] * len(target)
            for idx, m in enumerate(legs):
                j = target.index(mapping[self.points.labels[idx]])
                fibers[j] = fibers[j] * m
            moved = s.substitute(mapping, target)
            self._put(terms, tuple(fibers), moved)
        return Singular(self.lattice, target, self.kind, terms)

    def relabel(self, mapping: dict[int, int]) -> "Singular":
        """Pushforward along a bijective relabelling, preserving classes."""
        target = PointSet(
            tuple(sorted(mapping[i] for i in self.points.labels)),
            tuple(sorted((frozenset(mapping[i] for i in cls)
                          for cls in self.points.classes), key=min)))
        return self.pushforward(mapping, target)

    def __repr__(self):
        if not self.terms:
            return "Singular(0)"
        bits = []
        for legs, s in sorted(self.terms.items(),
                              key=lambda kv: tuple(m.sort_key() for m in kv[0])):
            bits.append("(" + " (x) ".join(str(m) for m in legs) + f") . {s!r}")
        return "Singular(" + " + ".join(bits) + ")"


# -- the singular multiplication -------------------------------------------


def mu(bc: Bicharacter, v: Singular, u: Singular) -> Singular:
    """The singular multiplication over the disjoint union of point sets.

    Scalar coefficients already present on the inputs ride along unchanged:
    the map is linear over both coefficient rings.
    """
    if v.lattice != bc.lattice or u.lattice != bc.lattice:
        raise StructureError("operands do not match this context's lattice")
    if v.kind != u.kind:
        raise StructureError("operands live over different scalar rings")
    points = v.points.union(u.points)
    kind = v.kind
    out = Singular.zero(bc.lattice, points, kind)
    terms: dict = {}
    for av, sv in v.terms.items():
        sv_big = sv.embed(points)
        for au, su in u.terms.items():
            s0 = sv_big * su.embed(points)
            if not s0.terms:
                continue
            # two-fold split of every factor on both sides
            for legs_v, cv in _assignment_splits(av):
                keep_v = tuple(lr[0] for lr in legs_v)
                pair_v = tuple(lr[1] for lr in legs_v)
                for legs_u, cu in _assignment_splits(au):
                    keep_u = tuple(lr[0] for lr in legs_u)
                    pair_u = tuple(lr[1] for lr in legs_u)
                    r_val = bc.multi_assignments(
                        pair_v, v.points, pair_u, u.points, points)
                    if not r_val.terms:
                        continue
                    if kind != KIND_DIFF:
                        r_val = r_val.retag(kind)
                    scalar = (s0 * r_val).scale(cv * cu)
                    if scalar.terms:
                        out._put(terms, keep_v + keep_u, scalar)
    out.terms = terms
    return out


def _assignment_splits(assignment):
    """All two-fold coproduct splits of a monomial assignment."""
    from .bialgebra import _split2
    stack = [((), Fraction(1))]
    for m in assignment:
        stack = [(chosen + ((l1, l2),), c * w)
                 for chosen, c in stack for (l1, l2), w in _split2(m)]
    return stack


def check_commutativity(bc: Bicharacter, v: Element, u: Element) -> bool:
    """mu(v (x) u) equals the slot swap of mu(u (x) v), exactly."""
    lhs = mu(bc, Singular.from_element(v, 1), Singular.from_element(u, 2))
    rhs = mu(bc, Singular.from_element(u, 1), Singular.from_element(v, 2))
    return lhs == rhs.relabel({1: 2, 2: 1})


def check_associativity(bc: Bicharacter, v: Element, u: Element,
                        w: Element) -> bool:
    """mu(v (x) mu(u (x) w)) equals mu(mu(v (x) u) (x) w), exactly."""
    s1 = Singular.from_element(v, 1)
    s2 = Singular.from_element(u, 2)
    s3 = Singular.from_element(w, 3)
    left = mu(bc, s1, mu(bc, s2, s3))
    right = mu(bc, mu(bc, s1, s2), s3)
    return left == right
