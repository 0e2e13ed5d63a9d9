"""The commutative cocommutative bialgebra with derivation attached to an
even lattice.

For a rank-n even lattice L with basis {l_1, ..., l_n} the algebra is

    Q[L] (x) Sym( L(1) + L(2) + ... ),

with generators e^v for v in L (group-like, e^v e^w = e^{v+w}) and l_a(k)
for k >= 1.  The derivation acts by d(e^{l_a}) = l_a(1) and
d(l_a(k)) = (k+1) l_a(k+1), so l_a(k) is the k-th divided power d^(k) e^{l_a}.
The coproduct is determined by D(e^v) = e^v (x) e^v together with
multiplicativity and compatibility with d; on generators it comes out as
D(l_a(k)) = sum_{i+j=k} l_a(i) (x) l_a(j) with l_a(0) := e^{l_a}.

A two-cocycle c: L x L -> {±1} with c(v,w) = (-1)^{(v,w)} c(w,v) rides along
on the lattice; the bicharacter needs it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import StructureError
from .points import PointSet

_ZERO = Fraction(0)
_ONE = Fraction(1)

SymPart = tuple[tuple[tuple[int, int], int], ...]  # ((basis index, level), mult)


@dataclass(frozen=True)
class Lattice:
    """An even integral lattice with a choice of two-cocycle.

    gram holds the bilinear form on the basis; cocycle holds c on basis
    pairs, extended bimultiplicatively to all of L x L.
    """

    rank: int
    gram: tuple[tuple[int, ...], ...]
    cocycle: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.rank
        if n < 1:
            raise StructureError("rank must be positive")
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise StructureError("gram matrix shape does not match the rank")
        for a in range(n):
            for b in range(n):
                if self.gram[a][b] != self.gram[b][a]:
                    raise StructureError("gram matrix must be symmetric")
            if self.gram[a][a] % 2:
                raise StructureError("diagonal entries must be even")
        if len(self.cocycle) != n or any(len(row) != n for row in self.cocycle):
            raise StructureError("cocycle table shape does not match the rank")
        for a in range(n):
            for b in range(n):
                if self.cocycle[a][b] not in (1, -1):
                    raise StructureError("cocycle values must be ±1")
                want = (-1) ** self.gram[a][b]
                if self.cocycle[a][b] * self.cocycle[b][a] != want:
                    raise StructureError(
                        f"cocycle table violates c(a,b)c(b,a) = (-1)^(a,b) "
                        f"at basis pair ({a},{b})")
        if n <= 3:
            # leading principal minors; only checked where it is cheap
            minors = []
            g = self.gram
            minors.append(g[0][0])
            if n >= 2:
                minors.append(g[0][0] * g[1][1] - g[0][1] * g[1][0])
            if n >= 3:
                minors.append(
                    g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
                    - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
                    + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))
            if any(m <= 0 for m in minors):
                raise StructureError("the form is not positive definite")

    @classmethod
    def rank_one(cls, n: int) -> "Lattice":
        """The rank-1 lattice with (l_0, l_0) = n and the trivial cocycle."""
        if n <= 0 or n % 2:
            raise StructureError(f"the squared length must be a positive even "
                                 f"integer, got {n}")
        return cls(1, ((n,),), ((1,),))

    @classmethod
    def from_gram(cls, gram, cocycle=None) -> "Lattice":
        gram = tuple(tuple(int(x) for x in row) for row in gram)
        n = len(gram)
        if cocycle is None:
            cocycle = tuple(tuple(1 for _ in range(n)) for _ in range(n))
        else:
            cocycle = tuple(tuple(int(x) for x in row) for row in cocycle)
        return cls(n, gram, cocycle)

    def pairing(self, v, w) -> int:
        return sum(v[a] * self.gram[a][b] * w[b]
                   for a in range(self.rank) for b in range(self.rank))

    def cocycle_eval(self, v, w) -> int:
        """Bimultiplicative extension of the basis table to L x L."""
        parity = 0
        for a in range(self.rank):
            if not v[a]:
                continue
            for b in range(self.rank):
                if self.cocycle[a][b] == -1:
                    parity += v[a] * w[b]
        return -1 if parity % 2 else 1


@dataclass(frozen=True)
class Monomial:
    """e^{group} * prod l_a(k)^m, with sym sorted by (a, k)."""

    group: tuple[int, ...]
    sym: SymPart = ()

    def __mul__(self, other: "Monomial") -> "Monomial":
        group = tuple(p + q for p, q in zip(self.group, other.group))
        if not self.sym:
            return Monomial(group, other.sym)
        if not other.sym:
            return Monomial(group, self.sym)
        merged = dict(self.sym)
        for gen, m in other.sym:
            merged[gen] = merged.get(gen, 0) + m
        return Monomial(group, tuple(sorted(merged.items())))

    @property
    def is_grouplike(self) -> bool:
        return not self.sym

    @property
    def is_vacuum(self) -> bool:
        return not self.sym and not any(self.group)

    def sym_weight(self) -> int:
        """Total level sum; the natural grading weight of the sym part."""
        return sum(k * m for (_, k), m in self.sym)

    def sort_key(self):
        return (self.group, self.sym)

    @classmethod
    def vacuum(cls, rank: int) -> "Monomial":
        return cls((0,) * rank)

    @classmethod
    def group_element(cls, vector) -> "Monomial":
        return cls(tuple(int(x) for x in vector))

    @classmethod
    def generator(cls, rank: int, a: int, k: int, power: int = 1) -> "Monomial":
        if not 0 <= a < rank:
            raise StructureError(f"basis index {a} out of range for rank {rank}")
        if k < 1:
            raise StructureError(f"level must be >= 1, got {k}")
        if power < 1:
            raise StructureError(f"exponent must be >= 1, got {power}")
        return cls((0,) * rank, (((a, k), power),))

    def __repr__(self):
        bits = [f"e{list(self.group)}"]
        for (a, k), m in self.sym:
            bits.append(f"l({a + 1},{k})" + (f"^{m}" if m > 1 else ""))
        return "*".join(bits)


# -- structure maps on monomials, cached value-level --------------------

@lru_cache(maxsize=None)
def _derive_monomial(m: Monomial) -> tuple[tuple[Monomial, Fraction], ...]:
    """First derivative of a monomial, as a list of (monomial, coeff)."""
    rank = len(m.group)
    out: dict[Monomial, Fraction] = {}

    def put(mono, c):
        acc = out.get(mono, _ZERO) + c
        if acc:
            out[mono] = acc
        else:
            out.pop(mono, None)

    # group part: d(e^v) = sum_a v_a e^{v - l_a} l_a(1)
    for a, na in enumerate(m.group):
        if not na:
            continue
        group = list(m.group)
        group[a] -= 1
        put(Monomial(tuple(group), m.sym) * Monomial.generator(rank, a, 1),
            Fraction(na))
    # sym part: d(l_a(k)) = (k+1) l_a(k+1)
    for pos, ((a, k), mult) in enumerate(m.sym):
        if mult == 1:
            rest = m.sym[:pos] + m.sym[pos + 1:]
        else:
            rest = m.sym[:pos] + (((a, k), mult - 1),) + m.sym[pos + 1:]
        put(Monomial(m.group, rest) * Monomial.generator(rank, a, k + 1),
            Fraction(mult * (k + 1)))
    return tuple(out.items())


@lru_cache(maxsize=None)
def _derivative_tower(m: Monomial, k: int) -> tuple[tuple[Monomial, Fraction], ...]:
    """Divided power d^(k) of a monomial as (monomial, coeff) pairs."""
    if k == 0:
        return ((m, _ONE),)
    prev = _derivative_tower(m, k - 1)
    out: dict[Monomial, Fraction] = {}
    for mono, c in prev:
        for m2, c2 in _derive_monomial(mono):
            acc = out.get(m2, _ZERO) + c * c2
            if acc:
                out[m2] = acc
            else:
                out.pop(m2, None)
    scale = Fraction(1, k)
    return tuple((mono, c * scale) for mono, c in out.items())


@lru_cache(maxsize=None)
def _split_generator(rank: int, a: int, k: int) -> tuple:
    """D(l_a(k)) = sum_{i+j=k} l_a(i) (x) l_a(j), with l_a(0) = e^{l_a}."""
    def leg(i):
        if i == 0:
            vec = [0] * rank
            vec[a] = 1
            return Monomial(tuple(vec))
        return Monomial.generator(rank, a, i)
    return tuple(((leg(i), leg(k - i)), _ONE) for i in range(k + 1))


@lru_cache(maxsize=None)
def _split2(m: Monomial) -> tuple[tuple[tuple[Monomial, Monomial], Fraction], ...]:
    """Two-fold coproduct of a monomial."""
    g = Monomial(m.group)
    acc: dict[tuple[Monomial, Monomial], Fraction] = {(g, g): _ONE}
    for (a, k), mult in m.sym:
        gen_split = _split_generator(len(m.group), a, k)
        for _ in range(mult):
            nxt: dict[tuple[Monomial, Monomial], Fraction] = {}
            for (l1, l2), c in acc.items():
                for (p1, p2), w in gen_split:
                    key = (l1 * p1, l2 * p2)
                    tot = nxt.get(key, _ZERO) + c * w
                    if tot:
                        nxt[key] = tot
                    else:
                        nxt.pop(key, None)
            acc = nxt
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _splitn(m: Monomial, n: int) -> tuple[tuple[tuple[Monomial, ...], Fraction], ...]:
    if n < 1:
        raise StructureError("coproduct arity must be >= 1")
    if n == 1:
        return (((m,), _ONE),)
    out: dict[tuple[Monomial, ...], Fraction] = {}
    for (l1, l2), c in _split2(m):
        for rest, w in _splitn(l2, n - 1):
            key = (l1,) + rest
            tot = out.get(key, _ZERO) + c * w
            if tot:
                out[key] = tot
            else:
                out.pop(key, None)
    return tuple(out.items())


def counit(m: Monomial) -> Fraction:
    """e^v -> 1, anything with a sym generator -> 0."""
    return _ONE if m.is_grouplike else _ZERO


class Element:
    """A finite Q-linear combination of monomials over a fixed lattice."""

    __slots__ = ("lattice", "terms")

    def __init__(self, lattice: Lattice, terms: dict):
        self.lattice = lattice
        self.terms = terms  # Monomial -> Fraction, no zeros

    @classmethod
    def zero(cls, lattice: Lattice) -> "Element":
        return cls(lattice, {})

    @classmethod
    def vacuum(cls, lattice: Lattice) -> "Element":
        return cls(lattice, {Monomial.vacuum(lattice.rank): _ONE})

    @classmethod
    def from_monomial(cls, lattice: Lattice, m: Monomial, coeff=1) -> "Element":
        coeff = Fraction(coeff)
        return cls(lattice, {m: coeff} if coeff else {})

    @classmethod
    def group_element(cls, lattice: Lattice, vector, coeff=1) -> "Element":
        return cls.from_monomial(lattice, Monomial.group_element(vector), coeff)

    def _check_mate(self, other: "Element"):
        if self.lattice != other.lattice:
            raise StructureError("elements live over different lattices")

    def __add__(self, other: "Element") -> "Element":
        self._check_mate(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            acc = terms.get(m, _ZERO) + c
            if acc:
                terms[m] = acc
            else:
                terms.pop(m, None)
        return Element(self.lattice, terms)

    def __neg__(self) -> "Element":
        return Element(self.lattice, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, other) -> "Element":
        if not isinstance(other, Element):
            return self.scale(other)
        self._check_mate(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                acc = terms.get(m, _ZERO) + c1 * c2
                if acc:
                    terms[m] = acc
                else:
                    terms.pop(m, None)
        return Element(self.lattice, terms)

    __rmul__ = __mul__

    def scale(self, value) -> "Element":
        value = Fraction(value)
        if value == 0:
            return Element.zero(self.lattice)
        return Element(self.lattice, {m: c * value for m, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.lattice == other.lattice and self.terms == other.terms

    def __hash__(self):
        return hash((self.lattice, frozenset(self.terms.items())))

    def derive(self, k: int = 1) -> "Element":
        """Divided power d^(k) = (1/k!) d^k."""
        if k < 0:
            raise StructureError("derivative order must be non-negative")
        if k == 0:
            return self
        terms: dict = {}
        for m, c in self.terms.items():
            for mono, w in _derivative_tower(m, k):
                acc = terms.get(mono, _ZERO) + c * w
                if acc:
                    terms[mono] = acc
                else:
                    terms.pop(mono, None)
        return Element(self.lattice, terms)

    def counit(self) -> Fraction:
        return sum((c for m, c in self.terms.items() if m.is_grouplike), _ZERO)

    def coproduct(self, points: PointSet | None = None) -> "Tensor":
        return self.iterated_coproduct(2, points)

    def iterated_coproduct(self, n: int, points: PointSet | None = None) -> "Tensor":
        """n-fold coproduct as a tensor over n points (default labels 1..n)."""
        if points is None:
            points = PointSet.merged(range(1, n + 1))
        if len(points) != n:
            raise StructureError(f"need {n} labels, got {points.labels}")
        terms: dict = {}
        for m, c in self.terms.items():
            for legs, w in _splitn(m, n):
                acc = terms.get(legs, _ZERO) + c * w
                if acc:
                    terms[legs] = acc
                else:
                    terms.pop(legs, None)
        return Tensor(self.lattice, points, terms)

    def monomials(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self.terms:
            return "Element(0)"
        return "Element(" + " + ".join(
            f"{c}*{m}" for m, c in self.monomials()) + ")"


class Tensor:
    """A sparse sum of per-point monomial assignments over a point set."""

    __slots__ = ("lattice", "points", "terms")

    def __init__(self, lattice: Lattice, points: PointSet, terms: dict):
        self.lattice = lattice
        self.points = points
        self.terms = terms  # tuple[Monomial, ...] -> Fraction

    @classmethod
    def zero(cls, lattice: Lattice, points: PointSet) -> "Tensor":
        return cls(lattice, points, {})

    @classmethod
    def pure(cls, lattice: Lattice, points: PointSet, assignment, coeff=1) -> "Tensor":
        assignment = tuple(assignment)
        if len(assignment) != len(points):
            raise StructureError("assignment length does not match the points")
        coeff = Fraction(coeff)
        return cls(lattice, points, {assignment: coeff} if coeff else {})

    @classmethod
    def of_elements(cls, points: PointSet, elements) -> "Tensor":
        """Tensor product of single-point elements, in label order."""
        elements = list(elements)
        if len(elements) != len(points):
            raise StructureError("need one element per label")
        lattice = elements[0].lattice
        terms: dict = {(): _ONE}
        for e in elements:
            nxt: dict = {}
            for legs, c in terms.items():
                for m, w in e.terms.items():
                    key = legs + (m,)
                    acc = nxt.get(key, _ZERO) + c * w
                    if acc:
                        nxt[key] = acc
                    else:
                        nxt.pop(key, None)
            terms = nxt
        return cls(lattice, points, terms)

    def _check_mate(self, other: "Tensor"):
        if self.lattice != other.lattice or self.points != other.points:
            raise StructureError("tensors live over different data")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_mate(other)
        terms = dict(self.terms)
        for legs, c in other.terms.items():
            acc = terms.get(legs, _ZERO) + c
            if acc:
                terms[legs] = acc
            else:
                terms.pop(legs, None)
        return Tensor(self.lattice, self.points, terms)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + other.scale(-1)

    def __mul__(self, other: "Tensor") -> "Tensor":
        """Slot-wise product; the algebra structure of the tensor power."""
        self._check_mate(other)
        terms: dict = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                key = tuple(a * b for a, b in zip(l1, l2))
                acc = terms.get(key, _ZERO) + c1 * c2
                if acc:
                    terms[key] = acc
                else:
                    terms.pop(key, None)
        return Tensor(self.lattice, self.points, terms)

    def scale(self, value) -> "Tensor":
        value = Fraction(value)
        if value == 0:
            return Tensor.zero(self.lattice, self.points)
        return Tensor(self.lattice, self.points,
                      {legs: c * value for legs, c in self.terms.items()})

    def apply_slot(self, label: int, func) -> "Tensor":
        """Apply an Element -> Element map to one tensor slot."""
        idx = self.points.index(label)
        out = Tensor.zero(self.lattice, self.points)
        terms: dict = {}
        for legs, c in self.terms.items():
            image = func(Element.from_monomial(self.lattice, legs[idx]))
            for m, w in image.terms.items():
                key = legs[:idx] + (m,) + legs[idx + 1:]
                acc = terms.get(key, _ZERO) + c * w
                if acc:
                    terms[key] = acc
                else:
                    terms.pop(key, None)
        out.terms = terms
        return out

    def swap(self, i: int, j: int) -> "Tensor":
        """Exchange the slots at labels i and j."""
        ii, jj = self.points.index(i), self.points.index(j)
        terms: dict = {}
        for legs, c in self.terms.items():
            lst = list(legs)
            lst[ii], lst[jj] = lst[jj], lst[ii]
            key = tuple(lst)
            acc = terms.get(key, _ZERO) + c
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
        return Tensor(self.lattice, self.points, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.lattice == other.lattice and self.points == other.points
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.lattice, self.points, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "Tensor(0)"
        bits = []
        for legs, c in sorted(self.terms.items(),
                              key=lambda kv: tuple(m.sort_key() for m in kv[0])):
            bits.append(f"{c}*(" + " (x) ".join(str(m) for m in legs) + ")")
        return "Tensor(" + " + ".join(bits) + ")"


# -- convenience builders used throughout the tests and the case study ----

def vacuum(lattice: Lattice) -> Element:
    return Element.vacuum(lattice)


def group_element(lattice: Lattice, vector, coeff=1) -> Element:
    return Element.group_element(lattice, vector, coeff)


def generator(lattice: Lattice, a: int, k: int) -> Element:
    return Element.from_monomial(lattice, Monomial.generator(lattice.rank, a, k))
