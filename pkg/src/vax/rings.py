"""Exact arithmetic in the localized coefficient rings over a point set.

Two ring families, selected by ``kind``:

  * ``KIND_DIFF`` — Laurent polynomials in the coordinate differences only,
    Q[(x_i - x_j)^{±1}] over inequivalent pairs i, j.  No bare coordinates.
  * ``KIND_POLY`` — polynomials in the coordinates with the inequivalent
    differences inverted, Q[x_i][(x_i - x_j)^{-1}].

Elements are stored as sparse sums of exponent records: each record assigns
a non-negative exponent to every coordinate and an integer exponent to a set
of canonical difference pairs (i < j, the sign of a reversed pair is absorbed
into the coefficient).  Records multiply by exponent addition, so products
never expand binomials.

The record basis is *not* linearly independent once three or more points are
in play — (x_1 - x_3) = (x_1 - x_2) + (x_2 - x_3) — so equality cannot be a
term-map comparison.  ``__eq__`` first tries the term maps and then falls
back to clearing every inverted difference and comparing expanded coordinate
polynomials, which is a canonical form.  All coefficients are
``fractions.Fraction``; everything is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import DomainError, StructureError
from .points import PointSet

KIND_DIFF = "diff"
KIND_POLY = "poly"

Pair = tuple[int, int]
# A record is (coordinate exponents aligned with points.labels,
#              sorted tuple of ((i, j), exponent) difference factors).
Record = tuple[tuple[int, ...], tuple[tuple[Pair, int], ...]]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _canonical_diffs(points: PointSet, diffs) -> tuple[tuple[tuple[Pair, int], ...], int]:
    """Sort difference factors, orient pairs as (min, max), return sign."""
    merged: dict[Pair, int] = {}
    sign = 1
    for (i, j), e in diffs:
        if e == 0:
            continue
        if i == j:
            raise StructureError(f"degenerate difference pair ({i},{i})")
        if i > j:
            i, j = j, i
            if e % 2:
                sign = -sign
        if i not in points or j not in points:
            raise StructureError(f"pair ({i},{j}) outside {points.labels}")
        merged[(i, j)] = merged.get((i, j), 0) + e
    cleaned = tuple(sorted((p, e) for p, e in merged.items() if e != 0))
    return cleaned, sign


class Scalar:
    """An element of the localized coefficient ring over a point set."""

    __slots__ = ("points", "kind", "terms")

    def __init__(self, points: PointSet, kind: str, terms: dict):
        self.points = points
        self.kind = kind
        self.terms = terms  # Record -> Fraction, no zero values

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, points: PointSet, kind: str) -> "Scalar":
        return cls(points, kind, {})

    @classmethod
    def const(cls, points: PointSet, kind: str, value) -> "Scalar":
        value = Fraction(value)
        if value == 0:
            return cls.zero(points, kind)
        record = ((0,) * len(points), ())
        return cls(points, kind, {record: value})

    @classmethod
    def one(cls, points: PointSet, kind: str) -> "Scalar":
        return cls.const(points, kind, 1)

    @classmethod
    def monomial(cls, points: PointSet, kind: str, coeff,
                 coords: dict | None = None, diffs=None) -> "Scalar":
        """Build coeff * prod x_i^{a_i} * prod (x_i - x_j)^{e_ij}.

        Reversed pairs are reoriented with the sign absorbed; a positive
        power of a difference between *equivalent* labels is expanded into
        coordinates (it is an ordinary polynomial), a negative one is
        rejected.
        """
        coeff = Fraction(coeff)
        if coeff == 0:
            return cls.zero(points, kind)
        exps = [0] * len(points)
        for label, a in (coords or {}).items():
            if a < 0:
                raise StructureError(f"negative coordinate exponent x_{label}^{a}")
            exps[points.index(label)] += a
        if kind == KIND_DIFF and any(exps):
            raise StructureError("bare coordinates are not allowed in this ring")
        diffs = list(diffs or [])
        plain = []
        expand = []  # equivalent-pair positive powers: ordinary polynomials
        for (i, j), e in diffs:
            if e == 0:
                continue
            if i == j:
                raise StructureError(f"degenerate difference pair ({i},{i})")
            if points.same_class(i, j):
                if e < 0:
                    raise DomainError(
                        f"difference ({i},{j}) is not invertible here")
                expand.append(((i, j), e))
            else:
                plain.append(((i, j), e))
        canon, sign = _canonical_diffs(points, plain)
        out = cls(points, kind, {(tuple(exps), canon): coeff * sign})
        for (i, j), e in expand:
            out = out * cls._expanded_difference(points, kind, i, j, e)
        return out

    @classmethod
    def difference(cls, points: PointSet, kind: str, i: int, j: int,
                   exponent: int, coeff=1) -> "Scalar":
        return cls.monomial(points, kind, coeff, diffs=[((i, j), exponent)])

    @classmethod
    def _expanded_difference(cls, points, kind, i, j, e) -> "Scalar":
        if kind == KIND_DIFF:
            raise StructureError(
                "an equivalent-pair difference has no home in the "
                "differences-only ring")
        ii, jj = points.index(i), points.index(j)
        terms = {}
        for s in range(e + 1):
            exps = [0] * len(points)
            exps[ii] = e - s
            exps[jj] = s
            terms[(tuple(exps), ())] = Fraction(comb(e, s) * (-1) ** s)
        return cls(points, kind, terms)

    # -- ring operations ----------------------------------------------

    def _check_mate(self, other: "Scalar"):
        if self.points != other.points or self.kind != other.kind:
            raise StructureError(
                f"mismatched scalars: {self.points}/{self.kind} vs "
                f"{other.points}/{other.kind}")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check_mate(other)
        terms = dict(self.terms)
        for rec, c in other.terms.items():
            acc = terms.get(rec, _ZERO) + c
            if acc:
                terms[rec] = acc
            else:
                terms.pop(rec, None)
        return Scalar(self.points, self.kind, terms)

    def __neg__(self) -> "Scalar":
        return Scalar(self.points, self.kind,
                      {rec: -c for rec, c in self.terms.items()})

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other) -> "Scalar":
        if not isinstance(other, Scalar):
            return self.scale(other)
        self._check_mate(other)
        terms: dict = {}
        for (xa, da), ca in self.terms.items():
            for (xb, db), cb in other.terms.items():
                exps = tuple(p + q for p, q in zip(xa, xb))
                if db and da:
                    md = dict(da)
                    for p, e in db:
                        acc = md.get(p, 0) + e
                        if acc:
                            md[p] = acc
                        else:
                            del md[p]
                    diffs = tuple(sorted(md.items()))
                else:
                    diffs = da or db
                rec = (exps, diffs)
                acc = terms.get(rec, _ZERO) + ca * cb
                if acc:
                    terms[rec] = acc
                else:
                    terms.pop(rec, None)
        return Scalar(self.points, self.kind, terms)

    __rmul__ = __mul__

    def scale(self, value) -> "Scalar":
        value = Fraction(value)
        if value == 0:
            return Scalar.zero(self.points, self.kind)
        return Scalar(self.points, self.kind,
                      {rec: c * value for rec, c in self.terms.items()})

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        # term cancellation across the record relations
        return not any(self._cleared(self._caps()).values())

    # -- derivation ----------------------------------------------------

    def derive(self, label: int, k: int = 1) -> "Scalar":
        """Divided-power derivative (1/k!) (d/dx_label)^k."""
        if k < 0:
            raise StructureError("derivative order must be non-negative")
        out = self
        for _ in range(k):
            out = out._derive_once(label)
        if k > 1:
            out = out.scale(Fraction(1, factorial(k)))
        return out

    def _derive_once(self, label: int) -> "Scalar":
        idx = self.points.index(label)
        acc = Scalar.zero(self.points, self.kind)
        terms: dict = {}

        def put(rec, c):
            tot = terms.get(rec, _ZERO) + c
            if tot:
                terms[rec] = tot
            else:
                terms.pop(rec, None)

        for (exps, diffs), c in self.terms.items():
            a = exps[idx]
            if a:
                dropped = exps[:idx] + (a - 1,) + exps[idx + 1:]
                put((dropped, diffs), c * a)
            for pos, ((i, j), e) in enumerate(diffs):
                if label == i:
                    sign = 1
                elif label == j:
                    sign = -1
                else:
                    continue
                if e == 1:
                    nd = diffs[:pos] + diffs[pos + 1:]
                else:
                    nd = diffs[:pos] + (((i, j), e - 1),) + diffs[pos + 1:]
                put((exps, nd), c * e * sign)
        acc.terms = terms
        return acc

    # -- substitution ---------------------------------------------------

    def substitute(self, mapping: dict[int, int], target: PointSet,
                   kind: str | None = None) -> "Scalar":
        """Send x_i to x_{mapping[i]}.

        A collapsed pair (mapping sends both ends to one label) kills a
        positive difference power and is a domain error on a negative one.
        A pair that lands on two equivalent target labels is expanded when
        its power is positive and rejected when negative.
        """
        kind = kind or self.kind
        for i in self.points.labels:
            if mapping.get(i) not in target:
                raise StructureError(
                    f"label {i} maps to {mapping.get(i)} outside {target.labels}")
        out = Scalar.zero(target, kind)
        for (exps, diffs), c in self.terms.items():
            coords: dict[int, int] = {}
            for idx, a in enumerate(exps):
                if a:
                    tgt = mapping[self.points.labels[idx]]
                    coords[tgt] = coords.get(tgt, 0) + a
            dead = False
            new_diffs = []
            for (i, j), e in diffs:
                ti, tj = mapping[i], mapping[j]
                if ti == tj:
                    if e < 0:
                        raise DomainError(
                            f"pole (x_{i}-x_{j})^{e} collapses under "
                            f"{i},{j} -> {ti}")
                    dead = True  # positive power of zero
                    break
                new_diffs.append(((ti, tj), e))
            if dead:
                continue
            out = out + Scalar.monomial(target, kind, c, coords, new_diffs)
        return out

    def embed(self, target: PointSet, kind: str | None = None) -> "Scalar":
        """Identity relabelling into a larger point set."""
        return self.substitute({i: i for i in self.points.labels}, target, kind)

    def retag(self, kind: str) -> "Scalar":
        if kind == self.kind:
            return self
        if kind == KIND_DIFF and any(any(exps) for exps, _ in self.terms):
            raise StructureError("coordinates cannot enter the differences-only ring")
        return Scalar(self.points, kind, dict(self.terms))

    # -- inspection -----------------------------------------------------

    def pole_order(self, pair: Pair) -> int:
        """Largest n >= 0 with some term carrying (x_i - x_j)^(-n)."""
        i, j = min(pair), max(pair)
        if self.points.same_class(i, j):
            raise StructureError(f"pair ({i},{j}) is equivalent; no pole possible")
        worst = 0
        for _, diffs in self.terms:
            for p, e in diffs:
                if p == (i, j) and e < 0:
                    worst = max(worst, -e)
        return worst

    def max_pole_orders(self) -> dict[Pair, int]:
        caps: dict[Pair, int] = {}
        for _, diffs in self.terms:
            for p, e in diffs:
                if e < 0:
                    caps[p] = max(caps.get(p, 0), -e)
        return caps

    def constant_value(self) -> Fraction:
        """The value of a constant element; error if not constant."""
        if not self.terms:
            return _ZERO
        value = _ZERO
        for (exps, diffs), c in self.terms.items():
            if any(exps) or diffs:
                raise StructureError(f"not a constant scalar: {self.terms}")
            value += c
        return value

    # -- canonical comparison --------------------------------------------

    def _caps(self) -> dict[Pair, int]:
        return self.max_pole_orders()

    def _cleared(self, caps: dict[Pair, int]) -> dict[tuple[int, ...], Fraction]:
        """Multiply by prod (x_i-x_j)^{caps} and expand to coordinates."""
        n = len(self.points)
        poly: dict[tuple[int, ...], Fraction] = {}
        for (exps, diffs), c in self.terms.items():
            part = {exps: c}
            de = dict(diffs)
            for (i, j), cap in caps.items():
                de[(i, j)] = de.get((i, j), 0) + cap
            for (i, j), e in de.items():
                if e < 0:
                    raise StructureError("caps do not clear every pole")
                if e == 0:
                    continue
                ii, jj = self.points.index(i), self.points.index(j)
                nxt: dict[tuple[int, ...], Fraction] = {}
                for s in range(e + 1):
                    w = Fraction(comb(e, s) * (-1) ** s)
                    for rec, cc in part.items():
                        lst = list(rec)
                        lst[ii] += e - s
                        lst[jj] += s
                        key = tuple(lst)
                        acc = nxt.get(key, _ZERO) + cc * w
                        if acc:
                            nxt[key] = acc
                        else:
                            nxt.pop(key, None)
                part = nxt
            for rec, cc in part.items():
                acc = poly.get(rec, _ZERO) + cc
                if acc:
                    poly[rec] = acc
                else:
                    poly.pop(rec, None)
        return poly

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.points != other.points or self.kind != other.kind:
            return False
        if self.terms == other.terms:
            return True
        caps = self._caps()
        for p, m in other._caps().items():
            caps[p] = max(caps.get(p, 0), m)
        return self._cleared(caps) == other._cleared(caps)

    def __hash__(self):
        raise TypeError("Scalar is not hashable; compare with ==")

    # -- two-point expansions ---------------------------------------------

    def difference_terms(self) -> dict[int, Fraction]:
        """{exponent: coefficient} for a two-point differences-only element."""
        if self.kind != KIND_DIFF or len(self.points) != 2:
            raise StructureError("difference expansion needs a two-point "
                                 "differences-only scalar")
        out: dict[int, Fraction] = {}
        for (exps, diffs), c in self.terms.items():
            e = diffs[0][1] if diffs else 0
            acc = out.get(e, _ZERO) + c
            if acc:
                out[e] = acc
            else:
                out.pop(e, None)
        return out

    def two_point_series(self) -> dict[int, dict[int, Fraction]]:
        """Rewrite a two-point scalar on the basis x2^b (x1-x2)^e.

        Returns {difference exponent e: {b: coefficient}}.  The rewrite
        x1 = x2 + (x1-x2) is triangular, so this is a canonical form for
        two-point elements of either kind.
        """
        if len(self.points) != 2:
            raise StructureError("two-point expansion needs two labels")
        out: dict[int, dict[int, Fraction]] = {}
        for (exps, diffs), c in self.terms.items():
            a1, a2 = exps
            e0 = diffs[0][1] if diffs else 0
            for s in range(a1 + 1):
                e = e0 + s
                b = a1 - s + a2
                w = c * comb(a1, s)
                row = out.setdefault(e, {})
                acc = row.get(b, _ZERO) + w
                if acc:
                    row[b] = acc
                else:
                    row.pop(b, None)
        return {e: row for e, row in out.items() if row}

    def __repr__(self):
        if not self.terms:
            return "Scalar(0)"
        bits = []
        for (exps, diffs), c in sorted(self.terms.items()):
            factors = [str(c)]
            for idx, a in enumerate(exps):
                if a:
                    factors.append(f"x{self.points.labels[idx]}^{a}")
            for (i, j), e in diffs:
                factors.append(f"d({i},{j})^{e}")
            bits.append("*".join(factors))
        return "Scalar(" + " + ".join(bits) + ")"
