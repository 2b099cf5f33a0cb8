"""Ramanujan theta kernel f(x, y) = sum over all integers n of
x^(n(n+1)/2) * y^(n(n-1)/2), expanded at scaled-monomial arguments, plus
q-Pochhammer products and the triple-product form
(-x; xy) * (-y; xy) * (xy; xy).

Formal admissibility: writing d1, d2 for the total degrees of the two
argument monomials, the expansion has finitely many terms per total degree
iff d1 + d2 > 0. That rule is this engine's formal counterpart of the
analytic |xy| < 1 condition and is enforced on construction of ThetaArgs.
The triple-product form needs each of its three Pochhammer arguments to
climb in degree, so it additionally requires d1 > 0 and d2 > 0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycloNum
from .errors import NonConvergent, OrderMismatch
from .laurent import LaurentSeries, Monomial, ScaledMonomial


def _tri_up(n: int) -> int:
    return n * (n + 1) // 2


def _tri_down(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class ThetaArgs:
    first: ScaledMonomial
    second: ScaledMonomial

    def __post_init__(self):
        if self.first.coeff.order != self.second.coeff.order:
            raise OrderMismatch(
                "theta argument coefficient orders differ: %d vs %d"
                % (self.first.coeff.order, self.second.coeff.order)
            )
        if self.first.total_degree + self.second.total_degree <= 0:
            raise NonConvergent(
                "theta argument degrees d1=%d, d2=%d need d1+d2 > 0"
                % (self.first.total_degree, self.second.total_degree)
            )

    @property
    def order(self) -> int:
        return self.first.coeff.order


def term_degree(args: ThetaArgs, n: int) -> int:
    """Total degree of the index-n term: d1*n(n+1)/2 + d2*n(n-1)/2."""
    return args.first.total_degree * _tri_up(n) + args.second.total_degree * _tri_down(n)


def theta_index_range(args: ThetaArgs, bound: int) -> range:
    """All integers n whose term has total degree <= bound.

    The degree is an upward parabola in n; we walk outward from the integer
    floor of its vertex, so no floating point is involved and no index can be
    missed. The range is empty when even the vertex exceeds the bound.
    """
    d1 = args.first.total_degree
    d2 = args.second.total_degree
    vertex = Fraction(-(d1 - d2), 2 * (d1 + d2))
    n0 = math.floor(vertex)
    lo = n0
    while term_degree(args, lo) <= bound:
        lo -= 1
    hi = n0 + 1
    while term_degree(args, hi) <= bound:
        hi += 1
    return range(lo + 1, hi)


def theta_expand(args: ThetaArgs, bound: int) -> LaurentSeries:
    """Expand f(first, second) including exactly the indices of total degree
    <= bound; the result is exact through that bound.

    Negative bounds are legal: the parabola can dip below zero when one
    argument has negative degree, and dissection budgets exploit that.
    """
    order = args.order
    c1, c2 = args.first.coeff, args.second.coeff
    m1, m2 = args.first.mono, args.second.mono
    trivial1 = c1.is_one()
    trivial2 = c2.is_one()
    entries = []
    for n in theta_index_range(args, bound):
        t, u = _tri_up(n), _tri_down(n)
        coeff = None
        if not trivial1:
            coeff = c1 ** t
        if not trivial2:
            c = c2 ** u
            coeff = c if coeff is None else coeff * c
        if coeff is None:
            coeff = CycloNum.one(order)
        entries.append((m1 ** t * m2 ** u, coeff))
    return LaurentSeries.make(entries, bound, order)


def pochhammer_expand(x: ScaledMonomial, qq: ScaledMonomial, bound: int) -> LaurentSeries:
    """(x; qq)_inf = product over k >= 0 of (1 - x*qq^k), truncated.

    Factors are included while deg(x*qq^k) <= bound; for nonnegative-degree x
    the omitted factors only touch degrees beyond the bound, so the result is
    exact through it. For negative-degree x the validity calculus of the
    series product reports the honest (smaller) bound.
    """
    if qq.total_degree <= 0:
        raise NonConvergent("Pochhammer ratio degree %d must be positive" % qq.total_degree)
    if x.coeff.order != qq.coeff.order:
        raise OrderMismatch("Pochhammer coefficient orders differ")
    order = x.coeff.order
    result = LaurentSeries.one(bound, order)
    term = x
    while term.total_degree <= bound:
        factor = LaurentSeries.make(
            [(Monomial(0, 0), CycloNum.one(order)), (term.mono, -term.coeff)], bound, order
        )
        result = result * factor
        term = term * qq
    return result


def triple_product_rhs(args: ThetaArgs, bound: int) -> LaurentSeries:
    """(-x; xy) * (-y; xy) * (xy; xy) for x, y = args; the product form of the
    theta kernel, kept as an independent path from theta_expand."""
    if args.first.total_degree <= 0 or args.second.total_degree <= 0:
        raise NonConvergent(
            "triple product needs both argument degrees positive, got %d and %d"
            % (args.first.total_degree, args.second.total_degree)
        )
    x, y = args.first, args.second
    xy = x * y
    p1 = pochhammer_expand(-x, xy, bound)
    p2 = pochhammer_expand(-y, xy, bound)
    p3 = pochhammer_expand(xy, xy, bound)
    return p1 * p2 * p3
