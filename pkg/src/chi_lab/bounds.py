"""Chromatic number upper bounds in exact quarter-integer arithmetic.

Every bound value is a sum of halves and quarters of integers, so values are
carried as a :class:`Q4` (an integer count of quarters) and never rounded.
The epsilon-relaxed bound takes arbitrary rational epsilon and therefore
returns a general :class:`fractions.Fraction`.

The ``*_quarters`` helpers hold the raw formulas; the public bound functions
wrap them with input validation. The batch harness drives the raw helpers
directly with cached subgraph chromatic numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .graphs import Graph, complement, component_count, induced_subgraph, iter_bits
from .invariants import InvariantReport, chromatic_number, clique_number
from .invariants import independence_number as _independence


class ValidationError(ValueError):
    """Bound parameters fail their preconditions."""


class MissingInvariantError(ValueError):
    """A bound needs an invariant (e.g. excess) absent from the report."""


@dataclass(frozen=True, order=True)
class Q4:
    """Exact rational with denominator 4, stored as a quarter count."""

    quarters: int

    @classmethod
    def from_int(cls, value: int) -> "Q4":
        return cls(4 * value)

    def __add__(self, other: Union["Q4", int]) -> "Q4":
        return Q4(self.quarters + _quarters(other))

    def __sub__(self, other: Union["Q4", int]) -> "Q4":
        return Q4(self.quarters - _quarters(other))

    def __neg__(self) -> "Q4":
        return Q4(-self.quarters)

    def compare(self, other: Union["Q4", int]) -> int:
        d = self.quarters - _quarters(other)
        return (d > 0) - (d < 0)

    def at_least(self, other: Union["Q4", int]) -> bool:
        return self.compare(other) >= 0

    def ceil(self) -> int:
        return -(-self.quarters // 4)

    def as_fraction(self) -> Fraction:
        return Fraction(self.quarters, 4)

    def exact_str(self) -> str:
        return f"{self.quarters}/4"

    def decimal_str(self) -> str:
        sign = "-" if self.quarters < 0 else ""
        whole, part = divmod(abs(self.quarters), 4)
        return sign + str(whole) + ("", ".25", ".5", ".75")[part]

    def __str__(self) -> str:
        return self.exact_str()


def _quarters(value: Union[Q4, int]) -> int:
    if isinstance(value, Q4):
        return value.quarters
    if isinstance(value, int):
        return 4 * value
    raise TypeError(f"cannot mix Q4 with {type(value).__name__}")


BOUND_IDS = (
    "prop1",
    "prop2",
    "prop3",
    "prop4",
    "cor5",
    "cor6",
    "cor7",
    "cor9",
    "cor10",
    "cor11",
    "reed",
    "eps",
)

# Established theorems: value >= chi with zero tolerance. "reed" is
# conjectured and "eps" holds only through the connectivity dichotomy,
# so neither belongs here.
PROVEN_BOUND_IDS = (
    "prop1",
    "prop2",
    "prop3",
    "prop4",
    "cor5",
    "cor6",
    "cor7",
    "cor9",
    "cor10",
    "cor11",
)


@dataclass
class BoundEvaluation:
    """One bound instance: identifier, parameters used, exact value."""

    bound_id: str
    params: dict
    value: Union[Q4, Fraction]
    sound: Optional[bool] = field(default=None)

    def value_strings(self) -> tuple[str, str]:
        if isinstance(self.value, Q4):
            return self.value.exact_str(), self.value.decimal_str()
        return (
            f"{self.value.numerator}/{self.value.denominator}",
            repr(float(self.value)),
        )

    def to_dict(self) -> dict:
        exact, decimal = self.value_strings()
        return {
            "bound_id": self.bound_id,
            "params": self.params,
            "value": exact,
            "value_decimal": decimal,
            "sound": self.sound,
        }


# -- raw quarter-count formulas -------------------------------------------------


def prop1_quarters(omega: int, n: int, total_set_size: int, m: int) -> int:
    return 2 * (omega + n - total_set_size + 2 * m - 1)


def prop2_quarters(omega: int, n: int, delta: int) -> int:
    return 2 * omega + n + delta + 1


def prop3_quarters(omega: int, n: int, delta: int, chi_h: int, h_size: int) -> int:
    return prop2_quarters(omega, n, delta) + 3 * chi_h - h_size


def prop4_quarters(
    omega: int, delta: int, chi_k: int, chi_rest: int, rest_size: int
) -> int:
    return 2 * (omega + delta + 1) + 4 * chi_k + 3 * chi_rest - rest_size


def cor5_quarters(omega: int, delta: int, kappa_bar: int, chi_h: int, h_size: int) -> int:
    return 2 * (omega + delta + 1) + 5 * kappa_bar + 3 * chi_h - h_size


def cor6_quarters(omega: int, delta: int, chi_k: int, alpha_k: int, alpha: int) -> int:
    return 2 * (omega + delta + 1) + 4 * chi_k + alpha_k + 3 - alpha


def cor7_quarters(omega: int, delta: int, kappa_bar: int, alpha: int) -> int:
    return 2 * (omega + delta + 1) + 4 * kappa_bar + 4 - alpha


def cor9_quarters(omega: int, n: int, delta: int, eta: int) -> int:
    return 2 * omega + delta + 1 + n - eta


def cor10_quarters(omega: int, delta: int, delta_bar: int, eta: int) -> int:
    return 2 * (omega + delta + 1) + delta_bar - eta


def cor11_quarters(omega: int, delta: int, kappa_bar: int, eta: int) -> int:
    return 2 * (omega + delta + 1) + 5 * kappa_bar - eta


# -- the conjectured ceiling ------------------------------------------------------


def reed_bound(r: InvariantReport) -> int:
    """ceil((omega + Delta + 1) / 2)."""
    return (r.clique + r.max_degree + 1 + 1) // 2


# -- proven bounds ------------------------------------------------------------------


def bound_prop1(g: Graph, sets: list[int], *, clique: Optional[int] = None) -> Q4:
    """(1/2)(omega + n - sum |I_j| + 2m - 1) for disjoint independent I_j."""
    if not sets:
        raise ValidationError("need at least one independent set")
    seen = 0
    for j, s in enumerate(sets):
        if s == 0:
            raise ValidationError(f"set {j} is empty")
        if s & ~g.all_mask:
            raise ValidationError(f"set {j} has vertices outside the graph")
        if s & seen:
            raise ValidationError(f"set {j} overlaps an earlier set")
        for v in iter_bits(s):
            if g.adj[v] & s:
                raise ValidationError(f"set {j} is not independent (vertex {v})")
        seen |= s
    omega = clique if clique is not None else clique_number(g)[0]
    total = sum(s.bit_count() for s in sets)
    return Q4(prop1_quarters(omega, g.n, total, len(sets)))


def bound_prop2(r: InvariantReport) -> Q4:
    """(1/2)(omega + (n + Delta + 1)/2)."""
    return Q4(prop2_quarters(r.clique, r.n, r.max_degree))


def bound_prop3(r: InvariantReport, h: InvariantReport) -> Q4:
    """prop2 plus (3*chi(H) - |H|)/4 for an induced subgraph H."""
    return Q4(prop3_quarters(r.clique, r.n, r.max_degree, h.chromatic, h.n))


def _chi_of(g: Graph, mask: int) -> int:
    return chromatic_number(induced_subgraph(g, mask))[0]


def _require_cut_of_complement(g: Graph, k: int, comp: Optional[Graph]) -> Graph:
    comp = comp if comp is not None else complement(g)
    if k & ~g.all_mask:
        raise ValidationError("cut-set has vertices outside the graph")
    if component_count(comp, removed=k) < 2:
        raise ValidationError("K is not a cut-set of the complement")
    return comp


def bound_prop4(
    g: Graph,
    k: int,
    h: int,
    *,
    report: Optional[InvariantReport] = None,
    complement_graph: Optional[Graph] = None,
) -> Q4:
    """(1/2)(omega + Delta + 1) + (4 chi(G[K]) + 3 chi(H\\K) - |H\\K|)/4.

    K must be a cut-set of the complement (checked by component count after
    removal; an empty K qualifies when the complement is disconnected, with
    chi(G[K]) contributing 0). H\\K must be non-empty.
    """
    _require_cut_of_complement(g, k, complement_graph)
    if h == 0:
        raise ValidationError("H is empty")
    rest = h & ~k
    if rest == 0:
        raise ValidationError("H \\ K is empty")
    if report is not None:
        omega, delta = report.clique, report.max_degree
    else:
        omega, delta = clique_number(g)[0], g.max_degree()
    chi_k = _chi_of(g, k) if k else 0
    chi_rest = _chi_of(g, rest)
    return Q4(prop4_quarters(omega, delta, chi_k, chi_rest, rest.bit_count()))


def bound_cor5(r: InvariantReport, h: InvariantReport) -> Q4:
    """(1/2)(omega + Delta + 1) + (5 kappa_bar + 3 chi(H) - |H|)/4."""
    return Q4(cor5_quarters(r.clique, r.max_degree, r.kappa_bar, h.chromatic, h.n))


def bound_cor6(
    g: Graph,
    k: int,
    *,
    report: Optional[InvariantReport] = None,
    complement_graph: Optional[Graph] = None,
) -> Q4:
    """(1/2)(omega + Delta + 1) + (4 chi(G[K]) + alpha(G[K]) + 3 - alpha)/4."""
    _require_cut_of_complement(g, k, complement_graph)
    if report is not None:
        omega, delta, alpha = report.clique, report.max_degree, report.independence
    else:
        omega, delta = clique_number(g)[0], g.max_degree()
        alpha = _independence(g)[0]
    if k:
        sub = induced_subgraph(g, k)
        chi_k = chromatic_number(sub)[0]
        alpha_k = _independence(sub)[0]
    else:
        chi_k = alpha_k = 0
    return Q4(cor6_quarters(omega, delta, chi_k, alpha_k, alpha))


def bound_cor7(r: InvariantReport) -> Q4:
    """(1/2)(omega + Delta + 1) + kappa_bar + 1 - alpha/4."""
    return Q4(cor7_quarters(r.clique, r.max_degree, r.kappa_bar, r.independence))


def _require_excess(r: InvariantReport) -> int:
    if r.excess is None:
        raise MissingInvariantError("report lacks the chromatic excess")
    return r.excess


def bound_cor9(r: InvariantReport) -> Q4:
    """(1/2)(omega + (Delta + 1 + n)/2) - excess/4."""
    eta = _require_excess(r)
    return Q4(cor9_quarters(r.clique, r.n, r.max_degree, eta))


def bound_cor10(r: InvariantReport) -> Q4:
    """(1/2)(omega + Delta + 1) + (delta_bar - excess)/4; equals cor9."""
    eta = _require_excess(r)
    return Q4(cor10_quarters(r.clique, r.max_degree, r.delta_bar, eta))


def bound_cor11(r: InvariantReport) -> Q4:
    """(1/2)(omega + Delta + 1) + (5 kappa_bar - excess)/4."""
    eta = _require_excess(r)
    return Q4(cor11_quarters(r.clique, r.max_degree, r.kappa_bar, eta))


# -- epsilon relaxation and the connectivity dichotomy ------------------------------


def eps_bound(r: InvariantReport, eps) -> Fraction:
    """(1/2 + eps) * omega + (Delta + 2)/2, exact in the rationals."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValidationError("eps must be positive")
    return (Fraction(1, 2) + eps) * r.clique + Fraction(r.max_degree + 2, 2)


def eps_bound_holds(chi: int, omega: int, delta: int, eps_num: int, eps_den: int) -> bool:
    """chi <= (1/2 + eps)*omega + (Delta + 2)/2 in exact integer arithmetic."""
    return 2 * eps_den * chi <= (eps_den + 2 * eps_num) * omega + eps_den * (delta + 2)


def ramsey_upper(s: int, t: int) -> int:
    """Binomial Ramsey bound: R(s, t) <= C(s + t - 2, s - 1).

    Any graph with independence < s and clique < t has fewer vertices than
    this value.
    """
    if s < 1 or t < 1:
        raise ValidationError("Ramsey arguments must be >= 1")
    return math.comb(s + t - 2, s - 1)


def prop12_threshold(n: int, eps) -> float:
    """Connectivity floor T(n, eps) forced on violators of the eps bound.

    Derivation: a violator satisfies eps*omega + alpha/4 < kappa_bar + 1/2
    (subtract the eps bound from the cut-set connectivity bound), hence
    alpha < 4*kappa_bar + 2 and omega < (kappa_bar + 1/2)/eps. Ramsey
    counting gives n < 2^(alpha + omega), so

        log2(n) < (4 + 1/eps) * kappa_bar + 2 + 1/(2 eps)

    and every violator has kappa_bar > T(n, eps) with

        T(n, eps) = (log2(n) - 2 - 1/(2 eps)) / (4 + 1/eps),

    clamped to 0 when negative. Log base 2 matches the 2^(alpha + omega)
    counting step. Reported as a float; use :func:`prop12_threshold_met`
    for exact comparisons.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValidationError("eps must be positive")
    if n < 2:
        raise ValidationError("threshold needs n >= 2")
    e = float(eps)
    t = (math.log2(n) - 2.0 - 1.0 / (2.0 * e)) / (4.0 + 1.0 / e)
    return max(t, 0.0)


def prop12_threshold_met(n: int, eps, kappa_bar: int) -> bool:
    """Exact integer test of kappa_bar >= T(n, eps).

    kappa_bar >= T iff log2(n) <= kappa_bar*(4 + 1/eps) + 2 + 1/(2 eps);
    with eps = a/b the right side is P/Q with P = 2*kappa_bar*(4a + b) +
    4a + b and Q = 2a, so the test is n^Q <= 2^P in exact integers.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValidationError("eps must be positive")
    if n < 1:
        raise ValidationError("need n >= 1")
    a, b = eps.numerator, eps.denominator
    p = 2 * kappa_bar * (4 * a + b) + 4 * a + b
    q = 2 * a
    return n**q <= 2**p
