"""Frechet-filter comparison, order relations, and classification.

Two sequences are Frechet-equal when they agree at all but finitely many
indices, and strictly ordered when one is strictly below the other at every
sufficiently large index.  On canonical closed forms both relations are
decidable; the decision device is the parity split:

Restricted to even (or odd) indices, a term with base -B collapses onto the
base +B term of the same (|base|, power) group, with combined coefficient
c_plus + c_minus on even indices and c_plus - c_minus on odd ones.  Each
parity restriction is therefore an exponential polynomial with positive
bases, whose eventual sign is the sign of its dominant group in the
(|base| desc, power desc) lexicographic order: a base ratio above 1 outgrows
any power gap, and with equal bases the higher power wins.  No deeper
periodicity can occur because bases enter only as +B/-B pairs.

Lazy sequences get horizon-bounded semi-decisions instead: a Verdict that
either reports a concrete counterexample index or states the horizon up to
which the claim was checked.  The first tenth of the indices is exempt, as a
finite-prefix tolerance mirroring "all but finitely many".
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import LazyInput, ZeroDivisor
from .quantity import ExpPoly, Quantity, eval_at, sub

DEFAULT_HORIZON = 10_000

EVEN, ODD = 0, 1


class Comparison(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ParitySign:
    """Eventual signs (-1, 0, +1) of a closed form on even and odd indices."""

    even: int
    odd: int


@dataclass(frozen=True)
class Verdict:
    """Outcome of a horizon-bounded check on a lazy claim."""

    status: str  # "holds" | "fails" | "unknown"
    checked_up_to: int | None = None
    witness: int | None = None
    horizon: int | None = None

    @classmethod
    def holds(cls, checked_up_to: int) -> "Verdict":
        return cls("holds", checked_up_to=checked_up_to)

    @classmethod
    def fails(cls, witness: int) -> "Verdict":
        return cls("fails", witness=witness)

    @classmethod
    def unknown(cls, horizon: int) -> "Verdict":
        return cls("unknown", horizon=horizon)


@dataclass(frozen=True)
class Classification:
    """Position of a quantity in the infinitesimal/finite/infinite taxonomy.

    kind is one of "zero", "infinitesimal", "finite", "inf+", "inf-",
    "oscillating"; standard_part is set exactly when kind is "finite".
    """

    kind: str
    standard_part: Fraction | None = None


def _parity_groups(e: ExpPoly) -> dict[tuple[Fraction, int], list[Fraction]]:
    """Combined coefficients per (|base|, power) group: [even part, odd part]."""
    groups: dict[tuple[Fraction, int], list[Fraction]] = {}
    for (base, power), c in e.items():
        key = (abs(base), power)
        slot = groups.setdefault(key, [Fraction(0), Fraction(0)])
        if base > 0:
            slot[EVEN] += c
            slot[ODD] += c
        else:
            slot[EVEN] += c
            slot[ODD] -= c
    return groups


def _parity_leading(e: ExpPoly, parity: int) -> tuple[tuple[Fraction, int], Fraction] | None:
    """Dominant group and combined coefficient of the parity restriction, or None if it vanishes."""
    groups = _parity_groups(e)
    for key in sorted(groups, reverse=True):
        c = groups[key][parity]
        if c != 0:
            return key, c
    return None


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def eventual_sign(e: ExpPoly) -> ParitySign:
    """Eventual sign of the sequence on each parity class."""
    signs = []
    for parity in (EVEN, ODD):
        lead = _parity_leading(e, parity)
        signs.append(0 if lead is None else _sign(lead[1]))
    return ParitySign(signs[EVEN], signs[ODD])


def compare(q1: Quantity, q2: Quantity) -> Comparison:
    """Exact Frechet comparison of closed forms.

    Patches are ignored: finite index sets never decide equality or order.
    INCOMPARABLE covers every eventual sign pattern of the difference other
    than strictly-positive-on-both-parities and strictly-negative-on-both,
    because the strict order requires strict inequality at every large index.
    """
    if not (q1.is_closed and q2.is_closed):
        raise LazyInput("compare needs closed forms; use compare_lazy")
    d = q2.body - q1.body
    if d.is_zero:
        return Comparison.EQUAL
    s = eventual_sign(d)
    if s.even > 0 and s.odd > 0:
        return Comparison.LESS
    if s.even < 0 and s.odd < 0:
        return Comparison.GREATER
    return Comparison.INCOMPARABLE


def compare_lazy(
    q1: Quantity, q2: Quantity, claim: Comparison, horizon: int = DEFAULT_HORIZON
) -> Verdict:
    """Pointwise semi-decision of a claimed relation on indices 1..horizon.

    The first ceil(horizon/10) indices are exempt; a violation past the
    exemption window yields Fails with the smallest violating index.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    tests = {
        Comparison.LESS: lambda a, b: a < b,
        Comparison.EQUAL: lambda a, b: a == b,
        Comparison.GREATER: lambda a, b: a > b,
    }
    if claim not in tests:
        raise ValueError("claim must be LESS, EQUAL or GREATER")
    ok = tests[claim]
    start = -(-horizon // 10) + 1
    for n in range(start, horizon + 1):
        if not ok(eval_at(q1, n), eval_at(q2, n)):
            return Verdict.fails(n)
    return Verdict.holds(horizon)


def _term_vanishes(base: Fraction, power: int) -> bool:
    # Exactly the terms with limit 0: |b| < 1, or |b| = 1 with power <= -1.
    ab = abs(base)
    return ab < 1 or (ab == 1 and power <= -1)


def _probe_ks(horizon: int) -> list[int]:
    ks, k = [], 1
    while k <= horizon // 10:
        ks.append(k)
        k *= 10
    return ks or [1]


def _lazy_is_small(q: Quantity, horizon: int) -> Verdict:
    start = -(-horizon // 10) + 1
    bound = Fraction(1, _probe_ks(horizon)[-1])
    for n in range(start, horizon + 1):
        if abs(eval_at(q, n)) >= bound:
            return Verdict.fails(n)
    return Verdict.holds(horizon)


def is_infinitely_small(q: Quantity, horizon: int = DEFAULT_HORIZON):
    """Whether |q| eventually drops below 1/k for every k.

    Closed forms answer exactly (True/False): that property holds iff every
    term tends to 0.  Lazy sequences get a Verdict testing |q(n)| < 1/k past
    the exemption window, with k probed up to horizon/10 (larger k would
    falsely fail honest infinitesimals like (1/n) inside the horizon).
    """
    if q.is_closed:
        return all(_term_vanishes(base, power) for (base, power), _ in q.body.items())
    return _lazy_is_small(q, horizon)


def _growing(key: tuple[Fraction, int]) -> bool:
    ab, power = key
    return ab > 1 or (ab == 1 and power >= 1)


def is_infinitely_great(q: Quantity, horizon: int = DEFAULT_HORIZON):
    """+1 if q eventually exceeds every constant, -1 symmetrically, 0 otherwise.

    Needs unbounded one-signed growth on BOTH parity classes; parity-mixed
    growth such as (0, 2, 0, 4, ...) is not infinitely great.  Lazy sequences
    get a Verdict: the tail sign is sampled, then |q(n)| > k is required past
    the exemption window for each probed k.
    """
    if q.is_closed:
        signs = []
        for parity in (EVEN, ODD):
            lead = _parity_leading(q.body, parity)
            if lead is None or not _growing(lead[0]):
                return 0
            signs.append(_sign(lead[1]))
        if signs[EVEN] == signs[ODD]:
            return signs[EVEN]
        return 0
    direction = _sign(eval_at(q, horizon))
    if direction == 0:
        return Verdict.fails(horizon)
    start = -(-horizon // 10) + 1
    bound = Fraction(_probe_ks(horizon)[-1])
    for n in range(start, horizon + 1):
        v = eval_at(q, n)
        if _sign(v) != direction or abs(v) <= bound:
            return Verdict.fails(n)
    return Verdict.holds(horizon)


def infinitely_greater(q1: Quantity, q2: Quantity) -> bool:
    """Whether q1 exceeds every natural multiple k*q2 in the Frechet order.

    Decided per parity class.  Where q2's restriction vanishes identically,
    q1's must be eventually positive.  Where q2 is eventually negative the
    k = 1 instance binds (larger k only loosens it), so q1 - q2 must be
    eventually positive there.  Where q2 is eventually positive the
    constraint tightens as k grows, so q1 must dominate with a strictly
    higher (|base|, power) group and a positive leading coefficient.
    """
    if not (q1.is_closed and q2.is_closed):
        raise LazyInput("infinitely_greater needs closed forms")
    d = q1.body - q2.body
    for parity in (EVEN, ODD):
        l1 = _parity_leading(q1.body, parity)
        l2 = _parity_leading(q2.body, parity)
        if l2 is None:
            ok = l1 is not None and _sign(l1[1]) > 0
        elif _sign(l2[1]) < 0:
            ld = _parity_leading(d, parity)
            ok = ld is not None and _sign(ld[1]) > 0
        else:
            ok = l1 is not None and _sign(l1[1]) > 0 and l1[0] > l2[0]
        if not ok:
            return False
    return True


def infinitely_close(q1: Quantity, q2: Quantity, horizon: int = DEFAULT_HORIZON):
    """Whether the difference is infinitely small (zero difference counts)."""
    return is_infinitely_small(sub(q1, q2), horizon)


def classify(q: Quantity) -> Classification:
    """Exact taxonomy of a closed form.

    zero: empty body.  infinitesimal: nonzero, every term tends to 0.
    finite: every non-constant term tends to 0; the standard part is the
    constant term's coefficient.  inf+/inf-: one-signed unbounded growth on
    both parities.  oscillating: everything else (no limit, no eventual
    relation to the constants).
    """
    if not q.is_closed:
        raise LazyInput("classify needs a closed form; use classify_lazy")
    if q.body.is_zero:
        return Classification("zero")
    items = q.body.items()
    if all(_term_vanishes(base, power) for (base, power), _ in items):
        return Classification("infinitesimal")
    if all(_term_vanishes(base, power) or (base, power) == (1, 0) for (base, power), _ in items):
        return Classification("finite", q.body.coeff(1, 0))
    g = is_infinitely_great(q)
    if g > 0:
        return Classification("inf+")
    if g < 0:
        return Classification("inf-")
    return Classification("oscillating")


def classify_lazy(
    q: Quantity,
    horizon: int = DEFAULT_HORIZON,
    window: int = 50,
    tol: Fraction = Fraction(1, 10**6),
) -> Classification | None:
    """Horizon-based estimate for lazy sequences; None when the tail is inconclusive.

    A "finite" result carries the tail median as an estimated standard part.
    This is evidence, not proof: only a closed form can be classified exactly.
    """
    if q.is_closed:
        return classify(q)
    tail = [eval_at(q, n) for n in range(horizon - window + 1, horizon + 1)]
    early = [eval_at(q, n) for n in range(max(1, horizon // 10), max(1, horizon // 10) + window)]
    if all(v == 0 for v in tail):
        return Classification("zero")
    tail_mag = max(abs(v) for v in tail)
    early_mag = max(abs(v) for v in early)
    if tail_mag < tol or (tail_mag * 2 <= early_mag and tail_mag < Fraction(1, 100)):
        return Classification("infinitesimal")
    spread = max(tail) - min(tail)
    if spread < tol:
        mid = sorted(tail)[len(tail) // 2]
        return Classification("finite", mid)
    bound = Fraction(_probe_ks(horizon)[-1])
    if all(v > bound for v in tail):
        return Classification("inf+")
    if all(v < -bound for v in tail):
        return Classification("inf-")
    return None


def proportionality_constant(q1: Quantity, q2: Quantity) -> Fraction | None:
    """The exact constant c with q1 = c * q2, or None if there is none.

    The candidate is read off the coefficients at q2's dominant key and then
    verified by exact comparison, so a returned constant is always sound.
    """
    if not (q1.is_closed and q2.is_closed):
        raise LazyInput("proportionality_constant needs closed forms")
    if q2.body.is_zero:
        raise ZeroDivisor("ratio against a quantity equal to zero")
    if q1.body.is_zero:
        return Fraction(0)
    (base, power), c2 = max(
        q2.body.items(), key=lambda kv: (abs(kv[0][0]), kv[0][1], kv[0][0])
    )
    c1 = q1.body.coeff(base, power)
    if c1 == 0:
        return None
    candidate = c1 / c2
    if q1.body == q2.body.scale(candidate):
        return candidate
    return None
