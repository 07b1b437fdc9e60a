"""Function extension, standard parts, derivatives, continuity probes."""

import random
from fractions import Fraction as F

import pytest
from helpers import SQRT2_CONVERGENT, lazy_sqrt2

from seqring import (
    BUILTINS,
    DomainViolation,
    ExpPoly,
    NotFinite,
    NotInfinitelyClose,
    ProbeNotInfinitesimal,
    Quantity,
    RealFunction,
    StEstimate,
    ZeroProbeValue,
    add,
    classify,
    continuity_probe,
    derivative,
    embed_scalar,
    eval_at,
    extend,
    mul,
    pow_int,
    standard_part,
    uniform_continuity_probe,
    unit_infinitesimal,
)

N = Quantity.closed(ExpPoly.single(1, 1, 1))
SQUARE = RealFunction("square", lambda x: x * x)
IDENTITY = RealFunction("id", lambda x: x)
RECIP = RealFunction("recip", lambda x: 1 / x, domain=lambda x: x != 0)


def alternating_probe() -> Quantity:
    return Quantity.closed(ExpPoly.single(1, -1, -1))  # (-1)^n / n


# ------------------------------------------------------------------
# extend
# ------------------------------------------------------------------

def test_extend_constant():
    q = extend(SQUARE, embed_scalar(3))
    assert all(eval_at(q, n) == 9 for n in range(1, 20))


def test_extend_matches_ring_square():
    q = extend(SQUARE, N)
    squared = mul(N, N)
    for n in range(1, 101):
        assert eval_at(q, n) == eval_at(squared, n)


def test_extend_domain_violation():
    q = extend(RECIP, embed_scalar(0))
    with pytest.raises(DomainViolation) as err:
        eval_at(q, 1)
    assert err.value.index == 1


# ------------------------------------------------------------------
# standard_part
# ------------------------------------------------------------------

def test_standard_part_geometric_limit():
    geo = Quantity.closed(ExpPoly({(F(1), 0): F(2), (F(1, 2), 0): F(-2)}))
    assert standard_part(geo) == 2


def test_standard_part_of_infinitesimal_is_zero():
    assert standard_part(pow_int(N, -1)) == 0


def test_standard_part_rejects_growth():
    with pytest.raises(NotFinite):
        standard_part(N)
    with pytest.raises(NotFinite):
        standard_part(Quantity.closed(ExpPoly.single(1, 0, -1)))


def test_standard_part_sqrt2_estimate():
    # oracle: continued-fraction convergent 665857/470832, error below 1e-11
    est = standard_part(lazy_sqrt2())
    assert isinstance(est, StEstimate)
    assert abs(est.value - SQRT2_CONVERGENT) < F(1, 10**6)
    assert est.achieved_spread < F(1, 10**9)
    assert est.achieved_window == 50


def test_standard_part_is_ring_homomorphism_on_finite_forms():
    rng = random.Random(40)
    finite_bases = [F(1), F(1, 2), F(-1, 2), F(3, 4)]
    for _ in range(40):
        # base-1 terms only at power <= 0 keep the quantity finite
        q1 = _finite_quantity(rng, finite_bases)
        q2 = _finite_quantity(rng, finite_bases)
        assert classify(q1).kind in ("zero", "infinitesimal", "finite")
        assert standard_part(add(q1, q2)) == standard_part(q1) + standard_part(q2)
        assert standard_part(mul(q1, q2)) == standard_part(q1) * standard_part(q2)


def _finite_quantity(rng, bases):
    terms = {}
    for _ in range(rng.randint(0, 3)):
        b = rng.choice(bases)
        k = rng.randint(-2, 0) if b == 1 else rng.randint(-2, 2)
        if b == 1 and k == 0:
            k = 0  # constant term allowed
        c = F(rng.randint(-9, 9))
        key = (b, k)
        terms[key] = terms.get(key, F(0)) + c
    return Quantity.closed(ExpPoly(terms))


def test_standard_part_of_embedding():
    rng = random.Random(41)
    for _ in range(30):
        r = F(rng.randint(-99, 99), rng.randint(1, 20))
        assert standard_part(embed_scalar(r)) == r


# ------------------------------------------------------------------
# derivative
# ------------------------------------------------------------------

def test_derivative_square_at_three():
    # the quotient is exactly 6 + 1/n under the (1/n) probe
    est = derivative(SQUARE, 3)
    assert abs(est.value - 6) < F(1, 1000)
    quotient = lambda n: ((3 + F(1, n)) ** 2 - 9) * n
    for n in (1, 10, 100):
        assert quotient(n) == 6 + F(1, n)


def test_derivative_sin_at_zero():
    est = derivative(BUILTINS["sin"], 0)
    assert abs(est.value - 1) < F(1, 10**6)


def test_derivative_absent_for_abs_at_zero():
    # the alternating quotient hits -1 and +1 forever; the spread says so
    est = derivative(BUILTINS["abs"], 0, probe=alternating_probe())
    assert est.achieved_spread == 2
    assert abs(est.value) <= 1


def test_derivative_rejects_non_infinitesimal_probe():
    with pytest.raises(ProbeNotInfinitesimal):
        derivative(SQUARE, 3, probe=N)


def test_derivative_zero_probe_value():
    probe = Quantity.closed(ExpPoly.single(1, -1, 1), {9990: F(0)})
    with pytest.raises(ZeroProbeValue):
        derivative(SQUARE, 3, probe=probe)


def test_derivative_matches_polynomial_oracle():
    # analytic differentiation oracle on random degree <= 4 polynomials
    rng = random.Random(42)
    horizon = 10_000
    for _ in range(15):
        coeffs = [F(rng.randint(-1, 1)) for _ in range(5)]
        x = F(rng.randint(-4, 4), rng.randint(8, 12))
        f = RealFunction("poly", lambda t, c=coeffs: sum(ci * t**i for i, ci in enumerate(c)))
        exact = sum(i * ci * x ** (i - 1) for i, ci in enumerate(coeffs) if i >= 1)
        est = derivative(f, x, horizon=horizon)
        assert abs(est.value - exact) <= F(10, horizon)


def test_derivative_probe_independent_at_smooth_points():
    rng = random.Random(43)
    probes = [
        unit_infinitesimal(),
        Quantity.closed(ExpPoly.single(1, -2, 1)),
        alternating_probe(),
    ]
    for _ in range(5):
        x = F(rng.randint(-9, 9), rng.randint(1, 5))
        estimates = [derivative(SQUARE, x, probe=h) for h in probes]
        spread_budget = sum(e.achieved_spread for e in estimates) + F(1, 10**6)
        for e1 in estimates:
            for e2 in estimates:
                assert abs(e1.value - e2.value) <= spread_budget


# ------------------------------------------------------------------
# continuity_probe
# ------------------------------------------------------------------

def test_continuity_square_holds():
    assert continuity_probe(SQUARE, 3).status == "holds"


def test_continuity_step_fails_with_witness():
    v = continuity_probe(BUILTINS["step"], 0, probes=[alternating_probe()])
    assert v.status == "fails"
    assert v.witness is not None and v.witness % 2 == 1  # odd indices approach from below
    gap = abs(BUILTINS["step"].at(0 + F(-1, v.witness)) - BUILTINS["step"].at(F(0)))
    assert gap == 1


def test_continuity_step_fails_with_default_probes():
    v = continuity_probe(BUILTINS["step"], 0)
    assert v.status == "fails"


def test_continuity_zero_probe_trivially_holds():
    v = continuity_probe(SQUARE, 3, probes=[embed_scalar(0)])
    assert v.status == "holds"


def test_continuity_never_fails_for_polynomials():
    rng = random.Random(44)
    for _ in range(10):
        coeffs = [F(rng.randint(-3, 3)) for _ in range(5)]
        f = RealFunction("poly", lambda t, c=coeffs: sum(ci * t**i for i, ci in enumerate(c)))
        x = F(rng.randint(-20, 20), rng.randint(1, 10))
        assert continuity_probe(f, x).status != "fails"


def test_continuity_builtin_sqrt_at_zero_needs_one_sided_probes():
    holds = continuity_probe(
        BUILTINS["sqrt"], 0, probes=[unit_infinitesimal()]
    )
    assert holds.status == "holds"
    with pytest.raises(DomainViolation):
        continuity_probe(BUILTINS["sqrt"], 0, probes=[alternating_probe()])


# ------------------------------------------------------------------
# uniform_continuity_probe
# ------------------------------------------------------------------

def test_square_not_uniformly_continuous():
    pair_gap = lambda n: (F(n) + F(1, n)) ** 2 - F(n) ** 2
    assert pair_gap(10) == 2 + F(1, 100)  # algebraic oracle: gap = 2 + 1/n^2
    v = uniform_continuity_probe(SQUARE, N, add(N, pow_int(N, -1)))
    assert v.status == "fails"
    assert pair_gap(v.witness) >= 2 - F(1, 10**6)


def test_identity_uniformly_continuous_on_close_pair():
    v = uniform_continuity_probe(IDENTITY, N, add(N, pow_int(N, -1)))
    assert v.status == "holds"


def test_sin_uniformly_continuous_within_tolerance():
    # Lipschitz oracle: |sin a - sin b| <= |a - b| = 1/n
    v = uniform_continuity_probe(
        BUILTINS["sin"], N, add(N, pow_int(N, -1)), tol=F(1, 1000)
    )
    assert v.status == "holds"


def test_uniform_continuity_rejects_distant_pair():
    with pytest.raises(NotInfinitelyClose):
        uniform_continuity_probe(SQUARE, N, add(N, embed_scalar(1)))
