"""Sequence quantities with exact rational values.

A quantity is a sequence of rationals indexed from n = 1, stored either as

* a closed form: a canonical exponential polynomial (a finite sum of terms
  ``c * n**k * b**n`` with rational c, b and integer k) plus a finite set of
  index overrides (the "prefix patch"), or
* a lazy sequence: an arbitrary pure evaluator from index to rational.

Closed forms are the decidable fragment: addition and multiplication stay
inside it, and the ordering layer can compare them exactly.  Arithmetic that
mixes a closed form with a lazy sequence lowers the result to lazy.

All values are immutable after construction; lazy evaluators must be pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping

from .errors import (
    InvalidTerm,
    LazyPatchUnsupported,
    NegativePowerDelay,
    NonInvertible,
    ZeroDivisor,
)

Rational = Fraction

# An ExpPoly key: (base, power).  Terms are kept in a dict under these keys.
Key = tuple[Fraction, int]

# Finite index -> value overrides, invisible to Frechet equality and order.
PrefixPatch = dict[int, Fraction]


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class Term:
    """One closed-form term, denoting the sequence n -> coeff * n**power * base**n."""

    coeff: Fraction
    power: int
    base: Fraction

    def __post_init__(self):
        object.__setattr__(self, "coeff", _rat(self.coeff))
        object.__setattr__(self, "base", _rat(self.base))
        if self.base == 0:
            raise InvalidTerm("term base must be nonzero")

    def value_at(self, n: int) -> Fraction:
        return self.coeff * Fraction(n) ** self.power * self.base**n


def _canonical_order(key: Key):
    # |base| desc, power desc, base desc: the stable rendering/decision order.
    base, power = key
    return (abs(base), power, base)


class ExpPoly:
    """Canonical exponential polynomial: distinct (base, power) keys, no zero coefficients.

    The empty polynomial denotes the zero sequence.  Canonical forms are a
    complete invariant: two closed forms agree at all but finitely many
    indices if and only if their canonical forms are identical.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[Key, Fraction] | None = None):
        cleaned: dict[Key, Fraction] = {}
        if coeffs:
            for (base, power), c in coeffs.items():
                base = _rat(base)
                c = _rat(c)
                if base == 0:
                    raise InvalidTerm("term base must be nonzero")
                if c != 0:
                    cleaned[(base, int(power))] = c
        self._coeffs = cleaned

    @classmethod
    def zero(cls) -> "ExpPoly":
        return cls()

    @classmethod
    def constant(cls, r) -> "ExpPoly":
        r = _rat(r)
        return cls({(Fraction(1), 0): r}) if r != 0 else cls()

    @classmethod
    def single(cls, coeff, power: int, base) -> "ExpPoly":
        return cls({(_rat(base), power): _rat(coeff)})

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, base, power: int) -> Fraction:
        return self._coeffs.get((_rat(base), power), Fraction(0))

    def items(self) -> list[tuple[Key, Fraction]]:
        """Terms in canonical order (|base| desc, power desc, base desc)."""
        return sorted(self._coeffs.items(), key=lambda kv: _canonical_order(kv[0]), reverse=True)

    def terms(self) -> list[Term]:
        return [Term(c, power, base) for (base, power), c in self.items()]

    def value_at(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("sequence indices start at 1")
        total = Fraction(0)
        for (base, power), c in self._coeffs.items():
            total += c * Fraction(n) ** power * base**n
        return total

    def scale(self, r) -> "ExpPoly":
        r = _rat(r)
        if r == 0:
            return ExpPoly()
        return ExpPoly({k: c * r for k, c in self._coeffs.items()})

    def __add__(self, other: "ExpPoly") -> "ExpPoly":
        merged = dict(self._coeffs)
        for k, c in other._coeffs.items():
            merged[k] = merged.get(k, Fraction(0)) + c
        return ExpPoly(merged)

    def __neg__(self) -> "ExpPoly":
        return ExpPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "ExpPoly") -> "ExpPoly":
        return self + (-other)

    def __mul__(self, other: "ExpPoly") -> "ExpPoly":
        # Term product: coefficients multiply, powers add, bases multiply.
        out: dict[Key, Fraction] = {}
        for (b1, k1), c1 in self._coeffs.items():
            for (b2, k2), c2 in other._coeffs.items():
                key = (b1 * b2, k1 + k2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return ExpPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExpPoly) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def render(self) -> str:
        """Stable text form, e.g. ``1/2*n^2*1^n + 1/2*n^1*1^n``; parseable by the CLI."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for (base, power), c in self.items():
            mag = -c if c < 0 else c
            body = f"{mag}*n^{power}*{_render_base(base)}^n"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"ExpPoly({self.render()})"


def _render_base(base: Fraction) -> str:
    return str(base) if base > 0 else f"({base})"


def canonicalize(terms: Iterable[Term]) -> ExpPoly:
    """Merge terms sharing a (base, power) key and drop zero coefficients."""
    out: dict[Key, Fraction] = {}
    for t in terms:
        key = (t.base, t.power)
        out[key] = out.get(key, Fraction(0)) + t.coeff
    return ExpPoly(out)


@dataclass(frozen=True)
class LazySeq:
    """A black-box sequence: a pure, total evaluator on indices n >= 1."""

    evaluator: Callable[[int], Fraction]
    description: str = "lazy"


class Quantity:
    """A rational sequence, closed-form or lazy.  Immutable."""

    __slots__ = ("body", "patch", "seq")

    def __init__(self, body: ExpPoly | None, patch: PrefixPatch, seq: LazySeq | None):
        self.body = body
        self.patch = patch
        self.seq = seq

    @classmethod
    def closed(cls, body: ExpPoly, patch: Mapping[int, object] | None = None) -> "Quantity":
        cleaned: PrefixPatch = {}
        if patch:
            for i, v in patch.items():
                i = int(i)
                if i < 1:
                    raise ValueError("patch indices start at 1")
                v = _rat(v)
                if v != body.value_at(i):  # keep patches minimal
                    cleaned[i] = v
        return cls(body, cleaned, None)

    @classmethod
    def lazy(cls, evaluator: Callable[[int], Fraction], description: str = "lazy") -> "Quantity":
        return cls(None, {}, LazySeq(evaluator, description))

    @property
    def is_closed(self) -> bool:
        return self.body is not None

    @property
    def description(self) -> str:
        return self.seq.description if self.seq is not None else self.body.render()

    def as_lazy(self) -> "Quantity":
        """Explicitly forget the closed form."""
        if not self.is_closed:
            return self
        return Quantity.lazy(lambda n: eval_at(self, n), self.body.render())

    def __eq__(self, other) -> bool:
        # Structural equality.  For Frechet equality use order.compare().
        if not isinstance(other, Quantity):
            return NotImplemented
        if self.is_closed and other.is_closed:
            return self.body == other.body and self.patch == other.patch
        return self is other

    def __hash__(self):
        if self.is_closed:
            return hash((self.body, frozenset(self.patch.items())))
        return id(self)

    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, other)

    def __rsub__(self, other):
        return sub(other, self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, j: int):
        return pow_int(self, j)

    def render(self) -> str:
        if not self.is_closed:
            return f"lazy({self.seq.description})"
        text = self.body.render()
        if self.patch:
            entries = ", ".join(f"{i}:{self.patch[i]}" for i in sorted(self.patch))
            return f"patch({text}, {entries})"
        return text

    def __repr__(self):
        return f"Quantity({self.render()})"


def _coerce(x) -> Quantity:
    if isinstance(x, Quantity):
        return x
    return embed_scalar(_rat(x))


def embed_scalar(r) -> Quantity:
    """The constant sequence (r, r, r, ...); ring embedding of the scalars."""
    return Quantity.closed(ExpPoly.constant(r))


def eval_at(q: Quantity, n: int) -> Fraction:
    """Exact value of the n-th element (n >= 1); patch overrides win."""
    if n < 1:
        raise ValueError("sequence indices start at 1")
    if q.is_closed:
        if n in q.patch:
            return q.patch[n]
        return q.body.value_at(n)
    return _rat(q.seq.evaluator(n))


def _merge_pointwise(q1: Quantity, q2: Quantity, body: ExpPoly, op) -> Quantity:
    support = set(q1.patch) | set(q2.patch)
    patch = {i: op(eval_at(q1, i), eval_at(q2, i)) for i in support}
    return Quantity.closed(body, patch)


def add(q1, q2) -> Quantity:
    """Pointwise sum."""
    q1, q2 = _coerce(q1), _coerce(q2)
    if q1.is_closed and q2.is_closed:
        return _merge_pointwise(q1, q2, q1.body + q2.body, lambda a, b: a + b)
    return Quantity.lazy(
        lambda n: eval_at(q1, n) + eval_at(q2, n),
        f"({q1.description} + {q2.description})",
    )


def neg(q) -> Quantity:
    """Pointwise negation; the additive inverse."""
    q = _coerce(q)
    if q.is_closed:
        return Quantity.closed(-q.body, {i: -v for i, v in q.patch.items()})
    return Quantity.lazy(lambda n: -eval_at(q, n), f"-({q.description})")


def sub(q1, q2) -> Quantity:
    return add(q1, neg(q2))


def mul(q1, q2) -> Quantity:
    """Pointwise product."""
    q1, q2 = _coerce(q1), _coerce(q2)
    if q1.is_closed and q2.is_closed:
        return _merge_pointwise(q1, q2, q1.body * q2.body, lambda a, b: a * b)
    return Quantity.lazy(
        lambda n: eval_at(q1, n) * eval_at(q2, n),
        f"({q1.description} * {q2.description})",
    )


def pow_int(q, j: int) -> Quantity:
    """q**j by repeated multiplication; j < 0 inverts a single-term closed form."""
    q = _coerce(q)
    if j == 0:
        return embed_scalar(1)
    if j < 0:
        return pow_int(_reciprocal(q), -j)
    out = q
    for _ in range(j - 1):
        out = mul(out, q)
    return out


def _reciprocal(q: Quantity) -> Quantity:
    # The ring has zero divisors, so there is no general division; the
    # pointwise reciprocal stays exact only for single-term bodies.
    if not q.is_closed:
        raise NonInvertible("cannot invert a lazy sequence exactly")
    items = q.body.items()
    if len(items) != 1:
        raise NonInvertible("reciprocal requires a single-term closed form")
    (base, power), c = items[0]
    patch = {}
    for i, v in q.patch.items():
        if v == 0:
            raise ZeroDivisor(f"zero override at index {i} has no reciprocal", operation="pow")
        patch[i] = 1 / v
    return Quantity.closed(ExpPoly.single(1 / c, -power, 1 / base), patch)


def delay(q, m: int) -> Quantity:
    """Prefix with m zeros: value 0 for n <= m, the original value at n - m after."""
    q = _coerce(q)
    if m < 0:
        raise ValueError("delay must be nonnegative")
    if m == 0:
        return q
    if not q.is_closed:
        return Quantity.lazy(
            lambda n: Fraction(0) if n <= m else eval_at(q, n - m),
            f"delay({q.description}, {m})",
        )
    # Re-expand each c*n^k*b^n at n-m into powers of n; needs k >= 0.
    out: dict[Key, Fraction] = {}
    for (base, power), c in q.body.items():
        if power < 0:
            raise NegativePowerDelay(
                f"cannot delay term with power {power}; lower to lazy via as_lazy()"
            )
        shifted = c * base ** (-m)
        for j in range(power + 1):
            key = (base, j)
            out[key] = out.get(key, Fraction(0)) + shifted * comb(power, j) * Fraction(-m) ** (
                power - j
            )
    patch: PrefixPatch = {i + m: v for i, v in q.patch.items()}
    for i in range(1, m + 1):
        patch[i] = Fraction(0)
    return Quantity.closed(ExpPoly(out), patch)


def patch(q, overrides: Mapping[int, object]) -> Quantity:
    """Merge finite index overrides into a closed form; new values win."""
    q = _coerce(q)
    if not q.is_closed:
        raise LazyPatchUnsupported("cannot patch a lazy sequence")
    merged = dict(q.patch)
    for i, v in overrides.items():
        i = int(i)
        if i < 1:
            raise ValueError("patch indices start at 1")
        merged[i] = _rat(v)
    return Quantity.closed(q.body, merged)
