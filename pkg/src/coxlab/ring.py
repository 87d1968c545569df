"""Pic-graded polynomial arithmetic on k[E_r] with exact coefficients.

Variables are the exceptional curves of X_r in canonical order; every
variable has coarse degree 1 and carries its curve class as multidegree.
Monomials are dense exponent tuples.  Coefficients live either in Q
(``fractions.Fraction``) or in a prime field F_p (ints mod p).

Monomial orders compare coarse degree first, then a weight inner product,
then reverse-lexicographically against a declared variable sequence.  Every
order exposes a ``key`` function mapping exponent tuples to integer tuples
compared lexicographically; twisting by a Weyl element permutes exponents
before taking the key.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .picard import (
    DivisorClass,
    WeylElement,
    act,
    coarse_degree,
    enumerate_exceptional,
)

Exponents = tuple[int, ...]


# ---------------------------------------------------------------------------
# coefficient fields
# ---------------------------------------------------------------------------

class RationalField:
    """Exact rational arithmetic via fractions.Fraction."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(x) -> Fraction:
        return Fraction(x)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def div(a, b):
        return a / b

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """F_p with elements stored as ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2:
            raise ValueError("p must be a prime >= 2")
        self.p = p
        self.name = f"F{p}"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x) -> int:
        if isinstance(x, Fraction):
            num = x.numerator % self.p
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return num * pow(den, self.p - 2, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = RationalField()
DEFAULT_PRIME = 32003


def field_from_spec(spec: str):
    """Parse 'q'/'QQ' or 'fp'/'fp:P'/'F32003' into a field object."""
    s = spec.strip().lower()
    if s in ("q", "qq", "rational", "rationals"):
        return QQ
    m = re.fullmatch(r"(?:fp|f)(?::)?(\d*)", s)
    if m:
        return PrimeField(int(m.group(1)) if m.group(1) else DEFAULT_PRIME)
    raise ValueError(f"unknown field spec {spec!r}")


# ---------------------------------------------------------------------------
# the ambient ring
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoxRing:
    """k[E_r]: one variable per exceptional curve, Pic(X_r)-graded."""

    r: int

    @property
    def curves(self):
        return enumerate_exceptional(self.r)

    @property
    def names(self) -> tuple[str, ...]:
        return self.curves.names

    @property
    def nvars(self) -> int:
        return len(self.curves)

    def variable_index(self, name: str) -> int:
        return self.names.index(name)

    def variable(self, name: str) -> Exponents:
        exps = [0] * self.nvars
        exps[self.variable_index(name)] = 1
        return tuple(exps)

    def class_of(self, i: int) -> DivisorClass:
        return self.curves.curves[i]

    def degree(self, exps: Exponents) -> DivisorClass:
        """Pic-multidegree: the weighted sum of the variable classes."""
        coeffs = [0] * (self.r + 1)
        for i, e in enumerate(exps):
            if e:
                c = self.curves.curves[i].coeffs
                for j in range(self.r + 1):
                    coeffs[j] += e * c[j]
        return DivisorClass(self.r, tuple(coeffs))

    def monomial_name(self, exps: Exponents) -> str:
        parts = []
        for i, e in enumerate(exps):
            if e == 1:
                parts.append(self.names[i])
            elif e > 1:
                parts.append(f"{self.names[i]}^{e}")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=8)
def cox_ring(r: int) -> CoxRing:
    return CoxRing(r)


def monomial_mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_coarse(a: Exponents) -> int:
    return sum(a)


def apply_perm_to_monomial(perm: tuple[int, ...], exps: Exponents) -> Exponents:
    """Image of a monomial under a variable permutation: x_i -> x_perm[i]."""
    out = [0] * len(exps)
    for i, e in enumerate(exps):
        if e:
            out[perm[i]] = e
    return tuple(out)


def act_on_monomial(g: WeylElement, ring: CoxRing, exps: Exponents) -> Exponents:
    """Weyl action on monomials by permutation of the curve variables."""
    return apply_perm_to_monomial(g.curve_perm, exps)


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Coarse degree, then weight inner product, then revlex on a sequence.

    ``sequence`` lists variable indices from most to least significant.  The
    order is encoded as an integer key: comparing keys lexicographically
    agrees with the order, and keys add under monomial multiplication, so a
    single key function drives sorting, leading terms and S-pair scheduling.
    """

    def __init__(self, ring: CoxRing, weights: Optional[tuple[int, ...]] = None,
                 sequence: Optional[tuple[int, ...]] = None, perm: Optional[tuple[int, ...]] = None):
        n = ring.nvars
        self.ring = ring
        self.weights = tuple(weights) if weights is not None else (0,) * n
        self.sequence = tuple(sequence) if sequence is not None else tuple(range(n))
        if len(self.weights) != n or sorted(self.sequence) != list(range(n)):
            raise ValueError("weights/sequence do not match the ring")
        self.perm = tuple(perm) if perm is not None else None
        # revlex against the sequence: later (less significant) variables
        # are compared first, with negated exponents
        self._rev = tuple(reversed(self.sequence))

    def key(self, exps: Exponents) -> tuple[int, ...]:
        if self.perm is not None:
            exps = apply_perm_to_monomial(self.perm, exps)
        w = sum(self.weights[i] * e for i, e in enumerate(exps) if e)
        return (sum(exps), w) + tuple(-exps[i] for i in self._rev)

    def compare(self, a: Exponents, b: Exponents) -> int:
        """-1, 0, 1 for a < b, a == b, a > b."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def twist(self, g: WeylElement) -> "MonomialOrder":
        """Order with a <= b iff g(a) <= g(b)."""
        gp = g.curve_perm
        if self.perm is not None:
            combined = tuple(self.perm[gp[i]] for i in range(len(gp)))
        else:
            combined = gp
        return MonomialOrder(self.ring, self.weights, self.sequence, combined)

    def with_weights(self, weights: Iterable[int]) -> "MonomialOrder":
        return MonomialOrder(self.ring, tuple(weights), self.sequence, self.perm)

    def sort_terms(self, terms):
        return sorted(terms, key=lambda t: self.key(t[0]), reverse=True)

    def __repr__(self):
        names = self.ring.names
        seq = ">".join(names[i] for i in self.sequence)
        tag = f", twisted" if self.perm is not None else ""
        if any(self.weights):
            return f"MonomialOrder(weights={list(self.weights)}, revlex {seq}{tag})"
        return f"MonomialOrder(revlex {seq}{tag})"


def order_from_names(ring: CoxRing, names_desc: list[str],
                     weights_by_name: Optional[dict[str, int]] = None) -> MonomialOrder:
    """Build an order from a variable sequence given by names."""
    seq = tuple(ring.variable_index(nm) for nm in names_desc)
    weights = None
    if weights_by_name is not None:
        weights = tuple(weights_by_name.get(nm, 0) for nm in ring.names)
    return MonomialOrder(ring, weights, seq)


def compare(ordr: MonomialOrder, a: Exponents, b: Exponents) -> str:
    """Spec-facing three-way comparison."""
    c = ordr.compare(a, b)
    return "less" if c < 0 else ("greater" if c > 0 else "equal")


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Exact polynomial: dict from exponent tuple to nonzero coefficient."""

    __slots__ = ("ring", "field", "terms")

    def __init__(self, ring: CoxRing, field, terms: Optional[dict] = None):
        self.ring = ring
        self.field = field
        self.terms = {m: c for m, c in (terms or {}).items() if c != field.zero}

    # construction helpers -------------------------------------------------
    @classmethod
    def zero(cls, ring, field):
        return cls(ring, field, {})

    @classmethod
    def from_monomial(cls, ring, field, exps: Exponents, coeff=None):
        return cls(ring, field, {tuple(exps): field.one if coeff is None else field.coerce(coeff)})

    def copy(self):
        return Polynomial(self.ring, self.field, dict(self.terms))

    # queries ---------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def monomials(self) -> list[Exponents]:
        return list(self.terms)

    def homogeneous_degree(self) -> Optional[DivisorClass]:
        """Common Pic-degree of all terms, or None if inhomogeneous/zero."""
        degs = {self.ring.degree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def leading_monomial(self, order: MonomialOrder) -> Exponents:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_term(self, order: MonomialOrder):
        m = self.leading_monomial(order)
        return m, self.terms[m]

    # arithmetic ------------------------------------------------------------
    def _compat(self, other: "Polynomial"):
        if self.ring != other.ring or self.field != other.field:
            raise ValueError("mixed rings or fields")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._compat(other)
        f = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = f.add(out.get(m, f.zero), c)
            if s == f.zero:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, f, out)

    def __neg__(self) -> "Polynomial":
        f = self.field
        return Polynomial(self.ring, f, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        f = self.field
        c = f.coerce(c)
        if c == f.zero:
            return Polynomial.zero(self.ring, f)
        return Polynomial(self.ring, f, {m: f.mul(co, c) for m, co in self.terms.items()})

    def mul_term(self, exps: Exponents, coeff) -> "Polynomial":
        f = self.field
        coeff = f.coerce(coeff)
        if coeff == f.zero:
            return Polynomial.zero(self.ring, f)
        return Polynomial(
            self.ring, f,
            {monomial_mul(m, exps): f.mul(c, coeff) for m, c in self.terms.items()},
        )

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._compat(other)
        f = self.field
        out: dict
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = f.add(out.get(m, f.zero), f.mul(c1, c2))
                if s == f.zero:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, f, out)

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if self.is_zero():
            return self
        _, lc = self.leading_term(order)
        return self.scale(self.field.inv(lc))

    def apply(self, g: WeylElement) -> "Polynomial":
        perm = g.curve_perm
        return Polynomial(
            self.ring, self.field,
            {apply_perm_to_monomial(perm, m): c for m, c in self.terms.items()},
        )

    # text format -----------------------------------------------------------
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, self.field, frozenset(self.terms.items())))


# ---------------------------------------------------------------------------
# text polynomial format: terms like  -3*f12*e1^2 + f34*g5
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*([+-]|\d+/\d+|\d+|[a-zA-Z][a-zA-Z0-9]*|\^|\*)")


def format_polynomial(p: Polynomial, order: Optional[MonomialOrder] = None) -> str:
    if p.is_zero():
        return "0"
    ring = p.ring
    if order is None:
        order = MonomialOrder(ring)
    items = sorted(p.terms.items(), key=lambda t: order.key(t[0]), reverse=True)
    chunks = []
    for m, c in items:
        mono = ring.monomial_name(m)
        neg = c < 0 if not isinstance(c, int) else False
        if isinstance(p.field, PrimeField):
            cs = str(c)
        else:
            cs = str(abs(c))
        if mono == "1":
            body = cs
        elif (cs == "1" and not isinstance(p.field, PrimeField)) or (
            isinstance(p.field, PrimeField) and c == p.field.one
        ):
            body = mono
        else:
            body = f"{cs}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(chunks)


def parse_polynomial(ring: CoxRing, field, text: str) -> Polynomial:
    """Parse the text polynomial format; inverse of format_polynomial."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad polynomial syntax at {text[pos:pos+20]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    tokens.append(None)  # sentinel

    terms: dict = {}
    i = 0
    n = ring.nvars

    def flush(coeff, exps):
        key = tuple(exps)
        cur = terms.get(key, field.zero)
        s = field.add(cur, field.coerce(coeff))
        if s == field.zero:
            terms.pop(key, None)
        else:
            terms[key] = s

    while tokens[i] is not None:
        sign = 1
        while tokens[i] in ("+", "-"):
            if tokens[i] == "-":
                sign = -sign
            i += 1
        coeff = Fraction(sign)
        exps = [0] * n
        expect_factor = True
        saw_factor = False
        while True:
            tok = tokens[i]
            if tok is None or tok in ("+", "-"):
                break
            if tok == "*":
                i += 1
                continue
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coeff *= Fraction(tok)
                i += 1
                saw_factor = True
                continue
            # variable, possibly with ^exp
            try:
                vi = ring.variable_index(tok)
            except ValueError:
                raise ValueError(f"unknown variable {tok!r} in k[E_{ring.r}]")
            i += 1
            power = 1
            if tokens[i] == "^":
                i += 1
                power = int(tokens[i])
                i += 1
            exps[vi] += power
            saw_factor = True
        if not saw_factor:
            raise ValueError("empty term")
        flush(coeff, exps)
    return Polynomial(ring, field, terms)


# ---------------------------------------------------------------------------
# degree-constrained monomial enumeration
# ---------------------------------------------------------------------------

@lru_cache(maxsize=8)
def _vars_by_line_coeff(r: int):
    ring = cox_ring(r)
    positive = []  # (index, l-coefficient)
    for i, d in enumerate(ring.curves.curves):
        if d.coeffs[0] > 0:
            positive.append((i, d.coeffs[0]))
    return tuple(positive)


def enumerate_monomials(ring: CoxRing, degree: DivisorClass) -> list[Exponents]:
    """All monomials of k[E_r] with the given Pic-multidegree.

    The l-coefficient of the target bounds the exponents of the f and g
    variables; afterwards the e-exponents are forced by the remaining
    e-coefficients.  Works for any target, including ones with positive
    e-coefficients (large twists by the exceptional divisors).
    """
    if degree.r != ring.r:
        raise ValueError("degree from a different lattice")
    target = degree.coeffs
    if target[0] < 0 or coarse_degree(degree) < 0:
        return []
    positive = _vars_by_line_coeff(ring.r)
    classes = ring.curves.curves
    n = ring.nvars
    out: list[Exponents] = []
    exps = [0] * n

    def place(idx: int, rem: tuple[int, ...]):
        if idx == len(positive):
            if rem[0] != 0:
                return
            if any(c < 0 for c in rem[1:]):
                return
            for i in range(ring.r):
                exps[i] = rem[i + 1]
            out.append(tuple(exps))
            for i in range(ring.r):
                exps[i] = 0
            return
        vi, lc = positive[idx]
        cls = classes[vi].coeffs
        maxexp = rem[0] // lc
        for e in range(maxexp + 1):
            if e:
                rem = tuple(a - b for a, b in zip(rem, cls))
            exps[vi] = e
            place(idx + 1, rem)
        exps[vi] = 0

    place(0, target)
    out.sort()
    return out
