"""Monomial fractional ideals of k[S].

A nonzero monomial fractional ideal is the union of translates e + S over a
finite antichain of integer exponents e; equality is equality of the
minimal exponent lists.  The zero ideal is the separate ``ZeroIdeal``.
"""

from __future__ import annotations

import json
import math
import re

from .errors import MixedSemigroups, NotIntegral, ParseError, ZeroDivisorIdeal
from .semigroup import NumericalSemigroup

INFINITY = math.inf


def minimalize(semigroup, exponents):
    """Minimal generating exponents of the module generated by ``exponents``."""
    kept = []
    for e in sorted(set(exponents)):
        if not any((e - f) in semigroup for f in kept):
            kept.append(e)
    return tuple(kept)


class ZeroIdeal:
    """The zero ideal of k[S]."""

    __slots__ = ("semigroup",)

    def __init__(self, semigroup):
        self.semigroup = semigroup

    is_zero = True
    exponents = ()

    def __contains__(self, z):
        return False

    def __eq__(self, other):
        return isinstance(other, ZeroIdeal) and other.semigroup == self.semigroup

    def __hash__(self):
        return hash(("zero", self.semigroup))

    def __repr__(self):
        return "ZeroIdeal()"

    def __str__(self):
        return "0"

    def issubset(self, other):
        return True

    def __mul__(self, other):
        _check_same(self, other)
        return self

    def __add__(self, other):
        _check_same(self, other)
        return other

    def __pow__(self, n):
        return unit_ideal(self.semigroup) if n == 0 else self

    def to_json(self):
        return {"exponents": []}


class MonomialFractionalIdeal:
    __slots__ = ("semigroup", "exponents")

    is_zero = False

    def __init__(self, semigroup, exponents):
        exponents = minimalize(semigroup, exponents)
        if not exponents:
            raise ValueError("use ZeroIdeal for the zero ideal")
        self.semigroup = semigroup
        self.exponents = exponents

    def __contains__(self, z):
        return any((z - e) in self.semigroup for e in self.exponents)

    def membership(self, z):
        return z in self

    def __eq__(self, other):
        return (isinstance(other, MonomialFractionalIdeal)
                and other.semigroup == self.semigroup
                and other.exponents == self.exponents)

    def __hash__(self):
        return hash((self.semigroup, self.exponents))

    def __repr__(self):
        return f"MonomialFractionalIdeal({self.semigroup}, {list(self.exponents)})"

    def __str__(self):
        return "[" + ",".join(map(str, self.exponents)) + "]"

    def issubset(self, other):
        if other.is_zero:
            return False
        _check_same(self, other)
        return all(e in other for e in self.exponents)

    def __le__(self, other):
        return self.issubset(other)

    def __mul__(self, other):
        _check_same(self, other)
        if other.is_zero:
            return other
        return MonomialFractionalIdeal(
            self.semigroup, [e + f for e in self.exponents for f in other.exponents])

    def __add__(self, other):
        _check_same(self, other)
        if other.is_zero:
            return self
        return MonomialFractionalIdeal(self.semigroup, self.exponents + other.exponents)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = unit_ideal(self.semigroup)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, a):
        """The ideal t^a * I."""
        return MonomialFractionalIdeal(self.semigroup, [e + a for e in self.exponents])

    @property
    def min_exponent(self):
        return self.exponents[0]

    def is_integral(self):
        return all(e in self.semigroup for e in self.exponents)

    def is_principal(self):
        return len(self.exponents) == 1

    def apery_top(self):
        """Largest of the least elements of I in each residue class mod the multiplicity."""
        m = self.semigroup.multiplicity
        ap = self.semigroup.apery_set()
        return max(min(e + ap[(r - e) % m] for e in self.exponents) for r in range(m))

    def elements(self, lo, hi):
        """Members of I in the window [lo, hi]."""
        return [z for z in range(lo, hi + 1) if z in self]

    def to_json(self):
        return {"exponents": list(self.exponents)}


def _check_same(a, b):
    if a.semigroup != b.semigroup:
        raise MixedSemigroups(f"ideals over {a.semigroup} and {b.semigroup}")


def make_ideal(semigroup, exponents):
    exponents = list(exponents)
    if not exponents:
        return ZeroIdeal(semigroup)
    return MonomialFractionalIdeal(semigroup, exponents)


def unit_ideal(semigroup):
    return MonomialFractionalIdeal(semigroup, [0])


def principal(semigroup, a):
    return MonomialFractionalIdeal(semigroup, [a])


def maximal_ideal(semigroup):
    return MonomialFractionalIdeal(semigroup, semigroup.generators)


def conductor(semigroup):
    f = semigroup.frobenius
    return MonomialFractionalIdeal(semigroup, range(f + 1, f + 1 + semigroup.multiplicity))


def canonical_ideal(semigroup):
    """The canonical ideal {z : F - z not in S}, normalized to have least exponent 0."""
    f = semigroup.frobenius
    window = range(0, f + semigroup.multiplicity + 1)
    return MonomialFractionalIdeal(semigroup, [z for z in window if (f - z) not in semigroup])


def colon(x, m):
    """(X : M) = {z : z + M inside X}."""
    _check_same(x, m)
    if m.is_zero:
        raise ZeroDivisorIdeal("colon by the zero ideal")
    if x.is_zero:
        return x
    sgp = x.semigroup
    lo = x.min_exponent - m.exponents[-1]
    # every z >= stable lies in the colon; minimal generators lie below stable + a1
    stable = x.min_exponent + sgp.frobenius + 1 - m.min_exponent
    members = [z for z in range(lo, stable + sgp.multiplicity)
               if all((z + e) in x for e in m.exponents)]
    return MonomialFractionalIdeal(sgp, members)


def tau(x, m):
    """tau_X(M), the sum of images of maps M -> X, computed as (X : M) M."""
    if m.is_zero:
        raise ZeroDivisorIdeal("tau of the zero ideal")
    return colon(x, m) * m


def trace(m):
    if m.is_zero:
        raise ZeroDivisorIdeal("trace of the zero ideal")
    return tau(unit_ideal(m.semigroup), m)


def is_trace_ideal(ideal):
    return trace(ideal) == ideal


def is_principal(ideal):
    return not ideal.is_zero and ideal.is_principal()


def ord(ideal):  # noqa: A001 - the standard name of the invariant
    """m-adic order: the largest n with I inside m^n."""
    if ideal.is_zero:
        return INFINITY
    sgp = ideal.semigroup
    bad = [e for e in ideal.exponents if e not in sgp]
    if bad:
        raise NotIntegral(f"{ideal} is not inside R (exponents {bad} not in {sgp})")
    return min(sgp.max_factor_length(e) for e in ideal.exponents)


def order_by_powers(ideal):
    """m-adic order by explicit containment in successive powers of m."""
    if ideal.is_zero:
        return INFINITY
    if not ideal.is_integral():
        raise NotIntegral(f"{ideal} is not inside R")
    m = maximal_ideal(ideal.semigroup)
    n = 0
    power = m
    while ideal.issubset(power):
        n += 1
        power = power * m
    return n


def parse_ideal(semigroup, text):
    """Parse ``[8,9,10]``, ``{"exponents": [...]}`` or a keyword."""
    text = text.strip()
    keyword = text.lower()
    if keyword == "conductor":
        return conductor(semigroup)
    if keyword == "canonical":
        return canonical_ideal(semigroup)
    if keyword == "maxideal":
        return maximal_ideal(semigroup)
    if keyword in ("r", "unit"):
        return unit_ideal(semigroup)
    if keyword == "zero":
        return ZeroIdeal(semigroup)
    if text.startswith("{"):
        try:
            return make_ideal(semigroup, json.loads(text)["exponents"])
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad ideal JSON: {exc}") from None
    match = re.fullmatch(r"\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]", text)
    if not match:
        raise ParseError(f"cannot parse ideal {text!r}")
    body = match.group(1)
    return make_ideal(semigroup, [int(p) for p in body.split(",")] if body else [])


__all__ = [
    "INFINITY", "MonomialFractionalIdeal", "NumericalSemigroup", "ZeroIdeal",
    "canonical_ideal", "colon", "conductor", "is_principal", "is_trace_ideal",
    "make_ideal", "maximal_ideal", "minimalize", "ord", "order_by_powers",
    "parse_ideal", "principal", "tau", "trace", "unit_ideal",
]
