"""Numerical semigroups S = <a1, ..., an> and the invariants of k[S].

Membership is answered from the Apery set with respect to the
multiplicity, so queries are O(1) for every integer.  Maximal
factorization lengths (the m-adic order of a monomial) are tabulated by
dynamic programming and extended on demand.
"""

from __future__ import annotations

import heapq
import math
import re
from collections import deque
from functools import reduce

from .errors import BoundTooLarge, EmptyGenerators, GcdNotOne, NotAMember, ParseError

GENUS_CAP = 16


class NumericalSemigroup:
    """A numerical semigroup given by (any) generating set.

    The stored generator list is the minimal system of generators.
    """

    __slots__ = ("generators", "frobenius", "gaps", "membership_table",
                 "_apery", "_lengths")

    def __init__(self, gens):
        gens = sorted({int(g) for g in gens})
        if not gens:
            raise EmptyGenerators("a numerical semigroup needs at least one generator")
        if gens[0] <= 0:
            raise ValueError(f"generators must be positive, got {gens[0]}")
        if reduce(math.gcd, gens) != 1:
            raise GcdNotOne(f"gcd{tuple(gens)} = {reduce(math.gcd, gens)}; "
                            "not a numerical semigroup")
        m = gens[0]
        apery = _apery_by_dijkstra(m, gens)
        self._apery = tuple(apery)
        self.frobenius = max(apery) - m
        self.membership_table = tuple(x >= apery[x % m] for x in range(self.frobenius + 1))
        self.gaps = frozenset(x for x, inside in enumerate(self.membership_table) if not inside)
        self.generators = tuple(g for g in gens if self._is_minimal(g))
        self._lengths = [0]

    def _is_minimal(self, g):
        return not any(x in self and (g - x) in self for x in range(1, g // 2 + 1))

    @classmethod
    def from_generators(cls, gens):
        return cls(gens)

    # -- basic invariants -------------------------------------------------

    def __contains__(self, s):
        if s < 0:
            return False
        if s > self.frobenius:
            return True
        return self.membership_table[s]

    def contains(self, s):
        return s in self

    @property
    def multiplicity(self):
        return self.generators[0]

    @property
    def embedding_dimension(self):
        return len(self.generators)

    @property
    def genus(self):
        return len(self.gaps)

    @property
    def conductor_degree(self):
        """Smallest c with c + N contained in S."""
        return self.frobenius + 1

    def is_proper(self):
        return self.generators != (1,)

    def elements(self, upto):
        """Members of S in [0, upto]."""
        return [s for s in range(upto + 1) if s in self]

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return f"NumericalSemigroup({list(self.generators)})"

    def __str__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"

    # -- Apery sets, symmetry ---------------------------------------------

    def apery_set(self, n=None):
        """For each residue r mod n, the least member of S congruent to r."""
        if n is None:
            n = self.multiplicity
        if n <= 0 or n not in self:
            raise NotAMember(f"{n} is not a positive element of {self}")
        if n == self.multiplicity:
            return list(self._apery)
        out = [None] * n
        found = 0
        s = 0
        while found < n:
            if s in self and out[s % n] is None:
                out[s % n] = s
                found += 1
            s += 1
        return out

    def is_symmetric(self):
        return 2 * self.genus == self.frobenius + 1

    # -- factorization lengths --------------------------------------------

    def _extend_lengths(self, upto):
        table = self._lengths
        for s in range(len(table), upto + 1):
            best = -1
            if s in self:
                for g in self.generators:
                    if g > s:
                        break
                    prev = table[s - g]
                    if prev >= 0 and prev + 1 > best:
                        best = prev + 1
            table.append(best)

    def max_factor_length(self, s):
        """Largest n such that t^s lies in m^n, i.e. the longest factorization of s."""
        if s not in self:
            raise NotAMember(f"{s} is not in {self}")
        if s >= len(self._lengths):
            self._extend_lengths(s)
        return self._lengths[s]

    # -- Loewy length surrogate -------------------------------------------

    def monomial_loewy_length(self, truncation=None):
        """Least i with m^i inside some monomial parameter ideal (t^a).

        With ``truncation`` N the ring is k[S]/(t^s : s >= N) and the value is
        the least i with m^i = 0.
        """
        if truncation is not None:
            members = [s for s in range(truncation) if s in self]
            return 1 + max(self.max_factor_length(s) for s in members) if members else 0
        best = None
        for a in self.parameter_candidates():
            value = self._loewy_for_parameter(a)
            if best is None or value < best:
                best = value
        return best

    def parameter_candidates(self):
        """Monomial parameters a in S with 1 <= a <= F(S) + a1.

        A larger member a is congruent to a smaller candidate a' with
        a - a' in S, so (t^a) is contained in (t^a') and cannot do better.
        """
        top = max(self.frobenius + self.multiplicity, self.multiplicity)
        return [a for a in range(1, top + 1) if a in self]

    def _loewy_for_parameter(self, a):
        # m^i is in (t^a) iff every s in S with s - a not in S has length < i;
        # such s are bounded by F + a.
        worst = max(self.max_factor_length(s) for s in range(self.frobenius + a + 1)
                    if s in self and (s - a) not in self)
        return worst + 1

    def invariant_record(self):
        return {
            "generators": list(self.generators),
            "frobenius": self.frobenius,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
            "embdim": self.embedding_dimension,
            "llmon": self.monomial_loewy_length(),
            "symmetric": self.is_symmetric(),
        }


def _apery_by_dijkstra(m, gens):
    # shortest paths on residues mod m, edges of weight g
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for g in gens:
            r2 = (r + g) % m
            d2 = d + g
            if dist[r2] is None or d2 < dist[r2]:
                dist[r2] = d2
                heapq.heappush(heap, (d2, r2))
    return dist


def from_generators(gens):
    return NumericalSemigroup(gens)


_SGP_TEXT = re.compile(r"^\s*(?:S\s*=\s*)?<\s*([0-9,\s]+)\s*>\s*$")


def parse_semigroup(text):
    """Parse ``<3,5>``, ``S = <3,5>``, ``3,5`` or ``{"generators": [3,5]}``."""
    text = text.strip()
    if text.startswith("{"):
        import json
        try:
            data = json.loads(text)
            return NumericalSemigroup(data["generators"])
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad semigroup JSON: {exc}") from None
    match = _SGP_TEXT.match(text)
    body, offset = (match.group(1), match.start(1)) if match else (text, 0)
    parts = []
    # tokens are separated by one comma or by whitespace; an empty token is an error
    for tok in re.finditer(r"[^,\s]+|,(?=\s*(,|$))|^\s*,", body):
        if not tok.group().isdigit():
            raise ParseError(f"cannot parse semigroup {text!r}: unexpected "
                             f"{tok.group().strip() or 'separator'!r}",
                             line=1, column=offset + tok.start() + 1)
        parts.append(int(tok.group()))
    if not parts:
        raise ParseError(f"cannot parse semigroup {text!r}", line=1, column=1)
    return NumericalSemigroup(parts)


# -- enumeration ----------------------------------------------------------

def _children(sgp):
    """Semigroups S minus {g} for minimal generators g > F(S), by increasing g."""
    for g in sgp.generators:
        if g <= sgp.frobenius:
            continue
        yield _remove_generator(sgp, g)


def _remove_generator(sgp, g):
    def inside(x):
        return x != g and x in sgp

    m = sgp.multiplicity if g != sgp.multiplicity else sgp.multiplicity + 1
    gens = []
    for s in range(1, g + m + 1):
        if not inside(s):
            continue
        if any(inside(x) and inside(s - x) for x in range(1, s // 2 + 1)):
            continue
        gens.append(s)
    return NumericalSemigroup(gens)


def enumerate_semigroups(genus_max=None, multiplicity_max=None, excess=None):
    """Yield every numerical semigroup within the bounds, each exactly once.

    The walk is breadth first through the genus tree rooted at <1>, children
    ordered by the removed generator.  ``excess`` keeps only semigroups with
    multiplicity - embedding dimension == excess.
    """
    if genus_max is None:
        raise BoundTooLarge("genus_max is required: multiplicity alone does not "
                            "bound the number of semigroups")
    if genus_max < 0:
        raise ValueError("genus_max must be nonnegative")
    if genus_max > GENUS_CAP:
        raise BoundTooLarge(f"genus_max {genus_max} exceeds cap {GENUS_CAP}")
    queue = deque([NumericalSemigroup([1])])
    while queue:
        sgp = queue.popleft()
        if multiplicity_max is not None and sgp.multiplicity > multiplicity_max:
            continue  # multiplicity never decreases down the tree
        if excess is None or sgp.multiplicity - sgp.embedding_dimension == excess:
            yield sgp
        if sgp.genus < genus_max:
            queue.extend(_children(sgp))
