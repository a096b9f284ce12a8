"""Degree-by-degree linear algebra over k[S] and its truncations k[S]/(t^s : s >= N).

Every homogeneous degree-0 map between graded free modules has monomial
entries: entry (i, j) is c * t^(src_j - tgt_i).  A map is therefore stored as
its rational coefficient matrix plus the twists; the degree-d piece of any
kernel, image or Hom is a small dense linear system.

Kernels are swept degree by degree.  Over k[S] the sweep certifies itself:
with x = t^a1, every free module is free over k[x], and a kernel K of a map
into a torsion-free module is a graded direct summand over k[x].  So
(1) rank_k[x] K = a1 * (#columns - rank of the coefficient matrix), and the
sweep may stop once that many k[x]-basis elements were seen, and
(2) no generator of K lies above max(source twist) + max(Apery set), the top
k[x]-basis degree of the source.  Truncated rings are finite dimensional and
are swept completely.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import ideals as _ideals
from .errors import BoundTooLarge, DegreeBoundTooSmall, HypothesisFailed
from .linalg import Span, integral_row, nullspace, primitive, rank


class GradedRing:
    """k[S], or the Artinian truncation k[S]/(t^s : s >= N) when ``truncation`` is set."""

    __slots__ = ("semigroup", "truncation")

    def __init__(self, semigroup, truncation=None):
        if truncation is not None and truncation < 1:
            raise ValueError("truncation must be positive")
        self.semigroup = semigroup
        self.truncation = truncation

    def has(self, s):
        return s in self.semigroup and (self.truncation is None or s < self.truncation)

    @property
    def is_artinian(self):
        return self.truncation is not None

    @property
    def min_degree(self):
        return 0

    @property
    def top(self):
        """Largest degree of a k[x]-basis element (non-truncated) or of a nonzero element."""
        if self.truncation is not None:
            return self.truncation - 1
        return self.semigroup.frobenius + self.semigroup.multiplicity

    @property
    def multiplicity(self):
        """e(R): multiplicity for k[S], length for a truncation."""
        if self.truncation is None:
            return self.semigroup.multiplicity
        return sum(1 for s in range(self.truncation) if s in self.semigroup)

    @property
    def embedding_dimension(self):
        if self.truncation is None:
            return self.semigroup.embedding_dimension
        return sum(1 for g in self.semigroup.generators if g < self.truncation)

    def order_of(self, s):
        return self.semigroup.max_factor_length(s)

    def loewy_length(self):
        """Exact Loewy length for a truncation, the monomial surrogate otherwise."""
        return self.semigroup.monomial_loewy_length(self.truncation)

    def __eq__(self, other):
        return (isinstance(other, GradedRing) and other.semigroup == self.semigroup
                and other.truncation == self.truncation)

    def __hash__(self):
        return hash((self.semigroup, self.truncation))

    def __repr__(self):
        if self.truncation is None:
            return f"k[{self.semigroup}]"
        return f"k[{self.semigroup}]/t^>={self.truncation}"


class _IdealSlot:
    """Coefficients in a fractional ideal N (for Hom(-, N)); never truncated."""

    def __init__(self, ideal):
        self.ideal = ideal
        self.truncation = None

    def has(self, s):
        return s in self.ideal

    @property
    def min_degree(self):
        return self.ideal.min_exponent

    @property
    def top(self):
        return self.ideal.apery_top()


@dataclass(frozen=True)
class GradedFreeModule:
    twists: tuple

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(t) for t in self.twists))

    @property
    def rank(self):
        return len(self.twists)

    def basis_at(self, ring, d):
        return [i for i, t in enumerate(self.twists) if ring.has(d - t)]


@dataclass(frozen=True)
class GradedMap:
    """A degree-0 map source -> target; ``coeffs[i][j]`` multiplies t^(src_j - tgt_i)."""

    ring: GradedRing
    source: GradedFreeModule
    target: GradedFreeModule
    coeffs: tuple

    def __post_init__(self):
        rows = []
        for i, tgt in enumerate(self.target.twists):
            row = []
            for j, src in enumerate(self.source.twists):
                c = _scalar(self.coeffs[i][j]) if self.coeffs else 0
                if c:
                    deg = src - tgt
                    if deg not in self.ring.semigroup:
                        raise ValueError(f"entry ({i},{j}) has degree {deg} outside S")
                    if not self.ring.has(deg):
                        c = 0  # killed by the truncation
                row.append(c)
            rows.append(tuple(row))
        object.__setattr__(self, "coeffs", tuple(rows))

    @classmethod
    def build(cls, ring, source_twists, target_twists, coeffs):
        return cls(ring, GradedFreeModule(source_twists), GradedFreeModule(target_twists), coeffs)

    @property
    def shape(self):
        return self.target.rank, self.source.rank

    def degree(self, i, j):
        return self.source.twists[j] - self.target.twists[i]

    def entries(self):
        """Nonzero entries as (row, col, degree, coefficient)."""
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    yield i, j, self.degree(i, j), c

    def is_zero(self):
        return not any(True for _ in self.entries())

    def column(self, j):
        return [row[j] for row in self.coeffs]

    def transpose(self):
        """The R-dual map Hom(target, R) -> Hom(source, R)."""
        coeffs = tuple(tuple(self.coeffs[i][j] for i in range(self.target.rank))
                       for j in range(self.source.rank))
        return GradedMap(self.ring,
                         GradedFreeModule(tuple(-t for t in self.target.twists)),
                         GradedFreeModule(tuple(-t for t in self.source.twists)),
                         coeffs)

    def compose(self, other):
        """self o other (other: X -> self.source)."""
        if other.target != self.source:
            raise ValueError("maps are not composable")
        n, m = self.target.rank, other.source.rank
        coeffs = []
        for i in range(n):
            row = []
            for j in range(m):
                if not self.ring.has(other.source.twists[j] - self.target.twists[i]):
                    row.append(0)
                    continue
                row.append(sum(self.coeffs[i][k] * other.coeffs[k][j]
                               for k in range(self.source.rank)))
            coeffs.append(row)
        return GradedMap(self.ring, other.source, self.target, coeffs)

    def image_vectors(self, d):
        """Spanning vectors (target coordinates) of the degree-d piece of the image."""
        vectors = []
        for j, src in enumerate(self.source.twists):
            if not self.ring.has(d - src):
                continue
            v = [self.coeffs[i][j] if self.ring.has(d - tgt) else 0
                 for i, tgt in enumerate(self.target.twists)]
            if any(v):
                vectors.append(integral_row(v))
        return vectors

    def image_rank(self, d):
        return rank(self.image_vectors(d), self.target.rank)

    def to_json(self):
        return {
            "source": list(self.source.twists),
            "target": list(self.target.twists),
            "entries": [{"row": i, "col": j, "deg": deg, "coeff": _fmt(c)}
                        for i, j, deg, c in self.entries()],
        }


def _scalar(c):
    # integers stay ints (the common case, and much faster than Fraction)
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _fmt(c):
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def zero_map(ring, source_twists, target_twists):
    return GradedMap.build(ring, source_twists, target_twists,
                           [[0] * len(source_twists) for _ in target_twists])


# -- kernel sweep -----------------------------------------------------------

@dataclass
class KernelSweep:
    """Minimal homogeneous generators of ker(map), with per-degree kernel bases."""

    generators: list  # (degree, primitive integer vector over source indices)
    bases: dict  # degree -> list of vectors spanning the kernel in that degree
    swept_to: int
    proven_bound: int
    certified: bool

    def dim(self, d):
        return len(self.bases.get(d, ()))


def _kernel_basis_at(slot, src, tgt, coeffs, d):
    valid = [k for k, t in enumerate(src) if slot.has(d - t)]
    if not valid:
        return []
    rows = []
    for i, t in enumerate(tgt):
        if not slot.has(d - t):
            continue
        r = [coeffs[i][k] for k in valid]
        if any(r):
            rows.append(integral_row(r))
    basis = []
    for small in nullspace(rows, len(valid)):
        v = [0] * len(src)
        for k, x in zip(valid, small):
            v[k] = x
        basis.append(v)
    return basis


def sweep_kernel(gmap, degree_bound=None, slot=None):
    """Minimal generators of the kernel of ``gmap`` (coefficients in ``slot``,
    the ring itself by default)."""
    ring = gmap.ring
    slot = slot or ring
    src, tgt, coeffs = gmap.source.twists, gmap.target.twists, gmap.coeffs
    n = len(src)
    if n == 0:
        return KernelSweep([], {}, 0, 0, True)
    start = min(src) + slot.min_degree
    proven = max(src) + slot.top
    stop = proven if degree_bound is None else min(proven, degree_bound)
    a1 = ring.semigroup.multiplicity
    target_rank = None
    if slot.truncation is None:
        coef_rows = [integral_row(r) for r in coeffs if any(r)]
        target_rank = a1 * (n - rank(coef_rows, n))
    generators, bases = [], {}
    seen = 0
    certified = False
    d = start
    while d <= stop:
        if target_rank is not None and seen == target_rank:
            certified = True
            break
        basis = _kernel_basis_at(slot, src, tgt, coeffs, d)
        if basis:
            bases[d] = basis
            if target_rank is not None:
                seen += len(basis) - len(bases.get(d - a1, ()))
            span = Span(n)
            for g_deg, g in generators:
                s = d - g_deg
                if s > 0 and ring.has(s):
                    span.add(_multiply(slot, src, g, d))
            for v in basis:
                if span.add(v):
                    generators.append((d, primitive(v)))
        d += 1
    else:
        certified = stop == proven or (target_rank is not None and seen == target_rank)
    if not certified:
        raise DegreeBoundTooSmall(
            f"kernel sweep not certified by degree {degree_bound}; need up to {proven}",
            suggested=proven)
    return KernelSweep(generators, bases, d - 1, proven, True)


def _multiply(slot, src, vec, d):
    # t^s * vec viewed in degree d: coordinates pushed past the truncation vanish
    return [x if x and slot.has(d - t) else 0 for x, t in zip(vec, src)]


def kernel_map(gmap, sweep):
    """The map F -> source(gmap) whose columns are the kernel generators."""
    src = gmap.source.twists
    coeffs = [[vec[k] for _, vec in sweep.generators] for k in range(len(src))]
    return GradedMap.build(gmap.ring, [deg for deg, _ in sweep.generators], src, coeffs)


# -- presentations ------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    """coker(map: F1 -> F0)."""

    map: GradedMap

    @property
    def ring(self):
        return self.map.ring

    @property
    def truncation(self):
        return self.map.ring.truncation

    @property
    def generators(self):
        return self.map.target.twists

    def is_free(self):
        return self.map.is_zero()

    def hilbert_function(self, d):
        free = len(self.map.target.basis_at(self.ring, d))
        return free - self.map.image_rank(d)


def presentation_of_ideal(ideal, degree_bound=None):
    """Minimal presentation of a nonzero monomial fractional ideal, F0 generated
    in the degrees of its minimal exponents."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no presentation of this form")
    sgp = ideal.semigroup
    ring = GradedRing(sgp)
    exps = ideal.exponents
    shift = 0 if ideal.is_integral() else sgp.frobenius + 1 - exps[0]
    evaluation = GradedMap.build(ring, exps, [-shift], [[1] * len(exps)])
    sweep = sweep_kernel(evaluation, degree_bound)
    return Presentation(kernel_map(evaluation, sweep))


def quotient_presentation(ring, exponents):
    """R / (t^e : e in exponents)."""
    exps = [e for e in sorted(set(exponents)) if ring.has(e)]
    return Presentation(GradedMap.build(ring, exps, [0], [[1] * len(exps)]))


def residue_field_presentation(ring):
    return quotient_presentation(ring, ring.semigroup.generators)


def free_presentation(ring, twists=(0,)):
    return Presentation(zero_map(ring, (), twists))


def minimize(presentation):
    """Strip unit entries, then drop columns that are not minimal generators of
    the image.  Pivots are taken in (degree, index) order."""
    gmap = presentation.map
    ring = gmap.ring
    src = list(gmap.source.twists)
    tgt = list(gmap.target.twists)
    cols = [list(gmap.column(j)) for j in range(len(src))]
    while True:
        unit = None
        for j in sorted(range(len(src)), key=lambda j: (src[j], j)):
            for i in range(len(tgt)):
                if cols[j][i] and src[j] == tgt[i]:
                    unit = (i, j)
                    break
            if unit:
                break
        if unit is None:
            break
        i, j = unit
        pivot = cols[j][i]
        for jj in range(len(src)):
            if jj != j and cols[jj][i]:
                lam = Fraction(cols[jj][i]) / pivot
                cols[jj] = [_scalar(a - lam * b) if ring.has(src[jj] - tgt[r]) else 0
                            for r, (a, b) in enumerate(zip(cols[jj], cols[j]))]
        del cols[j], src[j]
        tgt.pop(i)
        cols = [c[:i] + c[i + 1:] for c in cols]
    order = sorted(range(len(src)), key=lambda j: (src[j], j))
    kept = []
    for j in order:
        d = src[j]
        span = Span(len(tgt))
        for k in kept:
            if ring.has(d - src[k]):
                span.add(integral_row([c if ring.has(d - tgt[r]) else 0
                                       for r, c in enumerate(cols[k])]))
        if any(cols[j]) and span.add(integral_row(cols[j])):
            kept.append(j)
    coeffs = [[cols[j][r] for j in kept] for r in range(len(tgt))]
    return Presentation(GradedMap.build(ring, [src[j] for j in kept], tgt, coeffs))


def transpose(presentation):
    """Auslander transpose: coker of the dual of the presentation map."""
    return Presentation(presentation.map.transpose())


# -- resolutions --------------------------------------------------------------

@dataclass(frozen=True)
class Resolution:
    presentation: Presentation
    maps: tuple  # d_1, ..., d_jmax
    degree_bound: object = None
    minimal: bool = True
    certificates: tuple = field(default_factory=tuple)

    @property
    def ring(self):
        return self.presentation.ring

    @property
    def jmax(self):
        return len(self.maps)

    def differential(self, j):
        if not 1 <= j <= len(self.maps):
            raise IndexError(f"d_{j} not computed (jmax = {len(self.maps)})")
        return self.maps[j - 1]

    def free_module(self, j):
        return self.maps[0].target if j == 0 else self.differential(j).source

    @property
    def betti(self):
        return tuple(self.free_module(j).rank for j in range(len(self.maps) + 1))

    def projective_dimension(self):
        """pd if the resolution has visibly terminated, else None."""
        for j in range(len(self.maps) + 1):
            if self.free_module(j).rank == 0:
                return j - 1
        return None

    def composition_is_zero(self):
        return all(self.maps[i].compose(self.maps[i + 1]).is_zero()
                   for i in range(len(self.maps) - 1))

    def is_minimal(self):
        return all(deg > 0 for m in self.maps for _, _, deg, _ in m.entries())

    def betti_rows(self):
        rows = []
        for j in range(len(self.maps) + 1):
            twists = self.free_module(j).twists
            rows.append((j, len(twists), max(twists) if twists else ""))
        return rows

    def to_json(self):
        return {
            "semigroup": list(self.ring.semigroup.generators),
            "truncation": self.ring.truncation,
            "degree_bound": self.degree_bound,
            "betti": list(self.betti),
            "steps": [dict(j=j + 1, **m.to_json()) for j, m in enumerate(self.maps)],
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)


def minimal_resolution(presentation, jmax, degree_bound=None, max_rank=None):
    """Minimal graded free resolution up to homological degree ``jmax``.

    ``max_rank`` caps the rank of any free module; exceeding it raises
    BoundTooLarge (Betti numbers grow exponentially over non-Gorenstein rings).
    """
    if jmax < 1:
        raise ValueError("jmax must be at least 1")
    presentation = minimize(presentation)
    maps = [presentation.map]
    certs = []
    while len(maps) < jmax:
        last = maps[-1]
        if last.source.rank == 0:
            maps.append(zero_map(last.ring, (), ()))
            continue
        sweep = sweep_kernel(last, degree_bound)
        certs.append(sweep.proven_bound)
        if max_rank is not None and len(sweep.generators) > max_rank:
            raise BoundTooLarge(f"syzygy rank {len(sweep.generators)} exceeds {max_rank} "
                                f"at step {len(maps) + 1}")
        maps.append(kernel_map(last, sweep))
    return Resolution(presentation, tuple(maps), degree_bound, True, tuple(certs))


def syzygy_presentation(resolution, j):
    """Presentation of the j-th syzygy Im(d_j) = coker(d_{j+1})."""
    return Presentation(resolution.differential(j + 1))


@dataclass(frozen=True)
class EntryIdeal:
    entries: tuple  # (row, col, degree, coefficient)
    ideal: object  # MonomialFractionalIdeal or ZeroIdeal
    order: object


def entry_ideal(resolution, j):
    """I_1(d_j): generated by the (monomial) entries of d_j."""
    gmap = resolution.differential(j)
    entries = tuple(gmap.entries())
    ideal = _ideals.make_ideal(resolution.ring.semigroup, [deg for _, _, deg, _ in entries])
    return EntryIdeal(entries, ideal, _ideals.ord(ideal))


# -- Hom, trace, Ext ------------------------------------------------------------

@dataclass
class HomModule:
    """Hom(M, N) for M = coker(P): maps F0 -> N killing the relations.

    A generator (delta, c) sends basis element i of F0 to c_i t^(delta + g_i).
    """

    presentation: Presentation
    target_ideal: object
    sweep: KernelSweep

    @property
    def generators(self):
        return self.sweep.generators

    def dim(self, delta):
        return len(self.basis(delta))

    def basis(self, delta):
        if delta in self.sweep.bases or delta <= self.sweep.swept_to:
            return self.sweep.bases.get(delta, [])
        dual = self.presentation.map.transpose()
        return _kernel_basis_at(self._slot(), dual.source.twists, dual.target.twists,
                                dual.coeffs, delta)

    def _slot(self):
        if self.target_ideal is None:
            return self.presentation.ring
        return _IdealSlot(self.target_ideal)


def hom_module(presentation, target_ideal=None, degree_bound=None):
    """Hom(M, R) by default, or Hom(M, N) for a fractional ideal N (over k[S])."""
    if target_ideal is not None and presentation.ring.is_artinian:
        raise ValueError("Hom into a fractional ideal is only supported over k[S]")
    slot = presentation.ring if target_ideal is None else _IdealSlot(target_ideal)
    dual = presentation.map.transpose()
    return HomModule(presentation, target_ideal, sweep_kernel(dual, degree_bound, slot))


def hom_to_R(presentation, degree_bound=None):
    return hom_module(presentation, None, degree_bound)


def trace_of_module(presentation, degree_bound=None):
    """tr(M): the sum of phi(M) over generators phi of M*."""
    hom = hom_to_R(presentation, degree_bound)
    gens = presentation.generators
    exps = [delta + gens[i] for delta, vec in hom.generators for i, c in enumerate(vec) if c]
    return _ideals.make_ideal(presentation.ring.semigroup, exps)


@dataclass(frozen=True)
class ExtResult:
    index: int
    vanishes: bool
    certified: bool
    window: tuple
    nonzero_degrees: tuple
    witness_degree: object = None

    def __bool__(self):
        return self.vanishes


def _as_resolution(module, jmax, degree_bound):
    if isinstance(module, Resolution):
        if module.jmax >= jmax or module.projective_dimension() is not None:
            return module
        module = module.presentation
    return minimal_resolution(module, jmax, degree_bound)


def _dual_piece(resolution, i):
    """(incoming, outgoing) dual maps at F_i*: d_i^T and d_{i+1}^T."""
    ring = resolution.ring
    fi = resolution.free_module(i).twists
    incoming = resolution.differential(i).transpose()
    if i + 1 <= resolution.jmax:
        outgoing = resolution.differential(i + 1).transpose()
    else:
        outgoing = zero_map(ring, tuple(-t for t in fi), ())
    return incoming, outgoing


def ext_dimension(resolution, i, d):
    incoming, outgoing = _dual_piece(resolution, i)
    ring = resolution.ring
    kernel = _kernel_basis_at(ring, outgoing.source.twists, outgoing.target.twists,
                              outgoing.coeffs, d)
    return len(kernel) - incoming.image_rank(d)


def ext_vanishes(module, i, degree_bound=None):
    """Decide Ext^i(M, R) = 0 from the dualized minimal resolution.

    The certificate: every minimal generator of ker(d_{i+1}^T) lies in
    im(d_i^T).  Degreewise dimensions are also tabulated on [-D, D].
    """
    if i < 1:
        raise ValueError("Ext index must be at least 1")
    res = _as_resolution(module, i + 1, degree_bound)
    if res.free_module(i).rank == 0:
        window = _window(res, i, degree_bound)
        return ExtResult(i, True, True, window, ())
    incoming, outgoing = _dual_piece(res, i)
    sweep = sweep_kernel(outgoing, degree_bound)
    witness = None
    for delta, vec in sweep.generators:
        span = Span(len(vec))
        for v in incoming.image_vectors(delta):
            span.add(v)
        if vec not in span:
            witness = delta
            break
    window = _window(res, i, degree_bound)
    nonzero = tuple(d for d in range(window[0], window[1] + 1) if ext_dimension(res, i, d))
    vanishes = witness is None
    if vanishes and nonzero:
        raise AssertionError(f"Ext certificate contradicts window scan at {nonzero}")
    return ExtResult(i, vanishes, True, window, nonzero, witness)


def _window(res, i, degree_bound):
    twists = res.free_module(i).twists
    if degree_bound is not None:
        return (-degree_bound, degree_bound)
    if not twists:
        return (0, 0)
    ring = res.ring
    return (-max(twists), -min(twists) + ring.top + 1)


# -- Hilbert functions, transposes ---------------------------------------------

def hilbert_series(presentation, lo, hi):
    return [presentation.hilbert_function(d) for d in range(lo, hi + 1)]


def strip_free_difference(ring, hf_a, hf_b, lo):
    """Explain hf_a - hf_b as the Hilbert function of a graded free module
    (on either side).  Returns the twists used, or None when impossible."""
    diff = [x - y for x, y in zip(hf_a, hf_b)]
    twists = []
    sign = 0
    for offset in range(len(diff)):
        while diff[offset]:
            s = 1 if diff[offset] > 0 else -1
            if sign and s != sign:
                return None
            sign = s
            d = lo + offset
            twists.append(d)
            for k in range(offset, len(diff)):
                if ring.has(lo + k - d):
                    diff[k] -= s
    return twists


# -- Hom(M, IN) versus I Hom(M, N) ----------------------------------------------

@dataclass(frozen=True)
class HomComparison:
    verdict: str  # "Equal" or "ProperContainment"
    witness_degree: object
    window: tuple
    certified: bool


def check_hom_equality(presentation, ideal, target=None, degree_bound=None):
    """Compare Hom(M, I N) with I Hom(M, N) degree by degree (I principal)."""
    sgp = presentation.ring.semigroup
    if presentation.ring.is_artinian:
        raise HypothesisFailed("Hom comparison implemented over k[S] only", ["ring"])
    target = target if target is not None else _ideals.unit_ideal(sgp)
    if ideal.is_zero or not ideal.is_principal() or not ideal.is_integral():
        raise HypothesisFailed(
            "I must be a principal ideal (t^a): otherwise Tor_2(N, R/I) and "
            "Ext^1(M, N (x) Omega I) are not discharged",
            ["Tor_2(N,R/I)=0", "Ext^1(M,N(x)Omega I)=0"])
    a = ideal.exponents[0]
    hom_n = hom_module(presentation, target, None)
    product = ideal * target
    hom_in = hom_module(presentation, product, None)
    n0 = len(presentation.generators)
    lo = min((-g for g in presentation.generators), default=0) + product.min_exponent
    hi = degree_bound if degree_bound is not None else hom_in.sweep.proven_bound
    witness = None
    for delta in range(lo, hi + 1):
        direct = hom_in.basis(delta)
        span_direct = Span(n0)
        for v in direct:
            span_direct.add(v)
        span_product = Span(n0)
        for g_deg, g in hom_n.generators:
            s = delta - a - g_deg
            if s >= 0 and s in sgp:
                span_product.add(g)
        if span_product.rank != span_direct.rank or any(
                v not in span_direct for v in span_product.basis()):
            witness = delta
            break
    # global certificate: generators of Hom(M, IN) lie in I Hom(M, N)
    certified = True
    for g_deg, g in hom_in.generators:
        span_product = Span(n0)
        for h_deg, h in hom_n.generators:
            s = g_deg - a - h_deg
            if s >= 0 and s in sgp:
                span_product.add(h)
        if g not in span_product:
            certified = False
            if witness is None:
                witness = g_deg
    verdict = "Equal" if witness is None else "ProperContainment"
    return HomComparison(verdict, witness, (lo, hi), certified)


# -- independent exactness oracle -------------------------------------------------

def verify_resolution(resolution, extra=0):
    """Check d_i d_{i+1} = 0, minimality and degreewise exactness.

    Exactness at F_i compares dim ker(d_i)_d with rank(d_{i+1})_d, both from
    dense sympy rank computations.  Returns a list of problems (empty if fine).
    """
    import sympy

    problems = []
    if not resolution.composition_is_zero():
        problems.append("d_i d_{i+1} != 0")
    if not resolution.is_minimal():
        problems.append("a differential has a unit entry")
    ring = resolution.ring
    for i in range(1, resolution.jmax):
        d_i = resolution.differential(i)
        d_next = resolution.differential(i + 1)
        twists = d_i.source.twists
        if not twists:
            continue
        lo = min(twists)
        hi = max(max(twists), max(d_next.source.twists, default=lo)) + ring.top + extra
        for d in range(lo, hi + 1):
            valid = d_i.source.basis_at(ring, d)
            if not valid:
                continue
            rows = [[d_i.coeffs[r][k] for k in valid] for r in d_i.target.basis_at(ring, d)]
            mat = sympy.Matrix(rows) if rows else sympy.zeros(0, len(valid))
            ker_dim = len(valid) - (mat.rank() if rows else 0)
            image = d_next.image_vectors(d)
            im_rank = sympy.Matrix(image).rank() if image else 0
            if ker_dim != im_rank:
                problems.append(f"not exact at F_{i} in degree {d}: ker {ker_dim}, im {im_rank}")
    return problems
