import pytest
import sympy

from semitrace.errors import DegreeBoundTooSmall, HypothesisFailed
from semitrace.graded import (GradedMap, GradedRing, Presentation, check_hom_equality,
                              entry_ideal, ext_dimension, ext_vanishes, free_presentation,
                              hilbert_series, hom_to_R, minimal_resolution, minimize,
                              presentation_of_ideal, quotient_presentation,
                              residue_field_presentation, strip_free_difference,
                              syzygy_presentation, sweep_kernel, trace_of_module, transpose,
                              verify_resolution)
from semitrace.ideals import (canonical_ideal, colon, conductor, make_ideal, maximal_ideal,
                              principal, trace, unit_ideal)
from semitrace.semigroup import NumericalSemigroup, enumerate_semigroups


def brute_syzygy_dims(ideal, d):
    """dim of the degree-d kernel of F0 -> I by dense sympy linear algebra."""
    sgp = ideal.semigroup
    valid = [e for e in ideal.exponents if (d - e) in sgp]
    if not valid:
        return 0
    return len(valid) - sympy.Matrix([[1] * len(valid)]).rank() if d in ideal else len(valid)


# -- presentations ---------------------------------------------------------------

def test_presentation_of_maximal_ideal(s35):
    pres = presentation_of_ideal(maximal_ideal(s35))
    assert pres.generators == (3, 5)
    cols = sorted(pres.map.source.twists)
    assert cols == [8, 15]
    j8 = pres.map.source.twists.index(8)
    column = [pres.map.coeffs[i][j8] for i in range(2)]
    degrees = [pres.map.degree(i, j8) for i in range(2)]
    assert degrees == [5, 3]
    assert column[0] == -column[1] != 0


def test_presentation_of_unit_ideal(s35):
    pres = presentation_of_ideal(unit_ideal(s35))
    assert pres.generators == (0,)
    assert pres.is_free()


def test_conductor_syzygies_match_brute_force(s35):
    c = conductor(s35)
    pres = presentation_of_ideal(c)
    assert pres.generators == (8, 9, 10)
    res = minimal_resolution(pres, 2)
    # per-degree kernel dimension of F0 -> c agrees with the dense computation
    d1 = res.differential(1)
    for d in range(8, 40):
        engine = len(d1.image_vectors(d))
        engine_rank = sympy.Matrix(d1.image_vectors(d)).rank() if engine else 0
        assert engine_rank == brute_syzygy_dims(c, d)
    assert sorted(d1.source.twists) == [13, 14, 15]


def test_fractional_ideal_presentation(s35):
    frac = make_ideal(s35, [-2, 0])
    pres = presentation_of_ideal(frac)
    # the Hilbert function matches the ideal degreewise (up to the recorded shift)
    shift = -pres.generators[0] + frac.min_exponent
    for d in range(-5, 30):
        assert pres.hilbert_function(d - shift) == (1 if d in frac else 0)


def test_graded_map_validation(s35):
    ring = GradedRing(s35)
    with pytest.raises(ValueError):
        GradedMap.build(ring, [7], [0], [[1]])  # degree 7 is a gap
    trunc = GradedRing(s35, truncation=6)
    killed = GradedMap.build(trunc, [6], [0], [[1]])
    assert killed.is_zero()


def test_map_json_format(s35):
    pres = presentation_of_ideal(maximal_ideal(s35))
    entries = pres.map.to_json()["entries"]
    assert all(set(e) == {"row", "col", "deg", "coeff"} for e in entries)
    assert all("/" in e["coeff"] for e in entries)


# -- resolutions -------------------------------------------------------------------

def test_residue_field_betti(s35):
    res = minimal_resolution(residue_field_presentation(GradedRing(s35)), 5)
    assert res.betti == (1, 2, 2, 2, 2, 2)
    assert verify_resolution(res) == []


def test_maximal_ideal_betti_and_periodicity(s35):
    res = minimal_resolution(presentation_of_ideal(maximal_ideal(s35)), 3)
    assert res.betti == (2, 2, 2, 2)
    assert verify_resolution(res) == []
    # hypersurface: 2-periodic up to a degree shift by the relation degree 15
    twists = [sorted(res.free_module(j).twists) for j in range(4)]
    assert [t + 15 for t in twists[1]] == twists[3]


def test_free_module_resolution(s35):
    res = minimal_resolution(free_presentation(GradedRing(s35)), 3)
    assert res.betti == (1, 0, 0, 0)
    assert all(m.is_zero() for m in res.maps)
    assert res.projective_dimension() == 0
    assert entry_ideal(res, 2).ideal.is_zero


def test_truncated_residue_field():
    ring = GradedRing(NumericalSemigroup([1]), truncation=3)
    res = minimal_resolution(residue_field_presentation(ring), 4)
    assert res.betti == (1, 1, 1, 1, 1)
    # alternating t, t^2
    assert [next(res.differential(j).entries())[2] for j in range(1, 5)] == [1, 2, 1, 2]
    assert verify_resolution(res) == []


@pytest.mark.parametrize("gens", [[3, 5], [3, 4, 5], [4, 9], [2, 7], [4, 6, 9]])
def test_resolutions_pass_oracle(gens):
    sgp = NumericalSemigroup(gens)
    ring = GradedRing(sgp)
    for pres in (presentation_of_ideal(maximal_ideal(sgp)),
                 presentation_of_ideal(conductor(sgp)),
                 presentation_of_ideal(canonical_ideal(sgp)),
                 residue_field_presentation(ring),
                 quotient_presentation(ring, [sgp.multiplicity])):
        res = minimal_resolution(pres, 3)
        assert res.is_minimal()
        assert res.composition_is_zero()
        assert verify_resolution(res) == []
        for j in range(1, 4):
            e = entry_ideal(res, j)
            assert e.ideal.is_zero or e.order >= 1


def test_truncated_resolutions_pass_oracle():
    for sgp in enumerate_semigroups(genus_max=3):
        for n in range(2, sgp.frobenius + sgp.multiplicity + 2):
            ring = GradedRing(sgp, n)
            res = minimal_resolution(residue_field_presentation(ring), 3)
            assert verify_resolution(res) == []


def test_betti_invariance_under_larger_bound(s35):
    pres = presentation_of_ideal(conductor(s35))
    base = minimal_resolution(pres, 3)
    bound = max(base.certificates)
    bigger = minimal_resolution(pres, 3, degree_bound=bound + 20)
    assert bigger.betti == base.betti


def test_degree_bound_too_small(s35):
    with pytest.raises(DegreeBoundTooSmall) as info:
        minimal_resolution(residue_field_presentation(GradedRing(s35)), 3, degree_bound=5)
    assert info.value.suggested > 5


def test_entry_ideal_examples(s35):
    res = minimal_resolution(presentation_of_ideal(maximal_ideal(s35)), 2)
    e = entry_ideal(res, 1)
    assert e.ideal == maximal_ideal(s35) and e.order == 1
    assert sorted(deg for _, _, deg, _ in e.entries) == [3, 5, 10, 12]
    k = minimal_resolution(residue_field_presentation(GradedRing(s35)), 1)
    assert entry_ideal(k, 1).ideal == maximal_ideal(s35)


def test_minimize_removes_units(s35):
    ring = GradedRing(s35)
    # coker of [1, t^3] : R(0) + R(-3) -> R(0) is zero
    pres = Presentation(GradedMap.build(ring, [0, 3], [0], [[1, 1]]))
    small = minimize(pres)
    assert small.map.target.rank == 0


# -- Hom, trace, transpose ------------------------------------------------------------

@pytest.mark.parametrize("gens", [[3, 5], [3, 4, 5], [4, 9], [5, 6, 7, 8, 9]])
def test_hom_to_R_matches_colon(gens):
    sgp = NumericalSemigroup(gens)
    for ideal in (maximal_ideal(sgp), conductor(sgp), canonical_ideal(sgp).shift(4),
                  make_ideal(sgp, [sgp.multiplicity, sgp.frobenius + 1])):
        if not ideal.is_integral():
            continue
        hom = hom_to_R(presentation_of_ideal(ideal))
        dual = colon(unit_ideal(sgp), ideal)
        for delta in range(-30, 30):
            assert hom.dim(delta) == (1 if delta in dual else 0)
        assert trace_of_module(presentation_of_ideal(ideal)) == trace(ideal)


def test_trace_of_module_examples(s35):
    m = presentation_of_ideal(maximal_ideal(s35))
    assert trace_of_module(m) == maximal_ideal(s35)
    assert trace_of_module(free_presentation(GradedRing(s35))) == unit_ideal(s35)
    res = minimal_resolution(m, 2)
    assert trace_of_module(syzygy_presentation(res, 1)) == entry_ideal(res, 1).ideal


def test_transpose_exact_sequence(s35):
    # 0 -> M* -> P0* -> P1* -> Tr M -> 0
    pres = minimize(presentation_of_ideal(maximal_ideal(s35)))
    tr = transpose(pres)
    hom = hom_to_R(pres)
    ring = pres.ring
    for d in range(-40, 20):
        p0 = sum(1 for g in pres.generators if ring.has(d + g))
        p1 = sum(1 for g in pres.map.source.twists if ring.has(d + g))
        assert p0 - p1 + tr.hilbert_function(d) == hom.dim(d)


def _tr_tr_stable(pres, lo, hi):
    pres = minimize(pres)
    trtr = minimize(transpose(minimize(transpose(pres))))
    hf_a = hilbert_series(pres, lo, hi)
    hf_b = hilbert_series(trtr, lo, hi)
    return strip_free_difference(pres.ring, hf_a, hf_b, lo)


@pytest.mark.parametrize("gens", [[3, 5], [3, 4, 5], [4, 9]])
def test_transpose_twice_is_stably_the_module(gens):
    sgp = NumericalSemigroup(gens)
    ring = GradedRing(sgp)
    for pres in (presentation_of_ideal(maximal_ideal(sgp)),
                 presentation_of_ideal(conductor(sgp)),
                 residue_field_presentation(ring)):
        assert _tr_tr_stable(pres, -30, 60) is not None


def test_transpose_of_free_is_zero(s35):
    tr = transpose(free_presentation(GradedRing(s35)))
    assert all(tr.hilbert_function(d) == 0 for d in range(-10, 10))


def test_transpose_residue_field_truncated():
    ring = GradedRing(NumericalSemigroup([1]), truncation=3)
    tr = transpose(minimize(residue_field_presentation(ring)))
    dims = [tr.hilbert_function(d) for d in range(-5, 5)]
    assert sum(dims) == 1  # one-dimensional, like k


# -- Ext ---------------------------------------------------------------------------

def test_ext_examples(s35):
    ring = GradedRing(s35)
    assert ext_vanishes(presentation_of_ideal(maximal_ideal(s35)), 1)
    assert ext_vanishes(free_presentation(ring), 2)
    result = ext_vanishes(residue_field_presentation(ring), 1)
    assert not result
    assert result.witness_degree == 7


def test_ext_certificate_matches_window_scan():
    for gens in ([3, 5], [3, 4, 5], [4, 9], [2, 7]):
        sgp = NumericalSemigroup(gens)
        for ideal in (maximal_ideal(sgp), conductor(sgp), canonical_ideal(sgp)):
            res = minimal_resolution(presentation_of_ideal(ideal), 3)
            for i in (1, 2):
                out = ext_vanishes(res, i)
                lo, hi = out.window
                scan = [d for d in range(lo - 10, hi + 10) if ext_dimension(res, i, d)]
                assert out.vanishes == (not scan)


def test_gorenstein_ext_vanishing():
    # over a Gorenstein ring every MCM module has Ext^i(M,R)=0 for i >= 1
    for sgp in enumerate_semigroups(genus_max=5):
        if not sgp.is_symmetric() or not sgp.is_proper():
            continue
        for ideal in (maximal_ideal(sgp), conductor(sgp)):
            assert ext_vanishes(presentation_of_ideal(ideal), 1)


# -- Hom(M, IN) = I Hom(M, N) ---------------------------------------------------------

def test_hom_equality_examples(s35):
    for ideal, a in ((maximal_ideal(s35), 3), (conductor(s35), 5)):
        out = check_hom_equality(presentation_of_ideal(ideal), principal(s35, a))
        assert out.verdict == "Equal" and out.certified
    out = check_hom_equality(free_presentation(GradedRing(s35)), principal(s35, 3),
                             target=maximal_ideal(s35))
    assert out.verdict == "Equal"


def test_hom_equality_residue_field_is_trivially_equal(s35):
    # Hom(k, R) = 0, so both sides vanish
    out = check_hom_equality(residue_field_presentation(GradedRing(s35)), principal(s35, 3))
    assert out.verdict == "Equal"


def test_hom_equality_rejects_non_principal(s35):
    with pytest.raises(HypothesisFailed):
        check_hom_equality(presentation_of_ideal(maximal_ideal(s35)), maximal_ideal(s35))


def test_kernel_sweep_certificate(s35):
    pres = presentation_of_ideal(maximal_ideal(s35))
    sweep = sweep_kernel(pres.map)
    assert sweep.certified
    assert sweep.swept_to <= sweep.proven_bound
