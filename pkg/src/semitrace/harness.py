"""One executable check per in-scope statement, plus sweep machinery.

Every check verifies its hypotheses on the concrete instance first and
returns a ``CheckReport``.  FAIL is reserved for an exact refutation and
always carries a witness; hypotheses that cannot be verified give
HYPOTHESIS_FAILED or SKIPPED instead.
"""

from __future__ import annotations

import fnmatch
import json
import math
import random
from dataclasses import asdict, dataclass, field

from . import graded
from .errors import BoundTooLarge, DegreeBoundTooSmall, NotInsideR
from .graded import (GradedRing, entry_ideal, ext_vanishes, minimal_resolution,
                     presentation_of_ideal, residue_field_presentation,
                     syzygy_presentation, trace_of_module)
from .ideals import (canonical_ideal, conductor, make_ideal, maximal_ideal, ord,
                     order_by_powers, principal, tau, trace, unit_ideal)
from .semigroup import NumericalSemigroup, enumerate_semigroups

PASS = "PASS"
FAIL = "FAIL"
HYPOTHESIS_FAILED = "HYPOTHESIS_FAILED"
SKIPPED = "SKIPPED"

# largest free-module rank a check will resolve before giving up with SKIPPED
RANK_BUDGET = 200


@dataclass
class CheckReport:
    statement_id: str
    instance: dict
    hypotheses: list = field(default_factory=list)  # [name, status]
    verdict: str = PASS
    witnesses: dict = field(default_factory=dict)

    def hyp(self, name, status):
        self.hypotheses.append([name, status])

    def finish(self, verdict, **witnesses):
        self.verdict = verdict
        self.witnesses.update(witnesses)
        return self

    def to_json(self):
        return asdict(self)

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, default=_json_default)

    @property
    def bound(self):
        return self.instance.get("degree_bound")


def _json_default(obj):
    if obj == math.inf:
        return "inf"
    raise TypeError(f"not serializable: {obj!r}")


def _exps(ideal):
    return list(ideal.exponents)


def _sgp_tag(sgp):
    return str(sgp)


def _bounds(sgp):
    return sgp.multiplicity, sgp.embedding_dimension, sgp.monomial_loewy_length()


def _first_outside(ideal, other):
    return next((e for e in ideal.exponents if e not in other), None)


# -- non-containment and entry ideals ------------------------------------------

def check_prop_trentry(ideal, degree_bound=None):
    sgp = ideal.semigroup
    r = CheckReport("prop-trentry", {"semigroup": _sgp_tag(sgp), "ideal": _exps(ideal),
                                     "degree_bound": degree_bound})
    if ideal.is_zero or ideal.is_principal():
        r.hyp("I non-principal", SKIPPED)
        return r.finish(SKIPPED, reason="principal or zero ideal is free")
    r.hyp("I non-principal", "verified")
    r.hyp("I contains a non-zero-divisor", "symbolic: k[S] is a domain")
    tr = trace(ideal)
    pres = presentation_of_ideal(ideal, degree_bound)
    entries = entry_ideal(minimal_resolution(pres, 1, degree_bound), 1).ideal
    tr_hom = trace_of_module(pres, degree_bound)
    r.witnesses.update(trace=_exps(tr), entry_ideal=_exps(entries))
    if tr_hom != tr:
        return r.finish(FAIL, cross_oracle="trace via colon != trace via Hom(-,R)",
                        trace_hom=_exps(tr_hom))
    outside = _first_outside(tr, entries)
    if outside is not None:
        return r.finish(FAIL, trace_exponent_not_in_entries=outside)
    params = sgp.parameter_candidates()
    for a in params:
        if entries.issubset(principal(sgp, a)):
            return r.finish(FAIL, entries_inside_parameter=a)
    return r.finish(PASS, parameters_checked=len(params))


def check_lemma_43(module, j, degree_bound=None, label=None):
    ring = module.ring
    r = CheckReport("lemma-43", {"semigroup": _sgp_tag(ring.semigroup), "module": label,
                                 "truncation": ring.truncation, "j": j,
                                 "degree_bound": degree_bound})
    res = minimal_resolution(module, j + 1, degree_bound, max_rank=RANK_BUDGET)
    ext = ext_vanishes(res, j, degree_bound)
    if not ext.vanishes:
        r.hyp(f"Ext^{j}(M,R)=0", "failed")
        return r.finish(HYPOTHESIS_FAILED, ext_nonzero_degree=ext.witness_degree)
    r.hyp(f"Ext^{j}(M,R)=0", f"verified (certificate; window {list(ext.window)})")
    entries = entry_ideal(res, j).ideal
    tr = trace_of_module(syzygy_presentation(res, j), degree_bound)
    r.witnesses.update(entry_ideal=_exps(entries), trace_of_syzygy=_exps(tr),
                       betti=list(res.betti))
    if entries != tr:
        return r.finish(FAIL, mismatch=True)
    return r.finish(PASS)


def check_cor_44(module, a, j, degree_bound=None, label=None):
    ring = module.ring
    sgp = ring.semigroup
    r = CheckReport("cor-44", {"semigroup": _sgp_tag(sgp), "module": label, "a": a, "j": j,
                               "truncation": ring.truncation, "degree_bound": degree_bound})
    if a <= 0 or not ring.has(a):
        r.hyp("I=(t^a) inside m", "failed")
        return r.finish(HYPOTHESIS_FAILED)
    r.hyp("I=(t^a) inside m", "verified")
    r.hyp("pd I = 0", "symbolic: principal, generated by a non-zero-divisor")
    res = minimal_resolution(module, j + 1, degree_bound, max_rank=RANK_BUDGET)
    ext = ext_vanishes(res, j, degree_bound)
    if not ext.vanishes:
        r.hyp(f"Ext^{j}(M,R)=0", "failed")
        return r.finish(HYPOTHESIS_FAILED, ext_nonzero_degree=ext.witness_degree)
    r.hyp(f"Ext^{j}(M,R)=0", "verified")
    d_j = res.differential(j)
    if d_j.is_zero():
        return r.finish(PASS, vacuous="d_j = 0, pd M < j")
    entries = entry_ideal(res, j).ideal
    r.witnesses["entry_ideal"] = _exps(entries)
    if entries.issubset(principal(sgp, a)):
        return r.finish(FAIL, entries_inside=a)
    return r.finish(PASS, outside=_first_outside(entries, principal(sgp, a)))


def check_thm_big_dim1(module_ideal, a):
    sgp = module_ideal.semigroup
    r = CheckReport("thm-big-dim1", {"semigroup": _sgp_tag(sgp),
                                     "ideal": _exps(module_ideal), "a": a})
    if module_ideal.is_zero:
        return r.finish(SKIPPED, reason="M = 0")
    if a <= 0 or a not in sgp:
        r.hyp("I=(t^a) inside m", "failed")
        return r.finish(HYPOTHESIS_FAILED)
    r.hyp("I=(t^a) inside m, contains a non-zero-divisor", "verified")
    r.hyp("pd I <= h = 0; Ext^{1..0} range empty", "symbolic")
    tr = trace(module_ideal)
    r.witnesses["trace"] = _exps(tr)
    outside = _first_outside(tr, principal(sgp, a))
    if outside is None:
        return r.finish(FAIL, trace_inside=a)
    return r.finish(PASS, trace_exponent_outside=outside)


def check_cor_6_mcm(module_ideal, a):
    sgp = module_ideal.semigroup
    r = CheckReport("cor-6-SHADOW", {"semigroup": _sgp_tag(sgp),
                                     "ideal": _exps(module_ideal), "a": a})
    if module_ideal.is_zero:
        return r.finish(SKIPPED, reason="M = 0")
    if a <= 0 or a not in sgp:
        r.hyp("I=(t^a) inside m", "failed")
        return r.finish(HYPOTHESIS_FAILED)
    r.hyp("M maximal Cohen-Macaulay", "symbolic: nonzero torsion-free in dimension 1")
    r.hyp("pd (t^a) finite", "symbolic")
    omega = canonical_ideal(sgp)
    tw = tau(omega, module_ideal)
    bound = principal(sgp, a) * omega
    r.witnesses.update(tau_omega=_exps(tw), i_omega=_exps(bound))
    outside = _first_outside(tw, bound)
    if outside is None:
        return r.finish(FAIL, tau_inside=True)
    return r.finish(PASS, tau_exponent_outside=outside)


def injmain_shift(sgp):
    """Least a with t^a omega inside m."""
    omega = canonical_ideal(sgp)
    a = 1
    while not all((a + e) in sgp for e in omega.exponents):
        a += 1
    return a


def check_cor_injmain(module_ideal, a):
    sgp = module_ideal.semigroup
    r = CheckReport("cor-injmain-SHADOW", {"semigroup": _sgp_tag(sgp),
                                           "ideal": _exps(module_ideal), "a": a})
    if module_ideal.is_zero:
        return r.finish(SKIPPED, reason="M = 0")
    omega = canonical_ideal(sgp)
    j_ideal = omega.shift(a)
    if a <= 0 or not j_ideal.is_integral():
        raise NotInsideR(f"t^{a} omega is not inside m", shift_needed=injmain_shift(sgp))
    r.hyp("R inside omega", "verified" if 0 in omega else "failed")
    r.hyp("J = t^a omega nonzero inside m, id J finite", "verified (J isomorphic to omega)")
    r.hyp("J = (J:omega) omega", "verified" if
          (graded_colon := _colon(j_ideal, omega)) * omega == j_ideal else "failed")
    tw = tau(omega, module_ideal)
    r.witnesses.update(tau_omega=_exps(tw), J=_exps(j_ideal), J_colon_omega=_exps(graded_colon))
    outside = _first_outside(tw, j_ideal)
    if outside is None:
        return r.finish(FAIL, tau_inside=True)
    return r.finish(PASS, tau_exponent_outside=outside)


def _colon(x, m):
    from .ideals import colon
    return colon(x, m)


# -- orders of trace ideals ----------------------------------------------------

def _order_chain(r, sgp, ideal_order, dim=1, ring=None):
    """Assert 1 <= ord <= ll - 1 and ord <= e - mu + dim, with equality forced
    under minimal multiplicity."""
    ring = ring or GradedRing(sgp)
    e, mu = ring.multiplicity, ring.embedding_dimension
    ll = ring.loewy_length()
    r.witnesses.update(ord=ideal_order, ll=ll, e=e, mu=mu, e_minus_mu_plus_dim=e - mu + dim)
    if ideal_order < 1:
        return r.finish(FAIL, violated="ord >= 1")
    if ideal_order > ll - 1:
        return r.finish(FAIL, violated="ord <= ll - 1")
    if ideal_order > e - mu + dim:
        return r.finish(FAIL, violated="ord <= e - mu + dim")
    if e == mu - dim + 1 and ideal_order != 1:
        return r.finish(FAIL, violated="minimal multiplicity forces ord = 1")
    return r.finish(PASS, minimal_multiplicity=e == mu - dim + 1)


def _orders_agree(r, ideal):
    dp, brute = ord(ideal), order_by_powers(ideal)
    if dp != brute:
        r.finish(FAIL, cross_oracle="ord by factorization != ord by powers of m",
                 ord_dp=dp, ord_powers=brute)
        return None
    return dp


def check_prop_her(ideal):
    sgp = ideal.semigroup
    r = CheckReport("prop-her", {"semigroup": _sgp_tag(sgp), "ideal": _exps(ideal)})
    if not sgp.is_proper():
        return r.finish(SKIPPED, reason="regular ring k[t]")
    if ideal.is_zero:
        return r.finish(HYPOTHESIS_FAILED, reason="I = 0")
    inside_m = ideal.is_integral() and 0 not in ideal
    r.hyp("0 != I inside m", "verified" if inside_m else "failed")
    is_trace = trace(ideal) == ideal
    r.hyp("I = tr(I)", "verified" if is_trace else "failed")
    r.hyp("infinite residue field", "symbolic: monomial statement, k = Q")
    if not (inside_m and is_trace):
        return r.finish(HYPOTHESIS_FAILED)
    value = _orders_agree(r, ideal)
    if value is None:
        return r
    return _order_chain(r, sgp, value)


def check_thm_42(module_ideal):
    sgp = module_ideal.semigroup
    r = CheckReport("thm-42", {"semigroup": _sgp_tag(sgp), "ideal": _exps(module_ideal)})
    if module_ideal.is_zero:
        return r.finish(HYPOTHESIS_FAILED, reason="M* = 0")
    r.hyp("M* != 0", "symbolic: nonzero fractional ideal of a domain")
    r.hyp("Ext^{1..t-1}(M,R)=0 with t = 1", "symbolic: empty range")
    tr = trace(module_ideal)
    if tr == unit_ideal(sgp):
        r.hyp("R not a direct summand of M", "failed: tr(M) = R")
        return r.finish(SKIPPED, reason="tr(M) = R")
    r.hyp("R not a direct summand of M", "verified: tr(M) != R")
    r.witnesses["trace"] = _exps(tr)
    value = _orders_agree(r, tr)
    if value is None:
        return r
    return _order_chain(r, sgp, value)


def check_prop_nuco(a, b):
    r = CheckReport("prop-nuco", {"a": a, "b": b})
    if not (1 < a < b and math.gcd(a, b) == 1):
        r.hyp("1 < a < b coprime", "failed")
        return r.finish(HYPOTHESIS_FAILED)
    r.hyp("1 < a < b coprime", "verified")
    sgp = NumericalSemigroup([a, b])
    c = conductor(sgp)
    value = _orders_agree(r, c)
    if value is None:
        return r
    r.witnesses.update(frobenius=sgp.frobenius, conductor_start=c.min_exponent)
    if value != a - 1:
        return r.finish(FAIL, ord=value, expected=a - 1)
    return r.finish(PASS, ord=value)


def check_prop_56(sgp):
    r = CheckReport("prop-56", {"semigroup": _sgp_tag(sgp)})
    lhs = ord(conductor(sgp))
    rhs = sgp.frobenius // sgp.generators[-1] + 1
    r.witnesses.update(ord_conductor=lhs, lower_bound=rhs, frobenius=sgp.frobenius)
    if not sgp.is_proper():
        return r.finish(PASS if lhs >= rhs else FAIL, vacuous=True)
    return r.finish(PASS if lhs >= rhs else FAIL)


def explore_question_hyp(a_max):
    r = CheckReport("question-hyp", {"a_max": a_max})
    rows = []
    for b in range(3, a_max + 1):
        for a in range(2, b):
            if math.gcd(a, b) != 1:
                continue
            sgp = NumericalSemigroup([a, b])
            value = ord(conductor(sgp))
            rows.append({"semigroup": _sgp_tag(sgp), "e": a, "ord_conductor": value,
                         "verdict": PASS if value == a - 1 else FAIL})
    rows.sort(key=lambda row: row["semigroup"])
    if not rows:
        return r.finish(SKIPPED, table=[])
    bad = [row for row in rows if row["verdict"] == FAIL]
    return r.finish(FAIL if bad else PASS, table=rows)


def explore_question_qu2(multiplicity_max, genus_max):
    """Semigroups with e - mu = 1: report ord(c), flag values other than 2.

    Report only; the verdict reflects the agreement of the two order
    computations, not the open question."""
    r = CheckReport("question-qu2", {"multiplicity_max": multiplicity_max,
                                     "genus_max": genus_max})
    rows = []
    for sgp in enumerate_semigroups(genus_max, multiplicity_max, excess=1):
        c = conductor(sgp)
        dp, brute = ord(c), order_by_powers(c)
        rows.append({"semigroup": _sgp_tag(sgp), "e": sgp.multiplicity,
                     "mu": sgp.embedding_dimension, "frobenius": sgp.frobenius,
                     "ord_conductor": dp, "ord_by_powers": brute, "flag": dp != 2})
    if not rows:
        return r.finish(SKIPPED, table=[])
    mismatched = [row for row in rows if row["ord_conductor"] != row["ord_by_powers"]]
    return r.finish(FAIL if mismatched else PASS, table=rows,
                    flagged=[row["semigroup"] for row in rows if row["flag"]])


# -- orders of entry ideals of minimal resolutions -----------------------------

def _entry_chain_hypotheses(r, module, degree_bound):
    """Shared hypotheses: M non-free, Ext^1(M,R)=0, R not a summand of Omega M."""
    if module.is_free():
        r.hyp("M non-free", "failed")
        r.finish(SKIPPED, reason="M free")
        return None
    r.hyp("M non-free", "verified")
    res = minimal_resolution(module, 2, degree_bound, max_rank=RANK_BUDGET)
    ext = ext_vanishes(res, 1, degree_bound)
    if not ext.vanishes:
        r.hyp("Ext^1(M,R)=0", "failed")
        r.finish(HYPOTHESIS_FAILED, ext_nonzero_degree=ext.witness_degree)
        return None
    r.hyp("Ext^1(M,R)=0", f"verified (window {list(ext.window)})")
    tr_syz = trace_of_module(syzygy_presentation(res, 1), degree_bound)
    if not tr_syz.is_zero and tr_syz == unit_ideal(module.ring.semigroup):
        r.hyp("R not a direct summand of Omega M", "failed: tr(Omega M) = R")
        r.finish(HYPOTHESIS_FAILED)
        return None
    r.hyp("R not a direct summand of Omega M", "verified: tr(Omega M) != R")
    entries = entry_ideal(res, 1)
    r.witnesses.update(entry_ideal=_exps(entries.ideal), trace_of_syzygy=_exps(tr_syz))
    if entries.ideal != tr_syz:
        r.finish(FAIL, cross_oracle="I_1(d_1) != tr(Omega M)")
        return None
    return entries


def check_cor_62(module, degree_bound=None, label=None):
    ring = module.ring
    r = CheckReport("cor-62", {"semigroup": _sgp_tag(ring.semigroup), "module": label,
                               "degree_bound": degree_bound})
    if ring.is_artinian:
        return r.finish(SKIPPED, reason="depth 0: see prop-artinian")
    entries = _entry_chain_hypotheses(r, module, degree_bound)
    if entries is None:
        return r
    return _order_chain(r, ring.semigroup, entries.order)


def check_prop_artinian(module, degree_bound=None, label=None):
    ring = module.ring
    r = CheckReport("prop-artinian", {"semigroup": _sgp_tag(ring.semigroup), "module": label,
                                      "truncation": ring.truncation})
    if not ring.is_artinian:
        return r.finish(SKIPPED, reason="ring is not a truncation")
    entries = _entry_chain_hypotheses(r, module, degree_bound)
    if entries is None:
        return r
    r = _order_chain(r, ring.semigroup, entries.order, dim=0, ring=ring)
    if r.verdict == PASS and ring.loewy_length() - 1 > ring.multiplicity - ring.embedding_dimension:
        return r.finish(FAIL, violated="ll - 1 <= e - mu")
    return r


def check_nchu(ideal, degree_bound=None):
    sgp = ideal.semigroup
    r = CheckReport("chunk-nchu", {"semigroup": _sgp_tag(sgp), "ideal": _exps(ideal),
                                   "degree_bound": degree_bound})
    if ideal.is_zero or ideal.is_principal():
        return r.finish(SKIPPED, reason="principal or zero ideal")
    r.hyp("I non-principal, contains a non-zero-divisor", "verified")
    res = minimal_resolution(presentation_of_ideal(ideal, degree_bound), 1, degree_bound)
    lhs = entry_ideal(res, 1).order
    rhs = ord(trace(ideal))
    r.witnesses.update(ord_entries=lhs, ord_trace=rhs)
    return r.finish(PASS if lhs <= rhs else FAIL)


def check_cor_trace_entries(ideal, degree_bound=None):
    """I = tr(I) non-principal inside m: 1 <= ord I_1(d_1) <= ll - 1 <= e - mu + 1."""
    sgp = ideal.semigroup
    r = CheckReport("cor-trace-entries", {"semigroup": _sgp_tag(sgp), "ideal": _exps(ideal),
                                          "degree_bound": degree_bound})
    if ideal.is_zero or ideal.is_principal():
        return r.finish(SKIPPED, reason="principal or zero ideal")
    ok = ideal.is_integral() and 0 not in ideal and trace(ideal) == ideal
    r.hyp("I = tr(I) inside m", "verified" if ok else "failed")
    if not ok:
        return r.finish(HYPOTHESIS_FAILED)
    res = minimal_resolution(presentation_of_ideal(ideal, degree_bound), 1, degree_bound)
    return _order_chain(r, sgp, entry_ideal(res, 1).order)


# -- Gorenstein detection and Hom equality -------------------------------------

def check_gorenstein_trace(sgp):
    r = CheckReport("gorenstein-trace", {"semigroup": _sgp_tag(sgp)})
    tr = trace(canonical_ideal(sgp))
    symmetric = sgp.is_symmetric()
    r.witnesses.update(trace_omega=_exps(tr), symmetric=symmetric)
    return r.finish(PASS if (tr == unit_ideal(sgp)) == symmetric else FAIL)


def check_thm_31(module, a, target=None, degree_bound=None, label=None):
    sgp = module.ring.semigroup
    r = CheckReport("thm-31", {"semigroup": _sgp_tag(sgp), "module": label, "a": a,
                               "N": _exps(target) if target is not None else [0],
                               "degree_bound": degree_bound})
    if a <= 0 or a not in sgp:
        r.hyp("I=(t^a) inside m", "failed")
        return r.finish(HYPOTHESIS_FAILED)
    r.hyp("Tor_1(N,R/I)=Tor_2(N,R/I)=0", "symbolic: N torsion-free, I principal")
    r.hyp("Ext^1(M, N (x) Omega I)=0", "symbolic: Omega I = 0")
    cmp = graded.check_hom_equality(module, principal(sgp, a), target, degree_bound)
    r.witnesses.update(window=list(cmp.window), certified=cmp.certified)
    if cmp.verdict != "Equal":
        return r.finish(FAIL, witness_degree=cmp.witness_degree)
    return r.finish(PASS)


# -- instance construction and sweeps -------------------------------------------

def build_module(ring, spec, degree_bound=None):
    """Presentation from a JSON-able description.

    kinds: ideal (exponents), residue, quotient (exponents), free (twists),
    syzygy (of, j)."""
    kind = spec["kind"]
    sgp = ring.semigroup
    if kind == "ideal":
        if ring.is_artinian:
            raise ValueError("ideal modules are only built over k[S]")
        return presentation_of_ideal(make_ideal(sgp, spec["exponents"]), degree_bound)
    if kind == "residue":
        return residue_field_presentation(ring)
    if kind == "quotient":
        return graded.quotient_presentation(ring, spec["exponents"])
    if kind == "free":
        return graded.free_presentation(ring, tuple(spec.get("twists", (0,))))
    if kind == "syzygy":
        base = build_module(ring, spec["of"], degree_bound)
        res = minimal_resolution(base, spec["j"] + 1, degree_bound, max_rank=RANK_BUDGET)
        return syzygy_presentation(res, spec["j"])
    raise ValueError(f"unknown module kind {kind!r}")


def module_label(spec):
    kind = spec["kind"]
    if kind in ("ideal", "quotient"):
        return f"{kind}{spec['exponents']}"
    if kind == "syzygy":
        return f"Omega^{spec['j']}({module_label(spec['of'])})"
    return kind


def random_ideals(sgp, count, rng):
    """Deterministic pseudo-random integral ideals inside m."""
    top = sgp.frobenius + sgp.generators[-1] + sgp.multiplicity
    members = [s for s in range(1, top + 1) if s in sgp]
    out = []
    for _ in range(count):
        k = rng.randint(1, min(sgp.multiplicity, 4))
        out.append(make_ideal(sgp, rng.sample(members, min(k, len(members)))))
    return out


@dataclass
class SweepConfig:
    genus_max: int = 4
    samples: int = 3
    seed: int = 0
    a_max: int = 9
    multiplicity_max: int = 8
    jmax: int = 2
    degree_bound: object = None


def _semigroups(cfg, proper=True):
    return [s for s in enumerate_semigroups(cfg.genus_max) if s.is_proper() or not proper]


def _ideal_pool(sgp, cfg):
    rng = random.Random(f"{cfg.seed}:{sgp}")
    fixed = [maximal_ideal(sgp), conductor(sgp)]
    pool = fixed + random_ideals(sgp, cfg.samples, rng)
    seen, out = set(), []
    for ideal in pool:
        if ideal.exponents not in seen:
            seen.add(ideal.exponents)
            out.append(ideal)
    return out


def _module_specs(sgp, cfg, include_residue=False):
    specs = [{"kind": "ideal", "exponents": list(i.exponents)} for i in _ideal_pool(sgp, cfg)]
    specs.append({"kind": "syzygy", "j": 1, "of": {"kind": "ideal",
                                                  "exponents": list(sgp.generators)}})
    if include_residue:
        specs.append({"kind": "residue"})
    return specs


def _instances(sid, cfg):
    D = cfg.degree_bound
    if sid == "prop-nuco":
        for b in range(3, cfg.a_max + 1):
            for a in range(2, b):
                if math.gcd(a, b) == 1:
                    yield {"a": a, "b": b}
        return
    if sid == "question-hyp":
        yield {"a_max": cfg.a_max}
        return
    if sid == "question-qu2":
        yield {"multiplicity_max": cfg.multiplicity_max, "genus_max": cfg.genus_max}
        return
    for sgp in _semigroups(cfg, proper=sid not in ("prop-56", "gorenstein-trace")):
        gens = list(sgp.generators)
        if sid in ("prop-56", "gorenstein-trace"):
            yield {"semigroup": gens}
        elif sid in ("prop-her", "cor-trace-entries"):
            done = set()
            for ideal in _ideal_pool(sgp, cfg):
                tr = trace(ideal)
                if tr.exponents != (0,) and tr.exponents not in done:
                    done.add(tr.exponents)
                    yield {"semigroup": gens, "ideal": list(tr.exponents)}
        elif sid in ("thm-42", "prop-trentry", "chunk-nchu"):
            for ideal in _ideal_pool(sgp, cfg):
                yield {"semigroup": gens, "ideal": list(ideal.exponents)}
        elif sid in ("thm-big-dim1", "cor-6-SHADOW"):
            for ideal in _ideal_pool(sgp, cfg):
                for a in gens:
                    yield {"semigroup": gens, "ideal": list(ideal.exponents), "a": a}
        elif sid == "cor-injmain-SHADOW":
            shift = injmain_shift(sgp)
            for ideal in _ideal_pool(sgp, cfg):
                yield {"semigroup": gens, "ideal": list(ideal.exponents), "a": shift}
        elif sid == "lemma-43":
            for spec in _module_specs(sgp, cfg, include_residue=True):
                for j in range(1, cfg.jmax + 1):
                    yield {"semigroup": gens, "module": spec, "j": j, "degree_bound": D}
        elif sid == "cor-44":
            for spec in _module_specs(sgp, cfg):
                for j in range(1, cfg.jmax + 1):
                    yield {"semigroup": gens, "module": spec, "j": j,
                           "a": gens[0], "degree_bound": D}
        elif sid == "cor-62":
            for spec in _module_specs(sgp, cfg, include_residue=True):
                yield {"semigroup": gens, "module": spec, "degree_bound": D}
        elif sid == "prop-artinian":
            for n in range(2, sgp.frobenius + sgp.multiplicity + 2):
                for spec in ({"kind": "residue"},
                             {"kind": "quotient", "exponents": [gens[0]]}):
                    if spec["kind"] == "quotient" and gens[0] >= n:
                        continue
                    yield {"semigroup": gens, "module": spec, "truncation": n}
        elif sid == "thm-31":
            for spec in _module_specs(sgp, cfg):
                yield {"semigroup": gens, "module": spec, "a": gens[0], "degree_bound": D}
        else:
            raise KeyError(sid)


def run_instance(sid, inst):
    """Rebuild the objects described by ``inst`` and run check ``sid``."""
    if sid == "prop-nuco":
        return check_prop_nuco(inst["a"], inst["b"])
    if sid == "question-hyp":
        return explore_question_hyp(inst["a_max"])
    if sid == "question-qu2":
        return explore_question_qu2(inst["multiplicity_max"], inst["genus_max"])
    sgp = NumericalSemigroup(inst["semigroup"])
    if sid == "prop-56":
        return check_prop_56(sgp)
    if sid == "gorenstein-trace":
        return check_gorenstein_trace(sgp)
    D = inst.get("degree_bound")
    if "ideal" in inst:
        ideal = make_ideal(sgp, inst["ideal"])
        simple = {"prop-her": check_prop_her, "thm-42": check_thm_42}
        if sid in simple:
            return simple[sid](ideal)
        if sid == "prop-trentry":
            return check_prop_trentry(ideal, D)
        if sid == "chunk-nchu":
            return check_nchu(ideal, D)
        if sid == "cor-trace-entries":
            return check_cor_trace_entries(ideal, D)
        if sid == "thm-big-dim1":
            return check_thm_big_dim1(ideal, inst["a"])
        if sid == "cor-6-SHADOW":
            return check_cor_6_mcm(ideal, inst["a"])
        if sid == "cor-injmain-SHADOW":
            return check_cor_injmain(ideal, inst["a"])
        raise KeyError(sid)
    ring = GradedRing(sgp, inst.get("truncation"))
    spec = inst["module"]
    module = build_module(ring, spec, D)
    label = module_label(spec)
    if sid == "lemma-43":
        return check_lemma_43(module, inst["j"], D, label)
    if sid == "cor-44":
        return check_cor_44(module, inst["a"], inst["j"], D, label)
    if sid == "cor-62":
        return check_cor_62(module, D, label)
    if sid == "prop-artinian":
        return check_prop_artinian(module, D, label)
    if sid == "thm-31":
        return check_thm_31(module, inst["a"], None, D, label)
    raise KeyError(sid)


def run_instance_safe(sid, inst):
    try:
        return run_instance(sid, inst)
    except NotInsideR as exc:
        r = CheckReport(sid, dict(inst))
        r.hyp("t^a omega inside m", "failed")
        return r.finish(HYPOTHESIS_FAILED, shift_needed=exc.shift_needed)
    except BoundTooLarge as exc:
        r = CheckReport(sid, dict(inst))
        return r.finish(SKIPPED, reason=str(exc))
    except DegreeBoundTooSmall as exc:
        r = CheckReport(sid, dict(inst))
        r.hyp("degree bound", f"too small; suggested {exc.suggested}")
        return r.finish(HYPOTHESIS_FAILED, error="DegreeBoundTooSmall",
                        suggested=exc.suggested)


# statement id -> runner name
STATEMENTS = {
    "thm-31": "check-thm-31",
    "thm-big-dim1": "check-thm-big-dim1",
    "cor-6-SHADOW": "check-cor-6-mcm",
    "cor-injmain-SHADOW": "check-cor-injmain",
    "prop-trentry": "check-prop-trentry",
    "lemma-43": "check-lemma-43",
    "cor-44": "check-cor-44",
    "prop-her": "check-prop-her",
    "thm-42": "check-thm-42",
    "prop-nuco": "check-prop-nuco",
    "prop-56": "check-prop-56",
    "question-hyp": "explore-question-hyp",
    "question-qu2": "explore-question-qu2",
    "cor-62": "check-cor-62",
    "prop-artinian": "check-prop-artinian",
    "chunk-nchu": "check-nchu",
    "cor-trace-entries": "check-cor-trace-entries",
    "gorenstein-trace": "check-gorenstein-trace",
}


def select_statements(pattern):
    return [sid for sid, runner in STATEMENTS.items()
            if fnmatch.fnmatchcase(sid, pattern) or fnmatch.fnmatchcase(runner, pattern)]


def sweep_tasks(statement_ids, cfg):
    return [(sid, inst) for sid in statement_ids for inst in _instances(sid, cfg)]


def _run_task(task):
    return run_instance_safe(*task)


def run_sweep(statement_ids, cfg, workers=1):
    """Run every instance of the selected statements; report order is the task order."""
    tasks = sweep_tasks(statement_ids, cfg)
    if workers <= 1:
        for task in tasks:
            yield _run_task(task)
        return
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_run_task, tasks, chunksize=4)
