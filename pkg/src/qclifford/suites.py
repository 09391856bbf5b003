"""Check registry and suite execution.

Every check has a stable id, a one-line description (the claims index
shown by ``list-checks``), and a function from the run context to one
report record.  Status semantics: ``pass``/``fail`` for claims the engine
can decide; ``report`` for convention-dependent comparisons, which carry
residual data and a mismatch flag instead of a verdict (strict mode turns
flagged mismatches into failures at exit-code level).
"""

from __future__ import annotations

import cmath
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import blades, fierz, hopf, presentations, qgamma
from .linalg import Matrix, anticommutator, matmul
from .report import STATUS_FAIL, STATUS_PASS, STATUS_REPORT, CheckReport, format_float
from .rewrite import NCPolynomial, local_confluence_check
from .scalars import GaussRational, RadicalScalar

SUITES = ("clifford", "qgamma", "glq2", "ch2", "chq2", "fierz")
EXTRA_SUITES = ("selfcheck",)

# fallback sample points used to measure exact residuals in exact mode
REFERENCE_SAMPLES = (0.5, 0.75, 1.25, 1.5, 1.75)


@dataclass
class RunContext:
    mode: str = "both"
    q_samples: int = 8
    q_range: tuple[float, float] = (0.5, 2.0)
    seed: int = 0
    conventions: tuple[qgamma.ActionConvention, ...] = qgamma.ALL_CONVENTIONS
    max_len_overrides: dict = field(default_factory=dict)
    _cache: dict = field(default_factory=dict)

    def __post_init__(self):
        rng = random.Random(self.seed)
        lo, hi = self.q_range
        samples = []
        while len(samples) < self.q_samples:
            x = rng.uniform(lo, hi)
            if abs(x - 1.0) >= 0.05 and abs(x) >= 1e-6 and abs(x + 1.0) >= 0.05:
                samples.append(x)
        self.samples = samples
        self.rng = rng
        # set by the measurement helpers whenever a radicand evaluates onto
        # the principal branch cut; the runner copies it into the report
        self.branch_cut_hit = False

    # ---- lazily built shared objects ------------------------------------

    def cached(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    @property
    def gammas(self) -> qgamma.QGammaSet:
        return self.cached("gammas", qgamma.build_q_gammas)

    @property
    def metric(self) -> qgamma.QMetric:
        return self.cached("metric", qgamma.build_metric)

    @property
    def glq2(self) -> hopf.HopfData:
        return self.cached("glq2", presentations.build_glq2)

    @property
    def ch2(self) -> hopf.HopfData:
        return self.cached("ch2", presentations.build_ch2)

    @property
    def chq2(self) -> hopf.HopfData:
        return self.cached("chq2", presentations.build_chq2)

    # ---- measurement helpers --------------------------------------------

    @property
    def measure_points(self) -> list[float]:
        if self.mode == "exact":
            return list(REFERENCE_SAMPLES)
        return self.samples

    @property
    def oracle_points(self) -> list[float]:
        return self.measure_points[:5] if len(self.measure_points) >= 5 else list(
            REFERENCE_SAMPLES
        )

    @property
    def q_values_field(self) -> list[str]:
        if self.mode == "exact":
            return []
        return [format_float(x) for x in self.samples]

    def measure_matrix(self, m: Matrix) -> float:
        worst = 0.0
        for x in self.measure_points:
            arr, flag = m.evaluate_with_flags(x)
            if flag:
                self.branch_cut_hit = True
            worst = max(worst, float(np.max(np.abs(arr))) if arr.size else 0.0)
        return worst

    def measure_scalar(self, s: RadicalScalar) -> float:
        worst = 0.0
        for x in self.measure_points:
            val, flag = s.eval_with_flags(x)
            if flag:
                self.branch_cut_hit = True
            worst = max(worst, abs(val))
        return worst

    def measure_matrices(self, mats) -> float:
        return max((self.measure_matrix(m) for m in mats), default=0.0)

    def max_len(self, key: str, default: int) -> int:
        return self.max_len_overrides.get(key, default)


@dataclass(frozen=True)
class CheckDef:
    check_id: str
    suite: str
    description: str
    fn: object


_REGISTRY: list[CheckDef] = []


def _check(check_id: str, suite: str, description: str):
    def deco(fn):
        _REGISTRY.append(CheckDef(check_id, suite, description, fn))
        return fn

    return deco


def registry() -> list[CheckDef]:
    return sorted(_REGISTRY, key=lambda c: c.check_id)


def _pass_fail(cid, ok, residual="0", witness=None, **kw) -> CheckReport:
    return CheckReport(
        check_id=cid,
        status=STATUS_PASS if ok else STATUS_FAIL,
        residual_max=residual,
        witness=witness,
        **kw,
    )


# ===========================================================================
# clifford suite
# ===========================================================================


@_check(
    "clifford.dirac_anticommutation",
    "clifford",
    "4x4 matrix generators anticommute to twice the diag(-1,1,1,1) metric",
)
def _clifford_anticommutation(ctx: RunContext) -> CheckReport:
    gam = blades.dirac_matrices()
    signs = (-1, 1, 1, 1)
    worst = Matrix.zeros(4, 4)
    ok = True
    for mu in range(4):
        for nu in range(mu, 4):
            ac = anticommutator(gam[mu], gam[nu])
            expect = (
                Matrix.identity(4).scale(2 * signs[mu])
                if mu == nu
                else Matrix.zeros(4, 4)
            )
            diff = ac - expect
            if not diff.is_zero():
                ok = False
                worst = diff
    return _pass_fail(
        "clifford.dirac_anticommutation",
        ok,
        witness=None if ok else str(worst),
        q_values=[],
        details={"representation": "i times the standard Dirac basis"},
    )


@_check(
    "clifford.blade_matrix_agreement",
    "clifford",
    "blade products map onto matrix products for all 16 basis blades",
)
def _clifford_blades(ctx: RunContext) -> CheckReport:
    sig = blades.CL31
    gam = blades.dirac_matrices()
    basis = blades.all_basis_blades(sig)
    ok = True
    witness = None
    for b1 in basis:
        for b2 in basis:
            mv = blades.Multivector.blade(b1, sig) * blades.Multivector.blade(b2, sig)
            expect = Matrix.zeros(4, 4)
            for bl, c in mv.terms.items():
                expect = expect + blades.blade_matrix(bl, gam).scale(c)
            got = matmul(blades.blade_matrix(b1, gam), blades.blade_matrix(b2, gam))
            if got != expect:
                ok = False
                witness = f"blades {b1} * {b2}"
    return _pass_fail("clifford.blade_matrix_agreement", ok, witness=witness)


@_check(
    "clifford.blade_associativity",
    "clifford",
    "blade product is associative on seeded random multivector triples",
)
def _clifford_assoc(ctx: RunContext) -> CheckReport:
    sig = blades.CL31
    rng = random.Random(ctx.seed + 101)
    basis = blades.all_basis_blades(sig)

    def rand_mv():
        mv = blades.Multivector.zero(sig)
        for _ in range(3):
            b = basis[rng.randrange(len(basis))]
            c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            mv = mv + blades.Multivector.blade(b, sig, c)
        return mv

    ok = True
    for _ in range(50):
        a, b, c = rand_mv(), rand_mv(), rand_mv()
        if (a * b) * c != a * (b * c):
            ok = False
            break
    return _pass_fail("clifford.blade_associativity", ok)


# ===========================================================================
# qgamma suite
# ===========================================================================


@_check(
    "qgamma.transcription",
    "qgamma",
    "pinned entries of the deformed gammas and the metric match re-entered literals",
)
def _qgamma_transcription(ctx: RunContext) -> CheckReport:
    from .scalars import q_half, q_plus_qinv, qinv, qvar, sqrt

    gs = ctx.gammas
    qm = ctx.metric
    q = qvar()
    Q = q_plus_qinv()
    one = RadicalScalar.one()
    pins = [
        (gs.gamma0[0, 2], q**2),
        (gs.gamma0[1, 3], -one),
        (gs.gamma0[2, 0], -one),
        (gs.gamma0[3, 1], -one),
        (gs.gamma_plus[0, 3], sqrt(q * Q)),
        (gs.gamma_plus[2, 1], -sqrt(q * Q)),
        (gs.gamma_minus[0, 3], sqrt(Q) * q_half(-3)),
        (gs.gamma_minus[3, 0], -(sqrt(Q) * q_half(3))),
        (gs.gamma3[0, 2], qinv() + q - q**2),
        (gs.gamma3[1, 3], -(q**-2)),
        (qm.c[0, 3], qinv()),
        (qm.c[1, 1], -one + q**-2),
        (qm.c[1, 2], -qinv()),
        (qm.c[2, 1], -qinv()),
        (qm.c[3, 0], q),
        (qm.c[0, 0], RadicalScalar.zero()),
        (qm.c[2, 2], RadicalScalar.zero()),
        (qm.c[3, 3], RadicalScalar.zero()),
    ]
    bad = [i for i, (got, want) in enumerate(pins) if got != want]
    return _pass_fail(
        "qgamma.transcription",
        not bad,
        witness=None if not bad else f"pin indices {bad}",
        details={"pins": len(pins)},
    )


@_check(
    "qgamma.gamma_plus_square_zero",
    "qgamma",
    "the raising deformed gamma squares to zero exactly in q",
)
def _qgamma_plus_sq(ctx: RunContext) -> CheckReport:
    gs = ctx.gammas
    sq = matmul(gs.gamma_plus, gs.gamma_plus)
    ok = sq.is_zero()
    return _pass_fail(
        "qgamma.gamma_plus_square_zero",
        ok,
        residual="0" if ok else format_float(ctx.measure_matrix(sq)),
    )


@_check(
    "qgamma.metric_inverse",
    "qgamma",
    "the metric times its eliminated inverse is the identity exactly",
)
def _qgamma_metric(ctx: RunContext) -> CheckReport:
    qm = ctx.metric
    diff = matmul(qm.c, qm.c_inverse) - Matrix.identity(4)
    return _pass_fail("qgamma.metric_inverse", diff.is_zero())


@_check(
    "qgamma.gamma5_structure",
    "qgamma",
    "the pseudoscalar product is nonzero and annihilates the raising gamma",
)
def _qgamma_gamma5(ctx: RunContext) -> CheckReport:
    gs = ctx.gammas
    g5 = qgamma.gamma5(gs)
    nz = not g5.is_zero()
    left = matmul(gs.gamma_plus, g5)
    rank_ok = True
    for x in ctx.measure_points:
        if np.linalg.matrix_rank(left.evaluate(x)) > 2:
            rank_ok = False
    return _pass_fail(
        "qgamma.gamma5_structure",
        nz and rank_ok,
        q_values=ctx.q_values_field,
    )


def _deformed_metric_check(conv: qgamma.ActionConvention):
    cid = f"qgamma.deformed_metric.{conv.value}"

    def fn(ctx: RunContext) -> CheckReport | None:
        if conv not in ctx.conventions:
            return None
        res = qgamma.deformed_metric(ctx.gammas, conv)
        target = qgamma.deformed_metric_target()
        diff = res.matrix - target
        exact_match = diff.is_zero()
        matched = sum(
            1
            for i in range(4)
            for j in range(4)
            if diff[i, j].is_zero()
        )
        return CheckReport(
            check_id=cid,
            status=STATUS_REPORT,
            residual_max=format_float(ctx.measure_matrix(diff)),
            witness=str(diff),
            convention=conv.value,
            q_values=ctx.q_values_field,
            mismatch=not exact_match,
            details={
                "entries_matching_target": matched,
                "symmetric": res.matrix == res.matrix.transpose(),
                "anticommutators_scalar": res.deviation_zero,
            },
        )

    return cid, fn


for _conv in qgamma.ALL_CONVENTIONS:
    _cid, _fn = _deformed_metric_check(_conv)
    _REGISTRY.append(
        CheckDef(
            _cid,
            "qgamma",
            f"induced deformed metric vs the transcribed target ({_conv.value})",
            _fn,
        )
    )


@_check(
    "qgamma.deformed_metric_oracle",
    "qgamma",
    "matrix-representation route agrees with the blade-algebra route per convention",
)
def _qgamma_dm_oracle(ctx: RunContext) -> CheckReport:
    worst = 0.0
    ok = True
    for conv in ctx.conventions:
        engine = qgamma.deformed_metric(ctx.gammas, conv).matrix
        oracle = qgamma.deformed_metric_blade_oracle(ctx.gammas, conv)
        if engine != oracle:
            ok = False
        diff = engine - oracle
        for x in ctx.oracle_points:
            worst = max(worst, diff.max_abs_at(x))
    if worst > 1e-10:
        ok = False
    return _pass_fail(
        "qgamma.deformed_metric_oracle",
        ok,
        residual=format_float(worst),
        q_values=ctx.q_values_field,
    )


@_check(
    "qgamma.bare_relation_flip",
    "qgamma",
    "defining-relation residuals with the braiding replaced by the flip",
)
def _qgamma_flip(ctx: RunContext) -> CheckReport:
    residuals = qgamma.bare_relation_flip_residuals(ctx.gammas, ctx.metric)
    worst = 0.0
    zero_pairs = 0
    for key in sorted(residuals):
        m = residuals[key]
        if m.is_zero():
            zero_pairs += 1
        else:
            worst = max(worst, ctx.measure_matrix(m))
    anchor = residuals[(1, 1)].map(lambda s: s.limit_q1())
    return CheckReport(
        check_id="qgamma.bare_relation_flip",
        status=STATUS_REPORT,
        residual_max=format_float(worst),
        witness=f"residual(+,+) at q=1: {anchor}",
        q_values=ctx.q_values_field,
        mismatch=worst > 1e-10,
        details={"pairs_exactly_zero": zero_pairs},
    )


@_check(
    "qgamma.bare_relation_solve",
    "qgamma",
    "solvability of the defining relation for unknown braiding coefficients",
)
def _qgamma_solve(ctx: RunContext) -> CheckReport:
    exact = qgamma.bare_relation_solve_exact_q1(ctx.gammas, ctx.metric)
    sample_flags = []
    worst = 0.0
    for x in ctx.oracle_points:
        ok, resid = qgamma.bare_relation_solve_numeric(ctx.gammas, ctx.metric, x)
        sample_flags.append(ok)
        worst = max(worst, resid)
    return CheckReport(
        check_id="qgamma.bare_relation_solve",
        status=STATUS_REPORT,
        residual_max=format_float(worst),
        witness="solvable exactly at q=1" if exact.solvable else str(exact.infeasible_pairs),
        q_values=ctx.q_values_field,
        mismatch=not (exact.solvable and all(sample_flags)),
        details={
            "exact_q1_solvable": exact.solvable,
            "samples_solvable": sample_flags,
        },
    )


# ===========================================================================
# glq2 suite
# ===========================================================================


@_check(
    "glq2.rules_degree_homogeneous",
    "glq2",
    "every defining rewrite rule preserves total word degree",
)
def _glq2_degree(ctx: RunContext) -> CheckReport:
    rs = ctx.glq2.rs
    ok = all(
        all(len(w) == 2 for w in variant.terms)
        for variants in rs.rules.values()
        for variant in variants
    )
    return _pass_fail("glq2.rules_degree_homogeneous", ok)


@_check(
    "glq2.local_confluence_len4",
    "glq2",
    "all critical peaks among the six relations rejoin up to length 4",
)
def _glq2_confluence(ctx: RunContext) -> CheckReport:
    failures = local_confluence_check(ctx.glq2.rs, ctx.max_len("glq2.confluence", 4))
    if not failures:
        return _pass_fail("glq2.local_confluence_len4", True)
    witness = "; ".join(
        f"word {f.word} at {f.position_a} vs {f.position_b}" for f in failures[:5]
    )
    return CheckReport(
        check_id="glq2.local_confluence_len4",
        status=STATUS_REPORT,
        residual_max=format_float(len(failures)),
        witness=witness,
        mismatch=True,
        details={"failures": len(failures)},
    )


@_check(
    "glq2.termination_len8",
    "glq2",
    "normal forms of all words to length 8 complete under the step budget",
)
def _glq2_termination(ctx: RunContext) -> CheckReport:
    rs = ctx.glq2.rs
    count = 0
    try:
        for w in rs.iter_words(ctx.max_len("glq2.termination", 8)):
            rs.normal_form(NCPolynomial.word(w))
            count += 1
    except Exception as exc:  # BudgetExceeded or anything unexpected
        return _pass_fail(
            "glq2.termination_len8", False, witness=f"{type(exc).__name__}: {exc}"
        )
    return _pass_fail("glq2.termination_len8", True, details={"words": count})


@_check(
    "glq2.bialgebra_relations",
    "glq2",
    "coproduct and counit preserve all six defining relations exactly",
)
def _glq2_bialg(ctx: RunContext) -> CheckReport:
    r = hopf.check_bialgebra_compatibility(ctx.glq2)
    return _pass_fail(
        "glq2.bialgebra_relations",
        r.ok,
        witness=None if r.ok else str(r.witnesses[:2]),
    )


@_check(
    "glq2.coassociativity_len4",
    "glq2",
    "matrix coproduct is coassociative on all words to length 4",
)
def _glq2_coassoc(ctx: RunContext) -> CheckReport:
    r = hopf.check_coassociativity(ctx.glq2, ctx.max_len("glq2.axioms", 4))
    return _pass_fail(
        "glq2.coassociativity_len4",
        r.ok,
        witness=None if r.ok else str(r.witnesses[:1]),
        details={"words": r.checked_words},
    )


@_check(
    "glq2.counit_len4",
    "glq2",
    "counit laws hold on all words to length 4",
)
def _glq2_counit(ctx: RunContext) -> CheckReport:
    r = hopf.check_counit(ctx.glq2, ctx.max_len("glq2.axioms", 4))
    return _pass_fail(
        "glq2.counit_len4",
        r.ok,
        witness=None if r.ok else str(r.witnesses[:1]),
        details={"words": r.checked_words},
    )


@_check(
    "glq2.antipode",
    "glq2",
    "no antipode is assigned by the presentation; reported, not asserted",
)
def _glq2_antipode(ctx: RunContext) -> CheckReport:
    missing = ctx.glq2.missing_antipode_generators()
    return CheckReport(
        check_id="glq2.antipode",
        status=STATUS_REPORT,
        residual_max="0",
        witness=f"antipode missing for: {', '.join(missing)}",
        mismatch=False,
        details={"missing": missing},
    )


# ===========================================================================
# ch2 suite
# ===========================================================================


@_check(
    "ch2.coassociativity_len4",
    "ch2",
    "coassociativity on all six generators and words to length 4",
)
def _ch2_coassoc(ctx: RunContext) -> CheckReport:
    r = hopf.check_coassociativity(ctx.ch2, ctx.max_len("ch2.axioms", 4))
    return _pass_fail("ch2.coassociativity_len4", r.ok, details={"words": r.checked_words})


@_check("ch2.counit_len4", "ch2", "counit laws on all words to length 4")
def _ch2_counit(ctx: RunContext) -> CheckReport:
    r = hopf.check_counit(ctx.ch2, ctx.max_len("ch2.axioms", 4))
    return _pass_fail("ch2.counit_len4", r.ok)


@_check("ch2.antipode_len4", "ch2", "antipode axiom on all words to length 4")
def _ch2_antipode(ctx: RunContext) -> CheckReport:
    r = hopf.check_antipode(ctx.ch2, ctx.max_len("ch2.axioms", 4))
    return _pass_fail("ch2.antipode_len4", r.ok)


@_check(
    "ch2.bialgebra_relations",
    "ch2",
    "coproduct and counit preserve every defining relation",
)
def _ch2_bialg(ctx: RunContext) -> CheckReport:
    r = hopf.check_bialgebra_compatibility(ctx.ch2)
    return _pass_fail("ch2.bialgebra_relations", r.ok)


def _perturbed_ch2(which: str) -> hopf.HopfData:
    h = presentations.build_ch2()
    g = h.rs.size
    if which == "coassoc":
        # Delta'(G1) = G1 (x) G2: breaks coassociativity
        h.coproduct[presentations.CH_G[0]] = NCPolynomial.word(
            (presentations.CH_G[0], g + presentations.CH_G[1])
        )
    elif which == "counit":
        h.counit[presentations.CH_G[0]] = RadicalScalar.one()
    elif which == "antipode":
        h.antipode[presentations.CH_G3] = NCPolynomial.word(
            (presentations.CH_G3,), -1
        )
    return h


def _negative_control(which: str, checker):
    cid = f"ch2.negative_control_{which}"

    def fn(ctx: RunContext) -> CheckReport:
        h = _perturbed_ch2(which)
        r = checker(h, 2)
        return _pass_fail(cid, not r.ok, witness=None if not r.ok else "perturbation passed")

    return cid, fn


for _which, _checker in (
    ("coassoc", hopf.check_coassociativity),
    ("counit", hopf.check_counit),
    ("antipode", hopf.check_antipode),
):
    _cid, _fn = _negative_control(_which, _checker)
    _REGISTRY.append(
        CheckDef(
            _cid,
            "ch2",
            f"a deliberately perturbed {_which} structure map must fail its axiom",
            _fn,
        )
    )


@_check(
    "ch2.grouplike_toy",
    "ch2",
    "single grouplike generator with inverse passes all three axioms",
)
def _ch2_toy(ctx: RunContext) -> CheckReport:
    toy = presentations.build_group_toy()
    ok = (
        hopf.check_coassociativity(toy, 3).ok
        and hopf.check_counit(toy, 3).ok
        and hopf.check_antipode(toy, 3).ok
    )
    return _pass_fail("ch2.grouplike_toy", ok)


# ===========================================================================
# chq2 suite
# ===========================================================================


@_check(
    "chq2.bialgebra_relations",
    "chq2",
    "deformed coproduct and counit preserve every defining relation",
)
def _chq2_bialg(ctx: RunContext) -> CheckReport:
    r = hopf.check_bialgebra_compatibility(ctx.chq2)
    return _pass_fail(
        "chq2.bialgebra_relations", r.ok, witness=None if r.ok else str(r.witnesses[:1])
    )


@_check(
    "chq2.coassociativity_len3",
    "chq2",
    "deformed coproduct is coassociative on all words to length 3",
)
def _chq2_coassoc(ctx: RunContext) -> CheckReport:
    r = hopf.check_coassociativity(ctx.chq2, ctx.max_len("chq2.axioms", 3))
    return _pass_fail("chq2.coassociativity_len3", r.ok, details={"words": r.checked_words})


@_check("chq2.counit_len3", "chq2", "counit laws on all words to length 3")
def _chq2_counit(ctx: RunContext) -> CheckReport:
    r = hopf.check_counit(ctx.chq2, ctx.max_len("chq2.axioms", 3))
    return _pass_fail("chq2.counit_len3", r.ok)


@_check(
    "chq2.antipode_missing",
    "chq2",
    "the deformed generators carry no stated antipode; reported, not asserted",
)
def _chq2_antipode_missing(ctx: RunContext) -> CheckReport:
    missing = ctx.chq2.missing_antipode_generators()
    return CheckReport(
        check_id="chq2.antipode_missing",
        status=STATUS_REPORT,
        residual_max="0",
        witness=f"antipode missing for: {', '.join(missing)}",
        mismatch=False,
        details={"missing": missing},
    )


@_check(
    "chq2.antipode_inherited",
    "chq2",
    "the undeformed antipode satisfies the axiom with the deformed coproduct",
)
def _chq2_antipode_inherited(ctx: RunContext) -> CheckReport:
    h = ctx.cached(
        "chq2_full", lambda: presentations.build_chq2(include_inherited_antipode=True)
    )
    r = hopf.check_antipode(h, ctx.max_len("chq2.antipode", 2))
    return CheckReport(
        check_id="chq2.antipode_inherited",
        status=STATUS_REPORT,
        residual_max="0" if r.ok else "1",
        witness="axiom holds with the undeformed assignment" if r.ok else str(r.witnesses[:1]),
        mismatch=not r.ok,
        details={"words": r.checked_words},
    )


def _seeded_irrep_params(seed: int, count: int):
    rng = random.Random(seed + 7)
    params = []

    def draw_gauss():
        while True:
            re = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
            im = Fraction(rng.randint(-2, 2), rng.randint(1, 4)) if rng.random() < 0.5 else Fraction(0)
            g = GaussRational(re, im)
            if g.is_zero():
                continue
            if g in (GaussRational(1), GaussRational(-1)):
                continue
            return g

    for _ in range(count):
        params.append(
            presentations.IrrepParams(draw_gauss(), draw_gauss(), draw_gauss())
        )
    return params


def _seeded_numeric_irreps(ctx: RunContext, count: int):
    rng = random.Random(ctx.seed + 13)
    draws = []
    for _ in range(count):
        z = complex(rng.uniform(0.3, 2.0), rng.uniform(-1.0, 1.0))
        lx = complex(rng.uniform(0.3, 2.0), rng.uniform(-1.0, 1.0))
        ly = complex(rng.uniform(0.3, 2.0), rng.uniform(-1.0, 1.0))
        qv = rng.uniform(*ctx.q_range)
        if abs(qv - 1.0) < 0.05:
            qv += 0.1
        draws.append((z, lx, ly, qv))
    return draws


@_check(
    "chq2.irrep_square_law",
    "chq2",
    "squares of the level-i matrices equal the q-bracket of the level weight",
)
def _chq2_square_law(ctx: RunContext) -> CheckReport:
    worst_exact = None
    for params in _seeded_irrep_params(ctx.seed, 20):
        irrep = presentations.build_affine_irrep(params)
        rep = presentations.verify_irrep_relations(irrep)
        for key in sorted(rep.square_residuals):
            if not rep.square_residuals[key].is_zero():
                worst_exact = (params, key)
    numeric_worst = 0.0
    if ctx.mode != "exact":
        for z, lx, ly, qv in _seeded_numeric_irreps(ctx, 20):
            mats = presentations.affine_irrep_numeric(z, lx, ly, qv)
            denom = qv - 1.0 / qv
            for level in (0, 1):
                for axis, lval in (("x", lx), ("y", ly)):
                    w = 1.0 / lval if level == 0 else lval
                    bracket = (w - 1.0 / w) / denom
                    m = mats[f"{axis}{level}"]
                    numeric_worst = max(
                        numeric_worst,
                        float(np.max(np.abs(m @ m - bracket * np.eye(2)))),
                    )
    ok = worst_exact is None and numeric_worst <= 1e-10
    return _pass_fail(
        "chq2.irrep_square_law",
        ok,
        residual=format_float(numeric_worst),
        witness=None if worst_exact is None else str(worst_exact),
        q_values=ctx.q_values_field,
        details={"exact_draws": 20, "numeric_draws": 0 if ctx.mode == "exact" else 20},
    )


@_check(
    "chq2.irrep_anticommutation",
    "chq2",
    "per-level anticommutation relations and the involution square hold",
)
def _chq2_anticomm(ctx: RunContext) -> CheckReport:
    ok = True
    witness = None
    for params in _seeded_irrep_params(ctx.seed, 20):
        irrep = presentations.build_affine_irrep(params)
        rep = presentations.verify_irrep_relations(irrep)
        if not all(m.is_zero() for m in rep.anticommutator_residuals.values()):
            ok = False
            witness = str(params)
        if not rep.gamma3_square_residual.is_zero():
            ok = False
            witness = str(params)
    numeric_worst = 0.0
    if ctx.mode != "exact":
        for z, lx, ly, qv in _seeded_numeric_irreps(ctx, 20):
            mats = presentations.affine_irrep_numeric(z, lx, ly, qv)
            for lvl in (0, 1):
                x, y = mats[f"x{lvl}"], mats[f"y{lvl}"]
                numeric_worst = max(numeric_worst, float(np.max(np.abs(x @ y + y @ x))))
                for m in (x, y):
                    numeric_worst = max(
                        numeric_worst,
                        float(np.max(np.abs(m @ mats["g3"] + mats["g3"] @ m))),
                    )
    if numeric_worst > 1e-10:
        ok = False
    return _pass_fail(
        "chq2.irrep_anticommutation",
        ok,
        residual=format_float(numeric_worst),
        witness=witness,
        q_values=ctx.q_values_field,
    )


@_check(
    "chq2.irrep_pinned",
    "chq2",
    "pinned square-law values at rational parameter points are exact",
)
def _chq2_pinned(ctx: RunContext) -> CheckReport:
    params = presentations.IrrepParams(
        GaussRational(1), GaussRational(2), GaussRational(3)
    )
    irrep = presentations.build_affine_irrep(params)
    sq_x = matmul(irrep.gamma(0, "x"), irrep.gamma(0, "x"))
    sq_y = matmul(irrep.gamma(1, "y"), irrep.gamma(1, "y"))
    ok = (
        sq_x[0, 0].subs_q(Fraction(3)) == GaussRational(Fraction(-9, 16))
        and sq_x[1, 1].subs_q(Fraction(3)) == GaussRational(Fraction(-9, 16))
        and sq_x[0, 1].is_zero()
        and sq_y[0, 0].subs_q(Fraction(2)) == GaussRational(Fraction(16, 9))
    )
    return _pass_fail("chq2.irrep_pinned", ok)


@_check(
    "chq2.irrep_cross_index",
    "chq2",
    "anticommutators mixing the two levels, computed but never asserted",
)
def _chq2_cross(ctx: RunContext) -> CheckReport:
    params = _seeded_irrep_params(ctx.seed, 5)
    worst = 0.0
    for p in params:
        irrep = presentations.build_affine_irrep(p)
        rep = presentations.verify_irrep_relations(irrep)
        for key in sorted(rep.cross_level_anticommutators):
            m = rep.cross_level_anticommutators[key]
            if not m.is_zero():
                worst = max(worst, ctx.measure_matrix(m))
    return CheckReport(
        check_id="chq2.irrep_cross_index",
        status=STATUS_REPORT,
        residual_max=format_float(worst),
        mismatch=False,
        q_values=ctx.q_values_field,
        details={"draws": len(params)},
    )


def _su2_check(conv: qgamma.ActionConvention):
    cid = f"chq2.su2_action.{conv.value}"

    def fn(ctx: RunContext) -> CheckReport | None:
        if conv not in ctx.conventions:
            return None
        worst = 0.0
        claim_zero: dict[str, bool] = {}
        for params in _seeded_irrep_params(ctx.seed, 5):
            irrep = presentations.build_affine_irrep(params)
            for level in (0, 1):
                rep = presentations.su2_action_report(irrep, level, conv)
                for name in sorted(rep.residuals):
                    m = rep.residuals[name]
                    z = m.is_zero()
                    claim_zero[name] = claim_zero.get(name, True) and z
                    if not z:
                        worst = max(worst, ctx.measure_matrix(m))
        return CheckReport(
            check_id=cid,
            status=STATUS_REPORT,
            residual_max=format_float(worst),
            convention=conv.value,
            q_values=ctx.q_values_field,
            mismatch=False,
            details={"claims_exactly_zero": sorted(k for k, v in claim_zero.items() if v)},
        )

    return cid, fn


for _conv in qgamma.ALL_CONVENTIONS:
    _cid, _fn = _su2_check(_conv)
    _REGISTRY.append(
        CheckDef(
            _cid,
            "chq2",
            f"post-action relation values for the mapped Pauli basis ({_conv.value})",
            _fn,
        )
    )


# ===========================================================================
# fierz suite
# ===========================================================================


@_check(
    "fierz.rhat_hecke",
    "fierz",
    "the exchange matrix satisfies its quadratic Hecke relation exactly",
)
def _fierz_hecke(ctx: RunContext) -> CheckReport:
    return _pass_fail("fierz.rhat_hecke", fierz.hecke_residual(fierz.hecke_rmatrix()).is_zero())


@_check(
    "fierz.rhat_braid",
    "fierz",
    "the exchange matrix satisfies the braid relation on the tensor cube",
)
def _fierz_braid(ctx: RunContext) -> CheckReport:
    return _pass_fail("fierz.rhat_braid", fierz.braid_residual(fierz.hecke_rmatrix()).is_zero())


@_check(
    "fierz.rhat_q1_flip",
    "fierz",
    "the exchange matrix degenerates to the flip at q = 1",
)
def _fierz_flip(ctx: RunContext) -> CheckReport:
    r1 = fierz.hecke_rmatrix().map(lambda s: s.limit_q1())
    return _pass_fail("fierz.rhat_q1_flip", r1 == fierz.flip_matrix())


def _oracle_numeric_gammas(q: complex):
    """Independent float transcription of the deformed gammas (oracle path)."""
    Q = q + 1.0 / q
    rqQ = cmath.sqrt(q * Q)
    rQ = cmath.sqrt(Q)
    g0 = np.array(
        [[0, 0, q**2, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]], dtype=complex
    )
    gp = rqQ * np.array(
        [[0, 0, 0, 1], [0, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 0]], dtype=complex
    )
    gm = rQ * np.array(
        [
            [0, 0, 0, q ** -1.5],
            [0, 0, 0, 0],
            [0, 0, 0, 0],
            [-(q**1.5), 0, 0, 0],
        ],
        dtype=complex,
    )
    g3 = np.array(
        [
            [0, 0, 1.0 / q + q - q**2, 0],
            [0, 0, 0, -(q**-2.0)],
            [-1, 0, 0, 0],
            [0, q**2, 0, 0],
        ],
        dtype=complex,
    )
    return {"0": g0, "+": gp, "-": gm, "3": g3, "5": g0 @ gp @ gm @ g3}


def _oracle_relation_scale(tag: str, q: complex) -> complex:
    return {
        "one": 1.0,
        "minus_one": -1.0,
        "q2": q * q,
        "minus_q2": -(q * q),
        "qinv2": 1.0 / (q * q),
    }[tag]


@_check(
    "fierz.linear_relations",
    "fierz",
    "exact residuals of the seven transcribed linear current relations",
)
def _fierz_linear(ctx: RunContext) -> CheckReport:
    results = fierz.linear_relation_residuals(ctx.gammas)
    worst = 0.0
    holding = []
    for r in results:
        if r.holds_exactly:
            holding.append(r.name)
        else:
            worst = max(worst, ctx.measure_matrix(r.residual))
    return CheckReport(
        check_id="fierz.linear_relations",
        status=STATUS_REPORT,
        residual_max=format_float(worst),
        witness=f"{len(holding)} of 7 hold exactly",
        q_values=ctx.q_values_field,
        mismatch=len(holding) != 7,
        details={"holding_exactly": holding, "relations": len(results)},
    )


@_check(
    "fierz.linear_relations_oracle",
    "fierz",
    "engine residuals match an independent float matrix oracle at sampled q",
)
def _fierz_linear_oracle(ctx: RunContext) -> CheckReport:
    results = fierz.linear_relation_residuals(ctx.gammas)
    worst_gap = 0.0
    ok = True
    for x in ctx.oracle_points:
        oracle = _oracle_numeric_gammas(x)
        for (name, lhs, tag, rhs), res in zip(fierz.LINEAR_RELATIONS, results):
            o_res = oracle[lhs[0]] @ oracle[lhs[1]] - _oracle_relation_scale(
                tag, x
            ) * (oracle[rhs[0]] @ oracle[rhs[1]])
            e_norm = float(np.max(np.abs(res.residual.evaluate(x))))
            o_norm = float(np.max(np.abs(o_res)))
            gap = abs(e_norm - o_norm)
            worst_gap = max(worst_gap, gap)
            if (e_norm < 1e-9) != (o_norm < 1e-9):
                ok = False
    if worst_gap > 1e-9:
        ok = False
    return _pass_fail(
        "fierz.linear_relations_oracle",
        ok,
        residual=format_float(worst_gap),
        q_values=ctx.q_values_field,
    )


@_check(
    "fierz.reflection_rule_count",
    "fierz",
    "the doublet exchange relation expands into exactly four rewrite rules",
)
def _fierz_rule_count(ctx: RunContext) -> CheckReport:
    rs = fierz.reflection_rules(1)
    return _pass_fail("fierz.reflection_rule_count", len(rs.rules) == 4)


@_check(
    "fierz.reflection_q1_commutation",
    "fierz",
    "at q = 1 and unit exchange constant the rules are plain commutation",
)
def _fierz_q1_rules(ctx: RunContext) -> CheckReport:
    rs = fierz.reflection_rules(1)
    ok = True
    for (a, b), variants in rs.rules.items():
        rhs = NCPolynomial(
            {w: c.limit_q1() for w, c in variants[0].terms.items()}
        )
        if rhs != NCPolynomial.word((b, a)):
            ok = False
    return _pass_fail("fierz.reflection_q1_commutation", ok)


@_check(
    "fierz.reflection_confluence",
    "fierz",
    "local confluence outcome of the exchange rules, recorded not asserted",
)
def _fierz_confluence(ctx: RunContext) -> CheckReport:
    counts = {}
    for label, k in (("k=1", Fraction(1)), ("k=3/5", Fraction(3, 5))):
        counts[label] = len(
            fierz.reflection_confluence_witnesses(k, ctx.max_len("fierz.confluence", 4))
        )
    return CheckReport(
        check_id="fierz.reflection_confluence",
        status=STATUS_REPORT,
        residual_max=format_float(max(counts.values())),
        witness=str(counts),
        mismatch=False,
        details=counts,
    )


def _quadratic_check(convention: str, tag: str):
    cid = f"fierz.quadratic.{tag}"

    def fn(ctx: RunContext) -> CheckReport:
        rep = fierz.quadratic_identity_report(ctx.gammas, convention)
        worst = 0.0
        for w in sorted(rep.residual_at_reference.terms, key=lambda x: (len(x), x)):
            worst = max(worst, ctx.measure_scalar(rep.residual_at_reference.terms[w]))
        gcd = rep.gcd_polynomial
        k_info = {
            "nonzero_words": len(rep.k_dependence),
            "gcd_degree": None if gcd.is_zero() else gcd.degree(),
            "k_roots": [str(r) for r in rep.common_k_roots],
        }
        witness_lines = [f"{w} -> {p}" for w, p in rep.render_k_dependence()[:6]]
        return CheckReport(
            check_id=cid,
            status=STATUS_REPORT,
            residual_max=format_float(worst),
            witness="; ".join(witness_lines),
            convention=convention,
            q_values=ctx.q_values_field,
            mismatch=False,
            details=k_info,
        )

    return cid, fn


for _convention, _tag in (
    (fierz.CONVENTION_COMMUTE, "convention_a"),
    (fierz.CONVENTION_REFLECT, "convention_b"),
):
    _cid, _fn = _quadratic_check(_convention, _tag)
    _REGISTRY.append(
        CheckDef(
            _cid,
            "fierz",
            f"quadratic current identity residual and exchange-constant analysis ({_tag})",
            _fn,
        )
    )


# ===========================================================================
# selfcheck suite (fixture for exit-code tests; not part of "all")
# ===========================================================================


@_check(
    "selfcheck.expected_failure",
    "selfcheck",
    "deliberately failing fixture used to exercise the exit-code contract",
)
def _selfcheck(ctx: RunContext) -> CheckReport:
    return _pass_fail("selfcheck.expected_failure", False, residual="1")


# ===========================================================================
# runner
# ===========================================================================


def resolve_suites(requested) -> list[str]:
    chosen: list[str] = []
    for s in requested:
        if s == "all":
            for name in SUITES:
                if name not in chosen:
                    chosen.append(name)
        elif s in SUITES or s in EXTRA_SUITES:
            if s not in chosen:
                chosen.append(s)
        else:
            raise ValueError(f"unknown suite: {s}")
    return chosen


def run_checks(suites, ctx: RunContext) -> list[CheckReport]:
    wanted = set(suites)
    reports = []
    for cdef in registry():
        if cdef.suite not in wanted:
            continue
        t0 = time.monotonic()
        ctx.branch_cut_hit = False
        report = cdef.fn(ctx)
        if report is None:  # check not applicable under this configuration
            continue
        if ctx.branch_cut_hit:
            report.details = dict(report.details, branch_cut=True)
        report.elapsed_ms = int((time.monotonic() - t0) * 1000)
        reports.append(report)
    return sorted(reports, key=lambda r: r.check_id)


def exit_code(reports: list[CheckReport], strict: bool) -> int:
    for r in reports:
        if r.status == STATUS_FAIL:
            return 1
        if strict and r.status == STATUS_REPORT and r.mismatch:
            return 1
    return 0
