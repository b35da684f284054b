"""Artinian reductions by random linear forms, multiplicity extraction, and
the Cohen-Macaulayness verdict for the square of a points ideal.

The verdict logic: for a one-dimensional generically-complete-intersection
ideal, the multiplicity of the square is (c+1) times that of the ideal, and
the length of any Artinian reduction of the square is at least that number,
with equality exactly when some linear form is regular on the quotient.
A trial form achieving equality therefore certifies CM; consistently larger
lengths over all trials give a probabilistic NotCM.
"""

import hashlib
import random
from dataclasses import dataclass
from math import comb

from .field import PrimeField
from .poly import Polynomial, PolynomialRing, random_linear_form
from .groebner import (
    BudgetExceededError,
    DEFAULT_STEP_BUDGET,
    GroebnerBasis,
    Ideal,
    buchberger,
    ideal_square,
    is_zero_dimensional,
    normal_form,
)
from .invariants import (
    InvariantReport,
    classify,
    eliminate_linear_forms,
    length,
)
from . import criteria as crit

DEFAULT_TRIALS = 5


class CriteriaAgreementError(RuntimeError):
    """A closed-form NotCM criterion contradicted a computed CM certificate."""


def derive_seed(*parts) -> int:
    """Deterministic labeled sub-seed (stable across platforms and runs)."""
    data = ":".join(str(p) for p in parts).encode()
    return int.from_bytes(hashlib.sha256(data).digest()[:8], "big")


@dataclass(frozen=True)
class CmVerdict:
    status: str  # CM | NotCM | Inconclusive
    witness: object  # the certifying linear form when CM
    trials: int
    lambda_min: object  # smallest observed reduction length, None if no trial finished
    e_expected: int
    lambdas: tuple = ()
    detail: str = ""

    def __post_init__(self):
        if self.status not in ("CM", "NotCM", "Inconclusive"):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "CM" and self.lambda_min != self.e_expected:
            raise ValueError("CM verdict without a length witness")
        if self.status == "NotCM" and not (
            self.lambda_min is not None and self.lambda_min > self.e_expected
        ):
            raise ValueError("NotCM verdict needs every trial above the target")

    @property
    def exit_code(self) -> int:
        return {"CM": 0, "NotCM": 1, "Inconclusive": 2}[self.status]


@dataclass(frozen=True)
class AnalysisReport:
    invariants: InvariantReport
    e: int
    q: object  # quadric generator count of the reduction, None if not computed
    cm_square: object  # CmVerdict, or None for an Artinian input
    criteria: tuple  # (name, CriteriaVerdict) pairs
    agreement: bool
    p: int
    seed: object
    trials: int
    budget: int
    source: str
    version: str = ""

    def to_text(self) -> str:
        lines = [
            f"source: {self.source}",
            f"version: {self.version}",
            f"p: {self.p}",
            f"seed: {self.seed}",
            f"trials: {self.trials}",
            f"budget: {self.budget}",
            f"e: {self.e}",
            f"q: {self.q if self.q is not None else 'n/a'}",
        ]
        lines.append(self.invariants.to_text())
        if self.cm_square is None:
            lines.append("cm_square: n/a")
        else:
            v = self.cm_square
            lines.append(f"cm_square: {v.status}")
            lines.append(f"cm_lambda_min: {v.lambda_min}")
            lines.append(f"cm_e_expected: {v.e_expected}")
            lines.append(f"cm_trials: {v.trials}")
            lines.append(f"cm_witness: {v.witness if v.witness is not None else 'n/a'}")
            if v.detail:
                lines.append(f"cm_detail: {v.detail}")
        for name, verdict in self.criteria:
            lines.append(f"criterion {name}: {verdict.to_text()}")
        lines.append(f"agreement: {str(self.agreement).lower()}")
        return "\n".join(lines)


def _trial_forms(ring, seed, label, trials):
    return [
        random_linear_form(ring, derive_seed(seed, label, t)) for t in range(trials)
    ]


def artinian_reduction(
    gb: GroebnerBasis,
    seed,
    trials: int = DEFAULT_TRIALS,
    budget: int = DEFAULT_STEP_BUDGET,
):
    """Quotient by the best of `trials` random linear forms.

    Returns (basis of I + l, length) for the form with the smallest length;
    for a one-dimensional Cohen-Macaulay quotient that minimum is the
    multiplicity, achieved by any regular form.
    """
    if is_zero_dimensional(gb):
        raise ValueError("the ideal is already zero-dimensional; nothing to reduce")
    ring = gb.ring
    best = None
    for ell in _trial_forms(ring, seed, "reduction", trials):
        cand = buchberger(Ideal(ring, list(gb.elements) + [ell]), budget=budget)
        if not is_zero_dimensional(cand):
            continue
        lam = length(cand)
        if best is None or lam < best[1]:
            best = (cand, lam)
    if best is None:
        raise RuntimeError(
            f"no Artinian reduction found in {trials} trials; "
            "the ideal may have dimension above 1"
        )
    return best


def multiplicity(
    gb: GroebnerBasis,
    seed=0,
    trials: int = DEFAULT_TRIALS,
    budget: int = DEFAULT_STEP_BUDGET,
) -> int:
    """Multiplicity of a quotient of dimension at most 1: the length itself
    when Artinian, otherwise the smallest reduction length over the trials."""
    if is_zero_dimensional(gb):
        return length(gb)
    return artinian_reduction(gb, seed, trials, budget)[1]


def is_cm_square(
    gb: GroebnerBasis,
    seed=0,
    trials: int = DEFAULT_TRIALS,
    budget: int = DEFAULT_STEP_BUDGET,
    e_hint: int = None,
) -> CmVerdict:
    """Cohen-Macaulayness of R/I^2 for a one-dimensional homogeneous ideal.

    Computes the square from the basis elements and, per trial, the length
    of the quotient by square plus linear form.  Equality with (c+1)*e
    certifies CM at once; all trials strictly above give NotCM; budget
    exhaustion gives Inconclusive.
    """
    ring = gb.ring
    if is_zero_dimensional(gb):
        raise ValueError("is_cm_square needs a one-dimensional ideal")
    for g in gb.elements:
        if not g.is_homogeneous():
            raise ValueError("is_cm_square needs a homogeneous ideal")
    c = ring.nvars - 1  # height of a points ideal
    try:
        e = e_hint if e_hint is not None else multiplicity(gb, seed, trials, budget)
    except BudgetExceededError as exc:
        return CmVerdict(
            "Inconclusive", None, 0, None, 0, (),
            f"budget exhausted while computing the multiplicity: {exc}",
        )
    e_expected = (c + 1) * e
    sq = ideal_square(gb.as_ideal())
    lambdas = []
    lam_min = None
    used = 0
    try:
        for ell in _trial_forms(ring, seed, "square", trials):
            used += 1
            cand = buchberger(Ideal(ring, list(sq.generators) + [ell]), budget=budget)
            if not is_zero_dimensional(cand):
                continue
            lam = length(cand)
            lambdas.append(lam)
            if lam < e_expected:
                raise RuntimeError(
                    f"internal inconsistency: reduction length {lam} fell below "
                    f"the multiplicity bound {e_expected}"
                )
            if lam_min is None or lam < lam_min:
                lam_min = lam
            if lam == e_expected:
                return CmVerdict("CM", ell, used, lam_min, e_expected, tuple(lambdas))
    except BudgetExceededError as exc:
        return CmVerdict(
            "Inconclusive", None, used, lam_min, e_expected, tuple(lambdas), str(exc)
        )
    if lam_min is None:
        return CmVerdict(
            "Inconclusive", None, used, None, e_expected, (),
            "every trial form was degenerate",
        )
    return CmVerdict("NotCM", None, used, lam_min, e_expected, tuple(lambdas))


def _quadric_generator_count(art_gb: GroebnerBasis, report: InvariantReport):
    """Degree-2 elements of the reduced basis of the non-degenerate Artinian
    reduction; cross-checked against the Hilbert function when s = 2."""
    count = sum(1 for g in art_gb.elements if g.degree == 2)
    if report.s == 2:
        expected = comb(report.c + 1, 2) - report.hf[2]
        if count != expected:
            raise RuntimeError(
                f"quadric generator count {count} disagrees with the Hilbert "
                f"function prediction {expected}"
            )
    return count


def analyze(
    gb: GroebnerBasis,
    seed=0,
    trials: int = DEFAULT_TRIALS,
    budget: int = DEFAULT_STEP_BUDGET,
    source: str = "",
    point_count: int = None,
    version: str = "",
) -> AnalysisReport:
    """Full report: invariants of the Artinian reduction, quadric count,
    CM verdict for the square, and every applicable closed-form criterion,
    with a hard cross-check that no NotCM criterion contradicts a CM verdict.
    """
    ring = gb.ring
    if is_zero_dimensional(gb):
        art_gb = gb
        if all(g.is_homogeneous() for g in gb.elements) and any(
            g.degree == 1 for g in gb.elements
        ):
            smaller, _ = eliminate_linear_forms(gb.as_ideal())
            art_gb = buchberger(smaller, budget=budget)
        report = classify(art_gb, budget)
        e = report.length
        cm = None
    else:
        red_gb, e = artinian_reduction(gb, seed, trials, budget)
        if point_count is not None and e != point_count:
            raise RuntimeError(
                f"multiplicity {e} disagrees with the point count {point_count}"
            )
        if len(red_gb.elements) == ring.nvars and all(
            g.degree == 1 for g in red_gb.elements
        ):
            # the reduction is the base field (a single point); model it as
            # the quotient of a one-variable ring by its variable
            one_var = PolynomialRing(ring.field, ["t"], ring.order)
            art_gb = buchberger(Ideal(one_var, [one_var.var("t")]), budget=budget)
        else:
            smaller, _ = eliminate_linear_forms(Ideal(ring, red_gb.elements))
            art_gb = buchberger(smaller, budget=budget)
        report = classify(art_gb, budget)
        cm = is_cm_square(gb, seed, trials, budget, e_hint=e)
    q = None
    if all(g.is_homogeneous() for g in art_gb.elements):
        q = _quadric_generator_count(art_gb, report)

    checks = []
    if report.s == 2 and report.c >= 3 and q is not None:
        checks.append(
            ("quadric-count", crit.quadric_count_verdict(report.c, q, report.gorenstein))
        )
    if report.c >= 1 and e > report.c:
        checks.append(("low-multiplicity", crit.low_multiplicity_verdict(report.c, e)))
    if report.stretched:
        checks.append(("stretched", crit.stretched_verdict(report.c, report.gorenstein)))
    if report.short and report.s >= 3:
        checks.append(("short", crit.short_socle_verdict(report.c, report.s)))

    contradiction = cm is not None and cm.status == "CM" and any(
        v.outcome == crit.NOT_CM for _, v in checks
    )
    if contradiction:
        raise CriteriaAgreementError(
            "a closed-form NotCM criterion fired while the computation "
            f"certified CM: {[(n, v.to_text()) for n, v in checks]}"
        )
    return AnalysisReport(
        invariants=report,
        e=e,
        q=q,
        cm_square=cm,
        criteria=tuple(checks),
        agreement=not contradiction,
        p=ring.field.p,
        seed=seed,
        trials=trials,
        budget=budget,
        source=source,
        version=version,
    )


def eight_quadrics_square_gap(
    seed, p: int = 31991, count: int = 8, nvars: int = 4,
    budget: int = DEFAULT_STEP_BUDGET,
) -> bool:
    """True iff the square of `count` seeded random quadrics in `nvars`
    variables misses some degree-4 monomial (the square never fills degree 4)."""
    ring = PolynomialRing(PrimeField(p), [f"x{i + 1}" for i in range(nvars)])
    rng = random.Random(derive_seed(seed, "quadrics"))
    quadrics = []
    monos = ring.monomials_of_degree(2)
    while len(quadrics) < count:
        f = ring.poly({m: rng.randrange(p) for m in monos})
        if not f.is_zero():
            quadrics.append(f)
    sq = ideal_square(Ideal(ring, quadrics))
    gb = buchberger(sq, budget=budget)
    return any(
        not normal_form(ring.monomial(m), gb, budget).is_zero()
        for m in ring.monomials_of_degree(4)
    )
