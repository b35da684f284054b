"""Hilbert functions, socles, lengths, types and the Gorenstein / level /
stretched / short classification of Artinian quotients.

The classification works through the filtration by powers of the maximal
ideal, computed with multiplication matrices on the standard-monomial
basis.  For homogeneous ideals this agrees with the graded Hilbert
function; for the inhomogeneous truncated ideals built by the
constructions module it yields the correct local invariants, which the
leading-term ideal alone does not (a high-degree leading term can hide a
low-degree initial form).
"""

from dataclasses import dataclass
from math import comb

from .poly import Polynomial, PolynomialRing, substitute
from .groebner import (
    DEFAULT_STEP_BUDGET,
    GroebnerBasis,
    Ideal,
    _Budget,
    _reduce_terms,
    buchberger,
    is_zero_dimensional,
    normal_form,
    standard_monomials_packed,
)


class SocleLawError(RuntimeError):
    """Internal consistency failure: a socle quotient changed the Hilbert
    function somewhere other than the socle element's degree."""


@dataclass(frozen=True)
class HilbertFunction:
    """Hilbert function values (HF(0), ..., HF(s)) of an Artinian quotient."""

    values: tuple

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError(f"Hilbert function must start with 1, got {self.values}")
        if any(v <= 0 for v in self.values):
            raise ValueError(f"Hilbert function has a nonpositive entry: {self.values}")

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    @property
    def length(self) -> int:
        return sum(self.values)

    @property
    def embedding_dimension(self) -> int:
        return self.values[1] if len(self.values) > 1 else 0

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i] if 0 <= i < len(self.values) else 0

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class SocleElement:
    poly: Polynomial
    degree: int  # largest d with the element inside the d-th power of the maximal ideal


@dataclass(frozen=True)
class InvariantReport:
    hf: HilbertFunction
    length: int
    c: int
    s: int
    tau: int
    gorenstein: bool
    level: bool
    stretched: bool
    short: bool
    socle_degrees: tuple  # sorted multiset
    socle: tuple  # SocleElement basis

    def to_text(self) -> str:
        lines = [
            f"hf: {' '.join(str(v) for v in self.hf.values)}",
            f"lambda: {self.length}",
            f"c: {self.c}",
            f"s: {self.s}",
            f"tau: {self.tau}",
            f"gorenstein: {str(self.gorenstein).lower()}",
            f"level: {str(self.level).lower()}",
            f"stretched: {str(self.stretched).lower()}",
            f"short: {str(self.short).lower()}",
            f"socle_degrees: {' '.join(str(d) for d in self.socle_degrees)}",
        ]
        return "\n".join(lines)


# -- small dense linear algebra over GF(p) -----------------------------------


def _rref(rows, ncols, field):
    """Reduced row echelon form; returns (pivot columns, reduced nonzero rows)."""
    p = field.p
    work = [list(r) for r in rows if any(r)]
    pivots = []
    reduced = []
    for col in range(ncols):
        pr = None
        for idx, r in enumerate(work):
            if r[col]:
                pr = work.pop(idx)
                break
        if pr is None:
            continue
        ci = field.inv(pr[col])
        pr = [c * ci % p for c in pr]
        for rs in (work, reduced):
            for i, r in enumerate(rs):
                c = r[col]
                if c:
                    rs[i] = [(a - c * b) % p for a, b in zip(r, pr)]
        work = [r for r in work if any(r)]
        pivots.append(col)
        reduced.append(pr)
    return pivots, reduced


def _reduce_vector(vec, pivots, rows, p):
    v = list(vec)
    for col, row in zip(pivots, rows):
        c = v[col]
        if c:
            v = [(a - c * b) % p for a, b in zip(v, row)]
    return v


def _nullspace(rows, ncols, field):
    """Basis of the right kernel of the matrix given by rows."""
    p = field.p
    pivots, red = _rref(rows, ncols, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for col, row in zip(pivots, red):
            vec[col] = (-row[free]) % p
        basis.append(vec)
    return basis


# -- the filtration engine -----------------------------------------------------


class _QuotientStructure:
    """Standard-monomial model of an Artinian quotient: multiplication
    matrices and the filtration by powers of the maximal ideal."""

    def __init__(self, gb: GroebnerBasis, budget: int = DEFAULT_STEP_BUDGET):
        if not is_zero_dimensional(gb):
            raise ValueError("the quotient is not Artinian (ideal not zero-dimensional)")
        self.gb = gb
        self.ring = gb.ring
        levels = standard_monomials_packed(gb)
        self.basis = [m for level in levels for m in reversed(level)]
        if not self.basis:
            raise ValueError("the quotient is the zero ring")
        self.n = len(self.basis)
        self.pos = {m: i for i, m in enumerate(self.basis)}
        self._budget = _Budget(budget)
        self._columns = self._multiplication_columns()
        self._filtration = self._power_filtration()

    def nf_vector(self, f: Polynomial) -> list:
        red = _reduce_terms(self.ring, f.terms, self.gb.index(), self._budget)
        vec = [0] * self.n
        for m, c in red.items():
            vec[self.pos[m]] = c
        return vec

    def _multiplication_columns(self):
        ring = self.ring
        shift = ring._deg_shift
        columns = []
        for j in range(ring.nvars):
            unit = (1 << (8 * j)) + (1 << shift)
            cols = []
            for s in self.basis:
                mm = s + unit
                red = _reduce_terms(
                    ring, [(ring.key(mm), mm, 1)], self.gb.index(), self._budget
                )
                vec = [0] * self.n
                for m, c in red.items():
                    vec[self.pos[m]] = c
                cols.append(vec)
            columns.append(cols)
        return columns

    def _power_filtration(self):
        """RREFs of the images of the powers of the maximal ideal."""
        field = self.ring.field
        p = field.p
        spaces = []
        current = [vec for cols in self._columns for vec in cols]
        while True:
            pivots, rows = _rref(current, self.n, field)
            if not rows:
                break
            spaces.append((pivots, rows))
            nxt = []
            for row in rows:
                for cols in self._columns:
                    out = [0] * self.n
                    for i, z in enumerate(row):
                        if z:
                            col = cols[i]
                            for t in range(self.n):
                                if col[t]:
                                    out[t] = (out[t] + z * col[t]) % p
                    if any(out):
                        nxt.append(out)
            current = nxt
        return spaces  # spaces[d-1] spans the image of the d-th power

    @property
    def socle_degree(self) -> int:
        return len(self._filtration)

    def hilbert_function(self) -> HilbertFunction:
        dims = [self.n] + [len(rows) for _, rows in self._filtration] + [0]
        return HilbertFunction(tuple(dims[d] - dims[d + 1] for d in range(len(dims) - 1)))

    def filtration_degree(self, vec) -> int:
        """Largest d with the vector inside the image of the d-th power."""
        p = self.ring.field.p
        d = 0
        for pivots, rows in self._filtration:
            if any(_reduce_vector(vec, pivots, rows, p)):
                return d
            d += 1
        return d

    def socle_kernel(self):
        """Kernel of multiplication by every variable, as coordinate vectors."""
        rows = []
        for cols in self._columns:
            for t in range(self.n):
                rows.append([cols[i][t] for i in range(self.n)])
        return _nullspace(rows, self.n, self.ring.field)

    def socle_elements(self):
        """Socle basis adapted to the power filtration, with degree tags."""
        field = self.ring.field
        p = field.p
        kernel = self.socle_kernel()
        tagged = []
        seen_pivots, seen_rows = [], []

        def try_add(vec, degree):
            rem = _reduce_vector(vec, seen_pivots, seen_rows, p)
            if not any(rem):
                return
            col = next(i for i, c in enumerate(rem) if c)
            ci = field.inv(rem[col])
            row = [c * ci % p for c in rem]
            seen_pivots.append(col)
            seen_rows.append(row)
            tagged.append((vec, degree))

        for d in range(len(self._filtration), 0, -1):
            pivots, rows = self._filtration[d - 1]
            # socle vectors inside the d-th power: solve within the kernel span
            coords = []
            for kv in kernel:
                coords.append(_reduce_vector(kv, pivots, rows, p))
            mat = [[coords[k][t] for k in range(len(kernel))] for t in range(self.n)]
            for combo in _nullspace(mat, len(kernel), field):
                vec = [0] * self.n
                for k, a in enumerate(combo):
                    if a:
                        for t in range(self.n):
                            vec[t] = (vec[t] + a * kernel[k][t]) % p
                try_add(vec, d)
        for kv in kernel:
            try_add(kv, 0)
        tagged.sort(key=lambda t: t[1])
        out = []
        for vec, d in tagged:
            poly = self.ring.poly({self.basis[i]: c for i, c in enumerate(vec) if c})
            out.append(SocleElement(poly, d))
        return out


# -- public operations ----------------------------------------------------------


def hilbert_function(gb: GroebnerBasis) -> HilbertFunction:
    """Standard-monomial counts per degree (the Hilbert function of the
    quotient by the leading-term ideal)."""
    levels = standard_monomials_packed(gb)
    if not levels:
        raise ValueError("the quotient is the zero ring")
    return HilbertFunction(tuple(len(level) for level in levels))


def length(gb: GroebnerBasis) -> int:
    """Length of the Artinian quotient, i.e. the standard-monomial count."""
    return sum(len(level) for level in standard_monomials_packed(gb))


def socle(gb: GroebnerBasis, budget: int = DEFAULT_STEP_BUDGET):
    """Basis of the socle (annihilator of the maximal ideal), each element
    tagged with its filtration degree."""
    return _QuotientStructure(gb, budget).socle_elements()


def classify(gb: GroebnerBasis, budget: int = DEFAULT_STEP_BUDGET) -> InvariantReport:
    """Full invariant report of an Artinian quotient."""
    q = _QuotientStructure(gb, budget)
    hf = q.hilbert_function()
    soc = q.socle_elements()
    degrees = tuple(sorted(e.degree for e in soc))
    s = hf.socle_degree
    c = hf.embedding_dimension
    tau = len(soc)
    stretched = s >= 1 and all(hf[i] == 1 for i in range(2, s + 1))
    short = all(hf[j] == comb(c - 1 + j, j) for j in range(s))
    return InvariantReport(
        hf=hf,
        length=hf.length,
        c=c,
        s=s,
        tau=tau,
        gorenstein=(tau == 1),
        level=all(d == s for d in degrees),
        stretched=stretched,
        short=short,
        socle_degrees=degrees,
        socle=tuple(soc),
    )


def quotient_by_socle_element(
    gb: GroebnerBasis, f: Polynomial, budget: int = DEFAULT_STEP_BUDGET
) -> GroebnerBasis:
    """Basis of (ideal + f) for a socle element f; the Hilbert function must
    drop by exactly one at the element's degree, and this law is re-checked."""
    ring = gb.ring
    nf = normal_form(f, gb, budget)
    if nf.is_zero():
        raise ValueError("the element already lies in the ideal")
    for name in ring.vars:
        if not normal_form(ring.var(name) * nf, gb, budget).is_zero():
            raise ValueError("the element is not in the socle")
    q = _QuotientStructure(gb, budget)
    j = q.filtration_degree(q.nf_vector(nf))
    old_hf = q.hilbert_function()
    new_gb = buchberger(Ideal(ring, list(gb.elements) + [f]), budget=budget)
    new_hf = _QuotientStructure(new_gb, budget).hilbert_function()
    expected = list(old_hf.values)
    expected[j] -= 1
    while expected and expected[-1] == 0:
        expected.pop()
    if tuple(expected) != new_hf.values:
        raise SocleLawError(
            f"quotient by a degree-{j} socle element moved the Hilbert function "
            f"from {old_hf} to {new_hf}"
        )
    return new_gb


def eliminate_linear_forms(ideal: Ideal):
    """Remove the linear forms of a homogeneous ideal by substitution.

    Gaussian elimination on the degree-1 generators picks pivot variables,
    each of which is substituted away from every other generator.  Returns
    the ideal in the smaller ring and the number of eliminated variables.
    """
    ring = ideal.ring
    field = ring.field
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise ValueError("eliminate_linear_forms needs a homogeneous ideal")
    linear = [g for g in ideal.generators if g.degree == 1]
    rest = [g for g in ideal.generators if g.degree != 1]
    if not linear:
        return ideal, 0
    rows = []
    for g in linear:
        row = [0] * ring.nvars
        for _, m, c in g.terms:
            exps = ring.unpack(m)
            row[exps.index(1)] = c
        rows.append(row)
    pivots, red = _rref(rows, ring.nvars, field)
    remaining = [ring.vars[j] for j in range(ring.nvars) if j not in set(pivots)]
    if not remaining:
        raise ValueError(
            "an ideal needs at least one nonzero generator "
            "(the linear forms span every variable)"
        )
    new_ring = PolynomialRing(field, remaining, ring.order)
    assignment = {name: new_ring.var(name) for name in remaining}
    p = field.p
    for col, row in zip(pivots, red):
        expr = new_ring.zero
        for j in range(ring.nvars):
            if j != col and row[j]:
                expr = expr - new_ring.var(ring.vars[j]).scale(row[j])
        assignment[ring.vars[col]] = expr
    images = [substitute(g, assignment) for g in rest]
    return Ideal(new_ring, images), len(pivots)
