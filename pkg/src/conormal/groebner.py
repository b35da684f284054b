"""Buchberger's algorithm, normal forms, ideal arithmetic and standard monomials.

The engine uses the normal (degree) selection strategy with Gebauer-Moller
pair elimination.  Every reduction step is charged against a hard budget so
that runaway computations surface as a distinguishable BudgetExceededError,
never as a wrong answer.
"""

import heapq
from bisect import insort

from .poly import Polynomial, PolynomialRing, MonomialOrder

DEFAULT_STEP_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """Raised when a Groebner run exhausts its reduction-step budget."""

    def __init__(self, limit):
        self.limit = limit
        super().__init__(f"reduction step budget of {limit} exceeded")


class _Budget:
    __slots__ = ("remaining", "limit")

    def __init__(self, steps):
        self.remaining = steps
        self.limit = steps

    def charge(self):
        self.remaining -= 1
        if self.remaining < 0:
            raise BudgetExceededError(self.limit)


class Ideal:
    """An ideal given by a nonempty list of nonzero generators in one ring."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring: PolynomialRing, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError(f"generator {g!r} is not a Polynomial")
            if g.ring != ring:
                raise ValueError(f"generator in {g.ring}, expected {ring}")
            if not g.is_zero():
                gens.append(g)
        if not gens:
            raise ValueError("an ideal needs at least one nonzero generator")
        self.ring = ring
        self.generators = tuple(gens)

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators in {self.ring})"

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and other.ring == self.ring
            and other.generators == self.generators
        )

    def __hash__(self):
        return hash((self.ring, self.generators))

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)


def _dedup(polys):
    seen = set()
    out = []
    for f in polys:
        if f.terms not in seen:
            seen.add(f.terms)
            out.append(f)
    return out


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise ValueError("ideal sum across different rings")
    return Ideal(a.ring, _dedup(list(a.generators) + list(b.generators)))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise ValueError("ideal product across different rings")
    return Ideal(a.ring, _dedup([f * g for f in a.generators for g in b.generators]))


def ideal_square(a: Ideal) -> Ideal:
    gens = a.generators
    prods = []
    for i in range(len(gens)):
        gi = gens[i]
        for j in range(i, len(gens)):
            prods.append(gi * gens[j])
    return Ideal(a.ring, _dedup(prods))


class _LtIndex:
    """Reducers ordered by leading-term degree for divisor lookup."""

    __slots__ = ("ring", "entries", "guard", "shift")

    def __init__(self, ring):
        self.ring = ring
        self.entries = []  # (lt degree, lt packed, tail [(mono, coeff)...]), monic
        self.guard = ring._guard
        self.shift = ring._deg_shift

    def add(self, f: Polynomial):
        lt = f.terms[0][1]
        tail = tuple((m, c) for _, m, c in f.terms[1:])
        insort(self.entries, (lt >> self.shift, lt, tail))

    def find(self, m: int):
        g = self.guard
        mg = m | g
        mdeg = m >> self.shift
        for deg, lt, tail in self.entries:
            if deg > mdeg:
                return None
            if (mg - lt) & g == g:
                return lt, tail
        return None


def _reduce_terms(ring, items, index: _LtIndex, budget: _Budget):
    """Full normal form of a term stream against monic reducers.

    Returns the remainder as a {packed monomial: coeff} dict.
    """
    p = ring.field.p
    key = ring.key
    work = {}
    heap = []
    for k, m, c in items:
        prev = work.get(m)
        if prev is None:
            work[m] = c
            heap.append((-k, m))
        else:
            nc = (prev + c) % p
            if nc:
                work[m] = nc
            else:
                del work[m]
    heapq.heapify(heap)
    out = {}
    find = index.find
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        _, m = pop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        hit = find(m)
        if hit is None:
            out[m] = c
            continue
        budget.charge()
        lt, tail = hit
        q = m - lt
        for m2, c2 in tail:
            mm = m2 + q
            prev = work.get(mm)
            if prev is None:
                nc = -c * c2 % p
                if nc:
                    work[mm] = nc
                    push(heap, (-key(mm), mm))
            else:
                nc = (prev - c * c2) % p
                if nc:
                    work[mm] = nc
                else:
                    del work[mm]
    return out


class GroebnerBasis:
    """A reduced Groebner basis: monic elements, no leading term divides another,
    no term of any element lies in the leading-term ideal of the rest."""

    __slots__ = ("ring", "elements", "_index", "_std_cache")

    def __init__(self, ring: PolynomialRing, elements):
        self.ring = ring
        self.elements = tuple(sorted(elements, key=lambda f: f.terms[0][0]))
        self._index = None
        self._std_cache = None

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements in {self.ring})"

    def __len__(self):
        return len(self.elements)

    def index(self) -> _LtIndex:
        if self._index is None:
            idx = _LtIndex(self.ring)
            for f in self.elements:
                idx.add(f)
            self._index = idx
        return self._index

    def leading_monomials(self):
        return [f.terms[0][1] for f in self.elements]

    def as_ideal(self) -> Ideal:
        return Ideal(self.ring, self.elements)

    def to_text(self) -> str:
        lines = [f"order {self.ring.order.kind}"]
        lines.extend(self.ring.format_poly(f) for f in self.elements)
        return "\n".join(lines)


def ring_convert(f: Polynomial, ring: PolynomialRing) -> Polynomial:
    """Move a polynomial to a sibling ring (same field and variables)."""
    if f.ring == ring:
        return f
    if f.ring.field != ring.field or f.ring.vars != ring.vars:
        raise ValueError("rings differ in more than the monomial order")
    return ring._from_packed_dict({m: c for _, m, c in f.terms})


def normal_form(f: Polynomial, gb: GroebnerBasis, budget: int = DEFAULT_STEP_BUDGET) -> Polynomial:
    """The unique normal form of f modulo the basis: no term of the result is
    divisible by any leading monomial, and f - result lies in the ideal."""
    ring = gb.ring
    f = ring_convert(f, ring)
    out = _reduce_terms(ring, f.terms, gb.index(), _Budget(budget))
    return ring._from_packed_dict(out)


def contains(gb: GroebnerBasis, f: Polynomial, budget: int = DEFAULT_STEP_BUDGET) -> bool:
    """Ideal membership: true iff the normal form of f vanishes."""
    return normal_form(f, gb, budget).is_zero()


def _spoly_items(ring, f: Polynomial, g: Polynomial):
    """Term stream of the S-polynomial of two monic polynomials."""
    p = ring.field.p
    key = ring.key
    lt_f = f.terms[0][1]
    lt_g = g.terms[0][1]
    l = ring.mono_lcm(lt_f, lt_g)
    qf = l - lt_f
    qg = l - lt_g
    items = []
    for _, m, c in f.terms[1:]:
        mm = m + qf
        items.append((key(mm), mm, c))
    for _, m, c in g.terms[1:]:
        mm = m + qg
        items.append((key(mm), mm, (-c) % p))
    return items


def _interreduce(ring, polys, budget):
    """Forward-reduce a generating set; cheap preprocessing, same ideal."""
    monos = []
    others = []
    for f in polys:
        (monos if f.is_monomial() else others).append(f)
    index = _LtIndex(ring)
    kept = []
    # minimal monomial generators first: cheap divisibility pruning
    monos.sort(key=lambda f: f.terms[0][0])
    for f in monos:
        if index.find(f.terms[0][1]) is None:
            g = f.monic()
            index.add(g)
            kept.append(g)
    others.sort(key=lambda f: f.terms[0][0])
    for f in others:
        red = _reduce_terms(ring, f.terms, index, budget)
        if red:
            g = ring._from_packed_dict(red).monic()
            index.add(g)
            kept.append(g)
    return kept


def _final_reduce(ring, basis, budget):
    """Minimalize leading terms, then tail-reduce to the unique reduced basis."""
    basis = sorted(basis, key=lambda f: f.terms[0][0])
    minimal = []
    lts = []
    guard = ring._guard
    for f in basis:
        lt = f.terms[0][1]
        ltg = lt | guard
        if any((ltg - l) & guard == guard for l in lts):
            continue
        minimal.append(f)
        lts.append(lt)
    reduced = list(minimal)
    for i, f in enumerate(minimal):
        index = _LtIndex(ring)
        for j, g in enumerate(reduced):
            if j != i:
                index.add(g)
        red = _reduce_terms(ring, f.terms, index, budget)
        reduced[i] = ring._from_packed_dict(red).monic()
    return reduced


def buchberger(
    ideal: Ideal,
    order: MonomialOrder = None,
    budget: int = DEFAULT_STEP_BUDGET,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal under the given (or ring's) order."""
    ring = ideal.ring if order is None else ideal.ring.with_order(order)
    gens = [ring_convert(g, ring) for g in ideal.generators]
    counter = _Budget(budget)
    basis = _interreduce(ring, gens, counter)
    if not basis:
        raise ValueError("ideal reduced to zero generators")

    lcm = ring.mono_lcm
    shift = ring._deg_shift
    key = ring.key

    G = []          # (poly, lt, is_monomial)
    index = _LtIndex(ring)
    pairs = []      # heap of (lcm degree, lcm key, i, j, lcm)

    def update(h):
        """Gebauer-Moller pair update for the new basis element h."""
        lt_h = h.terms[0][1]
        h_mono = h.is_monomial()
        t = len(G)
        new = [(i, lcm(entry[1], lt_h), entry[1] + lt_h) for i, entry in enumerate(G)]
        # drop a new pair if another new pair's lcm properly divides its lcm
        surviving = []
        for i, l, s in new:
            if any(l2 != l and ring.mono_divides(l2, l) for _, l2, _ in new):
                continue
            surviving.append((i, l, s))
        # one representative per lcm class; a class whose S-polynomial is
        # trivially zero (coprime leading terms, or two monomials) is skipped
        by_lcm = {}
        for i, l, s in surviving:
            by_lcm.setdefault(l, []).append((i, s))
        for l, members in by_lcm.items():
            if any(l == s for _, s in members):
                continue
            if h_mono and any(G[i][2] for i, _ in members):
                continue
            i = members[0][0]
            heapq.heappush(pairs, (l >> shift, key(l), i, t, l))
        # criterion F: drop old pairs whose lcm is a proper multiple of lt_h
        kept_old = []
        while pairs:
            entry = heapq.heappop(pairs)
            kept_old.append(entry)
        for entry in kept_old:
            d, k, i, j, l = entry
            if entry[3] == t:
                heapq.heappush(pairs, entry)
                continue
            lt_i = G[i][1]
            lt_j = G[j][1]
            if ring.mono_divides(lt_h, l) and lcm(lt_i, lt_h) != l and lcm(lt_h, lt_j) != l:
                continue
            heapq.heappush(pairs, entry)
        G.append((h, lt_h, h_mono))
        index.add(h)

    for h in basis:
        update(h)

    while pairs:
        _, _, i, j, l = heapq.heappop(pairs)
        f = G[i][0]
        g = G[j][0]
        items = _spoly_items(ring, f, g)
        red = _reduce_terms(ring, items, index, counter)
        if red:
            h = ring._from_packed_dict(red).monic()
            update(h)

    reduced = _final_reduce(ring, [g for g, _, _ in G], counter)
    return GroebnerBasis(ring, reduced)


def verify_groebner(gb: GroebnerBasis, budget: int = DEFAULT_STEP_BUDGET, max_pairs: int = None) -> bool:
    """Post-hoc Buchberger criterion: every S-polynomial reduces to zero and the
    basis is reduced.  Exhaustive for bases of at most 40 elements by default."""
    ring = gb.ring
    els = gb.elements
    for f in els:
        if f.terms[0][2] != 1:
            return False
    lts = [f.terms[0][1] for f in els]
    for i, f in enumerate(els):
        for _, m, _ in f.terms:
            for j, lt in enumerate(lts):
                if ring.mono_divides(lt, m) and not (j == i and m == lts[i]):
                    return False
    n = len(els)
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if max_pairs is None and n > 40:
        max_pairs = 1000
    if max_pairs is not None and len(all_pairs) > max_pairs:
        step = len(all_pairs) // max_pairs
        all_pairs = all_pairs[::step]
    counter = _Budget(budget)
    for i, j in all_pairs:
        items = _spoly_items(ring, els[i], els[j])
        if _reduce_terms(ring, items, gb.index(), counter):
            return False
    return True


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff every variable appears as a pure power among the leading terms."""
    ring = gb.ring
    shift = ring._deg_shift
    mask = ring._exp_mask
    covered = set()
    for lt in gb.leading_monomials():
        exp = lt & mask
        if exp == 0:
            return True  # unit ideal
        deg = lt >> shift
        for j in range(ring.nvars):
            e = (exp >> (8 * j)) & 0xFF
            if e == deg:
                covered.add(j)
                break
    return len(covered) == ring.nvars


def standard_monomials_packed(gb: GroebnerBasis):
    """Packed standard monomials grouped by degree: list of lists, index = degree."""
    if gb._std_cache is not None:
        return gb._std_cache
    if not is_zero_dimensional(gb):
        raise ValueError("standard monomials require a zero-dimensional ideal")
    ring = gb.ring
    guard = ring._guard
    lts = gb.leading_monomials()
    if any((lt & ring._exp_mask) == 0 for lt in lts):
        gb._std_cache = []
        return []  # unit ideal: empty quotient
    by_deg = sorted(lts, key=lambda m: m >> ring._deg_shift)

    def is_standard(m):
        mg = m | guard
        for lt in by_deg:
            if (mg - lt) & guard == guard:
                return False
        return True

    levels = []
    one = 0
    current = [one]
    step = 1 << ring._deg_shift
    while current:
        levels.append(sorted(current, key=ring.key, reverse=True))
        nxt = set()
        for m in current:
            for j in range(ring.nvars):
                mm = m + (1 << (8 * j)) + step
                if mm not in nxt and is_standard(mm):
                    nxt.add(mm)
        current = nxt
    gb._std_cache = levels
    return levels


def standard_monomials(gb: GroebnerBasis):
    """All monomials outside the leading-term ideal, as exponent tuples in
    increasing degree; their count is the length of the quotient."""
    ring = gb.ring
    out = []
    for level in standard_monomials_packed(gb):
        out.extend(ring.unpack(m) for m in level)
    return out
