"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's optimized paths: order
comparison straight from the definitions, standard-monomial counts by raw
divisibility filtering, and vanishing ideals by solving the full evaluation
system degree by degree.
"""

import pytest

from conormal import PrimeField, PolynomialRing


@pytest.fixture
def gf7():
    return PrimeField(7)


@pytest.fixture
def ring_xy(gf7):
    return PolynomialRing(gf7, ["x", "y"])


@pytest.fixture
def ring_xyz(gf7):
    return PolynomialRing(gf7, ["x", "y", "z"])


# -- order oracle: literal definitions on exponent tuples ----------------------


def oracle_compare(a, b, kind):
    """Definition-level comparison: no packing, no keys."""
    diffs = [x - y for x, y in zip(a, b)]
    if all(d == 0 for d in diffs):
        return 0
    if kind in ("degrevlex", "deglex"):
        da, db = sum(a), sum(b)
        if da != db:
            return 1 if da > db else -1
    if kind == "degrevlex":
        last = next(d for d in reversed(diffs) if d != 0)
        return 1 if last < 0 else -1
    first = next(d for d in diffs if d != 0)
    return 1 if first > 0 else -1


def exponents_up_to(nvars, max_degree):
    """Every exponent tuple of total degree at most max_degree."""
    out = [[]]
    for _ in range(nvars):
        out = [prefix + [e] for prefix in out for e in range(max_degree + 1)]
    return [tuple(t) for t in out if sum(t) <= max_degree]


# -- standard monomial oracle for monomial ideals ------------------------------


def monomial_quotient_standard(gen_exponents, nvars, degree_cap=40):
    """Standard monomials of a monomial ideal by raw divisibility filtering.

    Enumerates degree by degree until a degree is empty; no Groebner
    machinery involved.
    """

    def divides(a, b):
        return all(x <= y for x, y in zip(a, b))

    std = []
    d = 0
    while d <= degree_cap:
        level = [
            e
            for e in exponents_up_to(nvars, d)
            if sum(e) == d and not any(divides(g, e) for g in gen_exponents)
        ]
        if d > 0 and not level:
            return std
        std.extend(level)
        d += 1
    raise AssertionError("monomial quotient oracle ran past the degree cap")


# -- one-shot vanishing ideal oracle --------------------------------------------


def oneshot_vanishing_kernels(ps, max_degree):
    """Kernel of the full degree-d evaluation matrix for every d <= max_degree.

    Returns {degree: list of polynomials}, computed by plain Gaussian
    elimination on all monomials at once (no candidate filtering).
    """
    from conormal.invariants import _nullspace

    ring = ps.ring()
    p = ring.field.p
    out = {}
    for d in range(1, max_degree + 1):
        monos = ring.monomials_of_degree(d)
        rows = []
        for pt in ps.points:
            row = []
            for m in monos:
                exps = ring.unpack(m)
                v = 1
                for e, x in zip(exps, pt):
                    if e:
                        v = v * pow(x, e, p) % p
                row.append(v)
            rows.append(row)
        kernel = _nullspace(rows, len(monos), ring.field)
        polys = []
        for vec in kernel:
            polys.append(ring.poly({monos[k]: c for k, c in enumerate(vec) if c}))
        out[d] = polys
    return out


def count_standard_of_degree(gb, d):
    """Degree-d monomials outside the leading-term ideal, by raw filtering
    (works for non-Artinian ideals, unlike the library path)."""
    ring = gb.ring
    lts = [ring.unpack(m) for m in gb.leading_monomials()]

    def divides(a, b):
        return all(x <= y for x, y in zip(a, b))

    count = 0
    for e in exponents_up_to(ring.nvars, d):
        if sum(e) == d and not any(divides(g, e) for g in lts):
            count += 1
    return count
