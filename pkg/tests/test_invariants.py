import random

import pytest

from conormal import (
    DEGREVLEX,
    Ideal,
    PolynomialRing,
    PrimeField,
    buchberger,
    ideal_square,
    normal_form,
)
from conormal.invariants import (
    HilbertFunction,
    SocleLawError,
    classify,
    eliminate_linear_forms,
    hilbert_function,
    length,
    quotient_by_socle_element,
    socle,
)
from conormal.constructions import StretchedSpec, stretched_ideal


def test_hilbert_function_basic(ring_xy):
    x, y = ring_xy.gens()
    gb = buchberger(ideal_square(Ideal(ring_xy, [x, y])))
    assert hilbert_function(gb).values == (1, 2)
    ring1 = PolynomialRing(PrimeField(7), ["x"])
    gb1 = buchberger(Ideal(ring1, [ring1.var("x") ** 3]))
    assert hilbert_function(gb1).values == (1, 1, 1)


def test_hilbert_function_validation():
    with pytest.raises(ValueError):
        HilbertFunction((2, 1))
    with pytest.raises(ValueError):
        HilbertFunction((1, 0, 1))
    hf = HilbertFunction((1, 3, 1, 1))
    assert hf.socle_degree == 3
    assert hf.length == 6
    assert hf[5] == 0


def test_length_of_squared_maximal_ideal():
    # (x_1, ..., x_c)^2 has colength c + 1 for every c
    for c in range(2, 7):
        ring = PolynomialRing(PrimeField(31991), [f"x{i}" for i in range(c)])
        sq = ideal_square(Ideal(ring, ring.gens()))
        assert length(buchberger(sq)) == c + 1


def test_socle_of_square_of_maximal_ideal(ring_xy):
    x, y = ring_xy.gens()
    gb = buchberger(Ideal(ring_xy, [x ** 2, x * y, y ** 2]))
    elements = socle(gb)
    assert len(elements) == 2
    assert sorted(e.degree for e in elements) == [1, 1]
    assert sorted(str(e.poly) for e in elements) == ["x", "y"]


def test_socle_of_power_of_one_variable():
    ring = PolynomialRing(PrimeField(7), ["x"])
    x = ring.var("x")
    gb = buchberger(Ideal(ring, [x ** 4]))
    elements = socle(gb)
    assert len(elements) == 1
    assert elements[0].degree == 3
    assert str(elements[0].poly) == "x^3"
    report = classify(gb)
    assert report.gorenstein and report.tau == 1


def test_classify_stretched_hf():
    ring = PolynomialRing(PrimeField(31991), ["x1", "x2", "x3"])
    ideal = stretched_ideal(StretchedSpec(3, 3, 2), ring)
    report = classify(buchberger(ideal))
    assert report.hf.values == (1, 3, 1, 1)
    assert report.stretched
    assert report.c == 3 and report.s == 3
    assert report.length == 6 == report.c + report.s


def test_classify_short_truncation():
    # m^4 in four variables: full polynomial growth then zero
    ring = PolynomialRing(PrimeField(7), ["x", "y", "z", "w"])
    gens = [ring.monomial(m) for m in ring.monomials_of_degree(4)]
    report = classify(buchberger(Ideal(ring, gens)))
    assert report.hf.values == (1, 4, 10, 20)
    assert report.short and not report.stretched
    assert report.level


def test_classify_consistency_lambda(ring_xy):
    x, y = ring_xy.gens()
    gb = buchberger(Ideal(ring_xy, [x ** 3, x * y, y ** 2]))
    report = classify(gb)
    assert report.length == report.hf.length == length(gb)
    assert report.tau >= 1
    assert report.gorenstein == (report.tau == 1)


def test_local_vs_graded_hilbert_function():
    # the leading-term ideal of an inhomogeneous stretched ideal overstates
    # degree 2: classify must report the local values
    ring = PolynomialRing(PrimeField(31991), ["x1", "x2", "x3"])
    ideal = stretched_ideal(StretchedSpec(3, 3, 0), ring)
    gb = buchberger(ideal)
    assert hilbert_function(gb).values == (1, 3, 2)  # graded std-monomial counts
    assert classify(gb).hf.values == (1, 3, 1, 1)  # local filtration counts
    assert hilbert_function(gb).length == classify(gb).hf.length == 6


def test_filtration_matches_graded_for_homogeneous():
    rng = random.Random(31)
    field = PrimeField(7)
    for _ in range(15):
        nvars = rng.randrange(2, 4)
        ring = PolynomialRing(field, [f"x{i}" for i in range(nvars)])
        gens = [ring.var(n) ** rng.randrange(2, 4) for n in ring.vars]
        d = rng.randrange(1, 3)
        extra = ring.poly(
            {
                m: rng.randrange(7)
                for m in ring.monomials_of_degree(d)
            }
        )
        if not extra.is_zero():
            gens.append(extra)
        gb = buchberger(Ideal(ring, gens))
        assert classify(gb).hf.values == hilbert_function(gb).values


def test_gorenstein_stretched_socle_is_level():
    # type 1 stretched quotient: single socle element of top local degree
    ring = PolynomialRing(PrimeField(31991), ["x1", "x2", "x3"])
    ideal = stretched_ideal(StretchedSpec(3, 3, 0), ring)
    report = classify(buchberger(ideal))
    assert report.tau == 1 and report.gorenstein
    assert report.socle_degrees == (3,)
    assert report.level


def test_quotient_by_socle_element_degree_one(ring_xy):
    x, y = ring_xy.gens()
    gb = buchberger(Ideal(ring_xy, [x ** 2, x * y, y ** 3]))
    assert hilbert_function(gb).values == (1, 2, 1)
    smaller = quotient_by_socle_element(gb, x)
    assert hilbert_function(smaller).values == (1, 1, 1)


def test_quotient_by_socle_element_top_degree(ring_xy):
    x, y = ring_xy.gens()
    gb = buchberger(Ideal(ring_xy, [x ** 2, x * y, y ** 3]))
    smaller = quotient_by_socle_element(gb, y ** 2)
    assert hilbert_function(smaller).values == (1, 2)


def test_quotient_by_socle_element_errors(ring_xy):
    x, y = ring_xy.gens()
    gb = buchberger(Ideal(ring_xy, [x ** 2, x * y, y ** 3]))
    with pytest.raises(ValueError):
        quotient_by_socle_element(gb, x ** 2)  # already inside
    with pytest.raises(ValueError):
        quotient_by_socle_element(gb, y)  # not a socle element


def test_eliminate_linear_forms(ring_xyz):
    x, y, z = ring_xyz.gens()
    smaller, count = eliminate_linear_forms(Ideal(ring_xyz, [x, y ** 2 + z ** 2]))
    assert count == 1
    assert smaller.ring.vars == ("y", "z")
    assert [str(g) for g in smaller.generators] == ["y^2 + z^2"]


def test_eliminate_without_linear_forms(ring_xyz):
    x, y, z = ring_xyz.gens()
    ideal = Ideal(ring_xyz, [x * y, z ** 2])
    same, count = eliminate_linear_forms(ideal)
    assert count == 0 and same is ideal


def test_eliminate_substitutes_into_higher_degrees(ring_xyz):
    x, y, z = ring_xyz.gens()
    smaller, count = eliminate_linear_forms(Ideal(ring_xyz, [x - y, x * z]))
    assert count == 1
    gb = buchberger(smaller)
    assert normal_form(smaller.ring.parse("y*z"), gb).is_zero()


def test_eliminate_everything_is_rejected(ring_xy):
    x, y = ring_xy.gens()
    with pytest.raises(ValueError):
        eliminate_linear_forms(Ideal(ring_xy, [x + y, x - y]))


def test_eliminate_needs_homogeneous(ring_xy):
    x, y = ring_xy.gens()
    with pytest.raises(ValueError):
        eliminate_linear_forms(Ideal(ring_xy, [x + y ** 2]))
