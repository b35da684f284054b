import pytest

from conormal import (
    Ideal,
    PolynomialRing,
    PrimeField,
    buchberger,
    contains,
    ideal_square,
    substitute,
)
from conormal.invariants import classify, length
from conormal.constructions import (
    EXAMPLE61_PRIME,
    StretchedSpec,
    example61_ideal,
    ideal_L,
    polarize,
    stretched_ideal,
    truncation,
)
from conormal import constructions
from conftest import monomial_quotient_standard


def _ring(c, p=31991):
    return PolynomialRing(PrimeField(p), [f"x{i + 1}" for i in range(c)])


def test_spec_validation():
    with pytest.raises(ValueError):
        StretchedSpec(3, 1, 0)
    with pytest.raises(ValueError):
        StretchedSpec(3, 2, 3)
    with pytest.raises(ValueError):
        StretchedSpec(3, 2, -1)
    with pytest.raises(ValueError):
        StretchedSpec(3, 2, 0, units=(1,))
    assert StretchedSpec(3, 2, 0).units == (1, 1)
    assert StretchedSpec(3, 2, 2).units == ()


def test_stretched_top_type():
    ring = _ring(3)
    ideal = stretched_ideal(StretchedSpec(3, 3, 2), ring)
    x1, x2, x3 = ring.gens()
    for needed in (x1 * x1, x1 * x2, x1 * x3, x2 * x2, x2 * x3, x3 ** 4):
        assert any(g == needed for g in ideal.generators)
    report = classify(buchberger(ideal))
    assert report.hf.values == (1, 3, 1, 1)
    assert report.tau == 3


def test_stretched_gorenstein_case():
    ring = _ring(3)
    ideal = stretched_ideal(StretchedSpec(3, 2, 0, units=(1, 1)), ring)
    x1, x2, x3 = ring.gens()
    expected = {x1 * x2, x1 * x3, x2 * x3, x3 ** 2 - x1 ** 2, x3 ** 2 - x2 ** 2}
    assert expected.issubset(set(ideal.generators))
    report = classify(buchberger(ideal))
    assert report.gorenstein and report.tau == 1


def test_stretched_type_two():
    ring = _ring(4)
    ideal = stretched_ideal(StretchedSpec(4, 3, 1), ring)
    report = classify(buchberger(ideal))
    assert report.tau == 2
    assert report.length == 7 == 4 + 3


def test_stretched_needs_matching_ring():
    with pytest.raises(ValueError):
        stretched_ideal(StretchedSpec(3, 2, 0), _ring(4))
    with pytest.raises(ValueError):
        stretched_ideal(StretchedSpec(3, 2, 0, units=(31991, 1)), _ring(3))


def test_ideal_L_smallest_case():
    ring = _ring(2)
    L = ideal_L(2, 2, ring)
    x1, x2 = ring.gens()
    expected = {
        x1 * x1 ** 3, x1 * (x1 ** 2 * x2), x1 * (x1 * x2 ** 2),
        x1 * x2 ** 3, x2 ** 4,
    }
    assert set(L.generators) == {g.monic() for g in expected}


def test_ideal_L_length_against_enumeration_oracle():
    ring = _ring(3)
    L = ideal_L(3, 2, ring)
    gen_exps = [ring.unpack(g.terms[0][1]) for g in L.generators]
    expected = len(monomial_quotient_standard(gen_exps, 3))
    assert length(buchberger(L)) == expected


def test_ideal_L_length_bound_c4_s3():
    ring = _ring(4)
    L = ideal_L(4, 3, ring)
    assert length(buchberger(L)) >= 40


def test_truncation():
    ring2 = _ring(2)
    monos = truncation(ring2, 2)
    assert sorted(str(m) for m in monos) == ["x1*x2", "x1^2", "x2^2"]
    assert len(truncation(_ring(3), 1)) == 3
    assert len(truncation(_ring(6), 3)) == 56
    with pytest.raises(ValueError):
        truncation(ring2, 0)


def test_polarize_single_power():
    ring = PolynomialRing(PrimeField(7), ["x"])
    x = ring.var("x")
    pol, assignment = polarize(Ideal(ring, [x ** 2]))
    assert [str(g) for g in pol.generators] == ["x_0*x_1"]
    assert set(assignment) == {"x_0", "x_1"}
    back = substitute(pol.generators[0], assignment)
    assert back == x ** 2


def test_polarize_two_generators():
    ring = PolynomialRing(PrimeField(7), ["x", "y"])
    x, y = ring.gens()
    pol, assignment = polarize(Ideal(ring, [x ** 2, x * y]))
    assert sorted(str(g) for g in pol.generators) == ["x_0*x_1", "x_0*y_0"]


def test_polarize_round_trip_and_squarefree():
    ring = PolynomialRing(PrimeField(7), ["x", "y"])
    x, y = ring.gens()
    ideal = Ideal(ring, [x ** 3, x * y ** 2])
    pol, assignment = polarize(ideal)
    for g in pol.generators:
        exps = pol.ring.unpack(g.terms[0][1])
        assert all(e <= 1 for e in exps)  # squarefree
    back = [substitute(g, assignment) for g in pol.generators]
    assert back == [g.monic() for g in ideal.generators]


def test_polarize_rejects_non_monomial():
    ring = PolynomialRing(PrimeField(7), ["x", "y"])
    x, y = ring.gens()
    with pytest.raises(ValueError):
        polarize(Ideal(ring, [x + y]))


def test_benchmark_ideal_shape():
    ideal = example61_ideal()
    assert len(ideal.generators) == 15
    degrees = sorted(int(g.degree) for g in ideal.generators)
    assert degrees == [2] * 11 + [3] * 4
    assert all(g.is_homogeneous() for g in ideal.generators)
    assert ideal.ring.field.p == EXAMPLE61_PRIME


def test_benchmark_checksum_guards_the_text(monkeypatch):
    corrupted = constructions._EXAMPLE61_TEXT.replace("2963", "2964")
    monkeypatch.setattr(constructions, "_EXAMPLE61_TEXT", corrupted)
    with pytest.raises(ValueError, match="checksum"):
        example61_ideal()


def test_benchmark_ring_validation():
    wrong_p = PolynomialRing(PrimeField(31991 - 28), list("abcdef"))
    with pytest.raises(ValueError):
        example61_ideal(wrong_p)
    wrong_vars = PolynomialRing(PrimeField(31991), list("uvwxyz"))
    with pytest.raises(ValueError):
        example61_ideal(wrong_vars)


def test_containment_spot_check_c3():
    # square of every stretched ideal sits inside the comparison ideal;
    # equality exactly when r <= c - 3
    ring = _ring(3)
    for r in range(3):
        ideal = stretched_ideal(StretchedSpec(3, 2, r), ring)
        sq = ideal_square(ideal)
        gb_l = buchberger(ideal_L(3, 2, ring))
        assert all(contains(gb_l, g) for g in sq.generators)
        gb_sq = buchberger(sq)
        equal = all(contains(gb_sq, g) for g in gb_l.elements)
        assert equal == (r <= 0)
