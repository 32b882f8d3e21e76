import pytest

from conftest import ii

from icalc import (
    Ideal,
    MonomialOrder,
    PolyRing,
    PrimeField,
    classify,
    cm_probe,
    is_regular_sequence,
    is_system_of_parameters,
    make_ring,
)
from icalc.errors import EmptyRingError, NeedsPrimesError
from icalc.rings import CM, NOT_CM


def test_make_ring_rejects_unit_quotient():
    ring = PolyRing(PrimeField(2), ("X",), MonomialOrder.grevlex())
    with pytest.raises(EmptyRingError):
        make_ring(ring, Ideal(ring, (ring.one(),)))


def test_quotient_dimensions(axes, surface):
    assert axes.qring.dim == 2
    assert axes.qring.prime_dims == (2, 1)
    assert surface.qring.dim == 2
    assert surface.qring.prime_dims == (2, 1)


def test_classify_axes(axes):
    split = classify(axes.qring)
    assert not split.equidimensional
    # only the plane is absolutely minimal
    assert split.absolutely_minimal == (0,)
    assert split.top == axes.P
    assert split.low == axes.Q


def test_classify_surface(surface):
    split = classify(surface.qring)
    assert not split.equidimensional
    assert split.top == surface.P
    assert split.low == surface.Q


def test_classify_equidimensional():
    ring = PolyRing(PrimeField(2), ("X", "Y"), MonomialOrder.grevlex())
    P, Q = ii(ring, "X"), ii(ring, "Y")
    qring = make_ring(ring, P.intersect(Q), primes=(P, Q))
    split = classify(qring)
    assert split.equidimensional
    assert split.absolutely_minimal == (0, 1)


def test_classify_requires_primes(axes):
    bare = make_ring(axes.ring, axes.J)
    with pytest.raises(NeedsPrimesError):
        classify(bare)


def test_system_of_parameters(axes):
    good = is_system_of_parameters(
        axes.qring, (axes.ring.parse("Y"), axes.ring.parse("X - Z"))
    )
    assert good.is_sop
    assert good.count_matches_dim
    assert good.quotient_dim == 0

    short = is_system_of_parameters(axes.qring, (axes.ring.parse("Y"),))
    assert not short.is_sop
    assert not short.count_matches_dim

    bad = is_system_of_parameters(
        axes.qring, (axes.ring.parse("Y"), axes.ring.parse("Z"))
    )
    assert not bad.is_sop
    assert bad.quotient_dim == 1  # the X-axis survives


def test_surface_parameters(surface):
    check = is_system_of_parameters(
        surface.qring, (surface.ring.parse("Z"), surface.ring.parse("X - T"))
    )
    assert check.is_sop


def test_regular_sequence_variable_case():
    ring = PolyRing(PrimeField(3), ("X", "Y", "Z"), MonomialOrder.grevlex())
    qring = make_ring(ring, Ideal(ring, ()))
    report = is_regular_sequence(qring, (ring.parse("X"), ring.parse("Y")))
    assert report.regular
    assert report.first_failure == -1


def test_regular_sequence_detects_zerodivisor(axes):
    # Y kills X in the axes ring
    report = is_regular_sequence(
        axes.qring, (axes.ring.parse("Y"), axes.ring.parse("X - Z"))
    )
    assert not report.regular
    assert report.first_failure == 0


def test_regular_sequence_properness():
    ring = PolyRing(PrimeField(2), ("X",), MonomialOrder.grevlex())
    qring = make_ring(ring, Ideal(ring, ()))
    report = is_regular_sequence(qring, (ring.parse("X"), ring.parse("X + 1")))
    assert not report.regular
    assert not report.proper


def test_cm_probe_on_surface_components(surface):
    # the toric surface is not Cohen-Macaulay; the line is
    probe_p = cm_probe(make_ring(surface.ring, surface.P))
    assert probe_p.verdict == NOT_CM
    assert probe_p.failing_step >= 0
    probe_q = cm_probe(make_ring(surface.ring, surface.Q))
    assert probe_q.verdict == CM


def test_cm_probe_is_graded_backed_on_the_surface(surface):
    # weighted-homogeneous data keeps the verdict non-heuristic
    probe = cm_probe(make_ring(surface.ring, surface.P))
    assert not probe.heuristic


def test_cm_probe_polynomial_ring():
    ring = PolyRing(PrimeField(2), ("X", "Y"), MonomialOrder.grevlex())
    probe = cm_probe(make_ring(ring, Ideal(ring, ())))
    assert probe.verdict == CM
    assert not probe.heuristic


def test_cm_probe_dimension_zero():
    ring = PolyRing(PrimeField(2), ("X", "Y"), MonomialOrder.grevlex())
    probe = cm_probe(make_ring(ring, ii(ring, "X", "Y^2")))
    assert probe.verdict == CM


def test_cm_probe_accepts_explicit_sop(axes):
    probe = cm_probe(axes.qring, sop=(axes.ring.parse("Y"), axes.ring.parse("X - Z")))
    assert probe.verdict == NOT_CM
    assert probe.failing_step == 0
