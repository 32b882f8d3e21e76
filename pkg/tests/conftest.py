"""Shared fixtures: the two quotient-ring families used across the suite."""

from dataclasses import dataclass

import pytest

from icalc import Ideal, MonomialOrder, PolyRing, PrimeField, make_ring


@dataclass
class Avatar:
    ring: PolyRing
    P: Ideal
    Q: Ideal
    J: Ideal
    qring: object


def ii(ring, *texts):
    return Ideal(ring, tuple(ring.parse(t) for t in texts))


@pytest.fixture
def axes():
    """F_2[X, Y, Z] / (XY, XZ): a plane (X=0) joined to a line (Y=Z=0)."""
    ring = PolyRing(PrimeField(2), ("X", "Y", "Z"), MonomialOrder.grevlex())
    P = ii(ring, "X")
    Q = ii(ring, "Y", "Z")
    J = ii(ring, "X*Y", "X*Z")
    return Avatar(ring, P, Q, J, make_ring(ring, J, primes=(P, Q)))


def surface_avatar(p):
    """F_p[T, X, Y, Z] / (P meet Q): toric surface prime against a line."""
    ring = PolyRing(PrimeField(p), ("T", "X", "Y", "Z"), MonomialOrder.grevlex())
    P = ii(ring, "T*Y - X*Z", "T^2*X - Z^2", "T*X^2 - Y*Z", "X^3 - Y^2")
    Q = ii(ring, "T", "X", "Y")
    J = P.intersect(Q)
    return Avatar(ring, P, Q, J, make_ring(ring, J, primes=(P, Q)))


@pytest.fixture
def surface():
    return surface_avatar(2)
