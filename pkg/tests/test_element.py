"""Group arithmetic, validation, canonical interval maps, serialization."""

import random

import pytest

from tcircle import (
    CircleElement,
    Dyadic,
    IntervalMap,
    canonical_dpl,
    canonical_dpl_through,
    identity,
    make_element,
    pseudo_rotation,
    random_element,
)
from tcircle.errors import DomainError, InvalidElementError
import tcircle.element

from conftest import random_dyadic


def test_make_element_examples():
    g2 = make_element([("0", "1/2"), ("1/2", "1")])
    assert g2 == pseudo_rotation(2)
    assert make_element([(0, 0)]) == identity()
    with pytest.raises(InvalidElementError):
        make_element([("0", "0"), ("1/2", "3/8")])  # slope 3/4


def test_make_element_rejections():
    with pytest.raises(InvalidElementError):
        make_element([("1/4", "1/2")])  # missing anchor at 0
    with pytest.raises(InvalidElementError):
        make_element([("0", "1/2"), ("1/2", "1/4")])  # decreasing values
    with pytest.raises(InvalidElementError):
        make_element([("0", "3/2")])  # value at 0 outside [0, 1)
    with pytest.raises(InvalidElementError):
        make_element([("0", "0"), ("1/3", "1/2")])  # non-dyadic breakpoint
    with pytest.raises(InvalidElementError):
        make_element([("0", 0.5)])  # floats are banned


def test_evaluate_examples():
    g3 = pseudo_rotation(3)
    assert g3(Dyadic.parse("1/2")) == Dyadic.parse("3/4")
    assert g3(Dyadic.parse("7/8")) == Dyadic.parse("1/4")
    x = Dyadic.parse("5/16")
    assert identity()(x) == x


def test_compose_examples():
    g2, g3 = pseudo_rotation(2), pseudo_rotation(3)
    assert g2 * g2 == identity()
    a = random_element(11, 2)
    assert identity() * a == a
    assert a * identity() == a
    sq = g3 * g3
    assert sq(Dyadic(0)) == Dyadic.parse("3/4")  # rotation number 2/3 starts here
    assert sq == g3**2


def test_inverse_examples():
    g2, g3 = pseudo_rotation(2), pseudo_rotation(3)
    assert g2.inverse() == g2
    assert g3.inverse() == g3**2
    assert identity().inverse() == identity()


def test_power_examples():
    g5 = pseudo_rotation(5)
    assert g5**5 == identity()
    g = random_element(13, 2)
    assert g**1 == g
    assert g**0 == identity()
    assert g**-2 == (g.inverse()) * (g.inverse())


def test_equality_representation_invariance():
    g3 = pseudo_rotation(3)
    padded = make_element([("0", "1/2"), ("1/4", "5/8"), ("1/2", "3/4"), ("3/4", "1")])
    assert padded == g3
    assert pseudo_rotation(2)**2 == identity()
    assert pseudo_rotation(2) != g3


def test_pseudo_rotation_structure():
    assert pseudo_rotation(1) == identity()
    g3 = pseudo_rotation(3)
    xs = [str(x) for x, _ in g3.breakpoints]
    ys = [str(y) for _, y in g3.breakpoints]
    assert xs == ["0", "1/2", "3/4"] and ys == ["1/2", "3/4", "1"]
    assert g3._slopes == [-1, 0, 1]
    with pytest.raises(DomainError):
        pseudo_rotation(0)


def test_group_axioms_on_random_triples():
    rng = random.Random(99)
    for _ in range(12):
        a = random_element(rng.randrange(2**32), 2)
        b = random_element(rng.randrange(2**32), 2)
        c = random_element(rng.randrange(2**32), 2)
        assert (a * b) * c == a * (b * c)
        assert a * identity() == a == identity() * a
        assert a * a.inverse() == identity() == a.inverse() * a


def test_closure_and_lift_equivariance():
    rng = random.Random(7)
    for _ in range(10):
        g = random_element(rng.randrange(2**32), 3)
        h = random_element(rng.randrange(2**32), 2)
        for out in (g * h, g.inverse()):
            # re-validates all structural membership invariants
            CircleElement(out.pairs)
        x = random_dyadic(rng)
        assert g.lift(x + 1) == g.lift(x) + 1
        assert (g * h)(x) == g(h(x))


def test_canonical_dpl_examples():
    one = canonical_dpl(("0", "1"), ("0", "1"))
    assert one == IntervalMap([("0", "0"), ("1", "1")])
    aff = canonical_dpl(("0", "1/2"), ("0", "1"))
    assert aff == IntervalMap([("0", "0"), ("1/2", "1")])
    two = canonical_dpl(("0", "3/4"), ("0", "1"))
    assert two.nodes == IntervalMap([("0", "0"), ("1/2", "1/2"), ("3/4", "1")]).nodes
    with pytest.raises(DomainError):
        canonical_dpl(("0", "0"), ("0", "1"))


def test_canonical_dpl_round_trip():
    rng = random.Random(31)
    for _ in range(25):
        a = random_dyadic(rng, 6)
        b = a + Dyadic(rng.randrange(1, 64), 6)
        c = random_dyadic(rng, 6)
        d = c + Dyadic(rng.randrange(1, 64), 6)
        m = canonical_dpl((a, b), (c, d))
        ident = IntervalMap([(a, a), (b, b)])
        assert m.inverse() * m == ident
        assert canonical_dpl((a, b), (a, b)) == ident


def test_canonical_dpl_through():
    m = canonical_dpl_through(["0", "1/4", "1"], ["0", "1/2", "3/4"])
    assert m.at(Dyadic.parse("1/4")) == Dyadic.parse("1/2")
    assert m.src == (Dyadic(0), Dyadic(1))
    assert m.dst == (Dyadic(0), Dyadic.parse("3/4"))


def test_random_element_contract(monkeypatch):
    assert random_element(123, 4) == random_element(123, 4)
    assert random_element(123, 4) != random_element(124, 4)
    g = random_element(55, 5)
    CircleElement(g.pairs)  # validates
    monkeypatch.setattr(tcircle.element, "_random_factor", lambda rng: pseudo_rotation(3))
    assert random_element(0, 1) == pseudo_rotation(3)


def test_json_round_trip():
    rng = random.Random(613)
    for _ in range(20):
        g = random_element(rng.randrange(2**32), 3)
        text = g.to_json()
        back = CircleElement.from_json(text)
        assert back == g
        assert back.to_json() == text


def test_json_rejections():
    with pytest.raises(InvalidElementError):
        CircleElement.from_json('{"bp": [["0", "1/3"]]}')
    with pytest.raises(InvalidElementError):
        CircleElement.from_json('{"points": []}')
    with pytest.raises(InvalidElementError):
        CircleElement.from_json('{"bp": [[0, 0.5]]}')
