"""Tests for the S6 action on component polynomials."""

import random

import pytest

from humbert.poly import DegenerateOnly, MultiPoly, parse_poly
from humbert.s6 import (Perm6, act, all_perms, fixed_group, induced_map,
                        mulclose, orbit, paper_generators)

rng = random.Random(31415)


def test_perm_parse_and_str_round_trip():
    for text in ["(e1,e2)", "(0,e1,e3,inf,e2,1)", "(1,inf)(e1,e2,e3)",
                 "(0,e1)(1,e2)(inf,e3)"]:
        s = Perm6.parse(text)
        assert Perm6.parse(str(s)) == s


def test_group_axioms_randomized():
    perms = all_perms()
    for _ in range(200):
        a, b, c = rng.choice(perms), rng.choice(perms), rng.choice(perms)
        assert (a * b) * c == a * (b * c)
        assert a * a.inverse() == Perm6.identity()
        assert a.inverse() * a == Perm6.identity()


def test_composition_order_convention():
    a = Perm6.parse("(e1,e2)")
    b = Perm6.parse("(e2,e3)")
    # (a*b)(x) = a(b(x)): e3 -> e2 -> e1
    assert (a * b)("e3") == "e1"
    assert (b * a)("e3") == "e2"


def test_all_perms_count():
    assert len(all_perms()) == 720
    assert len(set(all_perms())) == 720


def test_mulclose_full_group():
    gens = [Perm6.parse("(0,1)"), Perm6.parse("(0,1,inf,e1,e2,e3)")]
    assert len(mulclose(gens)) == 720


def test_generator_closure_orders():
    assert len(mulclose(paper_generators(4))) == 48
    assert len(mulclose(paper_generators(8))) == 48
    assert len(mulclose(paper_generators(9))) == 72
    assert len(mulclose(paper_generators(5))) == 120


def test_action_simple_variable_swap():
    f = MultiPoly({(2, 0, 0): 1, (0, 1, 0): 3, (0, 0, 0): 1})
    g = act(Perm6.parse("(e1,e2)"), f)
    assert g == MultiPoly({(0, 2, 0): 1, (1, 0, 0): 3, (0, 0, 0): 1})


def test_action_is_homomorphism_on_random_inputs():
    perms = all_perms()
    f0 = MultiPoly({(2, 1, 0): 1, (0, 0, 1): -3, (1, 1, 1): 2,
                    (0, 0, 0): 5})
    count = 0
    while count < 200:
        s = rng.choice(perms)
        t = rng.choice(perms)
        try:
            lhs = act(s * t, f0)
            rhs = act(s, act(t, f0))
        except DegenerateOnly:
            continue
        assert lhs == rhs
        count += 1


def test_identity_acts_trivially():
    f = MultiPoly({(2, 1, 0): 1, (0, 0, 1): -3, (0, 0, 0): 5})
    assert act(Perm6.identity(), f) == f


def test_induced_map_of_zero_one_swap():
    # (0,1) sends e_i to 1 - e_i, so e1^2 + 3 maps to e1^2 - 2e1 + 4
    f = MultiPoly({(2, 0, 0): 1, (0, 0, 0): 3})
    g = act(Perm6.parse("(0,1)"), f)
    assert g == MultiPoly({(2, 0, 0): 1, (1, 0, 0): -2, (0, 0, 0): 4})


def test_orbit_stabilizer_product():
    f0 = MultiPoly({(2, 1, 0): 1, (0, 0, 1): -3, (1, 1, 1): 2,
                    (0, 0, 0): 5})
    orb = orbit(f0)
    fix = fixed_group(f0)
    assert len(orb) * len(fix) == 720


def test_orbit_stabilizer_product_randomized():
    # one pass over the group gives both the orbit and the stabilizer
    perms = all_perms()
    done = 0
    while done < 200:
        terms = {(rng.randrange(2), rng.randrange(2), rng.randrange(2)):
                 rng.randint(-5, 5) for _ in range(4)}
        terms[(0, 0, 0)] = terms.get((0, 0, 0), 0) + 7
        if not any(k != (0, 0, 0) and c for k, c in terms.items()):
            continue
        f = MultiPoly(terms)
        images = set()
        stab = 0
        degenerate = False
        for s in perms:
            try:
                img = act(s, f)
            except DegenerateOnly:
                degenerate = True
                break
            images.add(img)
            if img == f:
                stab += 1
        if degenerate:
            continue
        assert len(images) * stab == 720
        done += 1


def test_fixed_group_is_a_group():
    f0 = MultiPoly({(2, 1, 0): 1, (0, 0, 1): -3, (0, 0, 0): 5})
    fix = fixed_group(f0)
    assert Perm6.identity() in fix
    assert mulclose(list(fix)) == fix
