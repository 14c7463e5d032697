"""Randomized property suites and an independent branching oracle."""

import random
from fractions import Fraction

from cuntzalg.scalars import ONE
from cuntzalg.words import (all_words, canonical_cycle, is_primitive,
                            minimal_rotation, primitive_split)
from cuntzalg.algebra import CuntzPoly
from cuntzalg.morphisms import PermEndo
from cuntzalg.reps import CycleRep, act_poly, branch


def random_perm_endo(rng, n, level):
    words = list(all_words(n, level))
    images = words[:]
    rng.shuffle(images)
    return PermEndo(n, level, dict(zip(words, images)))


def test_random_endos_preserve_relations():
    rng = random.Random(20260826)
    one = CuntzPoly.one(3)
    zero = CuntzPoly.zero(3)
    for _ in range(200):
        m = random_perm_endo(rng, 3, 2)
        images = [m(CuntzPoly.generator(3, i)) for i in (1, 2, 3)]
        total = zero
        for i, x in enumerate(images):
            total = total + x * x.adjoint()
            for j, y in enumerate(images):
                assert x.adjoint() * y == (one if i == j else zero)
        assert total == one


def all_second_order_endos():
    # every transposition-generated sample plus the full symmetric group
    # of the four length-2 words
    import itertools
    words = list(all_words(2, 2))
    for perm in itertools.permutations(words):
        yield PermEndo(2, 2, dict(zip(words, perm)))


def test_branching_bounds_and_divisibility():
    bases = [(1,), (2,), (1, 2), (1, 1, 2)]
    count = 0
    for endo in all_second_order_endos():
        for base in bases:
            k = len(base)
            result = branch(CycleRep(2, base), endo)
            m = len(result.components)
            assert 1 <= m <= 2 * k          # M <= N^(l-1) * |J|
            for comp in result.components:
                assert len(comp.cycle_word) % k == 0
        count += 1
    assert count == 24


def test_fixed_point_certificates_everywhere():
    for endo in all_second_order_endos():
        for base in ((1,), (2,), (1, 2)):
            rep = CycleRep(2, base)
            for comp in branch(rep, endo).components:
                v = comp.cycle_labels[0]
                out = act_poly(rep, endo.word_image(comp.cycle_word),
                               {v: ONE})
                out = {k: c for k, c in out.items() if not c.is_zero()}
                assert list(out) == [v]
                assert out[v] == (ONE if comp.sign == 1 else -ONE)


def oracle_classes(word, endo, bound=6):
    """Brute-force re-derivation of the branching of P(word) o endo.

    Enumerates every reduced label with free part of length <= bound and
    walks the unique-predecessor map computed directly from the adjoint
    generator images, with no shortcuts.
    """
    rep = CycleRep(2, word)
    adjoints = [endo(CuntzPoly.generator(2, i)).adjoint() for i in (1, 2)]

    def pred(label):
        for i, adj in enumerate(adjoints, start=1):
            hit = {k: c for k, c in act_poly(rep, adj, {label: ONE}).items()
                   if not c.is_zero()}
            if hit:
                (lab, coeff), = hit.items()
                return i, coeff, lab
        raise AssertionError(f"label {label} has no predecessor")

    seen = set()
    classes = []
    for seed in rep.seed_labels(bound):
        order = []
        index = {}
        lab = seed
        steps = []
        while lab not in index:
            index[lab] = len(order)
            order.append(lab)
            i, coeff, lab_next = pred(lab)
            steps.append((i, coeff))
            lab = lab_next
        start = index[lab]
        cycle = frozenset(order[start:])
        if cycle in seen:
            continue
        seen.add(cycle)
        letters = tuple(i for i, _ in steps[start:])
        sign = ONE
        for _, coeff in steps[start:]:
            sign = sign * coeff
        root, mult = primitive_split(letters)
        q0 = Fraction(0) if sign == ONE else Fraction(1, 2)
        for j in range(mult):
            classes.append(str(canonical_cycle(root, (q0 + j) / mult)))
    return sorted(classes)


def test_oracle_cross_check():
    rng = random.Random(1122)
    words = [w for length in (1, 2, 3) for w in all_words(2, length)
             if is_primitive(w) and w == minimal_rotation(w)]
    cases = []
    while len(cases) < 20:
        sigma = random_perm_endo(rng, 2, 2)
        word = rng.choice(words)
        cases.append((sigma, word))
    for endo, word in cases:
        fast = sorted(str(c) for c in
                      branch(CycleRep(2, word), endo).cycle_classes())
        slow = oracle_classes(word, endo)
        assert fast == slow, (endo.sigma, word)
