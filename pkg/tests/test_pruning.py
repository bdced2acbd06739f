import random
from collections import Counter

import pytest

from prunres.betti import betti_of_complex
from prunres.ideals import pad_with_redundant, parse_ideal, random_corpus
from prunres.monomials import MonomialIdeal
from prunres.morse import critical_complex
from prunres.pruning import (
    Matching,
    empty_matching,
    intersection_generators,
    lyubeznik_direct,
    nu_prune,
    partial_prune_intersection,
    prune_lyubeznik,
    prune_simplicial,
    prune_taylor,
    prune_with,
    verify_matching,
    render_trace,
)
from prunres.taylor import TaylorComplex


def vec(mask, r):
    return "".join("1" if mask & (1 << k) else "0" for k in range(r))


class TestPruneTaylor:
    def test_path5_trace(self, path5):
        m = prune_taylor(path5)
        got = [(vec(s, 4), j + 1) for s, j in m.edges]
        assert got == [("1010", 2), ("1011", 2), ("0101", 3)]

    def test_two_variables_no_edges(self):
        I = parse_ideal("ring x y\ngens x, y")
        assert prune_taylor(I).edges == ()

    def test_cycle5_trace(self, cycle5):
        m = prune_taylor(cycle5)
        got = [(vec(s, 5), j + 1) for s, j in m.edges]
        assert got == [
            ("01001", 1),
            ("01101", 1),
            ("01011", 1),
            ("01111", 1),
            ("10100", 2),
            ("10110", 2),
            ("01010", 3),
            ("00101", 4),
            ("10101", 4),
            ("10010", 5),
        ]

    def test_step_candidates_disjoint(self, corpus40):
        # within one step all pruned edges are pairwise vertex-disjoint
        for I in corpus40[:20]:
            m = prune_taylor(I)
            per_step = {}
            for t in m.trace:
                per_step.setdefault(t.step, []).append(t)
            for steps in per_step.values():
                cells = []
                for t in steps:
                    cells += [t.sigma, t.sigma | (1 << t.j)]
                assert len(cells) == len(set(cells))


class TestPruneSimplicial:
    def test_path5(self, path5):
        m = prune_simplicial(path5)
        got = [(vec(s, 4), j + 1) for s, j in m.edges]
        assert got == [("1010", 2), ("1011", 2)]
        assert critical_complex(path5, m).ranks() == (1, 4, 5, 2)

    def test_two_variables_no_edges(self):
        I = parse_ideal("ring x y\ngens x, y")
        assert prune_simplicial(I).edges == ()

    def test_cycle5_needs_second_sweep(self, cycle5):
        m = prune_simplicial(cycle5)
        assert m.sweeps >= 2
        first_sweep = [t for t in m.trace if t.sweep == 1]
        assert len(first_sweep) < len(m.trace)

    def test_survivors_closed_under_subsets(self, corpus40, builtins):
        for I in list(corpus40[:25]) + [builtins["path:5"], builtins["cycle:5"]]:
            alive = prune_simplicial(I).survivors()
            for s in alive:
                for i in range(I.r):
                    if s & (1 << i):
                        assert (s & ~(1 << i)) in alive

    def test_edge_subset_of_plain_pruning_per_first_sweep(self, corpus40):
        for I in corpus40[:15]:
            plain = set(prune_taylor(I).edges)
            first = {
                (t.sigma, t.j)
                for t in prune_simplicial(I).trace
                if t.sweep == 1
            }
            assert first <= plain


class TestPruneLyubeznik:
    def test_path5_no_edges(self, path5):
        assert prune_lyubeznik(path5).edges == ()
        assert lyubeznik_direct(path5) == frozenset(range(16))

    def test_cycle5_first_step_only(self, cycle5):
        m = prune_lyubeznik(cycle5)
        assert all(t.step == 1 for t in m.trace)
        assert len(m.edges) == 4
        assert critical_complex(cycle5, m).ranks() == (1, 5, 9, 7, 2)

    def test_x_xy(self):
        I = parse_ideal("ring x y\ngens x, x*y")
        m = prune_lyubeznik(I)
        assert m.edges == ((0b10, 0),)
        assert m.survivors() == frozenset({0b00, 0b01})
        assert lyubeznik_direct(I) == frozenset({0b00, 0b01})

    def test_single_generator(self):
        I = parse_ideal("ring x y\ngens x*y")
        assert lyubeznik_direct(I) == frozenset({0, 1})

    def test_direct_equals_pruned_survivors(self, corpus40, builtins):
        for I in list(corpus40) + list(builtins.values()):
            assert prune_lyubeznik(I).survivors() == lyubeznik_direct(I)


class TestNuPrune:
    def test_x_y(self):
        I = parse_ideal("ring x y\ngens x, y")
        m = nu_prune(I)
        # canonical order prunes the step-1 candidate ({y}, 1) first
        assert m.edges == ((0b10, 0),)
        assert m.survivors() == frozenset({0b00, 0b01})
        rep = verify_matching(I.r, m, I)
        assert rep.is_matching and rep.is_acyclic

    def test_single_generator_no_second_pass(self):
        I = parse_ideal("ring x1 x2\ngens x1*x2")
        assert nu_prune(I).edges == ()

    def test_path5_golden_trace(self, path5):
        m = nu_prune(path5)
        second = [(t.sigma, t.j) for t in m.trace if t.sweep == 2]
        assert second == [(2, 0), (4, 1), (9, 1), (8, 2)]
        assert len(m.survivors()) == 2

    def test_labelled_approximation(self, path5):
        assert nu_prune(path5).kind == "nu-approximation"

    def test_combined_graph_valid(self, corpus40):
        for I in corpus40[:25]:
            m = nu_prune(I)
            rep = verify_matching(I.r, m, I)
            assert rep.is_matching and rep.is_acyclic


class TestPartialPruning:
    @staticmethod
    def _split(I, s):
        J = MonomialIdeal(I.variables, I.generators[:s])
        K = MonomialIdeal(I.variables, I.generators[s:])
        return J, K

    @staticmethod
    def _xprime_degrees(I, s):
        tc = TaylorComplex(I)
        jm = (1 << s) - 1
        km = ((1 << I.r) - 1) & ~jm
        out = Counter()
        for f in tc.faces():
            if f and (f & jm) and (f & km):
                out[tc.exponents(f)] += 1
        return out

    def test_single_generator_part_no_prunes(self):
        I = parse_ideal("ring a b c d e f g h\ngens a*b, c*d, e*f, g*h")
        J, K = self._split(I, 3)
        m = partial_prune_intersection(J, K)
        assert m.edges == ()
        # survivors (minus the empty face) match X'
        grid = intersection_generators(J, K)
        tcg = TaylorComplex(grid)
        surv = Counter(tcg.exponents(f) for f in m.survivors() if f)
        assert surv == self._xprime_degrees(I, 3)

    def test_two_two_generic(self):
        I = parse_ideal("ring a b c d e f g h\ngens a*b, c*d, e*f, g*h")
        J, K = self._split(I, 2)
        m = partial_prune_intersection(J, K)
        grid = intersection_generators(J, K)
        tcg = TaylorComplex(grid)
        surv = Counter(tcg.exponents(f) for f in m.survivors() if f)
        assert surv == self._xprime_degrees(I, 2)
        assert sum(surv.values()) == 9

    def test_one_one_trivial(self):
        I = parse_ideal("ring x y\ngens x, y")
        J, K = self._split(I, 1)
        assert partial_prune_intersection(J, K).edges == ()

    def test_empty_part_rejected(self):
        I = parse_ideal("ring x y\ngens x, y")
        with pytest.raises(ValueError):
            partial_prune_intersection(
                MonomialIdeal(I.variables, ()), I
            )

    def test_random_matches_xprime(self):
        for I in random_corpus(25, seed=9, max_vars=5, max_gens=6):
            for s in range(1, I.r):
                if s > 3 or I.r - s > 3:
                    continue
                J, K = self._split(I, s)
                m = partial_prune_intersection(J, K)
                grid = intersection_generators(J, K)
                tcg = TaylorComplex(grid)
                surv = Counter(tcg.exponents(f) for f in m.survivors() if f)
                assert surv == self._xprime_degrees(I, s)
                rep = verify_matching(grid.r, m, grid)
                assert rep.all_ok


class TestVerifyMatching:
    def test_valid_examples(self, path5, cycle5):
        assert verify_matching(4, prune_taylor(path5), path5).all_ok
        assert verify_matching(5, prune_lyubeznik(cycle5), cycle5).all_ok

    def test_shared_vertex_rejected(self):
        I = parse_ideal("ring x y\ngens x, y")
        bad = Matching(2, ((0, 0), (0, 1)), ())
        rep = verify_matching(2, bad, I)
        assert not rep.is_matching

    def test_inhomogeneous_detected(self):
        I = parse_ideal("ring x y\ngens x, y")
        bad = Matching(2, ((0b01, 1),), ())  # {x} -> {x,y} shifts degree
        rep = verify_matching(2, bad, I)
        assert rep.is_matching and not rep.is_homogeneous

    def test_produced_matchings_all_ok(self, corpus40, builtins):
        for I in list(corpus40) + list(builtins.values()):
            for fn in (prune_taylor, prune_simplicial, prune_lyubeznik):
                assert verify_matching(I.r, fn(I), I).all_ok


class TestInvariants:
    def test_survivor_containments(self, corpus40, builtins):
        for I in list(corpus40) + list(builtins.values()):
            sp = prune_taylor(I).survivors()
            ss = prune_simplicial(I).survivors()
            sl = prune_lyubeznik(I).survivors()
            assert sp <= ss <= sl

    def test_survivor_count_identity(self, corpus40):
        for I in corpus40[:20]:
            m = prune_taylor(I)
            assert len(m.survivors()) == (1 << I.r) - 2 * len(m.edges)

    def test_redundant_generators_lemma(self, corpus40):
        rng = random.Random(17)
        for I in corpus40[:20]:
            padded = pad_with_redundant(I, rng, rng.randint(1, 3))
            a = betti_of_complex(critical_complex(I, prune_taylor(I), validate=False))
            b = betti_of_complex(
                critical_complex(padded, prune_taylor(padded), validate=False)
            )
            assert a.same_entries(b)

    def test_prune_with_hook(self, cycle5):
        # restricting the predicate to step 1 reproduces the Lyubeznik run
        m = prune_with(cycle5, lambda sigma, j: j == 0)
        assert critical_complex(cycle5, m, validate=False).ranks() == (1, 5, 9, 7, 2)


def test_trace_rendering(path5):
    m = prune_taylor(path5)
    lines = render_trace(m, path5)
    assert lines[0] == "step=2 sigma=1010 j=2 deg=x1*x2*x3*x4"
    assert len(lines) == 3


def test_empty_matching_is_taylor(path5):
    m = empty_matching(path5)
    assert m.survivors() == frozenset(range(16))
