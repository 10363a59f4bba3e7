import itertools
import random

import pytest

import oracles
from tabalg import (
    EMPTY,
    BoundExceeded,
    ColumnNotStrictlyIncreasing,
    EntryOutOfRange,
    RowNotWeaklyIncreasing,
    ShapeMismatch,
    ShapeNotPartition,
    Tableau,
    add_shapes,
    all_tableaux,
    compare_tableaux,
    conjugate,
    enumerate_tableaux,
    partitions,
    partitions_up_to,
    reading_word,
    star,
    star_all,
    tableau_from_reading_word,
    try_divide,
    validate,
    weight_matrix,
    weight_vector,
)


def random_tableau(rng, n, m, max_size=6):
    return Tableau(oracles.random_ssyt(rng, n, m, max_size))


class TestValidate:
    def test_accepts_valid(self):
        t = validate([[1, 1, 2], [2, 3]], n=3, m=3)
        assert t.rows == ((1, 1, 2), (2, 3))
        assert t.shape == (3, 2)

    def test_drops_trailing_empty_rows(self):
        assert validate([[1], []]) == validate([[1]])

    def test_empty(self):
        assert validate([]) == EMPTY
        assert EMPTY.shape == ()
        assert EMPTY.size == 0

    def test_row_not_weakly_increasing(self):
        with pytest.raises(RowNotWeaklyIncreasing):
            validate([[2, 1]])

    def test_column_not_strictly_increasing(self):
        with pytest.raises(ColumnNotStrictlyIncreasing):
            validate([[1, 2], [1]])

    def test_shape_not_partition(self):
        with pytest.raises(ShapeNotPartition):
            validate([[1], [2, 2]])
        with pytest.raises(ShapeNotPartition):
            validate([[1], [], [2]])

    def test_entry_out_of_range(self):
        with pytest.raises(EntryOutOfRange):
            validate([[0]])
        with pytest.raises(EntryOutOfRange):
            validate([[4]], m=3)
        with pytest.raises(EntryOutOfRange):
            validate([["1"]])  # type: ignore[list-item]

    def test_too_many_rows(self):
        with pytest.raises(BoundExceeded):
            validate([[1], [2], [3]], n=2)

    def test_matches_oracle_on_noise(self, rng):
        for _ in range(300):
            depth = rng.randint(1, 3)
            rows = [
                [rng.randint(1, 4) for _ in range(rng.randint(1, 4))]
                for _ in range(depth)
            ]
            ok = oracles.is_ssyt(rows, n=3, m=4)
            if ok:
                assert validate(rows, n=3, m=4).rows == tuple(tuple(r) for r in rows)
            else:
                with pytest.raises(Exception):
                    validate(rows, n=3, m=4)


class TestStar:
    def test_worked_product(self):
        t = Tableau(((1, 1), (2, 3), (4,)))
        u = Tableau(((1, 2), (2,), (3,)))
        assert star(t, u).rows == ((1, 1, 1, 2), (2, 2, 3), (3, 4))

    def test_identity(self, rng):
        for _ in range(20):
            t = random_tableau(rng, 3, 4)
            assert star(t, EMPTY) == t
            assert star(EMPTY, t) == t

    def test_definition(self, rng):
        for _ in range(200):
            t = random_tableau(rng, 3, 4)
            u = random_tableau(rng, 3, 4)
            assert star(t, u).rows == oracles.star_rows(t.rows, u.rows)

    def test_commutative_associative(self, rng):
        for _ in range(100):
            t, u, v = (random_tableau(rng, 4, 5) for _ in range(3))
            assert star(t, u) == star(u, t)
            assert star(star(t, u), v) == star(t, star(u, v))

    def test_cancellative(self, rng):
        # t*u = t*v forces u = v; checked by sampling u != v
        for _ in range(100):
            t = random_tableau(rng, 3, 4)
            u = random_tableau(rng, 3, 4)
            v = random_tableau(rng, 3, 4)
            if u != v:
                assert star(t, u) != star(t, v)

    def test_weight_additive(self, rng):
        for _ in range(100):
            t = random_tableau(rng, 3, 4)
            u = random_tableau(rng, 3, 4)
            wt = weight_matrix(star(t, u), 3, 4)
            wa = weight_matrix(t, 3, 4)
            wb = weight_matrix(u, 3, 4)
            assert wt == tuple(
                tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(wa, wb)
            )

    def test_weight_determines_tableau(self):
        seen = {}
        for t in all_tableaux(3, 3, 4):
            w = weight_matrix(t, 3, 3)
            assert w not in seen, (t, seen[w])
            seen[w] = t

    def test_row_bound_enforced(self):
        t = Tableau(((1,), (2,)))
        with pytest.raises(BoundExceeded):
            star(t, Tableau(((1,), (2,), (3,))), 2)

    def test_star_all(self, rng):
        ts = [random_tableau(rng, 3, 3, 3) for _ in range(4)]
        folded = EMPTY
        for t in ts:
            folded = star(folded, t)
        assert star_all(ts) == folded
        assert star_all([]) is EMPTY


class TestWeight:
    def test_worked_matrix(self):
        p = Tableau(((1, 1, 1, 2), (2, 2, 3), (3, 4)))
        assert weight_matrix(p, 3, 4) == ((3, 1, 0, 0), (0, 2, 1, 0), (0, 0, 1, 1))

    def test_vector_is_content(self, rng):
        for _ in range(50):
            t = random_tableau(rng, 3, 5)
            assert weight_vector(t, 5) == oracles.content(t.rows, 5)


class TestReadingWords:
    def test_column_word_worked_example(self):
        t = Tableau(((1, 1), (2, 3), (4,)))
        assert reading_word(t, "column").letters == (4, 2, 1, 3, 1)

    def test_row_word(self):
        t = Tableau(((1, 1, 2), (2, 3)))
        assert reading_word(t, "row").letters == (2, 1, 1, 3, 2)

    def test_round_trip(self, rng):
        for _ in range(100):
            t = random_tableau(rng, 4, 4)
            for kind in ("column", "row"):
                w = reading_word(t, kind)
                assert tableau_from_reading_word(w, t.shape) == t

    def test_shape_mismatch(self):
        w = reading_word(Tableau(((1, 2),)), "column")
        with pytest.raises(ShapeMismatch):
            tableau_from_reading_word(w, (3,))

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            reading_word(EMPTY, "diagonal")


class TestOrder:
    def test_compare_consistent_with_lt(self, rng):
        ts = [random_tableau(rng, 3, 3, 4) for _ in range(30)]
        for a, b in itertools.combinations(ts, 2):
            c = compare_tableaux(a, b)
            assert (c == 0) == (a == b)
            assert (c < 0) == (a < b)
            assert (c > 0) == (a > b)

    def test_total_order(self):
        ts = list(all_tableaux(2, 3, 3))
        ranked = sorted(ts)
        for a, b in zip(ranked, ranked[1:]):
            assert compare_tableaux(a, b) < 0

    def test_shorter_column_sorts_first(self):
        # matches the generator listing: all height-1 columns precede height 2
        a = Tableau(((1,), (2,)))
        b = Tableau(((3,),))
        assert b < a
        assert (
            Tableau(((1,), (2,)))
            < Tableau(((1,), (3,)))
            < Tableau(((2,), (3,)))
        )


class TestEnumeration:
    def test_matches_oracle(self):
        for shape in [(1,), (2,), (1, 1), (2, 1), (3, 2), (2, 2, 1)]:
            for m in (2, 3, 4):
                got = [t.rows for t in enumerate_tableaux(shape, m)]
                want = sorted(oracles.ssyt(shape, m))
                assert sorted(got) == want
                assert len(got) == len(set(got))

    def test_first_is_superstandard(self):
        first = next(enumerate_tableaux((3, 2, 1), 4))
        assert first.rows == ((1, 1, 1), (2, 2), (3,))

    def test_empty_shape(self):
        assert list(enumerate_tableaux((), 3)) == [EMPTY]

    def test_too_tall_shape(self):
        assert list(enumerate_tableaux((1, 1, 1), 2)) == []

    def test_all_tableaux_complete(self):
        got = set(all_tableaux(2, 2, 4))
        want = set()
        for shape in partitions_up_to(4, 2):
            for rows in oracles.ssyt(shape, 2):
                want.add(Tableau(rows))
        assert got == want


class TestPartitions:
    def test_counts(self):
        # partitions of 6 with at most 3 parts: 654 -> 7 of them
        assert len(list(partitions(6, 3))) == 7
        assert list(partitions(0, 3)) == [()]

    def test_parts_sorted_and_bounded(self):
        for shape in partitions_up_to(6, 3, include_empty=False):
            assert len(shape) <= 3
            assert 0 < sum(shape) <= 6
            assert all(a >= b for a, b in zip(shape, shape[1:]))

    def test_unique(self):
        shapes = list(partitions_up_to(7, 4))
        assert len(shapes) == len(set(shapes))


class TestDivide:
    def test_exact_quotient(self, rng):
        for _ in range(100):
            t = random_tableau(rng, 3, 4)
            u = random_tableau(rng, 3, 4)
            p = star(t, u)
            assert try_divide(p, t) == u
            assert try_divide(p, u) == t

    def test_failure_returns_none(self):
        assert try_divide(Tableau(((1, 2),)), Tableau(((3,),))) is None
        # row multisets embed but the leftover column (2,2) is not strict
        assert try_divide(Tableau(((1, 2), (2, 3))), Tableau(((1,), (3,)))) is None

    def test_divide_by_empty(self, rng):
        t = random_tableau(rng, 3, 3)
        assert try_divide(t, EMPTY) == t

    def test_agrees_with_search(self, rng):
        small = list(all_tableaux(2, 3, 3))
        for _ in range(200):
            t = rng.choice(small)
            s = rng.choice(small)
            q = try_divide(t, s)
            brute = [u for u in small if star(s, u) == t]
            if q is None:
                assert brute == []
            else:
                assert brute == [q]


class TestShapes:
    def test_conjugate(self):
        assert conjugate((3, 2)) == (2, 2, 1)
        assert conjugate(()) == ()
        assert conjugate(conjugate((4, 2, 1))) == (4, 2, 1)

    def test_add_shapes(self):
        assert add_shapes((2, 1), (1,)) == (3, 1)
        assert add_shapes((), (2, 2)) == (2, 2)
        t = Tableau(((1, 1), (2,)))
        u = Tableau(((1,), (2,)))
        assert star(t, u).shape == add_shapes(t.shape, u.shape)
