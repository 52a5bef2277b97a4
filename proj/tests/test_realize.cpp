#include <doctest.h>

#include <random>

#include "gp/realize.hpp"
#include "test_util.hpp"

using namespace gp;
using gptest::mat;
using gptest::vec;

TEST_CASE("check_so_target") {
    SoTarget good{{{vec({0, 1}), vec({1, 0}), vec({1, 1})}, {}}};
    CHECK(check_so_target(good).admissible);

    SoTarget bad{{{vec({1})}}};
    TargetCheck c = check_so_target(bad);
    CHECK_FALSE(c.admissible);
    CHECK(c.component == 1);

    SoTarget empty{{{}, {}, {}}};
    CHECK(check_so_target(empty).admissible);

    SoTarget zero{{{Z2Vec::zero(1)}}};
    CHECK_FALSE(check_so_target(zero).admissible);
}

TEST_CASE("realize_linking_matrix") {
    Z2Mat L = mat({{0, 0, 1, 1}, {0, 0, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 0}});
    GaussPhrase p = realize_linking_matrix(L);
    CHECK(linking_matrix(p) == L);
    CHECK(is_isomorphic(p,
                        parse_phrase("A13.A14|A23|A13.A23.A34|A14.A34")));
    for (const auto &letter : p.alphabet())
        CHECK_FALSE(letter_kind(p, letter).single());

    CHECK(realize_linking_matrix(mat({{0, 0}, {0, 0}})) ==
          GaussPhrase::empty_phrase(2));

    CHECK_THROWS_AS(realize_linking_matrix(mat({{1}})), BadMatrixError);
    CHECK_THROWS_AS(realize_linking_matrix(mat({{0, 1}, {0, 0}})),
                    BadMatrixError);
    CHECK_THROWS_AS(realize_linking_matrix(mat({{0, 1}})), BadMatrixError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rand_below(rng, 5));
        Z2Mat random = gptest::random_linking(rng, n);
        CHECK(linking_matrix(realize_linking_matrix(random)) == random);
    }
}

TEST_CASE("realize_b_single reproduces the block construction") {
    std::set<Z2Vec> B{vec({0, 1}), vec({1, 0}), vec({1, 1})};
    GaussPhrase p = realize_b_single(B, 1, 2);
    CHECK(is_isomorphic(p, parse_phrase("X1.A.X1.Y1.Z1.Y1.B.Z1|A.B")));
    CHECK(b_set(p, 1) == B);
    CHECK(b_set(p, 2).empty());

    CHECK(realize_b_single({}, 1, 3) == GaussPhrase::empty_phrase(3));
    CHECK_THROWS_AS(realize_b_single({vec({1, 0})}, 1, 2),
                    InadmissibleError);
    CHECK_THROWS_AS(realize_b_single({vec({1, 0})}, 3, 2), BadIndexError);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rand_below(rng, 4));
        int k = 1 + static_cast<int>(rand_below(rng, n));
        std::set<Z2Vec> target = gptest::random_b_set(rng, n, k);
        GaussPhrase q = realize_b_single(target, k, n);
        CHECK(b_set(q, k) == target);
        for (const auto &letter : q.alphabet()) {
            LetterKind kind = letter_kind(q, letter);
            if (kind.single())
                CHECK(kind.first == k);
        }
    }
}

TEST_CASE("realize_so concatenates per-component constructions") {
    SoTarget t{{{vec({0, 1}), vec({1, 0}), vec({1, 1})}, {vec({1, 0})}}};
    GaussPhrase p = realize_so(t);
    CHECK(is_isomorphic(p, parse_phrase("XAXYZYBZC|ABWCW")));
    CHECK(so_invariant(p).sets == t.sets);

    SoTarget empty{{{}, {}, {}}};
    CHECK(realize_so(empty) == GaussPhrase::empty_phrase(3));

    SoTarget bad{{{vec({1, 1})}, {}}};
    CHECK_THROWS_AS(realize_so(bad), InadmissibleError);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rand_below(rng, 4));
        SoTarget target = gptest::random_so_target(rng, n);
        CHECK(so_invariant(realize_so(target)).sets == target.sets);
    }
}

TEST_CASE("realize_so_with_linking corrects the linking matrix") {
    SoTarget t{{{vec({0, 1}), vec({1, 0}), vec({1, 1})}, {vec({1, 0})}}};
    Z2Mat zero = mat({{0, 0}, {0, 0}});
    GaussPhrase p = realize_so_with_linking(t, zero);
    CHECK(is_isomorphic(p, parse_phrase("XAXYZYBZCD|ABWCWD")));
    CHECK(so_invariant(p).sets == t.sets);
    CHECK(linking_matrix(p) == zero);

    SoTarget empty{{{}, {}, {}}};
    Z2Mat L = mat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(realize_so_with_linking(empty, L) == realize_linking_matrix(L));

    CHECK_THROWS_AS(realize_so_with_linking(empty, mat({{0, 1}, {1, 0}})),
                    DimensionError);
    CHECK_THROWS_AS(realize_so_with_linking(empty, mat({{0, 1, 0},
                                                        {1, 0, 0},
                                                        {0, 1, 0}})),
                    BadMatrixError);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rand_below(rng, 4));
        SoTarget target = gptest::random_so_target(rng, n);
        Z2Mat link = gptest::random_linking(rng, n);
        GaussPhrase q = realize_so_with_linking(target, link);
        CHECK(so_invariant(q).sets == target.sets);
        CHECK(linking_matrix(q) == link);
    }
}

TEST_CASE("check_s_target") {
    STarget trivial{mat({{0, 0}, {0, 0}}), {{}, {}}};
    CHECK(check_s_target(trivial).admissible);

    STarget bad_shape{mat({{1, 0}, {0, 0}}), {{}, {}}};
    CHECK_FALSE(check_s_target(bad_shape).admissible);

    Z2Vec l1 = Z2Vec::zero(1);
    STarget odd_orbit{mat({{0}}), {{orbit_of(l1, vec({1}))}}};
    TargetCheck c = check_s_target(odd_orbit);
    CHECK_FALSE(c.admissible);
    CHECK(c.component == 1);

    // exactly one admissible S target exists for n = 1
    int admissible = 0;
    for (bool include : {false, true}) {
        STarget t{mat({{0}}), {{}}};
        if (include)
            t.orbit_sets[0].insert(orbit_of(l1, vec({1})));
        if (check_s_target(t).admissible)
            ++admissible;
    }
    CHECK(admissible == 1);
}

TEST_CASE("realize_s hits the requested S value") {
    GaussPhrase simple = parse_phrase("AB|AC|BC|-");
    Z2Mat L = linking_matrix(simple);
    STarget all_empty{L, {{}, {}, {}, {}}};
    GaussPhrase p = realize_s(all_empty);
    CHECK(s_invariant(p) == s_invariant(simple));

    GaussPhrase q = parse_phrase("ADBAEBCFCG|JLDHIHJK|EI|FGKL");
    SValue sq = s_invariant(q);
    STarget from_q{linking_matrix(q), {}};
    for (auto &[l, orbits] : sq.entries)
        from_q.orbit_sets.push_back(orbits);
    GaussPhrase realized = realize_s(from_q);
    CHECK(s_invariant(realized) == sq);

    CHECK_THROWS_AS(realize_s(STarget{mat({{1}}), {{}}}), BadMatrixError);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rand_below(rng, 4));
        STarget target = gptest::random_s_target(rng, n);
        SValue got = s_invariant(realize_s(target));
        REQUIRE(got.n() == n);
        for (int k = 1; k <= n; ++k) {
            CHECK(got.entries[static_cast<std::size_t>(k - 1)].first ==
                  target.L.row(k));
            CHECK(got.entries[static_cast<std::size_t>(k - 1)].second ==
                  target.orbit_sets[static_cast<std::size_t>(k - 1)]);
        }
    }
}

TEST_CASE("realizations are deterministic and canonical") {
    SoTarget t{{{vec({0, 1}), vec({1, 0}), vec({1, 1})}, {vec({1, 0})}}};
    GaussPhrase a = realize_so(t);
    GaussPhrase b = realize_so(t);
    CHECK(a == b);
    CHECK(canonical_form(a) == a);
    Z2Mat L = mat({{0, 1}, {1, 0}});
    CHECK(realize_linking_matrix(L) == realize_linking_matrix(L));
    CHECK(canonical_form(realize_linking_matrix(L)) ==
          realize_linking_matrix(L));
}

TEST_CASE("exhaustive S_o realization for small targets") {
    for (int n = 1; n <= 3; ++n) {
        for (const SoTarget &t : gptest::all_admissible_so_targets(n, 3)) {
            GaussPhrase p = realize_so(t);
            CHECK(so_invariant(p).sets == t.sets);
            CHECK(canonical_form(p) == p);
        }
    }
}

TEST_CASE("target files render and parse") {
    SoTarget t{{{vec({0, 1}), vec({1, 0}), vec({1, 1})}, {vec({1, 0})}}};
    SoTarget back = parse_so_target(render_so_target(t));
    CHECK(back.sets == t.sets);
    CHECK_THROWS_AS(parse_so_target("x\n0 0\n"), SyntaxError);
    CHECK_THROWS_AS(parse_so_target("2\n0 0\n"), SyntaxError);

    std::mt19937_64 rng(13);
    STarget st = gptest::random_s_target(rng, 3);
    STarget sback = parse_s_target(render_s_target(st));
    CHECK(sback.L == st.L);
    CHECK(sback.orbit_sets == st.orbit_sets);
    CHECK_THROWS_AS(parse_s_target("0 1\n1 0\n"), SyntaxError);
}
