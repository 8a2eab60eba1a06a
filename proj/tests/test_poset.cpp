#include <doctest.h>

#include <set>

#include "canonlab/poset.hpp"
#include "canonlab/linext.hpp"
#include "oracle.hpp"

using namespace canonlab;

namespace {

std::vector<Cover> covers_of(const Poset& p) { return p.covers(); }

}  // namespace

TEST_CASE("chain and antichain") {
    CHECK(chain(1).size() == 1);
    CHECK(chain(1).covers().empty());
    CHECK(covers_of(chain(3)) == std::vector<Cover>{{0, 1}, {1, 2}});
    CHECK(antichain(1) == chain(1));
    CHECK(antichain(3).covers().empty());
    CHECK(oracle::extensions(antichain(3)).size() == 6);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(Poset(2, {{0, 2}}), PosetError);
    CHECK_THROWS_AS(Poset(2, {{0, 1}, {0, 1}}), PosetError);
    CHECK_THROWS_AS(Poset(2, {{0, 0}}), PosetError);
    CHECK_THROWS_AS(Poset(3, {{0, 1}, {1, 2}, {0, 2}}), PosetError);

    try {
        Poset(3, {{0, 1}, {1, 2}, {2, 0}});
        FAIL("cycle accepted");
    } catch (const CycleError& e) {
        auto cyc = e.cycle();
        CHECK(cyc.size() >= 3);
        std::sort(cyc.begin(), cyc.end());
        cyc.erase(std::unique(cyc.begin(), cyc.end()), cyc.end());
        CHECK(cyc == std::vector<Element>{0, 1, 2});
    }

    auto reduced = Poset::from_relations(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(reduced == chain(3));
    CHECK(reduced.less(0, 2));
    CHECK_FALSE(reduced.less(2, 0));
}

TEST_CASE("labeling validation") {
    CHECK_THROWS(Labeling({1, 1}));
    CHECK_THROWS(Labeling({0, 1}));
    CHECK_THROWS(Labeling({1, 3}));
    CHECK(Labeling::reversed(3).values() == std::vector<Label>{3, 2, 1});
}

TEST_CASE("product with a chain") {
    const Poset p24 = product_with_chain(chain(2), 4);
    CHECK(p24.size() == 8);
    CHECK(p24.covers().size() == 10);
    CHECK(p24.has_cover(0, 1));
    CHECK(p24.has_cover(0, 2));
    CHECK(p24.has_cover(5, 7));
    CHECK(oracle::extensions(p24).size() == 14);

    CHECK(product_with_chain(chain(1), 5) == chain(5));

    const Poset p22 = product_with_chain(chain(2), 2);
    CHECK(p22.covers().size() == 4);
    CHECK(oracle::extensions(p22).size() == 2);
}

TEST_CASE("checked product") {
    const Poset c23 = checked_product(chain(2), 3);
    CHECK(c23.size() == 9);
    CHECK(c23.maximal_elements() == std::vector<Element>{6, 7, 8});
    for (Element t : {6u, 7u, 8u}) CHECK(c23.lower_covers(t) == std::vector<Element>{5});
    CHECK(checked_product(chain(1), 1) == chain(2));
}

TEST_CASE("products stay irredundant") {
    std::vector<Poset> bases{chain(1), chain(2), chain(3), v_poset(), lambda_poset(), antichain(2)};
    for (const auto& b : bases) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (const Poset& p : {product_with_chain(b, n), checked_product(b, n)}) {
                std::vector<Cover> rel;
                for (Element a = 0; a < p.size(); ++a)
                    for (Element c = 0; c < p.size(); ++c)
                        if (p.less(a, c)) rel.push_back({a, c});
                CHECK(Poset::from_relations(p.size(), rel) == p);
            }
        }
    }
}

TEST_CASE("canon labeling") {
    CHECK(canon_labeling(Labeling({2, 1}), Labeling::identity(4)).values() ==
          std::vector<Label>{2, 1, 4, 3, 6, 5, 8, 7});
    CHECK(canon_labeling(Labeling::identity(3), Labeling::identity(2)) == Labeling::identity(6));
    CHECK(canon_labeling(Labeling::identity(2), Labeling({2, 1})).values() ==
          std::vector<Label>{3, 4, 1, 2});

    CHECK(checked_labeling(Labeling::identity(2), 3) == Labeling::identity(9));
    CHECK(checked_labeling(Labeling::identity(4), 1).values().back() == 5);
}

TEST_CASE("removing inter-copy covers") {
    const Poset p = product_with_chain(chain(2), 4);
    CHECK(remove_intercopy_covers(p, 2, {}) == p);

    // [2] x [4] without (2,3) < (2,4).
    const std::vector<CopyEdge> cut{{2, 3}};
    const Poset q = remove_intercopy_covers(p, 2, cut);
    CHECK(q.covers().size() == 9);
    CHECK_FALSE(q.has_cover(5, 7));
    CHECK(q.maximal_elements() == std::vector<Element>{5, 7});
    CHECK_THROWS_AS(remove_intercopy_covers(p, 2, std::vector<CopyEdge>{{3, 1}}), PosetError);
    CHECK_THROWS_AS(remove_intercopy_covers(p, 2, std::vector<CopyEdge>{{1, 4}}), PosetError);

    // All rows but q = 1 cut loose: words run over multiset permutations whose
    // first-row pattern is fixed.
    const std::size_t m = 2, n = 3;
    std::vector<CopyEdge> all_but_first;
    for (std::size_t j = 1; j < n; ++j) all_but_first.push_back({2, j});
    const Poset loose = remove_intercopy_covers(product_with_chain(chain(m), n), m, all_but_first);
    const Labeling labels = canon_labeling(Labeling::identity(m), Labeling::identity(n));
    std::set<Word> words;
    for (const auto& e : oracle::extensions(loose))
        words.insert(multiset_word(e, labels, m).letters());
    std::set<Word> expected;
    for (const auto& w : oracle::multiset_permutations(m, n))
        if (oracle::occurrence_pattern(w, 1) == Word{1, 2, 3}) expected.insert(w);
    CHECK(words == expected);
}

TEST_CASE("gradedness and chains") {
    CHECK(is_graded(chain(4)));
    CHECK(is_graded(product_with_chain(chain(2), 3)));
    CHECK_FALSE(is_graded(Poset(3, {{0, 2}})));
    CHECK(maximal_chains(product_with_chain(chain(2), 3)).size() == 3);
    CHECK(maximal_chains(v_poset()).size() == 2);
}

TEST_CASE("natural labeling") {
    for (const Poset& p : {chain(3), v_poset(), lambda_poset(), product_with_chain(chain(2), 3)}) {
        const Labeling w = natural_labeling(p);
        CHECK(is_natural(p, w));
        for (const auto& c : p.covers()) CHECK(w(c.lower) < w(c.upper));
    }
    CHECK_FALSE(is_natural(chain(2), Labeling::reversed(2)));
}

TEST_CASE("chain descent profile") {
    const Poset p23 = product_with_chain(chain(2), 3);
    CHECK(chain_descent_profile(p23, Labeling::identity(6)).constant_k == 0u);
    const auto prof = chain_descent_profile(p23, canon_labeling(Labeling::identity(2), Labeling({3, 2, 1})));
    CHECK(prof.constant_k == 2u);
    CHECK(prof.per_chain.size() == 3);

    const Poset p22 = product_with_chain(chain(2), 2);
    CHECK(chain_descent_profile(p22, canon_labeling(Labeling::identity(2), Labeling({2, 1}))).constant_k == 1u);
    CHECK(chain_descent_profile(p22, canon_labeling(Labeling::identity(2), Labeling({1, 2}))).constant_k == 0u);

    CHECK_FALSE(chain_descent_profile(v_poset(), Labeling({2, 1, 3})).constant_k.has_value());
}

TEST_CASE("descent shift vector") {
    const Poset p23 = product_with_chain(chain(2), 3);
    const Labeling id = Labeling::identity(6);
    auto same = descent_shift_vector(p23, id, id);
    REQUIRE(same);
    CHECK(same->k == 0);
    CHECK(std::all_of(same->t.begin(), same->t.end(), [](long t) { return t == 0; }));

    const Labeling rev = canon_labeling(Labeling::identity(2), Labeling({3, 2, 1}));
    auto sv = descent_shift_vector(p23, rev, id);
    REQUIRE(sv);
    CHECK(sv->k == 2);
    CHECK(oracle::hstar(p23, rev.values()) == oracle::shift(oracle::hstar(p23, id.values()), 2));

    auto anti = descent_shift_vector(antichain(2), Labeling({1, 2}), Labeling({2, 1}));
    REQUIRE(anti);
    CHECK(anti->k == 0);
    CHECK(oracle::hstar(antichain(2), {1, 2}) == oracle::hstar(antichain(2), {2, 1}));

    CHECK_FALSE(descent_shift_vector(v_poset(), Labeling({2, 1, 3}), Labeling::identity(3)));
}

TEST_CASE("descent shift vector predicts h* shifts exhaustively") {
    // Every labeling of every small chain product: whenever a shift vector
    // exists, h* is shifted by exactly k.
    for (std::size_t m = 1; m <= 3; ++m) {
        for (std::size_t n = 1; n * m <= 6 && n <= 3; ++n) {
            const Poset p = product_with_chain(chain(m), n);
            const Labeling nat = natural_labeling(p);
            const auto base = oracle::hstar(p, nat.values());
            std::vector<Label> w(p.size());
            std::iota(w.begin(), w.end(), Label{1});
            do {
                const Labeling lab(w);
                auto sv = descent_shift_vector(p, lab, nat);
                auto profile = chain_descent_profile(p, lab);
                CHECK(sv.has_value() == profile.constant_k.has_value());
                if (sv) CHECK(oracle::hstar(p, w) == oracle::shift(base, static_cast<std::size_t>(sv->k)));
            } while (std::next_permutation(w.begin(), w.end()));
        }
    }
}

TEST_CASE("rho") {
    const Poset c22 = checked_product(chain(2), 2);
    for (Element x : c22.minimal_elements()) CHECK(rho(c22, x) == 0);
    CHECK(rho(c22, 1) == 1);
    CHECK(rho(c22, 2) == 1);
    CHECK(rho(c22, 4) == 1);
    CHECK(rho(c22, 5) == 1);
    CHECK_THROWS_AS(rho(Poset(3, {{0, 2}}), 2), PosetError);
}
