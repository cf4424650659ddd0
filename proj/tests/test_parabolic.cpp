#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "weyllab/bruhat.hpp"
#include "weyllab/errors.hpp"
#include "weyllab/parabolic.hpp"

using namespace weyllab;

namespace {

NodeMask mask(const RootSystemPtr& rs, std::vector<int> labels) { return rs->mask_from_labels(labels); }

std::set<std::vector<std::uint16_t>> as_set(const std::vector<WeylElement>& xs) {
    std::set<std::vector<std::uint16_t>> out;
    for (const auto& x : xs) out.insert(oracle::key(x));
    return out;
}

std::set<std::vector<std::uint16_t>> nontrivial_palindromic(const RootSystemPtr& rs, int leaf, QuotientSide side) {
    std::vector<WeylElement> xs;
    for (const auto& p : palindromic_quotient_elements(rs, complement_of(*rs, leaf), side))
        if (!p.trivial) xs.push_back(p.v);
    return as_set(xs);
}

std::set<std::vector<std::uint16_t>> words_to_set(const RootSystemPtr& rs, const std::vector<Word>& words) {
    std::vector<WeylElement> xs;
    for (const auto& w : words) xs.push_back(from_word(rs, w));
    return as_set(xs);
}

}  // namespace

TEST_CASE("side names") {
    CHECK(parse_quotient_side("rightfree") == QuotientSide::RightFree);
    CHECK(parse_quotient_side("leftfree") == QuotientSide::LeftFree);
    CHECK_THROWS_AS(parse_quotient_side("up"), DomainError);
    CHECK(to_string(QuotientSide::LeftFree) == "leftfree");
}

TEST_CASE("coset representatives and parabolic decomposition") {
    auto a2 = build_root_system("A2");
    NodeMask j1 = mask(a2, {1});
    auto w = from_word(a2, {1, 2});
    CHECK(coset_min_rep(w, j1, QuotientSide::LeftFree) == simple_reflection(a2, 2));
    CHECK(coset_min_rep(simple_reflection(a2, 1), j1, QuotientSide::LeftFree) == identity(a2));
    CHECK(coset_min_rep(w, 0, QuotientSide::RightFree) == w);
    auto [u, v] = parabolic_decompose(w, j1);
    CHECK(u == simple_reflection(a2, 1));
    CHECK(v == simple_reflection(a2, 2));
    auto [u2, v2] = parabolic_decompose(simple_reflection(a2, 1), j1);
    CHECK(u2 == simple_reflection(a2, 1));
    CHECK(v2 == identity(a2));
    auto [u3, v3] = parabolic_decompose(identity(a2), j1);
    CHECK(u3 == identity(a2));
    CHECK(v3 == identity(a2));
}

TEST_CASE("decompositions are length-additive across B3") {
    auto b3 = build_root_system("B3");
    for (NodeMask J = 0; J <= b3->all_nodes(); ++J)
        for (const auto& w : enumerate_group(b3)) {
            auto [u, v] = parabolic_decompose(w, J);
            CHECK(u * v == w);
            CHECK(u.length() + v.length() == w.length());
            CHECK(in_parabolic(u, J));
            CHECK(in_quotient(v, J, QuotientSide::LeftFree));
        }
}

TEST_CASE("max_below") {
    auto a2 = build_root_system("A2");
    CHECK(max_below(from_word(a2, {1, 2}), mask(a2, {2})) == simple_reflection(a2, 2));
    CHECK(max_below(identity(a2), mask(a2, {1})) == identity(a2));
    for (const char* g : {"A3", "B3", "G2"}) {
        auto rs = build_root_system(std::string(g));
        for (NodeMask J = 0; J <= rs->all_nodes(); ++J) {
            CHECK(max_below(longest_element(rs), J) == longest_element(rs, J));
            auto labels = rs->labels_from_mask(J);
            std::set<int> allowed(labels.begin(), labels.end());
            for (const auto& w : enumerate_group(rs))
                CHECK(max_below(w, J) == oracle::demazure_restricted(rs, canonical_word(w), allowed));
        }
    }
}

TEST_CASE("quotient sizes") {
    for (const char* g : {"A3", "B3", "D4", "G2", "F4"}) {
        auto rs = build_root_system(std::string(g));
        for (NodeMask J = 0; J <= rs->all_nodes(); ++J)
            for (auto side : {QuotientSide::RightFree, QuotientSide::LeftFree}) {
                auto q = quotient_elements(rs, J, side);
                std::uint64_t sub = J ? group_order(*rs->restrict_to(J)) : 1;
                CHECK(q.size() * sub == group_order(*rs));
                for (const auto& v : q) CHECK(in_quotient(v, J, side));
            }
    }
    auto e8 = build_root_system("E8");
    CHECK(quotient_elements(e8, complement_of(*e8, 8), QuotientSide::RightFree).size() == 240);
    CHECK_THROWS_AS(quotient_elements(e8, complement_of(*e8, 2), QuotientSide::RightFree, 1000), ResourceError);
}

TEST_CASE("quotient posets from the figures") {
    auto b3 = build_root_system("B3");
    auto chain = quotient_poset(b3, complement_of(*b3, 2), QuotientSide::RightFree);
    CHECK(chain.size() == 6);
    CHECK(chain.is_chain());
    auto d5 = build_root_system("D5");
    auto q = quotient_poset(d5, complement_of(*d5, 4), QuotientSide::RightFree);
    CHECK(q.size() == 10);
    CHECK(q.rank_sizes() == std::vector<std::int64_t>{1, 1, 1, 1, 2, 1, 1, 1, 1});
}

TEST_CASE("quotient posets are graded by length with one minimum") {
    for (const char* g : {"A4", "B3", "D4", "F4"}) {
        auto rs = build_root_system(std::string(g));
        for (int s : rs->labels_from_mask(rs->all_nodes())) {
            Quotient q(rs, complement_of(*rs, s), QuotientSide::RightFree);
            for (int i = 0; i < q.size(); ++i) {
                CHECK(q.poset().rank(i) == q.element(i).length());
                if (i > 0) CHECK_FALSE(q.poset().lower_covers(i).empty());
            }
            CHECK(q.poset().rank_sizes()[0] == 1);
        }
    }
}

TEST_CASE("inversion maps the right-free quotient onto the left-free one") {
    for (const char* g : {"A3", "B3", "D4"}) {
        auto rs = build_root_system(std::string(g));
        for (int s : rs->labels_from_mask(rs->all_nodes())) {
            NodeMask J = complement_of(*rs, s);
            Quotient right(rs, J, QuotientSide::RightFree), left(rs, J, QuotientSide::LeftFree);
            REQUIRE(right.size() == left.size());
            std::vector<int> image;
            for (int i = 0; i < right.size(); ++i) {
                auto k = left.index_of(inverse(right.element(i)));
                REQUIRE(k.has_value());
                image.push_back(*k);
            }
            std::set<std::pair<int, int>> lc(left.poset().covers().begin(), left.poset().covers().end());
            CHECK(right.poset().covers().size() == lc.size());
            for (auto [a, b] : right.poset().covers()) CHECK(lc.count({image[a], image[b]}));
        }
    }
}

TEST_CASE("quotient Poincare polynomials") {
    auto b3 = build_root_system("B3");
    NodeMask J = complement_of(*b3, 2);
    Quotient q(b3, J, QuotientSide::RightFree);
    CHECK(quotient_poincare(q.element(q.top()), J, QuotientSide::RightFree) == IntPolynomial::chain(5));
    CHECK(quotient_poincare(identity(b3), J, QuotientSide::RightFree) == IntPolynomial{1});
    auto a2 = build_root_system("A2");
    CHECK(quotient_poincare(simple_reflection(a2, 2), mask(a2, {1}), QuotientSide::LeftFree) == IntPolynomial::chain(1));
    CHECK_THROWS_AS(quotient_poincare(simple_reflection(a2, 1), mask(a2, {1}), QuotientSide::LeftFree), DomainError);
}

TEST_CASE("F4 palindromic quotient elements") {
    auto f4 = build_root_system("F4");
    CHECK(nontrivial_palindromic(f4, 4, QuotientSide::RightFree) ==
          words_to_set(f4, {{4}, {3, 4}, {2, 3, 4}, {1, 2, 3, 4}, {3, 2, 3, 4}, {4, 3, 2, 3, 4}}));
    // mirror image under 1 <-> 4, 2 <-> 3
    CHECK(nontrivial_palindromic(f4, 1, QuotientSide::RightFree) ==
          words_to_set(f4, {{1}, {2, 1}, {3, 2, 1}, {4, 3, 2, 1}, {2, 3, 2, 1}, {1, 2, 3, 2, 1}}));
}

TEST_CASE("type A, removing s1") {
    for (int n = 2; n <= 5; ++n) {
        auto rs = build_root_system('A', n);
        std::vector<Word> words;
        Word w;
        for (int k = 1; k < n; ++k) {
            w.insert(w.begin(), k);
            words.push_back(w);
        }
        CHECK(nontrivial_palindromic(rs, 1, QuotientSide::RightFree) == words_to_set(rs, words));
    }
}

TEST_CASE("E8 removing s8") {
    auto e8 = build_root_system("E8");
    CHECK(nontrivial_palindromic(e8, 8, QuotientSide::LeftFree).size() == 9);
}

TEST_CASE("classification examples") {
    auto f4 = build_root_system("F4");
    Quotient q(f4, complement_of(*f4, 4), QuotientSide::RightFree);
    QuotientClassifier c(q);
    auto tag = [&](Word w) { return c.classify(*q.index_of(from_word(f4, w))).tag; };
    CHECK(tag({2, 3, 4}) == QuotientClass::LocalChain);
    CHECK(tag({3, 2, 3, 4}) == QuotientClass::LocalChain);
    CHECK(tag({1, 2, 3, 4}) == QuotientClass::SpecialF4);
    CHECK(tag({4}) == QuotientClass::LocallyLongest);
    CHECK(tag({4, 3, 2, 3, 4}) == QuotientClass::LocallyLongest);
    CHECK(tag({}) == QuotientClass::Trivial);

    auto b3 = build_root_system("B3");
    Quotient qb(b3, complement_of(*b3, 0), QuotientSide::RightFree);
    QuotientClassifier cb(qb);
    auto c210 = cb.classify(*qb.index_of(from_word(b3, {2, 1, 0})));
    CHECK(c210.tag == QuotientClass::SpecialBn);
    CHECK(c210.palindromic);
    CHECK_FALSE(cb.embedded(b3->all_nodes()).poset().is_chain());

    CHECK_THROWS_AS(QuotientClassifier(Quotient(f4, complement_of(*f4, 2), QuotientSide::RightFree)), DomainError);
}

TEST_CASE("classification is sound on small quotients") {
    for (const char* g : {"A3", "A4", "B3", "D4", "G2", "F4"}) {
        auto rs = build_root_system(std::string(g));
        for (int leaf : rs->leaf_labels())
            for (auto side : {QuotientSide::RightFree, QuotientSide::LeftFree}) {
                Quotient q(rs, complement_of(*rs, leaf), side);
                QuotientClassifier c(q);
                for (int i = 0; i < q.size(); ++i) {
                    auto r = c.classify(i);
                    CHECK(r.consistent());
                    CHECK(r.palindromic == is_palindromic(q.poincare(i)));
                    // palindromic iff locally-longest or a chain element
                    CHECK(r.palindromic == (r.locally_longest || q.is_chain_element(i) || r.tag == QuotientClass::Trivial));
                }
            }
    }
}

TEST_CASE("BP decompositions") {
    auto a2 = build_root_system("A2");
    auto w0 = longest_element(a2);
    auto bp = find_bp_decomposition(w0);
    // leaves are scanned in ascending order: removing s1 already works
    CHECK(bp.removed == 1);
    CHECK(bp.J == complement_of(*a2, 1));
    CHECK(bp.u == simple_reflection(a2, 2));
    CHECK(bp.v == from_word(a2, {1, 2}));
    CHECK_FALSE(bp.inverted);
    CHECK(bp.u == max_below(w0, bp.J));

    auto id = find_bp_decomposition(identity(a2));
    CHECK(id.removed == 1);
    CHECK(id.u == identity(a2));
    CHECK(id.v == identity(a2));

    auto a3 = build_root_system("A3");
    CHECK_THROWS_AS(find_bp_decomposition(from_word(a3, {2, 1, 3, 2})), DomainError);
}

TEST_CASE("factorization") {
    auto a2 = build_root_system("A2");
    auto w = from_word(a2, {1, 2});
    CHECK(poincare(w) == IntPolynomial::chain(1) * IntPolynomial::chain(1));
    CHECK(check_factorization(w));
    CHECK(check_factorization(identity(a2)));
    auto b2 = build_root_system("B2");
    auto w0 = longest_element(b2);
    NodeMask J = complement_of(*b2, 1);
    auto [u0, v0] = parabolic_decompose(w0, J);
    CHECK(poincare(w0) == poincare(u0) * quotient_poincare(v0, J, QuotientSide::LeftFree));
    CHECK(quotient_poincare(v0, J, QuotientSide::LeftFree) == IntPolynomial::chain(3));
    CHECK(check_factorization(w0));
    CHECK(right_descent_property(from_word(a2, {1, 2, 1})));
    CHECK(right_descent_property(w0));
}

TEST_CASE("factorization over B3") {
    auto b3 = build_root_system("B3");
    for (const auto& w : enumerate_group(b3)) {
        if (!is_rationally_smooth(w)) continue;
        auto bp = find_bp_decomposition(w);
        CHECK(check_factorization(bp));
        CHECK(right_descent_property(bp));
        auto x = bp.inverted ? inverse(w) : w;
        CHECK(bp.u * bp.v == x);
        CHECK(bp.u.length() + bp.v.length() == x.length());
        CHECK(bp.u == max_below(x, bp.J));
    }
}
