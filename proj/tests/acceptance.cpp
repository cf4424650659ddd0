// Acceptance run: one PASS/FAIL line per criterion, plus informational lines
// for extended targets that do not gate the exit code.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "property_checks.hpp"
#include "weyllab/arrangement.hpp"
#include "weyllab/bruhat.hpp"
#include "weyllab/group_table.hpp"
#include "weyllab/mlattice.hpp"
#include "weyllab/parabolic.hpp"

using namespace weyllab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail << "first failure: " << what << "; ";
        pass = false;
    }
};

using ElementSet = std::set<std::vector<std::uint16_t>>;

ElementSet words_to_set(const RootSystemPtr& rs, const std::vector<Word>& words) {
    ElementSet out;
    for (const auto& w : words) out.insert(oracle::key(from_word(rs, w)));
    return out;
}

ElementSet nontrivial_palindromic(const RootSystemPtr& rs, int leaf, QuotientSide side, std::size_t cap) {
    Quotient q(rs, complement_of(*rs, leaf), side, cap);
    ElementSet out;
    for (const auto& p : palindromic_quotient_elements(q))
        if (!p.trivial) out.insert(oracle::key(p.v));
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Checks P_w palindromic <=> P_w = R_w and R_w palindromic over a whole group.
void scan_equivalence(const std::string& g, Outcome& o, long& scanned, long& smooth) {
    auto rs = build_root_system(g);
    GroupTable table(rs);
    auto p = table.all_poincare();
    for (int i = 0; i < table.size(); ++i) {
        auto r = distance_poly(Arrangement{rs, table.inversion_set(i)}, table);
        bool pal = is_palindromic(p[i]);
        smooth += pal;
        ++scanned;
        std::string name = g + " " + element_label(table.element(i));
        o.require(pal == (p[i] == r), "equivalence fails at " + name);
        o.require(is_palindromic(r), "R not palindromic at " + name);
    }
}

void criterion_equivalence(Outcome& o) {
    long scanned = 0, smooth = 0;
    for (const char* g : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "F4"})
        scan_equivalence(g, o, scanned, smooth);
    o.detail << scanned << " elements, " << smooth << " rationally smooth";
}

void criterion_3412(Outcome& o) {
    auto a3 = build_root_system("A3");
    auto w = from_word(a3, {2, 1, 3, 2});
    IntPolynomial p_expected{1, 3, 5, 4, 1}, r_expected{1, 4, 4, 4, 1};
    auto p = poincare(w);
    auto r = distance_poly(inversion_arrangement(w));
    o.require(p == p_expected, "P = " + p.to_string());
    o.require(r == r_expected, "R = " + r.to_string());
    o.require(oracle::perm_subword_poincare(4, {2, 1, 3, 2}) == p, "subword oracle disagrees on P");
    o.require(oracle::perm_poincare({3, 4, 1, 2}) == p, "tableau oracle disagrees on P");
    auto cycle = oracle::acyclic_orientation_poly(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    o.require(cycle.at_one() == 14, "4-cycle has " + std::to_string(cycle.at_one()) + " acyclic orientations");
    o.require(oracle::perm_region_poly({3, 4, 1, 2}) == r, "acyclic-orientation oracle disagrees on R");
    o.detail << "P = " << p << ", R = " << r << ", regions = " << r.at_one();
}

void criterion_quotient_lists(Outcome& o) {
    auto f4 = build_root_system("F4");
    o.require(nontrivial_palindromic(f4, 4, QuotientSide::RightFree, kDefaultQuotientCap) ==
                  words_to_set(f4, {{4}, {3, 4}, {2, 3, 4}, {1, 2, 3, 4}, {3, 2, 3, 4}, {4, 3, 2, 3, 4}}),
              "F4 minus s4");
    o.require(nontrivial_palindromic(f4, 1, QuotientSide::RightFree, kDefaultQuotientCap) ==
                  words_to_set(f4, {{1}, {2, 1}, {3, 2, 1}, {4, 3, 2, 1}, {2, 3, 2, 1}, {1, 2, 3, 2, 1}}),
              "F4 minus s1");

    auto e8 = build_root_system("E8");
    std::vector<Word> s8{{8},
                         {8, 7},
                         {8, 7, 6},
                         {8, 7, 6, 5},
                         {8, 7, 6, 5, 4},
                         {8, 7, 6, 5, 4, 2},
                         {8, 7, 6, 5, 4, 3},
                         {8, 7, 6, 5, 4, 3, 1},
                         {8, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 8}};
    o.require(nontrivial_palindromic(e8, 8, QuotientSide::LeftFree, kDefaultQuotientCap) == words_to_set(e8, s8),
              "E8 minus s8");

    std::vector<Word> s1{{1},
                         {1, 3},
                         {1, 3, 4},
                         {1, 3, 4, 5},
                         {1, 3, 4, 5, 6},
                         {1, 3, 4, 5, 6, 7},
                         {1, 3, 4, 5, 6, 7, 8},
                         {1, 3, 4, 2},
                         {1, 3, 4, 5, 2, 4, 3, 1},
                         {1, 3, 4, 5, 2, 4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6},
                         {1, 3, 4, 5, 6, 7, 2, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1, 3, 4, 5, 6, 7, 2, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1}};
    auto t0 = std::chrono::steady_clock::now();
    o.require(nontrivial_palindromic(e8, 1, QuotientSide::LeftFree, kDefaultQuotientCap) == words_to_set(e8, s1),
              "E8 minus s1");
    double e8_s1 = seconds_since(t0);
    o.require(e8_s1 < 300, "E8 minus s1 took over 5 minutes");
    o.detail << "F4 lists as W^J (rightfree), E8 lists as ^JW (leftfree); E8 minus s1 in " << e8_s1 << " s";
}

void extended_e8_s2() {
    auto e8 = build_root_system("E8");
    std::vector<Word> s2{{2},
                         {2, 4},
                         {2, 4, 3},
                         {2, 4, 3, 1},
                         {2, 4, 3, 1, 5, 6, 4, 5, 3, 4, 2, 4, 3, 1, 5, 6, 4, 5, 3, 4, 2},
                         {2, 4, 5},
                         {2, 4, 5, 6},
                         {2, 4, 5, 6, 7},
                         {2, 4, 5, 6, 7, 8},
                         {2, 4, 5, 3, 4, 2},
                         {2, 4, 5, 3, 4, 2, 6, 5, 4, 3},
                         {2, 4, 5, 3, 4, 2, 6, 7, 5, 6, 4, 5, 3, 4, 2},
                         {2, 4, 5, 3, 4, 2, 6, 7, 5, 6, 4, 5, 3, 4, 2, 8, 7, 6, 5, 4, 3},
                         {2, 4, 5, 3, 4, 2, 1, 3, 4, 5},
                         {2, 4, 5, 3, 4, 2, 1, 6, 7, 5, 6, 4, 5, 3, 4, 2, 5, 4, 3, 1, 6, 7, 5, 6, 4, 5, 3, 4, 2, 5, 4, 3, 1,
                          6, 7, 5, 6, 4, 5, 3, 4, 2}};
    auto t0 = std::chrono::steady_clock::now();
    Quotient q(e8, complement_of(*e8, 2), QuotientSide::LeftFree);
    ElementSet got;
    for (const auto& p : palindromic_quotient_elements(q))
        if (!p.trivial) got.insert(oracle::key(p.v));
    auto listed = words_to_set(e8, s2);
    std::printf("%s [extended] E8 minus s2: quotient %d elements, %zu nontrivial palindromic, %zu listed words (%.1f s)\n",
                got == listed ? "PASS" : "FAIL", q.size(), got.size(), listed.size(), seconds_since(t0));
}

void criterion_classification(Outcome& o) {
    long quotients = 0, elements = 0, palindromic = 0;
    for (const char* g : {"A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "D5", "G2", "F4", "E6"}) {
        auto rs = build_root_system(std::string(g));
        for (int leaf : rs->leaf_labels())
            for (auto side : {QuotientSide::RightFree, QuotientSide::LeftFree}) {
                Quotient q(rs, complement_of(*rs, leaf), side);
                QuotientClassifier cl(q);
                ++quotients;
                for (int i = 0; i < q.size(); ++i) {
                    const auto& v = q.element(i);
                    std::string name = std::string(g) + " minus s" + std::to_string(leaf) + " " + to_string(side) +
                                       " " + element_label(v);
                    auto c = cl.classify(i);
                    bool pal = is_palindromic(q.poincare(i));
                    ++elements;
                    palindromic += pal;
                    o.require(pal == (c.tag != QuotientClass::NotPalindromic), "tag mismatch at " + name);
                    if (c.tag == QuotientClass::LocallyLongest) {
                        const Quotient& emb = cl.embedded(support_mask(v));
                        o.require(canonical_word(emb.element(emb.top())) == canonical_word(v),
                                  "not the embedded longest element: " + name);
                    }
                    if (c.tag == QuotientClass::LocalChain)
                        o.require(cl.embedded(support_mask(v)).poset().is_chain(), "embedded quotient not a chain: " + name);
                }
            }
    }
    o.detail << quotients << " quotients (both sides), " << elements << " elements, " << palindromic << " palindromic";
}

void criterion_mlattice(Outcome& o) {
    for (int n = 1; n <= 8; ++n)
        o.require(mn_palindromic(n) == mn_palindromic_closed_form(n), "closed form at n = " + std::to_string(n));
    for (int n = 2; n <= 5; ++n) o.require(verify_iso_bn(n), "B" + std::to_string(n) + " vs M(n)");
    for (int n = 4; n <= 5; ++n) o.require(verify_iso_dn(n), "D" + std::to_string(n) + " vs M(n-1)");
    for (int n = 2; n <= 6; ++n) {
        auto rs = build_root_system('B', n);
        auto q = quotient_poset(rs, complement_of(*rs, n - 1), QuotientSide::RightFree);
        o.require(q.is_chain() && q.size() == 2 * n, "B" + std::to_string(n) + "/B" + std::to_string(n - 1));
    }
    auto d5 = build_root_system("D5");
    o.require(quotient_poset(d5, complement_of(*d5, 4), QuotientSide::RightFree).rank_sizes() ==
                  std::vector<std::int64_t>{1, 1, 1, 1, 2, 1, 1, 1, 1},
              "D5/D4 rank sizes");
    o.detail << "closed form n <= 8, B2-B5 and D4-D5 isomorphisms, B_n/B_{n-1} chains, D5/D4 ranks";
}

void criterion_factorization(Outcome& o) {
    long smooth = 0;
    for (const char* g : {"A1", "A2", "A3", "A4", "B2", "B3", "D4", "G2", "F4"}) {
        auto rs = build_root_system(std::string(g));
        for (const auto& w : enumerate_group(rs)) {
            if (!is_rationally_smooth(w)) continue;
            ++smooth;
            std::string name = std::string(g) + " " + element_label(w);
            try {
                auto bp = find_bp_decomposition(w);
                o.require(check_factorization(bp), "factorization fails at " + name);
                o.require(right_descent_property(bp), "right descent property fails at " + name);
            } catch (const std::exception& e) {
                o.require(false, name + ": " + e.what());
            }
        }
    }
    o.detail << smooth << " rationally smooth elements";
}

void criterion_special(Outcome& o) {
    for (int n = 2; n <= 4; ++n) {
        auto rep = verify_special_bn(n);
        o.require(rep.all_required(), rep.name);
    }
    auto f4 = verify_special_F4();
    o.require(f4.uniform, "F4 uniformity");
    o.require(f4.r_factor, "F4 R_w = R_u (1 + ... + q^4)");
    o.require(f4.p_equals_r, "F4 P_w = R_w");
    o.detail << "B2-B4 all true; F4 uniform, R_w/R_u = " << *divide_exact(f4.r_w, f4.r_u)
             << ", P_w = R_w; displayed P_w = P_u (1 + q + q^2 + q^3) is "
             << (*f4.displayed_p_factor ? "true" : "false");
}

void criterion_uniformity(Outcome& o) {
    int pairs = 0;
    for (const char* g : {"A3", "B3"}) {
        auto rs = build_root_system(std::string(g));
        GroupTable table(rs);
        Arrangement top = inversion_arrangement(longest_element(rs));
        for (int s : rs->labels_from_mask(rs->all_nodes())) {
            NodeMask J = complement_of(*rs, s);
            Arrangement sub = inversion_arrangement(longest_element(rs, J));
            std::string name = std::string(g) + " J = S - s" + std::to_string(s);
            o.require(is_uniform(top, sub, table), "not uniform: " + name);
            // Chambers inside the base region of A_{u_0} are the v in ^JW, adjacent when v' = v s_i.
            auto weak = weak_order_poset(quotient_elements(rs, J, QuotientSide::LeftFree), Side::Right);
            o.require(is_isomorphic(induced_subposet(top, sub, {}, table), weak), "weak order mismatch: " + name);
            ++pairs;
        }
    }
    o.detail << pairs << " maximal parabolics; common subposet = right weak order on the left-descent-free quotient";
}

void criterion_properties(Outcome& o) {
    auto d = props::duality();
    auto s = props::intervals_vs_subwords();
    auto r = props::random_palindromic_r();
    for (const auto* t : {&d, &s, &r})
        for (const auto& n : t->notes) o.require(false, n);
    o.require(d.failures + s.failures + r.failures == 0, "property failures");
    o.detail << "duality " << d.checked << " checks, intervals " << s.checked << ", random R " << r.checked;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> criteria{
        {1, "P_w palindromic <=> P_w = R_w over A1-A4, B2-B4, D4, G2, F4", criterion_equivalence},
        {2, "3412: P and R against independent oracles", criterion_3412},
        {3, "palindromic quotient lists for F4 and E8", criterion_quotient_lists},
        {4, "classification of palindromic quotient elements", criterion_classification},
        {5, "M(n) suite", criterion_mlattice},
        {6, "BP factorization of rationally smooth elements", criterion_factorization},
        {7, "product-with-a-chain configurations in B_n and F4", criterion_special},
        {8, "uniformity of A_{w_0} over A_{u_0}", criterion_uniformity},
        {9, "property suites", criterion_properties},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failed += !o.pass;
        std::printf("%s [%d] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.str().c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
    }

    // Extended targets: reported, not gating.
    for (const char* g : {"A5", "D5"}) {
        Outcome o;
        long scanned = 0, smooth = 0;
        scan_equivalence(g, o, scanned, smooth);
        std::printf("%s [extended] P_w palindromic <=> P_w = R_w over %s: %ld elements, %ld rationally smooth %s\n",
                    o.pass ? "PASS" : "FAIL", g, scanned, smooth, o.detail.str().c_str());
    }
    extended_e8_s2();

    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
