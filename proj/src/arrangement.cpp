#include "weyllab/arrangement.hpp"

#include <algorithm>
#include <map>

#include "weyllab/bruhat.hpp"

namespace weyllab {

std::vector<int> Arrangement::normal_indices() const {
    std::vector<int> out;
    normals.for_each([&](int k) { out.push_back(k); });
    return out;
}

Arrangement make_arrangement(const RootSystemPtr& rs, const RootSet& normals) {
    bool ok = true;
    normals.for_each([&](int k) { ok = ok && k < rs->num_positive(); });
    if (!ok) throw DomainError("arrangement normals must be positive roots of " + rs->name());
    return {rs, normals};
}

Arrangement inversion_arrangement(const WeylElement& w) { return {w.root_system(), inversion_set(w)}; }

namespace {

void check_table(const Arrangement& arr, const GroupTable& table) {
    if (arr.rs->name() != table.root_system()->name())
        throw DomainError("arrangement and chamber table belong to different root systems");
}

void check_containment(const Arrangement& arr, const Arrangement& sub) {
    if (arr.rs->name() != sub.rs->name() || !sub.normals.is_subset_of(arr.normals))
        throw DomainError("subarrangement is not contained in the arrangement");
}

/// Sign vector of every chamber restricted to `normals`.
std::vector<RootSet> chamber_signs(const RootSet& normals, const GroupTable& table) {
    std::vector<RootSet> out(static_cast<std::size_t>(table.size()));
    for (int u = 0; u < table.size(); ++u) out[u] = table.inversion_set(table.inverse_index(u)) & normals;
    return out;
}

}  // namespace

std::vector<Region> enumerate_regions(const Arrangement& arr, const GroupTable& table) {
    check_table(arr, table);
    auto signs = chamber_signs(arr.normals, table);
    std::map<std::pair<int, RootSet>, std::vector<int>> groups;
    for (int u = 0; u < table.size(); ++u) groups[{signs[u].size(), signs[u]}].push_back(u);
    std::vector<Region> out;
    out.reserve(groups.size());
    for (auto& [key, chambers] : groups) out.push_back({key.second, std::move(chambers)});
    return out;
}

std::vector<Region> enumerate_regions(const Arrangement& arr) { return enumerate_regions(arr, GroupTable(arr.rs)); }

IntPolynomial distance_poly(const Arrangement& arr, const GroupTable& table) {
    check_table(arr, table);
    auto signs = chamber_signs(arr.normals, table);
    std::sort(signs.begin(), signs.end());
    signs.erase(std::unique(signs.begin(), signs.end()), signs.end());
    std::vector<std::int64_t> counts(arr.size() + 1, 0);
    for (const auto& s : signs) ++counts[s.size()];
    return IntPolynomial(std::move(counts));
}

IntPolynomial distance_poly(const Arrangement& arr) { return distance_poly(arr, GroupTable(arr.rs)); }

std::optional<int> RegionPoset::index_of(const RootSet& minus) const {
    auto it = std::lower_bound(regions.begin(), regions.end(), minus, [](const Region& r, const RootSet& m) {
        if (r.distance() != m.size()) return r.distance() < m.size();
        return r.minus < m;
    });
    if (it == regions.end() || it->minus != minus) return std::nullopt;
    return static_cast<int>(it - regions.begin());
}

RegionPoset region_poset(const Arrangement& arr, const GroupTable& table) {
    RegionPoset out;
    out.regions = enumerate_regions(arr, table);
    std::vector<int> ranks;
    std::vector<GradedPoset::Cover> covers;
    for (const auto& r : out.regions) ranks.push_back(r.distance());
    // Adjacent regions: sign vectors differing in exactly one hyperplane.
    for (int i = 0; i < static_cast<int>(out.regions.size()); ++i) {
        const RootSet& m = out.regions[i].minus;
        arr.normals.for_each([&](int k) {
            if (m.contains(k)) return;
            RootSet next = m;
            next.insert(k);
            if (auto j = out.index_of(next)) covers.emplace_back(i, *j);
        });
    }
    out.poset = GradedPoset(std::move(ranks), std::move(covers));
    return out;
}

RegionPoset region_poset(const Arrangement& arr) { return region_poset(arr, GroupTable(arr.rs)); }

namespace {

std::vector<int> regions_inside(const RegionPoset& rp, const RootSet& sub_normals, const RootSet& region_of_sub) {
    std::vector<int> subset;
    for (int i = 0; i < static_cast<int>(rp.regions.size()); ++i)
        if ((rp.regions[i].minus & sub_normals) == region_of_sub) subset.push_back(i);
    return subset;
}

}  // namespace

GradedPoset induced_subposet(const Arrangement& arr, const Arrangement& sub, const RootSet& region_of_sub,
                             const GroupTable& table) {
    check_containment(arr, sub);
    auto rp = region_poset(arr, table);
    auto subset = regions_inside(rp, sub.normals, region_of_sub);
    if (subset.empty()) throw DomainError("sign vector is not a region of the subarrangement");
    return rp.poset.induced(subset);
}

bool is_uniform(const Arrangement& arr, const Arrangement& sub, const GroupTable& table) {
    check_containment(arr, sub);
    auto rp = region_poset(arr, table);
    auto sub_regions = enumerate_regions(sub, table);
    std::optional<GradedPoset> first;
    for (const auto& r : sub_regions) {
        GradedPoset q = rp.poset.induced(regions_inside(rp, sub.normals, r.minus));
        if (!first)
            first = std::move(q);
        else if (!is_isomorphic(*first, q))
            return false;
    }
    return true;
}

bool is_uniform(const Arrangement& arr, const Arrangement& sub) { return is_uniform(arr, sub, GroupTable(arr.rs)); }

namespace {

SpecialCaseReport product_with_chain(std::string name, const WeylElement& u, const WeylElement& v, NodeMask J) {
    const auto& rs = u.root_system();
    GroupTable table(rs);
    SpecialCaseReport rep;
    rep.name = std::move(name);
    rep.u = u;
    rep.v = v;
    rep.w = u * v;
    if (rep.w.length() != u.length() + v.length())
        throw InvariantViolation(rep.name + ": u v is not length-additive");
    rep.p_w = poincare(rep.w);
    rep.p_u = poincare(u);
    rep.p_v_quotient = quotient_poincare(v, J, QuotientSide::LeftFree);
    rep.r_w = distance_poly(inversion_arrangement(rep.w), table);
    rep.r_u = distance_poly(inversion_arrangement(u), table);
    // u^{-1} is a suffix of w^{-1} = v^{-1} u^{-1}, so Delta_{u^{-1}} sits inside Delta_{w^{-1}}.
    rep.uniform = is_uniform(inversion_arrangement(inverse(rep.w)), inversion_arrangement(inverse(u)), table);
    rep.r_factor = rep.r_w == rep.r_u * IntPolynomial::chain(v.length());
    rep.p_equals_r = rep.p_w == rep.r_w;
    return rep;
}

}  // namespace

SpecialCaseReport verify_special_F4() {
    auto rs = build_root_system('F', 4);
    NodeMask J = rs->mask_from_labels(std::vector<int>{1, 2, 3});
    auto rep = product_with_chain("F4: u = w_0(W_{1,2,3}), v = s4s3s2s1", longest_element(rs, J),
                                  from_word(rs, {4, 3, 2, 1}), J);
    rep.displayed_p_factor = rep.p_w == rep.p_u * IntPolynomial::chain(3);
    return rep;
}

SpecialCaseReport verify_special_bn(int n) {
    if (n < 2 || n > 5) throw ResourceError("verify_special_bn supports 2 <= n <= 5");
    auto rs = build_root_system('B', n);
    NodeMask J = complement_of(*rs, 0);
    Word word;
    for (int k = 0; k < n; ++k) word.push_back(k);
    WeylElement v = from_word(rs, word);
    return product_with_chain("B" + std::to_string(n) + ": u = w_0(W_{S-s0}), v = " + element_label(v),
                              longest_element(rs, J), v, J);
}

namespace {

/// alpha -> |x(alpha)| on a set of positive roots.
RootSet image_of(const WeylElement& x, const RootSet& roots) {
    RootSet out;
    const auto& rs = *x.root_system();
    roots.for_each([&](int k) {
        int s = x.apply(k);
        out.insert(rs.is_positive(s) ? s : rs.negate(s));
    });
    return out;
}

}  // namespace

bool verify_chamber_reduction(const BPDecomposition& bp, const GroupTable& table) {
    const auto& rs = bp.u.root_system();
    WeylElement x = bp.inverted ? inverse(bp.w) : bp.w;
    NodeMask shared = support_mask(bp.v) & bp.J;
    WeylElement u_k = longest_element(rs, shared);
    WeylElement head = bp.u * inverse(u_k);
    if (head.length() + u_k.length() != bp.u.length()) return false;

    RootSet a_x = inversion_set(inverse(x));
    RootSet a_10 = inversion_set(inverse(bp.u));
    RootSet a_0 = image_of(head, inversion_set(u_k));
    RootSet a_2 = a_x & (a_10 ^ a_x);
    if (!a_0.is_subset_of(a_10) || !a_10.is_subset_of(a_x)) return false;

    Arrangement whole{rs, a_x}, left{rs, a_10}, right{rs, a_0 | a_2};
    auto rp_whole = region_poset(whole, table);
    auto rp_right = region_poset(right, table);
    for (const auto& r : enumerate_regions(left, table)) {
        GradedPoset lhs = rp_whole.poset.induced(regions_inside(rp_whole, a_10, r.minus));
        GradedPoset rhs = rp_right.poset.induced(regions_inside(rp_right, a_0, r.minus & a_0));
        if (!is_isomorphic(lhs, rhs)) return false;
    }
    return true;
}

}  // namespace weyllab
