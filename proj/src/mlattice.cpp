#include "weyllab/mlattice.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace weyllab {

std::vector<int> mn_entries(MnSet a) {
    std::vector<int> out;
    for (int k = 0; k < 32; ++k)
        if (a >> k & 1U) out.push_back(k + 1);
    return out;
}

int mn_rank(MnSet a) {
    int r = 0;
    for (int e : mn_entries(a)) r += e;
    return r;
}

std::string mn_label(MnSet a, int n) {
    if (a == 0) return "∅";
    auto e = mn_entries(a);
    std::string s;
    if (n <= 9) {
        for (int x : e) s += std::to_string(x);
        return s;
    }
    s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + "}";
}

MnSet mn_from_entries(const std::vector<int>& entries) {
    MnSet a = 0;
    for (int e : entries) {
        if (e < 1 || e > kMaxMn) throw DomainError("M(n) entries must lie in [1, 20]");
        a |= MnSet{1} << (e - 1);
    }
    return a;
}

bool mn_leq(MnSet a, MnSet b) {
    if (std::popcount(a) > std::popcount(b)) return false;
    // Walk both sets from the top, pairing the i-th largest entries.
    while (a != 0) {
        int ta = 31 - std::countl_zero(a);
        int tb = 31 - std::countl_zero(b);
        if (ta > tb) return false;
        a &= ~(MnSet{1} << ta);
        b &= ~(MnSet{1} << tb);
    }
    return true;
}

int MLattice::index_of(MnSet a) const {
    auto it = std::find(elements.begin(), elements.end(), a);
    if (it == elements.end()) throw DomainError("subset is not an element of M(" + std::to_string(n) + ")");
    return static_cast<int>(it - elements.begin());
}

std::vector<std::string> MLattice::labels() const {
    std::vector<std::string> out;
    for (MnSet a : elements) out.push_back(mn_label(a, n));
    return out;
}

MLattice mn_poset(int n) {
    if (n < 0 || n > kMaxMn) throw ResourceError("M(n) is only materialised for n <= 20");
    MLattice m;
    m.n = n;
    for (MnSet a = 0; a < (MnSet{1} << n); ++a) m.elements.push_back(a);
    std::stable_sort(m.elements.begin(), m.elements.end(),
                     [](MnSet a, MnSet b) { return mn_rank(a) < mn_rank(b); });
    std::vector<int> ranks;
    for (MnSet a : m.elements) ranks.push_back(mn_rank(a));
    m.poset = GradedPoset::from_order(std::move(ranks),
                                      [&](int x, int y) { return mn_leq(m.elements[x], m.elements[y]); });
    return m;
}

UpDownSets up_down_sets(const MLattice& m, MnSet a) {
    const auto& p = m.poset;
    int x = m.index_of(a);
    UpDownSets out;
    std::set<MnSet> up2, down2;
    for (int y : p.upper_covers(x)) {
        out.up.push_back(m.elements[y]);
        for (int z : p.upper_covers(y)) up2.insert(m.elements[z]);
    }
    for (int y : p.lower_covers(x)) {
        out.down.push_back(m.elements[y]);
        for (int z : p.lower_covers(y)) down2.insert(m.elements[z]);
    }
    out.up2.assign(up2.begin(), up2.end());
    out.down2.assign(down2.begin(), down2.end());
    return out;
}

std::vector<MnSet> mn_palindromic(int n) {
    if (n < 0 || n > kMaxMn) throw ResourceError("M(n) is only materialised for n <= 20");
    const MnSet size = MnSet{1} << n;
    std::vector<MnSet> out;
    for (MnSet a = 0; a < size; ++a) {
        std::vector<std::int64_t> counts(mn_rank(a) + 1, 0);
        for (MnSet b = 0; b < size; ++b)
            if (mn_leq(b, a)) ++counts[mn_rank(b)];
        if (is_palindromic(IntPolynomial(std::move(counts)))) out.push_back(a);
    }
    return out;
}

std::vector<MnSet> mn_palindromic_closed_form(int n) {
    std::set<MnSet> s{0};
    for (int k = 1; k <= n; ++k) {
        s.insert(MnSet{1} << (k - 1));
        s.insert((MnSet{1} << k) - 1);
    }
    return {s.begin(), s.end()};
}

bool verify_iso_bn(int n) {
    if (n < 2 || n > 6) throw ResourceError("verify_iso_bn supports 2 <= n <= 6");
    auto rs = build_root_system('B', n);
    Quotient q(rs, complement_of(*rs, 0), QuotientSide::RightFree);
    return is_isomorphic(q.poset(), mn_poset(n).poset);
}

bool verify_iso_dn(int n, int removed) {
    if (n < 4 || n > 6) throw ResourceError("verify_iso_dn supports 4 <= n <= 6");
    if (removed != 0 && removed != 1) throw DomainError("D_n / A_{n-1} removes s_0 or s_1");
    auto rs = build_root_system('D', n);
    Quotient q(rs, complement_of(*rs, removed), QuotientSide::RightFree);
    return is_isomorphic(q.poset(), mn_poset(n - 1).poset);
}

}  // namespace weyllab
