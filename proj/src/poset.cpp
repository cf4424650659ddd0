#include "weyllab/poset.hpp"

#include <algorithm>
#include <numeric>

#include "weyllab/errors.hpp"

namespace weyllab {

GradedPoset::GradedPoset(std::vector<int> ranks, std::vector<Cover> covers)
    : ranks_(std::move(ranks)), covers_(std::move(covers)) {
    const int n = size();
    up_.assign(n, {});
    down_.assign(n, {});
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
    for (auto [lo, hi] : covers_) {
        if (lo < 0 || hi < 0 || lo >= n || hi >= n) throw DomainError("cover refers to a missing element");
        if (ranks_[hi] <= ranks_[lo]) throw InvariantViolation("cover does not increase the rank");
        up_[lo].push_back(hi);
        down_[hi].push_back(lo);
    }
}

GradedPoset GradedPoset::from_order(std::vector<int> ranks, const std::function<bool(int, int)>& leq) {
    const int n = static_cast<int>(ranks.size());
    std::vector<DynBitset> above(n, DynBitset(n)), below(n, DynBitset(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && leq(x, y)) {
                above[x].set(y);
                below[y].set(x);
            }
    std::vector<Cover> covers;
    for (int x = 0; x < n; ++x)
        above[x].for_each([&](std::size_t y) {
            if (!above[x].intersects(below[y])) covers.emplace_back(x, static_cast<int>(y));
        });
    return {std::move(ranks), std::move(covers)};
}

bool GradedPoset::is_graded() const {
    return std::all_of(covers_.begin(), covers_.end(),
                       [&](const Cover& c) { return ranks_[c.second] == ranks_[c.first] + 1; });
}

std::vector<std::int64_t> GradedPoset::rank_sizes() const {
    std::vector<std::int64_t> out;
    for (int r : ranks_) {
        if (static_cast<int>(out.size()) <= r) out.resize(r + 1, 0);
        ++out[r];
    }
    return out;
}

IntPolynomial GradedPoset::rank_generating_function() const { return IntPolynomial(rank_sizes()); }

bool GradedPoset::is_chain() const {
    auto sizes = rank_sizes();
    if (!std::all_of(sizes.begin(), sizes.end(), [](std::int64_t c) { return c == 1; })) return false;
    return static_cast<int>(covers_.size()) == size() - 1 && is_graded();
}

std::vector<DynBitset> GradedPoset::down_sets() const {
    const int n = size();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ranks_[a] < ranks_[b]; });
    std::vector<DynBitset> out(n, DynBitset(n));
    for (int x : order) {
        out[x].set(x);
        for (int c : down_[x]) out[x] |= out[c];
    }
    return out;
}

IntPolynomial GradedPoset::lower_rank_function(const DynBitset& down) const {
    std::vector<std::int64_t> c;
    down.for_each([&](std::size_t y) {
        int r = ranks_[y];
        if (static_cast<int>(c.size()) <= r) c.resize(r + 1, 0);
        ++c[r];
    });
    return IntPolynomial(std::move(c));
}

GradedPoset GradedPoset::induced(const std::vector<int>& subset) const {
    auto down = down_sets();
    std::vector<int> ranks;
    int lowest = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        int r = ranks_[subset[i]];
        lowest = i == 0 ? r : std::min(lowest, r);
        ranks.push_back(r);
    }
    for (int& r : ranks) r -= lowest;
    return from_order(std::move(ranks), [&](int a, int b) { return down[subset[b]].test(subset[a]); });
}

namespace {

struct Signature {
    int rank, up, down;
    auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const GradedPoset& p) {
    std::vector<Signature> s(p.size());
    for (int x = 0; x < p.size(); ++x)
        s[x] = {p.rank(x), static_cast<int>(p.upper_covers(x).size()), static_cast<int>(p.lower_covers(x).size())};
    return s;
}

class IsoSearch {
public:
    IsoSearch(const GradedPoset& a, const GradedPoset& b)
        : a_(a), b_(b), sa_(signatures(a)), sb_(signatures(b)), map_(a.size(), -1), used_(b.size(), false) {
        order_.resize(a.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) { return a.rank(x) < a.rank(y); });
        by_sig_.resize(b.size());
        std::iota(by_sig_.begin(), by_sig_.end(), 0);
    }

    bool run() { return extend(0); }
    std::vector<int> mapping() const { return map_; }

private:
    bool fits(int x, int y) const {
        if (used_[y] || sa_[x] != sb_[y]) return false;
        // Every lower cover precedes x in rank order, so it is already mapped.
        const auto& dx = a_.lower_covers(x);
        const auto& dy = b_.lower_covers(y);
        for (int c : dx)
            if (std::find(dy.begin(), dy.end(), map_[c]) == dy.end()) return false;
        return true;
    }

    bool extend(std::size_t k) {
        if (k == order_.size()) return true;
        const int x = order_[k];
        const auto& dx = a_.lower_covers(x);
        const std::vector<int>& candidates = dx.empty() ? by_sig_ : b_.upper_covers(map_[dx.front()]);
        for (int y : candidates) {
            if (!fits(x, y)) continue;
            map_[x] = y;
            used_[y] = true;
            if (extend(k + 1)) return true;
            used_[y] = false;
            map_[x] = -1;
        }
        return false;
    }

    const GradedPoset& a_;
    const GradedPoset& b_;
    std::vector<Signature> sa_, sb_;
    std::vector<int> order_;
    std::vector<int> by_sig_;
    std::vector<int> map_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const GradedPoset& a, const GradedPoset& b) {
    if (a.size() != b.size() || a.covers().size() != b.covers().size()) return std::nullopt;
    auto sa = signatures(a), sb = signatures(b);
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
    IsoSearch search(a, b);
    if (!search.run()) return std::nullopt;
    return search.mapping();
}

}  // namespace weyllab
