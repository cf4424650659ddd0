#include "weyllab/bruhat.hpp"

#include <algorithm>
#include <unordered_set>

namespace weyllab {

namespace {

/// t_alpha * w for root index k.
WeylElement reflect_left(const WeylElement& w, int k) {
    const auto& rs = w.root_system();
    const int n = rs->num_positive();
    auto t = rs->reflection_images(k);
    std::vector<std::uint16_t> img(n);
    for (int m = 0; m < n; ++m) {
        int s = w.images()[m];
        img[m] = static_cast<std::uint16_t>(s < n ? t[s] : rs->negate(t[s - n]));
    }
    return {rs, std::move(img)};
}

}  // namespace

std::vector<WeylElement> lower_covers(const WeylElement& w) {
    const auto& rs = w.root_system();
    const int n = rs->num_positive();
    // l(t_alpha w) < l(w) iff w^{-1}(alpha) < 0, i.e. w sends some positive root to -alpha.
    std::vector<WeylElement> out;
    for (int m = 0; m < n; ++m) {
        int s = w.images()[m];
        if (s < n) continue;
        WeylElement tw = reflect_left(w, s - n);
        if (tw.length() == w.length() - 1) out.push_back(std::move(tw));
    }
    return out;
}

BruhatInterval lower_interval(const WeylElement& w, std::size_t cap) {
    std::vector<WeylElement> elems{w};
    std::unordered_map<WeylElement, int, WeylElementHash> index{{w, 0}};
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (auto& c : lower_covers(elems[k])) {
            auto [it, fresh] = index.try_emplace(c, static_cast<int>(elems.size()));
            if (fresh) {
                if (elems.size() >= cap)
                    throw ResourceError("lower interval exceeds the cap of " + std::to_string(cap) + " elements");
                elems.push_back(std::move(c));
            }
            edges.emplace_back(it->second, static_cast<int>(k));
        }
    }
    // Renumber by length so that element 0 is the identity.
    std::vector<int> order(elems.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return elems[a].length() < elems[b].length(); });
    std::vector<int> pos(elems.size());
    BruhatInterval out;
    std::vector<int> ranks;
    for (std::size_t i = 0; i < order.size(); ++i) {
        pos[order[i]] = static_cast<int>(i);
        ranks.push_back(elems[order[i]].length());
        out.elements.push_back(elems[order[i]]);
    }
    for (auto& [lo, hi] : edges) {
        lo = pos[lo];
        hi = pos[hi];
    }
    out.poset = GradedPoset(std::move(ranks), std::move(edges));
    return out;
}

IntPolynomial poincare(const WeylElement& w, std::size_t cap) {
    std::vector<WeylElement> frontier{w};
    std::vector<std::int64_t> counts(w.length() + 1, 0);
    std::size_t total = 0;
    // Covers drop the length by exactly one, so a level-by-level sweep visits each element once.
    for (int len = w.length(); len >= 0 && !frontier.empty(); --len) {
        counts[len] = static_cast<std::int64_t>(frontier.size());
        total += frontier.size();
        if (total > cap) throw ResourceError("lower interval exceeds the cap of " + std::to_string(cap) + " elements");
        std::unordered_set<WeylElement, WeylElementHash> next;
        for (const auto& x : frontier)
            for (auto& c : lower_covers(x)) next.insert(std::move(c));
        frontier.assign(next.begin(), next.end());
    }
    return IntPolynomial(std::move(counts));
}

bool is_rationally_smooth(const WeylElement& w, std::size_t cap) { return is_palindromic(poincare(w, cap)); }

bool BruhatComparator::leq(const WeylElement& u, const WeylElement& v) {
    if (u.length() > v.length()) return false;
    if (u.length() == v.length()) return u == v;
    if (u.is_identity()) return true;
    Key key{u, v};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int s = 0;
    while (!v.has_left_descent(s)) ++s;
    WeylElement sv = v.simple_times(s);
    bool result = u.has_left_descent(s) ? leq(u.simple_times(s), sv) : leq(u, sv);
    memo_.emplace(std::move(key), result);
    return result;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
    BruhatComparator cmp;
    return cmp.leq(u, v);
}

GradedPoset weak_order_poset(std::span<const WeylElement> elements, Side side) {
    std::unordered_map<WeylElement, int, WeylElementHash> index;
    std::vector<int> ranks;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        index.emplace(elements[i], static_cast<int>(i));
        ranks.push_back(elements[i].length());
    }
    std::vector<GradedPoset::Cover> covers;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto& w = elements[i];
        for (int s = 0; s < w.root_system()->rank(); ++s) {
            bool up = side == Side::Right ? !w.has_right_descent(s) : !w.has_left_descent(s);
            if (!up) continue;
            auto it = index.find(side == Side::Right ? w.times_simple(s) : w.simple_times(s));
            if (it != index.end()) covers.emplace_back(static_cast<int>(i), it->second);
        }
    }
    return {std::move(ranks), std::move(covers)};
}

}  // namespace weyllab
