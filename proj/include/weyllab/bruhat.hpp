#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "weyllab/polynomial.hpp"
#include "weyllab/poset.hpp"
#include "weyllab/weyl.hpp"

namespace weyllab {

inline constexpr std::size_t kDefaultIntervalCap = 1'000'000;

/// Bruhat lower covers { t w : t a reflection, l(t w) = l(w) - 1 }.
std::vector<WeylElement> lower_covers(const WeylElement& w);

/// Lower interval [id, w]; elements[i] is node i of poset, sorted by length.
struct BruhatInterval {
    std::vector<WeylElement> elements;
    GradedPoset poset;
};

BruhatInterval lower_interval(const WeylElement& w, std::size_t cap = kDefaultIntervalCap);

/// Rank generating function of [id, w].
IntPolynomial poincare(const WeylElement& w, std::size_t cap = kDefaultIntervalCap);

/// Carrell-Peterson: rationally smooth iff the Poincare polynomial is palindromic.
bool is_rationally_smooth(const WeylElement& w, std::size_t cap = kDefaultIntervalCap);

/// Memoized Bruhat comparison by the left-descent recursion. Not thread-safe;
/// keep one per thread.
class BruhatComparator {
public:
    bool leq(const WeylElement& u, const WeylElement& v);
    std::size_t memo_size() const { return memo_.size(); }
    void clear() { memo_.clear(); }

private:
    struct Key {
        WeylElement u, v;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept { return k.u.hash() * 31 + k.v.hash(); }
    };
    std::unordered_map<Key, bool, KeyHash> memo_;
};

bool bruhat_leq(const WeylElement& u, const WeylElement& v);

/// Weak order restricted to `elements`: covers (w, w s_i) on the right side,
/// (w, s_i w) on the left, whenever both ends are present and the length grows by one.
GradedPoset weak_order_poset(std::span<const WeylElement> elements, Side side);

}  // namespace weyllab
