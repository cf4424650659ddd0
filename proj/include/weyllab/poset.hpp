#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weyllab/bitset.hpp"
#include "weyllab/polynomial.hpp"

namespace weyllab {

/// Finite poset given by its Hasse diagram, with a rank for every element.
/// Elements are the ids 0..size()-1; callers keep their own id -> object maps.
class GradedPoset {
public:
    using Cover = std::pair<int, int>;  // (lower, upper)

    GradedPoset() = default;
    GradedPoset(std::vector<int> ranks, std::vector<Cover> covers);

    /// Hasse diagram of the order `leq` on n elements (transitive reduction).
    static GradedPoset from_order(std::vector<int> ranks, const std::function<bool(int, int)>& leq);

    int size() const { return static_cast<int>(ranks_.size()); }
    int rank(int x) const { return ranks_[x]; }
    const std::vector<int>& ranks() const { return ranks_; }
    const std::vector<Cover>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int x) const { return up_[x]; }
    const std::vector<int>& lower_covers(int x) const { return down_[x]; }

    /// True when every cover raises the rank by exactly one.
    bool is_graded() const;
    std::vector<std::int64_t> rank_sizes() const;
    IntPolynomial rank_generating_function() const;
    bool is_chain() const;

    /// down_sets()[x] = { y : y <= x }.
    std::vector<DynBitset> down_sets() const;
    /// Rank generating function of [min, x] for each x (ranks as stored).
    IntPolynomial lower_rank_function(const DynBitset& down) const;

    /// Subposet induced on `subset` (order restricted, then transitively
    /// reduced), ranks shifted so that the minimum is 0. Element i of the
    /// result is subset[i].
    GradedPoset induced(const std::vector<int>& subset) const;

private:
    std::vector<int> ranks_;
    std::vector<Cover> covers_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
};

/// Rank-preserving isomorphism a -> b (as a vector indexed by a's ids), found
/// by backtracking with (rank, up-degree, down-degree) pruning.
std::optional<std::vector<int>> find_isomorphism(const GradedPoset& a, const GradedPoset& b);
inline bool is_isomorphic(const GradedPoset& a, const GradedPoset& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace weyllab
