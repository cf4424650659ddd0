#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "weyllab/polynomial.hpp"
#include "weyllab/rootset.hpp"
#include "weyllab/weyl.hpp"

namespace weyllab {

/// The whole group enumerated once, with indices, inverses, inversion sets and
/// Bruhat lower covers. Backs the exhaustive scans (every P_w, every R_w).
class GroupTable {
public:
    explicit GroupTable(RootSystemPtr rs, std::size_t cap = kDefaultGroupCap);

    const RootSystemPtr& root_system() const { return rs_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const WeylElement& element(int i) const { return elements_[i]; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::optional<int> index_of(const WeylElement& w) const;

    int inverse_index(int i) const { return inverse_[i]; }
    /// Delta_w for w = element(i).
    const RootSet& inversion_set(int i) const { return inversions_[i]; }
    const std::vector<int>& lower_covers(int i) const { return covers_[i]; }

    /// P_w for every element, by index. Down-sets are built layer by layer so
    /// only two length layers are held at a time.
    std::vector<IntPolynomial> all_poincare() const;

private:
    RootSystemPtr rs_;
    std::vector<WeylElement> elements_;
    std::unordered_map<WeylElement, int, WeylElementHash> index_;
    std::vector<int> inverse_;
    std::vector<RootSet> inversions_;
    std::vector<std::vector<int>> covers_;
};

}  // namespace weyllab
