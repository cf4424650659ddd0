#include "weyllab/group_table.hpp"

#include "weyllab/bitset.hpp"
#include "weyllab/bruhat.hpp"

namespace weyllab {

GroupTable::GroupTable(RootSystemPtr rs, std::size_t cap) : rs_(std::move(rs)) {
    elements_ = enumerate_group(rs_, cap);
    const int n = size();
    index_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) index_.emplace(elements_[i], i);
    inverse_.resize(n);
    inversions_.resize(n);
    covers_.resize(n);
    for (int i = 0; i < n; ++i) {
        inverse_[i] = index_.at(inverse(elements_[i]));
        inversions_[i] = weyllab::inversion_set(elements_[i]);
        for (const auto& c : weyllab::lower_covers(elements_[i])) covers_[i].push_back(index_.at(c));
    }
}

std::optional<int> GroupTable::index_of(const WeylElement& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<IntPolynomial> GroupTable::all_poincare() const {
    const int n = size();
    std::vector<IntPolynomial> out(n);
    // elements_ is sorted by length; down-sets of layer L only need layer L-1.
    std::unordered_map<int, DynBitset> previous, current;
    int begin = 0;
    while (begin < n) {
        int len = elements_[begin].length();
        int end = begin;
        while (end < n && elements_[end].length() == len) ++end;
        current.clear();
        for (int i = begin; i < end; ++i) {
            DynBitset down(static_cast<std::size_t>(n));
            down.set(static_cast<std::size_t>(i));
            for (int c : covers_[i]) down |= previous.at(c);
            std::vector<std::int64_t> counts(len + 1, 0);
            down.for_each([&](std::size_t y) { ++counts[elements_[y].length()]; });
            out[i] = IntPolynomial(std::move(counts));
            current.emplace(i, std::move(down));
        }
        std::swap(previous, current);
        begin = end;
    }
    return out;
}

}  // namespace weyllab
