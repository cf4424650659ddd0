#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace weyllab {

/// Set of positive-root indices. E8 has 120 positive roots, so 128 bits cover
/// every type in scope.
struct RootSet {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static constexpr int kCapacity = 128;

    void insert(int i) { (i < 64 ? lo : hi) |= std::uint64_t{1} << (i & 63); }
    void erase(int i) { (i < 64 ? lo : hi) &= ~(std::uint64_t{1} << (i & 63)); }
    bool contains(int i) const { return ((i < 64 ? lo : hi) >> (i & 63)) & 1U; }
    int size() const { return std::popcount(lo) + std::popcount(hi); }
    bool empty() const { return (lo | hi) == 0; }

    bool is_subset_of(const RootSet& o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }

    friend RootSet operator&(RootSet a, const RootSet& b) { return {a.lo & b.lo, a.hi & b.hi}; }
    friend RootSet operator|(RootSet a, const RootSet& b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend RootSet operator^(RootSet a, const RootSet& b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
    friend bool operator==(const RootSet&, const RootSet&) = default;
    friend std::strong_ordering operator<=>(const RootSet& a, const RootSet& b) {
        if (auto c = a.hi <=> b.hi; c != 0) return c;
        return a.lo <=> b.lo;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t w = lo; w; w &= w - 1) f(std::countr_zero(w));
        for (std::uint64_t w = hi; w; w &= w - 1) f(64 + std::countr_zero(w));
    }
};

struct RootSetHash {
    std::size_t operator()(const RootSet& s) const noexcept {
        return std::hash<std::uint64_t>{}(s.lo * 0x9E3779B97F4A7C15ULL ^ (s.hi + 0x632BE59BD9B4E019ULL));
    }
};

}  // namespace weyllab
