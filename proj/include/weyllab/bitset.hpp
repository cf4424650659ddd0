#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace weyllab {

/// Fixed-size bitset whose size is chosen at runtime. Used for down-sets of
/// posets with up to a few hundred thousand elements.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    bool intersects(const DynBitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            for (std::uint64_t w = words_[k]; w; w &= w - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }

    friend bool operator==(const DynBitset&, const DynBitset&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace weyllab
