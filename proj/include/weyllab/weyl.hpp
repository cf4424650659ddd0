#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "weyllab/rootset.hpp"
#include "weyllab/rootsystem.hpp"

namespace weyllab {

/// A word in the simple reflections, by node label.
using Word = std::vector<int>;

enum class Side { Left, Right };

/// Element of a Weyl group, stored as its action on the positive roots
/// (signed root indices; see RootSystem). The length is cached.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(RootSystemPtr rs);
    WeylElement(RootSystemPtr rs, std::vector<std::uint16_t> images);

    const RootSystemPtr& root_system() const { return rs_; }
    int length() const { return length_; }
    bool is_identity() const { return length_ == 0; }

    /// w applied to a signed root index.
    int apply(int s) const {
        const int n = static_cast<int>(images_.size());
        return s < n ? images_[s] : rs_->negate(images_[s - n]);
    }
    std::span<const std::uint16_t> images() const { return images_; }

    bool has_right_descent(int node) const { return !rs_->is_positive(images_[node]); }
    bool has_left_descent(int node) const;

    /// w * s_i and s_i * w for a node index.
    WeylElement times_simple(int node) const;
    WeylElement simple_times(int node) const;

    std::size_t hash() const noexcept { return hash_; }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.hash_ == b.hash_ && a.images_ == b.images_;
    }

private:
    void finish();

    RootSystemPtr rs_;
    std::vector<std::uint16_t> images_;
    int length_ = 0;
    std::size_t hash_ = 0;
};

struct WeylElementHash {
    std::size_t operator()(const WeylElement& w) const noexcept { return w.hash(); }
};

WeylElement identity(const RootSystemPtr& rs);
WeylElement simple_reflection(const RootSystemPtr& rs, int label);

/// Product s_{w[0]} s_{w[1]} ... (left to right). Non-reduced words are fine.
WeylElement from_word(const RootSystemPtr& rs, const Word& word);

/// Parses whitespace/comma separated labels ("2 1 3 2", "[2,1,3,2]").
Word parse_word(const std::string& text);
std::string format_word(const Word& word);

WeylElement multiply(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& a);
inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return multiply(a, b); }

/// Reduced word built by repeatedly stripping the smallest-labelled left descent.
Word canonical_word(const WeylElement& w);
/// canonical_word rendered as "s2s1s3" ("id" for the identity).
std::string element_label(const WeylElement& w);

/// Descent labels in ascending order.
std::vector<int> descents(const WeylElement& w, Side side);

/// Positive roots sent to negative roots, as root indices.
RootSet inversion_set(const WeylElement& w);
std::vector<Root> inversion_roots(const WeylElement& w);

WeylElement reflection_for_root(const RootSystemPtr& rs, int root_index);
WeylElement reflection_for_root(const RootSystemPtr& rs, const Root& alpha);

/// Labels occurring in any reduced word of w.
std::vector<int> support(const WeylElement& w);
NodeMask support_mask(const WeylElement& w);

/// Longest element of the parabolic subgroup generated by `nodes`.
WeylElement longest_element(const RootSystemPtr& rs, NodeMask nodes);
inline WeylElement longest_element(const RootSystemPtr& rs) { return longest_element(rs, rs->all_nodes()); }

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

/// All elements, breadth-first by length. Throws ResourceError past `cap`.
std::vector<WeylElement> enumerate_group(const RootSystemPtr& rs, std::size_t cap = kDefaultGroupCap);

/// Group order from the degrees of the basic invariants.
std::uint64_t group_order(const RootSystem& rs);

}  // namespace weyllab
