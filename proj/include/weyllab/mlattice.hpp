#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weyllab/parabolic.hpp"
#include "weyllab/poset.hpp"

namespace weyllab {

/// Subset of [n] = {1..n}; bit k-1 stands for k.
using MnSet = std::uint32_t;

inline constexpr int kMaxMn = 20;

std::vector<int> mn_entries(MnSet a);
/// Sum of the entries.
int mn_rank(MnSet a);
/// "134" style for n <= 9, "{1,3,10}" otherwise; "∅" for the empty set.
std::string mn_label(MnSet a, int n);
MnSet mn_from_entries(const std::vector<int>& entries);

/// A <= B iff |A| <= |B| and the i-th largest entry of A is at most the
/// i-th largest entry of B for every i.
bool mn_leq(MnSet a, MnSet b);

/// M(n) with covers from the transitive reduction of mn_leq. Elements sorted
/// by rank, then by bitmask.
struct MLattice {
    int n = 0;
    std::vector<MnSet> elements;
    GradedPoset poset;

    int index_of(MnSet a) const;
    std::vector<std::string> labels() const;
};

MLattice mn_poset(int n);

/// Covers up (U), two steps up (U^2), covers down (D), two steps down (D^2).
struct UpDownSets {
    std::vector<MnSet> up, up2, down, down2;
};
UpDownSets up_down_sets(const MLattice& m, MnSet a);

/// Elements whose lower interval has a palindromic rank generating function,
/// by brute force over the order relation.
std::vector<MnSet> mn_palindromic(int n);
/// The closed form: the empty set, every singleton {k} and every [k].
std::vector<MnSet> mn_palindromic_closed_form(int n);

/// B_n / A_{n-1} (remove s_0, RightFree) is isomorphic to M(n).
bool verify_iso_bn(int n);
/// D_n / A_{n-1} (remove s_0 or s_1, RightFree) is isomorphic to M(n-1).
bool verify_iso_dn(int n, int removed = 0);

}  // namespace weyllab
