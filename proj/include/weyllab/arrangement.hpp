#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyllab/group_table.hpp"
#include "weyllab/parabolic.hpp"
#include "weyllab/polynomial.hpp"
#include "weyllab/poset.hpp"
#include "weyllab/rootset.hpp"

namespace weyllab {

/// Central arrangement of the hyperplanes alpha(x) = 0 for a set of positive roots.
struct Arrangement {
    RootSystemPtr rs;
    RootSet normals;

    int size() const { return normals.size(); }
    std::vector<int> normal_indices() const;
};

Arrangement make_arrangement(const RootSystemPtr& rs, const RootSet& normals);
/// Hyperplanes of the inversion set of w.
Arrangement inversion_arrangement(const WeylElement& w);

/// A region, as the set of normals on whose negative side it lies, with the
/// Weyl chambers (GroupTable indices) it contains.
struct Region {
    RootSet minus;
    std::vector<int> witnesses;

    int distance() const { return minus.size(); }
};

/// The regions refine into Weyl chambers: the chamber of u lies on the
/// negative side of alpha iff u^{-1}(alpha) < 0. Regions are the distinct sign
/// vectors, sorted by distance and then by sign vector.
std::vector<Region> enumerate_regions(const Arrangement& arr, const GroupTable& table);
std::vector<Region> enumerate_regions(const Arrangement& arr);

/// R(q) = sum over regions of q^(number of separating hyperplanes from the base region).
IntPolynomial distance_poly(const Arrangement& arr, const GroupTable& table);
IntPolynomial distance_poly(const Arrangement& arr);

/// Regions ordered by adjacency away from the base region.
struct RegionPoset {
    std::vector<Region> regions;
    GradedPoset poset;

    std::optional<int> index_of(const RootSet& minus) const;
};

RegionPoset region_poset(const Arrangement& arr, const GroupTable& table);
RegionPoset region_poset(const Arrangement& arr);

/// Subposet of the region poset of `arr` on the regions inside the region
/// `region_of_sub` of `sub` (given by its negative set), ranks re-based to 0.
GradedPoset induced_subposet(const Arrangement& arr, const Arrangement& sub, const RootSet& region_of_sub,
                             const GroupTable& table);

/// All induced subposets over regions of `sub` are isomorphic.
bool is_uniform(const Arrangement& arr, const Arrangement& sub, const GroupTable& table);
bool is_uniform(const Arrangement& arr, const Arrangement& sub);

/// Findings for one of the product-with-a-chain configurations w = u v.
struct SpecialCaseReport {
    std::string name;
    WeylElement w, u, v;
    IntPolynomial p_w, p_u, p_v_quotient, r_w, r_u;
    /// Uniformity of A_{w^{-1}} over A_{u^{-1}} (where A_u is literally a subarrangement).
    bool uniform = false;
    /// R_w = R_u (1 + ... + q^{l(v)}).
    bool r_factor = false;
    bool p_equals_r = false;
    /// The F4 write-up also displays P_w = P_u (1 + q + q^2 + q^3); reported, not required.
    std::optional<bool> displayed_p_factor;

    bool all_required() const { return uniform && r_factor && p_equals_r; }
};

SpecialCaseReport verify_special_F4();
SpecialCaseReport verify_special_bn(int n);

/// For a BP decomposition x = u' u_K v (K = supp(v) cap J) checks that for every
/// region r of A_1 + A_0 the induced subposet of A_x over r is isomorphic to
/// the induced subposet of A_0 + A_2 over the region of A_0 containing r.
/// Arrangements are taken as left inversion sets so that they nest:
/// A_x = Delta_{x^{-1}}, A_1 + A_0 = Delta_{u^{-1}}, A_0 = u'(Delta_{u_K}).
bool verify_chamber_reduction(const BPDecomposition& bp, const GroupTable& table);

}  // namespace weyllab
