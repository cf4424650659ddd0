#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "weyllab/errors.hpp"

namespace weyllab {

/// Coefficients of a root in the basis of simple roots.
using Root = Eigen::VectorXi;

/// Bitmask over node *indices* (0..rank-1) of a Dynkin diagram.
using NodeMask = std::uint32_t;

/// Finite crystallographic Cartan datum.
///
/// `cartan(i, j)` is the pairing <alpha_i^vee, alpha_j>, so the simple
/// reflection acts by s_i(beta) = beta - (cartan.row(i) . beta) alpha_i.
/// Node labels follow the usual diagram numbering: A_n, E, F4, G2 count from 1;
/// B_n and D_n count from 0 (s_0 is the short end of B_n, s_0/s_1 the fork of D_n).
struct CartanDatum {
    char type_label = 'A';
    int rank = 0;
    Eigen::MatrixXi cartan;
    std::vector<int> node_labels;
    /// "B3", or "F4[2,3,4]" for a restriction to a sub-diagram.
    std::string name;
};

/// Cartan datum for one of the supported finite types; throws ConfigError
/// naming the violated bound otherwise.
CartanDatum make_cartan_datum(char type_label, int rank);

/// Parses "A3", "e8", "B4" into (type, rank). Throws ConfigError.
std::pair<char, int> parse_group_spec(const std::string& text);

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Positive roots of a finite root system together with the action of every
/// simple reflection and every reflection on signed root indices.
///
/// A signed index s in [0, 2N) denotes the positive root s when s < N and the
/// negative of root s - N otherwise. Root k < rank is the simple root of node
/// index k. Immutable after construction.
class RootSystem {
public:
    static RootSystemPtr create(CartanDatum datum);

    const CartanDatum& datum() const { return datum_; }
    const std::string& name() const { return datum_.name; }
    int rank() const { return datum_.rank; }
    int num_positive() const { return static_cast<int>(roots_.size()); }

    const Root& positive_root(int k) const { return roots_.at(k); }
    int height(int k) const { return roots_[k].sum(); }

    /// Signed index of a root given by coefficients, or nullopt if it is not a root.
    std::optional<int> find_root(const Root& coeffs) const;
    Root signed_root(int s) const;

    bool is_positive(int s) const { return s < num_positive(); }
    int negate(int s) const { return s < num_positive() ? s + num_positive() : s - num_positive(); }

    /// Image of signed index s under the simple reflection at node index i.
    int act(int i, int s) const { return action_[i][s]; }
    std::span<const std::uint16_t> action_table(int i) const { return action_[i]; }

    /// Images of the positive roots under the reflection t_alpha for root k.
    std::span<const std::uint16_t> reflection_images(int k) const { return reflections_[k]; }

    int node_index(int label) const;
    int node_label(int index) const { return datum_.node_labels[index]; }
    bool has_label(int label) const;
    NodeMask all_nodes() const { return (NodeMask{1} << rank()) - 1; }
    NodeMask mask_from_labels(std::span<const int> labels) const;
    std::vector<int> labels_from_mask(NodeMask mask) const;

    /// Dynkin-diagram neighbours (node indices).
    const std::vector<int>& neighbours(int i) const { return neighbours_[i]; }
    /// Leaf node labels in ascending order (the single node of a rank-1 system counts).
    std::vector<int> leaf_labels() const;
    bool is_connected(NodeMask nodes) const;

    /// Root system of the sub-diagram on `nodes`, keeping the original labels.
    RootSystemPtr restrict_to(NodeMask nodes) const;

private:
    explicit RootSystem(CartanDatum datum);

    CartanDatum datum_;
    std::vector<Root> roots_;
    std::vector<std::vector<std::uint16_t>> action_;
    std::vector<std::vector<std::uint16_t>> reflections_;
    std::vector<std::vector<int>> neighbours_;
};

RootSystemPtr build_root_system(char type_label, int rank);
RootSystemPtr build_root_system(const std::string& spec);

/// s_i(beta) for the node labelled `label`; throws DomainError if beta is not a root.
Root reflect_root(const RootSystem& rs, int label, const Root& beta);

/// Number of positive roots predicted by the classification tables.
int expected_positive_root_count(char type_label, int rank);

}  // namespace weyllab
