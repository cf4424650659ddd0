#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weyllab/bitset.hpp"
#include "weyllab/polynomial.hpp"
#include "weyllab/poset.hpp"
#include "weyllab/weyl.hpp"

namespace weyllab {

/// Which descents a minimal coset representative avoids.
///   RightFree: no right descent in J (W^J, cosets w W_J).
///   LeftFree:  no left descent in J  (^J W, cosets W_J w).
/// Inversion exchanges the two.
enum class QuotientSide { RightFree, LeftFree };

std::string to_string(QuotientSide side);
QuotientSide parse_quotient_side(const std::string& text);

inline constexpr std::size_t kDefaultQuotientCap = 100'000;

/// J = S \ {s_label}.
NodeMask complement_of(const RootSystem& rs, int label);
bool in_parabolic(const WeylElement& w, NodeMask J);
bool in_quotient(const WeylElement& w, NodeMask J, QuotientSide side);

/// Minimal representative of w W_J (RightFree) or W_J w (LeftFree).
WeylElement coset_min_rep(const WeylElement& w, NodeMask J, QuotientSide side);

/// w = u v with u in W_J, v in ^J W and l(w) = l(u) + l(v).
std::pair<WeylElement, WeylElement> parabolic_decompose(const WeylElement& w, NodeMask J);

/// Maximal element of W_J below w. Throws InvariantViolation if the maximum
/// is not unique.
WeylElement max_below(const WeylElement& w, NodeMask J);

/// |W| / |W_J|.
std::uint64_t quotient_order(const RootSystem& rs, NodeMask J);

/// Minimal coset representatives, breadth-first from the identity.
std::vector<WeylElement> quotient_elements(const RootSystemPtr& rs, NodeMask J, QuotientSide side,
                                           std::size_t cap = kDefaultQuotientCap);

/// A parabolic quotient with its induced Bruhat order. Elements are sorted by
/// length; element 0 is the identity and the last one is the longest.
class Quotient {
public:
    Quotient(RootSystemPtr rs, NodeMask J, QuotientSide side, std::size_t cap = kDefaultQuotientCap);

    const RootSystemPtr& root_system() const { return rs_; }
    NodeMask J() const { return J_; }
    QuotientSide side() const { return side_; }

    int size() const { return static_cast<int>(elements_.size()); }
    const WeylElement& element(int i) const { return elements_[i]; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::optional<int> index_of(const WeylElement& w) const;
    int top() const { return size() - 1; }

    const GradedPoset& poset() const { return poset_; }
    const DynBitset& down_set(int i) const;

    /// Rank generating function of the quotient interval [id, v].
    IntPolynomial poincare(int i) const { return poset_.lower_rank_function(down_set(i)); }
    bool is_palindromic_element(int i) const { return weyllab::is_palindromic(poincare(i)); }
    /// [id, v] inside the quotient is a chain.
    bool is_chain_element(int i) const;

    std::vector<std::string> labels() const;

private:
    RootSystemPtr rs_;
    NodeMask J_;
    QuotientSide side_;
    std::vector<WeylElement> elements_;
    std::unordered_map<WeylElement, int, WeylElementHash> index_;
    GradedPoset poset_;
    mutable std::vector<DynBitset> down_;
};

GradedPoset quotient_poset(const RootSystemPtr& rs, NodeMask J, QuotientSide side,
                           std::size_t cap = kDefaultQuotientCap);

/// Poincare polynomial of v in the quotient; DomainError if v is not a minimal representative.
IntPolynomial quotient_poincare(const WeylElement& v, NodeMask J, QuotientSide side);

struct PalindromicElement {
    WeylElement v;
    bool trivial;  // identity or the longest representative
};

std::vector<PalindromicElement> palindromic_quotient_elements(const Quotient& q);
std::vector<PalindromicElement> palindromic_quotient_elements(const RootSystemPtr& rs, NodeMask J,
                                                              QuotientSide side);

enum class QuotientClass { Trivial, LocallyLongest, LocalChain, SpecialF4, SpecialBn, NotPalindromic };

std::string to_string(QuotientClass c);

struct Classification {
    QuotientClass tag = QuotientClass::NotPalindromic;
    /// Computed independently from the quotient Poincare polynomial.
    bool palindromic = false;
    bool locally_longest = false;
    bool local_chain = false;
    bool chain_element = false;
    /// For special cases: "as written" or "inverted", relative to the reference word (s_1s_2s_3s_4 / s_0...s_k, left-descent-free).
    std::string special_orientation;

    /// The structural tag predicts palindromicity.
    bool consistent() const { return (tag != QuotientClass::NotPalindromic) == palindromic; }
};

/// Classifies elements of a leaf-removed quotient (J = S \ {leaf}). Embedded
/// quotients W_I^{I cap J} are built on the restricted root system and cached by I.
class QuotientClassifier {
public:
    explicit QuotientClassifier(const Quotient& q);

    Classification classify(int i);
    /// The embedded quotient for support I (sub-diagram root system).
    const Quotient& embedded(NodeMask support);
    int removed_leaf() const { return leaf_; }

private:
    std::optional<std::string> special_case(const WeylElement& v) const;

    const Quotient& q_;
    int leaf_;
    std::map<NodeMask, std::unique_ptr<Quotient>> embedded_;
};

Classification classify_quotient_element(const WeylElement& v, NodeMask J, QuotientSide side);

/// w (or w^{-1} when `inverted`) = u v with u = m(., J) and S \ J = {removed}.
struct ParabolicFactorization {
    WeylElement w;
    int removed = 0;
    NodeMask J = 0;
    WeylElement u, v;
    bool inverted = false;
};
using BPDecomposition = ParabolicFactorization;

/// First leaf (ascending label), w before w^{-1}, whose decomposition has u = m(., J).
/// Throws DomainError unless w is rationally smooth; InvariantViolation if none exists.
BPDecomposition find_bp_decomposition(const WeylElement& w);

/// Any maximal J (leaves first) with u = m(., J), or nullopt.
std::optional<ParabolicFactorization> find_max_factorization(const WeylElement& w);

/// P_w == P_u * P_v^{quotient} for the factorization.
bool check_factorization(const ParabolicFactorization& f);
/// As above for the first factorization found; DomainError if there is none.
bool check_factorization(const WeylElement& w);

/// Every node of supp(v) cap J is a right descent of u, and u = u' u_{I cap J}
/// with u_{I cap J} longest in W_{I cap J} and lengths adding up.
bool right_descent_property(const BPDecomposition& bp);
bool right_descent_property(const WeylElement& w);

}  // namespace weyllab
