#include "weyllab/parabolic.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "weyllab/bruhat.hpp"

namespace weyllab {

std::string to_string(QuotientSide side) { return side == QuotientSide::RightFree ? "rightfree" : "leftfree"; }

QuotientSide parse_quotient_side(const std::string& text) {
    if (text == "rightfree") return QuotientSide::RightFree;
    if (text == "leftfree") return QuotientSide::LeftFree;
    throw DomainError("side must be 'rightfree' or 'leftfree', got '" + text + "'");
}

NodeMask complement_of(const RootSystem& rs, int label) {
    return rs.all_nodes() & ~(NodeMask{1} << rs.node_index(label));
}

bool in_parabolic(const WeylElement& w, NodeMask J) { return (support_mask(w) & ~J) == 0; }

bool in_quotient(const WeylElement& w, NodeMask J, QuotientSide side) {
    for (int i = 0; i < w.root_system()->rank(); ++i) {
        if (!(J >> i & 1U)) continue;
        if (side == QuotientSide::RightFree ? w.has_right_descent(i) : w.has_left_descent(i)) return false;
    }
    return true;
}

WeylElement coset_min_rep(const WeylElement& w, NodeMask J, QuotientSide side) {
    WeylElement v = w;
    const int r = w.root_system()->rank();
    for (bool stripped = true; stripped;) {
        stripped = false;
        for (int i = 0; i < r; ++i) {
            if (!(J >> i & 1U)) continue;
            if (side == QuotientSide::LeftFree && v.has_left_descent(i)) {
                v = v.simple_times(i);
                stripped = true;
            } else if (side == QuotientSide::RightFree && v.has_right_descent(i)) {
                v = v.times_simple(i);
                stripped = true;
            }
        }
    }
    return v;
}

std::pair<WeylElement, WeylElement> parabolic_decompose(const WeylElement& w, NodeMask J) {
    WeylElement v = coset_min_rep(w, J, QuotientSide::LeftFree);
    WeylElement u = w * inverse(v);
    if (u.length() + v.length() != w.length() || !in_parabolic(u, J))
        throw InvariantViolation("parabolic decomposition is not length-additive");
    return {std::move(u), std::move(v)};
}

WeylElement max_below(const WeylElement& w, NodeMask J) {
    auto interval = lower_interval(w);
    std::vector<const WeylElement*> inside;
    for (const auto& x : interval.elements)
        if (in_parabolic(x, J)) inside.push_back(&x);
    // interval.elements is sorted by length, so the last one is a candidate maximum.
    const WeylElement& top = *inside.back();
    BruhatComparator cmp;
    for (const auto* x : inside)
        if (!cmp.leq(*x, top)) throw InvariantViolation("W_J has no unique maximal element below w");
    return top;
}

std::uint64_t quotient_order(const RootSystem& rs, NodeMask J) {
    std::uint64_t sub = J == 0 ? 1 : group_order(*rs.restrict_to(J));
    return group_order(rs) / sub;
}

std::vector<WeylElement> quotient_elements(const RootSystemPtr& rs, NodeMask J, QuotientSide side,
                                           std::size_t cap) {
    const std::uint64_t expected = quotient_order(*rs, J);
    if (expected > cap) {
        throw ResourceError("quotient of " + rs->name() + " has " + std::to_string(expected) +
                            " elements, above the cap of " + std::to_string(cap));
    }
    std::vector<WeylElement> out{WeylElement(rs)};
    std::unordered_set<WeylElement, WeylElementHash> seen{out.front()};
    for (std::size_t begin = 0; begin < out.size();) {
        std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k) {
            for (int i = 0; i < rs->rank(); ++i) {
                // RightFree representatives grow on the left, LeftFree ones on the right.
                bool grows = side == QuotientSide::RightFree ? !out[k].has_left_descent(i) : !out[k].has_right_descent(i);
                if (!grows) continue;
                WeylElement next = side == QuotientSide::RightFree ? out[k].simple_times(i) : out[k].times_simple(i);
                if (!in_quotient(next, J, side)) continue;
                if (seen.insert(next).second) out.push_back(std::move(next));
            }
        }
        begin = end;
    }
    if (out.size() != expected) throw InvariantViolation("quotient size differs from |W| / |W_J|");
    return out;
}

Quotient::Quotient(RootSystemPtr rs, NodeMask J, QuotientSide side, std::size_t cap)
    : rs_(std::move(rs)), J_(J), side_(side) {
    elements_ = quotient_elements(rs_, J_, side_, cap);
    const int m = size();
    index_.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) index_.emplace(elements_[i], i);

    const int n = rs_->num_positive();
    std::vector<int> ranks(m);
    std::vector<GradedPoset::Cover> covers;
    std::vector<std::uint16_t> img(n);
    for (int i = 0; i < m; ++i) {
        const auto& v = elements_[i];
        ranks[i] = v.length();
        for (int k = 0; k < n; ++k) {
            int s = v.images()[k];
            if (s < n) continue;
            // t_alpha v is shorter than v for alpha = -v(root k).
            auto t = rs_->reflection_images(s - n);
            int len = 0;
            for (int j = 0; j < n; ++j) {
                int x = v.images()[j];
                img[j] = static_cast<std::uint16_t>(x < n ? t[x] : rs_->negate(t[x - n]));
                len += img[j] >= n;
            }
            if (len != v.length() - 1) continue;
            auto it = index_.find(WeylElement(rs_, img));
            if (it != index_.end()) covers.emplace_back(it->second, i);
        }
    }
    poset_ = GradedPoset(std::move(ranks), std::move(covers));
}

std::optional<int> Quotient::index_of(const WeylElement& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

const DynBitset& Quotient::down_set(int i) const {
    if (down_.empty()) down_ = poset_.down_sets();
    return down_[i];
}

bool Quotient::is_chain_element(int i) const {
    auto p = poincare(i);
    return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](std::int64_t c) { return c == 1; });
}

std::vector<std::string> Quotient::labels() const {
    std::vector<std::string> out;
    out.reserve(elements_.size());
    for (const auto& v : elements_) out.push_back(element_label(v));
    return out;
}

GradedPoset quotient_poset(const RootSystemPtr& rs, NodeMask J, QuotientSide side, std::size_t cap) {
    return Quotient(rs, J, side, cap).poset();
}

IntPolynomial quotient_poincare(const WeylElement& v, NodeMask J, QuotientSide side) {
    if (!in_quotient(v, J, side)) throw DomainError("element is not a minimal coset representative");
    Quotient q(v.root_system(), J, side);
    return q.poincare(*q.index_of(v));
}

std::vector<PalindromicElement> palindromic_quotient_elements(const Quotient& q) {
    std::vector<PalindromicElement> out;
    for (int i = 0; i < q.size(); ++i)
        if (q.is_palindromic_element(i)) out.push_back({q.element(i), i == 0 || i == q.top()});
    return out;
}

std::vector<PalindromicElement> palindromic_quotient_elements(const RootSystemPtr& rs, NodeMask J,
                                                              QuotientSide side) {
    return palindromic_quotient_elements(Quotient(rs, J, side));
}

std::string to_string(QuotientClass c) {
    switch (c) {
        case QuotientClass::Trivial: return "Trivial";
        case QuotientClass::LocallyLongest: return "LocallyLongest";
        case QuotientClass::LocalChain: return "LocalChain";
        case QuotientClass::SpecialF4: return "SpecialF4";
        case QuotientClass::SpecialBn: return "SpecialBn";
        case QuotientClass::NotPalindromic: return "NotPalindromic";
    }
    return "?";
}

namespace {

bool is_full_system(const RootSystem& rs) {
    const auto& d = rs.datum();
    return d.name == std::string(1, d.type_label) + std::to_string(d.rank);
}

}  // namespace

QuotientClassifier::QuotientClassifier(const Quotient& q) : q_(q) {
    const auto& rs = *q.root_system();
    NodeMask removed = rs.all_nodes() & ~q.J();
    if (std::popcount(removed) != 1)
        throw DomainError("classification needs J = S \\ {s} for a single node s");
    int idx = std::countr_zero(removed);
    leaf_ = rs.node_label(idx);
    if (rs.neighbours(idx).size() > 1)
        throw DomainError("s_" + std::to_string(leaf_) +
                          " is not a leaf of the Dynkin diagram; BP decompositions remove a leaf");
}

const Quotient& QuotientClassifier::embedded(NodeMask support) {
    auto& slot = embedded_[support];
    if (!slot) {
        const auto& rs = *q_.root_system();
        auto sub = rs.restrict_to(support);
        auto labels = rs.labels_from_mask(support & q_.J());
        slot = std::make_unique<Quotient>(sub, sub->mask_from_labels(labels), q_.side());
    }
    return *slot;
}

std::optional<std::string> QuotientClassifier::special_case(const WeylElement& v) const {
    const auto& rs = q_.root_system();
    if (!is_full_system(*rs)) return std::nullopt;
    std::vector<Word> words;
    const char type = rs->datum().type_label;
    if (type == 'F' && leaf_ == 4) words.push_back({4, 3, 2, 1});
    if (type == 'F' && leaf_ == 1) words.push_back({1, 2, 3, 4});
    if (type == 'B' && leaf_ == 0) {
        for (int k = 0; k < rs->rank(); ++k) {
            Word w;
            for (int j = 0; j <= k; ++j) w.push_back(j);
            words.push_back(std::move(w));
        }
    }
    WeylElement vinv = inverse(v);
    for (const auto& word : words) {
        WeylElement target = from_word(rs, word);
        if (v == target) return "as written";
        if (vinv == target) return "inverted";
    }
    return std::nullopt;
}

Classification QuotientClassifier::classify(int i) {
    Classification c;
    const WeylElement& v = q_.element(i);
    c.palindromic = q_.is_palindromic_element(i);
    c.chain_element = q_.is_chain_element(i);
    if (i == 0 || i == q_.top()) {
        c.tag = QuotientClass::Trivial;
        return c;
    }
    const auto& rs = *q_.root_system();
    NodeMask support = support_mask(v);
    const Quotient& eq = embedded(support);
    WeylElement local = from_word(eq.root_system(), canonical_word(v));
    c.locally_longest = rs.is_connected(support) && local == eq.element(eq.top());
    c.local_chain = eq.poset().is_chain();
    auto special = special_case(v);
    if (c.locally_longest) {
        c.tag = QuotientClass::LocallyLongest;
    } else if (c.local_chain) {
        c.tag = QuotientClass::LocalChain;
    } else if (special) {
        c.tag = rs.datum().type_label == 'F' ? QuotientClass::SpecialF4 : QuotientClass::SpecialBn;
        c.special_orientation = *special;
    } else {
        c.tag = QuotientClass::NotPalindromic;
    }
    return c;
}

Classification classify_quotient_element(const WeylElement& v, NodeMask J, QuotientSide side) {
    if (!in_quotient(v, J, side)) throw DomainError("element is not a minimal coset representative");
    Quotient q(v.root_system(), J, side);
    QuotientClassifier classifier(q);
    return classifier.classify(*q.index_of(v));
}

namespace {

std::optional<ParabolicFactorization> try_factor(const WeylElement& w, int label, bool inverted) {
    const auto& rs = *w.root_system();
    ParabolicFactorization f;
    f.w = w;
    f.removed = label;
    f.J = complement_of(rs, label);
    f.inverted = inverted;
    WeylElement x = inverted ? inverse(w) : w;
    auto [u, v] = parabolic_decompose(x, f.J);
    if (!(u == max_below(x, f.J))) return std::nullopt;
    f.u = std::move(u);
    f.v = std::move(v);
    return f;
}

}  // namespace

BPDecomposition find_bp_decomposition(const WeylElement& w) {
    if (!is_rationally_smooth(w)) throw DomainError("BP decomposition requires a rationally smooth element");
    for (int leaf : w.root_system()->leaf_labels())
        for (bool inverted : {false, true})
            if (auto f = try_factor(w, leaf, inverted)) return *f;
    throw InvariantViolation("rationally smooth element " + element_label(w) + " has no BP decomposition");
}

std::optional<ParabolicFactorization> find_max_factorization(const WeylElement& w) {
    const auto& rs = *w.root_system();
    std::vector<int> order = rs.leaf_labels();
    for (int i = 0; i < rs.rank(); ++i)
        if (std::find(order.begin(), order.end(), rs.node_label(i)) == order.end()) order.push_back(rs.node_label(i));
    for (int label : order)
        for (bool inverted : {false, true})
            if (auto f = try_factor(w, label, inverted)) return f;
    return std::nullopt;
}

bool check_factorization(const ParabolicFactorization& f) {
    WeylElement x = f.inverted ? inverse(f.w) : f.w;
    return poincare(x) == poincare(f.u) * quotient_poincare(f.v, f.J, QuotientSide::LeftFree);
}

bool check_factorization(const WeylElement& w) {
    auto f = find_max_factorization(w);
    if (!f) throw DomainError("no maximal parabolic J gives u = m(w, J) for " + element_label(w));
    return check_factorization(*f);
}

bool right_descent_property(const BPDecomposition& bp) {
    const auto& rs = bp.u.root_system();
    NodeMask shared = support_mask(bp.v) & bp.J;
    for (int i = 0; i < rs->rank(); ++i)
        if ((shared >> i & 1U) && !bp.u.has_right_descent(i)) return false;
    WeylElement longest = longest_element(rs, shared);
    WeylElement head = bp.u * inverse(longest);
    return head.length() + longest.length() == bp.u.length();
}

bool right_descent_property(const WeylElement& w) { return right_descent_property(find_bp_decomposition(w)); }

}  // namespace weyllab
