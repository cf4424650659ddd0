#include "weyllab/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace weyllab {

WeylElement::WeylElement(RootSystemPtr rs) : rs_(std::move(rs)) {
    images_.resize(rs_->num_positive());
    for (int k = 0; k < rs_->num_positive(); ++k) images_[k] = static_cast<std::uint16_t>(k);
    finish();
}

WeylElement::WeylElement(RootSystemPtr rs, std::vector<std::uint16_t> images)
    : rs_(std::move(rs)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != rs_->num_positive())
        throw DomainError("image table size does not match the root system");
    finish();
}

void WeylElement::finish() {
    const int n = rs_->num_positive();
    length_ = 0;
    std::size_t h = 1469598103934665603ULL;
    for (auto s : images_) {
        length_ += s >= n;
        h = (h ^ s) * 1099511628211ULL;
    }
    hash_ = h;
}

bool WeylElement::has_left_descent(int node) const {
    // w^{-1}(alpha_i) < 0  iff  w maps some positive root to -alpha_i
    const auto target = static_cast<std::uint16_t>(node + rs_->num_positive());
    return std::find(images_.begin(), images_.end(), target) != images_.end();
}

WeylElement WeylElement::times_simple(int node) const {
    std::vector<std::uint16_t> img(images_.size());
    for (std::size_t k = 0; k < img.size(); ++k)
        img[k] = static_cast<std::uint16_t>(apply(rs_->act(node, static_cast<int>(k))));
    return {rs_, std::move(img)};
}

WeylElement WeylElement::simple_times(int node) const {
    std::vector<std::uint16_t> img(images_.size());
    for (std::size_t k = 0; k < img.size(); ++k) img[k] = static_cast<std::uint16_t>(rs_->act(node, images_[k]));
    return {rs_, std::move(img)};
}

WeylElement identity(const RootSystemPtr& rs) { return WeylElement(rs); }

WeylElement simple_reflection(const RootSystemPtr& rs, int label) {
    int i = rs->node_index(label);
    auto t = rs->action_table(i);
    return {rs, std::vector<std::uint16_t>(t.begin(), t.begin() + rs->num_positive())};
}

WeylElement from_word(const RootSystemPtr& rs, const Word& word) {
    std::vector<int> nodes;
    nodes.reserve(word.size());
    for (int label : word) nodes.push_back(rs->node_index(label));
    WeylElement w(rs);
    for (int i : nodes) w = w.times_simple(i);
    return w;
}

Word parse_word(const std::string& text) {
    Word out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size()) throw ConfigError("bad letter '" + token + "' in word");
        out.push_back(v);
        token.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '[' || ch == ']') {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    flush();
    return out;
}

std::string format_word(const Word& word) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
    os << ']';
    return os.str();
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
    if (a.root_system() != b.root_system() && a.root_system()->datum().name != b.root_system()->datum().name)
        throw DomainError("cannot multiply elements of different root systems");
    std::vector<std::uint16_t> img(b.images().size());
    for (std::size_t k = 0; k < img.size(); ++k) img[k] = static_cast<std::uint16_t>(a.apply(b.images()[k]));
    return {a.root_system(), std::move(img)};
}

WeylElement inverse(const WeylElement& a) {
    const auto& rs = a.root_system();
    const int n = rs->num_positive();
    std::vector<std::uint16_t> img(n);
    for (int k = 0; k < n; ++k) {
        int s = a.images()[k];
        // a(k) = s  =>  a^{-1}(s) = k ; a^{-1}(-s) = -k
        if (s < n)
            img[s] = static_cast<std::uint16_t>(k);
        else
            img[s - n] = static_cast<std::uint16_t>(k + n);
    }
    return {rs, std::move(img)};
}

Word canonical_word(const WeylElement& w) {
    // Left descents of w are the right descents of w^{-1}; stripping s_i on the
    // left of w is multiplying w^{-1} by s_i on the right.
    const auto& rs = w.root_system();
    WeylElement inv = inverse(w);
    Word out;
    out.reserve(w.length());
    while (!inv.is_identity()) {
        int best = -1;
        for (int i = 0; i < rs->rank(); ++i) {
            if (inv.has_right_descent(i) && (best < 0 || rs->node_label(i) < rs->node_label(best))) best = i;
        }
        out.push_back(rs->node_label(best));
        inv = inv.times_simple(best);
    }
    return out;
}

std::string element_label(const WeylElement& w) {
    if (w.is_identity()) return "id";
    std::string s;
    for (int l : canonical_word(w)) s += "s" + std::to_string(l);
    return s;
}

std::vector<int> descents(const WeylElement& w, Side side) {
    const auto& rs = w.root_system();
    std::vector<int> out;
    for (int i = 0; i < rs->rank(); ++i) {
        bool d = side == Side::Right ? w.has_right_descent(i) : w.has_left_descent(i);
        if (d) out.push_back(rs->node_label(i));
    }
    std::sort(out.begin(), out.end());
    return out;
}

RootSet inversion_set(const WeylElement& w) {
    RootSet out;
    const int n = w.root_system()->num_positive();
    for (int k = 0; k < n; ++k)
        if (w.images()[k] >= n) out.insert(k);
    return out;
}

std::vector<Root> inversion_roots(const WeylElement& w) {
    std::vector<Root> out;
    inversion_set(w).for_each([&](int k) { out.push_back(w.root_system()->positive_root(k)); });
    return out;
}

WeylElement reflection_for_root(const RootSystemPtr& rs, int root_index) {
    if (root_index < 0 || root_index >= rs->num_positive())
        throw DomainError("reflection_for_root: index is not a positive root");
    auto t = rs->reflection_images(root_index);
    return {rs, std::vector<std::uint16_t>(t.begin(), t.end())};
}

WeylElement reflection_for_root(const RootSystemPtr& rs, const Root& alpha) {
    auto s = rs->find_root(alpha);
    if (!s || !rs->is_positive(*s)) throw DomainError("reflection_for_root: not a positive root of " + rs->name());
    return reflection_for_root(rs, *s);
}

NodeMask support_mask(const WeylElement& w) {
    const auto& rs = w.root_system();
    NodeMask m = 0;
    for (int l : canonical_word(w)) m |= NodeMask{1} << rs->node_index(l);
    return m;
}

std::vector<int> support(const WeylElement& w) {
    return w.root_system()->labels_from_mask(support_mask(w));
}

WeylElement longest_element(const RootSystemPtr& rs, NodeMask nodes) {
    WeylElement w(rs);
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < rs->rank(); ++i) {
            if ((nodes >> i & 1U) && !w.has_right_descent(i)) {
                w = w.times_simple(i);
                grew = true;
            }
        }
    }
    return w;
}

std::vector<WeylElement> enumerate_group(const RootSystemPtr& rs, std::size_t cap) {
    std::uint64_t order = group_order(*rs);
    if (order > cap) {
        throw ResourceError("group " + rs->name() + " has " + std::to_string(order) +
                            " elements, above the enumeration cap of " + std::to_string(cap));
    }
    std::vector<WeylElement> out{WeylElement(rs)};
    std::unordered_set<WeylElement, WeylElementHash> seen{out.front()};
    // Each layer is extended from the previous one only, so `out` stays sorted by length.
    for (std::size_t begin = 0; begin < out.size();) {
        std::size_t end = out.size();
        for (std::size_t k = begin; k < end; ++k) {
            for (int i = 0; i < rs->rank(); ++i) {
                if (out[k].has_right_descent(i)) continue;
                WeylElement next = out[k].times_simple(i);
                if (seen.insert(next).second) out.push_back(std::move(next));
            }
        }
        begin = end;
    }
    if (out.size() != order) throw InvariantViolation("group enumeration does not match the order formula");
    return out;
}

std::uint64_t group_order(const RootSystem& rs) {
    // The number of positive roots of each height is the dual partition of the
    // exponents (also for reducible systems, where both sides add up), and
    // |W| is the product of (exponent + 1).
    const int n = rs.num_positive();
    std::vector<int> per_height;
    for (int k = 0; k < n; ++k) {
        int h = rs.height(k);
        if (static_cast<int>(per_height.size()) < h) per_height.resize(h, 0);
        ++per_height[h - 1];
    }
    std::uint64_t order = 1;
    for (int j = 1; j <= rs.rank(); ++j) {
        int m = 0;
        for (int c : per_height) m += c >= j;
        order *= static_cast<std::uint64_t>(m + 1);
    }
    return order;
}

}  // namespace weyllab
