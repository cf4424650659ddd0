#include "weyllab/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

#include "weyllab/rootset.hpp"

namespace weyllab {

namespace {

std::vector<int> key_of(const Root& r) { return {r.data(), r.data() + r.size()}; }

void bond(Eigen::MatrixXi& c, int i, int j) {
    c(i, j) = -1;
    c(j, i) = -1;
}

}  // namespace

int expected_positive_root_count(char type_label, int rank) {
    switch (type_label) {
        case 'A': return rank * (rank + 1) / 2;
        case 'B': return rank * rank;
        case 'D': return rank * (rank - 1);
        case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
        default: throw ConfigError(std::string("unknown type ") + type_label);
    }
}

CartanDatum make_cartan_datum(char type_label, int rank) {
    type_label = static_cast<char>(std::toupper(static_cast<unsigned char>(type_label)));
    auto fail = [&](const std::string& why) {
        std::ostringstream os;
        os << "unsupported root system " << type_label << rank << ": " << why;
        throw ConfigError(os.str());
    };
    if (type_label == 'C') fail("type C has the same Weyl group as type B; use B" + std::to_string(rank));
    if (rank < 1) fail("rank must be positive");

    CartanDatum d;
    d.type_label = type_label;
    d.rank = rank;
    d.name = std::string(1, type_label) + std::to_string(rank);
    d.cartan = 2 * Eigen::MatrixXi::Identity(rank, rank);
    auto& c = d.cartan;
    int first_label = 1;

    switch (type_label) {
        case 'A':
            if (rank > 15) fail("rank must be at most 15");
            for (int i = 0; i + 1 < rank; ++i) bond(c, i, i + 1);
            break;
        case 'B':
            if (rank < 2) fail("type B requires rank >= 2");
            if (rank > 11) fail("rank must be at most 11");
            first_label = 0;
            for (int i = 0; i + 1 < rank; ++i) bond(c, i, i + 1);
            // alpha_0 short: <alpha_1, alpha_0^vee> = -2
            c(0, 1) = -2;
            break;
        case 'D':
            if (rank < 4) fail("type D requires rank >= 4");
            if (rank > 11) fail("rank must be at most 11");
            first_label = 0;
            bond(c, 0, 2);
            for (int i = 1; i + 1 < rank; ++i) bond(c, i, i + 1);
            break;
        case 'E':
            if (rank < 6 || rank > 8) fail("type E requires rank in {6,7,8}");
            // Bourbaki labels: 1-3-4-5-6-7-8 with 2 attached to 4
            bond(c, 0, 2);
            bond(c, 2, 3);
            bond(c, 1, 3);
            for (int i = 3; i + 1 < rank; ++i) bond(c, i, i + 1);
            break;
        case 'F':
            if (rank != 4) fail("type F requires rank 4");
            bond(c, 0, 1);
            bond(c, 1, 2);
            bond(c, 2, 3);
            // s_1, s_2 long: <alpha_2, alpha_3^vee> = -2
            c(2, 1) = -2;
            break;
        case 'G':
            if (rank != 2) fail("type G requires rank 2");
            // <alpha_1, alpha_2^vee> = -3
            c(0, 1) = -1;
            c(1, 0) = -3;
            break;
        default:
            fail("type must be one of A, B, D, E, F, G");
    }
    d.node_labels.resize(rank);
    for (int i = 0; i < rank; ++i) d.node_labels[i] = first_label + i;
    return d;
}

std::pair<char, int> parse_group_spec(const std::string& text) {
    if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
        throw ConfigError("cannot parse group '" + text + "' (expected e.g. A3, B4, E8)");
    char t = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    int rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ConfigError("cannot parse group '" + text + "' (expected e.g. A3, B4, E8)");
        rank = rank * 10 + (text[i] - '0');
        if (rank > 1000) throw ConfigError("rank out of range in '" + text + "'");
    }
    return {t, rank};
}

RootSystemPtr RootSystem::create(CartanDatum datum) {
    return RootSystemPtr(new RootSystem(std::move(datum)));
}

RootSystemPtr build_root_system(char type_label, int rank) {
    return RootSystem::create(make_cartan_datum(type_label, rank));
}

RootSystemPtr build_root_system(const std::string& spec) {
    auto [t, r] = parse_group_spec(spec);
    return build_root_system(t, r);
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
    const int r = datum_.rank;
    const auto& c = datum_.cartan;
    if (c.rows() != r || c.cols() != r || static_cast<int>(datum_.node_labels.size()) != r)
        throw ConfigError("Cartan datum dimensions do not match its rank");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j ? c(i, j) != 2 : (c(i, j) > 0 || c(i, j) < -3 || (c(i, j) == 0) != (c(j, i) == 0)))
                throw ConfigError("malformed Cartan matrix for " + datum_.name);
        }

    // Closure of the simple roots under simple reflections, positive part only.
    std::map<std::vector<int>, int> seen;
    std::vector<Root> found;
    std::deque<int> queue;
    for (int i = 0; i < r; ++i) {
        Root e = Root::Zero(r);
        e(i) = 1;
        seen.emplace(key_of(e), static_cast<int>(found.size()));
        queue.push_back(static_cast<int>(found.size()));
        found.push_back(e);
    }
    while (!queue.empty()) {
        Root beta = found[queue.front()];
        queue.pop_front();
        for (int i = 0; i < r; ++i) {
            Root gamma = beta;
            gamma(i) -= c.row(i).dot(beta);
            if ((gamma.array() < 0).any()) continue;
            if (seen.emplace(key_of(gamma), static_cast<int>(found.size())).second) {
                queue.push_back(static_cast<int>(found.size()));
                found.push_back(gamma);
            }
            if (found.size() > static_cast<std::size_t>(RootSet::kCapacity))
                throw ConfigError(datum_.name + " has more positive roots than supported (128)");
        }
    }

    // Height first, then lexicographically descending so that simple root i gets index i.
    std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) {
        if (a.sum() != b.sum()) return a.sum() < b.sum();
        return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
    });
    roots_ = std::move(found);
    const int n = num_positive();

    action_.assign(r, std::vector<std::uint16_t>(2 * n));
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < n; ++k) {
            Root gamma = roots_[k];
            gamma(i) -= c.row(i).dot(roots_[k]);
            auto s = find_root(gamma);
            if (!s) throw InvariantViolation("root system not closed under simple reflections");
            action_[i][k] = static_cast<std::uint16_t>(*s);
            action_[i][k + n] = static_cast<std::uint16_t>(negate(*s));
        }
    }

    // t_beta = s_i t_gamma s_i whenever beta = s_i(gamma) with gamma of smaller height.
    reflections_.assign(n, {});
    auto apply = [n](const std::vector<std::uint16_t>& img, int s) {
        return s < n ? img[s] : static_cast<int>(img[s - n]) < n ? img[s - n] + n : img[s - n] - n;
    };
    for (int k = 0; k < n; ++k) {
        auto& t = reflections_[k];
        t.resize(n);
        if (k < r) {
            for (int m = 0; m < n; ++m) t[m] = action_[k][m];
            continue;
        }
        int via = -1, from = -1;
        for (int i = 0; i < r && via < 0; ++i) {
            int s = action_[i][k];
            if (s < n && height(s) < height(k)) {
                via = i;
                from = s;
            }
        }
        if (via < 0) throw InvariantViolation("non-simple positive root with no descending reflection");
        const auto& inner = reflections_[from];
        for (int m = 0; m < n; ++m) {
            int s = action_[via][m];
            s = apply(inner, s);
            t[m] = action_[via][s];
        }
    }

    neighbours_.assign(r, {});
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j && c(i, j) != 0) neighbours_[i].push_back(j);
}

std::optional<int> RootSystem::find_root(const Root& coeffs) const {
    if (coeffs.size() != rank()) return std::nullopt;
    bool neg = (coeffs.array() < 0).any();
    Root pos = neg ? Root(-coeffs) : coeffs;
    if ((pos.array() < 0).any() || pos.sum() == 0) return std::nullopt;
    // roots_ is sorted by height, then descending lex; binary search on that order.
    auto it = std::lower_bound(roots_.begin(), roots_.end(), pos, [](const Root& a, const Root& b) {
        if (a.sum() != b.sum()) return a.sum() < b.sum();
        return std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(), a.data() + a.size());
    });
    if (it == roots_.end() || *it != pos) return std::nullopt;
    int k = static_cast<int>(it - roots_.begin());
    return neg ? k + num_positive() : k;
}

Root RootSystem::signed_root(int s) const {
    return is_positive(s) ? roots_[s] : Root(-roots_[s - num_positive()]);
}

int RootSystem::node_index(int label) const {
    const auto& labels = datum_.node_labels;
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw DomainError("s_" + std::to_string(label) + " is not a node of " + datum_.name);
    return static_cast<int>(it - labels.begin());
}

bool RootSystem::has_label(int label) const {
    const auto& labels = datum_.node_labels;
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

NodeMask RootSystem::mask_from_labels(std::span<const int> labels) const {
    NodeMask m = 0;
    for (int l : labels) m |= NodeMask{1} << node_index(l);
    return m;
}

std::vector<int> RootSystem::labels_from_mask(NodeMask mask) const {
    std::vector<int> out;
    for (int i = 0; i < rank(); ++i)
        if (mask >> i & 1U) out.push_back(node_label(i));
    return out;
}

std::vector<int> RootSystem::leaf_labels() const {
    std::vector<int> out;
    for (int i = 0; i < rank(); ++i)
        if (neighbours_[i].size() <= 1) out.push_back(node_label(i));
    return out;
}

bool RootSystem::is_connected(NodeMask nodes) const {
    if (nodes == 0) return true;
    NodeMask reached = nodes & (~nodes + 1);
    for (bool grew = true; grew;) {
        grew = false;
        for (int i = 0; i < rank(); ++i) {
            if (!(reached >> i & 1U)) continue;
            for (int j : neighbours_[i]) {
                NodeMask bit = NodeMask{1} << j;
                if ((nodes & bit) && !(reached & bit)) {
                    reached |= bit;
                    grew = true;
                }
            }
        }
    }
    return reached == nodes;
}

RootSystemPtr RootSystem::restrict_to(NodeMask nodes) const {
    std::vector<int> idx;
    for (int i = 0; i < rank(); ++i)
        if (nodes >> i & 1U) idx.push_back(i);
    if (idx.empty()) throw DomainError("cannot restrict to an empty set of nodes");
    CartanDatum d;
    d.type_label = datum_.type_label;
    d.rank = static_cast<int>(idx.size());
    d.cartan.resize(d.rank, d.rank);
    std::ostringstream name;
    name << datum_.name << '[';
    for (int a = 0; a < d.rank; ++a) {
        d.node_labels.push_back(node_label(idx[a]));
        name << (a ? "," : "") << node_label(idx[a]);
        for (int b = 0; b < d.rank; ++b) d.cartan(a, b) = datum_.cartan(idx[a], idx[b]);
    }
    name << ']';
    d.name = name.str();
    return create(std::move(d));
}

Root reflect_root(const RootSystem& rs, int label, const Root& beta) {
    int i = rs.node_index(label);
    if (!rs.find_root(beta)) throw DomainError("reflect_root: argument is not a root of " + rs.name());
    Root gamma = beta;
    gamma(i) -= rs.datum().cartan.row(i).dot(beta);
    return gamma;
}

}  // namespace weyllab
