#include "weyllab/export.hpp"

#include <sstream>

#include <json.hpp>

#include "weyllab/errors.hpp"

namespace weyllab {

namespace {

void check_labels(const GradedPoset& poset, const std::vector<std::string>& labels) {
    if (static_cast<int>(labels.size()) != poset.size()) throw DomainError("one label per poset element required");
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string to_dot(const GradedPoset& poset, const std::vector<std::string>& labels, std::string_view name) {
    check_labels(poset, labels);
    std::ostringstream os;
    os << "digraph \"" << dot_escape(std::string(name)) << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int i = 0; i < poset.size(); ++i)
        os << "  n" << i << " [label=\"" << dot_escape(labels[i]) << "\"];\n";
    for (auto [lo, hi] : poset.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
    // Same-rank nodes on one row.
    auto sizes = poset.rank_sizes();
    for (int r = 0; r < static_cast<int>(sizes.size()); ++r) {
        if (sizes[r] < 2) continue;
        os << "  { rank=same;";
        for (int i = 0; i < poset.size(); ++i)
            if (poset.rank(i) == r) os << " n" << i << ";";
        os << " }\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_json(const GradedPoset& poset, const std::vector<std::string>& labels) {
    check_labels(poset, labels);
    nlohmann::ordered_json j;
    j["elements"] = labels;
    j["ranks"] = poset.ranks();
    auto covers = nlohmann::ordered_json::array();
    for (auto [lo, hi] : poset.covers()) covers.push_back({lo, hi});
    j["covers"] = std::move(covers);
    return j.dump(2) + "\n";
}

}  // namespace weyllab
