#include "weyllab/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "weyllab/arrangement.hpp"
#include "weyllab/bruhat.hpp"
#include "weyllab/export.hpp"
#include "weyllab/group_table.hpp"
#include "weyllab/mlattice.hpp"
#include "weyllab/parallel.hpp"

namespace weyllab::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kMaxCounterexamples = 20;
constexpr int kMaxMlatticeCli = 10;

std::size_t cap_or(const Options& opt, std::size_t fallback) { return opt.cap.value_or(fallback); }

std::string join(const std::vector<std::int64_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::unique_ptr<GroupTable> group_table(const RootSystemPtr& rs, const Options& opt) {
    std::size_t cap = cap_or(opt, kDefaultGroupCap);
    if (group_order(*rs) > cap) {
        std::string list;
        for (const auto& g : feasible_groups(cap)) list += (list.empty() ? "" : " ") + g;
        throw ResourceError(rs->name() + " has " + std::to_string(group_order(*rs)) +
                            " elements, above the cap of " + std::to_string(cap) + "; feasible groups: " + list);
    }
    return std::make_unique<GroupTable>(rs, cap);
}

}  // namespace

std::vector<std::string> feasible_groups(std::size_t cap) {
    std::vector<std::pair<char, int>> candidates;
    for (int n = 1; n <= 15; ++n) candidates.emplace_back('A', n);
    for (int n = 2; n <= 11; ++n) candidates.emplace_back('B', n);
    for (int n = 4; n <= 11; ++n) candidates.emplace_back('D', n);
    for (int n = 6; n <= 8; ++n) candidates.emplace_back('E', n);
    candidates.emplace_back('F', 4);
    candidates.emplace_back('G', 2);
    std::vector<std::string> out;
    for (auto [t, n] : candidates) {
        auto rs = build_root_system(t, n);
        if (group_order(*rs) <= cap) out.push_back(rs->name());
    }
    return out;
}

PolyResult cmd_poincare(const std::string& group, const std::string& word, const Options& opt) {
    auto rs = build_root_system(group);
    PolyResult res;
    res.group = rs->name();
    res.word = parse_word(word);
    WeylElement w = from_word(rs, res.word);
    res.length = w.length();
    res.poly = poincare(w, cap_or(opt, kDefaultIntervalCap));
    return res;
}

PolyResult cmd_regions(const std::string& group, const std::string& word, const Options& opt) {
    auto rs = build_root_system(group);
    PolyResult res;
    res.group = rs->name();
    res.word = parse_word(word);
    WeylElement w = from_word(rs, res.word);
    res.length = w.length();
    auto table = group_table(rs, opt);
    res.poly = distance_poly(inversion_arrangement(w), *table);
    res.regions = res.poly.at_one();
    return res;
}

VerificationReport cmd_verify_main(const std::string& group, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    auto rs = build_root_system(group);
    auto table = group_table(rs, opt);
    auto p = table->all_poincare();
    std::vector<IntPolynomial> r(static_cast<std::size_t>(table->size()));
    parallel_for(table->size(), opt.threads, [&](int i) {
        r[i] = distance_poly(Arrangement{rs, table->inversion_set(i)}, *table);
    });

    VerificationReport rep;
    rep.scope = rs->name();
    rep.scanned = table->size();
    for (int i = 0; i < table->size(); ++i) {
        bool smooth = is_palindromic(p[i]);
        rep.rationally_smooth += smooth;
        if (smooth == (p[i] == r[i]) && is_palindromic(r[i])) continue;
        ++rep.failures;
        if (rep.counterexamples.size() < kMaxCounterexamples)
            rep.counterexamples.push_back({canonical_word(table->element(i)), p[i], r[i]});
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

QuotientReport cmd_quotient(const std::string& group, int removed, QuotientSide side, const Options& opt) {
    auto rs = build_root_system(group);
    Quotient q(rs, complement_of(*rs, removed), side, cap_or(opt, kDefaultQuotientCap));
    QuotientClassifier classifier(q);

    QuotientReport rep;
    rep.group = rs->name();
    rep.removed = removed;
    rep.side = side;
    rep.size = q.size();
    rep.rank_sizes = q.poset().rank_sizes();
    rep.chain = q.poset().is_chain();
    for (int i = 0; i < q.size(); ++i) {
        Classification c = classifier.classify(i);
        rep.mismatches += !c.consistent();
        if (c.palindromic && c.tag != QuotientClass::Trivial)
            rep.nontrivial.push_back({canonical_word(q.element(i)), c.tag, c.special_orientation});
    }
    return rep;
}

MLatticeReport cmd_mlattice(int n) {
    if (n < 0 || n > kMaxMlatticeCli)
        throw ResourceError("mlattice is limited to n <= " + std::to_string(kMaxMlatticeCli));
    MLattice m = mn_poset(n);
    MLatticeReport rep;
    rep.n = n;
    rep.size = m.poset.size();
    rep.rank_sizes = m.poset.rank_sizes();
    auto brute = mn_palindromic(n);
    for (MnSet a : brute) rep.palindromic.push_back(mn_label(a, n));
    rep.closed_form_agrees = brute == mn_palindromic_closed_form(n);
    return rep;
}

IsoReport cmd_verify_iso(const std::string& group, int removed) {
    auto [type, rank] = parse_group_spec(group);
    IsoReport rep;
    rep.group = build_root_system(type, rank)->name();
    rep.removed = removed;
    if (type == 'B' && removed == 0) {
        rep.m = rank;
        rep.isomorphic = verify_iso_bn(rank);
    } else if (type == 'D' && (removed == 0 || removed == 1)) {
        rep.m = rank - 1;
        rep.isomorphic = verify_iso_dn(rank, removed);
    } else {
        throw DomainError("verify-iso compares B_n minus s_0 with M(n) and D_n minus s_0 or s_1 with M(n-1)");
    }
    return rep;
}

std::string cmd_export(const std::string& format, const std::vector<std::string>& target, const Options& opt) {
    if (format != "dot" && format != "json") throw ConfigError("export format must be 'dot' or 'json'");
    auto need = [&](std::size_t lo, std::size_t hi, const char* usage) {
        if (target.size() < lo || target.size() > hi) throw ConfigError(std::string("usage: export ") + usage);
    };
    if (target.empty()) throw ConfigError("export needs an object: mlattice, quotient, interval or regions");

    GradedPoset poset;
    std::vector<std::string> labels;
    std::string name;
    const std::string& kind = target[0];
    if (kind == "mlattice") {
        need(2, 2, "mlattice N");
        MLattice m = mn_poset(std::stoi(target[1]));
        poset = m.poset;
        labels = m.labels();
        name = "M(" + target[1] + ")";
    } else if (kind == "quotient") {
        need(3, 4, "quotient GROUP NODE [rightfree|leftfree]");
        auto rs = build_root_system(target[1]);
        QuotientSide side = target.size() == 4 ? parse_quotient_side(target[3]) : QuotientSide::RightFree;
        Quotient q(rs, complement_of(*rs, std::stoi(target[2])), side, cap_or(opt, kDefaultQuotientCap));
        poset = q.poset();
        labels = q.labels();
        name = rs->name() + " minus s" + target[2] + " " + to_string(side);
    } else if (kind == "interval") {
        need(3, 3, "interval GROUP WORD");
        auto rs = build_root_system(target[1]);
        auto iv = lower_interval(from_word(rs, parse_word(target[2])), cap_or(opt, kDefaultIntervalCap));
        poset = iv.poset;
        for (const auto& x : iv.elements) labels.push_back(element_label(x));
        name = "[id, " + format_word(parse_word(target[2])) + "] in " + rs->name();
    } else if (kind == "regions") {
        need(3, 3, "regions GROUP WORD");
        auto rs = build_root_system(target[1]);
        auto table = group_table(rs, opt);
        Arrangement arr = inversion_arrangement(from_word(rs, parse_word(target[2])));
        RegionPoset rp = region_poset(arr, *table);
        auto normals = arr.normal_indices();
        for (const auto& r : rp.regions) {
            std::string s;
            for (int k : normals) s += r.minus.contains(k) ? '-' : '+';
            labels.push_back(s.empty() ? "r0" : s);
        }
        poset = rp.poset;
        name = "regions of A_w, w = " + format_word(parse_word(target[2])) + " in " + rs->name();
    } else {
        throw ConfigError("unknown export object '" + kind + "'");
    }
    return format == "dot" ? to_dot(poset, labels, name) : to_json(poset, labels);
}

namespace {

Json poly_json(const IntPolynomial& p) { return Json(p.coeffs()); }

void print_poly(std::ostream& out, const PolyResult& r, const char* symbol, const Options& opt) {
    if (opt.json) {
        Json j;
        j["poly"] = poly_json(r.poly);
        j["palindromic"] = is_palindromic(r.poly);
        j["length"] = r.length;
        if (symbol[0] == 'R') j["regions"] = r.regions;
        out << j.dump() << "\n";
        return;
    }
    out << r.group << ", w = " << format_word(r.word) << ", length " << r.length << "\n";
    out << symbol << "(q) = " << r.poly << "\n";
    out << "coefficients: " << join(r.poly.coeffs()) << "\n";
    if (symbol[0] == 'R') out << "regions: " << r.regions << "\n";
    out << "palindromic: " << yes_no(is_palindromic(r.poly)) << "\n";
}

void print_report(std::ostream& out, const VerificationReport& rep, const Options& opt) {
    if (opt.json) {
        Json j;
        j["scope"] = rep.scope;
        j["scanned"] = rep.scanned;
        j["rationally_smooth"] = rep.rationally_smooth;
        j["failures"] = rep.failures;
        auto cex = Json::array();
        for (const auto& c : rep.counterexamples)
            cex.push_back({{"word", c.word}, {"p", poly_json(c.p)}, {"r", poly_json(c.r)}});
        j["counterexamples"] = std::move(cex);
        if (opt.timing) j["seconds"] = rep.seconds;
        out << j.dump() << "\n";
        return;
    }
    out << "verify-main " << rep.scope << ": " << rep.scanned << " elements, " << rep.rationally_smooth
        << " rationally smooth, " << rep.failures << " failures\n";
    for (const auto& c : rep.counterexamples)
        out << "  counterexample " << format_word(c.word) << ": P = " << c.p << ", R = " << c.r << "\n";
    if (opt.timing) out << "time: " << rep.seconds << " s\n";
}

void print_quotient(std::ostream& out, const QuotientReport& rep, const Options& opt) {
    if (opt.json) {
        Json j;
        j["group"] = rep.group;
        j["removed"] = rep.removed;
        j["side"] = to_string(rep.side);
        j["size"] = rep.size;
        j["rank_sizes"] = rep.rank_sizes;
        j["chain"] = rep.chain;
        auto list = Json::array();
        for (const auto& e : rep.nontrivial) {
            Json item{{"word", e.word}, {"tag", to_string(e.tag)}};
            if (!e.orientation.empty()) item["orientation"] = e.orientation;
            list.push_back(std::move(item));
        }
        j["nontrivial_palindromic"] = std::move(list);
        j["mismatches"] = rep.mismatches;
        out << j.dump() << "\n";
        return;
    }
    out << rep.group << " minus s" << rep.removed << " (" << to_string(rep.side) << "): " << rep.size
        << " elements\n";
    out << "rank sizes: " << join(rep.rank_sizes) << "\n";
    out << "chain: " << yes_no(rep.chain) << "\n";
    out << "nontrivial palindromic elements: " << rep.nontrivial.size() << "\n";
    for (const auto& e : rep.nontrivial) {
        out << "  " << format_word(e.word) << "  " << to_string(e.tag);
        if (!e.orientation.empty()) out << " (" << e.orientation << ")";
        out << "\n";
    }
    if (rep.mismatches) out << "classification mismatches: " << rep.mismatches << "\n";
}

void print_mlattice(std::ostream& out, const MLatticeReport& rep, const Options& opt) {
    if (opt.json) {
        Json j;
        j["n"] = rep.n;
        j["size"] = rep.size;
        j["rank_sizes"] = rep.rank_sizes;
        j["palindromic"] = rep.palindromic;
        j["closed_form_agrees"] = rep.closed_form_agrees;
        out << j.dump() << "\n";
        return;
    }
    out << "M(" << rep.n << "): " << rep.size << " elements\n";
    out << "rank sizes: " << join(rep.rank_sizes) << "\n";
    out << "palindromic lower intervals (" << rep.palindromic.size() << "):";
    for (const auto& s : rep.palindromic) out << " " << s;
    out << "\nclosed form agrees: " << yes_no(rep.closed_form_agrees) << "\n";
}

void print_iso(std::ostream& out, const IsoReport& rep, const Options& opt) {
    if (opt.json) {
        Json j;
        j["group"] = rep.group;
        j["removed"] = rep.removed;
        j["m"] = rep.m;
        j["isomorphic"] = rep.isomorphic;
        out << j.dump() << "\n";
        return;
    }
    out << rep.group << " minus s" << rep.removed << " (rightfree) "
        << (rep.isomorphic ? "is isomorphic to M(" : "is NOT isomorphic to M(") << rep.m << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bruhat intervals, inversion arrangements and parabolic quotients of Weyl groups", "weyllab"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options opt;
    opt.threads = default_thread_count();
    std::size_t cap = 0;
    app.add_flag("--json", opt.json, "Machine-readable output");
    app.add_flag("--timing", opt.timing, "Report wall time (makes output non-reproducible)");
    app.add_option("--cap", cap, "Enumeration cap for groups, intervals and quotients")->check(CLI::PositiveNumber);
    app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::PositiveNumber);

    std::string group, word, side_text = "rightfree", format, output;
    int node = 0, n = 0;
    std::vector<std::string> target;

    auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial P_w of a word");
    poincare_cmd->add_option("group", group, "Group, e.g. A3")->required();
    poincare_cmd->add_option("word", word, "Word of node labels, e.g. \"2 1 3 2\"")->required();

    auto* regions_cmd = app.add_subcommand("regions", "Distance polynomial R_w of the inversion arrangement");
    regions_cmd->add_option("group", group)->required();
    regions_cmd->add_option("word", word)->required();

    auto* verify_cmd = app.add_subcommand("verify-main", "Check P_w palindromic <=> P_w = R_w over a whole group");
    verify_cmd->add_option("group", group)->required();

    auto* quotient_cmd = app.add_subcommand("quotient", "Palindromic elements of a leaf-removed quotient");
    quotient_cmd->add_option("group", group)->required();
    quotient_cmd->add_option("node", node, "Removed leaf label")->required();
    quotient_cmd->add_option("side", side_text, "rightfree (default) or leftfree");

    auto* mlattice_cmd = app.add_subcommand("mlattice", "The lattice M(n) and its palindromic elements");
    mlattice_cmd->add_option("n", n)->required();

    auto* iso_cmd = app.add_subcommand("verify-iso", "Compare B_n or D_n quotients with M(n)");
    iso_cmd->add_option("group", group)->required();
    iso_cmd->add_option("node", node)->required();

    auto* export_cmd = app.add_subcommand("export", "Write a Hasse diagram as DOT or JSON");
    export_cmd->add_option("format", format, "dot or json")->required();
    export_cmd->add_option("object", target, "mlattice N | quotient G NODE [SIDE] | interval G WORD | regions G WORD")
        ->required();
    export_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

    std::vector<const char*> argv{"weyllab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (cap) opt.cap = cap;

    try {
        if (*poincare_cmd) {
            print_poly(out, cmd_poincare(group, word, opt), "P", opt);
        } else if (*regions_cmd) {
            print_poly(out, cmd_regions(group, word, opt), "R", opt);
        } else if (*verify_cmd) {
            auto rep = cmd_verify_main(group, opt);
            print_report(out, rep, opt);
            return rep.ok() ? kExitOk : kExitFailure;
        } else if (*quotient_cmd) {
            auto rep = cmd_quotient(group, node, parse_quotient_side(side_text), opt);
            print_quotient(out, rep, opt);
            return rep.mismatches == 0 ? kExitOk : kExitFailure;
        } else if (*mlattice_cmd) {
            auto rep = cmd_mlattice(n);
            print_mlattice(out, rep, opt);
            return rep.closed_form_agrees ? kExitOk : kExitFailure;
        } else if (*iso_cmd) {
            auto rep = cmd_verify_iso(group, node);
            print_iso(out, rep, opt);
            return rep.isomorphic ? kExitOk : kExitFailure;
        } else if (*export_cmd) {
            std::string text = cmd_export(format, target, opt);
            if (output.empty()) {
                out << text;
            } else {
                std::ofstream file(output, std::ios::binary);
                if (!file) throw ConfigError("cannot write " + output);
                file << text;
            }
        }
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: expected a number (" << e.what() << ")\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace weyllab::cli
