#include "crownbetti/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "crownbetti/crown_formulas.hpp"
#include "crownbetti/error.hpp"
#include "crownbetti/homology.hpp"
#include "crownbetti/render.hpp"
#include "crownbetti/splitting.hpp"

namespace crownbetti::cli {

using nlohmann::json;

namespace {

std::uint64_t parse_unsigned(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw UsageError("invalid " + what + " '" + text + "'");
    return value;
}

std::string join(const std::vector<Exponent>& values, const char* sep = ",") {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += sep;
        out += std::to_string(values[k]);
    }
    return out;
}

std::string join_counts(const std::vector<Count>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(values[k]);
    }
    return out;
}

struct RenderOptions {
    bool json = false;
    bool raw = false;
    bool multigraded = false;
};

void write_table(std::ostream& out, const BettiTable& table, const RenderOptions& opts) {
    if (opts.json) {
        out << render_json(table);
        return;
    }
    out << "pdim: " << pdim(table) << '\n';
    out << "reg: " << regularity(table) << '\n';
    out << "total betti: " << join_counts(total_betti(table)) << '\n';
    out << (opts.raw ? render_graded_triples(table) : render_betti_diagram(table));
    if (opts.multigraded) {
        out << "multigraded:\n" << render_multigraded(table);
    }
}

std::string describe(const TableDifference& d, const char* left, const char* right) {
    return "first difference at i=" + std::to_string(d.i) + ", a=" + to_string(d.a) + ": " + left + " " +
           std::to_string(d.left) + ", " + right + " " + std::to_string(d.right);
}

// Bumps the top entry so the harness can be seen to fail.
BettiTable with_fault(const BettiTable& table) {
    BettiTable out = table;
    if (!table.empty()) {
        const auto& [key, count] = *table.entries().rbegin();
        out.add(key.first, key.second, 1);
    }
    return out;
}

std::string marker(bool pass, bool color) {
    if (!color) return pass ? "PASS" : "FAIL";
    return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

struct CrownArgs {
    std::size_t n = 0;
    std::string weights;
    std::string mode = "formula";
    std::uint64_t field = 32003;
    std::string output = "text";
    bool raw = false;
    bool multigraded = false;
    bool audit = false;
    bool fault = false;
};

int cmd_crown(const CrownArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n < 2) throw UsageError("crown graph needs n >= 2");
    const auto w = resolve_weights(parse_weights(a.weights), a.n);
    const FieldSpec field(a.field);
    const RenderOptions render{a.output == "json", a.raw, a.multigraded};

    std::optional<BettiTable> formula, oracle;
    if (a.mode != "oracle") {
        formula = multigraded_betti_formula(a.n, w);
        if (a.fault) formula = with_fault(*formula);
    }
    if (a.mode != "formula")
        oracle = multigraded_betti(edge_ideal(crown(a.n, w)), field, {a.audit, 0});

    if (formula && oracle) {
        if (auto d = first_difference(*formula, *oracle)) {
            err << "mismatch for crown(" << a.n << ") weights " << join(w) << ": "
                << describe(*d, "formula", "oracle") << '\n';
            return kExitMismatch;
        }
    }
    if (!render.json) {
        out << "crown(" << a.n << ") weights " << join(w) << " mode " << a.mode;
        if (oracle) out << " field " << field.name();
        out << '\n';
    }
    write_table(out, oracle ? *oracle : *formula, render);
    if (formula && oracle && !render.json) out << "formula and oracle agree\n";
    return kExitOk;
}

struct GraphArgs {
    std::string path;
    std::uint64_t field = 32003;
    std::string output = "text";
    bool raw = false;
    bool multigraded = false;
    bool audit = false;
};

int cmd_graph(const GraphArgs& a, std::ostream& out) {
    std::string text;
    if (a.path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(a.path, std::ios::binary);
        if (!in) throw UsageError("cannot read '" + a.path + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    const auto graph = parse_graph_document(text);
    const auto ideal = edge_ideal(graph);
    if (ideal.is_zero()) throw UsageError("empty edge ideal");
    const FieldSpec field(a.field);
    const auto table = multigraded_betti(ideal, field, {a.audit, 0});
    const RenderOptions render{a.output == "json", a.raw, a.multigraded};
    if (!render.json)
        out << "graph: vertices " << graph.vertices().size() << ", edges " << graph.edges().size()
            << ", field " << field.name() << '\n';
    write_table(out, table, render);
    return kExitOk;
}

struct FamilyArgs {
    std::string kind;
    std::size_t s = 0, t = 0, m = 0;
    std::string weights;
    bool oracle = false;
    std::uint64_t field = 32003;
    std::string output = "text";
    bool raw = false;
    bool multigraded = false;
};

FamilySpec make_family(const FamilyArgs& a) {
    auto need = [&](std::size_t value, const char* name) {
        if (value == 0) throw UsageError(a.kind + " family needs --" + name);
    };
    if (a.kind == "crown") {
        need(a.s, "s");
        return CrownFamily{a.s};
    }
    if (a.kind == "unbalanced") {
        need(a.s, "s");
        need(a.t, "t");
        return UnbalancedFamily{a.s, a.t};
    }
    if (a.kind == "generalized") {
        need(a.m, "m");
        need(a.s, "s");
        need(a.t, "t");
        return GeneralizedFamily{a.m, a.s, a.t};
    }
    need(a.s, "s");
    need(a.t, "t");
    return BipartiteFamily{a.s, a.t};
}

int cmd_family(const FamilyArgs& a, std::ostream& out, std::ostream& err) {
    const auto family = make_family(a);
    const auto w = parse_weights(a.weights);
    const auto top = family_top_betti(family, w);
    const bool as_json = a.output == "json";

    json doc;
    doc["family"] = to_string(family);
    doc["pdim"] = top.pdim;
    doc["top_multidegree"] = top.top_multidegree.exponents();
    doc["top_value"] = top.top_value;
    if (!as_json) {
        out << "family: " << to_string(family) << '\n';
        out << "pdim: " << top.pdim << '\n';
        out << "top multidegree: " << to_string(top.top_multidegree) << '\n';
        out << "top value: " << top.top_value << '\n';
    }
    if (!a.oracle) {
        if (as_json) out << doc.dump() << '\n';
        return kExitOk;
    }

    const FieldSpec field(a.field);
    const auto table = multigraded_betti(edge_ideal(family_graph(family, w)), field);
    const int p = pdim(table);
    Count top_entries = 0;
    for (const auto& entry : table.entries())
        if (entry.first.first == p) ++top_entries;
    const bool match =
        p == top.pdim && top_entries == 1 && table.at(p, top.top_multidegree) == top.top_value;

    if (as_json) {
        doc["oracle"] = betti_table_to_json(table);
        doc["match"] = match;
        out << doc.dump() << '\n';
    } else {
        out << "oracle (" << field.name() << "):\n";
        write_table(out, table, {false, a.raw, a.multigraded});
        out << "top entry " << (match ? "matches" : "does not match") << '\n';
    }
    if (!match) {
        err << "oracle top entry for " << to_string(family) << " is beta_{" << p << ","
            << to_string(top.top_multidegree) << "} = " << table.at(p, top.top_multidegree) << " with "
            << top_entries << " entries in degree " << p << "; expected pdim " << top.pdim << " and value "
            << top.top_value << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string n_range;
    std::string weights = "default";
    std::uint64_t field = 32003;
    bool identity_only = false;
    std::size_t n_max = 12;
    std::size_t restriction_max = 4;
    std::string output = "text";
    bool fault = false;
};

struct Check {
    std::string name;
    std::size_t n;
    std::vector<Exponent> weights;
    bool pass;
    std::string detail;
};

std::vector<std::vector<Exponent>> weight_matrix(const std::string& spec, std::size_t n) {
    if (spec == "default") {
        std::vector<Exponent> ones(n, 1), lead = ones, ramp(n);
        lead[0] = 2;
        for (std::size_t k = 0; k < n; ++k) ramp[k] = static_cast<Exponent>(k + 1);
        return {ones, lead, ramp};
    }
    if (spec == "ones") return {std::vector<Exponent>(n, 1)};
    std::vector<std::vector<Exponent>> out;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ';')) {
        auto w = parse_weights(item);
        if (w.size() == n) out.push_back(std::move(w));
    }
    return out;
}

void identity_checks(std::size_t n_first, std::size_t n_last, std::vector<Check>& checks) {
    for (std::size_t n = std::max<std::size_t>(n_first, 2); n <= n_last; ++n) {
        Check c{"identity", n, {}, true, ""};
        const auto nn = static_cast<std::int64_t>(n);
        for (std::int64_t m = 0; m <= 2 * nn - 4 && c.pass; ++m) {
            const auto lhs = binomial(2 * nn - 4, m), rhs = binomial_pair_decomposition(nn, m);
            if (lhs != rhs) {
                c.pass = false;
                c.detail = "m=" + std::to_string(m) + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs);
            }
        }
        checks.push_back(std::move(c));
    }
}

void crown_checks(std::size_t n, const std::vector<Exponent>& w, const VerifyArgs& a, FieldSpec field,
                  std::vector<Check>& checks) {
    const auto ideal = edge_ideal(crown(n, w));
    const auto oracle = multigraded_betti(ideal, field);
    auto formula = multigraded_betti_formula(n, w);
    if (a.fault) formula = with_fault(formula);

    Check c{"formula", n, w, true, ""};
    if (auto d = first_difference(formula, oracle)) {
        c.pass = false;
        c.detail = describe(*d, "formula", "oracle");
    }
    checks.push_back(c);

    c = {"totals", n, w, true, ""};
    const auto totals = total_betti(oracle);
    for (std::size_t i = 0; i < totals.size() || i <= 2 * n - 3; ++i) {
        const Count got = i < totals.size() ? totals[i] : 0;
        const Count want = total_betti_closed_form(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i));
        if (got != want) {
            c.pass = false;
            c.detail = "i=" + std::to_string(i) + ": oracle " + std::to_string(got) + ", closed form " +
                       std::to_string(want);
            break;
        }
    }
    checks.push_back(c);

    c = {"regularity", n, w, regularity(oracle) == regularity_formula(n, w), ""};
    if (!c.pass)
        c.detail = "oracle " + std::to_string(regularity(oracle)) + ", formula " +
                   std::to_string(regularity_formula(n, w));
    checks.push_back(c);

    if (n <= a.restriction_max) {
        c = {"restriction", n, w, true, ""};
        const auto graph = crown(n, w);
        const auto& vars = graph.vertices();
        for (std::uint64_t code = 1; code < (std::uint64_t{1} << (2 * n)) && c.pass; ++code) {
            std::set<std::string> subset;
            for (std::size_t v = 0; v < 2 * n; ++v)
                if (code >> v & 1) subset.insert(vars.name(v));
            const auto induced = edge_ideal(induced_subgraph(graph, subset)).relabeled(vars);
            const auto local = multigraded_betti(induced, field);
            const auto expected = restrict_to_support(oracle, subset);
            if (auto d = first_difference(local, expected)) {
                c.pass = false;
                std::string labels;
                for (const auto& l : subset) labels += (labels.empty() ? "" : ",") + l;
                c.detail = "W={" + labels + "}: " + describe(*d, "induced", "restricted");
            }
        }
        checks.push_back(c);
    }

    if (n >= 3) {
        c = {"splitting", n, w, true, ""};
        try {
            const auto dec = crown_decomposition(n, w);
            const auto report = verify_betti_splitting(ideal, dec.left, dec.right, field);
            if (!report.is_splitting) {
                const auto& wit = *report.witness;
                c.pass = false;
                c.detail = "i=" + std::to_string(wit.i) + ", a=" + to_string(wit.a) + ": " +
                           std::to_string(wit.whole) + " vs " + std::to_string(wit.parts);
            }
            const auto colon = crowncolon_components(n, w, n - 1);
            const auto y = Multidegree::from_powers(ideal.vars(), {{"y" + std::to_string(n), w[n - 1]}});
            if (c.pass && intersect(dec.left, dec.right) != scale(y, colon.c)) {
                c.pass = false;
                c.detail = "intersection differs from y_n^{w_n} C";
            }
            for (std::size_t s = 1; s < n && c.pass; ++s) crowncolon_components(n, w, s);
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const UsageError*>(&e)) throw;
            c.pass = false;
            c.detail = e.what();
        }
        checks.push_back(c);
    }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err, bool color) {
    const FieldSpec field(a.field);
    std::vector<Check> checks;
    if (a.identity_only) {
        if (a.n_max < 2 || a.n_max > 30) throw UsageError("--n-max must lie in 2..30");
        identity_checks(2, a.n_max, checks);
    } else {
        if (a.n_range.empty()) throw UsageError("verify needs --n or --identity");
        const auto [lo, hi] = parse_range(a.n_range);
        if (lo < 2) throw UsageError("verify needs n >= 2");
        if (hi > kVerifyMaxN)
            throw UsageError("verify runs the oracle; n must be at most " + std::to_string(kVerifyMaxN));
        std::vector<std::pair<std::size_t, std::vector<std::vector<Exponent>>>> plan;
        for (std::size_t n = lo; n <= hi; ++n) {
            auto ws = weight_matrix(a.weights, n);
            if (ws.empty()) throw UsageError("no weight vector of length " + std::to_string(n));
            for (const auto& w : ws) resolve_weights(w, n);
            plan.emplace_back(n, std::move(ws));
        }
        for (const auto& [n, ws] : plan)
            for (const auto& w : ws) crown_checks(n, w, a, field, checks);
        identity_checks(lo, hi, checks);
    }

    std::size_t failed = 0;
    for (const auto& c : checks) failed += c.pass ? 0 : 1;
    if (a.output == "json") {
        json doc;
        doc["field"] = field.name();
        json list = json::array();
        for (const auto& c : checks) {
            json item{{"check", c.name}, {"n", c.n}, {"pass", c.pass}};
            if (!c.weights.empty()) item["weights"] = c.weights;
            if (!c.detail.empty()) item["detail"] = c.detail;
            list.push_back(std::move(item));
        }
        doc["checks"] = std::move(list);
        doc["passed"] = checks.size() - failed;
        doc["failed"] = failed;
        doc["ok"] = failed == 0;
        out << doc.dump() << '\n';
    } else {
        for (const auto& c : checks) {
            out << marker(c.pass, color) << ' ' << c.name << " n=" << c.n;
            if (!c.weights.empty()) out << " weights=" << join(c.weights);
            if (!c.detail.empty()) out << ": " << c.detail;
            out << '\n';
        }
        out << "summary: " << checks.size() << " checks, " << checks.size() - failed << " passed, "
            << failed << " failed (field " << field.name() << ")\n";
    }
    for (const auto& c : checks) {
        if (c.pass) continue;
        err << "first failure: " << c.name << " n=" << c.n;
        if (!c.weights.empty()) err << " weights=" << join(c.weights);
        err << ": " << c.detail << '\n';
        break;
    }
    return failed == 0 ? kExitOk : kExitMismatch;
}

void add_render_flags(CLI::App* cmd, std::string& output, bool& raw, bool& multigraded) {
    cmd->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--raw", raw, "print (i, j, count) triples instead of the diagram");
    cmd->add_flag("--multigraded", multigraded, "also print every multigraded Betti number");
}

}  // namespace

std::vector<std::uint32_t> parse_weights(const std::string& text) {
    std::vector<std::uint32_t> out;
    if (text.empty()) return out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto value = parse_unsigned(item, "weight");
        if (value < 1 || value > 1'000'000) throw UsageError("weights must lie in 1..1000000, got " + item);
        out.push_back(static_cast<std::uint32_t>(value));
    }
    if (text.back() == ',') throw UsageError("trailing comma in weights");
    return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto n = parse_unsigned(text, "n");
        return {n, n};
    }
    const auto lo = parse_unsigned(text.substr(0, dots), "range start");
    const auto hi = parse_unsigned(text.substr(dots + 2), "range end");
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
    CLI::App app{"Betti numbers of edge ideals of weighted oriented graphs", "crownbetti"};
    app.require_subcommand(1);

    CrownArgs crown_args;
    auto* crown_cmd = app.add_subcommand("crown", "Betti table of the crown graph G_n");
    crown_cmd->add_option("--n", crown_args.n, "number of vertices on each side")->required();
    crown_cmd->add_option("--weights", crown_args.weights, "y-weights w1,...,wn (default all 1)");
    crown_cmd->add_option("--mode", crown_args.mode, "formula, oracle or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    crown_cmd->add_option("--field", crown_args.field, "prime characteristic, or 0 for QQ");
    add_render_flags(crown_cmd, crown_args.output, crown_args.raw, crown_args.multigraded);
    crown_cmd->add_flag("--audit-full-lattice", crown_args.audit, "evaluate every a <= lcm, not just the lcm lattice");
    crown_cmd->add_flag("--inject-fault", crown_args.fault)->group("");

    GraphArgs graph_args;
    auto* graph_cmd = app.add_subcommand("graph", "Betti table of the edge ideal of a graph document");
    graph_cmd->add_option("input", graph_args.path, "JSON graph document, or - for stdin")->required();
    graph_cmd->add_option("--field", graph_args.field, "prime characteristic, or 0 for QQ");
    add_render_flags(graph_cmd, graph_args.output, graph_args.raw, graph_args.multigraded);
    graph_cmd->add_flag("--audit-full-lattice", graph_args.audit, "evaluate every a <= lcm, not just the lcm lattice");

    FamilyArgs family_args;
    auto* family_cmd = app.add_subcommand("family", "Top Betti number of a crown-type family");
    family_cmd->add_option("--kind", family_args.kind, "crown, unbalanced, generalized or bipartite")
        ->required()
        ->check(CLI::IsMember({"crown", "unbalanced", "generalized", "bipartite"}));
    family_cmd->add_option("--s", family_args.s, "number of x-vertices");
    family_cmd->add_option("--t", family_args.t, "number of y-vertices");
    family_cmd->add_option("--m", family_args.m, "size of the matching removed (generalized)");
    family_cmd->add_option("--weights", family_args.weights, "y-weights (default all 1)");
    family_cmd->add_flag("--oracle", family_args.oracle, "also compute the full table with the oracle");
    family_cmd->add_option("--field", family_args.field, "prime characteristic, or 0 for QQ");
    add_render_flags(family_cmd, family_args.output, family_args.raw, family_args.multigraded);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check the crown formulas against the oracle");
    verify_cmd->add_option("--n", verify_args.n_range, "n or a range lo..hi");
    verify_cmd->add_option("--weights", verify_args.weights,
                           "default, ones, or vectors separated by ';' (each applies to its length)");
    verify_cmd->add_option("--field", verify_args.field, "prime characteristic, or 0 for QQ");
    verify_cmd->add_flag("--identity", verify_args.identity_only, "only check the binomial identity");
    verify_cmd->add_option("--n-max", verify_args.n_max, "largest n for --identity");
    verify_cmd->add_option("--restriction-max", verify_args.restriction_max,
                           "largest n for the induced-subgraph sweep");
    verify_cmd->add_option("--output", verify_args.output, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_flag("--inject-fault", verify_args.fault)->group("");

    std::vector<const char*> argv{"crownbetti"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        for (auto* sub : app.get_subcommands()) target = sub;
        out << target->help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (crown_cmd->parsed()) return cmd_crown(crown_args, out, err);
        if (graph_cmd->parsed()) return cmd_graph(graph_args, out);
        if (family_cmd->parsed()) return cmd_family(family_args, out, err);
        return cmd_verify(verify_args, out, err, color);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace crownbetti::cli
