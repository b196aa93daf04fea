#include "cli.hpp"

#include "weylcheck/errors.hpp"
#include "weylcheck/group_file.hpp"
#include "weylcheck/quotient_obstruction.hpp"
#include "weylcheck/small_groups.hpp"
#include "weylcheck/weyl_group.hpp"
#include "weylcheck/weyl_structure.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

namespace weylcheck::cli {

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBound = 3, kUndecided = 4 };

struct Common {
    bool json = false;
    bool no_timings = false;
    bool seed_free = false;
    int max_r = 2;
    std::optional<std::size_t> bound;
};

// Timings are the only run-dependent fields; --no-timings zeroes them for byte-stable output.
void strip_timings(Json& j) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "elapsed_ms" || it.key() == "wall-time-ms") *it = 0;
            else strip_timings(*it);
        }
    } else if (j.is_array()) {
        for (auto& x : j) strip_timings(x);
    }
}

struct CommandResult {
    int code = kOk;
    Json results = Json::array();
    std::string text;
};

Json factor_names(const std::vector<SimpleFactorId>& s) {
    Json out = Json::array();
    for (const auto& f : s) out.push_back(f.name());
    return out;
}

std::string joined(const Json& names) {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : ", ") + n.get<std::string>();
    return "{" + s + "}";
}

std::string indented(const Json& j, const std::string& pad) {
    std::string s = j.dump(2), out = pad;
    for (char c : s) {
        out += c;
        if (c == '\n') out += pad;
    }
    return out + "\n";
}

std::string millis(double ms, const Common& c) {
    if (c.no_timings) return "";
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(1);
    os << "  (" << ms << " ms)";
    return os.str();
}

Json group_summary(const FiniteGroup& G) {
    const auto jh = jh_set(composition_factors(G));
    const auto tag = classify_jh(jh);
    return {{"name", G.name()},
            {"order", G.order()},
            {"exponent", exponent(G)},
            {"center_order", center(G).order()},
            {"jh_type", tag ? Json(tag->str()) : Json(nullptr)},
            {"jh_set", factor_names(jh)}};
}

std::string summary_text(const Json& s) {
    std::ostringstream os;
    os << s["name"].get<std::string>() << "\n  order        " << s["order"] << "\n  exponent     " << s["exponent"]
       << "\n  center order " << s["center_order"] << "\n  JH type      "
       << (s["jh_type"].is_null() ? std::string("unclassified") : s["jh_type"].get<std::string>()) << " "
       << joined(s["jh_set"]) << "\n";
    return os.str();
}

// --- group / load

CommandResult cmd_group(const std::string& type, const std::string& out_path, Json& inputs) {
    inputs = {{"type", type}, {"out", out_path.empty() ? Json(nullptr) : Json(out_path)}};
    const CartanType t = CartanType::parse(type);
    const FiniteGroup W = weyl_group(t);
    Json s = group_summary(W);
    s["type"] = t.str();
    s["order_formula"] = order_formula(t);
    CommandResult o;
    o.text = summary_text(s);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << write_group_description(W);
        o.text += "  written to   " + out_path + "\n";
    }
    s["file"] = out_path.empty() ? Json(nullptr) : Json(out_path);
    o.results.push_back(s);
    return o;
}

CommandResult cmd_load(const std::string& path, const Common& c, Json& inputs) {
    inputs = {{"file", path}};
    std::ifstream f(path);
    if (!f) throw ParseError("cannot read " + path);
    const FiniteGroup G = load_group(f, c.bound.value_or(kDefaultCompositionBound));
    Json s = group_summary(G.name().empty() ? G.renamed(path) : G);
    s["kind"] = G.model().kind();
    s["generators"] = G.generators().size();
    CommandResult o;
    o.text = summary_text(s);
    o.results.push_back(s);
    return o;
}

// --- verify

std::vector<int> range_or(const std::optional<int>& n, int lo, int hi) {
    if (n) return {*n};
    std::vector<int> out(hi - lo + 1);
    std::iota(out.begin(), out.end(), lo);
    return out;
}

PermAction parse_action(const std::string& h) {
    if (h == "alternating" || h == "A") return PermAction::Alternating;
    if (h == "symmetric" || h == "S") return PermAction::Symmetric;
    if (h == "klein" || h == "K4") return PermAction::Klein;
    throw ParseError("unknown action '" + h + "' (alternating, symmetric, klein)");
}

std::vector<Verdict> run_lemma(const std::string& lemma, const std::optional<int>& n, const std::string& h,
                               const std::vector<std::string>& args, const Common& c) {
    std::vector<Verdict> out;
    if (lemma == "exponent-orthogonal") {
        for (int k : range_or(n, 3, 8)) out.push_back(verify_exponent_orthogonal(k));
    } else if (lemma == "invariant-subspaces") {
        if (!h.empty()) {
            const PermAction a = parse_action(h);
            for (int k : a == PermAction::Klein ? range_or(n, 4, 4) : range_or(n, 3, 10))
                out.push_back(verify_invariant_subspaces(k, a));
        } else {
            for (PermAction a : {PermAction::Alternating, PermAction::Symmetric})
                for (int k : range_or(n, 3, 10)) out.push_back(verify_invariant_subspaces(k, a));
            if (!n || *n == 4) out.push_back(verify_invariant_subspaces(4, PermAction::Klein));
        }
    } else if (lemma == "normal-subgroups-d") {
        for (int k : range_or(n, 3, 6)) out.push_back(verify_normal_subgroups_D(k));
    } else if (lemma == "product-decomposition") {
        for (int k : range_or(n, 3, 7))
            out.push_back(c.bound ? verify_product_decomposition(k, *c.bound) : verify_product_decomposition(k));
    } else if (lemma == "isotrivial") {
        std::vector<std::pair<CartanType, CartanType>> pairs;
        if (args.size() == 2) {
            pairs.emplace_back(CartanType::parse(args[0]), CartanType::parse(args[1]));
        } else if (args.empty()) {
            for (int k = 2; k <= 6; ++k) pairs.push_back({{'B', k}, {'C', k}});
            for (int k : {3, 5}) pairs.push_back({{'B', k}, {'D', k}});
            pairs.push_back({{'G', 2}, {'A', 2}});
            pairs.push_back({{'B', 4}, {'D', 4}});
        } else {
            throw ParseError("isotrivial takes two types or none");
        }
        for (auto [a, b] : pairs) out.push_back(verify_isotrivial_pair(a, b));
    } else if (lemma == "f4-structure") {
        out.push_back(verify_f4_structure());
    } else if (lemma == "jh-compositum") {
        std::vector<FiniteGroup> factors;
        for (const auto& name : args.empty() ? std::vector<std::string>{"Sym3", "Sym3"} : args)
            factors.push_back(small_group(name));
        out.push_back(c.bound ? verify_jh_compositum(factors, *c.bound) : verify_jh_compositum(factors));
    } else if (lemma == "jh-type") {
        if (args.empty()) throw ParseError("jh-type needs at least one type");
        for (const auto& a : args) out.push_back(verify_jh_type(CartanType::parse(a)));
    } else {
        throw ParseError("unknown lemma '" + lemma + "'");
    }
    return out;
}

CommandResult cmd_verify(const std::string& lemma, const std::optional<int>& n, const std::string& h,
                   const std::vector<std::string>& args, const Common& c, Json& inputs) {
    inputs = {{"lemma", lemma}, {"n", n ? Json(*n) : Json(nullptr)}, {"h", h.empty() ? Json(nullptr) : Json(h)},
              {"args", args}};
    CommandResult o;
    bool all = true;
    for (const auto& v : run_lemma(lemma, n, h, args, c)) {
        all = all && v.holds;
        Json j = v;
        o.results.push_back(j);
        std::string params;
        for (auto it = v.params.begin(); it != v.params.end(); ++it)
            params += " " + it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
        o.text += std::string(v.holds ? "[holds] " : "[FAILS] ") + v.claim_id + params + millis(v.elapsed_ms, c) + "\n";
        o.text += indented(v.witness, "    ");
    }
    o.code = all ? kOk : kNegative;
    return o;
}

// --- check-pair / matrix

DecideOptions decide_options(const Common& c, bool corroborate) {
    DecideOptions d;
    d.max_r = c.max_r;
    if (c.bound) d.normal_bound = *c.bound;
    d.corroborate = corroborate;
    return d;
}

std::string report_text(const ObstructionReport& r, const Common& c) {
    std::ostringstream os;
    os << "W(" << r.quotient.str() << ") from W(" << r.source.str() << "): " << to_string(r.outcome);
    if (r.rule) os << " by " << to_string(*r.rule);
    if (!r.scope.empty()) os << " [" << r.scope << "]";
    if (r.table_derived) os << " table-derived";
    os << millis(r.elapsed_ms, c) << "\n";
    if (!r.fired.empty()) {
        os << "  fired:";
        for (Rule x : r.fired) os << " " << to_string(x);
        os << "\n";
    }
    if (!r.witness.empty()) os << "  witness:\n" << indented(r.witness, "    ");
    if (!r.search.is_null()) os << "  search:\n" << indented(r.search, "    ");
    return os.str();
}

int exit_for(const ObstructionReport& r) {
    switch (r.outcome) {
    case weylcheck::Outcome::Obstructed:
    case weylcheck::Outcome::IsoTrivial:
    case weylcheck::Outcome::Isogenous: return kOk;
    case weylcheck::Outcome::QuotientExists: return kNegative;
    case weylcheck::Outcome::Undecided: return kUndecided;
    }
    return kUndecided;
}

CommandResult cmd_check_pair(const std::string& a, const std::string& b, bool corroborate, const Common& c, Json& inputs) {
    const DecideOptions d = decide_options(c, corroborate);
    inputs = {{"quotient", a}, {"source", b}, {"max_r", d.max_r}, {"corroborate", corroborate}};
    const auto r = decide_pair(CartanType::parse(a), CartanType::parse(b), d);
    CommandResult o;
    o.results.push_back(r);
    o.text = report_text(r, c);
    o.code = exit_for(r);
    return o;
}

CommandResult cmd_matrix(const std::vector<std::string>& names, bool corroborate, const Common& c, Json& inputs) {
    if (names.size() < 2) throw ParseError("matrix needs at least two types");
    const DecideOptions d = decide_options(c, corroborate);
    inputs = {{"types", names}, {"max_r", d.max_r}, {"corroborate", corroborate}};
    std::vector<CartanType> types;
    for (const auto& s : names) types.push_back(CartanType::parse(s));
    const auto m = nonquotient_matrix(types, d);
    CommandResult o;
    o.results.push_back(matrix_json(m));
    o.text = matrix_text(m);
    bool undecided = false, quotient = false;
    for (const auto& cell : o.results[0]["cells"]) {
        undecided = undecided || cell["outcome"] == "undecided";
        quotient = quotient || cell["outcome"] == "quotient-exists";
    }
    o.text += std::string("all obstructed: ") + (all_obstructed(m) ? "yes" : "no") + "\n";
    o.code = quotient ? kNegative : undecided ? kUndecided : kOk;
    return o;
}

std::optional<std::size_t> env_bound() {
    const char* v = std::getenv("WEYLCHECK_BOUND");
    if (!v || !*v) return std::nullopt;
    char* end = nullptr;
    const unsigned long long b = std::strtoull(v, &end, 10);
    if (*end != '\0' || b == 0) throw ParseError(std::string("WEYLCHECK_BOUND is not a positive integer: ") + v);
    return static_cast<std::size_t>(b);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weyl groups as explicit finite groups, with structural checks and quotient obstructions",
                 "weylcheck"};
    app.set_version_flag("--version", std::string(WEYLCHECK_VERSION));
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();

    Common c;
    std::size_t bound_flag = 0;
    app.add_flag("--json", c.json, "Print the JSON report envelope");
    app.add_flag("--no-timings", c.no_timings, "Zero every timing field");
    app.add_option("--max-r", c.max_r, "Largest number of compositum factors searched")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();
    auto* bound_opt = app.add_option("--bound", bound_flag, "Enumeration cap for normal-subgroup work (default 10000)")
                          ->check(CLI::PositiveNumber);
    app.add_flag("--seed-free", c.seed_free, "Reserved; rejected");

    std::string type, out_path, file, lemma, h, qa, qb;
    std::optional<int> n;
    std::vector<std::string> args, types;
    bool no_corroborate = false, corroborate = false;

    auto* group = app.add_subcommand("group", "Build W(type), print a summary, optionally write its description");
    group->add_option("type", type, "Cartan type such as F4")->required();
    group->add_option("-o,--out", out_path, "Group-description file to write");

    auto* load = app.add_subcommand("load", "Read a group-description file and print a summary");
    load->add_option("file", file)->required();

    auto* verify = app.add_subcommand("verify", "Run one structural verifier");
    verify->add_option("lemma", lemma,
                       "exponent-orthogonal, invariant-subspaces, normal-subgroups-d, product-decomposition, "
                       "isotrivial, f4-structure, jh-compositum, jh-type")
        ->required();
    verify->add_option("args", args, "Types or group names, depending on the lemma");
    verify->add_option("--n", n, "Rank or degree; the full range when omitted");
    verify->add_option("--h", h, "Acting group for invariant-subspaces: alternating, symmetric, klein");

    auto* pair = app.add_subcommand("check-pair", "Is W(first) a quotient of a compositum of normal subgroups of W(second)?");
    pair->add_option("quotient", qa)->required();
    pair->add_option("source", qb)->required();
    pair->add_flag("--no-corroborate", no_corroborate, "Skip the exhaustive search once a rule has fired");

    auto* matrix = app.add_subcommand("matrix", "Pairwise obstruction grid");
    matrix->add_option("types", types)->required();
    matrix->add_flag("--corroborate", corroborate, "Run the exhaustive search on every obstructed cell too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    if (c.seed_free) {
        err << "weylcheck: --seed-free is reserved; nothing here draws random numbers\n";
        return kUsage;
    }

    Stopwatch clock;
    Json inputs = Json::object();
    std::string command;
    CommandResult o;
    try {
        c.bound = env_bound();
        if (!c.bound && bound_opt->count() > 0) c.bound = bound_flag;
        if (group->parsed()) {
            command = "group";
            o = cmd_group(type, out_path, inputs);
        } else if (load->parsed()) {
            command = "load";
            o = cmd_load(file, c, inputs);
        } else if (verify->parsed()) {
            command = "verify";
            o = cmd_verify(lemma, n, h, args, c, inputs);
        } else if (pair->parsed()) {
            command = "check-pair";
            o = cmd_check_pair(qa, qb, !no_corroborate, c, inputs);
        } else {
            command = "matrix";
            o = cmd_matrix(types, corroborate, c, inputs);
        }
    } catch (const ParseError& e) {
        err << "weylcheck: " << e.what() << "\n";
        return kUsage;
    } catch (const Unsupported& e) {
        err << "weylcheck: " << e.what() << "\n";
        try {
            const auto f = static_facts(CartanType::parse(type.empty() ? qa : type));
            err << "static facts: order " << f.order << ", " << f.jh_type.str();
            if (f.jh_set) err << " " << joined(factor_names(*f.jh_set));
            err << " (" << f.provenance << ")\n";
        } catch (const std::exception&) {
        }
        return kBound;
    } catch (const BoundExceeded& e) {
        err << "weylcheck: " << e.what() << "\n";
        return kBound;
    } catch (const SearchBudgetExceeded& e) {
        err << "weylcheck: " << e.what() << "\n";
        return kUndecided;
    } catch (const std::invalid_argument& e) {
        err << "weylcheck: " << e.what() << "\n";
        return kUsage;
    }

    if (c.json) {
        Json envelope = {{"tool-version", WEYLCHECK_VERSION},
                         {"command", command},
                         {"inputs", inputs},
                         {"results", o.results},
                         {"wall-time-ms", clock.ms()}};
        if (c.no_timings) strip_timings(envelope);
        out << envelope.dump(2) << "\n";
    } else {
        out << o.text;
    }
    return o.code;
}

} // namespace weylcheck::cli
