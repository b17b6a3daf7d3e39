#include "qi/cli/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qi/cli/json_io.hpp"
#include "qi/errors.hpp"
#include "qi/generic.hpp"
#include "qi/hn.hpp"
#include "qi/monoid.hpp"
#include "qi/oracle/oracle.hpp"
#include "qi/roots.hpp"
#include "qi/series.hpp"

namespace qi::cli {

using json = nlohmann::json;
using namespace json_io;

namespace {

struct Options {
    std::string quiver, dim, d, e, theta, bound, w, w2, parts, matrices;
    std::string method = "closed";
    std::string format = "json";
    int q = 2;
    int n = 0, di = 0, ei = 0;
    std::optional<std::uint64_t> budget;
    bool timing = false;
    bool stable = false;
    std::string fixture_path;
};

std::uint64_t default_budget(std::uint64_t fallback) {
    if (const char* env = std::getenv("QI_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && *env != '\0') return v;
        throw InputError("QI_BUDGET must be a nonnegative integer");
    }
    return fallback;
}

std::uint64_t budget_of(const Options& o, std::uint64_t fallback) { return o.budget ? *o.budget : default_budget(fallback); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Quiver load_quiver(const Options& o) {
    if (o.quiver.empty()) throw InputError("--quiver is required");
    // Inline JSON is accepted as well as a file name.
    const std::string text = o.quiver.front() == '{' ? o.quiver : read_file(o.quiver);
    return quiver_from_json(parse(text, "--quiver"));
}

json parse_flag(const std::string& value, const std::string& flag) {
    if (value.empty()) throw InputError(flag + " is required");
    return parse(value, flag);
}

// Same shape as the dimension vector format.
json rep_json(const Quiver& q, const DimVector& base_d, const std::vector<long>& v) {
    json j = json::object();
    for (std::size_t i = 0; i < base_d.size(); ++i) j[q.name(i)] = v[i];
    return j;
}

json witness_json(const Quiver& q, const std::vector<std::size_t>& w) {
    json j = json::array();
    for (auto i : w) j.push_back(q.name(i));
    return j;
}

json hn_type_json(const Quiver& q, const HNType& t) { return {{"parts", to_json(q, t.parts)}, {"codim", decimal(t.codim)}}; }

// One matrix per arrow, shapes dictated by d; [] is accepted for empty matrices.
oracle::FFRep rep_from_json(const Quiver& q, const DimVector& d, int p, const json& j) {
    if (!j.is_array() || j.size() != q.arrows().size()) throw InputError("--matrices needs one matrix per arrow");
    std::vector<oracle::Mat> maps;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto& a = q.arrows()[k];
        const int rows = d[a.target], cols = d[a.source];
        if (rows == 0 || cols == 0) {
            maps.emplace_back(rows, cols);
            continue;
        }
        oracle::Mat m = matrix_from_json(j[k], p);
        if (m.rows != rows || m.cols != cols) throw InputError("matrix for arrow " + std::to_string(k) + " must be " + std::to_string(rows) + " x " + std::to_string(cols));
        maps.push_back(std::move(m));
    }
    return oracle::FFRep::from_matrices(q, d, p, maps);
}

json budget_json(std::uint64_t budget, std::uint64_t enumerated) {
    return {{"budget", std::to_string(budget)}, {"enumerated", std::to_string(enumerated)}};
}

std::string render_table(const json& j, const std::string& indent = "") {
    std::ostringstream os;
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
                os << indent << k << ":\n" << render_table(v, indent + "  ");
            } else if (v.is_array()) {
                os << indent << k << ": ";
                for (std::size_t t = 0; t < v.size(); ++t) os << (t ? ", " : "") << (v[t].is_string() ? v[t].get<std::string>() : v[t].dump());
                os << "\n";
            } else {
                os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) os << indent << "-\n" << render_table(v, indent + "  ");
    } else {
        os << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
    return os.str();
}

using Handler = std::function<json(const Options&, json& inputs, json& meta)>;

struct Command {
    std::string name;
    CLI::App* app;
    Handler handler;
};

void add_quiver(CLI::App* a, Options& o) { a->add_option("--quiver", o.quiver, "quiver JSON file (or inline JSON)")->required(); }
void add_dim(CLI::App* a, Options& o) { a->add_option("--dim", o.dim, "dimension vector JSON")->required(); }
void add_theta(CLI::App* a, Options& o) { a->add_option("--theta", o.theta, "stability JSON")->required(); }
void add_de(CLI::App* a, Options& o) {
    a->add_option("--d", o.d, "dimension vector JSON")->required();
    a->add_option("--e", o.e, "dimension vector JSON")->required();
}
void add_q(CLI::App* a, Options& o) { a->add_option("--q", o.q, "prime field size")->capture_default_str(); }
void add_budget(CLI::App* a, Options& o) { a->add_option("--budget", o.budget, "enumeration budget"); }

struct Loaded {
    Quiver q;
    json inputs;
};

Loaded load(const Options& o) {
    Loaded l{load_quiver(o), json::object()};
    l.inputs["quiver"] = to_json(l.q);
    return l;
}

DimVector dim_arg(const Quiver& q, const std::string& v, const std::string& flag, json& inputs, const std::string& key) {
    DimVector d = dim_from_json(q, parse_flag(v, flag));
    inputs[key] = to_json(q, d);
    return d;
}

Stability theta_arg(const Quiver& q, const Options& o, json& inputs) {
    Stability s = stability_from_json(q, parse_flag(o.theta, "--theta"));
    inputs["theta"] = to_json(q, s);
    return s;
}

void register_commands(CLI::App& app, Options& o, std::vector<Command>& cmds) {
    auto add = [&](CLI::App* parent, const std::string& name, const std::string& help, Handler h) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
        sub->add_flag("--timing", o.timing, "include wall-clock timing in the output");
        std::string full = parent == &app ? name : parent->get_name() + " " + name;
        cmds.push_back({full, sub, std::move(h)});
        return sub;
    };

    auto* c = add(&app, "euler", "Euler form <d, e>", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto d = dim_arg(l.q, o.d, "--d", in, "d");
        auto e = dim_arg(l.q, o.e, "--e", in, "e");
        return json{{"value", decimal(euler_form(l.q, d, e))}};
    });
    add_quiver(c, o);
    add_de(c, o);

    CLI::App* root = app.add_subcommand("root", "Kac root system");
    root->require_subcommand(1);
    c = add(root, "classify", "classify a dimension vector", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto d = dim_arg(l.q, o.dim, "--dim", in, "dim");
        auto r = classify_root(l.q, d);
        return json{{"kind", std::string(to_string(r.kind))}, {"witness", witness_json(l.q, r.witness)}, {"endpoint", rep_json(l.q, d, r.endpoint)}};
    });
    add_quiver(c, o);
    add_dim(c, o);
    c = add(root, "list", "all roots below a bound", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto b = dim_arg(l.q, o.bound, "--bound", in, "bound");
        json roots = json::array();
        for (const auto& r : positive_roots_up_to(l.q, b)) roots.push_back({{"dim", to_json(l.q, r.dim)}, {"kind", std::string(to_string(r.kind))}});
        return json{{"roots", roots}};
    });
    add_quiver(c, o);
    c->add_option("--bound", o.bound, "bound JSON")->required();

    for (const std::string which : {"ext", "hom"}) {
        c = add(&app, which, "generic " + which + "(d, e)", [which](const Options& o, json& in, json&) {
            auto l = load(o);
            in = l.inputs;
            auto d = dim_arg(l.q, o.d, "--d", in, "d");
            auto e = dim_arg(l.q, o.e, "--e", in, "e");
            GenericCalculus g(l.q);
            return json{{"value", decimal(which == "ext" ? g.ext(d, e) : g.hom(d, e))}};
        });
        add_quiver(c, o);
        add_de(c, o);
    }
    c = add(&app, "schur", "Schur root test", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto d = dim_arg(l.q, o.dim, "--dim", in, "dim");
        return json{{"schur", GenericCalculus(l.q).schur(d)}};
    });
    add_quiver(c, o);
    add_dim(c, o);
    c = add(&app, "decompose", "generic decomposition", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto d = dim_arg(l.q, o.dim, "--dim", in, "dim");
        return json{{"parts", to_json(l.q, GenericCalculus(l.q).decomposition(d))}};
    });
    add_quiver(c, o);
    add_dim(c, o);

    c = add(&app, "ss-nonempty", "nonemptiness of the semistable locus", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto th = theta_arg(l.q, o, in);
        auto d = dim_arg(l.q, o.dim, "--dim", in, "dim");
        return json{{"nonempty", HNCalculus(l.q, th).ss_nonempty(d)}};
    });
    add_quiver(c, o);
    add_theta(c, o);
    add_dim(c, o);
    c = add(&app, "hn-types", "Harder-Narasimhan types with codimensions", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto th = theta_arg(l.q, o, in);
        auto d = dim_arg(l.q, o.dim, "--dim", in, "dim");
        json types = json::array();
        for (const auto& t : HNCalculus(l.q, th).hn_types(d)) types.push_back(hn_type_json(l.q, t));
        return json{{"types", types}};
    });
    add_quiver(c, o);
    add_theta(c, o);
    add_dim(c, o);
    c = add(&app, "mass", "|R_d| / |G_d| as a rational function of q", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto d = dim_arg(l.q, o.dim, "--dim", in, "dim");
        auto m = mass(l.q, d);
        return json{{"mass", to_json(m, "q")}, {"text", m.to_string("q")}};
    });
    add_quiver(c, o);
    add_dim(c, o);
    c = add(&app, "mass-ss", "|R_d^ss| / |G_d| as a rational function of q", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto th = theta_arg(l.q, o, in);
        auto d = dim_arg(l.q, o.dim, "--dim", in, "dim");
        in["method"] = o.method;
        HNCalculus hn(l.q, th);
        auto m = o.method == "closed" ? hn.mass_ss_closed(d) : hn.mass_ss(d);
        return json{{"mass_ss", to_json(m, "q")}, {"text", m.to_string("q")}};
    });
    add_quiver(c, o);
    add_theta(c, o);
    add_dim(c, o);
    c->add_option("--method", o.method, "closed (inclusion-exclusion) or mass (HN recursion)")->check(CLI::IsMember({"closed", "mass"}));
    c = add(&app, "betti", "Betti numbers of the moduli space (coefficients in q)", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto th = theta_arg(l.q, o, in);
        auto d = dim_arg(l.q, o.dim, "--dim", in, "dim");
        in["method"] = o.method;
        HNCalculus hn(l.q, th);
        LaurentPoly p = o.method == "closed" ? hn.poincare(d).contract_power(2) : hn.betti_via_mass(d);
        return json{{"coefficients", coefficient_list(p)}, {"polynomial", to_json(p, "q")}};
    });
    add_quiver(c, o);
    add_theta(c, o);
    add_dim(c, o);
    c->add_option("--method", o.method, "closed (Poincare formula) or mass ((q - 1) * mass_ss)")->check(CLI::IsMember({"closed", "mass"}));

    CLI::App* word = app.add_subcommand("word", "words in the vertex alphabet");
    word->require_subcommand(1);
    c = add(word, "leq", "degeneration order w <= w2", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        in["w"] = o.w;
        in["w2"] = o.w2;
        return json{{"leq", word_leq(l.q, parse_word(l.q, o.w), parse_word(l.q, o.w2), budget_of(o, kDefaultWordBudget))}};
    });
    add_quiver(c, o);
    c->add_option("--w", o.w, "first word")->required();
    c->add_option("--w2", o.w2, "second word")->required();
    add_budget(c, o);

    CLI::App* monoid = app.add_subcommand("monoid", "composition monoid");
    monoid->require_subcommand(1);
    c = add(monoid, "equal", "equality in the monoid U", [](const Options& o, json& in, json& meta) {
        auto l = load(o);
        in = l.inputs;
        in["w"] = o.w;
        in["w2"] = o.w2;
        const auto budget = budget_of(o, kDefaultWordBudget);
        auto r = monoid_equal(l.q, parse_word(l.q, o.w), parse_word(l.q, o.w2), budget);
        meta = budget_json(budget, r.explored);
        return json{{"outcome", std::string(to_string(r.outcome))}, {"equal", r.outcome == MonoidOutcome::Equal}};
    });
    add_quiver(c, o);
    c->add_option("--w", o.w, "first word")->required();
    c->add_option("--w2", o.w2, "second word")->required();
    add_budget(c, o);
    c = add(monoid, "canonical", "lexicographically least word of the class", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        in["w"] = o.w;
        auto wd = canonical_word(l.q, parse_word(l.q, o.w), budget_of(o, kDefaultWordBudget));
        return json{{"word", format_word(l.q, wd)}};
    });
    add_quiver(c, o);
    c->add_option("--w", o.w, "word")->required();
    add_budget(c, o);
    c = add(monoid, "normalize", "Schur normal form of R_{d^1} * ... * R_{d^s}", [](const Options& o, json& in, json&) {
        auto l = load(o);
        in = l.inputs;
        auto parts = dims_from_json(l.q, parse_flag(o.parts, "--parts"));
        in["parts"] = to_json(l.q, parts);
        return json{{"parts", to_json(l.q, schur_normal_form(GenericCalculus(l.q), parts))}};
    });
    add_quiver(c, o);
    c->add_option("--parts", o.parts, "JSON list of dimension vectors")->required();

    CLI::App* orc = app.add_subcommand("oracle", "finite-field brute force");
    orc->require_subcommand(1);
    c = add(orc, "count-ss", "count (semi)stable points of R_d(F_q)", [](const Options& o, json& in, json& meta) {
        auto l = load(o);
        in = l.inputs;
        auto th = theta_arg(l.q, o, in);
        auto d = dim_arg(l.q, o.dim, "--dim", in, "dim");
        in["q"] = decimal(o.q);
        in["stable"] = o.stable;
        const auto budget = budget_of(o, oracle::kDefaultBudget);
        auto r = o.stable ? oracle::count_stable(l.q, th, d, o.q, budget) : oracle::count_semistable(l.q, th, d, o.q, budget);
        meta = budget_json(budget, r.total);
        Rational m(mpz_class(r.count), group_order(d).evaluate(Rational(o.q)).get_num());
        m.canonicalize();
        return json{{"count", std::to_string(r.count)}, {"total", std::to_string(r.total)}, {"mass", m.get_str()}};
    });
    add_quiver(c, o);
    add_theta(c, o);
    add_dim(c, o);
    add_q(c, o);
    add_budget(c, o);
    c->add_flag("--stable", o.stable, "count stable instead of semistable points");
    c = add(orc, "count-indec", "count indecomposable points of R_d(F_q)", [](const Options& o, json& in, json& meta) {
        auto l = load(o);
        in = l.inputs;
        auto d = dim_arg(l.q, o.dim, "--dim", in, "dim");
        in["q"] = decimal(o.q);
        const auto budget = budget_of(o, oracle::kDefaultBudget);
        auto r = oracle::count_indecomposable(l.q, d, o.q, budget);
        meta = budget_json(budget, r.total);
        return json{{"count", std::to_string(r.count)}, {"total", std::to_string(r.total)}};
    });
    add_quiver(c, o);
    add_dim(c, o);
    add_q(c, o);
    add_budget(c, o);
    c = add(orc, "generic-ext", "minimum of dim Ext(M, N) over all points", [](const Options& o, json& in, json& meta) {
        auto l = load(o);
        in = l.inputs;
        auto d = dim_arg(l.q, o.d, "--d", in, "d");
        auto e = dim_arg(l.q, o.e, "--e", in, "e");
        in["q"] = decimal(o.q);
        const auto budget = budget_of(o, oracle::kDefaultBudget);
        auto r = oracle::min_ext(l.q, d, e, o.q, budget);
        meta = budget_json(budget, r.pairs);
        meta["total"] = std::to_string(r.total);
        return json{{"min_ext", decimal(r.value)}, {"generic_ext", decimal(GenericCalculus(l.q).ext(d, e))}};
    });
    add_quiver(c, o);
    add_de(c, o);
    add_q(c, o);
    add_budget(c, o);
    c = add(orc, "kron-quadric", "quadratic form det(sum l_k A^k) of 2 x 2 matrices", [](const Options& o, json& in, json&) {
        auto mats = matrices_from_json(parse_flag(o.matrices, "--matrices"), o.q);
        in["q"] = decimal(o.q);
        in["matrices"] = parse(o.matrices, "--matrices");
        auto f = oracle::kronecker_quadratic_form(mats, o.q);
        const Quiver km = Quiver::kronecker(f.m);
        auto x = oracle::FFRep::from_matrices(km, DimVector({2, 2}), o.q, mats);
        json coeffs = json::array();
        for (int c : f.coeffs) coeffs.push_back(decimal(c));
        return json{{"coefficients", coeffs}, {"rank", decimal(f.rank)}, {"zero", f.is_zero()},
                    {"semistable", oracle::is_semistable(km, x, Stability::coordinate(2, 0))}};
    });
    c->add_option("--matrices", o.matrices, "JSON list of 2 x 2 matrices")->required();
    add_q(c, o);
    c = add(orc, "comp-series", "composition series of a given type", [](const Options& o, json& in, json& meta) {
        auto l = load(o);
        in = l.inputs;
        Word wd = parse_word(l.q, o.w);
        in["w"] = o.w;
        in["q"] = decimal(o.q);
        const DimVector d = word_weight(l.q, wd);
        in["dim"] = to_json(l.q, d);
        if (!o.matrices.empty()) {
            in["matrices"] = parse(o.matrices, "--matrices");
            auto x = rep_from_json(l.q, d, o.q, in["matrices"]);
            return json{{"has_series", oracle::has_comp_series(l.q, x, wd)}};
        }
        const auto budget = budget_of(o, oracle::kDefaultBudget);
        std::uint64_t count = 0;
        auto total = oracle::enumerate_reps(l.q, d, o.q, budget, [&](const oracle::FFRep& x) {
            if (oracle::has_comp_series(l.q, x, wd)) ++count;
            return true;
        });
        meta = budget_json(budget, total);
        return json{{"count", std::to_string(count)}, {"total", std::to_string(total)}};
    });
    add_quiver(c, o);
    c->add_option("--w", o.w, "word")->required();
    c->add_option("--matrices", o.matrices, "one matrix per arrow; omitted: count over R_d(F_q)");
    add_q(c, o);
    add_budget(c, o);

    CLI::App* series = app.add_subcommand("series", "generating functions");
    series->require_subcommand(1);
    c = add(series, "two-row", "two-row plane partitions", [](const Options& o, json& in, json&) {
        in["n"] = decimal(o.n);
        json coeffs = json::array();
        const auto s = two_row_partition_series(o.n);
        for (const auto& x : s.coefficients()) coeffs.push_back(x.get_str());
        return json{{"coefficients", coeffs}};
    });
    c->add_option("--n", o.n, "cutoff degree")->required()->check(CLI::NonNegativeNumber);
    c = add(series, "drezet", "(1 - q) prod_{i<=d} (1 - q^i)^-1 prod_{i<=e} (1 - q^i)^-1", [](const Options& o, json& in, json&) {
        in["d"] = decimal(o.di);
        in["e"] = decimal(o.ei);
        in["n"] = decimal(o.n);
        json coeffs = json::array();
        const auto s = drezet_series(o.di, o.ei, o.n);
        for (const auto& x : s.coefficients()) coeffs.push_back(x.get_str());
        return json{{"coefficients", coeffs}};
    });
    c->add_option("--d", o.di, "first product length")->required();
    c->add_option("--e", o.ei, "second product length")->required();
    c->add_option("--n", o.n, "cutoff degree")->required()->check(CLI::NonNegativeNumber);

    CLI::App* fixtures = app.add_subcommand("fixtures", "regression fixtures");
    fixtures->require_subcommand(1);
    CLI::App* frun = fixtures->add_subcommand("run", "run a fixture file");
    frun->add_option("path", o.fixture_path, "fixture JSON file")->required();
}

json error_json(const std::string& cls, const std::string& message) { return {{"error", {{"class", cls}, {"message", message}}}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app("Invariants of quiver representations and their moduli spaces", "quiverinv");
    app.require_subcommand(1);
    std::vector<Command> cmds;
    register_commands(app, o, cmds);

    std::vector<std::string> storage{"quiverinv"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        out << error_json("input", e.what()).dump() << "\n";
        return kInputError;
    }

    if (!o.fixture_path.empty()) return run_fixtures(o.fixture_path, out, err);

    const Command* cmd = nullptr;
    for (const auto& c : cmds)
        if (c.app->parsed()) cmd = &c;
    if (!cmd) {
        out << app.help();
        return kInputError;
    }
    try {
        json inputs = json::object(), meta;
        const auto t0 = std::chrono::steady_clock::now();
        json result = cmd->handler(o, inputs, meta);
        const auto t1 = std::chrono::steady_clock::now();
        json doc = {{"command", cmd->name}, {"inputs", inputs}, {"result", result}};
        if (!meta.is_null()) doc["budget"] = meta;
        if (o.timing) doc["timing_ms"] = std::to_string(std::chrono::duration<double, std::milli>(t1 - t0).count());
        if (o.format == "table") out << render_table(doc["result"]);
        else out << doc.dump() << "\n";
        return kOk;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        out << error_json("input", e.what()).dump() << "\n";
        return kInputError;
    } catch (const BudgetExceeded& e) {
        err << "budget refused: " << e.what() << " (required " << e.required() << ", budget " << e.budget() << ")\n";
        json j = error_json("budget", e.what());
        j["error"]["required"] = std::to_string(e.required());
        j["error"]["budget"] = std::to_string(e.budget());
        out << j.dump() << "\n";
        return kBudgetRefused;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        out << error_json("internal", e.what()).dump() << "\n";
        return kInternalError;
    } catch (const ArithmeticError& e) {
        err << "arithmetic error: " << e.what() << "\n";
        out << error_json("arithmetic", e.what()).dump() << "\n";
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        out << error_json("internal", e.what()).dump() << "\n";
        return kInternalError;
    }
}

}  // namespace qi::cli
