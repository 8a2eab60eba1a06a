#include "canonlab/cli.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>
#include <sstream>

#include "canonlab/canon.hpp"
#include "canonlab/io.hpp"
#include "canonlab/polys.hpp"

namespace canonlab {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Base {
    Poset poset;
    Labeling labeling;
};

CanonOptions options_for(const RunConfig& config) {
    CanonOptions options;
    options.jobs = std::max(1u, config.jobs);
    if (config.cap_override) {
        const std::size_t cap = *config.cap_override;
        options.limits.max_elements = std::max(options.limits.max_elements, cap);
        options.limits.max_canon_size = std::max(options.limits.max_canon_size, cap);
        options.limits.max_sweep_edges = std::max(options.limits.max_sweep_edges, cap);
    }
    return options;
}

Base resolve_base(const RunConfig& config) {
    if (config.poset_file) {
        auto loaded = load_poset_file(*config.poset_file, config.repair);
        Labeling w = config.labels ? Labeling(*config.labels)
                     : loaded.labeling ? *loaded.labeling
                                       : natural_labeling(loaded.poset);
        if (w.size() != loaded.poset.size()) throw UsageError("labeling size mismatch");
        return {std::move(loaded.poset), std::move(w)};
    }
    Labeling w = config.labels ? Labeling(*config.labels) : Labeling::identity(config.m);
    if (w.size() != config.m) throw UsageError("--labels needs one label per element of [m]");
    return {chain(config.m), std::move(w)};
}

void print_polynomial(const RunConfig& config, const std::string& name, const IntPolynomial& p,
                      std::ostream& out, const std::string& note = {}) {
    switch (config.output_format) {
        case OutputFormat::Json: {
            Json j{{"name", name}, {"m", config.m}, {"n", config.n}};
            if (!note.empty()) j["note"] = note;
            j["coeffs"] = to_json(p)["coeffs"];
            out << j.dump() << '\n';
            break;
        }
        case OutputFormat::Csv:
            out << "exponent,coefficient\n";
            for (std::size_t i = 0; i < p.coefficients().size(); ++i)
                out << i << ',' << p.coefficients()[i].get_str() << '\n';
            break;
        case OutputFormat::Plain:
            out << name << ": " << p.str();
            if (!note.empty()) out << "  [" << note << "]";
            out << '\n';
            break;
    }
}

int run_poly(const RunConfig& config, std::ostream& out) {
    const CanonOptions options = options_for(config);
    const std::string& t = config.target;
    std::string note;
    IntPolynomial p;
    if (t == "eulerian") {
        p = eulerian(config.n);
    } else if (t == "narayana") {
        p = narayana(config.n);
    } else if (t == "canon") {
        auto b = resolve_base(config);
        p = canon_polynomial_bruteforce(b.poset, b.labeling, config.n, options);
    } else if (t == "canon-product") {
        auto b = resolve_base(config);
        p = canon_polynomial_product(b.poset, b.labeling, config.n, options);
    } else if (t == "hstar") {
        if (config.poset_file) {
            auto b = resolve_base(config);
            p = hstar(b.poset, b.labeling, options.limits);
        } else {
            const Poset product = product_with_chain(chain(config.m), config.n);
            p = hstar(product, natural_labeling(product), options.limits);
        }
    } else if (t == "checked") {
        auto b = resolve_base(config);
        p = hstar(checked_product(b.poset, config.n), checked_labeling(b.labeling, config.n),
                  options.limits);
    } else if (t == "dissonant") {
        auto b = resolve_base(config);
        std::vector<CopyEdge> removed = config.removed_edges.value_or(std::vector<CopyEdge>{});
        p = dissonant_polynomial(b.poset, b.labeling, config.n, removed, options);
        std::vector<bool> touched(b.poset.size() + 1, false);
        for (const auto& e : removed)
            if (e.p <= b.poset.size()) touched[e.p] = true;
        bool fixed = false;
        for (std::size_t q = 1; q <= b.poset.size(); ++q) fixed = fixed || !touched[q];
        note = std::string("mode ") + to_string(fixed ? RemovalMode::FixedRow : RemovalMode::Arbitrary);
    } else if (t == "weak") {
        p = weak_descent_polynomial(config.m, config.n, options);
    } else {
        throw UsageError("unknown polynomial: " + t);
    }
    print_polynomial(config, t, p, out, note);
    return exit_code::ok;
}

void print_reports(const RunConfig& config, const std::vector<IdentityReport>& reports,
                   std::ostream& out) {
    if (config.output_format == OutputFormat::Json) {
        Json a = Json::array();
        for (const auto& r : reports) a.push_back(to_json(r));
        out << a.dump() << '\n';
        return;
    }
    if (config.output_format == OutputFormat::Csv) {
        out << "name,holds,lhs,rhs,detail,witness\n";
        for (const auto& r : reports)
            out << r.name << ',' << r.holds << ",\"" << r.lhs.str() << "\",\"" << r.rhs.str()
                << "\",\"" << r.detail << "\",\"" << r.witness.value_or("") << "\"\n";
        return;
    }
    for (const auto& r : reports) {
        out << (r.holds ? "holds " : "FAILS ") << r.name << ": " << r.lhs.str() << " = "
            << r.rhs.str();
        if (!r.detail.empty()) out << "  [" << r.detail << "]";
        out << '\n';
        if (!r.holds && r.witness) out << "  certificate: " << *r.witness << '\n';
    }
}

std::vector<IdentityReport> verify_all(const RunConfig& config, const CanonOptions& options) {
    std::vector<IdentityReport> all;
    const std::size_t s = config.max_size;
    for (auto name : statement_names()) {
        const bool only_two = name == "narayana-product" || name == "narayana-dyck";
        for (std::size_t m = 1; m <= s; ++m) {
            if (only_two && m != 2) continue;
            for (std::size_t n = 1; m * n <= s; ++n) {
                StatementInput input;
                input.m = m;
                input.n = n;
                for (auto& r : verify_statement(name, input, options)) {
                    r.detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                               (r.detail.empty() ? "" : "; " + r.detail);
                    all.push_back(std::move(r));
                }
            }
        }
    }
    return all;
}

int run_verify(const RunConfig& config, std::ostream& out) {
    const CanonOptions options = options_for(config);
    std::vector<IdentityReport> reports;
    if (config.target == "all") {
        reports = verify_all(config, options);
    } else {
        StatementInput input;
        input.m = config.m;
        input.n = config.n;
        if (config.poset_file) {
            auto b = resolve_base(config);
            input.poset = std::move(b.poset);
            input.labeling = std::move(b.labeling);
        } else if (config.labels) {
            input.poset = chain(config.m);
            input.labeling = Labeling(*config.labels);
        }
        input.removed = config.removed_edges;
        reports = verify_statement(config.target, input, options);
    }
    print_reports(config, reports, out);
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
    if (config.output_format == OutputFormat::Plain)
        out << reports.size() << " checks, " << (ok ? "all hold" : "some FAIL") << '\n';
    return ok ? exit_code::ok : exit_code::failed;
}

int run_sweep(const RunConfig& config, std::ostream& out) {
    if (config.target != "gamma") throw UsageError("sweep supports: gamma");
    const SweepReport report = conjecture_sweep(config.m, config.n, options_for(config));
    switch (config.output_format) {
        case OutputFormat::Csv:
            write_sweep_csv(out, report);
            break;
        case OutputFormat::Json: {
            Json rows = Json::array();
            for (const auto& row : report.rows) rows.push_back(to_json(row));
            Json certs = Json::array();
            for (const auto& c : report.counterexamples) certs.push_back(to_json(c));
            Json j{{"m", report.m},
                   {"n", report.n},
                   {"rows", std::move(rows)},
                   {"counterexamples", std::move(certs)},
                   {"inconsistencies", report.inconsistencies}};
            out << j.dump() << '\n';
            break;
        }
        case OutputFormat::Plain:
            for (const auto& row : report.rows) {
                out << "mask " << row.mask << " (" << to_string(row.mode) << "): "
                    << row.polynomial.str() << "; palindromic: " << std::boolalpha
                    << row.palindromic << "; gamma:";
                if (row.gamma)
                    for (const auto& g : row.gamma->gamma) out << ' ' << g.get_str();
                else
                    out << " none";
                out << "; gamma-positive: " << row.gamma_positive << "; unimodal: " << row.unimodal
                    << std::noboolalpha << '\n';
            }
            for (const auto& c : report.counterexamples)
                out << "certificate: " << to_json(c).dump() << '\n';
            for (const auto& msg : report.inconsistencies) out << "inconsistent: " << msg << '\n';
            out << report.rows.size() << " subposets, " << report.counterexamples.size()
                << " gamma-negative or non-palindromic\n";
            break;
    }
    return report.counterexamples.empty() && report.consistent() ? exit_code::ok
                                                                 : exit_code::failed;
}

int run_gamma(const RunConfig& config, std::ostream& out) {
    const auto g = gamma_interpretation_counts(config.m, config.n, RhoDescentRule::Lexicographic,
                                               options_for(config));
    std::vector<std::vector<std::string>> words;
    for (const auto& cls : g.classes) {
        words.emplace_back();
        for (const auto& ext : cls)
            words.back().push_back(canon_word_from_checked_extension(ext.order, g.m, g.n).str());
    }
    auto strings = [](const std::vector<mpz_class>& v) {
        std::vector<std::string> s;
        for (const auto& x : v) s.push_back(x.get_str());
        return s;
    };
    if (config.output_format == OutputFormat::Json) {
        Json j{{"m", g.m},
               {"n", g.n},
               {"offset", g.stated_offset},
               {"empirical_offset", g.empirical_offset ? Json(*g.empirical_offset) : Json(nullptr)},
               {"histogram", g.histogram},
               {"counts", strings(g.counts)},
               {"gamma", strings(g.expected.gamma)},
               {"matches", g.matches},
               {"classes", words}};
        out << j.dump() << '\n';
    } else {
        out << "gamma:";
        for (const auto& s : strings(g.expected.gamma)) out << ' ' << s;
        out << "\ncounts (offset " << g.stated_offset << "):";
        for (const auto& s : strings(g.counts)) out << ' ' << s;
        out << "\nmatches: " << std::boolalpha << g.matches << std::noboolalpha << '\n';
        if (g.empirical_offset && *g.empirical_offset != g.stated_offset)
            out << "counts match at offset " << *g.empirical_offset << '\n';
        for (std::size_t i = 0; i < words.size(); ++i) {
            out << "class " << i << ':';
            for (const auto& w : words[i]) out << ' ' << w;
            out << '\n';
        }
    }
    return g.matches ? exit_code::ok : exit_code::failed;
}

int run_extensions(const RunConfig& config, std::ostream& out) {
    const CanonOptions options = options_for(config);
    Poset poset;
    Labeling labels;
    if (config.poset_file) {
        auto b = resolve_base(config);
        poset = std::move(b.poset);
        labels = std::move(b.labeling);
    } else {
        poset = product_with_chain(chain(config.m), config.n);
        labels = Labeling::identity(poset.size());
    }
    Json list = Json::array();
    if (config.output_format == OutputFormat::Csv) out << "order,word,descents\n";
    const auto count = for_each_linear_extension(
        poset,
        [&](std::span<const Element> order) {
            const Word w = word(order, labels);
            const auto des = descent_count(w);
            switch (config.output_format) {
                case OutputFormat::Json:
                    list.push_back(Json{{"order", std::vector<Element>(order.begin(), order.end())},
                                        {"word", w},
                                        {"descents", des}});
                    break;
                case OutputFormat::Csv:
                case OutputFormat::Plain: {
                    const char sep = config.output_format == OutputFormat::Csv ? ' ' : ',';
                    std::string o, ws;
                    for (auto x : order) o += (o.empty() ? "" : std::string(1, sep)) + std::to_string(x);
                    for (auto v : w) ws += (ws.empty() ? "" : std::string(1, sep)) + std::to_string(v);
                    if (config.output_format == OutputFormat::Csv)
                        out << o << ',' << ws << ',' << des << '\n';
                    else
                        out << ws << "  des " << des << '\n';
                    break;
                }
            }
            return true;
        },
        {}, options.limits);
    if (config.output_format == OutputFormat::Json)
        out << Json{{"count", count}, {"extensions", std::move(list)}}.dump() << '\n';
    else if (config.output_format == OutputFormat::Plain)
        out << count << " extensions\n";
    return exit_code::ok;
}

}  // namespace

const std::vector<std::string>& poly_names() {
    static const std::vector<std::string> names{"eulerian", "narayana", "canon", "canon-product",
                                                "hstar",    "checked",  "dissonant", "weak"};
    return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.m == 0 || config.n == 0) throw UsageError("--m and --n must be positive");
        switch (config.command) {
            case Command::Poly: return run_poly(config, out);
            case Command::Verify: return run_verify(config, out);
            case Command::Sweep: return run_sweep(config, out);
            case Command::Gamma: return run_gamma(config, out);
            case Command::Extensions: return run_extensions(config, out);
        }
    } catch (const CycleError& e) {
        err << "error: " << e.what() << "; cycle:";
        for (auto x : e.cycle()) err << ' ' << x;
        err << '\n';
        return exit_code::usage;
    } catch (const NotConstantDescent& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << " (raise with --force-cap)\n";
        return exit_code::usage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"canonlab: canon permutations and labeled-poset descent polynomials"};
    RunConfig config;
    std::string command;
    std::string format = "plain";
    std::string remove;
    std::string labels;
    std::size_t force_cap = 0;

    const std::map<std::string, Command> commands{{"poly", Command::Poly},
                                                  {"verify", Command::Verify},
                                                  {"sweep", Command::Sweep},
                                                  {"gamma", Command::Gamma},
                                                  {"extensions", Command::Extensions}};
    app.add_option("command", command, "poly | verify | sweep | gamma | extensions")->required();
    app.add_option("target", config.target, "polynomial, statement ('all'), or 'gamma' for sweep");
    app.add_option("--m", config.m, "size of the chain [m]");
    app.add_option("--n", config.n, "number of copies");
    app.add_option("--poset", config.poset_file, "poset JSON file");
    app.add_option("--labels", labels, "labeling of the base poset, e.g. 2,1,3");
    app.add_option("--remove", remove, "inter-copy covers to drop, p:j,p:j,...");
    app.add_option("--format", format, "json | csv | plain");
    app.add_option("--jobs", config.jobs, "worker threads");
    app.add_option("--force-cap", force_cap, "raise size caps to N");
    app.add_option("--max-size", config.max_size, "verify all: bound on m*n");
    app.add_flag("--repair", config.repair, "reduce comparable pairs in --poset to covers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }

    try {
        auto it = commands.find(command);
        if (it == commands.end()) throw UsageError("unknown command: " + command);
        config.command = it->second;
        if (config.target.empty() && config.command != Command::Gamma &&
            config.command != Command::Extensions)
            throw UsageError(command + " needs a target");
        if (format == "json") config.output_format = OutputFormat::Json;
        else if (format == "csv") config.output_format = OutputFormat::Csv;
        else if (format == "plain") config.output_format = OutputFormat::Plain;
        else throw UsageError("unknown format: " + format);
        if (config.jobs == 0) throw UsageError("--jobs must be positive");
        if (force_cap) config.cap_override = force_cap;
        if (!remove.empty()) config.removed_edges = parse_edge_list(remove);
        if (!labels.empty()) {
            std::vector<Label> values;
            std::stringstream ss(labels);
            std::string item;
            while (std::getline(ss, item, ',')) values.push_back(static_cast<Label>(std::stoul(item)));
            config.labels = std::move(values);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return run(config, out, err);
}

}  // namespace canonlab
