// Command line front end: builds the named constructions, runs the checks and
// searches, and glues the text formats together so verbs compose in pipes.

#include "zmu/catalog.hpp"
#include "zmu/error.hpp"
#include "zmu/galois.hpp"
#include "zmu/graphs.hpp"
#include "zmu/io.hpp"
#include "zmu/iso.hpp"
#include "zmu/scheme.hpp"
#include "zmu/search.hpp"
#include "zmu/semiplanes.hpp"
#include "zmu/voltage.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace zmu;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

const char* kUsage = R"(usage: zmu <verb> [arguments]

verbs:
  build <name> [key=value ...]   emit a named scheme, matrix or voltage graph
  blowup <input>                 blow a scheme up into its 0/1 matrix
  check <property> <input>       j2free | skew | admissible | configuration |
                                 elliptic | girthlemma; exit 1 on failure
  girth <input>                  shortest cycle length of the graph
  params <input>                 incidence parameters (m_k, n_l)
  aut <input>                    automorphism group order
  iso <input1> <input2>          isomorphism test; exit 1 when distinct
  canon <input>                  canonical incidence matrix
  lift <input>                   derived graph of a voltage graph
  search star                    diagonal search over the (30_5) fixtures
  search etazeta --t <name>      closure search for T360/T72/T36/T18
  census --n <n> --k <k>         cyclic configurations with a fixed base line
  verify [--seed <n>]            every stored expectation and property suite

common flags:
  -o <path>        write the result to a file instead of stdout
  --format <f>     scheme | matrix output (where both make sense)
  --summary <path> machine readable JSON report (search, census, verify)
  --seed <n>       randomized property suites only (verify)

inputs are file paths; '-' reads stdin. build names:
  petersen cremona_richmond reye T50 T96 T98 affine_9_4_12_3 L6 fln35
  T360 T72 T36 T18 robertson dumbbell
  L q=7 [generator=3] [sign=minus]    C q=4 [generator=..]
  Cmix q=4 [perm=1,2,3,0]             balbuena q=7 variant=M
  T alpha=11111 beta=11110            V t=T360
  Vprime t=T360 eta=0 zeta=0          K35 t=T360
  cyclic n=35 set=0,1,8,12,14,17
)";

struct Options {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;
};

Options parse_options(const std::vector<std::string>& args, std::size_t start) {
    static const std::map<std::string, std::string> known{
        {"-o", "output"},       {"--format", "format"}, {"--summary", "summary"},
        {"--seed", "seed"},     {"--t", "t"},           {"--n", "n"},
        {"--k", "k"}};
    Options options;
    for (std::size_t i = start; i < args.size(); ++i) {
        const std::string& arg = args[i];
        const auto found = known.find(arg);
        if (found != known.end()) {
            if (i + 1 >= args.size()) throw UsageError(arg + " needs a value");
            options.flags[found->second] = args[++i];
        } else if (arg.size() > 1 && arg[0] == '-' && arg != "-") {
            throw UsageError("unknown flag '" + arg + "'");
        } else {
            options.positional.push_back(arg);
        }
    }
    return options;
}

int parse_int_arg(const std::string& value, const std::string& what) {
    try {
        std::size_t used = 0;
        const int parsed = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw UsageError(what + " expects an integer, got '" + value + "'");
    }
}

std::vector<int> parse_int_list(const std::string& value, const std::string& what) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(value);
    while (std::getline(in, token, ',')) out.push_back(parse_int_arg(token, what));
    return out;
}

std::string slurp(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw UsageError("cannot open '" + path + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

struct Input {
    InputKind kind;
    std::optional<Scheme> scheme;
    std::optional<BinaryMatrix> matrix;
    std::optional<VoltageGraph> voltage;
};

Input load_input(const std::string& path) {
    const std::string text = slurp(path);
    Input input{sniff_input(text), std::nullopt, std::nullopt, std::nullopt};
    std::istringstream in(text);
    switch (input.kind) {
        case InputKind::scheme: input.scheme = read_scheme(in); break;
        case InputKind::matrix: input.matrix = read_matrix(in); break;
        case InputKind::voltage: input.voltage = read_voltage_graph(in); break;
    }
    return input;
}

BinaryMatrix as_matrix(const Input& input) {
    switch (input.kind) {
        case InputKind::scheme: return blow_up(*input.scheme);
        case InputKind::matrix: return *input.matrix;
        case InputKind::voltage: return lift(*input.voltage).graph.adjacency();
    }
    throw UsageError("unreadable input");
}

struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    explicit Sink(const Options& options) {
        const auto found = options.flags.find("output");
        if (found != options.flags.end()) {
            file.open(found->second);
            if (!file) throw UsageError("cannot write '" + found->second + "'");
            out = &file;
        }
    }
    std::ostream& stream() { return *out; }
};

std::string flag_or(const Options& options, const std::string& name,
                    const std::string& fallback) {
    const auto found = options.flags.find(name);
    return found == options.flags.end() ? fallback : found->second;
}

void forbid_seed(const Options& options) {
    if (options.flags.count("seed"))
        throw UsageError("--seed applies to the randomized property suites (verify) only");
}

// ---------------------------------------------------------------- build ----

struct Product {
    std::optional<Scheme> scheme;
    std::optional<BinaryMatrix> matrix;
    std::optional<VoltageGraph> voltage;
};

std::map<std::string, std::string> keyword_args(const std::vector<std::string>& positional) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = 1; i < positional.size(); ++i) {
        const std::string& arg = positional[i];
        const std::size_t eq = arg.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("build arguments look like key=value, got '" + arg + "'");
        kv[arg.substr(0, eq)] = arg.substr(eq + 1);
    }
    return kv;
}

std::string take_arg(std::map<std::string, std::string>& kv, const std::string& key) {
    const auto found = kv.find(key);
    if (found == kv.end()) throw UsageError("build: missing argument " + key + "=");
    std::string value = found->second;
    kv.erase(found);
    return value;
}

std::optional<std::string> take_optional(std::map<std::string, std::string>& kv,
                                         const std::string& key) {
    const auto found = kv.find(key);
    if (found == kv.end()) return std::nullopt;
    std::string value = found->second;
    kv.erase(found);
    return value;
}

KrcadinacParams diagonal_params(const std::string& name_or_digits, bool is_alpha_beta,
                                const std::string& alpha, const std::string& beta) {
    if (!is_alpha_beta) return krcadinac_named_params(name_or_digits);
    if (alpha.size() != 5 || beta.size() != 5)
        throw UsageError("alpha= and beta= take five digits each");
    KrcadinacParams params;
    for (int i = 0; i < 5; ++i) {
        if (alpha[i] < '0' || alpha[i] > '2' || beta[i] < '0' || beta[i] > '2')
            throw UsageError("diagonal digits lie in {0,1,2}");
        params.alpha[i] = alpha[i] - '0';
        params.beta[i] = beta[i] - '0';
    }
    return params;
}

Product build_product(const std::vector<std::string>& positional) {
    if (positional.empty()) throw UsageError("build needs a construction name");
    const std::string& name = positional[0];
    auto kv = keyword_args(positional);
    auto done = [&kv, &name] {
        if (!kv.empty())
            throw UsageError("build " + name + ": unused argument " + kv.begin()->first + "=");
    };

    Product product;
    const auto catalog_names = named_scheme_names();
    if (std::find(catalog_names.begin(), catalog_names.end(), name) != catalog_names.end()) {
        done();
        product.scheme = named(name).scheme;
        return product;
    }
    const auto t_names = krcadinac_param_names();
    if (std::find(t_names.begin(), t_names.end(), name) != t_names.end()) {
        done();
        product.scheme = krcadinac_T(krcadinac_named_params(name));
        return product;
    }
    if (name == "robertson") {
        done();
        product.matrix = robertson_hs();
        return product;
    }
    if (name == "dumbbell") {
        done();
        product.voltage = VoltageGraph(5, 2, {{0, 0, 1}, {1, 1, 2}, {0, 1, 0}});
        return product;
    }
    if (name == "L") {
        const int q = parse_int_arg(take_arg(kv, "q"), "q");
        LOptions options;
        if (const auto generator = take_optional(kv, "generator"))
            options.generator = parse_int_arg(*generator, "generator");
        if (const auto sign = take_optional(kv, "sign")) {
            if (*sign == "minus")
                options.sign = DlogSign::minus;
            else if (*sign == "plus")
                options.sign = DlogSign::plus;
            else
                throw UsageError("sign= is 'minus' or 'plus'");
        }
        done();
        product.scheme = construct_L(q, options);
        return product;
    }
    if (name == "C") {
        const int q = parse_int_arg(take_arg(kv, "q"), "q");
        std::optional<int> generator;
        if (const auto value = take_optional(kv, "generator"))
            generator = parse_int_arg(*value, "generator");
        done();
        product.scheme = construct_C(q, generator);
        return product;
    }
    if (name == "Cmix") {
        const int q = parse_int_arg(take_arg(kv, "q"), "q");
        std::optional<std::vector<int>> perm;
        if (const auto value = take_optional(kv, "perm")) perm = parse_int_list(*value, "perm");
        done();
        product.scheme = construct_C_mix(q, perm);
        return product;
    }
    if (name == "balbuena") {
        const int q = parse_int_arg(take_arg(kv, "q"), "q");
        const std::string variant = take_arg(kv, "variant");
        if (variant != "M" && variant != "N") throw UsageError("variant= is 'M' or 'N'");
        done();
        product.scheme =
            balbuena_minor(q, variant == "M" ? BalbuenaVariant::M : BalbuenaVariant::N);
        return product;
    }
    if (name == "T") {
        const std::string alpha = take_arg(kv, "alpha");
        const std::string beta = take_arg(kv, "beta");
        done();
        product.scheme = krcadinac_T(diagonal_params("", true, alpha, beta));
        return product;
    }
    if (name == "V" || name == "Vprime" || name == "K35") {
        const KrcadinacParams params = krcadinac_named_params(take_arg(kv, "t"));
        const Scheme t = krcadinac_T(params);
        if (name == "V") {
            done();
            product.scheme = krcadinac_V(t);
        } else if (name == "K35") {
            done();
            product.scheme = krcadinac_35(t);
        } else {
            const int eta = parse_int_arg(take_arg(kv, "eta"), "eta");
            const int zeta = parse_int_arg(take_arg(kv, "zeta"), "zeta");
            done();
            product.scheme = krcadinac_V_prime(t, eta, zeta);
        }
        return product;
    }
    if (name == "cyclic") {
        const int n = parse_int_arg(take_arg(kv, "n"), "n");
        const std::vector<int> members = parse_int_list(take_arg(kv, "set"), "set");
        done();
        product.matrix = cyclic_config(ResidueSet(n, members)).incidence();
        return product;
    }
    throw UsageError("unknown construction '" + name + "'");
}

int run_build(const Options& options) {
    const Product product = build_product(options.positional);
    const std::string format = flag_or(options, "format", "");
    Sink sink(options);
    if (product.scheme) {
        if (format == "matrix")
            write_matrix(sink.stream(), blow_up(*product.scheme));
        else if (format.empty() || format == "scheme")
            write_scheme(sink.stream(), *product.scheme);
        else
            throw UsageError("--format is 'scheme' or 'matrix'");
    } else if (product.matrix) {
        if (!format.empty() && format != "matrix")
            throw UsageError("this construction only emits a matrix");
        write_matrix(sink.stream(), *product.matrix);
    } else {
        if (format == "matrix")
            write_matrix(sink.stream(), lift(*product.voltage).graph.adjacency());
        else if (format == "scheme")
            write_scheme(sink.stream(), scheme_of(*product.voltage));
        else if (format.empty())
            write_voltage_graph(sink.stream(), *product.voltage);
        else
            throw UsageError("--format is 'scheme' or 'matrix'");
    }
    return 0;
}

// ---------------------------------------------------------------- checks ---

int run_check(const Options& options) {
    if (options.positional.size() != 2)
        throw UsageError("check needs a property and one input");
    const std::string& property = options.positional[0];
    const Input input = load_input(options.positional[1]);

    bool pass = false;
    std::string detail;
    if (property == "j2free") {
        if (input.kind == InputKind::scheme && input.scheme->is_pure()) {
            const SchemeJ2Result result = is_j2_free_scheme(*input.scheme);
            pass = result.j2_free;
            if (result.witness) {
                const auto& w = *result.witness;
                std::ostringstream text;
                text << "quadruple rows (" << w.i << "," << w.g << ") cols (" << w.j << ","
                     << w.h << ") residues " << w.a << "-" << w.b << "+" << w.c << "-" << w.d
                     << " = 0";
                detail = text.str();
            }
        } else {
            const MatrixJ2Result result = is_j2_free_matrix(as_matrix(input));
            pass = result.j2_free;
            if (result.witness) {
                const auto& w = *result.witness;
                std::ostringstream text;
                text << "all-ones block at rows (" << w.row1 << "," << w.row2 << ") cols ("
                     << w.col1 << "," << w.col2 << ")";
                detail = text.str();
            }
        }
    } else if (property == "skew") {
        if (input.kind != InputKind::scheme) throw UsageError("check skew expects a scheme");
        pass = is_skew_symmetric(*input.scheme);
    } else if (property == "admissible") {
        if (input.kind == InputKind::scheme)
            pass = is_admissible(*input.scheme);
        else if (input.kind == InputKind::voltage)
            pass = is_admissible_assignment(*input.voltage);
        else
            throw UsageError("check admissible expects a scheme or a voltage graph");
    } else if (property == "configuration") {
        pass = is_configuration(IncidenceStructure(as_matrix(input)));
    } else if (property == "elliptic") {
        pass = is_elliptic_semiplane(IncidenceStructure(as_matrix(input)));
    } else if (property == "girthlemma") {
        pass = girth_lemma_check(IncidenceStructure(as_matrix(input)));
    } else {
        throw UsageError("unknown property '" + property + "'");
    }

    Sink sink(options);
    sink.stream() << (pass ? "pass" : detail.empty() ? "fail" : "fail: " + detail) << '\n';
    return pass ? 0 : 1;
}

// ---------------------------------------------------------------- queries --

int run_girth(const Options& options) {
    if (options.positional.size() != 1) throw UsageError("girth needs one input");
    const Graph graph = Graph::from_adjacency(as_matrix(load_input(options.positional[0])));
    const GirthResult result = girth(graph);
    Sink sink(options);
    if (result.acyclic)
        sink.stream() << "acyclic\n";
    else
        sink.stream() << result.girth << '\n';
    return 0;
}

int run_params(const Options& options) {
    if (options.positional.size() != 1) throw UsageError("params needs one input");
    const IncidenceStructure inc(as_matrix(load_input(options.positional[0])));
    Sink sink(options);
    const auto params = config_params(inc);
    if (!params) {
        sink.stream() << "irregular\n";
        return 1;
    }
    sink.stream() << "points=" << params->points << " point_degree=" << params->point_degree
                  << " lines=" << params->lines << " line_size=" << params->line_size
                  << " configuration=" << (is_configuration(inc) ? "yes" : "no") << '\n';
    return 0;
}

int run_aut(const Options& options) {
    if (options.positional.size() != 1) throw UsageError("aut needs one input");
    const IncidenceStructure inc(as_matrix(load_input(options.positional[0])));
    const AutReport report = aut_order(inc);
    Sink sink(options);
    sink.stream() << "aut_order=" << report.order << '\n';
    if (inc.points() == inc.lines())
        sink.stream() << "extended_aut_order=" << extended_aut_order(inc) << '\n';
    return 0;
}

int run_iso(const Options& options) {
    if (options.positional.size() != 2) throw UsageError("iso needs two inputs");
    const IncidenceStructure a(as_matrix(load_input(options.positional[0])));
    const IncidenceStructure b(as_matrix(load_input(options.positional[1])));
    const bool same = are_isomorphic(a, b);
    Sink sink(options);
    sink.stream() << (same ? "isomorphic" : "not isomorphic") << '\n';
    return same ? 0 : 1;
}

int run_canon(const Options& options) {
    if (options.positional.size() != 1) throw UsageError("canon needs one input");
    const IncidenceStructure inc(as_matrix(load_input(options.positional[0])));
    Sink sink(options);
    write_matrix(sink.stream(), canonical_form(inc));
    return 0;
}

int run_lift(const Options& options) {
    if (options.positional.size() != 1) throw UsageError("lift needs one input");
    const Input input = load_input(options.positional[0]);
    if (input.kind != InputKind::voltage) throw UsageError("lift expects a voltage graph");
    const std::string format = flag_or(options, "format", "matrix");
    Sink sink(options);
    if (format == "matrix")
        write_matrix(sink.stream(), lift(*input.voltage).graph.adjacency());
    else if (format == "scheme")
        write_scheme(sink.stream(), scheme_of(*input.voltage));
    else
        throw UsageError("--format is 'scheme' or 'matrix'");
    return 0;
}

// ---------------------------------------------------------------- search ---

json report_to_json(const SearchReport& report) {
    json classes = json::array();
    for (const auto& cls : report.classes)
        classes.push_back({{"aut_order", cls.aut_order},
                           {"member_count", cls.member_count},
                           {"representative", cls.representative}});
    json pairs = json::array();
    for (const auto& [eta, zeta] : report.pairs) pairs.push_back({eta, zeta});
    return {{"candidates", report.candidates},
            {"survivors", report.survivors},
            {"classes", classes},
            {"pairs", pairs},
            {"wall_seconds", report.wall_seconds}};
}

void write_summary(const Options& options, const json& summary) {
    const auto found = options.flags.find("summary");
    if (found == options.flags.end()) return;
    std::ofstream file(found->second);
    if (!file) throw UsageError("cannot write '" + found->second + "'");
    file << summary.dump(2) << '\n';
}

void print_report(std::ostream& out, const SearchReport& report, bool with_pairs) {
    out << "candidates " << report.candidates << '\n';
    out << "survivors " << report.survivors << '\n';
    if (with_pairs) {
        out << "pairs";
        for (const auto& [eta, zeta] : report.pairs) out << " (" << eta << "," << zeta << ")";
        if (report.pairs.empty()) out << " none";
        out << '\n';
    }
    out << "classes " << report.classes.size() << '\n';
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const auto& cls = report.classes[i];
        out << "class " << i + 1 << ": aut_order=" << cls.aut_order
            << " members=" << cls.member_count << " representative: " << cls.representative
            << '\n';
    }
    out << "wall_seconds " << report.wall_seconds << '\n';
}

int run_search(const Options& options) {
    if (options.positional.size() != 1)
        throw UsageError("search needs a mode: star or etazeta");
    const std::string& mode = options.positional[0];
    SearchReport report;
    bool with_pairs = false;
    if (mode == "star") {
        report = search_star_solutions();
    } else if (mode == "etazeta") {
        const auto t = options.flags.find("t");
        if (t == options.flags.end()) throw UsageError("search etazeta needs --t <name>");
        report = search_eta_zeta(krcadinac_named_params(t->second));
        with_pairs = true;
    } else {
        throw UsageError("unknown search mode '" + mode + "'");
    }
    Sink sink(options);
    print_report(sink.stream(), report, with_pairs);
    write_summary(options, report_to_json(report));
    return 0;
}

int run_census(const Options& options) {
    if (!options.positional.empty()) throw UsageError("census takes --n and --k only");
    const auto n = options.flags.find("n");
    const auto k = options.flags.find("k");
    if (n == options.flags.end() || k == options.flags.end())
        throw UsageError("census needs --n <n> and --k <k>");
    const SearchReport report =
        census_cyclic(parse_int_arg(n->second, "--n"), parse_int_arg(k->second, "--k"));
    Sink sink(options);
    print_report(sink.stream(), report, false);
    write_summary(options, report_to_json(report));
    return 0;
}

int run_verify(const Options& options) {
    if (!options.positional.empty()) throw UsageError("verify takes flags only");
    std::uint64_t seed = 20260819;
    const auto flag = options.flags.find("seed");
    if (flag != options.flags.end()) seed = std::stoull(flag->second);
    const VerifyReport report = verify_paper_suite(seed);
    Sink sink(options);
    std::size_t failed = 0;
    for (const auto& item : report.items) {
        if (!item.pass) ++failed;
        sink.stream() << (item.pass ? "[PASS] " : "[FAIL] ") << item.name;
        if (!item.detail.empty()) sink.stream() << ": " << item.detail;
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, " (%.2fs)", item.seconds);
        sink.stream() << buffer << '\n';
    }
    sink.stream() << report.items.size() - failed << " of " << report.items.size()
                  << " checks passed\n";
    json items = json::array();
    for (const auto& item : report.items)
        items.push_back({{"name", item.name},
                         {"pass", item.pass},
                         {"detail", item.detail},
                         {"seconds", item.seconds}});
    write_summary(options, {{"items", items}, {"all_pass", report.all_pass()}, {"seed", seed}});
    return report.all_pass() ? 0 : 1;
}

int dispatch(const std::vector<std::string>& args) {
    const std::string& verb = args[0];
    const Options options = parse_options(args, 1);
    if (verb != "verify") forbid_seed(options);
    if (verb == "build") return run_build(options);
    if (verb == "blowup") {
        if (options.positional.size() != 1) throw UsageError("blowup needs one input");
        const Input input = load_input(options.positional[0]);
        if (input.kind != InputKind::scheme) throw UsageError("blowup expects a scheme");
        Sink sink(options);
        write_matrix(sink.stream(), blow_up(*input.scheme));
        return 0;
    }
    if (verb == "check") return run_check(options);
    if (verb == "girth") return run_girth(options);
    if (verb == "params") return run_params(options);
    if (verb == "aut") return run_aut(options);
    if (verb == "iso") return run_iso(options);
    if (verb == "canon") return run_canon(options);
    if (verb == "lift") return run_lift(options);
    if (verb == "search") return run_search(options);
    if (verb == "census") return run_census(options);
    if (verb == "verify") return run_verify(options);
    throw UsageError("unknown verb '" + verb + "'");
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
        std::cout << kUsage;
        return args.empty() ? 2 : 0;
    }
    try {
        return dispatch(args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
