// Command-line front end: graph family generation, exact metric queries,
// verification suites, and exports.
//
// Exit status: 0 success, 1 usage/parse error, 2 size cap exceeded,
// 3 verification failure.

#include <algorithm>
#include <cctype>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stg/alphabet.hpp"
#include "stg/caps.hpp"
#include "stg/errors.hpp"
#include "stg/graph.hpp"
#include "stg/metric_dim.hpp"
#include "stg/supertoken.hpp"
#include "stg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitVerify = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A graph family reference as typed on the command line, before anything is
// built: a builtin family with numeric parameters, a file path, or a
// supertoken/token wrapper around a base family.
struct SpecDesc {
    std::string family; // kn | cn | pn | gdc | gdc+ | supertoken | token | file
    std::vector<int> params;
    std::string path;               // family == "file"
    std::unique_ptr<SpecDesc> base; // family == supertoken | token
    int k = 0;
};

int parse_int_param(const std::string& tok, const std::string& what) {
    size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw UsageError(what + ": expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw UsageError(what + ": expected an integer, got '" + tok + "'");
    if (value < -1000000000 || value > 1000000000)
        throw UsageError(what + ": value " + tok + " out of range");
    return static_cast<int>(value);
}

bool is_builtin_family(const std::string& name) {
    return name == "kn" || name == "cn" || name == "pn" || name == "gdc" ||
           name == "gdc+";
}

SpecDesc parse_spec(const std::vector<std::string>& toks, size_t& pos,
                    bool allow_nested) {
    if (pos >= toks.size())
        throw UsageError("missing graph spec (expected a family name or file path)");
    SpecDesc desc;
    const std::string head = toks[pos++];
    auto need = [&](const std::string& what) -> std::string {
        if (pos >= toks.size())
            throw UsageError(head + ": missing " + what);
        return toks[pos++];
    };
    if (head == "kn" || head == "cn" || head == "pn") {
        desc.family = head;
        desc.params.push_back(parse_int_param(need("order n"), head + " order"));
    } else if (head == "gdc" || head == "gdc+") {
        desc.family = head;
        desc.params.push_back(parse_int_param(need("alphabet size d"), head + " d"));
        desc.params.push_back(parse_int_param(need("word length c"), head + " c"));
    } else if (head == "supertoken" || head == "token") {
        if (!allow_nested)
            throw UsageError(head + ": base graph must be a plain family or a file");
        desc.family = head;
        desc.base = std::make_unique<SpecDesc>(parse_spec(toks, pos, false));
    } else {
        desc.family = "file";
        desc.path = head;
    }
    return desc;
}

// Parse a full spec from `toks`, attach the --k flag, and reject leftovers.
SpecDesc parse_full_spec(const std::vector<std::string>& toks, bool k_given,
                         int k_value) {
    size_t pos = 0;
    SpecDesc desc = parse_spec(toks, pos, true);
    if (pos != toks.size())
        throw UsageError("unexpected argument '" + toks[pos] + "' after graph spec");
    const bool tokenized = desc.family == "supertoken" || desc.family == "token";
    if (tokenized && !k_given)
        throw UsageError(desc.family + " spec needs --k (number of tokens)");
    if (!tokenized && k_given)
        throw UsageError("--k only applies to supertoken/token specs");
    if (tokenized) {
        if (k_value < 0)
            throw UsageError("--k must be non-negative");
        desc.k = k_value;
    }
    return desc;
}

stg::Graph build_plain(const SpecDesc& d, long long cap) {
    if (d.family == "kn")
        return stg::Graph::complete(d.params[0]);
    if (d.family == "cn")
        return stg::Graph::cycle(d.params[0]);
    if (d.family == "pn")
        return stg::Graph::path(d.params[0]);
    if (d.family == "gdc")
        return stg::build_gdc(d.params[0], d.params[1], cap).graph;
    if (d.family == "gdc+")
        return stg::build_gdc_plus(d.params[0], d.params[1], cap).graph;
    if (d.family == "file") {
        std::ifstream in(d.path);
        if (!in)
            throw UsageError("cannot open graph file '" + d.path + "'");
        try {
            return stg::read_graph(in);
        } catch (const std::exception& e) {
            throw UsageError(d.path + ": " + e.what());
        }
    }
    throw UsageError("internal: unknown family " + d.family);
}

struct Realized {
    stg::Graph graph;
    std::vector<std::string> labels; // one per vertex, in vertex order
};

std::vector<std::string> numeric_labels(int n) {
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v)
        out.push_back(std::to_string(v));
    return out;
}

std::string subset_label(const std::vector<int>& subset) {
    std::string out;
    for (size_t i = 0; i < subset.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(subset[i]);
    }
    return out;
}

Realized realize(const SpecDesc& d, long long cap) {
    if (d.family == "supertoken") {
        auto st = stg::build_supertoken(build_plain(*d.base, cap), d.k, cap);
        std::vector<std::string> labels;
        labels.reserve(st.configs.size());
        for (const auto& c : st.configs)
            labels.push_back(c.label());
        return {std::move(st.graph), std::move(labels)};
    }
    if (d.family == "token") {
        auto tg = stg::build_token_graph(build_plain(*d.base, cap), d.k, cap);
        std::vector<std::string> labels;
        labels.reserve(tg.subsets.size());
        for (const auto& s : tg.subsets)
            labels.push_back(subset_label(s));
        return {std::move(tg.graph), std::move(labels)};
    }
    if (d.family == "gdc") {
        auto ag = stg::build_gdc(d.params[0], d.params[1], cap);
        return {std::move(ag.graph), std::move(ag.labels)};
    }
    if (d.family == "gdc+") {
        auto ag = stg::build_gdc_plus(d.params[0], d.params[1], cap);
        return {std::move(ag.graph), std::move(ag.labels)};
    }
    stg::Graph g = build_plain(d, cap);
    const int n = g.order();
    return {std::move(g), numeric_labels(n)};
}

std::string file_stem(const std::string& path) {
    size_t slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = base.find_last_of('.');
    if (dot != std::string::npos && dot > 0)
        base.erase(dot);
    std::string out;
    for (char ch : base)
        out += (std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_');
    return out.empty() ? "graph" : out;
}

std::string slug(const SpecDesc& d) {
    if (d.family == "kn" || d.family == "cn" || d.family == "pn")
        return d.family + std::to_string(d.params[0]);
    if (d.family == "gdc")
        return "gdc_" + std::to_string(d.params[0]) + "_" + std::to_string(d.params[1]);
    if (d.family == "gdc+")
        return "gdcplus_" + std::to_string(d.params[0]) + "_" +
               std::to_string(d.params[1]);
    if (d.family == "supertoken" || d.family == "token")
        return d.family + "_" + slug(*d.base) + "_k" + std::to_string(d.k);
    return file_stem(d.path);
}

// ---------------------------------------------------------------------------
// gen

bool is_complete_graph(const stg::Graph& g) {
    const long long n = g.order();
    return g.size() == n * (n - 1) / 2;
}

// Diameter and radius of an already-built graph. Supertoken graphs are close
// to vertex-transitive, where plain eccentricity bounding degenerates to
// all-pairs BFS, so lean on structure instead: the diameter of a supertoken
// graph is always k times the base diameter, and over a complete base the
// radius is k - floor(k/n).
stg::Extremes graph_extremes(const SpecDesc& desc, const stg::Graph& built,
                             long long cap) {
    if (desc.family == "supertoken") {
        const stg::Graph base = build_plain(*desc.base, cap);
        stg::Extremes ext;
        ext.diameter = desc.k * stg::diameter(base);
        ext.radius = is_complete_graph(base)
                         ? static_cast<int>(stg::rad_complete(base.order(), desc.k))
                         : stg::bounded_radius(built);
        return ext;
    }
    return stg::extremal_distances(built);
}

int run_gen(const SpecDesc& desc, const std::string& out_dir, long long cap) {
    Realized r = realize(desc, cap);
    const std::string stem = out_dir + "/" + slug(desc);
    const std::string graph_path = stem + ".graph";
    const std::string labels_path = stem + ".labels";
    {
        std::ofstream out(graph_path);
        if (!out)
            throw UsageError("cannot write '" + graph_path + "'");
        stg::write_graph(out, r.graph);
    }
    {
        std::ofstream out(labels_path);
        if (!out)
            throw UsageError("cannot write '" + labels_path + "'");
        stg::write_labels(out, r.labels);
    }
    std::cout << "wrote " << graph_path << '\n';
    std::cout << "wrote " << labels_path << '\n';
    std::cout << "order " << r.graph.order() << '\n';
    std::cout << "size " << r.graph.size() << '\n';
    const stg::Extremes ext = graph_extremes(desc, r.graph, cap);
    std::cout << "diameter " << ext.diameter << '\n';
    std::cout << "radius " << ext.radius << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// dist

stg::TokenConfig parse_config_arg(const std::string& text, int n, int k) {
    stg::TokenConfig c = stg::TokenConfig::parse(text);
    if (c.vertex_count() != n)
        throw UsageError("config '" + text + "' has " +
                         std::to_string(c.vertex_count()) + " entries, base graph has " +
                         std::to_string(n) + " vertices");
    if (c.token_total() != k)
        throw UsageError("config '" + text + "' carries " +
                         std::to_string(c.token_total()) + " tokens, expected " +
                         std::to_string(k));
    return c;
}

long long resolve_vertex_arg(const std::string& text, const SpecDesc& desc,
                             int order) {
    if (desc.family == "gdc" || desc.family == "gdc+") {
        const int d = desc.params[0];
        const int c = desc.params[1];
        if (!text.empty() && text[0] == 'w') {
            if (desc.family != "gdc+")
                throw UsageError("attachment vertex '" + text +
                                 "' only exists in gdc+ graphs");
            const int i = parse_int_param(text.substr(1), "attachment index");
            if (i < 1 || i > c)
                throw UsageError("attachment index in '" + text + "' must be 1.." +
                                 std::to_string(c));
            long long pow_d = 1;
            for (int t = 0; t < c; ++t)
                pow_d *= d;
            return pow_d + i;
        }
        stg::Word w;
        try {
            w = stg::parse_word(text);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad word '") + text + "': " + e.what());
        }
        if (static_cast<int>(w.size()) != c)
            throw UsageError("word '" + text + "' has length " +
                             std::to_string(w.size()) + ", expected " + std::to_string(c));
        for (int letter : w)
            if (letter < 1 || letter > d)
                throw UsageError("word '" + text + "' has a letter outside 1.." +
                                 std::to_string(d));
        return stg::word_index(d, c, w);
    }
    const int v = parse_int_param(text, "vertex id");
    if (v < 1 || v > order)
        throw UsageError("vertex id " + text + " out of range 1.." +
                         std::to_string(order));
    return v;
}

// Deterministic shortest path: BFS from the target, then walk from the source
// always picking the smallest-id neighbor one step closer.
std::vector<int> shortest_path(const stg::Graph& g, int from, int to) {
    const std::vector<int> dist = stg::bfs_distances(g, to);
    std::vector<int> path{from};
    int v = from;
    while (v != to) {
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(v)] - 1) {
                v = w;
                break;
            }
        }
        path.push_back(v);
    }
    return path;
}

int run_dist(const SpecDesc& desc, const std::string& xs, const std::string& ys,
             bool witness, long long cap) {
    if (desc.family == "supertoken") {
        // Matching-based distance on the base graph; the supertoken graph is
        // never materialized.
        stg::Graph base = build_plain(*desc.base, cap);
        const stg::TokenConfig x = parse_config_arg(xs, base.order(), desc.k);
        const stg::TokenConfig y = parse_config_arg(ys, base.order(), desc.k);
        const stg::SupertokenDistance res = stg::supertoken_distance(base, x, y);
        std::cout << res.distance << '\n';
        if (witness)
            for (const auto& move : res.moves)
                std::cout << move.from << " -> " << move.to << '\n';
        return kExitOk;
    }
    Realized r = realize(desc, cap);
    const int from = static_cast<int>(resolve_vertex_arg(xs, desc, r.graph.order()));
    const int to = static_cast<int>(resolve_vertex_arg(ys, desc, r.graph.order()));
    const std::vector<int> dist = stg::bfs_distances(r.graph, from);
    std::cout << dist[static_cast<size_t>(to)] << '\n';
    if (witness) {
        const std::vector<int> path = shortest_path(r.graph, from, to);
        for (size_t i = 0; i < path.size(); ++i)
            std::cout << (i ? " -> " : "")
                      << r.labels[static_cast<size_t>(path[i]) - 1];
        std::cout << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// dim

int run_dim(const SpecDesc& desc, int max_size, long long search_cap) {
    const long long build_cap = std::max(search_cap, stg::kDefaultVertexCap);
    Realized r = realize(desc, build_cap);
    const int n = r.graph.order();
    if (n > search_cap) {
        std::cout << "dimension search skipped: " << n
                  << " vertices, above the cap of " << search_cap
                  << " (raise --max-vertices to force)\n";
        // Cheap bounds; the diameter-based lower bound only when the graph is
        // small enough that all-pairs BFS stays quick.
        int lower = 1;
        if (n <= 2000)
            lower = std::max(lower, stg::lower_bound_dim(n, stg::diameter(r.graph)));
        std::cout << "bounds " << lower << " <= dim <= " << (n - 1) << '\n';
        return kExitCap;
    }
    const stg::MetricDimensionResult res =
        stg::metric_dimension(r.graph, max_size, static_cast<int>(search_cap));
    if (!res.exact) {
        std::cout << "no resolving set of size <= " << max_size
                  << "; dimension > " << max_size << '\n';
        return kExitOk;
    }
    std::cout << "dimension " << res.dimension << '\n';
    std::cout << "witness";
    for (int v : res.witness)
        std::cout << ' ' << r.labels[static_cast<size_t>(v) - 1];
    std::cout << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const std::string& suite) {
    const std::vector<std::string> names = stg::verify::suite_names();
    if (suite != "all" &&
        std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string valid = "all";
        for (const auto& s : names)
            valid += ", " + s;
        throw UsageError("unknown suite '" + suite + "' (valid: " + valid + ")");
    }
    const std::vector<stg::verify::CheckRecord> records =
        stg::verify::run_suite(suite);
    int pass = 0, warn = 0, fail = 0;
    for (const auto& rec : records) {
        if (rec.verdict == "PASS")
            ++pass;
        else if (rec.verdict == "WARN")
            ++warn;
        else
            ++fail;
        std::cout << '[' << rec.verdict << "] " << rec.suite << ": " << rec.claim;
        if (!rec.instance.empty())
            std::cout << " (" << rec.instance << ")";
        if (!rec.detail.empty() && rec.verdict != "PASS")
            std::cout << " -- " << rec.detail;
        std::cout << '\n';
    }
    std::cout << records.size() << " checks: " << pass << " pass, " << warn
              << " warn, " << fail << " fail\n";
    return fail > 0 ? kExitVerify : kExitOk;
}

// ---------------------------------------------------------------------------
// export

int run_export(const SpecDesc& desc, const std::string& format, bool with_dmat,
               const std::string& out_path, long long cap) {
    if (with_dmat && format != "json")
        throw UsageError("--with-dmat only applies to --format json");
    Realized r = realize(desc, cap);
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file)
            throw UsageError("cannot write '" + out_path + "'");
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    if (format == "edges") {
        stg::write_graph(out, r.graph);
        for (size_t i = 0; i < r.labels.size(); ++i)
            out << "# label " << (i + 1) << ' ' << r.labels[i] << '\n';
        return kExitOk;
    }
    if (format == "dot") {
        out << "graph " << slug(desc) << " {\n";
        for (int v = 1; v <= r.graph.order(); ++v)
            out << "  " << v << " [label=\"" << r.labels[static_cast<size_t>(v) - 1]
                << "\"];\n";
        for (auto [i, j] : r.graph.edges())
            out << "  " << i << " -- " << j << ";\n";
        out << "}\n";
        return kExitOk;
    }
    if (format == "json") {
        nlohmann::json j;
        j["n"] = r.graph.order();
        auto edges = nlohmann::json::array();
        for (auto [i, j2] : r.graph.edges())
            edges.push_back({i, j2});
        j["edges"] = std::move(edges);
        j["labels"] = r.labels;
        if (with_dmat) {
            const stg::DistanceMatrix d(r.graph);
            auto rows = nlohmann::json::array();
            for (int u = 1; u <= r.graph.order(); ++u) {
                auto row = nlohmann::json::array();
                for (int v = 1; v <= r.graph.order(); ++v)
                    row.push_back(d.at(u, v));
                rows.push_back(std::move(row));
            }
            j["distance_matrix"] = std::move(rows);
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    throw UsageError("unknown format '" + format + "' (valid: edges, dot, json)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Supertoken graphs: construction, exact metric invariants, "
                 "resolving sets, and claim verification"};
    app.require_subcommand(1);

    // gen --------------------------------------------------------------
    auto* gen = app.add_subcommand(
        "gen", "Build a graph family and write <slug>.graph + <slug>.labels");
    std::vector<std::string> gen_spec;
    int gen_k = -1;
    std::string gen_out = ".";
    long long gen_cap = stg::kDefaultVertexCap;
    gen->add_option("spec", gen_spec,
                    "family spec: kn N | cn N | pn N | gdc D C | gdc+ D C | "
                    "supertoken <base> | token <base> | <file>")
        ->required()
        ->expected(-1);
    gen->add_option("--k", gen_k, "token count for supertoken/token specs");
    gen->add_option("--out", gen_out, "output directory (default .)");
    gen->add_option("--max-vertices", gen_cap, "construction size cap");

    // dist -------------------------------------------------------------
    auto* dist = app.add_subcommand(
        "dist", "Exact distance between two vertices/configs");
    std::vector<std::string> dist_args;
    int dist_k = -1;
    bool dist_witness = false;
    long long dist_cap = stg::kDefaultVertexCap;
    dist->add_option("spec", dist_args,
                     "family spec followed by two vertices (configs for "
                     "supertoken, words or w_i for gdc/gdc+)")
        ->required()
        ->expected(-1);
    dist->add_option("--k", dist_k, "token count for supertoken/token specs");
    dist->add_flag("--witness", dist_witness,
                   "also print a move sequence / shortest path");
    dist->add_option("--max-vertices", dist_cap, "construction size cap");

    // dim --------------------------------------------------------------
    auto* dim = app.add_subcommand(
        "dim", "Metric dimension by exhaustive search, with one witness");
    std::vector<std::string> dim_spec;
    int dim_k = -1;
    int dim_max_size = -1;
    long long dim_cap = stg::kDefaultDimSearchCap;
    dim->add_option("spec", dim_spec, "family spec (see gen)")
        ->required()
        ->expected(-1);
    dim->add_option("--k", dim_k, "token count for supertoken/token specs");
    dim->add_option("--max-size", dim_max_size,
                    "only search resolving sets up to this size");
    dim->add_option("--max-vertices", dim_cap,
                    "largest graph the exhaustive search will accept");

    // verify -----------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "Run an invariant suite and report PASS/WARN/FAIL");
    std::string verify_suite;
    verify
        ->add_option("suite", verify_suite,
                     "theorem1 | gdc | complete | general | dimbounds | "
                     "feasibility | all")
        ->required();

    // export -----------------------------------------------------------
    auto* exp = app.add_subcommand("export",
                                   "Write a graph as edges, DOT, or JSON");
    std::vector<std::string> exp_spec;
    int exp_k = -1;
    std::string exp_format = "edges";
    bool exp_with_dmat = false;
    std::string exp_out;
    long long exp_cap = stg::kDefaultVertexCap;
    exp->add_option("spec", exp_spec, "family spec (see gen)")
        ->required()
        ->expected(-1);
    exp->add_option("--k", exp_k, "token count for supertoken/token specs");
    exp->add_option("--format", exp_format, "edges | dot | json")
        ->check(CLI::IsMember({"edges", "dot", "json"}));
    exp->add_flag("--with-dmat", exp_with_dmat,
                  "embed the full distance matrix (json only)");
    exp->add_option("--out", exp_out, "write to this file instead of stdout");
    exp->add_option("--max-vertices", exp_cap, "construction size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const SpecDesc desc =
                parse_full_spec(gen_spec, gen->count("--k") > 0, gen_k);
            return run_gen(desc, gen_out, gen_cap);
        }
        if (dist->parsed()) {
            if (dist_args.size() < 3)
                throw UsageError("dist needs a graph spec followed by two "
                                 "vertices/configs");
            const std::string ys = dist_args.back();
            dist_args.pop_back();
            const std::string xs = dist_args.back();
            dist_args.pop_back();
            const SpecDesc desc =
                parse_full_spec(dist_args, dist->count("--k") > 0, dist_k);
            return run_dist(desc, xs, ys, dist_witness, dist_cap);
        }
        if (dim->parsed()) {
            const SpecDesc desc =
                parse_full_spec(dim_spec, dim->count("--k") > 0, dim_k);
            return run_dim(desc, dim_max_size, dim_cap);
        }
        if (verify->parsed())
            return run_verify(verify_suite);
        if (exp->parsed()) {
            const SpecDesc desc =
                parse_full_spec(exp_spec, exp->count("--k") > 0, exp_k);
            return run_export(desc, exp_format, exp_with_dmat, exp_out, exp_cap);
        }
        throw UsageError("no subcommand given");
    } catch (const stg::SizeCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
