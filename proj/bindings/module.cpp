// Python bindings for the supertoken library. Big integers cross the
// boundary as Python ints, exact rationals as fractions.Fraction.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "stg/alphabet.hpp"
#include "stg/assignment.hpp"
#include "stg/errors.hpp"
#include "stg/exact.hpp"
#include "stg/graph.hpp"
#include "stg/metric_dim.hpp"
#include "stg/supertoken.hpp"
#include "stg/verify.hpp"

namespace py = pybind11;
using namespace stg;

namespace {

py::object py_int(const BigInt& z) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object py_fraction(const BigRat& q) {
    BigRat canonical = q;
    canonical.canonicalize();
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::str(canonical.get_str()));
}

py::list py_fractions(const std::vector<BigRat>& row) {
    py::list out;
    for (const auto& q : row)
        out.append(py_fraction(q));
    return out;
}

py::list moves_as_tuples(const std::vector<TokenMove>& moves) {
    py::list out;
    for (const auto& mv : moves)
        out.append(py::make_tuple(mv.from, mv.to));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Supertoken graphs: explicit constructions, matching-based "
              "distances, exact distance-matrix arithmetic, and metric "
              "dimension search.";

    py::register_exception<SizeCapError>(m, "SizeCapError", PyExc_RuntimeError);
    py::register_exception<SingularMatrixError>(m, "SingularMatrixError",
                                                PyExc_RuntimeError);

    // ------------------------------------------------------------- graphs
    py::class_<Graph>(m, "Graph",
                      "Simple connected undirected graph on vertices 1..n.")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"),
             py::arg("edges"))
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def_static("cycle", &Graph::cycle, py::arg("n"))
        .def_static("path", &Graph::path, py::arg("n"))
        .def_property_readonly("order", &Graph::order, "Number of vertices.")
        .def_property_readonly("size", &Graph::size, "Number of edges.")
        .def_property_readonly("edges", &Graph::edges,
                               "Edges as (i, j) pairs with i < j, sorted.")
        .def("neighbors", &Graph::neighbors, py::arg("v"),
             "Neighbors of v in ascending order.")
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("bfs_distances", &bfs_distances, py::arg("source"),
             "Distances from source, indexed by vertex (entry 0 is unused).")
        .def("eccentricity", &eccentricity, py::arg("v"))
        .def("diameter", &diameter)
        .def("radius", &radius)
        .def("distance_matrix",
             [](const Graph& g) {
                 const DistanceMatrix d(g);
                 std::vector<std::vector<int>> rows(
                     g.order(), std::vector<int>(g.order()));
                 for (int u = 1; u <= g.order(); ++u)
                     for (int v = 1; v <= g.order(); ++v)
                         rows[u - 1][v - 1] = d.at(u, v);
                 return rows;
             },
             "All-pairs distance matrix; entry [i][j] is the distance "
             "between vertices i+1 and j+1.")
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(n=" << g.order() << ", m=" << g.size() << ")";
            return out.str();
        });

    m.def("extremal_distances",
          [](const Graph& g) {
              const Extremes e = extremal_distances(g);
              return py::make_tuple(e.diameter, e.radius);
          },
          py::arg("g"),
          "Exact (diameter, radius) via eccentricity bounding; avoids the "
          "full all-pairs sweep on most graphs.");
    m.def("is_edge_preserving_bijection", &is_edge_preserving_bijection,
          py::arg("a"), py::arg("b"), py::arg("map"),
          "Does map (1-based; map[0] ignored) define an isomorphism a -> b?");
    m.def("all_connected_graphs", &all_connected_graphs, py::arg("n"),
          "Every connected graph on n labeled vertices (n <= 7).");
    m.def("random_tree",
          [](int n, unsigned seed) {
              std::mt19937 rng(seed);
              return random_tree(n, rng);
          },
          py::arg("n"), py::arg("seed"),
          "Uniform random labeled tree, deterministic in the seed.");
    m.def("graph_to_text",
          [](const Graph& g) {
              std::ostringstream out;
              write_graph(out, g);
              return out.str();
          },
          py::arg("g"), "Serialize: first line 'n m', then edge lines 'i j'.");
    m.def("graph_from_text",
          [](const std::string& text) {
              std::istringstream in(text);
              return read_graph(in);
          },
          py::arg("text"),
          "Parse the 'n m' / edge-lines format; '#' starts a comment.");
    m.def("distance_degree_sequence",
          [](const Graph& g) -> std::optional<std::vector<int>> {
              const auto seq = distance_degree_sequence(g);
              if (!seq)
                  return std::nullopt;
              return seq->counts;
          },
          py::arg("g"),
          "Counts (k_0, ..., k_d) of vertices at each distance from any fixed "
          "vertex, or None when the counts depend on the vertex.");

    // ----------------------------------------------------- exact arithmetic
    m.def("binomial",
          [](long long n, long long k) { return py_int(binomial(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("distance_determinant",
          [](const Graph& g) { return py_int(determinant(DistanceMatrix(g))); },
          py::arg("g"), "Exact determinant of the distance matrix.");
    m.def("tree_det_formula",
          [](int n) { return py_int(tree_det_formula(n)); }, py::arg("n"),
          "(-1)^(n-1) (n-1) 2^(n-2): the distance determinant of any tree.");
    m.def("unicyclic_odd_det_formula",
          [](int k, int mm) { return py_fraction(unicyclic_odd_det_formula(k, mm)); },
          py::arg("k"), py::arg("m"),
          "(-2)^m (k(k+1) + (2k+1)/2 m): distance determinant of an odd cycle "
          "C_{2k+1} with m pendant vertices.");
    m.def("inverse_complete_distance",
          [](int n) {
              py::list rows;
              for (const auto& row : inverse_complete_distance(n))
                  rows.append(py_fractions(row));
              return rows;
          },
          py::arg("n"),
          "Exact inverse of the distance matrix of the complete graph.");

    // ------------------------------------------------------------ matching
    py::class_<Assignment>(m, "Assignment",
                           "Minimum-weight perfect matching result.")
        .def_readonly("row_to_col", &Assignment::row_to_col)
        .def_readonly("total_weight", &Assignment::total_weight)
        .def("__repr__", [](const Assignment& a) {
            std::ostringstream out;
            out << "Assignment(total_weight=" << a.total_weight << ")";
            return out.str();
        });
    m.def("solve_assignment",
          [](const std::vector<std::vector<long long>>& rows) {
              return solve_assignment(CostMatrix(rows));
          },
          py::arg("costs"),
          "Minimum-weight perfect matching on a square cost matrix; ties "
          "break to the lexicographically smallest row_to_col.");

    // ---------------------------------------------------------- supertoken
    py::class_<TokenConfig>(m, "TokenConfig",
                            "k indistinguishable tokens on vertices 1..n: a "
                            "vector of non-negative counts summing to k.")
        .def(py::init<std::vector<int>>(), py::arg("counts"))
        .def(py::init(&TokenConfig::parse), py::arg("label"))
        .def_static("parse", &TokenConfig::parse, py::arg("text"),
                    "Accepts '310212' (k <= 9) or '3,1,0,2,1,2'.")
        .def_static("all_on", &TokenConfig::all_on, py::arg("n"), py::arg("k"),
                    py::arg("vertex"), "All k tokens on one vertex.")
        .def_property_readonly("counts", &TokenConfig::counts)
        .def_property_readonly("vertex_count", &TokenConfig::vertex_count)
        .def_property_readonly("token_total", &TokenConfig::token_total)
        .def("at", &TokenConfig::at, py::arg("vertex"),
             "Tokens on a vertex (1-based).")
        .def("label", &TokenConfig::label)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__repr__", [](const TokenConfig& c) {
            return "TokenConfig('" + c.label() + "')";
        });
    py::implicitly_convertible<py::str, TokenConfig>();
    py::implicitly_convertible<py::list, TokenConfig>();

    m.def("supertoken_order",
          [](int n, int k) { return py_int(supertoken_order(n, k)); },
          py::arg("n"), py::arg("k"),
          "Number of configs: binomial(n + k - 1, k).");
    m.def("enumerate_configs", &enumerate_configs, py::arg("n"), py::arg("k"),
          "All configs in descending lexicographic order.");
    m.def("config_index", &config_index, py::arg("config"),
          "1-based position in enumerate_configs order.");

    py::class_<SupertokenGraph>(m, "SupertokenGraph",
                                "Explicit supertoken graph; vertex i of .graph "
                                "is .configs[i-1].")
        .def_readonly("base", &SupertokenGraph::base)
        .def_readonly("tokens", &SupertokenGraph::tokens)
        .def_readonly("graph", &SupertokenGraph::graph)
        .def_readonly("configs", &SupertokenGraph::configs);
    m.def("build_supertoken", &build_supertoken, py::arg("g"), py::arg("k"),
          py::arg("max_vertices") = kDefaultVertexCap,
          "Materialize the supertoken graph: configs adjacent iff one token "
          "moves along a base edge.");

    py::class_<TokenGraph>(m, "TokenGraph",
                           "Token graph (k-subsets); vertex i of .graph is "
                           ".subsets[i-1].")
        .def_readonly("base", &TokenGraph::base)
        .def_readonly("tokens", &TokenGraph::tokens)
        .def_readonly("graph", &TokenGraph::graph)
        .def_readonly("subsets", &TokenGraph::subsets);
    m.def("build_token_graph", &build_token_graph, py::arg("g"), py::arg("k"),
          py::arg("max_vertices") = kDefaultVertexCap,
          "k-subsets of vertices, adjacent iff the symmetric difference is an "
          "edge.");

    m.def("dist_complete", &dist_complete, py::arg("x"), py::arg("y"),
          "Supertoken distance over a complete base: half the L1 difference.");
    m.def("ecc_complete", &ecc_complete, py::arg("x"));
    m.def("diam_complete", &diam_complete, py::arg("n"), py::arg("k"));
    m.def("rad_complete", &rad_complete, py::arg("n"), py::arg("k"),
          "k - floor(k/n).");

    py::class_<MatchingInstance>(m, "MatchingInstance",
                                 "Surplus/deficit vertex multisets of a config "
                                 "pair.")
        .def_readonly("surplus", &MatchingInstance::surplus)
        .def_readonly("deficit", &MatchingInstance::deficit)
        .def_property_readonly("size", &MatchingInstance::size);
    m.def("build_matching_instance", &build_matching_instance, py::arg("x"),
          py::arg("y"));

    py::class_<SupertokenDistance>(m, "SupertokenDistance",
                                   "Distance plus a witness list of token "
                                   "moves (from, to) realizing it.")
        .def_readonly("distance", &SupertokenDistance::distance)
        .def_property_readonly("moves",
                               [](const SupertokenDistance& r) {
                                   return moves_as_tuples(r.moves);
                               })
        .def("__repr__", [](const SupertokenDistance& r) {
            std::ostringstream out;
            out << "SupertokenDistance(distance=" << r.distance << ", moves="
                << r.moves.size() << ")";
            return out.str();
        });
    m.def("supertoken_distance", &supertoken_distance, py::arg("g"),
          py::arg("x"), py::arg("y"),
          "Distance between two configs without materializing the supertoken "
          "graph: a min-weight assignment between surplus and deficit under "
          "base distances.");

    m.def("supertoken_eccentricity", &supertoken_eccentricity, py::arg("g"),
          py::arg("k"), py::arg("x"),
          py::arg("max_vertices") = kDefaultVertexCap);
    m.def("supertoken_diameter", &supertoken_diameter, py::arg("g"),
          py::arg("k"), py::arg("max_vertices") = kDefaultVertexCap);
    m.def("supertoken_radius", &supertoken_radius, py::arg("g"), py::arg("k"),
          py::arg("max_vertices") = kDefaultVertexCap);
    m.def("antipodal_witnesses", &antipodal_witnesses, py::arg("g"),
          py::arg("k"), py::arg("vertices"),
          "All-on configs over pairwise-antipodal vertices; pairwise at "
          "distance k * diam(g).");

    // --------------------------------------------------------- word graphs
    py::class_<AlphabetGraph>(m, "AlphabetGraph",
                              "Word graph on alphabet {1..d}, length c; "
                              "optionally c attachment vertices w_1..w_c.")
        .def_readonly("alphabet", &AlphabetGraph::alphabet)
        .def_readonly("length", &AlphabetGraph::length)
        .def_readonly("attachments", &AlphabetGraph::attachments)
        .def_readonly("graph", &AlphabetGraph::graph)
        .def_readonly("words", &AlphabetGraph::words)
        .def_readonly("labels", &AlphabetGraph::labels);
    m.def("build_gdc", &build_gdc, py::arg("d"), py::arg("c"),
          py::arg("max_vertices") = kDefaultVertexCap,
          "Words adjacent iff they differ by at most 1 in every position.");
    m.def("build_gdc_plus", &build_gdc_plus, py::arg("d"), py::arg("c"),
          py::arg("max_vertices") = kDefaultVertexCap,
          "The word graph plus attachments: w_i is adjacent to the words "
          "whose i-th letter is 1.");
    m.def("word_index", &word_index, py::arg("d"), py::arg("c"), py::arg("w"),
          "1-based vertex id of a word.");
    m.def("parse_word", &parse_word, py::arg("text"));
    m.def("word_label", &word_label, py::arg("w"));
    m.def("gdc_distance", &gdc_distance, py::arg("x"), py::arg("y"),
          "Chebyshev distance max_i |x_i - y_i|.");
    m.def("gdc_eccentricity", &gdc_eccentricity, py::arg("x"), py::arg("d"),
          "max_i max(x_i - 1, d - x_i).");
    m.def("gdc_diameter", &gdc_diameter, py::arg("d"), py::arg("c"),
          "Always d - 1.");
    m.def("lower_bound_dim", &lower_bound_dim, py::arg("n"), py::arg("d"),
          "Smallest c with n <= d^c + c; no graph of order n and diameter d "
          "has metric dimension below this.");
    m.def("count_bounded_sequences",
          [](int mu, const std::vector<int>& caps, bool include_zero) {
              return py_int(count_bounded_sequences(
                  mu, DistanceDegreeSequence{caps}, include_zero));
          },
          py::arg("mu"), py::arg("caps"), py::arg("include_zero") = false,
          "Number of mu-tuples in which value i appears at most caps[i] "
          "times.");
    m.def("degree_regular_dim_bound", &degree_regular_dim_bound, py::arg("g"),
          py::arg("mu"),
          "Necessary condition for mu landmarks to resolve a degree-regular "
          "graph, by counting available distance multisets.");

    // ------------------------------------------------------ metric dimension
    m.def("position_vectors", &position_vectors, py::arg("g"),
          py::arg("landmarks"),
          "Distance vector of every vertex to the landmark list.");
    m.def("is_resolving", &is_resolving, py::arg("g"), py::arg("landmarks"),
          "True iff all position vectors are distinct.");

    py::class_<MetricDimensionResult>(m, "MetricDimensionResult")
        .def_readonly("exact", &MetricDimensionResult::exact)
        .def_readonly("dimension", &MetricDimensionResult::dimension)
        .def_readonly("witness", &MetricDimensionResult::witness)
        .def("__repr__", [](const MetricDimensionResult& r) {
            std::ostringstream out;
            out << "MetricDimensionResult(exact=" << (r.exact ? "True" : "False")
                << ", dimension=" << r.dimension << ")";
            return out.str();
        });
    m.def("metric_dimension", &metric_dimension, py::arg("g"),
          py::arg("max_size") = -1,
          py::arg("vertex_cap") = kDefaultDimSearchCap,
          "Exhaustive search for a minimum resolving set; the witness is the "
          "lexicographically first one. max_size < 0 searches up to n - 1.");

    m.def("canonical_landmarks", &canonical_landmarks, py::arg("n"),
          py::arg("k"), "The n all-on-one-vertex configs.");
    m.def("position_via_matrix",
          [](const TokenConfig& x, const Graph& g) {
              return position_via_matrix(x, DistanceMatrix(g));
          },
          py::arg("x"), py::arg("g"),
          "Position of a config relative to the canonical landmarks, as the "
          "product x * D over the base distance matrix.");

    py::class_<FeasibilityResult>(m, "FeasibilityResult")
        .def_readonly("feasible", &FeasibilityResult::feasible)
        .def_readonly("config", &FeasibilityResult::config)
        .def_property_readonly("solution",
                               [](const FeasibilityResult& r) {
                                   return py_fractions(r.solution);
                               },
                               "rho * D^{-1} as exact fractions.")
        .def("__repr__", [](const FeasibilityResult& r) {
            return std::string("FeasibilityResult(feasible=") +
                   (r.feasible ? "True" : "False") + ")";
        });
    m.def("feasibility",
          [](const std::vector<long long>& rho, const Graph& g, int k) {
              return feasibility(rho, g, k);
          },
          py::arg("rho"), py::arg("g"), py::arg("k"),
          "Is rho the canonical position vector of some config of k tokens? "
          "Raises SingularMatrixError when the base distance matrix is "
          "singular.");

    py::class_<DimBoundReport>(m, "DimBoundReport")
        .def_readonly("distance_matrix_singular",
                      &DimBoundReport::distance_matrix_singular)
        .def_readonly("canonical_resolves", &DimBoundReport::canonical_resolves)
        .def_readonly("collisions", &DimBoundReport::collisions)
        .def_readonly("degree_regular", &DimBoundReport::degree_regular)
        .def_readonly("reduced_resolves", &DimBoundReport::reduced_resolves)
        .def_readonly("position_sums_constant",
                      &DimBoundReport::position_sums_constant)
        .def_readonly("expected_position_sum",
                      &DimBoundReport::expected_position_sum);
    m.def("verify_supertoken_dim_bound", &verify_supertoken_dim_bound,
          py::arg("g"), py::arg("k"),
          py::arg("max_vertices") = kDefaultVertexCap,
          "Exercise the canonical-landmark machinery on a whole supertoken "
          "graph.");

    m.def("check_inequality_kn", &check_inequality_kn, py::arg("n"),
          py::arg("k"),
          "Does k^(n-2) + n - 2 < binomial(n+k-1, k) hold?");

    // -------------------------------------------------------------- verify
    py::class_<verify::CheckRecord>(m, "CheckRecord")
        .def_readonly("suite", &verify::CheckRecord::suite)
        .def_readonly("claim", &verify::CheckRecord::claim)
        .def_readonly("instance", &verify::CheckRecord::instance)
        .def_readonly("verdict", &verify::CheckRecord::verdict)
        .def_readonly("detail", &verify::CheckRecord::detail)
        .def("__repr__", [](const verify::CheckRecord& r) {
            return "CheckRecord(" + r.verdict + ": " + r.claim + ")";
        });
    m.def("verify_suite_names", &verify::suite_names);
    m.def("run_verify_suite", &verify::run_suite, py::arg("name"),
          "Run one named suite, or 'all'; returns the check records.");

    m.attr("DEFAULT_VERTEX_CAP") = kDefaultVertexCap;
    m.attr("DEFAULT_DIM_SEARCH_CAP") = kDefaultDimSearchCap;
}
