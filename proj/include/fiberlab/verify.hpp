#pragma once

#include "fiberlab/field.hpp"
#include "fiberlab/graph.hpp"
#include "fiberlab/monomial_ideal.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fiberlab {

// Outcome of one check on one instance. The witness always records the inputs
// under "input" so the report can be replayed; failing reports also list the
// violated assertions under "failed" together with the offending values.
struct Report {
    std::string check;
    std::string instance;
    bool pass = false;
    nlohmann::json witness = nlohmann::json::object();
    double ms = 0;
};

// Timing is omitted unless requested so that reports are reproducible byte for byte.
nlohmann::json report_to_json(const Report& r, bool with_timing = false);
Report report_from_json(const nlohmann::json& j);
nlohmann::json reports_to_json(const std::vector<Report>& rs, bool with_timing = false);

// Aligned check | instance | result table followed by a summary line.
std::string format_table(const std::vector<Report>& rs);
std::size_t failure_count(const std::vector<Report>& rs);

// Short description such as "n=3 [1-2 2-3]".
std::string describe_graph(const Graph& g);

// Sigma(G) is CM of dimension n, k[G]' = k[Sigma G]/(v_i - w_i) is artinian, the
// star vertices are isolated by the cross-graph split and the socle of k[G]' is
// spanned by the clique products of the complement. Throws std::invalid_argument
// when g has no star vertex.
Report check_theorem_A(const Graph& g, const FieldSpec& field);

// For the whiskering G~ that skips `star`: dim n, depth n - 1; substitution gives
// k[G]'' with dim 1 and depth 0 in which v_star kills every other variable but
// not itself. Throws std::invalid_argument unless `star` is a star vertex and n >= 2.
Report check_theorem_B(const Graph& g, std::size_t star, const FieldSpec& field);

// Monomial socle of k[G]' equals { prod_{v in C} v : C a maximal clique of G^c }.
Report check_socle_cliques(const Graph& g, const FieldSpec& field);

// The cross-graph split of k[G]' exists iff G^c is disconnected, and when it
// exists every star vertex is a singleton component.
Report check_star_factorization(const Graph& g);

// Every k[G]' with a cross-graph split has socle dimension >= 2. Graphs on a
// single vertex are skipped. One report with the tally.
Report check_gorenstein_exclusion(const std::vector<Graph>& corpus, const FieldSpec& field,
                                  std::size_t threads = 1);

// The star of n triangles, whiskered and folded back along every v_ij - w_ij,
// matches k[Z, X, Y]/(sum_j (X_1j, X_2j)^2 + Z X + Z Y) and has dimension 1.
// Throws std::invalid_argument unless 1 <= n <= 3.
Report check_example_3_11(std::size_t n);

// k[Z, X_11, X_21, ..., X_1n, X_2n, Y]/(sum_j (X_1j, X_2j)^2 + Z X + Z Y).
MonomialIdeal example_3_11_ring(std::size_t n);

enum class Example4xPart { all, i, ii, iii };

// (i) GF(p)[x,y]/(x^2+y^2) truncated at 4 has a full decomposition witness;
// (ii) GF(p)[x,y,z]/((x^2) + m^3) and (iii) GF(p)[x,u]/((x^2) + m^3) have no
// pair of independent linear forms with zero product. Part (i) needs p = 1 mod 4;
// `all` skips it for other primes, an explicit request throws std::invalid_argument.
// Throws std::invalid_argument unless p is one of 2, 3, 5, 7.
std::vector<Report> check_example_4x(std::uint32_t p, Example4xPart part = Example4xPart::all);

// R = k[x,y,z]/(x^2,xy,y^2,z^2), S = k[x,y,z]/(x^2,xy,y^2): S/(z) splits as {x}|{y},
// R has socle dimension 2, R/(z) is totally reflexive up to b and has nonzero
// Betti numbers through b. Throws std::length_error for b > kMaxHomologicalBound.
Report check_example_5_4(std::size_t bound, const FieldSpec& field);

// All labeled graphs on n vertices having at least one star vertex.
std::vector<Graph> star_vertex_corpus(std::size_t n);

// Corpus runs over n = 1..max_n (thmB: 2..max_n, every star vertex), one
// report per graph and field, in enumeration order regardless of thread count.
std::vector<Report> run_theorem_A(std::size_t max_n, const std::vector<FieldSpec>& fields, std::size_t threads = 1);
std::vector<Report> run_theorem_B(std::size_t max_n, const std::vector<FieldSpec>& fields, std::size_t threads = 1);
std::vector<Report> run_socle_cliques(std::size_t max_n, const FieldSpec& field, std::size_t threads = 1);
std::vector<Report> run_star_factorization(std::size_t max_n, std::size_t threads = 1);
// Gorenstein exclusion over all graphs on 1..max_n vertices.
Report run_gorenstein_exclusion(std::size_t max_n, const FieldSpec& field, std::size_t threads = 1);

// Re-runs the check recorded in the report's witness input.
Report replay(const Report& r);

}  // namespace fiberlab
