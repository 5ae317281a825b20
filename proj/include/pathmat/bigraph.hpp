#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pathmat/matrix.hpp"

namespace pathmat {

struct WeightedEdge {
    int row = 0, col = 0;  // 0-based; reported 1-based as R_i / C_j
    RingValue weight;
};

/// The bipartite graph G(A): row vertices R_1..R_m, column vertices
/// C_1..C_n, one weighted edge per nonzero entry. Weights are nonzero and
/// share one ring.
class BipartiteGraph {
public:
    BipartiteGraph(int m, int n);

    int row_count() const { return m_; }
    int col_count() const { return n_; }

    /// Rejects zero weights, duplicate (row, col) slots and mixed rings.
    void add_edge(int row, int col, RingValue w);

    const std::vector<WeightedEdge>& edges() const { return edges_; }
    bool has_edge(int row, int col) const;
    const RingValue* weight(int row, int col) const;

    /// Column indices adjacent to R_row, ascending.
    const std::vector<int>& row_neighbors(int row) const;
    /// Row indices adjacent to C_col, ascending.
    const std::vector<int>& col_neighbors(int col) const;

    const std::optional<RingSpec>& edge_spec() const { return spec_; }

private:
    int m_, n_;
    std::optional<RingSpec> spec_;
    std::vector<WeightedEdge> edges_;
    std::vector<std::vector<int>> row_adj_, col_adj_;
};

BipartiteGraph build_bigraph(const Matrix& a);

/// Inverse of build_bigraph; `spec` supplies the ring for zero entries and
/// must match the edge weights.
Matrix to_matrix(const BipartiteGraph& g, const RingSpec& spec);

/// Disjoint (row, col) pairs, kept sorted by row.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<std::pair<int, int>> pairs);

    static Matching diagonal(int n);

    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int size() const { return static_cast<int>(pairs_.size()); }

    int partner_of_row(int row) const;  // -1 when unmatched
    int partner_of_col(int col) const;
    bool contains(int row, int col) const;

    bool is_matching_of(const BipartiteGraph& g) const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<std::pair<int, int>> pairs_;
};

/// One traversal step of an alternating path.
struct PathStep {
    int row = 0, col = 0;
    bool in_matching = false;
    RingValue weight;
};

/// Path from C_{start_col} to R_{end_row} whose edges alternate between the
/// matching and its complement, first and last edges matched. Odd length,
/// vertex-simple.
struct AlternatingPath {
    int start_col = 0;
    int end_row = 0;
    std::vector<PathStep> steps;  // traversal order from the column endpoint

    int length() const { return static_cast<int>(steps.size()); }
};

struct PeelResult {
    Matching matching;
    // position -> original index; permuting rows/cols by these orders makes
    // the matrix lower triangular with the matching on the diagonal.
    std::vector<int> row_order;
    std::vector<int> col_order;
};

/// Degree-1 peeling. Succeeds exactly when the graph has a unique perfect
/// matching; a stall certifies zero-or-multiple perfect matchings.
/// Throws NotBalanced, NoUniquePerfectMatching.
PeelResult peel_unique_matching(const BipartiteGraph& g);

/// All vertex-simple alternating paths from C_from_col to R_to_row, in
/// lexicographic order of their vertex sequences. Empty when no path exists.
std::vector<AlternatingPath> enumerate_alternating_paths(
    const BipartiteGraph& g, const Matching& mm, int from_col, int to_row);

/// epsilon(P) = (-1)^((l(P)-1)/2).
int path_sign(const AlternatingPath& p);

/// w(P) = w(e1)^-1 w(e2) w(e3)^-1 ... w(ek)^-1, multiplied left to right in
/// traversal order; only matching edges are inverted. Throws NotInvertible.
RingValue path_weight(const AlternatingPath& p);

/// All matchings (including the empty one), by edge-subset recursion.
std::vector<Matching> all_matchings(const BipartiteGraph& g);

/// Exhaustive perfect-matching enumeration; stops after `cap` are found.
std::vector<Matching> perfect_matchings(const BipartiteGraph& g, size_t cap);

/// G / M: one vertex per matched pair, one per unmatched vertex; inherited
/// adjacencies, parallel edges collapsed. Loop-free for any matching.
struct ContractedGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // simple, undirected
    std::vector<int> row_vertex;             // original row -> vertex id
    std::vector<int> col_vertex;
};

ContractedGraph contract_matching(const BipartiteGraph& g, const Matching& mm);

/// BFS 2-colorability.
bool is_bipartite(const ContractedGraph& g);

}  // namespace pathmat
