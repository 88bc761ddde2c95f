#ifndef SGI_SIGNED_GRAPH_HPP
#define SGI_SIGNED_GRAPH_HPP

#include <string>
#include <vector>

namespace sgi {

// Odd edges admit positive matrix entries, even edges negative ones.
enum class Parity { Even, Odd };

struct GraphEdge {
    int u;  // 0-based, u <= v; u == v is a loop
    int v;
    Parity parity;
};

// What the edge multiset between a vertex pair allows, after collapsing
// multiplicities: a positive entry needs odd present, a negative entry even
// present, and a zero entry needs either no edges at all or both parities.
enum class EdgeProfile { None, EvenOnly, OddOnly, Both };

bool profile_allows_sign(EdgeProfile p, int sign);
bool profile_has_odd(EdgeProfile p);
bool profile_has_even(EdgeProfile p);

/// Signed multigraph: parallel edges and loops permitted, n = 0 valid.
/// Vertices are 0-based in memory; the text format is 1-based.
class SignedGraph {
  public:
    SignedGraph() = default;
    explicit SignedGraph(int n);

    /// Line-oriented format: `n <count>` first, then `e <u> <v> <o|e>` lines;
    /// '#' starts a comment. Throws std::invalid_argument on malformed input.
    static SignedGraph parse(const std::string& text);
    std::string serialize() const;

    int vertex_count() const { return n_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    void add_edge(int u, int v, Parity parity);

    EdgeProfile profile(int u, int v) const;

    /// Removes the vertex and its incident edges; remaining vertices are
    /// relabeled order-preservingly.
    SignedGraph deleted_vertex(int v) const;

    /// Adds one loop at v; realizes the _E / _O loop augmentation.
    SignedGraph with_loop(int v, Parity parity) const;

    /// Multiset equality of edges (insertion order irrelevant).
    bool operator==(const SignedGraph& other) const;

    /// Connected components as sorted vertex lists, ordered by least vertex.
    std::vector<std::vector<int>> components() const;

    /// Key identifying the matrix class S(G, Sigma): vertex count plus the
    /// edge profiles. Multiplicities beyond one edge per parity do not
    /// change S(G, Sigma) and are deliberately not part of the key.
    std::string canonical_key() const;

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<GraphEdge> edges_;
};

/// Subgraph over the given original vertices, relabeled so that new vertex i
/// is order[i]; keeps exactly the edges whose (original) indices are listed.
SignedGraph subgraph(const SignedGraph& g, const std::vector<int>& order,
                     const std::vector<int>& edge_indices);

/// A 1-separation: two edge-disjoint subgraphs covering the graph and
/// sharing exactly the cut vertex. Side graphs carry the block layout used
/// throughout the matrix work: side 1 puts the cut vertex last, side 2 puts
/// it first, so a matrix split is a plain 1-subdirect sum.
class Separation {
  public:
    /// side1_vertices: original ids, must contain the cut. edge_to_side1
    /// assigns every edge of g. Throws std::invalid_argument when the data
    /// does not describe a proper 1-separation.
    static Separation make(const SignedGraph& g, int cut, std::vector<int> side1_vertices,
                           const std::vector<bool>& edge_to_side1);

    int cut() const { return cut_; }
    const SignedGraph& side1() const { return side1_; }
    const SignedGraph& side2() const { return side2_; }
    const std::vector<int>& side1_labels() const { return side1_labels_; }
    const std::vector<int>& side2_labels() const { return side2_labels_; }
    int side1_cut_index() const { return side1_.vertex_count() - 1; }
    int side2_cut_index() const { return 0; }

    /// Original ids in block order [side1 minus cut..., cut, side2 minus cut...].
    std::vector<int> merged_order() const;

    /// False for the loop-only splits where one side is just the cut vertex
    /// with loops; the decomposition recursion skips those.
    bool both_sides_have_noncut_vertex() const;

  private:
    Separation() = default;

    int cut_ = 0;
    SignedGraph side1_, side2_;
    std::vector<int> side1_labels_, side2_labels_;
};

/// Canonical proper 1-separations, ordered by cut vertex and then by the
/// side-1 vertex list. One split per hanging component (loops at the cut
/// ride with the carved side), plus loop-only splits when nothing else
/// separates; empty exactly when no proper 1-separation exists.
std::vector<Separation> find_1_separations(const SignedGraph& g);

}  // namespace sgi

#endif
