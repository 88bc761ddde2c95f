#ifndef SGI_LEMMA_CHECKS_HPP
#define SGI_LEMMA_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sgi/rng.hpp"
#include "sgi/signed_graph.hpp"
#include "sgi/sym_matrix.hpp"

namespace sgi {

/// Random symmetric matrix, entries num/den with |num| <= 9, 1 <= den <= 9.
SymMat random_sym_mat(Rng& rng, int n);

/// Random signed multigraph with the given density knobs.
SignedGraph random_signed_graph(Rng& rng, int n, int extra_edges, bool loops);

/// Random graph built from two random sides glued at a vertex, returned with
/// the separation that rebuilds it; used to exercise the splitting lemmas.
struct GluedGraph {
    SignedGraph graph;
    Separation sep;
};
GluedGraph random_glued_graph(Rng& rng, int side_max);

/// Random member of S(G, Sigma) with seeded entries and a random sign branch
/// at Both-profile positions.
SymMat random_member(Rng& rng, const SignedGraph& g);

struct LemmaCheckOptions {
    int trials = 200;
    std::uint64_t seed = 0;
    int size_max = 6;
};

struct LemmaCheckReport {
    struct Entry {
        std::string name;
        int trials = 0;
        int failures = 0;
        std::string first_failure;
    };
    std::vector<Entry> entries;

    bool ok() const {
        for (const Entry& e : entries)
            if (e.failures > 0) return false;
        return true;
    }
};

/// Random-instance verification of every congruence transform: the defining
/// identities hold bit-exactly, bidirectional transforms preserve pin
/// exactly, one-directional ones never increase it, subdirect sums are
/// dominated, splits glue back, composed terms stay in S(G, Sigma).
LemmaCheckReport run_lemma_checks(const LemmaCheckOptions& opts);

}  // namespace sgi

#endif
