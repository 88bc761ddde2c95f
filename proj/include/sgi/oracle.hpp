#ifndef SGI_ORACLE_HPP
#define SGI_ORACLE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "sgi/inertia_set.hpp"
#include "sgi/signed_graph.hpp"
#include "sgi/sym_matrix.hpp"

namespace sgi {

struct OracleOptions {
    int budget = 100;                 // random samples per sign branch
    std::uint64_t seed = 0;
    long long max_branches = 59049;   // 3^10; beyond this the run is truncated
    bool magnitude_cross = true;      // exhaustive pool-magnitude grid on small patterns
    int cross_max_positions = 6;
    bool lowrank_search = true;       // seeded rank-deficient witness search
    bool parallel = true;             // OpenMP kernel; the serial path is the reference
};

/// Ground-truth sampling record. Every reported pair is backed by a stored
/// witness matrix that passes membership; the pin values are exact, only the
/// coverage of S(G, Sigma) is heuristic.
struct OracleReport {
    PairSet pairs;
    long long samples = 0;
    std::uint64_t seed = 0;
    long long branches_total = 0;
    long long branches_run = 0;
    std::map<InertiaPair, SymMat> witnesses;

    bool truncated() const { return branches_run < branches_total; }
};

/// The documented magnitude pool {1, 2, 1/2, 3} (signs come from the edge
/// profiles and the branch choices).
const std::vector<Rat>& oracle_magnitudes();

/// Enumerates every sign branch over the Both-profile positions (3 choices
/// each, capped at max_branches) and samples per branch: a deterministic
/// magnitude grid, `budget` random pool/rational draws, and a seeded
/// low-rank Gram search for rank-deficient members. Each branch derives its
/// own sub-seed from (seed, branch index), so the merged report is identical
/// no matter how branches are scheduled.
OracleReport oracle_sample(const SignedGraph& g, const OracleOptions& opts);

/// Serial reference implementation: one branch after another.
OracleReport oracle_sample_serial(const SignedGraph& g, const OracleOptions& opts);

/// OpenMP kernel: branches run in parallel, merged in branch order.
OracleReport oracle_sample_parallel(const SignedGraph& g, const OracleOptions& opts);

}  // namespace sgi

#endif
