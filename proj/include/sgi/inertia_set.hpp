#ifndef SGI_INERTIA_SET_HPP
#define SGI_INERTIA_SET_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace sgi {

/// Partial inertia: counts of positive and negative eigenvalues.
struct InertiaPair {
    int p = 0;
    int q = 0;
    auto operator<=>(const InertiaPair&) const = default;
};

inline InertiaPair operator+(InertiaPair a, InertiaPair b) { return {a.p + b.p, a.q + b.q}; }

/// b <= a componentwise.
inline bool dominates(InertiaPair a, InertiaPair b) { return b.p <= a.p && b.q <= a.q; }

/// Finite subset of N^2, kept sorted lexicographically and duplicate-free.
class PairSet {
  public:
    PairSet() = default;
    PairSet(std::initializer_list<InertiaPair> items);

    void insert(InertiaPair pair);
    bool contains(InertiaPair pair) const;
    bool empty() const { return items_.empty(); }
    size_t size() const { return items_.size(); }
    const std::vector<InertiaPair>& items() const { return items_; }

    bool operator==(const PairSet&) const = default;

  private:
    std::vector<InertiaPair> items_;
};

/// {(p1+p2, q1+q2)} over the cross product; empty if either side is empty.
PairSet minkowski_add(const PairSet& r, const PairSet& s);

/// The pairs not strictly dominated componentwise (the Pareto frontier).
PairSet minimal(const PairSet& s);

/// Every pair of s dominates some pair of r.
bool leq(const PairSet& s, const PairSet& r);

/// leq both ways; equivalently, equal minimal frontiers.
bool cong(const PairSet& s, const PairSet& r);

/// Subset with p + q <= n.
PairSet truncate_n(const PairSet& r, int n);

PairSet set_union(const PairSet& r, const PairSet& s);

/// "(1,1) (2,0)" in lexicographic order; "(none)" for the empty set.
std::string pairs_text(const PairSet& s);

/// JSON array of [p, q] pairs, lexicographically sorted.
std::string pairs_json(const PairSet& s);

/// ASCII staircase: q rows descending, p columns ascending, '*' at members.
std::string pairs_grid(const PairSet& s);

}  // namespace sgi

#endif
