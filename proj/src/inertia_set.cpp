#include "sgi/inertia_set.hpp"

#include <algorithm>
#include <sstream>

namespace sgi {

PairSet::PairSet(std::initializer_list<InertiaPair> items) {
    for (const InertiaPair& x : items) insert(x);
}

void PairSet::insert(InertiaPair pair) {
    const auto it = std::lower_bound(items_.begin(), items_.end(), pair);
    if (it == items_.end() || *it != pair) items_.insert(it, pair);
}

bool PairSet::contains(InertiaPair pair) const {
    return std::binary_search(items_.begin(), items_.end(), pair);
}

PairSet minkowski_add(const PairSet& r, const PairSet& s) {
    PairSet out;
    for (const InertiaPair& a : r.items())
        for (const InertiaPair& b : s.items()) out.insert(a + b);
    return out;
}

PairSet minimal(const PairSet& s) {
    PairSet out;
    for (const InertiaPair& a : s.items()) {
        bool dominated = false;
        for (const InertiaPair& b : s.items())
            if (b != a && dominates(a, b)) {
                dominated = true;
                break;
            }
        if (!dominated) out.insert(a);
    }
    return out;
}

bool leq(const PairSet& s, const PairSet& r) {
    for (const InertiaPair& a : s.items()) {
        bool found = false;
        for (const InertiaPair& b : r.items())
            if (dominates(a, b)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

bool cong(const PairSet& s, const PairSet& r) { return leq(s, r) && leq(r, s); }

PairSet truncate_n(const PairSet& r, int n) {
    PairSet out;
    for (const InertiaPair& a : r.items())
        if (a.p + a.q <= n) out.insert(a);
    return out;
}

PairSet set_union(const PairSet& r, const PairSet& s) {
    PairSet out = r;
    for (const InertiaPair& a : s.items()) out.insert(a);
    return out;
}

std::string pairs_text(const PairSet& s) {
    if (s.empty()) return "(none)";
    std::ostringstream out;
    bool first = true;
    for (const InertiaPair& a : s.items()) {
        if (!first) out << " ";
        out << "(" << a.p << "," << a.q << ")";
        first = false;
    }
    return out.str();
}

std::string pairs_json(const PairSet& s) {
    std::ostringstream out;
    out << "[";
    bool first = true;
    for (const InertiaPair& a : s.items()) {
        if (!first) out << ",";
        out << "[" << a.p << "," << a.q << "]";
        first = false;
    }
    out << "]";
    return out.str();
}

std::string pairs_grid(const PairSet& s) {
    if (s.empty()) return "(none)\n";
    int pmax = 0, qmax = 0;
    for (const InertiaPair& a : s.items()) {
        pmax = std::max(pmax, a.p);
        qmax = std::max(qmax, a.q);
    }
    const int qwidth = static_cast<int>(std::to_string(qmax).size());
    std::ostringstream out;
    for (int q = qmax; q >= 0; --q) {
        std::string label = std::to_string(q);
        out << std::string(qwidth - label.size(), ' ') << label << "|";
        for (int p = 0; p <= pmax; ++p) out << (s.contains({p, q}) ? '*' : '.');
        out << "\n";
    }
    out << std::string(qwidth, ' ') << "+" << std::string(pmax + 1, '-') << "\n";
    out << std::string(qwidth + 1, ' ');
    for (int p = 0; p <= pmax; ++p) out << p % 10;
    out << "\n";
    return out.str();
}

}  // namespace sgi
