#include "sgi/rational.hpp"

#include <stdexcept>

namespace sgi {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat parse_rat(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty rational token");
    Rat r;
    if (r.set_str(token, 10) != 0)
        throw std::invalid_argument("bad rational token: " + token);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in token: " + token);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

int rat_sign(const Rat& r) { return sgn(r); }

}  // namespace sgi
