#include "qlat/rational.hpp"

#include <cctype>

#include "qlat/errors.hpp"

namespace qlat {

int valuation(const Rat& x, long p) {
    if (x == 0) throw InvalidInput("valuation of zero");
    mpz_class tmp;
    int vnum = static_cast<int>(mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(),
                                           mpz_class(p).get_mpz_t()));
    int vden = static_cast<int>(mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(),
                                           mpz_class(p).get_mpz_t()));
    return vnum - vden;
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty rational literal");
    size_t slash = std::string::npos;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (slash != std::string::npos || i == 0 || i + 1 == s.size())
                throw InvalidInput("bad rational literal: " + s);
            slash = i;
        } else if (c == '-') {
            if (i != 0 && i != slash + 1) throw InvalidInput("bad rational literal: " + s);
        } else if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw InvalidInput("bad rational literal: " + s);
        }
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw InvalidInput("bad rational literal: " + s);
    if (r.get_den() == 0) throw InvalidInput("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

std::string vec_str(const Vec& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    out += "]";
    return out;
}

}  // namespace qlat
