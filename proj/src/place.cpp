#include "qlat/place.hpp"

#include <gmpxx.h>

#include "qlat/errors.hpp"

namespace qlat {

bool is_prime(long p) {
    if (p < 2) return false;
    mpz_class n(p);
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Place Place::prime(long p) {
    if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
    return Place(false, p);
}

std::string places_str(const std::vector<Place>& v) {
    std::string out = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    out += "}";
    return out;
}

}  // namespace qlat
