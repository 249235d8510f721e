#pragma once

#include <string>
#include <vector>

namespace qlat {

// A place of the rationals: either a finite prime p or the real place.
class Place {
public:
    static Place infinite() { return Place(true, 0); }
    static Place prime(long p);  // checks primality

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    long p() const { return p_; }

    bool operator==(const Place& o) const { return infinite_ == o.infinite_ && p_ == o.p_; }
    bool operator!=(const Place& o) const { return !(*this == o); }
    // Finite places first, sorted by prime; the real place last.
    bool operator<(const Place& o) const {
        if (infinite_ != o.infinite_) return !infinite_;
        return p_ < o.p_;
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(p_); }

private:
    Place(bool inf, long p) : infinite_(inf), p_(p) {}
    bool infinite_;
    long p_;
};

bool is_prime(long p);

std::string places_str(const std::vector<Place>& v);

}  // namespace qlat
