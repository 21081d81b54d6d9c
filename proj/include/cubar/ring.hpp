#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubar {

/* Coefficients: the integers, or Z/p for a prime p. */
struct CoefficientRing {
    enum class Kind { Integers, IntegersModP };
    Kind kind = Kind::Integers;
    int64_t p = 0;

    static CoefficientRing integers() { return {Kind::Integers, 0}; }
    static CoefficientRing mod(int64_t p);

    bool is_integers() const { return kind == Kind::Integers; }
    int64_t reduce(int64_t v) const;
    std::string name() const;
};

bool is_prime(int64_t n);

CoefficientRing parse_ring(const std::string& s);

} // namespace cubar
