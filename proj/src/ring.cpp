#include "cubar/ring.hpp"

namespace cubar {

bool is_prime(int64_t n)
{
    if (n < 2)
        return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

CoefficientRing CoefficientRing::mod(int64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("coefficient ring Z/p requires a prime p, got " + std::to_string(p));
    return {Kind::IntegersModP, p};
}

int64_t CoefficientRing::reduce(int64_t v) const
{
    if (kind == Kind::Integers)
        return v;
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

std::string CoefficientRing::name() const
{
    return kind == Kind::Integers ? "Z" : "Z" + std::to_string(p);
}

CoefficientRing parse_ring(const std::string& s)
{
    if (s == "Z" || s == "z")
        return CoefficientRing::integers();
    if ((s.size() > 1 && (s[0] == 'Z' || s[0] == 'z')))
        return CoefficientRing::mod(std::stoll(s.substr(s[1] == '/' ? 2 : 1)));
    throw std::invalid_argument("cannot parse ring '" + s + "' (expected Z, Zp or Z/p)");
}

} // namespace cubar
