#include "epg/number_theory.hpp"

#include <stdexcept>

namespace epg {

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("prime_power_base: n must be positive");
    if (n == 1) return std::nullopt;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        if (n == 1) return p;
        return std::nullopt;
    }
    return n;
}

}  // namespace epg
