#ifndef MPSPEC_COMMON_HPP
#define MPSPEC_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mpspec {

// Thrown when a weight or function lacks the capability an operation needs
// (e.g. closed-form mgf on a custom weight, derivative on a plain function).
class unsupported_capability : public std::logic_error {
public:
    explicit unsupported_capability(const std::string& what)
        : std::logic_error(what) {}
};

// Thrown when a quadrature or eigensolve cannot reach its target accuracy.
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what)
        : std::runtime_error(what) {}
};

// Thrown when a requested resolution (degree cap, rule size) is insufficient.
class resolution_error : public std::runtime_error {
public:
    explicit resolution_error(const std::string& what)
        : std::runtime_error(what) {}
};

// splitmix64: the documented generator behind every seeded suite.
// state advances by the golden-gamma increment; output is the finalized mix.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1): 53 mantissa bits
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // uniform in [-1,1]
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

private:
    std::uint64_t state_;
};

} // namespace mpspec

#endif
