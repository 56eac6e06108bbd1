#ifndef COWL_BASE_HPP
#define COWL_BASE_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace cowl {

// Input that fails to parse (file syntax, generator strings, ...).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid value (loops, anti-parallel arcs, bad weights, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search hit its generator cap or node budget. Distinct from "no".
struct SearchCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation would exceed a configured size cap (faces, lattice, grid).
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Exponent = std::uint32_t;

inline Exponent checked_add_exp(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b)
        throw OverflowError("exponent overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return a + b;
}

inline std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw OverflowError("degree overflow");
    return a + b;
}

inline Exponent checked_mul_exp(Exponent a, Exponent b) {
    if (b != 0 && a > std::numeric_limits<Exponent>::max() / b)
        throw OverflowError("exponent overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return a * b;
}

enum class ExecPolicy { Serial, Parallel };

}  // namespace cowl

#endif
