#pragma once

#include <stdexcept>

namespace gentrig {

// Exponent pair (p, q) for the generalized trigonometric family.
// Both exponents must lie in (1, max_exponent]. The cap keeps the beta
// function arguments away from the region where double precision degrades.
struct ParamPair {
    double p;
    double q;

    static constexpr double max_exponent = 1e6;

    ParamPair(double p_, double q_) : p(p_), q(q_) {
        if (!(p > 1.0) || !(q > 1.0))
            throw std::domain_error("ParamPair: exponents must be finite and > 1");
        if (p > max_exponent || q > max_exponent)
            throw std::domain_error("ParamPair: exponent above supported cap 1e6");
    }

    // Holder conjugates, 1/p + 1/p* = 1.
    double conjugate_p() const noexcept { return p / (p - 1.0); }
    double conjugate_q() const noexcept { return q / (q - 1.0); }
};

inline ParamPair symmetric_pair(double p) { return ParamPair(p, p); }

} // namespace gentrig
