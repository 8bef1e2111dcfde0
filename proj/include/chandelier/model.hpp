#pragma once

#include <cmath>

#include "chandelier/errors.hpp"

namespace chandelier {

// Coupling constants of the three-interaction Hamiltonian and the temperature.
// Boltzmann constant is fixed to 1, so couplings and T share units.
struct CouplingParams {
    double J   = 0.0;  // nearest-neighbour (parent-child)
    double Jp  = 0.0;  // prolonged next-nearest-neighbour (grandparent-grandchild)
    double Jsl = 0.0;  // same-level nearest-neighbour (sibling triangle)
    double T   = 1.0;  // temperature, > 0
};

// a = e^{J/T}, b = e^{Jp/T}, c = e^{Jsl/T}.  This pins beta = 1/T: with it the
// reduced map fixes x = 7.40762 at (J=-1, Jp=29, Jsl=5.3, T=68).
struct BoltzmannWeights {
    double a;
    double b;
    double c;
    double beta;

    double log_a() const { return std::log(a); }
    double log_b() const { return std::log(b); }
    double log_c() const { return std::log(c); }
};

inline BoltzmannWeights weights(const CouplingParams& p) {
    if (!std::isfinite(p.T) || p.T <= 0.0)
        throw parameter_error("temperature must be finite and > 0");
    if (!std::isfinite(p.J) || !std::isfinite(p.Jp) || !std::isfinite(p.Jsl))
        throw parameter_error("couplings must be finite");
    return {std::exp(p.J / p.T), std::exp(p.Jp / p.T), std::exp(p.Jsl / p.T), 1.0 / p.T};
}

}  // namespace chandelier
