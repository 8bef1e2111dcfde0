#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "chandelier/boundary_field.hpp"
#include "chandelier/errors.hpp"
#include "chandelier/lattice.hpp"
#include "chandelier/model.hpp"

namespace chandelier {

// Total spin assignment on V_n, entries +1/-1 (0 = unset).
using SpinConfig = std::vector<int8_t>;

inline int spin_of(std::uint32_t mask, int v) { return (mask >> v) & 1u ? +1 : -1; }

// H(sigma) = -J sum_NN ss - Jp sum_PNNN ss - Jsl sum_SLNN ss.
inline double energy(const TclLattice& lat, const SpinConfig& config, const CouplingParams& p) {
    if (static_cast<int>(config.size()) != lat.vertex_count())
        throw parameter_error("spin configuration does not cover the lattice");
    for (int8_t s : config)
        if (s != 1 && s != -1) throw parameter_error("spin configuration has an unset vertex");
    long snn = 0, ssl = 0, spn = 0;
    for (auto [u, v] : lat.nn_edges()) snn += config[u] * config[v];
    for (auto [u, v] : lat.slnn_edges()) ssl += config[u] * config[v];
    for (auto [u, v] : lat.pnnn_pairs()) spn += config[u] * config[v];
    return -p.J * static_cast<double>(snn) - p.Jp * static_cast<double>(spn) -
           p.Jsl * static_cast<double>(ssl);
}

// Finite-volume Gibbs distribution with memory of length 2: the boundary term
// weighs each semi-ball centred in W_{n-1} by the four-spin product times the
// class field.  Exhaustive enumeration, so depth is capped at 2 (2^13 configs).
struct FiniteGibbs {
    int depth;
    CouplingParams params;
    BoundaryField field;
    double log_z;
    double z;
    std::vector<double> probabilities;  // indexed by spin bitmask, bit v = (spin(v)==+1)

    double probability(std::uint32_t mask) const { return probabilities[mask]; }
    double probability(const SpinConfig& config) const {
        std::uint32_t mask = 0;
        for (std::size_t v = 0; v < config.size(); ++v)
            if (config[v] > 0) mask |= 1u << v;
        return probabilities[mask];
    }
};

namespace detail {

// Exponent of Eq.-style finite-volume weight: -beta H + boundary term.
inline double gibbs_exponent(const TclLattice& lat, const std::vector<UnitSemiBall>& balls,
                             const CouplingParams& p, const BoundaryField& field,
                             std::uint32_t mask) {
    double e = 0.0;
    for (auto [u, v] : lat.nn_edges()) e += p.J * spin_of(mask, u) * spin_of(mask, v);
    for (auto [u, v] : lat.slnn_edges()) e += p.Jsl * spin_of(mask, u) * spin_of(mask, v);
    for (auto [u, v] : lat.pnnn_pairs()) e += p.Jp * spin_of(mask, u) * spin_of(mask, v);
    e /= p.T;
    for (const auto& ball : balls) {
        const int center = spin_of(mask, ball.center);
        int minus = 0, prod = center;
        for (int k : ball.children) {
            const int s = spin_of(mask, k);
            if (s < 0) ++minus;
            prod *= s;
        }
        e += prod * field[BoundaryField::class_index(center, minus)];
    }
    return e;
}

}  // namespace detail

inline FiniteGibbs gibbs(const TclLattice& lat, const CouplingParams& p,
                         const BoundaryField& field) {
    if (lat.depth() > 2) throw capacity_error("exhaustive Gibbs oracle is capped at depth 2");
    if (!field.finite()) throw parameter_error("boundary field must be finite");
    weights(p);  // validates T and couplings
    const int nv = lat.vertex_count();
    const std::uint32_t nconf = 1u << nv;
    const std::vector<UnitSemiBall> balls =
        lat.depth() >= 1 ? semi_balls(lat, lat.depth() - 1) : std::vector<UnitSemiBall>{};

    std::vector<double> expo(nconf);
    double shift = -std::numeric_limits<double>::infinity();
    for (std::uint32_t m = 0; m < nconf; ++m) {
        expo[m] = detail::gibbs_exponent(lat, balls, p, field, m);
        shift = std::max(shift, expo[m]);
    }
    double zs = 0.0;
    for (std::uint32_t m = 0; m < nconf; ++m) {
        expo[m] = std::exp(expo[m] - shift);
        zs += expo[m];
    }
    for (std::uint32_t m = 0; m < nconf; ++m) expo[m] /= zs;

    FiniteGibbs g;
    g.depth = lat.depth();
    g.params = p;
    g.field = field;
    g.log_z = shift + std::log(zs);
    g.z = std::exp(g.log_z);
    g.probabilities = std::move(expo);
    return g;
}

// Kolmogorov-style compatibility at depth 2: marginalising mu_2 over the outer
// shell W_2 must reproduce mu_1 on V_1 (16 inner configurations).
struct CompatibilityReport {
    double max_residual;
    std::array<double, 16> per_sigma;
};

inline CompatibilityReport check_compatibility(const TclLattice& lat, const CouplingParams& p,
                                               const BoundaryField& field_inner,
                                               const BoundaryField& field_outer) {
    if (lat.depth() != 2) throw capacity_error("compatibility check supports depth 2 only");
    const FiniteGibbs mu2 = gibbs(lat, p, field_outer);
    const FiniteGibbs mu1 = gibbs(build(1), p, field_inner);

    CompatibilityReport rep{0.0, {}};
    for (std::uint32_t inner = 0; inner < 16; ++inner) {
        double marginal = 0.0;
        for (std::uint32_t outer = 0; outer < 512; ++outer)
            marginal += mu2.probabilities[inner | (outer << 4)];
        rep.per_sigma[inner] = std::abs(marginal - mu1.probabilities[inner]);
        rep.max_residual = std::max(rep.max_residual, rep.per_sigma[inner]);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Kolmogorov consistency fixtures (Bernoulli / Markov measures on {-1,+1}^Z).

enum class FixtureKind { bernoulli, markov };

struct StochasticSpec {
    std::array<double, 2> pi{};                 // probability vector over {-1,+1}
    std::array<std::array<double, 2>, 2> P{};   // transition matrix (markov only)
};

namespace detail {

inline void validate_prob_vector(const std::array<double, 2>& v) {
    for (double x : v)
        if (!std::isfinite(x) || x < 0.0 || x > 1.0)
            throw parameter_error("probability entries must lie in [0,1]");
    if (std::abs(v[0] + v[1] - 1.0) > 1e-9)
        throw parameter_error("probability vector must sum to 1");
}

inline double block_probability(FixtureKind kind, const StochasticSpec& spec,
                                const std::vector<int>& block) {
    double p = spec.pi[block[0]];
    for (std::size_t k = 1; k < block.size(); ++k)
        p *= kind == FixtureKind::bernoulli ? spec.pi[block[k]] : spec.P[block[k - 1]][block[k]];
    return p;
}

}  // namespace detail

// Verifies the four cylinder-consistency conditions for every block of length
// up to n over the two-symbol state set, within 1e-12.
inline bool check_kolmogorov_fixture(FixtureKind kind, const StochasticSpec& spec, int n) {
    if (n < 1) throw parameter_error("cylinder length must be >= 1");
    detail::validate_prob_vector(spec.pi);
    if (kind == FixtureKind::markov)
        for (const auto& row : spec.P) detail::validate_prob_vector(row);

    constexpr double tol = 1e-12;
    if (std::abs(detail::block_probability(kind, spec, {0}) +
                 detail::block_probability(kind, spec, {1}) - 1.0) > tol)
        return false;

    for (int len = 1; len < n; ++len) {
        std::vector<int> block(len);
        for (int code = 0; code < (1 << len); ++code) {
            for (int k = 0; k < len; ++k) block[k] = (code >> k) & 1;
            const double p = detail::block_probability(kind, spec, block);
            if (p < -tol) return false;

            std::vector<int> right = block, left(len + 1);
            right.push_back(0);
            std::copy(block.begin(), block.end(), left.begin() + 1);
            double grow_right = 0.0, grow_left = 0.0;
            for (int j = 0; j < 2; ++j) {
                right[len] = j;
                left[0] = j;
                grow_right += detail::block_probability(kind, spec, right);
                grow_left += detail::block_probability(kind, spec, left);
            }
            if (std::abs(grow_right - p) > tol || std::abs(grow_left - p) > tol) return false;
        }
    }
    return true;
}

}  // namespace chandelier
