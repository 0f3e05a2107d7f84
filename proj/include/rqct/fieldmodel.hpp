#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

#include <Eigen/Core>

#include "rqct/errors.hpp"

namespace rqct::fieldmodel {

using Complex = std::complex<double>;

// Finite quadrature over positive momenta (hbar = c = 1, massless particles,
// so p0 = |p| = p). `weights` are the quadrature weights for the invariant
// measure dp/(2 p0): trapezoidal dp weights times 1/(2 p_k). With this
// convention the discrete inner product below approximates the continuum
// pairing of momentum amplitudes directly.
struct MomentumGrid {
    std::vector<double> points;   // strictly increasing, all > 0
    std::vector<double> weights;  // all > 0, same length

    std::size_t size() const noexcept { return points.size(); }

    // Uniform grid of n points over [p_center - 4 sigma_p, p_center + 4 sigma_p].
    // Requires p_center > 4 sigma_p so every momentum stays positive.
    static MomentumGrid uniform(double p_center, double sigma_p, std::size_t n = 256);

    // Throws InvalidInputError if any invariant is broken.
    void validate() const;
};

bool grids_match(const MomentumGrid& a, const MomentumGrid& b) noexcept;

// One-particle wavepacket: complex amplitude psi(p_k) on a momentum grid.
struct MomentumAmplitude {
    MomentumGrid grid;
    std::vector<Complex> values;

    void validate() const;
};

// Built-in seed-envelope pairs for orthogonal state construction.
//   GaussianPair:        exp(-u^2/2) and its first Hermite modulation u*exp(-u^2/2)
//   ExponentialTailPair: sech(u) and tanh(u)*sech(u); both decay exponentially
//                        in momentum and synthesize exponentially localized
//                        position profiles.
// Here u = (p - p_center)/sigma_p with the grid's natural center and width.
enum class WavepacketFamily { GaussianPair, ExponentialTailPair };

const char* to_string(WavepacketFamily f) noexcept;

// Quadrature inner product  sum_k w_k conj(phi_k) psi_k  (conjugate-linear in
// the first argument). Throws IncompatibleGridsError on grid mismatch.
Complex inner_product(const MomentumAmplitude& phi, const MomentumAmplitude& psi);

double norm(const MomentumAmplitude& psi);

MomentumAmplitude normalized(const MomentumAmplitude& psi);

// Two normalized amplitudes with |<psi1|psi2>| < 1e-10, built by Gram-Schmidt
// from the family's seed envelopes. Throws DegenerateFamilyError when the
// seeds are linearly dependent on this grid (e.g. a single-point grid).
std::pair<MomentumAmplitude, MomentumAmplitude> make_orthogonal_pair(const MomentumGrid& grid,
                                                                     WavepacketFamily family);

// The three-outcome measurement of the protocol: rank-1 projectors onto the
// two agreed states plus the complement, P1 + P2 + Pperp = I. Matrices act on
// coefficient vectors and are self-adjoint with respect to the weighted inner
// product (P_ij = psi_i w_j conj(psi_j)), not the unweighted one.
struct ProjectorSet {
    Eigen::MatrixXcd p1;
    Eigen::MatrixXcd p2;
    Eigen::MatrixXcd pperp;
    MomentumGrid grid;
};

// Largest Frobenius-norm deviation from idempotence, mutual orthogonality and
// completeness, computed with dense matrix products. Used by tests and the
// acceptance suite; the projector invariants hold within 1e-10.
struct ProjectorDeviation {
    double idempotence;
    double orthogonality;
    double completeness;
};
ProjectorDeviation projector_deviation(const ProjectorSet& ps);

// Requires both states normalized and |<psi1|psi2>| < 1e-8; otherwise throws
// InvalidStatesError.
ProjectorSet build_projectors(const MomentumAmplitude& psi1, const MomentumAmplitude& psi2);

// (<s|P1|s>, <s|P2|s>, <s|Pperp|s>) with respect to the weighted inner
// product; real components in [0,1] summing to 1 within 1e-10 for any
// normalized state. Throws IncompatibleGridsError on grid mismatch.
std::tuple<double, double, double> outcome_probabilities(const ProjectorSet& projectors,
                                                         const MomentumAmplitude& state);

// Free massless evolution: psi_k -> psi_k * exp(-i p_k t). Norm preserving;
// phases add, so evolve(evolve(s, a), b) == evolve(s, a + b) exactly.
MomentumAmplitude evolve(const MomentumAmplitude& state, double t);

// |phi(x, t)|^2 on the given x grid, where
//   phi(x, t) = (2 pi)^{-1/2} sum_k dp_k psi(p_k) / sqrt(2 p_k) * e^{i p_k (x - t)}
// is the Fourier synthesis of the x-representation. For a normalized state
// the trapezoidal mass over a sufficiently wide window is 1 within 1e-3.
// Right-movers translate rigidly: density(x, t) == density(x - s, t - s).
std::vector<double> position_density(const MomentumAmplitude& state,
                                     const std::vector<double>& x_grid, double t);

// Structured-text amplitude records: header with grid size, then one
// "p weight re im" line per grid point. Round-trips with at least 1e-12
// relative fidelity.
void write_amplitude(std::ostream& os, const MomentumAmplitude& amp);
MomentumAmplitude read_amplitude(std::istream& is);
void write_amplitude_file(const std::string& path, const MomentumAmplitude& amp);
MomentumAmplitude read_amplitude_file(const std::string& path);

}  // namespace rqct::fieldmodel
