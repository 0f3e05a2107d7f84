#include "rqct/fieldmodel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace rqct::fieldmodel {

namespace {

constexpr double kOrthoTolerance = 1e-8;   // build_projectors precondition
constexpr double kDegenerateTol = 1e-12;   // Gram-Schmidt residual cutoff

Eigen::Map<const Eigen::VectorXcd> as_vec(const MomentumAmplitude& a) {
    return {a.values.data(), static_cast<Eigen::Index>(a.values.size())};
}

Eigen::VectorXd weight_vec(const MomentumGrid& g) {
    return Eigen::Map<const Eigen::VectorXd>(g.weights.data(),
                                             static_cast<Eigen::Index>(g.weights.size()));
}

}  // namespace

MomentumGrid MomentumGrid::uniform(double p_center, double sigma_p, std::size_t n) {
    if (!(std::isfinite(p_center) && std::isfinite(sigma_p)) || sigma_p <= 0.0 || n < 2) {
        throw InvalidInputError("MomentumGrid::uniform: bad parameters");
    }
    const double lo = p_center - 4.0 * sigma_p;
    const double hi = p_center + 4.0 * sigma_p;
    if (lo <= 0.0) {
        throw InvalidInputError("MomentumGrid::uniform: p_center must exceed 4*sigma_p");
    }
    MomentumGrid g;
    g.points.resize(n);
    g.weights.resize(n);
    const double dp = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
        const double p = lo + dp * static_cast<double>(k);
        const double trap = (k == 0 || k == n - 1) ? 0.5 * dp : dp;
        g.points[k] = p;
        g.weights[k] = trap / (2.0 * p);
    }
    return g;
}

void MomentumGrid::validate() const {
    if (points.empty() || points.size() != weights.size()) {
        throw InvalidInputError("MomentumGrid: points/weights size mismatch");
    }
    double prev = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (!(std::isfinite(points[k]) && points[k] > prev)) {
            throw InvalidInputError("MomentumGrid: points must be strictly increasing and > 0");
        }
        if (!(std::isfinite(weights[k]) && weights[k] > 0.0)) {
            throw InvalidInputError("MomentumGrid: weights must be positive");
        }
        prev = points[k];
    }
}

bool grids_match(const MomentumGrid& a, const MomentumGrid& b) noexcept {
    return a.points == b.points && a.weights == b.weights;
}

void MomentumAmplitude::validate() const {
    grid.validate();
    if (values.size() != grid.size()) {
        throw InvalidInputError("MomentumAmplitude: values length != grid size");
    }
    for (const Complex& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw InvalidInputError("MomentumAmplitude: non-finite amplitude");
        }
    }
}

const char* to_string(WavepacketFamily f) noexcept {
    return f == WavepacketFamily::GaussianPair ? "GaussianPair" : "ExponentialTailPair";
}

Complex inner_product(const MomentumAmplitude& phi, const MomentumAmplitude& psi) {
    if (!grids_match(phi.grid, psi.grid)) {
        throw IncompatibleGridsError("inner_product: amplitudes live on different grids");
    }
    Complex acc{0.0, 0.0};
    const std::size_t n = phi.values.size();
    for (std::size_t k = 0; k < n; ++k) {
        acc += phi.grid.weights[k] * std::conj(phi.values[k]) * psi.values[k];
    }
    return acc;
}

double norm(const MomentumAmplitude& psi) {
    return std::sqrt(std::abs(inner_product(psi, psi).real()));
}

MomentumAmplitude normalized(const MomentumAmplitude& psi) {
    const double n = norm(psi);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidInputError("normalized: amplitude has zero or non-finite norm");
    }
    MomentumAmplitude out = psi;
    for (Complex& v : out.values) v /= n;
    return out;
}

std::pair<MomentumAmplitude, MomentumAmplitude> make_orthogonal_pair(const MomentumGrid& grid,
                                                                     WavepacketFamily family) {
    grid.validate();
    const std::size_t n = grid.size();
    if (n < 2) {
        throw DegenerateFamilyError(
            "make_orthogonal_pair: cannot host two orthogonal states in dimension 1");
    }
    // Envelope parameters follow the grid's natural center and span; the
    // uniform factory covers +-4 sigma_p, so width = span/8 recovers sigma_p.
    const double p_center = 0.5 * (grid.points.front() + grid.points.back());
    const double width = (grid.points.back() - grid.points.front()) / 8.0;

    MomentumAmplitude seed1{grid, std::vector<Complex>(n)};
    MomentumAmplitude seed2{grid, std::vector<Complex>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const double u = (grid.points[k] - p_center) / width;
        double e1 = 0.0, e2 = 0.0;
        switch (family) {
            case WavepacketFamily::GaussianPair:
                e1 = std::exp(-0.5 * u * u);
                e2 = u * e1;
                break;
            case WavepacketFamily::ExponentialTailPair:
                e1 = 1.0 / std::cosh(u);
                e2 = std::tanh(u) * e1;
                break;
        }
        seed1.values[k] = Complex{e1, 0.0};
        seed2.values[k] = Complex{e2, 0.0};
    }

    MomentumAmplitude psi1 = normalized(seed1);
    // Gram-Schmidt against psi1 under the weighted inner product.
    const Complex overlap = inner_product(psi1, seed2);
    MomentumAmplitude residual = seed2;
    for (std::size_t k = 0; k < n; ++k) residual.values[k] -= overlap * psi1.values[k];
    const double rnorm = norm(residual);
    if (!(rnorm > kDegenerateTol * std::max(1.0, norm(seed2)))) {
        throw DegenerateFamilyError(
            "make_orthogonal_pair: seed envelopes are linearly dependent on this grid");
    }
    MomentumAmplitude psi2 = normalized(residual);
    return {std::move(psi1), std::move(psi2)};
}

ProjectorSet build_projectors(const MomentumAmplitude& psi1, const MomentumAmplitude& psi2) {
    if (!grids_match(psi1.grid, psi2.grid)) {
        throw IncompatibleGridsError("build_projectors: states live on different grids");
    }
    const double n1 = norm(psi1);
    const double n2 = norm(psi2);
    const double ov = std::abs(inner_product(psi1, psi2));
    if (std::abs(n1 - 1.0) > kOrthoTolerance || std::abs(n2 - 1.0) > kOrthoTolerance) {
        throw InvalidStatesError("build_projectors: states must be normalized");
    }
    if (ov >= kOrthoTolerance) {
        throw InvalidStatesError("build_projectors: states must be orthogonal");
    }

    const Eigen::Index dim = static_cast<Eigen::Index>(psi1.values.size());
    const Eigen::VectorXcd v1 = as_vec(psi1);
    const Eigen::VectorXcd v2 = as_vec(psi2);
    const Eigen::VectorXd w = weight_vec(psi1.grid);

    // Rank-1 projector w.r.t. the weighted metric: P v = psi <psi|v>, i.e.
    // P_ij = psi_i w_j conj(psi_j).
    ProjectorSet ps;
    ps.grid = psi1.grid;
    ps.p1.noalias() = v1 * (v1.conjugate().cwiseProduct(w.cast<Complex>())).transpose();
    ps.p2.noalias() = v2 * (v2.conjugate().cwiseProduct(w.cast<Complex>())).transpose();
    ps.pperp = Eigen::MatrixXcd::Identity(dim, dim) - ps.p1 - ps.p2;
    return ps;
}

ProjectorDeviation projector_deviation(const ProjectorSet& ps) {
    const auto frob = [](const Eigen::MatrixXcd& m) { return m.norm(); };
    ProjectorDeviation d{};
    d.idempotence = std::max({frob(ps.p1 * ps.p1 - ps.p1), frob(ps.p2 * ps.p2 - ps.p2),
                              frob(ps.pperp * ps.pperp - ps.pperp)});
    d.orthogonality = std::max({frob(ps.p1 * ps.p2), frob(ps.p2 * ps.p1), frob(ps.p1 * ps.pperp),
                                frob(ps.p2 * ps.pperp)});
    const Eigen::Index dim = ps.p1.rows();
    d.completeness =
        frob(ps.p1 + ps.p2 + ps.pperp - Eigen::MatrixXcd::Identity(dim, dim));
    return d;
}

std::tuple<double, double, double> outcome_probabilities(const ProjectorSet& projectors,
                                                         const MomentumAmplitude& state) {
    if (!grids_match(projectors.grid, state.grid)) {
        throw IncompatibleGridsError("outcome_probabilities: state grid differs from projectors");
    }
    const Eigen::VectorXcd v = as_vec(state);
    const Eigen::VectorXcd wconj =
        as_vec(state).conjugate().cwiseProduct(weight_vec(state.grid).cast<Complex>());
    const auto expect = [&](const Eigen::MatrixXcd& p) {
        const Complex e = (wconj.array() * (p * v).array()).sum();
        return std::clamp(e.real(), 0.0, 1.0);
    };
    return {expect(projectors.p1), expect(projectors.p2), expect(projectors.pperp)};
}

MomentumAmplitude evolve(const MomentumAmplitude& state, double t) {
    if (!std::isfinite(t)) throw InvalidInputError("evolve: non-finite time");
    MomentumAmplitude out = state;
    const std::size_t n = state.values.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double phase = -state.grid.points[k] * t;
        out.values[k] *= Complex{std::cos(phase), std::sin(phase)};
    }
    return out;
}

std::vector<double> position_density(const MomentumAmplitude& state,
                                     const std::vector<double>& x_grid, double t) {
    if (x_grid.empty()) throw InvalidInputError("position_density: empty x grid");
    if (!std::isfinite(t)) throw InvalidInputError("position_density: non-finite time");
    for (std::size_t i = 1; i < x_grid.size(); ++i) {
        if (!(x_grid[i] > x_grid[i - 1])) {
            throw InvalidInputError("position_density: x grid must be strictly increasing");
        }
    }
    const std::size_t n = state.values.size();
    // Coefficient of e^{i p_k x}: dp_k psi_k / sqrt(2 p_k) = w_k sqrt(2 p_k) psi_k,
    // carrying the (2 pi)^{-1/2} Fourier factor so that the continuum Parseval
    // identity makes the total position mass equal <psi|psi>.
    std::vector<Complex> coeff(n);
    const double fourier = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (std::size_t k = 0; k < n; ++k) {
        coeff[k] = fourier * state.grid.weights[k] * std::sqrt(2.0 * state.grid.points[k]) *
                   state.values[k];
    }
    std::vector<double> density(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        Complex phi{0.0, 0.0};
        const double arg0 = x_grid[i] - t;
        for (std::size_t k = 0; k < n; ++k) {
            const double phase = state.grid.points[k] * arg0;
            phi += coeff[k] * Complex{std::cos(phase), std::sin(phase)};
        }
        density[i] = std::norm(phi);
    }
    return density;
}

void write_amplitude(std::ostream& os, const MomentumAmplitude& amp) {
    amp.validate();
    char buf[160];
    os << "# momentum_amplitude v1\n";
    os << "# points " << amp.grid.size() << "\n";
    for (std::size_t k = 0; k < amp.grid.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g\n", amp.grid.points[k],
                      amp.grid.weights[k], amp.values[k].real(), amp.values[k].imag());
        os << buf;
    }
}

MomentumAmplitude read_amplitude(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# momentum_amplitude", 0) != 0) {
        throw IoError("read_amplitude: missing header");
    }
    std::size_t n = 0;
    if (!std::getline(is, line)) throw IoError("read_amplitude: truncated header");
    {
        std::istringstream hs(line);
        std::string hash, tag;
        if (!(hs >> hash >> tag >> n) || hash != "#" || tag != "points" || n == 0) {
            throw IoError("read_amplitude: bad points header");
        }
    }
    MomentumAmplitude amp;
    amp.grid.points.reserve(n);
    amp.grid.weights.reserve(n);
    amp.values.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        double p, w, re, im;
        if (!(is >> p >> w >> re >> im)) throw IoError("read_amplitude: truncated record");
        amp.grid.points.push_back(p);
        amp.grid.weights.push_back(w);
        amp.values.emplace_back(re, im);
    }
    amp.validate();
    return amp;
}

void write_amplitude_file(const std::string& path, const MomentumAmplitude& amp) {
    std::ofstream os(path);
    if (!os) throw IoError("write_amplitude_file: cannot open " + path);
    write_amplitude(os, amp);
    if (!os) throw IoError("write_amplitude_file: write failed for " + path);
}

MomentumAmplitude read_amplitude_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("read_amplitude_file: cannot open " + path);
    return read_amplitude(is);
}

}  // namespace rqct::fieldmodel
