#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spde/errors.hpp"

namespace spde::spectral {

// Dirichlet sine eigenbasis on (0,1): e_k(xi) = sqrt(2) sin(k pi xi) with
// eigenvalues lambda_k = (pi^2 k^2)^s for a fractional power s in (0,1].
//
// Carries a collocation grid of M = 3N+1 interior nodes xi_j = j/(M+1) and the
// matching discrete sine transform pair. The quadrature
//     integral(f) ~ (1/(M+1)) * sum_j f(xi_j)
// is exact for trigonometric integrands of combined frequency < 2(M+1) that
// vanish at the endpoints, which covers every pairing this module performs on
// degree-N states (products reach frequency 3N at most).
class SpectralBasis {
public:
    explicit SpectralBasis(int n_modes, double fractional_power = 1.0);

    int modes() const noexcept { return n_modes_; }
    double fractional_power() const noexcept { return s_; }
    int grid_size() const noexcept { return grid_size_; }

    // lambda_k for mode index k in [1, N].
    double eigenvalue(int k) const { return lambda_[static_cast<std::size_t>(k - 1)]; }
    std::span<const double> eigenvalues() const noexcept { return lambda_; }
    std::span<const double> nodes() const noexcept { return nodes_; }
    double quadrature_weight() const noexcept { return weight_; }

    // u(xi_j) from coefficients (length <= N accepted, zero-padded).
    void synthesize(std::span<const double> coeffs, std::span<double> grid_values) const;
    // u'(xi_j): the cosine series sum_k a_k sqrt(2) k pi cos(k pi xi_j).
    void synthesize_derivative(std::span<const double> coeffs, std::span<double> grid_values) const;
    // Discrete sine analysis of grid samples back to N coefficients. Exact for
    // sine polynomials of degree <= M; an aliased projection otherwise.
    void analyze(std::span<const double> grid_values, std::span<double> coeffs) const;
    // Quadrature pairing of grid samples against each mode derivative:
    // out_k = weight * sum_j f(xi_j) * sqrt(2) k pi cos(k pi xi_j).
    void pair_with_mode_derivatives(std::span<const double> grid_values,
                                    std::span<double> out) const;

private:
    int n_modes_;
    double s_;
    int grid_size_;
    double weight_;
    std::vector<double> lambda_;
    std::vector<double> nodes_;
    std::vector<double> sin_table_;  // row k-1: sin(k pi xi_j), j = 0..M-1
    std::vector<double> cos_table_;  // row k-1: cos(k pi xi_j)
};

// A solution snapshot as sine coefficients a_1..a_N.
struct SpectralState {
    std::vector<double> coeffs;

    static SpectralState zero(int n_modes) {
        return SpectralState{std::vector<double>(static_cast<std::size_t>(n_modes), 0.0)};
    }
    // The k-th unit mode, k in [1, n_modes].
    static SpectralState mode(int n_modes, int k, double amplitude = 1.0);
};

bool all_finite(const SpectralState& u) noexcept;

// |u|_H = l2 norm of the coefficients (the basis is orthonormal in H).
double h_norm(const SpectralState& u) noexcept;
double h_norm_squared(const SpectralState& u) noexcept;

// ||u||_V^2 = sum_k lambda_k a_k^2 (homogeneous graph norm of the generator).
double v_norm(const SpectralBasis& basis, const SpectralState& u);
double v_norm_squared(const SpectralBasis& basis, const SpectralState& u);

// Diagonal action: coefficient k scaled by lambda_k.
SpectralState apply_A(const SpectralBasis& basis, const SpectralState& u);

// Pointwise composition operator u(xi) -> s(u(xi)) with s(0) = 0.
struct NemytskiiFn {
    enum class Kind { linear, scaled_sine };
    Kind kind = Kind::linear;
    double kappa = 1.0;  // linear: s(x) = kappa x
    double a = 1.0;      // scaled_sine: s(x) = a sin(b x)
    double b = 1.0;

    static NemytskiiFn linear(double kappa) { return NemytskiiFn{Kind::linear, kappa, 0.0, 0.0}; }
    static NemytskiiFn scaled_sine(double a, double b) {
        return NemytskiiFn{Kind::scaled_sine, 0.0, a, b};
    }

    double operator()(double x) const noexcept;
    double lipschitz_constant() const noexcept;
};

// Scratch buffers for grid-space work; one per worker, never shared.
struct Workspace {
    std::vector<double> grid_a;
    std::vector<double> grid_b;

    void resize(int grid_size) {
        grid_a.assign(static_cast<std::size_t>(grid_size), 0.0);
        grid_b.assign(static_cast<std::size_t>(grid_size), 0.0);
    }
};

// Full model: generator basis, Lipschitz drift b1, Burgers nonlinearity on/off,
// Nemytskii diffusion sigma, initial state, and an optional diffusion
// projection level (sigma composed with the projection onto the first n modes).
struct ModelSpec {
    SpectralBasis basis;
    std::optional<NemytskiiFn> b1;
    bool burgers = false;
    NemytskiiFn sigma;
    SpectralState initial;
    std::optional<int> sigma_projection_n;

    void validate() const;
};

// Dual pairing of the Burgers nonlinearity B(u) = u u' against each mode:
// d_k = <B(u), e_k> = -1/2 integral of u^2 e_k', evaluated by squaring u on
// the collocation grid and pairing against e_k' (exact quadrature, see basis).
void burgers_nonlinearity(const SpectralBasis& basis, const SpectralState& u,
                          std::span<double> dual_out, Workspace& ws);
std::vector<double> burgers_nonlinearity(const SpectralBasis& basis, const SpectralState& u);

// <B(u), u>; identically zero up to roundoff.
double skew_pairing(const SpectralBasis& basis, const SpectralState& u);

// ||d||_{V*} = sqrt(sum d_k^2 / lambda_k) for a dual coefficient sequence.
double dual_norm(const SpectralBasis& basis, std::span<const double> dual_coeffs);

// One-sided bound residual for the difference pairing of B:
//   <B(u)-B(v), u-v> - 1/2 ||u-v||_V^2 - 1/2 max_grid(u+v)^2 |u-v|_H^2,
// nonpositive up to roundoff (Young's inequality on the integrated-by-parts form).
double monotonicity_residual(const SpectralBasis& basis, const SpectralState& u,
                             const SpectralState& v);

// Pointwise s(u(.)) projected back onto the basis. Linear maps shortcut to an
// exact coefficient scaling; the general path goes through the grid.
void nemytskii_apply(const SpectralBasis& basis, const NemytskiiFn& fn, const SpectralState& u,
                     SpectralState& out, Workspace& ws);
SpectralState nemytskii_apply(const SpectralBasis& basis, const NemytskiiFn& fn,
                              const SpectralState& u);

// Orthogonal projection onto the first n modes (zeroes the tail).
SpectralState project_modes(int n, const SpectralState& w);

} // namespace spde::spectral
