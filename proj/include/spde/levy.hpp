#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "spde/errors.hpp"
#include "spde/rng.hpp"

namespace spde::levy {

enum class Side { symmetric, positive };

// Density c*|x|^(-1-beta) on its side(s); infinite activity at the origin.
struct StableLike {
    double intensity;              // c > 0
    double beta;                   // stability index, strictly in (0,2)
    Side side = Side::symmetric;
};

// Constant density level c on 0 < |x| <= radius (both sides).
struct UniformDensity {
    double intensity;              // c > 0
    double radius;                 // R > 0
};

struct Atom {
    double location;               // x != 0
    double mass;                   // m > 0
};

// Finite sum of point masses; the only finite-activity family here.
struct Atomic {
    std::vector<Atom> atoms;
};

// A characteristic (jump intensity) measure with closed-form truncated
// moments. Immutable after construction; construction validates parameters.
class LevyMeasure {
public:
    using Family = std::variant<StableLike, UniformDensity, Atomic>;

    explicit LevyMeasure(Family family);

    static LevyMeasure stable(double intensity, double beta, Side side = Side::symmetric);
    static LevyMeasure uniform_density(double intensity, double radius);
    static LevyMeasure atomic(std::vector<Atom> atoms);

    const Family& family() const noexcept { return family_; }
    bool is_symmetric() const noexcept;
    bool finite_activity() const noexcept;

private:
    Family family_;
};

struct JumpEvent {
    double time;   // in [0, horizon], strictly increasing within one sample
    double size;   // delta <= |size| <= epsilon
};

struct CutoffPlan {
    double epsilon;             // outer truncation, > 0
    double delta;               // inner cutoff in [0, epsilon)
    double neglected_fraction;  // second-moment mass below delta, relative to below epsilon
};

// Integral of x^2 over |x| <= eps; exact closed form per family.
double truncated_second_moment(const LevyMeasure& m, double eps);

// Same integral by tanh-sinh quadrature (finite sum for Atomic). Independent
// cross-check route for the closed forms; not used by the simulation path.
double truncated_second_moment_quadrature(const LevyMeasure& m, double eps);

// Integral of x^3 over |x| <= eps; zero for symmetric families.
double truncated_third_moment(const LevyMeasure& m, double eps);

// Noise calibration scale: sqrt of the truncated second moment.
double alpha(const LevyMeasure& m, double eps);

// eps / alpha(eps). Throws small_jump_mass_absent when alpha is zero.
double small_jump_ratio(const LevyMeasure& m, double eps);

enum class Verdict { vanishing, non_vanishing, undefined };

struct RatioVerdict {
    Verdict verdict;
    double slope;   // least-squares slope of log(ratio) vs log(eps); NaN when undefined
};

// Fits log(eps/alpha) against log(eps) on a strictly decreasing grid of at
// least 4 points. Verdict is `vanishing` iff slope > slope_tolerance,
// `undefined` if alpha vanishes anywhere on the grid.
RatioVerdict ratio_verdict(const LevyMeasure& m, std::span<const double> eps_grid,
                           double slope_tolerance = 0.01);

// Total mass of the band delta <= |x| <= eps. Throws infinite_intensity for
// StableLike with delta = 0.
double jump_intensity(const LevyMeasure& m, double delta, double eps);

// Integral of x over the band; the drift the compensated integral removes.
// Exactly zero for symmetric families.
double compensator_mean(const LevyMeasure& m, double delta, double eps);

// Chooses the inner cutoff so the neglected second-moment fraction is at most
// neglect_tol. Closed form for all three families (Atomic returns delta = 0).
CutoffPlan inner_cutoff(const LevyMeasure& m, double eps, double neglect_tol);

inline constexpr double kDefaultJumpBudget = 1e7;

// Compound-Poisson sample of the band: arrival times by exponential spacings,
// sizes by inverse transform. Closed-form size inverses:
//   StableLike: |x| = (delta^-b - v*(delta^-b - eps^-b))^(-1/b), sign uniform
//               when symmetric (one extra word per event);
//   UniformDensity: |x| uniform on [delta, min(eps, R)], sign uniform;
//   Atomic: cumulative-mass lookup over atoms in the band.
// Throws jump_budget_exceeded when horizon * intensity > budget.
std::vector<JumpEvent> sample_jumps(const LevyMeasure& m, const CutoffPlan& plan,
                                    double horizon, rng::Stream& stream,
                                    double budget = kDefaultJumpBudget);

} // namespace spde::levy
