#include "spde/levy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace spde::levy {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

void require_finite_positive(double v, const char* what) {
    if (!(std::isfinite(v) && v > 0.0))
        fail(ErrorCode::range_error, std::string(what) + " must be finite and > 0");
}

} // namespace

LevyMeasure::LevyMeasure(Family family) : family_(std::move(family)) {
    if (const auto* s = std::get_if<StableLike>(&family_)) {
        require_finite_positive(s->intensity, "StableLike intensity");
        if (!(s->beta > 0.0 && s->beta < 2.0))
            fail(ErrorCode::range_error, "StableLike beta must lie strictly in (0,2)");
    } else if (const auto* u = std::get_if<UniformDensity>(&family_)) {
        require_finite_positive(u->intensity, "UniformDensity intensity");
        require_finite_positive(u->radius, "UniformDensity radius");
    } else {
        const auto& a = std::get<Atomic>(family_);
        for (const auto& atom : a.atoms) {
            if (!(std::isfinite(atom.location) && atom.location != 0.0))
                fail(ErrorCode::range_error, "Atomic atom location must be finite and nonzero");
            require_finite_positive(atom.mass, "Atomic atom mass");
        }
    }
}

LevyMeasure LevyMeasure::stable(double intensity, double beta, Side side) {
    return LevyMeasure(StableLike{intensity, beta, side});
}

LevyMeasure LevyMeasure::uniform_density(double intensity, double radius) {
    return LevyMeasure(UniformDensity{intensity, radius});
}

LevyMeasure LevyMeasure::atomic(std::vector<Atom> atoms) {
    return LevyMeasure(Atomic{std::move(atoms)});
}

bool LevyMeasure::is_symmetric() const noexcept {
    if (const auto* s = std::get_if<StableLike>(&family_)) return s->side == Side::symmetric;
    if (std::holds_alternative<UniformDensity>(family_)) return true;
    return false;  // atoms are not symmetric in general; callers use moments
}

bool LevyMeasure::finite_activity() const noexcept {
    return std::holds_alternative<Atomic>(family_);
}

double truncated_second_moment(const LevyMeasure& m, double eps) {
    require_finite_positive(eps, "eps");
    if (const auto* s = std::get_if<StableLike>(&m.family())) {
        const double one_side = s->intensity * std::pow(eps, 2.0 - s->beta) / (2.0 - s->beta);
        return s->side == Side::symmetric ? 2.0 * one_side : one_side;
    }
    if (const auto* u = std::get_if<UniformDensity>(&m.family())) {
        const double r = std::min(eps, u->radius);
        return 2.0 * u->intensity * r * r * r / 3.0;
    }
    const auto& a = std::get<Atomic>(m.family());
    double sum = 0.0;
    for (const auto& atom : a.atoms)
        if (std::abs(atom.location) <= eps) sum += atom.mass * atom.location * atom.location;
    return sum;
}

double truncated_second_moment_quadrature(const LevyMeasure& m, double eps) {
    require_finite_positive(eps, "eps");
    boost::math::quadrature::tanh_sinh<double> integrator;
    if (const auto* s = std::get_if<StableLike>(&m.family())) {
        // x^2 * c|x|^(-1-beta) = c|x|^(1-beta): integrable endpoint singularity at 0.
        const double c = s->intensity;
        const double beta = s->beta;
        const double one_side =
            integrator.integrate([c, beta](double x) { return c * std::pow(x, 1.0 - beta); },
                                 0.0, eps, 1e-12);
        return s->side == Side::symmetric ? 2.0 * one_side : one_side;
    }
    if (const auto* u = std::get_if<UniformDensity>(&m.family())) {
        const double c = u->intensity;
        const double r = std::min(eps, u->radius);
        return 2.0 * integrator.integrate([c](double x) { return c * x * x; }, 0.0, r, 1e-12);
    }
    // Finite sum, accumulated in reverse order so the route differs from the
    // closed-form path.
    const auto& a = std::get<Atomic>(m.family());
    double sum = 0.0;
    for (auto it = a.atoms.rbegin(); it != a.atoms.rend(); ++it)
        if (std::abs(it->location) <= eps) sum += it->mass * it->location * it->location;
    return sum;
}

double truncated_third_moment(const LevyMeasure& m, double eps) {
    require_finite_positive(eps, "eps");
    if (const auto* s = std::get_if<StableLike>(&m.family())) {
        if (s->side == Side::symmetric) return 0.0;
        return s->intensity * std::pow(eps, 3.0 - s->beta) / (3.0 - s->beta);
    }
    if (std::holds_alternative<UniformDensity>(m.family())) return 0.0;
    const auto& a = std::get<Atomic>(m.family());
    double sum = 0.0;
    for (const auto& atom : a.atoms)
        if (std::abs(atom.location) <= eps)
            sum += atom.mass * atom.location * atom.location * atom.location;
    return sum;
}

double alpha(const LevyMeasure& m, double eps) {
    return std::sqrt(truncated_second_moment(m, eps));
}

double small_jump_ratio(const LevyMeasure& m, double eps) {
    const double a = alpha(m, eps);
    if (a == 0.0)
        fail(ErrorCode::small_jump_mass_absent,
             "no jump mass below eps; 1/alpha scaling undefined");
    return eps / a;
}

RatioVerdict ratio_verdict(const LevyMeasure& m, std::span<const double> eps_grid,
                           double slope_tolerance) {
    if (eps_grid.size() < 4)
        fail(ErrorCode::range_error, "ratio_verdict needs at least 4 grid points");
    for (std::size_t i = 1; i < eps_grid.size(); ++i)
        if (!(eps_grid[i] < eps_grid[i - 1]))
            fail(ErrorCode::range_error, "ratio_verdict grid must be strictly decreasing");

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> lx, ly;
    lx.reserve(eps_grid.size());
    ly.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        const double a = alpha(m, eps);
        if (a == 0.0) return RatioVerdict{Verdict::undefined, nan};
        lx.push_back(std::log(eps));
        ly.push_back(std::log(eps / a));
    }
    const double n = static_cast<double>(lx.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxy += (lx[i] - mx) * (ly[i] - my);
        sxx += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = sxy / sxx;
    return RatioVerdict{slope > slope_tolerance ? Verdict::vanishing : Verdict::non_vanishing,
                        slope};
}

double jump_intensity(const LevyMeasure& m, double delta, double eps) {
    if (!(delta >= 0.0 && delta < eps))
        fail(ErrorCode::range_error, "jump_intensity requires 0 <= delta < eps");
    if (const auto* s = std::get_if<StableLike>(&m.family())) {
        if (delta == 0.0)
            fail(ErrorCode::infinite_intensity,
                 "StableLike has infinite activity at 0; need delta > 0");
        const double one_side =
            s->intensity * (std::pow(delta, -s->beta) - std::pow(eps, -s->beta)) / s->beta;
        return s->side == Side::symmetric ? 2.0 * one_side : one_side;
    }
    if (const auto* u = std::get_if<UniformDensity>(&m.family())) {
        const double hi = std::min(eps, u->radius);
        return 2.0 * u->intensity * std::max(0.0, hi - delta);
    }
    const auto& a = std::get<Atomic>(m.family());
    double sum = 0.0;
    for (const auto& atom : a.atoms) {
        const double r = std::abs(atom.location);
        if (r >= delta && r <= eps) sum += atom.mass;
    }
    return sum;
}

double compensator_mean(const LevyMeasure& m, double delta, double eps) {
    if (!(delta >= 0.0 && delta < eps))
        fail(ErrorCode::range_error, "compensator_mean requires 0 <= delta < eps");
    if (const auto* s = std::get_if<StableLike>(&m.family())) {
        if (s->side == Side::symmetric) return 0.0;
        if (delta == 0.0)
            fail(ErrorCode::infinite_intensity,
                 "StableLike has infinite activity at 0; need delta > 0");
        if (s->beta == 1.0) return s->intensity * std::log(eps / delta);
        return s->intensity * (std::pow(eps, 1.0 - s->beta) - std::pow(delta, 1.0 - s->beta)) /
               (1.0 - s->beta);
    }
    if (std::holds_alternative<UniformDensity>(m.family())) return 0.0;
    const auto& a = std::get<Atomic>(m.family());
    double sum = 0.0;
    for (const auto& atom : a.atoms) {
        const double r = std::abs(atom.location);
        if (r >= delta && r <= eps) sum += atom.mass * atom.location;
    }
    return sum;
}

CutoffPlan inner_cutoff(const LevyMeasure& m, double eps, double neglect_tol) {
    if (!(neglect_tol > 0.0 && neglect_tol < 1.0))
        fail(ErrorCode::range_error, "neglect_tol must lie in (0,1)");
    const double total = truncated_second_moment(m, eps);
    if (total == 0.0)
        fail(ErrorCode::small_jump_mass_absent, "no jump mass below eps; cutoff undefined");
    if (const auto* s = std::get_if<StableLike>(&m.family())) {
        const double delta = eps * std::pow(neglect_tol, 1.0 / (2.0 - s->beta));
        return CutoffPlan{eps, delta, truncated_second_moment(m, delta) / total};
    }
    if (const auto* u = std::get_if<UniformDensity>(&m.family())) {
        const double delta = std::min(eps, u->radius) * std::cbrt(neglect_tol);
        return CutoffPlan{eps, delta, truncated_second_moment(m, delta) / total};
    }
    return CutoffPlan{eps, 0.0, 0.0};  // finite activity: keep everything
}

namespace {

// Inverse-transform size draw from the band [plan.delta, plan.epsilon].
struct SizeSampler {
    const LevyMeasure& measure;
    const CutoffPlan& plan;

    double operator()(rng::Stream& stream) const {
        if (const auto* s = std::get_if<StableLike>(&measure.family())) {
            const double lo = std::pow(plan.delta, -s->beta);
            const double hi = std::pow(plan.epsilon, -s->beta);
            double sign = 1.0;
            if (s->side == Side::symmetric) sign = stream.uniform01() < 0.5 ? -1.0 : 1.0;
            const double v = stream.open01();
            const double mag = std::pow(lo - v * (lo - hi), -1.0 / s->beta);
            return sign * mag;
        }
        if (const auto* u = std::get_if<UniformDensity>(&measure.family())) {
            const double hi = std::min(plan.epsilon, u->radius);
            const double sign = stream.uniform01() < 0.5 ? -1.0 : 1.0;
            const double v = stream.uniform01();
            return sign * (plan.delta + v * (hi - plan.delta));
        }
        const auto& a = std::get<Atomic>(measure.family());
        double total = 0.0;
        for (const auto& atom : a.atoms) {
            const double r = std::abs(atom.location);
            if (r >= plan.delta && r <= plan.epsilon) total += atom.mass;
        }
        const double u = stream.uniform01() * total;
        double acc = 0.0;
        for (const auto& atom : a.atoms) {
            const double r = std::abs(atom.location);
            if (r < plan.delta || r > plan.epsilon) continue;
            acc += atom.mass;
            if (u < acc) return atom.location;
        }
        // u == total can occur at the float boundary; return the last in-band atom.
        for (auto it = a.atoms.rbegin(); it != a.atoms.rend(); ++it) {
            const double r = std::abs(it->location);
            if (r >= plan.delta && r <= plan.epsilon) return it->location;
        }
        return 0.0;  // unreachable: intensity > 0 implies an in-band atom
    }
};

} // namespace

std::vector<JumpEvent> sample_jumps(const LevyMeasure& m, const CutoffPlan& plan,
                                    double horizon, rng::Stream& stream, double budget) {
    require_finite_positive(horizon, "horizon");
    const double rate = jump_intensity(m, plan.delta, plan.epsilon);
    std::vector<JumpEvent> events;
    if (rate == 0.0) return events;
    const double expected = horizon * rate;
    if (expected > budget)
        fail(ErrorCode::jump_budget_exceeded,
             "expected jump count " + std::to_string(expected) + " exceeds budget " +
                 std::to_string(budget));
    events.reserve(static_cast<std::size_t>(expected * 1.1) + 16);
    const SizeSampler draw_size{m, plan};
    double t = stream.exponential(rate);
    while (t <= horizon) {
        events.push_back(JumpEvent{t, draw_size(stream)});
        t += stream.exponential(rate);
    }
    return events;
}

} // namespace spde::levy
