#include "hillpt/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hillpt/eigensolver.hpp"
#include "hillpt/hill_matrix.hpp"
#include "hillpt/series.hpp"
#include "hillpt/spectrum.hpp"

namespace hillpt {

namespace {

constexpr double kLn2 = 0.6931471805599453094;

double scaled_log_hypot(const ScaledReal& re, const ScaledReal& im) {
    if (re.is_zero() && im.is_zero()) return -std::numeric_limits<double>::infinity();
    const std::int64_t e = std::max(re.is_zero() ? std::numeric_limits<std::int64_t>::min() : re.exponent(),
                                    im.is_zero() ? std::numeric_limits<std::int64_t>::min() : im.exponent());
    auto rel = [e](const ScaledReal& v) {
        if (v.is_zero()) return 0.0;
        const std::int64_t gap = e - v.exponent();
        return gap > 1074 ? 0.0 : std::ldexp(v.mantissa(), static_cast<int>(-gap));
    };
    return std::log(std::hypot(rel(re), rel(im))) + static_cast<double>(e) * kLn2;
}

}  // namespace

SeriesEvaluation sum_series(const std::vector<ScaledReal>& h, std::complex<double> x) {
    if (h.empty()) throw std::invalid_argument("empty coefficient sequence");
    const double fre = -x.imag(), fim = x.real();  // i * x
    const double ax = std::abs(x);
    ScaledReal pre(1.0), pim(0.0);       // (i x)^n split into components
    ScaledReal ax_pow(1.0);              // |x|^n
    ScaledReal acc_re, acc_im;
    double log_max = -std::numeric_limits<double>::infinity();
    double tail_max = -std::numeric_limits<double>::infinity();
    const std::size_t tail_from = h.size() > 12 ? h.size() - 12 : 0;
    for (std::size_t n = 0; n < h.size(); ++n) {
        acc_re += h[n] * pre;
        acc_im += h[n] * pim;
        const double term_log = h[n].log_abs() + ax_pow.log_abs();
        log_max = std::max(log_max, term_log);
        if (n >= tail_from) tail_max = std::max(tail_max, term_log);
        const ScaledReal new_re = pre * fre - pim * fim;
        const ScaledReal new_im = pre * fim + pim * fre;
        pre = new_re;
        pim = new_im;
        ax_pow = ax_pow * ax;
    }
    SeriesEvaluation ev;
    ev.sum = {acc_re.to_double(), acc_im.to_double()};
    ev.log_max_term = log_max;
    ev.log_tail_max = tail_max;
    if (std::isinf(tail_max) && tail_max < 0.0) {
        ev.tail_rel = 0.0;  // truncated tail vanishes identically (e.g. x = 0)
    } else {
        ev.tail_rel = std::exp(tail_max - scaled_log_hypot(acc_re, acc_im));
    }
    return ev;
}

SeriesEvaluation sum_series(const Eigen::VectorXd& h, std::complex<double> x) {
    std::vector<ScaledReal> hs(static_cast<std::size_t>(h.size()));
    for (Eigen::Index i = 0; i < h.size(); ++i) hs[static_cast<std::size_t>(i)] = ScaledReal(h(i));
    return sum_series(hs, x);
}

WaveFunction extract_wavefunction(const OscillatorParams& p, Eigen::Index n, int level) {
    validate_params(p);
    if (n < 2) throw std::invalid_argument("truncation order must be at least 2");
    if (level < 0 || static_cast<Eigen::Index>(level) >= n)
        throw std::invalid_argument("level must lie in [0, n)");

    const Spectrum spec = compute_spectrum(p, n, std::max(level + 1, 2));
    if (!spec.reality_flags[static_cast<std::size_t>(level)])
        throw std::domain_error("requested level has a nonreal energy; no real coefficient vector exists");
    const double energy = spec.levels(level).real();

    const HillMatrix hm = assemble(p, n);
    const Eigen::VectorXcd v = eigenvector_near(hm.entries, {energy, 0.0});

    // A simple real eigenvalue of a real matrix has an eigenvector that is a
    // global phase times a real vector; the phase was already rotated away.
    if (v.imag().cwiseAbs().maxCoeff() > 1e-6)
        throw std::domain_error("eigenvector is not real after phase alignment");
    Eigen::VectorXd u = v.real();

    const double lead = std::hypot(u(0), u(1));
    if (lead < 1e-12)
        throw std::domain_error("leading coefficient pair vanishes; cannot normalize to the unit circle");
    u /= lead;
    const double first = u(0) != 0.0 ? u(0) : u(1);
    if (first < 0.0) u = -u;

    WaveFunction wf;
    wf.energy = energy;
    wf.coefficients = u;
    wf.zeta = std::atan2(u(1), u(0));
    if (wf.zeta < 0.0) wf.zeta += 2.0 * M_PI;
    wf.s = p.s;
    wf.params = p;
    return wf;
}

std::complex<double> evaluate_psi(const WaveFunction& wf, std::complex<double> x) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
        throw std::invalid_argument("evaluation point must be finite");
    const SeriesEvaluation ev = sum_series(wf.coefficients, x);
    if (!(ev.tail_rel <= trust_tail_tol)) {
        std::ostringstream msg;
        msg << "point |x| = " << std::abs(x) << " is outside the trust region: truncated tail "
            << "estimate " << ev.tail_rel << " exceeds " << trust_tail_tol;
        throw std::domain_error(msg.str());
    }
    const std::complex<double> gauss = std::exp(-wf.s * x * x);
    return gauss * ev.sum;
}

double trust_radius(const WaveFunction& wf) {
    auto accepted = [&wf](double x) {
        return sum_series(wf.coefficients, {x, 0.0}).tail_rel <= trust_tail_tol;
    };
    if (!accepted(0.0)) return 0.0;
    double lo = 0.0, hi = 0.5;
    int expansions = 0;
    while (accepted(hi)) {
        lo = hi;
        hi *= 2.0;
        if (++expansions > 24) return lo;  // far beyond any physical trust region
    }
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (accepted(mid) ? lo : hi) = mid;
    }
    return lo;
}

namespace {

struct Mismatch {
    std::complex<double> f;
    double norm;
    double noise;
    double tail_over_max;
};

Mismatch shooting_mismatch(const OscillatorParams& p, double energy, double zeta, double x_end,
                           int m) {
    const TaylorCoefficients tc =
        generate_coefficients(p, energy, std::cos(zeta), std::sin(zeta), m);
    const SeriesEvaluation ev = sum_series(tc.values, {x_end, 0.0});
    if (ev.log_max_term > 700.0)
        throw std::invalid_argument("series terms overflow at x_end; reduce x_end");
    Mismatch mm;
    mm.f = ev.sum;
    mm.norm = std::abs(ev.sum);
    mm.noise = 16.0 * std::numeric_limits<double>::epsilon() * std::exp(ev.log_max_term);
    mm.tail_over_max = std::exp(ev.log_tail_max - ev.log_max_term);
    return mm;
}

}  // namespace

ShootingResult verify_by_shooting(const OscillatorParams& p, double e_guess, double zeta_guess,
                                  double x_end, int m) {
    validate_params(p);
    if (!std::isfinite(e_guess) || !std::isfinite(zeta_guess))
        throw std::invalid_argument("starting point must be finite");
    if (!(x_end > 0.0)) throw std::invalid_argument("x_end must be positive");
    if (m < 40 || m > 100000) throw std::invalid_argument("m must lie in [40, 100000]");

    double energy = e_guess, zeta = zeta_guess;
    Mismatch cur = shooting_mismatch(p, energy, zeta, x_end, m);
    if (cur.tail_over_max > 1e-12)
        throw std::invalid_argument("series tail at x_end has not converged for this m; "
                                    "increase m or reduce x_end");

    for (int step = 0; step < 50; ++step) {
        if (cur.norm <= cur.noise) {
            ShootingResult res;
            res.energy = energy;
            res.zeta = std::fmod(zeta, 2.0 * M_PI);
            if (res.zeta < 0.0) res.zeta += 2.0 * M_PI;
            res.steps = step;
            return res;
        }
        const double de = 1e-6 * (1.0 + std::abs(energy));
        const double dz = 1e-6 * (1.0 + std::abs(energy));
        const std::complex<double> fe_p = shooting_mismatch(p, energy + de, zeta, x_end, m).f;
        const std::complex<double> fe_m = shooting_mismatch(p, energy - de, zeta, x_end, m).f;
        const std::complex<double> fz_p = shooting_mismatch(p, energy, zeta + dz, x_end, m).f;
        const std::complex<double> fz_m = shooting_mismatch(p, energy, zeta - dz, x_end, m).f;
        const double j00 = (fe_p.real() - fe_m.real()) / (2.0 * de);
        const double j01 = (fz_p.real() - fz_m.real()) / (2.0 * dz);
        const double j10 = (fe_p.imag() - fe_m.imag()) / (2.0 * de);
        const double j11 = (fz_p.imag() - fz_m.imag()) / (2.0 * dz);
        const double det = j00 * j11 - j01 * j10;
        const double jscale = std::max({std::abs(j00), std::abs(j01), std::abs(j10), std::abs(j11)});
        if (!(std::abs(det) > 1e-30 * jscale * jscale) || !std::isfinite(det))
            throw std::runtime_error("singular shooting Jacobian; perturb the starting point or x_end");
        const double step_e = (j11 * cur.f.real() - j01 * cur.f.imag()) / det;
        const double step_z = (-j10 * cur.f.real() + j00 * cur.f.imag()) / det;
        if (!std::isfinite(step_e) || !std::isfinite(step_z))
            throw std::runtime_error("shooting step is not finite; perturb the starting point");

        double lam = 1.0;
        bool improved = false;
        for (int halvings = 0; halvings < 12; ++halvings, lam *= 0.5) {
            const Mismatch trial =
                shooting_mismatch(p, energy - lam * step_e, zeta - lam * step_z, x_end, m);
            if (trial.norm < cur.norm) {
                energy -= lam * step_e;
                zeta -= lam * step_z;
                cur = trial;
                improved = true;
                break;
            }
        }
        if (!improved) {
            const double stepsize = std::hypot(step_e, step_z);
            if (stepsize <= 1e-13 * (1.0 + std::abs(energy)) || cur.norm <= 64.0 * cur.noise) {
                ShootingResult res;
                res.energy = energy;
                res.zeta = std::fmod(zeta, 2.0 * M_PI);
                if (res.zeta < 0.0) res.zeta += 2.0 * M_PI;
                res.steps = step;
                return res;
            }
            throw std::runtime_error("shooting line search stalled above the noise floor");
        }
    }
    throw std::runtime_error("shooting did not converge within 50 Newton steps");
}

}  // namespace hillpt
