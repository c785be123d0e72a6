#pragma once

// Randomized checks of the DGSM(1,1) model invariants. Each check runs a
// fixed number of seeded trials and reports the worst scaled error, so the
// unit tests and the acceptance runner share one implementation.

#include "greycast/dgm.hpp"
#include "greycast/dgsm.hpp"
#include "greycast/series.hpp"
#include "support/generators.hpp"
#include "support/normal_equations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace greycast::support {

struct CheckResult {
	int trials = 0;
	int failures = 0;
	double worst = 0.0; // largest error divided by its tolerance scale
	double tolerance = 0.0;
	std::string first_failure;

	bool passed() const noexcept { return failures == 0 && trials > 0; }

	void record(double scaled_error, const std::string &where) {
		worst = std::max(worst, scaled_error);
		if (!(scaled_error <= tolerance)) {
			if (failures == 0) {
				std::ostringstream os;
				os << where << " (scaled error " << scaled_error << ")";
				first_failure = os.str();
			}
			++failures;
		}
	}
};

inline double rel_err(double a, double b, double scale) {
	const double denom = std::max({std::abs(a), std::abs(b), scale});
	return denom == 0.0 ? 0.0 : std::abs(a - b) / denom;
}

inline double max_abs(const std::vector<double> &v) {
	double m = 0.0;
	for (double x : v) {
		m = std::max(m, std::abs(x));
	}
	return m;
}

inline int pick_period(Rng &rng, const std::vector<int> &choices) {
	return choices[uniform_size(rng, 0, choices.size() - 1)];
}

/// s = 1: DGSM and DGM(1,1) agree on parameters, fitted values and forecasts.
inline CheckResult check_degeneracy(std::uint64_t seed, int trials = 50) {
	Rng rng(seed);
	CheckResult r;
	r.tolerance = 1e-12;
	for (int t = 0; t < trials; ++t) {
		const auto n = uniform_size(rng, 3, 40);
		const auto values = seasonal_series(rng, n, 1, 0.3);
		const auto a = dgsm::fit(SeasonalSeries(values, 1));
		const auto b = dgm::fit(values);
		const std::string at = "trial " + std::to_string(t);
		r.record(rel_err(a.params.alpha, b.params.beta1, 0.0), at + " alpha");
		r.record(rel_err(a.params.beta(1), b.params.beta2, 0.0), at + " beta");
		for (std::size_t k = 0; k < n; ++k) {
			r.record(rel_err(a.fitted_restored[k], b.fitted[k], 0.0), at + " fitted");
		}
		const auto fa = dgsm::forecast(a, 6);
		const auto fb = dgm::forecast(b, 6);
		for (std::size_t k = 0; k < 6; ++k) {
			r.record(rel_err(fa[k], fb[k], 0.0), at + " forecast");
		}
		++r.trials;
	}
	return r;
}

/// Refitting on the model's own fitted output reproduces the model.
inline CheckResult check_unbiasedness(std::uint64_t seed, int trials = 50) {
	Rng rng(seed);
	CheckResult r;
	r.tolerance = 1e-9;
	while (r.trials < trials) {
		const int s = pick_period(rng, {2, 3, 4, 12});
		const auto n = dgsm::min_length(s) + uniform_size(rng, 0, 3 * static_cast<std::size_t>(s));
		const int phase = static_cast<int>(uniform_size(rng, 1, static_cast<std::size_t>(s)));
		const auto first = dgsm::fit(SeasonalSeries(seasonal_series(rng, n, s, 0.1), s, phase));
		if (*std::min_element(first.fitted_restored.begin(), first.fitted_restored.end()) <= 0.0) {
			continue; // fitted output is not a valid series; draw again
		}
		const auto second = dgsm::fit(SeasonalSeries(first.fitted_restored, s, phase));
		const std::string at = "trial " + std::to_string(r.trials) + " s=" + std::to_string(s);
		r.record(rel_err(first.params.alpha, second.params.alpha, 0.0), at + " alpha");
		const double beta_scale = max_abs(first.params.betas);
		for (int i = 1; i <= s; ++i) {
			r.record(rel_err(first.params.beta(i), second.params.beta(i), beta_scale), at + " beta");
		}
		const double scale = max_abs(first.fitted_restored);
		for (std::size_t k = 0; k < n; ++k) {
			r.record(rel_err(first.fitted_restored[k], second.fitted_restored[k], scale), at + " fitted");
		}
		++r.trials;
	}
	return r;
}

/// Strictly periodic input: alpha = 1, betas equal the cycle, no residuals.
inline CheckResult check_periodic_exactness(std::uint64_t seed, int trials = 50) {
	Rng rng(seed);
	CheckResult r;
	r.tolerance = 1e-9;
	for (int t = 0; t < trials; ++t) {
		const int s = static_cast<int>(uniform_size(rng, 1, 12));
		const auto lo = std::max<std::size_t>(2 * static_cast<std::size_t>(s), dgsm::min_length(s));
		const auto n = uniform_size(rng, lo, std::max(lo, 6 * static_cast<std::size_t>(s)));
		const int phase = static_cast<int>(uniform_size(rng, 1, static_cast<std::size_t>(s)));
		const auto values = periodic_series(rng, n, s);
		const SeasonalSeries series(values, s, phase);
		const auto f = dgsm::fit(series);
		const double scale = max_abs(values);
		const std::string at = "trial " + std::to_string(t) + " s=" + std::to_string(s) + " n=" + std::to_string(n);
		r.record(std::abs(f.params.alpha - 1.0), at + " alpha");
		for (std::size_t k = 1; k <= n; ++k) {
			r.record(std::abs(f.params.beta(series.season(k)) - values[k - 1]) / scale, at + " beta");
			r.record(std::abs(f.residuals[k - 1]) / scale, at + " residual");
		}
		++r.trials;
	}
	return r;
}

/// One-cycle identity x0(k+s) = alpha^s x0(k) + psi_{season(k)} for k >= 2,
/// over fitted and forecast values, plus the geometric form for alpha^s != 1.
inline CheckResult check_cycle_identity(std::uint64_t seed, int trials = 50) {
	Rng rng(seed);
	CheckResult r;
	r.tolerance = 1e-9;
	for (int t = 0; t < trials; ++t) {
		const int s = pick_period(rng, {2, 3, 4, 6, 12});
		const auto n = dgsm::min_length(s) + uniform_size(rng, 0, 2 * static_cast<std::size_t>(s));
		const int phase = static_cast<int>(uniform_size(rng, 1, static_cast<std::size_t>(s)));
		const SeasonalSeries series(seasonal_series(rng, n, s, 0.2), s, phase);
		const auto f = dgsm::fit(series);
		auto x = f.fitted_restored;
		const auto fc = dgsm::forecast(f, 2 * static_cast<std::size_t>(s));
		x.insert(x.end(), fc.begin(), fc.end());

		const auto psi = dgsm::cycle_coefficients(f.params);
		const double as = std::pow(f.params.alpha, s);
		const std::string at = "trial " + std::to_string(t) + " s=" + std::to_string(s);
		const auto su = static_cast<std::size_t>(s);
		for (std::size_t k = 2; k + su <= x.size(); ++k) {
			const double p = psi.for_season(series.season(k));
			const double lhs = x[k + su - 1];
			const double rhs = as * x[k - 1] + p;
			const double scale = std::max({std::abs(lhs), std::abs(as * x[k - 1]), std::abs(p)});
			r.record(std::abs(lhs - rhs) / scale, at + " identity k=" + std::to_string(k));
		}
		if (std::abs(1.0 - as) >= 1e-12) {
			for (std::size_t k = 2; k + su <= x.size(); ++k) {
				const double p = psi.for_season(series.season(k));
				const double fixed = p / (1.0 - as);
				const double y0 = x[k - 1] - fixed;
				const double y1 = x[k + su - 1] - fixed;
				const double scale = std::max({std::abs(x[k - 1]), std::abs(x[k + su - 1]), std::abs(fixed)});
				r.record(std::abs(y1 - as * y0) / scale, at + " geometric k=" + std::to_string(k));
			}
		}
		++r.trials;
	}
	return r;
}

/// Planted parameters are recovered from recursion-generated data, and the
/// library's solve agrees with the normal-equations oracle on noisy data.
inline CheckResult check_ols_oracle(std::uint64_t seed, int trials = 50) {
	Rng rng(seed);
	CheckResult r;
	r.tolerance = 1e-8;
	while (r.trials < trials) {
		const int s = pick_period(rng, {1, 2, 3, 4, 12});
		const auto n = dgsm::min_length(s) + uniform_size(rng, 0, 2 * static_cast<std::size_t>(s));
		const int phase = static_cast<int>(uniform_size(rng, 1, static_cast<std::size_t>(s)));
		const double alpha = uniform(rng, 0.98, 1.15);
		std::vector<double> betas(static_cast<std::size_t>(s));
		for (auto &b : betas) {
			b = uniform(rng, 50, 200);
		}
		const auto planted = recursion_series(alpha, betas, uniform(rng, 10, 500), n, phase);
		if (*std::min_element(planted.begin(), planted.end()) <= 0.0) {
			continue;
		}
		const std::string at = "trial " + std::to_string(r.trials) + " s=" + std::to_string(s);
		const auto p = dgsm::estimate(SeasonalSeries(planted, s, phase));
		r.record(rel_err(p.alpha, alpha, 0.0), at + " planted alpha");
		for (int i = 1; i <= s; ++i) {
			r.record(rel_err(p.beta(i), betas[static_cast<std::size_t>(i - 1)], 0.0), at + " planted beta");
		}

		const auto noisy = seasonal_series(rng, n, s, 0.2);
		const auto q = dgsm::estimate(SeasonalSeries(noisy, s, phase));
		const auto oracle = dgsm_normal_equations(noisy, s, phase);
		r.record(rel_err(q.alpha, oracle[0], 0.0), at + " oracle alpha");
		const double beta_scale = max_abs(q.betas);
		for (int i = 1; i <= s; ++i) {
			r.record(rel_err(q.beta(i), oracle[static_cast<std::size_t>(i)], beta_scale), at + " oracle beta");
		}
		++r.trials;
	}
	return r;
}

/// Direct evaluation of the time-response formulas against the recursion.
/// Restored values are differences of accumulated ones, so their error is
/// measured against the accumulated magnitude they were taken from.
inline CheckResult check_closed_forms(std::uint64_t seed, int draws = 100) {
	Rng rng(seed);
	CheckResult r;
	r.tolerance = 1e-10;
	for (int t = 0; t < draws; ++t) {
		const int s = static_cast<int>(uniform_size(rng, 1, 12));
		dgsm::DgsmParams p;
		p.period = s;
		p.phase0 = static_cast<int>(uniform_size(rng, 1, static_cast<std::size_t>(s)));
		p.alpha = uniform(rng, 0.5, 1.5);
		p.betas.resize(static_cast<std::size_t>(s));
		for (auto &b : p.betas) {
			b = uniform(rng, -100, 300);
		}
		const double x1 = uniform(rng, 1, 1000);
		const auto k_max = uniform_size(rng, 1, 40);
		const auto acc = dgsm::simulate_accumulated(p, x1, k_max);
		const auto restored = dgsm::restore(acc);
		const std::string at = "draw " + std::to_string(t);
		for (std::size_t k = 1; k <= k_max; ++k) {
			r.record(rel_err(dgsm::closed_form_accumulated(p, x1, k), acc[k - 1], 0.0), at + " accumulated");
			const double scale = std::max(std::abs(acc[k - 1]), k > 1 ? std::abs(acc[k - 2]) : 0.0);
			r.record(rel_err(dgsm::closed_form_restored(p, x1, k), restored[k - 1], scale), at + " restored");
		}
		++r.trials;
	}
	return r;
}

} // namespace greycast::support
