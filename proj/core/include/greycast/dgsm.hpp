#pragma once

// Discrete grey seasonal model DGSM(1,1):
//
//   x1(k+1) = alpha * x1(k) + beta_{season(k+1)}
//
// where x1 is the running sum of the observations and each season carries its
// own intercept. Parameters are estimated by least squares on the accumulated
// sequence; fitted and forecast values are produced by running the recursion
// and differencing.

#include "greycast/least_squares.hpp"
#include "greycast/series.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace greycast::dgsm {

struct DgsmParams {
	double alpha = 1.0;
	std::vector<double> betas; // betas[i-1] is the intercept of season i
	int period = 1;
	int phase0 = 1;

	double beta(int season) const { return betas.at(static_cast<std::size_t>(season - 1)); }
	/// Intercept applied when stepping into the k-th observation (1-based).
	double beta_at(std::size_t k) const { return beta(season_of(k, period, phase0)); }
	/// A zero development coefficient collapses the recursion to pure intercepts.
	bool degenerate() const noexcept { return alpha == 0.0; }
};

struct DgsmDesign {
	DesignMatrix matrix; // (n-1) x (s+1): [x1(k), d_1 .. d_s]
	std::vector<double> target; // x1(k+1), k = 1..n-1
};

struct DgsmFit {
	DgsmParams params;
	SeasonalSeries source;
	std::vector<double> fitted_accumulated;
	std::vector<double> fitted_restored;
	std::vector<double> residuals;
	double condition_estimate = 0.0;
};

struct CycleCoefficients {
	std::vector<double> psi; // psi[i-1] belongs to season i

	double for_season(int season) const { return psi.at(static_cast<std::size_t>(season - 1)); }
};

/// Smallest admissible series length: two full cycles, and never fewer rows
/// than unknowns.
std::size_t min_length(int period) noexcept;

/// Throws InsufficientDataError when series.size() < min_length(period).
DgsmDesign build_design(const SeasonalSeries &series);

/// Least-squares estimate of (alpha, beta_1..beta_s).
DgsmParams estimate(const SeasonalSeries &series);

/// Runs the recursion from x1(1) = x1_initial for k = 1..k_max.
std::vector<double> simulate_accumulated(const DgsmParams &params, double x1_initial, std::size_t k_max);

/// Inverse accumulation of a simulated sequence.
std::vector<double> restore(std::span<const double> accumulated);

/// Closed-form accumulated response at 1-based index k.
double closed_form_accumulated(const DgsmParams &params, double x1_initial, std::size_t k);

/// Closed-form restored response at 1-based index k (k = 1 returns x1_initial).
double closed_form_restored(const DgsmParams &params, double x1_initial, std::size_t k);

DgsmFit fit(const SeasonalSeries &series);

/// Out-of-sample values for observations n+1..n+horizon. Seasons continue the
/// calendar of the source series. Throws Error(InvalidHorizon) for horizon < 1.
std::vector<double> forecast(const DgsmFit &fit, std::size_t horizon);

/// Coefficients psi_i of the one-cycle identity
///   x0(k+s) = alpha^s * x0(k) + psi_{season(k)},  k >= 2.
CycleCoefficients cycle_coefficients(const DgsmParams &params);

} // namespace greycast::dgsm
