#pragma once

// Deseasonalize-then-fit baselines. Both models divide each observation by a
// multiplicative seasonal factor, fit a non-seasonal grey core to the adjusted
// series, and re-apply the calendar-aligned factor to the core's output.
//
//   SFGM(1,1): factors from season means over the overall mean, GM(1,1) core.
//   SGM(1,1):  factors from ratios to each complete cycle's mean, DGM(1,1) core.
//
// These follow the published descriptions of the two models in spirit; the
// exact factor formulas of the original models are not reproduced.

#include "greycast/dgm.hpp"
#include "greycast/gm.hpp"
#include "greycast/series.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace greycast::seasonal {

enum class FactorMethod {
	RatioToOverallMean,
	RatioToCycleMean,
};

struct SeasonalFactors {
	std::vector<double> factors; // factors[i-1] belongs to season i; mean exactly 1
	FactorMethod method = FactorMethod::RatioToOverallMean;

	double factor(int season) const { return factors.at(static_cast<std::size_t>(season - 1)); }
};

/// Throws Error(IncompleteCycleCoverage) when a season has no observations
/// (or, for RatioToCycleMean, when no complete cycle exists).
SeasonalFactors seasonal_factors(const SeasonalSeries &series, FactorMethod method);

std::vector<double> deseasonalize(const SeasonalSeries &series, const SeasonalFactors &factors);

enum class Core { Gm11, Dgm11 };

struct SeasonalFactorFit {
	Core core = Core::Gm11;
	SeasonalFactors factors;
	std::variant<gm::Gm11Fit, dgm::Dgm11Fit> core_fit;
	int period = 1;
	int phase0 = 1;
	std::size_t n = 0;
	std::vector<double> fitted;
	std::vector<double> residuals;
};

/// Two full cycles, and at least as many points as the core model needs.
std::size_t min_length(int period, Core core) noexcept;

SeasonalFactorFit fit_sfgm(const SeasonalSeries &series);
SeasonalFactorFit fit_sgm(const SeasonalSeries &series);

std::vector<double> forecast(const SeasonalFactorFit &fit, std::size_t horizon);

} // namespace greycast::seasonal
