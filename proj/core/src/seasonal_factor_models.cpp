#include "greycast/seasonal_factor_models.hpp"

#include "greycast/errors.hpp"

#include <algorithm>
#include <numeric>
#include <type_traits>

namespace greycast::seasonal {

namespace {

void normalize_to_unit_mean(std::vector<double> &factors) {
	const double mean = std::accumulate(factors.begin(), factors.end(), 0.0) / static_cast<double>(factors.size());
	for (double &f : factors) {
		f /= mean;
	}
}

std::vector<double> ratio_to_overall_mean(const SeasonalSeries &series) {
	const auto s = static_cast<std::size_t>(series.period());
	std::vector<double> sums(s, 0.0);
	std::vector<std::size_t> counts(s, 0);
	double total = 0.0;
	for (std::size_t k = 1; k <= series.size(); ++k) {
		const auto idx = static_cast<std::size_t>(series.season(k) - 1);
		sums[idx] += series.at(k);
		counts[idx] += 1;
		total += series.at(k);
	}
	const double overall = total / static_cast<double>(series.size());
	std::vector<double> factors(s);
	for (std::size_t i = 0; i < s; ++i) {
		if (counts[i] == 0) {
			throw Error(ErrorCode::IncompleteCycleCoverage,
			            "season " + std::to_string(i + 1) + " has no observations");
		}
		factors[i] = (sums[i] / static_cast<double>(counts[i])) / overall;
	}
	return factors;
}

std::vector<double> ratio_to_cycle_mean(const SeasonalSeries &series) {
	// Cycles are consecutive blocks of s observations from the first one; each
	// block holds every season exactly once. A trailing partial block is unused.
	const auto s = static_cast<std::size_t>(series.period());
	const std::size_t cycles = series.size() / s;
	if (cycles == 0) {
		throw Error(ErrorCode::IncompleteCycleCoverage, "no complete seasonal cycle in series");
	}
	std::vector<double> ratio_sums(s, 0.0);
	for (std::size_t c = 0; c < cycles; ++c) {
		const std::size_t first = c * s + 1;
		double block = 0.0;
		for (std::size_t k = first; k < first + s; ++k) {
			block += series.at(k);
		}
		const double block_mean = block / static_cast<double>(s);
		for (std::size_t k = first; k < first + s; ++k) {
			ratio_sums[static_cast<std::size_t>(series.season(k) - 1)] += series.at(k) / block_mean;
		}
	}
	for (double &r : ratio_sums) {
		r /= static_cast<double>(cycles);
	}
	return ratio_sums;
}

SeasonalFactorFit fit_with(const SeasonalSeries &series, Core core, FactorMethod method) {
	const std::size_t required = min_length(series.period(), core);
	if (series.size() < required) {
		throw InsufficientDataError(required, series.size(),
		                            core == Core::Gm11 ? "SFGM(1,1)" : "SGM(1,1)");
	}
	SeasonalFactorFit out;
	out.core = core;
	out.factors = seasonal_factors(series, method);
	out.period = series.period();
	out.phase0 = series.phase0();
	out.n = series.size();

	const auto adjusted = deseasonalize(series, out.factors);
	std::vector<double> core_fitted;
	if (core == Core::Gm11) {
		auto f = gm::fit(adjusted);
		core_fitted = f.fitted;
		out.core_fit = std::move(f);
	} else {
		auto f = dgm::fit(adjusted);
		core_fitted = f.fitted;
		out.core_fit = std::move(f);
	}

	out.fitted.resize(out.n);
	out.residuals.resize(out.n);
	for (std::size_t k = 1; k <= out.n; ++k) {
		out.fitted[k - 1] = core_fitted[k - 1] * out.factors.factor(series.season(k));
		out.residuals[k - 1] = series.at(k) - out.fitted[k - 1];
	}
	return out;
}

} // namespace

SeasonalFactors seasonal_factors(const SeasonalSeries &series, FactorMethod method) {
	SeasonalFactors out;
	out.method = method;
	out.factors = method == FactorMethod::RatioToOverallMean ? ratio_to_overall_mean(series)
	                                                         : ratio_to_cycle_mean(series);
	normalize_to_unit_mean(out.factors);
	return out;
}

std::vector<double> deseasonalize(const SeasonalSeries &series, const SeasonalFactors &factors) {
	std::vector<double> out(series.size());
	for (std::size_t k = 1; k <= series.size(); ++k) {
		out[k - 1] = series.at(k) / factors.factor(series.season(k));
	}
	return out;
}

std::size_t min_length(int period, Core core) noexcept {
	const std::size_t core_min = core == Core::Gm11 ? gm::kMinLength : dgm::kMinLength;
	return std::max(2 * static_cast<std::size_t>(period), core_min);
}

SeasonalFactorFit fit_sfgm(const SeasonalSeries &series) {
	return fit_with(series, Core::Gm11, FactorMethod::RatioToOverallMean);
}

SeasonalFactorFit fit_sgm(const SeasonalSeries &series) {
	return fit_with(series, Core::Dgm11, FactorMethod::RatioToCycleMean);
}

std::vector<double> forecast(const SeasonalFactorFit &fit, std::size_t horizon) {
	auto core = std::visit(
	    [horizon](const auto &f) {
		    if constexpr (std::is_same_v<std::decay_t<decltype(f)>, gm::Gm11Fit>) {
			    return gm::forecast(f, horizon);
		    } else {
			    return dgm::forecast(f, horizon);
		    }
	    },
	    fit.core_fit);
	for (std::size_t step = 1; step <= horizon; ++step) {
		core[step - 1] *= fit.factors.factor(season_of(fit.n + step, fit.period, fit.phase0));
	}
	return core;
}

} // namespace greycast::seasonal
