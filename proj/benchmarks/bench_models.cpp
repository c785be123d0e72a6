#include "greycast/dggm.hpp"
#include "greycast/dgsm.hpp"
#include "greycast/experiments.hpp"
#include "greycast/models.hpp"
#include "greycast/seasonal_factor_models.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

using namespace greycast;

namespace {

SeasonalSeries make_series(std::size_t n, int period) {
	std::mt19937_64 rng(42);
	std::uniform_real_distribution<double> noise(-0.05, 0.05);
	std::vector<double> values(n);
	for (std::size_t k = 0; k < n; ++k) {
		const double season = 1.0 + 0.3 * std::sin(2.0 * 3.141592653589793 * static_cast<double>(k % period) / period);
		values[k] = 100.0 * std::exp(0.005 * static_cast<double>(k)) * season * (1.0 + noise(rng));
	}
	return SeasonalSeries(std::move(values), period);
}

} // namespace

static void BM_DgsmFit(benchmark::State &state) {
	const auto series = make_series(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)));
	for (auto _ : state) {
		benchmark::DoNotOptimize(dgsm::fit(series));
	}
	state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DgsmFit)->Args({12, 4})->Args({32, 4})->Args({120, 12})->Args({480, 12})->Args({2000, 52});

static void BM_DgsmForecast(benchmark::State &state) {
	const auto fit = dgsm::fit(make_series(120, 12));
	for (auto _ : state) {
		benchmark::DoNotOptimize(dgsm::forecast(fit, static_cast<std::size_t>(state.range(0))));
	}
}
BENCHMARK(BM_DgsmForecast)->Arg(12)->Arg(120);

static void BM_BaselineFit(benchmark::State &state) {
	const auto series = make_series(120, 12);
	const auto kind = static_cast<ModelKind>(state.range(0));
	for (auto _ : state) {
		benchmark::DoNotOptimize(fit_model(kind, series));
	}
	state.SetLabel(std::string(model_name(kind)));
}
BENCHMARK(BM_BaselineFit)->DenseRange(0, 5);

static void BM_Robustness(benchmark::State &state) {
	const auto series = make_series(120, 12);
	const std::vector<ModelKind> models{ModelKind::Dgsm, ModelKind::Sfgm, ModelKind::Dggm};
	for (auto _ : state) {
		benchmark::DoNotOptimize(experiments::run_robustness(series, 12, models));
	}
}
BENCHMARK(BM_Robustness)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
