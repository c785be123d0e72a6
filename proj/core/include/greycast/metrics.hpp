#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace greycast::metrics {

/// Absolute percent error |predicted - actual| / actual * 100.
/// Throws Error(InvalidActual) unless actual > 0.
double ape(double actual, double predicted);

/// Mean APE in percent over aligned sequences.
double mape(std::span<const double> actual, std::span<const double> predicted);
double rmse(std::span<const double> actual, std::span<const double> predicted);

/// Accuracy over a fit window followed by a test window.
struct EvalReport {
	std::vector<double> ape; // one entry per actual observation, fit window first
	std::optional<double> mapes;
	std::optional<double> mapep;
	std::optional<double> rmses;
	std::optional<double> rmsep;
	std::size_t n_fit = 0;
	std::size_t n_test = 0;

	/// Largest APE inside the test window, if any.
	std::optional<double> max_ape_test() const;
};

/// `actual` holds n_fit + n_test observations; `fitted` aligns with the first
/// n_fit and `predicted` with the remaining n_test. Either window may be
/// empty, in which case its statistics are absent. Throws
/// Error(AlignmentError) on length mismatch or when both windows are empty.
EvalReport evaluate(std::span<const double> actual, std::span<const double> fitted,
                    std::span<const double> predicted);

/// Half-away-from-zero rounding to two decimals, for display only.
double round2(double value);

} // namespace greycast::metrics
