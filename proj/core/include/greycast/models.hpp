#pragma once

#include "greycast/dggm.hpp"
#include "greycast/dgm.hpp"
#include "greycast/dgsm.hpp"
#include "greycast/gm.hpp"
#include "greycast/seasonal_factor_models.hpp"
#include "greycast/series.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace greycast {

enum class ModelKind { Dgsm, Dgm, Gm, Sfgm, Sgm, Dggm };

/// Lower-case CLI name ("dgsm", "sfgm", ...).
std::string_view model_name(ModelKind kind) noexcept;
/// Display name ("DGSM(1,1)", ...).
std::string_view model_display_name(ModelKind kind) noexcept;
/// Case-insensitive; throws Error(UnknownModel).
ModelKind parse_model(std::string_view name);
const std::vector<ModelKind> &all_models();

/// Shortest training window the model accepts for the given period.
std::size_t min_length(ModelKind kind, int period) noexcept;

struct NamedValue {
	std::string name;
	double value = 0.0;
};

class ModelFit {
public:
	using Detail = std::variant<dgsm::DgsmFit, dgm::Dgm11Fit, gm::Gm11Fit, seasonal::SeasonalFactorFit,
	                            dggm::DggmModel>;

	ModelFit(ModelKind kind, Detail detail) : kind_(kind), detail_(std::move(detail)) {}

	ModelKind kind() const noexcept { return kind_; }
	const Detail &detail() const noexcept { return detail_; }

	const std::vector<double> &fitted() const;
	const std::vector<double> &residuals() const;

	/// Flat parameter list in estimation order.
	std::vector<NamedValue> parameters() const;
	/// One-line summary in the layout of a published parameter table.
	std::string parameter_summary() const;

	/// Values for observations n+1..n+horizon.
	std::vector<double> forecast(std::size_t horizon) const;

private:
	ModelKind kind_;
	Detail detail_;
};

/// Fits the requested model. Non-seasonal models ignore the period.
ModelFit fit_model(ModelKind kind, const SeasonalSeries &series);

} // namespace greycast
