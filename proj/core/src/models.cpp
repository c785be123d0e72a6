#include "greycast/models.hpp"

#include "greycast/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace greycast {

namespace {

template <class... Ts>
struct overloaded : Ts... {
	using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string fmt6(double v) {
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.6g", v);
	return buf;
}

} // namespace

std::string_view model_name(ModelKind kind) noexcept {
	switch (kind) {
	case ModelKind::Dgsm: return "dgsm";
	case ModelKind::Dgm: return "dgm";
	case ModelKind::Gm: return "gm";
	case ModelKind::Sfgm: return "sfgm";
	case ModelKind::Sgm: return "sgm";
	case ModelKind::Dggm: return "dggm";
	}
	return "unknown";
}

std::string_view model_display_name(ModelKind kind) noexcept {
	switch (kind) {
	case ModelKind::Dgsm: return "DGSM(1,1)";
	case ModelKind::Dgm: return "DGM(1,1)";
	case ModelKind::Gm: return "GM(1,1)";
	case ModelKind::Sfgm: return "SFGM(1,1)";
	case ModelKind::Sgm: return "SGM(1,1)";
	case ModelKind::Dggm: return "DGGM(1,1)";
	}
	return "unknown";
}

const std::vector<ModelKind> &all_models() {
	static const std::vector<ModelKind> kinds{ModelKind::Dgsm, ModelKind::Dgm,  ModelKind::Gm,
	                                          ModelKind::Sfgm, ModelKind::Sgm, ModelKind::Dggm};
	return kinds;
}

ModelKind parse_model(std::string_view name) {
	std::string lower(name);
	std::transform(lower.begin(), lower.end(), lower.begin(),
	               [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
	for (auto kind : all_models()) {
		if (model_name(kind) == lower) {
			return kind;
		}
	}
	throw Error(ErrorCode::UnknownModel, "unknown model '" + std::string(name) +
	                                         "' (expected one of dgsm, dgm, gm, sfgm, sgm, dggm)");
}

std::size_t min_length(ModelKind kind, int period) noexcept {
	switch (kind) {
	case ModelKind::Dgsm: return dgsm::min_length(period);
	case ModelKind::Dgm: return dgm::kMinLength;
	case ModelKind::Gm: return gm::kMinLength;
	case ModelKind::Sfgm: return seasonal::min_length(period, seasonal::Core::Gm11);
	case ModelKind::Sgm: return seasonal::min_length(period, seasonal::Core::Dgm11);
	case ModelKind::Dggm: return dggm::min_length(period);
	}
	return 0;
}

const std::vector<double> &ModelFit::fitted() const {
	return std::visit(overloaded{
	                      [](const dgsm::DgsmFit &f) -> const std::vector<double> & { return f.fitted_restored; },
	                      [](const auto &f) -> const std::vector<double> & { return f.fitted; },
	                  },
	                  detail_);
}

const std::vector<double> &ModelFit::residuals() const {
	return std::visit([](const auto &f) -> const std::vector<double> & { return f.residuals; }, detail_);
}

std::vector<NamedValue> ModelFit::parameters() const {
	std::vector<NamedValue> out;
	std::visit(overloaded{
	               [&](const dgsm::DgsmFit &f) {
		               out.push_back({"alpha", f.params.alpha});
		               for (std::size_t i = 0; i < f.params.betas.size(); ++i) {
			               out.push_back({"beta_" + std::to_string(i + 1), f.params.betas[i]});
		               }
	               },
	               [&](const dgm::Dgm11Fit &f) {
		               out.push_back({"beta1", f.params.beta1});
		               out.push_back({"beta2", f.params.beta2});
	               },
	               [&](const gm::Gm11Fit &f) {
		               out.push_back({"a", f.params.a});
		               out.push_back({"b", f.params.b});
	               },
	               [&](const seasonal::SeasonalFactorFit &f) {
		               if (const auto *g = std::get_if<gm::Gm11Fit>(&f.core_fit)) {
			               out.push_back({"a", g->params.a});
			               out.push_back({"b", g->params.b});
		               } else {
			               const auto &d = std::get<dgm::Dgm11Fit>(f.core_fit);
			               out.push_back({"beta1", d.params.beta1});
			               out.push_back({"beta2", d.params.beta2});
		               }
		               const char *prefix = f.core == seasonal::Core::Gm11 ? "I_" : "f_";
		               for (std::size_t i = 0; i < f.factors.factors.size(); ++i) {
			               out.push_back({prefix + std::to_string(i + 1), f.factors.factors[i]});
		               }
	               },
	               [&](const dggm::DggmModel &m) {
		               for (std::size_t i = 0; i < m.groups.size(); ++i) {
			               out.push_back({"a_" + std::to_string(i + 1), m.groups[i].params.a});
			               out.push_back({"b_" + std::to_string(i + 1), m.groups[i].params.b});
		               }
	               },
	           },
	           detail_);
	return out;
}

std::string ModelFit::parameter_summary() const {
	std::string text(model_display_name(kind_));
	text += "  ";
	std::visit(overloaded{
	               [&](const dgsm::DgsmFit &f) {
		               text += "P = [" + fmt6(f.params.alpha);
		               for (double b : f.params.betas) {
			               text += ", " + fmt6(b);
		               }
		               text += "]";
	               },
	               [&](const dgm::Dgm11Fit &f) {
		               text += "D = [" + fmt6(f.params.beta1) + ", " + fmt6(f.params.beta2) + "]";
	               },
	               [&](const gm::Gm11Fit &f) { text += "a = " + fmt6(f.params.a) + ", b = " + fmt6(f.params.b); },
	               [&](const seasonal::SeasonalFactorFit &f) {
		               if (const auto *g = std::get_if<gm::Gm11Fit>(&f.core_fit)) {
			               text += "a = " + fmt6(g->params.a) + ", b = " + fmt6(g->params.b);
			               for (std::size_t i = 0; i < f.factors.factors.size(); ++i) {
				               text += ", I" + std::to_string(i + 1) + " = " + fmt6(f.factors.factors[i]);
			               }
		               } else {
			               const auto &d = std::get<dgm::Dgm11Fit>(f.core_fit);
			               text += "D = [" + fmt6(d.params.beta1) + ", " + fmt6(d.params.beta2) + "]";
			               for (std::size_t i = 0; i < f.factors.factors.size(); ++i) {
				               text += ", f(" + std::to_string(i + 1) + ") = " + fmt6(f.factors.factors[i]);
			               }
		               }
	               },
	               [&](const dggm::DggmModel &m) {
		               for (std::size_t i = 0; i < m.groups.size(); ++i) {
			               text += (i == 0 ? "" : ", ");
			               text += "a_" + std::to_string(i + 1) + " = [" + fmt6(m.groups[i].params.a) + ", " +
			                       fmt6(m.groups[i].params.b) + "]";
		               }
	               },
	           },
	           detail_);
	return text;
}

std::vector<double> ModelFit::forecast(std::size_t horizon) const {
	return std::visit(overloaded{
	                      [&](const dgsm::DgsmFit &f) { return dgsm::forecast(f, horizon); },
	                      [&](const dgm::Dgm11Fit &f) { return dgm::forecast(f, horizon); },
	                      [&](const gm::Gm11Fit &f) { return gm::forecast(f, horizon); },
	                      [&](const seasonal::SeasonalFactorFit &f) { return seasonal::forecast(f, horizon); },
	                      [&](const dggm::DggmModel &m) { return dggm::forecast(m, horizon); },
	                  },
	                  detail_);
}

ModelFit fit_model(ModelKind kind, const SeasonalSeries &series) {
	switch (kind) {
	case ModelKind::Dgsm: return {kind, dgsm::fit(series)};
	case ModelKind::Dgm: return {kind, dgm::fit(series.values())};
	case ModelKind::Gm: return {kind, gm::fit(series.values())};
	case ModelKind::Sfgm: return {kind, seasonal::fit_sfgm(series)};
	case ModelKind::Sgm: return {kind, seasonal::fit_sgm(series)};
	case ModelKind::Dggm: return {kind, dggm::fit(series)};
	}
	throw Error(ErrorCode::UnknownModel, "unhandled model kind");
}

} // namespace greycast
