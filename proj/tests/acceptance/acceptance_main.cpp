// Acceptance runner: one PASS/FAIL line per criterion, INFO lines for
// diagnostics that are not criteria. Exit status is non-zero if any
// criterion fails.

#include "cli.hpp"
#include "greycast/dataset.hpp"
#include "greycast/experiments.hpp"
#include "greycast/metrics.hpp"
#include "greycast/models.hpp"
#include "support/generators.hpp"
#include "support/property_checks.hpp"
#include "support/published_tables.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace greycast;

namespace {

const std::string kDataDir = GREYCAST_TEST_DATA_DIR;

// Published statistics carry two decimals.
constexpr double kTableTolerance = 0.01;
// Slack for binary representation of the decimal tolerance itself.
constexpr double kCompareSlack = 1e-9;
// "Zero" MAPEP on periodic input, in percent.
constexpr double kZeroMapep = 1e-8;

int g_failed = 0;
int g_passed = 0;

void report(bool ok, const std::string &id, const std::string &detail) {
	std::printf("[%s] %-10s %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
	(ok ? g_passed : g_failed) += 1;
}

void info(const std::string &id, const std::string &detail) { std::printf("[INFO] %-10s %s\n", id.c_str(), detail.c_str()); }

std::string fmt(const char *pattern, auto... args) {
	char buf[512];
	std::snprintf(buf, sizeof buf, pattern, args...);
	return buf;
}

bool within(double computed, double published) {
	return std::abs(computed - published) <= kTableTolerance + kCompareSlack;
}

// Raw cell text, kept to recover how many decimals were printed.
std::vector<std::vector<std::string>> raw_cells(const std::string &path) {
	std::ifstream in(path);
	std::vector<std::vector<std::string>> rows;
	bool header = true;
	for (std::string line; std::getline(in, line);) {
		if (line.empty() || line[0] == '#') {
			continue;
		}
		if (header) {
			header = false;
			continue;
		}
		std::vector<std::string> cells;
		std::stringstream ss(line);
		for (std::string cell; std::getline(ss, cell, ',');) {
			cells.push_back(cell);
		}
		rows.push_back(cells);
	}
	return rows;
}

double half_unit(const std::string &cell) {
	const auto dot = cell.find('.');
	const int decimals = dot == std::string::npos ? 0 : static_cast<int>(cell.size() - dot - 1);
	return 0.5 * std::pow(10.0, -decimals);
}

// Range of |p - a| / a * 100 over a in [a0 - da, a0 + da], p in [p0 - dp, p0 + dp].
std::pair<double, double> ape_range(double a0, double da, double p0, double dp) {
	double lo = 1e300, hi = 0.0;
	for (double a : {a0 - da, a0 + da}) {
		for (double p : {p0 - dp, p0 + dp}) {
			const double v = std::abs(p - a) / a * 100.0;
			lo = std::min(lo, v);
			hi = std::max(hi, v);
		}
	}
	if (p0 + dp >= a0 - da && p0 - dp <= a0 + da) {
		lo = 0.0;
	}
	return {lo, hi};
}

void criterion_tables() {
	const auto start = std::chrono::steady_clock::now();
	for (const auto &table : support::published_tables()) {
		const std::string path = kDataDir + "/" + std::string(table.file);
		const auto t = io::read_forecast_table(path);
		const auto cells = raw_cells(path);
		const std::string tag(table.file.substr(10, table.file.size() - 14));

		std::vector<std::string> row_failures;
		std::vector<std::string> diagnostics;
		for (std::size_t m = 0; m < support::kTableModels.size(); ++m) {
			const std::string model(support::kTableModels[m]);
			const auto &pred = t.column(model);
			const auto r = metrics::evaluate(t.actual, {}, pred);
			const bool ok = within(*r.mapep, table.mapep[m]) && within(*r.rmsep, table.rmsep[m]);
			report(ok, "1." + tag,
			       fmt("%-6s MAPEP %.4f (published %.2f)  RMSEP %.4f (published %.2f)  tol %.2f", model.c_str(),
			           *r.mapep, table.mapep[m], *r.rmsep, table.rmsep[m], kTableTolerance));

			for (std::size_t row = 0; row < r.ape.size(); ++row) {
				const double published = table.ape[row][m];
				if (within(r.ape[row], published)) {
					continue;
				}
				row_failures.push_back(fmt("%s/%s %.4f vs %.2f", t.labels[row].c_str(), model.c_str(), r.ape[row],
				                           published));
				const auto &c = cells[row];
				const auto [lo, hi] =
				    ape_range(t.actual[row], half_unit(c[1]), pred[row], half_unit(c[2 + m]));
				const bool explained = hi >= published - 0.005 && lo <= published + 0.005;
				diagnostics.push_back(fmt("%s %s/%s: inputs rounded to printed digits give APE in [%.4f, %.4f]; "
				                          "published %.2f is %s",
				                          tag.c_str(), t.labels[row].c_str(), model.c_str(), lo, hi, published,
				                          explained ? "inside (printing precision)" : "outside (not a rounding effect)"));
				if (!explained) {
					const double a = t.actual[row];
					diagnostics.push_back(fmt("%s %s/%s: published APE implies a prediction of %.2f or %.2f, printed %s",
					                          tag.c_str(), t.labels[row].c_str(), model.c_str(),
					                          a * (1.0 - published / 100.0), a * (1.0 + published / 100.0),
					                          c[2 + m].c_str()));
				}
			}
		}
		std::string detail = fmt("%zu rows x 6 models, %zu outside tol %.2f", t.labels.size(), row_failures.size(),
		                         kTableTolerance);
		for (const auto &f : row_failures) {
			detail += "; " + f;
		}
		report(row_failures.empty(), "1." + tag + ".ape", detail);
		for (const auto &d : diagnostics) {
			info("1." + tag + ".ape", d);
		}
	}
	const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
	report(seconds < 1.0, "1.runtime", fmt("table fixtures evaluated in %.4f s (limit 1 s)", seconds));
}

void property_line(const std::string &id, const std::string &name, const support::CheckResult &r) {
	std::string detail = fmt("%s: %d trials, worst scaled error %.3g (tol %.0e)", name.c_str(), r.trials, r.worst,
	                         r.tolerance);
	if (!r.passed()) {
		detail += fmt(", %d failures, first: ", r.failures) + r.first_failure;
	}
	report(r.passed(), id, detail);
}

void criterion_properties() {
	property_line("2.p1", "s=1 DGSM vs DGM(1,1) params/fitted/forecast", support::check_degeneracy(1001, 50));
	property_line("2.p2", "refit on fitted output, s in {2,3,4,12}", support::check_unbiasedness(1002, 50));
	property_line("2.p3", "periodic series, lengths 2s..6s: alpha=1, zero residuals",
	              support::check_periodic_exactness(1003, 50));
	property_line("2.p4", "cycle identity and geometric drift over fitted+forecast",
	              support::check_cycle_identity(1004, 50));
	property_line("2.ols", "planted recovery and normal-equations oracle", support::check_ols_oracle(1005, 50));
	property_line("2.closed", "closed forms vs recursion, 100 parameter draws", support::check_closed_forms(1006, 100));
}

void criterion_robustness() {
	const auto series = io::read_dataset(kDataDir + "/natural_gas_monthly_synthetic.csv");
	const std::vector<ModelKind> models{ModelKind::Dgsm, ModelKind::Sfgm, ModelKind::Dggm};
	const auto r = experiments::run_robustness(series, 12, models);
	const std::size_t want_count[] = {85, 85, 61};
	const std::size_t want_min[] = {24, 24, 48};
	for (std::size_t i = 0; i < r.curves.size(); ++i) {
		const auto &c = r.curves[i];
		bool ok = c.records.size() == want_count[i] && !c.records.empty() &&
		          c.records.front().window_len == want_min[i] && c.records.back().window_len == 108;
		std::size_t scored = 0;
		for (std::size_t k = 0; k < c.records.size(); ++k) {
			const auto &rec = c.records[k];
			ok = ok && rec.first_index + rec.window_len == r.test_first;
			ok = ok && (k == 0 || rec.window_len == c.records[k - 1].window_len + 1);
			scored += rec.mapep.has_value() ? 1 : 0;
		}
		report(ok, "3." + std::string(model_name(c.model)),
		       fmt("n=%zu s=12 h=12: %zu records, lengths %zu..%zu (want %zu, %zu..108), %zu scored, test window "
		           "fixed at %zu..%zu",
		           series.size(), c.records.size(), c.records.empty() ? 0 : c.records.front().window_len,
		           c.records.empty() ? 0 : c.records.back().window_len, want_count[i], want_min[i], scored,
		           r.test_first, series.size()));
	}

	support::Rng rng(3003);
	const SeasonalSeries periodic(support::periodic_series(rng, 120, 12), 12);
	const std::vector<ModelKind> dgsm_only{ModelKind::Dgsm};
	const auto p = experiments::run_robustness(periodic, 12, dgsm_only);
	double worst = 0.0;
	bool all_scored = true;
	for (const auto &rec : p.curves[0].records) {
		all_scored = all_scored && rec.mapep.has_value();
		worst = std::max(worst, rec.mapep.value_or(1e300));
	}
	report(all_scored && worst <= kZeroMapep && p.curves[0].records.size() == 85, "3.periodic",
	       fmt("periodic 120-point series: %zu windows, max MAPEP %.3g%% (zero tol %.0e)", p.curves[0].records.size(),
	           worst, kZeroMapep));
}

std::string run_cli(const std::vector<std::string> &args, int &code) {
	std::ostringstream out, err;
	code = cli::run(args, out, err);
	return out.str() + err.str();
}

std::string slurp(const std::filesystem::path &p) {
	std::ifstream in(p, std::ios::binary);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void criterion_cli() {
	const std::string data = kDataDir + "/natural_gas_monthly_synthetic.csv";
	for (const char *format : {"json", "csv"}) {
		const std::vector<std::string> args{"compare", data, "--horizon", "12", "--model", "dgsm,sfgm,sgm,dggm",
		                                    "--format", format};
		int c1 = 0, c2 = 0;
		const auto a = run_cli(args, c1);
		const auto b = run_cli(args, c2);
		report(c1 == 0 && c2 == 0 && !a.empty() && a == b, std::string("4.") + format,
		       fmt("compare twice on stdout: exit %d/%d, %zu bytes each, identical=%s", c1, c2, a.size(),
		           a == b ? "yes" : "no"));
	}

	const auto dir = std::filesystem::temp_directory_path() / "greycast_acceptance";
	std::filesystem::remove_all(dir);
	std::filesystem::create_directories(dir);
	int c1 = 0, c2 = 0;
	run_cli({"compare", data, "--horizon", "12", "--out", (dir / "a.json").string()}, c1);
	run_cli({"compare", data, "--horizon", "12", "--out", (dir / "b.json").string()}, c2);
	const auto a = slurp(dir / "a.json");
	const auto b = slurp(dir / "b.json");
	report(c1 == 0 && c2 == 0 && !a.empty() && a == b, "4.file",
	       fmt("compare twice to report files: %zu bytes each, identical=%s", a.size(), a == b ? "yes" : "no"));
	std::filesystem::remove_all(dir);
}

} // namespace

int main() {
	unsetenv(cli::kOutputDirEnv);
	std::printf("criterion 1: published accuracy tables\n");
	criterion_tables();
	std::printf("criterion 2: model property suites\n");
	criterion_properties();
	std::printf("criterion 3: shrinking-window experiment shape\n");
	criterion_robustness();
	std::printf("criterion 4: report determinism\n");
	criterion_cli();
	std::printf("%d passed, %d failed\n", g_passed, g_failed);
	return g_failed == 0 ? 0 : 1;
}
