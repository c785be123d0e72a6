#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace greycast {

enum class ErrorCode {
	InvalidSeries,
	InvalidAccumulation,
	InsufficientData,
	SingularDesign,
	InvalidHorizon,
	InvalidActual,
	AlignmentError,
	IncompleteCycleCoverage,
	ParseError,
	OrderError,
	FormatError,
	UnknownModel,
	InvalidArgument,
	IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every error raised by the library. Carries a stable code so the
/// CLI can emit machine-readable failures.
class Error : public std::runtime_error {
public:
	Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}

	ErrorCode code() const noexcept { return code_; }

private:
	ErrorCode code_;
};

class InsufficientDataError : public Error {
public:
	InsufficientDataError(std::size_t required, std::size_t actual, const std::string &what_for,
	                      std::vector<std::size_t> group_counts = {});

	std::size_t required() const noexcept { return required_; }
	std::size_t actual() const noexcept { return actual_; }
	/// Per-season observation counts, only populated for grouped models.
	const std::vector<std::size_t> &group_counts() const noexcept { return group_counts_; }

private:
	std::size_t required_;
	std::size_t actual_;
	std::vector<std::size_t> group_counts_;
};

class SingularDesignError : public Error {
public:
	explicit SingularDesignError(double condition_estimate);

	double condition_estimate() const noexcept { return condition_; }

private:
	double condition_;
};

/// Dataset parse failures; row is the 1-based line number in the source file.
class DatasetError : public Error {
public:
	DatasetError(ErrorCode code, std::size_t row, const std::string &message);

	std::size_t row() const noexcept { return row_; }

private:
	std::size_t row_;
};

} // namespace greycast
