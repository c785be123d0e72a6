#include "greycast/errors.hpp"

#include <sstream>

namespace greycast {

std::string_view to_string(ErrorCode code) noexcept {
	switch (code) {
	case ErrorCode::InvalidSeries: return "InvalidSeries";
	case ErrorCode::InvalidAccumulation: return "InvalidAccumulation";
	case ErrorCode::InsufficientData: return "InsufficientData";
	case ErrorCode::SingularDesign: return "SingularDesign";
	case ErrorCode::InvalidHorizon: return "InvalidHorizon";
	case ErrorCode::InvalidActual: return "InvalidActual";
	case ErrorCode::AlignmentError: return "AlignmentError";
	case ErrorCode::IncompleteCycleCoverage: return "IncompleteCycleCoverage";
	case ErrorCode::ParseError: return "ParseError";
	case ErrorCode::OrderError: return "OrderError";
	case ErrorCode::FormatError: return "FormatError";
	case ErrorCode::UnknownModel: return "UnknownModel";
	case ErrorCode::InvalidArgument: return "InvalidArgument";
	case ErrorCode::IoError: return "IoError";
	}
	return "Unknown";
}

namespace {

std::string insufficient_message(std::size_t required, std::size_t actual, const std::string &what_for,
                                 const std::vector<std::size_t> &groups) {
	std::ostringstream os;
	os << what_for << " needs at least " << required << " observations, got " << actual;
	if (!groups.empty()) {
		os << " (per-season counts:";
		for (std::size_t i = 0; i < groups.size(); ++i) {
			os << (i == 0 ? " " : ", ") << groups[i];
		}
		os << ")";
	}
	return os.str();
}

} // namespace

InsufficientDataError::InsufficientDataError(std::size_t required, std::size_t actual, const std::string &what_for,
                                             std::vector<std::size_t> group_counts)
    : Error(ErrorCode::InsufficientData, insufficient_message(required, actual, what_for, group_counts)),
      required_(required), actual_(actual), group_counts_(std::move(group_counts)) {}

SingularDesignError::SingularDesignError(double condition_estimate)
    : Error(ErrorCode::SingularDesign,
            "least-squares design is singular or ill-conditioned (condition estimate " +
                std::to_string(condition_estimate) + ")"),
      condition_(condition_estimate) {}

DatasetError::DatasetError(ErrorCode code, std::size_t row, const std::string &message)
    : Error(code, row > 0 ? "line " + std::to_string(row) + ": " + message : message), row_(row) {}

} // namespace greycast
