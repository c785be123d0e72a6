#include "greycast/least_squares.hpp"

#include "greycast/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace greycast {

LeastSquaresSolution solve_least_squares(const DesignMatrix &design, std::span<const double> target) {
	const auto rows = static_cast<Eigen::Index>(design.rows());
	const auto cols = static_cast<Eigen::Index>(design.cols());
	if (static_cast<std::size_t>(rows) != target.size()) {
		throw Error(ErrorCode::InvalidArgument, "design rows and target length differ");
	}
	if (rows < cols || cols == 0) {
		throw SingularDesignError(std::numeric_limits<double>::infinity());
	}

	using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
	const Eigen::Map<const RowMajor> a(design.data().data(), rows, cols);
	const Eigen::Map<const Eigen::VectorXd> y(target.data(), rows);

	// Equilibrate columns so the accumulated column does not dominate the
	// dummy columns in the pivot ratio.
	Eigen::VectorXd scale = a.colwise().norm().transpose();
	for (Eigen::Index j = 0; j < cols; ++j) {
		if (!(scale(j) > 0.0) || !std::isfinite(scale(j))) {
			throw SingularDesignError(std::numeric_limits<double>::infinity());
		}
	}
	const Eigen::MatrixXd scaled = a * scale.cwiseInverse().asDiagonal();

	Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
	const auto r_diag = qr.matrixR().diagonal().cwiseAbs();
	const double largest = r_diag(0);
	const double smallest = r_diag(cols - 1);
	const double condition = smallest > 0.0 ? largest / smallest : std::numeric_limits<double>::infinity();
	if (!std::isfinite(condition) || condition > kMaxConditionEstimate) {
		throw SingularDesignError(condition);
	}

	const Eigen::VectorXd scaled_solution = qr.solve(y);
	LeastSquaresSolution out;
	out.coefficients.resize(static_cast<std::size_t>(cols));
	for (Eigen::Index j = 0; j < cols; ++j) {
		out.coefficients[static_cast<std::size_t>(j)] = scaled_solution(j) / scale(j);
	}
	out.condition_estimate = condition;
	return out;
}

std::vector<double> normal_residual(const DesignMatrix &design, std::span<const double> target,
                                    std::span<const double> coefficients) {
	std::vector<double> residual(design.rows());
	for (std::size_t r = 0; r < design.rows(); ++r) {
		double fitted = 0.0;
		for (std::size_t c = 0; c < design.cols(); ++c) {
			fitted += design(r, c) * coefficients[c];
		}
		residual[r] = target[r] - fitted;
	}
	std::vector<double> out(design.cols(), 0.0);
	for (std::size_t r = 0; r < design.rows(); ++r) {
		for (std::size_t c = 0; c < design.cols(); ++c) {
			out[c] += design(r, c) * residual[r];
		}
	}
	return out;
}

} // namespace greycast
