#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace greycast {

/// Dense row-major matrix used for small regression designs.
class DesignMatrix {
public:
	DesignMatrix() = default;
	DesignMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

	std::size_t rows() const noexcept { return rows_; }
	std::size_t cols() const noexcept { return cols_; }
	double &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
	std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
	std::span<const double> data() const noexcept { return data_; }

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<double> data_;
};

struct LeastSquaresSolution {
	std::vector<double> coefficients;
	/// Ratio of extreme pivots of the column-equilibrated R factor.
	double condition_estimate = 0.0;
};

/// Condition estimates above this are rejected as singular.
inline constexpr double kMaxConditionEstimate = 1e12;

/// Minimises ||y - A p||_2 through a column-pivoted Householder QR of the
/// column-equilibrated design. Throws SingularDesignError when A is rank
/// deficient or its condition estimate exceeds kMaxConditionEstimate.
LeastSquaresSolution solve_least_squares(const DesignMatrix &design, std::span<const double> target);

/// A^T (y - A p), used to check first-order optimality.
std::vector<double> normal_residual(const DesignMatrix &design, std::span<const double> target,
                                    std::span<const double> coefficients);

} // namespace greycast
