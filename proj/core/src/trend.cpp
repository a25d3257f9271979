#include "hetmean/changepoint.hpp"
#include "hetmean/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace hetmean {

TrendFit fit_polynomial_trend(std::span<const double> x, std::size_t degree, const TestConfig& cfg) {
    const std::size_t n = x.size();
    if (degree > 10) {
        throw InputError("polynomial degree must be at most 10, got " + std::to_string(degree));
    }
    if (degree + 1 > n) {
        throw InputError("degree " + std::to_string(degree) + " needs at least " +
                         std::to_string(degree + 1) + " observations");
    }
    const auto rows = static_cast<Eigen::Index>(n);
    const auto cols = static_cast<Eigen::Index>(degree + 1);
    Eigen::MatrixXd basis(rows, cols);
    Eigen::VectorXd y(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double t = static_cast<double>(i + 1) / static_cast<double>(n);
        double p = 1.0;
        for (Eigen::Index d = 0; d < cols; ++d) {
            basis(i, d) = p;
            p *= t;
        }
        y(i) = x[static_cast<std::size_t>(i)];
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
    if (qr.rank() < cols) {
        throw InputError("design matrix is rank deficient for degree " + std::to_string(degree));
    }
    const Eigen::VectorXd coef = qr.solve(y);
    const Eigen::VectorXd fitted = basis * coef;

    TrendFit fit;
    fit.degree = degree;
    fit.coefficients.assign(coef.data(), coef.data() + coef.size());
    fit.fitted.assign(fitted.data(), fitted.data() + fitted.size());
    fit.residuals.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        fit.residuals[i] = x[i] - fit.fitted[i];
    }
    // Residuals at rounding level mean the polynomial reproduces the data.
    double scale = 0.0;
    double spread = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        scale = std::max(scale, std::abs(x[i]));
        spread = std::max(spread, std::abs(fit.residuals[i]));
    }
    if (spread <= 1e-12 * scale) {
        fit.residual_test_error = "residuals vanish: the polynomial fits the data exactly";
        return fit;
    }
    try {
        fit.residual_test = test_mean_constancy(fit.residuals, cfg);
    } catch (const InputError& e) {
        fit.residual_test_error = e.what();
    } catch (const DegenerateDataError& e) {
        fit.residual_test_error = e.what();
    }
    return fit;
}

}  // namespace hetmean
