#pragma once

// Reference implementations used only by tests. They follow the textbook
// definitions directly and share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

/// Mean absolute pairwise difference by the O(m^2) double sum.
inline double gini_naive(const std::vector<double>& v) {
    const std::size_t m = v.size();
    long double sum = 0.0L;
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) {
            if (j != k) {
                sum += std::fabs(static_cast<long double>(v[j]) - static_cast<long double>(v[k]));
            }
        }
    }
    return static_cast<double>(sum / (static_cast<long double>(m) * static_cast<long double>(m - 1)));
}

/// Composite Simpson rule on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    if (panels % 2 != 0) {
        ++panels;
    }
    const double h = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) {
        s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

inline double phi(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

/// Phi(x) by integrating the density; the lower limit -40 is exact in double.
inline double normal_cdf(double x) {
    if (x > 0.0) {
        return 1.0 - normal_cdf(-x);
    }
    const double lo = -40.0;
    return simpson(phi, lo, x, 40000);
}

/// Quantile by bisection on the integrated cdf.
inline double normal_quantile(double p) {
    double lo = -12.0;
    double hi = 12.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (normal_cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// E|c - b Z'| for Z' ~ N(0, 1) by quadrature, split at the kink z' = c/b.
inline double folded_mean(double c, double b) {
    if (b == 0.0) {
        return std::fabs(c);
    }
    const auto f = [&](double z) { return std::fabs(c - b * z) * phi(z); };
    const double kink = c / b;
    const double lo = std::min(kink, 0.0) - 12.0;
    const double hi = std::max(kink, 0.0) + 12.0;
    return simpson(f, lo, kink, 4000) + simpson(f, kink, hi, 4000);
}

/// psi^2 = 4/b sum_j E[A_j(Z)^2] with both expectations by quadrature:
/// the inner one over Z' for each node z, the outer one over Z.
inline double psi_sq_quadrature(const std::vector<double>& sigma) {
    const std::size_t b = sigma.size();
    double total = 0.0;
    for (std::size_t j = 0; j < b; ++j) {
        const auto a_sq = [&](double z) {
            double acc = 0.0;
            for (std::size_t k = 0; k < b; ++k) {
                if (k == j) {
                    continue;
                }
                const double s = std::sqrt(sigma[j] * sigma[j] + sigma[k] * sigma[k]);
                acc += folded_mean(sigma[j] * z, sigma[k]) - s * std::sqrt(2.0 / std::numbers::pi);
            }
            acc /= static_cast<double>(b - 1);
            return acc * acc * phi(z);
        };
        total += simpson(a_sq, -10.0, 10.0, 800);
    }
    return 4.0 * total / static_cast<double>(b);
}

/// Neighbour-centred subsampling estimate written out with explicit loops over
/// the observations of each window.
inline double kappa_tilde_naive(const std::vector<double>& x, std::size_t len, double c0) {
    const auto n = static_cast<long>(x.size());
    const auto l = static_cast<long>(len);
    const long count = n / l;
    const double width = c0 * static_cast<double>(len);
    double total = 0.0;
    for (long j = 0; j < count; ++j) {
        const long a = j * l;
        const long e = a + l;
        double block = 0.0;
        for (long i = a; i < e; ++i) {
            block += x[static_cast<std::size_t>(i)];
        }
        double nb_sum = 0.0;
        double nb_weight = 0.0;
        for (long i = 0; i < n; ++i) {
            double dist = 0.0;  // distance in positions from the block edge
            if (i < a) {
                dist = static_cast<double>(a - i);
            } else if (i >= e) {
                dist = static_cast<double>(i - e + 1);
            } else {
                continue;
            }
            double w = 0.0;
            if (dist <= width + 1e-9) {
                w = 1.0;
            } else if (dist < width + 1.0) {
                w = width + 1.0 - dist;
            }
            nb_sum += w * x[static_cast<std::size_t>(i)];
            nb_weight += w;
        }
        total += std::fabs(block - static_cast<double>(l) * nb_sum / nb_weight);
    }
    return std::sqrt(2.0 * c0 / (1.0 + 2.0 * c0)) * std::sqrt(std::numbers::pi / 2.0) * total /
           (static_cast<double>(count) * std::sqrt(static_cast<double>(len)));
}

/// Batch-means long run variance with batches of length `batch`.
inline double batch_means_lrv(const std::vector<double>& x, std::size_t batch) {
    const std::size_t k = x.size() / batch;
    double grand = 0.0;
    for (std::size_t i = 0; i < k * batch; ++i) {
        grand += x[i];
    }
    grand /= static_cast<double>(k * batch);
    double ss = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        double m = 0.0;
        for (std::size_t i = j * batch; i < (j + 1) * batch; ++i) {
            m += x[i];
        }
        m /= static_cast<double>(batch);
        ss += (m - grand) * (m - grand);
    }
    return static_cast<double>(batch) * ss / static_cast<double>(k - 1);
}

}  // namespace oracle
