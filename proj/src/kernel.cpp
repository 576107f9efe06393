#include "isorep/kernel.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <random>

namespace isorep {

KernelFunction KernelFunction::gaussian() {
    KernelFunction k;
    k.name_ = "gaussian";
    k.eval_ = [](double x) { return std::exp(-x * x); };
    k.gap_ = [](double eps) -> std::optional<double> {
        if (!(eps > 0.0)) return std::nullopt;
        return std::exp(-eps * eps);  // exp(-x^2) decreases on x >= 0
    };
    k.unit_at_zero_ = true;
    for (int i = 0; i <= 100; ++i) k.sample_grid_.push_back(0.1 * i);
    return k;
}

KernelFunction KernelFunction::from_table(
    std::vector<std::pair<double, double>> entries, std::string name) {
    if (entries.empty()) throw Error("kernel table is empty");
    std::sort(entries.begin(), entries.end());
    KernelFunction k;
    k.name_ = std::move(name);
    for (const auto& [d, v] : entries) {
        (void)v;
        if (d < 0.0) throw Error("kernel table has a negative distance");
        k.sample_grid_.push_back(d);
    }
    auto table = std::make_shared<std::vector<std::pair<double, double>>>(
        std::move(entries));
    k.eval_ = [table](double x) {
        auto it = std::lower_bound(table->begin(), table->end(),
                                   std::make_pair(x - 1e-12, 0.0));
        if (it != table->end() && std::abs(it->first - x) <= 1e-12)
            return it->second;
        throw TableLookupError(x);
    };
    k.gap_ = [table](double eps) -> std::optional<double> {
        if (!(eps > 0.0)) return std::nullopt;
        bool any = false;
        double sup = 0.0;
        for (const auto& [d, v] : *table) {
            if (d >= eps) {
                sup = any ? std::max(sup, v) : v;
                any = true;
            }
        }
        if (!any || sup >= 1.0) return std::nullopt;
        return sup;
    };
    double at_zero = 0.0;
    bool has_zero = false;
    for (const auto& [d, v] : *table)
        if (std::abs(d) <= 1e-12) {
            at_zero = v;
            has_zero = true;
        }
    k.unit_at_zero_ = has_zero && std::abs(at_zero - 1.0) <= 1e-12;
    return k;
}

double KernelFunction::max_abs_sampled() const {
    double m = 0.0;
    for (double x : sample_grid_) m = std::max(m, std::abs(eval_(x)));
    return m;
}

PsdCertificate check_psd(GramMatrix& m, double tol) {
    const auto& a = m.entries();
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a(i, j) != a(j, i)) throw NotSymmetric(i, j);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a,
                                                          Eigen::EigenvaluesOnly);
    PsdCertificate cert;
    cert.min_eigenvalue = solver.eigenvalues().minCoeff();
    cert.tolerance = tol;
    const double scale = 1.0 + a.cwiseAbs().maxCoeff();
    cert.is_psd = cert.min_eigenvalue >= -tol * scale;
    m.psd_ = cert;
    return cert;
}

GramMatrix gram_on_points(const KernelFunction& p, const FiniteMetricSpace& space,
                          std::span<const int> indices) {
    if (indices.empty()) throw Error("point index list is empty");
    for (int idx : indices)
        if (idx < 0 || idx >= space.size()) throw IndexOutOfRange(idx);
    const int m = static_cast<int>(indices.size());
    Eigen::MatrixXd entries(m, m);
    for (int i = 0; i < m; ++i) {
        entries(i, i) = p(space.dist(indices[i], indices[i]));
        for (int j = i + 1; j < m; ++j)
            entries(i, j) = entries(j, i) = p(space.dist(indices[i], indices[j]));
    }
    return GramMatrix(std::move(entries),
                      "kernel " + p.name() + " on " + std::to_string(m) + " points");
}

GramMatrix gram_on_group(const GroupKernel& p_grp, const IsometryGroup& group,
                         std::span<const int> element_indices) {
    if (element_indices.empty()) throw Error("element index list is empty");
    for (int idx : element_indices)
        if (idx < 0 || idx >= group.order())
            throw MismatchedGroup("element index " + std::to_string(idx) +
                                  " is not in a group of order " +
                                  std::to_string(group.order()));
    // One evaluation per distinct element, on the representative of each
    // inverse pair, so entries for h and h^-1 are the identical double.
    std::vector<double> value(group.order(),
                              std::numeric_limits<double>::quiet_NaN());
    std::vector<char> have(group.order(), 0);
    auto canonical_value = [&](int k) {
        const int c = std::min(k, group.inverse_index(k));
        if (!have[c]) {
            value[c] = p_grp(group.element(c));
            have[c] = 1;
        }
        return value[c];
    };

    const int m = static_cast<int>(element_indices.size());
    Eigen::MatrixXd entries(m, m);
    for (int i = 0; i < m; ++i) {
        const int gi_inv = group.inverse_index(element_indices[i]);
        for (int j = 0; j < m; ++j)
            entries(i, j) = canonical_value(group.compose_index(gi_inv, element_indices[j]));
    }
    return GramMatrix(std::move(entries), "group kernel " + p_grp.name() + " on " +
                                              std::to_string(m) + " elements");
}

GramMatrix gaussian_gram(const PointCloud& cloud) {
    const int n = cloud.size();
    if (n == 0) throw Error("point cloud is empty");
    Eigen::MatrixXd entries(n, n);
    for (int i = 0; i < n; ++i) {
        entries(i, i) = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double d2 = (cloud.points[i] - cloud.points[j]).squaredNorm();
            entries(i, j) = entries(j, i) = std::exp(-d2);
        }
    }
    return GramMatrix(std::move(entries),
                      "gaussian kernel on a cloud of " + std::to_string(n) +
                          " points in R^" + std::to_string(cloud.dim));
}

namespace {

// Uniform in [-1, 1], built from raw mt19937_64 output so sequences are
// identical across standard libraries.
double uniform_pm1(std::mt19937_64& rng) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

}  // namespace

LemmaPosReport verify_lemma_pos(int k, int n, int trials, std::uint64_t seed,
                                double tol) {
    if (k < 1 || n < 1 || trials < 1)
        throw Error("verify_lemma_pos needs k, n, trials >= 1");
    LemmaPosReport report;
    report.claim = "gaussian Gram matrices of point clouds are positive semidefinite";
    report.dim = k;
    report.n_points = n;
    report.trials = trials;
    report.seed = seed;
    report.tolerance = tol;
    report.min_eigenvalue_overall = std::numeric_limits<double>::infinity();

    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Eigen::VectorXd> pts;
        pts.reserve(n);
        for (int i = 0; i < n; ++i) {
            Eigen::VectorXd x(k);
            for (int c = 0; c < k; ++c) x(c) = uniform_pm1(rng);
            pts.push_back(std::move(x));
        }
        GramMatrix gram = gaussian_gram(PointCloud(std::move(pts), k));
        const PsdCertificate cert = check_psd(gram, tol);
        report.min_eigenvalue_overall =
            std::min(report.min_eigenvalue_overall, cert.min_eigenvalue);
        if (!cert.is_psd)
            report.failures.push_back({t, cert.min_eigenvalue});
    }
    return report;
}

BochnerReport bochner_self_duality_check(std::span<const double> grid_points,
                                         double quadrature_halfwidth,
                                         double quadrature_step) {
    if (!(quadrature_step > 0.0)) throw Error("quadrature step must be positive");
    if (!(quadrature_halfwidth > 0.0))
        throw Error("quadrature halfwidth must be positive");

    constexpr double pi = 3.14159265358979323846;
    const double L = quadrature_halfwidth;
    const double h = quadrature_step;
    const int steps = static_cast<int>(std::llround(2.0 * L / h));

    BochnerReport report;
    report.halfwidth = L;
    report.step = h;
    for (double x : grid_points) {
        double re = 0.0, im = 0.0;
        for (int j = 0; j <= steps; ++j) {
            const double y = -L + h * j;
            const double w = (j == 0 || j == steps) ? 0.5 : 1.0;
            const double density = std::exp(-pi * y * y);
            const double phase = -2.0 * pi * x * y;
            re += w * density * std::cos(phase);
            im += w * density * std::sin(phase);
        }
        re *= h;
        im *= h;
        BochnerGridPoint pt;
        pt.x = x;
        pt.expected = std::exp(-pi * x * x);
        pt.real_part = re;
        pt.imag_part = im;
        pt.deviation = std::abs(re - pt.expected);
        report.max_deviation = std::max(report.max_deviation, pt.deviation);
        report.max_imag = std::max(report.max_imag, std::abs(im));
        report.points.push_back(pt);
    }
    return report;
}

}  // namespace isorep
