#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isorep/errors.hpp"
#include "isorep/isometry.hpp"
#include "isorep/metric.hpp"

namespace isorep {

/// A scalar kernel p: distance -> real, with admissibility metadata.
///
/// An admissible kernel has p(0) = 1 and, for every eps > 0, a certified
/// value sup{p(x): |x| >= eps} strictly below 1. The Gaussian carries the
/// closed-form certificate exp(-eps^2); table kernels certify only over
/// their tabulated distances, and sup_gap returns nullopt when no entry
/// covers [eps, inf) or the sampled sup reaches 1.
class KernelFunction {
public:
    /// p(x) = exp(-x^2).
    static KernelFunction gaussian();

    /// Kernel tabulated as (distance, value) pairs. Evaluation requires an
    /// exact distance match within 1e-12 and throws TableLookupError
    /// otherwise.
    static KernelFunction from_table(std::vector<std::pair<double, double>> entries,
                                     std::string name = "table");

    double operator()(double x) const { return eval_(x); }
    const std::string& name() const { return name_; }

    /// Whether p(0) = 1 (within 1e-12 for table kernels).
    bool unit_at_zero() const { return unit_at_zero_; }

    /// Certified sup{p(x): |x| >= eps}, guaranteed < 1 when present.
    std::optional<double> sup_gap(double eps) const { return gap_(eps); }

    /// max |p(x)| over the kernel's sample grid; > 1 flags an inadmissible
    /// kernel (positive-definite functions with p(0)=1 are bounded by 1).
    double max_abs_sampled() const;

private:
    KernelFunction() = default;
    std::function<double(double)> eval_;
    std::function<std::optional<double>(double)> gap_;
    std::string name_;
    bool unit_at_zero_ = false;
    std::vector<double> sample_grid_;
};

/// A real-valued function on group elements, such as the orbit kernel
/// g -> p(d(g a, a)). Assumed inverse-symmetric: f(g) = f(g^-1), which holds
/// for every kernel built in this library.
class GroupKernel {
public:
    GroupKernel(std::string name, std::function<double(const Isometry&)> fn)
        : name_(std::move(name)), fn_(std::move(fn)) {}

    double operator()(const Isometry& g) const { return fn_(g); }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::function<double(const Isometry&)> fn_;
};

struct PsdCertificate {
    double min_eigenvalue = 0.0;
    double tolerance = 0.0;
    bool is_psd = false;
};

/// A symmetric kernel matrix with provenance and an optional PSD
/// certificate attached by check_psd.
class GramMatrix {
public:
    GramMatrix(Eigen::MatrixXd entries, std::string source)
        : entries_(std::move(entries)), source_(std::move(source)) {}

    const Eigen::MatrixXd& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.rows()); }
    const std::string& source() const { return source_; }
    const std::optional<PsdCertificate>& psd_certificate() const { return psd_; }

private:
    Eigen::MatrixXd entries_;
    std::string source_;
    std::optional<PsdCertificate> psd_;

    friend PsdCertificate check_psd(GramMatrix&, double);
};

inline constexpr double kDefaultPsdTol = 1e-9;
inline constexpr double kDefaultRankTol = 1e-10;

/// Minimum eigenvalue of the symmetric matrix via full eigendecomposition.
/// is_psd iff min_eigenvalue >= -tol * (1 + max|entry|). The certificate is
/// attached to the matrix and returned. Throws NotSymmetric if entries are
/// not exactly symmetric.
PsdCertificate check_psd(GramMatrix& m, double tol = kDefaultPsdTol);

/// entries[i][j] = p(d(a_i, a_j)) over the selected point indices
/// (duplicates allowed). Exactly symmetric by construction.
GramMatrix gram_on_points(const KernelFunction& p, const FiniteMetricSpace& space,
                          std::span<const int> indices);

/// entries[i][j] = p_grp(g_i^-1 g_j) over the selected element indices.
///
/// The kernel is evaluated once per distinct group element, on the
/// representative min(k, inverse(k)) of each inverse pair; for
/// inverse-symmetric kernels this only reorders float rounding and makes
/// the matrix exactly symmetric and exactly invariant under left
/// translation of the index set.
GramMatrix gram_on_group(const GroupKernel& p_grp, const IsometryGroup& group,
                         std::span<const int> element_indices);

/// Gaussian Gram matrix (exp(-|x_i - x_j|^2)) of a point cloud, tolerating
/// duplicate points (unlike cloud_to_metric).
GramMatrix gaussian_gram(const PointCloud& cloud);

struct LemmaPosTrialFailure {
    int trial = 0;
    double min_eigenvalue = 0.0;
};

struct LemmaPosReport {
    std::string claim;
    int dim = 0;
    int n_points = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    double min_eigenvalue_overall = 0.0;
    std::vector<LemmaPosTrialFailure> failures;

    bool pass() const { return failures.empty(); }
};

/// Draws `trials` point clouds with coordinates uniform in [-1,1]^k
/// (deterministic from seed), builds the Gaussian Gram matrix of each and
/// runs check_psd. Failures are collected in the report, never thrown.
LemmaPosReport verify_lemma_pos(int k, int n, int trials, std::uint64_t seed,
                                double tol = kDefaultPsdTol);

struct BochnerGridPoint {
    double x = 0.0;
    double expected = 0.0;   // exp(-pi x^2)
    double real_part = 0.0;  // trapezoid integral, real part
    double imag_part = 0.0;
    double deviation = 0.0;  // |real_part - expected|
};

struct BochnerReport {
    double halfwidth = 0.0;
    double step = 0.0;
    std::vector<BochnerGridPoint> points;
    double max_deviation = 0.0;
    double max_imag = 0.0;
};

/// Checks numerically that exp(-pi x^2) is its own Fourier transform:
/// integrates exp(-2 pi i x y) exp(-pi y^2) dy by the trapezoid rule over
/// [-halfwidth, halfwidth] and compares with exp(-pi x^2) at each grid
/// point. Imaginary parts must vanish by symmetry.
BochnerReport bochner_self_duality_check(std::span<const double> grid_points,
                                         double quadrature_halfwidth,
                                         double quadrature_step);

}  // namespace isorep
