#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>
#include <vector>

#include "isorep/errors.hpp"

namespace isorep {

/// A finite metric space: labelled points with a validated distance matrix.
///
/// Construction goes through validate_metric (or the loaders below), which
/// checks the metric axioms and canonicalizes storage: the upper triangle is
/// mirrored into the lower one and the diagonal is set to exact zero, so the
/// stored matrix is exactly symmetric even when the input carried
/// representation noise within tolerance. Immutable after construction and
/// cheap to copy.
class FiniteMetricSpace {
public:
    int size() const { return static_cast<int>(data_->dist.rows()); }
    double dist(int i, int j) const { return data_->dist(i, j); }
    const Eigen::MatrixXd& dist_matrix() const { return data_->dist; }
    const std::vector<std::string>& labels() const { return data_->labels; }

    /// Comparison tolerance for distances: 1e-12 * max entry.
    double tolerance() const { return data_->tolerance; }
    double max_dist() const { return data_->max_dist; }
    /// Smallest positive distance; 0 for a single-point space.
    double min_dist() const { return data_->min_dist; }

    bool same_space(const FiniteMetricSpace& other) const {
        return data_ == other.data_;
    }

private:
    struct Data {
        Eigen::MatrixXd dist;
        std::vector<std::string> labels;
        double tolerance = 0.0;
        double max_dist = 0.0;
        double min_dist = 0.0;
    };
    explicit FiniteMetricSpace(std::shared_ptr<const Data> data)
        : data_(std::move(data)) {}
    std::shared_ptr<const Data> data_;

    friend FiniteMetricSpace validate_metric(const Eigen::MatrixXd&,
                                             std::vector<std::string>);
};

/// Points in R^k; finite-dimensional stand-in for a Hilbert space.
struct PointCloud {
    std::vector<Eigen::VectorXd> points;
    int dim = 0;

    PointCloud(std::vector<Eigen::VectorXd> pts, int k);
    int size() const { return static_cast<int>(points.size()); }
};

/// Checks the metric axioms and returns a validated space.
///
/// Symmetry and the zero diagonal are checked within 1e-12 * max(dist) to
/// absorb representation error of ingested decimal text; the triangle
/// inequality gets the same additive slack. Throws the first violated axiom
/// with its witnessing indices: NotSymmetric(i,j), NonzeroDiagonal(i),
/// ZeroOffDiagonal(i,j), TriangleViolation(i,j,k).
FiniteMetricSpace validate_metric(const Eigen::MatrixXd& dist,
                                  std::vector<std::string> labels = {});

/// Euclidean distance matrix of a cloud; throws DuplicatePoints if two
/// points coincide. The result always passes validate_metric.
FiniteMetricSpace cloud_to_metric(const PointCloud& cloud,
                                  std::vector<std::string> labels = {});

enum class SpaceFormat { Json, Csv };

/// Parses a space from disk and validates it. JSON: {"labels": [...],
/// "dist": [[...]]} with labels optional; CSV: n lines of n comma-separated
/// numbers, no header (labels are generated as p0, p1, ...).
FiniteMetricSpace load_space(const std::string& path, SpaceFormat format);

/// Writes a space in the given format with 17 significant digits, so that
/// load_space(save_space(s)) reproduces labels and distances exactly.
void save_space(const FiniteMetricSpace& space, const std::string& path,
                SpaceFormat format);

/// Picks Csv for a ".csv" extension, Json otherwise.
SpaceFormat format_from_extension(const std::string& path);

}  // namespace isorep
