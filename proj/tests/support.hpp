#pragma once

// Shared fixtures for the test suites: independent eigenvalue oracles,
// brute-force isometry enumeration, and the desk-scale test spaces.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include <unistd.h>

#include <Eigen/Core>

#include "isorep/isometry.hpp"
#include "isorep/metric.hpp"

namespace testsupport {

inline bool exact_equal(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           (a.size() == 0 || (a - b).cwiseAbs().maxCoeff() == 0.0);
}

// Closed-form eigenvalues of [[a, b], [b, c]], ascending. Independent of
// any eigensolver library.
inline std::array<double, 2> eig2_sym(double a, double b, double c) {
    const double mean = (a + c) / 2.0;
    const double rad = std::hypot((a - c) / 2.0, b);
    return {mean - rad, mean + rad};
}

// Trigonometric closed form for a symmetric 3x3 matrix, ascending.
inline std::array<double, 3> eig3_sym(const Eigen::Matrix3d& a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    if (p1 == 0.0) {
        std::array<double, 3> d = {a(0, 0), a(1, 1), a(2, 2)};
        std::sort(d.begin(), d.end());
        return d;
    }
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    Eigen::Matrix3d b = a;
    b(0, 0) -= q;
    b(1, 1) -= q;
    b(2, 2) -= q;
    b /= p;
    const double detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double r = std::clamp(detb / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double two_pi_3 = 2.0 * std::numbers::pi / 3.0;
    const double hi = q + 2.0 * p * std::cos(phi);
    const double lo = q + 2.0 * p * std::cos(phi + two_pi_3);
    const double mid = 3.0 * q - hi - lo;
    return {lo, mid, hi};
}

// Every distance-preserving permutation, by exhaustive enumeration of all
// n! candidates in lexicographic order.
inline std::vector<isorep::Isometry> brute_force_isometries(
    const isorep::FiniteMetricSpace& space) {
    const int n = space.size();
    const double tol = space.tolerance();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<isorep::Isometry> out;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (std::abs(space.dist(perm[i], perm[j]) - space.dist(i, j)) > tol)
                    ok = false;
        if (ok) out.push_back(isorep::Isometry{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// --- test spaces --------------------------------------------------------

inline isorep::FiniteMetricSpace single_point_space() {
    Eigen::MatrixXd d(1, 1);
    d(0, 0) = 0.0;
    return isorep::validate_metric(d, {"a"});
}

inline isorep::FiniteMetricSpace two_point_space(double dist = 1.0) {
    Eigen::MatrixXd d(2, 2);
    d << 0.0, dist, dist, 0.0;
    return isorep::validate_metric(d, {"a", "b"});
}

// Vertices of the regular n-gon on the unit circle. Distances are filled
// per chord class (one double per vertex gap), so congruent pairs carry
// the identical double and the dihedral symmetries preserve the matrix
// exactly.
inline isorep::FiniteMetricSpace regular_polygon_space(int n) {
    std::vector<double> chord(n);
    for (int m = 1; m < n; ++m)
        chord[m] = 2.0 * std::sin(std::numbers::pi * std::min(m, n - m) / n);
    Eigen::MatrixXd d(n, n);
    for (int i = 0; i < n; ++i) {
        d(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
            const int gap = std::min(j - i, n - (j - i));
            d(i, j) = d(j, i) = chord[gap];
        }
    }
    return isorep::validate_metric(d);
}

inline isorep::PointCloud regular_polygon_cloud(int n) {
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd p(2);
        const double theta = 2.0 * std::numbers::pi * i / n;
        p << std::cos(theta), std::sin(theta);
        pts.push_back(std::move(p));
    }
    return isorep::PointCloud(std::move(pts), 2);
}

// Pairwise distances 1, 2, 2.5: only the identity preserves them.
inline isorep::FiniteMetricSpace scalene_triangle() {
    Eigen::MatrixXd d(3, 3);
    d << 0.0, 1.0, 2.0,
         1.0, 0.0, 2.5,
         2.0, 2.5, 0.0;
    return isorep::validate_metric(d);
}

inline isorep::FiniteMetricSpace equilateral_triangle_matrix(double side = 1.0) {
    Eigen::MatrixXd d(3, 3);
    d << 0.0, side, side,
         side, 0.0, side,
         side, side, 0.0;
    return isorep::validate_metric(d);
}

inline isorep::FiniteMetricSpace unit_square_with_center() {
    std::vector<Eigen::VectorXd> pts;
    const double coords[5][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
    for (const auto& c : coords) {
        Eigen::VectorXd p(2);
        p << c[0], c[1];
        pts.push_back(std::move(p));
    }
    return isorep::cloud_to_metric(isorep::PointCloud(std::move(pts), 2),
                                   {"c0", "c1", "c2", "c3", "center"});
}

// Unit cube vertices; the isometry group has order 48.
inline isorep::FiniteMetricSpace cube_space() {
    std::vector<Eigen::VectorXd> pts;
    for (int v = 0; v < 8; ++v) {
        Eigen::VectorXd p(3);
        p << (v & 1), ((v >> 1) & 1), ((v >> 2) & 1);
        pts.push_back(std::move(p));
    }
    return isorep::cloud_to_metric(isorep::PointCloud(std::move(pts), 3));
}

// All pairwise distances equal: the full symmetric group.
inline isorep::FiniteMetricSpace simplex_space(int n) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Ones(n, n);
    d.diagonal().setZero();
    return isorep::validate_metric(d);
}

// --- scratch files ------------------------------------------------------

class TempFile {
public:
    explicit TempFile(const std::string& name)
        : path_((std::filesystem::temp_directory_path() /
                 ("isorep_test_" + std::to_string(::getpid()) + "_" + name))
                    .string()) {}
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::string& path() const { return path_; }
    void write(const std::string& text) const {
        std::ofstream out(path_);
        out << text;
    }

private:
    std::string path_;
};

}  // namespace testsupport
