#include "isorep/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace isorep {

namespace {

std::vector<std::string> generated_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return labels;
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

PointCloud::PointCloud(std::vector<Eigen::VectorXd> pts, int k)
    : points(std::move(pts)), dim(k) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != k) {
            throw Error("point " + std::to_string(i) + " has dimension " +
                        std::to_string(points[i].size()) + ", expected " +
                        std::to_string(k));
        }
    }
}

FiniteMetricSpace validate_metric(const Eigen::MatrixXd& dist,
                                  std::vector<std::string> labels) {
    const int n = static_cast<int>(dist.rows());
    if (dist.cols() != n || n == 0) {
        throw Error("distance matrix must be square and nonempty, got " +
                    std::to_string(dist.rows()) + "x" + std::to_string(dist.cols()));
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
        throw Error("got " + std::to_string(labels.size()) + " labels for " +
                    std::to_string(n) + " points");
    }
    if (labels.empty()) labels = generated_labels(n);

    const double max_entry = dist.cwiseAbs().maxCoeff();
    const double tol = 1e-12 * max_entry;

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(dist(i, j) - dist(j, i)) > tol) throw NotSymmetric(i, j);
    for (int i = 0; i < n; ++i)
        if (std::abs(dist(i, i)) > tol) throw NonzeroDiagonal(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(dist(i, j) > tol)) throw ZeroOffDiagonal(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (dist(i, k) > dist(i, j) + dist(j, k) + tol)
                    throw TriangleViolation(i, j, k);

    // Canonical storage: exact symmetry, exact zero diagonal.
    Eigen::MatrixXd canon(n, n);
    for (int i = 0; i < n; ++i) {
        canon(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) canon(i, j) = canon(j, i) = dist(i, j);
    }

    auto data = std::make_shared<FiniteMetricSpace::Data>();
    data->dist = std::move(canon);
    data->labels = std::move(labels);
    data->max_dist = max_entry;
    data->tolerance = tol;
    data->min_dist = 0.0;
    if (n > 1) {
        double m = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m = std::min(m, data->dist(i, j));
        data->min_dist = m;
    }
    return FiniteMetricSpace(std::move(data));
}

FiniteMetricSpace cloud_to_metric(const PointCloud& cloud,
                                  std::vector<std::string> labels) {
    const int n = cloud.size();
    if (n == 0) throw Error("point cloud is empty");
    Eigen::MatrixXd dist(n, n);
    for (int i = 0; i < n; ++i) {
        dist(i, i) = 0.0;
        for (int j = i + 1; j < n; ++j) {
            const double d = (cloud.points[i] - cloud.points[j]).norm();
            if (d == 0.0) throw DuplicatePoints(i, j);
            dist(i, j) = dist(j, i) = d;
        }
    }
    return validate_metric(dist, std::move(labels));
}

namespace {

FiniteMetricSpace parse_json_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ":byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object() || !doc.contains("dist"))
        throw ParseError(path, "expected an object with a \"dist\" field");
    const auto& rows = doc["dist"];
    if (!rows.is_array() || rows.empty())
        throw ParseError(path, "\"dist\" must be a nonempty array of rows");
    const int n = static_cast<int>(rows.size());
    Eigen::MatrixXd dist(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError(path + ":dist row " + std::to_string(i),
                             "expected " + std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j) {
            if (!row[j].is_number())
                throw ParseError(path + ":dist[" + std::to_string(i) + "][" +
                                     std::to_string(j) + "]",
                                 "expected a number");
            dist(i, j) = row[j].get<double>();
        }
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const auto& ls = doc["labels"];
        if (!ls.is_array())
            throw ParseError(path + ":labels", "expected an array of strings");
        for (const auto& l : ls) {
            if (!l.is_string())
                throw ParseError(path + ":labels", "expected an array of strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return validate_metric(dist, std::move(labels));
}

FiniteMetricSpace parse_csv_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() && in.eof()) break;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                std::size_t pos = 0;
                const double v = std::stod(cell, &pos);
                while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos])))
                    ++pos;
                if (pos != cell.size()) throw std::invalid_argument("trailing junk");
                row.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(path + ":line " + std::to_string(lineno),
                                 "cannot parse \"" + cell + "\" as a number");
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(path, "file is empty");
    const int n = static_cast<int>(rows.size());
    Eigen::MatrixXd dist(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw ParseError(path + ":line " + std::to_string(i + 1),
                             "expected " + std::to_string(n) + " values, got " +
                                 std::to_string(rows[i].size()));
        for (int j = 0; j < n; ++j) dist(i, j) = rows[i][j];
    }
    return validate_metric(dist);
}

}  // namespace

FiniteMetricSpace load_space(const std::string& path, SpaceFormat format) {
    return format == SpaceFormat::Json ? parse_json_space(path)
                                       : parse_csv_space(path);
}

void save_space(const FiniteMetricSpace& space, const std::string& path,
                SpaceFormat format) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    const int n = space.size();
    if (format == SpaceFormat::Json) {
        out << "{\n  \"labels\": [";
        for (int i = 0; i < n; ++i) {
            out << (i ? ", " : "") << nlohmann::json(space.labels()[i]).dump();
        }
        out << "],\n  \"dist\": [\n";
        for (int i = 0; i < n; ++i) {
            out << "    [";
            for (int j = 0; j < n; ++j)
                out << (j ? ", " : "") << fmt17(space.dist(i, j));
            out << (i + 1 < n ? "],\n" : "]\n");
        }
        out << "  ]\n}\n";
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                out << (j ? "," : "") << fmt17(space.dist(i, j));
            out << "\n";
        }
    }
    if (!out.good()) throw Error("write to " + path + " failed");
}

SpaceFormat format_from_extension(const std::string& path) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
        return SpaceFormat::Csv;
    return SpaceFormat::Json;
}

}  // namespace isorep
