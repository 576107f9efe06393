#include "isorep/gns.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace isorep {

double RepCertificates::max_err() const {
    return std::max({unitarity_err, homomorphism_err, reconstruction_err,
                     gram_err, translation_err});
}

UnitaryRep::UnitaryRep(IsometryGroup group, std::vector<Eigen::MatrixXd> matrices,
                       Eigen::VectorXd cyclic_vector, RepCertificates certificates)
    : group_(std::move(group)),
      matrices_(std::move(matrices)),
      cyclic_vector_(std::move(cyclic_vector)),
      certificates_(certificates),
      reconstruction_tol_(std::max(certificates.max_err(), 1e-15)) {}

const Eigen::MatrixXd& UnitaryRep::matrix(int element_index) const {
    if (element_index < 0 || element_index >= group_.order())
        throw IndexOutOfRange(element_index);
    return matrices_[element_index];
}

namespace {

// Cayley table restricted to left translations: sigma[g][i] = index(g * g_i).
std::vector<std::vector<int>> left_translations(const IsometryGroup& group) {
    const int n = group.order();
    std::vector<std::vector<int>> sigma(n, std::vector<int>(n));
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < n; ++i) sigma[g][i] = group.compose_index(g, i);
    return sigma;
}

RepCertificates measure(const IsometryGroup& group,
                        const std::vector<Eigen::MatrixXd>& rho,
                        const Eigen::VectorXd& v,
                        const std::vector<double>& target_p,
                        const std::vector<std::vector<int>>& sigma) {
    const int n = group.order();
    const int dim = static_cast<int>(v.size());
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(dim, dim);

    RepCertificates cert;
    for (int g = 0; g < n; ++g) {
        cert.unitarity_err = std::max(
            cert.unitarity_err,
            (rho[g] * rho[g].transpose() - eye).cwiseAbs().maxCoeff());
        cert.reconstruction_err =
            std::max(cert.reconstruction_err,
                     std::abs(target_p[g] - v.dot(rho[g] * v)));
    }
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            cert.homomorphism_err =
                std::max(cert.homomorphism_err,
                         (rho[g] * rho[h] - rho[sigma[g][h]]).cwiseAbs().maxCoeff());
    return cert;
}

}  // namespace

UnitaryRep gns_build(const IsometryGroup& group, const GroupKernel& p_grp,
                     double rank_tol, double psd_tol) {
    const int n = group.order();
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);

    GramMatrix gram = gram_on_group(p_grp, group, all);
    const PsdCertificate psd = check_psd(gram, psd_tol);
    if (!psd.is_psd) throw NotPSD(psd.min_eigenvalue);
    const Eigen::MatrixXd& P = gram.entries();

    const auto sigma = left_translations(group);
    // Left-translation invariance of P holds exactly: entry (i, j) depends
    // only on the group element g_i^-1 g_j, which (g g_i)^-1 (g g_j) is.
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (P(sigma[g][i], sigma[g][j]) != P(i, j))
                    throw Error("group kernel Gram matrix is not translation-invariant");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(P);
    const Eigen::VectorXd& eigs = solver.eigenvalues();  // ascending
    const double lambda_max = eigs(n - 1);
    if (!(lambda_max > 0.0))
        throw Error("group kernel is identically null, nothing to represent");

    int r = 0;
    for (int i = 0; i < n; ++i)
        if (eigs(i) > rank_tol * lambda_max) ++r;

    const Eigen::MatrixXd Qr = solver.eigenvectors().rightCols(r);
    const Eigen::VectorXd lam = eigs.tail(r);
    const Eigen::VectorXd sqrt_lam = lam.cwiseSqrt();
    // Rows of Phi are the generator images phi_i; Phi Phi^T reproduces P.
    const Eigen::MatrixXd Phi = Qr * sqrt_lam.asDiagonal();

    std::vector<Eigen::MatrixXd> rho(n);
    rho[0] = Eigen::MatrixXd::Identity(r, r);
    double translation_err = 0.0;
    for (int g = 0; g < n; ++g) {
        if (g != 0) {
            // B.row(sigma(i)) = Qr.row(i); rho(g) = D^{1/2} Qr^T B D^{-1/2}
            // is the matrix of left translation in eigenbasis coordinates.
            Eigen::MatrixXd B(n, r);
            for (int i = 0; i < n; ++i) B.row(sigma[g][i]) = Qr.row(i);
            const Eigen::MatrixXd M = Qr.transpose() * B;
            rho[g] = sqrt_lam.asDiagonal() * M * sqrt_lam.cwiseInverse().asDiagonal();
        }
        Eigen::MatrixXd translated(n, r);
        for (int i = 0; i < n; ++i) translated.row(i) = Phi.row(sigma[g][i]);
        translation_err = std::max(
            translation_err,
            (Phi * rho[g].transpose() - translated).cwiseAbs().maxCoeff());
    }
    const double translation_gate =
        std::max(1e-6, 10.0 * std::sqrt(rank_tol * lambda_max * n));
    if (translation_err > translation_gate)
        throw RankDeficientTranslation(translation_err);

    const Eigen::VectorXd v = Phi.row(0).transpose();

    std::vector<double> target_p(n);
    for (int g = 0; g < n; ++g) target_p[g] = p_grp(group.element(g));

    RepCertificates cert = measure(group, rho, v, target_p, sigma);
    cert.translation_err = translation_err;
    cert.gram_err = (Phi * Phi.transpose() - P).cwiseAbs().maxCoeff();

    return UnitaryRep(group, std::move(rho), v, cert);
}

double reconstruct(const UnitaryRep& rep, int element_index) {
    const Eigen::VectorXd& v = rep.cyclic_vector();
    return v.dot(rep.matrix(element_index) * v);
}

double reconstruct(const UnitaryRep& rep, const Isometry& g) {
    return reconstruct(rep, rep.group().index_of(g));
}

UnitaryRep direct_sum(std::span<const UnitaryRep> reps) {
    if (reps.empty()) throw EmptyList("direct_sum of an empty list");
    const IsometryGroup& group = reps.front().group();
    for (const UnitaryRep& rep : reps)
        if (!rep.group().same_group(group))
            throw MismatchedGroup("direct_sum over different groups");

    const int n = group.order();
    const int m = static_cast<int>(reps.size());
    int total = 0;
    for (const UnitaryRep& rep : reps) total += rep.dim();

    std::vector<Eigen::MatrixXd> rho(n, Eigen::MatrixXd::Zero(total, total));
    Eigen::VectorXd v = Eigen::VectorXd::Zero(total);
    const double weight = 1.0 / std::sqrt(static_cast<double>(m));
    int offset = 0;
    for (const UnitaryRep& rep : reps) {
        const int d = rep.dim();
        for (int g = 0; g < n; ++g) rho[g].block(offset, offset, d, d) = rep.matrix(g);
        v.segment(offset, d) = weight * rep.cyclic_vector();
        offset += d;
    }

    // The summed representation certifies against the mean of the summands'
    // reconstruction values, which is what its cyclic vector realizes.
    std::vector<double> target_p(n, 0.0);
    for (int g = 0; g < n; ++g) {
        double sum = 0.0;
        for (const UnitaryRep& rep : reps) sum += reconstruct(rep, g);
        target_p[g] = sum / m;
    }

    const auto sigma = left_translations(group);
    RepCertificates cert = measure(group, rho, v, target_p, sigma);
    double gram = 0.0, trans = 0.0;
    for (const UnitaryRep& rep : reps) {
        gram = std::max(gram, rep.certificates().gram_err);
        trans = std::max(trans, rep.certificates().translation_err);
    }
    cert.gram_err = gram;
    cert.translation_err = trans;

    return UnitaryRep(group, std::move(rho), std::move(v), cert);
}

}  // namespace isorep
