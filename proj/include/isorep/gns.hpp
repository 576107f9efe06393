#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

#include "isorep/isometry.hpp"
#include "isorep/kernel.hpp"

namespace isorep {

/// Residual errors measured on the finished representation, all in
/// max-entry norm. These are the audited certificates: unitarity is
/// |rho(g) rho(g)^T - I|, homomorphism is |rho(g) rho(h) - rho(gh)|,
/// reconstruction is |p(g) - <rho(g)v, v>|, gram is the defect of
/// <phi_i, phi_j> against the kernel Gram matrix, and translation is the
/// defect of rho(g) phi_i against phi_{g i}.
struct RepCertificates {
    double unitarity_err = 0.0;
    double homomorphism_err = 0.0;
    double reconstruction_err = 0.0;
    double gram_err = 0.0;
    double translation_err = 0.0;

    double max_err() const;
};

/// A finite-dimensional orthogonal representation of an isometry group
/// together with the cyclic vector v realizing p(g) = <rho(g)v, v>.
/// rho(identity) is the exact identity matrix by construction.
class UnitaryRep {
public:
    const IsometryGroup& group() const { return group_; }
    int dim() const { return static_cast<int>(cyclic_vector_.size()); }
    const Eigen::MatrixXd& matrix(int element_index) const;
    const std::vector<Eigen::MatrixXd>& matrices() const { return matrices_; }
    const Eigen::VectorXd& cyclic_vector() const { return cyclic_vector_; }
    double reconstruction_tol() const { return reconstruction_tol_; }
    const RepCertificates& certificates() const { return certificates_; }

private:
    UnitaryRep(IsometryGroup group, std::vector<Eigen::MatrixXd> matrices,
               Eigen::VectorXd cyclic_vector, RepCertificates certificates);

    IsometryGroup group_;
    std::vector<Eigen::MatrixXd> matrices_;
    Eigen::VectorXd cyclic_vector_;
    RepCertificates certificates_;
    double reconstruction_tol_ = 0.0;

    friend UnitaryRep gns_build(const IsometryGroup&, const GroupKernel&, double,
                                double);
    friend UnitaryRep direct_sum(std::span<const UnitaryRep>);
};

/// GNS construction on a finite group.
///
/// Builds the Gram matrix P[i][j] = p(g_i^-1 g_j) over all elements,
/// requires it to pass check_psd (NotPSD otherwise), eigendecomposes it and
/// keeps the eigenvalues above rank_tol * lambda_max; discarding the
/// near-null space is the floating-point form of quotienting out the null
/// vectors of the scalar product (g, h) = p(h^-1 g) on the group algebra,
/// and no completion step arises in finite dimension. Generator images
/// phi_i = Lambda^{1/2} (row i of Q) reproduce P as their Gram matrix;
/// rho(g) is the orthogonal map phi_i -> phi_{g i} realized in eigenbasis
/// coordinates, and v = phi_{identity}.
///
/// Throws RankDeficientTranslation if left translation fails to preserve
/// the retained subspace within a gate derived from rank_tol and |G|,
/// which indicates a group kernel that is not genuinely positive-definite
/// at the working precision (e.g. the rank cutoff splits an eigenvalue
/// cluster).
UnitaryRep gns_build(const IsometryGroup& group, const GroupKernel& p_grp,
                     double rank_tol = kDefaultRankTol,
                     double psd_tol = kDefaultPsdTol);

/// <rho(g) v, v>.
double reconstruct(const UnitaryRep& rep, int element_index);
double reconstruct(const UnitaryRep& rep, const Isometry& g);

/// Block-diagonal sum of representations of the same group. The cyclic
/// vector is the concatenation with each block weighted 1/sqrt(m), so
/// reconstruct on the sum is the arithmetic mean of the summands'.
/// Certificates are re-measured on the assembled representation.
UnitaryRep direct_sum(std::span<const UnitaryRep> reps);

}  // namespace isorep
