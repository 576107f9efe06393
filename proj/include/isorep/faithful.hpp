#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "isorep/gns.hpp"
#include "isorep/kernel.hpp"

namespace isorep {

/// An identity neighborhood U = {g : d(g a_i, a_i) < epsilon for all i},
/// given by its basepoints and radius. Membership uses strict inequality;
/// a displacement exactly equal to epsilon falls outside U.
struct NeighborhoodSpec {
    std::vector<int> basepoints;
    double epsilon = 0.0;
};

/// A verified instance of the separation bound: the averaged kernel t
/// satisfies t(g) <= 1 - delta/n outside U, where delta is the kernel's
/// certified gap at epsilon and n the number of basepoints.
struct SeparationCertificate {
    NeighborhoodSpec spec;
    double delta = 0.0;
    int n = 0;
    double bound = 0.0;                 // 1 - delta/n
    std::optional<double> achieved_sup; // max of t over G \ U; nullopt if empty
    std::vector<int> members_of_u;      // element indices
    bool pass = false;                  // vacuously true when G \ U is empty

    bool vacuous() const { return !achieved_sup.has_value(); }
};

/// The orbit kernel p_a: g -> p(d(g a, a)). Positive-definite on the group
/// whenever p is admissible on the space, since its Gram matrix on any
/// element tuple equals the point Gram matrix of the orbit.
GroupKernel orbit_kernel(const KernelFunction& p, const FiniteMetricSpace& space,
                         int basepoint);

/// t(g) = average of p_{a_k}(g) over the basepoints.
GroupKernel averaged_kernel(const KernelFunction& p, const FiniteMetricSpace& space,
                            std::span<const int> basepoints);

/// Element indices of U for the given spec.
std::vector<int> neighborhood_members(const IsometryGroup& group,
                                      const NeighborhoodSpec& spec);

/// Evaluates t on every element, splits the group into U and its
/// complement, and verifies achieved_sup <= bound (+1e-12 slack). Throws
/// NoGapCertified when the kernel cannot certify a gap at spec.epsilon.
SeparationCertificate separation_certificate(const IsometryGroup& group,
                                             const KernelFunction& p,
                                             const NeighborhoodSpec& spec);

/// Per-spec entry of the faithfulness report. margin is
/// a = 1 - achieved_sup, the separation constant the representation must
/// realize; transfer_pass records whether |1 - <rho(g)v, v>| >= margin - tol
/// held for every g outside U.
struct FaithfulSpecReport {
    SeparationCertificate certificate;
    std::optional<double> margin;
    bool transfer_pass = true;
    double transfer_tol = 0.0;
    int gns_dim = 0;
    RepCertificates gns_certificates;
};

struct FaithfulnessReport {
    std::vector<FaithfulSpecReport> specs;
    bool injective = false;
    /// Present when two distinct elements were NOT separated (> 1e-6 apart
    /// in max-entry norm); injectivity failure is reported, never thrown.
    std::optional<std::pair<int, int>> witness_pair;
    double min_matrix_separation = 0.0;
};

struct FaithfulResult {
    UnitaryRep rep;
    FaithfulnessReport report;
};

/// For each spec: separation certificate, GNS representation of the
/// averaged kernel, and the reconstruction-margin check. The final
/// representation is the direct sum over specs. Errors from
/// separation_certificate and gns_build propagate.
FaithfulResult faithful_representation(const IsometryGroup& group,
                                       const KernelFunction& p,
                                       std::span<const NeighborhoodSpec> specs,
                                       double rank_tol = kDefaultRankTol);

/// The CLI-default spec family: every point as a basepoint with epsilon at
/// half the minimum pairwise distance, so U = {identity} and the group is
/// separated at full resolution. A single-point space gets epsilon 1.
NeighborhoodSpec default_spec(const FiniteMetricSpace& space);

}  // namespace isorep
