#include "isorep/faithful.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace isorep {

GroupKernel orbit_kernel(const KernelFunction& p, const FiniteMetricSpace& space,
                         int basepoint) {
    if (basepoint < 0 || basepoint >= space.size())
        throw IndexOutOfRange(basepoint);
    return GroupKernel(
        "orbit of " + space.labels()[basepoint] + " under " + p.name(),
        [p, space, basepoint](const Isometry& g) {
            return p(space.dist(g(basepoint), basepoint));
        });
}

GroupKernel averaged_kernel(const KernelFunction& p, const FiniteMetricSpace& space,
                            std::span<const int> basepoints) {
    if (basepoints.empty()) throw EmptyBasepoints();
    for (int a : basepoints)
        if (a < 0 || a >= space.size()) throw IndexOutOfRange(a);
    std::vector<int> pts(basepoints.begin(), basepoints.end());
    const double n = static_cast<double>(pts.size());
    return GroupKernel(
        "average of " + std::to_string(pts.size()) + " orbit kernels under " +
            p.name(),
        [p, space, pts, n](const Isometry& g) {
            double sum = 0.0;
            for (int a : pts) sum += p(space.dist(g(a), a));
            return sum / n;
        });
}

std::vector<int> neighborhood_members(const IsometryGroup& group,
                                      const NeighborhoodSpec& spec) {
    if (spec.basepoints.empty()) throw EmptyBasepoints();
    if (!(spec.epsilon > 0.0)) throw Error("epsilon must be positive");
    const FiniteMetricSpace& space = group.space();
    for (int a : spec.basepoints)
        if (a < 0 || a >= space.size()) throw IndexOutOfRange(a);

    std::vector<int> members;
    for (int gi = 0; gi < group.order(); ++gi) {
        const Isometry& g = group.element(gi);
        bool inside = true;
        for (int a : spec.basepoints)
            if (!(space.dist(g(a), a) < spec.epsilon)) {
                inside = false;
                break;
            }
        if (inside) members.push_back(gi);
    }
    return members;
}

SeparationCertificate separation_certificate(const IsometryGroup& group,
                                             const KernelFunction& p,
                                             const NeighborhoodSpec& spec) {
    const auto gap = p.sup_gap(spec.epsilon);
    if (!gap) throw NoGapCertified(spec.epsilon);

    SeparationCertificate cert;
    cert.spec = spec;
    cert.delta = 1.0 - *gap;
    cert.n = static_cast<int>(spec.basepoints.size());
    cert.bound = 1.0 - cert.delta / cert.n;
    cert.members_of_u = neighborhood_members(group, spec);

    const GroupKernel t = averaged_kernel(p, group.space(), spec.basepoints);
    std::vector<char> in_u(group.order(), 0);
    for (int gi : cert.members_of_u) in_u[gi] = 1;

    bool any_outside = false;
    double sup = 0.0;
    for (int gi = 0; gi < group.order(); ++gi) {
        if (in_u[gi]) continue;
        const double value = t(group.element(gi));
        sup = any_outside ? std::max(sup, value) : value;
        any_outside = true;
    }
    if (any_outside) {
        cert.achieved_sup = sup;
        cert.pass = sup <= cert.bound + 1e-12;
    } else {
        cert.pass = true;  // vacuous: U covers the whole group
    }
    return cert;
}

FaithfulResult faithful_representation(const IsometryGroup& group,
                                       const KernelFunction& p,
                                       std::span<const NeighborhoodSpec> specs,
                                       double rank_tol) {
    if (specs.empty()) throw EmptyList("faithful_representation needs at least one spec");

    FaithfulnessReport report;
    std::vector<UnitaryRep> summands;
    summands.reserve(specs.size());

    for (const NeighborhoodSpec& spec : specs) {
        FaithfulSpecReport entry;
        entry.certificate = separation_certificate(group, p, spec);

        const GroupKernel t = averaged_kernel(p, group.space(), spec.basepoints);
        UnitaryRep rep = gns_build(group, t, rank_tol);
        entry.gns_dim = rep.dim();
        entry.gns_certificates = rep.certificates();
        entry.transfer_tol = 1e-8;

        if (entry.certificate.achieved_sup) {
            entry.margin = 1.0 - *entry.certificate.achieved_sup;
            std::vector<char> in_u(group.order(), 0);
            for (int gi : entry.certificate.members_of_u) in_u[gi] = 1;
            for (int gi = 0; gi < group.order(); ++gi) {
                if (in_u[gi]) continue;
                const double seen = std::abs(1.0 - reconstruct(rep, gi));
                if (seen < *entry.margin - entry.transfer_tol) {
                    entry.transfer_pass = false;
                    break;
                }
            }
        }
        report.specs.push_back(std::move(entry));
        summands.push_back(std::move(rep));
    }

    UnitaryRep total = direct_sum(summands);

    // Injectivity of the direct sum: every pair of distinct elements must
    // be separated in max-entry norm. Reported, not thrown: spec families
    // that keep U larger than {e} legitimately fail to separate.
    report.injective = true;
    report.min_matrix_separation = std::numeric_limits<double>::infinity();
    for (int g = 0; g < group.order() && report.injective; ++g)
        for (int h = g + 1; h < group.order(); ++h) {
            const double sep =
                (total.matrix(g) - total.matrix(h)).cwiseAbs().maxCoeff();
            report.min_matrix_separation =
                std::min(report.min_matrix_separation, sep);
            if (sep <= 1e-6) {
                report.injective = false;
                report.witness_pair = {g, h};
                break;
            }
        }
    if (group.order() == 1) {
        report.min_matrix_separation = 0.0;  // no pairs; injective vacuously
    }

    return FaithfulResult{std::move(total), std::move(report)};
}

NeighborhoodSpec default_spec(const FiniteMetricSpace& space) {
    NeighborhoodSpec spec;
    spec.basepoints.resize(space.size());
    std::iota(spec.basepoints.begin(), spec.basepoints.end(), 0);
    spec.epsilon = space.size() > 1 ? space.min_dist() / 2.0 : 1.0;
    return spec;
}

}  // namespace isorep
