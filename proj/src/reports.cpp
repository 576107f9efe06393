#include "isorep/reports.hpp"

namespace isorep {

namespace {

nlohmann::json matrix_json(const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json vector_json(const Eigen::VectorXd& v) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

}  // namespace

void to_json(nlohmann::json& j, const PsdCertificate& cert) {
    j = {{"min_eigenvalue", cert.min_eigenvalue},
         {"tolerance", cert.tolerance},
         {"is_psd", cert.is_psd}};
}

void to_json(nlohmann::json& j, const LemmaPosTrialFailure& f) {
    j = {{"trial", f.trial}, {"min_eigenvalue", f.min_eigenvalue}};
}

void to_json(nlohmann::json& j, const LemmaPosReport& report) {
    j = {{"claim", report.claim},
         {"dim", report.dim},
         {"n_points", report.n_points},
         {"trials", report.trials},
         {"seed", report.seed},
         {"tolerance", report.tolerance},
         {"min_eigenvalue_overall", report.min_eigenvalue_overall},
         {"failures", report.failures},
         {"pass", report.pass()}};
}

void to_json(nlohmann::json& j, const BochnerGridPoint& pt) {
    j = {{"x", pt.x},
         {"expected", pt.expected},
         {"real_part", pt.real_part},
         {"imag_part", pt.imag_part},
         {"deviation", pt.deviation}};
}

void to_json(nlohmann::json& j, const BochnerReport& report) {
    j = {{"halfwidth", report.halfwidth},
         {"step", report.step},
         {"points", report.points},
         {"max_deviation", report.max_deviation},
         {"max_imag", report.max_imag}};
}

void to_json(nlohmann::json& j, const RepCertificates& cert) {
    j = {{"unitarity_err", cert.unitarity_err},
         {"homomorphism_err", cert.homomorphism_err},
         {"reconstruction_err", cert.reconstruction_err},
         {"gram_err", cert.gram_err},
         {"translation_err", cert.translation_err}};
}

nlohmann::json space_json(const FiniteMetricSpace& space) {
    return {{"n", space.size()},
            {"labels", space.labels()},
            {"min_dist", space.min_dist()},
            {"max_dist", space.max_dist()}};
}

nlohmann::json group_json(const IsometryGroup& group) {
    nlohmann::json elements = nlohmann::json::array();
    for (const Isometry& g : group.elements()) elements.push_back(g.to_string());
    return {{"order", group.order()}, {"elements", std::move(elements)}};
}

nlohmann::json gram_json(const GramMatrix& gram) {
    nlohmann::json j = {{"size", gram.size()}, {"source", gram.source()}};
    if (gram.psd_certificate()) j["psd_certificate"] = *gram.psd_certificate();
    return j;
}

nlohmann::json certificate_json(const SeparationCertificate& cert,
                                const IsometryGroup& group) {
    nlohmann::json members = nlohmann::json::array();
    for (int gi : cert.members_of_u)
        members.push_back(group.element(gi).to_string());
    nlohmann::json j = {{"basepoints", cert.spec.basepoints},
                        {"epsilon", cert.spec.epsilon},
                        {"delta", cert.delta},
                        {"n", cert.n},
                        {"bound", cert.bound},
                        {"members_of_U", std::move(members)},
                        {"pass", cert.pass}};
    if (cert.achieved_sup)
        j["achieved_sup"] = *cert.achieved_sup;
    else
        j["achieved_sup"] = nullptr;
    return j;
}

nlohmann::json rep_json(const UnitaryRep& rep) {
    nlohmann::json elements = nlohmann::json::array();
    for (int g = 0; g < rep.group().order(); ++g)
        elements.push_back({{"perm", rep.group().element(g).perm},
                            {"matrix", matrix_json(rep.matrix(g))}});
    return {{"dim", rep.dim()},
            {"elements", std::move(elements)},
            {"cyclic_vector", vector_json(rep.cyclic_vector())},
            {"certificates", rep.certificates()},
            {"reconstruction_tol", rep.reconstruction_tol()}};
}

nlohmann::json faithfulness_json(const FaithfulnessReport& report,
                                 const IsometryGroup& group) {
    nlohmann::json specs = nlohmann::json::array();
    for (const FaithfulSpecReport& entry : report.specs) {
        nlohmann::json j = {{"certificate", certificate_json(entry.certificate, group)},
                            {"transfer_pass", entry.transfer_pass},
                            {"transfer_tol", entry.transfer_tol},
                            {"gns", {{"dim", entry.gns_dim},
                                     {"certificates", entry.gns_certificates}}}};
        if (entry.margin)
            j["margin"] = *entry.margin;
        else
            j["margin"] = nullptr;
        specs.push_back(std::move(j));
    }
    nlohmann::json j = {{"specs", std::move(specs)},
                        {"injective", report.injective},
                        {"min_matrix_separation", report.min_matrix_separation}};
    if (report.witness_pair)
        j["witness_pair"] = {group.element(report.witness_pair->first).to_string(),
                             group.element(report.witness_pair->second).to_string()};
    return j;
}

}  // namespace isorep
