#pragma once

#include <json.hpp>

#include "isorep/faithful.hpp"
#include "isorep/gns.hpp"
#include "isorep/kernel.hpp"
#include "isorep/metric.hpp"

namespace isorep {

// JSON views of the certificate and report types. Key order is nlohmann's
// sorted order, so serialized reports are byte-deterministic.

void to_json(nlohmann::json& j, const PsdCertificate& cert);
void to_json(nlohmann::json& j, const LemmaPosTrialFailure& f);
void to_json(nlohmann::json& j, const LemmaPosReport& report);
void to_json(nlohmann::json& j, const BochnerGridPoint& pt);
void to_json(nlohmann::json& j, const BochnerReport& report);
void to_json(nlohmann::json& j, const RepCertificates& cert);

nlohmann::json space_json(const FiniteMetricSpace& space);
nlohmann::json group_json(const IsometryGroup& group);
nlohmann::json gram_json(const GramMatrix& gram);
nlohmann::json certificate_json(const SeparationCertificate& cert,
                                const IsometryGroup& group);
nlohmann::json rep_json(const UnitaryRep& rep);
nlohmann::json faithfulness_json(const FaithfulnessReport& report,
                                 const IsometryGroup& group);

}  // namespace isorep
