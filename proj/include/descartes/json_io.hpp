#pragma once

#include <json.hpp>

#include "descartes/certifier.hpp"
#include "descartes/lowdeg.hpp"
#include "descartes/realizer.hpp"

namespace descartes {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Polynomial& p);
Json to_json(const Couple& c);
Json to_json(const Interval& iv);
Json to_json(const RootProfile& r);
Json to_json(const RealizationReport& r);
Json to_json(const DbisCertificate& c);
Json to_json(const SurveyEntry& e);
Json to_json(const std::vector<SurveyEntry>& entries);
Json to_json(const DisconnectWitness& w, bool q1_verified, bool q2_verified);
Json to_json(const ObstructionReport& r);
Json to_json(const SignDeductionReport& r);
Json to_json(const NamedPoint& p);

/// {bounds, resolution, counts, components, case_i_empty, named_points}
Json region_report(const RegionGrid& grid, const CaseIReport& case_i, const ConnectivityReport& conn,
                   const std::vector<NamedPoint>& points);

}  // namespace descartes
