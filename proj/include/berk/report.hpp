#ifndef BERK_REPORT_HPP
#define BERK_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "berk/classifier.hpp"
#include "berk/instances.hpp"

namespace berk {

using json = nlohmann::json;

json series_to_json(const Series& s);
Series series_from_json(const json& j);

json berkpoint_to_json(const BerkPoint& p);
BerkPoint berkpoint_from_json(const json& j);

json hull_to_json(const HullTree& h);
HullTree hull_from_json(const json& j);

json label_to_json(const CaseLabel& l);
CaseLabel label_from_json(const json& j);

json locus_to_json(const LocusDescription& d);
LocusDescription locus_from_json(const json& j);

json roots_to_json(const CriticalPair& p);
CriticalPair roots_from_json(const json& j);

json cross_to_json(const CrossReport& r);

json sample_to_json(const TraceSample& s);
TraceSample sample_from_json(const json& j);

// the cmd_locus document
struct LocusReport {
    CaseLabel label;
    std::string mode;  // symbolic | oracle | both
    LocusDescription locus;
    CriticalPair roots;
    std::vector<TraceSample> samples;
    std::optional<CrossReport> cross;
};

json locus_report_to_json(const LocusReport& r);
LocusReport locus_report_from_json(const json& j);

// instance files: exactly one of coefficients / critical_data / pq
struct InstanceFile {
    CubicCoefficients coeffs;
    Rat working_span = kDefaultWorkingPrecision;
};
InstanceFile load_instance(const json& j);

// DOT rendering of a locus (bold edges = locus membership)
std::string locus_to_dot(const LocusDescription& d);

}  // namespace berk

#endif
