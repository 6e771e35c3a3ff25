#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uncrel/correlations.hpp"
#include "uncrel/diagnostics.hpp"
#include "uncrel/ensembles.hpp"
#include "uncrel/intelligent.hpp"

namespace uncrel {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Parsed problem instance: observables plus a state, with optional
/// tolerance overrides. Complex numbers in JSON are [re, im] pairs.
struct ProblemFile {
    int dim = 0;
    std::vector<Observable> observables;
    std::optional<StateVector> state;
    Tolerances tolerances;
};

/// Throws ParseError naming the offending JSON path.
ProblemFile parse_problem(const std::string& json_text);
ProblemFile parse_problem_file(const std::string& path);

struct PairMoments {
    int i = 0;
    int j = 0;
    CovarianceRecord cov;
    std::optional<double> r;  // absent when a deviation vanishes
};

struct ReportFile {
    std::string version{kToolVersion};
    std::string input_digest;
    std::vector<MomentReport> moments;  // one per observable
    std::vector<PairMoments> pairs;
    std::vector<RelationVerdict> verdicts;
    CriticalReport critical;
    std::optional<CorrelationMatrix> correlation;     // all deviations positive
    std::optional<EntanglementVerdict> entanglement;  // 2 or 3 observables
};

ReportFile build_report(const ProblemFile& problem);

std::string report_to_json(const ReportFile& report);
std::string report_to_text(const ReportFile& report);

std::string survey_to_json(const SurveyStatistics& stats);
std::string intelligent_to_json(const std::vector<IntelligentStateResult>& results);

}  // namespace uncrel
