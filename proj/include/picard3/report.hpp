#pragma once

// Console and machine-readable rendering of results.  Each render function
// has a text form and a structured (JSON) form; both carry the same verdicts,
// the JSON additionally freezes field names for downstream tooling.

#include <string>
#include <vector>

#include "picard3/cohomology.hpp"
#include "picard3/collection.hpp"
#include "picard3/frobenius.hpp"

namespace picard3 {

enum class ReportFormat { text, structured };

std::string render_verify(const VerifyReport& rep, ReportFormat fmt, double elapsed_ms);

std::string render_split(const Fan& fan, const Vec& cls, const Int& p, const FrobeniusSplit& split,
                         ReportFormat fmt);

std::string render_cohomology(const Fan& fan, const Vec& cls, const CohomologyResult& result,
                              ReportFormat fmt);

std::string render_forbidden(const Fan& fan, const std::vector<ForbiddenSubset>& subsets,
                             ReportFormat fmt);

std::string render_collection(const FamilyParams& params, const std::vector<DivisorClass>& collection,
                              const std::vector<DiffFamily>& diffs, const FullnessReport& fullness,
                              ReportFormat fmt);

}  // namespace picard3
