#include "picard3/report.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace picard3 {

namespace {

using nlohmann::ordered_json;

ordered_json int_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi) return v.str();  // decimal string once past int64
  return ordered_json(v.convert_to<long long>());
}

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const Int& x : v) a.push_back(int_json(x));
  return a;
}

ordered_json cls_json(const DivisorClass& c) { return vec_json({c.e, c.f, c.g}); }

ordered_json classes_json(const std::vector<DivisorClass>& cs) {
  ordered_json a = ordered_json::array();
  for (const DivisorClass& c : cs) a.push_back(cls_json(c));
  return a;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

std::string family_str(const FamilyParams& p) {
  return "X(" + std::to_string(p.n) + "," + std::to_string(p.b) + ")";
}

std::string fan_str(const Fan& fan) {
  if (fan.family) return family_str(*fan.family);
  return "fan (dim " + std::to_string(fan.dimension) + ", " + std::to_string(fan.num_rays()) +
         " rays)";
}

std::string check_line(bool ok, const std::string& what) {
  return std::string(ok ? "[ok]   " : "[FAIL] ") + what + "\n";
}

std::string seconds_str(double elapsed_ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", elapsed_ms / 1000.0);
  return buf;
}

std::string rule_name(KoszulRule r) { return r == KoszulRule::A ? "A" : "B"; }

ordered_json diffs_json(const std::vector<DiffFamily>& diffs) {
  ordered_json a = ordered_json::array();
  for (const DiffFamily& d : diffs) {
    ordered_json j;
    j["f"] = int_json(d.f);
    j["g"] = int_json(d.g);
    j["e_min"] = int_json(d.s_min);
    j["e_max"] = int_json(d.s_max);
    j["observed"] = vec_json(d.observed);
    j["covers_range"] = d.covers_range;
    a.push_back(std::move(j));
  }
  return a;
}

ordered_json fullness_json(const FullnessReport& f) {
  ordered_json j;
  j["generates"] = f.generates;
  ordered_json trace = ordered_json::array();
  for (const KoszulStep& s : f.trace) {
    ordered_json js;
    js["rule"] = rule_name(s.rule);
    js["k"] = int_json(s.k);
    js["conclusion"] = cls_json(s.conclusion);
    trace.push_back(std::move(js));
  }
  j["trace"] = std::move(trace);
  j["missing"] = classes_json(f.missing);
  return j;
}

ordered_json saturation_json(const SaturationReport& s) {
  ordered_json j;
  j["tested_p"] = vec_json(s.tested_p);
  j["p_stable"] = int_json(s.p_stable);
  j["monotone"] = s.monotone;
  j["contained"] = s.contained;
  j["cardinality_ok"] = s.cardinality_ok;
  j["equals_split_sets"] = s.equals_split_sets;
  j["stable_set"] = classes_json(s.stable_set);
  j["missing"] = classes_json(s.missing);
  return j;
}

std::string diffs_text(const std::vector<DiffFamily>& diffs) {
  std::ostringstream out;
  for (const DiffFamily& d : diffs) {
    out << "       (f,g)=(" << d.f << "," << d.g << "): e in [" << d.s_min << "," << d.s_max
        << "], " << d.observed.size() << " values, "
        << (d.covers_range ? "covered" : "NOT covered") << "\n";
  }
  return out.str();
}

std::string trace_text(const FullnessReport& f) {
  std::ostringstream out;
  for (const KoszulStep& s : f.trace)
    out << "       " << rule_name(s.rule) << "(" << s.k << ") -> " << s.conclusion.str() << "\n";
  for (const DivisorClass& c : f.missing) out << "       missing " << c.str() << "\n";
  return out.str();
}

}  // namespace

std::string render_verify(const VerifyReport& rep, ReportFormat fmt, double elapsed_ms) {
  const int expected_cones = 3 * rep.params.n - 1;
  if (fmt == ReportFormat::structured) {
    ordered_json j;
    j["command"] = "verify";
    j["params"] = {{"n", rep.params.n}, {"b", rep.params.b}, {"fano", rep.fano}};
    ordered_json checks;
    checks["fan_smooth"] = rep.fan_smooth;
    checks["fan_complete"] = rep.fan_complete;
    checks["cone_count"] = rep.cone_count_ok;
    checks["primitive_collections"] = rep.primitive_collections_ok;
    checks["k0_rank_matches"] = rep.k0_rank_matches;
    checks["strongly_exceptional"] = rep.exceptional.strongly_exceptional;
    checks["difference_ranges"] = rep.diffs_ok;
    checks["fullness"] = rep.fullness.generates;
    checks["frobenius"] = rep.frobenius_ok;
    j["checks"] = std::move(checks);
    j["k0_rank"] = rep.k0_rank;
    j["collection"] = classes_json(rep.collection);
    ordered_json exc;
    exc["pairs_checked"] = rep.exceptional.pairs_checked;
    ordered_json viol = ordered_json::array();
    for (const PairViolation& v : rep.exceptional.violations) {
      viol.push_back({{"j", v.j}, {"k", v.k}, {"diff", cls_json(v.diff)}, {"reason", v.reason}});
    }
    exc["violations"] = std::move(viol);
    j["exceptional"] = std::move(exc);
    j["differences"] = diffs_json(rep.diffs);
    j["fullness"] = fullness_json(rep.fullness);
    j["saturation"] = saturation_json(rep.saturation);
    j["passed"] = rep.passed;
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "verify " << family_str(rep.params) << (rep.fano ? "  [Fano]" : "  [not Fano]") << "\n";
  out << check_line(rep.fan_smooth, "fan is smooth");
  out << check_line(rep.fan_complete, "fan is complete");
  out << check_line(rep.cone_count_ok,
                    std::to_string(expected_cones) + " maximal cones (3n-1)");
  out << check_line(rep.primitive_collections_ok, "primitive collections: five cyclic blocks");
  out << check_line(rep.k0_rank_matches, "K_0 rank " + std::to_string(rep.k0_rank) +
                                             " == collection length " +
                                             std::to_string(rep.collection.size()));
  out << check_line(rep.exceptional.strongly_exceptional,
                    "strongly exceptional (" + std::to_string(rep.exceptional.pairs_checked) +
                        " ordered pairs)");
  for (const PairViolation& v : rep.exceptional.violations)
    out << "       pair (" << v.j << "," << v.k << ") diff " << v.diff.str() << ": " << v.reason
        << "\n";
  out << check_line(rep.diffs_ok, "pairwise differences fall in " +
                                      std::to_string(rep.diffs.size()) +
                                      " families with full ranges");
  out << diffs_text(rep.diffs);
  out << check_line(rep.fullness.generates,
                    "Koszul closure generates every split class (" +
                        std::to_string(rep.fullness.trace.size()) + " steps)");
  out << trace_text(rep.fullness);
  out << check_line(rep.frobenius_ok, "Frobenius summands inside B1 u B2 u B3, multiplicities sum to p^n");
  out << "       saturation: stable set of " << rep.saturation.stable_set.size() << " classes at p="
      << rep.saturation.p_stable << " (tested p up to "
      << (rep.saturation.tested_p.empty() ? Int(0) : rep.saturation.tested_p.back())
      << "); equals B1 u B2 u B3: " << (rep.saturation.equals_split_sets ? "yes" : "no") << "\n";
  if (!rep.saturation.missing.empty()) {
    out << "       never attained:";
    for (const DivisorClass& c : rep.saturation.missing) out << " " << c.str();
    out << "\n";
  }
  out << "collection:\n";
  for (size_t i = 0; i < rep.collection.size(); ++i)
    out << "  L_" << (i + 1) << " = " << rep.collection[i].str() << "\n";
  out << (rep.passed ? "PASS" : "FAIL") << " (" << seconds_str(elapsed_ms) << ")\n";
  return out.str();
}

std::string render_split(const Fan& fan, const Vec& cls, const Int& p, const FrobeniusSplit& split,
                         ReportFormat fmt) {
  bool in_sets = true;
  const bool family = fan.family.has_value();
  if (family) {
    const FamilySplitSets sets = family_split_sets(*fan.family);
    const std::vector<DivisorClass> all = sets.all();
    for (const SplitSummand& s : split.summands)
      if (!std::binary_search(all.begin(), all.end(), s.cls)) in_sets = false;
  }

  if (fmt == ReportFormat::structured) {
    ordered_json j;
    j["command"] = "split";
    j["fan"] = fan_str(fan);
    j["class"] = vec_json(cls);
    j["p"] = int_json(p);
    ordered_json arr = ordered_json::array();
    for (const SplitSummand& s : split.summands)
      arr.push_back({{"class", cls_json(s.cls)}, {"multiplicity", int_json(s.multiplicity)}});
    j["summands"] = std::move(arr);
    j["distinct_classes"] = split.summands.size();
    j["total"] = int_json(split.total);
    if (family) j["in_split_sets"] = in_sets;
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "F_* O" << vec_str(cls) << " at p=" << p << " on " << fan_str(fan) << "\n";
  for (const SplitSummand& s : split.summands)
    out << "  " << s.cls.str() << "  x " << s.multiplicity << "\n";
  out << "  " << split.summands.size() << " distinct classes, total " << split.total << " = p^"
      << fan.dimension << "\n";
  if (family)
    out << "  all summands inside B1 u B2 u B3: " << (in_sets ? "yes" : "NO") << "\n";
  return out.str();
}

std::string render_cohomology(const Fan& fan, const Vec& cls, const CohomologyResult& result,
                              ReportFormat fmt) {
  Int chi = 0;
  for (size_t j = 0; j < result.h.size(); ++j) chi += (j % 2 ? -result.h[j] : result.h[j]);

  if (fmt == ReportFormat::structured) {
    ordered_json j;
    j["command"] = "cohomology";
    j["fan"] = fan_str(fan);
    j["class"] = vec_json(cls);
    j["h"] = vec_json(result.h);
    j["euler_characteristic"] = int_json(chi);
    j["certified_radius"] = int_json(result.radius);
    j["representations"] = result.reps.size();
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "cohomology of O" << vec_str(cls) << " on " << fan_str(fan) << "\n  ";
  for (size_t j = 0; j < result.h.size(); ++j)
    out << (j ? ", " : "") << "h^" << j << " = " << result.h[j];
  out << "\n  chi = " << chi << ", certified radius " << result.radius << ", "
      << result.reps.size() << " contributing representations\n";
  return out.str();
}

std::string render_forbidden(const Fan& fan, const std::vector<ForbiddenSubset>& subsets,
                             ReportFormat fmt) {
  auto label = [&](int i) {
    return i < static_cast<int>(fan.ray_labels.size()) && !fan.ray_labels[i].empty()
               ? fan.ray_labels[i]
               : std::to_string(i);
  };

  if (fmt == ReportFormat::structured) {
    ordered_json j;
    j["command"] = "forbidden";
    j["fan"] = fan_str(fan);
    j["count"] = subsets.size();
    ordered_json arr = ordered_json::array();
    for (const ForbiddenSubset& f : subsets) {
      ordered_json jf;
      jf["rays"] = f.rays;
      ordered_json names = ordered_json::array();
      for (int i : f.rays) names.push_back(label(i));
      jf["labels"] = std::move(names);
      // entry k is the reduced Betti number in degree k-1
      jf["reduced_betti"] = vec_json(f.betti);
      arr.push_back(std::move(jf));
    }
    j["subsets"] = std::move(arr);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << subsets.size() << " forbidden subsets on " << fan_str(fan) << "\n";
  for (const ForbiddenSubset& f : subsets) {
    out << "  {";
    for (size_t i = 0; i < f.rays.size(); ++i) out << (i ? "," : "") << label(f.rays[i]);
    out << "}:";
    for (size_t k = 0; k < f.betti.size(); ++k)
      if (f.betti[k] != 0) out << " H~_" << (static_cast<int>(k) - 1) << "=" << f.betti[k];
    out << "\n";
  }
  return out.str();
}

std::string render_collection(const FamilyParams& params, const std::vector<DivisorClass>& collection,
                              const std::vector<DiffFamily>& diffs, const FullnessReport& fullness,
                              ReportFormat fmt) {
  if (fmt == ReportFormat::structured) {
    ordered_json j;
    j["command"] = "collection";
    j["params"] = {{"n", params.n}, {"b", params.b}, {"fano", params.fano()}};
    j["length"] = collection.size();
    j["collection"] = classes_json(collection);
    j["differences"] = diffs_json(diffs);
    j["fullness"] = fullness_json(fullness);
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "collection on " << family_str(params) << " (length " << collection.size()
      << " = 3n-1)\n";
  for (size_t i = 0; i < collection.size(); ++i)
    out << "  L_" << (i + 1) << " = " << collection[i].str() << "\n";
  out << "difference families:\n" << diffs_text(diffs);
  out << "Koszul closure " << (fullness.generates ? "generates" : "DOES NOT generate")
      << " all split classes in " << fullness.trace.size() << " steps\n";
  out << trace_text(fullness);
  return out.str();
}

}  // namespace picard3
