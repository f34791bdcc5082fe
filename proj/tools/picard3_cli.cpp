// picard3 — command line front end.
//
// exit codes: 0 success / verification passed, 1 mathematical failure,
// 2 usage or input error, 3 enumeration limit reached.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "picard3/cohomology.hpp"
#include "picard3/collection.hpp"
#include "picard3/divisor.hpp"
#include "picard3/fan_io.hpp"
#include "picard3/report.hpp"

namespace {

using namespace picard3;

struct CommonOpts {
  int n = -1;
  int b = -1;
  std::string fan_path;
  std::string format = "text";
  std::string emit_fan;
};

void add_common(CLI::App* sub, CommonOpts& o) {
  auto* on = sub->add_option("--n", o.n, "family parameter n (the dimension), n >= 2");
  auto* ob = sub->add_option("--b", o.b, "family parameter b >= 0");
  on->needs(ob);
  ob->needs(on);
  sub->add_option("--fan", o.fan_path, "read the fan from a JSON file instead")
      ->excludes(on)
      ->excludes(ob);
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  sub->add_option("--emit-fan", o.emit_fan, "also write the fan as JSON to this path");
}

Fan make_fan(const CommonOpts& o) {
  Fan fan = o.fan_path.empty() ? (o.n < 0 ? throw std::invalid_argument("need --n/--b or --fan")
                                          : build_family_fan(o.n, o.b))
                               : load_fan(o.fan_path);
  if (!o.emit_fan.empty()) save_fan(fan, o.emit_fan);
  return fan;
}

FamilyParams family_of(const Fan& fan) {
  if (!fan.family)
    throw std::invalid_argument("this subcommand needs an X(n,b) fan (--n/--b, or a matching file)");
  return *fan.family;
}

ReportFormat fmt_of(const CommonOpts& o) {
  return o.format == "structured" ? ReportFormat::structured : ReportFormat::text;
}

Vec to_vec(const std::vector<long long>& xs) {
  Vec v;
  for (long long x : xs) v.push_back(x);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for the smooth toric varieties X(n,b) of Picard rank 3"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "picard3 0.1.0");
  int exit_code = 0;

  auto* verify = app.add_subcommand("verify", "run the full exceptional-collection certification");
  CommonOpts vo;
  add_common(verify, vo);
  verify->callback([&] {
    const Fan fan = make_fan(vo);
    const FamilyParams params = family_of(fan);
    const auto t0 = std::chrono::steady_clock::now();
    const VerifyReport rep = verify_all(params);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << render_verify(rep, fmt_of(vo), ms);
    exit_code = rep.passed ? 0 : 1;
  });

  auto* split = app.add_subcommand("split", "decompose a Frobenius pushforward F_* O(D)");
  CommonOpts so;
  add_common(split, so);
  long long p_arg = 0;
  std::vector<long long> split_cls;
  int ref_cone = 0;
  split->add_option("--p", p_arg, "the characteristic p >= 2")->required();
  split->add_option("--class", split_cls, "divisor class (default: structure sheaf)")
      ->delimiter(',')
      ->expected(-1);
  split->add_option("--reference-cone", ref_cone, "index of the anchoring chart")
      ->capture_default_str();
  split->callback([&] {
    const Fan fan = make_fan(so);
    const ClassGroupInfo info = class_group(fan);
    const Vec cls = split_cls.empty() ? Vec(info.rank, 0) : to_vec(split_cls);
    const CartierData cartier = cartier_from_divisor(fan, section_divisor(fan, cls));
    const FrobeniusSplit result = pushforward_split(fan, cartier, Int(p_arg), ref_cone);
    std::cout << render_split(fan, cls, Int(p_arg), result, fmt_of(so));
  });

  auto* coh = app.add_subcommand("cohomology", "all cohomology dimensions of a line bundle");
  CommonOpts co;
  add_common(coh, co);
  std::vector<long long> coh_cls;
  coh->add_option("--class", coh_cls, "divisor class coordinates")
      ->delimiter(',')
      ->expected(-1)
      ->required();
  coh->callback([&] {
    const CohomologyEngine engine{make_fan(co)};
    const Vec cls = to_vec(coh_cls);
    const CohomologyResult result = engine.dims(cls);
    std::cout << render_cohomology(engine.fan(), cls, result, fmt_of(co));
  });

  auto* forb = app.add_subcommand("forbidden", "ray subsets with nonvanishing reduced homology");
  CommonOpts fo;
  add_common(forb, fo);
  forb->callback([&] {
    const Fan fan = make_fan(fo);
    std::cout << render_forbidden(fan, forbidden_subsets(fan), fmt_of(fo));
  });

  auto* coll = app.add_subcommand("collection", "print the collection, differences, Koszul closure");
  CommonOpts lo;
  add_common(coll, lo);
  coll->callback([&] {
    const Fan fan = make_fan(lo);
    const FamilyParams params = family_of(fan);
    const FullnessReport fullness = verify_full(params);
    std::cout << render_collection(params, the_collection(params), diff_families(params), fullness,
                                   fmt_of(lo));
    exit_code = fullness.generates ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const enumeration_limit_error& e) {
    std::cerr << "engine limit: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
