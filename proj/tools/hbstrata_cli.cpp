// hbstrata: enumerate alpha strata, list fiber components, evaluate the
// component-count formulas, and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hbstrata/alpha.hpp"
#include "hbstrata/counting.hpp"
#include "hbstrata/quad.hpp"
#include "hbstrata/report.hpp"
#include "hbstrata/strata.hpp"
#include "hbstrata/verify.hpp"

namespace {

using namespace hbstrata;

int env_cap(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + " is not an integer: '" + v + "'");
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<std::pair<int, int>> parse_fields(const std::string& s) {
  // "2^2,3^3" -> {(2,2),(3,3)}
  std::vector<std::pair<int, int>> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto caret = item.find('^');
    if (caret == std::string::npos)
      throw std::invalid_argument("field spec must look like p^m: '" + item + "'");
    out.emplace_back(std::stoi(item.substr(0, caret)),
                     std::stoi(item.substr(caret + 1)));
  }
  if (out.empty()) throw std::invalid_argument("empty field list");
  return out;
}

struct CommonOpts {
  std::string format = "text";
};

int run_types(const std::string& profile_str, const std::string& filter_str,
              const CommonOpts& common) {
  TypeFilter filter;
  if (filter_str == "all")
    filter = TypeFilter::All;
  else if (filter_str == "generic")
    filter = TypeFilter::Generic;
  else if (filter_str == "generic-ss")
    filter = TypeFilter::GenericSupersingular;
  else
    throw std::invalid_argument("unknown filter: '" + filter_str + "'");
  RamificationProfile profile = RamificationProfile::parse(profile_str);
  int bound = env_cap("HBSTRATA_MAX_G", kDefaultEnumBound);
  TypesReport rep = build_types_report(profile, filter, bound);
  std::cout << render(rep, parse_format(common.format));
  return 0;
}

int run_components(int g, const std::string& tau_str, const CommonOpts& common) {
  std::vector<int> tau = parse_int_list(tau_str);
  int bound = env_cap("HBSTRATA_MAX_G", kDefaultComponentBound);
  ComponentsReport rep = build_components_report(g, tau, bound);
  std::cout << render(rep, parse_format(common.format));
  return 0;
}

int run_count(const std::string& profile_str, long long disc, long long p,
              long long n, const std::string& class_factor_str,
              const CommonOpts& common) {
  RamificationProfile profile;
  std::optional<long long> p_opt, n_opt;
  ClassFactor H;

  bool have_profile = !profile_str.empty();
  bool have_disc = disc != 0;
  if (have_profile == have_disc)
    throw std::invalid_argument("give exactly one of --profile or --disc");

  if (have_disc) {
    Discriminant D(disc);
    if (p == 0) throw std::invalid_argument("--disc requires --p");
    profile = profile_of(D, p);
    p_opt = p;
    if (!class_factor_str.empty()) {
      H = class_factor_override(parse_rational(class_factor_str));
    } else {
      if (n == 0) throw std::invalid_argument("--disc requires --n (or --class-factor)");
      n_opt = n;
      H = class_factor(D, n);
    }
  } else {
    profile = RamificationProfile::parse(profile_str);
    if (class_factor_str.empty())
      throw std::invalid_argument("--profile requires --class-factor");
    H = class_factor_override(parse_rational(class_factor_str));
    if (p != 0) p_opt = p;
    if (n != 0) n_opt = n;
  }

  if (!H.integral)
    std::cerr << "warning: class factor " << H.value.str()
              << " is not an integer\n";
  CountReport rep = build_count_report(profile, H, p_opt, n_opt);
  std::cout << render(rep, parse_format(common.format));
  return 0;
}

int run_verify(const VerifyConfig& config, const CommonOpts& common) {
  VerifyReport rep;
  rep.seed = config.seed;
  rep.suites = run_all_suites(config);
  std::cout << render(rep, parse_format(common.format));
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stratification combinatorics and component counts for "
               "Hilbert-Blumenthal moduli with Iwahori level at an unramified prime"};
  app.require_subcommand(1);
  CommonOpts common;

  std::string profile_str, filter_str = "all", tau_str, class_factor_str,
              fields_str;
  int g = 0;
  long long disc = 0, p = 0, n = 0;
  VerifyConfig vconfig;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", common.format, "output format: text|json|csv");
  };

  CLI::App* types = app.add_subcommand("types", "list alpha types over a profile");
  types->add_option("--profile", profile_str, "residue degrees, e.g. 2,2")->required();
  types->add_option("--filter", filter_str, "all|generic|generic-ss");
  add_format(types);

  CLI::App* components =
      app.add_subcommand("components", "list the irreducible components of X_tau");
  components->add_option("--g", g, "number of grading positions")->required();
  components->add_option("--tau", tau_str, "support positions, e.g. 0,2 (empty for none)");
  add_format(components);

  CLI::App* count =
      app.add_subcommand("count", "evaluate the component-count formulas");
  count->add_option("--profile", profile_str, "residue degrees, e.g. 2");
  count->add_option("--disc", disc, "fundamental discriminant of a real quadratic field");
  count->add_option("--p", p, "rational prime, unramified in the field");
  count->add_option("--n", n, "level, coprime to p");
  count->add_option("--class-factor", class_factor_str,
                    "override the class factor H (integer or num/den)");
  add_format(count);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--max-g", vconfig.max_g_weight,
                     "depth for the weight identities (other sweeps scale along)");
  verify->add_option("--fields", fields_str, "finite fields, e.g. 2^2,3^2");
  verify->add_option("--samples", vconfig.samples, "random tuples per (g,tau,field)");
  verify->add_option("--h-samples", vconfig.h_samples,
                     "random class factors per profile");
  verify->add_option("--seed", vconfig.seed, "random seed (reports are reproducible)");
  add_format(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (types->parsed()) return run_types(profile_str, filter_str, common);
    if (components->parsed()) return run_components(g, tau_str, common);
    if (count->parsed())
      return run_count(profile_str, disc, p, n, class_factor_str, common);
    if (verify->parsed()) {
      if (!fields_str.empty()) vconfig.fields = parse_fields(fields_str);
      if (verify->count("--max-g")) {
        // scale the other sweeps with the requested depth
        vconfig.max_g_order = std::min(vconfig.max_g_weight, 5);
        vconfig.max_g_classifiers = std::min(vconfig.max_g_weight, 10);
        vconfig.max_g_components = std::min(vconfig.max_g_weight, 8);
        vconfig.max_g_oracle = std::min(vconfig.max_g_weight, 5);
        vconfig.max_g_alpha_oracle = std::min(vconfig.max_g_weight, 7);
        vconfig.max_g_counting = std::min(vconfig.max_g_weight, 10);
        vconfig.max_g_slopes = std::min(vconfig.max_g_weight, 10);
      }
      return run_verify(vconfig, common);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
