// Machine-readable reports for the CLI: JSON (fixed key order, rationals as
// {"num","den"} strings), CSV as a flat projection, and a human-readable
// text rendering.  JSON emission and parsing round-trip exactly.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hbstrata/alpha.hpp"
#include "hbstrata/counting.hpp"
#include "hbstrata/strata.hpp"
#include "hbstrata/verify.hpp"

namespace hbstrata {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(const std::string& s);

// --- types ---

struct TypeRow {
  AlphaType alpha;
  int size = 0;
  bool generic = false;
  bool supersingular = false;
  Integer w;                          // product of the block weights
  std::vector<LambdaResult> lambda;   // per block
  std::vector<SlopeSequence> slope;   // per block

  bool operator==(const TypeRow&) const = default;
};

struct TypesReport {
  RamificationProfile profile;
  std::string filter;  // "all" | "generic" | "generic-ss"
  std::vector<TypeRow> rows;

  bool operator==(const TypesReport&) const = default;
};

TypesReport build_types_report(const RamificationProfile& profile,
                               TypeFilter filter, int max_g = kDefaultEnumBound);

// --- components ---

struct ComponentsReport {
  int g = 0;
  std::vector<int> tau;
  std::vector<CellProduct> components;
  int max_dimension = 0;

  bool operator==(const ComponentsReport&) const = default;
};

ComponentsReport build_components_report(int g, const std::vector<int>& tau,
                                         int max_g = kDefaultComponentBound);

// --- JSON ---

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const TypesReport& rep);
Json to_json(const ComponentsReport& rep);
Json to_json(const CountReport& rep);

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  long long total_checks() const;
  long long total_failures() const;
  bool passed() const { return total_failures() == 0; }

  bool operator==(const VerifyReport&) const = default;
};

Json to_json(const VerifyReport& rep);

TypesReport types_report_from_json(const Json& j);
ComponentsReport components_report_from_json(const Json& j);
CountReport count_report_from_json(const Json& j);
VerifyReport verify_report_from_json(const Json& j);

// --- rendering ---

std::string render(const TypesReport& rep, OutputFormat fmt);
std::string render(const ComponentsReport& rep, OutputFormat fmt);
std::string render(const CountReport& rep, OutputFormat fmt);
std::string render(const VerifyReport& rep, OutputFormat fmt);

}  // namespace hbstrata
