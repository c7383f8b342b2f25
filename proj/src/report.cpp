#include "hbstrata/report.hpp"

#include <sstream>
#include <stdexcept>

namespace hbstrata {

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown output format: '" + s + "'");
}

TypesReport build_types_report(const RamificationProfile& profile,
                               TypeFilter filter, int max_g) {
  TypesReport rep;
  rep.profile = profile;
  switch (filter) {
    case TypeFilter::All: rep.filter = "all"; break;
    case TypeFilter::Generic: rep.filter = "generic"; break;
    case TypeFilter::GenericSupersingular: rep.filter = "generic-ss"; break;
  }
  for (const AlphaType& a : enumerate_types(profile, filter, max_g)) {
    TypeRow row;
    row.alpha = a;
    row.size = a.size();
    row.generic = is_generic(a);
    row.supersingular = is_supersingular(a);
    row.w = 1;
    for (size_t v = 0; v < a.bits.size(); ++v) {
      int f = profile.degrees[v];
      row.w *= weight_w_mask(a.bits[v], f);
      row.lambda.push_back(lambda_max_mask(a.bits[v], f));
      row.slope.push_back(slope_of_stratum_mask(a.bits[v], f));
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

ComponentsReport build_components_report(int g, const std::vector<int>& tau,
                                         int max_g) {
  ComponentsReport rep;
  rep.g = g;
  rep.tau = tau;
  rep.components = enumerate_components(g, mask_of_tau(tau, g), max_g);
  rep.max_dimension = 0;
  for (const CellProduct& c : rep.components)
    rep.max_dimension = std::max(rep.max_dimension, c.dimension());
  return rep;
}

Json rational_json(const Rational& r) {
  Json j;
  j["num"] = numerator(r).str();
  j["den"] = denominator(r).str();
  return j;
}

Rational rational_from_json(const Json& j) {
  return Rational(Integer(j.at("num").get<std::string>()),
                  Integer(j.at("den").get<std::string>()));
}

namespace {

Json profile_json(const RamificationProfile& p) {
  Json j = Json::array();
  for (int f : p.degrees) j.push_back(f);
  return j;
}

RamificationProfile profile_from_json(const Json& j) {
  std::vector<int> fs;
  for (const auto& f : j) fs.push_back(f.get<int>());
  return RamificationProfile(fs);
}

Json slope_json(const SlopeSequence& s) {
  Json j;
  j["j"] = rational_json(s.j);
  j["f"] = s.g;
  return j;
}

Json class_factor_json(const ClassFactor& cf) {
  Json j;
  j["value"] = rational_json(cf.value);
  j["provenance"] = cf.computed ? "computed" : "user-supplied";
  j["integral"] = cf.integral;
  return j;
}

ClassFactor class_factor_from_json(const Json& j) {
  ClassFactor cf;
  cf.value = rational_from_json(j.at("value"));
  cf.computed = j.at("provenance").get<std::string>() == "computed";
  cf.integral = j.at("integral").get<bool>();
  return cf;
}

Json slope_row_json(const SlopeRow& row) {
  Json j;
  Json js = Json::array();
  for (const Rational& r : row.j) js.push_back(rational_json(r));
  j["j"] = js;
  j["count"] = rational_json(row.count);
  j["supersingular"] = row.supersingular;
  return j;
}

SlopeRow slope_row_from_json(const Json& j) {
  SlopeRow row;
  for (const auto& r : j.at("j")) row.j.push_back(rational_from_json(r));
  row.count = rational_from_json(j.at("count"));
  row.supersingular = j.at("supersingular").get<bool>();
  return row;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string rational_str(const Rational& r) {
  if (is_integral(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

Json to_json(const TypesReport& rep) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "types";
  j["profile"] = profile_json(rep.profile);
  j["filter"] = rep.filter;
  Json rows = Json::array();
  for (const TypeRow& row : rep.rows) {
    Json r;
    r["alpha"] = row.alpha.to_string();
    r["size"] = row.size;
    r["generic"] = row.generic;
    r["supersingular"] = row.supersingular;
    r["w"] = row.w.str();
    Json lam = Json::array();
    for (const LambdaResult& lr : row.lambda) {
      Json l;
      l["lambda"] = lr.lambda;
      l["superspecial_exception"] = lr.superspecial_exception;
      lam.push_back(l);
    }
    r["lambda"] = lam;
    Json slopes = Json::array();
    for (const SlopeSequence& s : row.slope) slopes.push_back(slope_json(s));
    r["slope"] = slopes;
    rows.push_back(r);
  }
  j["rows"] = rows;
  j["count"] = rep.rows.size();
  return j;
}

TypesReport types_report_from_json(const Json& j) {
  TypesReport rep;
  rep.profile = profile_from_json(j.at("profile"));
  rep.filter = j.at("filter").get<std::string>();
  for (const auto& r : j.at("rows")) {
    TypeRow row;
    row.alpha = AlphaType::parse(r.at("alpha").get<std::string>(), rep.profile);
    row.size = r.at("size").get<int>();
    row.generic = r.at("generic").get<bool>();
    row.supersingular = r.at("supersingular").get<bool>();
    row.w = Integer(r.at("w").get<std::string>());
    for (const auto& l : r.at("lambda")) {
      LambdaResult lr;
      lr.lambda = l.at("lambda").get<int>();
      lr.superspecial_exception = l.at("superspecial_exception").get<bool>();
      row.lambda.push_back(lr);
    }
    for (const auto& s : r.at("slope")) {
      SlopeSequence sl;
      sl.j = rational_from_json(s.at("j"));
      sl.g = s.at("f").get<int>();
      row.slope.push_back(sl);
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Json to_json(const ComponentsReport& rep) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "components";
  j["g"] = rep.g;
  Json tau = Json::array();
  for (int t : rep.tau) tau.push_back(t);
  j["tau"] = tau;
  Json comps = Json::array();
  for (const CellProduct& c : rep.components) {
    Json e;
    Json cells = Json::array();
    for (Cell cell : c.cells) cells.push_back(cell_name(cell));
    e["cells"] = cells;
    e["dimension"] = c.dimension();
    comps.push_back(e);
  }
  j["components"] = comps;
  j["max_dimension"] = rep.max_dimension;
  j["count"] = rep.components.size();
  return j;
}

ComponentsReport components_report_from_json(const Json& j) {
  ComponentsReport rep;
  rep.g = j.at("g").get<int>();
  for (const auto& t : j.at("tau")) rep.tau.push_back(t.get<int>());
  for (const auto& e : j.at("components")) {
    CellProduct c;
    for (const auto& name : e.at("cells")) {
      std::string s = name.get<std::string>();
      if (s == "[1:0]")
        c.cells.push_back(Cell::Pt10);
      else if (s == "[0:1]")
        c.cells.push_back(Cell::Pt01);
      else if (s == "P^1")
        c.cells.push_back(Cell::Line);
      else
        throw std::invalid_argument("unknown cell name: " + s);
    }
    rep.components.push_back(std::move(c));
  }
  rep.max_dimension = j.at("max_dimension").get<int>();
  return rep;
}

Json to_json(const CountReport& rep) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "count";
  j["profile"] = profile_json(rep.profile);
  j["p"] = rep.p ? Json(*rep.p) : Json(nullptr);
  j["n"] = rep.n ? Json(*rep.n) : Json(nullptr);
  j["class_factor"] = class_factor_json(rep.class_factor);
  j["total_components"] = rep.total_components.str();
  Json rows = Json::array();
  for (const SlopeRow& row : rep.slope_table) rows.push_back(slope_row_json(row));
  j["slope_table"] = rows;
  j["supersingular_component_count"] =
      rational_json(rep.supersingular_component_count);
  j["superspecial_point_count"] = rep.superspecial_point_count
                                      ? rational_json(*rep.superspecial_point_count)
                                      : Json(nullptr);
  Json variants;
  for (const auto& [name, value] : rep.formula_variants)
    variants[name] = rational_json(value);
  j["formula_variants"] = variants;
  return j;
}

CountReport count_report_from_json(const Json& j) {
  CountReport rep;
  rep.profile = profile_from_json(j.at("profile"));
  if (!j.at("p").is_null()) rep.p = j.at("p").get<long long>();
  if (!j.at("n").is_null()) rep.n = j.at("n").get<long long>();
  rep.class_factor = class_factor_from_json(j.at("class_factor"));
  rep.total_components = Integer(j.at("total_components").get<std::string>());
  for (const auto& row : j.at("slope_table"))
    rep.slope_table.push_back(slope_row_from_json(row));
  rep.supersingular_component_count =
      rational_from_json(j.at("supersingular_component_count"));
  if (!j.at("superspecial_point_count").is_null())
    rep.superspecial_point_count =
        rational_from_json(j.at("superspecial_point_count"));
  for (const auto& [name, value] : j.at("formula_variants").items())
    rep.formula_variants[name] = rational_from_json(value);
  return rep;
}

long long VerifyReport::total_checks() const {
  long long n = 0;
  for (const SuiteResult& s : suites) n += s.checks;
  return n;
}

long long VerifyReport::total_failures() const {
  long long n = 0;
  for (const SuiteResult& s : suites) n += s.failures;
  return n;
}

Json to_json(const VerifyReport& rep) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify";
  j["seed"] = rep.seed;
  Json suites = Json::array();
  for (const SuiteResult& s : rep.suites) {
    Json e;
    e["name"] = s.name;
    e["checks"] = s.checks;
    e["failures"] = s.failures;
    e["status"] = s.passed() ? "pass" : "fail";
    Json notes = Json::array();
    for (const std::string& note : s.notes) notes.push_back(note);
    e["notes"] = notes;
    suites.push_back(e);
  }
  j["suites"] = suites;
  j["total_checks"] = rep.total_checks();
  j["total_failures"] = rep.total_failures();
  j["status"] = rep.passed() ? "pass" : "fail";
  return j;
}

VerifyReport verify_report_from_json(const Json& j) {
  VerifyReport rep;
  rep.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& e : j.at("suites")) {
    SuiteResult s;
    s.name = e.at("name").get<std::string>();
    s.checks = e.at("checks").get<long long>();
    s.failures = e.at("failures").get<long long>();
    for (const auto& note : e.at("notes"))
      s.notes.push_back(note.get<std::string>());
    rep.suites.push_back(std::move(s));
  }
  return rep;
}

// --- rendering ---

namespace {

std::string slope_str(const SlopeSequence& s) { return s.to_string(); }

std::string render_types_text(const TypesReport& rep) {
  std::ostringstream out;
  out << "alpha types over profile [" << rep.profile.to_string()
      << "], filter " << rep.filter << "\n";
  out << "alpha  size  generic  ss  w  lambda  slope\n";
  for (const TypeRow& row : rep.rows) {
    out << row.alpha.to_string() << "  " << row.size << "  "
        << (row.generic ? "yes" : "no") << "  "
        << (row.supersingular ? "yes" : "no") << "  " << row.w.str() << "  ";
    for (size_t v = 0; v < row.lambda.size(); ++v) {
      if (v) out << ";";
      out << row.lambda[v].lambda;
      if (row.lambda[v].superspecial_exception) out << "*";
    }
    out << "  ";
    for (size_t v = 0; v < row.slope.size(); ++v) {
      if (v) out << ";";
      out << slope_str(row.slope[v]);
    }
    out << "\n";
  }
  out << rep.rows.size() << " rows\n";
  return out.str();
}

std::string render_types_csv(const TypesReport& rep) {
  std::ostringstream out;
  out << "alpha,size,generic,supersingular,w,lambda,slope\n";
  for (const TypeRow& row : rep.rows) {
    out << row.alpha.to_string() << "," << row.size << ","
        << (row.generic ? "true" : "false") << ","
        << (row.supersingular ? "true" : "false") << "," << row.w.str() << ",";
    std::string lam, slo;
    for (size_t v = 0; v < row.lambda.size(); ++v) {
      if (v) lam += ";";
      lam += std::to_string(row.lambda[v].lambda);
      if (row.lambda[v].superspecial_exception) lam += "*";
    }
    for (size_t v = 0; v < row.slope.size(); ++v) {
      if (v) slo += ";";
      slo += slope_str(row.slope[v]);
    }
    out << csv_escape(lam) << "," << csv_escape(slo) << "\n";
  }
  return out.str();
}

std::string render_components_text(const ComponentsReport& rep) {
  std::ostringstream out;
  out << "components of X_tau, g=" << rep.g << ", tau={";
  for (size_t i = 0; i < rep.tau.size(); ++i) {
    if (i) out << ",";
    out << rep.tau[i];
  }
  out << "}\n";
  for (const CellProduct& c : rep.components)
    out << c.to_string() << "   (dim " << c.dimension() << ")\n";
  out << rep.components.size() << " components, max dimension "
      << rep.max_dimension << "\n";
  return out.str();
}

std::string render_components_csv(const ComponentsReport& rep) {
  std::ostringstream out;
  out << "cells,dimension\n";
  for (const CellProduct& c : rep.components) {
    std::string cells;
    for (size_t i = 0; i < c.cells.size(); ++i) {
      if (i) cells += " x ";
      cells += cell_name(c.cells[i]);
    }
    out << csv_escape(cells) << "," << c.dimension() << "\n";
  }
  return out.str();
}

std::string render_count_text(const CountReport& rep) {
  std::ostringstream out;
  out << "profile [" << rep.profile.to_string() << "]";
  if (rep.p) out << ", p=" << *rep.p;
  if (rep.n) out << ", n=" << *rep.n;
  out << "\n";
  out << "class factor H = " << rational_str(rep.class_factor.value) << " ("
      << (rep.class_factor.computed ? "computed" : "user-supplied") << ")\n";
  if (!rep.class_factor.integral)
    out << "warning: class factor is not an integer\n";
  out << "total irreducible components: " << rep.total_components.str() << "\n";
  out << "slope table (j per block; j = f/2 is supersingular):\n";
  for (const SlopeRow& row : rep.slope_table) {
    out << "  (";
    for (size_t v = 0; v < row.j.size(); ++v) {
      if (v) out << ",";
      out << rational_str(row.j[v]) << "/" << rep.profile.degrees[v];
    }
    out << ")  ->  " << rational_str(row.count);
    if (row.supersingular) out << "   [supersingular]";
    out << "\n";
  }
  out << "supersingular components: "
      << rational_str(rep.supersingular_component_count) << "\n";
  if (rep.superspecial_point_count)
    out << "superspecial points: " << rational_str(*rep.superspecial_point_count)
        << "\n";
  return out.str();
}

std::string render_count_csv(const CountReport& rep) {
  std::ostringstream out;
  out << "key,value\n";
  out << "profile," << csv_escape(rep.profile.to_string()) << "\n";
  if (rep.p) out << "p," << *rep.p << "\n";
  if (rep.n) out << "n," << *rep.n << "\n";
  out << "class_factor," << csv_escape(rational_str(rep.class_factor.value)) << "\n";
  out << "total_components," << rep.total_components.str() << "\n";
  out << "supersingular_component_count,"
      << csv_escape(rational_str(rep.supersingular_component_count)) << "\n";
  if (rep.superspecial_point_count)
    out << "superspecial_point_count,"
        << csv_escape(rational_str(*rep.superspecial_point_count)) << "\n";
  for (const SlopeRow& row : rep.slope_table) {
    std::string slopes;
    for (size_t v = 0; v < row.j.size(); ++v) {
      if (v) slopes += ";";
      slopes += rational_str(row.j[v]) + "/" + std::to_string(rep.profile.degrees[v]);
    }
    out << "slope_count[" << csv_escape(slopes) << "],"
        << csv_escape(rational_str(row.count)) << "\n";
  }
  return out.str();
}

std::string render_verify_text(const VerifyReport& rep) {
  std::ostringstream out;
  out << "verification (seed " << rep.seed << ")\n";
  for (const SuiteResult& s : rep.suites) {
    out << "  " << (s.passed() ? "pass" : "FAIL") << "  " << s.name << " ("
        << s.checks << " checks";
    if (s.failures) out << ", " << s.failures << " failures";
    out << ")\n";
    for (const std::string& note : s.notes) out << "        " << note << "\n";
  }
  out << (rep.passed() ? "all suites passed" : "FAILURES detected") << ": "
      << rep.total_checks() << " checks, " << rep.total_failures()
      << " failures\n";
  return out.str();
}

std::string render_verify_csv(const VerifyReport& rep) {
  std::ostringstream out;
  out << "suite,checks,failures,status\n";
  for (const SuiteResult& s : rep.suites)
    out << csv_escape(s.name) << "," << s.checks << "," << s.failures << ","
        << (s.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace

std::string render(const TypesReport& rep, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: return to_json(rep).dump(2) + "\n";
    case OutputFormat::Csv: return render_types_csv(rep);
    case OutputFormat::Text: return render_types_text(rep);
  }
  return {};
}

std::string render(const ComponentsReport& rep, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: return to_json(rep).dump(2) + "\n";
    case OutputFormat::Csv: return render_components_csv(rep);
    case OutputFormat::Text: return render_components_text(rep);
  }
  return {};
}

std::string render(const CountReport& rep, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: return to_json(rep).dump(2) + "\n";
    case OutputFormat::Csv: return render_count_csv(rep);
    case OutputFormat::Text: return render_count_text(rep);
  }
  return {};
}

std::string render(const VerifyReport& rep, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: return to_json(rep).dump(2) + "\n";
    case OutputFormat::Csv: return render_verify_csv(rep);
    case OutputFormat::Text: return render_verify_text(rep);
  }
  return {};
}

}  // namespace hbstrata
