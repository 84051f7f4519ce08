#include "chf/io/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace chf::io {

namespace {

void write(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  const char* colon = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << Json(it.key()).dump() << colon;
        write(os, it.value(), indent, depth + 1);
      }
      os << nl << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[' << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',' << nl;
        os << pad;
        write(os, j[i], indent, depth + 1);
      }
      os << nl << close << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

template <class E, std::size_t N>
E enum_from(const std::string& s, const E (&all)[N], const char* what) {
  for (E e : all)
    if (s == to_string(e)) return e;
  throw std::invalid_argument(std::string("unknown ") + what + ": " + s);
}

constexpr Termination kTerminations[] = {Termination::Converged, Termination::PolynomialExact, Termination::MaxTermsHit};
constexpr URoute kRoutes[] = {URoute::NonIntegerBCombination, URoute::IntegerBLogSeries, URoute::PolynomialProportional,
                              URoute::EpsilonLimit, URoute::LargeZAsymptotic};
constexpr physics::Verdict kVerdicts[] = {physics::Verdict::Accepted, physics::Verdict::Rejected,
                                          physics::Verdict::SameAsAccepted};
constexpr physics::RejectReason kReasons[] = {
    physics::RejectReason::None, physics::RejectReason::DivergesAtInfinity, physics::RejectReason::LogTerm,
    physics::RejectReason::SmallZDivergence, physics::RejectReason::ProportionalToAccepted};

SolutionKind kind_from(const Json& j) {
  const auto k = parse_solution_kind(j.get<std::string>());
  if (!k) throw std::invalid_argument("unknown solution kind: " + j.get<std::string>());
  return *k;
}

double number(const Json& j) { return j.is_null() ? std::nan("") : j.get<double>(); }

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string dump(const Json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

Json parse(const std::string& text) { return Json::parse(text); }

Json to_json(const SeriesEval& e) {
  return Json{{"value", e.value},
              {"abs_error_est", e.abs_error_est},
              {"terms_used", e.terms_used},
              {"terminated", to_string(e.terminated)},
              {"warnings", e.warnings}};
}

SeriesEval series_eval_from_json(const Json& j) {
  SeriesEval e;
  e.value = number(j.at("value"));
  e.abs_error_est = number(j.at("abs_error_est"));
  e.terms_used = j.at("terms_used").get<int>();
  e.terminated = enum_from(j.at("terminated").get<std::string>(), kTerminations, "termination");
  e.warnings = j.at("warnings").get<std::uint32_t>();
  return e;
}

Json to_json(const CaseId& id) { return id.to_string(); }

CaseId case_id_from_json(const Json& j) {
  const auto id = CaseId::parse(j.get<std::string>());
  if (!id) throw std::invalid_argument("bad case id: " + j.get<std::string>());
  return *id;
}

Json to_json(const SolutionDescriptor& d) {
  Json j{{"kind", to_string(d.kind)}, {"has_log_term", d.has_log_term}};
  j["proportional_to"] = d.proportional_to ? Json(to_string(*d.proportional_to)) : Json(nullptr);
  return j;
}

SolutionDescriptor descriptor_from_json(const Json& j) {
  SolutionDescriptor d;
  d.kind = kind_from(j.at("kind"));
  d.has_log_term = j.at("has_log_term").get<bool>();
  if (!j.at("proportional_to").is_null()) d.proportional_to = kind_from(j.at("proportional_to"));
  return d;
}

Json to_json(const SolutionPair& p) { return Json{{"first", to_json(p.first)}, {"second", to_json(p.second)}}; }

SolutionPair pair_from_json(const Json& j) {
  return {descriptor_from_json(j.at("first")), descriptor_from_json(j.at("second"))};
}

Json to_json(const SolutionBasis& b) {
  Json alts = Json::array();
  for (const auto& p : b.alternatives) alts.push_back(to_json(p));
  return Json{{"case", to_json(b.case_id)},
              {"first", to_json(b.first)},
              {"second", to_json(b.second)},
              {"alternatives", alts}};
}

SolutionBasis basis_from_json(const Json& j) {
  SolutionBasis b;
  b.case_id = case_id_from_json(j.at("case"));
  b.first = descriptor_from_json(j.at("first"));
  b.second = descriptor_from_json(j.at("second"));
  for (const auto& p : j.at("alternatives")) b.alternatives.push_back(pair_from_json(p));
  return b;
}

Json to_json(const LabyrinthCell& c) {
  Json menu = Json::array();
  for (const auto& p : c.menu) menu.push_back(to_json(p));
  Json j{{"case", to_json(c.id)}, {"occurs", c.occurs}, {"menu", menu}, {"log_marked", c.log_marked},
         {"nonstandard", c.nonstandard}};
  if (c.u_recipe)
    j["u_recipe"] = Json{{"route", to_string(c.u_recipe->route)},
                         {"dlmf_id", c.u_recipe->dlmf_id},
                         {"has_log_term", c.u_recipe->has_log_term}};
  else
    j["u_recipe"] = nullptr;
  j["formula_refs"] = c.formula_refs;
  return j;
}

LabyrinthCell labyrinth_cell_from_json(const Json& j) {
  LabyrinthCell c;
  c.id = case_id_from_json(j.at("case"));
  c.occurs = j.at("occurs").get<bool>();
  for (const auto& p : j.at("menu")) c.menu.push_back(pair_from_json(p));
  c.log_marked = j.at("log_marked").get<bool>();
  c.nonstandard = j.at("nonstandard").get<bool>();
  if (const Json& r = j.at("u_recipe"); !r.is_null())
    c.u_recipe = USolutionRecipe{enum_from(r.at("route").get<std::string>(), kRoutes, "route"),
                                 r.at("dlmf_id").get<std::string>(), r.at("has_log_term").get<bool>()};
  c.formula_refs = j.at("formula_refs").get<std::vector<std::string>>();
  return c;
}

Json to_json(const physics::BoundStateSpectrum& s) {
  Json states = Json::array();
  for (const auto& st : s.states)
    states.push_back(Json{{"n", st.n}, {"ell", st.ell}, {"n_r", st.n_r}, {"energy", st.energy}, {"k", st.k},
                          {"a", st.a}, {"b", st.b}});
  Json trace = Json::array();
  for (const auto& e : s.case_trace)
    trace.push_back(Json{{"case", to_json(e.id)},
                         {"solution", to_string(e.solution)},
                         {"verdict", to_string(e.verdict)},
                         {"reason", to_string(e.reason)},
                         {"a", e.a},
                         {"b", e.b},
                         {"detail", e.detail}});
  return Json{{"config",
               Json{{"Z", s.config.Z},
                    {"ell", s.config.ell},
                    {"branch", s.config.branch},
                    {"reduced_bohr_radius", s.config.reduced_bohr_radius}}},
              {"states", states},
              {"case_trace", trace}};
}

physics::BoundStateSpectrum spectrum_from_json(const Json& j) {
  physics::BoundStateSpectrum s;
  const Json& c = j.at("config");
  s.config = {c.at("Z").get<double>(), c.at("ell").get<int>(), c.at("branch").get<int>(),
              c.at("reduced_bohr_radius").get<double>()};
  for (const auto& st : j.at("states"))
    s.states.push_back({st.at("n").get<int>(), st.at("ell").get<int>(), st.at("n_r").get<int>(),
                        st.at("energy").get<double>(), st.at("k").get<double>(), st.at("a").get<double>(),
                        st.at("b").get<double>()});
  for (const auto& e : j.at("case_trace")) {
    physics::TraceEntry t;
    t.id = case_id_from_json(e.at("case"));
    t.solution = kind_from(e.at("solution"));
    t.verdict = enum_from(e.at("verdict").get<std::string>(), kVerdicts, "verdict");
    t.reason = enum_from(e.at("reason").get<std::string>(), kReasons, "reason");
    t.a = e.at("a").get<double>();
    t.b = e.at("b").get<double>();
    t.detail = e.at("detail").get<std::string>();
    s.case_trace.push_back(std::move(t));
  }
  return s;
}

Json to_json(const physics::CutoffState& s) {
  return Json{{"energy", s.energy},
              {"k", s.k},
              {"a", s.a},
              {"case", to_json(s.case_id)},
              {"matching_residual", s.matching_residual},
              {"inner_scale", s.inner_scale}};
}

physics::CutoffState cutoff_state_from_json(const Json& j) {
  physics::CutoffState s;
  s.energy = j.at("energy").get<double>();
  s.k = j.at("k").get<double>();
  s.a = j.at("a").get<double>();
  s.case_id = case_id_from_json(j.at("case"));
  s.matching_residual = j.at("matching_residual").get<double>();
  s.inner_scale = j.at("inner_scale").get<double>();
  return s;
}

std::string radial_csv(const physics::RadialWavefunction& w) {
  std::string out = "r,R\n";
  for (const auto& [r, R] : w.samples) out += format_double(r) + "," + format_double(R) + "\n";
  return out;
}

}  // namespace chf::io
