#include "chf/classifier.hpp"

#include <array>
#include <stdexcept>

#include "chf/errors.hpp"
#include "chf/kummer.hpp"

namespace chf {

namespace {

using K = SolutionKind;

bool in_row_constraint(const ExactParam& a, const ExactParam& b) {
  // 1 + a - b in Z<=0, decided on exact values only
  const auto diff = integer_difference(a, b);
  return diff && 1 + *diff <= 0;
}

bool u_has_log(const CaseId& id) {
  if (id.row == 1 || id.row == 5) return id.col != BColumn::A;
  return false;
}

std::optional<K> u_proportional(const CaseId& id) {
  const std::string c = id.to_string();
  if (c == "2.A" || c == "4.B") return K::MTilde;
  if (c == "3.A" || c == "4.C") return K::KummerM;
  return std::nullopt;
}

SolutionDescriptor describe(K kind, const CaseId& id, bool b_is_one) {
  SolutionDescriptor d;
  d.kind = kind;
  switch (kind) {
    case K::KummerM:
      break;
    case K::MTilde:
      if (b_is_one) d.proportional_to = K::KummerM;
      break;
    case K::TricomiU:
      d.has_log_term = u_has_log(id);
      d.proportional_to = u_proportional(id);
      break;
    case K::LogSecond4B:
    case K::LogSecond4C:
      d.has_log_term = true;
      break;
  }
  return d;
}

using KindPair = std::array<K, 2>;

// Table menus, preferred pair first.
std::vector<KindPair> table_menu(const CaseId& id) {
  const std::string c = id.to_string();
  if (c == "1.A" || c == "5.A") return {{K::KummerM, K::TricomiU}, {K::KummerM, K::MTilde}, {K::MTilde, K::TricomiU}};
  if (c == "2.A") return {{K::KummerM, K::TricomiU}, {K::KummerM, K::MTilde}};
  if (c == "3.A") return {{K::KummerM, K::MTilde}, {K::MTilde, K::TricomiU}};
  if (c == "1.B" || c == "5.B" || c == "3.B") return {{K::MTilde, K::TricomiU}};
  if (c == "1.C" || c == "5.C" || c == "6.C") return {{K::KummerM, K::TricomiU}};
  if (c == "4.B") return {{K::MTilde, K::LogSecond4B}, {K::TricomiU, K::LogSecond4B}};
  if (c == "4.C") return {{K::KummerM, K::LogSecond4C}, {K::TricomiU, K::LogSecond4C}};
  return {};
}

// Pairs that only exist because M~ = M at b = 1.
std::vector<KindPair> b1_extras(const CaseId& id) {
  const std::string c = id.to_string();
  if (c == "1.C" || c == "5.C" || c == "6.C") return {{K::MTilde, K::TricomiU}};
  if (c == "4.C") return {{K::MTilde, K::LogSecond4C}};
  return {};
}

SolutionPair make_pair(const KindPair& p, const CaseId& id, bool b_is_one) {
  return {describe(p[0], id, b_is_one), describe(p[1], id, b_is_one)};
}

std::vector<std::string> formula_refs(const CaseId& id) {
  if (id.col == BColumn::A) return {"13.2.42"};
  const std::string c = id.to_string();
  if (c == "1.B" || c == "5.B") return {"13.2.11", "13.2.9", "13.2.30"};
  if (c == "1.C" || c == "5.C") return {"13.2.9", "13.2.27"};
  if (c == "3.B") return {"13.2.7", "13.2.32"};
  if (c == "4.B") return {"13.2.7", "13.2.8", "13.2.31"};
  if (c == "4.C") return {"13.2.7", "13.2.10", "13.2.28"};
  if (c == "6.C") return {"13.2.9", "13.2.29"};
  return {};
}

std::int64_t require_tag(const ExactParam& p, const char* what) {
  if (!p.is_integer()) throw DomainError(std::string(what) + " requires an integer-tagged parameter");
  return *p.integer_tag();
}

}  // namespace

const char* to_string(SolutionKind k) {
  switch (k) {
    case K::KummerM:
      return "KummerM";
    case K::MTilde:
      return "MTilde";
    case K::TricomiU:
      return "TricomiU";
    case K::LogSecond4B:
      return "LogSecond4B";
    case K::LogSecond4C:
      return "LogSecond4C";
  }
  return "?";
}

std::optional<SolutionKind> parse_solution_kind(const std::string& text) {
  for (K k : {K::KummerM, K::MTilde, K::TricomiU, K::LogSecond4B, K::LogSecond4C})
    if (text == to_string(k)) return k;
  if (text == "M") return K::KummerM;
  if (text == "Mtilde" || text == "M~") return K::MTilde;
  if (text == "U") return K::TricomiU;
  if (text == "4B") return K::LogSecond4B;
  if (text == "4C") return K::LogSecond4C;
  return std::nullopt;
}

CaseId classify(const ExactParam& a, const ExactParam& b) {
  CaseId id;
  if (!b.is_integer())
    id.col = BColumn::A;
  else
    id.col = *b.integer_tag() <= 0 ? BColumn::B : BColumn::C;

  const int base = !a.is_integer() ? 1 : (a.is_nonpositive_integer() ? 3 : 5);
  id.row = base + (in_row_constraint(a, b) ? 1 : 0);
  if (id.is_dno()) throw std::logic_error("classify reached a cell that cannot occur: " + id.to_string());
  return id;
}

SolutionBasis basis_for(const CaseId& id, const ExactParam& a, const ExactParam& b, const PreferenceConfig& prefs) {
  const CaseId actual = classify(a, b);
  if (!(actual == id))
    throw std::invalid_argument("basis_for: parameters belong to case " + actual.to_string() + ", not " +
                                id.to_string());
  const bool b_is_one = b.integer_tag() == std::optional<std::int64_t>(1);

  std::vector<KindPair> menu = table_menu(id);
  if (b_is_one && prefs.include_b1_alternatives)
    for (const KindPair& p : b1_extras(id)) menu.push_back(p);

  SolutionBasis basis;
  basis.case_id = id;
  basis.first = describe(menu.front()[0], id, b_is_one);
  basis.second = describe(menu.front()[1], id, b_is_one);
  for (std::size_t i = 1; i < menu.size(); ++i) basis.alternatives.push_back(make_pair(menu[i], id, b_is_one));
  return basis;
}

SolutionBasis basis_for(const ExactParam& a, const ExactParam& b, const PreferenceConfig& prefs) {
  return basis_for(classify(a, b), a, b, prefs);
}

std::vector<LabyrinthCell> enumerate_labyrinth() {
  std::vector<LabyrinthCell> cells;
  cells.reserve(18);
  for (int row = 1; row <= 6; ++row) {
    for (BColumn col : {BColumn::A, BColumn::B, BColumn::C}) {
      LabyrinthCell cell;
      cell.id = CaseId{row, col};
      cell.occurs = !cell.id.is_dno();
      if (cell.occurs) {
        for (const KindPair& p : table_menu(cell.id)) cell.menu.push_back(make_pair(p, cell.id, false));
        for (const SolutionPair& p : cell.menu) {
          for (const SolutionDescriptor* d : {&p.first, &p.second}) {
            cell.log_marked = cell.log_marked || d->has_log_term;
            cell.nonstandard = cell.nonstandard || d->kind == K::LogSecond4B || d->kind == K::LogSecond4C;
          }
        }
        cell.u_recipe = tricomi_recipe(cell.id);
        cell.formula_refs = formula_refs(cell.id);
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

Jet<double> evaluate_solution(const SolutionDescriptor& d, const ExactParam& a, const ExactParam& b, double z,
                              const EvalConfig& cfg) {
  switch (d.kind) {
    case K::KummerM:
      return kummer_m_jet(a, b, z, cfg);
    case K::MTilde:
      return m_tilde_jet(a, b, z, cfg);
    case K::TricomiU:
      return tricomi_u_jet(a, b, z, cfg);
    case K::LogSecond4B:
      return second_solution_case4B_jet(-require_tag(a, "LogSecond4B"), -require_tag(b, "LogSecond4B"), z, cfg);
    case K::LogSecond4C:
      return second_solution_case4C_jet(-require_tag(a, "LogSecond4C"), require_tag(b, "LogSecond4C") - 1, z, cfg);
  }
  throw std::logic_error("evaluate_solution: unknown kind");
}

}  // namespace chf
