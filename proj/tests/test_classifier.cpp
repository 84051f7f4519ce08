#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "chf/classifier.hpp"
#include "chf/oracle.hpp"

using namespace chf;

namespace {

ExactParam I(std::int64_t k) { return ExactParam::integer(k); }
ExactParam R(double x) { return ExactParam(x); }

using K = SolutionKind;

std::vector<std::pair<K, K>> kinds(const std::vector<SolutionPair>& pairs) {
  std::vector<std::pair<K, K>> out;
  for (const auto& p : pairs) out.emplace_back(p.first.kind, p.second.kind);
  return out;
}

std::vector<std::pair<K, K>> all_pairs(const SolutionBasis& b) {
  std::vector<std::pair<K, K>> out{{b.first.kind, b.second.kind}};
  for (const auto& p : kinds(b.alternatives)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("classify: worked parameter examples") {
  CHECK(classify(R(0.5), R(0.25)).to_string() == "1.A");
  CHECK(classify(R(0.5), R(1.5)).to_string() == "2.A");
  CHECK(classify(I(-2), I(3)).to_string() == "4.C");
  CHECK(classify(I(-1), I(-3)).to_string() == "3.B");
  CHECK(classify(I(2), I(5)).to_string() == "6.C");
  CHECK(classify(R(0.5), I(-2)).to_string() == "1.B");
  CHECK(classify(R(0.5), I(2)).to_string() == "1.C");
  CHECK(classify(I(-2), R(0.5)).to_string() == "3.A");
  CHECK(classify(I(-3), I(-1)).to_string() == "4.B");
  CHECK(classify(I(3), R(0.5)).to_string() == "5.A");
  CHECK(classify(I(3), I(-1)).to_string() == "5.B");
  CHECK(classify(I(3), I(2)).to_string() == "5.C");
}

TEST_CASE("classify: integer-ness comes from tags only") {
  // 1e-12 away from an integer stays non-integer; snapping makes the tag explicit
  const ExactParam near(3.0 + 1e-12);
  CHECK_FALSE(near.is_integer());
  CHECK(classify(I(-2), near).col == BColumn::A);
  const SnapResult s = snap(3.0 + 1e-12, 1e-9);
  CHECK(s.snapped);
  CHECK(classify(I(-2), s.param).to_string() == "4.C");
}

TEST_CASE("classify: complementarity of rows 1 and 2 for integer a - b") {
  for (int k = -6; k <= 6; ++k) {
    const ExactParam b(0.375);
    const ExactParam a(0.375 + k);
    const CaseId id = classify(a, b);
    CHECK((id.to_string() == "1.A") == (a.value() >= b.value()));
    CHECK((id.to_string() == "2.A") == (a.value() < b.value()));
  }
}

TEST_CASE("basis_for: preferred pairs and alternatives") {
  auto b1a = basis_for(R(0.5), R(0.25));
  CHECK(all_pairs(b1a) == std::vector<std::pair<K, K>>{{K::KummerM, K::TricomiU},
                                                      {K::KummerM, K::MTilde},
                                                      {K::MTilde, K::TricomiU}});
  auto b4c = basis_for(I(-2), I(3));
  CHECK(all_pairs(b4c) == std::vector<std::pair<K, K>>{{K::KummerM, K::LogSecond4C}, {K::TricomiU, K::LogSecond4C}});
  CHECK(b4c.alternatives[0].first.proportional_to == K::KummerM);
  auto b3b = basis_for(I(-1), I(-3));
  CHECK(all_pairs(b3b) == std::vector<std::pair<K, K>>{{K::MTilde, K::TricomiU}});
  auto b2a = basis_for(R(0.5), R(1.5));
  CHECK(all_pairs(b2a) == std::vector<std::pair<K, K>>{{K::KummerM, K::TricomiU}, {K::KummerM, K::MTilde}});
  CHECK(b2a.second.proportional_to == K::MTilde);

  auto b3a = basis_for(I(-2), R(0.5));
  CHECK(all_pairs(b3a) == std::vector<std::pair<K, K>>{{K::KummerM, K::MTilde}, {K::MTilde, K::TricomiU}});
  auto b4b = basis_for(I(-3), I(-1));
  CHECK(all_pairs(b4b) == std::vector<std::pair<K, K>>{{K::MTilde, K::LogSecond4B}, {K::TricomiU, K::LogSecond4B}});
  CHECK(b4b.alternatives[0].first.proportional_to == K::MTilde);
}

TEST_CASE("basis_for: b = 1 adds the M~ stand-ins last") {
  auto c1 = basis_for(R(0.5), I(1));
  CHECK(all_pairs(c1) == std::vector<std::pair<K, K>>{{K::KummerM, K::TricomiU}, {K::MTilde, K::TricomiU}});
  CHECK(c1.alternatives[0].first.proportional_to == K::KummerM);
  CHECK(c1.second.has_log_term);

  auto c4 = basis_for(I(-2), I(1));
  CHECK(all_pairs(c4) == std::vector<std::pair<K, K>>{
                             {K::KummerM, K::LogSecond4C}, {K::TricomiU, K::LogSecond4C}, {K::MTilde, K::LogSecond4C}});

  auto c5 = basis_for(I(2), I(1));
  CHECK(all_pairs(c5) == std::vector<std::pair<K, K>>{{K::KummerM, K::TricomiU}, {K::MTilde, K::TricomiU}});

  PreferenceConfig off;
  off.include_b1_alternatives = false;
  CHECK(basis_for(R(0.5), I(1), off).alternatives.empty());
  CHECK(basis_for(R(0.5), I(2)).alternatives.empty());
}

TEST_CASE("basis_for: rejects a mismatched case id") {
  CHECK_THROWS_AS(basis_for(*CaseId::parse("1.A"), I(-2), I(3)), std::invalid_argument);
}

TEST_CASE("enumerate_labyrinth reproduces the table") {
  const auto cells = enumerate_labyrinth();
  REQUIRE(cells.size() == 18);
  std::set<std::string> dno, logs, nonstd;
  for (const auto& c : cells) {
    if (!c.occurs) {
      dno.insert(c.id.to_string());
      CHECK(c.menu.empty());
      CHECK_FALSE(c.u_recipe.has_value());
    }
    if (c.log_marked) logs.insert(c.id.to_string());
    if (c.nonstandard) nonstd.insert(c.id.to_string());
  }
  CHECK(dno == std::set<std::string>{"2.B", "2.C", "3.C", "4.A", "6.A", "6.B"});
  CHECK(logs == std::set<std::string>{"1.B", "1.C", "4.B", "4.C", "5.B", "5.C"});
  CHECK(nonstd == std::set<std::string>{"4.B", "4.C"});

  auto cell = [&](const char* id) { return *std::find_if(cells.begin(), cells.end(), [&](const auto& c) {
    return c.id.to_string() == id;
  }); };
  CHECK(kinds(cell("5.A").menu) == kinds(cell("1.A").menu));
  CHECK(kinds(cell("6.C").menu) == std::vector<std::pair<K, K>>{{K::KummerM, K::TricomiU}});
  CHECK(cell("4.C").formula_refs == std::vector<std::string>{"13.2.7", "13.2.10", "13.2.28"});
  CHECK(cell("3.B").formula_refs == std::vector<std::string>{"13.2.7", "13.2.32"});
  CHECK(cell("1.A").u_recipe->dlmf_id == "13.2.42");
}

TEST_CASE("solution kind names round-trip") {
  for (K k : {K::KummerM, K::MTilde, K::TricomiU, K::LogSecond4B, K::LogSecond4C})
    CHECK(parse_solution_kind(to_string(k)) == k);
  CHECK(parse_solution_kind("U") == K::TricomiU);
  CHECK_FALSE(parse_solution_kind("V").has_value());
}

TEST_CASE("property: generated parameters classify into their cell with valid descriptors") {
  std::mt19937_64 rng(20240611);
  const auto cells = oracle::realizable_cells();
  REQUIRE(cells.size() == 12);
  for (int i = 0; i < 3000; ++i) {
    const CaseId& want = cells[static_cast<std::size_t>(i) % cells.size()];
    const auto d = oracle::draw_for_cell(want, rng);
    const CaseId got = classify(d.a, d.b);
    REQUIRE(got == want);
    CHECK_FALSE(got.is_dno());
    if (got.col == BColumn::B) CHECK(d.b.is_nonpositive_integer());
    if (got.row % 2 == 0) {
      const auto diff = integer_difference(d.b, d.a);
      REQUIRE(diff.has_value());
      CHECK(*diff > 0);
    }
    const SolutionBasis basis = basis_for(d.a, d.b);
    for (const auto& [f, g] : all_pairs(basis)) {
      for (K k : {f, g}) {
        if (k == K::KummerM) CHECK_FALSE(d.b.is_nonpositive_integer());
        if (k == K::MTilde) CHECK_FALSE(d.b.is_integer_at_least(2));
        if (k == K::LogSecond4B) CHECK(got.to_string() == "4.B");
        if (k == K::LogSecond4C) CHECK(got.to_string() == "4.C");
      }
    }
  }
}

TEST_CASE("property: every offered pair is numerically independent at z = 1") {
  std::mt19937_64 rng(77);
  for (const CaseId& cell : oracle::realizable_cells()) {
    for (int i = 0; i < 20; ++i) {
      const auto d = oracle::draw_for_cell(cell, rng);
      const SolutionBasis basis = basis_for(d.a, d.b);
      std::vector<SolutionPair> pairs{{basis.first, basis.second}};
      pairs.insert(pairs.end(), basis.alternatives.begin(), basis.alternatives.end());
      for (const auto& p : pairs) {
        const auto cert = oracle::certify_pair(p.first, p.second, d.a, d.b);
        INFO(cell.to_string(), " a=", d.a.to_string(), " b=", d.b.to_string(), " ", to_string(p.first.kind), "&",
             to_string(p.second.kind), " W=", cert.wronskian, " scale=", cert.scale);
        CHECK(cert.independent);
      }
    }
  }
}

TEST_CASE("property: proportional_to metadata holds numerically") {
  std::mt19937_64 rng(5);
  for (const CaseId& cell : oracle::realizable_cells()) {
    for (int i = 0; i < 10; ++i) {
      const auto d = oracle::draw_for_cell(cell, rng);
      const SolutionBasis basis = basis_for(d.a, d.b);
      std::vector<SolutionDescriptor> ds{basis.first, basis.second};
      for (const auto& p : basis.alternatives) {
        ds.push_back(p.first);
        ds.push_back(p.second);
      }
      for (const auto& desc : ds) {
        if (!desc.proportional_to) continue;
        SolutionDescriptor other{*desc.proportional_to, false, std::nullopt};
        const auto cert = oracle::certify_pair(desc, other, d.a, d.b, 1.0);
        INFO(cell.to_string(), " a=", d.a.to_string(), " b=", d.b.to_string());
        CHECK(std::fabs(cert.wronskian) <= 1e-9 * cert.scale);
      }
    }
  }
}

TEST_CASE("property: every offered solution satisfies Kummer's equation") {
  std::mt19937_64 rng(99);
  const std::vector<double> zs{0.5, 1.0, 2.0, 5.0};
  for (const CaseId& cell : oracle::realizable_cells()) {
    for (int i = 0; i < 10; ++i) {
      const auto d = oracle::draw_for_cell(cell, rng);
      const SolutionBasis basis = basis_for(d.a, d.b);
      std::set<K> seen{basis.first.kind, basis.second.kind};
      for (const auto& p : basis.alternatives) seen.insert({p.first.kind, p.second.kind});
      for (K k : seen) {
        SolutionDescriptor desc{k, false, std::nullopt};
        const auto rep = oracle::ode_residual(desc, d.a, d.b, zs);
        INFO(cell.to_string(), " a=", d.a.to_string(), " b=", d.b.to_string(), " ", to_string(k),
             " res=", rep.max_scaled_residual);
        CHECK(rep.passes());
      }
    }
  }
}
