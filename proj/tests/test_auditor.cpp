#include "doctest.h"

#include "symquot/auditor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace symquot;

namespace {

// 1/gamma0 = (e1 e2 - e3) / e2 from the alphas directly, integer arithmetic.
std::optional<std::int64_t> order_if_integral(std::int64_t x, std::int64_t y, std::int64_t z) {
  const std::int64_t e1 = x + y + z, e2 = x * y + x * z + y * z, e3 = x * y * z;
  if ((e1 * e2 - e3) % e2) return std::nullopt;
  return (e1 * e2 - e3) / e2;
}

std::vector<std::int64_t> sorted_alphas(const WeightVector& v) {
  auto a = v.alphas();
  std::sort(a.begin(), a.end());
  return a;
}

// Diophantine-passing scan vectors with alpha <= 30, smallest orders first.
std::vector<WeightVector> small_order_vectors(std::size_t count) {
  std::vector<std::pair<std::int64_t, WeightVector>> hits;
  for (const auto& v : scan_vectors(3, 30))
    if (auto N = order_if_integral(v.alpha(0), v.alpha(1), v.alpha(2))) hits.emplace_back(*N, v);
  std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<WeightVector> out;
  for (std::size_t i = 0; i < std::min(count, hits.size()); ++i) out.push_back(hits[i].second);
  return out;
}

CandidateCache& shared_cache() {
  static CandidateCache cache;
  return cache;
}

}  // namespace

TEST_CASE("(-6,10,15) is excluded over every order-28 candidate") {
  WeightVector a{-6, 10, 15};
  AuditReport r = audit(a, &shared_cache());
  CHECK(r.verdict == Verdict::excluded_all_candidates);
  REQUIRE(r.gamma0);
  CHECK(*r.gamma0 == make_rational(1, 28));  // e1 = 31, e2 = 300, e3 = 900
  REQUIRE(r.terminals.size() == 1);
  const auto& t = r.terminals[0];
  auto specs = enumerate_groups_of_order(28);
  REQUIRE(t.candidates.size() == specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    CAPTURE(specs[i].to_string());
    CHECK(t.candidates[i].candidate == specs[i]);
    REQUIRE(t.candidates[i].certificate);
    CHECK(revalidate(*t.candidates[i].certificate, a));
  }

  // Codimension-one nodes {1,2} and {1,3}: N = 16/2 = 8 and 21/3 = 7, so the
  // required primitive orders are 28/8 = 7/2 and 28/7 = 4.
  int type_one = 0;
  for (const auto& c : t.candidates) {
    if (c.certificate->obstruction != Obstruction::typeI_stratum_integrality) continue;
    ++type_one;
    CHECK(c.certificate->witness.at("N_12") == "8");
    CHECK(c.certificate->witness.at("N_13") == "7");
    CHECK(c.certificate->witness.at("required_order_12") == "7/2");
    CHECK(c.certificate->witness.at("required_order_13") == "4");
  }
  CHECK(type_one > 0);
}

TEST_CASE("reduction to three weights") {
  SUBCASE("(-3,6,12,4) fails after one step") {
    auto chains = all_reductions(WeightVector{-3, 6, 12, 4});
    REQUIRE(chains.size() == 1);
    REQUIRE(chains[0].steps.size() == 1);
    CHECK(chains[0].steps[0].child == WeightVector{-1, 2, 4});
    CHECK(chains[0].steps[0].node.isotropy_order == 3);
    CHECK_FALSE(chains[0].terminal);
    CHECK(chains[0].failure.find("-1,2,4") != std::string::npos);
    CHECK_FALSE(reduce_to_n3(WeightVector{-3, 6, 12, 4}).terminal);
  }
  SUBCASE("(-2,4,6,3) steps to (-1,2,3)") {
    auto c = reduce_to_n3(WeightVector{-2, 4, 6, 3});
    REQUIRE(c.steps.size() == 1);
    CHECK(c.steps[0].parent == WeightVector{-2, 4, 6, 3});
    CHECK(c.steps[0].child == WeightVector{-1, 2, 3});
    CHECK(c.steps[0].node.isotropy_order == 2);
  }
  SUBCASE("an n = 3 vector is its own terminal") {
    auto c = reduce_to_n3(WeightVector{-6, 10, 15});
    CHECK(c.steps.empty());
    REQUIRE(c.terminal);
    CHECK(*c.terminal == WeightVector{-6, 10, 15});
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(reduce_to_n3(WeightVector{-1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(reduce_to_n3(WeightVector{-1, -1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(reduce_to_n3(WeightVector{-2, 4, 6}), std::invalid_argument);
  }
}

TEST_CASE("every step removes one positive weight and re-normalizes") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> d(1, 12);
  int checked = 0;
  for (int trial = 0; trial < 800; ++trial) {
    const std::size_t n = 4 + trial % 2;
    std::vector<std::int64_t> w{-d(rng)};
    for (std::size_t i = 1; i < n; ++i) w.push_back(d(rng));
    WeightVector v = normalize(WeightVector(w)).vector;
    if (v.size() != n || v.count_negative() != 1) continue;
    bool any_terminal = false;
    for (const auto& chain : all_reductions(v)) {
      any_terminal = any_terminal || chain.terminal.has_value();
      for (const auto& s : chain.steps) {
        REQUIRE(s.child.size() + 1 == s.parent.size());
        std::size_t removed = 0;
        while (std::count(s.node.support.begin(), s.node.support.end(), removed)) ++removed;
        CHECK(s.parent[removed] > 0);
        CHECK(s.child == normalize(s.parent.without(removed)).vector);
        ++checked;
      }
    }
    CAPTURE(v.to_string());
    CHECK(any_terminal == codim1_chain_exists(v));
  }
  CHECK(checked > 100);
}

TEST_CASE("verdict routing") {
  CHECK(audit(WeightVector{1, 2, 3}).verdict == Verdict::point);
  CHECK(audit(WeightVector{-1, -1, -1}).verdict == Verdict::point);
  CHECK(audit(WeightVector{0, 0}).verdict == Verdict::not_applicable);

  AuditReport two = audit(WeightVector{-1, 1});
  CHECK(two.verdict == Verdict::dimension_two_orbifold);
  CHECK(two.cyclic_order == 2);
  CHECK(audit(WeightVector{-4, 6}).cyclic_order == 5);  // (2 + 3) / 1 after dividing by 2

  AuditReport rhm = audit(WeightVector{-1, -2, 3, 4});
  CHECK(rhm.verdict == Verdict::excluded_by_predicate);
  CHECK(rhm.predicates.first_failure() == "rhm");

  // alpha = (1,1,1): degenerate, gamma0 = 3/8
  AuditReport deg = audit(WeightVector{-1, 1, 1});
  CHECK(deg.verdict == Verdict::excluded_by_predicate);
  CHECK(*deg.gamma0 == make_rational(3, 8));
  CHECK(deg.terminals.at(0).candidates.empty());

  // alpha = (1,2,3): 1/gamma0 = 60/11
  AuditReport dio = audit(WeightVector{-1, 2, 3});
  CHECK(dio.verdict == Verdict::excluded_by_predicate);
  CHECK(*dio.gamma0 == make_rational(11, 60));
  CHECK(dio.predicates.first_failure() == "diophantine");

  AuditReport chain = audit(WeightVector{-3, 6, 12, 4});
  CHECK(chain.verdict == Verdict::excluded_by_predicate);
  CHECK(*chain.gamma0 == make_rational(1, 21));
  CHECK(chain.predicates.first_failure() == "codim1_chain");
}

TEST_CASE("certificates re-validate, tampered ones do not") {
  WeightVector a{-6, 10, 15};
  auto t = audit_n3(a, &shared_cache());
  std::set<Obstruction> kinds;
  for (const auto& c : t.candidates) {
    kinds.insert(c.certificate->obstruction);
    ExclusionCertificate bad = *c.certificate;
    bad.witness["group_order"] = "29";
    CHECK_FALSE(revalidate(bad, a));
  }
  CHECK(kinds.size() >= 3);

  // The series comparison, forced on a candidate that an earlier test already excludes.
  DuValSpec spec{DuValType::II, 7, 1};
  FiniteU2Group g = duval_group(spec);
  auto lhs = hilb_on_series(a, 12);
  auto rhs = molien_coefficients(g, 12);
  std::size_t k = 0;
  while (k <= 12 && lhs[k] == Rational(rhs[k])) ++k;
  REQUIRE(k <= 12);
  ExclusionCertificate h{spec, Obstruction::hilbert_series_mismatch,
                         {{"group_order", "28"},
                          {"degree", std::to_string(k)},
                          {"coefficient_weights", to_string(lhs[k])},
                          {"coefficient_group", to_string(rhs[k])}}};
  CHECK(revalidate(h, a));
  h.witness["coefficient_group"] = to_string(lhs[k]);
  CHECK_FALSE(revalidate(h, a));
}

TEST_CASE("earlier obstructions never contradict the series comparison") {
  auto vectors = small_order_vectors(20);
  REQUIRE(vectors.size() == 20);
  const std::size_t D = 40;
  std::map<DuValSpec, std::vector<Integer>> group_coeffs;
  for (const auto& a : vectors) {
    auto t = audit_n3(a, &shared_cache());
    REQUIRE(t.verdict == Verdict::excluded_all_candidates);
    auto lhs = hilb_on_series(a, D);
    for (const auto& c : t.candidates) {
      CAPTURE(a.to_string());
      CAPTURE(c.candidate.to_string());
      REQUIRE(c.certificate);
      auto it = group_coeffs.find(c.candidate);
      if (it == group_coeffs.end())
        it = group_coeffs.emplace(c.candidate, molien_coefficients(duval_group(c.candidate), D)).first;
      bool differ = false;
      for (std::size_t k = 0; k <= D && !differ; ++k) differ = lhs[k] != Rational(it->second[k]);
      CHECK(differ);
    }
  }
}

TEST_CASE("audit is invariant under permutations of the weights") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> d(1, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 2;
    std::vector<std::int64_t> w{-d(rng)};
    for (std::size_t i = 1; i < n; ++i) w.push_back(d(rng));
    if (trial == 0) w = {-6, 10, 15};
    AuditReport base = audit(WeightVector(w), &shared_cache());
    std::set<std::vector<std::int64_t>> base_terminals;
    for (const auto& t : base.terminals) base_terminals.insert(sorted_alphas(t.vector));
    std::sort(w.begin(), w.end());
    do {
      CAPTURE(WeightVector(w).to_string());
      AuditReport r = audit(WeightVector(w), &shared_cache());
      CHECK(r.verdict == base.verdict);
      std::set<std::vector<std::int64_t>> terminals;
      for (const auto& t : r.terminals) terminals.insert(sorted_alphas(t.vector));
      CHECK(terminals == base_terminals);
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("scan over alpha <= 10") {
  auto vectors = scan_vectors(3, 10);
  std::size_t expected = 0;
  for (std::int64_t x = 1; x <= 10; ++x)
    for (std::int64_t y = 1; y <= 10; ++y)
      for (std::int64_t z = y + 1; z <= 10; ++z)
        if (x != y && x != z && gcd64(gcd64(x, y), z) == 1) ++expected;
  CHECK(vectors.size() == expected);
  CHECK(std::is_sorted(vectors.begin(), vectors.end(),
                       [](const WeightVector& a, const WeightVector& b) { return a.alphas() < b.alphas(); }));

  auto rows = scan(3, 10, 1);
  REQUIRE(rows.size() == vectors.size());
  std::size_t passing = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].weights == vectors[i]);
    CHECK((rows[i].verdict == Verdict::excluded_by_predicate || rows[i].verdict == Verdict::excluded_all_candidates));
    const bool dio = order_if_integral(vectors[i].alpha(0), vectors[i].alpha(1), vectors[i].alpha(2)).has_value();
    CHECK(dio == !rows[i].predicates.diophantine.failed());
    passing += dio;
  }
  CHECK(passing == 3);  // the permutations of alpha = (2,3,6)

  auto threaded = scan(3, 10, 3);
  REQUIRE(threaded.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(threaded[i].weights == rows[i].weights);
    CHECK(threaded[i].verdict == rows[i].verdict);
    CHECK(threaded[i].first_obstruction == rows[i].first_obstruction);
  }

  CHECK(scan(3, 0).empty());
  CHECK(scan_vectors(4, 0).empty());
}

TEST_CASE("obstruction summary") {
  DuValSpec s{DuValType::II, 1, 1};
  std::vector<CandidateResult> v = {{s, ExclusionCertificate{s, Obstruction::ratio_violation, {}}},
                                    {s, ExclusionCertificate{s, Obstruction::no_pseudoreflection, {}}},
                                    {s, ExclusionCertificate{s, Obstruction::no_pseudoreflection, {}}},
                                    {s, std::nullopt}};
  CHECK(obstruction_summary(v) == "no_pseudoreflection:2 ratio_violation:1 survivors:1");
  CHECK(obstruction_summary({}).empty());
}

TEST_CASE("finite scans of the case analysis") {
  auto checks = verify_paper_arguments(40);
  REQUIRE(checks.size() >= 8);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  CHECK(checks[0].detail == "8 solutions, all even");
}
