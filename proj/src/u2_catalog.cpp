#include "symquot/u2_catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace symquot {

namespace {

unsigned conductor_lcm(std::initializer_list<std::int64_t> parts) {
  std::int64_t c = 2;
  for (auto p : parts) c = lcm64(c, p);
  return static_cast<unsigned>(c);
}

// Scalar of order k and diag(w_k, w_k^-1) in Q(zeta_M).
UnitaryMatrix2 omega(const FieldPtr& f, std::int64_t k) {
  return UnitaryMatrix2::scalar(f, static_cast<long>(f->conductor() / k));
}

UnitaryMatrix2 s_elem(const FieldPtr& f, std::int64_t k) {
  long e = static_cast<long>(f->conductor() / k);
  return UnitaryMatrix2::diag(f, e, -e);
}

// a + b i + c j as a matrix, with i = diag(i, -i) and j = [[0, 1], [-1, 0]].
UnitaryMatrix2 quaternion(const FieldPtr& f, const CyclotomicElement& a, const CyclotomicElement& b,
                          const CyclotomicElement& c) {
  CyclotomicElement i = CyclotomicElement::zeta(f, f->conductor() / 4);
  return UnitaryMatrix2(a + b * i, c, -c, a - b * i);
}

std::vector<UnitaryMatrix2> tetrahedral_generators(const FieldPtr& f) {
  CyclotomicElement i = CyclotomicElement::zeta(f, f->conductor() / 4);
  CyclotomicElement one(f, 1);
  Rational half(1, 2);
  // t = (1 + i + j + k) / 2
  UnitaryMatrix2 t((one + i) * half, (one + i) * half, (i - one) * half, (one - i) * half);
  return {s_elem(f, 4), UnitaryMatrix2::b(f), t};
}

std::vector<UnitaryMatrix2> octahedral_generators(const FieldPtr& f) {
  auto g = tetrahedral_generators(f);
  g.push_back(s_elem(f, 8));
  return g;
}

std::vector<UnitaryMatrix2> icosahedral_generators(const FieldPtr& f) {
  CyclotomicElement one(f, 1);
  CyclotomicElement z5 = CyclotomicElement::zeta(f, f->conductor() / 5);
  CyclotomicElement sqrt5 = one + (z5 + z5.pow(4)) * Rational(2);
  Rational half(1, 2);
  CyclotomicElement tau = (one + sqrt5) * half;
  CyclotomicElement tau_inv = tau - one;
  // (tau + tau^-1 i + j) / 2
  UnitaryMatrix2 g = quaternion(f, tau * half, tau_inv * half, one * half);
  auto gens = tetrahedral_generators(f);
  gens.push_back(g);
  return gens;
}

std::vector<UnitaryMatrix2> closure(const std::vector<UnitaryMatrix2>& gens, const FieldPtr& field, std::size_t cap) {
  std::set<UnitaryMatrix2> seen;
  std::vector<UnitaryMatrix2> frontier{UnitaryMatrix2::identity(field)};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    UnitaryMatrix2 x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : gens) {
      UnitaryMatrix2 y = x * g;
      if (seen.insert(y).second) {
        if (cap && seen.size() > cap)
          throw GeneratorError("group closure exceeded " + std::to_string(cap) + " elements");
        frontier.push_back(std::move(y));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

FieldPtr field_for(const std::vector<UnitaryMatrix2>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  return gens[0].field();
}

}  // namespace

std::vector<UnitaryMatrix2> su2_group(SU2Kind kind, std::int64_t m, FieldPtr field) {
  if (m < 1) throw std::invalid_argument("su2_group needs m >= 1");
  unsigned conductor = 0;
  std::size_t expected = 0;
  switch (kind) {
    case SU2Kind::cyclic: conductor = conductor_lcm({m}); expected = static_cast<std::size_t>(m); break;
    case SU2Kind::binary_dihedral: conductor = conductor_lcm({2 * m, 4}); expected = static_cast<std::size_t>(4 * m); break;
    case SU2Kind::tetrahedral: conductor = 12; expected = 24; break;
    case SU2Kind::octahedral: conductor = 24; expected = 48; break;
    case SU2Kind::icosahedral: conductor = 60; expected = 120; break;
  }
  if (!field) field = CyclotomicField::make(conductor);
  if (field->conductor() % conductor != 0)
    throw std::invalid_argument("field conductor " + std::to_string(field->conductor()) + " is not a multiple of " +
                                std::to_string(conductor));
  std::vector<UnitaryMatrix2> gens;
  switch (kind) {
    case SU2Kind::cyclic: gens = {s_elem(field, m)}; break;
    case SU2Kind::binary_dihedral: gens = {s_elem(field, 2 * m), UnitaryMatrix2::b(field)}; break;
    case SU2Kind::tetrahedral: gens = tetrahedral_generators(field); break;
    case SU2Kind::octahedral: gens = octahedral_generators(field); break;
    case SU2Kind::icosahedral: gens = icosahedral_generators(field); break;
  }
  return closure(gens, field, 10 * expected);
}

std::string to_string(DuValType t) {
  switch (t) {
    case DuValType::I: return "I";
    case DuValType::II: return "II";
    case DuValType::III: return "III";
    case DuValType::IIIp: return "III'";
    case DuValType::IV: return "IV";
    case DuValType::V: return "V";
    case DuValType::VI: return "VI";
    case DuValType::VII: return "VII";
    case DuValType::VIII: return "VIII";
    case DuValType::IX: return "IX";
  }
  return "?";
}

DuValType parse_duval_type(const std::string& s) {
  static const std::map<std::string, DuValType> names = {
      {"I", DuValType::I},       {"II", DuValType::II},   {"III", DuValType::III}, {"III'", DuValType::IIIp},
      {"IIIp", DuValType::IIIp}, {"IV", DuValType::IV},   {"V", DuValType::V},     {"VI", DuValType::VI},
      {"VII", DuValType::VII},   {"VIII", DuValType::VIII}, {"IX", DuValType::IX}};
  auto it = names.find(s);
  if (it == names.end()) throw InvalidSpec("unknown group type '" + s + "'");
  return it->second;
}

void DuValSpec::validate() const {
  auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw InvalidSpec(msg);
  };
  need(m >= 1, "m must be positive");
  need(ell >= 1, "ell must be positive");
  switch (type) {
    case DuValType::I: {
      need(n >= 1 && f >= 1 && g >= 1, "n, f, g must be positive");
      need((2 * m) % f == 0, "f must divide 2m");
      need((2 * n) % g == 0, "g must divide 2n");
      need((2 * m) / f == (2 * n) / g, "2m/f must equal 2n/g");
      need((f - g) % 2 == 0, "f and g must have the same parity");
      std::int64_t q = (2 * m) / f;
      need(d >= 0 && d < q, "d must lie in [0, 2m/f)");
      need(gcd64(d, q) == 1, "d must be coprime to 2m/f");
      break;
    }
    case DuValType::IIIp: need(m % 2 == 1 && ell % 2 == 1, "Type III' needs m and ell odd"); break;
    default: break;
  }
}

std::int64_t DuValSpec::predicted_order() const {
  switch (type) {
    case DuValType::I: return n * f;
    case DuValType::II: return 4 * m * ell;
    case DuValType::III: return 4 * m * ell;
    case DuValType::IIIp: return 2 * m * ell;
    case DuValType::IV: return 8 * m * ell;
    case DuValType::V: return 24 * m;
    case DuValType::VI: return 24 * m;
    case DuValType::VII: return 48 * m;
    case DuValType::VIII: return 48 * m;
    case DuValType::IX: return 120 * m;
  }
  return 0;
}

unsigned DuValSpec::conductor() const {
  switch (type) {
    case DuValType::I: return conductor_lcm({2 * m, 2 * n});
    case DuValType::II: return conductor_lcm({2 * m, 2 * ell, 4});
    case DuValType::III: return conductor_lcm({4 * m, 2 * ell});
    case DuValType::IIIp: return conductor_lcm({4 * m, 2 * ell});
    case DuValType::IV: return conductor_lcm({4 * m, 4 * ell});
    case DuValType::V: return conductor_lcm({2 * m, 12});
    case DuValType::VI: return conductor_lcm({6 * m, 12});
    case DuValType::VII: return conductor_lcm({2 * m, 24});
    case DuValType::VIII: return conductor_lcm({4 * m, 24});
    case DuValType::IX: return conductor_lcm({2 * m, 60});
  }
  return 2;
}

std::string DuValSpec::to_string() const {
  std::ostringstream out;
  out << symquot::to_string(type) << "(m=" << m;
  switch (type) {
    case DuValType::I: out << ",n=" << n << ",f=" << f << ",g=" << g << ",d=" << d; break;
    case DuValType::II:
    case DuValType::III:
    case DuValType::IIIp:
    case DuValType::IV: out << ",ell=" << ell; break;
    default: break;
  }
  out << ")";
  return out.str();
}

bool operator==(const DuValSpec& a, const DuValSpec& b) {
  return std::tie(a.type, a.m, a.ell, a.n, a.f, a.g, a.d) == std::tie(b.type, b.m, b.ell, b.n, b.f, b.g, b.d);
}

bool operator<(const DuValSpec& a, const DuValSpec& b) {
  return std::tie(a.type, a.m, a.ell, a.n, a.f, a.g, a.d) < std::tie(b.type, b.m, b.ell, b.n, b.f, b.g, b.d);
}

unsigned FiniteU2Group::element_order(std::size_t i) const {
  return symquot::element_order(exponents.at(i), field->conductor());
}

std::vector<PrimitivePseudoreflection> primitive_pseudoreflection_set(const FiniteU2Group& g) {
  std::map<std::array<std::vector<Rational>, 2>, std::vector<std::size_t>> classes;
  for (auto i : g.pseudoreflections) {
    auto line = fixed_line(g.elements[i]);
    classes[{line[0].coords(), line[1].coords()}].push_back(i);
  }
  std::vector<PrimitivePseudoreflection> out;
  for (const auto& [line, members] : classes) {
    std::size_t best = members[0];
    for (auto i : members)
      if (g.element_order(i) > g.element_order(best)) best = i;
    const unsigned r = g.element_order(best);
    // The class together with the identity must be the cyclic group generated by `best`.
    std::set<UnitaryMatrix2> powers;
    UnitaryMatrix2 p = g.elements[best];
    for (unsigned k = 1; k < r; ++k, p = p * g.elements[best]) powers.insert(p);
    if (powers.size() != members.size() || members.size() != r - 1)
      throw std::logic_error("pseudoreflections fixing one line do not form a cyclic group");
    for (auto i : members)
      if (!powers.count(g.elements[i])) throw std::logic_error("pseudoreflection not covered by the primitive set");
    out.push_back({g.elements[best], r, members.size()});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.order != b.order ? a.order < b.order : a.element < b.element;
  });
  return out;
}

FiniteU2Group make_group(const std::vector<UnitaryMatrix2>& generators, std::size_t cap) {
  FieldPtr field = field_for(generators);
  for (const auto& g : generators) {
    if (g.field()->conductor() != field->conductor()) throw std::invalid_argument("generators from different fields");
    if (!g.is_unitary()) throw std::invalid_argument("generator is not unitary: " + g.to_string());
  }
  FiniteU2Group G;
  G.field = field;
  G.elements = closure(generators, field, cap);
  RootTable roots(field);
  G.exponents.reserve(G.elements.size());
  for (std::size_t i = 0; i < G.elements.size(); ++i) {
    G.exponents.push_back(eigen_exponents(G.elements[i], roots));
    if (is_pseudoreflection(G.elements[i])) G.pseudoreflections.push_back(i);
  }
  G.primitive_set = primitive_pseudoreflection_set(G);
  return G;
}

FiniteU2Group duval_group(const DuValSpec& spec) {
  spec.validate();
  FieldPtr f = CyclotomicField::make(spec.conductor());
  const std::int64_t m = spec.m, l = spec.ell;
  std::vector<UnitaryMatrix2> gens;
  switch (spec.type) {
    case DuValType::I:
      gens = {omega(f, spec.f), s_elem(f, spec.g), omega(f, 2 * m) * s_elem(f, 2 * spec.n).pow(static_cast<unsigned>(spec.d))};
      break;
    case DuValType::II: gens = {omega(f, 2 * m), s_elem(f, 2 * l), UnitaryMatrix2::b(f)}; break;
    case DuValType::III: gens = {omega(f, 2 * m), s_elem(f, 2 * l), omega(f, 4 * m) * UnitaryMatrix2::b(f)}; break;
    case DuValType::IIIp: gens = {omega(f, m), s_elem(f, l), omega(f, 4 * m) * UnitaryMatrix2::b(f)}; break;
    case DuValType::IV:
      gens = {omega(f, 2 * m), s_elem(f, 2 * l), UnitaryMatrix2::b(f), omega(f, 4 * m) * s_elem(f, 4 * l)};
      break;
    case DuValType::V:
      gens = tetrahedral_generators(f);
      gens.push_back(omega(f, 2 * m));
      break;
    case DuValType::VI: {
      auto t = tetrahedral_generators(f);
      gens = {omega(f, 2 * m), t[0], t[1], omega(f, 6 * m) * t[2]};
      break;
    }
    case DuValType::VII:
      gens = octahedral_generators(f);
      gens.push_back(omega(f, 2 * m));
      break;
    case DuValType::VIII:
      gens = tetrahedral_generators(f);
      gens.push_back(omega(f, 2 * m));
      gens.push_back(omega(f, 4 * m) * s_elem(f, 8));
      break;
    case DuValType::IX:
      gens = icosahedral_generators(f);
      gens.push_back(omega(f, 2 * m));
      break;
  }
  const auto expected = static_cast<std::size_t>(spec.predicted_order());
  FiniteU2Group G = make_group(gens, 10 * expected);
  G.spec = spec;
  if (G.order() != expected)
    throw std::logic_error(spec.to_string() + ": enumerated " + std::to_string(G.order()) +
                           " elements, expected " + std::to_string(expected));
  return G;
}

FiniteGamma gamma_finite_closed_form(const FiniteU2Group& g) {
  const long order = static_cast<long>(g.order());
  Rational sum = 0;
  for (const auto& p : g.primitive_set) sum += static_cast<long>(p.order) * static_cast<long>(p.order) - 1;
  Rational gamma2 = sum / Rational(12 * order);
  gamma2.canonicalize();
  return {make_rational(1, order), gamma2};
}

namespace {

// Element set of a Type I group as pairs of angles in Q/Z, each stored as a
// reduced (numerator, denominator) pair.
std::vector<std::array<std::int64_t, 4>> type_one_key(const DuValSpec& s) {
  const std::int64_t L = lcm64(2 * s.m, 2 * s.n);
  auto mod = [L](std::int64_t x) { return ((x % L) + L) % L; };
  std::vector<std::pair<std::int64_t, std::int64_t>> gens = {
      {L / s.f, L / s.f},
      {L / s.g, mod(-L / s.g)},
      {mod(L / (2 * s.m) + s.d * (L / (2 * s.n))), mod(L / (2 * s.m) - s.d * (L / (2 * s.n)))}};
  std::set<std::pair<std::int64_t, std::int64_t>> seen{{0, 0}};
  std::vector<std::pair<std::int64_t, std::int64_t>> frontier{{0, 0}};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      std::pair<std::int64_t, std::int64_t> y{mod(x.first + g.first), mod(x.second + g.second)};
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  std::vector<std::array<std::int64_t, 4>> key;
  for (auto [a, b] : seen) {
    std::int64_t ga = gcd64(a, L), gb = gcd64(b, L);
    key.push_back({a / ga, L / ga, b / gb, L / gb});
  }
  std::sort(key.begin(), key.end());
  return key;
}

std::vector<std::pair<std::int64_t, std::int64_t>> factor_pairs(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 1; a <= n; ++a)
    if (n % a == 0) out.emplace_back(a, n / a);
  return out;
}

}  // namespace

std::vector<DuValSpec> enumerate_groups_of_order(std::int64_t N, EnumerationCaps caps) {
  std::vector<DuValSpec> out;
  if (N < 1) return out;
  auto within = [&](std::initializer_list<std::int64_t> v) {
    if (caps.max_parameter <= 0) return true;
    for (auto x : v)
      if (x > caps.max_parameter) return false;
    return true;
  };

  std::set<std::vector<std::array<std::int64_t, 4>>> type_one_sets;
  for (auto [n, f] : factor_pairs(N)) {
    for (std::int64_t g = 1; g <= 2 * n; ++g) {
      if ((2 * n) % g != 0 || (f - g) % 2 != 0) continue;
      const std::int64_t q = 2 * n / g;
      if ((q * f) % 2 != 0) continue;
      const std::int64_t m = q * f / 2;
      if (!within({m, n})) continue;
      for (std::int64_t d = 0; d < q; ++d) {
        if (gcd64(d, q) != 1) continue;
        DuValSpec s{DuValType::I, m, 1, n, f, g, d};
        if (type_one_sets.insert(type_one_key(s)).second) out.push_back(s);
      }
    }
  }
  auto two_param = [&](DuValType t, std::int64_t divisor, bool odd_only) {
    if (N % divisor != 0) return;
    for (auto [m, l] : factor_pairs(N / divisor)) {
      if (odd_only && (m % 2 == 0 || l % 2 == 0)) continue;
      if (!within({m, l})) continue;
      out.push_back(DuValSpec{t, m, l});
    }
  };
  two_param(DuValType::II, 4, false);
  two_param(DuValType::III, 4, false);
  two_param(DuValType::IIIp, 2, true);
  two_param(DuValType::IV, 8, false);
  auto one_param = [&](DuValType t, std::int64_t divisor) {
    if (N % divisor != 0 || !within({N / divisor})) return;
    out.push_back(DuValSpec{t, N / divisor});
  };
  one_param(DuValType::V, 24);
  one_param(DuValType::VI, 24);
  one_param(DuValType::VII, 48);
  one_param(DuValType::VIII, 48);
  one_param(DuValType::IX, 120);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symquot
