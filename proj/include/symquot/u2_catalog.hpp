#pragma once

#include "symquot/unitary.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symquot {

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closure of the generators grew past the safety cap.
class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SU2Kind { cyclic, binary_dihedral, tetrahedral, octahedral, icosahedral };

/// Elements of a finite subgroup of SU(2). `m` is the order of the cyclic
/// group or the index of the binary dihedral group (order 4m). A null field
/// picks the smallest convenient conductor.
std::vector<UnitaryMatrix2> su2_group(SU2Kind kind, std::int64_t m = 1, FieldPtr field = nullptr);

enum class DuValType { I, II, III, IIIp, IV, V, VI, VII, VIII, IX };

std::string to_string(DuValType t);
/// Accepts "I" .. "IX" and "III'" / "IIIp". Throws InvalidSpec.
DuValType parse_duval_type(const std::string& s);

/// Parameters of (L/L_K; R/R_K)_phi. Type I uses m, n, f, g, d; the other
/// types use m and ell (V..IX only m).
struct DuValSpec {
  DuValType type = DuValType::II;
  std::int64_t m = 1;
  std::int64_t ell = 1;
  std::int64_t n = 1;
  std::int64_t f = 1;
  std::int64_t g = 1;
  std::int64_t d = 0;

  /// Throws InvalidSpec when a parameter constraint fails.
  void validate() const;
  /// |R| |L_K| / 2
  std::int64_t predicted_order() const;
  /// Conductor holding the generators and all eigenvalues.
  unsigned conductor() const;
  std::string to_string() const;

  friend bool operator==(const DuValSpec& a, const DuValSpec& b);
  friend bool operator<(const DuValSpec& a, const DuValSpec& b);
};

struct PrimitivePseudoreflection {
  UnitaryMatrix2 element;
  unsigned order = 0;
  /// Number of pseudoreflections in its class (order - 1).
  std::size_t class_size = 0;
};

struct FiniteU2Group {
  std::optional<DuValSpec> spec;
  FieldPtr field;
  std::vector<UnitaryMatrix2> elements;    // sorted, identity included
  std::vector<EigenExponents> exponents;   // parallel to elements
  std::vector<std::size_t> pseudoreflections;  // indices into elements
  std::vector<PrimitivePseudoreflection> primitive_set;

  std::size_t order() const { return elements.size(); }
  unsigned element_order(std::size_t i) const;
};

/// Closure of the generators with pseudoreflection census and primitive set.
/// Throws GeneratorError past `cap` elements (0: no cap).
FiniteU2Group make_group(const std::vector<UnitaryMatrix2>& generators, std::size_t cap = 0);

/// Builds the group of a spec and checks its order. Throws InvalidSpec on a
/// bad spec and std::logic_error when the order disagrees with the formula.
FiniteU2Group duval_group(const DuValSpec& spec);

/// Groups the pseudoreflections by fixed line and returns one generator per
/// class. Throws std::logic_error when a class is not cyclic.
std::vector<PrimitivePseudoreflection> primitive_pseudoreflection_set(const FiniteU2Group& g);

struct FiniteGamma {
  Rational gamma0;
  Rational gamma2;
};

/// gamma0 = 1/|G|, gamma2 = sum (r_i^2 - 1) / (12 |G|) over primitive orders r_i.
FiniteGamma gamma_finite_closed_form(const FiniteU2Group& g);

struct EnumerationCaps {
  /// Upper bound on m, ell and n; 0 means bounded only by the order.
  std::int64_t max_parameter = 0;
};

/// All specs of predicted order N. Type I specs with identical element sets
/// are reported once.
std::vector<DuValSpec> enumerate_groups_of_order(std::int64_t N, EnumerationCaps caps = {});

}  // namespace symquot
