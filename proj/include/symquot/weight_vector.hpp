#pragma once

#include "symquot/rational.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace symquot {

/// Integer weights (a_1, ..., a_n) of a diagonal circle action on C^n.
/// Everything else (alphas, gcds, symmetric functions) is derived on demand.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<std::int64_t> weights) : w_(std::move(weights)) {}
  WeightVector(std::initializer_list<std::int64_t> weights) : w_(weights) {}

  /// Parses "a1,a2,...". Throws std::invalid_argument.
  static WeightVector parse(std::string_view text);

  const std::vector<std::int64_t>& weights() const { return w_; }
  std::size_t size() const { return w_.size(); }
  std::int64_t operator[](std::size_t i) const { return w_.at(i); }

  std::int64_t alpha(std::size_t i) const { return w_.at(i) < 0 ? -w_[i] : w_[i]; }
  std::vector<std::int64_t> alphas() const;
  /// gcd(alpha_i, alpha_j)
  std::int64_t pair_gcd(std::size_t i, std::size_t j) const { return gcd64(alpha(i), alpha(j)); }
  /// gcd of the alphas over the index set (0 for an empty set).
  std::int64_t gcd_of(const std::vector<std::size_t>& indices) const;
  std::int64_t gcd_all() const;

  /// Elementary symmetric polynomial of degree k in the alphas.
  Integer elementary(unsigned k) const;
  Integer e1() const { return elementary(1); }
  Integer e2() const { return elementary(2); }
  Integer e3() const { return elementary(3); }

  std::size_t count_negative() const;
  std::size_t count_positive() const;
  std::size_t count_zero() const;
  bool both_signs() const { return count_negative() > 0 && count_positive() > 0; }
  /// True when the alphas are pairwise distinct.
  bool alphas_distinct() const;

  WeightVector without(std::size_t index) const;
  WeightVector divided_by(std::int64_t d) const;

  /// "a1,a2,..." (round-trips through parse).
  std::string to_string() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w_ == b.w_; }
  friend bool operator<(const WeightVector& a, const WeightVector& b) { return a.w_ < b.w_; }

 private:
  std::vector<std::int64_t> w_;
};

struct NormalizationLog {
  bool trivial = false;                       // all weights were zero
  std::vector<std::size_t> removed_zero_positions;
  std::int64_t divided_by = 1;
  bool sign_flipped = false;
  bool reordered = false;
  /// source_index[k] = position in the input of normalized weight k.
  std::vector<std::size_t> source_index;

  std::vector<std::string> entries() const;
};

struct Normalized {
  WeightVector vector;
  NormalizationLog log;
};

/// Strips zero weights, divides by the common gcd and, when exactly one
/// weight has its sign, moves that weight to the front and makes it negative.
/// The remaining weights keep their input order.
Normalized normalize(const WeightVector& a);

/// Indices forced to vanish on the zero level of the moment map: all of them
/// when every weight has the same sign, none otherwise.
std::vector<std::size_t> shell_support(const WeightVector& a);

}  // namespace symquot
