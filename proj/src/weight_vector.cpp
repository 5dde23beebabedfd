#include "symquot/weight_vector.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace symquot {

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<std::int64_t> w;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size())
      throw std::invalid_argument("cannot parse weight '" + std::string(tok) + "'");
    if (v > (std::int64_t{1} << 30) || v < -(std::int64_t{1} << 30))
      throw std::invalid_argument("weight out of range: " + std::string(tok));
    w.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return WeightVector(std::move(w));
}

std::vector<std::int64_t> WeightVector::alphas() const {
  std::vector<std::int64_t> a(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) a[i] = alpha(i);
  return a;
}

std::int64_t WeightVector::gcd_of(const std::vector<std::size_t>& indices) const {
  std::int64_t g = 0;
  for (auto i : indices) g = gcd64(g, alpha(i));
  return g;
}

std::int64_t WeightVector::gcd_all() const {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) g = gcd64(g, alpha(i));
  return g;
}

Integer WeightVector::elementary(unsigned k) const {
  // e[j] accumulates the degree-j elementary polynomial of the prefix.
  std::vector<Integer> e(k + 1);
  e[0] = 1;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    Integer a = static_cast<long>(alpha(i));
    for (unsigned j = k; j >= 1; --j) e[j] += e[j - 1] * a;
  }
  return e[k];
}

std::size_t WeightVector::count_negative() const {
  std::size_t c = 0;
  for (auto v : w_) c += v < 0;
  return c;
}

std::size_t WeightVector::count_positive() const {
  std::size_t c = 0;
  for (auto v : w_) c += v > 0;
  return c;
}

std::size_t WeightVector::count_zero() const {
  std::size_t c = 0;
  for (auto v : w_) c += v == 0;
  return c;
}

bool WeightVector::alphas_distinct() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::size_t j = i + 1; j < w_.size(); ++j)
      if (alpha(i) == alpha(j)) return false;
  return true;
}

WeightVector WeightVector::without(std::size_t index) const {
  std::vector<std::int64_t> w = w_;
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(index));
  return WeightVector(std::move(w));
}

WeightVector WeightVector::divided_by(std::int64_t d) const {
  std::vector<std::int64_t> w = w_;
  for (auto& v : w) v /= d;
  return WeightVector(std::move(w));
}

std::string WeightVector::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < w_.size(); ++i) out << (i ? "," : "") << w_[i];
  return out.str();
}

std::vector<std::string> NormalizationLog::entries() const {
  std::vector<std::string> out;
  if (trivial) {
    out.push_back("all weights zero: trivial representation");
    return out;
  }
  if (!removed_zero_positions.empty()) {
    std::ostringstream s;
    s << "removed zero weights at positions";
    for (auto p : removed_zero_positions) s << " " << p + 1;
    out.push_back(s.str());
  }
  if (divided_by != 1) out.push_back("divided by " + std::to_string(divided_by));
  if (sign_flipped) out.push_back("sign flipped");
  if (reordered) out.push_back("reordered");
  return out;
}

Normalized normalize(const WeightVector& a) {
  if (a.size() == 0) throw std::invalid_argument("empty weight vector");
  Normalized r;
  std::vector<std::int64_t> w;
  std::vector<std::size_t> src;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      r.log.removed_zero_positions.push_back(i);
    } else {
      w.push_back(a[i]);
      src.push_back(i);
    }
  }
  if (w.empty()) {
    r.log.trivial = true;
    return r;
  }
  WeightVector v(w);
  const std::int64_t g = v.gcd_all();
  if (g != 1) {
    for (auto& x : w) x /= g;
    r.log.divided_by = g;
  }
  std::size_t neg = 0, pos = 0;
  for (auto x : w) (x < 0 ? neg : pos)++;
  if (neg > 0 && pos > 0 && (neg == 1 || pos == 1)) {
    if (neg != 1) {
      for (auto& x : w) x = -x;
      r.log.sign_flipped = true;
    }
    std::size_t lone = 0;
    while (w[lone] > 0) ++lone;
    if (lone != 0) {
      std::int64_t x = w[lone];
      std::size_t s = src[lone];
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(lone));
      src.erase(src.begin() + static_cast<std::ptrdiff_t>(lone));
      w.insert(w.begin(), x);
      src.insert(src.begin(), s);
      r.log.reordered = true;
    }
  }
  r.vector = WeightVector(std::move(w));
  r.log.source_index = std::move(src);
  return r;
}

std::vector<std::size_t> shell_support(const WeightVector& a) {
  std::vector<std::size_t> out;
  if (a.both_signs()) return out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(i);
  return out;
}

}  // namespace symquot
