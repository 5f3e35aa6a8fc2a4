#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace su11 {

/// Exact half-integer arithmetic for irrep labels k and weights mu.
/// Stores twice the value as a signed integer, so sums, differences and
/// comparisons never touch floating point.
class HalfInteger {
public:
  constexpr HalfInteger() : twice_(0) {}

  static constexpr HalfInteger from_twice(std::int64_t twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger from_int(std::int64_t n) { return from_twice(2 * n); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return (twice_ % 2) == 0; }

  // Lossless for |twice| < 2^52.
  constexpr double value() const { return static_cast<double>(twice_) / 2.0; }

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice_ - b.twice_);
  }
  constexpr HalfInteger operator-() const { return from_twice(-twice_); }

  friend constexpr bool operator==(HalfInteger a, HalfInteger b) { return a.twice_ == b.twice_; }
  friend constexpr bool operator!=(HalfInteger a, HalfInteger b) { return a.twice_ != b.twice_; }
  friend constexpr bool operator<(HalfInteger a, HalfInteger b) { return a.twice_ < b.twice_; }
  friend constexpr bool operator<=(HalfInteger a, HalfInteger b) { return a.twice_ <= b.twice_; }
  friend constexpr bool operator>(HalfInteger a, HalfInteger b) { return a.twice_ > b.twice_; }
  friend constexpr bool operator>=(HalfInteger a, HalfInteger b) { return a.twice_ >= b.twice_; }

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

private:
  std::int64_t twice_;
};

/// e^{i pi m} for half-integer m, computed exactly from twice(m) mod 4:
/// one of {1, i, -1, -i}.
inline std::complex<double> exp_i_pi(HalfInteger m) {
  std::int64_t r = m.twice() % 4;
  if (r < 0) r += 4;
  switch (r) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// (-1)^(b - a) for half-integers whose difference is an integer.
inline double parity_sign(HalfInteger a, HalfInteger b) {
  std::int64_t diff2 = b.twice() - a.twice();
  if (diff2 % 2 != 0) throw std::invalid_argument("parity_sign: difference is not an integer");
  return ((diff2 / 2) % 2 == 0) ? 1.0 : -1.0;
}

/// Parses "3", "-2", "1/2", "-5/2". Throws std::invalid_argument on anything else.
inline HalfInteger parse_half_integer(const std::string& text) {
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("malformed half-integer '" + text + "' (expected e.g. 2, -1, 1/2, -3/2)");
  };
  if (text.empty()) throw bad();
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      long long n = std::stoll(text, &pos);
      if (pos != text.size()) throw bad();
      return HalfInteger::from_int(n);
    }
    std::size_t pos = 0;
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    long long p = std::stoll(num, &pos);
    if (pos != num.size()) throw bad();
    long long q = std::stoll(den, &pos);
    if (pos != den.size()) throw bad();
    if (q == 2) return HalfInteger::from_twice(p);
    if (q == 1) return HalfInteger::from_int(p);
    throw bad();
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
}

}  // namespace su11
