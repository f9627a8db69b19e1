#pragma once

#include <compare>
#include <optional>

#include "fk_family.hpp"

namespace bcp::asym {

/// Sign and natural-log magnitude of a real that may be far outside double range.
class LogReal {
 public:
  LogReal() = default;  // zero

  static LogReal from_log(double ln_magnitude, bool negative = false) {
    LogReal x;
    x.ln_ = ln_magnitude;
    x.negative_ = negative;
    return x;
  }
  static LogReal from_double(double x);

  double ln() const noexcept { return ln_; }
  double log2() const noexcept;
  bool negative() const noexcept { return negative_ && !is_zero(); }
  bool is_zero() const noexcept;

  /// The plain value, or nullopt when it overflows a double or falls below the smallest normal one.
  std::optional<double> value() const;

  friend LogReal operator*(const LogReal& a, const LogReal& b);
  friend LogReal operator/(const LogReal& a, const LogReal& b);
  friend LogReal operator+(const LogReal& a, const LogReal& b);
  friend std::partial_ordering operator<=>(const LogReal& a, const LogReal& b);
  friend bool operator==(const LogReal& a, const LogReal& b) { return (a <=> b) == 0; }

 private:
  double ln_ = -__builtin_inf();
  bool negative_ = false;
};

/// ln C(n, k) for real n >= k >= 0 via log-gamma.
double log_binomial(double n, double k);

/// ln C(n, k) with n = 2^log2n possibly astronomically large and k small relative to n.
double log_binomial_pow2(double log2n, double k);

/// exp(-a(a-1)/(2b)): upper bound on the chance that a uniform draws from b items are distinct.
double birthday_upper(double a, double b);
/// The same bound in log domain, exact where the double form underflows.
LogReal birthday_upper_log(double a, double b);

/// 2 log_b n - 2 log_b log_b n with b = 1/(1-p); the additive constant is omitted.
double alpha_prediction(double n, double p);

/// ln of C(n,k) f_k 2^-C(k,2) with f_k replaced by its formula upper bound.
LogReal log_h(double n, const fk::FamilyParams& params);

/// Same with an explicit ln f_k (for instance an exact enumerated count).
LogReal log_h_with_count(double n, unsigned k, double ln_count);

/// Continuous version at the default family shape (s = 10, r = k/100, |B| = 0.9k), n = 2^log2n.
double log_h_default_shape(double log2n, double k);

struct Threshold {
  double k = 0;       // largest real k with h(k) >= 2^k
  double r = 0;       // 0.01 k
  double ratio = 0;   // k / log2 n
  /// (k - r) / log2 n: the decomposition n - k + r equals n - this * log2 n.
  double savings_coefficient = 0;
};

/// Bisection for h(k) = 2^k on [1.9, 2.2] * log2n. Requires log2n >= 100.
Threshold threshold_k(double log2n);

/// ln of C(k,i) C(n-k,k-i) / C(n,k) * 2^C(i,2). Requires 2 <= i <= 0.9k.
LogReal case1_ratio(double n, unsigned k, unsigned i);

/// ln of the per-step factor k^2 2^((i-1)/2) / n, so that case1_ratio <= i times this.
double case1_base(double n, unsigned k, unsigned i);

/// ln of f_k-formula * (r + 2^r)^j * 2^((k - rs) j / s).
LogReal claim32_bound(const fk::FamilyParams& params, unsigned j);

}  // namespace bcp::asym
