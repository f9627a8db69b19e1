#include "asymptotics.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace bcp::asym {

namespace {
constexpr double kLn2 = 0.69314718055994530942;
}

LogReal LogReal::from_double(double x) {
  if (x == 0) return {};
  return from_log(std::log(std::fabs(x)), x < 0);
}

double LogReal::log2() const noexcept { return ln_ / kLn2; }

bool LogReal::is_zero() const noexcept { return std::isinf(ln_) && ln_ < 0; }

std::optional<double> LogReal::value() const {
  if (is_zero()) return 0.0;
  if (ln_ > std::log(std::numeric_limits<double>::max())) return std::nullopt;
  if (ln_ < std::log(std::numeric_limits<double>::min())) return std::nullopt;
  const double m = std::exp(ln_);
  return negative_ ? -m : m;
}

LogReal operator*(const LogReal& a, const LogReal& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LogReal::from_log(a.ln_ + b.ln_, a.negative_ != b.negative_);
}

LogReal operator/(const LogReal& a, const LogReal& b) {
  if (b.is_zero()) throw InvalidArgument("division by zero");
  if (a.is_zero()) return {};
  return LogReal::from_log(a.ln_ - b.ln_, a.negative_ != b.negative_);
}

LogReal operator+(const LogReal& a, const LogReal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const LogReal& big = a.ln_ >= b.ln_ ? a : b;
  const LogReal& small = a.ln_ >= b.ln_ ? b : a;
  const double d = small.ln_ - big.ln_;
  if (a.negative_ == b.negative_) return LogReal::from_log(big.ln_ + std::log1p(std::exp(d)), big.negative_);
  if (d == 0) return {};
  return LogReal::from_log(big.ln_ + std::log1p(-std::exp(d)), big.negative_);
}

std::partial_ordering operator<=>(const LogReal& a, const LogReal& b) {
  const bool an = a.negative(), bn = b.negative();
  if (a.is_zero() && b.is_zero()) return std::partial_ordering::equivalent;
  if (a.is_zero()) return bn ? std::partial_ordering::greater : std::partial_ordering::less;
  if (b.is_zero()) return an ? std::partial_ordering::less : std::partial_ordering::greater;
  if (an != bn) return an ? std::partial_ordering::less : std::partial_ordering::greater;
  return an ? b.ln_ <=> a.ln_ : a.ln_ <=> b.ln_;
}

namespace {

// sum_{j < count} ln(n - offset - j), accurate even when n - offset rounds to n.
double log_falling(double n, double offset, unsigned count) {
  const double ln_n = std::log(n);
  double sum = 0;
  for (unsigned j = 0; j < count; ++j) sum += ln_n + std::log1p(-(offset + j) / n);
  return sum;
}

constexpr double kLargeN = 1e7;
constexpr double kMaxFallingTerms = 1e6;

}  // namespace

double log_binomial(double n, double k) {
  if (k < 0 || k > n) throw InvalidArgument("binomial needs 0 <= k <= n");
  if (n < kLargeN) return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
  // lgamma(n) is too large to difference at this n; expand ln n!/(n-k)! instead.
  const double m = std::min(k, n - k);
  if (m == std::floor(m) && m <= kMaxFallingTerms) return log_falling(n, 0, static_cast<unsigned>(m)) - std::lgamma(m + 1);
  if (m * m <= n) return m * std::log(n) - m * (m - 1) / (2 * n) - std::lgamma(m + 1);
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

double log_binomial_pow2(double log2n, double k) {
  if (log2n < 50) return log_binomial(std::exp2(log2n), k);
  // ln C(n,k) = k ln n - ln k! + sum_{i<k} ln(1 - i/n); the sum is below k^2/n in magnitude.
  const double ln_n = log2n * kLn2;
  const double correction = -k * (k - 1) / 2 * std::exp(-ln_n);
  return k * ln_n - std::lgamma(k + 1) + correction;
}

LogReal birthday_upper_log(double a, double b) {
  if (a < 0 || b < 1) throw InvalidArgument("birthday bound needs a >= 0 and b >= 1");
  return LogReal::from_log(-a * (a - 1) / (2 * b));
}

double birthday_upper(double a, double b) { return std::exp(birthday_upper_log(a, b).ln()); }

double alpha_prediction(double n, double p) {
  if (!(p > 0 && p < 1)) throw InvalidArgument("alpha prediction needs 0 < p < 1");
  if (n < 4) throw InvalidArgument("alpha prediction needs n >= 4");
  const double ln_b = -std::log1p(-p);
  const double logb_n = std::log(n) / ln_b;
  return 2 * logb_n - 2 * std::log(logb_n) / ln_b;
}

LogReal log_h(double n, const fk::FamilyParams& params) {
  return log_h_with_count(n, params.k, fk::count_formula_upper(params));
}

LogReal log_h_with_count(double n, unsigned k, double ln_count) {
  const double pairs = static_cast<double>(k) * (k - 1) / 2;
  return LogReal::from_log(log_binomial(n, k) + ln_count - pairs * kLn2);
}

double log_h_default_shape(double log2n, double k) {
  const double s = 10, r = 0.01 * k, b = k - r * s;
  const double ln_f = std::lgamma(k + 1) - r * std::lgamma(s + 1) - std::lgamma(b + 1) - std::lgamma(r + 1) + r * b * kLn2;
  return log_binomial_pow2(log2n, k) + ln_f - k * (k - 1) / 2 * kLn2;
}

Threshold threshold_k(double log2n) {
  if (log2n < 100) throw InvalidArgument("threshold estimate needs log2 n >= 100");
  const auto excess = [&](double k) { return log_h_default_shape(log2n, k) - k * kLn2; };
  double lo = 1.9 * log2n, hi = 2.2 * log2n;
  if (!(excess(lo) >= 0 && excess(hi) < 0)) throw Error("threshold not bracketed by [1.9, 2.2] log2 n");
  for (int it = 0; it < 200 && hi - lo > 1e-9 * log2n; ++it) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) >= 0 ? lo : hi) = mid;
  }
  Threshold t;
  t.k = lo;
  t.r = 0.01 * lo;
  t.ratio = lo / log2n;
  t.savings_coefficient = (lo - t.r) / log2n;
  return t;
}

LogReal case1_ratio(double n, unsigned k, unsigned i) {
  if (i < 2 || 10.0 * i > 9.0 * k) throw InvalidArgument("case-1 ratio needs 2 <= i <= 0.9k");
  if (2.0 * k > n) throw InvalidArgument("case-1 ratio needs n >= 2k");
  const double pairs_i = static_cast<double>(i) * (i - 1) / 2;
  // C(n-k, k-i) / C(n, k) as falling products, so n - k never has to be representable.
  const double ln_choose_rest = log_falling(n, k, k - i) - std::lgamma(k - i + 1.0);
  const double ln_choose_all = log_falling(n, 0, k) - std::lgamma(k + 1.0);
  return LogReal::from_log(log_binomial(k, i) + ln_choose_rest - ln_choose_all + pairs_i * kLn2);
}

double case1_base(double n, unsigned k, unsigned i) {
  return 2 * std::log(static_cast<double>(k)) + (static_cast<double>(i) - 1) / 2 * kLn2 - std::log(n);
}

LogReal claim32_bound(const fk::FamilyParams& params, unsigned j) {
  const double r = params.r;
  const double per_vertex = std::log(r + std::exp2(r));
  return LogReal::from_log(fk::count_formula_upper(params) + j * per_vertex +
                           static_cast<double>(params.b_size()) * j / params.s * kLn2);
}

}  // namespace bcp::asym
