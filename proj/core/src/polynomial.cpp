#include "strata/polynomial.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "strata/errors.hpp"

namespace strata {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit addition overflow");
  return r;
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("128-bit multiplication overflow");
  return r;
}

Int128 checked_pow(Int128 base, std::size_t e) {
  Int128 r = 1;
  for (std::size_t i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

std::string int128_to_string(Int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  UInt128 u = neg ? -static_cast<UInt128>(v) : static_cast<UInt128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

IntPolynomial::IntPolynomial(std::vector<Int128> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t e, Int128 c) {
  std::vector<Int128> v(e + 1, 0);
  v[e] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPolynomial::degree() const {
  if (coeffs_.empty()) throw InvalidArgument("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

std::vector<std::int64_t> IntPolynomial::coefficients_i64() const {
  std::vector<std::int64_t> out;
  out.reserve(coeffs_.size());
  for (Int128 c : coeffs_) {
    if (c > INT64_MAX || c < INT64_MIN) throw ArithmeticOverflow("coefficient exceeds int64");
    out.push_back(static_cast<std::int64_t>(c));
  }
  return out;
}

Int128 IntPolynomial::evaluate(std::int64_t q) const {
  Int128 acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = checked_add(checked_mul(acc, q), coeffs_[i]);
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], -o.coeffs_[i]);
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int128> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    Int128 c = coeffs_[i];
    if (c == 0) continue;
    Int128 mag = c < 0 ? -c : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) s += int128_to_string(mag);
    if (i >= 1) s += "q";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

IntPolynomial gaussian_binomial(std::size_t n, std::size_t k) {
  if (k > n || n > 16) throw InvalidArgument("gaussian_binomial: need 0 <= k <= n <= 16");
  // Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<IntPolynomial> row{IntPolynomial{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<IntPolynomial> next(m + 1);
    next[0] = IntPolynomial{1};
    next[m] = IntPolynomial{1};
    for (std::size_t j = 1; j < m; ++j) next[j] = row[j - 1] + IntPolynomial::monomial(j) * row[j];
    row = std::move(next);
  }
  return row[k];
}

namespace {

cpp_int to_big(Int128 v) {
  bool neg = v < 0;
  UInt128 u = neg ? -static_cast<UInt128>(v) : static_cast<UInt128>(v);
  cpp_int r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? cpp_int(-r) : r;
}

Int128 from_big(const cpp_int& v) {
  static const cpp_int kMax = (cpp_int(1) << 126);
  if (v >= kMax || v <= -kMax) throw ArithmeticOverflow("interpolated coefficient exceeds 126 bits");
  cpp_int mag = v < 0 ? cpp_int(-v) : v;
  UInt128 u = static_cast<std::uint64_t>(mag >> 64);
  u <<= 64;
  u |= static_cast<std::uint64_t>(mag & cpp_int(UINT64_MAX));
  Int128 r = static_cast<Int128>(u);
  return v < 0 ? -r : r;
}

/// Solves sum_{i<m} c_i x_j^i = y_j for the first m samples exactly.
std::vector<cpp_rational> vandermonde_solve(const std::vector<std::int64_t>& xs,
                                            const std::vector<cpp_int>& ys) {
  const std::size_t m = xs.size();
  std::vector<std::vector<cpp_rational>> a(m, std::vector<cpp_rational>(m + 1));
  for (std::size_t j = 0; j < m; ++j) {
    cpp_int pw = 1;
    for (std::size_t i = 0; i < m; ++i) {
      a[j][i] = pw;
      pw *= xs[j];
    }
    a[j][m] = ys[j];
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      cpp_rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= m; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<cpp_rational> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = a[i][m] / a[i][i];
  return out;
}

}  // namespace

Interpolation interpolate_counts(const std::vector<CountSample>& samples, std::size_t degree_bound) {
  Interpolation res;
  if (samples.empty()) {
    res.message = "no samples";
    return res;
  }
  std::vector<CountSample> ss = samples;
  std::sort(ss.begin(), ss.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
  for (std::size_t i = 1; i < ss.size(); ++i) {
    if (ss[i].prime == ss[i - 1].prime) throw InvalidArgument("interpolate_counts: repeated prime");
  }
  const std::size_t unknowns = degree_bound + 1;
  const std::size_t solved = std::min(unknowns, ss.size());
  const std::size_t free_count = unknowns - solved;

  std::vector<std::int64_t> xs;
  for (std::size_t j = 0; j < solved; ++j) xs.push_back(ss[j].prime);

  // Range of each free top coefficient: c_i * p_min^i <= min count.
  Int128 min_count = ss[0].count;
  for (const auto& s : ss) min_count = std::min(min_count, s.count);
  if (min_count < 0) {
    res.message = "negative sample count";
    return res;
  }
  std::vector<Int128> upper(free_count);
  for (std::size_t f = 0; f < free_count; ++f) {
    std::size_t deg = solved + f;
    Int128 pw = 1;
    bool huge = false;
    for (std::size_t e = 0; e < deg && !huge; ++e) {
      if (pw > min_count) huge = true;
      else pw = checked_mul(pw, ss[0].prime);
    }
    upper[f] = huge ? 0 : min_count / pw;
  }

  std::vector<IntPolynomial> found;
  bool saw_signed = false;
  IntPolynomial signed_candidate;
  std::vector<Int128> top(free_count, 0);
  while (true) {
    IntPolynomial tail;
    for (std::size_t f = 0; f < free_count; ++f) tail += IntPolynomial::monomial(solved + f, top[f]);
    std::vector<cpp_int> ys;
    for (std::size_t j = 0; j < solved; ++j) ys.push_back(to_big(ss[j].count - tail.evaluate(ss[j].prime)));
    auto sol = vandermonde_solve(xs, ys);
    bool integral = std::all_of(sol.begin(), sol.end(),
                                [](const cpp_rational& r) { return denominator(r) == 1; });
    if (integral) {
      std::vector<Int128> coeffs;
      for (const auto& r : sol) coeffs.push_back(from_big(numerator(r)));
      IntPolynomial cand = IntPolynomial(std::move(coeffs)) + tail;
      bool consistent = std::all_of(ss.begin(), ss.end(), [&](const CountSample& s) {
        return cand.evaluate(s.prime) == s.count;
      });
      if (consistent) {
        bool nonneg = std::all_of(cand.coefficients().begin(), cand.coefficients().end(),
                                  [](Int128 c) { return c >= 0; });
        if (nonneg) {
          found.push_back(cand);
        } else if (!saw_signed) {
          saw_signed = true;
          signed_candidate = cand;
        }
      }
    }
    std::size_t f = 0;
    while (f < free_count && top[f] == upper[f]) top[f++] = 0;
    if (f == free_count) break;
    ++top[f];
  }

  if (found.size() == 1) {
    res.status = Interpolation::Status::ok;
    res.poly = found.front();
    res.message = "ok";
  } else if (found.size() > 1) {
    res.status = Interpolation::Status::ambiguous;
    res.poly = found.front();
    res.message = std::to_string(found.size()) + " nonnegative polynomials fit the samples";
  } else if (saw_signed) {
    res.status = Interpolation::Status::negative;
    res.poly = signed_candidate;
    res.message = "only fit has negative coefficients: " + signed_candidate.to_string();
  } else {
    res.status = Interpolation::Status::not_polynomial;
    res.message = "not polynomial on this grid";
  }
  return res;
}

std::optional<IntPolynomial> reconstruct_signed(const std::vector<CountSample>& samples) {
  if (samples.empty()) return std::nullopt;
  auto big = std::max_element(samples.begin(), samples.end(),
                              [](const auto& a, const auto& b) { return a.prime < b.prime; });
  const Int128 p = big->prime;
  const Int128 half = p / 2;
  std::vector<Int128> digits;
  Int128 n = big->count;
  while (n != 0) {
    Int128 d = n % p;
    if (d > half) d -= p;
    if (d < -half) d += p;
    digits.push_back(d);
    n = (n - d) / p;
  }
  IntPolynomial poly(std::move(digits));
  for (const auto& s : samples) {
    if (poly.evaluate(s.prime) != s.count) return std::nullopt;
  }
  return poly;
}

CoefficientReport coefficient_report(const IntPolynomial& poly) {
  CoefficientReport r{poly.degree(), true, true};
  const auto& c = poly.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) r.nonnegative = false;
    if (c[i] != c[c.size() - 1 - i]) r.palindromic = false;
  }
  return r;
}

}  // namespace strata
