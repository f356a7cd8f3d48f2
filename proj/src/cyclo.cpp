#include "nichols/cyclo.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

namespace nichols {

namespace {

using QVec = std::vector<mpq_class>;

// Solves A y = b over Q. A is rows x cols, row-major. Returns nullopt when
// inconsistent; free variables are set to zero.
std::optional<QVec> solve_rational(std::vector<QVec> a, QVec b, std::size_t cols) {
  const std::size_t rows = a.size();
  for (std::size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    const mpq_class inv = 1 / a[row][col];
    for (std::size_t c = col; c <= cols; ++c) a[row][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = col; c <= cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;
  QVec y(cols, mpq_class(0));
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) y[pivot_cols[k]] = a[k][cols];
  return y;
}

// Folds exponents modulo n, then reduces modulo the n-th cyclotomic polynomial.
QVec reduce_mod_cyclotomic(const QVec& poly, int n) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const int deg = euler_phi(n);
  QVec folded(static_cast<std::size_t>(n), mpq_class(0));
  for (std::size_t k = 0; k < poly.size(); ++k) folded[k % static_cast<std::size_t>(n)] += poly[k];
  for (int k = n - 1; k >= deg; --k) {
    const mpq_class c = folded[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    // x^k = x^(k-deg) * x^deg and x^deg = -(lower terms of the monic polynomial)
    for (int t = 0; t <= deg; ++t)
      folded[static_cast<std::size_t>(k - deg + t)] -= c * phi_poly[static_cast<std::size_t>(t)];
  }
  folded.resize(static_cast<std::size_t>(deg));
  return folded;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<mpz_class>> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, mpz_class(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d : divisors(n)) {
    if (d == n) continue;
    const auto& q = cyclotomic_polynomial(d);
    const std::size_t dq = q.size() - 1;
    std::vector<mpz_class> quotient(p.size() - dq, mpz_class(0));
    for (std::size_t k = p.size(); k-- > dq;) {
      const mpz_class c = p[k];
      quotient[k - dq] = c;
      for (std::size_t t = 0; t <= dq; ++t) p[k - dq + t] -= c * q[t];
    }
    p = std::move(quotient);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(p)).first->second;
}

CycScalar CycScalar::from_coefficients(int n, std::vector<mpq_class> coeffs) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  CycScalar out;
  out.conductor_ = n;
  out.coeffs_ = reduce_mod_cyclotomic(coeffs, n);
  out.normalize();
  return out;
}

CycScalar CycScalar::root_of_unity(int n, long k) {
  if (n < 1) throw std::invalid_argument("root_of_unity needs N >= 1");
  long e = k % n;
  if (e < 0) e += n;
  QVec poly(static_cast<std::size_t>(e) + 1, mpq_class(0));
  poly[static_cast<std::size_t>(e)] = 1;
  return from_coefficients(n, std::move(poly));
}

std::vector<mpq_class> CycScalar::coefficients_at(int n) const {
  if (n % conductor_ != 0) throw std::invalid_argument("target conductor is not a multiple");
  if (n == conductor_) return coeffs_;
  const int step = n / conductor_;
  QVec poly(static_cast<std::size_t>(n), mpq_class(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    poly[(k * static_cast<std::size_t>(step)) % static_cast<std::size_t>(n)] += coeffs_[k];
  return reduce_mod_cyclotomic(poly, n);
}

void CycScalar::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  bool rational = true;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) rational = false;
  if (rational) {
    coeffs_.resize(1);
    conductor_ = 1;
    return;
  }
  const int n = conductor_;
  const std::size_t rows = coeffs_.size();
  for (int d : divisors(n)) {
    if (d == 1 || d == n) continue;
    const auto cols = static_cast<std::size_t>(euler_phi(d));
    if (cols > rows) continue;
    std::vector<QVec> a(rows, QVec(cols, mpq_class(0)));
    for (std::size_t k = 0; k < cols; ++k) {
      CycScalar basis;
      basis.conductor_ = d;
      basis.coeffs_.assign(cols, mpq_class(0));
      basis.coeffs_[k] = 1;
      const QVec image = basis.coefficients_at(n);
      for (std::size_t r = 0; r < rows; ++r) a[r][k] = image[r];
    }
    if (auto y = solve_rational(std::move(a), coeffs_, cols)) {
      conductor_ = d;
      coeffs_ = std::move(*y);
      return;
    }
  }
}

CycScalar CycScalar::operator-() const {
  CycScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycScalar& CycScalar::operator+=(const CycScalar& other) {
  if (conductor_ == 1 && other.conductor_ == 1) {
    coeffs_[0] += other.coeffs_[0];
    return *this;
  }
  const int n = std::lcm(conductor_, other.conductor_);
  QVec a = coefficients_at(n);
  const QVec b = other.coefficients_at(n);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  conductor_ = n;
  coeffs_ = std::move(a);
  normalize();
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& other) { return *this += -other; }

CycScalar& CycScalar::operator*=(const CycScalar& other) {
  if (conductor_ == 1 && other.conductor_ == 1) {
    coeffs_[0] *= other.coeffs_[0];
    return *this;
  }
  const int n = std::lcm(conductor_, other.conductor_);
  const QVec a = coefficients_at(n);
  const QVec b = other.coefficients_at(n);
  QVec prod(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  *this = from_coefficients(n, std::move(prod));
  return *this;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (conductor_ == 1) return CycScalar(mpq_class(1) / coeffs_[0]);
  // Solve (this * y) = 1 through the multiplication matrix in the power basis.
  const std::size_t deg = coeffs_.size();
  std::vector<QVec> m(deg, QVec(deg, mpq_class(0)));
  for (std::size_t j = 0; j < deg; ++j) {
    QVec shifted(j + deg, mpq_class(0));
    for (std::size_t k = 0; k < deg; ++k) shifted[j + k] = coeffs_[k];
    const QVec column = reduce_mod_cyclotomic(shifted, conductor_);
    for (std::size_t r = 0; r < deg; ++r) m[r][j] = column[r];
  }
  QVec rhs(deg, mpq_class(0));
  rhs[0] = 1;
  auto y = solve_rational(std::move(m), std::move(rhs), deg);
  if (!y) throw DivisionByZero();
  return from_coefficients(conductor_, std::move(*y));
}

std::string CycScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << "zeta(" << conductor_ << ")^" << k;
  }
  return os.str();
}

namespace {

class ScalarParser {
public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  CycScalar parse() {
    CycScalar sum;
    skip();
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = get() == '-';
    sum = term();
    if (negative) sum = -sum;
    for (;;) {
      skip();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      CycScalar t = term();
      if (op == '-') t = -t;
      sum += t;
    }
    return sum;
  }

private:
  CycScalar term() {
    skip();
    if (starts_with("zeta")) return zeta();
    const mpq_class q = rational();
    skip();
    if (peek() == '*') {
      get();
      skip();
      return CycScalar(q) * zeta();
    }
    return CycScalar(q);
  }

  CycScalar zeta() {
    if (!starts_with("zeta")) fail("expected zeta(N)");
    pos_ += 4;
    skip();
    expect('(');
    const long n = integer();
    expect(')');
    skip();
    long k = 1;
    if (peek() == '^') {
      get();
      skip();
      bool neg = false;
      if (peek() == '-') {
        get();
        neg = true;
      }
      k = integer();
      if (neg) k = -k;
    }
    if (n < 1 || n > 100000) fail("conductor out of range");
    return CycScalar::root_of_unity(static_cast<int>(n), k);
  }

  mpq_class rational() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    std::string literal(text_.substr(start, pos_ - start));
    skip();
    if (peek() == '/') {
      get();
      skip();
      const std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("expected a denominator");
      const std::string den(text_.substr(dstart, pos_ - dstart));
      if (mpz_class(den) == 0) fail("zero denominator");
      literal += "/" + den;
    }
    mpq_class q(literal);
    q.canonicalize();
    return q;
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || pos_ - start > 9) fail("expected a small integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip();
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("bad scalar '" + std::string(text_) + "': " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CycScalar CycScalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const CycScalar& x) { return os << x.to_string(); }

}  // namespace nichols
