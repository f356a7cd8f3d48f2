#include "nichols/group.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nichols {

Group Group::abelian(std::vector<int> orders, std::string symbol) {
  if (orders.empty()) throw std::invalid_argument("abelian group needs at least one factor");
  long total = 1;
  for (int m : orders) {
    if (m < 1) throw std::invalid_argument("factor orders must be positive");
    total *= m;
    if (total > 4096) throw std::invalid_argument("group too large");
  }
  Group g;
  g.order_ = static_cast<int>(total);
  g.factor_orders_ = std::move(orders);
  g.symbol_ = std::move(symbol);
  g.cayley_.assign(static_cast<std::size_t>(total * total), 0);
  for (int a = 0; a < g.order_; ++a) {
    const auto ea = g.exponents({a});
    for (int b = 0; b < g.order_; ++b) {
      auto eb = g.exponents({b});
      for (std::size_t k = 0; k < eb.size(); ++k) eb[k] = (ea[k] + eb[k]) % g.factor_orders_[k];
      g.cayley_[static_cast<std::size_t>(a * g.order_ + b)] = g.from_exponents(eb).index;
    }
  }
  g.finish_tables();
  return g;
}

Group Group::from_cayley(const std::vector<std::vector<int>>& table) {
  const auto n = static_cast<int>(table.size());
  if (n < 1) throw std::invalid_argument("empty Cayley table");
  Group g;
  g.order_ = n;
  g.cayley_.assign(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[static_cast<std::size_t>(a)].size()) != n)
      throw std::invalid_argument("Cayley table is not square");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int b = 0; b < n; ++b) {
      const int v = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (v < 0 || v >= n) throw std::invalid_argument("Cayley entry out of range");
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("Cayley table is not a latin square");
      seen[static_cast<std::size_t>(v)] = true;
      g.cayley_[static_cast<std::size_t>(a * n + b)] = v;
    }
  }
  for (int a = 0; a < n; ++a)
    if (g.mul({0}, {a}).index != a || g.mul({a}, {0}).index != a)
      throw std::invalid_argument("element 0 is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul({a}, {b}), {c}) != g.mul({a}, g.mul({b}, {c})))
          throw std::invalid_argument("Cayley table is not associative");
  g.symbol_ = "e";
  g.finish_tables();
  return g;
}

void Group::finish_tables() {
  inverse_.assign(static_cast<std::size_t>(order_), -1);
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      if (mul({a}, {b}).index == 0) inverse_[static_cast<std::size_t>(a)] = b;
}

std::vector<GroupElement> Group::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) out.push_back({i});
  return out;
}

GroupElement Group::product(const std::vector<GroupElement>& xs) const {
  GroupElement acc = identity();
  for (auto x : xs) acc = mul(acc, x);
  return acc;
}

std::vector<int> Group::exponents(GroupElement g) const {
  if (factor_orders_.empty()) throw std::logic_error("group has no abelian presentation");
  std::vector<int> out(factor_orders_.size());
  int rest = g.index;
  for (std::size_t k = 0; k < factor_orders_.size(); ++k) {
    out[k] = rest % factor_orders_[k];
    rest /= factor_orders_[k];
  }
  return out;
}

GroupElement Group::from_exponents(const std::vector<int>& exps) const {
  if (exps.size() != factor_orders_.size()) throw std::invalid_argument("exponent vector has wrong length");
  int index = 0;
  for (std::size_t k = factor_orders_.size(); k-- > 0;) {
    const int m = factor_orders_[k];
    index = index * m + ((exps[k] % m) + m) % m;
  }
  return {index};
}

GroupElement Group::generator(std::size_t i) const {
  std::vector<int> e(factor_orders_.size(), 0);
  e.at(i) = 1;
  return from_exponents(e);
}

std::string Group::label(GroupElement g) const {
  if (g.index == 0) return "1";
  if (factor_orders_.empty()) return "e" + std::to_string(g.index);
  std::ostringstream os;
  const auto e = exponents(g);
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    os << symbol_ << (k + 1);
    if (e[k] != 1) os << '^' << e[k];
  }
  return os.str();
}

std::optional<GroupElement> Group::parse_element(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;
  if (s == "1") return identity();
  for (int i = 0; i < order_; ++i)
    if (label({i}) == s) return GroupElement{i};
  if (!factor_orders_.empty() && s.find(',') != std::string::npos) {
    std::vector<int> e;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty() || part.find_first_not_of("-0123456789") != std::string::npos) return std::nullopt;
      e.push_back(std::stoi(part));
    }
    if (e.size() != factor_orders_.size()) return std::nullopt;
    return from_exponents(e);
  }
  // Products of generator powers in any order, e.g. "h3h1".
  if (!factor_orders_.empty() && s.rfind(symbol_, 0) == 0) {
    std::vector<int> e(factor_orders_.size(), 0);
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s.compare(pos, symbol_.size(), symbol_) != 0) return std::nullopt;
      pos += symbol_.size();
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) return std::nullopt;
      const auto gen = std::stoul(s.substr(start, pos - start));
      if (gen < 1 || gen > factor_orders_.size()) return std::nullopt;
      int power = 1;
      if (pos < s.size() && s[pos] == '^') {
        start = ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) return std::nullopt;
        power = std::stoi(s.substr(start, pos - start));
      }
      e[gen - 1] += power;
    }
    return from_exponents(e);
  }
  std::string digits = s;
  if (digits.size() > 1 && digits[0] == 'e') digits = digits.substr(1);
  if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 6) {
    const int i = std::stoi(digits);
    if (i >= 0 && i < order_) return GroupElement{i};
  }
  return std::nullopt;
}

Cocycle3::Cocycle3(std::shared_ptr<const Group> group, std::vector<CycScalar> table, std::string kind)
    : group_(std::move(group)), table_(std::move(table)), kind_(std::move(kind)) {}

Cocycle3 Cocycle3::trivial(std::shared_ptr<const Group> group) {
  const auto n = static_cast<std::size_t>(group->order());
  return Cocycle3(std::move(group), std::vector<CycScalar>(n * n * n, CycScalar(1)), "trivial");
}

Cocycle3 Cocycle3::sign3(std::shared_ptr<const Group> group) {
  if (group->factor_orders().size() != 3)
    throw std::invalid_argument("sign cocycle needs an abelian presentation with exactly 3 factors");
  const auto n = static_cast<std::size_t>(group->order());
  std::vector<CycScalar> table(n * n * n);
  for (int a = 0; a < group->order(); ++a) {
    const int i3 = group->exponents({a})[2];
    for (int b = 0; b < group->order(); ++b) {
      const int j2 = group->exponents({b})[1];
      for (int c = 0; c < group->order(); ++c) {
        const int k1 = group->exponents({c})[0];
        const long e = static_cast<long>(k1) * j2 * i3;
        table[(static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n + static_cast<std::size_t>(c)] =
            CycScalar(e % 2 == 0 ? 1 : -1);
      }
    }
  }
  return Cocycle3(std::move(group), std::move(table), "sign3");
}

Cocycle3 Cocycle3::from_table(std::shared_ptr<const Group> group, std::vector<CycScalar> table) {
  const auto n = static_cast<std::size_t>(group->order());
  if (table.size() != n * n * n) throw ValidationError("cocycle table must have |G|^3 entries");
  Cocycle3 phi(std::move(group), std::move(table), "table");
  const Group& g = phi.group();
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      for (int c = 0; c < g.order(); ++c) {
        const CycScalar& v = phi({a}, {b}, {c});
        if (v.is_zero())
          throw ValidationError("cocycle value is zero at (" + g.label({a}) + ", " + g.label({b}) + ", " +
                                g.label({c}) + ")");
        if ((a == 0 || b == 0 || c == 0) && !v.is_one())
          throw ValidationError("cocycle is not normalized at (" + g.label({a}) + ", " + g.label({b}) + ", " +
                                g.label({c}) + ")");
      }
  return phi;
}

Cocycle3 Cocycle3::with_entry(GroupElement a, GroupElement b, GroupElement c, CycScalar value) const {
  std::vector<CycScalar> table = table_;
  table[index(a, b, c)] = std::move(value);
  return from_table(group_, std::move(table));
}

CocycleReport check_3cocycle(const Cocycle3& phi) {
  CocycleReport report;
  const Group& g = phi.group();
  const auto elems = g.elements();
  for (auto a : elems)
    for (auto b : elems) {
      const bool any_identity = a.index == 0 || b.index == 0;
      for (auto c : elems)
        if ((any_identity || c.index == 0) && !phi(a, b, c).is_one() && report.normalized) {
          report.normalized = false;
          report.passed = false;
          report.message = "not normalized at (" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")";
        }
    }
  for (auto a : elems)
    for (auto b : elems)
      for (auto c : elems)
        for (auto d : elems) {
          ++report.quadruples_checked;
          if (report.witness) continue;
          const CycScalar lhs = phi(b, c, d) * phi(a, g.mul(b, c), d) * phi(a, b, c);
          const CycScalar rhs = phi(a, b, g.mul(c, d)) * phi(g.mul(a, b), c, d);
          if (lhs != rhs) {
            report.passed = false;
            report.witness = std::array<GroupElement, 4>{a, b, c, d};
            if (report.message.empty())
              report.message = "pentagon fails at (" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ", " +
                               g.label(d) + ")";
          }
        }
  if (report.passed) report.message = "pass";
  return report;
}

CycScalar preantipode_scalar(const Cocycle3& phi, GroupElement g) {
  return phi(g, phi.group().inverse(g), g).inverse();
}

CycScalar antipode_alpha(const Cocycle3&, GroupElement) { return CycScalar(1); }

CycScalar antipode_beta(const Cocycle3& phi, GroupElement g) { return preantipode_scalar(phi, g); }

}  // namespace nichols
