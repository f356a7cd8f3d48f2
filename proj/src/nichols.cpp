#include "nichols/nichols.hpp"

#include <limits>
#include <stdexcept>

namespace nichols {

namespace {

constexpr std::size_t kNoBlock = std::numeric_limits<std::size_t>::max();

int total(const MultiDegree& beta) {
  int n = 0;
  for (int b : beta) n += b;
  return n;
}

}  // namespace

NicholsEngine::NicholsEngine(std::shared_ptr<const TensorAlgebra> t, std::size_t word_limit)
    : t_(std::move(t)), word_limit_(word_limit) {}

MultiDegree NicholsEngine::multidegree(const Word& w) const {
  MultiDegree beta(theta(), 0);
  for (Letter l : w) ++beta[t_->slot(l)];
  return beta;
}

std::size_t NicholsEngine::word_count(const MultiDegree& beta) const {
  // multinomial(|beta|; beta) * prod (slot size)^beta_s, saturating
  std::vector<std::size_t> slot_size(theta(), 0);
  for (std::size_t l = 0; l < t_->letters(); ++l) ++slot_size[t_->slot(static_cast<Letter>(l))];
  long double count = 1;
  int placed = 0;
  for (std::size_t s = 0; s < beta.size(); ++s)
    for (int k = 1; k <= beta[s]; ++k) {
      ++placed;
      count = count * placed / k * static_cast<long double>(slot_size[s]);
    }
  if (count > 1e18L) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(count + 0.5L);
}

std::vector<Word> NicholsEngine::words(const MultiDegree& beta) const {
  if (beta.size() != theta()) throw std::invalid_argument("multidegree has the wrong length");
  const int n = total(beta);
  std::vector<Word> out;
  Word cur;
  MultiDegree used(theta(), 0);
  // depth-first in lexicographic letter order
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t l = 0; l < t_->letters(); ++l) {
      const std::size_t s = t_->slot(static_cast<Letter>(l));
      if (used[s] >= beta[s]) continue;
      ++used[s];
      cur.push_back(static_cast<Letter>(l));
      self(self);
      cur.pop_back();
      --used[s];
    }
  };
  rec(rec);
  return out;
}

NicholsEngine::Block& NicholsEngine::block(const MultiDegree& beta) {
  if (auto it = blocks_.find(beta); it != blocks_.end()) return *it->second;
  for (int b : beta)
    if (b < 0) throw std::invalid_argument("negative multidegree");
  const std::size_t count = word_count(beta);
  if (count > word_limit_)
    throw ResourceLimitError("degree block has " + std::to_string(count) + " words, above the limit of " +
                             std::to_string(word_limit_));
  auto fresh = std::make_unique<Block>();
  Block& b = *fresh;
  if (total(beta) == 0) {
    b.image_dim = 1;
    b.pivots = {0};
    b.standard = {Word{}};
    b.coords[Word{}] = Vector{CycScalar(1)};
    b.standard_inverse = Matrix::identity(1);
    return *blocks_.emplace(beta, std::move(fresh)).first->second;
  }
  b.offsets.assign(t_->letters(), kNoBlock);
  for (std::size_t l = 0; l < t_->letters(); ++l) {
    const std::size_t s = t_->slot(static_cast<Letter>(l));
    if (beta[s] == 0) continue;
    MultiDegree lower = beta;
    --lower[s];
    b.offsets[l] = b.image_dim;
    b.image_dim += dimension(lower);
  }
  const auto all = words(beta);
  std::vector<Vector> images;
  images.reserve(all.size());
  SpanBuilder span(b.image_dim);
  for (const auto& w : all) {
    images.push_back(image(b, beta, w));
    if (span.add(images.back())) b.standard.push_back(w);
  }
  b.pivots = span.pivots();
  for (std::size_t i = 0; i < all.size(); ++i) {
    Vector c(b.pivots.size());
    for (std::size_t k = 0; k < b.pivots.size(); ++k) c[k] = images[i][b.pivots[k]];
    b.coords.emplace(all[i], std::move(c));
  }
  const std::size_t r = b.pivots.size();
  Matrix cp(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    const Vector& c = b.coords.at(b.standard[j]);
    for (std::size_t i = 0; i < r; ++i) cp(i, j) = c[i];
  }
  auto inv = inverse(cp);
  if (!inv) throw std::logic_error("standard words are not independent");
  b.standard_inverse = std::move(*inv);
  return *blocks_.emplace(beta, std::move(fresh)).first->second;
}

Vector NicholsEngine::image(Block& b, const MultiDegree& beta, const Word& w) {
  Vector out(b.image_dim);
  for (const auto& term : t_->delta_last(w)) {
    const std::size_t off = b.offsets[term.right];
    if (off == kNoBlock) throw std::logic_error("coproduct term leaves the multidegree");
    MultiDegree lower = beta;
    --lower[t_->slot(term.right)];
    const Vector& c = coordinates(term.left);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) out[off + k] += term.coeff * c[k];
  }
  return out;
}

std::size_t NicholsEngine::dimension(const MultiDegree& beta) { return block(beta).pivots.size(); }

const Vector& NicholsEngine::coordinates(const Word& w) {
  Block& b = block(multidegree(w));
  return b.coords.at(w);
}

Vector NicholsEngine::coordinates(const GradedVector& x) {
  if (x.empty()) return {};
  const MultiDegree beta = multidegree(x.begin()->first);
  Vector out(dimension(beta));
  for (const auto& [w, c] : x) {
    if (multidegree(w) != beta) throw std::invalid_argument("element is not homogeneous");
    const Vector& v = coordinates(w);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) out[k] += c * v[k];
  }
  return out;
}

bool NicholsEngine::is_zero(const GradedVector& x) {
  std::map<MultiDegree, GradedVector> parts;
  for (const auto& [w, c] : x) add_term(parts[multidegree(w)], w, c);
  for (const auto& [beta, part] : parts)
    for (const auto& c : coordinates(part))
      if (!c.is_zero()) return false;
  return true;
}

const std::vector<Word>& NicholsEngine::standard_words(const MultiDegree& beta) { return block(beta).standard; }

GradedVector NicholsEngine::from_coordinates(const MultiDegree& beta, const Vector& coords) {
  Block& b = block(beta);
  if (coords.size() != b.standard.size()) throw std::invalid_argument("coordinate vector has the wrong length");
  const Vector nf = b.standard_inverse * coords;
  GradedVector out;
  for (std::size_t j = 0; j < nf.size(); ++j) add_term(out, b.standard[j], nf[j]);
  return out;
}

GradedVector NicholsEngine::normal_form(const GradedVector& x) {
  std::map<MultiDegree, GradedVector> parts;
  for (const auto& [w, c] : x) add_term(parts[multidegree(w)], w, c);
  GradedVector out;
  for (const auto& [beta, part] : parts) add_scaled(out, from_coordinates(beta, coordinates(part)), CycScalar(1));
  return out;
}

std::vector<GradedVector> NicholsEngine::ideal_basis(const MultiDegree& beta) {
  Block& b = block(beta);
  std::set<Word, LengthLex> standard(b.standard.begin(), b.standard.end());
  std::vector<GradedVector> out;
  for (const auto& w : words(beta)) {
    if (standard.count(w)) continue;
    GradedVector x = single(w);
    add_scaled(x, normal_form(single(w)), CycScalar(-1));
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<MultiDegree> multidegrees_of_total(std::size_t theta, std::size_t n) {
  std::vector<MultiDegree> out;
  MultiDegree cur(theta, 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == theta) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  if (theta == 0) return out;
  rec(rec, 0, static_cast<int>(n));
  return out;
}

namespace {

NicholsTruncation truncate_algebra(std::shared_ptr<const TensorAlgebra> t, std::size_t n_max, std::size_t word_limit) {
  NicholsTruncation out;
  out.max_degree = n_max;
  out.theta = t->theta();
  out.engine = std::make_shared<NicholsEngine>(std::move(t), word_limit);
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::size_t dim = 0, words = 0;
    for (const auto& beta : multidegrees_of_total(out.theta, n)) {
      const std::size_t d = out.engine->dimension(beta);
      out.multi_dims[beta] = d;
      dim += d;
      words += out.engine->word_count(beta);
    }
    out.dims.push_back(dim);
    out.word_counts.push_back(words);
    out.ideal_dims.push_back(words - dim);
  }
  return out;
}

}  // namespace

NicholsTruncation nichols_truncate(const YDModule& v, std::size_t n_max, std::size_t word_limit) {
  return truncate_algebra(std::make_shared<const TensorAlgebra>(v), n_max, word_limit);
}

NicholsTruncation nichols_truncate(const ModuleTuple& m, std::size_t n_max, std::size_t word_limit) {
  return truncate_algebra(std::make_shared<const TensorAlgebra>(direct_sum(m.entries)), n_max, word_limit);
}

std::set<MultiDegree> support(const NicholsTruncation& t) {
  std::set<MultiDegree> out;
  for (const auto& [beta, d] : t.multi_dims)
    if (d > 0) out.insert(beta);
  return out;
}

GradedVector normal_form(const GradedVector& x, const NicholsTruncation& t) {
  for (const auto& [w, c] : x)
    if (w.size() > t.max_degree)
      throw std::out_of_range("element has degree " + std::to_string(w.size()) + " above the truncation degree " +
                              std::to_string(t.max_degree));
  return t.engine->normal_form(x);
}

namespace {

// Image of x under all Delta_{i,n-i} (0 < i < n), in B (x) B coordinates.
std::map<std::pair<std::size_t, MultiDegree>, Matrix> split_images(NicholsEngine& engine, const GradedVector& x,
                                                                    std::size_t n) {
  const TensorAlgebra& t = engine.algebra();
  std::map<std::pair<std::size_t, MultiDegree>, Matrix> out;
  for (std::size_t i = 1; i < n; ++i) {
    PairVector d;
    for (const auto& [w, c] : x) add_scaled(d, t.delta_component(w, i), c);
    for (const auto& [lr, c] : d) {
      const MultiDegree ml = engine.multidegree(lr.first);
      const Vector& cl = engine.coordinates(lr.first);
      const Vector& cr = engine.coordinates(lr.second);
      auto [it, inserted] = out.try_emplace({i, ml}, cl.size(), cr.size());
      for (std::size_t a = 0; a < cl.size(); ++a)
        if (!cl[a].is_zero())
          for (std::size_t b = 0; b < cr.size(); ++b)
            if (!cr[b].is_zero()) it->second(a, b) += c * cl[a] * cr[b];
    }
  }
  return out;
}

}  // namespace

ValidationReport coideal_check(NicholsEngine& engine, const MultiDegree& beta) {
  ValidationReport report;
  const auto n = static_cast<std::size_t>(total(beta));
  const auto& t = engine.algebra();
  for (const auto& x : engine.ideal_basis(beta))
    for (const auto& [key, m] : split_images(engine, x, n))
      if (!m.is_zero()) {
        report.fail("Delta_{" + std::to_string(key.first) + "," + std::to_string(n - key.first) + "} of " +
                    t.format(x) + " leaves I (x) T + T (x) I");
        break;
      }
  return report;
}

std::size_t primitive_dimension(NicholsEngine& engine, const MultiDegree& beta) {
  const auto n = static_cast<std::size_t>(total(beta));
  const auto& standard = engine.standard_words(beta);
  if (n <= 1) return standard.size();
  std::vector<std::map<std::pair<std::size_t, MultiDegree>, Matrix>> images;
  std::map<std::pair<std::size_t, MultiDegree>, std::size_t> offset;
  std::size_t width = 0;
  for (const auto& w : standard) {
    images.push_back(split_images(engine, single(w), n));
    for (const auto& [key, m] : images.back())
      if (!offset.count(key)) {
        offset[key] = width;
        width += m.rows() * m.cols();
      }
  }
  std::vector<Vector> rows;
  for (const auto& img : images) {
    Vector row(width);
    for (const auto& [key, m] : img)
      for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) row[offset[key] + a * m.cols() + b] = m(a, b);
    rows.push_back(std::move(row));
  }
  return standard.size() - rank(Matrix::from_rows(rows, width));
}

}  // namespace nichols
