#include "liealg/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <string>

namespace liealg {

namespace {

struct Diagram {
  std::vector<Rational> squared_lengths;
  std::vector<std::pair<int, int>> edges;
};

// A bond between alpha_i and alpha_j has (alpha_i, alpha_j) = -max(|alpha_i|^2, |alpha_j|^2) / 2.
Diagram diagram(const LieType& t) {
  const int r = t.rank;
  Diagram d;
  d.squared_lengths.assign(r, Rational(2));
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.series) {
    case Series::A:
      chain(r);
      break;
    case Series::B:
      chain(r);
      d.squared_lengths[r - 1] = 1;
      break;
    case Series::C:
      chain(r);
      for (int i = 0; i + 1 < r; ++i) d.squared_lengths[i] = 1;
      break;
    case Series::D:
      chain(r - 1);
      d.edges.emplace_back(r - 3, r - 1);
      break;
    case Series::E:
      d.edges = {{0, 2}, {1, 3}};
      for (int i = 2; i + 1 < r; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case Series::F:
      chain(4);
      d.squared_lengths[2] = 1;
      d.squared_lengths[3] = 1;
      break;
    case Series::G:
      chain(2);
      d.squared_lengths[0] = Rational(2, 3);
      break;
  }
  return d;
}

RationalMatrix invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InvariantError("singular Cartan matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= f * m[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

void CartanData::set_form(RationalMatrix form) {
  form_ = std::move(form);
  const int r = rank();
  Integer den = 1;
  for (const auto& row : form_) {
    for (const auto& x : row) den = lcm(den, Integer(x.get_den()));
  }
  form_den_ = den.get_si();
  scaled_form_.assign(r, std::vector<std::int64_t>(r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      scaled_form_[i][j] = to_integer(form_[i][j] * den, "scaled form entry").get_si();
    }
  }
  comarks_.assign(r, 0);
  if (highest_root_.rank() == static_cast<std::size_t>(r)) {
    for (int i = 0; i < r; ++i) {
      Rational c = inner(*this, Weight::fundamental(r, i), highest_root_);
      comarks_[i] = c.get_den() == 1 ? static_cast<int>(c.get_num().get_si()) : 0;
    }
  }
}

CartanData CartanData::with_form(RationalMatrix form) const {
  CartanData copy(*this);
  copy.set_form(std::move(form));
  return copy;
}

CartanData build_cartan(LieType type) {
  CartanData cd(type);
  const int r = type.rank;
  const Diagram dia = diagram(type);

  RationalMatrix gram(r, std::vector<Rational>(r, Rational(0)));
  for (int i = 0; i < r; ++i) gram[i][i] = dia.squared_lengths[i];
  for (auto [i, j] : dia.edges) {
    gram[i][j] = gram[j][i] = -std::max(dia.squared_lengths[i], dia.squared_lengths[j]) / 2;
  }

  cd.cartan_.assign(r, std::vector<int>(r, 0));
  cd.symmetrizers_.resize(r);
  for (int i = 0; i < r; ++i) {
    cd.symmetrizers_[i] = dia.squared_lengths[i] / 2;
    for (int j = 0; j < r; ++j) {
      cd.cartan_[i][j] =
          static_cast<int>(to_integer(2 * gram[i][j] / gram[j][j], "Cartan entry").get_si());
    }
  }

  // F = A^{-1} D
  RationalMatrix a(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = cd.cartan_[i][j];
  }
  RationalMatrix ainv = invert(a);
  RationalMatrix form(r, std::vector<Rational>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) form[i][j] = ainv[i][j] * cd.symmetrizers_[j];
  }

  // Root system: closure of the simple roots under simple reflections.
  using Entry = std::pair<std::vector<int>, std::vector<int>>;  // (coords, labels)
  std::set<std::vector<int>> seen;
  std::deque<Entry> queue;
  for (int i = 0; i < r; ++i) {
    std::vector<int> c(r, 0);
    c[i] = 1;
    seen.insert(c);
    queue.emplace_back(c, cd.cartan_[i]);
  }
  std::vector<Entry> all;
  while (!queue.empty()) {
    auto [coords, labels] = queue.front();
    queue.pop_front();
    all.emplace_back(coords, labels);
    for (int i = 0; i < r; ++i) {
      const int k = labels[i];
      if (k == 0) continue;
      auto c2 = coords;
      auto l2 = labels;
      c2[i] -= k;
      for (int j = 0; j < r; ++j) l2[j] -= k * cd.cartan_[i][j];
      if (seen.insert(c2).second) queue.emplace_back(std::move(c2), std::move(l2));
    }
  }
  for (auto& [coords, labels] : all) {
    if (std::ranges::all_of(coords, [](int x) { return x >= 0; })) {
      Root root;
      root.height = std::accumulate(coords.begin(), coords.end(), 0);
      root.coords = coords;
      root.weight = Weight(labels);
      cd.positive_roots_.push_back(std::move(root));
    }
  }
  if (all.size() != 2 * cd.positive_roots_.size()) {
    throw InvariantError("root system of " + type.name() + " is not symmetric");
  }
  std::ranges::sort(cd.positive_roots_, [](const Root& x, const Root& y) {
    return std::tie(x.height, x.coords) < std::tie(y.height, y.coords);
  });
  cd.highest_root_ = cd.positive_roots_.back().weight;
  cd.rho_ = Weight(std::vector<int>(r, 1));
  cd.set_form(std::move(form));

  const Rational theta_sq = inner(cd, cd.highest_root_, cd.highest_root_);
  if (theta_sq != 2) throw InvariantError("(theta, theta) != 2 for " + type.name());
  cd.dual_coxeter_ = static_cast<int>(
      to_integer(1 + inner(cd, cd.highest_root_, cd.rho_), "dual Coxeter number").get_si());
  return cd;
}

std::int64_t inner_scaled(const CartanData& cd, const Weight& lambda, const Weight& mu) {
  const auto& s = cd.scaled_form();
  const std::size_t r = s.size();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (lambda[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < r; ++j) row += s[i][j] * mu[j];
    total += lambda[i] * row;
  }
  return total;
}

Rational inner(const CartanData& cd, const Weight& lambda, const Weight& mu) {
  require_rank(cd, lambda);
  require_rank(cd, mu);
  Rational q(Integer(inner_scaled(cd, lambda, mu)), Integer(cd.form_denominator()));
  q.canonicalize();
  return q;
}

Weight reflect(const CartanData& cd, const Weight& mu, int i) {
  Weight out(mu);
  const int k = mu[i];
  if (k == 0) return out;
  const auto& row = cd.cartan_matrix()[i];
  for (std::size_t j = 0; j < row.size(); ++j) out[j] -= k * row[j];
  return out;
}

std::pair<Weight, bool> reflect_to_dominant(const CartanData& cd, Weight mu) {
  bool odd = false;
  const int r = cd.rank();
  while (true) {
    int i = 0;
    while (i < r && mu[i] >= 0) ++i;
    if (i == r) return {std::move(mu), odd};
    mu = reflect(cd, mu, i);
    odd = !odd;
  }
}

std::vector<Weight> weyl_orbit(const CartanData& cd, const Weight& lambda) {
  require_rank(cd, lambda);
  std::set<Weight> orbit{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (int i = 0; i < cd.rank(); ++i) {
        if (w[i] == 0) continue;
        Weight v = reflect(cd, w, i);
        if (orbit.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  return {orbit.begin(), orbit.end()};
}

Weight dual_weight(const CartanData& cd, const Weight& lambda) {
  require_dominant(cd, lambda);
  // -lambda is antidominant, so its dominant conjugate is -w0(lambda).
  return reflect_to_dominant(cd, -lambda).first;
}

std::vector<Rational> root_coordinates(const CartanData& cd, const Weight& w) {
  // c_i = (w, varpi_i) / d_i
  require_rank(cd, w);
  const int r = cd.rank();
  std::vector<Rational> c(r);
  for (int i = 0; i < r; ++i) {
    c[i] = inner(cd, w, Weight::fundamental(r, i)) / cd.symmetrizers()[i];
  }
  return c;
}

void require_rank(const CartanData& cd, const Weight& w) {
  if (w.rank() != static_cast<std::size_t>(cd.rank())) {
    throw PreconditionError("weight " + w.str() + " has rank " + std::to_string(w.rank()) +
                            ", expected " + std::to_string(cd.rank()) + " for " +
                            cd.type().name());
  }
}

void require_dominant(const CartanData& cd, const Weight& w) {
  require_rank(cd, w);
  if (!w.is_dominant()) {
    throw PreconditionError("weight " + w.str() + " is not dominant");
  }
}

}  // namespace liealg
