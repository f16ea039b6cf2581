#include "liealg/highest_weight.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

namespace liealg {

Algebra::Algebra(CartanData cd) : cd_(std::move(cd)) {
  const int r = cd_.rank();
  for (const auto& root : cd_.positive_roots()) {
    std::vector<std::int64_t> dual(r);
    for (int j = 0; j < r; ++j) dual[j] = inner_scaled(cd_, Weight::fundamental(r, j), root.weight);
    root_duals_.push_back(std::move(dual));
  }
}

std::shared_ptr<const Algebra> Algebra::standard(LieType type) {
  static std::mutex registry_mutex;
  static std::map<LieType, std::shared_ptr<const Algebra>> registry;
  {
    std::lock_guard lock(registry_mutex);
    if (auto it = registry.find(type); it != registry.end()) return it->second;
  }
  auto algebra = std::make_shared<const Algebra>(build_cartan(type));
  std::lock_guard lock(registry_mutex);
  return registry.try_emplace(type, std::move(algebra)).first->second;
}

Integer Algebra::dim(const Weight& lambda) const {
  require_dominant(cd_, lambda);
  const Weight shifted = lambda + cd_.weyl_vector();
  Integer num = 1;
  Integer den = 1;
  for (const auto& dual : root_duals_) {
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (std::size_t j = 0; j < dual.size(); ++j) {
      a += shifted[j] * dual[j];
      b += dual[j];
    }
    if (b <= 0) throw InvariantError("(rho, alpha) is not positive for a positive root");
    num *= a;
    den *= b;
  }
  if (num % den != 0) throw InvariantError("Weyl dimension is not an integer for " + lambda.str());
  return num / den;
}

std::shared_ptr<const WeightSystem> Algebra::freudenthal(const Weight& lambda) const {
  const int r = cd_.rank();
  const auto& roots = cd_.positive_roots();

  // Dominant weights of L(lambda): connected to lambda through dominant weights
  // by subtracting positive roots. Depth = height of lambda - mu.
  std::map<Weight, int> depth{{lambda, 0}};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      const int d = depth[mu];
      for (const auto& root : roots) {
        Weight nu = mu - root.weight;
        if (!nu.is_dominant()) continue;
        if (depth.try_emplace(nu, d + root.height).second) next.push_back(std::move(nu));
      }
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<int, Weight>> order;
  order.reserve(depth.size());
  for (const auto& [w, d] : depth) order.emplace_back(d, w);
  std::ranges::sort(order);

  auto norm = [&](const Weight& w) { return inner_scaled(cd_, w, w); };
  const std::int64_t top = norm(lambda + cd_.weyl_vector());

  auto result = std::make_shared<WeightSystem>();
  auto& mult = *result;
  for (const auto& [d, mu] : order) {
    if (d == 0) {
      mult[mu] = 1;
      continue;
    }
    Integer sum = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      const auto& dual = root_duals_[a];
      Weight nu = mu;
      while (true) {
        nu += roots[a].weight;
        auto rep = reflect_to_dominant(cd_, nu).first;
        auto it = mult.find(rep);
        if (it == mult.end()) break;
        std::int64_t ip = 0;
        for (int j = 0; j < r; ++j) ip += nu[j] * dual[j];
        sum += it->second * Integer(ip);
      }
    }
    const std::int64_t gap = top - norm(mu + cd_.weyl_vector());
    if (gap <= 0) throw InvariantError("Freudenthal denominator vanished at " + mu.str());
    Integer numerator = 2 * sum;
    if (numerator % gap != 0) {
      throw InvariantError("non-integral multiplicity at " + mu.str() + " in L(" + lambda.str() + ")");
    }
    Integer m = numerator / gap;
    if (m > 0) mult[mu] = m;
  }
  return result;
}

std::shared_ptr<const WeightSystem> Algebra::dominant_multiplicities(const Weight& lambda) const {
  require_dominant(cd_, lambda);
  {
    std::lock_guard lock(mutex_);
    if (auto it = dominant_cache_.find(lambda); it != dominant_cache_.end()) return it->second;
  }
  auto computed = freudenthal(lambda);
  std::lock_guard lock(mutex_);
  return dominant_cache_.try_emplace(lambda, std::move(computed)).first->second;
}

std::shared_ptr<const WeightSystem> Algebra::weight_system(const Weight& lambda) const {
  require_dominant(cd_, lambda);
  {
    std::lock_guard lock(mutex_);
    if (auto it = full_cache_.find(lambda); it != full_cache_.end()) return it->second;
  }
  auto dominant = dominant_multiplicities(lambda);
  auto full = std::make_shared<WeightSystem>();
  for (const auto& [mu, m] : *dominant) {
    for (auto& w : weyl_orbit(cd_, mu)) full->emplace(std::move(w), m);
  }
  std::lock_guard lock(mutex_);
  return full_cache_.try_emplace(lambda, std::move(full)).first->second;
}

Integer Algebra::dynkin_index(const Weight& lambda) const {
  require_dominant(cd_, lambda);
  const Weight shifted = lambda + 2 * cd_.weyl_vector();
  Rational q = Rational(dim(lambda)) * inner(cd_, lambda, shifted) / cd_.algebra_dim();
  return to_integer(q, ("Dynkin index of " + lambda.str()).c_str());
}

Integer Algebra::index_of_sum(const RepSum& sum) const {
  Integer total = 0;
  for (const auto& [lambda, m] : sum) total += m * dynkin_index(lambda);
  return total;
}

Integer Algebra::dim_of_sum(const RepSum& sum) const {
  Integer total = 0;
  for (const auto& [lambda, m] : sum) total += m * dim(lambda);
  return total;
}

std::vector<int> preferred_node_order(const LieType& type) {
  std::vector<int> order(type.rank);
  std::iota(order.begin(), order.end(), 0);
  if (type.series == Series::E) std::ranges::reverse(order);
  return order;
}

MinimalIndex Algebra::minimal_index() const {
  const int r = rank();
  std::vector<Weight> candidates;
  for (int i = 0; i < r; ++i) {
    candidates.push_back(Weight::fundamental(r, i));
    for (int j = i; j < r; ++j) {
      Weight w(r);
      w[i] += 1;
      w[j] += 1;
      candidates.push_back(std::move(w));
    }
  }
  const auto nodes = preferred_node_order(type());
  auto key = [&](const Weight& w) {
    std::vector<int> k;
    for (int n : nodes) k.push_back(-w[n]);
    return k;
  };

  std::optional<std::tuple<Integer, Integer, std::vector<int>, Weight>> best;
  for (auto& w : candidates) {
    std::tuple<Integer, Integer, std::vector<int>, Weight> entry{dynkin_index(w), dim(w), key(w), w};
    if (!best || entry < *best) best = std::move(entry);
  }
  return {std::get<0>(*best), std::get<3>(*best)};
}

}  // namespace liealg
