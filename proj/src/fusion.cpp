#include "liealg/fusion.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>

namespace liealg {

namespace {

std::atomic<std::size_t> g_table_limit{1'000'000};

}  // namespace

std::int64_t level_of(const CartanData& cd, const Weight& lambda) {
  require_rank(cd, lambda);
  std::int64_t total = 0;
  for (int i = 0; i < cd.rank(); ++i) total += static_cast<std::int64_t>(lambda[i]) * cd.comarks()[i];
  return total;
}

std::vector<Weight> alcove(const CartanData& cd, int level) {
  if (level < 0) throw PreconditionError("level must be nonnegative");
  const int r = cd.rank();
  const auto& marks = cd.comarks();
  std::vector<Weight> out;
  Weight current(r);
  std::function<void(int, int)> fill = [&](int node, int budget) {
    if (node == r) {
      out.push_back(current);
      return;
    }
    for (int k = 0; k * marks[node] <= budget; ++k) {
      current[node] = k;
      fill(node + 1, budget - k * marks[node]);
    }
    current[node] = 0;
  };
  fill(0, level);
  std::ranges::sort(out, [&](const Weight& a, const Weight& b) {
    auto la = level_of(cd, a);
    auto lb = level_of(cd, b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

RepSum tensor_decompose(const Algebra& algebra, const Weight& lambda, const Weight& mu) {
  const auto& cd = algebra.cartan();
  require_dominant(cd, lambda);
  require_dominant(cd, mu);
  const bool swap = algebra.dim(mu) > algebra.dim(lambda);
  const Weight& big = swap ? mu : lambda;
  const Weight& small = swap ? lambda : mu;
  const Weight& rho = cd.weyl_vector();

  auto weights = algebra.weight_system(small);
  std::map<Weight, Integer> acc;
  for (const auto& [w, m] : *weights) {
    auto [dom, odd] = reflect_to_dominant(cd, big + w + rho);
    if (std::ranges::any_of(dom.labels(), [](int x) { return x == 0; })) continue;
    auto& slot = acc[dom - rho];
    if (odd) slot -= m;
    else slot += m;
  }
  RepSum result;
  for (auto& [nu, m] : acc) {
    if (m < 0) throw InvariantError("negative tensor multiplicity at " + nu.str());
    if (m > 0) result.emplace(nu, std::move(m));
  }
  return result;
}

FusionRing::FusionRing(std::shared_ptr<const Algebra> algebra, int level)
    : algebra_(std::move(algebra)), level_(level) {
  const auto& cd = algebra_->cartan();
  shifted_level_ = level_ + cd.dual_coxeter();
  alcove_ = liealg::alcove(cd, level_);
  for (std::size_t i = 0; i < alcove_.size(); ++i) index_.emplace(alcove_[i], i);
  duals_.resize(alcove_.size());
  for (std::size_t i = 0; i < alcove_.size(); ++i) {
    auto it = index_.find(dual_weight(cd, alcove_[i]));
    if (it == index_.end()) throw InvariantError("alcove is not closed under duality");
    duals_[i] = it->second;
  }
  const std::size_t p = alcove_.size();
  use_table_ = p <= 1000 && p * p * p <= table_limit();
}

std::shared_ptr<const FusionRing> FusionRing::standard(LieType type, int level) {
  static std::mutex registry_mutex;
  static std::map<std::pair<LieType, int>, std::shared_ptr<const FusionRing>> registry;
  const auto key = std::make_pair(type, level);
  {
    std::lock_guard lock(registry_mutex);
    if (auto it = registry.find(key); it != registry.end()) return it->second;
  }
  auto ring = std::make_shared<const FusionRing>(Algebra::standard(type), level);
  std::lock_guard lock(registry_mutex);
  return registry.try_emplace(key, std::move(ring)).first->second;
}

std::size_t FusionRing::table_limit() { return g_table_limit.load(); }
void FusionRing::set_table_limit(std::size_t entries) { g_table_limit.store(entries); }

bool FusionRing::contains(const Weight& lambda) const { return index_.contains(lambda); }

std::size_t FusionRing::position(const Weight& lambda) const {
  require_rank(algebra_->cartan(), lambda);
  auto it = index_.find(lambda);
  if (it == index_.end()) {
    throw PreconditionError("weight " + lambda.str() + " is not in the level-" +
                            std::to_string(level_) + " alcove of " + algebra_->type().name());
  }
  return it->second;
}

std::vector<std::int64_t> FusionRing::compute_product(std::size_t i, std::size_t j) const {
  const auto& cd = algebra_->cartan();
  const Weight& rho = cd.weyl_vector();
  const Weight& theta = cd.highest_root();
  std::vector<std::int64_t> out(alcove_.size(), 0);
  for (const auto& [nu, m] : tensor_decompose(*algebra_, alcove_[i], alcove_[j])) {
    Weight x = nu + rho;
    bool odd = false;
    while (true) {
      auto [dom, flip] = reflect_to_dominant(cd, std::move(x));
      x = std::move(dom);
      odd ^= flip;
      const std::int64_t excess = level_of(cd, x) - shifted_level_;
      if (excess <= 0) break;
      x -= static_cast<int>(excess) * theta;
      odd = !odd;
    }
    if (std::ranges::any_of(x.labels(), [](int v) { return v == 0; })) continue;
    if (level_of(cd, x) == shifted_level_) continue;
    const std::size_t k = position(x - rho);
    if (!m.fits_slong_p()) throw InvariantError("fusion multiplicity overflow");
    out[k] += odd ? -m.get_si() : m.get_si();
  }
  for (auto v : out) {
    if (v < 0) throw InvariantError("negative fusion coefficient");
  }
  return out;
}

const std::vector<std::int64_t>& FusionRing::row(std::size_t i, std::size_t j,
                                                 std::vector<std::int64_t>& scratch) const {
  const std::size_t p = alcove_.size();
  if (i > j) std::swap(i, j);
  if (use_table_) {
    std::call_once(table_once_, [&] {
      std::vector<std::int64_t> table(p * p * p, 0);
      for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a; b < p; ++b) {
          auto prod = compute_product(a, b);
          std::ranges::copy(prod, table.begin() + (a * p + b) * p);
          std::ranges::copy(prod, table.begin() + (b * p + a) * p);
        }
      }
      table_ = std::move(table);
    });
    scratch.assign(table_.begin() + (i * p + j) * p, table_.begin() + (i * p + j + 1) * p);
    return scratch;
  }
  const std::size_t key = i * p + j;
  {
    std::lock_guard lock(pair_mutex_);
    if (auto it = pair_cache_.find(key); it != pair_cache_.end()) return it->second;
  }
  auto computed = compute_product(i, j);
  std::lock_guard lock(pair_mutex_);
  return pair_cache_.try_emplace(key, std::move(computed)).first->second;
}

std::vector<std::int64_t> FusionRing::product(const Weight& lambda, const Weight& mu) const {
  std::vector<std::int64_t> scratch;
  return row(position(lambda), position(mu), scratch);
}

Integer FusionRing::coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) const {
  const std::size_t i = position(lambda);
  const std::size_t j = position(mu);
  const std::size_t k = position(nu);
  std::vector<std::int64_t> scratch;
  return Integer(static_cast<long>(row(i, j, scratch)[duals_[k]]));
}

std::vector<Integer> FusionRing::fuse(const std::vector<Integer>& state, std::size_t label) const {
  std::vector<Integer> next(state.size(), 0);
  std::vector<std::int64_t> scratch;
  for (std::size_t k = 0; k < state.size(); ++k) {
    if (state[k] == 0) continue;
    const auto& prod = row(k, label, scratch);
    for (std::size_t n = 0; n < prod.size(); ++n) {
      if (prod[n] != 0) next[n] += state[k] * Integer(static_cast<long>(prod[n]));
    }
  }
  return next;
}

Integer FusionRing::blocks_dim(const CurveData& curve) const {
  if (curve.genus < 0) throw PreconditionError("genus must be nonnegative");
  std::vector<std::size_t> labels;
  for (const auto& w : curve.labels) labels.push_back(position(w));

  if (curve.genus == 0) {
    switch (labels.size()) {
      case 0: return 1;
      case 1: return alcove_[labels[0]].is_zero() ? 1 : 0;
      case 2: return labels[1] == duals_[labels[0]] ? 1 : 0;
      default: break;
    }
  }

  // State: multiplicities of the label obtained by fusing everything seen so
  // far from the left. A curve without marked points gets a 0-labelled one.
  const std::size_t p = alcove_.size();
  std::vector<Integer> state(p, 0);
  state[labels.empty() ? position(Weight::zero(algebra_->rank())) : labels[0]] = 1;
  for (std::size_t n = 1; n < labels.size(); ++n) state = fuse(state, labels[n]);

  // Each handle appends a pair (mu, mu*) summed over the alcove.
  for (int g = 0; g < curve.genus; ++g) {
    std::vector<Integer> next(p, 0);
    for (std::size_t mu = 0; mu < p; ++mu) {
      auto branch = fuse(fuse(state, mu), duals_[mu]);
      for (std::size_t n = 0; n < p; ++n) next[n] += branch[n];
    }
    state = std::move(next);
  }
  // Closing: dim B_0(kappa, lambda) = N^0_{kappa lambda}.
  return state[position(Weight::zero(algebra_->rank()))];
}

Integer fusion_coeff(LieType type, int level, const Weight& lambda, const Weight& mu, const Weight& nu) {
  return FusionRing::standard(type, level)->coefficient(lambda, mu, nu);
}

Integer blocks_dim(LieType type, int level, const CurveData& curve) {
  return FusionRing::standard(type, level)->blocks_dim(curve);
}

}  // namespace liealg
