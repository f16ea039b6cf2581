#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "liealg/highest_weight.hpp"

namespace liealg {

/// (lambda, theta) = sum_i lambda_i a_i^vee.
std::int64_t level_of(const CartanData& cd, const Weight& lambda);

/// P_level: dominant weights with (lambda, theta) <= level, ordered by
/// (lambda, theta) and then lexicographically.
std::vector<Weight> alcove(const CartanData& cd, int level);

/// Multiplicities of L(nu) in L(lambda) (x) L(mu), by Racah-Speiser
/// reflection of the weights of the smaller factor.
RepSum tensor_decompose(const Algebra& algebra, const Weight& lambda, const Weight& mu);

/// Marked curve: genus and the ordered list of labels at the marked points.
struct CurveData {
  int genus = 0;
  std::vector<Weight> labels;
};

/// The level-l fusion ring of an algebra.
///
/// Coefficients come from the Kac-Walton formula: every term of the ordinary
/// tensor product is folded into the level-l alcove by the affine Weyl group
/// acting at shifted level l + h^vee, with sign; terms on a wall vanish.
///
/// If |P_l|^3 does not exceed table_limit(), the complete table N^nu_{lambda
/// mu} is built the first time any coefficient is requested; otherwise
/// products are computed pair by pair as they are needed.
class FusionRing {
 public:
  FusionRing(std::shared_ptr<const Algebra> algebra, int level);

  /// Shared instance for an unmodified type.
  static std::shared_ptr<const FusionRing> standard(LieType type, int level);

  static std::size_t table_limit();
  static void set_table_limit(std::size_t entries);

  const Algebra& algebra() const { return *algebra_; }
  int level() const { return level_; }
  const std::vector<Weight>& alcove() const { return alcove_; }
  bool contains(const Weight& lambda) const;
  /// Position of lambda in alcove(); throws PreconditionError if absent.
  std::size_t position(const Weight& lambda) const;
  /// Position of lambda* in alcove().
  std::size_t dual_position(std::size_t index) const { return duals_[index]; }
  bool uses_table() const { return use_table_; }

  /// N^nu_{lambda mu} for every nu in the alcove, indexed by position.
  std::vector<std::int64_t> product(const Weight& lambda, const Weight& mu) const;

  /// N_{lambda mu nu} = dim B_0(lambda, mu, nu) = N^{nu*}_{lambda mu}.
  /// Fully symmetric; N_{lambda mu 0} = delta_{mu, lambda*}.
  Integer coefficient(const Weight& lambda, const Weight& mu, const Weight& nu) const;

  /// Dimension of the space of conformal blocks on a curve of the given genus
  /// with the given labels.
  ///
  /// Genus is removed one handle at a time by appending a pair (mu, mu*) and
  /// summing over the alcove; the genus-0 space is then evaluated by fusing
  /// the labels from the left. Base cases: no labels -> 1, one label lambda ->
  /// delta_{lambda,0}, two labels -> delta_{mu,lambda*}.
  Integer blocks_dim(const CurveData& curve) const;

 private:
  std::shared_ptr<const Algebra> algebra_;
  int level_;
  std::int64_t shifted_level_;
  std::vector<Weight> alcove_;
  std::unordered_map<Weight, std::size_t, WeightHash> index_;
  std::vector<std::size_t> duals_;
  bool use_table_;

  mutable std::once_flag table_once_;
  mutable std::vector<std::int64_t> table_;  // [(i * p + j) * p + k]
  mutable std::mutex pair_mutex_;
  mutable std::unordered_map<std::size_t, std::vector<std::int64_t>> pair_cache_;

  std::vector<std::int64_t> compute_product(std::size_t i, std::size_t j) const;
  const std::vector<std::int64_t>& row(std::size_t i, std::size_t j, std::vector<std::int64_t>& scratch) const;
  std::vector<Integer> fuse(const std::vector<Integer>& state, std::size_t label) const;
};

/// Convenience wrappers over FusionRing::standard.
Integer fusion_coeff(LieType type, int level, const Weight& lambda, const Weight& mu, const Weight& nu);
Integer blocks_dim(LieType type, int level, const CurveData& curve);

}  // namespace liealg
