#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "liealg/cartan.hpp"

namespace liealg {

/// Weight -> multiplicity for one irreducible module, ordered by weight.
using WeightSystem = std::map<Weight, Integer>;

/// A completely reducible module: highest weight -> number of copies.
using RepSum = std::map<Weight, Integer>;

struct MinimalIndex {
  Integer index;
  Weight weight;
};

/// A simple Lie algebra together with memoised data about its irreducible
/// modules L(lambda). All operations are const and thread-safe; the caches
/// are filled idempotently, so concurrent first use only duplicates work.
class Algebra {
 public:
  explicit Algebra(CartanData cd);

  /// Shared instance for an unmodified type, built on first use.
  static std::shared_ptr<const Algebra> standard(LieType type);

  const CartanData& cartan() const { return cd_; }
  const LieType& type() const { return cd_.type(); }
  int rank() const { return cd_.rank(); }

  /// Weyl dimension formula.
  Integer dim(const Weight& lambda) const;

  /// Multiplicities of the dominant weights of L(lambda), from Freudenthal's
  /// recursion. Memoised per lambda.
  std::shared_ptr<const WeightSystem> dominant_multiplicities(const Weight& lambda) const;

  /// All weights of L(lambda) with multiplicities (Weyl orbits of the dominant
  /// ones). Memoised per lambda.
  std::shared_ptr<const WeightSystem> weight_system(const Weight& lambda) const;

  /// dim L(lambda) * (lambda, lambda + 2 rho) / dim g.
  /// Throws InvariantError if the quotient is not an integer.
  Integer dynkin_index(const Weight& lambda) const;

  Integer index_of_sum(const RepSum& sum) const;
  Integer dim_of_sum(const RepSum& sum) const;

  /// Smallest Dynkin index over nonzero dominant weights with label sum <= 2.
  /// Ties go to the smaller module, then to the weight concentrated on the
  /// earliest node of preferred_node_order().
  MinimalIndex minimal_index() const;

 private:
  CartanData cd_;
  // scaled (varpi_j, alpha) for every positive root alpha
  std::vector<std::vector<std::int64_t>> root_duals_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<Weight, std::shared_ptr<const WeightSystem>, WeightHash> dominant_cache_;
  mutable std::unordered_map<Weight, std::shared_ptr<const WeightSystem>, WeightHash> full_cache_;

  std::shared_ptr<const WeightSystem> freudenthal(const Weight& lambda) const;
};

/// Node order used to break ties between equivalent representatives: 1..r,
/// except for the E series where the long-arm end node r comes first.
std::vector<int> preferred_node_order(const LieType& type);

}  // namespace liealg
