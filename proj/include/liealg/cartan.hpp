#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "liealg/lie_type.hpp"
#include "liealg/numeric.hpp"
#include "liealg/weight.hpp"

namespace liealg {

using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// A positive root, kept both in Dynkin labels and in simple-root coordinates.
struct Root {
  Weight weight;
  std::vector<int> coords;
  int height = 0;
};

/// Static structure of a simple Lie algebra.
///
/// Node numbering is Bourbaki's throughout (E8: 1-3-4-5-6-7-8 with 2 on 4;
/// F4: 1-2=>3-4 with 1,2 long; G2: 1 short, 2 long; B_r: r short; C_r: r
/// long). Cartan matrix convention: A_ij = <alpha_i, alpha_j^vee>, so row i of
/// A is alpha_i written in Dynkin labels.
///
/// The invariant form is normalised so that long roots, and in particular the
/// highest root, have squared length 2.
class CartanData {
 public:
  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }

  const IntMatrix& cartan_matrix() const { return cartan_; }
  /// d_i = (alpha_i, alpha_i) / 2.
  const std::vector<Rational>& symmetrizers() const { return symmetrizers_; }
  /// F_ij = (varpi_i, varpi_j).
  const RationalMatrix& form_matrix() const { return form_; }

  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Weight& highest_root() const { return highest_root_; }
  const Weight& weyl_vector() const { return rho_; }
  int dual_coxeter() const { return dual_coxeter_; }
  int algebra_dim() const { return rank() + 2 * static_cast<int>(positive_roots_.size()); }

  /// Simple root alpha_i (zero-based) in Dynkin labels.
  Weight simple_root(int i) const { return Weight(cartan_[i]); }

  /// Integer form: (lambda, mu) = lambda^T S mu / form_denominator().
  const std::vector<std::vector<std::int64_t>>& scaled_form() const { return scaled_form_; }
  std::int64_t form_denominator() const { return form_den_; }

  /// Comarks a_i^vee = (varpi_i, theta); (lambda, theta) = sum lambda_i a_i^vee.
  const std::vector<int>& comarks() const { return comarks_; }

  /// Copy with the invariant form replaced. Derived integer caches are
  /// recomputed; roots, theta and h^vee are left untouched. Used by the
  /// fault-injection fixtures.
  CartanData with_form(RationalMatrix form) const;

  friend CartanData build_cartan(LieType type);

 private:
  explicit CartanData(LieType type) : type_(type) {}
  void set_form(RationalMatrix form);

  LieType type_;
  IntMatrix cartan_;
  std::vector<Rational> symmetrizers_;
  RationalMatrix form_;
  std::vector<std::vector<std::int64_t>> scaled_form_;
  std::int64_t form_den_ = 1;
  std::vector<int> comarks_;
  std::vector<Root> positive_roots_;
  Weight highest_root_;
  Weight rho_;
  int dual_coxeter_ = 0;
};

/// Builds the Cartan matrix, generates the root system by reflection closure
/// of the simple roots and fixes the normalised form.
CartanData build_cartan(LieType type);

/// Exact (lambda, mu).
Rational inner(const CartanData& cd, const Weight& lambda, const Weight& mu);

/// (lambda, mu) * form_denominator(), exact in 64 bits for the label sizes
/// this library deals with.
std::int64_t inner_scaled(const CartanData& cd, const Weight& lambda, const Weight& mu);

/// Simple reflection s_i(mu) = mu - mu_i alpha_i (zero-based i).
Weight reflect(const CartanData& cd, const Weight& mu, int i);

/// Dominant Weyl conjugate of mu together with the parity of the number of
/// simple reflections used (false = even).
std::pair<Weight, bool> reflect_to_dominant(const CartanData& cd, Weight mu);

/// The full Weyl orbit of lambda, sorted.
std::vector<Weight> weyl_orbit(const CartanData& cd, const Weight& lambda);

/// lambda* = -w0(lambda), the highest weight of the dual module.
/// Throws PreconditionError on a non-dominant argument.
Weight dual_weight(const CartanData& cd, const Weight& lambda);

/// Simple-root coordinates of a weight (rational in general).
std::vector<Rational> root_coordinates(const CartanData& cd, const Weight& w);

void require_rank(const CartanData& cd, const Weight& w);
void require_dominant(const CartanData& cd, const Weight& w);

}  // namespace liealg
