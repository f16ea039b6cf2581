#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liealg/highest_weight.hpp"

namespace liealg {

/// A subalgebra embedding sub -> ambient, given by the integer matrix that
/// sends ambient Dynkin labels to sub Dynkin labels (rank_sub x rank_ambient).
struct Embedding {
  LieType ambient;
  LieType sub;
  IntMatrix projection;

  /// e.g. "F4<E6"
  std::string name() const;
};

Weight project(const Embedding& emb, const Weight& w);

/// Restriction of L(lambda): project every weight of L(lambda), then
/// repeatedly take the highest remaining weight mu (largest height, then
/// lexicographically largest), record its residual multiplicity m and remove
/// m copies of the weight system of L_sub(mu).
///
/// A residual that would go negative, or a highest remaining weight that is
/// not dominant, means the projection is not an embedding: InvariantError.
RepSum branch(const Embedding& emb, const Weight& lambda);

/// Ratio index(branch(lambda)) / index(lambda) for the smallest ambient
/// fundamental module, checked against a second test module.
/// Throws InvariantError if the ratio is not an integer or not constant.
Integer embedding_index(const Embedding& emb);

/// Full check of a candidate projection: shape, Weyl invariance of the
/// projected weights of the test modules, clean peeling, constant integral
/// index. Returns the index.
Integer validate(const Embedding& emb);

/// The embedding lower -> upper -> ambient, where lower.ambient == upper.sub.
Embedding compose(const Embedding& lower, const Embedding& upper);

Embedding identity_embedding(LieType type);

/// Regular subalgebra on a subset of the ambient nodes (zero-based), listed in
/// the sub's node order.
Embedding subdiagram_embedding(LieType ambient, LieType sub, const std::vector<int>& nodes);

/// Fixed-point subalgebra of a diagram automorphism (a permutation of the
/// ambient nodes).
Embedding folding_embedding(LieType ambient, LieType sub, const std::vector<int>& automorphism);

/// Subalgebra generated by the long roots of the ambient algebra.
Embedding long_root_embedding(LieType ambient, LieType sub);

/// E7<E8, E6<E7 (subdiagrams), F4<E6 (folding), D4<F4 (long roots); each
/// validated with index 1 on first use.
const std::vector<Embedding>& builtin_tower();

/// Composite of the listed embeddings leading from ambient down to sub, if
/// one exists.
std::optional<Embedding> chain(const std::vector<Embedding>& links, LieType ambient, LieType sub);

std::optional<Embedding> builtin_chain(LieType ambient, LieType sub);

/// Embedding description, either JSON
///   {"ambient": "E6", "sub": "F4", "projection": [[0,1,0,0,0,0], ...]}
/// or plain text: a line "E6 F4" followed by one matrix row per line.
/// '#' starts a comment in the text form. The result is validated.
Embedding parse_embedding(std::string_view text);
Embedding load_embedding(const std::filesystem::path& path);

}  // namespace liealg
