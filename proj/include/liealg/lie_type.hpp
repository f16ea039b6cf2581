#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace liealg {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie algebra by Cartan type, e.g. "E8" or "D4".
///
/// Allowed ranks: A r>=1, B r>=2, C r>=2, D r>=3, E r in {6,7,8}, F4, G2.
struct LieType {
  Series series;
  int rank;

  /// Throws PreconditionError on a rank the series does not admit.
  LieType(Series s, int r);

  /// Parses "A1", "E8", ... (series letter followed by decimal rank).
  static LieType parse(std::string_view text);

  std::string name() const;

  bool is_exceptional() const { return series >= Series::E; }

  auto operator<=>(const LieType&) const = default;
};

}  // namespace liealg
