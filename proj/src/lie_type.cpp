#include "liealg/lie_type.hpp"

#include <charconv>

#include "liealg/numeric.hpp"

namespace liealg {

namespace {

bool rank_allowed(Series s, int r) {
  switch (s) {
    case Series::A: return r >= 1;
    case Series::B: return r >= 2;
    case Series::C: return r >= 2;
    case Series::D: return r >= 3;
    case Series::E: return r >= 6 && r <= 8;
    case Series::F: return r == 4;
    case Series::G: return r == 2;
  }
  return false;
}

}  // namespace

LieType::LieType(Series s, int r) : series(s), rank(r) {
  if (!rank_allowed(s, r)) {
    throw PreconditionError("invalid rank " + std::to_string(r) + " for series " +
                            std::string(1, static_cast<char>(s)));
  }
}

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw PreconditionError("malformed Lie type '" + std::string(text) + "'");
  Series s;
  switch (text.front()) {
    case 'A': s = Series::A; break;
    case 'B': s = Series::B; break;
    case 'C': s = Series::C; break;
    case 'D': s = Series::D; break;
    case 'E': s = Series::E; break;
    case 'F': s = Series::F; break;
    case 'G': s = Series::G; break;
    default: throw PreconditionError("unknown series in '" + std::string(text) + "'");
  }
  int r = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.front() == '+') {
    throw PreconditionError("malformed rank in '" + std::string(text) + "'");
  }
  return LieType(s, r);
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

}  // namespace liealg
