#include "liealg/weight.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "liealg/numeric.hpp"

namespace liealg {

Weight Weight::fundamental(std::size_t rank, std::size_t node) {
  Weight w(rank);
  w.labels_.at(node) = 1;
  return w;
}

Weight Weight::parse(std::string_view text) {
  auto fail = [&] { return PreconditionError("malformed weight '" + std::string(text) + "'"); };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw fail();
  std::vector<int> labels;
  std::string_view body(s.data() + 1, s.size() - 2);
  if (body.empty()) return Weight(std::move(labels));
  while (true) {
    auto comma = body.find(',');
    auto item = body.substr(0, comma);
    if (item.empty()) throw fail();
    int v = 0;
    const char* first = item.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) throw fail();
    labels.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Weight(std::move(labels));
}

bool Weight::is_dominant() const {
  return std::ranges::all_of(labels_, [](int x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::ranges::all_of(labels_, [](int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw PreconditionError("weight rank mismatch");
  for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] += other.labels_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.rank() != rank()) throw PreconditionError("weight rank mismatch");
  for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] -= other.labels_[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight w(*this);
  for (auto& x : w.labels_) x = -x;
  return w;
}

Weight operator*(int k, Weight w) {
  for (auto& x : w.labels_) x *= k;
  return w;
}

std::string Weight::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels_[i]);
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : w.labels()) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace liealg
