#include "liealg/branching.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace liealg {

namespace {

void check_shape(const Embedding& emb) {
  if (emb.projection.size() != static_cast<std::size_t>(emb.sub.rank)) {
    throw PreconditionError(emb.name() + ": projection needs " + std::to_string(emb.sub.rank) + " rows");
  }
  for (const auto& row : emb.projection) {
    if (row.size() != static_cast<std::size_t>(emb.ambient.rank)) {
      throw PreconditionError(emb.name() + ": projection rows need " +
                              std::to_string(emb.ambient.rank) + " entries");
    }
  }
}

// Height (sum of simple-root coordinates) as an integer multiple of 1/den.
struct HeightFunction {
  std::vector<Integer> coeffs;

  explicit HeightFunction(const CartanData& cd) {
    const int r = cd.rank();
    std::vector<Rational> h(r, Rational(0));
    for (int j = 0; j < r; ++j) {
      for (const auto& c : root_coordinates(cd, Weight::fundamental(r, j))) h[j] += c;
    }
    Integer den = 1;
    for (const auto& x : h) den = lcm(den, Integer(x.get_den()));
    for (const auto& x : h) coeffs.push_back(to_integer(x * den, "height"));
  }

  Integer operator()(const Weight& w) const {
    Integer total = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j) total += coeffs[j] * w[j];
    return total;
  }
};

// Ambient fundamental weights ordered by (dim, node).
std::vector<Weight> test_weights(const Algebra& ambient) {
  const int r = ambient.rank();
  std::vector<std::pair<Integer, Weight>> fundamentals;
  for (int i = 0; i < r; ++i) {
    auto w = Weight::fundamental(r, i);
    fundamentals.emplace_back(ambient.dim(w), w);
  }
  std::ranges::sort(fundamentals);
  std::vector<Weight> out{fundamentals[0].second};
  out.push_back(r > 1 ? fundamentals[1].second : 2 * fundamentals[0].second);
  return out;
}

// First node permutation perm with found[perm[a]][perm[b]] == target[a][b].
std::optional<std::vector<int>> match_nodes(const IntMatrix& found, const IntMatrix& target) {
  const std::size_t n = target.size();
  if (found.size() != n) return std::nullopt;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) ok = found[perm[a]][perm[b]] == target[a][b];
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

void check_weyl_invariance(const Embedding& emb, const Algebra& ambient, const Algebra& sub) {
  for (const auto& lambda : test_weights(ambient)) {
    std::map<Weight, Integer> projected;
    for (const auto& [w, m] : *ambient.weight_system(lambda)) projected[project(emb, w)] += m;
    for (const auto& [w, m] : projected) {
      for (int i = 0; i < sub.rank(); ++i) {
        auto it = projected.find(reflect(sub.cartan(), w, i));
        if (it == projected.end() || it->second != m) {
          throw InvariantError(emb.name() + ": projected weights of L(" + lambda.str() +
                               ") are not invariant under the sub Weyl group");
        }
      }
    }
  }
}

}  // namespace

std::string Embedding::name() const { return sub.name() + "<" + ambient.name(); }

Weight project(const Embedding& emb, const Weight& w) {
  check_shape(emb);
  if (w.rank() != static_cast<std::size_t>(emb.ambient.rank)) {
    throw PreconditionError("weight " + w.str() + " does not match ambient rank of " + emb.name());
  }
  Weight out(emb.projection.size());
  for (std::size_t i = 0; i < emb.projection.size(); ++i) {
    int v = 0;
    for (std::size_t j = 0; j < w.rank(); ++j) v += emb.projection[i][j] * w[j];
    out[i] = v;
  }
  return out;
}

RepSum branch(const Embedding& emb, const Weight& lambda) {
  check_shape(emb);
  auto ambient = Algebra::standard(emb.ambient);
  auto sub = Algebra::standard(emb.sub);
  require_dominant(ambient->cartan(), lambda);

  std::map<Weight, Integer> residual;
  for (const auto& [w, m] : *ambient->weight_system(lambda)) residual[project(emb, w)] += m;

  const HeightFunction height(sub->cartan());
  RepSum result;
  while (!residual.empty()) {
    auto top = residual.begin();
    Integer top_height = height(top->first);
    for (auto it = std::next(residual.begin()); it != residual.end(); ++it) {
      Integer h = height(it->first);
      if (h > top_height || (h == top_height && it->first > top->first)) {
        top = it;
        top_height = h;
      }
    }
    const Weight mu = top->first;
    const Integer m = top->second;
    if (!mu.is_dominant()) {
      throw InvariantError(emb.name() + ": highest residual weight " + mu.str() + " is not dominant");
    }
    for (const auto& [w, k] : *sub->weight_system(mu)) {
      auto it = residual.find(w);
      Integer left = (it == residual.end() ? Integer(0) : it->second) - m * k;
      if (left < 0) {
        throw InvariantError(emb.name() + ": negative residual multiplicity at " + w.str() +
                             " while branching L(" + lambda.str() + ")");
      }
      if (left == 0) residual.erase(it);
      else it->second = left;
    }
    result[mu] += m;
  }
  return result;
}

Integer embedding_index(const Embedding& emb) {
  check_shape(emb);
  auto ambient = Algebra::standard(emb.ambient);
  auto sub = Algebra::standard(emb.sub);
  std::optional<Integer> ratio;
  for (const auto& lambda : test_weights(*ambient)) {
    Rational q(sub->index_of_sum(branch(emb, lambda)), ambient->dynkin_index(lambda));
    q.canonicalize();
    Integer k = to_integer(q, (emb.name() + " embedding index").c_str());
    if (ratio && *ratio != k) {
      throw InvariantError(emb.name() + ": index ratio is not constant (" + ratio->get_str() +
                           " vs " + k.get_str() + ")");
    }
    ratio = k;
  }
  if (*ratio <= 0) throw InvariantError(emb.name() + ": embedding index must be positive");
  return *ratio;
}

Integer validate(const Embedding& emb) {
  check_shape(emb);
  auto ambient = Algebra::standard(emb.ambient);
  auto sub = Algebra::standard(emb.sub);
  check_weyl_invariance(emb, *ambient, *sub);
  return embedding_index(emb);
}

Embedding compose(const Embedding& lower, const Embedding& upper) {
  check_shape(lower);
  check_shape(upper);
  if (lower.ambient != upper.sub) {
    throw PreconditionError("cannot compose " + lower.name() + " with " + upper.name());
  }
  IntMatrix p(lower.sub.rank, std::vector<int>(upper.ambient.rank, 0));
  for (int i = 0; i < lower.sub.rank; ++i) {
    for (int k = 0; k < upper.sub.rank; ++k) {
      if (lower.projection[i][k] == 0) continue;
      for (int j = 0; j < upper.ambient.rank; ++j) p[i][j] += lower.projection[i][k] * upper.projection[k][j];
    }
  }
  return {upper.ambient, lower.sub, std::move(p)};
}

Embedding identity_embedding(LieType type) {
  IntMatrix p(type.rank, std::vector<int>(type.rank, 0));
  for (int i = 0; i < type.rank; ++i) p[i][i] = 1;
  return {type, type, std::move(p)};
}

Embedding subdiagram_embedding(LieType ambient, LieType sub, const std::vector<int>& nodes) {
  const auto& a = Algebra::standard(ambient)->cartan().cartan_matrix();
  const auto& s = Algebra::standard(sub)->cartan().cartan_matrix();
  if (nodes.size() != static_cast<std::size_t>(sub.rank)) {
    throw PreconditionError("subdiagram needs " + std::to_string(sub.rank) + " nodes");
  }
  IntMatrix p(sub.rank, std::vector<int>(ambient.rank, 0));
  for (int x = 0; x < sub.rank; ++x) {
    for (int y = 0; y < sub.rank; ++y) {
      if (a.at(nodes[x]).at(nodes[y]) != s[x][y]) {
        throw PreconditionError("nodes do not span a " + sub.name() + " subdiagram of " + ambient.name());
      }
    }
    p[x][nodes[x]] = 1;
  }
  return {ambient, sub, std::move(p)};
}

Embedding folding_embedding(LieType ambient, LieType sub, const std::vector<int>& automorphism) {
  const auto& a = Algebra::standard(ambient)->cartan().cartan_matrix();
  const int r = ambient.rank;
  if (automorphism.size() != static_cast<std::size_t>(r)) throw PreconditionError("bad automorphism size");
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (a[automorphism[i]][automorphism[j]] != a[i][j]) {
        throw PreconditionError("permutation is not a diagram automorphism of " + ambient.name());
      }
    }
  }
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(r, false);
  for (int i = 0; i < r; ++i) {
    if (seen[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[j]; j = automorphism[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    orbits.push_back(std::move(orbit));
  }
  // The invariant coroot of an orbit is the sum of its coroots; a root
  // restricts to the invariant Cartan through any orbit representative.
  const std::size_t n = orbits.size();
  IntMatrix folded(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (int j : orbits[y]) folded[x][y] += a[orbits[x][0]][j];
    }
  }
  const auto& s = Algebra::standard(sub)->cartan().cartan_matrix();
  auto perm = match_nodes(folded, s);
  if (!perm) throw PreconditionError("folding of " + ambient.name() + " is not " + sub.name());
  IntMatrix p(sub.rank, std::vector<int>(r, 0));
  for (int x = 0; x < sub.rank; ++x) {
    for (int j : orbits[(*perm)[x]]) p[x][j] = 1;
  }
  return {ambient, sub, std::move(p)};
}

Embedding long_root_embedding(LieType ambient, LieType sub) {
  const auto& cd = Algebra::standard(ambient)->cartan();
  const int r = ambient.rank;
  std::vector<const Root*> longs;
  for (const auto& root : cd.positive_roots()) {
    if (inner(cd, root.weight, root.weight) == 2) longs.push_back(&root);
  }
  // Simple roots of the subsystem: long positive roots that are not the sum of
  // two long positive roots.
  std::vector<const Root*> simple;
  for (const Root* x : longs) {
    bool decomposable = false;
    for (const Root* y : longs) {
      if (y->height >= x->height) continue;
      Weight rest = x->weight - y->weight;
      decomposable = std::ranges::any_of(longs, [&](const Root* z) { return z->weight == rest; });
      if (decomposable) break;
    }
    if (!decomposable) simple.push_back(x);
  }
  if (simple.size() != static_cast<std::size_t>(sub.rank)) {
    throw PreconditionError("long roots of " + ambient.name() + " do not form " + sub.name());
  }
  // label_k(w) = <w, beta_k^vee>; for a long root beta = sum c_j alpha_j,
  // beta^vee = sum c_j d_j alpha_j^vee.
  IntMatrix rows;
  for (const Root* beta : simple) {
    std::vector<int> row(r);
    for (int j = 0; j < r; ++j) {
      row[j] = static_cast<int>(to_integer(beta->coords[j] * cd.symmetrizers()[j], "coroot").get_si());
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = simple.size();
  IntMatrix found(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (int j = 0; j < r; ++j) found[x][y] += rows[y][j] * simple[x]->weight[j];
    }
  }
  const auto& s = Algebra::standard(sub)->cartan().cartan_matrix();
  auto perm = match_nodes(found, s);
  if (!perm) throw PreconditionError("long roots of " + ambient.name() + " do not form " + sub.name());
  IntMatrix p;
  for (int x = 0; x < sub.rank; ++x) p.push_back(rows[(*perm)[x]]);
  return {ambient, sub, std::move(p)};
}

const std::vector<Embedding>& builtin_tower() {
  static const std::vector<Embedding> tower = [] {
    const LieType e8(Series::E, 8), e7(Series::E, 7), e6(Series::E, 6);
    const LieType f4(Series::F, 4), d4(Series::D, 4);
    std::vector<Embedding> out{
        subdiagram_embedding(e8, e7, {0, 1, 2, 3, 4, 5, 6}),
        subdiagram_embedding(e7, e6, {0, 1, 2, 3, 4, 5}),
        folding_embedding(e6, f4, {5, 1, 4, 3, 2, 0}),
        long_root_embedding(f4, d4),
    };
    for (const auto& emb : out) {
      if (validate(emb) != 1) throw InvariantError(emb.name() + ": built-in embedding index is not 1");
    }
    return out;
  }();
  return tower;
}

std::optional<Embedding> chain(const std::vector<Embedding>& links, LieType ambient, LieType sub) {
  Embedding acc = identity_embedding(ambient);
  for (std::size_t steps = 0; acc.sub != sub; ++steps) {
    auto next = std::ranges::find_if(links, [&](const Embedding& e) { return e.ambient == acc.sub; });
    if (next == links.end() || steps > links.size()) return std::nullopt;
    acc = compose(*next, acc);
  }
  return acc;
}

std::optional<Embedding> builtin_chain(LieType ambient, LieType sub) {
  return chain(builtin_tower(), ambient, sub);
}

Embedding parse_embedding(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw PreconditionError("empty embedding description");
  std::optional<Embedding> emb;
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      emb = Embedding{LieType::parse(j.at("ambient").get<std::string>()),
                      LieType::parse(j.at("sub").get<std::string>()),
                      j.at("projection").get<IntMatrix>()};
    } catch (const nlohmann::json::exception& e) {
      throw PreconditionError(std::string("malformed embedding JSON: ") + e.what());
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string line;
    IntMatrix rows;
    std::optional<std::pair<LieType, LieType>> types;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      if (!types) {
        std::string a, s;
        if (!(ls >> a)) continue;
        if (!(ls >> s)) throw PreconditionError("embedding header must read '<ambient> <sub>'");
        types.emplace(LieType::parse(a), LieType::parse(s));
        continue;
      }
      std::vector<int> row;
      std::string tok;
      while (ls >> tok) {
        try {
          std::size_t used = 0;
          row.push_back(std::stoi(tok, &used));
          if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
          throw PreconditionError("bad matrix entry '" + tok + "'");
        }
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
    if (!types) throw PreconditionError("embedding header missing");
    emb = Embedding{types->first, types->second, std::move(rows)};
  }
  validate(*emb);
  return *emb;
}

Embedding load_embedding(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_embedding(buf.str());
}

}  // namespace liealg
