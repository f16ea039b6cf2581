#include "liealg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "liealg/fusion.hpp"

namespace liealg::verify {

namespace {

constexpr const char* kTable = "d(G)/rho(G) table";
constexpr const char* kForm = "normalised invariant form";
constexpr const char* kLevelOne = "E8 at level one";
constexpr const char* kTower = "F4 < E6 < E7 < E8 tower";
constexpr const char* kSpin8 = "Spin8 < F4 inclusion";

struct TableRow {
  const char* type;
  const char* expected;
};

// One row per instantiated column of the table.
constexpr TableRow kTableRows[] = {
    {"A1", "1 [1]"},           {"A2", "1 [1,0]"},
    {"A3", "1 [1,0,0]"},       {"A4", "1 [1,0,0,0]"},
    {"B3", "2 [1,0,0]"},       {"B4", "2 [1,0,0,0]"},
    {"C2", "1 [1,0]"},         {"C3", "1 [1,0,0]"},
    {"D4", "2 [1,0,0,0]"},     {"D5", "2 [1,0,0,0,0]"},
    {"E6", "6 [0,0,0,0,0,1]"}, {"E7", "12 [0,0,0,0,0,0,1]"},
    {"E8", "60 [0,0,0,0,0,0,0,1]"},
    {"F4", "6 [0,0,0,1]"},     {"G2", "2 [1,0]"},
};

constexpr const char* kE8Adjoint = "[0,0,0,0,0,0,0,1]";

std::vector<Claim> build_inventory() {
  std::vector<Claim> claims;
  for (const auto& row : kTableRows) {
    claims.push_back({.id = std::string("table.") + row.type, .source = kTable, .kind = ClaimKind::MinimalIndex,
                      .type = row.type, .expected = row.expected});
  }
  for (const auto& row : kTableRows) {
    claims.push_back({.id = std::string("theta.") + row.type, .source = kForm, .kind = ClaimKind::ThetaNorm,
                      .type = row.type, .expected = "2"});
  }
  claims.push_back({.id = "e8.alcove.level1", .source = kLevelOne, .kind = ClaimKind::Alcove, .type = "E8",
                    .level = 1, .expected = "[[0,0,0,0,0,0,0,0]]"});
  for (int g = 0; g <= 3; ++g) {
    for (int n = 0; n <= 2; ++n) {
      claims.push_back({.id = "e8.blocks.g" + std::to_string(g) + ".n" + std::to_string(n), .source = kLevelOne,
                        .kind = ClaimKind::BlocksDim, .type = "E8", .level = 1, .genus = g, .points = n,
                        .expected = "1"});
    }
  }
  claims.push_back({.id = "e8.index.adjoint", .source = kTower, .kind = ClaimKind::DynkinIndex, .type = "E8",
                    .weight = kE8Adjoint, .expected = "60"});
  for (auto [ambient, sub] : {std::pair{"E8", "E7"}, {"E7", "E6"}, {"E6", "F4"}, {"F4", "D4"}}) {
    claims.push_back({.id = std::string("tower.index.") + sub + "<" + ambient, .source = kTower,
                      .kind = ClaimKind::EmbeddingIndex, .type = ambient, .sub = sub, .expected = "1",
                      .basis = Basis::Derived});
  }
  claims.push_back({.id = "f4.branch.adjoint", .source = kTower, .kind = ClaimKind::Branching, .type = "E8",
                    .sub = "F4", .weight = kE8Adjoint, .expected = "{[0,0,0,0]:14,[0,0,0,1]:7,[1,0,0,0]:1}"});
  claims.push_back({.id = "f4.branch.index", .source = kTower, .kind = ClaimKind::BranchingIndex, .type = "E8",
                    .sub = "F4", .weight = kE8Adjoint, .expected = "60"});
  claims.push_back({.id = "f4.branch.dim", .source = kTower, .kind = ClaimKind::BranchingDim, .type = "E8",
                    .sub = "F4", .weight = kE8Adjoint, .expected = "248", .basis = Basis::Derived});
  claims.push_back({.id = "f4.dimension.identity", .source = kTower, .kind = ClaimKind::DimensionSum, .type = "F4",
                    .weight = "14:[0,0,0,0];1:[1,0,0,0];7:[0,0,0,1]", .expected = "248", .basis = Basis::Derived});
  claims.push_back({.id = "d4.chain.index", .source = kSpin8, .kind = ClaimKind::BranchingIndex, .type = "E8",
                    .sub = "D4", .weight = kE8Adjoint, .expected = "60"});
  return claims;
}

Embedding tower_chain(const Environment& env, const Claim& c) {
  auto emb = chain(env.tower(), LieType::parse(c.type), LieType::parse(c.sub));
  if (!emb) throw PreconditionError("no embedding chain " + c.sub + "<" + c.type);
  validate(*emb);
  return *emb;
}

std::string compute(const Claim& c, const Environment& env) {
  const LieType type = LieType::parse(c.type);
  auto algebra = [&] { return std::make_shared<const Algebra>(env.cartan(type)); };
  switch (c.kind) {
    case ClaimKind::MinimalIndex: {
      auto m = algebra()->minimal_index();
      return m.index.get_str() + " " + m.weight.str();
    }
    case ClaimKind::ThetaNorm: {
      auto cd = env.cartan(type);
      return inner(cd, cd.highest_root(), cd.highest_root()).get_str();
    }
    case ClaimKind::Alcove: {
      std::string out = "[";
      auto weights = alcove(env.cartan(type), c.level);
      for (std::size_t i = 0; i < weights.size(); ++i) out += (i ? "," : "") + weights[i].str();
      return out + "]";
    }
    case ClaimKind::BlocksDim: {
      FusionRing ring(algebra(), c.level);
      CurveData curve{c.genus, std::vector<Weight>(c.points, Weight::zero(type.rank))};
      return ring.blocks_dim(curve).get_str();
    }
    case ClaimKind::DynkinIndex:
      return algebra()->dynkin_index(Weight::parse(c.weight)).get_str();
    case ClaimKind::EmbeddingIndex:
      return embedding_index(tower_chain(env, c)).get_str();
    case ClaimKind::Branching:
      return format_rep_sum(branch(tower_chain(env, c), Weight::parse(c.weight)));
    case ClaimKind::BranchingIndex: {
      auto sub = Algebra::standard(LieType::parse(c.sub));
      return sub->index_of_sum(branch(tower_chain(env, c), Weight::parse(c.weight))).get_str();
    }
    case ClaimKind::BranchingDim: {
      auto sub = Algebra::standard(LieType::parse(c.sub));
      return sub->dim_of_sum(branch(tower_chain(env, c), Weight::parse(c.weight))).get_str();
    }
    case ClaimKind::DimensionSum: {
      auto a = algebra();
      Integer total = 0;
      std::istringstream in(c.weight);
      std::string term;
      while (std::getline(in, term, ';')) {
        auto colon = term.find(':');
        total += Integer(term.substr(0, colon)) * a->dim(Weight::parse(term.substr(colon + 1)));
      }
      return total.get_str();
    }
  }
  throw InvariantError("unknown claim kind");
}

}  // namespace

const std::vector<Claim>& claim_inventory() {
  static const std::vector<Claim> claims = build_inventory();
  return claims;
}

bool Report::all_pass() const {
  return std::ranges::all_of(results, [](const ClaimResult& r) { return r.pass; });
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::ranges::count_if(results, [](const ClaimResult& r) { return r.pass; }));
}

Environment Environment::standard() {
  return {[](LieType t) { return Algebra::standard(t)->cartan(); }, [] { return builtin_tower(); }};
}

Environment faulty(Fault fault) {
  Environment env = Environment::standard();
  switch (fault) {
    case Fault::PerturbedF4Form:
      env.cartan = [](LieType t) {
        CartanData cd = Algebra::standard(t)->cartan();
        if (t != LieType(Series::F, 4)) return cd;
        auto form = cd.form_matrix();
        form[0][0] += 1;
        return cd.with_form(std::move(form));
      };
      break;
    case Fault::ZeroD4Projection:
      env.tower = [] {
        auto tower = builtin_tower();
        for (auto& e : tower) {
          if (e.sub == LieType(Series::D, 4)) {
            for (auto& row : e.projection) std::ranges::fill(row, 0);
          }
        }
        return tower;
      };
      break;
  }
  return env;
}

ClaimResult evaluate(const Claim& claim, const Environment& env) {
  ClaimResult r{claim.id, claim.source, claim.expected, "", false, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.computed = compute(claim, env);
    r.pass = r.computed == claim.expected;
  } catch (const std::exception& e) {
    r.computed = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Report verify_paper(const Environment& env) {
  Report report;
  for (const auto& claim : claim_inventory()) report.results.push_back(evaluate(claim, env));
  return report;
}

std::string format_rep_sum(const RepSum& sum) {
  std::string out = "{";
  bool first = true;
  for (const auto& [w, m] : sum) {
    if (!first) out += ",";
    first = false;
    out += w.str() + ":" + m.get_str();
  }
  return out + "}";
}

}  // namespace liealg::verify
