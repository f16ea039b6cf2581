#pragma once

#include <functional>
#include <string>
#include <vector>

#include "liealg/branching.hpp"
#include "liealg/cartan.hpp"

namespace liealg::verify {

enum class ClaimKind {
  MinimalIndex,     // type -> "index weight"
  ThetaNorm,        // type -> (theta, theta)
  Alcove,           // type, level -> list of weights
  BlocksDim,        // type, level, genus, points (all labelled 0) -> dim
  DynkinIndex,      // type, weight -> index
  EmbeddingIndex,   // ambient, sub (one tower link) -> index
  Branching,        // ambient, sub, weight -> restricted module
  BranchingIndex,   // ambient, sub, weight -> index of the restriction
  BranchingDim,     // ambient, sub, weight -> dimension of the restriction
  DimensionSum,     // type, "m:weight;..." -> total dimension
};

enum class Basis {
  Stated,   // value printed in the source table or text
  Derived,  // value forced by arithmetic on stated values
};

struct Claim {
  std::string id = {};
  std::string source = {};
  ClaimKind kind = ClaimKind::MinimalIndex;
  std::string type = {};
  std::string sub = {};
  std::string weight = {};
  int level = 0;
  int genus = 0;
  int points = 0;
  std::string expected = {};
  Basis basis = Basis::Stated;
};

/// The complete claim inventory, in report order.
const std::vector<Claim>& claim_inventory();

struct ClaimResult {
  std::string id = {};
  std::string source = {};
  std::string expected = {};
  std::string computed;
  bool pass = false;
  double seconds = 0;
};

struct Report {
  std::vector<ClaimResult> results;
  bool all_pass() const;
  std::size_t passed() const;
};

/// Where the harness gets its data from. The standard environment uses the
/// library as built; fixtures swap in damaged data to check that failures are
/// reported rather than thrown.
struct Environment {
  std::function<CartanData(LieType)> cartan;
  std::function<std::vector<Embedding>()> tower;

  static Environment standard();
};

enum class Fault {
  PerturbedF4Form,     // (varpi_1, varpi_1) of F4 shifted by 1
  ZeroD4Projection,    // D4<F4 link replaced by the zero matrix
};

Environment faulty(Fault fault);

/// Evaluates one claim. Exceptions are turned into a failed result whose
/// computed value carries the message.
ClaimResult evaluate(const Claim& claim, const Environment& env);

Report verify_paper(const Environment& env = Environment::standard());

/// Canonical text of a RepSum: "{[0,0,0,0]:14,[0,0,0,1]:7,[1,0,0,0]:1}".
std::string format_rep_sum(const RepSum& sum);

}  // namespace liealg::verify
