#include <thread>

#include "doctest.h"
#include "liealg/fusion.hpp"
#include "liealg/highest_weight.hpp"
#include "oracles.hpp"

using namespace liealg;

namespace {

std::shared_ptr<const Algebra> alg(const char* name) { return Algebra::standard(LieType::parse(name)); }

}  // namespace

TEST_SUITE_BEGIN("highest_weight");

TEST_CASE("Weyl dimension") {
  for (auto t : oracle::all_types()) CHECK(Algebra::standard(t)->dim(Weight::zero(t.rank)) == 1);
  for (int m = 0; m < 20; ++m) CHECK(alg("A1")->dim(Weight{m}) == m + 1);
  CHECK(alg("E8")->dim(Weight::fundamental(8, 7)) == 248);
  CHECK(alg("F4")->dim(Weight::fundamental(4, 3)) == 26);
  CHECK(alg("F4")->dim(Weight::fundamental(4, 0)) == 52);
  CHECK(alg("E6")->dim(Weight::fundamental(6, 5)) == 27);
  CHECK(alg("E7")->dim(Weight::fundamental(7, 6)) == 56);
  CHECK(alg("G2")->dim(Weight::fundamental(2, 0)) == 7);
  CHECK_THROWS_AS(alg("A2")->dim(Weight{1, -1}), PreconditionError);
  CHECK_THROWS_AS(alg("A2")->dim(Weight{1}), PreconditionError);
}

TEST_CASE("dimension needs arbitrary precision") {
  // (rho + rho) on E8 is far beyond 64 bits; check it against the product of
  // the same quantities taken with rationals root by root.
  auto e8 = alg("E8");
  Weight big(std::vector<int>(8, 1000));
  Integer d = e8->dim(big);
  CHECK(d > Integer("18446744073709551616"));
  Rational product = 1;
  const auto& cd = e8->cartan();
  for (const auto& root : cd.positive_roots()) {
    product *= inner(cd, big + cd.weyl_vector(), root.weight) / inner(cd, cd.weyl_vector(), root.weight);
  }
  CHECK(Rational(d) == product);
}

TEST_CASE("weight systems") {
  auto zero = alg("B3")->weight_system(Weight::zero(3));
  CHECK(zero->size() == 1);
  CHECK(zero->at(Weight::zero(3)) == 1);

  auto a1 = alg("A1")->weight_system(Weight{2});
  CHECK(*a1 == WeightSystem{{Weight{-2}, 1}, {Weight{0}, 1}, {Weight{2}, 1}});

  auto e8 = alg("E8");
  auto adjoint = e8->weight_system(Weight::fundamental(8, 7));
  CHECK(adjoint->size() == 241);
  CHECK(adjoint->at(Weight::zero(8)) == 8);
  std::set<Weight> roots;
  for (const auto& root : e8->cartan().positive_roots()) {
    roots.insert(root.weight);
    roots.insert(-root.weight);
  }
  for (const auto& [w, m] : *adjoint) {
    if (w.is_zero()) continue;
    CHECK(m == 1);
    CHECK(roots.contains(w));
  }
}

TEST_CASE("weight systems are Weyl invariant and start at multiplicity one") {
  const std::vector<std::pair<const char*, Weight>> cases{
      {"A2", Weight{2, 1}}, {"B2", Weight{1, 1}}, {"G2", Weight{1, 1}}, {"C3", Weight{0, 1, 1}}, {"F4", Weight{0, 0, 1, 0}}};
  for (const auto& [name, lambda] : cases) {
    CAPTURE(name);
    auto a = alg(name);
    auto ws = a->weight_system(lambda);
    CHECK(ws->at(lambda) == 1);
    Integer total = 0;
    for (const auto& [w, m] : *ws) {
      total += m;
      for (int i = 0; i < a->rank(); ++i) CHECK(ws->at(reflect(a->cartan(), w, i)) == m);
    }
    CHECK(total == a->dim(lambda));
  }
}

TEST_CASE("sum of multiplicities equals the Weyl dimension for fundamentals up to 10000") {
  int checked = 0;
  for (auto t : oracle::all_types()) {
    auto a = Algebra::standard(t);
    for (int i = 0; i < t.rank; ++i) {
      auto w = Weight::fundamental(t.rank, i);
      const Integer d = a->dim(w);
      if (d > 10000) continue;
      CAPTURE(t.name());
      CAPTURE(i);
      Integer total = 0;
      for (const auto& [mu, m] : *a->weight_system(w)) total += m;
      CHECK(total == d);
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("Dynkin index") {
  for (auto t : oracle::all_types()) CHECK(Algebra::standard(t)->dynkin_index(Weight::zero(t.rank)) == 0);
  CHECK(alg("E8")->dynkin_index(Weight::fundamental(8, 7)) == 60);
  for (int r = 1; r <= 6; ++r) CHECK(Algebra::standard(LieType(Series::A, r))->dynkin_index(Weight::fundamental(r, 0)) == 1);
  CHECK(alg("F4")->dynkin_index(Weight::fundamental(4, 3)) == 6);
  CHECK(alg("E6")->dynkin_index(Weight::fundamental(6, 5)) == 6);
  CHECK(alg("E7")->dynkin_index(Weight::fundamental(7, 6)) == 12);
  CHECK(alg("G2")->dynkin_index(Weight::fundamental(2, 0)) == 2);
  CHECK(alg("B3")->dynkin_index(Weight::fundamental(3, 0)) == 2);
}

TEST_CASE("adjoint index is twice the dual Coxeter number") {
  for (auto t : oracle::all_types()) {
    CAPTURE(t.name());
    auto a = Algebra::standard(t);
    CHECK(a->dynkin_index(a->cartan().highest_root()) == 2 * a->cartan().dual_coxeter());
  }
}

TEST_CASE("index is integral and dual invariant on small modules") {
  for (auto t : oracle::all_types()) {
    auto a = Algebra::standard(t);
    const int r = t.rank;
    for (int i = 0; i < r; ++i) {
      for (int j = i; j < r; ++j) {
        Weight w(r);
        w[i] += 1;
        w[j] += 1;
        for (const Weight& lambda : {Weight::fundamental(r, i), w}) {
          if (a->dim(lambda) > 10000) continue;
          CAPTURE(t.name());
          CAPTURE(lambda);
          Integer d = a->dynkin_index(lambda);  // throws if not integral
          CHECK(d > 0);
          auto dual = dual_weight(a->cartan(), lambda);
          CHECK(a->dynkin_index(dual) == d);
          CHECK(a->dim(dual) == a->dim(lambda));
        }
      }
    }
  }
}

TEST_CASE("index of a sum") {
  CHECK(alg("E8")->index_of_sum({}) == 0);
  auto f4 = alg("F4");
  RepSum s{{Weight::zero(4), 14}, {Weight::fundamental(4, 0), 1}, {Weight::fundamental(4, 3), 7}};
  CHECK(f4->dynkin_index(Weight::fundamental(4, 0)) == 18);
  CHECK(f4->index_of_sum(s) == 60);
  CHECK(f4->dim_of_sum(s) == 248);

  auto d4 = alg("D4");
  RepSum t{{Weight::fundamental(4, 0), 1}, {Weight::fundamental(4, 2), 1}, {Weight::fundamental(4, 3), 1}, {Weight::zero(4), 2}};
  CHECK(d4->index_of_sum(t) == 6);
}

TEST_CASE("minimal index search") {
  auto check = [](const char* name, int index, int node) {
    CAPTURE(name);
    auto a = alg(name);
    auto result = a->minimal_index();
    CHECK(result.index == index);
    CHECK(result.weight == Weight::fundamental(a->rank(), node));
  };
  check("A1", 1, 0);
  check("A4", 1, 0);
  check("B3", 2, 0);
  check("B4", 2, 0);
  check("C2", 1, 0);
  check("C3", 1, 0);
  check("D4", 2, 0);
  check("D5", 2, 0);
  check("E6", 6, 5);
  check("E7", 12, 6);
  check("E8", 60, 7);
  check("F4", 6, 3);
  check("G2", 2, 0);
}

TEST_CASE("tensor products") {
  auto a1 = alg("A1");
  CHECK(tensor_decompose(*a1, Weight{1}, Weight{1}) == RepSum{{Weight{0}, 1}, {Weight{2}, 1}});
  auto b3 = alg("B3");
  CHECK(tensor_decompose(*b3, Weight{0, 1, 1}, Weight::zero(3)) == RepSum{{Weight{0, 1, 1}, 1}});

  auto a2 = alg("A2");
  auto expected = oracle::tensor_by_characters(*a2, Weight{1, 0}, Weight{0, 1});
  CHECK(expected == std::map<Weight, Integer>{{Weight{0, 0}, 1}, {Weight{1, 1}, 1}});
  CHECK(tensor_decompose(*a2, Weight{1, 0}, Weight{0, 1}) == expected);
}

TEST_CASE("Racah-Speiser agrees with character multiplication on rank <= 2") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    auto a = alg(name);
    const int r = a->rank();
    std::vector<Weight> small;
    for (int x = 0; x <= 2; ++x) {
      for (int y = 0; y <= (r == 2 ? 2 : 0); ++y) {
        Weight w(r);
        w[0] = x;
        if (r == 2) w[1] = y;
        if (a->dim(w) <= 100) small.push_back(w);
      }
    }
    for (const auto& l : small) {
      for (const auto& m : small) {
        CAPTURE(name);
        CAPTURE(l);
        CAPTURE(m);
        CHECK(tensor_decompose(*a, l, m) == oracle::tensor_by_characters(*a, l, m));
      }
    }
  }
}

TEST_CASE("index of a tensor product") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    auto a = alg(name);
    const int r = a->rank();
    std::vector<Weight> ws{Weight::zero(r)};
    for (int i = 0; i < r; ++i) ws.push_back(Weight::fundamental(r, i));
    ws.push_back(2 * Weight::fundamental(r, 0));
    for (const auto& l : ws) {
      for (const auto& m : ws) {
        CAPTURE(name);
        CAPTURE(l);
        CAPTURE(m);
        auto prod = tensor_decompose(*a, l, m);
        CHECK(a->dim_of_sum(prod) == a->dim(l) * a->dim(m));
        CHECK(a->index_of_sum(prod) == a->dim(m) * a->dynkin_index(l) + a->dim(l) * a->dynkin_index(m));
      }
    }
  }
}

TEST_CASE("caches are safe under concurrent first use") {
  auto fresh = std::make_shared<Algebra>(build_cartan(LieType::parse("E7")));
  const Weight w = Weight::fundamental(7, 5);
  std::vector<std::shared_ptr<const WeightSystem>> seen(4);
  std::vector<std::thread> threads;
  for (int k = 0; k < 4; ++k) threads.emplace_back([&, k] { seen[k] = fresh->weight_system(w); });
  for (auto& t : threads) t.join();
  for (int k = 1; k < 4; ++k) CHECK(*seen[k] == *seen[0]);
  CHECK(fresh->weight_system(w) == fresh->weight_system(w));
}

TEST_SUITE_END();
