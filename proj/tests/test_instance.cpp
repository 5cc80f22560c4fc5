#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "runpoly/instance.hpp"

using namespace runpoly;

namespace {

std::vector<int> yz_bits_to_vec(std::uint32_t m, int n) {
  std::vector<int> v(n);
  for (int t = 0; t < n; ++t) v[t] = (m >> t) & 1;
  return v;
}

int count_on_runs(std::uint32_t y, int n) {
  int runs = 0;
  for (int t = 0; t < n; ++t) {
    bool on = (y >> t) & 1;
    bool prev = (y >> mod_index(t - 1, n)) & 1;
    if (on && !prev) ++runs;
  }
  return runs;
}

std::uint32_t rotate_bits(std::uint32_t m, int by, int n) {
  std::uint32_t mask = (1u << n) - 1;
  by = mod_index(by, n);
  return ((m << by) | (m >> (n - by))) & mask;
}

// brute-force covering set {k : t in [k, k+eps_k-1]}, the oracle for s_index
std::vector<int> covering_set(const std::vector<int>& eps, int t) {
  const int n = static_cast<int>(eps.size());
  std::vector<int> ks;
  for (int k = 0; k < n; ++k)
    if (mod_index(t - k, n) < eps[k]) ks.push_back(k);
  return ks;
}

}  // namespace

TEST_CASE("cyclic interval members") {
  CHECK(cyclic_interval_members(1, 3, 6) == std::vector<int>{1, 2, 3});
  CHECK(cyclic_interval_members(4, 1, 6) == std::vector<int>{4, 5, 0, 1});
  CHECK(cyclic_interval_members(0, 0, 6) == std::vector<int>{0});
  CHECK_THROWS_AS(cyclic_interval_members(0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_interval_members(3, 1, 3), std::invalid_argument);

  CyclicInterval iv{4, 1, 6};
  CHECK(iv.contains(5));
  CHECK(iv.contains(0));
  CHECK(!iv.contains(2));
  CHECK(iv.length() == 4);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(Instance::constant(1, 1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Instance::constant(4, 0, 2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Instance::constant(4, 2, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Instance::constant(4, 1, 4, 1, 2), std::invalid_argument);
  CHECK_NOTHROW(Instance::constant(4, 1, 3, 1, 3));
}

TEST_CASE("derive_startups") {
  CHECK(derive_startups({1, 1, 0, 1, 0, 0}) ==
        std::vector<int>{1, 0, 0, 1, 0, 0});
  CHECK(derive_startups({0, 0, 0, 0}) == std::vector<int>{0, 0, 0, 0});
  CHECK(derive_startups({1, 0, 1, 0}) == std::vector<int>{1, 0, 1, 0});
  // bitmask layer agrees with the vector layer on every 6-bit pattern
  for (std::uint32_t y = 0; y < 64; ++y) {
    auto zy = derive_startups(yz_bits_to_vec(y, 6));
    CHECK(yz_bits_to_vec(derive_startups_bits(y, 6), 6) == zy);
  }
}

TEST_CASE("feasibility oracle") {
  Instance inst = Instance::constant(6, 1, 2, 1, 2);
  CHECK(is_feasible(inst, {1, 1, 0, 1, 0, 0}));
  CHECK(!is_feasible(inst, {1, 1, 1, 1, 1, 1}));
  CHECK(!is_feasible(inst, {1, 1, 1, 0, 0, 0}));  // on-run of length 3 > beta
  CHECK(!is_feasible(inst, {0, 0, 0, 0, 0, 0}));
}

TEST_CASE("enumerate_Z") {
  CHECK(enumerate_Z(Instance::constant(4, 1, 2, 1, 2)).size() == 6);
  CHECK(enumerate_Z(Instance::constant(3, 2, 2, 2, 2)).empty());

  auto Z = enumerate_Z(Instance::constant(6, 1, 2, 1, 2));
  YZPoint fig;
  for (int v : {1, 1, 0, 1, 0, 0}) fig.y.emplace_back(v);
  for (int v : {1, 0, 0, 1, 0, 0}) fig.z.emplace_back(v);
  CHECK(std::find(Z.begin(), Z.end(), fig) != Z.end());

  CHECK_THROWS_AS(enumerate_Z(Instance::constant(12, 1, 2, 1, 2), 8),
                  resource_limit_error);
}

TEST_CASE("enumerated points: startups derived, run count equals z-sum") {
  for (auto inst : {Instance::constant(6, 1, 2, 1, 2),
                    Instance::constant(7, 1, 3, 2, 3),
                    Instance::constant(8, 2, 3, 1, 2)}) {
    for (auto [y, z] : enumerate_Z_bits(inst)) {
      CHECK(z == derive_startups_bits(y, inst.n));
      CHECK(count_on_runs(y, inst.n) == __builtin_popcount(z));
    }
  }
}

TEST_CASE("startup_count_range") {
  auto as_set = [](std::initializer_list<int> v) { return std::set<int>(v); };
  CHECK(startup_count_range(Instance::constant(6, 1, 2, 1, 2)) == as_set({2, 3}));
  CHECK(startup_count_range(Instance::constant(3, 2, 2, 2, 2)).empty());
  CHECK(startup_count_range(Instance::constant(6, 1, 3, 1, 3)) ==
        as_set({1, 2, 3}));
  Instance tv = Instance::constant(6, 1, 2, 1, 2);
  tv.beta[3] = 3;
  CHECK_THROWS_AS(startup_count_range(tv), std::invalid_argument);
}

TEST_CASE("startup counts over Z match the constant-bound range") {
  for (int n = 3; n <= 8; ++n)
    for (int a = 1; a <= 2; ++a)
      for (int b = a; b <= 3 && b <= n - 1; ++b)
        for (int g = 1; g <= 2; ++g)
          for (int d = g; d <= 3 && d <= n - 1; ++d) {
            if (a > n - 1 || g > n - 1) continue;
            Instance inst = Instance::constant(n, a, b, g, d);
            std::set<int> seen;
            for (auto [y, z] : enumerate_Z_bits(inst))
              seen.insert(__builtin_popcount(z));
            CHECK(seen == startup_count_range(inst));
          }
}

TEST_CASE("construct_witness") {
  Instance inst = Instance::constant(6, 1, 2, 1, 2);
  YZPoint w3 = construct_witness(inst, 3);
  std::vector<Rat> alt{1, 0, 1, 0, 1, 0};
  CHECK(w3.y == alt);
  YZPoint w2 = construct_witness(inst, 2);
  Rat zsum = 0;
  for (const Rat& v : w2.z) zsum += v;
  CHECK(zsum == 2);
  CHECK_THROWS_AS(construct_witness(inst, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_witness(inst, 4), std::invalid_argument);

  YZPoint w1 = construct_witness(Instance::constant(4, 2, 2, 2, 2), 1);
  std::vector<Rat> expect{1, 1, 0, 0};
  CHECK(w1.y == expect);

  // every achievable count admits a feasible witness with that many startups
  for (int n = 3; n <= 9; ++n)
    for (int a = 1; a <= 3; ++a)
      for (int b = a; b <= 3; ++b)
        for (int g = 1; g <= 3; ++g)
          for (int d = g; d <= 3; ++d) {
            if (b > n - 1 || d > n - 1) continue;
            Instance in2 = Instance::constant(n, a, b, g, d);
            for (int k : startup_count_range(in2)) {
              YZPoint w = construct_witness(in2, k);
              std::vector<int> yv;
              for (const Rat& r : w.y) yv.push_back(r == 1 ? 1 : 0);
              CHECK(is_feasible(in2, yv));
              int cnt = 0;
              for (const Rat& r : w.z) cnt += (r == 1);
              CHECK(cnt == k);
            }
          }
}

TEST_CASE("weak monotonicity") {
  CHECK(check_weak_monotonicity({2, 2, 2, 2}));
  CHECK(check_weak_monotonicity({1, 2, 1, 2, 1, 2}));
  CHECK(!check_weak_monotonicity({3, 1, 2, 2, 2, 2}));
  CHECK(!check_weak_monotonicity({1, 2, 3, 4, 5, 1}));
  CHECK(check_weak_monotonicity({5, 4, 3, 2, 2, 4}));  // wrap pair (n-1, 0) holds
}

TEST_CASE("s_index") {
  CHECK(s_index(std::vector<int>(6, 2), 0) == 5);
  CHECK(s_index({1, 2, 1, 2, 1, 2}, 3) == 3);
  for (int t = 0; t < 5; ++t) CHECK(s_index(std::vector<int>(5, 1), t) == t);
  CHECK_THROWS_AS(s_index({3, 1, 2, 2, 2, 2}, 0), std::invalid_argument);

  // constant eps: s = (t - eps + 1) mod n
  for (int n = 3; n <= 8; ++n)
    for (int e = 1; e <= n - 1; ++e)
      for (int t = 0; t < n; ++t)
        CHECK(s_index(std::vector<int>(n, e), t) == mod_index(t - e + 1, n));
}

TEST_CASE("s_index covering set is the cyclic interval [s, t]") {
  std::mt19937_64 rng(20260808);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 7);
    std::vector<int> eps;
    do {
      eps.clear();
      for (int t = 0; t < n; ++t) {
        int lo = eps.empty() ? 1 : std::max(1, eps.back() - 1);
        eps.push_back(lo + static_cast<int>(rng() % (n - lo)));
      }
    } while (!check_weak_monotonicity(eps));
    for (int t = 0; t < n; ++t) {
      int s = s_index(eps, t);
      CHECK(covering_set(eps, t) == [&] {
        auto v = cyclic_interval_members(s, t, n);
        std::sort(v.begin(), v.end());
        return v;
      }());
    }
  }
}

TEST_CASE("rotation invariance of Z under constant bounds") {
  for (auto inst : {Instance::constant(6, 1, 2, 1, 2),
                    Instance::constant(7, 2, 3, 1, 3)}) {
    auto Z = enumerate_Z_bits(inst);
    std::set<std::pair<std::uint32_t, std::uint32_t>> zs(Z.begin(), Z.end());
    for (auto [y, z] : Z)
      for (int r = 1; r < inst.n; ++r) {
        CHECK(is_feasible_bits(inst, rotate_bits(y, r, inst.n)));
        CHECK(zs.count({rotate_bits(y, r, inst.n), rotate_bits(z, r, inst.n)}));
      }
  }
}

TEST_CASE("instance json round trip") {
  Instance c = Instance::constant(6, 1, 2, 1, 2);
  CHECK(Instance::from_json(c.to_json()).alpha == c.alpha);
  Instance tv = Instance::constant(6, 1, 2, 1, 2);
  tv.alpha[2] = 2;
  tv.beta[2] = 3;
  Instance back = Instance::from_json(tv.to_json());
  CHECK(back.beta == tv.beta);
  CHECK(back.describe().find("alpha=") != std::string::npos);
}
