#include "fano/degree.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"

using fano::BigInt;
using fano::DegreeMethod;
using fano::DegreeOptions;
using fano::FanoProblem;

namespace {

struct TempFile {
  std::string path;
  TempFile() {
    path = (std::filesystem::temp_directory_path() /
            ("fano_cache_test_" + std::to_string(::getpid()) + ".jsonl"))
               .string();
    std::remove(path.c_str());
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("assemble_factors has the right size and arity") {
  FanoProblem p({3}, 18, 6);
  auto factors = fano::assemble_factors(p);
  CHECK(factors.size() == 105);  // 84 composition factors + 21 sign factors
  for (const auto& f : factors) CHECK(f.arity() == 7);
}

TEST_CASE("known degrees through the public entry point") {
  CHECK(fano::fano_degree(FanoProblem({3}, 3, 1)).value == 27);
  CHECK(fano::fano_degree(FanoProblem({5}, 4, 1)).value == 2875);
  CHECK(fano::fano_degree(FanoProblem({2, 2}, 4, 1)).value == 16);

  auto r = fano::fano_degree(FanoProblem({3}, 8, 3));
  CHECK(r.value == 321489);
  CHECK(r.method == DegreeMethod::naive);  // auto picks the oracle for r <= 3
  CHECK(r.peak_terms > 0);
  CHECK_FALSE(r.from_cache);

  auto quartic = fano::fano_degree(FanoProblem({4}, 7, 2));
  CHECK(quartic.value == 3297280);

  auto big = fano::fano_degree(FanoProblem({3}, 11, 4));
  CHECK(big.value == 1812646836);
  CHECK(big.method == DegreeMethod::kronecker);
  CHECK(big.kronecker_base == 13);
}

TEST_CASE("invalid problems are rejected") {
  CHECK_THROWS_AS(fano::fano_degree(FanoProblem({3}, 4, 1)), std::invalid_argument);
  CHECK_THROWS_AS(fano::fano_degree(FanoProblem({2}, 4, 2)), std::invalid_argument);
  CHECK_THROWS_AS(fano::fano_degree_mod(FanoProblem({3}, 4, 1), 7),
                  std::invalid_argument);
}

TEST_CASE("modular degree") {
  CHECK(fano::fano_degree_mod(FanoProblem({5}, 4, 1), 2).residue == 1);
  auto r = fano::fano_degree_mod(FanoProblem({3}, 11, 4), 7);
  CHECK(r.residue == 0);  // 1812646836 = 7 * 258949548
  CHECK(r.modulus == 7);
  CHECK(r.kronecker_base == 13);
}

TEST_CASE("modular result matches the exact one") {
  FanoProblem p({2, 2, 2}, 8, 2);
  BigInt exact = fano::fano_degree(p).value;
  for (std::uint64_t m : {2, 3, 4, 5, 7, 101}) {
    BigInt expected = exact % static_cast<unsigned long>(m);
    CHECK(fano::fano_degree_mod(p, m).residue == expected.get_ui());
  }
}

TEST_CASE("divisibility certificate") {
  CHECK(fano::divisibility_certificate(FanoProblem({3}, 3, 1)) == 9);
  CHECK(fano::check_divisibility(FanoProblem({3}, 3, 1), BigInt(27)));
  CHECK_FALSE(fano::check_divisibility(FanoProblem({3}, 3, 1), BigInt(26)));
  CHECK(fano::check_divisibility(FanoProblem({4}, 7, 2), BigInt(3297280)));
}

TEST_CASE("two-quadrics family degrees are powers of two") {
  for (int k = 1; k <= 4; ++k) {
    FanoProblem p({2, 2}, 2 * k + 2, k);
    CHECK(fano::fano_degree(p).value == BigInt(1) << (2 * k + 2));
  }
}

TEST_CASE("naive and kronecker agree when forced") {
  FanoProblem p({2, 3}, 14, 4);
  DegreeOptions naive;
  naive.method = DegreeOptions::Method::naive;
  DegreeOptions kron;
  kron.method = DegreeOptions::Method::kronecker;
  auto a = fano::fano_degree(p, naive);
  auto b = fano::fano_degree(p, kron);
  CHECK(a.value == b.value);
  CHECK(a.method == DegreeMethod::naive);
  CHECK(b.method == DegreeMethod::kronecker);
  CHECK(fano::check_divisibility(p, a.value));  // 2^5 * 3^5
  CHECK(a.value > 24);
}

TEST_CASE("long-running computations require the opt-in flag") {
  CHECK_THROWS_AS(fano::fano_degree(FanoProblem({3}, 18, 6)), std::invalid_argument);
  CHECK_THROWS_AS(fano::fano_degree_mod(FanoProblem({3}, 22, 7), 4),
                  std::invalid_argument);
  CHECK(fano::estimate_work(FanoProblem({3}, 18, 6), DegreeMethod::kronecker) >
        fano::kLongRunWork);
}

TEST_CASE("degree cache round trip") {
  TempFile cache;
  FanoProblem p({3}, 8, 3);
  DegreeOptions options;
  options.cache_path = cache.path;

  auto first = fano::fano_degree(p, options);
  CHECK_FALSE(first.from_cache);
  auto second = fano::fano_degree(p, options);
  CHECK(second.from_cache);
  CHECK(second.value == first.value);
  CHECK(second.method == first.method);

  DegreeOptions no_cache = options;
  no_cache.use_cache = false;
  CHECK_FALSE(fano::fano_degree(p, no_cache).from_cache);

  // a corrupted entry is rejected by the divisibility audit
  std::ofstream out(cache.path, std::ios::app);
  out << R"({"key":"d=3;n=3;r=1","N":"26","method":"naive","version":"x"})" << "\n";
  out.close();
  CHECK_THROWS_AS(fano::fano_degree(FanoProblem({3}, 3, 1), options), std::logic_error);
}

TEST_CASE("cache can seed values that are too long to recompute") {
  TempFile cache;
  fano::cache_append(cache.path,
                     fano::CacheEntry{"d=3;n=18;r=6", BigInt("38406501359372282063949"),
                                      "kronecker", 20, "test"});
  DegreeOptions options;
  options.cache_path = cache.path;
  auto r = fano::fano_degree(FanoProblem({3}, 18, 6), options);
  CHECK(r.from_cache);
  CHECK(r.value == BigInt("38406501359372282063949"));
  CHECK(r.kronecker_base == 20);
}
