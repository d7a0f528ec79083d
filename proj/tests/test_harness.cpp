#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mdl/cache.hpp"
#include "mdl/harness.hpp"
#include "mdl/json_io.hpp"
#include "mdl/series.hpp"
#include "mdl/tasaka.hpp"

using namespace mdl;
using harness::CacheKey;
using harness::CacheStore;
using harness::CheckItem;
using harness::RankMode;
using harness::Series2;

namespace {

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    path = std::filesystem::temp_directory_path() /
           ("mdl-test-" + tag + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("o and s series coefficients") {
  CHECK(harness::o_coeff(3) == 1);
  CHECK(harness::o_coeff(4) == 0);
  CHECK(harness::o_coeff(2) == 0);
  CHECK(harness::s_coeff(12) == 1);
  CHECK(harness::s_coeff(14) == 0);
  CHECK(harness::s_coeff(24) == 2);   // 12 = 4*3 = 6*2
  CHECK(harness::s_coeff(36) == 3);   // 24 = 4*6 = 4*3+6*2 = 6*4
  CHECK(harness::s_coeff(13) == 0);
}

TEST_CASE("hilbert_target spot coefficients") {
  const Series2 h = harness::hilbert_target(16, 3);
  CHECK(h.get(3, 1) == 1);
  CHECK(h.get(12, 2) == 3);   // [x^12](O^2 - S) = 4 - 1
  CHECK(h.get(15, 3) == 8);   // [x^15](O^3 - 2 O S) = 10 - 2
  CHECK(h.get(0, 0) == 1);
  CHECK(h.get(4, 1) == 0);
  CHECK_THROWS_AS(h.get(17, 1), std::out_of_range);
}

TEST_CASE("hilbert_target satisfies its defining relation") {
  const int xm = 20, ym = 4;
  Series2 u(xm, ym);
  u.set(0, 0, 1);
  for (int m = 3; m <= xm; m += 2) u.set(m, 1, -1);
  for (int m = 12; m <= xm; m += 2)
    if (int c = harness::s_coeff(m)) u.set(m, 2, c);

  Series2 one(xm, ym);
  one.set(0, 0, 1);
  const Series2 h = harness::hilbert_target(xm, ym);
  CHECK(u.mul(h) == one);

  // nonnegative integer coefficients within the tested range
  for (const auto& [ij, c] : h.coeffs) {
    CHECK(denominator(c) == 1);
    CHECK(numerator(c) >= 0);
  }
}

TEST_CASE("Series2 arithmetic stays within truncation") {
  Series2 a(4, 2);
  a.set(0, 0, 1);
  a.set(4, 2, 7);
  Series2 b(3, 1);
  b.set(1, 1, 2);
  const Series2 sum = a.add(b);
  CHECK(sum.x_max == 3);
  CHECK(sum.y_max == 1);
  CHECK(sum.get(1, 1) == 2);
  const Series2 prod = a.mul(b);
  CHECK(prod.x_max == 3);
  CHECK(prod.get(1, 1) == 2);
  CHECK_THROWS_AS(Series2(2, 2).reciprocal(), std::invalid_argument);
}

TEST_CASE("rank table cells and boundary conventions") {
  CacheStore cache;  // disabled
  const auto table = harness::rank_table(16, 3, RankMode::exact, cache);
  CHECK(table.rank_at(6, 2) == 1);
  CHECK(table.rank_at(12, 2) == 3);
  CHECK(table.rank_at(15, 3) == 8);
  CHECK(table.rank_at(3, 1) == 1);
  CHECK(table.rank_at(0, 0) == 1);
  CHECK(table.rank_at(4, 0) == 0);
  CHECK(table.rank_at(11, 2) == 0);  // parity: S empty
  CHECK(table.rank_at(4, 2) == 0);   // too small: S empty
  CHECK_THROWS_AS(table.rank_at(18, 2), std::out_of_range);
  CHECK(table.size_at(12, 2) == 4);
  CHECK(table.entries.at({12, 2}).cert.method ==
        exactlin::RankCertificate::Method::exact);
}

TEST_CASE("modular-mode table equals the exact table") {
  CacheStore cache;
  const auto exact = harness::rank_table(15, 3, RankMode::exact, cache);
  const auto modular = harness::rank_table(15, 3, RankMode::modular, cache, 9);
  REQUIRE(exact.entries.size() == modular.entries.size());
  for (const auto& [cell, entry] : exact.entries) {
    const auto& other = modular.entries.at(cell);
    CHECK(entry.rank == other.rank);
    CHECK(other.cert.method == exactlin::RankCertificate::Method::modular);
    CHECK(other.cert.primes.size() == 3);
  }
}

TEST_CASE("recurrence checks") {
  CacheStore cache;
  const auto table = harness::rank_table(15, 3, RankMode::exact, cache);
  // 3 - (1+1+1+1) + 1*1 = 0
  CHECK(harness::recurrence_value(12, 2, table) == 0);
  CHECK(harness::recurrence_value(15, 3, table) == 0);
  CHECK(harness::recurrence_value(7, 3, table) == 0);  // everything empty
  CHECK(harness::recurrence_check(12, 2, table).status ==
        CheckItem::Status::proven_pass);
  CHECK(harness::recurrence_check(15, 3, table).status ==
        CheckItem::Status::conjectural_pass);
  CHECK_THROWS_AS(harness::recurrence_value(12, 1, table), std::invalid_argument);

  const auto thin = harness::rank_table(15, 1, RankMode::exact, cache);
  CHECK_THROWS_WITH_AS(harness::recurrence_value(12, 2, thin),
                       doctest::Contains("N=12"), std::out_of_range);
}

TEST_CASE("decomposition checks") {
  CacheStore cache;
  const auto items18 = harness::decomposition_check(18, 3, cache);
  REQUIRE(items18.size() == 3);
  CHECK(items18[0].status == CheckItem::Status::proven_pass);
  CHECK(items18[1].status == CheckItem::Status::proven_pass);
  CHECK(items18[0].proven);
  CHECK(items18[1].proven);
  CHECK_FALSE(items18[2].proven);

  const auto dims20 = harness::decomposition_dims(20, 4, cache);
  CHECK(dims20.ker_c == dims20.ker_partial + dims20.intersection);
  CHECK(dims20.ker_partial == dims20.sum_lower_kernels);

  CHECK_THROWS_AS(harness::decomposition_dims(18, 2, cache),
                  std::invalid_argument);
}

TEST_CASE("eta identity and isomorphism report items") {
  CacheStore cache;
  const auto eta17 = harness::eta_identity_check(17, 3, cache);
  CHECK(eta17.status == CheckItem::Status::proven_pass);

  const auto tasaka15 = harness::tasaka_check(15, 3, cache);
  REQUIRE(tasaka15.size() == 3);
  CHECK(tasaka15[0].status == CheckItem::Status::proven_pass);   // inclusion
  CHECK(tasaka15[1].status == CheckItem::Status::proven_pass);   // injectivity, r=3
  CHECK(tasaka15[1].proven);
  CHECK(tasaka15[2].status == CheckItem::Status::conjectural_pass);
  CHECK_FALSE(tasaka15[2].proven);

  const auto tasaka16 = harness::tasaka_check(16, 4, cache);
  CHECK_FALSE(tasaka16[1].proven);  // injectivity is open beyond depth 3
}

TEST_CASE("crosscheck cell") {
  CacheStore cache;
  const auto item = harness::crosscheck_cell(15, 3, cache);
  CHECK(item.status == CheckItem::Status::proven_pass);
  CHECK(item.proven);
}

TEST_CASE("cache round trip, miss, and corruption") {
  TempDir tmp("cache");
  CacheStore cache(tmp.path);

  // a whole matrix in interchange form survives byte-identically
  const CacheKey mkey{"C", 15, 3};
  const auto c153 = tasaka_to_json(tasaka::build_C(15, 3));
  cache.put(mkey, c153);
  const auto mback = cache.get(mkey);
  REQUIRE(mback.has_value());
  CHECK(mback->dump() == c153.dump());
  CHECK(tasaka_from_json(*mback).mat == tasaka::build_C(15, 3).mat);

  const CacheKey key{"rank-C-exact", 15, 3};
  CHECK_FALSE(cache.get(key).has_value());
  CHECK(cache.misses() == 1);

  const nlohmann::json payload{{"size", 10}, {"rank", 8}};
  cache.put(key, payload);
  const auto back = cache.get(key);
  REQUIRE(back.has_value());
  CHECK(*back == payload);
  CHECK(back->dump() == payload.dump());

  // tamper with the stored payload: reads must fail loudly
  const auto path = tmp.path / harness::kCodeVersion / key.file_name();
  REQUIRE(std::filesystem::exists(path));
  {
    std::ifstream in(path);
    nlohmann::json entry;
    in >> entry;
    entry["payload"]["rank"] = 9;
    std::ofstream out(path);
    out << entry.dump();
  }
  CHECK_THROWS_WITH_AS(cache.get(key), doctest::Contains("corrupt"),
                       std::runtime_error);
}

TEST_CASE("warm cache performs zero matrix builds") {
  TempDir tmp("warm");
  CacheStore cache(tmp.path);
  harness::rank_table(18, 3, RankMode::exact, cache);
  CHECK(cache.computes() > 0);

  cache.reset_counters();
  const auto before = tasaka::matrix_build_count();
  const auto table = harness::rank_table(18, 3, RankMode::exact, cache);
  CHECK(cache.computes() == 0);
  CHECK(tasaka::matrix_build_count() == before);
  CHECK(table.rank_at(15, 3) == 8);
}

TEST_CASE("exactness report rows and the depth-2 theorems up to weight 30") {
  CacheStore cache;
  const auto table = harness::rank_table(30, 2, RankMode::exact, cache);
  for (int N = 6; N <= 30; N += 2)
    CHECK(harness::recurrence_value(N, 2, table) == 0);
  const auto report = harness::exactness_report(30, 2, table);
  CHECK_FALSE(report.has_hard_failure());
  for (const auto& item : report.checks)
    CHECK(item.status != CheckItem::Status::fail);
  // depth-1 and depth-2 rows are proven territory
  bool saw_row1 = false, saw_row2 = false;
  for (const auto& item : report.checks) {
    if (item.name == "series row r=1") {
      saw_row1 = true;
      CHECK(item.status == CheckItem::Status::proven_pass);
    }
    if (item.name == "series row r=2") {
      saw_row2 = true;
      CHECK(item.status == CheckItem::Status::proven_pass);
    }
  }
  CHECK(saw_row1);
  CHECK(saw_row2);
}

TEST_CASE("full report is deterministic across cold runs") {
  TempDir tmp1("cold1"), tmp2("cold2");
  CacheStore cache1(tmp1.path), cache2(tmp2.path);
  const auto r1 = harness::full_report(16, 3, RankMode::exact, cache1);
  const auto r2 = harness::full_report(16, 3, RankMode::exact, cache2);
  CHECK_FALSE(r1.has_hard_failure());
  CHECK(r1.to_json().dump() == r2.to_json().dump());

  // warm run over the same store: identical bytes, no recomputation
  cache1.reset_counters();
  const auto r3 = harness::full_report(16, 3, RankMode::exact, cache1);
  CHECK(r3.to_json().dump() == r1.to_json().dump());
  CHECK(cache1.computes() == 0);
}
