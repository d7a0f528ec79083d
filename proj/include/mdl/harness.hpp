#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mdl/cache.hpp"
#include "mdl/matq.hpp"
#include "mdl/rational.hpp"
#include "mdl/series.hpp"

namespace mdl::harness {

enum class RankMode { exact, modular, automatic };
std::string mode_str(RankMode m);
RankMode mode_parse(const std::string& s);

// Above this row count the automatic mode certifies ranks modulo 3 primes
// instead of running the exact elimination.
inline constexpr std::size_t kExactRowLimit = 400;

struct RankEntry {
  std::size_t size = 0;  // |S_{N,r}|
  std::size_t rank = 0;  // rank of C_{N,r}
  exactlin::RankCertificate cert;
};

struct RankTable {
  int n_max = 0;
  int r_max = 0;
  std::map<std::pair<int, int>, RankEntry> entries;  // nonempty S_{N,r} only

  // rank C_{N,r} with the boundary conventions rank C_{N,1} = 1 for odd
  // N >= 3 and rank C_{0,0} = 1. Throws when (N, r) is outside the table.
  std::size_t rank_at(int N, int r) const;
  std::size_t size_at(int N, int r) const;  // |S_{N,r}|, 0 outside
};

// Rank of C_{N,r} for one cell, cached under ("rank-C-<method>", N, r).
RankEntry rank_cell(int N, int r, RankMode mode, const CacheStore& cache,
                    std::uint64_t seed);

RankTable rank_table(int n_max, int r_max, RankMode mode, const CacheStore& cache,
                     std::uint64_t seed = 0);

struct CheckItem {
  enum class Status { proven_pass, conjectural_pass, fail };

  std::string name;
  std::string anchor;  // which mathematical statement the check exercises
  Status status = Status::proven_pass;
  bool proven = false;  // proven claims make a FAIL fatal; open ones stay findings
  std::string details;
  nlohmann::json witness;  // populated on failure with what is needed to reproduce

  nlohmann::json to_json() const;
};
std::string status_str(CheckItem::Status s);

struct VerificationReport {
  int n_max = 0;
  int r_max = 0;
  std::string mode;
  std::vector<CheckItem> checks;

  bool has_hard_failure() const;
  std::size_t count(CheckItem::Status s) const;
  nlohmann::json to_json() const;
  void print(std::ostream& out) const;
};

// rank C_{N,r} - sum_m rank C_{N-m,r-1} + sum_m s_m rank C_{N-m,r-2} for
// r >= 2; zero is the expected value. Throws naming any missing table cell.
Integer recurrence_value(int N, int r, const RankTable& table);
CheckItem recurrence_check(int N, int r, const RankTable& table);

struct DecompositionDims {
  std::size_t size = 0;
  std::size_t ker_c = 0;            // dim Ker C_{N,r}
  std::size_t ker_partial = 0;      // dim Ker E^{(2)}...E^{(r-1)}
  std::size_t intersection = 0;     // dim Row(E^{(2)}...E^{(r-1)}) cap Ker E_{N,r}
  std::size_t sum_lower_kernels = 0;   // sum_m dim Ker C_{N-m,r-1}
  std::size_t sum_period_ranks = 0;    // sum_m dim P_m * rank C_{N-m,r-2}
};

DecompositionDims decomposition_dims(int N, int r, const CacheStore& cache);
std::vector<CheckItem> decomposition_check(int N, int r, const CacheStore& cache);

// dim of the restricted even period polynomial space, cached.
std::size_t period_dim(int N, const CacheStore& cache);

// eta-tilde + eta = 0 and both inclusions into Ker E_{N,r}, over a basis of
// pi(W_{N,r}); cached summary.
CheckItem eta_identity_check(int N, int r, const CacheStore& cache);

// verify_tasaka wrapped into report items (inclusion/injective/surjective).
std::vector<CheckItem> tasaka_check(int N, int r, const CacheStore& cache);

// Compares rank C_{N,r} with the series coefficient for each cell in range
// and summarizes which depths satisfy the exact-sequence criterion.
VerificationReport exactness_report(int n_max, int r_max, const RankTable& table);

// The coefficient matrix of the sigma chains equals C_{N,r}; cached summary.
CheckItem crosscheck_cell(int N, int r, const CacheStore& cache);

// Everything: period dims, series comparison, recurrence, decompositions,
// eta identities, isomorphism checks, chain/matrix crosscheck.
VerificationReport full_report(int n_max, int r_max, RankMode mode,
                               const CacheStore& cache, std::uint64_t seed = 0);

}  // namespace mdl::harness
