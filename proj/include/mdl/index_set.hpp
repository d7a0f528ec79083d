#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace mdl::liealg {

// A tuple (n_1,...,n_r) of odd integers >= 3; element of S_{N,r} with
// N = sum of the parts.
struct IndexTuple {
  std::vector<int> parts;

  int weight() const;
  int depth() const { return static_cast<int>(parts.size()); }
  bool admissible() const;  // every part odd and >= 3
  std::string str() const;  // "n1,n2,...,nr"

  auto operator<=>(const IndexTuple&) const = default;
};

IndexTuple parse_index_tuple(const std::string& s);

// S_{N,r} in canonical order: lexicographic ascending on the parts. Rows and
// columns of every matrix follow this order.
struct IndexSet {
  int weight = 0;
  int depth = 0;
  std::vector<IndexTuple> tuples;

  std::size_t size() const { return tuples.size(); }
  std::optional<std::size_t> position(const IndexTuple& t) const;
};

// All tuples of `depth` odd integers >= 3 summing to `weight`. Empty when
// weight < 3*depth or weight and depth have different parity.
IndexSet enumerate_index_set(int weight, int depth);

}  // namespace mdl::liealg
