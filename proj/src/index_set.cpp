#include "mdl/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mdl::liealg {

int IndexTuple::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

bool IndexTuple::admissible() const {
  return std::all_of(parts.begin(), parts.end(),
                     [](int n) { return n >= 3 && n % 2 == 1; });
}

std::string IndexTuple::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  return out.str();
}

IndexTuple parse_index_tuple(const std::string& s) {
  IndexTuple t;
  std::istringstream in(s);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      std::size_t used = 0;
      int value = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      t.parts.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_index_tuple: bad component '" + piece +
                                  "' in '" + s + "'");
    }
  }
  if (t.parts.empty())
    throw std::invalid_argument("parse_index_tuple: empty tuple '" + s + "'");
  return t;
}

std::optional<std::size_t> IndexSet::position(const IndexTuple& t) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  if (it == tuples.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - tuples.begin());
}

namespace {

void emit(int remaining, int slots, IndexTuple& prefix, std::vector<IndexTuple>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  for (int n = 3; n <= remaining - 3 * (slots - 1); n += 2) {
    prefix.parts.push_back(n);
    emit(remaining - n, slots - 1, prefix, out);
    prefix.parts.pop_back();
  }
}

}  // namespace

IndexSet enumerate_index_set(int weight, int depth) {
  if (weight < 0 || depth < 1)
    throw std::invalid_argument("enumerate_index_set: need weight >= 0, depth >= 1");
  IndexSet set{weight, depth, {}};
  if (weight < 3 * depth || (weight - depth) % 2 != 0) return set;
  IndexTuple prefix;
  emit(weight, depth, prefix, set.tuples);
  return set;  // recursion emits in lexicographic ascending order
}

}  // namespace mdl::liealg
