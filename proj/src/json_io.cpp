#include "mdl/json_io.hpp"

#include <stdexcept>

#include "mdl/index_set.hpp"

namespace mdl {

using liealg::IndexSet;
using liealg::IndexTuple;

namespace {

nlohmann::json index_to_json(const IndexSet& index) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : index.tuples) out.push_back(t.parts);
  return out;
}

std::string expo_key(const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(e[i]);
  }
  return out;
}

std::vector<int> parse_expo_key(const std::string& key) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= key.size()) {
    const std::size_t comma = key.find(',', start);
    const std::string piece =
        key.substr(start, comma == std::string::npos ? comma : comma - start);
    out.push_back(std::stoi(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

nlohmann::json tasaka_to_json(const tasaka::TasakaMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& x : m.mat.entries) entries.push_back(rat_str(x));
  return nlohmann::json{{"kind", tasaka::kind_str(m.kind)},
                        {"weight", m.weight},
                        {"depth", m.depth},
                        {"level", m.level},
                        {"row_index", index_to_json(m.index)},
                        {"col_index", index_to_json(m.index)},
                        {"entries", entries}};
}

tasaka::TasakaMatrix tasaka_from_json(const nlohmann::json& j) {
  tasaka::TasakaMatrix m;
  m.kind = tasaka::kind_parse(j.at("kind").get<std::string>());
  m.weight = j.at("weight").get<int>();
  m.depth = j.at("depth").get<int>();
  m.level = j.at("level").get<int>();
  m.index.weight = m.weight;
  m.index.depth = m.depth;
  for (const auto& t : j.at("row_index"))
    m.index.tuples.push_back(IndexTuple{t.get<std::vector<int>>()});
  const auto& entries = j.at("entries");
  const std::size_t n = m.index.size();
  if (entries.size() != n * n)
    throw std::invalid_argument("tasaka_from_json: entry count does not match index");
  m.mat = exactlin::MatQ(n, n);
  for (std::size_t i = 0; i < entries.size(); ++i)
    m.mat.entries[i] = rat_parse(entries[i].get<std::string>());
  return m;
}

nlohmann::json depth_poly_to_json(const liealg::DepthPoly& p) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [e, c] : p.terms) out[expo_key(e)] = rat_str(c);
  return out;
}

liealg::DepthPoly depth_poly_from_json(const nlohmann::json& j) {
  liealg::DepthPoly p;
  bool first = true;
  for (const auto& [key, value] : j.items()) {
    std::vector<int> e = parse_expo_key(key);
    if (first) {
      p.depth = static_cast<int>(e.size()) - 1;
      first = false;
    }
    p.add(e, rat_parse(value.get<std::string>()));
  }
  return p;
}

nlohmann::json ncpoly_to_json(const liealg::NCPoly& p) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [w, c] : p.terms) out[w.str()] = rat_str(c);
  return out;
}

nlohmann::json coeff_vector_to_json(const tasaka::CoeffVector& v) {
  const IndexSet index = liealg::enumerate_index_set(v.weight, v.depth);
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < index.size(); ++i)
    if (v.coords[i] != 0) out[index.tuples[i].str()] = rat_str(v.coords[i]);
  return out;
}

nlohmann::json w_space_to_json(const tasaka::MultivarPolySpace& space) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : space.basis)
    out.push_back(
        coeff_vector_to_json(tasaka::pi_coords(p, space.weight, space.depth)));
  return out;
}

nlohmann::json xpoly_to_json(const tasaka::XPoly& p) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [e, c] : p) out[expo_key(e)] = rat_str(c);
  return out;
}

nlohmann::json period_space_to_json(const tasaka::BivarPolySpace& space) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : space.basis) out.push_back(xpoly_to_json(p));
  return out;
}

nlohmann::json subspace_to_json(const exactlin::SubspaceBasis& basis,
                                const IndexSet& index) {
  if (basis.ambient != index.size())
    throw std::invalid_argument("subspace_to_json: ambient dimension mismatch");
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    nlohmann::json vec = nlohmann::json::object();
    for (std::size_t j = 0; j < basis.ambient; ++j)
      if (basis.vectors(i, j) != 0)
        vec[index.tuples[j].str()] = rat_str(basis.vectors(i, j));
    out.push_back(std::move(vec));
  }
  return out;
}

}  // namespace mdl
