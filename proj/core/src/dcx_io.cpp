#include "ddlab/dcx_io.hpp"

#include <json.hpp>

#include <charconv>

namespace ddlab {

using nlohmann::json;

namespace {

Bidegree parse_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) throw InputError("bidegree key '" + key + "' is not of the form \"p,q\"");
  Bidegree b;
  auto parse_int = [&](std::string_view s, int& out) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw InputError("bidegree key '" + key + "' is not of the form \"p,q\"");
  };
  parse_int(std::string_view(key).substr(0, comma), b.p);
  parse_int(std::string_view(key).substr(comma + 1), b.q);
  return b;
}

IntRange parse_range(const json& j, const char* name) {
  if (!j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  const json& r = j.at(name);
  if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
    throw InputError(std::string("field '") + name + "' must be [lo, hi]");
  return {r[0].get<int>(), r[1].get<int>()};
}

Scalar parse_entry(const json& e) {
  if (e.is_number_integer()) return Scalar(e.get<long>());
  if (e.is_string()) {
    try {
      return Scalar::parse(e.get<std::string>());
    } catch (const ScalarSyntaxError& err) {
      throw InputError(err.what());
    }
  }
  throw InputError("matrix entries must be Scalar strings or integers");
}

Matrix parse_grid(const json& grid, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!grid.is_array()) throw InputError(where + ": expected an array of rows");
  if (grid.size() != rows)
    throw InputError(where + ": expected " + std::to_string(rows) + " rows, got " +
                     std::to_string(grid.size()));
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!grid[r].is_array() || grid[r].size() != cols)
      throw InputError(where + ": row " + std::to_string(r) + " must have " + std::to_string(cols) +
                       " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_entry(grid[r][c]);
  }
  return m;
}

json grid_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

DoubleComplex load_dcx(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError(".dcx top level must be an object");

  DoubleComplex dc(parse_range(j, "p_range"), parse_range(j, "q_range"));
  if (j.contains("dims")) {
    for (const auto& [key, value] : j.at("dims").items()) {
      Bidegree b = parse_key(key);
      if (!value.is_number_integer() || value.get<long>() < 0)
        throw InputError("dims[" + key + "] must be a nonnegative integer");
      if (!dc.in_range(b.p, b.q)) throw InputError("dims[" + key + "] lies outside p_range x q_range");
      dc.set_dim(b.p, b.q, value.get<std::size_t>());
    }
  }
  auto read_maps = [&](const char* field, bool is_del) {
    if (!j.contains(field)) return;
    for (const auto& [key, value] : j.at(field).items()) {
      Bidegree b = parse_key(key);
      Bidegree t = is_del ? Bidegree{b.p + 1, b.q} : Bidegree{b.p, b.q + 1};
      Matrix m = parse_grid(value, dc.dim(t.p, t.q), dc.dim(b.p, b.q), std::string(field) + "[" + key + "]");
      if (is_del)
        dc.set_del(b.p, b.q, std::move(m));
      else
        dc.set_delbar(b.p, b.q, std::move(m));
    }
  };
  read_maps("del", true);
  read_maps("delbar", false);
  if (j.contains("sigma")) {
    RealStructure rs;
    for (const auto& [key, value] : j.at("sigma").items()) {
      Bidegree b = parse_key(key);
      rs.sigma[b] = parse_grid(value, dc.dim(b.q, b.p), dc.dim(b.p, b.q), "sigma[" + key + "]");
    }
    dc.real = std::move(rs);
  }
  return dc;
}

std::string save_dcx(const DoubleComplex& dc) {
  json j;
  j["p_range"] = {dc.p_range().lo, dc.p_range().hi};
  j["q_range"] = {dc.q_range().lo, dc.q_range().hi};
  json dims = json::object(), del = json::object(), delbar = json::object();
  for (auto [p, q] : dc.bidegrees()) {
    if (dc.dim(p, q) == 0) continue;
    dims[Bidegree{p, q}.key()] = dc.dim(p, q);
  }
  for (const auto& [b, m] : dc.del_table())
    if (!m.is_zero()) del[b.key()] = grid_json(m);
  for (const auto& [b, m] : dc.delbar_table())
    if (!m.is_zero()) delbar[b.key()] = grid_json(m);
  j["dims"] = std::move(dims);
  j["del"] = std::move(del);
  j["delbar"] = std::move(delbar);
  if (dc.real) {
    json sigma = json::object();
    for (const auto& [b, m] : dc.real->sigma) sigma[b.key()] = grid_json(m);
    j["sigma"] = std::move(sigma);
  }
  return j.dump(1) + "\n";
}

}  // namespace ddlab
