#include "ddlab/double_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace ddlab {

std::string Violation::to_string() const {
  return identity + " fails at (" + at.key() + "), witness column " + std::to_string(witness_column);
}

InvalidComplex::InvalidComplex(std::vector<Violation> v)
    : std::runtime_error(v.empty() ? "invalid double complex"
                                   : "invalid double complex: " + v.front().to_string()),
      violations(std::move(v)) {}

std::vector<Bidegree> DoubleComplex::bidegrees() const {
  std::vector<Bidegree> out;
  for (int p = p_range_.lo; p <= p_range_.hi; ++p)
    for (int q = q_range_.lo; q <= q_range_.hi; ++q) out.push_back({p, q});
  return out;
}

std::size_t DoubleComplex::dim(int p, int q) const {
  auto it = dims_.find({p, q});
  return it == dims_.end() ? 0 : it->second;
}

std::size_t DoubleComplex::total_dim() const {
  std::size_t total = 0;
  for (const auto& [_, n] : dims_) total += n;
  return total;
}

Matrix DoubleComplex::del(int p, int q) const {
  auto it = del_.find({p, q});
  return it != del_.end() ? it->second : Matrix(dim(p + 1, q), dim(p, q));
}

Matrix DoubleComplex::delbar(int p, int q) const {
  auto it = delbar_.find({p, q});
  return it != delbar_.end() ? it->second : Matrix(dim(p, q + 1), dim(p, q));
}

Matrix DoubleComplex::ddbar(int p, int q) const { return del(p, q + 1) * delbar(p, q); }

int DoubleComplex::n() const { return n_ ? *n_ : std::max(p_range_.hi, q_range_.hi); }

void DoubleComplex::set_dim(int p, int q, std::size_t n) {
  if (!in_range(p, q))
    throw std::invalid_argument("dimension given outside the bidegree range at (" +
                                Bidegree{p, q}.key() + ")");
  if (n == 0)
    dims_.erase({p, q});
  else
    dims_[{p, q}] = n;
}

void DoubleComplex::check_shape(const char* which, int p, int q, const Matrix& m,
                                Bidegree target) const {
  if (m.rows() != dim(target.p, target.q) || m.cols() != dim(p, q))
    throw std::invalid_argument(std::string(which) + " at (" + Bidegree{p, q}.key() + ") has shape " +
                                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                ", expected " + std::to_string(dim(target.p, target.q)) + "x" +
                                std::to_string(dim(p, q)));
}

void DoubleComplex::set_del(int p, int q, Matrix m) {
  check_shape("del", p, q, m, {p + 1, q});
  if (m.empty())
    del_.erase({p, q});
  else
    del_[{p, q}] = std::move(m);
}

void DoubleComplex::set_delbar(int p, int q, Matrix m) {
  check_shape("delbar", p, q, m, {p, q + 1});
  if (m.empty())
    delbar_.erase({p, q});
  else
    delbar_[{p, q}] = std::move(m);
}

namespace {

void record_if_nonzero(std::vector<Violation>& out, const Matrix& m, Bidegree at,
                       const char* identity) {
  if (auto col = m.first_nonzero_column()) out.push_back({at, identity, *col});
}

}  // namespace

std::vector<Violation> validate(const DoubleComplex& dc) {
  std::vector<Violation> out;
  for (auto [p, q] : dc.bidegrees()) {
    if (dc.dim(p, q) == 0) continue;
    record_if_nonzero(out, dc.del(p + 1, q) * dc.del(p, q), {p, q}, "del^2 = 0");
    record_if_nonzero(out, dc.delbar(p, q + 1) * dc.delbar(p, q), {p, q}, "delbar^2 = 0");
    record_if_nonzero(out, dc.del(p, q + 1) * dc.delbar(p, q) + dc.delbar(p + 1, q) * dc.del(p, q),
                      {p, q}, "del delbar + delbar del = 0");
  }
  return out;
}

std::vector<Violation> validate_real_structure(const DoubleComplex& dc) {
  std::vector<Violation> out;
  if (!dc.real) return out;
  const auto& sigma = dc.real->sigma;
  auto get = [&](int p, int q) -> std::optional<Matrix> {
    if (dc.dim(p, q) == 0) return Matrix(dc.dim(q, p), 0);
    auto it = sigma.find({p, q});
    if (it == sigma.end()) return std::nullopt;
    return it->second;
  };
  for (auto [p, q] : dc.bidegrees()) {
    if (dc.dim(p, q) == 0) continue;
    auto s = get(p, q);
    auto back = get(q, p);
    if (!s || !back || s->rows() != dc.dim(q, p) || s->cols() != dc.dim(p, q)) {
      out.push_back({{p, q}, "sigma block present with shape dim(q,p) x dim(p,q)", 0});
      continue;
    }
    record_if_nonzero(out, *back * s->conj() - Matrix::identity(dc.dim(p, q)), {p, q},
                      "sigma^2 = id");
    auto s_next = get(p + 1, q);
    if (!s_next) {
      out.push_back({{p + 1, q}, "sigma block present with shape dim(q,p) x dim(p,q)", 0});
      continue;
    }
    record_if_nonzero(out, *s_next * dc.del(p, q).conj() - dc.delbar(q, p) * *s, {p, q},
                      "sigma del = delbar sigma");
  }
  return out;
}

std::size_t TotalComplex::dim(int k) const {
  auto it = dims.find(k);
  return it == dims.end() ? 0 : it->second;
}

namespace {

Matrix lookup(const std::map<int, Matrix>& table, int k, std::size_t rows, std::size_t cols) {
  auto it = table.find(k);
  return it == table.end() ? Matrix(rows, cols) : it->second;
}

}  // namespace

Matrix TotalComplex::d_at(int k) const { return lookup(d, k, dim(k + 1), dim(k)); }
Matrix TotalComplex::dprime_at(int k) const { return lookup(dprime, k, dim(k + 1), dim(k)); }
Matrix TotalComplex::dsecond_at(int k) const { return lookup(dsecond, k, dim(k + 1), dim(k)); }

TotalComplex total_complex(const DoubleComplex& dc) {
  if (auto v = validate(dc); !v.empty()) throw InvalidComplex(std::move(v));
  TotalComplex tc;
  const auto& pr = dc.p_range();
  const auto& qr = dc.q_range();
  if (pr.empty() || qr.empty()) return tc;
  tc.k_range = {pr.lo + qr.lo, pr.hi + qr.hi};
  for (int k = tc.k_range.lo; k <= tc.k_range.hi; ++k) {
    std::size_t offset = 0;
    for (int p = pr.lo; p <= pr.hi; ++p) {
      int q = k - p;
      if (!qr.contains(q)) continue;
      tc.block_offset[{p, q}] = offset;
      offset += dc.dim(p, q);
    }
    tc.dims[k] = offset;
  }
  for (int k = tc.k_range.lo; k <= tc.k_range.hi; ++k) {
    Matrix dp(tc.dim(k + 1), tc.dim(k)), ds(tc.dim(k + 1), tc.dim(k));
    for (int p = pr.lo; p <= pr.hi; ++p) {
      int q = k - p;
      if (!qr.contains(q) || dc.dim(p, q) == 0) continue;
      std::size_t col0 = tc.block_offset.at({p, q});
      auto place = [&](Matrix& into, const Matrix& block, Bidegree target) {
        if (block.rows() == 0) return;
        std::size_t row0 = tc.block_offset.at(target);
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c) into(row0 + r, col0 + c) = block(r, c);
      };
      place(dp, dc.del(p, q), {p + 1, q});
      place(ds, dc.delbar(p, q), {p, q + 1});
    }
    tc.d[k] = dp + ds;
    tc.dprime[k] = std::move(dp);
    tc.dsecond[k] = std::move(ds);
  }
  return tc;
}

namespace {

IntRange range_union(const IntRange& a, const IntRange& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

}  // namespace

DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b) {
  DoubleComplex out(range_union(a.p_range(), b.p_range()), range_union(a.q_range(), b.q_range()));
  for (auto [p, q] : out.bidegrees()) out.set_dim(p, q, a.dim(p, q) + b.dim(p, q));
  for (auto [p, q] : out.bidegrees()) {
    out.set_del(p, q, block_diag(a.del(p, q), b.del(p, q)));
    out.set_delbar(p, q, block_diag(a.delbar(p, q), b.delbar(p, q)));
  }
  if (a.real && b.real) {
    RealStructure rs;
    for (auto [p, q] : out.bidegrees()) {
      if (out.dim(p, q) == 0) continue;
      auto block = [&](const DoubleComplex& x) {
        auto it = x.real->sigma.find({p, q});
        return it != x.real->sigma.end() ? it->second : Matrix(x.dim(q, p), x.dim(p, q));
      };
      rs.sigma[{p, q}] = block_diag(block(a), block(b));
    }
    out.real = std::move(rs);
  }
  return out;
}

DoubleComplex base_change(const DoubleComplex& dc, const BigradedIso& g) {
  std::map<Bidegree, Matrix> fwd, inv;
  for (auto [p, q] : dc.bidegrees()) {
    const std::size_t n = dc.dim(p, q);
    auto it = g.maps.find({p, q});
    Matrix m = it != g.maps.end() ? it->second : Matrix::identity(n);
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("base_change: block at (" + Bidegree{p, q}.key() + ") is not " +
                                  std::to_string(n) + "x" + std::to_string(n));
    auto mi = inverse(m);
    if (!mi)
      throw std::invalid_argument("base_change: block at (" + Bidegree{p, q}.key() + ") is singular");
    fwd[{p, q}] = std::move(m);
    inv[{p, q}] = std::move(*mi);
  }
  auto at = [](const std::map<Bidegree, Matrix>& t, int p, int q) {
    auto it = t.find({p, q});
    return it != t.end() ? it->second : Matrix();
  };

  DoubleComplex out(dc.p_range(), dc.q_range());
  for (auto [p, q] : dc.bidegrees()) out.set_dim(p, q, dc.dim(p, q));
  for (auto [p, q] : dc.bidegrees()) {
    if (dc.dim(p, q) == 0) continue;
    if (dc.dim(p + 1, q) > 0)
      out.set_del(p, q, at(fwd, p + 1, q) * dc.del(p, q) * at(inv, p, q));
    if (dc.dim(p, q + 1) > 0)
      out.set_delbar(p, q, at(fwd, p, q + 1) * dc.delbar(p, q) * at(inv, p, q));
  }
  if (dc.real) {
    // sigma' = g sigma conj(g)^-1 keeps x |-> sigma' conj(x) antilinear.
    RealStructure rs;
    for (const auto& [bd, s] : dc.real->sigma)
      rs.sigma[bd] = at(fwd, bd.q, bd.p) * s * at(inv, bd.p, bd.q).conj();
    out.real = std::move(rs);
  }
  out.flags = dc.flags;
  if (dc.flags.is_lie_model) out.set_n(dc.n());
  return out;
}

}  // namespace ddlab
