#include "ddlab/random_complex.hpp"

#include <array>
#include <tuple>

namespace ddlab {

Scalar ScalarRng::any() {
  Rational re(between(-3, 3));
  if (coin(15)) re /= between(2, 3);
  Rational im(0);
  if (coin(20)) im = between(-2, 2);
  return Scalar(re, im);
}

Scalar ScalarRng::nonzero() {
  for (;;) {
    Scalar s = any();
    if (!s.is_zero()) return s;
  }
}

BigradedIso random_iso(const DoubleComplex& dc, ScalarRng& rng) {
  BigradedIso g;
  for (auto [p, q] : dc.bidegrees()) {
    const std::size_t n = dc.dim(p, q);
    if (n == 0) continue;
    // Unit lower triangular times upper triangular with nonzero diagonal.
    Matrix lower = Matrix::identity(n), upper(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (r > c && rng.coin(60)) lower(r, c) = rng.any();
        if (r == c) upper(r, c) = rng.nonzero();
        if (r < c && rng.coin(60)) upper(r, c) = rng.any();
      }
    g.maps[{p, q}] = lower * upper;
  }
  return g;
}

namespace {

// One basis vector of the shape being assembled: its bidegree and its index
// inside E^{p,q}.
struct Node {
  Bidegree at;
  std::size_t index;
};

struct Builder {
  IntRange pr, qr;
  std::map<Bidegree, std::size_t> dims;
  // (source node, target node, coefficient)
  std::vector<std::tuple<Node, Node, Scalar>> del, delbar;

  bool fits(Bidegree b) const { return pr.contains(b.p) && qr.contains(b.q); }
  Node add(Bidegree b) { return {b, dims[b]++}; }

  DoubleComplex finish() const {
    DoubleComplex dc(pr, qr);
    for (const auto& [b, n] : dims) dc.set_dim(b.p, b.q, n);
    std::map<Bidegree, Matrix> dm, dbm;
    for (auto [b, _] : dims) {
      dm[b] = dc.del(b.p, b.q);
      dbm[b] = dc.delbar(b.p, b.q);
    }
    for (const auto& [s, t, c] : del) dm[s.at](t.index, s.index) = c;
    for (const auto& [s, t, c] : delbar) dbm[s.at](t.index, s.index) = c;
    for (auto& [b, m] : dm) dc.set_del(b.p, b.q, std::move(m));
    for (auto& [b, m] : dbm) dc.set_delbar(b.p, b.q, std::move(m));
    return dc;
  }
};

Bidegree random_point(Builder& b, ScalarRng& rng) {
  return {rng.between(b.pr.lo, b.pr.hi), rng.between(b.qr.lo, b.qr.hi)};
}

void add_square(Builder& b, ScalarRng& rng) {
  Bidegree o{rng.between(b.pr.lo, b.pr.hi - 1), rng.between(b.qr.lo, b.qr.hi - 1)};
  Node x = b.add(o), y = b.add({o.p + 1, o.q}), z = b.add({o.p, o.q + 1}),
       w = b.add({o.p + 1, o.q + 1});
  Scalar s = rng.nonzero(), t = rng.nonzero(), u = rng.nonzero();
  // del x = s y, delbar x = t z, delbar y = u w; anticommutation forces
  // del z = -(u s / t) w.
  b.del.emplace_back(x, y, s);
  b.delbar.emplace_back(x, z, t);
  b.delbar.emplace_back(y, w, u);
  b.del.emplace_back(z, w, -(u * s) / t);
}

// A zigzag alternates sources and sinks, joined by arrows that alternate
// between del and delbar. Every vertex is a pure source or a pure sink, so
// both compositions del delbar and delbar del vanish on it.
bool add_zigzag(Builder& b, ScalarRng& rng, std::size_t length) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    Bidegree start = random_point(b, rng);
    bool source = rng.coin(50);
    bool first_is_del = rng.coin(50);
    std::vector<Bidegree> pos{start};
    std::vector<bool> is_del_edge;
    bool ok = true;
    bool cur_source = source;
    bool edge_del = first_is_del;
    for (std::size_t i = 1; i < length; ++i) {
      Bidegree step = edge_del ? Bidegree{1, 0} : Bidegree{0, 1};
      Bidegree prev = pos.back();
      Bidegree next = cur_source ? Bidegree{prev.p + step.p, prev.q + step.q}
                                 : Bidegree{prev.p - step.p, prev.q - step.q};
      if (!b.fits(next)) {
        ok = false;
        break;
      }
      pos.push_back(next);
      is_del_edge.push_back(edge_del);
      cur_source = !cur_source;
      edge_del = !edge_del;
    }
    if (!ok) continue;
    std::vector<Node> nodes;
    for (auto p : pos) nodes.push_back(b.add(p));
    cur_source = source;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      Node from = cur_source ? nodes[i] : nodes[i + 1];
      Node to = cur_source ? nodes[i + 1] : nodes[i];
      (is_del_edge[i] ? b.del : b.delbar).emplace_back(from, to, rng.nonzero());
      cur_source = !cur_source;
    }
    return true;
  }
  return false;
}

}  // namespace

DoubleComplex random_complex(std::uint64_t seed, std::size_t size_budget) {
  ScalarRng rng(seed);
  Builder b;
  b.pr = {0, rng.between(1, 3)};
  b.qr = {0, rng.between(1, 3)};
  std::size_t left = size_budget;
  while (left > 0) {
    auto kind = rng.below(10);
    if (kind < 3 && left >= 4) {
      add_square(b, rng);
      left -= 4;
    } else if (kind < 8 && left >= 2) {
      std::size_t len = static_cast<std::size_t>(rng.between(2, static_cast<int>(std::min<std::size_t>(left, 5))));
      if (add_zigzag(b, rng, len)) {
        left -= len;
        continue;
      }
      b.add(random_point(b, rng));
      --left;
    } else {
      b.add(random_point(b, rng));
      --left;
    }
  }
  DoubleComplex dc = b.finish();
  return base_change(dc, random_iso(dc, rng));
}

}  // namespace ddlab
