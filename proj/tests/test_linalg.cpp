#include "ddlab/random_complex.hpp"
#include "ddlab/subspace.hpp"

#include <catch_amalgamated.hpp>

using namespace ddlab;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Scalar>> r;
  std::size_t cols = 0;
  for (auto row : rows) {
    r.emplace_back();
    for (const char* s : row) r.back().push_back(Scalar::parse(s));
    cols = r.back().size();
  }
  return Matrix::from_rows(r, cols);
}

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Matrix random_matrix(ScalarRng& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.coin(45)) m(i, j) = rng.any();
  return m;
}

// del: E^{1,0} -> E^{2,0} of the Iwasawa model, phi3 |-> -phi1^phi2.
Matrix iwasawa_del10() { return mat({{"0", "0", "-1"}, {"0", "0", "0"}, {"0", "0", "0"}}); }

}  // namespace

TEST_CASE("scalar text round-trips canonically") {
  for (const char* s : {"0", "3", "-7/2", "1/3 i", "(1/2 + -3/4 i)", "i", "-i"}) {
    Scalar x = Scalar::parse(s);
    CHECK(Scalar::parse(x.to_string()) == x);
  }
  CHECK(Scalar::parse("2/4") == Scalar(Rational(1, 2)));
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("(1 + 1 i)") * Scalar::parse("(1 + -1 i)") == Scalar(2));
  CHECK_THROWS_AS(Scalar::parse("1/0"), ScalarSyntaxError);
  CHECK_THROWS_AS(Scalar::parse("pi"), ScalarSyntaxError);
}

TEST_CASE("column echelon form") {
  CHECK(column_echelon(Matrix::identity(2)) == Matrix::identity(2));
  CHECK(column_echelon(Matrix(3, 2)).cols() == 0);

  Matrix m = mat({{"1", "i"}, {"i", "-1"}});
  Matrix e = column_echelon(m);
  REQUIRE(e.cols() == 1);
  CHECK(e(0, 0) == Scalar(1));
  CHECK(e(1, 0) == Scalar::i());
  CHECK(column_echelon(e) == e);
}

TEST_CASE("kernel and image") {
  CHECK(kernel(Matrix::identity(4)).dim() == 0);
  CHECK(kernel(Matrix(2, 3)) == Subspace::full(3));
  CHECK(image(Matrix::identity(3)) == Subspace::full(3));
  CHECK(image(Matrix(3, 3)).dim() == 0);

  const Matrix del = iwasawa_del10();
  CHECK(kernel(del).dim() == 2);
  const Subspace im = image(del);
  REQUIRE(im.dim() == 1);
  CHECK(im.contains(vec({1, 0, 0})));
}

TEST_CASE("sum and intersection of subspaces") {
  const Subspace s = image(mat({{"1", "0"}, {"2", "1"}, {"0", "i"}}));
  const Subspace z = Subspace::zero(3);
  CHECK(subspace_sum(s, s) == s);
  CHECK(subspace_sum(s, z) == s);
  CHECK(subspace_intersect(s, s) == s);
  CHECK(subspace_intersect(s, z) == z);

  const Subspace l1 = image(mat({{"1"}, {"1"}, {"0"}})), l2 = image(mat({{"0"}, {"1"}, {"1"}}));
  CHECK(subspace_sum(l1, l2).dim() == 2);
  CHECK(subspace_intersect(l1, l2).dim() == 0);

  const Subspace p1 = image(mat({{"1", "0"}, {"0", "1"}, {"0", "0"}}));
  const Subspace p2 = image(mat({{"1", "0"}, {"1", "0"}, {"0", "1"}}));
  const Subspace cut = subspace_intersect(p1, p2);
  REQUIRE(cut.dim() == 1);
  CHECK(cut.contains(vec({1, 1, 0})));

  CHECK_THROWS_AS(subspace_sum(s, Subspace::zero(2)), DimensionMismatch);
  CHECK_THROWS_AS(subspace_intersect(s, Subspace::zero(4)), DimensionMismatch);
}

TEST_CASE("lift") {
  const Vector t = {Scalar(3), Scalar::i(), Scalar(Rational(-1, 2))};
  auto x = lift(Matrix::identity(3), t);
  REQUIRE(x);
  CHECK(*x == t);
  CHECK_FALSE(lift(Matrix(3, 3), t));

  const Matrix del = iwasawa_del10();
  auto pre = lift(del, vec({1, 0, 0}));
  REQUIRE(pre);
  CHECK(del * *pre == vec({1, 0, 0}));
  CHECK((*pre)[2] == Scalar(-1));  // -phi3 modulo the kernel
}

TEST_CASE("rank-nullity, modular law and canonicity on random matrices") {
  ScalarRng rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    const Matrix a = random_matrix(rng, r, c), b = random_matrix(rng, r, 1 + rng.below(4));
    CHECK(kernel(a).dim() + image(a).dim() == c);

    const Subspace s1 = image(a), s2 = image(b);
    CHECK(s1.dim() + s2.dim() == subspace_sum(s1, s2).dim() + subspace_intersect(s1, s2).dim());
    CHECK(subspace_sum(s1, s2).contains(s1));
    CHECK(s1.contains(subspace_intersect(s1, s2)));

    const Matrix e = column_echelon(a);
    CHECK(column_echelon(e) == e);
    CHECK(Subspace::span(e) == s1);

    Vector target(r);
    for (auto& x : target) x = rng.any();
    if (auto x = lift(a, target)) CHECK(a * *x == target);
    else CHECK_FALSE(s1.contains(target));
  }
}
