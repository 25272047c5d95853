#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "whopf/linalg.hpp"

using namespace whopf;
using oracle::error_code_of;

TEST_SUITE("exact_scalar") {
  TEST_CASE("rational arithmetic is exact and canonical") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(4, -6).to_string() == "-2/3");
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(1, 3) < Rational(1, 2));
  }

  TEST_CASE("rational parse and format round trip") {
    for (const char* s : {"0", "1", "-7", "3/4", "-22/7", "-1/123456789012345678901234567891"})
      CHECK(Rational::parse(s).to_string() == s);
    CHECK(Rational::parse("  6/8 ") == Rational(3, 4));
    CHECK(Rational::parse("+5") == Rational(5));
  }

  TEST_CASE("rational errors") {
    CHECK(error_code_of([] { Rational(1, 0); }) == ErrorCode::DivisionByZero);
    CHECK(error_code_of([] { (void)Rational(0).inverse(); }) == ErrorCode::DivisionByZero);
    CHECK(error_code_of([] { (void)(Rational(1) / Rational(0)); }) == ErrorCode::DivisionByZero);
    CHECK(error_code_of([] { (void)Rational::parse("1/0"); }) == ErrorCode::DivisionByZero);
    CHECK(error_code_of([] { (void)Rational::parse("abc"); }) == ErrorCode::ParseError);
    CHECK(error_code_of([] { (void)Rational::parse(""); }) == ErrorCode::ParseError);
    CHECK(error_code_of([] { (void)Rational::parse("1.5"); }) == ErrorCode::ParseError);
  }

  TEST_CASE("rational field axioms on random samples") {
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<long> d(-50, 50);
    auto draw = [&] {
      long den = d(rng);
      if (den == 0) den = 1;
      return Rational(d(rng), den);
    };
    for (int t = 0; t < 200; ++t) {
      const Rational a = draw(), b = draw(), c = draw();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a - a == Rational(0));
      if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
      CHECK(Rational::parse(a.to_string()) == a);
    }
  }

  TEST_CASE("cyclotomic identities") {
    const Cyclotomic z = Cyclotomic::zeta(3);
    CHECK(Cyclotomic(1) + z + z * z == Cyclotomic(0));
    CHECK((z * z * z).is_one());
    const Cyclotomic i = Cyclotomic::zeta(4);
    CHECK(i * i == Cyclotomic(-1));
    const Cyclotomic w = Cyclotomic::zeta(5);
    Cyclotomic sum(0), pw(1);
    for (int k = 0; k < 5; ++k) {
      sum += pw;
      pw *= w;
    }
    CHECK(sum.is_zero());
    CHECK(pw.is_one());
  }

  TEST_CASE("cyclotomic inverses") {
    for (int order : {5, 12}) {
      const Cyclotomic z = Cyclotomic::zeta(order);
      const Cyclotomic x = Cyclotomic(2) + z - Cyclotomic(Rational(1, 3)) * z * z * z;
      CHECK((x * x.inverse()).is_one());
      CHECK(((z + Cyclotomic(1)) / (z + Cyclotomic(1))).is_one());
    }
    CHECK(error_code_of([] { (void)Cyclotomic(0).inverse(); }) == ErrorCode::DivisionByZero);
  }

  TEST_CASE("cyclotomic parse and format") {
    const Cyclotomic z = Cyclotomic::zeta(3);
    CHECK(Cyclotomic::parse("z", 3) == z);
    CHECK(Cyclotomic::parse("z^2", 3) == -Cyclotomic(1) - z);
    CHECK(Cyclotomic::parse("z^3", 3).is_one());
    for (const Cyclotomic& x : {z, -Cyclotomic(1) - z, Cyclotomic(Rational(1, 2)) * z + Cyclotomic(3)})
      CHECK(Cyclotomic::parse(x.to_string(), 3) == x);
    CHECK(error_code_of([] { (void)Cyclotomic::parse("z^", 3); }) == ErrorCode::ParseError);
    CHECK(error_code_of([] { (void)Cyclotomic::parse("y", 3); }) == ErrorCode::ParseError);
  }

  TEST_CASE("cyclotomic field mismatch and embedding") {
    CHECK(error_code_of([] { (void)(Cyclotomic::zeta(3) + Cyclotomic::zeta(5)); }) == ErrorCode::FieldMismatch);
    const Cyclotomic z3 = Cyclotomic::zeta(3).embedded(6);
    CHECK(z3 == Cyclotomic::zeta(6, 2));
    CHECK(Cyclotomic::zeta(5).galois(2) == Cyclotomic::zeta(5, 2));
    CHECK(error_code_of([] { (void)join(FieldSpec::cyclotomic(3), FieldSpec::cyclotomic(5)); }) ==
          ErrorCode::FieldMismatch);
    CHECK(join(FieldSpec::cyclotomic(3), FieldSpec::rational()) == FieldSpec::cyclotomic(3));
    CHECK(FieldSpec::cyclotomic(2).is_rational());
    CHECK(FieldSpec::cyclotomic(7).to_string() == "Q(zeta_7)");
  }

  TEST_CASE("roots of unity") {
    CHECK(FieldOps<Rational>::root_of_unity(FieldSpec::rational(), 2) == Rational(-1));
    CHECK(error_code_of([] { (void)FieldOps<Rational>::root_of_unity(FieldSpec::rational(), 3); }) ==
          ErrorCode::FieldTooSmall);
    const FieldSpec f6 = FieldSpec::cyclotomic(6);
    const Cyclotomic r3 = FieldOps<Cyclotomic>::root_of_unity(f6, 3);
    CHECK((r3 * r3 * r3).is_one());
    CHECK(!r3.is_one());
    CHECK(error_code_of([&] { (void)FieldOps<Cyclotomic>::root_of_unity(f6, 5); }) == ErrorCode::FieldTooSmall);
  }

  TEST_CASE("polynomial roots") {
    // (x - 1/2)(x + 3)(x - 2) = x^3 + x^2/2 - 13x/2 + 3
    const std::vector<Rational> p = {Rational(3), Rational(-13, 2), Rational(1, 2), Rational(1)};
    std::vector<Rational> r = rational_roots(p);
    std::sort(r.begin(), r.end());
    REQUIRE(r.size() == 3);
    CHECK(r[0] == Rational(-3));
    CHECK(r[1] == Rational(1, 2));
    CHECK(r[2] == Rational(2));
    CHECK(rational_roots({Rational(1), Rational(0), Rational(1)}).empty());
    // x^2 + x + 1 splits over Q(zeta_3)
    const FieldSpec f3 = FieldSpec::cyclotomic(3);
    const auto cr = FieldOps<Cyclotomic>::roots({Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}, f3);
    CHECK(cr.size() == 2);
    for (const auto& x : cr) CHECK((x * x + x + Cyclotomic(1)).is_zero());
  }

  TEST_CASE("cyclotomic polynomials and totient") {
    CHECK(totient(12) == 4);
    CHECK(totient(7) == 6);
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  }
}

TEST_SUITE("linalg") {
  TEST_CASE("determinant agrees with the Leibniz expansion") {
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
      const int n = 1 + t % 5;
      const Mat<Rational> a = oracle::random_matrix(rng, n, n, 3);
      CHECK(determinant(a) == oracle::determinant(a));
    }
  }

  TEST_CASE("inverse and singular matrices") {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
      const int n = 1 + t % 4;
      const Mat<Rational> a = oracle::random_matrix(rng, n, n, 4);
      if (determinant(a).is_zero()) {
        CHECK(error_code_of([&] { (void)invert(a); }) == ErrorCode::Singular);
      } else {
        const Mat<Rational> inv = invert(a);
        CHECK(Mat<Rational>(a * inv) == Mat<Rational>::Identity(n, n));
        CHECK(determinant(inv) * determinant(a) == Rational(1));
      }
    }
    Mat<Rational> s(2, 2);
    s << Rational(1), Rational(2), Rational(2), Rational(4);
    CHECK(error_code_of([&] { (void)invert(s); }) == ErrorCode::Singular);
  }

  TEST_CASE("rank-nullity and solve") {
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
      const int r = 1 + t % 4, c = 1 + (t / 4) % 5;
      // low rank product to get nontrivial kernels
      const Mat<Rational> a = oracle::random_matrix(rng, r, 2, 2) * oracle::random_matrix(rng, 2, c, 2);
      const Subspace<Rational> k = kernel(a);
      CHECK(k.dim() == c - rank(a));
      for (int i = 0; i < k.dim(); ++i) CHECK(is_zero_vector(Vec<Rational>(a * k.vector(i))));
      const Vec<Rational> x0 = oracle::random_matrix(rng, c, 1, 3).col(0);
      const Vec<Rational> b = a * x0;
      const auto sol = solve(a, b);
      REQUIRE(sol.has_value());
      CHECK(Vec<Rational>(a * sol->particular) == b);
      CHECK(sol->kernel == k);
    }
    Mat<Rational> z = Mat<Rational>::Zero(2, 2);
    z(0, 0) = Rational(1);
    Vec<Rational> b(2);
    b << Rational(0), Rational(1);
    CHECK(!solve(z, b).has_value());
    CHECK(error_code_of([&] { (void)solve_or_throw(z, b, "test"); }) == ErrorCode::NoSolution);
  }

  TEST_CASE("subspace dimension formula") {
    std::mt19937 rng(5);
    for (int t = 0; t < 25; ++t) {
      const auto u = Subspace<Rational>::span_rows(oracle::random_matrix(rng, 1 + t % 3, 5, 1));
      const auto w = Subspace<Rational>::span_rows(oracle::random_matrix(rng, 1 + t % 4, 5, 1));
      CHECK(u.sum(w).dim() + u.intersect(w).dim() == u.dim() + w.dim());
      CHECK(u.sum(w).contains(u));
      CHECK(u.contains(u.intersect(w)));
      for (int i = 0; i < u.dim(); ++i) {
        const auto coords = u.coordinates(u.vector(i));
        REQUIRE(coords.has_value());
        CHECK(Vec<Rational>(u.columns() * *coords) == u.vector(i));
      }
    }
  }

  TEST_CASE("kronecker mixed product") {
    std::mt19937 rng(9);
    const auto a = oracle::random_matrix(rng, 2, 3, 3), b = oracle::random_matrix(rng, 3, 2, 3);
    const auto c = oracle::random_matrix(rng, 3, 2, 3), d = oracle::random_matrix(rng, 2, 2, 3);
    CHECK(Mat<Rational>(kronecker(a, b) * kronecker(c, d)) == kronecker(Mat<Rational>(a * c), Mat<Rational>(b * d)));
    CHECK(trace(kronecker(Mat<Rational>(a * c), d)) == trace(Mat<Rational>(a * c)) * trace(d));
  }

  TEST_CASE("sparse system agrees with dense solve") {
    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
      const int rows = 2 + t % 4, cols = 3 + t % 3;
      const Mat<Rational> a = oracle::random_matrix(rng, rows, cols, 2);
      const Vec<Rational> b = a * oracle::random_matrix(rng, cols, 1, 2).col(0);
      SparseLinearSystem<Rational> sys(cols);
      for (int i = 0; i < rows; ++i) {
        SparseLinearSystem<Rational>::Row row;
        for (int j = 0; j < cols; ++j)
          if (!a(i, j).is_zero()) row[j] = a(i, j);
        CHECK(sys.add_equation(row, b(i)));
      }
      CHECK(sys.rank() == rank(a));
      CHECK(Vec<Rational>(a * sys.particular()) == b);
      CHECK(Subspace<Rational>::span(cols, sys.kernel_basis()) == kernel(a));
    }
    SparseLinearSystem<Rational> bad(1);
    CHECK(bad.add_equation({{0, Rational(1)}}, Rational(1)));
    CHECK(!bad.add_equation({{0, Rational(2)}}, Rational(3)));
    CHECK(!bad.consistent());
  }

  TEST_CASE("cyclotomic Vandermonde determinant") {
    const int n = 4;
    Mat<Cyclotomic> v(n, n);
    std::vector<Cyclotomic> xs;
    for (int k = 0; k < n; ++k) xs.push_back(Cyclotomic::zeta(5, k));
    for (int i = 0; i < n; ++i) {
      Cyclotomic p(1);
      for (int j = 0; j < n; ++j) {
        v(i, j) = p;
        p *= xs[static_cast<std::size_t>(i)];
      }
    }
    Cyclotomic expected(1);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) expected *= xs[static_cast<std::size_t>(j)] - xs[static_cast<std::size_t>(i)];
    CHECK(determinant(v) == expected);
    CHECK(determinant(v) == oracle::determinant(v));
    CHECK(Mat<Cyclotomic>(v * invert(v)) == Mat<Cyclotomic>::Identity(n, n));
  }
}
