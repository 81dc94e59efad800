#include <doctest.h>

#include <random>

#include "curled2/algebra.hpp"
#include "curled2/iso.hpp"

using namespace curled2;

namespace {

AlgebraElement elem(const FieldSpec& spec, int x1, int x2) {
  return AlgebraElement{FieldElem::of_int(spec, x1),
                        FieldElem::of_int(spec, x2)};
}

StructureMatrix cform(const FieldSpec& spec, int a, int b, int c, int d,
                      bool eps, bool delta) {
  return CFormParams(FieldElem::of_int(spec, a), FieldElem::of_int(spec, b),
                     FieldElem::of_int(spec, c), FieldElem::of_int(spec, d),
                     eps, delta)
      .matrix();
}

StructureMatrix c1_matrix(const FieldSpec& spec) {
  return cform(spec, 1, 0, -1, 0, false, false);
}

StructureMatrix c2_matrix(const FieldElem& a) {
  const FieldSpec& spec = a.spec();
  FieldElem one = FieldElem::one(spec), zero = FieldElem::zero(spec);
  return StructureMatrix(spec, {one, zero, zero, zero, zero, a, zero, one - a});
}

}  // namespace

TEST_CASE("structure matrix literals") {
  FieldSpec f5 = FieldSpec::prime(5);
  StructureMatrix A =
      StructureMatrix::parse(f5, "[[1,0],[0,0],[0,2],[0,4]]");
  CHECK(A == c2_matrix(FieldElem::of_int(f5, 2)));
  CHECK(A.str() == "[[1,0],[0,0],[0,2],[0,4]]");
  // C-form literal expands to the same matrix; spaces tolerated on input
  CHECK(StructureMatrix::parse(f5, "C(0, 2, 0, 4; 1, 0)") == A);
  CHECK(StructureMatrix::parse(f5, " [[1,0],[0,0],[0,2],[0,4]] ") == A);
  CHECK_THROWS_AS(StructureMatrix::parse(f5, "[[1,0],[0,0],[0,2]]"),
                  ParseError);
  CHECK_THROWS_AS(StructureMatrix::parse(f5, "C(1,0,0,0;2,0)"), ParseError);
  CHECK_THROWS_AS(StructureMatrix::parse(f5, "[[1,0],[0,0],[0,2],[0,4]]x"),
                  ParseError);

  CFormParams p = CFormParams::parse(f5, "C(0,2,0,4;1,0)");
  CHECK(p.str() == "C(0,2,0,4;1,0)");
  CHECK(p.matrix() == A);
  // a non-C-form matrix cannot be read back as C-form parameters
  CHECK_THROWS_AS(CFormParams::parse(f5, "[[2,0],[0,0],[0,2],[0,4]]"),
                  ParseError);

  FieldSpec q = FieldSpec::rationals();
  StructureMatrix B = StructureMatrix::parse(q, "[[0,0],[0,1],[1/3,0],[2/3,0]]");
  CHECK(B.str() == "[[0,0],[0,1],[1/3,0],[2/3,0]]");
}

TEST_CASE("multiplication follows the table") {
  FieldSpec f5 = FieldSpec::prime(5);
  StructureMatrix c22 = c2_matrix(FieldElem::of_int(f5, 2));
  // e*f = 2f in C2(2)
  CHECK(multiply(c22, elem(f5, 1, 0), elem(f5, 0, 1)) == elem(f5, 0, 2));
  // f*e = (1-2)f = 4f
  CHECK(multiply(c22, elem(f5, 0, 1), elem(f5, 1, 0)) == elem(f5, 0, 4));
  // 0*y = 0 for any y
  CHECK(multiply(c22, elem(f5, 0, 0), elem(f5, 3, 4)) == elem(f5, 0, 0));

  FieldSpec f3 = FieldSpec::prime(3);
  StructureMatrix c1 = c1_matrix(f3);
  // f*e = -e in C1
  CHECK(multiply(c1, elem(f3, 0, 1), elem(f3, 1, 0)) == elem(f3, -1, 0));

  CHECK_THROWS_AS(multiply(c1, elem(f5, 1, 0), elem(f5, 0, 1)), DomainError);
}

TEST_CASE("squares") {
  FieldSpec f3 = FieldSpec::prime(3);
  StructureMatrix c1 = c1_matrix(f3);
  CHECK(square(c1, elem(f3, 1, 1)) == elem(f3, 0, 0));  // (e+f)^2 = 0 in C1

  FieldSpec q = FieldSpec::rationals();
  StructureMatrix c2a = c2_matrix(FieldElem::parse(q, "7/3"));
  CHECK(square(c2a, elem(q, 1, 0)) == elem(q, 1, 0));  // e^2 = e

  // in C(0,b,0,1-b;1,0): x^2 = x1^2 e + x1 x2 f for every b
  for (int b = -2; b <= 2; ++b) {
    StructureMatrix m = cform(q, 0, b, 0, 1 - b, true, false);
    for (int x1 = -2; x1 <= 2; ++x1)
      for (int x2 = -2; x2 <= 2; ++x2)
        CHECK(square(m, elem(q, x1, x2)) == elem(q, x1 * x1, x1 * x2));
  }
}

TEST_CASE("endo-commutativity methods and examples") {
  FieldSpec f3 = FieldSpec::prime(3);
  CHECK(is_endo_commutative(StructureMatrix::zero(f3)));
  CHECK(is_endo_commutative(cform(f3, 0, 1, 0, 0, true, false)));  // C2(1)
  CHECK_FALSE(is_endo_commutative(cform(f3, 1, 1, 0, 0, true, false)));

  // the three methods agree on every C-form over F3
  std::vector<FieldElem> elems = elements(f3);
  for (bool eps : {false, true})
    for (bool delta : {false, true})
      for (const FieldElem& a : elems)
        for (const FieldElem& b : elems)
          for (const FieldElem& c : elems)
            for (const FieldElem& d : elems) {
              CFormParams p(a, b, c, d, eps, delta);
              StructureMatrix m = p.matrix();
              bool criterion = is_endo_commutative(m, EcMethod::criterion);
              CHECK(criterion == ec_criterion_general(m));
              CHECK(criterion == ec_criterion_cform(p));
              CHECK(criterion ==
                    is_endo_commutative(m, EcMethod::formal_defect));
              CHECK(criterion == is_endo_commutative(m, EcMethod::pointwise));
            }

  // pointwise needs a finite field
  CHECK_THROWS_AS(is_endo_commutative(
                      StructureMatrix::zero(FieldSpec::rationals()),
                      EcMethod::pointwise),
                  DomainError);
}

TEST_CASE("curledness") {
  FieldSpec f5 = FieldSpec::prime(5);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      CHECK(is_curled(cform(f5, a, b, -a, -b, false, false)));

  CHECK_FALSE(is_curled(cform(f5, 1, 1, 0, 0, true, false)));
  // b+d = 2 != eps: fails over F5 and (b+d = 0 != 1) over F4
  CHECK_FALSE(is_curled(cform(f5, 0, 1, 0, 1, true, true)));
  CHECK_FALSE(is_curled(cform(FieldSpec::gf4(), 0, 1, 0, 1, true, true)));

  // over Q the normalize-then-criterion route decides
  FieldSpec q = FieldSpec::rationals();
  CHECK(is_curled(cform(q, 2, 3, -2, -3, false, false)));
  CHECK_FALSE(is_curled(
      StructureMatrix::parse(q, "[[1,1],[0,0],[0,0],[0,0]]")));  // e^2 = e+f
  // e^2 = 3e, ef = f, fe = 2f: rescaling e by 1/3 lands on C(0,1/3,0,2/3;1,0)
  CHECK(is_curled(StructureMatrix::parse(q, "[[3,0],[0,0],[0,1],[0,2]]")));
  CHECK_FALSE(
      is_curled(StructureMatrix::parse(q, "[[3,0],[0,0],[0,1/3],[0,2/3]]")));

  CHECK_THROWS_AS(is_curled(StructureMatrix::zero(FieldSpec::prime(2))),
                  UnsupportedFieldError);
}

TEST_CASE("curledness criterion matches the pointwise definition") {
  for (const char* field : {"F3", "F4", "F5"}) {
    FieldSpec spec = FieldSpec::parse(field);
    std::vector<FieldElem> elems = elements(spec);
    for (bool eps : {false, true})
      for (bool delta : {false, true})
        for (const FieldElem& a : elems)
          for (const FieldElem& b : elems)
            for (const FieldElem& c : elems)
              for (const FieldElem& d : elems) {
                CFormParams p(a, b, c, d, eps, delta);
                REQUIRE(curled_criterion_cform(p) == is_curled(p.matrix()));
              }
  }
}

TEST_CASE("combined criterion equals endo-commutative and curled") {
  FieldSpec f4 = FieldSpec::gf4();
  FieldElem w = FieldElem::parse(f4, "w");
  FieldElem zero = FieldElem::zero(f4), one = FieldElem::one(f4);

  CHECK(is_ec_curled(CFormParams(w, one, -w, -one, false, false)));
  CHECK(is_ec_curled(CFormParams(zero, w, zero, one - w, true, false)));
  CHECK_FALSE(is_ec_curled(CFormParams(one, zero, zero, zero, true, false)));

  FieldSpec q = FieldSpec::rationals();
  auto qe = [&](const char* t) { return FieldElem::parse(q, t); };
  CHECK(is_ec_curled(
      CFormParams(qe("2/3"), zero = qe("0"), qe("1/3"), qe("0"), false, true)));
  CHECK_FALSE(is_ec_curled(
      CFormParams(qe("2/3"), qe("0"), qe("2/3"), qe("0"), false, true)));
}

TEST_CASE("special predicates on structure constants") {
  FieldSpec f3 = FieldSpec::prime(3);
  CHECK(is_associative(cform(f3, 0, 1, 1, 0, true, true)));
  CHECK_FALSE(is_associative(c1_matrix(f3)));  // (ef)f = e but e(ff) = 0
  CHECK(is_zeropotent(c1_matrix(f3)));
  CHECK(is_anticommutative(c1_matrix(f3)));
  CHECK(is_commutative(cform(f3, 1, 2, 1, 2, false, false)));
  CHECK_FALSE(is_commutative(c1_matrix(f3)));
}

TEST_CASE("predicates agree with their pointwise meaning") {
  std::mt19937_64 rng(7);
  for (const char* field : {"F3", "F4"}) {
    FieldSpec spec = FieldSpec::parse(field);
    std::vector<FieldElem> elems = elements(spec);
    std::vector<AlgebraElement> points;
    for (const FieldElem& u : elems)
      for (const FieldElem& v : elems) points.push_back(AlgebraElement{u, v});
    for (int trial = 0; trial < 300; ++trial) {
      std::array<FieldElem, 8> entries = {
          elems[rng() % elems.size()], elems[rng() % elems.size()],
          elems[rng() % elems.size()], elems[rng() % elems.size()],
          elems[rng() % elems.size()], elems[rng() % elems.size()],
          elems[rng() % elems.size()], elems[rng() % elems.size()]};
      StructureMatrix A(spec, std::move(entries));

      bool zeropotent_pw = true, anticommutative_pw = true,
           commutative_pw = true;
      for (const AlgebraElement& x : points) {
        zeropotent_pw = zeropotent_pw && square(A, x).is_zero();
        for (const AlgebraElement& y : points) {
          AlgebraElement sum{x.x1 + y.x1, x.x2 + y.x2};
          AlgebraElement lhs = square(A, sum);
          AlgebraElement xx = square(A, x), yy = square(A, y);
          AlgebraElement rhs{xx.x1 + yy.x1, xx.x2 + yy.x2};
          anticommutative_pw = anticommutative_pw && (lhs == rhs);
          commutative_pw =
              commutative_pw && (multiply(A, x, y) == multiply(A, y, x));
        }
      }
      CHECK(is_zeropotent(A) == zeropotent_pw);
      CHECK(is_anticommutative(A) == anticommutative_pw);
      CHECK(is_commutative(A) == commutative_pw);
    }
  }
}

TEST_CASE("multiplication is bilinear") {
  FieldSpec q = FieldSpec::rationals();
  std::mt19937_64 rng(11);
  auto rand_elem = [&](const FieldSpec& spec) {
    return AlgebraElement{FieldElem::of_int(spec, int(rng() % 9) - 4),
                          FieldElem::of_int(spec, int(rng() % 9) - 4)};
  };
  for (int trial = 0; trial < 100; ++trial) {
    std::array<FieldElem, 8> entries = {
        FieldElem::of_int(q, int(rng() % 9) - 4),
        FieldElem::of_int(q, int(rng() % 9) - 4),
        FieldElem::of_int(q, int(rng() % 9) - 4),
        FieldElem::of_int(q, int(rng() % 9) - 4),
        FieldElem::of_int(q, int(rng() % 9) - 4),
        FieldElem::of_int(q, int(rng() % 9) - 4),
        FieldElem::of_int(q, int(rng() % 9) - 4),
        FieldElem::of_int(q, int(rng() % 9) - 4)};
    StructureMatrix A(q, std::move(entries));
    AlgebraElement x = rand_elem(q), xp = rand_elem(q), y = rand_elem(q);
    AlgebraElement sum{x.x1 + xp.x1, x.x2 + xp.x2};
    AlgebraElement left = multiply(A, sum, y);
    AlgebraElement l1 = multiply(A, x, y), l2 = multiply(A, xp, y);
    CHECK(left == AlgebraElement{l1.x1 + l2.x1, l1.x2 + l2.x2});
    AlgebraElement right = multiply(A, y, sum);
    AlgebraElement r1 = multiply(A, y, x), r2 = multiply(A, y, xp);
    CHECK(right == AlgebraElement{r1.x1 + r2.x1, r1.x2 + r2.x2});
  }

  // exhaustive over F3 on one fixed table
  FieldSpec f3 = FieldSpec::prime(3);
  StructureMatrix A = StructureMatrix::parse(f3, "[[1,2],[0,1],[2,2],[1,0]]");
  std::vector<AlgebraElement> points;
  for (const FieldElem& u : elements(f3))
    for (const FieldElem& v : elements(f3))
      points.push_back(AlgebraElement{u, v});
  for (const AlgebraElement& x : points)
    for (const AlgebraElement& xp : points)
      for (const AlgebraElement& y : points) {
        AlgebraElement sum{x.x1 + xp.x1, x.x2 + xp.x2};
        AlgebraElement l = multiply(A, sum, y);
        AlgebraElement l1 = multiply(A, x, y), l2 = multiply(A, xp, y);
        REQUIRE(l == AlgebraElement{l1.x1 + l2.x1, l1.x2 + l2.x2});
      }
}

TEST_CASE("unit elements") {
  FieldSpec f3 = FieldSpec::prime(3);
  auto u1 = find_unit(cform(f3, 0, 0, 0, 0, true, true));
  REQUIRE(u1.has_value());
  CHECK(*u1 == elem(f3, 1, 1));  // u = e + f

  auto u2 = find_unit(cform(f3, 0, 1, 0, 1, true, false));
  REQUIRE(u2.has_value());
  CHECK(*u2 == elem(f3, 1, 0));  // u = e

  CHECK_FALSE(find_unit(StructureMatrix::zero(f3)).has_value());
  CHECK_FALSE(find_unit(c1_matrix(f3)).has_value());

  FieldSpec q = FieldSpec::rationals();
  auto u3 = find_unit(cform(q, 1, 0, 1, 0, false, true));
  REQUIRE(u3.has_value());
  CHECK(*u3 == elem(q, 0, 1));  // u = f
}

TEST_CASE("basis rescaling of curled algebras") {
  FieldSpec f5 = FieldSpec::prime(5);

  // already C-form: identity witness, unchanged parameters
  StructureMatrix m = cform(f5, 0, 2, 0, 4, true, false);
  auto [p, witness] = normalize_curled(m);
  CHECK(p.str() == "C(0,2,0,4;1,0)");
  CHECK(witness == Transform2::identity(f5));
  CHECK(transform(m, witness) == p.matrix());

  auto [p0, w0] = normalize_curled(StructureMatrix::zero(f5));
  CHECK(p0.str() == "C(0,0,0,0;0,0)");
  CHECK(w0 == Transform2::identity(f5));

  // e^2 = 2e, f^2 = 3f, ef = e+3f, fe = 2e+4f over F5 is curled and
  // rescales onto C(2,4,4,2;1,1) by diag(2,3)
  StructureMatrix curled =
      StructureMatrix::parse(f5, "[[2,0],[0,3],[1,3],[2,4]]");
  REQUIRE(is_curled(curled));
  auto [pc, wc] = normalize_curled(curled);
  CHECK(pc.str() == "C(2,4,4,2;1,1)");
  CHECK(wc == Transform2::parse(f5, "[[2,0],[0,3]]"));
  CHECK(transform(curled, wc) == pc.matrix());

  // e^2 = 2e, f^2 = 0, ef = e, fe = -e over F5 is not curled:
  // (e+f)^2 = 2e is not a multiple of e+f
  StructureMatrix straight =
      StructureMatrix::parse(f5, "[[2,0],[0,0],[1,0],[4,0]]");
  CHECK_FALSE(is_curled(straight));
  CHECK_THROWS_AS(normalize_curled(straight), PredicateError);

  // over Q as well
  FieldSpec q = FieldSpec::rationals();
  StructureMatrix rational_curled =
      StructureMatrix::parse(q, "[[3,0],[0,0],[0,1],[0,2]]");
  auto [pq, wq] = normalize_curled(rational_curled);
  CHECK(pq.str() == "C(0,1/3,0,2/3;1,0)");
  CHECK(wq == Transform2::parse(q, "[[3,0],[0,1]]"));
  CHECK(transform(rational_curled, wq) == pq.matrix());
}
