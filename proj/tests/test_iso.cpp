#include <doctest.h>

#include <random>
#include <set>

#include "curled2/iso.hpp"

using namespace curled2;

namespace {

StructureMatrix c2_matrix(const FieldElem& a) {
  const FieldSpec& spec = a.spec();
  FieldElem one = FieldElem::one(spec), zero = FieldElem::zero(spec);
  return StructureMatrix(spec, {one, zero, zero, zero, zero, a, zero, one - a});
}

StructureMatrix c3_matrix(const FieldElem& a) {
  const FieldSpec& spec = a.spec();
  FieldElem one = FieldElem::one(spec), zero = FieldElem::zero(spec);
  return StructureMatrix(spec, {zero, zero, zero, one, a, zero, one - a, zero});
}

StructureMatrix c4_matrix(const FieldElem& a) {
  const FieldSpec& spec = a.spec();
  FieldElem one = FieldElem::one(spec), zero = FieldElem::zero(spec);
  return StructureMatrix(spec,
                         {one, zero, zero, one, a, one - a, one - a, a});
}

StructureMatrix rand_matrix(const FieldSpec& spec, std::mt19937_64& rng) {
  auto r = [&] { return FieldElem::of_int(spec, int(rng() % 13) - 6); };
  return StructureMatrix(spec, {r(), r(), r(), r(), r(), r(), r(), r()});
}

}  // namespace

TEST_CASE("tilde of simple matrices") {
  FieldSpec q = FieldSpec::rationals();
  auto I = Transform2::identity(q);
  Mat4 tI = tilde(I);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(tI[4 * i + j] == FieldElem::of_int(q, i == j ? 1 : 0));

  // the swap (0 1 / 1 0) lifts to the double transposition
  Transform2 swap = Transform2::parse(q, "[[0,1],[1,0]]");
  int swap_expected[16] = {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
  Mat4 t_swap = tilde(swap);
  for (std::size_t i = 0; i < 16; ++i)
    CHECK(t_swap[i] == FieldElem::of_int(q, swap_expected[i]));

  Transform2 x9 = Transform2::parse(q, "[[0,1],[1,-1]]");
  int x9_expected[16] = {0, 1, 0, 0, 1, 1, -1, -1, 0, -1, 0, 1, 0, -1, 1, 0};
  Mat4 t_x9 = tilde(x9);
  for (std::size_t i = 0; i < 16; ++i)
    CHECK(t_x9[i] == FieldElem::of_int(q, x9_expected[i]));
}

TEST_CASE("transform2 construction and inverse") {
  FieldSpec f3 = FieldSpec::prime(3);
  CHECK_THROWS_AS(Transform2::parse(f3, "[[1,2],[2,1]]"), DomainError);  // det 0
  Transform2 X = Transform2::parse(f3, "[[1,2],[0,1]]");
  CHECK(X * X.inverse() == Transform2::identity(f3));
  CHECK(X.inverse() * X == Transform2::identity(f3));
  CHECK(X.str() == "[[1,2],[0,1]]");
}

TEST_CASE("transform moves between isomorphic tables") {
  FieldSpec q = FieldSpec::rationals();
  FieldElem third = FieldElem::parse(q, "1/3");
  FieldElem one = FieldElem::one(q);

  // identity fixes everything
  StructureMatrix c3 = c3_matrix(third);
  CHECK(transform(c3, Transform2::identity(q)) == c3);

  // the swap carries C3(a) onto C2(1-a)
  Transform2 swap = Transform2::parse(q, "[[0,1],[1,0]]");
  CHECK(transform(c3, swap) == c2_matrix(one - third));

  // and (1 1 / 1 0) carries C4(a) onto C2(1-a)
  Transform2 x9_inverse = Transform2::parse(q, "[[1,1],[1,0]]");
  CHECK(transform(c4_matrix(third), x9_inverse) == c2_matrix(one - third));

  // the reverse orientation (0 1 / 1 -1) carries C2(a) onto C4(1-a)
  Transform2 x9 = Transform2::parse(q, "[[0,1],[1,-1]]");
  CHECK(transform(c2_matrix(third), x9) == c4_matrix(one - third));
}

TEST_CASE("equivalence predicate") {
  FieldSpec q = FieldSpec::rationals();
  FieldElem a = FieldElem::parse(q, "2/7");
  FieldElem one = FieldElem::one(q);
  Transform2 swap = Transform2::parse(q, "[[0,1],[1,0]]");
  // tilde(X) * C3(1-a) == C2(a) * X
  CHECK(is_equiv_under(c2_matrix(a), c3_matrix(one - a), swap));
  // tilde(X) * C4(1-a) == C2(a) * X with X = (0 1 / 1 -1)
  Transform2 x9 = Transform2::parse(q, "[[0,1],[1,-1]]");
  CHECK(is_equiv_under(c2_matrix(a), c4_matrix(one - a), x9));

  StructureMatrix c2a = c2_matrix(a);
  CHECK(is_equiv_under(c2a, c2a, Transform2::identity(q)));
  CHECK_FALSE(is_equiv_under(StructureMatrix::zero(q), c2a, swap));
}

TEST_CASE("GL2 enumeration") {
  // |GL2(Fq)| = (q^2-1)(q^2-q)
  auto order = [](unsigned q) { return (q * q - 1) * (q * q - q); };
  CHECK(gl2_elements(FieldSpec::prime(3)).size() == order(3));   // 48
  CHECK(gl2_elements(FieldSpec::gf4()).size() == order(4));      // 180
  CHECK(gl2_elements(FieldSpec::prime(5)).size() == order(5));   // 480
  CHECK_THROWS_AS(gl2_elements(FieldSpec::rationals()), DomainError);

  // deterministic scan order: first entry is (0 1 / 1 0)
  std::vector<Transform2> gl2 = gl2_elements(FieldSpec::prime(3));
  CHECK(gl2.front() == Transform2::parse(FieldSpec::prime(3), "[[0,1],[1,0]]"));
  // no duplicates
  std::set<std::string> seen;
  for (const Transform2& X : gl2) seen.insert(X.str());
  CHECK(seen.size() == gl2.size());
}

TEST_CASE("tilde is a group homomorphism into GL4") {
  FieldSpec f3 = FieldSpec::prime(3);
  std::vector<Transform2> gl2 = gl2_elements(f3);
  bool multiplicative = true;
  for (const Transform2& x : gl2) {
    Mat4 tx = tilde(x);
    for (const Transform2& y : gl2)
      multiplicative =
          multiplicative && (tilde(x * y) == mat4_mul(tx, tilde(y)));
  }
  CHECK(multiplicative);

  // det(tilde(X)) = det(X)^4 over F3 and F4
  for (const char* field : {"F3", "F4"}) {
    FieldSpec spec = FieldSpec::parse(field);
    bool det_law = true;
    for (const Transform2& x : gl2_elements(spec))
      det_law = det_law && (det4(tilde(x)) == pow(x.det(), 4));
    CHECK(det_law);
  }

  // tilde(X)^-1 = tilde(X^-1): lift of the inverse is the inverse lift
  for (const Transform2& x : gl2) {
    Mat4 product = mat4_mul(tilde(x), tilde(x.inverse()));
    bool identity = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        identity = identity &&
                   product[4 * i + j] == FieldElem::of_int(f3, i == j ? 1 : 0);
    REQUIRE(identity);
  }
}

TEST_CASE("transform is a right action") {
  std::mt19937_64 rng(123);
  for (const char* field : {"F5", "Q"}) {
    FieldSpec spec = FieldSpec::parse(field);
    for (int trial = 0; trial < 50; ++trial) {
      StructureMatrix A = rand_matrix(spec, rng);
      auto rand_transform = [&]() {
        while (true) {
          try {
            return Transform2(FieldElem::of_int(spec, int(rng() % 7) - 3),
                              FieldElem::of_int(spec, int(rng() % 7) - 3),
                              FieldElem::of_int(spec, int(rng() % 7) - 3),
                              FieldElem::of_int(spec, int(rng() % 7) - 3));
          } catch (const DomainError&) {
          }
        }
      };
      Transform2 X = rand_transform(), Y = rand_transform();
      CHECK(transform(transform(A, X), Y) == transform(A, X * Y));
      CHECK(transform(A, Transform2::identity(spec)) == A);
      // is_equiv_under matches the defining equation of transform
      CHECK(is_equiv_under(A, transform(A, X), X));
    }
  }
}

TEST_CASE("rank of structure matrices") {
  FieldSpec f3 = FieldSpec::prime(3);
  CHECK(rank(StructureMatrix::zero(f3)) == 0);
  StructureMatrix c1 =
      StructureMatrix::parse(f3, "[[0,0],[0,0],[1,0],[2,0]]");
  CHECK(rank(c1) == 1);
  CHECK(rank(c2_matrix(FieldElem::of_int(f3, 2))) == 2);
  FieldSpec q = FieldSpec::rationals();
  CHECK(rank(StructureMatrix::parse(q, "[[1/2,1],[1,2],[3,6],[0,0]]")) == 1);

  // rank is invariant under every basis change (exhaustive over GL2(F3))
  std::mt19937_64 rng(5);
  std::vector<Transform2> gl2 = gl2_elements(f3);
  for (int trial = 0; trial < 20; ++trial) {
    StructureMatrix A = rand_matrix(f3, rng);
    int r = rank(A);
    for (const Transform2& X : gl2) REQUIRE(rank(transform(A, X)) == r);
  }

  // and on every curled endo-commutative C-form table over F3
  std::vector<FieldElem> elems = elements(f3);
  FieldElem one = FieldElem::one(f3), zero = FieldElem::zero(f3);
  std::vector<StructureMatrix> members;
  for (const FieldElem& a : elems)
    for (const FieldElem& b : elems)
      members.push_back(StructureMatrix(
          f3, {zero, zero, zero, zero, a, b, -a, -b}));
  for (const FieldElem& b : elems)
    members.push_back(StructureMatrix(
        f3, {one, zero, zero, zero, zero, b, zero, one - b}));
  for (const FieldElem& a : elems) {
    members.push_back(StructureMatrix(
        f3, {zero, zero, zero, one, a, zero, one - a, zero}));
    members.push_back(StructureMatrix(
        f3, {one, zero, zero, one, a, one - a, one - a, a}));
  }
  REQUIRE(members.size() == 18);
  for (const StructureMatrix& A : members) {
    int r = rank(A);
    for (const Transform2& X : gl2) REQUIRE(rank(transform(A, X)) == r);
  }
}

TEST_CASE("exhaustive isomorphism search over F3") {
  FieldSpec f3 = FieldSpec::prime(3);
  FieldElem two = FieldElem::of_int(f3, 2);

  // C3(2) ~ C2(1-2) = C2(2): a witness must exist and verify
  auto witness = find_isomorphism(c2_matrix(two), c3_matrix(two));
  REQUIRE(witness.has_value());
  CHECK(is_equiv_under(c2_matrix(two), c3_matrix(two), *witness));

  // C2(0) and C2(1) are distinct classes
  CHECK_FALSE(find_isomorphism(c2_matrix(FieldElem::zero(f3)),
                               c2_matrix(FieldElem::one(f3)))
                  .has_value());

  // self-isomorphism finds the identity first for C2(2)
  auto self = find_isomorphism(c2_matrix(two), c2_matrix(two));
  REQUIRE(self.has_value());
  CHECK(*self == Transform2::identity(f3));

  // rank pruning: C0 vs C1 is rejected without a scan
  CHECK_FALSE(find_isomorphism(StructureMatrix::zero(f3), c3_matrix(two))
                  .has_value());

  CHECK_THROWS_AS(find_isomorphism(StructureMatrix::zero(FieldSpec::rationals()),
                                   StructureMatrix::zero(FieldSpec::rationals())),
                  UnsupportedFieldError);
}

TEST_CASE("parallel witness search agrees with the deterministic scan") {
  FieldSpec f5 = FieldSpec::prime(5);
  FieldElem three = FieldElem::of_int(f5, 3);
  StructureMatrix A = c2_matrix(three), B = c4_matrix(three + three);

  auto deterministic = find_isomorphism(A, B, WitnessSearch::deterministic);
  auto parallel = find_isomorphism(A, B, WitnessSearch::parallel);
  // C4(6=1) vs C2(3): 1 != 1-3 = 3? no: C4(a') ~ C2(1-a'); 1-1=0 != 3
  CHECK_FALSE(deterministic.has_value());
  CHECK_FALSE(parallel.has_value());

  StructureMatrix C = c4_matrix(FieldElem::of_int(f5, 3));  // ~ C2(-2) = C2(3)
  auto det2 = find_isomorphism(A, C, WitnessSearch::deterministic);
  auto par2 = find_isomorphism(A, C, WitnessSearch::parallel);
  REQUIRE(det2.has_value());
  REQUIRE(par2.has_value());
  CHECK(is_equiv_under(A, C, *det2));
  CHECK(is_equiv_under(A, C, *par2));
}
