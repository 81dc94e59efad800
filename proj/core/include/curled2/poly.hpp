#ifndef CURLED2_POLY_HPP
#define CURLED2_POLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "curled2/algebra.hpp"
#include "curled2/field.hpp"

namespace curled2 {

/// Variables of the fixed six-variable polynomial ring used for identity
/// checking: generic elements x = x1 e + x2 f, y, z.
enum class Var : std::uint8_t { x1 = 0, x2, y1, y2, z1, z2 };
inline constexpr std::size_t kNumVars = 6;

/// Exponent tuple, one (small) exponent per variable.
using Monomial = std::array<std::uint8_t, kNumVars>;

/// Sparse exact polynomial in x1,x2,y1,y2,z1,z2 over one field.
/// Terms are kept in lexicographic exponent order with no zero
/// coefficients, so equal polynomials compare and print identically.
class MultiPoly {
 public:
  explicit MultiPoly(const FieldSpec& spec) : spec_(spec) {}
  static MultiPoly constant(FieldElem value);
  static MultiPoly var(const FieldSpec& spec, Var v);
  static MultiPoly monomial(FieldElem coeff, const Monomial& exponents);

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, FieldElem>& terms() const { return terms_; }
  /// Coefficient of an exponent tuple (zero if absent).
  FieldElem coeff(const Monomial& exponents) const;

  FieldElem evaluate(const std::array<FieldElem, kNumVars>& point) const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const FieldElem& s);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  void add_term(const Monomial& exponents, const FieldElem& coeff);

  FieldSpec spec_;
  std::map<Monomial, FieldElem> terms_;
};

/// The nine quartic monomials X1..X9 spanning every product of two
/// quadratic forms in (x1,x2) and (y1,y2):
///   X1=x1^2 y1^2, X2=x2^2 y2^2, X3=x1^2 y2^2, X4=x2^2 y1^2,
///   X5=x1 x2 y1 y2, X6=x1^2 y1 y2, X7=x1 x2 y1^2, X8=x1 x2 y2^2,
///   X9=x2^2 y1 y2.
const std::array<Monomial, 9>& x_basis_monomials();

/// The eight trilinear monomials Z1..Z8 = x_i y_j z_k.
const std::array<Monomial, 8>& z_basis_monomials();

/// The e- and f-coordinates of x^2 y^2 - (xy)^2 as formal polynomials in
/// x1,x2,y1,y2. Both are zero exactly when A is endo-commutative.
std::pair<MultiPoly, MultiPoly> ec_defect(const StructureMatrix& A);

/// Unique coordinates of p in the X1..X9 monomial basis.
/// Throws DomainError if a term of p lies outside the span.
std::array<FieldElem, 9> coeffs_in_x_basis(const MultiPoly& p);

enum class MonomialSystem { x_basis, z_basis };

/// Rank of the evaluation matrix of the monomial system: rows are all
/// points of K^4 (X system) or K^6 (Z system) for finite K, or a fixed
/// grid {-2,-1,0,1,2,1/2}^n over Q. Requires q >= 3 for the X system.
unsigned independence_rank(MonomialSystem system, const FieldSpec& spec);

}  // namespace curled2

#endif
