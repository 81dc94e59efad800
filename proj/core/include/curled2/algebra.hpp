#ifndef CURLED2_ALGEBRA_HPP
#define CURLED2_ALGEBRA_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "curled2/field.hpp"

namespace curled2 {

/// The 4x2 matrix of structure constants of a two-dimensional algebra with
/// basis {e, f}:
///
///   e^2 = a1 e + b1 f
///   f^2 = a2 e + b2 f
///   ef  = a3 e + b3 f
///   fe  = a4 e + b4 f
///
/// The algebra is determined by this matrix, so predicates and
/// transformations take the matrix as the algebra.
class StructureMatrix {
 public:
  /// Entries in row-major order a1,b1,a2,b2,a3,b3,a4,b4; all must share spec.
  StructureMatrix(const FieldSpec& spec, std::array<FieldElem, 8> entries);
  static StructureMatrix zero(const FieldSpec& spec);
  /// Parses "[[a1,b1],[a2,b2],[a3,b3],[a4,b4]]" or a C-form literal
  /// "C(a,b,c,d;eps,delta)".
  static StructureMatrix parse(const FieldSpec& spec, std::string_view text);

  const FieldSpec& spec() const noexcept { return spec_; }
  const FieldElem& a1() const { return entries_[0]; }
  const FieldElem& b1() const { return entries_[1]; }
  const FieldElem& a2() const { return entries_[2]; }
  const FieldElem& b2() const { return entries_[3]; }
  const FieldElem& a3() const { return entries_[4]; }
  const FieldElem& b3() const { return entries_[5]; }
  const FieldElem& a4() const { return entries_[6]; }
  const FieldElem& b4() const { return entries_[7]; }
  /// row 0..3 (e^2, f^2, ef, fe), col 0..1 (e-, f-coefficient).
  const FieldElem& entry(std::size_t row, std::size_t col) const {
    return entries_[2 * row + col];
  }

  /// Canonical literal "[[a1,b1],[a2,b2],[a3,b3],[a4,b4]]" (no spaces).
  std::string str() const;

  friend bool operator==(const StructureMatrix& a, const StructureMatrix& b);
  friend bool operator!=(const StructureMatrix& a, const StructureMatrix& b) {
    return !(a == b);
  }
  /// Entrywise lexicographic order; deterministic class representatives.
  friend bool operator<(const StructureMatrix& a, const StructureMatrix& b);

 private:
  FieldSpec spec_;
  std::array<FieldElem, 8> entries_;
};

/// Element x = x1 e + x2 f in coordinates.
struct AlgebraElement {
  FieldElem x1, x2;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.x1 == b.x1 && a.x2 == b.x2;
  }
  bool is_zero() const { return x1.is_zero() && x2.is_zero(); }
  std::string str() const;
};

/// Curled normal form C(a,b,c,d;eps,delta): e^2 = eps*e, f^2 = delta*f,
/// ef = a e + b f, fe = c e + d f, with eps, delta in {0,1}.
class CFormParams {
 public:
  CFormParams(FieldElem a, FieldElem b, FieldElem c, FieldElem d, bool eps,
              bool delta);
  static CFormParams parse(const FieldSpec& spec, std::string_view text);

  const FieldSpec& spec() const noexcept { return a_.spec(); }
  const FieldElem& a() const { return a_; }
  const FieldElem& b() const { return b_; }
  const FieldElem& c() const { return c_; }
  const FieldElem& d() const { return d_; }
  bool eps() const { return eps_; }
  bool delta() const { return delta_; }

  StructureMatrix matrix() const;
  /// Canonical literal "C(a,b,c,d;eps,delta)" (no spaces).
  std::string str() const;

  friend bool operator==(const CFormParams&, const CFormParams&);
  friend bool operator<(const CFormParams& a, const CFormParams& b);

 private:
  FieldElem a_, b_, c_, d_;
  bool eps_, delta_;
};

/// An invertible 2x2 basis-change matrix (x y / z w).
class Transform2 {
 public:
  /// Throws DomainError if the determinant vanishes.
  Transform2(FieldElem x, FieldElem y, FieldElem z, FieldElem w);
  static Transform2 identity(const FieldSpec& spec);
  /// Parses "[[x,y],[z,w]]".
  static Transform2 parse(const FieldSpec& spec, std::string_view text);

  const FieldSpec& spec() const noexcept { return x_.spec(); }
  const FieldElem& x() const { return x_; }
  const FieldElem& y() const { return y_; }
  const FieldElem& z() const { return z_; }
  const FieldElem& w() const { return w_; }

  FieldElem det() const;
  Transform2 inverse() const;
  friend Transform2 operator*(const Transform2& lhs, const Transform2& rhs);

  std::string str() const;
  friend bool operator==(const Transform2&, const Transform2&);

 private:
  FieldElem x_, y_, z_, w_;
};

/// Product xy in the algebra A: bilinear extension of the basis table.
AlgebraElement multiply(const StructureMatrix& A, const AlgebraElement& x,
                        const AlgebraElement& y);
AlgebraElement square(const StructureMatrix& A, const AlgebraElement& x);

enum class EcMethod {
  criterion,      ///< polynomial identities in the structure constants
  formal_defect,  ///< formal expansion of x^2 y^2 - (xy)^2 vanishes
  pointwise       ///< all pairs over a finite field
};

/// x^2 y^2 = (xy)^2 for all x, y. The three methods agree; pointwise
/// requires a finite field.
bool is_endo_commutative(const StructureMatrix& A,
                         EcMethod method = EcMethod::criterion);

/// The structure-constant criterion for endo-commutativity of a general
/// matrix (eight polynomial identities in a1..b4).
bool ec_criterion_general(const StructureMatrix& A);
/// The reduced six-identity criterion for C-form matrices.
bool ec_criterion_cform(const CFormParams& p);

/// Every element's square is a scalar multiple of that element.
/// Finite fields: checked pointwise on all q^2 elements. Q: the basis
/// squares must be parallel to the basis vectors and the normalized C-form
/// must satisfy b+d = eps, a+c = delta. F2 is rejected.
bool is_curled(const StructureMatrix& A);

/// The two-equation curledness criterion b+d = eps, a+c = delta for C-form
/// parameters; agrees with the pointwise definition away from F2.
bool curled_criterion_cform(const CFormParams& p);

/// Endo-commutative and curled, decided by the combined eight-equation
/// criterion on C-form parameters.
bool is_ec_curled(const CFormParams& p);

bool is_commutative(const StructureMatrix& A);     // a3=a4 and b3=b4
bool is_anticommutative(const StructureMatrix& A); // square map is additive
bool is_zeropotent(const StructureMatrix& A);      // x^2 = 0 for all x
bool is_associative(const StructureMatrix& A);     // all 8 basis triples

/// Solves u e = e u = e, u f = f u = f for u = alpha e + beta f exactly.
std::optional<AlgebraElement> find_unit(const StructureMatrix& A);

/// Rescales the basis of a curled algebra so that e^2 = eps e and
/// f^2 = delta f with eps, delta in {0,1}. Returns the C-form parameters
/// and the diagonal witness X with transform(A, X) == params.matrix().
/// Throws PredicateError if A is not curled.
std::pair<CFormParams, Transform2> normalize_curled(const StructureMatrix& A);

}  // namespace curled2

#endif
