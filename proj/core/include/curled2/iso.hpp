#ifndef CURLED2_ISO_HPP
#define CURLED2_ISO_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "curled2/algebra.hpp"
#include "curled2/field.hpp"

namespace curled2 {

/// Row-major 4x4 matrix of field elements.
using Mat4 = std::array<FieldElem, 16>;

/// The lift of X = (a b / c d) to GL4:
///
///   ( a^2 b^2 ab ab )
///   ( c^2 d^2 cd cd )
///   ( ac  bd  ad bc )
///   ( ac  bd  bc ad )
///
/// It is multiplicative with det(tilde(X)) = det(X)^4, so
/// tilde(X)^-1 = tilde(X^-1).
Mat4 tilde(const Transform2& X);

/// Exact determinant of a 4x4 matrix.
FieldElem det4(const Mat4& m);

Mat4 mat4_mul(const Mat4& lhs, const Mat4& rhs);

/// The structure matrix of the isomorphic copy of A under the basis change
/// X: tilde(X)^-1 * A * X. transform(A, identity) == A and
/// transform(transform(A, X), Y) == transform(A, X*Y).
StructureMatrix transform(const StructureMatrix& A, const Transform2& X);

/// Whether X witnesses A ~ A_prime, i.e. tilde(X) * A_prime == A * X.
bool is_equiv_under(const StructureMatrix& A, const StructureMatrix& A_prime,
                    const Transform2& X);

/// All (q^2-1)(q^2-q) invertible 2x2 matrices over a finite field, ordered
/// lexicographically on (x,y,z,w) by element order.
std::vector<Transform2> gl2_elements(const FieldSpec& spec);

enum class WitnessSearch {
  deterministic,  ///< full-order scan, first witness in scan order
  parallel        ///< partitioned scan, first hit wins (any valid witness)
};

/// Exhaustive isomorphism search over GL2 of a finite field. Returns the
/// first witness in scan order (deterministic mode) or none; none is a
/// proof of non-isomorphism. Rank mismatch short-circuits the scan.
std::optional<Transform2> find_isomorphism(
    const StructureMatrix& A, const StructureMatrix& A_prime,
    WitnessSearch mode = WitnessSearch::deterministic);

/// Same search against a caller-enumerated candidate list (kept in scan
/// order), avoiding re-enumeration of GL2 in tight loops.
std::optional<Transform2> find_isomorphism_in(
    std::span<const Transform2> candidates, const StructureMatrix& A,
    const StructureMatrix& A_prime);

/// Rank (0, 1 or 2) of the 4x2 structure matrix; an isomorphism invariant.
int rank(const StructureMatrix& A);

}  // namespace curled2

#endif
