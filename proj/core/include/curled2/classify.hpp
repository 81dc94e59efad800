#ifndef CURLED2_CLASSIFY_HPP
#define CURLED2_CLASSIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curled2/algebra.hpp"
#include "curled2/field.hpp"

namespace curled2 {

/// Isomorphism class of an endo-commutative curled algebra. Public results
/// are C0 (zero algebra), C1 (ef = e = -fe) or C2(a) (e^2 = e, ef = a f,
/// fe = (1-a) f). C3(a) and C4(a) are internal aliases of C2(1-a) that
/// appear only in intermediate bookkeeping.
class CanonicalLabel {
 public:
  enum class Tag { c0, c1, c2, c3, c4 };

  static CanonicalLabel c0(const FieldSpec& spec);
  static CanonicalLabel c1(const FieldSpec& spec);
  static CanonicalLabel c2(FieldElem a);
  static CanonicalLabel c3(FieldElem a);
  static CanonicalLabel c4(FieldElem a);
  /// Parses "C0", "C1" or "C2(<elem>)".
  static CanonicalLabel parse(const FieldSpec& spec, std::string_view text);

  Tag tag() const { return tag_; }
  const FieldSpec& spec() const { return spec_; }
  /// Parameter of C2/C3/C4 labels.
  const FieldElem& param() const;
  bool is_public() const {
    return tag_ == Tag::c0 || tag_ == Tag::c1 || tag_ == Tag::c2;
  }
  /// Resolves the aliases: C3(a) -> C2(1-a), C4(a) -> C2(1-a).
  CanonicalLabel resolved() const;

  std::string str() const;  // "C0", "C1", "C2(<elem>)"
  friend bool operator==(const CanonicalLabel&, const CanonicalLabel&);
  friend bool operator!=(const CanonicalLabel& a, const CanonicalLabel& b) {
    return !(a == b);
  }

 private:
  CanonicalLabel(Tag tag, const FieldSpec& spec, std::optional<FieldElem> par);
  Tag tag_;
  FieldSpec spec_;
  std::optional<FieldElem> param_;
};

/// The exact canonical structure matrix of a label:
/// C0 -> zero, C1 -> rows (0,0),(0,0),(1,0),(-1,0),
/// C2(a) -> rows (1,0),(0,0),(0,a),(0,1-a). Aliases expand to their own
/// defining matrices.
StructureMatrix canonical_matrix(const CanonicalLabel& label);
StructureMatrix canonical_matrix(const CanonicalLabel& label,
                                 const FieldSpec& spec);

struct Classification {
  CanonicalLabel label;
  Transform2 witness;  ///< transform(A, witness) == canonical_matrix(label)
};

/// Classifies an endo-commutative curled algebra over a field other than
/// F2 and returns its public label together with an explicit basis-change
/// witness, re-verified before returning. Throws UnsupportedFieldError for
/// F2 and PredicateError when A is not endo-commutative or not curled.
Classification classify(const StructureMatrix& A);

/// Whether two labels name the same isomorphism class (aliases resolved;
/// C2(a) matches C2(a') only for a = a'). Labels must share the spec.
bool labels_isomorphic(const CanonicalLabel& lhs, const CanonicalLabel& rhs);

enum class SpecialKind { zeropotent, commutative, anticommutative, associative };

/// The classes of endo-commutative curled algebras with the given property:
/// zeropotent and anticommutative -> {C0, C1};
/// commutative -> {C0, C1} in characteristic 2, else {C0, C2(1/2)};
/// associative -> {C0, C2(0), C2(1)}. F2 is rejected.
std::vector<CanonicalLabel> special_classes(SpecialKind kind,
                                            const FieldSpec& spec);

}  // namespace curled2

#endif
