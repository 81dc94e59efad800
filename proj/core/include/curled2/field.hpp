#ifndef CURLED2_FIELD_HPP
#define CURLED2_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "curled2/errors.hpp"

namespace curled2 {

enum class FieldKind : std::uint8_t { prime, gf4, rationals };

/// Descriptor of a supported base field: F_p (p prime, p <= 97), the
/// four-element field F4 = F2[w]/(w^2+w+1), or the exact rationals Q.
class FieldSpec {
 public:
  static FieldSpec prime(unsigned p);
  static FieldSpec gf4();
  static FieldSpec rationals();

  /// Parses "Fp" (p prime), "F4" or "Q".
  static FieldSpec parse(std::string_view text);

  FieldKind kind() const noexcept { return kind_; }
  /// p for prime fields, 2 for F4, 0 for Q.
  unsigned characteristic() const noexcept;
  bool finite() const noexcept { return kind_ != FieldKind::rationals; }
  /// Number of elements q; throws DomainError for Q.
  unsigned order() const;
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, unsigned p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  unsigned p_;  // prime modulus, 0 for gf4/rationals
};

/// One exact field element. Immutable value type; all arithmetic is exact
/// and results are kept in canonical form (reduced residue, reduced
/// fraction with positive denominator). Elements of different specs never
/// mix; doing so throws DomainError.
class FieldElem {
 public:
  static FieldElem zero(const FieldSpec& spec);
  static FieldElem one(const FieldSpec& spec);
  /// Embeds a machine integer: residue mod p (mod 2 for F4), exact for Q.
  static FieldElem of_int(const FieldSpec& spec, long long value);
  /// Parses the element text format: decimal residue for F_p (negative
  /// accepted, reduced), one of "0","1","w","w1" for F4, "n" or "n/d" for Q.
  static FieldElem parse(const FieldSpec& spec, std::string_view text);

  FieldElem(const FieldElem& other);
  FieldElem(FieldElem&&) noexcept = default;
  FieldElem& operator=(const FieldElem& other);
  FieldElem& operator=(FieldElem&&) noexcept = default;

  const FieldSpec& spec() const noexcept { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical text form; parse(spec, str()) round-trips exactly.
  std::string str() const;

  FieldElem operator-() const;
  FieldElem inverse() const;  // throws DomainError on zero

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) {
    return !(a == b);
  }
  /// Total order within one spec (residue order; F4 as 0,1,w,w1; Q by value).
  /// Used for deterministic enumeration and representatives.
  friend bool operator<(const FieldElem& a, const FieldElem& b);

  /// Canonical code of a finite element: residue, or 0..3 for F4 (0,1,w,w1).
  std::uint32_t finite_rep() const;
  const mpq_class& rational_rep() const;

 private:
  FieldElem(const FieldSpec& spec, std::uint32_t rep)
      : spec_(spec), rep_(rep) {}
  FieldElem(const FieldSpec& spec, mpq_class value);

  FieldSpec spec_;
  std::uint32_t rep_ = 0;            // finite fields
  std::unique_ptr<mpq_class> rat_;   // rationals only
};

/// x^n by repeated squaring (n >= 0).
FieldElem pow(const FieldElem& x, unsigned long long n);

/// All q elements of a finite field in canonical order
/// (0,1,...,p-1; for F4: 0,1,w,w1). Throws DomainError for Q.
std::vector<FieldElem> elements(const FieldSpec& spec);

}  // namespace curled2

#endif
