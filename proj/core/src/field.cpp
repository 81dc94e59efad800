#include "curled2/field.hpp"

#include <array>
#include <cctype>
#include <utility>

namespace curled2 {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

constexpr unsigned kMaxPrime = 97;

// F4 as bit pairs c0 + c1*w with w^2 = w + 1; codes 0,1,2(=w),3(=w1).
constexpr std::array<std::array<std::uint8_t, 4>, 4> kGf4Mul = {{
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
}};
constexpr std::array<std::uint8_t, 4> kGf4Inv = {0, 1, 3, 2};

const char* gf4_token(std::uint32_t code) {
  static constexpr const char* kTokens[4] = {"0", "1", "w", "w1"};
  return kTokens[code];
}

[[noreturn]] void throw_mismatch() {
  throw DomainError("field elements of different specs cannot be combined");
}

void require_same_spec(const FieldElem& a, const FieldElem& b) {
  if (!(a.spec() == b.spec())) throw_mismatch();
}

// Modular inverse by extended Euclid; m prime, 0 < a < m.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t m) {
  long long t = 0, new_t = 1;
  long long r = m, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += m;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(unsigned p) {
  if (!is_prime(p))
    throw ParseError("not a prime modulus: " + std::to_string(p));
  if (p > kMaxPrime)
    throw ParseError("prime fields are supported up to F97, got F" +
                     std::to_string(p));
  return FieldSpec(FieldKind::prime, p);
}

FieldSpec FieldSpec::gf4() { return FieldSpec(FieldKind::gf4, 0); }

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::rationals, 0); }

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() >= 2 && text.front() == 'F') {
    unsigned value = 0;
    for (char ch : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("bad field name: " + std::string(text));
      value = value * 10 + static_cast<unsigned>(ch - '0');
      if (value > 100000) throw ParseError("bad field name: " + std::string(text));
    }
    if (value == 4) return gf4();
    if (!is_prime(value) || value > kMaxPrime)
      throw ParseError("unsupported field: " + std::string(text) +
                       " (expected Fp with p prime <= 97, F4 or Q)");
    return FieldSpec(FieldKind::prime, value);
  }
  throw ParseError("bad field name: " + std::string(text) +
                   " (expected Fp, F4 or Q)");
}

unsigned FieldSpec::characteristic() const noexcept {
  switch (kind_) {
    case FieldKind::prime: return p_;
    case FieldKind::gf4: return 2;
    case FieldKind::rationals: return 0;
  }
  return 0;
}

unsigned FieldSpec::order() const {
  switch (kind_) {
    case FieldKind::prime: return p_;
    case FieldKind::gf4: return 4;
    case FieldKind::rationals:
      throw DomainError("Q is an infinite field");
  }
  return 0;
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::prime: return "F" + std::to_string(p_);
    case FieldKind::gf4: return "F4";
    case FieldKind::rationals: return "Q";
  }
  return {};
}

FieldElem::FieldElem(const FieldSpec& spec, mpq_class value)
    : spec_(spec), rat_(std::make_unique<mpq_class>(std::move(value))) {
  rat_->canonicalize();
}

FieldElem::FieldElem(const FieldElem& other)
    : spec_(other.spec_), rep_(other.rep_) {
  if (other.rat_) rat_ = std::make_unique<mpq_class>(*other.rat_);
}

FieldElem& FieldElem::operator=(const FieldElem& other) {
  if (this != &other) {
    spec_ = other.spec_;
    rep_ = other.rep_;
    rat_ = other.rat_ ? std::make_unique<mpq_class>(*other.rat_) : nullptr;
  }
  return *this;
}

FieldElem FieldElem::zero(const FieldSpec& spec) { return of_int(spec, 0); }

FieldElem FieldElem::one(const FieldSpec& spec) { return of_int(spec, 1); }

FieldElem FieldElem::of_int(const FieldSpec& spec, long long value) {
  switch (spec.kind()) {
    case FieldKind::prime: {
      long long p = spec.order();
      long long r = value % p;
      if (r < 0) r += p;
      return FieldElem(spec, static_cast<std::uint32_t>(r));
    }
    case FieldKind::gf4: {
      long long r = value % 2;
      if (r < 0) r += 2;
      return FieldElem(spec, static_cast<std::uint32_t>(r));
    }
    case FieldKind::rationals:
      return FieldElem(spec, mpq_class(static_cast<long>(value)));
  }
  throw DomainError("bad field spec");
}

FieldElem FieldElem::parse(const FieldSpec& spec, std::string_view text) {
  if (text.empty()) throw ParseError("empty field element");
  switch (spec.kind()) {
    case FieldKind::prime: {
      bool negative = text.front() == '-';
      std::string_view digits = negative ? text.substr(1) : text;
      if (digits.empty()) throw ParseError("bad element: " + std::string(text));
      std::uint64_t p = spec.order();
      std::uint64_t r = 0;
      for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError("bad element: " + std::string(text));
        r = (r * 10 + static_cast<std::uint64_t>(ch - '0')) % p;
      }
      if (negative && r != 0) r = p - r;
      return FieldElem(spec, static_cast<std::uint32_t>(r));
    }
    case FieldKind::gf4: {
      for (std::uint32_t code = 0; code < 4; ++code)
        if (text == gf4_token(code)) return FieldElem(spec, code);
      throw ParseError("bad F4 element: " + std::string(text) +
                       " (expected 0, 1, w or w1)");
    }
    case FieldKind::rationals: {
      // strict shape: -?digits(/digits)?
      std::size_t i = text.front() == '-' ? 1 : 0;
      std::size_t slash = std::string_view::npos;
      if (i >= text.size()) throw ParseError("bad rational: " + std::string(text));
      for (std::size_t j = i; j < text.size(); ++j) {
        char ch = text[j];
        if (ch == '/') {
          if (slash != std::string_view::npos || j == i || j + 1 == text.size())
            throw ParseError("bad rational: " + std::string(text));
          slash = j;
        } else if (!std::isdigit(static_cast<unsigned char>(ch))) {
          throw ParseError("bad rational: " + std::string(text));
        }
      }
      mpq_class value(std::string(text), 10);
      if (value.get_den() == 0)
        throw ParseError("zero denominator: " + std::string(text));
      return FieldElem(spec, std::move(value));
    }
  }
  throw DomainError("bad field spec");
}

bool FieldElem::is_zero() const {
  return rat_ ? sgn(*rat_) == 0 : rep_ == 0;
}

bool FieldElem::is_one() const {
  return rat_ ? *rat_ == 1 : rep_ == 1;
}

std::string FieldElem::str() const {
  switch (spec_.kind()) {
    case FieldKind::prime: return std::to_string(rep_);
    case FieldKind::gf4: return gf4_token(rep_);
    case FieldKind::rationals: return rat_->get_str();
  }
  return {};
}

std::uint32_t FieldElem::finite_rep() const {
  if (!spec_.finite()) throw DomainError("finite_rep on a rational");
  return rep_;
}

const mpq_class& FieldElem::rational_rep() const {
  if (!rat_) throw DomainError("rational_rep on a finite field element");
  return *rat_;
}

FieldElem FieldElem::operator-() const {
  switch (spec_.kind()) {
    case FieldKind::prime:
      return FieldElem(spec_, rep_ == 0 ? 0 : spec_.order() - rep_);
    case FieldKind::gf4:
      return *this;  // characteristic 2
    case FieldKind::rationals:
      return FieldElem(spec_, mpq_class(-*rat_));
  }
  throw DomainError("bad field spec");
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  switch (spec_.kind()) {
    case FieldKind::prime:
      return FieldElem(spec_, mod_inverse(rep_, spec_.order()));
    case FieldKind::gf4:
      return FieldElem(spec_, kGf4Inv[rep_]);
    case FieldKind::rationals:
      return FieldElem(spec_, mpq_class(mpq_class(1) / *rat_));
  }
  throw DomainError("bad field spec");
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same_spec(a, b);
  switch (a.spec_.kind()) {
    case FieldKind::prime: {
      std::uint32_t s = a.rep_ + b.rep_;
      std::uint32_t p = a.spec_.order();
      return FieldElem(a.spec_, s >= p ? s - p : s);
    }
    case FieldKind::gf4:
      return FieldElem(a.spec_, a.rep_ ^ b.rep_);
    case FieldKind::rationals:
      return FieldElem(a.spec_, mpq_class(*a.rat_ + *b.rat_));
  }
  throw DomainError("bad field spec");
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same_spec(a, b);
  switch (a.spec_.kind()) {
    case FieldKind::prime: {
      std::uint32_t p = a.spec_.order();
      return FieldElem(a.spec_, a.rep_ >= b.rep_ ? a.rep_ - b.rep_
                                                 : a.rep_ + p - b.rep_);
    }
    case FieldKind::gf4:
      return FieldElem(a.spec_, a.rep_ ^ b.rep_);
    case FieldKind::rationals:
      return FieldElem(a.spec_, mpq_class(*a.rat_ - *b.rat_));
  }
  throw DomainError("bad field spec");
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same_spec(a, b);
  switch (a.spec_.kind()) {
    case FieldKind::prime: {
      std::uint64_t m = std::uint64_t(a.rep_) * b.rep_;
      return FieldElem(a.spec_,
                       static_cast<std::uint32_t>(m % a.spec_.order()));
    }
    case FieldKind::gf4:
      return FieldElem(a.spec_, kGf4Mul[a.rep_][b.rep_]);
    case FieldKind::rationals:
      return FieldElem(a.spec_, mpq_class(*a.rat_ * *b.rat_));
  }
  throw DomainError("bad field spec");
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  require_same_spec(a, b);
  return a * b.inverse();
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (!(a.spec_ == b.spec_)) return false;
  return a.rat_ ? *a.rat_ == *b.rat_ : a.rep_ == b.rep_;
}

bool operator<(const FieldElem& a, const FieldElem& b) {
  require_same_spec(a, b);
  return a.rat_ ? *a.rat_ < *b.rat_ : a.rep_ < b.rep_;
}

FieldElem pow(const FieldElem& x, unsigned long long n) {
  FieldElem result = FieldElem::one(x.spec());
  FieldElem base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::vector<FieldElem> elements(const FieldSpec& spec) {
  if (!spec.finite())
    throw DomainError("cannot enumerate the elements of Q (infinite field)");
  std::vector<FieldElem> out;
  unsigned q = spec.order();
  out.reserve(q);
  if (spec.kind() == FieldKind::gf4) {
    for (std::uint32_t code = 0; code < 4; ++code)
      out.push_back(FieldElem::parse(spec, gf4_token(code)));
  } else {
    for (unsigned r = 0; r < q; ++r)
      out.push_back(FieldElem::of_int(spec, r));
  }
  return out;
}

}  // namespace curled2
