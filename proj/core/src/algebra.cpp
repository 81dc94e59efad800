#include "curled2/algebra.hpp"

#include <cassert>

#include "curled2/poly.hpp"
#include "detail_parse.hpp"

namespace curled2 {

namespace {

void require_spec(const FieldSpec& spec, const FieldElem& e) {
  if (!(e.spec() == spec))
    throw DomainError("mixed field specs in one structure");
}

[[noreturn]] void reject_f2(const char* what) {
  throw UnsupportedFieldError(std::string(what) +
                              " is not defined over F2 (base field must "
                              "have more than two elements)");
}

bool is_f2(const FieldSpec& spec) {
  return spec.kind() == FieldKind::prime && spec.order() == 2;
}

// C-form shape: a1,b2 in {0,1} and b1 = a2 = 0.
bool cform_shaped(const StructureMatrix& A) {
  return A.b1().is_zero() && A.a2().is_zero() &&
         (A.a1().is_zero() || A.a1().is_one()) &&
         (A.b2().is_zero() || A.b2().is_one());
}

CFormParams cform_of(const StructureMatrix& A) {
  assert(cform_shaped(A));
  return CFormParams(A.a3(), A.b3(), A.a4(), A.b4(), A.a1().is_one(),
                     A.b2().is_one());
}

}  // namespace

StructureMatrix::StructureMatrix(const FieldSpec& spec,
                                 std::array<FieldElem, 8> entries)
    : spec_(spec), entries_(std::move(entries)) {
  for (const FieldElem& e : entries_) require_spec(spec_, e);
}

StructureMatrix StructureMatrix::zero(const FieldSpec& spec) {
  FieldElem z = FieldElem::zero(spec);
  return StructureMatrix(spec, {z, z, z, z, z, z, z, z});
}

StructureMatrix StructureMatrix::parse(const FieldSpec& spec,
                                       std::string_view text) {
  detail::Cursor cur(text);
  if (cur.try_consume('C')) {
    cur.expect('(');
    FieldElem a = FieldElem::parse(spec, cur.token());
    cur.expect(',');
    FieldElem b = FieldElem::parse(spec, cur.token());
    cur.expect(',');
    FieldElem c = FieldElem::parse(spec, cur.token());
    cur.expect(',');
    FieldElem d = FieldElem::parse(spec, cur.token());
    cur.expect(';');
    std::string_view eps_tok = cur.token();
    cur.expect(',');
    std::string_view delta_tok = cur.token();
    cur.expect(')');
    cur.expect_end();
    auto flag = [&](std::string_view tok) {
      if (tok == "0") return false;
      if (tok == "1") return true;
      throw ParseError("C-form eps/delta must be 0 or 1, got \"" +
                       std::string(tok) + "\"");
    };
    return CFormParams(std::move(a), std::move(b), std::move(c), std::move(d),
                       flag(eps_tok), flag(delta_tok))
        .matrix();
  }
  auto tokens = detail::bracket_rows(cur, 4);
  cur.expect_end();
  std::array<FieldElem, 8> entries = {
      FieldElem::parse(spec, tokens[0]), FieldElem::parse(spec, tokens[1]),
      FieldElem::parse(spec, tokens[2]), FieldElem::parse(spec, tokens[3]),
      FieldElem::parse(spec, tokens[4]), FieldElem::parse(spec, tokens[5]),
      FieldElem::parse(spec, tokens[6]), FieldElem::parse(spec, tokens[7])};
  return StructureMatrix(spec, std::move(entries));
}

std::string StructureMatrix::str() const {
  std::string out = "[";
  for (std::size_t row = 0; row < 4; ++row) {
    if (row > 0) out += ',';
    out += '[';
    out += entry(row, 0).str();
    out += ',';
    out += entry(row, 1).str();
    out += ']';
  }
  out += ']';
  return out;
}

bool operator==(const StructureMatrix& a, const StructureMatrix& b) {
  if (!(a.spec_ == b.spec_)) return false;
  for (std::size_t i = 0; i < 8; ++i)
    if (a.entries_[i] != b.entries_[i]) return false;
  return true;
}

bool operator<(const StructureMatrix& a, const StructureMatrix& b) {
  for (std::size_t i = 0; i < 8; ++i) {
    if (a.entries_[i] < b.entries_[i]) return true;
    if (b.entries_[i] < a.entries_[i]) return false;
  }
  return false;
}

std::string AlgebraElement::str() const {
  return "(" + x1.str() + "," + x2.str() + ")";
}

CFormParams::CFormParams(FieldElem a, FieldElem b, FieldElem c, FieldElem d,
                         bool eps, bool delta)
    : a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      d_(std::move(d)),
      eps_(eps),
      delta_(delta) {
  require_spec(a_.spec(), b_);
  require_spec(a_.spec(), c_);
  require_spec(a_.spec(), d_);
}

CFormParams CFormParams::parse(const FieldSpec& spec, std::string_view text) {
  StructureMatrix m = StructureMatrix::parse(spec, text);
  if (!cform_shaped(m))
    throw ParseError("not a C-form literal: " + std::string(text));
  return cform_of(m);
}

StructureMatrix CFormParams::matrix() const {
  const FieldSpec& s = spec();
  FieldElem zero = FieldElem::zero(s);
  FieldElem eps_e = eps_ ? FieldElem::one(s) : zero;
  FieldElem delta_e = delta_ ? FieldElem::one(s) : zero;
  return StructureMatrix(s, {eps_e, zero, zero, delta_e, a_, b_, c_, d_});
}

std::string CFormParams::str() const {
  return "C(" + a_.str() + "," + b_.str() + "," + c_.str() + "," + d_.str() +
         ";" + (eps_ ? "1" : "0") + "," + (delta_ ? "1" : "0") + ")";
}

bool operator==(const CFormParams& a, const CFormParams& b) {
  return a.a_ == b.a_ && a.b_ == b.b_ && a.c_ == b.c_ && a.d_ == b.d_ &&
         a.eps_ == b.eps_ && a.delta_ == b.delta_;
}

bool operator<(const CFormParams& a, const CFormParams& b) {
  auto key = [](const CFormParams& p) {
    return std::array<int, 2>{p.eps_ ? 1 : 0, p.delta_ ? 1 : 0};
  };
  if (key(a) != key(b)) return key(a) < key(b);
  for (auto [x, y] : {std::pair{&a.a_, &b.a_}, std::pair{&a.b_, &b.b_},
                      std::pair{&a.c_, &b.c_}, std::pair{&a.d_, &b.d_}}) {
    if (*x < *y) return true;
    if (*y < *x) return false;
  }
  return false;
}

Transform2::Transform2(FieldElem x, FieldElem y, FieldElem z, FieldElem w)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), w_(std::move(w)) {
  require_spec(x_.spec(), y_);
  require_spec(x_.spec(), z_);
  require_spec(x_.spec(), w_);
  if (det().is_zero())
    throw DomainError("singular basis-change matrix " + str());
}

Transform2 Transform2::identity(const FieldSpec& spec) {
  FieldElem one = FieldElem::one(spec);
  FieldElem zero = FieldElem::zero(spec);
  return Transform2(one, zero, zero, one);
}

Transform2 Transform2::parse(const FieldSpec& spec, std::string_view text) {
  detail::Cursor cur(text);
  auto tokens = detail::bracket_rows(cur, 2);
  cur.expect_end();
  return Transform2(
      FieldElem::parse(spec, tokens[0]), FieldElem::parse(spec, tokens[1]),
      FieldElem::parse(spec, tokens[2]), FieldElem::parse(spec, tokens[3]));
}

FieldElem Transform2::det() const { return x_ * w_ - y_ * z_; }

Transform2 Transform2::inverse() const {
  FieldElem inv_det = det().inverse();
  return Transform2(w_ * inv_det, -(y_ * inv_det), -(z_ * inv_det),
                    x_ * inv_det);
}

Transform2 operator*(const Transform2& lhs, const Transform2& rhs) {
  return Transform2(lhs.x_ * rhs.x_ + lhs.y_ * rhs.z_,
                    lhs.x_ * rhs.y_ + lhs.y_ * rhs.w_,
                    lhs.z_ * rhs.x_ + lhs.w_ * rhs.z_,
                    lhs.z_ * rhs.y_ + lhs.w_ * rhs.w_);
}

std::string Transform2::str() const {
  return "[[" + x_.str() + "," + y_.str() + "],[" + z_.str() + "," + w_.str() +
         "]]";
}

bool operator==(const Transform2& a, const Transform2& b) {
  return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_ && a.w_ == b.w_;
}

AlgebraElement multiply(const StructureMatrix& A, const AlgebraElement& x,
                        const AlgebraElement& y) {
  require_spec(A.spec(), x.x1);
  require_spec(A.spec(), x.x2);
  require_spec(A.spec(), y.x1);
  require_spec(A.spec(), y.x2);
  FieldElem e_coord = x.x1 * y.x1 * A.a1() + x.x2 * y.x2 * A.a2() +
                      x.x1 * y.x2 * A.a3() + x.x2 * y.x1 * A.a4();
  FieldElem f_coord = x.x1 * y.x1 * A.b1() + x.x2 * y.x2 * A.b2() +
                      x.x1 * y.x2 * A.b3() + x.x2 * y.x1 * A.b4();
  return AlgebraElement{std::move(e_coord), std::move(f_coord)};
}

AlgebraElement square(const StructureMatrix& A, const AlgebraElement& x) {
  return multiply(A, x, x);
}

bool ec_criterion_general(const StructureMatrix& A) {
  const FieldElem &a1 = A.a1(), &b1 = A.b1(), &a2 = A.a2(), &b2 = A.b2(),
                  &a3 = A.a3(), &b3 = A.b3(), &a4 = A.a4(), &b4 = A.b4();
  // The eight identities equivalent to the X-basis coefficients of
  // x^2 y^2 - (xy)^2 vanishing (the two always-true ones dropped).
  std::array<std::pair<FieldElem, FieldElem>, 8> eqs = {{
      {a1 * a1 * a2 + b1 * a2 * b2 + a1 * b2 * a3 + b1 * a2 * a4,
       a1 * a3 * a3 + a2 * b3 * b3 + a3 * a3 * b3 + a3 * b3 * a4},
      {a1 * a1 * a2 + b1 * a2 * b2 + b1 * a2 * a3 + a1 * b2 * a4,
       a1 * a4 * a4 + a2 * b4 * b4 + a3 * a4 * b4 + a4 * a4 * b4},
      {a1 * a1 * a4 + b1 * a4 * a4 + b1 * a2 * b4 + a1 * a3 * b4,
       a1 * a1 * a3 + b1 * a2 * b3 + b1 * a3 * a3 + a1 * b3 * a4},
      {a2 * (a1 * a4 + a4 * b4 + b2 * b4), a2 * (a1 * a3 + b2 * b3 + a3 * b3)},
      {a1 * b1 * a2 + b1 * b2 * b2 + a1 * b2 * b3 + b1 * a2 * b4,
       b1 * a3 * a3 + b2 * b3 * b3 + a3 * b3 * b3 + a3 * b3 * b4},
      {a1 * b1 * a2 + b1 * b2 * b2 + b1 * a2 * b3 + a1 * b2 * b4,
       b1 * a4 * a4 + b2 * b4 * b4 + b3 * a4 * b4 + a4 * b4 * b4},
      {b1 * (a1 * a4 + a4 * b4 + b2 * b4), b1 * (a1 * a3 + b2 * b3 + a3 * b3)},
      {b1 * a2 * a4 + b2 * b3 * a4 + b2 * b2 * b4 + a2 * b4 * b4,
       b1 * a2 * a3 + b2 * b2 * b3 + a2 * b3 * b3 + b2 * a3 * b4},
  }};
  for (const auto& [lhs, rhs] : eqs)
    if (lhs != rhs) return false;
  return true;
}

bool ec_criterion_cform(const CFormParams& p) {
  const FieldSpec& s = p.spec();
  const FieldElem &a = p.a(), &b = p.b(), &c = p.c(), &d = p.d();
  FieldElem eps = p.eps() ? FieldElem::one(s) : FieldElem::zero(s);
  FieldElem delta = p.delta() ? FieldElem::one(s) : FieldElem::zero(s);
  std::array<std::pair<FieldElem, FieldElem>, 6> eqs = {{
      {eps * delta * a, eps * a * a + a * a * b + a * b * c},
      {eps * delta * c, eps * c * c + a * c * d + c * c * d},
      {eps * c + eps * a * d, eps * a + eps * b * c},
      {eps * delta * b, delta * b * b + a * b * b + a * b * d},
      {eps * delta * d, delta * d * d + b * c * d + c * d * d},
      {delta * b * c + delta * d, delta * b + delta * a * d},
  }};
  for (const auto& [lhs, rhs] : eqs)
    if (lhs != rhs) return false;
  return true;
}

namespace {

bool pointwise_endo_commutative(const StructureMatrix& A) {
  std::vector<FieldElem> elems = elements(A.spec());
  std::vector<AlgebraElement> points;
  points.reserve(elems.size() * elems.size());
  for (const FieldElem& u : elems)
    for (const FieldElem& v : elems) points.push_back(AlgebraElement{u, v});
  std::vector<AlgebraElement> squares;
  squares.reserve(points.size());
  for (const AlgebraElement& x : points) squares.push_back(square(A, x));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      AlgebraElement xy = multiply(A, points[i], points[j]);
      if (!(square(A, xy) == multiply(A, squares[i], squares[j])))
        return false;
    }
  return true;
}

bool pointwise_curled(const StructureMatrix& A) {
  std::vector<FieldElem> elems = elements(A.spec());
  for (const FieldElem& u : elems)
    for (const FieldElem& v : elems) {
      AlgebraElement x{u, v};
      AlgebraElement sq = square(A, x);
      // x^2 parallel to x: the 2x2 determinant of (x^2, x) vanishes.
      if (!(sq.x1 * x.x2 == sq.x2 * x.x1)) return false;
    }
  return true;
}

// C-form parameters and diagonal witness of a matrix whose basis squares
// are parallel to the basis vectors (b1 = a2 = 0). Does not check
// curledness of the result.
std::pair<CFormParams, Transform2> rescale_basis_squares(
    const StructureMatrix& A) {
  const FieldSpec& spec = A.spec();
  FieldElem one = FieldElem::one(spec);
  FieldElem zero = FieldElem::zero(spec);
  bool eps = !A.a1().is_zero();
  bool delta = !A.b2().is_zero();
  FieldElem s = eps ? A.a1() : one;
  FieldElem t = delta ? A.b2() : one;
  CFormParams params(A.a3() / t, A.b3() / s, A.a4() / t, A.b4() / s, eps,
                     delta);
  return {std::move(params), Transform2(s, zero, zero, t)};
}

bool curled_criterion(const CFormParams& p) {
  const FieldSpec& s = p.spec();
  FieldElem eps = p.eps() ? FieldElem::one(s) : FieldElem::zero(s);
  FieldElem delta = p.delta() ? FieldElem::one(s) : FieldElem::zero(s);
  return p.b() + p.d() == eps && p.a() + p.c() == delta;
}

}  // namespace

bool is_endo_commutative(const StructureMatrix& A, EcMethod method) {
  switch (method) {
    case EcMethod::criterion:
      if (cform_shaped(A)) return ec_criterion_cform(cform_of(A));
      return ec_criterion_general(A);
    case EcMethod::formal_defect: {
      auto [e_part, f_part] = ec_defect(A);
      return e_part.is_zero() && f_part.is_zero();
    }
    case EcMethod::pointwise:
      if (!A.spec().finite())
        throw DomainError(
            "pointwise endo-commutativity requires a finite field");
      return pointwise_endo_commutative(A);
  }
  throw DomainError("bad method");
}

bool is_curled(const StructureMatrix& A) {
  if (is_f2(A.spec())) reject_f2("curledness testing");
  if (A.spec().finite()) return pointwise_curled(A);
  // Q: e^2 must be parallel to e and f^2 to f, then the normalized C-form
  // must satisfy b+d = eps, a+c = delta.
  if (!A.b1().is_zero() || !A.a2().is_zero()) return false;
  return curled_criterion(rescale_basis_squares(A).first);
}

bool curled_criterion_cform(const CFormParams& p) {
  return curled_criterion(p);
}

bool is_ec_curled(const CFormParams& p) {
  return curled_criterion(p) && ec_criterion_cform(p);
}

bool is_commutative(const StructureMatrix& A) {
  return A.a3() == A.a4() && A.b3() == A.b4();
}

bool is_anticommutative(const StructureMatrix& A) {
  // The square map preserves addition iff xy + yx = 0 for all x, y:
  // 2 a1 = 2 b1 = 2 a2 = 2 b2 = 0 and a3 + a4 = b3 + b4 = 0.
  FieldElem two = FieldElem::of_int(A.spec(), 2);
  return (two * A.a1()).is_zero() && (two * A.b1()).is_zero() &&
         (two * A.a2()).is_zero() && (two * A.b2()).is_zero() &&
         (A.a3() + A.a4()).is_zero() && (A.b3() + A.b4()).is_zero();
}

bool is_zeropotent(const StructureMatrix& A) {
  return A.a1().is_zero() && A.b1().is_zero() && A.a2().is_zero() &&
         A.b2().is_zero() && (A.a3() + A.a4()).is_zero() &&
         (A.b3() + A.b4()).is_zero();
}

bool is_associative(const StructureMatrix& A) {
  const FieldSpec& spec = A.spec();
  AlgebraElement e{FieldElem::one(spec), FieldElem::zero(spec)};
  AlgebraElement f{FieldElem::zero(spec), FieldElem::one(spec)};
  std::array<AlgebraElement, 2> basis = {e, f};
  for (const AlgebraElement& u : basis)
    for (const AlgebraElement& v : basis)
      for (const AlgebraElement& w : basis)
        if (!(multiply(A, multiply(A, u, v), w) ==
              multiply(A, u, multiply(A, v, w))))
          return false;
  return true;
}

std::optional<AlgebraElement> find_unit(const StructureMatrix& A) {
  const FieldSpec& spec = A.spec();
  FieldElem zero = FieldElem::zero(spec);
  FieldElem one = FieldElem::one(spec);
  // u = alpha e + beta f with ue = eu = e and uf = fu = f gives eight
  // linear equations in (alpha, beta).
  struct Eq {
    FieldElem ca, cb, rhs;
  };
  std::array<Eq, 8> eqs = {{
      {A.a1(), A.a4(), one},   // (ue)_e
      {A.b1(), A.b4(), zero},  // (ue)_f
      {A.a1(), A.a3(), one},   // (eu)_e
      {A.b1(), A.b3(), zero},  // (eu)_f
      {A.a3(), A.a2(), zero},  // (uf)_e
      {A.b3(), A.b2(), one},   // (uf)_f
      {A.a4(), A.a2(), zero},  // (fu)_e
      {A.b4(), A.b2(), one},   // (fu)_f
  }};

  // Gaussian elimination on the 8x2 system; candidate then re-verified.
  std::optional<std::size_t> pivot_a;
  for (std::size_t i = 0; i < eqs.size(); ++i)
    if (!eqs[i].ca.is_zero()) {
      pivot_a = i;
      break;
    }
  if (pivot_a) {
    const Eq p = eqs[*pivot_a];
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (i == *pivot_a || eqs[i].ca.is_zero()) continue;
      FieldElem factor = eqs[i].ca / p.ca;
      eqs[i].ca = zero;
      eqs[i].cb = eqs[i].cb - factor * p.cb;
      eqs[i].rhs = eqs[i].rhs - factor * p.rhs;
    }
  }
  std::optional<std::size_t> pivot_b;
  for (std::size_t i = 0; i < eqs.size(); ++i)
    if (i != pivot_a && !eqs[i].cb.is_zero()) {
      pivot_b = i;
      break;
    }

  FieldElem beta = zero;
  if (pivot_b) beta = eqs[*pivot_b].rhs / eqs[*pivot_b].cb;
  FieldElem alpha = zero;
  if (pivot_a)
    alpha = (eqs[*pivot_a].rhs - eqs[*pivot_a].cb * beta) / eqs[*pivot_a].ca;

  AlgebraElement u{alpha, beta};
  AlgebraElement e{one, zero};
  AlgebraElement f{zero, one};
  bool ok = multiply(A, u, e) == e && multiply(A, e, u) == e &&
            multiply(A, u, f) == f && multiply(A, f, u) == f;
  if (!ok) return std::nullopt;
  return u;
}

std::pair<CFormParams, Transform2> normalize_curled(const StructureMatrix& A) {
  if (!is_curled(A))
    throw PredicateError("normalize_curled: the algebra " + A.str() +
                         " is not curled");
  return rescale_basis_squares(A);
}

}  // namespace curled2
