#include "curled2/classify.hpp"

#include "curled2/iso.hpp"
#include "detail_parse.hpp"

namespace curled2 {

namespace {

bool is_f2(const FieldSpec& spec) {
  return spec.kind() == FieldKind::prime && spec.order() == 2;
}

[[noreturn]] void reject_f2(const char* what) {
  throw UnsupportedFieldError(std::string(what) +
                              " requires a base field other than F2");
}

}  // namespace

CanonicalLabel::CanonicalLabel(Tag tag, const FieldSpec& spec,
                               std::optional<FieldElem> par)
    : tag_(tag), spec_(spec), param_(std::move(par)) {}

CanonicalLabel CanonicalLabel::c0(const FieldSpec& spec) {
  return CanonicalLabel(Tag::c0, spec, std::nullopt);
}
CanonicalLabel CanonicalLabel::c1(const FieldSpec& spec) {
  return CanonicalLabel(Tag::c1, spec, std::nullopt);
}
CanonicalLabel CanonicalLabel::c2(FieldElem a) {
  FieldSpec spec = a.spec();
  return CanonicalLabel(Tag::c2, spec, std::move(a));
}
CanonicalLabel CanonicalLabel::c3(FieldElem a) {
  FieldSpec spec = a.spec();
  return CanonicalLabel(Tag::c3, spec, std::move(a));
}
CanonicalLabel CanonicalLabel::c4(FieldElem a) {
  FieldSpec spec = a.spec();
  return CanonicalLabel(Tag::c4, spec, std::move(a));
}

CanonicalLabel CanonicalLabel::parse(const FieldSpec& spec,
                                     std::string_view text) {
  if (text == "C0") return c0(spec);
  if (text == "C1") return c1(spec);
  detail::Cursor cur(text);
  cur.expect('C');
  std::string_view digit = cur.token();
  if (digit != "2") throw ParseError("bad canonical label: " + std::string(text));
  cur.expect('(');
  FieldElem a = FieldElem::parse(spec, cur.token());
  cur.expect(')');
  cur.expect_end();
  return c2(std::move(a));
}

const FieldElem& CanonicalLabel::param() const {
  if (!param_) throw DomainError("label " + str() + " has no parameter");
  return *param_;
}

CanonicalLabel CanonicalLabel::resolved() const {
  if (tag_ == Tag::c3 || tag_ == Tag::c4)
    return c2(FieldElem::one(spec_) - *param_);
  return *this;
}

std::string CanonicalLabel::str() const {
  switch (tag_) {
    case Tag::c0: return "C0";
    case Tag::c1: return "C1";
    case Tag::c2: return "C2(" + param_->str() + ")";
    case Tag::c3: return "C3(" + param_->str() + ")";
    case Tag::c4: return "C4(" + param_->str() + ")";
  }
  return {};
}

bool operator==(const CanonicalLabel& a, const CanonicalLabel& b) {
  if (a.tag_ != b.tag_ || !(a.spec_ == b.spec_)) return false;
  if (a.param_.has_value() != b.param_.has_value()) return false;
  return !a.param_ || *a.param_ == *b.param_;
}

StructureMatrix canonical_matrix(const CanonicalLabel& label) {
  const FieldSpec& spec = label.spec();
  FieldElem zero = FieldElem::zero(spec);
  FieldElem one = FieldElem::one(spec);
  switch (label.tag()) {
    case CanonicalLabel::Tag::c0:
      return StructureMatrix::zero(spec);
    case CanonicalLabel::Tag::c1:
      return StructureMatrix(spec, {zero, zero, zero, zero, one, zero, -one,
                                    zero});
    case CanonicalLabel::Tag::c2: {
      const FieldElem& a = label.param();
      return StructureMatrix(spec, {one, zero, zero, zero, zero, a, zero,
                                    one - a});
    }
    case CanonicalLabel::Tag::c3: {
      const FieldElem& a = label.param();
      return StructureMatrix(spec, {zero, zero, zero, one, a, zero, one - a,
                                    zero});
    }
    case CanonicalLabel::Tag::c4: {
      const FieldElem& a = label.param();
      return StructureMatrix(spec,
                             {one, zero, zero, one, a, one - a, one - a, a});
    }
  }
  throw DomainError("bad label");
}

StructureMatrix canonical_matrix(const CanonicalLabel& label,
                                 const FieldSpec& spec) {
  if (!(label.spec() == spec))
    throw DomainError("canonical_matrix: label belongs to " +
                      label.spec().name() + ", not " + spec.name());
  return canonical_matrix(label);
}

Classification classify(const StructureMatrix& A) {
  const FieldSpec& spec = A.spec();
  if (is_f2(spec)) reject_f2("classification");
  if (!is_endo_commutative(A, EcMethod::criterion))
    throw PredicateError("classify: the algebra " + A.str() +
                         " is not endo-commutative");
  if (!is_curled(A))
    throw PredicateError("classify: the algebra " + A.str() +
                         " is not curled");

  auto [params, rescale] = normalize_curled(A);
  FieldElem zero = FieldElem::zero(spec);
  FieldElem one = FieldElem::one(spec);

  CanonicalLabel label = CanonicalLabel::c0(spec);
  Transform2 dispatch = Transform2::identity(spec);
  if (!params.eps() && !params.delta()) {
    // ef = a e + b f, fe = -a e - b f; the zero pair is the zero algebra,
    // every other member rescales onto ef = e = -fe.
    const FieldElem& a = params.a();
    const FieldElem& b = params.b();
    if (a.is_zero() && b.is_zero()) {
      label = CanonicalLabel::c0(spec);
    } else {
      label = CanonicalLabel::c1(spec);
      // X = (x -b / z a) with (x,z) = (1,0) when a != 0, else (0,1), which
      // satisfies X^t (a b)^t = det(X) (1 0)^t identically.
      dispatch = a.is_zero() ? Transform2(zero, -b, one, a)
                             : Transform2(one, -b, zero, a);
    }
  } else if (params.eps() && !params.delta()) {
    label = CanonicalLabel::c2(params.b());
  } else if (!params.eps() && params.delta()) {
    label = CanonicalLabel::c2(one - params.a());
    dispatch = Transform2(zero, one, one, zero);
  } else {
    label = CanonicalLabel::c2(one - params.a());
    dispatch = Transform2(one, one, one, zero);
  }

  Transform2 witness = rescale * dispatch;
  if (!(transform(A, witness) == canonical_matrix(label)))
    throw Error("internal: classification witness failed re-verification for " +
                A.str());
  return Classification{std::move(label), std::move(witness)};
}

bool labels_isomorphic(const CanonicalLabel& lhs, const CanonicalLabel& rhs) {
  if (!(lhs.spec() == rhs.spec()))
    throw DomainError("labels_isomorphic: labels over different fields");
  return lhs.resolved() == rhs.resolved();
}

std::vector<CanonicalLabel> special_classes(SpecialKind kind,
                                            const FieldSpec& spec) {
  if (is_f2(spec)) reject_f2("special_classes");
  FieldElem zero = FieldElem::zero(spec);
  FieldElem one = FieldElem::one(spec);
  switch (kind) {
    case SpecialKind::zeropotent:
    case SpecialKind::anticommutative:
      return {CanonicalLabel::c0(spec), CanonicalLabel::c1(spec)};
    case SpecialKind::commutative:
      if (spec.characteristic() == 2)
        return {CanonicalLabel::c0(spec), CanonicalLabel::c1(spec)};
      return {CanonicalLabel::c0(spec),
              CanonicalLabel::c2(FieldElem::of_int(spec, 2).inverse())};
    case SpecialKind::associative:
      return {CanonicalLabel::c0(spec), CanonicalLabel::c2(zero),
              CanonicalLabel::c2(one)};
  }
  throw DomainError("bad kind");
}

}  // namespace curled2
