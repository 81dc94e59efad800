#include "curled2/poly.hpp"

#include <algorithm>

namespace curled2 {

namespace {

constexpr Monomial kOne = {0, 0, 0, 0, 0, 0};

const char* var_name(std::size_t index) {
  static constexpr const char* kNames[kNumVars] = {"x1", "x2", "y1",
                                                   "y2", "z1", "z2"};
  return kNames[index];
}

void require_same_spec(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.spec() == b.spec()))
    throw DomainError("polynomials over different fields cannot be combined");
}

}  // namespace

MultiPoly MultiPoly::constant(FieldElem value) {
  MultiPoly p(value.spec());
  p.add_term(kOne, value);
  return p;
}

MultiPoly MultiPoly::var(const FieldSpec& spec, Var v) {
  Monomial m = kOne;
  m[static_cast<std::size_t>(v)] = 1;
  return monomial(FieldElem::one(spec), m);
}

MultiPoly MultiPoly::monomial(FieldElem coeff, const Monomial& exponents) {
  MultiPoly p(coeff.spec());
  p.add_term(exponents, coeff);
  return p;
}

FieldElem MultiPoly::coeff(const Monomial& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? FieldElem::zero(spec_) : it->second;
}

void MultiPoly::add_term(const Monomial& exponents, const FieldElem& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponents, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElem MultiPoly::evaluate(
    const std::array<FieldElem, kNumVars>& point) const {
  FieldElem acc = FieldElem::zero(spec_);
  for (const auto& [exponents, coeff] : terms_) {
    FieldElem term = coeff;
    for (std::size_t v = 0; v < kNumVars; ++v)
      for (std::uint8_t k = 0; k < exponents[v]; ++k) term = term * point[v];
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(spec_);
  for (const auto& [exponents, coeff] : terms_)
    out.terms_.emplace(exponents, -coeff);
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_spec(a, b);
  MultiPoly out = a;
  for (const auto& [exponents, coeff] : b.terms_)
    out.add_term(exponents, coeff);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  require_same_spec(a, b);
  MultiPoly out = a;
  for (const auto& [exponents, coeff] : b.terms_)
    out.add_term(exponents, -coeff);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_spec(a, b);
  MultiPoly out(a.spec_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Monomial exponents;
      for (std::size_t v = 0; v < kNumVars; ++v)
        exponents[v] = static_cast<std::uint8_t>(ea[v] + eb[v]);
      out.add_term(exponents, ca * cb);
    }
  return out;
}

MultiPoly operator*(const MultiPoly& a, const FieldElem& s) {
  MultiPoly out(a.spec_);
  for (const auto& [exponents, coeff] : a.terms_)
    out.add_term(exponents, coeff * s);
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.spec_ == b.spec_ && a.terms_ == b.terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exponents, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    bool constant = std::all_of(exponents.begin(), exponents.end(),
                                [](std::uint8_t e) { return e == 0; });
    std::string vars;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (exponents[v] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += var_name(v);
      if (exponents[v] > 1) vars += '^' + std::to_string(exponents[v]);
    }
    if (constant) {
      out += coeff.str();
    } else if (coeff.is_one()) {
      out += vars;
    } else {
      out += coeff.str() + '*' + vars;
    }
  }
  return out;
}

const std::array<Monomial, 9>& x_basis_monomials() {
  static const std::array<Monomial, 9> kMonomials = {{
      {2, 0, 2, 0, 0, 0},  // X1 = x1^2 y1^2
      {0, 2, 0, 2, 0, 0},  // X2 = x2^2 y2^2
      {2, 0, 0, 2, 0, 0},  // X3 = x1^2 y2^2
      {0, 2, 2, 0, 0, 0},  // X4 = x2^2 y1^2
      {1, 1, 1, 1, 0, 0},  // X5 = x1 x2 y1 y2
      {2, 0, 1, 1, 0, 0},  // X6 = x1^2 y1 y2
      {1, 1, 2, 0, 0, 0},  // X7 = x1 x2 y1^2
      {1, 1, 0, 2, 0, 0},  // X8 = x1 x2 y2^2
      {0, 2, 1, 1, 0, 0},  // X9 = x2^2 y1 y2
  }};
  return kMonomials;
}

const std::array<Monomial, 8>& z_basis_monomials() {
  static const std::array<Monomial, 8> kMonomials = {{
      {1, 0, 1, 0, 1, 0},  // Z1 = x1 y1 z1
      {1, 0, 1, 0, 0, 1},  // Z2 = x1 y1 z2
      {1, 0, 0, 1, 1, 0},  // Z3 = x1 y2 z1
      {1, 0, 0, 1, 0, 1},  // Z4 = x1 y2 z2
      {0, 1, 1, 0, 1, 0},  // Z5 = x2 y1 z1
      {0, 1, 1, 0, 0, 1},  // Z6 = x2 y1 z2
      {0, 1, 0, 1, 1, 0},  // Z7 = x2 y2 z1
      {0, 1, 0, 1, 0, 1},  // Z8 = x2 y2 z2
  }};
  return kMonomials;
}

namespace {

struct GenericPair {
  MultiPoly e, f;
};

// Bilinear product of two generic elements given the structure matrix,
// at the polynomial level: mirrors multiply() coefficientwise.
GenericPair poly_multiply(const StructureMatrix& A, const GenericPair& x,
                          const GenericPair& y) {
  MultiPoly e_coord = x.e * y.e * A.a1() + x.f * y.f * A.a2() +
                      x.e * y.f * A.a3() + x.f * y.e * A.a4();
  MultiPoly f_coord = x.e * y.e * A.b1() + x.f * y.f * A.b2() +
                      x.e * y.f * A.b3() + x.f * y.e * A.b4();
  return {std::move(e_coord), std::move(f_coord)};
}

}  // namespace

std::pair<MultiPoly, MultiPoly> ec_defect(const StructureMatrix& A) {
  const FieldSpec& spec = A.spec();
  GenericPair x{MultiPoly::var(spec, Var::x1), MultiPoly::var(spec, Var::x2)};
  GenericPair y{MultiPoly::var(spec, Var::y1), MultiPoly::var(spec, Var::y2)};
  GenericPair x_sq = poly_multiply(A, x, x);
  GenericPair y_sq = poly_multiply(A, y, y);
  GenericPair xy = poly_multiply(A, x, y);
  GenericPair lhs = poly_multiply(A, x_sq, y_sq);
  GenericPair rhs = poly_multiply(A, xy, xy);
  return {lhs.e - rhs.e, lhs.f - rhs.f};
}

std::array<FieldElem, 9> coeffs_in_x_basis(const MultiPoly& p) {
  const auto& basis = x_basis_monomials();
  for (const auto& [exponents, coeff] : p.terms()) {
    if (std::find(basis.begin(), basis.end(), exponents) == basis.end())
      throw DomainError("polynomial term outside the X monomial span: " +
                        MultiPoly::monomial(coeff, exponents).str());
  }
  std::array<FieldElem, 9> out = {
      p.coeff(basis[0]), p.coeff(basis[1]), p.coeff(basis[2]),
      p.coeff(basis[3]), p.coeff(basis[4]), p.coeff(basis[5]),
      p.coeff(basis[6]), p.coeff(basis[7]), p.coeff(basis[8])};
  return out;
}

namespace {

// Streaming rank: reduce each evaluation row against the pivots collected
// so far; stop once the rank reaches the column count.
class RankAccumulator {
 public:
  explicit RankAccumulator(std::size_t cols) : cols_(cols) {}

  bool saturated() const { return rows_.size() == cols_; }
  unsigned rank() const { return static_cast<unsigned>(rows_.size()); }

  void feed(std::vector<FieldElem> row) {
    for (auto& [lead, pivot] : rows_) {
      if (row[lead].is_zero()) continue;
      FieldElem factor = row[lead];
      for (std::size_t c = 0; c < cols_; ++c)
        row[c] = row[c] - factor * pivot[c];
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      if (row[c].is_zero()) continue;
      FieldElem inv = row[c].inverse();
      for (std::size_t k = 0; k < cols_; ++k) row[k] = row[k] * inv;
      rows_.emplace_back(c, std::move(row));
      std::sort(rows_.begin(), rows_.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      return;
    }
  }

 private:
  std::size_t cols_;
  std::vector<std::pair<std::size_t, std::vector<FieldElem>>> rows_;
};

template <std::size_t N>
void rank_over_points(const std::array<Monomial, N>& monomials,
                      const std::vector<FieldElem>& values,
                      std::size_t num_vars, RankAccumulator& acc) {
  std::vector<std::size_t> index(num_vars, 0);
  std::array<FieldElem, kNumVars> point = {
      FieldElem::zero(values.front().spec()),
      FieldElem::zero(values.front().spec()),
      FieldElem::zero(values.front().spec()),
      FieldElem::zero(values.front().spec()),
      FieldElem::zero(values.front().spec()),
      FieldElem::zero(values.front().spec())};
  while (true) {
    for (std::size_t v = 0; v < num_vars; ++v) point[v] = values[index[v]];
    std::vector<FieldElem> row;
    row.reserve(N);
    for (const Monomial& m : monomials)
      row.push_back(MultiPoly::monomial(FieldElem::one(point[0].spec()), m)
                        .evaluate(point));
    acc.feed(std::move(row));
    if (acc.saturated()) return;
    std::size_t v = 0;
    while (v < num_vars && ++index[v] == values.size()) index[v++] = 0;
    if (v == num_vars) return;
  }
}

}  // namespace

unsigned independence_rank(MonomialSystem system, const FieldSpec& spec) {
  std::vector<FieldElem> values;
  if (spec.finite()) {
    if (system == MonomialSystem::x_basis && spec.order() < 3)
      throw DomainError(
          "the X monomial system needs a field with at least 3 elements");
    values = elements(spec);
  } else {
    for (const char* text : {"-2", "-1", "0", "1", "2", "1/2"})
      values.push_back(FieldElem::parse(spec, text));
  }
  if (system == MonomialSystem::x_basis) {
    RankAccumulator acc(9);
    rank_over_points(x_basis_monomials(), values, 4, acc);
    return acc.rank();
  }
  RankAccumulator acc(8);
  rank_over_points(z_basis_monomials(), values, 6, acc);
  return acc.rank();
}

}  // namespace curled2
