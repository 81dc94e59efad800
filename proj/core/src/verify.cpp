#include "curled2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "curled2/classify.hpp"
#include "curled2/iso.hpp"
#include "curled2/poly.hpp"

namespace curled2 {

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(CheckResult& result) : result_(result), start_(Clock::now()) {}
  ~Timer() {
    result_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             Clock::now() - start_)
                             .count();
  }

 private:
  CheckResult& result_;
  Clock::time_point start_;
};

// Records only the first counterexample; later ones add nothing.
void fail(CheckResult& result, const std::string& details) {
  if (result.pass) {
    result.pass = false;
    result.details = details;
  }
}

void require_verification_field(const FieldSpec& spec) {
  if (!spec.finite())
    throw UnsupportedFieldError(
        "verification enumerates a finite field; Q is covered by the "
        "constructive classifier and the formal polynomial checks");
  if (spec.order() < 3)
    throw UnsupportedFieldError("verification requires a field with more "
                                "than two elements");
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t i) {
    std::size_t root = i;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[i] != root) i = std::exchange(parent_[i], root);
    return root;
  }
  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

bool pointwise_commutative(const StructureMatrix& A,
                           const std::vector<AlgebraElement>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (!(multiply(A, points[i], points[j]) ==
            multiply(A, points[j], points[i])))
        return false;
  return true;
}

std::vector<AlgebraElement> all_points(const FieldSpec& spec) {
  std::vector<FieldElem> elems = elements(spec);
  std::vector<AlgebraElement> points;
  points.reserve(elems.size() * elems.size());
  for (const FieldElem& u : elems)
    for (const FieldElem& v : elems) points.push_back(AlgebraElement{u, v});
  return points;
}

// Deterministic order: ecc00 by (a,b), then ecc10, ecc01, ecc11 by their
// parameter, matching the enumeration order of elements().
std::vector<CFormParams> family_members(const EccFamilies& families) {
  std::vector<CFormParams> all;
  all.reserve(families.total());
  for (const auto* family :
       {&families.ecc00, &families.ecc10, &families.ecc01, &families.ecc11})
    all.insert(all.end(), family->begin(), family->end());
  return all;
}

template <typename Fn>
void for_each_cform(const FieldSpec& spec, Fn&& fn) {
  std::vector<FieldElem> elems = elements(spec);
  for (bool eps : {false, true})
    for (bool delta : {false, true})
      for (const FieldElem& a : elems)
        for (const FieldElem& b : elems)
          for (const FieldElem& c : elems)
            for (const FieldElem& d : elems)
              fn(CFormParams(a, b, c, d, eps, delta));
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::to_json(bool include_timings) const {
  nlohmann::ordered_json out;
  out["field"] = field.name();
  out["seed"] = seed;
  out["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& check : checks) {
    nlohmann::ordered_json entry;
    entry["name"] = check.name;
    entry["status"] = check.pass ? "pass" : "fail";
    nlohmann::ordered_json counts(nlohmann::ordered_json::value_t::object);
    for (const auto& [key, value] : check.counts) counts[key] = value;
    entry["counts"] = counts;
    entry["elapsed_ms"] = include_timings ? check.elapsed_ms : 0;
    entry["details"] = check.details;
    out["checks"].push_back(entry);
  }
  return out.dump(2) + "\n";
}

EccFamilies enumerate_ecc(const FieldSpec& spec) {
  require_verification_field(spec);
  std::vector<FieldElem> elems = elements(spec);
  FieldElem one = FieldElem::one(spec);
  FieldElem zero = FieldElem::zero(spec);
  EccFamilies out;
  for (const FieldElem& a : elems)
    for (const FieldElem& b : elems)
      out.ecc00.push_back(CFormParams(a, b, -a, -b, false, false));
  for (const FieldElem& b : elems)
    out.ecc10.push_back(CFormParams(zero, b, zero, one - b, true, false));
  for (const FieldElem& a : elems)
    out.ecc01.push_back(CFormParams(a, zero, one - a, zero, false, true));
  for (const FieldElem& a : elems)
    out.ecc11.push_back(CFormParams(a, one - a, one - a, a, true, true));
  return out;
}

CheckResult check_families(const FieldSpec& spec) {
  CheckResult result;
  result.name = "ec_curled_families";
  result.pass = true;
  Timer timer(result);

  EccFamilies families = enumerate_ecc(spec);
  std::size_t q = spec.order();
  if (families.ecc00.size() != q * q || families.ecc10.size() != q ||
      families.ecc01.size() != q || families.ecc11.size() != q)
    fail(result, "family sizes are not (q^2, q, q, q)");

  std::set<std::string> family_set;
  for (const CFormParams& p : family_members(families))
    family_set.insert(p.str());
  if (family_set.size() != families.total())
    fail(result, "families overlap");

  std::uint64_t ec_curled_count = 0;
  for_each_cform(spec, [&](const CFormParams& p) {
    StructureMatrix m = p.matrix();
    bool curled_pw = is_curled(m);  // pointwise on finite fields
    bool pointwise = is_endo_commutative(m, EcMethod::pointwise) && curled_pw;
    bool in_family = family_set.count(p.str()) > 0;
    bool criterion = is_ec_curled(p);
    if (pointwise) ++ec_curled_count;
    if (curled_pw != curled_criterion_cform(p))
      fail(result, "curledness criterion disagrees with the pointwise check "
                   "at " + p.str() + " over " + spec.name());
    if (pointwise != in_family)
      fail(result, "family membership disagrees with the pointwise checks at " +
                       p.str() + " over " + spec.name());
    if (criterion != pointwise)
      fail(result,
           "combined criterion disagrees with the pointwise checks at " +
               p.str() + " over " + spec.name());
  });

  result.counts["cform_tuples"] = 4 * q * q * q * q;
  result.counts["family_members"] = families.total();
  result.counts["ec_curled_matrices"] = ec_curled_count;
  if (result.pass)
    result.details =
        "membership union taken over all four families ecc00, ecc10, ecc01, "
        "ecc11";
  return result;
}

CheckResult check_classification(const FieldSpec& spec) {
  CheckResult result;
  result.name = "classification";
  result.pass = true;
  Timer timer(result);

  EccFamilies families = enumerate_ecc(spec);
  std::vector<CFormParams> params = family_members(families);
  std::vector<StructureMatrix> members;
  members.reserve(params.size());
  for (const CFormParams& p : params) members.push_back(p.matrix());
  std::size_t q = spec.order();

  std::vector<Transform2> gl2 = gl2_elements(spec);
  UnionFind uf(members.size());
  std::uint64_t searches = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      ++searches;
      if (auto witness = find_isomorphism_in(gl2, members[i], members[j])) {
        if (!is_equiv_under(members[i], members[j], *witness))
          fail(result, "invalid witness for " + members[i].str() + " ~ " +
                           members[j].str());
        uf.merge(i, j);
      }
    }

  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < members.size(); ++i)
    classes[uf.find(i)].push_back(i);
  if (classes.size() != q + 2)
    fail(result, "expected " + std::to_string(q + 2) + " classes, found " +
                     std::to_string(classes.size()) + " over " + spec.name());

  // the canonical matrices C0, C1, C2(a) must hit every class exactly once
  std::vector<StructureMatrix> canonicals;
  canonicals.push_back(canonical_matrix(CanonicalLabel::c0(spec)));
  canonicals.push_back(canonical_matrix(CanonicalLabel::c1(spec)));
  for (const FieldElem& a : elements(spec))
    canonicals.push_back(canonical_matrix(CanonicalLabel::c2(a)));
  std::map<std::size_t, std::size_t> canonical_per_class;
  for (const StructureMatrix& c : canonicals) {
    auto it = std::find(members.begin(), members.end(), c);
    if (it == members.end()) {
      fail(result, "canonical matrix " + c.str() + " is not a family member");
      continue;
    }
    ++canonical_per_class[uf.find(
        static_cast<std::size_t>(it - members.begin()))];
  }
  for (const auto& [root, ids] : classes)
    if (canonical_per_class[root] != 1)
      fail(result, "class of " + members[ids.front()].str() + " contains " +
                       std::to_string(canonical_per_class[root]) +
                       " canonical matrices");

  // classify must agree with the brute-force partition
  std::map<std::string, std::size_t> label_to_root;
  for (std::size_t i = 0; i < members.size(); ++i) {
    Classification cls = classify(members[i]);
    std::string label = cls.label.str();
    std::size_t root = uf.find(i);
    auto [it, inserted] = label_to_root.emplace(label, root);
    if (!inserted && it->second != root)
      fail(result, "label " + label + " spans two brute-force classes (" +
                       members[i].str() + ")");
  }
  std::set<std::size_t> roots_seen;
  for (const auto& [label, root] : label_to_root) roots_seen.insert(root);
  if (label_to_root.size() != classes.size() ||
      roots_seen.size() != classes.size())
    fail(result, "classified labels do not biject with brute-force classes");

  result.counts["members"] = members.size();
  result.counts["classes"] = classes.size();
  result.counts["expected_classes"] = q + 2;
  result.counts["gl2_order"] = gl2.size();
  result.counts["pair_searches"] = searches;
  return result;
}

CheckResult check_special_classes(const FieldSpec& spec) {
  CheckResult result;
  result.name = "special_classes";
  result.pass = true;
  Timer timer(result);

  std::vector<CFormParams> members = family_members(enumerate_ecc(spec));
  struct Kind {
    SpecialKind kind;
    const char* name;
    bool (*predicate)(const StructureMatrix&);
  };
  const Kind kinds[] = {
      {SpecialKind::zeropotent, "zeropotent", &is_zeropotent},
      {SpecialKind::commutative, "commutative", &is_commutative},
      {SpecialKind::anticommutative, "anticommutative", &is_anticommutative},
      {SpecialKind::associative, "associative", &is_associative},
  };
  for (const Kind& kind : kinds) {
    std::set<std::string> expected;
    for (const CanonicalLabel& label : special_classes(kind.kind, spec))
      expected.insert(label.str());
    std::set<std::string> got;
    for (const CFormParams& p : members) {
      StructureMatrix m = p.matrix();
      if (kind.predicate(m)) got.insert(classify(m).label.str());
    }
    if (got != expected) {
      std::ostringstream os;
      os << kind.name << " classes over " << spec.name() << " are {";
      for (const std::string& label : got) os << label << ",";
      os << "} instead of {";
      for (const std::string& label : expected) os << label << ",";
      os << "}";
      fail(result, os.str());
    }
    result.counts[std::string(kind.name) + "_classes"] = got.size();
  }
  result.counts["members"] = members.size();
  return result;
}

CheckResult check_unital_commutative_associative(const FieldSpec& spec) {
  CheckResult result;
  result.name = "unital_commutative_associative";
  result.pass = true;
  Timer timer(result);

  std::vector<AlgebraElement> points = all_points(spec);
  FieldElem zero = FieldElem::zero(spec);
  auto tuple = [&](int a, int b, int c, int d, bool eps, bool delta) {
    return CFormParams(FieldElem::of_int(spec, a), FieldElem::of_int(spec, b),
                       FieldElem::of_int(spec, c), FieldElem::of_int(spec, d),
                       eps, delta)
        .str();
  };

  const std::set<std::string> expected_unital = {
      tuple(0, 1, 0, 1, true, false), tuple(1, 0, 1, 0, false, true),
      tuple(0, 0, 0, 0, true, true), tuple(1, 0, 1, 0, true, true),
      tuple(0, 1, 0, 1, true, true)};
  const std::set<std::string> expected_associative = {
      tuple(0, 0, 0, 0, false, false),
      tuple(0, 0, 0, 0, true, false),
      tuple(0, 0, 0, 1, true, false),
      tuple(0, 1, 0, 0, true, false),
      tuple(0, 1, 0, 1, true, false),
      tuple(0, 0, 0, 0, false, true),
      tuple(0, 0, 1, 0, false, true),
      tuple(1, 0, 0, 0, false, true),
      tuple(1, 0, 1, 0, false, true),
      tuple(0, 0, 0, 0, true, true),
      tuple(0, 1, 0, 1, true, true),
      tuple(0, 1, 1, 0, true, true),
      tuple(1, 0, 0, 1, true, true),
      tuple(1, 0, 1, 0, true, true)};
  const std::set<std::string> expected_curled_associative = {
      tuple(0, 0, 0, 0, false, false), tuple(0, 0, 0, 1, true, false),
      tuple(0, 1, 0, 0, true, false),  tuple(0, 0, 1, 0, false, true),
      tuple(1, 0, 0, 0, false, true),  tuple(0, 1, 1, 0, true, true),
      tuple(1, 0, 0, 1, true, true)};

  std::set<std::string> expected_curled_commutative;
  if (spec.characteristic() != 2) {
    FieldElem half = FieldElem::of_int(spec, 2).inverse();
    expected_curled_commutative = {
        tuple(0, 0, 0, 0, false, false),
        CFormParams(zero, half, zero, half, true, false).str(),
        CFormParams(half, zero, half, zero, false, true).str(),
        CFormParams(half, half, half, half, true, true).str()};
  } else {
    for (const FieldElem& a : elements(spec))
      for (const FieldElem& b : elements(spec))
        expected_curled_commutative.insert(
            CFormParams(a, b, a, b, false, false).str());
  }

  std::set<std::string> unital_set, associative_set, curled_associative_set,
      curled_commutative_set;
  for_each_cform(spec, [&](const CFormParams& p) {
    StructureMatrix m = p.matrix();
    bool unital = find_unit(m).has_value();
    bool associative = is_associative(m);
    bool curled = is_curled(m);
    bool commutative = is_commutative(m);
    bool commutative_pw = pointwise_commutative(m, points);
    bool ec = is_endo_commutative(m, EcMethod::criterion);

    if (unital) {
      unital_set.insert(p.str());
      if (!ec) fail(result, "unital but not endo-commutative: " + p.str());
    }
    if (associative) {
      associative_set.insert(p.str());
      if (!ec)
        fail(result, "associative but not endo-commutative: " + p.str());
    }
    if (commutative != commutative_pw)
      fail(result, "commutativity criterion disagrees pointwise: " + p.str());
    if (commutative != (p.a() == p.c() && p.b() == p.d()))
      fail(result, "commutativity is not (a=c and b=d) at " + p.str());
    if (curled) {
      if (unital) fail(result, "curled but unital: " + p.str());
      if (associative) curled_associative_set.insert(p.str());
      if (commutative) curled_commutative_set.insert(p.str());
      if ((commutative || associative) && !ec)
        fail(result,
             "curled commutative-or-associative but not endo-commutative: " +
                 p.str());
    }
  });

  auto compare = [&](const char* what, const std::set<std::string>& got,
                     const std::set<std::string>& expected) {
    if (got == expected) return;
    std::ostringstream os;
    os << what << " tuple set over " << spec.name() << " has " << got.size()
       << " members, expected " << expected.size();
    for (const std::string& s : got)
      if (!expected.count(s)) {
        os << "; unexpected " << s;
        break;
      }
    for (const std::string& s : expected)
      if (!got.count(s)) {
        os << "; missing " << s;
        break;
      }
    fail(result, os.str());
  };
  compare("unital", unital_set, expected_unital);
  compare("associative", associative_set, expected_associative);
  compare("curled associative", curled_associative_set,
          expected_curled_associative);
  compare("curled commutative", curled_commutative_set,
          expected_curled_commutative);

  std::size_t q = spec.order();
  result.counts["cform_tuples"] = 4 * q * q * q * q;
  result.counts["unital_tuples"] = unital_set.size();
  result.counts["associative_tuples"] = associative_set.size();
  result.counts["curled_associative_tuples"] = curled_associative_set.size();
  result.counts["curled_commutative_tuples"] = curled_commutative_set.size();
  return result;
}

CheckResult check_criteria(const FieldSpec& spec, std::uint64_t seed) {
  CheckResult result;
  result.name = "criteria_equivalence";
  result.pass = true;
  Timer timer(result);

  std::vector<FieldElem> elems = elements(spec);
  std::size_t q = elems.size();

  auto check_matrix = [&](const StructureMatrix& m) {
    bool criterion = is_endo_commutative(m, EcMethod::criterion);
    bool general = ec_criterion_general(m);
    bool formal = is_endo_commutative(m, EcMethod::formal_defect);
    bool pointwise = is_endo_commutative(m, EcMethod::pointwise);
    if (criterion != general)
      fail(result,
           "C-form criterion disagrees with the general criterion at " +
               m.str() + " over " + spec.name());
    if (general != formal)
      fail(result, "criterion disagrees with the formal defect at " + m.str() +
                       " over " + spec.name());
    if (formal != pointwise)
      fail(result, "formal defect disagrees with the pointwise check at " +
                       m.str() + " over " + spec.name());
  };

  std::uint64_t matrices = 0;
  std::uint64_t random_matrices = 0;
  if (q == 3) {
    // all q^8 structure matrices
    std::array<std::size_t, 8> index{};
    while (true) {
      std::array<FieldElem, 8> entries = {
          elems[index[0]], elems[index[1]], elems[index[2]], elems[index[3]],
          elems[index[4]], elems[index[5]], elems[index[6]], elems[index[7]]};
      check_matrix(StructureMatrix(spec, std::move(entries)));
      ++matrices;
      std::size_t v = 0;
      while (v < 8 && ++index[v] == q) index[v++] = 0;
      if (v == 8) break;
    }
  } else {
    for_each_cform(spec, [&](const CFormParams& p) {
      check_matrix(p.matrix());
      ++matrices;
    });
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 10000; ++i) {
      std::array<FieldElem, 8> entries = {
          elems[rng() % q], elems[rng() % q], elems[rng() % q],
          elems[rng() % q], elems[rng() % q], elems[rng() % q],
          elems[rng() % q], elems[rng() % q]};
      check_matrix(StructureMatrix(spec, std::move(entries)));
      ++matrices;
      ++random_matrices;
    }
  }

  unsigned x_rank = independence_rank(MonomialSystem::x_basis, spec);
  unsigned z_rank = independence_rank(MonomialSystem::z_basis, spec);
  if (x_rank != 9)
    fail(result, "X monomial evaluation rank is " + std::to_string(x_rank) +
                     " over " + spec.name());
  if (z_rank != 8)
    fail(result, "Z monomial evaluation rank is " + std::to_string(z_rank) +
                     " over " + spec.name());

  std::vector<Transform2> gl2 = gl2_elements(spec);
  std::uint64_t gl2_pairs = 0;
  for (const Transform2& x : gl2) {
    Mat4 lift = tilde(x);
    if (det4(lift) != pow(x.det(), 4)) {
      fail(result, "det(tilde(X)) != det(X)^4 at X = " + x.str());
      break;
    }
    for (const Transform2& y : gl2) {
      ++gl2_pairs;
      if (!(tilde(x * y) == mat4_mul(lift, tilde(y)))) {
        fail(result, "tilde(XY) != tilde(X) tilde(Y) at X = " + x.str() +
                         ", Y = " + y.str());
        break;
      }
    }
    if (!result.pass) break;
  }

  result.counts["matrices"] = matrices;
  result.counts["random_matrices"] = random_matrices;
  result.counts["x_rank"] = x_rank;
  result.counts["z_rank"] = z_rank;
  result.counts["gl2_order"] = gl2.size();
  result.counts["gl2_pairs"] = gl2_pairs;
  return result;
}

VerificationReport run_verification(const FieldSpec& spec,
                                    std::uint64_t seed) {
  require_verification_field(spec);
  std::size_t q = spec.order();
  VerificationReport report{spec, seed, {}};
  if (q == 3 || q == 4 || q == 5) {
    report.checks.push_back(check_families(spec));
    report.checks.push_back(check_classification(spec));
    report.checks.push_back(check_special_classes(spec));
    report.checks.push_back(check_unital_commutative_associative(spec));
    report.checks.push_back(check_criteria(spec, seed));
  } else if (q == 7) {
    report.checks.push_back(check_classification(spec));
  } else {
    throw UnsupportedFieldError(
        "verification is desk-scale for F3, F4, F5 and (classification "
        "only) F7; got " + spec.name());
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) {
              return a.name < b.name;
            });
  return report;
}

}  // namespace curled2
