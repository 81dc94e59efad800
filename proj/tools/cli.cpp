#include "cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curled2/classify.hpp"
#include "curled2/iso.hpp"
#include "curled2/poly.hpp"
#include "curled2/verify.hpp"

namespace curled2::cli {

namespace {

using nlohmann::ordered_json;

ordered_json transform_json(const Transform2& X) {
  return ordered_json::array(
      {ordered_json::array({X.x().str(), X.y().str()}),
       ordered_json::array({X.z().str(), X.w().str()})});
}

// Aligned key/value rendering of a flat report; nested values are printed
// in their compact JSON form.
void print_table(const ordered_json& report, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [key, value] : report.items())
    width = std::max(width, key.size());
  for (const auto& [key, value] : report.items()) {
    out << key << std::string(width - key.size() + 2, ' ');
    if (value.is_string())
      out << value.get<std::string>();
    else
      out << value.dump();
    out << "\n";
  }
}

void emit(const ordered_json& report, const std::string& format,
          std::ostream& out) {
  if (format == "table")
    print_table(report, out);
  else
    out << report.dump(2) << "\n";
}

struct CommonArgs {
  std::string field;
  std::string format = "json";
};

void add_common(CLI::App* sub, CommonArgs& common) {
  sub->add_option("--field", common.field,
                  "base field: Fp (p prime, p <= 97), F4 or Q")
      ->required();
  sub->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

int run_impl(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact classification of two-dimensional endo-commutative "
               "curled algebras"};
  app.require_subcommand(1);

  CommonArgs check_args, classify_args, iso_args, enumerate_args, verify_args,
      derive_args;
  std::string check_algebra, classify_algebra, derive_algebra, iso_a, iso_b;
  std::uint64_t seed = kDefaultSeed;
  bool timings = false;
  bool parallel_witness = false;

  CLI::App* check = app.add_subcommand(
      "check", "report the properties of one algebra");
  add_common(check, check_args);
  check->add_option("--algebra", check_algebra, "structure matrix literal")
      ->required();

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "canonical form and explicit basis-change witness");
  add_common(classify_cmd, classify_args);
  classify_cmd
      ->add_option("--algebra", classify_algebra, "structure matrix literal")
      ->required();

  CLI::App* iso = app.add_subcommand(
      "iso", "exhaustive isomorphism search over GL2 of a finite field");
  add_common(iso, iso_args);
  iso->add_option("--a", iso_a, "first structure matrix literal")->required();
  iso->add_option("--b", iso_b, "second structure matrix literal")->required();
  iso->add_flag("--parallel-witness", parallel_witness,
                "partitioned first-hit scan; the witness may differ from "
                "the deterministic full-order scan");

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "family sizes and class representatives");
  add_common(enumerate, enumerate_args);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the exhaustive verification checks");
  add_common(verify, verify_args);
  verify->add_option("--seed", seed, "seed for the sampled sweeps")
      ->envname("CURLED2_SEED")
      ->capture_default_str();
  verify->add_flag("--timings", timings,
                   "emit real elapsed_ms (output is no longer byte-stable)");

  CLI::App* derive = app.add_subcommand(
      "derive", "X-basis coordinates of the endo-commutativity defect");
  add_common(derive, derive_args);
  derive->add_option("--algebra", derive_algebra, "structure matrix literal")
      ->required();

  std::vector<const char*> argv;
  argv.push_back("curled2");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    int code = app.exit(e, help_out, err);
    out << help_out.str();
    return code == 0 ? 0 : 2;
  }

  if (check->parsed()) {
    FieldSpec spec = FieldSpec::parse(check_args.field);
    StructureMatrix A = StructureMatrix::parse(spec, check_algebra);
    ordered_json report;
    report["field"] = spec.name();
    report["algebra"] = A.str();
    report["curled"] = is_curled(A);
    report["endo_commutative"] = is_endo_commutative(A);
    report["commutative"] = is_commutative(A);
    report["anticommutative"] = is_anticommutative(A);
    report["zeropotent"] = is_zeropotent(A);
    report["associative"] = is_associative(A);
    report["unital"] = find_unit(A).has_value();
    report["rank"] = rank(A);
    emit(report, check_args.format, out);
    return 0;
  }

  if (classify_cmd->parsed()) {
    FieldSpec spec = FieldSpec::parse(classify_args.field);
    StructureMatrix A = StructureMatrix::parse(spec, classify_algebra);
    Classification cls = classify(A);
    ordered_json report;
    report["field"] = spec.name();
    report["algebra"] = A.str();
    report["label"] = cls.label.str();
    report["witness"] = transform_json(cls.witness);
    emit(report, classify_args.format, out);
    return 0;
  }

  if (iso->parsed()) {
    FieldSpec spec = FieldSpec::parse(iso_args.field);
    StructureMatrix A = StructureMatrix::parse(spec, iso_a);
    StructureMatrix B = StructureMatrix::parse(spec, iso_b);
    auto witness = find_isomorphism(A, B,
                                    parallel_witness
                                        ? WitnessSearch::parallel
                                        : WitnessSearch::deterministic);
    ordered_json report;
    report["field"] = spec.name();
    report["a"] = A.str();
    report["b"] = B.str();
    report["isomorphic"] = witness.has_value();
    report["witness"] = witness ? transform_json(*witness) : ordered_json();
    emit(report, iso_args.format, out);
    return 0;
  }

  if (enumerate->parsed()) {
    FieldSpec spec = FieldSpec::parse(enumerate_args.field);
    EccFamilies families = enumerate_ecc(spec);
    ordered_json report;
    report["field"] = spec.name();
    report["families"] = {{"ecc00", families.ecc00.size()},
                          {"ecc10", families.ecc10.size()},
                          {"ecc01", families.ecc01.size()},
                          {"ecc11", families.ecc11.size()}};
    report["total"] = families.total();
    ordered_json classes = ordered_json::array();
    auto add_class = [&](const CanonicalLabel& label) {
      ordered_json entry;
      entry["label"] = label.str();
      entry["representative"] = canonical_matrix(label).str();
      classes.push_back(entry);
    };
    add_class(CanonicalLabel::c0(spec));
    add_class(CanonicalLabel::c1(spec));
    for (const FieldElem& a : elements(spec))
      add_class(CanonicalLabel::c2(a));
    report["classes"] = classes;
    emit(report, enumerate_args.format, out);
    return 0;
  }

  if (verify->parsed()) {
    FieldSpec spec = FieldSpec::parse(verify_args.field);
    VerificationReport report = run_verification(spec, seed);
    if (verify_args.format == "table") {
      ordered_json table;
      table["field"] = spec.name();
      table["seed"] = seed;
      for (const CheckResult& check_result : report.checks)
        table[check_result.name] =
            std::string(check_result.pass ? "pass" : "fail") +
            (check_result.details.empty() ? "" : " - " + check_result.details);
      print_table(table, out);
    } else {
      out << report.to_json(timings);
    }
    return report.all_pass() ? 0 : 1;
  }

  if (derive->parsed()) {
    FieldSpec spec = FieldSpec::parse(derive_args.field);
    StructureMatrix A = StructureMatrix::parse(spec, derive_algebra);
    auto [e_defect, f_defect] = ec_defect(A);
    ordered_json report;
    report["field"] = spec.name();
    report["algebra"] = A.str();
    auto coeff_json = [](const MultiPoly& p) {
      std::array<FieldElem, 9> coeffs = coeffs_in_x_basis(p);
      ordered_json entry;
      for (std::size_t i = 0; i < 9; ++i)
        entry["X" + std::to_string(i + 1)] = coeffs[i].str();
      return entry;
    };
    report["e_defect"] = coeff_json(e_defect);
    report["f_defect"] = coeff_json(f_defect);
    report["e_defect_poly"] = e_defect.str();
    report["f_defect_poly"] = f_defect.str();
    report["endo_commutative"] = e_defect.is_zero() && f_defect.is_zero();
    emit(report, derive_args.format, out);
    return 0;
  }

  err << "no subcommand\n";
  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const PredicateError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedFieldError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace curled2::cli
