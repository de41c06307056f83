// Command-line surface: construct the supported algebras, list their
// indecomposable right ideals, compute orthogonals against the closed
// forms, and run the full verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 config error,
// 3 construction error, 4 budget or hypothesis error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "hopfcode/enumerate.hpp"
#include "hopfcode/hopf.hpp"
#include "hopfcode/io.hpp"
#include "hopfcode/verify.hpp"

namespace hc = hopfcode;

namespace {

struct BuiltAlgebra {
  hc::RunConfig cfg;
  hc::Field field;
  std::optional<hc::OmegaAlgebra> omega;
  std::optional<hc::TaftAlgebra> taft;
  std::optional<hc::CdmmAlgebra> cdmm;
  std::optional<hc::CyclicAlgebra> cyclic;

  const hc::StructureAlgebra& algebra() const {
    switch (cfg.algebra) {
      case hc::AlgebraKind::omega: return omega->algebra();
      case hc::AlgebraKind::taft: return taft->omega.algebra();
      case hc::AlgebraKind::cdmm: return cdmm->omega.algebra();
      case hc::AlgebraKind::cyclic: return cyclic->hopf.algebra();
    }
    throw hc::ConfigError("unreachable algebra kind");
  }
};

BuiltAlgebra build(const hc::RunConfig& cfg) {
  BuiltAlgebra out{cfg, hc::Field::make(cfg.field), {}, {}, {}, {}};
  switch (cfg.algebra) {
    case hc::AlgebraKind::omega:
      out.omega.emplace(cfg.omega_spec, out.field);
      break;
    case hc::AlgebraKind::taft:
      out.taft = hc::build_taft(cfg.taft_N, out.field,
                                out.field.root_of_unity(cfg.taft_N));
      break;
    case hc::AlgebraKind::cdmm:
      out.cdmm = hc::build_cdmm(out.field, out.field.root_of_unity(6));
      break;
    case hc::AlgebraKind::cyclic:
      out.cyclic = hc::build_cyclic(cfg.cyclic_n, out.field);
      break;
  }
  return out;
}

// JSON is the canonical machine format; table and csv are human
// conveniences with no stability guarantee.
void emit(const hc::RunConfig& cfg, const hc::json& payload) {
  if (cfg.format == "csv" && payload.contains("entries")) {
    std::cout << "key,pass,detail\n";
    for (const auto& e : payload.at("entries"))
      std::cout << e.at("key").get<std::string>() << ','
                << (e.at("pass").get<bool>() ? "pass" : "fail") << ",\""
                << e.at("detail").get<std::string>() << "\"\n";
    return;
  }
  if (cfg.format == "table" || cfg.format == "csv") {
    const char sep = cfg.format == "csv" ? ',' : '\t';
    for (const auto& [key, value] : payload.items())
      std::cout << key << sep
                << (value.is_string() ? value.get<std::string>()
                                      : value.dump())
                << "\n";
    return;
  }
  std::cout << payload.dump(2) << "\n";
}

std::vector<hc::Scalar> parse_scalar_list(const hc::Field& field,
                                          const std::string& text) {
  try {
    std::vector<hc::Scalar> out;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) out.push_back(field.parse(cur));
    return out;
  } catch (const hc::Error&) {
    throw hc::ConfigError("cannot parse scalar list: " + text);
  }
}

std::vector<unsigned> parse_index_list(const std::string& text) {
  try {
    std::vector<unsigned> out;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ','))
      out.push_back(static_cast<unsigned>(std::stoul(cur)));
    return out;
  } catch (const std::exception&) {
    throw hc::ConfigError("cannot parse index list: " + text);
  }
}

int cmd_construct(const hc::RunConfig& cfg) {
  BuiltAlgebra built = build(cfg);
  const hc::StructureAlgebra& alg = built.algebra();
  hc::json j{{"algebra", hc::algebra_kind_name(cfg.algebra)},
             {"field", hc::field_spec_to_json(cfg.field)},
             {"dim", alg.dim()},
             {"labels", alg.labels()},
             {"associativity_check", "pass"},
             {"unit_check", "pass"}};
  hc::json unit = hc::json::array();
  for (const auto& c : alg.unit_coords()) unit.push_back(c.to_string());
  j["unit"] = std::move(unit);
  if (cfg.algebra == hc::AlgebraKind::taft)
    j["q"] = built.taft->q.to_string();
  if (cfg.algebra == hc::AlgebraKind::cdmm)
    j["zeta"] = built.cdmm->zeta.to_string();
  emit(cfg, j);
  return 0;
}

int cmd_ideals(const hc::RunConfig& cfg, bool exhaustive) {
  BuiltAlgebra built = build(cfg);
  const hc::OmegaAlgebra* view = nullptr;
  std::optional<hc::OmegaAlgebra> cyclic_view;
  switch (cfg.algebra) {
    case hc::AlgebraKind::omega: view = &*built.omega; break;
    case hc::AlgebraKind::taft: view = &built.taft->omega; break;
    case hc::AlgebraKind::cdmm: view = &built.cdmm->omega; break;
    case hc::AlgebraKind::cyclic: {
      // The idempotent picture requires a primitive n-th root.
      (void)hc::cyclic_idempotents(*built.cyclic);
      hc::OmegaSpec spec;
      spec.s_size = cfg.cyclic_n;
      spec.capN = 1;
      spec.omega.resize(cfg.cyclic_n);
      for (unsigned s = 0; s < cfg.cyclic_n; ++s) spec.omega[s] = s;
      cyclic_view.emplace(spec, built.field);
      view = &*cyclic_view;
      break;
    }
  }
  hc::json j{{"algebra", hc::algebra_kind_name(cfg.algebra)}};
  if (exhaustive) {
    hc::Classification cls =
        hc::classify_indecomposables(*view, cfg.budget);
    j["classification"] = hc::classification_to_json(cls);
    hc::VerifyEntry cross = hc::verify_classification(*view, cfg.budget);
    j["crosscheck"] = {{"key", cross.key},
                       {"pass", cross.pass},
                       {"detail", cross.detail}};
    emit(cfg, j);
    return cross.pass ? 0 : 1;
  }
  hc::json reps = hc::json::array();
  const hc::OmegaSpec& spec = view->spec();
  for (unsigned s = 0; s < spec.s_size; ++s)
    for (unsigned t = 0; t < spec.capN; ++t)
      reps.push_back(hc::json{
          {"s", s},
          {"t", t},
          {"dim", spec.capN - t},
          {"basis", hc::subspace_to_json(view->ideal(s, t).space())}});
  j["representatives"] = std::move(reps);
  emit(cfg, j);
  return 0;
}

hc::json orthogonal_check_json(const hc::OrthogonalCheck& chk) {
  return hc::json{{"predicted_basis", hc::subspace_to_json(chk.predicted)},
                  {"computed_basis", hc::subspace_to_json(chk.computed_right)},
                  {"computed_left_basis",
                   hc::subspace_to_json(chk.computed_left)},
                  {"left_right_agree", chk.left_right_agree},
                  {"equal", chk.equal}};
}

int cmd_orthogonal(const hc::RunConfig& cfg, const std::string& ideal_text,
                   const std::string& unit_text, const std::string& gen_text) {
  BuiltAlgebra built = build(cfg);
  hc::json j{{"algebra", hc::algebra_kind_name(cfg.algebra)}};
  bool pass = false;
  switch (cfg.algebra) {
    case hc::AlgebraKind::cyclic: {
      if (gen_text.empty())
        throw hc::ConfigError(
            "cyclic orthogonal needs --gen with generator coefficients");
      hc::CyclicCode code(cfg.cyclic_n, built.field,
                          parse_scalar_list(built.field, gen_text));
      hc::CyclicDualResult dual = hc::cyclic_dual(*built.cyclic, code);
      hc::json gp = hc::json::array(), pc = hc::json::array();
      for (const auto& c : dual.dual.generator) gp.push_back(c.to_string());
      for (const auto& c : dual.parity_check) pc.push_back(c.to_string());
      j["dual_generator"] = std::move(gp);
      j["parity_check"] = std::move(pc);
      j["predicted_basis"] =
          hc::subspace_to_json(hc::code_subspace(*built.cyclic, dual.dual));
      j["computed_basis"] = hc::subspace_to_json(dual.orthogonal);
      j["equal"] = dual.agree;
      pass = dual.agree;
      break;
    }
    case hc::AlgebraKind::taft: {
      auto idx = parse_index_list(ideal_text);
      if (idx.size() != 2)
        throw hc::ConfigError("taft orthogonal needs --ideal s,m");
      std::optional<hc::AlgebraElement> unit;
      if (!unit_text.empty())
        unit = built.taft->omega.from_x_polynomial(
            parse_scalar_list(built.field, unit_text));
      hc::OrthogonalCheck chk = hc::taft_orthogonal_check(
          *built.taft, idx[0], idx[1], unit ? &*unit : nullptr);
      j["ideal"] = {{"s", idx[0]}, {"m", idx[1]}};
      j.update(orthogonal_check_json(chk));
      pass = chk.equal;
      break;
    }
    case hc::AlgebraKind::cdmm: {
      auto idx = parse_index_list(ideal_text);
      if (idx.size() != 3)
        throw hc::ConfigError("cdmm orthogonal needs --ideal s,t,m");
      std::optional<hc::AlgebraElement> unit;
      if (!unit_text.empty())
        unit = built.cdmm->omega.from_x_polynomial(
            parse_scalar_list(built.field, unit_text));
      hc::OrthogonalCheck chk = hc::cdmm_orthogonal_check(
          *built.cdmm, idx[0], idx[1], idx[2], unit ? &*unit : nullptr);
      j["ideal"] = {{"s", idx[0]}, {"t", idx[1]}, {"m", idx[2]}};
      j.update(orthogonal_check_json(chk));
      pass = chk.equal;
      break;
    }
    case hc::AlgebraKind::omega:
      throw hc::ConfigError(
          "orthogonal needs one of the named algebras (taft, cdmm, cyclic)");
  }
  emit(cfg, j);
  return pass ? 0 : 1;
}

int cmd_verify(const hc::RunConfig& cfg, unsigned samples) {
  BuiltAlgebra built = build(cfg);
  hc::VerifyOptions opts;
  opts.samples = samples;
  opts.budget = cfg.budget;
  hc::VerifyReport report;
  switch (cfg.algebra) {
    case hc::AlgebraKind::omega:
      report = hc::verify_omega_suite(*built.omega, opts);
      break;
    case hc::AlgebraKind::taft:
      report = hc::verify_taft_suite(*built.taft, opts);
      break;
    case hc::AlgebraKind::cdmm:
      report = hc::verify_cdmm_suite(*built.cdmm, opts);
      break;
    case hc::AlgebraKind::cyclic:
      report = hc::verify_cyclic_suite(*built.cyclic, opts);
      break;
  }
  hc::json j{{"algebra", hc::algebra_kind_name(cfg.algebra)},
             {"field", hc::field_spec_to_json(cfg.field)}};
  j.update(hc::verify_report_to_json(report));
  emit(cfg, j);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with monomial forms and their algebras"};
  app.require_subcommand(1);

  std::string algebra = "omega";
  std::string omega_images;
  std::string config_path;
  std::string format = "json";
  unsigned capN = 2, s_size = 1, cyclic_n = 2;
  std::uint64_t prime = 0;
  unsigned cyclotomic_order = 0;
  std::uint64_t budget = hc::default_enumeration_budget();

  app.add_option("--algebra", algebra, "omega | taft | cdmm | cyclic");
  app.add_option("--N", capN, "nilpotency order (omega) / Taft parameter");
  app.add_option("--S", s_size, "size of the idempotent index set (omega)");
  app.add_option("--omega", omega_images,
                 "comma list of permutation images (omega)");
  app.add_option("--n", cyclic_n, "cyclic group order");
  app.add_option("--prime", prime, "prime field modulus");
  app.add_option("--cyclotomic-order", cyclotomic_order,
                 "cyclotomic field order (rationals with a root of unity)");
  app.add_option("--budget", budget, "cap on exhaustive enumerations")
      ->envname("HOPFCODE_BUDGET");
  app.add_option("--format", format, "json | csv | table");
  app.add_option("--config", config_path, "JSON config file");

  auto* construct = app.add_subcommand("construct", "build and summarize");
  construct->fallthrough();
  auto* ideals =
      app.add_subcommand("ideals", "indecomposable right ideal catalog");
  ideals->fallthrough();
  bool exhaustive = false;
  ideals->add_flag("--exhaustive", exhaustive,
                   "full scaled family plus brute-force cross-check");
  auto* orthogonal =
      app.add_subcommand("orthogonal", "closed-form vs kernel orthogonals");
  orthogonal->fallthrough();
  std::string ideal_text, unit_text, gen_text;
  orthogonal->add_option("--ideal", ideal_text, "s,t (taft) or s,t,m (cdmm)");
  orthogonal->add_option("--unit-poly", unit_text,
                         "coefficients of an invertible a(x), low first");
  orthogonal->add_option("--gen", gen_text,
                         "cyclic code generator coefficients, low first");
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->fallthrough();
  unsigned samples = 100;
  verify->add_option("--samples", samples, "randomized samples per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    hc::RunConfig cfg;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw hc::ConfigError("cannot open config: " + config_path);
      cfg = hc::run_config_from_json(hc::json::parse(in));
    } else {
      if (algebra == "omega")
        cfg.algebra = hc::AlgebraKind::omega;
      else if (algebra == "taft")
        cfg.algebra = hc::AlgebraKind::taft;
      else if (algebra == "cdmm")
        cfg.algebra = hc::AlgebraKind::cdmm;
      else if (algebra == "cyclic")
        cfg.algebra = hc::AlgebraKind::cyclic;
      else
        throw hc::ConfigError("unknown algebra: " + algebra);
      if (prime != 0 && cyclotomic_order != 0)
        throw hc::ConfigError("--prime and --cyclotomic-order are exclusive");
      if (prime != 0)
        cfg.field = hc::FieldSpec::prime(prime);
      else if (cyclotomic_order != 0)
        cfg.field = hc::FieldSpec::cyclotomic(cyclotomic_order);
      else
        throw hc::ConfigError("a field is required: --prime or "
                              "--cyclotomic-order");
      cfg.taft_N = capN;
      cfg.cyclic_n = cyclic_n;
      if (cfg.algebra == hc::AlgebraKind::omega) {
        cfg.omega_spec.s_size = s_size;
        cfg.omega_spec.capN = capN;
        if (omega_images.empty()) {
          cfg.omega_spec.omega.resize(s_size);
          for (unsigned s = 0; s < s_size; ++s) cfg.omega_spec.omega[s] = s;
        } else {
          cfg.omega_spec.omega = parse_index_list(omega_images);
        }
      }
    }
    cfg.budget = budget;
    cfg.format = format;

    if (*construct) return cmd_construct(cfg);
    if (*ideals) return cmd_ideals(cfg, exhaustive);
    if (*orthogonal)
      return cmd_orthogonal(cfg, ideal_text, unit_text, gen_text);
    if (*verify) return cmd_verify(cfg, samples);
    throw hc::ConfigError("no subcommand");
  } catch (const hc::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const hc::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const hc::HypothesisViolated& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const hc::Error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
}
