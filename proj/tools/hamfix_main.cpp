// hamfix: symbolic verification of Hamiltonian circle actions with
// minimal fixed sets. Subcommands: validate, classify, integrate,
// weights, fixture. Exit codes: 0 accepted, 1 domain rejection or
// inconsistency, 2 usage or parse errors.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamfix/hamfix.hpp"

using namespace hamfix;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

std::string display_restriction(const GradedPoly& p, std::size_t index) {
  static const char* gens[] = {"u", "v", "w", "z"};
  std::string name = index < 4 ? gens[index] : "u" + std::to_string(index);
  return with_env(p, make_env({{name, 2}, {"t", 2}})).str();
}

FixedPointData load_guarded(const std::string& path, int max_degree) {
  FixedPointData data = load_fixed_point_data(path);
  if (data.n() > max_degree)
    throw NotApplicableError("dim M/2 = " + std::to_string(data.n()) +
                             " exceeds --max-degree " +
                             std::to_string(max_degree));
  return data;
}

nlohmann::json check_to_json(const CheckResult& c) {
  nlohmann::json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  if (!c.passed) {
    j["fatal"] = c.fatal;
    j["witness"] = c.detail;
  }
  return j;
}

int cmd_validate(const std::string& path, bool json, int max_degree) {
  FixedPointData data = load_guarded(path, max_degree);
  ValidationReport rep = validate(data);
  if (json) {
    nlohmann::json out;
    out["checks"] = nlohmann::json::array();
    for (const auto& c : rep.checks) out["checks"].push_back(check_to_json(c));
    out["fatal"] = rep.has_fatal();
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks) {
      std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.passed) {
        std::cout << (c.fatal ? " (fatal): " : ": ") << c.detail;
      }
      std::cout << "\n";
    }
  }
  return rep.has_fatal() ? kExitRejected : kExitOk;
}

int cmd_classify(const std::string& path, bool emit_ring, bool emit_chern,
                 bool json, int max_degree) {
  FixedPointData data = load_guarded(path, max_degree);
  Classification cls = classify(data);

  nlohmann::json out;
  if (json) {
    out["case"] = cls.case_name();
    out["i"] = cls.i;
    out["j"] = cls.j;
    out["m"] = rational_str(cls.m);
    out["reasons"] = cls.reasons;
    out["checks"] = nlohmann::json::array();
    for (const auto& c : cls.reports) out["checks"].push_back(check_to_json(c));
  } else {
    std::cout << (cls.accepted() ? "Case " + cls.case_name()
                                 : std::string("Rejected"))
              << "\n";
    for (const auto& c : cls.reports) {
      std::cout << "  " << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.passed) std::cout << ": " << c.detail;
      std::cout << "\n";
    }
  }

  if (cls.accepted()) {
    if (emit_ring) {
      auto [eq, ord] = total_ring(data, cls);
      if (json) {
        out["equivariant_ring"] = eq.str();
        out["ordinary_ring"] = ord.str();
      } else {
        std::cout << "H^*_{S1}(M;Z) = " << eq.str() << "\n";
        std::cout << "H^*(M;Z)     = " << ord.str() << "\n";
      }
    }
    if (emit_chern) {
      auto [equivariant, ordinary] = total_chern(data, cls);
      if (json) {
        out["chern"] = ordinary.str();
        out["equivariant_chern"] = nlohmann::json::array();
        for (std::size_t k = 0; k < equivariant.restrictions.size(); ++k)
          out["equivariant_chern"].push_back(
              display_restriction(equivariant.restrictions[k], k));
      } else {
        std::cout << "c(M) = " << ordinary.str() << "\n";
        for (std::size_t k = 0; k < equivariant.restrictions.size(); ++k)
          std::cout << "c^{S1}(M)|_" << data.components[k].name << " = "
                    << display_restriction(equivariant.restrictions[k], k)
                    << "\n";
      }
    }
  }
  if (json) std::cout << out.dump(2) << "\n";
  return cls.accepted() ? kExitOk : kExitRejected;
}

int cmd_integrate(const std::string& path, const std::string& expr_src,
                  bool json, int max_degree) {
  FixedPointData data = load_guarded(path, max_degree);
  ExprPtr expr;
  try {
    expr = parse_class_expr(expr_src);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n"
              << "  " << expr_src << "\n"
              << "  " << std::string(e.position, ' ') << "^\n";
    return kExitUsage;
  }
  Rational value = abbv_integrate(eval_expr(expr, data), data);
  if (json) {
    nlohmann::json out;
    out["class"] = print_expr(expr);
    out["integral"] = rational_str(value);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rational_str(value) << "\n";
  }
  return kExitOk;
}

int cmd_weights(const std::string& check, int max_key, int max_mult,
                bool json) {
  bool ok = true;
  nlohmann::json out;
  out["survivors"] = nlohmann::json::array();
  if (check == "lemma1") {
    auto survivors = lemmaI_enumerate(max_key);
    for (const auto& keys : survivors) {
      // every survivor must be a prefix {1..N}
      for (std::size_t k = 0; k < keys.size(); ++k)
        if (keys[k] != static_cast<int>(k) + 1) ok = false;
      std::string s = "{";
      for (std::size_t k = 0; k < keys.size(); ++k)
        s += (k ? "," : "") + std::to_string(keys[k]);
      s += "}";
      out["survivors"].push_back(s);
      if (!json) std::cout << s << "\n";
    }
    if (!json)
      std::cout << (ok ? "all survivors are prefixes {1..N}"
                       : "assertion failed: non-prefix survivor")
                << "\n";
  } else if (check == "lemma2" || check == "bound") {
    auto survivors = admissible_enumerate(max_key, max_mult);
    int max_seen = 0;
    for (const auto& w : survivors) {
      out["survivors"].push_back(w.str());
      if (!json) std::cout << w.str() << "\n";
      max_seen = std::max(max_seen, w.entries.rbegin()->first);
      if (check == "lemma2") {
        LemmaIIReport rep = lemmaII_verify(w);
        if (!rep.applicable || !rep.all_passed()) ok = false;
      }
    }
    if (check == "bound") {
      ok = max_seen <= 6;
      if (!json)
        std::cout << (ok ? "no key > 6 among survivors"
                         : "assertion failed: key > 6 appears")
                  << "\n";
    } else if (!json) {
      std::cout << (ok ? "all survivors satisfy the multiplicity relations"
                       : "assertion failed: multiplicity relation violated")
                << "\n";
    }
  } else {
    std::cerr << "unknown --check '" << check
              << "' (expected lemma1|lemma2|bound)\n";
    return kExitUsage;
  }
  if (json) {
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
  }
  return ok ? kExitOk : kExitRejected;
}

int cmd_fixture(const std::string& name, int n, int j,
                const std::string& neg_name, const std::string& out_path,
                int max_degree) {
  FixedPointData data;
  if (name == "cpn") {
    data = fixture_cpn(n, j);
  } else if (name == "quadric") {
    data = fixture_quadric(n);
  } else if (name == "three-component") {
    data = fixture_three_component_quadric3();
  } else if (name == "neg") {
    data = negative_fixture(neg_name);
  } else {
    std::cerr << "unknown fixture '" << name
              << "' (expected cpn|quadric|three-component|neg)\n";
    return kExitUsage;
  }
  if (data.n() > max_degree) {
    std::cerr << "fixture exceeds --max-degree " << max_degree << "\n";
    return kExitUsage;
  }
  if (out_path == "-") {
    std::cout << to_json(data).dump(2) << "\n";
  } else {
    save_fixed_point_data(data, out_path);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic verification of Hamiltonian circle actions with "
               "minimal fixed sets"};
  app.require_subcommand(1);
  bool json = false;
  int max_degree = 12;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--max-degree", max_degree,
                 "guardrail on dim M/2 for loaded or generated data")
      ->capture_default_str();

  std::string path, expr_src, check = "lemma1", fixture_name, neg_name,
                              out_path = "-";
  int n = 1, j = 0, max_key = 12, max_mult = 6;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "run the consistency checks on a file");
  validate_cmd->add_option("file", path)->required();

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "decide Case A / Case B / Rejected for a data file");
  classify_cmd->add_option("file", path)->required();
  bool emit_ring = false, emit_chern = false;
  classify_cmd->add_flag("--emit-ring", emit_ring,
                         "print the cohomology ring presentations");
  classify_cmd->add_flag("--emit-chern", emit_chern,
                         "print c(M) and the equivariant Chern restrictions");

  CLI::App* integrate_cmd = app.add_subcommand(
      "integrate", "evaluate an ABBV integral from a class expression");
  integrate_cmd->add_option("file", path)->required();
  integrate_cmd->add_option("--class", expr_src, "class expression")
      ->required();

  CLI::App* weights_cmd = app.add_subcommand(
      "weights", "enumerate admissible isotropy weight multisets");
  weights_cmd->add_option("--check", check, "lemma1|lemma2|bound")
      ->required();
  weights_cmd->add_option("--max-key", max_key)->capture_default_str();
  weights_cmd->add_option("--max-mult", max_mult)->capture_default_str();

  CLI::App* fixture_cmd =
      app.add_subcommand("fixture", "write a fixture data file");
  fixture_cmd->add_option("kind", fixture_name,
                          "cpn|quadric|three-component|neg")
      ->required();
  fixture_cmd->add_option("--n", n);
  fixture_cmd->add_option("--j", j);
  fixture_cmd->add_option("--name", neg_name, "negative fixture name");
  fixture_cmd->add_option("-o,--output", out_path, "output path ('-' = stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate_cmd))
      return cmd_validate(path, json, max_degree);
    if (app.got_subcommand(classify_cmd))
      return cmd_classify(path, emit_ring, emit_chern, json, max_degree);
    if (app.got_subcommand(integrate_cmd))
      return cmd_integrate(path, expr_src, json, max_degree);
    if (app.got_subcommand(weights_cmd))
      return cmd_weights(check, max_key, max_mult, json);
    if (app.got_subcommand(fixture_cmd))
      return cmd_fixture(fixture_name, n, j, neg_name, out_path, max_degree);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotApplicableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InconsistentDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitUsage;
}
