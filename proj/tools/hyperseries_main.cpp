// Command-line front end: evaluation, continuation, quadrature oracles,
// identity checks, and CSV tables for the hypergeometric engine.

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperseries/continuation.hpp"
#include "hyperseries/errata.hpp"
#include "hyperseries/multi_series.hpp"
#include "hyperseries/pfq.hpp"
#include "hyperseries/quadrature.hpp"
#include "hyperseries/symbolic.hpp"
#include "hyperseries/transforms.hpp"

using json = nlohmann::ordered_json;
using namespace hyperseries;

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json value_json(const Complex& v) {
  return json{{"re", v.real()}, {"im", v.imag()}};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_scalar(const std::string& tok) {
  if (Rational::looks_rational(tok)) return Rational::from_string(tok).to_double();
  size_t pos = 0;
  double v = std::stod(tok, &pos);
  if (pos != tok.size()) throw DomainError("bad numeric token: " + tok);
  return v;
}

std::vector<Complex> parse_list(const std::string& s) {
  std::vector<Complex> out;
  if (s.empty()) return out;
  for (const std::string& tok : split(s, ',')) out.push_back({parse_scalar(tok), 0.0});
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  if (s.empty()) return out;
  for (const std::string& tok : split(s, ',')) {
    if (!Rational::looks_rational(tok))
      throw DomainError("exact checks need rational parameters, got: " + tok);
    out.push_back(Rational::from_string(tok));
  }
  return out;
}

void emit(const json& j, const std::string& format) {
  if (format == "plain") {
    if (j.contains("value"))
      std::printf("%s %s\n", fmt_double(j["value"]["re"].get<double>()).c_str(),
                  fmt_double(j["value"]["im"].get<double>()).c_str());
    else
      std::printf("%s\n", j.dump().c_str());
  } else {
    std::printf("%s\n", j.dump(2).c_str());
  }
}

[[noreturn]] void fail(int code, const std::string& message,
                       const std::string& offending = "") {
  json err{{"code", code}, {"message", message}, {"offending_parameter", offending}};
  std::fprintf(stderr, "%s\n", err.dump().c_str());
  std::exit(code);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

struct IdentityRef {
  enum class Kind { Functional, Expansion, Kdf } kind;
  IdentityId fid;
  ExpansionId eid;
  KdfIdentity kid;
};

std::optional<IdentityRef> lookup_identity(const std::string& name) {
  IdentityRef r{};
  if (name == "eq31" || name == "eq32" || name == "eq33" || name == "eq34") {
    r.kind = IdentityRef::Kind::Functional;
    r.fid = name == "eq31"   ? IdentityId::Eq31
            : name == "eq32" ? IdentityId::Eq32
            : name == "eq33" ? IdentityId::Eq33
                             : IdentityId::Eq34;
    return r;
  }
  if (name == "eq41" || name == "eq42" || name == "eq43" || name == "eq44" ||
      name == "eq45" || name == "eq46" || name == "eq411") {
    r.kind = IdentityRef::Kind::Expansion;
    r.eid = name == "eq41"   ? ExpansionId::Eq41
            : name == "eq42" ? ExpansionId::Eq42
            : name == "eq43" ? ExpansionId::Eq43
            : name == "eq44" ? ExpansionId::Eq44
            : name == "eq45" ? ExpansionId::Eq45
            : name == "eq46" ? ExpansionId::Eq46
                             : ExpansionId::Eq411;
    return r;
  }
  if (name == "eq412" || name == "eq413") {
    r.kind = IdentityRef::Kind::Kdf;
    r.kid = name == "eq412" ? KdfIdentity::Eq412 : KdfIdentity::Eq413;
    return r;
  }
  return std::nullopt;
}

std::optional<Formula> lookup_formula(const std::string& name) {
  if (name == "direct") return Formula::Direct;
  if (name == "eq52") return Formula::Eq52;
  if (name == "eq53") return Formula::Eq53;
  if (name == "eq54") return Formula::Eq54;
  if (name == "eq55") return Formula::Eq55;
  if (name == "ref15") return Formula::Ref15;
  if (name == "expansion") return Formula::ExpansionSeries;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperseries: generalized hypergeometric evaluation, "
               "continuation, and identity auditing"};
  app.require_subcommand(1);

  double tol = 1e-10;
  long max_terms = 100000;
  std::string format = "json";
  std::string variant_name = "corrected";
  app.add_option("--tol", tol, "relative tolerance")->capture_default_str();
  app.add_option("--max-terms", max_terms, "series term cap")->capture_default_str();
  app.add_option("--format", format, "json|csv|plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}))
      ->capture_default_str();
  app.add_option("--variant", variant_name, "printed|corrected")
      ->check(CLI::IsMember({"printed", "corrected"}))
      ->capture_default_str();

  std::string upper_s, lower_s, pfq_label, x_s = "0", xi_s = "0", y_s = "0";
  std::string formula_name_s = "auto", rep = "1d", params_s, f2_params_s;
  long order = 12;
  int nodes = 60;
  double from = 0, to = 0, step = 0.5;

  CLI::App* eval = app.add_subcommand("eval", "sum a pFq series");
  eval->fallthrough();
  eval->add_option("--pfq", pfq_label, "label like 3F2 (checked against the lists)");
  eval->add_option("--upper", upper_s, "comma-separated numerator parameters");
  eval->add_option("--lower", lower_s, "comma-separated denominator parameters");
  eval->add_option("--x", x_s, "argument (real part)");
  eval->add_option("--xi", xi_s, "argument imaginary part");

  CLI::App* cont = app.add_subcommand("continue", "evaluate a 3F2 beyond the disk");
  cont->fallthrough();
  cont->add_option("--upper", upper_s, "a1,a2,a3")->required();
  cont->add_option("--lower", lower_s, "b1,b2")->required();
  cont->add_option("--x", x_s, "argument")->required();
  cont->add_option("--formula", formula_name_s,
                   "auto|direct|eq52|eq53|eq54|eq55|ref15|expansion");

  CLI::App* oracle =
      app.add_subcommand("oracle", "quadrature of the integral representations");
  oracle->fallthrough();
  oracle->add_option("--rep", rep, "1d|2d|3d|f2")
      ->check(CLI::IsMember({"1d", "2d", "3d", "f2"}));
  oracle->add_option("--upper", upper_s, "a1,a2,a3 (for 1d/2d/3d)");
  oracle->add_option("--lower", lower_s, "b1,b2 (for 1d/2d/3d)");
  oracle->add_option("--f2-params", f2_params_s, "a,b1,b2,c1,c2 (for f2)");
  oracle->add_option("--x", x_s, "argument")->required();
  oracle->add_option("--y", y_s, "second argument (f2)");
  oracle->add_option("--nodes", nodes, "points per axis")->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "identity audits");
  check->fallthrough();
  std::string identity_s;
  check->add_option("--identity", identity_s,
                    "eq31..eq34, eq41..eq46, eq411 (exact) or eq412, eq413 (numeric)")
      ->required();
  check->add_option("--order", order, "truncation order for exact checks")
      ->capture_default_str();
  check->add_option("--params", params_s, "\"upper;lower\" parameter lists")->required();
  check->add_option("--x", x_s, "argument for the numeric identities");

  CLI::App* table = app.add_subcommand("table", "CSV sweep of the 3F2 dispatcher");
  table->fallthrough();
  table->add_option("--upper", upper_s, "a1,a2,a3")->required();
  table->add_option("--lower", lower_s, "b1,b2")->required();
  table->add_option("--from", from, "first x")->required();
  table->add_option("--to", to, "last x")->required();
  table->add_option("--step", step, "grid step")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  Variant variant = variant_name == "printed" ? Variant::AsPrinted : Variant::Corrected;

  try {
    if (eval->parsed()) {
      std::vector<Complex> up = parse_list(upper_s), lo = parse_list(lower_s);
      if (!pfq_label.empty()) {
        char f = 0;
        unsigned p = 0, q = 0;
        if (std::sscanf(pfq_label.c_str(), "%u%c%u", &p, &f, &q) != 3 ||
            (f != 'F' && f != 'f') || p != up.size() || q != lo.size())
          fail(2, "pFq label does not match the parameter lists", "--pfq");
      }
      HyperSpec spec(up, lo);
      Complex z{parse_scalar(x_s), parse_scalar(xi_s)};
      SeriesResult r = eval_pfq(spec, z, tol, max_terms);
      json out{{"value", value_json(r.value)},
               {"terms_used", r.terms_used},
               {"tail_estimate", r.tail_estimate},
               {"converged", r.converged}};
      emit(out, format);
      return r.converged ? 0 : 3;
    }

    if (cont->parsed()) {
      std::vector<Complex> up = parse_list(upper_s), lo = parse_list(lower_s);
      if (up.size() != 3 || lo.size() != 2)
        fail(2, "continuation needs 3 upper and 2 lower parameters", "--upper/--lower");
      ClausenSpec spec(up[0], up[1], up[2], lo[0], lo[1]);
      Complex z{parse_scalar(x_s), 0.0};
      ContinuationReport rep_out;
      if (formula_name_s == "auto") {
        rep_out = eval_3f2_anywhere(spec, z, tol);
      } else {
        auto f = lookup_formula(formula_name_s);
        if (!f) fail(2, "unknown formula " + formula_name_s, "--formula");
        rep_out = continue_3f2(spec, z, *f, variant, tol);
      }
      json residuals = json::object();
      for (auto& [k, v] : rep_out.residuals) residuals[k] = v;
      json out{{"value", value_json(rep_out.value)},
               {"terms_used", 0},
               {"tail_estimate", 0.0},
               {"converged", true},
               {"method", formula_name(rep_out.formula)},
               {"residuals", residuals}};
      emit(out, format);
      return 0;
    }

    if (oracle->parsed()) {
      Complex x{parse_scalar(x_s), 0.0};
      Complex value;
      if (rep == "f2") {
        std::vector<Complex> p = parse_list(f2_params_s);
        if (p.size() != 5) fail(2, "f2 oracle needs a,b1,b2,c1,c2", "--f2-params");
        AppellF2Spec spec(p[0], p[1], p[2], p[3], p[4]);
        QuadratureRule rule = gauss_legendre01(nodes);
        value = appell_f2_via_integral(spec, x, {parse_scalar(y_s), 0.0}, rule);
      } else {
        std::vector<Complex> up = parse_list(upper_s), lo = parse_list(lower_s);
        if (up.size() != 3 || lo.size() != 2)
          fail(2, "integral oracles need 3F2 parameters", "--upper/--lower");
        HyperSpec spec(up, lo);
        QuadratureRule rule = build_rule(RuleKind::GaussLaguerre, nodes);
        if (rep == "1d")
          value = clausen_via_1d_integral(spec, x, rule);
        else if (rep == "2d")
          value = clausen_via_2d_integral(spec, x, rule);
        else
          value = clausen_via_3d_integral(spec, x, rule);
      }
      json out{{"value", value_json(value)},
               {"terms_used", 0},
               {"tail_estimate", 0.0},
               {"converged", true}};
      emit(out, format);
      return 0;
    }

    if (check->parsed()) {
      auto id = lookup_identity(identity_s);
      if (!id) fail(2, "unknown identity " + identity_s, "--identity");
      std::vector<std::string> halves = split(params_s, ';');
      if (halves.size() != 2) fail(2, "params must be \"upper;lower\"", "--params");

      if (id->kind == IdentityRef::Kind::Kdf) {
        std::vector<Complex> up = parse_list(halves[0]), lo = parse_list(halves[1]);
        HyperSpec spec(up, lo);
        auto [lhs, rhs] =
            kdf_identity_sides(id->kid, spec, {parse_scalar(x_s), 0.0}, tol);
        json out{{"lhs", value_json(lhs)},
                 {"rhs", value_json(rhs)},
                 {"abs_diff", std::abs(lhs - rhs)}};
        emit(out, format);
        return 0;
      }

      std::vector<Rational> up = parse_rational_list(halves[0]);
      std::vector<Rational> lo = parse_rational_list(halves[1]);
      if (id->kind == IdentityRef::Kind::Functional) {
        VerifyResult r = verify_functional_identity(id->fid, up, lo, order);
        json out{{"pass", r.pass}, {"diff", r.max_abs_coeff_diff.to_string()}};
        if (!r.pass) out["first_diff_order"] = r.first_diff_order;
        emit(out, format);
        return 0;
      }
      ExpansionAudit audit = audit_expansion(id->eid, up, lo, order);
      const VerifyResult* main_result = nullptr;
      json variants = json::array();
      for (auto& [v, res] : audit.results) {
        variants.push_back(
            json{{"variant", v == Variant::AsPrinted ? "printed" : "corrected"},
                 {"pass", res.pass},
                 {"diff", res.max_abs_coeff_diff.to_string()}});
        if (v == variant) main_result = &res;
      }
      if (!main_result) main_result = &audit.results[0].second;
      json out{{"pass", main_result->pass},
               {"diff", main_result->max_abs_coeff_diff.to_string()}};
      if (audit.has_distinct_variants) out["variants"] = variants;
      emit(out, format);
      return 0;
    }

    if (table->parsed()) {
      std::vector<Complex> up = parse_list(upper_s), lo = parse_list(lower_s);
      if (up.size() != 3 || lo.size() != 2)
        fail(2, "table needs 3F2 parameters", "--upper/--lower");
      ClausenSpec spec(up[0], up[1], up[2], lo[0], lo[1]);
      std::printf("x,re,im,method,residual_direct,residual_quad1d,error\n");
      if (step <= 0) fail(2, "step must be positive", "--step");
      for (double x = from; x <= to + 1e-12; x += step) {
        std::string method, error, rd, rq;
        Complex v{0, 0};
        try {
          ContinuationReport r = eval_3f2_anywhere(spec, {x, 0}, tol);
          v = r.value;
          method = formula_name(r.formula);
          if (r.residuals.count("direct")) rd = fmt_double(r.residuals.at("direct"));
          if (r.residuals.count("quad1d")) rq = fmt_double(r.residuals.at("quad1d"));
        } catch (const HsError& e) {
          error = e.what();
        }
        std::printf("%s,%s,%s,%s,%s,%s,%s\n", fmt_double(x).c_str(),
                    error.empty() ? fmt_double(v.real()).c_str() : "",
                    error.empty() ? fmt_double(v.imag()).c_str() : "",
                    csv_quote(method).c_str(), rd.c_str(), rq.c_str(),
                    csv_quote(error).c_str());
      }
      return 0;
    }
  } catch (const NonConvergenceError& e) {
    fail(3, e.what());
  } catch (const PoleError& e) {
    fail(2, e.what());
  } catch (const DegenerateParameters& e) {
    fail(2, e.what());
  } catch (const SingularIntegrand& e) {
    fail(2, e.what());
  } catch (const DomainError& e) {
    fail(2, e.what());
  } catch (const std::exception& e) {
    fail(4, e.what());
  }
  return 0;
}
