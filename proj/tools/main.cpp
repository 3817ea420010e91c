// Batch front end: every decision procedure of the library behind one
// command each, with exact JSON-compatible input and output.  Exit codes:
// 0 success, 1 domain error (surfaced verbatim), 2 usage error.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "curvelim/classification.hpp"
#include "curvelim/io.hpp"
#include "curvelim/pairing.hpp"
#include "curvelim/picard.hpp"
#include "curvelim/plane.hpp"
#include "curvelim/riemann_roch.hpp"
#include "survey.hpp"

using namespace curvelim;

namespace {

int worker_count_from_env() {
  const char* raw = std::getenv("CURVELIM_WORKERS");
  if (raw == nullptr || *raw == '\0') return 1;
  try {
    return std::stoi(raw);
  } catch (const std::exception&) {
    throw std::invalid_argument("CURVELIM_WORKERS must be an integer");
  }
}

struct CurveDivisorArgs {
  std::string curve;
  std::string divisor;
  bool json = false;
};

void add_curve_option(CLI::App* cmd, std::string& slot) {
  cmd->add_option("--curve", slot, R"(curve as {"p": 7, "f": [c0, c1, ...]})")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact divisor, divisor-class, and rank-2-limit calculator for "
               "hyperelliptic curves y^2 = f(x) over odd prime fields"};
  app.require_subcommand(1);

  // h0 --curve C --divisor D
  CurveDivisorArgs h0_args;
  CLI::App* cmd_h0 = app.add_subcommand("h0", "dimension of the space of functions with "
                                              "div(h) + D >= 0");
  add_curve_option(cmd_h0, h0_args.curve);
  cmd_h0->add_option("--divisor", h0_args.divisor, "divisor as [[place, mult], ...]")
      ->required();
  cmd_h0->add_flag("--json", h0_args.json, "machine output");
  cmd_h0->callback([&] {
    Curve c = parse_curve(h0_args.curve);
    int64_t n = h0(c, parse_divisor(c, h0_args.divisor));
    if (h0_args.json) {
      std::cout << "{\"h0\":" << n << "}\n";
    } else {
      std::cout << n << "\n";
    }
  });

  // divisor-of --curve C --element E
  std::string de_curve, de_element;
  bool de_json = false;
  CLI::App* cmd_div = app.add_subcommand("divisor-of", "zero/pole divisor of a function "
                                                       "(a(x) + y*b(x)) / c(x)");
  add_curve_option(cmd_div, de_curve);
  cmd_div->add_option("--element", de_element,
                      R"(function as {"a": [...], "b": [...], "c": [...]})")
      ->required();
  cmd_div->add_flag("--json", de_json, "machine output");
  cmd_div->callback([&] {
    Curve c = parse_curve(de_curve);
    Divisor d = function_divisor(c, parse_element(c, de_element));
    std::cout << (de_json ? divisor_json(d) : d.to_string()) << "\n";
  });

  // decompose --curve C --divisor D
  CurveDivisorArgs dec_args;
  CLI::App* cmd_dec = app.add_subcommand("decompose", "write the class of D uniquely as "
                                                      "k * H + [simple remainder]");
  add_curve_option(cmd_dec, dec_args.curve);
  cmd_dec->add_option("--divisor", dec_args.divisor, "divisor as [[place, mult], ...]")
      ->required();
  cmd_dec->add_flag("--json", dec_args.json, "machine output");
  cmd_dec->callback([&] {
    Curve c = parse_curve(dec_args.curve);
    Decomposition d = simple_decomposition(c, parse_divisor(c, dec_args.divisor));
    if (dec_args.json) {
      std::cout << decomposition_json(d) << "\n";
    } else {
      std::cout << "k = " << d.k << "\nremainder = " << d.d.to_string()
                << "\nclass = " << d.cls.to_string() << "\n";
    }
  });

  // gg --curve C --divisor D
  CurveDivisorArgs gg_args;
  CLI::App* cmd_gg = app.add_subcommand("gg", "is the complete linear system of D "
                                              "base-point free?");
  add_curve_option(cmd_gg, gg_args.curve);
  cmd_gg->add_option("--divisor", gg_args.divisor, "divisor as [[place, mult], ...]")
      ->required();
  cmd_gg->add_flag("--json", gg_args.json, "machine output");
  cmd_gg->callback([&] {
    Curve c = parse_curve(gg_args.curve);
    bool gg = is_globally_generated(c, parse_divisor(c, gg_args.divisor));
    if (gg_args.json) {
      std::cout << "{\"globally_generated\":" << (gg ? "true" : "false") << "}\n";
    } else {
      std::cout << (gg ? "true" : "false") << "\n";
    }
  });

  // classify-limit --curve C --class L
  std::string cl_curve, cl_class;
  bool cl_json = false;
  CLI::App* cmd_cl = app.add_subcommand("classify-limit",
                                        "is L + L^-1 a limit of the trivial rank-2 bundle?");
  add_curve_option(cmd_cl, cl_curve);
  cmd_cl->add_option("--class", cl_class,
                     R"(class as {"u": [...], "v": [...], "degree": d} or H^k)")
      ->required();
  cmd_cl->add_flag("--json", cl_json, "machine output");
  cmd_cl->callback([&] {
    Curve c = parse_curve(cl_curve);
    std::cout << verdict_json(is_limit_of_trivial(c, parse_class(c, cl_class))) << "\n";
  });

  // ext-split --curve C --class L
  std::string es_curve, es_class;
  bool es_json = false;
  CLI::App* cmd_es = app.add_subcommand("ext-split", "do all extensions of L by L^-1 "
                                                     "split? (first cohomology of L^2)");
  add_curve_option(cmd_es, es_curve);
  cmd_es->add_option("--class", es_class,
                     R"(class as {"u": [...], "v": [...], "degree": d} or H^k)")
      ->required();
  cmd_es->add_flag("--json", es_json, "machine output");
  cmd_es->callback([&] {
    Curve c = parse_curve(es_curve);
    bool split = split_criterion(c, parse_class(c, es_class));
    if (es_json) {
      std::cout << "{\"splits\":" << (split ? "true" : "false") << "}\n";
    } else {
      std::cout << (split ? "true" : "false") << "\n";
    }
  });

  // koszul-pair --curve C --dl D --s E --t E --w E
  std::string kp_curve, kp_dl, kp_s, kp_t, kp_w;
  bool kp_json = false;
  CLI::App* cmd_kp = app.add_subcommand("koszul-pair",
                                        "residue pairing of the two-section extension "
                                        "class against a dual differential");
  add_curve_option(cmd_kp, kp_curve);
  cmd_kp->add_option("--dl", kp_dl, "divisor of the line bundle, [[place, mult], ...]")
      ->required();
  cmd_kp->add_option("--s", kp_s, "first section, as an element")->required();
  cmd_kp->add_option("--t", kp_t, "second section, as an element")->required();
  cmd_kp->add_option("--w", kp_w, "dual differential h of w = h * dx/y, as an element")
      ->required();
  cmd_kp->add_flag("--json", kp_json, "machine output");
  cmd_kp->callback([&] {
    Curve c = parse_curve(kp_curve);
    Divisor dl = parse_divisor(c, kp_dl);
    Fp v = koszul_pair(c, dl, parse_element(c, kp_s), parse_element(c, kp_t),
                       Differential{parse_element(c, kp_w)});
    if (kp_json) {
      std::cout << "{\"value\":" << v.value() << ",\"p\":" << v.modulus() << "}\n";
    } else {
      std::cout << v.value() << "\n";
    }
  });

  // u2e --curve C --dl D --s E --t E --u E
  std::string ue_curve, ue_dl, ue_s, ue_t, ue_u;
  bool ue_json = false;
  CLI::App* cmd_ue = app.add_subcommand("u2e", "pair the u^2-multiplied extension class "
                                               "against the dual basis; splits = all zero");
  add_curve_option(cmd_ue, ue_curve);
  cmd_ue->add_option("--dl", ue_dl, "divisor of the line bundle, [[place, mult], ...]")
      ->required();
  cmd_ue->add_option("--s", ue_s, "first section, as an element")->required();
  cmd_ue->add_option("--t", ue_t, "second section, as an element")->required();
  cmd_ue->add_option("--u", ue_u, "section of the square, as an element")->required();
  cmd_ue->add_flag("--json", ue_json, "machine output");
  cmd_ue->callback([&] {
    Curve c = parse_curve(ue_curve);
    Divisor dl = parse_divisor(c, ue_dl);
    PairingReport rep = u2e_functional(c, dl, parse_element(c, ue_s), parse_element(c, ue_t),
                                       parse_element(c, ue_u));
    if (ue_json) {
      std::cout << pairing_report_json(rep) << "\n";
    } else {
      std::cout << "values:";
      for (const Fp& v : rep.values) std::cout << " " << v.value();
      std::cout << "\nsplits: " << (rep.splits ? "true" : "false") << "\n";
    }
  });

  // prop4 --d 5 --k 1
  int64_t p4_d = 0, p4_k = 0;
  bool p4_json = false;
  CLI::App* cmd_p4 = app.add_subcommand("prop4", "existence certificate for an "
                                                 "indecomposable rank-2 limit on a smooth "
                                                 "degree-d plane curve");
  cmd_p4->add_option("--d", p4_d, "plane curve degree")->required();
  cmd_p4->add_option("--k", p4_k, "destabilizing twist")->required();
  cmd_p4->add_flag("--json", p4_json, "machine output");
  cmd_p4->callback([&] {
    Certificate cert = prop4_certificate(p4_d, p4_k);
    if (p4_json) {
      std::cout << certificate_json(cert) << "\n";
    } else {
      std::cout << cert.to_text();
    }
  });

  // rho --g 2 --r 0 --d 2
  int64_t rho_g = 0, rho_r = 0, rho_d = 0;
  bool rho_json = false;
  CLI::App* cmd_rho = app.add_subcommand("rho", "Brill-Noether number "
                                                "g - (r+1)(r+g-d)");
  cmd_rho->add_option("--g", rho_g, "genus")->required();
  cmd_rho->add_option("--r", rho_r, "projective dimension of the system")->required();
  cmd_rho->add_option("--d", rho_d, "degree")->required();
  cmd_rho->add_flag("--json", rho_json, "machine output");
  cmd_rho->callback([&] {
    int64_t v = brill_noether_rho(rho_g, rho_r, rho_d);
    if (rho_json) {
      std::cout << "{\"rho\":" << v << "}\n";
    } else {
      std::cout << v << "\n";
    }
  });

  // survey [--seed 42] [--trials 200]
  uint64_t sv_seed = 42;
  int64_t sv_trials = 200;
  bool sv_json = false;
  CLI::App* cmd_sv = app.add_subcommand("survey", "randomized sweep of every library "
                                                  "invariant over the fixture curves "
                                                  "(p = 101, genus 2..4)");
  cmd_sv->add_option("--seed", sv_seed, "root seed (default 42)");
  cmd_sv->add_option("--trials", sv_trials, "trials per invariant (default 200)")
      ->check(CLI::PositiveNumber);
  cmd_sv->add_flag("--json", sv_json, "machine output");
  cmd_sv->callback([&] {
    SurveyReport rep = run_survey(sv_seed, sv_trials, worker_count_from_env());
    std::cout << (sv_json ? survey_json(rep) + "\n" : survey_text(rep));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
