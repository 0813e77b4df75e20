// Command-line front end: per-triple invariant queries plus the
// verification sweeps.  Exit codes: 0 all consistent, 1 verification
// mismatch, 2 usage or config error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsk/classify.hpp"
#include "lsk/invariants.hpp"
#include "lsk/params.hpp"
#include "lsk/structure.hpp"
#include "lsk/sweep.hpp"

namespace {

using lsk::int_t;

const char* bstr(bool b) { return b ? "true" : "false"; }

std::string families_str(const std::vector<lsk::FamilyMatch>& ms) {
  if (ms.empty()) return "(none)";
  std::string out;
  for (size_t i = 0; i < ms.size(); ++i) {
    if (i) out += ";";
    out += lsk::family_token(ms[i]);
  }
  return out;
}

int cmd_gbar(int_t p, int_t q, int_t k, const std::string& mode_name) {
  lsk::GbarMode mode = lsk::GbarMode::Fast;
  if (mode_name == "oracle") mode = lsk::GbarMode::Oracle;
  else if (mode_name == "full") mode = lsk::GbarMode::FullDomain;
  else if (mode_name != "fast") throw lsk::usage_error("unknown mode: " + mode_name);

  auto t = lsk::Triple::checked(p, q, k);
  auto r = lsk::gbar(t, mode);
  std::cout << "gbar(" << p << "," << q << "," << k << ") = " << r.gbar
            << "  [" << mode_name << "]\n"
            << "argmax_count = " << r.argmax_count << "\n"
            << "max_pair = (" << r.max_pair.first << ", " << r.max_pair.second << ")\n"
            << "genus_minimizing = " << bstr(r.gbar < 2 * p) << "\n";
  return 0;
}

int cmd_genus(int_t p, int_t q, int_t k) {
  auto t = lsk::Triple::checked(p, q, k);
  int_t g = lsk::big_g(t);
  int_t gen = lsk::genus(t);
  std::cout << "big_g(" << p << "," << q << "," << k << ") = " << g << "\n"
            << "genus = " << gen << "\n";
  return 0;
}

int cmd_params(int_t k, int_t q) {
  auto ps = lsk::derive_params(k, q);
  std::cout << "d = " << ps.d << "\nxi = " << ps.xi << "\nalpha = " << ps.alpha
            << "\nc = " << ps.c << "\ngamma = " << ps.gamma << "\nmu = " << ps.mu
            << "\nm = " << ps.m << "\ntype = " << lsk::q_type_name(ps.type) << "\n";
  return 0;
}

nlohmann::ordered_json points_json(const std::vector<lsk::MobilePoint>& pts) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& mp : pts) {
    nlohmann::ordered_json j;
    j["kind"] = mp.kind == lsk::MobileKind::R ? "R" : "L";
    switch (mp.window) {
      case lsk::MobileWindow::Start: j["window"] = "start"; break;
      case lsk::MobileWindow::End: j["window"] = "end"; break;
      case lsk::MobileWindow::Psi: j["window"] = "psi"; break;
      case lsk::MobileWindow::PsiBar: j["window"] = "psibar"; break;
    }
    j["l"] = mp.l;
    j["i"] = mp.i;
    j["active_times"] = mp.active_times;
    arr.push_back(j);
  }
  return arr;
}

int cmd_structure(int_t k, int_t q, bool as_json) {
  auto zd = lsk::z_decompose(k, q);
  auto mr = lsk::mobile_report(zd);
  auto cv = lsk::consecutive_v_check(k, q);

  if (as_json) {
    nlohmann::ordered_json j;
    j["k"] = zd.k;
    j["q"] = zd.q;
    j["params"] = {{"d", zd.params.d},   {"xi", zd.params.xi},
                   {"alpha", zd.params.alpha}, {"c", zd.params.c},
                   {"gamma", zd.params.gamma}, {"mu", zd.params.mu},
                   {"m", zd.params.m},   {"type", lsk::q_type_name(zd.params.type)}};
    j["eps"] = zd.eps;
    j["n"] = zd.n;
    j["z"] = zd.z;
    j["dq"] = zd.dq;
    j["psi"] = zd.psi;
    j["psibar"] = zd.psibar;
    j["mobile"] = points_json(mr.mobile);
    j["pseudomobile"] = points_json(mr.pseudomobile);
    j["antipseudomobile"] = points_json(mr.antipseudomobile);
    auto neut = nlohmann::ordered_json::array();
    for (const auto& np : mr.neutralized_pairs) {
      nlohmann::ordered_json nj;
      nj["window"] = np.window == lsk::MobileWindow::Start  ? "start"
                     : np.window == lsk::MobileWindow::End  ? "end"
                     : np.window == lsk::MobileWindow::Psi ? "psi"
                                                            : "psibar";
      nj["i"] = np.i;
      nj["l_r"] = np.l_r;
      nj["l_l"] = np.l_l;
      neut.push_back(nj);
    }
    j["neutralized_pairs"] = neut;
    nlohmann::ordered_json cj;
    if (cv.r_star)
      cj["r_star"] = *cv.r_star;
    else
      cj["r_star"] = nullptr;
    cj["spectrum_ok"] = cv.spectrum_ok;
    j["consecutive_v"] = cj;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "k = " << zd.k << ", q = " << zd.q << " (" << lsk::q_type_name(zd.params.type)
            << ")\n"
            << "d = " << zd.params.d << ", eps = " << zd.eps << ", dq = " << zd.dq
            << ", psi = " << zd.psi << ", psibar = " << zd.psibar << "\n";
  std::cout << "n = [";
  for (size_t j = 0; j < zd.n.size(); ++j) std::cout << (j ? "," : "") << zd.n[j];
  std::cout << "]\n";
  std::cout << "mobile = " << mr.mobile.size() << ", pseudomobile = " << mr.pseudomobile.size()
            << ", antipseudomobile = " << mr.antipseudomobile.size()
            << ", neutralized_pairs = " << mr.neutralized_pairs.size() << "\n";
  std::cout << "consecutive_v: spectrum_ok = " << bstr(cv.spectrum_ok);
  if (cv.r_star) std::cout << ", r_star = " << *cv.r_star;
  std::cout << "\n";
  return 0;
}

int cmd_classify(int_t p, int_t k) {
  auto fs = lsk::match_families(p, k);
  if (!fs.coprime) {
    std::cout << "gcd(p,k) > 1: no family applies\n";
    return 0;
  }
  std::cout << "p = " << p << " = " << lsk::rep(p, k * k) << " (mod " << k * k << ")\n"
            << "families = " << families_str(fs.matches) << "\n";
  return 0;
}

int cmd_check(int_t p, int_t q, int_t k) {
  auto cc = lsk::conjecture_check(p, q, k);
  std::cout << "congruence_ok = " << bstr(cc.congruence_ok) << "\n"
            << "families = " << families_str(cc.families) << "\n"
            << "gm = " << bstr(cc.gm) << "\n"
            << "gbar = " << cc.gbar << "\n"
            << "eligible = " << bstr(cc.eligible) << "\n"
            << "consistent = " << bstr(cc.consistent) << "\n";
  return cc.consistent ? 0 : 1;
}

struct VerifyOpts {
  int_t kmin = 2, kmax = 2;
  std::string pwindow = "period";
  std::string out_path;
  std::string format = "jsonl";
  int workers = 0;
};

std::vector<int_t> parse_p_list(const std::string& s) {
  std::vector<int_t> out;
  if (s == "period" || s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw lsk::usage_error("bad --pwindow entry: " + tok);
    }
  }
  if (out.empty()) throw lsk::usage_error("empty --pwindow list");
  return out;
}

int run_verify(const std::string& name, const VerifyOpts& o,
               lsk::SweepSummary (*fn)(const lsk::SweepConfig&)) {
  lsk::SweepConfig cfg;
  cfg.k_min = o.kmin;
  cfg.k_max = o.kmax;
  cfg.p_list = parse_p_list(o.pwindow);
  cfg.workers = o.workers;

  auto t0 = std::chrono::steady_clock::now();
  lsk::SweepSummary s = fn(cfg);
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();

  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw lsk::usage_error("cannot open output file: " + o.out_path);
    if (o.format == "jsonl")
      lsk::write_jsonl(f, s.records);
    else if (o.format == "csv")
      lsk::write_csv(f, s.records);
    else
      throw lsk::usage_error("unknown format: " + o.format);
  }

  std::cout << name << ": k in [" << o.kmin << "," << o.kmax << "] checked=" << s.checked
            << " skipped=" << s.skipped << " mismatches=" << s.mismatches.size()
            << " elapsed=" << secs << "s\n";
  for (const auto& m : s.mismatches) std::cout << "  MISMATCH " << m << "\n";
  return s.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lsk: simple-knot invariants in lens spaces (exact arithmetic)"};
  app.require_subcommand(1);

  int_t p = 0, q = 0, k = 0;
  std::string mode = "fast";
  bool as_json = false;
  VerifyOpts vo;

  auto* c_gbar = app.add_subcommand("gbar", "Gbar of a triple (p, q, k)");
  c_gbar->add_option("p", p)->required();
  c_gbar->add_option("q", q)->required();
  c_gbar->add_option("k", k)->required();
  c_gbar->add_option("--mode", mode, "fast|oracle|full")->default_val("fast");

  auto* c_genus = app.add_subcommand("genus", "degree and genus of a triple");
  c_genus->add_option("p", p)->required();
  c_genus->add_option("q", q)->required();
  c_genus->add_option("k", k)->required();

  auto* c_params = app.add_subcommand("params", "parameterization of q mod k^2");
  c_params->add_option("k", k)->required();
  c_params->add_option("q", q)->required();

  auto* c_structure = app.add_subcommand("structure", "z-tuple decomposition diagnostics");
  c_structure->add_option("k", k)->required();
  c_structure->add_option("q", q)->required();
  c_structure->add_flag("--json", as_json, "dump the full report as JSON");

  auto* c_classify = app.add_subcommand("classify", "Berge family matches of (p, k)");
  c_classify->add_option("p", p)->required();
  c_classify->add_option("k", k)->required();

  auto* c_check = app.add_subcommand("check", "conjecture check for (p, q, k), p > k^2");
  c_check->add_option("p", p)->required();
  c_check->add_option("q", q)->required();
  c_check->add_option("k", k)->required();

  auto add_verify_opts = [&vo](CLI::App* c, bool with_window) {
    c->add_option("--kmin", vo.kmin)->required();
    c->add_option("--kmax", vo.kmax)->required();
    if (with_window)
      c->add_option("--pwindow", vo.pwindow, "'period' or comma-separated p values");
    c->add_option("--out", vo.out_path, "write records to this path");
    c->add_option("--format", vo.format, "jsonl|csv")->default_val("jsonl");
    c->add_option("--workers", vo.workers, "worker threads (0 = all cores)");
  };

  auto* c_vk2 = app.add_subcommand("verify-k2", "brute force vs closed forms at p = k^2");
  add_verify_opts(c_vk2, false);
  auto* c_vth = app.add_subcommand("verify-theorem", "conjecture check over a p window");
  add_verify_opts(c_vth, true);
  auto* c_vrd = app.add_subcommand("verify-reduction", "p > k^2 reduction equivalence");
  add_verify_opts(c_vrd, true);
  auto* c_vst = app.add_subcommand("verify-structure",
                                   "spectrum + activity counts for gm positive-type q");
  add_verify_opts(c_vst, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_gbar->parsed()) return cmd_gbar(p, q, k, mode);
    if (c_genus->parsed()) return cmd_genus(p, q, k);
    if (c_params->parsed()) return cmd_params(k, q);
    if (c_structure->parsed()) return cmd_structure(k, q, as_json);
    if (c_classify->parsed()) return cmd_classify(p, k);
    if (c_check->parsed()) return cmd_check(p, q, k);
    if (c_vk2->parsed()) return run_verify("verify-k2", vo, lsk::verify_k2);
    if (c_vth->parsed()) return run_verify("verify-theorem", vo, lsk::verify_theorem);
    if (c_vrd->parsed()) return run_verify("verify-reduction", vo, lsk::verify_reduction);
    if (c_vst->parsed()) return run_verify("verify-structure", vo, lsk::verify_structure);
  } catch (const lsk::usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
