#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bilat/parser.hpp"
#include "bilat/serialize.hpp"

namespace {

using namespace bilat;

struct Options {
  std::string kind = "four";
  std::string format = "table";
  std::string program_path;
  std::string at_path;
  std::string route;
  std::string method = "phi-prime";
  std::string op;
  bool trace = false;
  bool all = false;
  bool oracle = false;
  bool serial = false;
  std::size_t limit = kEnumerationLimit;
  std::uint64_t seed = 0;  // accepted for reproducibility; commands are deterministic
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'", 0, 0);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void emit(const std::string& text) { std::cout << text; }
void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

template <BilatticeValue V>
Interpretation<V> load_at(const Options& opt, const GroundProgram<V>& g) {
  if (opt.at_path.empty()) return Interpretation<V>::bottom_k(g.atoms);
  return parse_interpretation<V>(read_file(opt.at_path), g.atoms);
}

template <BilatticeValue V>
int cmd_kk(const Options& opt, const GroundProgram<V>& g) {
  auto r = kripke_kleene(g);
  if (opt.format == "json") {
    Json j{{"kk", interp_to_json(r.value)}};
    if (opt.trace) j["trace"] = trace_to_json(r.trace);
    emit_json(j);
  } else if (opt.trace) {
    emit(trace_to_text(r.trace, "K"));
  } else {
    emit(interp_to_text(r.value));
  }
  return 0;
}

template <BilatticeValue V>
int cmd_wf(const Options& opt, const GroundProgram<V>& g) {
  if (opt.route.empty()) {
    if (opt.trace) throw parse_error("--trace requires --route", 0, 0);
    auto wf = well_founded_checked(g);  // all applicable routes must agree
    if (opt.format == "json") {
      emit_json(Json{{"wf", interp_to_json(wf)}});
    } else {
      emit(interp_to_text(wf));
    }
    return 0;
  }
  auto route = wf_route_from_string(opt.route);
  if (!route) throw parse_error("unknown route '" + opt.route + "'", 0, 0);
  if (*route == WfRoute::psi_prime && !g.literal_normal)
    throw parse_error("psi-prime route requires negation on literals only", 0, 0);
  auto run = well_founded(g, *route);
  if (opt.format == "json") {
    Json j = wf_run_to_json(run, *route);
    j["wf"] = interp_to_json(run.value);
    j["route"] = opt.route;
    emit_json(j);
  } else if (opt.trace) {
    emit(wf_run_to_text(run, *route));
  } else {
    emit(interp_to_text(run.value));
  }
  return 0;
}

template <BilatticeValue V>
int cmd_stable_check(const Options& opt, const GroundProgram<V>& g) {
  auto method = stable_method_from_string(opt.method);
  if (!method) throw parse_error("unknown method '" + opt.method + "'", 0, 0);
  if (*method == StableCheckMethod::psi_prime_fixpoint && !g.literal_normal)
    throw parse_error("psi-prime method requires negation on literals only", 0, 0);
  if (*method == StableCheckMethod::gl_reduct_classical &&
      !(std::same_as<V, four::Value> && g.classical))
    throw parse_error("gl-reduct method requires a classical FOUR program", 0, 0);
  bool stable = is_stable(g, load_at(opt, g), *method);
  if (opt.format == "json") {
    emit_json(Json{{"stable", stable}, {"method", opt.method}});
  } else {
    emit(std::string("stable: ") + (stable ? "true" : "false") + "\n");
  }
  return 0;
}

int cmd_stable_enumerate(const Options& opt, const GroundProgram<four::Value>& g) {
  auto mode = opt.serial ? ExecMode::serial : ExecMode::parallel;
  auto stable = enumerate_stable(g, opt.limit, mode);
  if (opt.format == "json") {
    Json arr = Json::array();
    for (const auto& i : stable) arr.push_back(interp_to_json(i));
    emit_json(Json{{"stable", arr}});
    return 0;
  }
  std::string out = "stable models: " + std::to_string(stable.size()) + "\n";
  for (size_t k = 0; k < stable.size(); ++k) {
    out += "\nstable[" + std::to_string(k) + "]\n";
    out += interp_to_text(stable[k]);
  }
  emit(out);
  return 0;
}

int cmd_classify(const Options& opt, const GroundProgram<four::Value>& g) {
  ClassifyOptions copt;
  copt.all = opt.all;
  copt.limit = opt.limit;
  copt.mode = opt.serial ? ExecMode::serial : ExecMode::parallel;
  auto report = classify(g, copt);
  if (opt.format == "json") {
    emit_json(classify_report_to_json(g, report));
  } else {
    emit(classify_report_to_text(g, report));
  }
  return 0;
}

template <BilatticeValue V>
int cmd_support(const Options& opt, const GroundProgram<V>& g) {
  auto at = load_at(opt, g);
  auto sp = support(g, at);
  bool oracle_ran = false;
  if (opt.oracle) {
    if constexpr (std::same_as<V, four::Value>) {
      auto mode = opt.serial ? ExecMode::serial : ExecMode::parallel;
      if (!(brute_force_support(g, at, kSupportOracleLimit, mode) == sp.support))
        throw invariant_error("support oracle divergence");
      if (g.classical && classical_interp(at)) {
        auto via_def = greatest_unfounded_set_by_definition(g, at, kUnfoundedOracleLimit, mode);
        if (!(via_def == greatest_unfounded_set(g, at)))
          throw invariant_error("unfounded-set oracle divergence");
      }
      oracle_ran = true;
    } else {
      throw parse_error("--oracle requires --kind four", 0, 0);
    }
  }
  if (opt.format == "json") {
    Json j{{"support", interp_to_json(sp.support)}};
    if (opt.trace) j["trace"] = trace_to_json(sp.trace);
    if (oracle_ran) j["oracle"] = "agree";
    emit_json(j);
  } else {
    if (opt.trace) {
      emit(trace_to_text(sp.trace, "h"));
    } else {
      emit(interp_to_text(sp.support));
    }
    if (oracle_ran) emit("oracle: agree\n");
  }
  return 0;
}

template <BilatticeValue V>
int cmd_eval(const Options& opt, const GroundProgram<V>& g) {
  auto out = phi(g, load_at(opt, g));
  if (opt.format == "json") {
    emit_json(Json{{"phi", interp_to_json(out)}});
  } else {
    emit(interp_to_text(out));
  }
  return 0;
}

template <BilatticeValue V>
int cmd_trace(const Options& opt, const GroundProgram<V>& g) {
  auto at = load_at(opt, g);
  if (opt.op == "phi") {
    auto r = kripke_kleene(g);
    opt.format == "json" ? emit_json(Json{{"K", trace_to_json(r.trace)}})
                         : emit(trace_to_text(r.trace, "K"));
    return 0;
  }
  if (opt.op == "psi-prime") {
    if (!g.literal_normal)
      throw parse_error("psi-prime requires negation on literals only", 0, 0);
    auto r = psi_prime(g, at);
    opt.format == "json" ? emit_json(Json{{"v", trace_to_json(r.trace)}})
                         : emit(trace_to_text(r.trace, "v"));
    return 0;
  }
  if (opt.op == "support") {
    auto r = support(g, at);
    opt.format == "json" ? emit_json(Json{{"h", trace_to_json(r.trace)}})
                         : emit(trace_to_text(r.trace, "h"));
    return 0;
  }
  if (opt.op == "phi-prime") {
    auto r = phi_prime(g, at);
    if (opt.format == "json") {
      emit_json(Json{{"h", trace_to_json(r.support.trace)}, {"J", trace_to_json(r.j_trace)}});
    } else {
      emit(trace_to_text(r.support.trace, "h"));
      emit("\n");
      emit(trace_to_text(r.j_trace, "J"));
    }
    return 0;
  }
  throw parse_error("unknown operator '" + opt.op + "'", 0, 0);
}

template <BilatticeValue V>
int dispatch(const std::string& cmd, const Options& opt) {
  auto g = build_pstar(parse_program<V>(read_file(opt.program_path)));
  if (cmd == "kk") return cmd_kk(opt, g);
  if (cmd == "wf") return cmd_wf(opt, g);
  if (cmd == "stable") {
    if (!opt.at_path.empty()) return cmd_stable_check(opt, g);
    if constexpr (std::same_as<V, four::Value>) {
      return cmd_stable_enumerate(opt, g);
    } else {
      throw parse_error("stable-model enumeration requires --kind four (use --at FILE "
                        "for fixpoint verification over intervals)",
                        0, 0);
    }
  }
  if (cmd == "classify") {
    if constexpr (std::same_as<V, four::Value>) {
      return cmd_classify(opt, g);
    } else {
      throw parse_error("classify requires --kind four", 0, 0);
    }
  }
  if (cmd == "support") return cmd_support(opt, g);
  if (cmd == "eval") return cmd_eval(opt, g);
  if (cmd == "trace") return cmd_trace(opt, g);
  throw parse_error("unknown command '" + cmd + "'", 0, 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logic-program semantics over bilattices: Kripke-Kleene, "
               "well-founded and stable models"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--kind", opt.kind, "Value space: four | interval")
      ->check(CLI::IsMember({"four", "interval"}));
  app.add_option("--format", opt.format, "Output format: table | json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--seed", opt.seed, "Reproducibility seed (all commands are deterministic)");
  app.add_flag("--serial", opt.serial, "Disable the parallel enumeration kernels");

  std::string cmd;
  auto add_common = [&](CLI::App* sub, bool with_at) {
    sub->fallthrough();  // global flags (--kind, --format, ...) work after the subcommand
    sub->add_option("program", opt.program_path, "Program file (.blp)")->required();
    if (with_at)
      sub->add_option("--at", opt.at_path, "Interpretation file (omitted atoms are bot)");
    sub->callback([&, sub] { cmd = sub->get_name(); });
  };

  auto* kk = app.add_subcommand("kk", "Kripke-Kleene model (least cl-model under <=k)");
  add_common(kk, false);
  kk->add_flag("--trace", opt.trace, "Print the K-sequence");

  auto* wf = app.add_subcommand("wf", "Well-founded model (least stable model)");
  add_common(wf, false);
  wf->add_option("--route", opt.route,
                 "psi-prime | pi | pi-tilde | phi-prime (default: run all and compare)");
  wf->add_flag("--trace", opt.trace, "Print the route's iteration tables");

  auto* stable = app.add_subcommand("stable", "Check (--at) or enumerate stable models");
  add_common(stable, true);
  stable->add_option("--method", opt.method,
                     "psi-prime | phi-prime | kk-completion | gl-reduct");
  stable->add_option("--limit", opt.limit, "Enumeration atom limit");

  auto* classify = app.add_subcommand("classify", "Tables of cl-models with all flags");
  add_common(classify, false);
  classify->add_flag("--all", opt.all, "Every interpretation, not only cl-models");
  classify->add_option("--limit", opt.limit, "Enumeration atom limit");

  auto* support = app.add_subcommand("support", "Greatest safe interpretation Sp_P(I)");
  add_common(support, true);
  support->add_flag("--trace", opt.trace, "Print the h-sequence");
  support->add_flag("--oracle", opt.oracle, "Cross-check against brute-force oracles");

  auto* eval = app.add_subcommand("eval", "One Phi step: every rule body's value at I");
  add_common(eval, true);

  auto* trace = app.add_subcommand("trace", "Dump an operator's iteration");
  add_common(trace, true);
  trace->add_option("--op", opt.op, "phi | psi-prime | support | phi-prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return opt.kind == "interval" ? dispatch<interval::Value>(cmd, opt)
                                  : dispatch<four::Value>(cmd, opt);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
