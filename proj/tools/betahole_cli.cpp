// betahole: command-line front end.
//
// Exit codes: 0 success, 1 computation error (the error kind is printed),
// 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "betahole/acceptance.hpp"
#include "betahole/decide.hpp"
#include "betahole/error.hpp"
#include "betahole/gamma_map.hpp"
#include "betahole/regions.hpp"
#include "json.hpp"

using namespace betahole;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string d;
  std::string greedy_one;
  double tol = 1e-9;
  std::int64_t q_cap = 20;
  std::size_t tree_depth = 8;
  std::size_t count_cap = 8;
  std::size_t descendant_depth = 2;
  std::int64_t descendant_q = 5;
  std::size_t period_cap = 0;
  std::size_t state_cap = 1'000'000;
  std::string out = "text";
  std::string output;

  // Subcommand inputs.
  std::string x;
  std::string below;
  std::size_t depth = 40;
  std::size_t period_max = 10;
  std::string a, b;
  bool closed = false;
  std::size_t n_max = 40;
  std::string mode = "least";
  std::string which = "d0";
  std::string window = "ibeta";
  std::string size = "64x64";
  std::vector<int> criteria;
  bool verify = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

QuasiGreedyD context(const RunConfig& cfg) {
  if (!cfg.d.empty() && !cfg.greedy_one.empty()) throw UsageError("give only one of --d and --greedy-one");
  if (!cfg.greedy_one.empty()) return QuasiGreedyD::from_greedy(Word(cfg.greedy_one));
  if (cfg.d.empty()) throw UsageError("this command needs --d or --greedy-one");
  return QuasiGreedyD(EPSeq::parse(cfg.d));
}

RegionCaps region_caps(const RunConfig& cfg) {
  RegionCaps caps;
  caps.pairs = {cfg.q_cap, cfg.tree_depth, cfg.count_cap};
  caps.descendant_depth = cfg.descendant_depth;
  caps.descendant_q = cfg.descendant_q;
  caps.tol = cfg.tol;
  return caps;
}

// An endpoint is a sequence "PRE(PER)" or a real number.
bool is_real(const std::string& s) { return s.find('(') == std::string::npos; }

HoleSpec hole(const RunConfig& cfg, const QuasiGreedyD& ctx) {
  if (cfg.a.empty() || cfg.b.empty()) throw UsageError("this command needs --a and --b");
  if (is_real(cfg.a) != is_real(cfg.b)) throw UsageError("--a and --b must both be sequences or both be reals");
  if (is_real(cfg.a)) return hole_from_reals(std::stod(cfg.a), std::stod(cfg.b), ctx, cfg.closed);
  return HoleSpec(EPSeq::parse(cfg.a), EPSeq::parse(cfg.b), cfg.closed);
}

json point(const PointValue& p) {
  json j{{"value", p.value}};
  if (p.seq) j["seq"] = p.seq->to_string();
  return j;
}

json fraction(const Fraction& f) { return f.to_string(); }

std::string provenance_kind(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::Balanced: return "balanced";
    case Provenance::Kind::RTree: return "rtree";
    case Provenance::Kind::Descendant: return "descendant";
  }
  return "?";
}

int cmd_expand(const RunConfig& cfg, std::ostream& os) {
  const auto ctx = context(cfg);
  json j{{"d", ctx.d().to_string()}, {"beta", ctx.beta()}, {"n", ctx.n_prefix()}};
  if (!cfg.x.empty()) {
    const auto g = greedy_expansion(std::stod(cfg.x), ctx, cfg.depth);
    j["greedy"] = {{"digits", g.digits.str()}, {"unreliable", g.unreliable}};
  }
  if (!cfg.below.empty()) {
    const EPSeq target = EPSeq::parse(cfg.below);
    const EPSeq y = max_admissible_below(target, ctx);
    j["below"] = {{"target", target.to_string()}, {"admissible", is_admissible(target, ctx)}, {"result", y.to_string()},
                  {"value", eval_point(y, ctx)}};
    if (auto f = finite_form(y, ctx)) j["below"]["finite"] = f->str();
  }
  if (cfg.out == "json") {
    os << j.dump(2) << '\n';
    return 0;
  }
  os << "d = " << ctx.d().to_string() << "\nbeta = " << ctx.beta() << "\nn = " << ctx.n_prefix() << '\n';
  if (j.contains("greedy")) os << "greedy digits = " << j["greedy"]["digits"].get<std::string>() << (j["greedy"]["unreliable"].get<bool>() ? " (unreliable)" : "") << '\n';
  if (j.contains("below")) {
    os << "greatest admissible below = " << j["below"]["result"].get<std::string>();
    if (j["below"].contains("finite")) os << " = " << j["below"]["finite"].get<std::string>() << " (finite)";
    os << '\n';
  }
  return 0;
}

int cmd_gamma(const RunConfig& cfg, std::ostream& os) {
  const auto ctx = context(cfg);
  const auto g = gamma_of_beta(ctx);
  const auto v = gamma_vector(ctx);
  json gv = json::array();
  for (const auto& f : v.entries) gv.push_back(fraction(f));
  if (cfg.out == "json") {
    os << json{{"d", ctx.d().to_string()},
               {"beta", ctx.beta()},
               {"gamma", fraction(g.value)},
               {"plateau", {g.lo.to_string(), g.hi.to_string()}},
               {"Gamma", gv},
               {"terminal", v.terminal == Terminal::Exact ? "exact" : "truncated"}}
              .dump(2)
       << '\n';
    return 0;
  }
  os << "gamma = " << g.value.to_string() << "\nplateau = [" << g.lo.to_string() << ", " << g.hi.to_string()
     << "]\nGamma = (" << fraction_list_string(v.entries) << ")" << (v.terminal == Terminal::Truncated ? " truncated" : "")
     << "\nbeta = " << ctx.beta() << '\n';
  return 0;
}

int cmd_staircase(const RunConfig& cfg, std::ostream& os) {
  std::vector<QuasiGreedyD> ds;
  for (const auto& d : periodic_expansions(cfg.period_max)) ds.emplace_back(d);
  const auto samples = staircase_samples(ds);
  if (cfg.out == "json") {
    json rows = json::array();
    for (const auto& s : samples) rows.push_back({{"beta", s.beta}, {"p", s.gamma.p()}, {"q", s.gamma.q()}});
    os << rows.dump(2) << '\n';
    return 0;
  }
  os << "beta,p,q\n";
  for (const auto& s : samples) os << s.beta << ',' << s.gamma.p() << ',' << s.gamma.q() << '\n';
  return 0;
}

int cmd_pairs(const RunConfig& cfg, std::ostream& os) {
  const auto ctx = context(cfg);
  const auto recs = enumerate_maximal_pairs(ctx, {cfg.q_cap, cfg.tree_depth, cfg.count_cap});
  if (cfg.out == "csv") os << "s,t,kind,gamma,shift,path,s_inf,ts_inf,t_inf,right_end,truncated\n";
  json out = json::array();
  for (const auto& r : recs) {
    const auto& p = r.pair;
    const double s = eval_point(EPSeq::periodic(p.s), ctx), ts = eval_point(EPSeq(p.t, p.s), ctx),
                 t = eval_point(EPSeq::periodic(p.t), ctx), right = eval_point(r.right_end(), ctx);
    if (cfg.out == "csv") {
      os << p.s.str() << ',' << p.t.str() << ',' << provenance_kind(p.provenance.kind) << ',' << p.provenance.gamma.to_string()
         << ',' << p.provenance.shift << ',' << p.provenance.path << ',' << s << ',' << ts << ',' << t << ',' << right << ','
         << (r.truncated ? 1 : 0) << '\n';
      continue;
    }
    json j{{"s", p.s.str()},
           {"t", p.t.str()},
           {"provenance", {{"kind", provenance_kind(p.provenance.kind)}, {"gamma", fraction(p.provenance.gamma)}}},
           {"corners", {{"s_inf", s}, {"ts_inf", ts}, {"t_inf", t}, {"right_end", right}}},
           {"truncated", r.truncated.has_value()}};
    if (p.provenance.kind == Provenance::Kind::Balanced) j["provenance"]["shift"] = p.provenance.shift;
    if (p.provenance.kind == Provenance::Kind::RTree) j["provenance"]["path"] = p.provenance.path;
    if (cfg.verify) j["verified"] = verify_maximal(p, ctx, cfg.period_cap ? cfg.period_cap : 3 * p.s.size());
    if (r.truncated) {
      j["truncation"] = r.truncated->to_string();
      if (auto f = finite_form(*r.truncated, ctx)) j["truncation_finite"] = f->str();
    }
    out.push_back(std::move(j));
  }
  if (cfg.out == "json") os << out.dump(2) << '\n';
  else if (cfg.out != "csv") {
    for (const auto& j : out) {
      os << '(' << j["s"].get<std::string>() << ", " << j["t"].get<std::string>() << ") " << j["provenance"]["kind"].get<std::string>()
         << ' ' << j["provenance"]["gamma"].get<std::string>();
      if (j.contains("truncation")) os << " truncated at " << j["truncation"].get<std::string>();
      os << '\n';
    }
  }
  return 0;
}

int cmd_decide(const RunConfig& cfg, std::ostream& os) {
  const auto ctx = context(cfg);
  const HoleSpec h = hole(cfg, ctx);
  const auto automaton = build_avoider(ctx, h, cfg.state_cap);
  const auto c = classify(automaton, ctx, h);
  json cycles = json::array();
  for (const auto& w : c.cycles) cycles.push_back(w.str());
  if (cfg.out == "json") {
    os << json{{"a", h.a.to_string()},
               {"b", h.b.to_string()},
               {"closed", h.closed},
               {"kind", to_string(c.kind)},
               {"states", automaton.states.size()},
               {"prefix", c.prefix.str()},
               {"cycles", cycles}}
              .dump(2)
       << '\n';
    return 0;
  }
  os << to_string(c.kind) << '\n';
  if (c.kind == SurvivorKind::CountableNonempty) os << "witness orbit " << EPSeq(c.prefix, c.cycles[0]).to_string() << '\n';
  if (c.kind == SurvivorKind::Uncountable) {
    os << "witness cycles " << c.cycles[0].str() << " and " << c.cycles[1].str() << " after " << (c.prefix.empty() ? "(empty)" : c.prefix.str())
       << '\n';
  }
  os << "automaton states " << automaton.states.size() << '\n';
  return 0;
}

int cmd_badn(const RunConfig& cfg, std::ostream& os) {
  const auto ctx = context(cfg);
  const HoleSpec h = hole(cfg, ctx);
  if (cfg.mode != "least" && cfg.mode != "divisor") throw UsageError("--mode must be least or divisor");
  const auto mode = cfg.mode == "least" ? PeriodMode::Least : PeriodMode::Divisor;
  const auto nb = n_beta(ctx);
  const auto bad = bad_n(ctx, h, cfg.n_max, mode);
  if (cfg.out == "json") {
    os << json{{"N_beta", nb}, {"n_max", cfg.n_max}, {"mode", cfg.mode}, {"bad", bad}}.dump(2) << '\n';
    return 0;
  }
  os << "N_beta = " << nb << "\nbad n = {";
  bool first = true;
  for (auto n : bad) {
    os << (first ? "" : ", ") << n;
    first = false;
  }
  os << "}\n";
  return 0;
}

int cmd_regions(const RunConfig& cfg, std::ostream& os) {
  const auto ctx = context(cfg);
  Which which;
  if (cfg.which == "d0") which = Which::D0;
  else if (cfg.which == "d1") which = Which::D1;
  else if (cfg.which == "d2") which = Which::D2;
  else throw UsageError("--which must be d0, d1 or d2");
  const RegionModel model(ctx, region_caps(cfg));
  const auto line = model.boundary(which);
  if (cfg.out == "csv") {
    os << "a,b,kind,pair_s,pair_t\n";
    for (const auto& c : line.corners) {
      const auto& p = model.pairs()[c.pair].pair;
      os << c.a.value << ',' << c.b.value << ",\"" << c.kind << "\"," << p.s.str() << ',' << p.t.str() << '\n';
    }
    return 0;
  }
  json corners = json::array();
  for (const auto& c : line.corners) {
    const auto& p = model.pairs()[c.pair].pair;
    corners.push_back({{"a", point(c.a)}, {"b", point(c.b)}, {"kind", c.kind}, {"pair", {p.s.str(), p.t.str()}}});
  }
  os << json{{"which", to_string(which)}, {"corners", corners}}.dump(2) << '\n';
  return 0;
}

int cmd_raster(const RunConfig& cfg, std::ostream& os) {
  const auto ctx = context(cfg);
  std::size_t w = 0, h = 0;
  {
    char x = 0;
    std::istringstream in(cfg.size);
    if (!(in >> w >> x >> h) || x != 'x' || w == 0 || h == 0) throw UsageError("--size must look like 64x64");
  }
  double a0, a1, b0, b1;
  if (cfg.window == "ibeta" || cfg.window == "iβ" || cfg.window == "rbeta" || cfg.window == "rβ") {
    Rect r;
    if (cfg.window == "ibeta" || cfg.window == "iβ") {
      r = i_beta(ctx);
    } else {
      const auto rb = r_beta(ctx);
      if (!rb) throw Error("EmptyRegion", "R_beta is empty for " + ctx.d().to_string());
      r = *rb;
    }
    a0 = r.x_lo.value, a1 = r.x_hi.value, b0 = r.y_lo.value, b1 = r.y_hi.value;
  } else {
    char c1, c2, c3;
    std::istringstream in(cfg.window);
    if (!(in >> a0 >> c1 >> a1 >> c2 >> b0 >> c3 >> b1) || c1 != ',' || c2 != ',' || c3 != ',') {
      throw UsageError("--window must be ibeta, rbeta or a0,a1,b0,b1");
    }
  }
  const RegionModel model(ctx, region_caps(cfg));
  const Raster r = raster(model, a0, a1, b0, b1, w, h);
  if (cfg.out == "csv") write_csv(r, os);
  else if (cfg.out == "pgm") write_pgm(r, os);
  else throw UsageError("raster output is pgm or csv");
  return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  std::vector<int> ids = cfg.criteria;
  if (ids.empty()) {
    for (int k = 1; k <= kCriterionCount; ++k) ids.push_back(k);
  }
  int failed = 0;
  json rows = json::array();
  for (int k : ids) {
    const auto r = run_criterion(k);
    failed += !r.pass;
    if (cfg.out == "json") {
      rows.push_back({{"criterion", k}, {"name", r.name}, {"pass", r.pass}, {"checks", r.checks}, {"failures", r.failures}, {"seconds", r.seconds}});
      continue;
    }
    char line[256];
    std::snprintf(line, sizeof line, "%d  %-50s %s  %5d checks  %4zu failed  %7.2fs\n", k, r.name.c_str(), r.pass ? "PASS" : "FAIL",
                  r.checks, r.failures.size(), r.seconds);
    os << line;
    for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 3); ++i) os << "     " << r.failures[i] << '\n';
  }
  if (cfg.out == "json") os << rows.dump(2) << '\n';
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Beta-transformations with a hole: expansions, extremal pairs, survivor sets and region pictures."};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "read options from a TOML file");
  bool dump_config = false;
  app.add_flag("--dump-config", dump_config, "print the effective options as TOML and exit")->configurable(false);

  RunConfig cfg;
  auto positive = CLI::PositiveNumber;
  app.add_option("--d", cfg.d, "quasi-greedy expansion of 1, e.g. \"(10010000)\"");
  app.add_option("--greedy-one", cfg.greedy_one, "finite greedy expansion of 1, e.g. 11");
  app.add_option("--tol", cfg.tol, "numeric tolerance for region classification")->check(CLI::Range(1e-300, 1e-3));
  app.add_option("--q-cap", cfg.q_cap, "denominator cap for balanced pairs")->envname("BETAHOLE_Q_CAP")->check(positive);
  app.add_option("--tree-depth", cfg.tree_depth, "depth of the R_beta tree families")->envname("BETAHOLE_TREE_DEPTH")->check(positive);
  app.add_option("--count-cap", cfg.count_cap, "tree roots taken from the k-family")->envname("BETAHOLE_COUNT_CAP")->check(positive);
  app.add_option("--descendant-depth", cfg.descendant_depth, "Farey descendant depth for D1")
      ->envname("BETAHOLE_DESCENDANT_DEPTH")
      ->check(positive);
  app.add_option("--descendant-q", cfg.descendant_q, "denominator cap for descendant r")->envname("BETAHOLE_DESCENDANT_Q")->check(positive);
  app.add_option("--period-cap", cfg.period_cap, "oracle period cap (0 picks 3|s|)")->envname("BETAHOLE_PERIOD_CAP");
  app.add_option("--state-cap", cfg.state_cap, "automaton state budget")->envname("BETAHOLE_STATE_CAP")->check(positive);
  app.add_option("--out", cfg.out, "text, json, csv or pgm")->check(CLI::IsMember({"text", "json", "csv", "pgm"}));
  app.add_option("--output", cfg.output, "write to this file instead of stdout");

  auto* expand = app.add_subcommand("expand", "beta, n, greedy digits and admissible truncation")->fallthrough();
  expand->add_option("--x", cfg.x, "real in [0,1) to expand");
  expand->add_option("--below", cfg.below, "sequence to truncate to the greatest admissible one below it");
  expand->add_option("--depth", cfg.depth, "greedy digits to print")->check(positive);
  auto* gamma = app.add_subcommand("gamma", "gamma(beta), its plateau and the descendant vector")->fallthrough();
  auto* stair = app.add_subcommand("staircase", "(beta, gamma) over all periodic d up to a period")->fallthrough();
  stair->add_option("--period-max", cfg.period_max, "largest period of d")->check(CLI::Range(2, 20));
  auto* pairs = app.add_subcommand("pairs", "maximal extremal pairs")->fallthrough();
  pairs->add_flag("--verify", cfg.verify, "check maximality of each pair with the automaton and oracle");
  auto* dec = app.add_subcommand("decide", "empty, countable or uncountable survivor set")->fallthrough();
  auto* badn = app.add_subcommand("badn", "N_beta and the bad periods of a hole")->fallthrough();
  for (auto* sub : {dec, badn}) {
    sub->add_option("--a", cfg.a, "left end: sequence PRE(PER) or real");
    sub->add_option("--b", cfg.b, "right end: sequence PRE(PER) or real");
    sub->add_flag("--closed", cfg.closed, "closed hole [a,b]");
  }
  badn->add_option("--n-max", cfg.n_max, "largest period checked")->check(positive);
  badn->add_option("--mode", cfg.mode, "least or divisor");
  auto* regions = app.add_subcommand("regions", "boundary polyline of D0, D1 or D2")->fallthrough();
  regions->add_option("--which", cfg.which, "d0, d1 or d2");
  auto* rast = app.add_subcommand("raster", "classification raster")->fallthrough();
  rast->add_option("--window", cfg.window, "ibeta, rbeta or a0,a1,b0,b1");
  rast->add_option("--size", cfg.size, "WxH");
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria")->fallthrough();
  verify->add_option("criteria", cfg.criteria, "criterion numbers (default: all)")->check(CLI::Range(1, kCriterionCount))->configurable(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (dump_config) {
    std::cout << app.config_to_str(true, false);
    return 0;
  }

  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << cfg.output << '\n';
      return 2;
    }
  }
  std::ostream& os = cfg.output.empty() ? std::cout : file;
  try {
    if (*expand) return cmd_expand(cfg, os);
    if (*gamma) return cmd_gamma(cfg, os);
    if (*stair) return cmd_staircase(cfg, os);
    if (*pairs) return cmd_pairs(cfg, os);
    if (*dec) return cmd_decide(cfg, os);
    if (*badn) return cmd_badn(cfg, os);
    if (*regions) return cmd_regions(cfg, os);
    if (*rast) return cmd_raster(cfg, os);
    if (*verify) return cmd_verify(cfg, os);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: not a number\n";
    return 2;
  }
  return 2;
}
