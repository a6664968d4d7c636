#include "betahole/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "betahole/decide.hpp"
#include "betahole/error.hpp"
#include "betahole/gamma_map.hpp"
#include "betahole/oracles.hpp"
#include "betahole/regions.hpp"

namespace betahole {
namespace {

EPSeq seq(const char* text) { return EPSeq::parse(text); }
QuasiGreedyD ctx(const char* d) { return QuasiGreedyD(seq(d)); }

// Collects failed sub-checks; the first few are echoed in the summary line.
struct Ledger {
  int checks = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void near(double got, double want, double tol, const std::string& what) {
    std::ostringstream os;
    os << what << " got " << got << " want " << want << " tol " << tol;
    expect(std::fabs(got - want) <= tol, os.str());
  }
};

void worked_examples(Ledger& L) {
  L.expect(quasi_greedy_from_greedy(Word("11")) == seq("(10)"), "quasi-greedy of 11");
  L.near(beta_from_d(seq("(10)")), 1.6180339887, 1e-9, "golden beta");
  const std::pair<Fraction, const char*> words[] = {{Fraction(1, 2), "10"}, {Fraction(1, 3), "100"}, {Fraction(2, 3), "110"},
                                                    {Fraction(2, 5), "10100"}, {Fraction(3, 5), "11010"}};
  for (const auto& [g, w] : words) L.expect(balanced_word(g) == Word(w), "balanced word " + g.to_string());
  const auto bp = balanced_pair(Fraction(2, 5));
  L.expect(bp.s == Word("01010") && bp.t == Word("10010"), "balanced pair 2/5");
  const auto dp = descendant_pair({Fraction(2, 5), Fraction(1, 2)});
  L.expect(dp.first == Word("0101010010") && dp.second == Word("1001001010"), "descendant pair (2/5,1/2)");

  const auto trunc = ctx("(10010000)");
  L.expect(gamma_of_beta(trunc).value == Fraction(1, 4), "gamma of (10010000)");
  const auto gv = gamma_vector(trunc);
  L.expect(gv.entries == std::vector<Fraction>{Fraction(1, 4), Fraction(1, 2)}, "Gamma of (10010000)");
  const auto dw = descendant_pair(gv.entries);
  L.expect(dw.first == Word("01001000") && dw.second == Word("10000100"), "descendant words of Gamma");

  const auto gs = rbeta_gammas(Fraction(1, 4), 4);
  L.expect(gs.size() >= 2 && gs[0] == Fraction(2, 7) && gs[1] == Fraction(3, 11), "R_beta gammas of 1/4");
  L.expect(min_shift(Fraction(2, 7)) == Word("0001001"), "u_{2/7}");
  auto middle = [&](const Fraction& g) -> std::optional<MaximalPairRecord> {
    for (const auto& r : rbeta_tree_pairs(g, trunc.n_prefix(), trunc, 8)) {
      if (r.pair.provenance.path.empty()) return r;
    }
    return std::nullopt;
  };
  const auto m27 = middle(Fraction(2, 7)), m311 = middle(Fraction(3, 11));
  L.expect(m27 && m27->pair.s == Word("00001001") && m27->pair.t == Word("00010010"), "2/7 middle pair");
  L.expect(m311 && m311->pair.s == Word("000010001001") && m311->pair.t == Word("000100010010"), "3/11 middle pair");
  L.expect(m311 && m311->truncated && finite_form(*m311->truncated, trunc) == Word("00001001"), "3/11 truncation");

  L.expect(is_extremal(Word("0011"), Word("0110")), "extremal (0011,0110)");
  L.expect(is_extremal(Word("0110"), Word("1001")), "extremal (0110,1001)");
  L.expect(is_extremal(Word("1001"), Word("1100")), "extremal (1001,1100)");
  L.expect(!is_extremal(Word("0110"), Word("1100")), "not extremal (0110,1100)");
}

void region_numerics(Ledger& L) {
  const auto trunc = ctx("(10010000)");
  struct Want {
    Fraction g;
    double x0, x1, y0, y1;
  };
  for (const Want& w : {Want{Fraction(2, 7), 0.227, 0.245, 0.324, 0.344}, Want{Fraction(3, 11), 0.2238, 0.227, 0.319, 0.324}}) {
    const Rect r = rbeta_family_rect(trunc, w.g);
    const std::string tag = w.g.to_string() + " rect ";
    L.near(r.x_lo.value, w.x0, 5e-3, tag + "x_lo");
    L.near(r.x_hi.value, w.x1, 5e-3, tag + "x_hi");
    L.near(r.y_lo.value, w.y0, 5e-3, tag + "y_lo");
    L.near(r.y_hi.value, w.y1, 5e-3, tag + "y_hi");
  }
  L.near(trunc.beta(), 1.427, 5e-4, "beta (10010000)");
  L.near(ctx("(1100)").beta(), 1.755, 5e-4, "beta (1100)");
}

void staircase(Ledger& L) {
  std::vector<QuasiGreedyD> ds;
  for (const auto& d : periodic_expansions(10)) ds.emplace_back(d);
  L.expect(ds.size() >= 200, "several hundred contexts");
  const auto samples = staircase_samples(ds);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    if (!(samples[i].gamma <= samples[i + 1].gamma)) {
      L.expect(false, "gamma decreases after beta " + std::to_string(samples[i].beta));
    }
  }
  L.expect(true, "gamma nondecreasing");
  double lo = 2, hi = 1, above = 2;
  for (const auto& s : samples) {
    if (s.gamma == Fraction(1, 2)) {
      lo = std::min(lo, s.beta);
      hi = std::max(hi, s.beta);
    } else if (Fraction(1, 2) < s.gamma) {
      above = std::min(above, s.beta);
    }
  }
  // The sampled plateau and the exact plateau ends found by the search.
  const auto g = gamma_of_beta(ctx("(10)"));
  L.near(lo, 1.6180, 1e-3, "lowest sampled beta with gamma 1/2");
  L.near(beta_from_d(g.lo), 1.6180, 1e-3, "plateau left end");
  L.near(beta_from_d(g.hi), 1.8019, 1e-3, "plateau right end");
  // No period-10 context lies within 1e-3 of the right end; the samples
  // on either side must bracket it.
  L.expect(hi <= 1.8019 && 1.8019 <= above, "samples bracket the right end");
  L.expect(above - hi < 2.5e-3, "bracket width");
}

void trichotomy(Ledger& L) {
  std::mt19937 rng(77);
  std::bernoulli_distribution bit(0.5);
  auto word = [&](int lo, int hi) {
    std::string s(std::uniform_int_distribution<int>(lo, hi)(rng), '0');
    for (auto& ch : s) ch = bit(rng) ? '1' : '0';
    return Word(s);
  };
  const char* ds[] = {"(10)", "(1100)", "(10010000)", "(1110)", "(110)"};
  int holes = 0, seen[3] = {0, 0, 0};
  while (holes < 250) {
    const auto c = ctx(ds[holes % 5]);
    EPSeq a(word(0, 5), word(1, 5)), b(word(0, 5), word(1, 5));
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    const HoleSpec h(a, b, holes % 3 == 0);
    ++holes;
    const auto r = decide(c, h);
    ++seen[static_cast<int>(r.kind)];
    const auto found = oracle_periodic_survivor(c, h, 14);
    const std::string tag = std::string(ds[holes % 5]) + " " + a.to_string() + " " + b.to_string();
    switch (r.kind) {
      case SurvivorKind::Empty: L.expect(!found, "empty but oracle survivor " + tag); break;
      case SurvivorKind::CountableNonempty: L.expect(survives(EPSeq(r.prefix, r.cycles[0]), c, h), "countable witness " + tag); break;
      case SurvivorKind::Uncountable:
        L.expect(verify_two_cycles(c, h, r.prefix, r.cycles[0], r.cycles[1]), "two cycles " + tag);
        break;
    }
  }
  L.expect(seen[0] > 0 && seen[1] > 0 && seen[2] > 0, "all three kinds seen");

  int pairs = 0;
  for (const char* d : ds) {
    const auto c = ctx(d);
    for (const auto& rec : enumerate_maximal_pairs(c, {12, 5, 4})) {
      const auto& p = rec.pair;
      const std::string tag = std::string(d) + " (" + p.s.str() + "," + p.t.str() + ")";
      L.expect(verify_maximal(p, c, 3 * p.s.size()), "verify_maximal " + tag);
      L.expect(decide(c, HoleSpec(EPSeq::periodic(p.s), EPSeq::periodic(p.t))).kind == SurvivorKind::CountableNonempty,
               "corner hole " + tag);
      ++pairs;
    }
  }
  L.expect(pairs > 50, "enough maximal pairs");
}

void transfer(Ledger& L) {
  const std::size_t n_max = 40;
  const Word eps_up("1");
  int pairs = 0;
  for (const char* d : {"(10)", "(1100)", "(10010000)", "(1110)"}) {
    const auto c = ctx(d);
    for (const auto& rec : enumerate_maximal_pairs(c, {8, 3, 2})) {
      const auto& p = rec.pair;
      if (3 * p.s.size() >= n_max || !blocks_admissible(p.s, p.t, c)) continue;
      ++pairs;
      const std::string tag = std::string(d) + " (" + p.s.str() + "," + p.t.str() + ")";
      const EPSeq s_inf = EPSeq::periodic(p.s), t_inf = EPSeq::periodic(p.t);
      // Just inside the lower-left corner and just right of the plateau.
      const HoleSpec low(s_inf, EPSeq(p.t + p.s.pow(8), Word("0")));
      const HoleSpec right(EPSeq(p.s + p.t.pow(8), eps_up), t_inf);
      for (const HoleSpec* h : {&low, &right}) {
        L.expect(decide(c, *h).kind == SurvivorKind::Uncountable, "uncountable " + tag);
        const auto bad = bad_n(c, *h, n_max);
        const auto first_late = bad.upper_bound(3 * p.s.size());
        if (first_late != bad.end()) {
          L.expect(false, "bad n " + std::to_string(*first_late) + " beyond 3|s| for " + tag);
        }
      }
      for (const auto& r1 : fractions_up_to(3)) {
        for (const auto& r2 : fractions_up_to(3)) {
          const ExtremalPair dp = farey_descendants(p, {r1, r2});
          const HoleSpec h(EPSeq(dp.s + dp.t, dp.s), EPSeq(dp.t, dp.s));
          L.expect(decide(c, h).kind == SurvivorKind::CountableNonempty, "descendant hole " + tag + " " + dp.s.str());
        }
      }
    }
  }
  L.expect(pairs >= 8, "enough pairs satisfy the block hypothesis");
}

void figures(Ledger& L) {
  for (const char* d : {"(1100)", "(10010000)"}) {
    const auto c = ctx(d);
    const RegionModel m(c);
    const Rect ib = i_beta(c);
    const Raster r = raster(m, ib.x_lo.value, ib.x_hi.value, ib.y_lo.value, ib.y_hi.value, 64, 64);
    const BoundaryPolyline lines[] = {m.boundary(Which::D0), m.boundary(Which::D1), m.boundary(Which::D2)};
    int compared = 0;
    for (std::size_t row = 0; row < r.height; ++row) {
      for (std::size_t col = 0; col < r.width; ++col) {
        const RegionClass k = r.at(row, col);
        if (row + 1 < r.height && k != RegionClass::Unknown && r.at(row + 1, col) != RegionClass::Unknown) {
          L.expect(code(r.at(row + 1, col)) >= code(k), "nesting breaks in column " + std::to_string(col));
        }
        const double a = r.a_of(col), b = r.b_of(row);
        if (a >= b) continue;
        double dist = INFINITY;
        for (const auto& l : lines) dist = std::min(dist, distance_to(l, a, b));
        if (dist <= 1e-3) continue;
        const std::string tag = std::string(d) + " cell " + std::to_string(row) + "," + std::to_string(col);
        if (k == RegionClass::Unknown) {
          L.expect(false, "unresolved far from boundaries " + tag);
          continue;
        }
        const SurvivorKind want = k == RegionClass::Outside  ? SurvivorKind::Empty
                                  : k == RegionClass::D0only ? SurvivorKind::CountableNonempty
                                                             : SurvivorKind::Uncountable;
        L.expect(decide(c, hole_from_reals(a, b, c)).kind == want, "theory and automaton differ at " + tag);
        ++compared;
      }
    }
    L.expect(compared > 2000, std::string(d) + " compared cells");
  }

  const auto c = ctx("(10010000)");
  const auto recs = enumerate_maximal_pairs(c, {12, 5, 4});
  int families = 0;
  for (const auto& x : recs) {
    const auto& px = x.pair.provenance;
    if (px.kind != Provenance::Kind::Balanced) continue;
    for (const auto& y : recs) {
      const auto& py = y.pair.provenance;
      if (py.kind != Provenance::Kind::Balanced || py.gamma != px.gamma || py.shift != px.shift + 1) continue;
      const double ax = eval_point(EPSeq::periodic(x.pair.s), c), ay = eval_point(EPSeq::periodic(y.pair.s), c);
      L.near(ay, ax / c.beta(), 1e-12, "shifted family " + px.gamma.to_string());
      ++families;
    }
  }
  // n = 3 gives three copies: shifts 1, 2, 3 of each balanced pair.
  L.expect(families >= 2 * 5, "three-fold shifted families present");
}

void widths(Ledger& L) {
  for (const char* d : {"(10)", "(1100)", "(10010000)", "(1110)", "(110)"}) {
    const auto c = ctx(d);
    const double b = c.beta();
    const int n = c.n_prefix();
    const auto cb = c_bounds(c);
    L.near(cb.c0, std::pow(b, n - 1) * (b - 1) / (std::pow(b, n + 1) - 1), 1e-15, std::string(d) + " C0");
    L.near(cb.c1, (b - 1) / (b * b), 1e-15, std::string(d) + " C1");
    L.expect(cb.c1 == cb.c2, std::string(d) + " C1 = C2");
    double w0 = 0, w2 = 0;
    for (const auto& rec : enumerate_maximal_pairs(c, {8, 3, 2})) {
      const double s = eval_point(EPSeq::periodic(rec.pair.s), c);
      w0 = std::max(w0, eval_point(EPSeq::periodic(rec.pair.t), c) - s);
      w2 = std::max(w2, eval_point(EPSeq(rec.pair.t, rec.pair.s), c) - s);
    }
    L.expect(w0 <= cb.c0 + 1e-9, std::string(d) + " D0 corners within C0");
    L.expect(w2 <= cb.c2 + 1e-9, std::string(d) + " D1/D2 corners within C1 = C2");
    if (std::string(d) == "(1110)") L.near(w2, cb.c2, 1e-9, "(1110) widest D2 corner");
  }
}

struct Criterion {
  const char* name;
  double budget_s;
  void (*run)(Ledger&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"worked-example exactness", 1, worked_examples},
    {"region numerics (tol 5e-3, beta 5e-4)", 10, region_numerics},
    {"staircase (gamma monotone, 1/2 plateau 1e-3)", 60, staircase},
    {"trichotomy vs brute force, maximal pairs", 300, trichotomy},
    {"transfer lemma holes (bad n past 3|s|, n <= 40)", 120, transfer},
    {"region rasters vs automaton (64x64, 1e-3 margin)", 600, figures},
    {"width bounds (1e-9)", 1, widths},
};

}  // namespace

const char* criterion_name(int id) {
  if (id < 1 || id > kCriterionCount) throw Error("InvalidCriterion", "criteria are numbered 1.." + std::to_string(kCriterionCount));
  return kCriteria[id - 1].name;
}

CriterionResult run_criterion(int id) {
  criterion_name(id);
  const Criterion& cr = kCriteria[id - 1];
  Ledger L;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    cr.run(L);
  } catch (const Error& e) {
    L.expect(false, std::string("error ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  L.expect(secs <= cr.budget_s, "time " + std::to_string(secs) + "s over budget");
  return {id, cr.name, L.failures.empty(), L.checks, std::move(L.failures), secs};
}

}  // namespace betahole
