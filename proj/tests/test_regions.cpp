#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "betahole/decide.hpp"
#include "betahole/error.hpp"
#include "betahole/regions.hpp"

using namespace betahole;

namespace {

EPSeq seq(const char* text) { return EPSeq::parse(text); }

RegionCaps small_caps() {
  RegionCaps caps;
  caps.pairs = {12, 5, 4};
  caps.descendant_depth = 1;
  caps.descendant_q = 5;
  return caps;
}

PointValue pv(const char* text, const QuasiGreedyD& ctx) { return PointValue::of(seq(text), ctx); }

const Corner* find_corner(const BoundaryPolyline& line, const EPSeq& a, const std::string& kind) {
  for (const auto& c : line.corners) {
    if (*c.a.seq == a && c.kind == kind) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("I_beta") {
  const QuasiGreedyD trunc(seq("(10010000)"));
  const Rect r = i_beta(trunc);
  CHECK(*r.x_lo.seq == seq("0(0001)"));
  CHECK(*r.x_hi.seq == seq("0(10010000)"));
  CHECK(*r.y_lo.seq == seq("(0001)"));
  CHECK(*r.y_hi.seq == seq("1(0001)"));
  CHECK(std::fabs(r.x_hi.value - 1 / trunc.beta()) < 1e-9);

  const QuasiGreedyD golden(seq("(10)"));
  const Rect g = i_beta(golden);
  CHECK(*g.x_lo.seq == seq("0(01)"));
  CHECK(*g.x_hi.seq == seq("(01)"));
  CHECK(*g.y_lo.seq == seq("(01)"));
  CHECK(*g.y_hi.seq == seq("1(01)"));

  // Near β = 2 the rectangle tends to (1/4,1/2) × (1/2,3/4).
  const Rect w = i_beta(QuasiGreedyD(seq("(1111111110)")));
  CHECK(std::fabs(w.x_lo.value - 0.25) < 0.02);
  CHECK(std::fabs(w.x_hi.value - 0.5) < 0.02);
  CHECK(std::fabs(w.y_lo.value - 0.5) < 0.02);
  CHECK(std::fabs(w.y_hi.value - 0.75) < 0.02);
}

TEST_CASE("R_beta") {
  const QuasiGreedyD trunc(seq("(10010000)"));
  const auto r = r_beta(trunc);
  REQUIRE(r);
  CHECK(*r->x_lo.seq == seq("0(0001)"));
  CHECK(*r->x_hi.seq == finite_word_point(Word("0001"), trunc));
  CHECK(*r->y_lo.seq == seq("(0001)"));
  CHECK(*r->y_hi.seq == finite_word_point(Word("001"), trunc));
  CHECK(std::fabs(r->x_hi.value - std::pow(trunc.beta(), -4)) < 1e-9);
  CHECK_FALSE(r_beta(QuasiGreedyD(seq("(10)"))));
  CHECK(r_beta(QuasiGreedyD(seq("(1100)"))));
}

TEST_CASE("width bounds") {
  const auto near2 = c_bounds(QuasiGreedyD(seq("(111111111110)")));
  CHECK(std::fabs(near2.c0 - 1.0 / 3) < 2e-3);
  CHECK(std::fabs(near2.c1 - 0.25) < 2e-3);
  const QuasiGreedyD golden(seq("(10)"));
  const auto g = c_bounds(golden);
  CHECK(std::fabs(g.c1 - 0.2360680) < 1e-6);
  CHECK(g.c1 == g.c2);

  for (const char* d : {"(1100)", "(10010000)", "(1110)"}) {
    const QuasiGreedyD ctx(seq(d));
    const RegionModel model(ctx, small_caps());
    const auto cb = c_bounds(ctx);
    double w0 = 0, w2 = 0;
    for (const auto& p : model.plateaus()) {
      w0 = std::max(w0, p.t.value - p.s.value);
      w2 = std::max(w2, p.ts.value - p.s.value);
    }
    CHECK(w0 <= cb.c0 + 1e-9);
    CHECK(w2 <= cb.c2 + 1e-9);
    CHECK(w0 > cb.c0 - 1e-9);
    CHECK(w2 > cb.c2 - 1e-9);
  }
}

TEST_CASE("boundary corners") {
  const QuasiGreedyD fat(seq("(1100)"));
  const RegionModel m1(fat, small_caps());
  const auto d0 = m1.boundary(Which::D0);
  const Corner* top = find_corner(d0, seq("(01)"), "s,t");
  REQUIRE(top);
  CHECK(*top->b.seq == seq("(10)"));
  // 01(10)^∞ contains 1101 ≻ 1100, so the plateau is cut at (0110)^∞.
  const Corner* right = find_corner(d0, seq("(0110)"), "trunc,t");
  REQUIRE(right);
  CHECK(right->b.value == top->b.value);
  CHECK(*right->b.seq == seq("(10)"));

  const QuasiGreedyD trunc(seq("(10010000)"));
  const RegionModel m2(trunc, small_caps());
  const auto t0 = m2.boundary(Which::D0);
  const Corner* cut = find_corner(t0, seq("0(10010000)"), "trunc,t");
  REQUIRE(cut);
  CHECK(*cut->b.seq == seq("(1000)"));
  CHECK(m2.pairs()[cut->pair].pair.s == Word("0100"));
  CHECK(find_corner(t0, seq("(0100)"), "s,t"));
  const auto t2 = m2.boundary(Which::D2);
  const Corner* cut2 = find_corner(t2, seq("0(10010000)"), "trunc,ts");
  REQUIRE(cut2);
  CHECK(*cut2->b.seq == seq("1000(0100)"));
  CHECK(std::fabs(cut2->a.value - 1 / trunc.beta()) < 1e-12);
}

TEST_CASE("classify_point") {
  const QuasiGreedyD golden(seq("(10)"));
  const RegionModel g(golden, small_caps());
  CHECK(g.classify(PointValue::real(0.9), PointValue::real(0.95)) == RegionClass::D2);

  const QuasiGreedyD fat(seq("(1100)"));
  const RegionModel m(fat, small_caps());
  CHECK(m.classify(pv("(01)", fat), pv("(10)", fat)) == RegionClass::D0only);
  // The lower corner of the plateau: its hole still leaves only the orbit of
  // s^∞, as decide confirms below.
  CHECK(m.classify(pv("(01)", fat), pv("10(01)", fat)) == RegionClass::D0only);
  CHECK(decide(fat, HoleSpec(seq("(01)"), seq("10(01)"))).kind == SurvivorKind::CountableNonempty);
  CHECK(m.classify(pv("(01)", fat), pv("11(0)", fat)) == RegionClass::Outside);
  // A value within tolerance of a corner cannot be resolved numerically.
  const double a = eval_point(seq("(01)"), fat), b = eval_point(seq("(10)"), fat);
  CHECK(m.classify(PointValue::real(a), PointValue::real(b)) == RegionClass::Unknown);
  CHECK(classify_point(fat, pv("(01)", fat), pv("(10)", fat), small_caps()) == RegionClass::D0only);
}

TEST_CASE("raster") {
  const QuasiGreedyD fat(seq("(1100)"));
  const RegionModel m(fat, small_caps());
  const Raster one = raster(m, 0.3, 0.32, 0.5, 0.52, 1, 1);
  CHECK(one.cells.size() == 1);
  CHECK(one.at(0, 0) == m.classify(PointValue::real(0.31), PointValue::real(0.51)));
  CHECK_THROWS_AS(raster(m, 0.3, 0.2, 0.5, 0.6, 4, 4), Error);

  const Raster r = raster(m, 0.2, 0.6, 0.3, 0.8, 8, 6);
  std::ostringstream pgm, csv;
  write_pgm(r, pgm);
  write_csv(r, csv);
  CHECK(pgm.str().starts_with("P5\n8 6\n255\n"));
  CHECK(pgm.str().size() == std::string("P5\n8 6\n255\n").size() + 48);
  const std::string rows = csv.str();
  CHECK(std::count(rows.begin(), rows.end(), '\n') == 6);
}

TEST_CASE("tree family rectangles") {
  const QuasiGreedyD trunc(seq("(10010000)"));
  struct Want {
    Fraction g;
    double x0, x1, y0, y1;
  };
  for (const Want& w : {Want{Fraction(2, 7), 0.227, 0.245, 0.324, 0.344}, Want{Fraction(3, 11), 0.2238, 0.227, 0.319, 0.324}}) {
    const Rect r = rbeta_family_rect(trunc, w.g);
    CHECK(std::fabs(r.x_lo.value - w.x0) < 5e-3);
    CHECK(std::fabs(r.x_hi.value - w.x1) < 5e-3);
    CHECK(std::fabs(r.y_lo.value - w.y0) < 5e-3);
    CHECK(std::fabs(r.y_hi.value - w.y1) < 5e-3);
    const auto rb = *r_beta(trunc);
    CHECK(r.x_lo.value >= rb.x_lo.value - 1e-12);
    CHECK(r.x_hi.value <= rb.x_hi.value + 1e-12);
  }
}

TEST_CASE("property: staircase boundaries") {
  for (const char* d : {"(1100)", "(10010000)", "(10)"}) {
    const QuasiGreedyD ctx(seq(d));
    const RegionModel m(ctx, small_caps());
    for (Which w : {Which::D0, Which::D1, Which::D2}) {
      const auto line = m.boundary(w);
      REQUIRE(line.corners.size() > 2);
      for (std::size_t i = 1; i < line.corners.size(); ++i) {
        CHECK(*line.corners[i - 1].a.seq <= *line.corners[i].a.seq);
        CHECK(*line.corners[i - 1].b.seq <= *line.corners[i].b.seq);
      }
      for (const auto& c : line.corners) {
        CHECK(is_admissible(*c.a.seq, ctx));
        CHECK(is_admissible(*c.b.seq, ctx));
        CHECK(std::fabs(c.a.value - eval_point(*c.a.seq, ctx)) < 1e-9);
      }
    }
  }
}

TEST_CASE("property: nesting and width bound on rasters") {
  for (const char* d : {"(1100)", "(10010000)", "(10)", "(1110)"}) {
    const QuasiGreedyD ctx(seq(d));
    const RegionModel m(ctx, small_caps());
    const Rect ib = i_beta(ctx);
    const Raster r = raster(m, ib.x_lo.value, ib.x_hi.value, ib.y_lo.value, ib.y_hi.value, 48, 48);
    const auto cb = c_bounds(ctx);
    for (std::size_t row = 0; row < r.height; ++row) {
      for (std::size_t col = 0; col < r.width; ++col) {
        const RegionClass k = r.at(row, col);
        const double width = r.b_of(row) - r.a_of(col);
        const bool in0 = k == RegionClass::D0only || k == RegionClass::D1only || k == RegionClass::D2;
        const bool in1 = k == RegionClass::D1only || k == RegionClass::D2;
        if (in0) CHECK(width < cb.c0 + 1e-9);
        if (in1) CHECK(width < cb.c1 + 1e-9);
        if (k == RegionClass::D2) CHECK(width < cb.c2 + 1e-9);
        // Moving down (smaller b) never leaves a region.
        if (row + 1 < r.height && r.at(row + 1, col) != RegionClass::Unknown && k != RegionClass::Unknown) {
          CHECK(code(r.at(row + 1, col)) >= code(k));
        }
      }
    }
  }
}

TEST_CASE("property: descendant intervals fill each plateau") {
  const QuasiGreedyD ctx(seq("(1100)"));
  RegionCaps caps = small_caps();
  caps.descendant_depth = 2;
  const RegionModel m(ctx, caps);
  for (std::size_t i = 0; i < m.pairs().size(); ++i) {
    if (m.pairs()[i].truncated) continue;
    const auto& p = m.plateaus()[i];
    const auto& pr = m.pairs()[i].pair;
    const double full = eval_point(EPSeq(pr.s, pr.t), ctx) - p.s.value;
    std::vector<std::pair<double, double>> iv;
    for (const auto& s : p.steps) iv.emplace_back(s.left.value, s.right.value);
    std::sort(iv.begin(), iv.end());
    double covered = 0, reach = -1;
    for (auto [l, r] : iv) {
      l = std::max(l, reach);
      if (r > l) {
        covered += r - l;
        reach = r;
      }
    }
    CHECK(covered >= 0.99 * full);
  }
}

TEST_CASE("property: regions agree with the automaton away from boundaries") {
  for (const char* d : {"(1100)", "(10)"}) {
    const QuasiGreedyD ctx(seq(d));
    const RegionModel m(ctx, small_caps());
    const Rect ib = i_beta(ctx);
    const Raster r = raster(m, ib.x_lo.value, ib.x_hi.value, ib.y_lo.value, ib.y_hi.value, 24, 24);
    const BoundaryPolyline lines[] = {m.boundary(Which::D0), m.boundary(Which::D1), m.boundary(Which::D2)};
    int compared = 0;
    for (std::size_t row = 0; row < r.height; ++row) {
      for (std::size_t col = 0; col < r.width; ++col) {
        const double a = r.a_of(col), b = r.b_of(row);
        if (a >= b) continue;
        double dist = INFINITY;
        for (const auto& l : lines) dist = std::min(dist, distance_to(l, a, b));
        if (dist <= 1e-3) continue;
        const RegionClass k = r.at(row, col);
        REQUIRE(k != RegionClass::Unknown);
        const SurvivorKind want = k == RegionClass::Outside  ? SurvivorKind::Empty
                                  : k == RegionClass::D0only ? SurvivorKind::CountableNonempty
                                                             : SurvivorKind::Uncountable;
        CHECK(decide(ctx, hole_from_reals(a, b, ctx)).kind == want);
        ++compared;
      }
    }
    CHECK(compared > 200);
  }
}

TEST_CASE("property: shifted balanced families scale by 1/beta") {
  const QuasiGreedyD ctx(seq("(10010000)"));
  const RegionModel m(ctx, small_caps());
  int checked = 0;
  for (std::size_t i = 0; i < m.pairs().size(); ++i) {
    const auto& pi = m.pairs()[i].pair.provenance;
    if (pi.kind != Provenance::Kind::Balanced) continue;
    for (std::size_t j = 0; j < m.pairs().size(); ++j) {
      const auto& pj = m.pairs()[j].pair.provenance;
      if (pj.kind != Provenance::Kind::Balanced || pj.gamma != pi.gamma || pj.shift != pi.shift + 1) continue;
      CHECK(std::fabs(m.plateaus()[j].s.value - m.plateaus()[i].s.value / ctx.beta()) < 1e-12);
      ++checked;
    }
  }
  CHECK(checked > 5);
}
