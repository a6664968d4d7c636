#include "betahole/regions.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "betahole/error.hpp"
#include "betahole/gamma_map.hpp"
#include "betahole/parallel.hpp"

namespace betahole {
namespace {

// Three-valued comparison: -1, 0, 1, or kUnknown when only numeric values
// are available and they lie within tol.
constexpr int kUnknown = 2;

int cmp(const PointValue& x, const PointValue& y, double tol) {
  if (x.seq && y.seq) {
    const auto c = *x.seq <=> *y.seq;
    return c < 0 ? -1 : c > 0 ? 1 : 0;
  }
  const double diff = x.value - y.value;
  if (std::fabs(diff) <= tol) return kUnknown;
  return diff < 0 ? -1 : 1;
}

enum class Tri { No, Yes, Unknown };

// b below a step function whose value at a lies in [lo, hi]: yes when b < lo,
// no when b ≥ hi.
Tri below_bracket(const PointValue& b, const PointValue& lo, const PointValue& hi, double tol) {
  const int c_lo = cmp(b, lo, tol);
  if (c_lo == -1) return Tri::Yes;
  const int c_hi = cmp(b, hi, tol);
  if (c_hi == 0 || c_hi == 1) return Tri::No;
  return Tri::Unknown;
}

Tri strictly_below(const PointValue& b, const PointValue& h, double tol) {
  const int c = cmp(b, h, tol);
  if (c == kUnknown) return Tri::Unknown;
  return c == -1 ? Tri::Yes : Tri::No;
}

EPSeq clip(const EPSeq& x, const QuasiGreedyD& ctx) {
  return is_admissible(x, ctx) ? x : max_admissible_below(x, ctx);
}

// All r-vectors of length 1..depth over the given fractions.
void r_vectors(const std::vector<Fraction>& fs, std::size_t depth, std::vector<Fraction>& cur,
               std::vector<std::vector<Fraction>>& out) {
  if (cur.size() == depth) return;
  for (const auto& f : fs) {
    cur.push_back(f);
    out.push_back(cur);
    r_vectors(fs, depth, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PointValue PointValue::of(const EPSeq& x, const QuasiGreedyD& ctx) { return {x, eval_point(x, ctx)}; }

PointValue PointValue::finite(const Word& w, const QuasiGreedyD& ctx) { return of(finite_word_point(w, ctx), ctx); }

EPSeq inf_x(const QuasiGreedyD& ctx) { return EPSeq::periodic(min_shift(gamma_of_beta(ctx).value)); }

Rect i_beta(const QuasiGreedyD& ctx) {
  const EPSeq inf = inf_x(ctx);
  return {PointValue::of(inf.prepend(Word("0")), ctx), PointValue::of(ctx.d().prepend(Word("0")), ctx),
          PointValue::of(inf, ctx), PointValue::of(inf.prepend(Word("1")), ctx)};
}

std::optional<Rect> r_beta(const QuasiGreedyD& ctx) {
  const auto n = static_cast<std::size_t>(ctx.n_prefix());
  const EPSeq inf = inf_x(ctx);
  Rect r{PointValue::of(inf.prepend(Word("0")), ctx), PointValue::finite(Word::zeros(n) + Word("1"), ctx),
         PointValue::of(inf, ctx), PointValue::finite(Word::zeros(n - 1) + Word("1"), ctx)};
  if (*r.x_lo.seq >= *r.x_hi.seq) return std::nullopt;
  return r;
}

CBounds c_bounds(const QuasiGreedyD& ctx) {
  const double b = ctx.beta();
  const int n = ctx.n_prefix();
  const double c0 = std::pow(b, n - 1) * (b - 1) / (std::pow(b, n + 1) - 1);
  const double c1 = (b - 1) / (b * b);
  return {c0, c1, c1};
}

Rect rbeta_family_rect(const QuasiGreedyD& ctx, const Fraction& g, std::size_t depth) {
  const auto recs = rbeta_tree_pairs(g, ctx.n_prefix(), ctx, depth);
  if (recs.empty()) throw Error("EmptyRegion", "no tree pair for " + g.to_string() + " lies in R_beta");
  const Word u = min_shift(g);
  Rect r{PointValue::finite(Word("0") + u, ctx), PointValue::of(recs.front().right_end(), ctx),
         PointValue::finite(u, ctx), PointValue::of(EPSeq::periodic(recs.front().pair.t), ctx)};
  for (const auto& rec : recs) {
    const EPSeq right = rec.right_end(), t = EPSeq::periodic(rec.pair.t);
    if (right > *r.x_hi.seq) r.x_hi = PointValue::of(right, ctx);
    if (t > *r.y_hi.seq) r.y_hi = PointValue::of(t, ctx);
  }
  return r;
}

const char* to_string(Which which) {
  switch (which) {
    case Which::D0: return "d0";
    case Which::D1: return "d1";
    case Which::D2: return "d2";
  }
  return "?";
}

const char* to_string(RegionClass c) {
  switch (c) {
    case RegionClass::D2: return "D2";
    case RegionClass::D1only: return "D1only";
    case RegionClass::D0only: return "D0only";
    case RegionClass::Outside: return "Outside";
    case RegionClass::Unknown: return "UnknownNearBoundary";
  }
  return "?";
}

int code(RegionClass c) {
  switch (c) {
    case RegionClass::Outside: return 0;
    case RegionClass::D0only: return 1;
    case RegionClass::D1only: return 2;
    case RegionClass::D2: return 3;
    case RegionClass::Unknown: return 9;
  }
  return 9;
}

RegionModel::RegionModel(const QuasiGreedyD& ctx, const RegionCaps& caps)
    : ctx_(ctx), caps_(caps), pairs_(enumerate_maximal_pairs(ctx, caps.pairs)) {
  const EPSeq inf = inf_x(ctx);
  zero_inf_ = PointValue::of(inf.prepend(Word("0")), ctx);
  inf_ = PointValue::of(inf, ctx);
  one_inf_ = PointValue::of(inf.prepend(Word("1")), ctx);
  inv_beta_ = PointValue::of(ctx.d().prepend(Word("0")), ctx);

  std::vector<std::vector<Fraction>> rvs;
  std::vector<Fraction> cur;
  r_vectors(fractions_up_to(caps.descendant_q), caps.descendant_depth, cur, rvs);

  plateaus_.resize(pairs_.size());
  parallel_for(pairs_.size(), [&](std::size_t i) {
    const ExtremalPair& pair = pairs_[i].pair;
    const EPSeq s_inf = EPSeq::periodic(pair.s), right = pairs_[i].right_end();
    Plateau& p = plateaus_[i];
    p.s = PointValue::of(s_inf, ctx);
    p.right = PointValue::of(right, ctx);
    p.ts = PointValue::of(clip(EPSeq(pair.t, pair.s), ctx), ctx);
    p.t = PointValue::of(clip(EPSeq::periodic(pair.t), ctx), ctx);
    p.tst = PointValue::of(clip(EPSeq(pair.t + pair.s, pair.t), ctx), ctx);
    auto add_step = [&](const Word& s, const Word& t) {
      const EPSeq left = EPSeq::periodic(s);
      if (left > right || !is_admissible(left, ctx)) return;
      const EPSeq end = std::min(clip(EPSeq(s + t, s), ctx), right);
      p.steps.push_back({PointValue::of(left, ctx), PointValue::of(end, ctx), PointValue::of(clip(EPSeq(t, s), ctx), ctx)});
    };
    add_step(pair.s, pair.t);
    for (const auto& rs : rvs) {
      const ExtremalPair dp = farey_descendants(pair, rs);
      add_step(dp.s, dp.t);
    }
    std::sort(p.steps.begin(), p.steps.end(), [](const Plateau::Step& x, const Plateau::Step& y) { return *x.left.seq < *y.left.seq; });
  });
}

BoundaryPolyline RegionModel::boundary(Which which) const {
  BoundaryPolyline line;
  line.which = which;
  for (std::size_t i = 0; i < plateaus_.size(); ++i) {
    const Plateau& p = plateaus_[i];
    const bool cut = pairs_[i].truncated.has_value();
    const std::string end = cut ? "trunc" : "st";
    auto add = [&](const PointValue& a, const PointValue& b, std::string kind) {
      line.corners.push_back({a, b, i, std::move(kind)});
    };
    switch (which) {
      case Which::D0:
        add(p.s, p.ts, "s,ts");
        add(p.s, p.t, "s,t");
        add(p.right, p.t, end + ",t");
        break;
      case Which::D2:
        add(p.s, p.ts, "s,ts");
        add(p.right, p.ts, end + ",ts");
        add(p.right, p.t, end + ",t");
        break;
      case Which::D1:
        for (std::size_t k = 0; k < p.steps.size(); ++k) {
          const std::string tag = k == 0 ? "" : "_r";
          add(p.steps[k].left, p.steps[k].h, "s" + tag + ",t" + tag + "s" + tag);
          add(p.steps[k].right, p.steps[k].h, "s" + tag + "t" + tag + "s" + tag + ",t" + tag + "s" + tag);
        }
        add(p.right, p.tst, end + ",tst");
        add(p.right, p.t, end + ",t");
        break;
    }
  }
  return line;
}

RegionClass RegionModel::classify(const PointValue& a, const PointValue& b) const {
  const double tol = caps_.tol;
  const int ab = cmp(a, b, tol);
  if (ab == 0 || ab == 1) return RegionClass::D2;
  if (cmp(a, inv_beta_, tol) == 1) return RegionClass::D2;
  const int b_inf = cmp(b, inf_, tol);
  if (b_inf == -1) return RegionClass::D2;
  if (b_inf == kUnknown) return RegionClass::Unknown;
  // Exact hits on the edges of I_β fall through to the staircases.
  const int a_zero = cmp(a, zero_inf_, tol);
  if (a_zero == kUnknown) return RegionClass::Unknown;
  if (a_zero == -1) return b_inf == 1 ? RegionClass::Outside : RegionClass::Unknown;
  const int b_one = cmp(b, one_inf_, tol);
  if (b_one == 1) return RegionClass::Outside;
  if (b_one == kUnknown) return RegionClass::Unknown;

  // Last plateau with s^∞ ⪯ a.
  std::size_t lo = 0, hi = plateaus_.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int c = cmp(plateaus_[mid].s, a, tol);
    if (c == kUnknown) return RegionClass::Unknown;
    if (c <= 0) lo = mid + 1;
    else hi = mid;
  }

  Tri d0, d1, d2;
  const Plateau* P = lo == 0 ? nullptr : &plateaus_[lo - 1];
  const int in_p = P ? cmp(a, P->right, tol) : 1;
  if (in_p == kUnknown) return RegionClass::Unknown;
  if (in_p <= 0) {
    const int c = cmp(b, P->t, tol);
    d0 = c == kUnknown ? Tri::Unknown : c <= 0 ? Tri::Yes : Tri::No;
    d2 = strictly_below(b, P->ts, tol);
    // Last D1 step starting at or before a; the first always starts at s^∞.
    std::size_t k = 0, m = P->steps.size();
    while (k < m) {
      const std::size_t mid = (k + m) / 2;
      const int c2 = cmp(P->steps[mid].left, a, tol);
      if (c2 == kUnknown) return RegionClass::Unknown;
      if (c2 <= 0) k = mid + 1;
      else m = mid;
    }
    const auto& step = P->steps[k - 1];
    const int on = cmp(a, step.right, tol);
    if (on == kUnknown) return RegionClass::Unknown;
    if (on <= 0) d1 = strictly_below(b, step.h, tol);
    else d1 = below_bracket(b, step.h, k < P->steps.size() ? P->steps[k].h : P->tst, tol);
  } else {
    const PointValue& floor = P ? P->t : inf_;
    const PointValue& ceil = lo < plateaus_.size() ? plateaus_[lo].ts : one_inf_;
    d0 = d1 = d2 = below_bracket(b, floor, ceil, tol);
  }
  if (d2 == Tri::Yes) return RegionClass::D2;
  if (d2 == Tri::Unknown || d1 == Tri::Unknown) return RegionClass::Unknown;
  if (d1 == Tri::Yes) return RegionClass::D1only;
  if (d0 == Tri::Unknown) return RegionClass::Unknown;
  return d0 == Tri::Yes ? RegionClass::D0only : RegionClass::Outside;
}

BoundaryPolyline boundary(const QuasiGreedyD& ctx, Which which, const RegionCaps& caps) {
  return RegionModel(ctx, caps).boundary(which);
}

RegionClass classify_point(const QuasiGreedyD& ctx, const PointValue& a, const PointValue& b, const RegionCaps& caps) {
  return RegionModel(ctx, caps).classify(a, b);
}

Raster raster(const RegionModel& model, double a_lo, double a_hi, double b_lo, double b_hi, std::size_t width,
              std::size_t height) {
  if (width == 0 || height == 0) throw Error("InvalidWindow", "raster needs a positive size");
  if (!(a_lo < a_hi) || !(b_lo < b_hi) || a_lo < 0 || b_hi >= 1) {
    throw Error("InvalidWindow", "raster window must be a nonempty box inside [0,1)^2");
  }
  Raster r;
  r.width = width;
  r.height = height;
  r.a_lo = a_lo;
  r.a_hi = a_hi;
  r.b_lo = b_lo;
  r.b_hi = b_hi;
  r.cells.assign(width * height, RegionClass::Unknown);
  parallel_for(height, [&](std::size_t row) {
    for (std::size_t col = 0; col < width; ++col) {
      r.cells[row * width + col] = model.classify(PointValue::real(r.a_of(col)), PointValue::real(r.b_of(row)));
    }
  });
  return r;
}

void write_pgm(const Raster& r, std::ostream& out) {
  out << "P5\n" << r.width << ' ' << r.height << "\n255\n";
  for (const RegionClass c : r.cells) {
    unsigned char shade = 128;
    switch (c) {
      case RegionClass::D2: shade = 64; break;
      case RegionClass::D1only: shade = 255; break;
      case RegionClass::D0only: shade = 192; break;
      case RegionClass::Outside: shade = 0; break;
      case RegionClass::Unknown: shade = 128; break;
    }
    out.put(static_cast<char>(shade));
  }
}

void write_csv(const Raster& r, std::ostream& out) {
  for (std::size_t row = 0; row < r.height; ++row) {
    for (std::size_t col = 0; col < r.width; ++col) out << (col ? "," : "") << code(r.at(row, col));
    out << '\n';
  }
}

double distance_to(const BoundaryPolyline& line, double a, double b) {
  double best = INFINITY;
  const auto& cs = line.corners;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const double x1 = cs[i].a.value, y1 = cs[i].b.value;
    best = std::min(best, std::hypot(a - x1, b - y1));
    if (i + 1 == cs.size()) break;
    const double x2 = cs[i + 1].a.value, y2 = cs[i + 1].b.value;
    const double dx = x2 - x1, dy = y2 - y1, len2 = dx * dx + dy * dy;
    if (len2 == 0) continue;
    const double u = std::clamp(((a - x1) * dx + (b - y1) * dy) / len2, 0.0, 1.0);
    best = std::min(best, std::hypot(a - x1 - u * dx, b - y1 - u * dy));
  }
  return best;
}

}  // namespace betahole
