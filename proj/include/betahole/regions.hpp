#pragma once

// Geometry of the hole parameter plane: the rectangles I_β and R_β, the
// staircase boundaries of D0 (nonempty), D1 (uncountable) and D2 (finitely
// many bad n), the width bounds C_i, and point/raster classification.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "betahole/pairs.hpp"

namespace betahole {

/// A coordinate. Exact comparisons are used when both sides carry a
/// sequence; otherwise values are compared with a tolerance.
struct PointValue {
  std::optional<EPSeq> seq;
  double value = 0;

  static PointValue of(const EPSeq& x, const QuasiGreedyD& ctx);
  /// Point value of a finite word w, i.e. of w·0^∞.
  static PointValue finite(const Word& w, const QuasiGreedyD& ctx);
  static PointValue real(double v) { return {std::nullopt, v}; }
};

struct Rect {
  PointValue x_lo, x_hi, y_lo, y_hi;
};

/// u_{γ(β)}^∞.
EPSeq inf_x(const QuasiGreedyD& ctx);

Rect i_beta(const QuasiGreedyD& ctx);

/// Empty when the two a-endpoints coincide (1_β = w_γ^∞ for an exceptional γ).
std::optional<Rect> r_beta(const QuasiGreedyD& ctx);

struct CBounds {
  double c0, c1, c2;
};

CBounds c_bounds(const QuasiGreedyD& ctx);

/// The rectangle swept by the pairs of the tree rooted at 0 and u_g:
/// (0u_g, max right end) × (u_g, max t^∞), finite words read as points.
Rect rbeta_family_rect(const QuasiGreedyD& ctx, const Fraction& g, std::size_t depth = 8);

enum class Which { D0, D1, D2 };

const char* to_string(Which which);

struct RegionCaps {
  PairCaps pairs;
  std::size_t descendant_depth = 2;
  std::int64_t descendant_q = 5;
  double tol = 1e-9;
};

struct Corner {
  PointValue a, b;
  /// Index into the model's pairs.
  std::size_t pair = 0;
  /// Which template point, e.g. "s,ts" for (s^∞, ts^∞).
  std::string kind;
};

struct BoundaryPolyline {
  Which which = Which::D0;
  std::vector<Corner> corners;
};

enum class RegionClass { D2, D1only, D0only, Outside, Unknown };

const char* to_string(RegionClass c);
/// 0 outside, 1 D0only, 2 D1only, 3 D2, 9 unknown.
int code(RegionClass c);

/// Maximal pairs, their descendants and every corner, evaluated once.
class RegionModel {
 public:
  RegionModel(const QuasiGreedyD& ctx, const RegionCaps& caps = {});

  const QuasiGreedyD& ctx() const { return ctx_; }
  const RegionCaps& caps() const { return caps_; }
  const std::vector<MaximalPairRecord>& pairs() const { return pairs_; }

  BoundaryPolyline boundary(Which which) const;

  /// Expects a < b. Easy zones first (a > 1/β, b below inf X), then the
  /// staircases; UnknownNearBoundary when a needed comparison falls within
  /// tol, or inside a gap the caps leave unresolved.
  RegionClass classify(const PointValue& a, const PointValue& b) const;

  struct Plateau {
    PointValue s, right, ts, t, tst;
    /// D1 steps: [left, right] at height h, sorted by left.
    struct Step {
      PointValue left, right, h;
    };
    std::vector<Step> steps;
  };
  const std::vector<Plateau>& plateaus() const { return plateaus_; }

 private:
  QuasiGreedyD ctx_;
  RegionCaps caps_;
  std::vector<MaximalPairRecord> pairs_;
  std::vector<Plateau> plateaus_;
  PointValue zero_inf_, inf_, one_inf_, inv_beta_;
};

BoundaryPolyline boundary(const QuasiGreedyD& ctx, Which which, const RegionCaps& caps = {});
RegionClass classify_point(const QuasiGreedyD& ctx, const PointValue& a, const PointValue& b,
                           const RegionCaps& caps = {});

struct Raster {
  std::size_t width = 0, height = 0;
  /// Row-major; row 0 is the top (largest b).
  std::vector<RegionClass> cells;
  RegionClass at(std::size_t row, std::size_t col) const { return cells[row * width + col]; }
  /// Cell-centre coordinates.
  double a_of(std::size_t col) const { return a_lo + (static_cast<double>(col) + 0.5) * (a_hi - a_lo) / width; }
  double b_of(std::size_t row) const { return b_hi - (static_cast<double>(row) + 0.5) * (b_hi - b_lo) / height; }
  double a_lo = 0, a_hi = 1, b_lo = 0, b_hi = 1;
};

/// Parallel over rows. Cells with a ≥ b have an empty hole and count as D2.
Raster raster(const RegionModel& model, double a_lo, double a_hi, double b_lo, double b_hi, std::size_t width,
              std::size_t height);

/// 8-bit binary PGM: D2 dark grey, D1 white, D0 light grey, outside black,
/// unknown mid grey.
void write_pgm(const Raster& r, std::ostream& out);
void write_csv(const Raster& r, std::ostream& out);

/// Euclidean distance from (a,b) to the nearest segment of the polyline.
double distance_to(const BoundaryPolyline& line, double a, double b);

}  // namespace betahole
