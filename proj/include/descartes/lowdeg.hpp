#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "descartes/polynomial.hpp"
#include "descartes/roots.hpp"

namespace descartes {

/// A point of the (B, C) plane for the degree-5 family (x-1)^2 (x+A)(x^2+Bx+C).
struct CurvePoint {
  Rational B;
  Rational C;
};

struct CurveValues {
  Rational T0, D, T1, T3, T4;
};

/// T0 = 3B-3C-1, D = 3B-C-3, T1, T3, T4 as quadratic forms in (B, C).
CurveValues curve_values(const CurvePoint& pt);

/// (x-1)^2 (x+A)(x^2+Bx+C).
Polynomial expand_d5(const Rational& A, const Rational& B, const Rational& C);
/// Closed-form f_0..f_4 (ascending) of expand_d5.
std::vector<Rational> d5_coefficients(const Rational& A, const Rational& B, const Rational& C);

enum class CaseClass { case_i, case_ii, neither };
std::string to_string(CaseClass c);

struct Classification {
  CaseClass cls = CaseClass::neither;
  bool member = false;  // C > 0 and B^2 - 4C < 0
};

Classification classify_case(const CurvePoint& pt);

/// (x-1)^2 (x^2+Ax+B).
Polynomial expand_d4(const Rational& A, const Rational& B);
/// A < 2, B-2A+1 > 0, A-2B < 0, B >= A^2/4.
bool d4_membership(const Rational& A, const Rational& B);

struct NamedPoint {
  std::string name;
  std::string printed_B;  // value as printed: a fraction, or leading digits of a decimal
  std::string printed_C;
  std::optional<CurvePoint> exact;  // when the point is rational
  Interval B;                       // enclosures (degenerate for exact points)
  Interval C;
  std::string method;
  bool matches = false;
};

/// Every curve intersection quoted for the degree-5 picture, recomputed exactly.
std::vector<NamedPoint> named_intersections();

/// Truncates an enclosure toward zero to `digits` decimals; empty if the two
/// endpoints disagree.
std::string truncated_decimal(const Interval& iv, int digits);

enum class CellClass : std::uint8_t { case_ii, case_i, neither, boundary };
std::string to_string(CellClass c);

struct GridBounds {
  Rational b_lo{-2}, b_hi{4}, c_lo{0}, c_hi{6};
};

/// Square cells over a rectangle of the (B, C) plane, each classified by
/// rigorous enclosures of the forms over the whole cell.
class RegionGrid {
 public:
  static RegionGrid build(int resolution, const GridBounds& bounds = {}, int threads = 0);

  int resolution() const { return resolution_; }
  const GridBounds& bounds() const { return bounds_; }
  CellClass at(int i, int j) const { return cells_[static_cast<std::size_t>(j) * resolution_ + i]; }
  /// Cell containing the point, or nullopt outside the grid.
  std::optional<std::pair<int, int>> cell_of(const CurvePoint& pt) const;
  /// Lower-left corner of cell (i, j).
  CurvePoint corner(int i, int j) const;
  std::size_t count(CellClass c) const;

 private:
  int resolution_ = 0;
  GridBounds bounds_;
  std::vector<CellClass> cells_;  // row-major in C, then B
};

struct CaseIReport {
  bool empty = false;
  std::optional<std::pair<int, int>> first_cell;
  std::size_t e3_interior_cells = 0;  // cells certainly inside E3 with C > 0
  std::size_t e3_interior_in_upper_sector = 0;
  std::size_t e3_interior_in_lower_sector = 0;  // not certainly outside S_l
  std::string diagnostic;
};

/// No cell is certainly in case (i); requires the default window.
CaseIReport case_i_empty(const RegionGrid& grid);

struct ConnectivityReport {
  bool connected = false;
  int components = 0;
  bool insufficient_resolution = false;
  bool seeds_joined = false;  // cells near (0.1, 2) and (0.05, 0.5) share a component
  std::size_t cells = 0;
};

ConnectivityReport case_ii_connected(const RegionGrid& grid);
ConnectivityReport case_ii_connected(int resolution);

/// Binary PPM image of the cell classes.
void write_ppm(const RegionGrid& grid, std::ostream& out);

}  // namespace descartes
