#include "bires/regions.hpp"

#include <algorithm>
#include <climits>

#include "bires/error.hpp"

namespace bires {

RegRegion::RegRegion(std::vector<BiDeg> corners) {
  for (auto& c : corners) c = {std::max(c.x, 0), std::max(c.y, 0)};
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  // Sorted by x then y, a corner survives iff its y is below every earlier y.
  int best_y = INT_MAX;
  for (const auto& c : corners) {
    if (c.y < best_y) {
      corners_.push_back(c);
      best_y = c.y;
    }
  }
}

bool RegRegion::contains(BiDeg nu, bool strict) const {
  auto inside = [&](BiDeg p) {
    return std::any_of(corners_.begin(), corners_.end(), [&](BiDeg c) { return p.geq(c); });
  };
  if (!strict) return inside(nu);
  // The region is closed upward, so nu is interior iff one unit step back stays inside.
  return inside(nu - BiDeg{1, 0}) || inside(nu - BiDeg{0, 1});
}

bool region_contains(const RegRegion& r, BiDeg nu, bool strict) { return r.contains(nu, strict); }

std::vector<BiDeg> st_set(int i) {
  std::vector<BiDeg> out;
  if (i > 0) {
    for (int r = -i; r <= -1; ++r) out.push_back({r, -i - 1 - r});
  } else {
    for (int r = -i; r >= 0; --r) out.push_back({r, -i - r});
  }
  return out;
}

RegRegion en_region(const DegreeData& dd) {
  if (dd.row_degrees.size() < 2) throw InputError("at least two generators are required");
  if (dd.f_degrees.size() != 3) throw InputError("exactly three F-degrees are required");
  BiDeg ab{INT_MIN, INT_MIN};
  for (auto f : dd.f_degrees) ab = {std::max(ab.x, f.x), std::max(ab.y, f.y)};
  bool fits_x = false, fits_y = false;
  for (auto e : dd.row_degrees) {
    fits_x = fits_x || ab.x >= e.x;
    fits_y = fits_y || ab.y >= e.y;
  }
  if (!fits_x || !fits_y) {
    std::string rows;
    for (auto e : dd.row_degrees) rows += " " + to_string(e);
    throw InputError("F-degree " + to_string(ab) + " is below every generator degree in some component; generator degrees:" + rows);
  }
  BiDeg cd, ef;
  for (auto c : dd.phi_degrees) cd += c;
  for (auto e : dd.row_degrees) ef += e;
  int min_e = INT_MAX, min_f = INT_MAX;
  for (std::size_t i = 0; i < dd.row_degrees.size(); ++i)
    for (std::size_t j = i; j < dd.row_degrees.size(); ++j) {
      min_e = std::min(min_e, dd.row_degrees[i].x + dd.row_degrees[j].x);
      min_f = std::min(min_f, dd.row_degrees[i].y + dd.row_degrees[j].y);
    }
  BiDeg kappa{3 * ab.x + cd.x - ef.x - min_e, 3 * ab.y + cd.y - ef.y - min_f};
  std::vector<BiDeg> corners;
  for (BiDeg delta : {BiDeg{-3, 0}, BiDeg{-2, -1}, BiDeg{-1, -2}, BiDeg{0, -3}}) corners.push_back(kappa + delta);
  return RegRegion(std::move(corners));
}

NuChoice choose_nu(const RegRegion& r, BiDeg min_col_degree, BiDeg max_minor_degree,
                   std::optional<BiDeg> override_nu, int search_bound) {
  if (r.empty()) throw MathError("regularity region is empty");
  if (override_nu) {
    NuChoice c{*override_nu, true, std::nullopt};
    if (!r.contains(*override_nu, true))
      c.warning = "strand degree " + to_string(*override_nu) + " is not strictly inside the regularity region";
    return c;
  }
  BiDeg lo{std::max({0, min_col_degree.x, max_minor_degree.x}), std::max({0, min_col_degree.y, max_minor_degree.y})};
  std::optional<BiDeg> best;
  long best_dim = 0;
  for (int x = lo.x; x <= search_bound; ++x)
    for (int y = lo.y; y <= search_bound; ++y) {
      BiDeg nu{x, y};
      if (!r.contains(nu, true)) continue;
      long dim = static_cast<long>(x + 1) * (y + 1);
      if (!best || dim < best_dim) {
        best = nu;
        best_dim = dim;
      }
      break;  // larger y only grows the dimension
    }
  if (!best) throw MathError("no admissible strand degree up to " + std::to_string(search_bound));
  return {*best, false, std::nullopt};
}

GeneralPointsRegion general_points_region(int r) {
  if (r < 1) throw InputError("number of points must be positive");
  std::vector<BiDeg> c{{0, r}, {1, r - 1}, {2, r - 2}, {r - 2, 2}, {r - 1, 1}, {r, 0}};
  return {RegRegion(std::move(c)), r < 4};
}

ShiftTable virtual_ci_shifts(int r) {
  if (r < 1) throw InputError("number of points must be positive");
  int p = r / 2;
  if (r % 2 == 0) return {{{1, p}, {1, p}}, {{2, 2 * p}}};
  return {{{1, p}, {1, p + 1}}, {{2, 2 * p + 1}}};
}

std::string ascii_sketch(const RegRegion& r, std::optional<BiDeg> nu) {
  int w = 1, h = 1;
  for (auto c : r.corners()) {
    w = std::max(w, c.x + 3);
    h = std::max(h, c.y + 3);
  }
  if (nu) {
    w = std::max(w, nu->x + 2);
    h = std::max(h, nu->y + 2);
  }
  std::string out;
  for (int y = h - 1; y >= 0; --y) {
    std::string line = (y < 10 ? " " : "") + std::to_string(y) + " |";
    for (int x = 0; x < w; ++x) {
      BiDeg p{x, y};
      char ch = '.';
      if (r.contains(p, false)) ch = '+';
      if (std::find(r.corners().begin(), r.corners().end(), p) != r.corners().end()) ch = '#';
      if (nu && *nu == p) ch = '*';
      line += ' ';
      line += ch;
    }
    out += line + "\n";
  }
  out += "   +" + std::string(static_cast<std::size_t>(2 * w), '-') + "\n    ";
  for (int x = 0; x < w; ++x) out += " " + std::to_string(x % 10);
  out += "\n";
  return out;
}

}  // namespace bires
