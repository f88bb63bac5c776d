#pragma once

// Template definitions for oracle.hpp.

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace barn {

template <typename F>
SimplexResult nelder_mead_2d(F&& f, double x0, double y0, double step, double tol,
                             int max_iter) {
  struct Vertex {
    double x, y, v;
  };
  const auto make = [&](double x, double y) { return Vertex{x, y, f(x, y)}; };
  std::array<Vertex, 3> s = {make(x0, y0), make(x0 + step, y0), make(x0, y0 + step)};

  const auto diameter = [&] {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        d = std::max(d, std::hypot(s[i].x - s[j].x, s[i].y - s[j].y));
      }
    }
    return d;
  };
  // Stable ordering keeps the iteration deterministic on ties.
  const auto order = [&] {
    std::stable_sort(s.begin(), s.end(),
                     [](const Vertex& a, const Vertex& b) { return a.v < b.v; });
  };

  SimplexResult out;
  order();
  int it = 0;
  for (; it < max_iter; ++it) {
    if (diameter() < tol) {
      out.converged = true;
      break;
    }
    const Vertex& best = s[0];
    const Vertex& worst = s[2];
    const double cx = (s[0].x + s[1].x) / 2.0;
    const double cy = (s[0].y + s[1].y) / 2.0;

    const Vertex refl = make(cx + (cx - worst.x), cy + (cy - worst.y));
    if (refl.v < best.v) {
      const Vertex exp = make(cx + 2.0 * (refl.x - cx), cy + 2.0 * (refl.y - cy));
      s[2] = exp.v < refl.v ? exp : refl;
    } else if (refl.v < s[1].v) {
      s[2] = refl;
    } else {
      bool accepted = false;
      if (refl.v < worst.v) {
        const Vertex outside = make(cx + 0.5 * (refl.x - cx), cy + 0.5 * (refl.y - cy));
        if (outside.v <= refl.v) {
          s[2] = outside;
          accepted = true;
        }
      } else {
        const Vertex inside = make(cx + 0.5 * (worst.x - cx), cy + 0.5 * (worst.y - cy));
        if (inside.v < worst.v) {
          s[2] = inside;
          accepted = true;
        }
      }
      if (!accepted) {
        for (int i = 1; i < 3; ++i) {
          s[i] = make(s[0].x + 0.5 * (s[i].x - s[0].x), s[0].y + 0.5 * (s[i].y - s[0].y));
        }
      }
    }
    order();
  }
  if (!out.converged && diameter() < tol) {
    out.converged = true;
  }
  out.x = s[0].x;
  out.y = s[0].y;
  out.value = s[0].v;
  out.iterations = it;
  return out;
}

template <typename F>
LineSearchResult golden_section(F&& f, double lo, double hi, double rel_tol, int max_iter) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);

  LineSearchResult out;
  int it = 0;
  for (; it < max_iter; ++it) {
    if (hi - lo <= rel_tol * std::abs(lo + hi) / 2.0) {
      out.converged = true;
      break;
    }
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  if (fc <= fd) {
    out.x = c;
    out.value = fc;
  } else {
    out.x = d;
    out.value = fd;
  }
  out.iterations = it;
  return out;
}

}  // namespace barn
