#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbm1d/gas.hpp"
#include "lbm1d/solver.hpp"

namespace lbm1d {

// Column-oriented macroscopic profile, one row per cell centre.
struct Profile {
  double time = 0.0;
  std::vector<double> x, rho, u, p, e;

  std::size_t size() const { return x.size(); }
};

inline Profile make_profile(std::span<const double> x, std::span<const MacroState> states,
                            const GasModel& gas, double time) {
  if (x.size() != states.size())
    throw std::invalid_argument("make_profile: x and states must match");
  Profile pr;
  pr.time = time;
  pr.x.assign(x.begin(), x.end());
  pr.rho.reserve(states.size());
  pr.u.reserve(states.size());
  pr.p.reserve(states.size());
  pr.e.reserve(states.size());
  for (const MacroState& s : states) {
    pr.rho.push_back(s.rho);
    pr.u.push_back(s.u);
    pr.p.push_back(s.rho * (gas.gamma - 1.0) * s.eps);
    pr.e.push_back(s.eps);
  }
  return pr;
}

inline Profile make_profile(const Snapshot& snap, const GasModel& gas) {
  return make_profile(snap.x, snap.states, gas, snap.time);
}

// CSV layout: header "x,rho,u,p,e", one row per cell, 17 significant digits
// so values round-trip exactly.
inline void write_csv(const Profile& pr, std::ostream& os) {
  os << "x,rho,u,p,e\n";
  char line[192];
  for (std::size_t k = 0; k < pr.size(); ++k) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g,%.17g\n", pr.x[k], pr.rho[k],
                  pr.u[k], pr.p[k], pr.e[k]);
    os << line;
  }
}

inline void write_csv(const Profile& pr, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_csv: cannot open '" + path + "'");
  write_csv(pr, os);
  if (!os) throw std::runtime_error("write_csv: failed writing '" + path + "'");
}

inline Profile read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_csv: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_csv: '" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,rho,u,p,e")
    throw std::runtime_error("read_csv: '" + path + "' has unexpected header '" + line + "'");

  Profile pr;
  pr.time = std::numeric_limits<double>::quiet_NaN();
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double v[5];
    std::size_t pos = 0;
    for (int col = 0; col < 5; ++col) {
      const std::size_t next = line.find(',', pos);
      const std::string tok = line.substr(pos, next == std::string::npos ? next : next - pos);
      try {
        std::size_t used = 0;
        v[col] = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw std::runtime_error("read_csv: bad value '" + tok + "' at " + path + ":" +
                                 std::to_string(lineno));
      }
      if (col < 4) {
        if (next == std::string::npos)
          throw std::runtime_error("read_csv: expected 5 columns at " + path + ":" +
                                   std::to_string(lineno));
        pos = next + 1;
      } else if (next != std::string::npos) {
        throw std::runtime_error("read_csv: expected 5 columns at " + path + ":" +
                                 std::to_string(lineno));
      }
    }
    pr.x.push_back(v[0]);
    pr.rho.push_back(v[1]);
    pr.u.push_back(v[2]);
    pr.p.push_back(v[3]);
    pr.e.push_back(v[4]);
  }
  if (pr.size() == 0) throw std::runtime_error("read_csv: '" + path + "' has no data rows");
  return pr;
}

struct ErrorNorms {
  double l1 = 0.0;    // mean absolute difference
  double l2 = 0.0;    // root mean square difference
  double linf = 0.0;  // maximum absolute difference
};

struct NormReport {
  ErrorNorms rho, u, p, e;
};

namespace profile_detail {

inline ErrorNorms column_norms(const std::vector<double>& a, const std::vector<double>& b) {
  ErrorNorms n;
  double sum1 = 0.0, sum2 = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = std::abs(a[k] - b[k]);
    sum1 += d;
    sum2 += d * d;
    n.linf = std::max(n.linf, d);
  }
  n.l1 = sum1 / static_cast<double>(a.size());
  n.l2 = std::sqrt(sum2 / static_cast<double>(a.size()));
  return n;
}

}  // namespace profile_detail

// Per-variable error norms between two profiles on the same grid.
inline NormReport compare_profiles(const Profile& a, const Profile& b) {
  if (a.size() != b.size())
    throw std::runtime_error("compare_profiles: mismatched grids (" +
                             std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                             " rows)");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::abs(a.x[k] - b.x[k]) > 1e-12 * std::max(1.0, std::abs(a.x[k])))
      throw std::runtime_error("compare_profiles: mismatched grids (x differs at row " +
                               std::to_string(k) + ")");
  NormReport r;
  r.rho = profile_detail::column_norms(a.rho, b.rho);
  r.u = profile_detail::column_norms(a.u, b.u);
  r.p = profile_detail::column_norms(a.p, b.p);
  r.e = profile_detail::column_norms(a.e, b.e);
  return r;
}

}  // namespace lbm1d
