// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/models.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

#include "lrbound/error.hpp"
#include "lrbound/numerics.hpp"
#include "lrbound/special.hpp"

namespace lrb {

namespace {

constexpr double kE = std::numbers::e;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double parse_real(std::string_view s) {
  const std::string t = trim(s);
  double v = 0.0;
  const auto* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (t.empty() || ec != std::errc() || ptr != end) throw std::invalid_argument("not a number: '" + t + "'");
  return v;
}

// Integer coefficient prefix: "" for 1, otherwise the integer.
std::string coef(long k) { return k == 1 ? std::string() : std::to_string(k); }

// Reduced fraction p/q rendered as "p/q", "p" or "0".
std::string fraction(long p, long q) {
  const long g = std::gcd(p, q);
  p /= g;
  q /= g;
  return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
}

std::string x_symbol(long p, long q) {
  if (p == 0) return "X0";
  return "X_{" + fraction(p, q) + "}";
}

// Symbol like X_{3U/4J}: the subscript is (p/q) U/J.
std::string ratio_symbol(const char* name, long p, long q) {
  const long g = std::gcd(p, q);
  p /= g;
  q /= g;
  std::string sub = (p == 1 ? std::string() : std::to_string(p)) + "U/" + (q == 1 ? std::string() : std::to_string(q)) + "J";
  return std::string(name) + "_{" + sub + "}";
}

std::string x_numeric(double y) {
  for (long q = 1; q <= 64; ++q) {
    const double p = std::round(y * q);
    if (std::abs(p / q - y) < 1e-12) return x_symbol(static_cast<long>(p), q);
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "X_{%.6g}", y);
  return buf;
}

int get_dim(const ModelParams& p) {
  const double d = p.get_or("d", 1.0);
  return static_cast<int>(d);
}

VelocityResult finish(std::vector<VelocityBranch> branches, std::string notes = {}) {
  VelocityResult r;
  r.method = VelocityMethod::closed_form;
  r.notes = std::move(notes);
  r.value = kInfinity;
  for (const auto& b : branches)
    if (b.is_bound && b.value < r.value) {
      r.value = b.value;
      r.branch = b.label;
    }
  if (!std::isfinite(r.value)) throw NumericError("model_velocity: no finite branch");
  r.branches = std::move(branches);
  return r;
}

struct ModelKeys {
  std::string id;
  std::vector<std::string> required;
  std::vector<std::string> optional;
};

const std::vector<ModelKeys>& model_keys() {
  static const std::vector<ModelKeys> keys = {
      {"tfim", {"J", "h"}, {"d"}},
      {"tfim-spin-s", {"J", "h", "S"}, {"d"}},
      {"heisenberg-xyz", {"S"}, {"J", "Jx", "Jy", "Jz", "d"}},
      {"truncated-bh", {"J", "U", "S"}, {"d"}},
      {"fh-sun", {"J", "U"}, {"N", "d"}},
      {"wen-rotor", {"J", "g"}, {"S", "d"}},
      {"ptc", {"h"}, {}},
  };
  return keys;
}

const ModelKeys& keys_for(std::string_view model) {
  for (const auto& k : model_keys())
    if (k.id == model) return k;
  throw std::invalid_argument("unknown model '" + std::string(model) + "'");
}

bool is_half_integer(double S) {
  const double twoS = 2.0 * S;
  return twoS >= 1.0 && std::abs(twoS - std::round(twoS)) < 1e-12;
}

}  // namespace

bool ModelParams::has(std::string_view key) const { return values.find(key) != values.end(); }

double ModelParams::get(std::string_view key) const {
  auto it = values.find(key);
  if (it == values.end()) throw std::invalid_argument("model '" + model + "': missing parameter '" + std::string(key) + "'");
  return it->second;
}

double ModelParams::get_or(std::string_view key, double fallback) const {
  auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

double parse_param_value(std::string_view text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "Inf" || t == "INF" || t == "infinity") return kInfinity;
  if (const auto slash = t.find('/'); slash != std::string::npos) {
    const double num = parse_real(std::string_view(t).substr(0, slash));
    const double den = parse_real(std::string_view(t).substr(slash + 1));
    if (den == 0.0) throw std::invalid_argument("zero denominator in '" + t + "'");
    return num / den;
  }
  return parse_real(t);
}

ModelParams parse_model_params(std::string_view model, std::string_view assignments) {
  ModelParams p;
  p.model = std::string(model);
  std::size_t pos = 0;
  const std::string text(assignments);
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = trim(std::string_view(text).substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("parameter '" + item + "' is not of the form key=value");
    const std::string key = trim(std::string_view(item).substr(0, eq));
    double value;
    try {
      value = parse_param_value(std::string_view(item).substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("parameter '" + key + "': " + e.what());
    }
    if (!p.values.emplace(key, value).second) throw std::invalid_argument("parameter '" + key + "' given twice");
  }
  validate_model_params(p);
  return p;
}

void validate_model_params(const ModelParams& p) {
  const auto& keys = keys_for(p.model);
  for (const auto& [k, v] : p.values) {
    const bool known = std::find(keys.required.begin(), keys.required.end(), k) != keys.required.end() ||
                       std::find(keys.optional.begin(), keys.optional.end(), k) != keys.optional.end();
    if (!known) throw std::invalid_argument("model '" + p.model + "' has no parameter '" + k + "'");
    if (std::isnan(v)) throw std::invalid_argument("parameter '" + k + "' is NaN");
  }
  for (const auto& k : keys.required) {
    if (p.model == "heisenberg-xyz" && k != "S") continue;
    if (!p.has(k)) throw std::invalid_argument("model '" + p.model + "': missing parameter '" + k + "'");
  }
  if (p.model == "heisenberg-xyz") {
    const bool iso = p.has("J");
    const bool aniso = p.has("Jx") || p.has("Jy") || p.has("Jz");
    if (iso == aniso) throw std::invalid_argument("heisenberg-xyz: give either J or all of Jx, Jy, Jz");
    if (aniso && !(p.has("Jx") && p.has("Jy") && p.has("Jz")))
      throw std::invalid_argument("heisenberg-xyz: Jx, Jy and Jz must all be given");
  }
  for (const auto& [k, v] : p.values) {
    if (k == "d") {
      if (v < 1.0 || v != std::floor(v) || v > 64) throw std::invalid_argument("d must be an integer in [1, 64]");
    } else if (k == "N") {
      if (v < 2.0 || v != std::floor(v) || v > 1e6) throw std::invalid_argument("N must be an integer >= 2");
    } else if (k == "S") {
      if (!std::isinf(v) && !is_half_integer(v)) throw std::invalid_argument("S must be a positive half-integer or inf");
      if (std::isinf(v) && v < 0) throw std::invalid_argument("S must be positive");
    } else {
      if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("coupling '" + k + "' must be finite and >= 0");
    }
  }
  if (p.model == "wen-rotor" && get_dim(p) < 2) throw std::invalid_argument("wen-rotor requires d >= 2");
}

const std::vector<std::string>& model_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& k : model_keys()) out.push_back(k.id);
    return out;
  }();
  return ids;
}

double heisenberg_jm(double Jx, double Jy, double Jz) {
  Eigen::Matrix3d M;
  M << 0, Jy, Jz, Jx, 0, Jz, Jx, Jy, 0;
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(M);
  return svd.singularValues()(0);
}

double truncated_bh_omega(double S, double U, double J, int d, double kappa) {
  const double c = std::cosh(kappa);
  const double a = 2.0 * J * (d + d * c - 1.0 / (2.0 * S));
  const double bc = 2.0 * S * U * 8.0 * J * (1.0 - 1.0 / (2.0 * S)) * d * (1.0 + c);
  return 0.5 * a + std::sqrt(0.25 * a * a + bc);
}

VelocityResult model_velocity(const ModelParams& p) {
  validate_model_params(p);
  const std::string& m = p.model;
  const int d = get_dim(p);
  const double X0 = solve_X(0.0);

  if (m == "tfim") {
    const double J = p.get("J"), h = p.get("h");
    return finish({
        {"2X0*sqrt(" + coef(d) + "Jh)", 2.0 * X0 * std::sqrt(d * J * h)},
        {coef(4L * d) + x_symbol(d - 1, d) + "J", 4.0 * solve_X((d - 1.0) / d) * d * J},
        {coef(4L * d) + "X0h", 4.0 * X0 * d * h},
    });
  }
  if (m == "tfim-spin-s") {
    const double J = p.get("J"), h = p.get("h"), S = p.get("S");
    if (std::isinf(S)) throw std::invalid_argument("tfim-spin-s: every branch diverges as S -> inf (2X0*sqrt(2dJhS))");
    return finish({
        {"2X0*sqrt(" + coef(2L * d) + "JhS)", 2.0 * X0 * std::sqrt(2.0 * d * J * h * S)},
        {coef(8L * d) + "X0hS", 8.0 * X0 * d * h * S},
        {coef(8L * d) + x_numeric(1.0 - 1.0 / (2.0 * S * d)) + "JS", 8.0 * S * d * J * solve_X(1.0 - 1.0 / (2.0 * S * d))},
    });
  }
  if (m == "heisenberg-xyz") {
    const double S = p.get("S");
    const double Jm = p.has("J") ? heisenberg_jm(p.get("J"), p.get("J"), p.get("J"))
                                 : heisenberg_jm(p.get("Jx"), p.get("Jy"), p.get("Jz"));
    const double y = std::isinf(S) ? 1.0 : 1.0 - 1.0 / (2.0 * S * d);
    auto r = finish({{coef(4L * d) + "Jm*" + x_numeric(y), 4.0 * d * Jm * solve_X(y)}});
    r.notes = "Jm = " + format_real(Jm);
    return r;
  }
  if (m == "truncated-bh") {
    const double J = p.get("J"), U = p.get("U"), S = p.get("S");
    if (std::isinf(S)) throw std::invalid_argument("truncated-bh: the velocity grows as sqrt(S) and diverges at S = inf");
    auto f = [&](double k) { return truncated_bh_omega(S, U, J, d, k) / k; };
    const auto mn = minimize_scan_golden(f, ScanOptions{});
    if (!mn.interior) throw NumericError("truncated-bh: no interior minimum of omega(i kappa)/kappa");
    auto r = finish({
        {"min_kappa omega(i kappa)/kappa", mn.value},
        {"2X0*sqrt(2SUJd)", 2.0 * X0 * std::sqrt(2.0 * S * U * J * d), false},
    });
    r.kappa_star = mn.x;
    r.omega_at_kappa = mn.value * mn.x;
    r.notes = "large-S asymptote listed for reference";
    return r;
  }
  if (m == "fh-sun") {
    const double J = p.get("J"), U = p.get("U");
    const long N = static_cast<long>(p.get_or("N", 2.0));
    if (J == 0.0) return finish({{"J = 0", 0.0}}, "no hopping");
    const double yz = (N - 1.0) * U / (d * J);
    return finish({
        {coef(2L * d) + ratio_symbol("X", 2 * N - 1, 4L * d) + "J", 2.0 * solve_X((2.0 * N - 1.0) * U / (4.0 * d * J)) * d * J},
        {coef(d) + ratio_symbol("Z", N - 1, d) + "J", d * J * solve_Z(yz)},
        {coef(4L * N * d) + x_symbol(d - 1, d) + "J", 4.0 * N * d * J * solve_X((d - 1.0) / d)},
    });
  }
  if (m == "wen-rotor") {
    const double J = p.get("J"), g = p.get("g");
    const double S = p.get_or("S", kInfinity);
    std::vector<VelocityBranch> b;
    b.push_back({"2X0*sqrt(" + coef(d - 1L) + "gJ)", 2.0 * X0 * std::sqrt((d - 1.0) * g * J)});
    if (d == 2) {
      if (!std::isinf(S)) b.push_back({"4X_{1/2}JS^2", 4.0 * solve_X(0.5) * J * S * S});
      b.push_back({"8X0g", 8.0 * X0 * g});
    }
    return finish(std::move(b));
  }
  if (m == "ptc") {
    const double h = p.get("h");
    return finish({
        {"8X_{1/2}h", 8.0 * solve_X(0.5) * h},
        {"2X0*sqrt(2h)", 2.0 * X0 * std::sqrt(2.0 * h)},
        {"8X0", 8.0 * X0},
    });
  }
  throw std::invalid_argument("unknown model '" + m + "'");
}

bool has_baseline(const ModelParams& p) {
  const std::string& m = p.model;
  if (m == "tfim" || m == "fh-sun" || m == "ptc") return true;
  if (m == "tfim-spin-s" || m == "heisenberg-xyz" || m == "wen-rotor") return !std::isinf(p.get_or("S", kInfinity));
  return false;
}

double baseline_velocity(const ModelParams& p) {
  validate_model_params(p);
  const std::string& m = p.model;
  if (!has_baseline(p)) throw std::invalid_argument("model '" + m + "' has no documented baseline for these parameters");
  const int d = get_dim(p);
  if (m == "tfim") return 8.0 * kE * d * p.get("J");
  if (m == "tfim-spin-s") {
    const double twoS = 2.0 * p.get("S");
    return 8.0 * kE * d * p.get("J") * twoS * twoS;
  }
  if (m == "fh-sun") return 8.0 * kE * d * p.get("J") * p.get_or("N", 2.0);
  if (m == "ptc") return 32.0 * kE;
  if (m == "heisenberg-xyz") {
    const double J = p.has("J") ? p.get("J") : std::max({p.get("Jx"), p.get("Jy"), p.get("Jz")});
    return 16.0 * d * kE * J * (p.get("S") + 1.0);
  }
  if (m == "wen-rotor") return kE * std::sqrt(2.0 * p.get("g") * p.get("J")) * p.get("S");
  throw std::invalid_argument("model '" + m + "' has no documented baseline");
}

double fh_anticommutator_bound(const Coord& x, double t, double J, double U, int N) {
  if (!(t >= 0.0)) throw std::invalid_argument("fh_anticommutator_bound: t must be >= 0");
  double v = 2.0 * std::exp((2.0 * N - 1.0) * U * t / 2.0);
  for (int xm : x) v *= bessel_i(xm, 2.0 * J * t);
  return v;
}

double free_fermion_exact(const Coord& x, double t, double J) {
  if (!(t >= 0.0)) throw std::invalid_argument("free_fermion_exact: t must be >= 0");
  double v = 2.0;
  for (int xm : x) v *= bessel_j(xm, 2.0 * J * t);
  return std::abs(v);
}

namespace {

void check_fh(int N, int d, double J, double U) {
  if (N < 2 || d < 1) throw std::invalid_argument("FH cell: need N >= 2 and d >= 1");
  if (!(J >= 0.0) || !(U >= 0.0)) throw std::invalid_argument("FH cell: J and U must be >= 0");
}

// Majorana flavor index: sigma in 1..N -> 2(sigma-1), its partner -> +1.
std::size_t flav(long a, bool bar) { return static_cast<std::size_t>(2 * a + (bar ? 1 : 0)); }

void add_hops(std::vector<CellCoupling>& out, std::size_t from, std::size_t to, int d, double w) {
  for (int m = 0; m < d; ++m)
    for (int s : {-1, 1}) {
      Coord off(d, 0);
      off[m] = s;
      out.push_back({from, to, off, w});
    }
}

std::vector<std::string> majorana_labels(int N) {
  std::vector<std::string> labels;
  for (int a = 1; a <= N; ++a) {
    labels.push_back("c" + std::to_string(a));
    labels.push_back("c-" + std::to_string(a));
  }
  return labels;
}

}  // namespace

UnitCellGraph fh_fermion_cell(int N, int d, double J, double U) {
  check_fh(N, d, J, U);
  std::vector<CellCoupling> cp;
  const Coord zero(d, 0);
  for (long a = 0; a < N; ++a)
    for (bool bar : {false, true}) {
      const auto s = flav(a, bar);
      add_hops(cp, s, s, d, J);
      cp.push_back({s, flav(a, !bar), zero, U / 2.0});
      for (long b = 0; b < N; ++b) {
        if (b == a) continue;
        cp.push_back({s, flav(b, false), zero, U / 2.0});
        cp.push_back({s, flav(b, true), zero, U / 2.0});
      }
    }
  return UnitCellGraph::coefficient(d, majorana_labels(N), std::move(cp), VelocityMethod::fermion);
}

UnitCellGraph fh_modified_cell(int N, int d, double J, double U) {
  check_fh(N, d, J, U);
  auto labels = majorana_labels(N);
  std::vector<std::pair<long, long>> pairs;
  for (long a = 0; a < N; ++a)
    for (long b = a + 1; b < N; ++b) {
      pairs.emplace_back(a, b);
      labels.push_back("u" + std::to_string(a + 1) + "," + std::to_string(b + 1));
    }
  auto pair_index = [&](long a, long b) {
    if (a > b) std::swap(a, b);
    const auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(a, b));
    return static_cast<std::size_t>(2 * N) + static_cast<std::size_t>(it - pairs.begin());
  };
  std::vector<CellCoupling> cp;
  const Coord zero(d, 0);
  for (long a = 0; a < N; ++a)
    for (bool bar : {false, true}) {
      const auto s = flav(a, bar);
      add_hops(cp, s, s, d, J);
      for (long b = 0; b < N; ++b)
        if (b != a) cp.push_back({s, pair_index(a, b), zero, U / 2.0});
    }
  for (const auto& [a, b] : pairs) {
    const auto u = pair_index(a, b);
    for (auto f : {flav(a, false), flav(a, true), flav(b, false), flav(b, true)}) {
      cp.push_back({u, f, zero, 2.0 * d * J});
      add_hops(cp, u, f, d, J);
    }
  }
  return UnitCellGraph::coefficient(d, std::move(labels), std::move(cp), VelocityMethod::fermion);
}

}  // namespace lrb
