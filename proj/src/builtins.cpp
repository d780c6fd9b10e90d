// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/builtins.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace lrb {

namespace {

Coord unit(int d, int axis, int sign = 1) {
  Coord c(d, 0);
  c[axis] = sign;
  return c;
}

OperatorTerm pauli_term(std::string label, double coef, std::vector<PauliString::Factor> f) {
  return {std::move(label), coef, PauliString(std::move(f))};
}

std::vector<OperatorTerm> tfim_cell(int d, double J, double h) {
  std::vector<OperatorTerm> t;
  const Coord o(d, 0);
  t.push_back(pauli_term("X", -h, {{Site{o, 0}, Pauli::X}}));
  for (int m = 0; m < d; ++m)
    t.push_back(pauli_term("ZZ_" + std::to_string(m + 1), -J, {{Site{o, 0}, Pauli::Z}, {Site{unit(d, m), 0}, Pauli::Z}}));
  return t;
}

std::vector<OperatorTerm> tfim_spin_s_cell(int d, double J, double h, double S) {
  const int copies = static_cast<int>(std::lround(2.0 * S));
  std::vector<OperatorTerm> t;
  const Coord o(d, 0);
  for (int a = 0; a < copies; ++a) t.push_back(pauli_term("X#" + std::to_string(a), -h, {{Site{o, a}, Pauli::X}}));
  for (int m = 0; m < d; ++m)
    for (int a = 0; a < copies; ++a)
      for (int b = 0; b < copies; ++b)
        t.push_back(pauli_term("ZZ_" + std::to_string(m + 1) + "#" + std::to_string(a) + "," + std::to_string(b), -J,
                               {{Site{o, a}, Pauli::Z}, {Site{unit(d, m), b}, Pauli::Z}}));
  return t;
}

std::vector<OperatorTerm> ptc_cell(double h) {
  const Coord o{0, 0}, ex{1, 0}, ey{0, 1}, mx{-1, 0}, my{0, -1};
  std::vector<OperatorTerm> t;
  t.push_back(pauli_term("plaquette", -1.0,
                         {{Site{o, 0}, Pauli::Z}, {Site{ey, 0}, Pauli::Z}, {Site{o, 1}, Pauli::Z}, {Site{ex, 1}, Pauli::Z}}));
  t.push_back(pauli_term("star", -1.0,
                         {{Site{o, 0}, Pauli::X}, {Site{mx, 0}, Pauli::X}, {Site{o, 1}, Pauli::X}, {Site{my, 1}, Pauli::X}}));
  t.push_back(pauli_term("hx_0", h, {{Site{o, 0}, Pauli::X}}));
  t.push_back(pauli_term("hx_1", h, {{Site{o, 1}, Pauli::X}}));
  return t;
}

std::vector<OperatorTerm> fh_cell(int d, int N, double J, double U) {
  std::vector<OperatorTerm> t;
  const Coord o(d, 0);
  for (int m = 0; m < d; ++m)
    for (int f = 0; f < 2 * N; ++f)
      t.push_back({"hop_" + std::to_string(m + 1) + "#" + std::to_string(f), J / 2.0,
                   MajoranaMonomial({Mode{o, f}, Mode{unit(d, m), f}})});
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      t.push_back({"U#" + std::to_string(a + 1) + "," + std::to_string(b + 1), -U / 4.0,
                   MajoranaMonomial({Mode{o, 2 * a}, Mode{o, 2 * a + 1}, Mode{o, 2 * b}, Mode{o, 2 * b + 1}})});
  return t;
}

Coord wrap(Coord c, const std::vector<int>& ext, bool periodic, bool& inside) {
  inside = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (periodic) {
      c[i] = ((c[i] % ext[i]) + ext[i]) % ext[i];
    } else if (c[i] < 0 || c[i] >= ext[i]) {
      inside = false;
    }
  }
  return c;
}

std::optional<TermBody> place(const TermBody& body, const Coord& cell, const std::vector<int>& ext, bool periodic) {
  bool inside = true;
  if (const auto* p = std::get_if<PauliString>(&body)) {
    std::vector<PauliString::Factor> f;
    for (const auto& [site, op] : p->factors()) {
      bool in;
      Coord c(site.cell);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += cell[i];
      c = wrap(std::move(c), ext, periodic, in);
      inside = inside && in;
      f.push_back({Site{c, site.sublattice}, op});
    }
    if (!inside) return std::nullopt;
    return PauliString(std::move(f));
  }
  std::vector<Mode> modes;
  for (const auto& m : std::get<MajoranaMonomial>(body).modes()) {
    bool in;
    Coord c(m.cell);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += cell[i];
    c = wrap(std::move(c), ext, periodic, in);
    inside = inside && in;
    modes.push_back(Mode{c, m.flavor});
  }
  if (!inside) return std::nullopt;
  return MajoranaMonomial(std::move(modes));
}

std::string coord_label(const Coord& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace

bool has_builtin_spec(std::string_view model) {
  return model == "tfim" || model == "tfim-spin-s" || model == "ptc" || model == "fh-sun";
}

HamiltonianSpec builtin_spec(const ModelParams& p, const LatticeChoice& lattice) {
  validate_model_params(p);
  if (!has_builtin_spec(p.model)) throw std::invalid_argument("model '" + p.model + "' has no operator-level builtin spec");
  HamiltonianSpec spec;
  const int d = p.model == "ptc" ? 2 : static_cast<int>(p.get_or("d", 1.0));
  spec.dimension = d;
  std::vector<OperatorTerm> cell;
  if (p.model == "tfim") {
    spec.basis = BasisKind::pauli;
    cell = tfim_cell(d, p.get("J"), p.get("h"));
  } else if (p.model == "tfim-spin-s") {
    const double S = p.get("S");
    if (std::isinf(S)) throw std::invalid_argument("tfim-spin-s: S = inf has no finite spec");
    if (S > 32) throw std::invalid_argument("tfim-spin-s: builtin spec limited to S <= 32");
    spec.basis = BasisKind::pauli;
    cell = tfim_spin_s_cell(d, p.get("J"), p.get("h"), S);
  } else if (p.model == "ptc") {
    spec.basis = BasisKind::pauli;
    cell = ptc_cell(p.get("h"));
  } else {
    spec.basis = BasisKind::majorana;
    cell = fh_cell(d, static_cast<int>(p.get_or("N", 2.0)), p.get("J"), p.get("U"));
  }

  if (lattice.extents.empty()) {
    if (lattice.boundary != Boundary::translation_invariant)
      throw std::invalid_argument("builtin_spec: finite boundaries need lattice extents");
    spec.boundary = Boundary::translation_invariant;
    spec.terms = std::move(cell);
    return spec;
  }
  if (lattice.extents.size() != static_cast<std::size_t>(d))
    throw std::invalid_argument("builtin_spec: extents must have " + std::to_string(d) + " entries");
  if (lattice.boundary == Boundary::translation_invariant)
    throw std::invalid_argument("builtin_spec: finite lattice needs an open or periodic boundary");
  for (int e : lattice.extents)
    if (e < 1) throw std::invalid_argument("builtin_spec: extents must be positive");
  spec.extents = lattice.extents;
  spec.boundary = lattice.boundary;
  const bool periodic = lattice.boundary == Boundary::periodic;

  std::size_t cells = 1;
  for (int e : lattice.extents) cells *= static_cast<std::size_t>(e);
  for (std::size_t lin = 0; lin < cells; ++lin) {
    Coord c(d);
    std::size_t rem = lin;
    for (int i = d - 1; i >= 0; --i) {
      c[i] = static_cast<int>(rem % static_cast<std::size_t>(lattice.extents[i]));
      rem /= static_cast<std::size_t>(lattice.extents[i]);
    }
    for (const auto& t : cell) {
      auto body = place(t.body, c, lattice.extents, periodic);
      if (!body) continue;
      spec.terms.push_back({t.label + "@" + coord_label(c), t.coefficient, std::move(*body)});
    }
  }
  return spec;
}

}  // namespace lrb
