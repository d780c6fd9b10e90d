// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#include "lrbound/hamiltonian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lrbound/error.hpp"

namespace lrb {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    if (factors_[i].first == factors_[i - 1].first) {
      throw std::invalid_argument("Pauli string acts twice on the same site");
    }
  }
}

namespace {

Coord shifted(const Coord& c, const Coord& offset) {
  Coord out = c;
  for (std::size_t a = 0; a < out.size() && a < offset.size(); ++a) out[a] += offset[a];
  return out;
}

}  // namespace

PauliString PauliString::translated(const Coord& offset) const {
  PauliString out;
  out.factors_ = factors_;
  for (auto& f : out.factors_) f.first.cell = shifted(f.first.cell, offset);
  return out;
}

MajoranaMonomial::MajoranaMonomial(std::vector<Mode> modes) {
  std::sort(modes.begin(), modes.end());
  // Equal modes are adjacent after sorting; c_i c_i = 1 removes them in pairs.
  for (std::size_t i = 0; i < modes.size();) {
    std::size_t j = i;
    while (j < modes.size() && modes[j] == modes[i]) ++j;
    if ((j - i) % 2 == 1) modes_.push_back(modes[i]);
    i = j;
  }
}

MajoranaMonomial MajoranaMonomial::translated(const Coord& offset) const {
  MajoranaMonomial out;
  out.modes_ = modes_;
  for (auto& m : out.modes_) m.cell = shifted(m.cell, offset);
  return out;
}

double OperatorTerm::magnitude() const { return std::abs(coefficient); }

// ---------------------------------------------------------------------------
// Commutation parity

namespace {

bool pauli_commutes(const PauliString& a, const PauliString& b) {
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0, differing = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first < fb[j].first) {
      ++i;
    } else if (fb[j].first < fa[i].first) {
      ++j;
    } else {
      if (fa[i].second != fb[j].second) ++differing;
      ++i;
      ++j;
    }
  }
  return differing % 2 == 0;
}

bool majorana_commutes(const MajoranaMonomial& a, const MajoranaMonomial& b) {
  const auto& ma = a.modes();
  const auto& mb = b.modes();
  std::size_t i = 0, j = 0, shared = 0;
  while (i < ma.size() && j < mb.size()) {
    if (ma[i] < mb[j]) {
      ++i;
    } else if (mb[j] < ma[i]) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  const std::size_t pq = ma.size() * mb.size();
  return (pq + shared) % 2 == 0;  // parity of pq - s
}

}  // namespace

bool commutes(const TermBody& a, const TermBody& b) {
  if (a.index() != b.index()) {
    throw std::invalid_argument("commutes: Pauli and Majorana bodies cannot be compared");
  }
  if (const auto* pa = std::get_if<PauliString>(&a)) {
    return pauli_commutes(*pa, std::get<PauliString>(b));
  }
  return majorana_commutes(std::get<MajoranaMonomial>(a), std::get<MajoranaMonomial>(b));
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

void append_coord(std::string& out, const Coord& c) {
  out += '(';
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (a) out += ',';
    out += std::to_string(c[a]);
  }
  out += ')';
}

}  // namespace

std::string to_string(const TermBody& body) {
  std::string out;
  if (const auto* p = std::get_if<PauliString>(&body)) {
    for (const auto& [site, letter] : p->factors()) {
      if (!out.empty()) out += ' ';
      out += to_char(letter);
      out += '@';
      append_coord(out, site.cell);
      if (site.sublattice != 0) out += '#' + std::to_string(site.sublattice);
    }
  } else {
    for (const auto& m : std::get<MajoranaMonomial>(body).modes()) {
      if (!out.empty()) out += ' ';
      out += "m@";
      append_coord(out, m.cell);
      out += '#' + std::to_string(m.flavor);
    }
  }
  return out.empty() ? std::string("1") : out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_real(std::string_view s, double& out) {
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return !buf.empty() && end == buf.c_str() + buf.size() && std::isfinite(out);
}

struct RawFactor {
  std::string letter;
  Coord coord;
  bool has_tag = false;
  int tag = 0;
};

RawFactor parse_factor_token(std::string_view tok, int dim, int line) {
  auto bad = [&](const std::string& why) {
    return SpecError(line, "malformed factor '" + std::string(tok) + "': " + why);
  };
  const auto at = tok.find('@');
  if (at == std::string_view::npos) throw bad("expected <letter>@(<coords>)");
  RawFactor f;
  f.letter = std::string(tok.substr(0, at));
  if (f.letter != "X" && f.letter != "Y" && f.letter != "Z" && f.letter != "m") {
    throw bad("unknown operator letter '" + f.letter + "'");
  }
  std::string_view rest = tok.substr(at + 1);
  if (rest.empty() || rest.front() != '(') throw bad("expected '(' after '@'");
  const auto close = rest.find(')');
  if (close == std::string_view::npos) throw bad("missing ')'");
  std::string_view inner = rest.substr(1, close - 1);
  std::size_t start = 0;
  while (true) {
    const auto comma = inner.find(',', start);
    std::string_view part = inner.substr(start, comma == std::string_view::npos ? inner.npos : comma - start);
    int v = 0;
    if (!parse_int(part, v)) throw bad("non-integer coordinate '" + std::string(part) + "'");
    f.coord.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(f.coord.size()) != dim) {
    throw bad("expected " + std::to_string(dim) + " coordinate(s), got " + std::to_string(f.coord.size()));
  }
  std::string_view tail = rest.substr(close + 1);
  if (!tail.empty()) {
    if (tail.front() != '#') throw bad("unexpected text after ')'");
    if (!parse_int(tail.substr(1), f.tag) || f.tag < 0) throw bad("tag must be a nonnegative integer");
    f.has_tag = true;
  }
  return f;
}

Coord resolve_coord(const Coord& c, const HamiltonianSpec& spec, std::string_view tok, int line) {
  if (spec.translation_invariant()) return c;
  Coord out = c;
  for (std::size_t a = 0; a < out.size(); ++a) {
    const int L = spec.extents[a];
    if (spec.boundary == Boundary::periodic) {
      out[a] = ((out[a] % L) + L) % L;
    } else if (out[a] < 0 || out[a] >= L) {
      throw SpecError(line, "coordinate of '" + std::string(tok) + "' lies outside the lattice");
    }
  }
  return out;
}

TermBody parse_body(const std::vector<std::string_view>& toks, const HamiltonianSpec& spec, int line) {
  if (toks.empty()) throw SpecError(line, "term needs at least one factor");
  if (spec.basis == BasisKind::custom) throw SpecError(line, "custom basis takes vertex/edge lines, not operator factors");
  std::vector<PauliString::Factor> pauli;
  std::vector<Mode> modes;
  for (auto tok : toks) {
    RawFactor f = parse_factor_token(tok, spec.dimension, line);
    const bool is_majorana = f.letter == "m";
    if (is_majorana != (spec.basis == BasisKind::majorana)) {
      throw SpecError(line, "factor '" + std::string(tok) + "' does not match the declared basis");
    }
    Coord c = resolve_coord(f.coord, spec, tok, line);
    if (is_majorana) {
      if (!f.has_tag) throw SpecError(line, "Majorana factor '" + std::string(tok) + "' needs a #flavor");
      modes.push_back(Mode{std::move(c), f.tag});
    } else {
      const Pauli p = f.letter == "X" ? Pauli::X : f.letter == "Y" ? Pauli::Y : Pauli::Z;
      pauli.emplace_back(Site{std::move(c), f.tag}, p);
    }
  }
  if (spec.basis == BasisKind::majorana) return MajoranaMonomial(std::move(modes));
  try {
    return PauliString(std::move(pauli));
  } catch (const std::invalid_argument&) {
    throw SpecError(line, "a Pauli term acts twice on the same site");
  }
}

std::string_view strip_comment(std::string_view line) {
  const auto hash_pos = [&]() -> std::size_t {
    // '#' inside a factor token (sublattice/flavor tag) directly follows ')'.
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' && (i == 0 || line[i - 1] != ')')) return i;
    }
    return std::string_view::npos;
  }();
  return hash_pos == std::string_view::npos ? line : line.substr(0, hash_pos);
}

}  // namespace

HamiltonianSpec parse_spec(std::string_view text) {
  HamiltonianSpec spec;
  bool have_lattice = false, have_basis = false;
  std::set<std::string> labels;
  std::map<std::string, std::size_t> vertex_index;
  std::set<std::pair<std::size_t, std::size_t>> edges_seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    const std::string_view key = toks[0];

    if (key == "lattice") {
      if (have_lattice) throw SpecError(line_no, "duplicate lattice line");
      if (toks.size() < 3) throw SpecError(line_no, "expected: lattice <d> [<L1> ... <Ld>] <open|periodic|ti>");
      if (!parse_int(toks[1], spec.dimension) || spec.dimension < 1) {
        throw SpecError(line_no, "dimension must be a positive integer");
      }
      const std::string_view bc = toks.back();
      if (bc == "open") spec.boundary = Boundary::open;
      else if (bc == "periodic") spec.boundary = Boundary::periodic;
      else if (bc == "ti") spec.boundary = Boundary::translation_invariant;
      else throw SpecError(line_no, "unknown boundary '" + std::string(bc) + "'");
      const std::size_t n_ext = toks.size() - 3;
      if (spec.translation_invariant()) {
        if (n_ext != 0) throw SpecError(line_no, "ti lattices take no extents");
      } else {
        if (static_cast<int>(n_ext) != spec.dimension) {
          throw SpecError(line_no, "expected " + std::to_string(spec.dimension) + " extent(s)");
        }
        for (std::size_t a = 0; a < n_ext; ++a) {
          int L = 0;
          if (!parse_int(toks[2 + a], L) || L < 1) throw SpecError(line_no, "extent must be a positive integer");
          spec.extents.push_back(L);
        }
      }
      have_lattice = true;
    } else if (key == "basis") {
      if (have_basis) throw SpecError(line_no, "duplicate basis line");
      if (toks.size() != 2) throw SpecError(line_no, "expected: basis <pauli|majorana|custom>");
      if (toks[1] == "pauli") spec.basis = BasisKind::pauli;
      else if (toks[1] == "majorana") spec.basis = BasisKind::majorana;
      else if (toks[1] == "custom") spec.basis = BasisKind::custom;
      else throw SpecError(line_no, "unknown basis '" + std::string(toks[1]) + "'");
      have_basis = true;
    } else if (key == "term") {
      if (!have_basis) throw SpecError(line_no, "basis must be declared before terms");
      if (!have_lattice) throw SpecError(line_no, "lattice must be declared before terms");
      if (toks.size() < 4) throw SpecError(line_no, "expected: term <label> <coeff> <factor> ...");
      OperatorTerm term;
      term.label = std::string(toks[1]);
      if (!labels.insert(term.label).second) throw SpecError(line_no, "duplicate label '" + term.label + "'");
      if (!parse_real(toks[2], term.coefficient)) {
        throw SpecError(line_no, "coefficient '" + std::string(toks[2]) + "' is not a finite number");
      }
      std::vector<std::string_view> factors(toks.begin() + 3, toks.end());
      term.body = parse_body(factors, spec, line_no);
      spec.terms.push_back(std::move(term));
    } else if (key == "vertex") {
      if (!have_basis || spec.basis != BasisKind::custom) throw SpecError(line_no, "vertex lines require basis custom");
      if (toks.size() != 3) throw SpecError(line_no, "expected: vertex <label> <h>");
      CustomVertex v;
      v.label = std::string(toks[1]);
      if (!labels.insert(v.label).second) throw SpecError(line_no, "duplicate label '" + v.label + "'");
      if (!parse_real(toks[2], v.weight)) throw SpecError(line_no, "vertex weight is not a finite number");
      v.weight = std::abs(v.weight);
      vertex_index[v.label] = spec.custom_vertices.size();
      spec.custom_vertices.push_back(std::move(v));
    } else if (key == "edge") {
      if (!have_basis || spec.basis != BasisKind::custom) throw SpecError(line_no, "edge lines require basis custom");
      if (toks.size() != 3) throw SpecError(line_no, "expected: edge <label> <label>");
      auto ia = vertex_index.find(std::string(toks[1]));
      auto ib = vertex_index.find(std::string(toks[2]));
      if (ia == vertex_index.end() || ib == vertex_index.end()) {
        throw SpecError(line_no, "edge references an undeclared vertex");
      }
      if (ia->second == ib->second) throw SpecError(line_no, "self-loop on '" + ia->first + "'");
      auto key_pair = std::minmax(ia->second, ib->second);
      if (edges_seen.insert(key_pair).second) {
        spec.custom_edges.push_back(CustomEdge{key_pair.first, key_pair.second});
      }
    } else {
      throw SpecError(line_no, "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_basis) throw SpecError(0, "missing basis line");
  if (!have_lattice && spec.basis != BasisKind::custom) throw SpecError(0, "missing lattice line");
  return spec;
}

HamiltonianSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpecError(0, "cannot open spec file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

TermBody parse_operator(std::string_view factors, const HamiltonianSpec& context) {
  return parse_body(split_ws(factors), context, 0);
}

CliffordReport verify_clifford(const HamiltonianSpec& spec) {
  CliffordReport report;
  if (spec.basis == BasisKind::custom) {
    report.caveats.push_back("custom coefficient graph: no operator algebra to check");
    return report;
  }
  report.checkable = true;
  report.pass = true;
  std::map<std::string, std::string> seen;  // canonical body -> first label
  for (const auto& term : spec.terms) {
    if (term.coefficient == 0.0) {
      report.caveats.push_back("term '" + term.label + "' has zero coefficient and is dropped");
      continue;
    }
    ++report.term_count;
    if (const auto* m = std::get_if<MajoranaMonomial>(&term.body)) {
      if (m->degree() == 0) {
        report.caveats.push_back("term '" + term.label + "' reduces to the identity");
      } else if (m->degree() % 2 == 1) {
        report.caveats.push_back("term '" + term.label + "' has odd degree " + std::to_string(m->degree()) +
                                 " and breaks fermion parity");
      }
    }
    const std::string canon = to_string(term.body);
    auto [it, inserted] = seen.emplace(canon, term.label);
    if (!inserted) {
      report.caveats.push_back("terms '" + it->second + "' and '" + term.label +
                               "' share an operator; merging them shrinks the decomposition");
    }
  }
  return report;
}

}  // namespace lrb
