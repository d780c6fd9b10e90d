// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace lrb {

using Coord = std::vector<int>;

enum class Pauli : std::uint8_t { X, Y, Z };

char to_char(Pauli p);

/// Lattice site: cell coordinate plus optional sublattice tag (default 0).
struct Site {
  Coord cell;
  int sublattice = 0;

  auto operator<=>(const Site&) const = default;
};

/// Majorana mode: cell coordinate plus flavor index.
struct Mode {
  Coord cell;
  int flavor = 0;

  auto operator<=>(const Mode&) const = default;
};

/// Tensor product of single-site Pauli matrices. Factors are kept sorted by
/// site; identity sites are absent.
class PauliString {
 public:
  using Factor = std::pair<Site, Pauli>;

  PauliString() = default;
  /// Throws std::invalid_argument when a site appears twice.
  explicit PauliString(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  PauliString translated(const Coord& offset) const;

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Product of distinct Majorana operators in canonical (sorted) order.
/// Repeated modes cancel pairwise on construction since c^2 = 1; the overall
/// sign is irrelevant for every bound and is discarded.
class MajoranaMonomial {
 public:
  MajoranaMonomial() = default;
  explicit MajoranaMonomial(std::vector<Mode> modes);

  const std::vector<Mode>& modes() const noexcept { return modes_; }
  std::size_t degree() const noexcept { return modes_.size(); }
  MajoranaMonomial translated(const Coord& offset) const;

  bool operator==(const MajoranaMonomial&) const = default;

 private:
  std::vector<Mode> modes_;
};

using TermBody = std::variant<PauliString, MajoranaMonomial>;

struct OperatorTerm {
  std::string label;
  double coefficient = 0.0;  // signed, for display; bounds use |coefficient|
  TermBody body;

  double magnitude() const;
};

enum class Boundary { open, periodic, translation_invariant };
enum class BasisKind { pauli, majorana, custom };

struct CustomVertex {
  std::string label;
  double weight = 0.0;
};

struct CustomEdge {
  std::size_t a = 0;
  std::size_t b = 0;
};

struct HamiltonianSpec {
  int dimension = 0;
  std::vector<int> extents;  // empty in translation-invariant mode
  Boundary boundary = Boundary::open;
  BasisKind basis = BasisKind::pauli;
  std::vector<OperatorTerm> terms;
  std::vector<CustomVertex> custom_vertices;
  std::vector<CustomEdge> custom_edges;

  bool translation_invariant() const noexcept { return boundary == Boundary::translation_invariant; }
};

/// Parses the line-oriented model-spec format. Throws SpecError.
HamiltonianSpec parse_spec(std::string_view text);
HamiltonianSpec load_spec(const std::filesystem::path& path);

/// Parses a whitespace-separated factor list (e.g. "Z@(0) Z@(1)") against the
/// lattice and basis of `context`. Throws SpecError.
TermBody parse_operator(std::string_view factors, const HamiltonianSpec& context);

/// True iff a and b commute. Throws std::invalid_argument on basis mismatch.
bool commutes(const TermBody& a, const TermBody& b);

std::string to_string(const TermBody& body);

struct CliffordReport {
  bool checkable = false;
  bool pass = false;
  std::size_t term_count = 0;
  std::vector<std::string> caveats;
};

CliffordReport verify_clifford(const HamiltonianSpec& spec);

}  // namespace lrb
