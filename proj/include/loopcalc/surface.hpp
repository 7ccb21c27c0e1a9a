#ifndef LOOPCALC_SURFACE_HPP
#define LOOPCALC_SURFACE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "loopcalc/word.hpp"

namespace loopcalc {

struct Star {
  std::string id;
  int edge_count = 0;
  bool operator==(const Star&) const = default;
};

/// gate(star, edge): the pushed-off copy of edge ∪ edge⁺, i.e. the side of the star
/// neighbourhood lying between leaf `edge` and leaf `edge+1`.
struct GateRef {
  std::string star;
  int edge = 0;
  auto operator<=>(const GateRef&) const = default;
};

struct BoundaryArc {
  auto operator<=>(const BoundaryArc&) const = default;
};

using BoundaryItem = std::variant<GateRef, BoundaryArc>;

struct Region {
  std::string id;
  /// Cyclic boundary, gates alternating with boundary arcs.
  std::vector<BoundaryItem> boundary;
  bool operator==(const Region&) const = default;
};

/// Unvalidated surface description as read from input.
struct SurfaceData {
  std::vector<Star> stars;
  std::vector<Region> regions;
  std::optional<int> genus;
  std::optional<int> boundary;
  bool operator==(const SurfaceData&) const = default;
};

struct Violation {
  std::string code;
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  int euler_characteristic = 0;
  std::optional<int> boundary_components;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_surface(const SurfaceData& data);

class InvalidInput : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidSurface : public InvalidInput {
public:
  explicit InvalidSurface(ValidationReport r);
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

/// A validated star-filled surface. Immutable; stars and regions are sorted by id and
/// region boundaries are stored in least rotation, so equal surfaces compare equal.
///
/// Gates carry a global index: gate(s, e) has index gate_offset(s) + e. In gate-letter words
/// the letter +(g+1) crosses gate g from its star to its region and -(g+1) the other way.
class StarFilledSurface {
public:
  /// Throws InvalidSurface when validation fails.
  static StarFilledSurface create(SurfaceData data);

  const SurfaceData& data() const { return data_; }
  std::size_t star_count() const { return data_.stars.size(); }
  std::size_t region_count() const { return data_.regions.size(); }
  std::size_t gate_count() const { return gate_star_.size(); }
  const Star& star(std::size_t i) const { return data_.stars[i]; }
  const Region& region(std::size_t i) const { return data_.regions[i]; }
  int edge_count(std::size_t star) const { return data_.stars[star].edge_count; }

  std::size_t star_index(const std::string& id) const;
  std::size_t region_index(const std::string& id) const;

  std::size_t gate(std::size_t star, int edge) const;
  std::size_t gate_star(std::size_t g) const { return gate_star_[g]; }
  int gate_edge(std::size_t g) const { return gate_edge_[g]; }
  std::size_t gate_region(std::size_t g) const { return gate_region_[g]; }
  GateRef gate_ref(std::size_t g) const { return {data_.stars[gate_star_[g]].id, gate_edge_[g]}; }
  /// Gates on the boundary of a region, in boundary order.
  const std::vector<std::size_t>& region_gates(std::size_t r) const { return region_gates_[r]; }

  int euler_characteristic() const { return report_.euler_characteristic; }
  int boundary_components() const { return *report_.boundary_components; }
  int genus() const { return (2 - euler_characteristic() - boundary_components()) / 2; }

  /// Letter for crossing gate g outward (star -> region) or inward.
  static Letter out_letter(std::size_t g) { return static_cast<Letter>(g) + 1; }
  static Letter in_letter(std::size_t g) { return -static_cast<Letter>(g) - 1; }
  static std::size_t letter_gate(Letter l) { return static_cast<std::size_t>(l > 0 ? l : -l) - 1; }

  bool operator==(const StarFilledSurface& o) const { return data_ == o.data_; }

private:
  SurfaceData data_;
  ValidationReport report_;
  std::vector<std::size_t> gate_offset_;
  std::vector<std::size_t> gate_star_;
  std::vector<int> gate_edge_;
  std::vector<std::size_t> gate_region_;
  std::vector<std::vector<std::size_t>> region_gates_;
  std::map<std::string, std::size_t> star_by_id_;
  std::map<std::string, std::size_t> region_by_id_;
};

/// Canonical form used for deterministic serialization: sorted ids, least-rotation boundaries.
SurfaceData canonicalize(SurfaceData data);

/// The nerve of the filling: one vertex per star and per region, one edge per gate.
/// Vertices 0..S-1 are stars, S..S+R-1 regions; edge g joins gate_star(g) to S+gate_region(g).
struct DualGraph {
  std::size_t star_vertices = 0;
  std::size_t region_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::string> vertex_labels;
  std::vector<std::string> edge_labels;

  std::size_t vertex_count() const { return star_vertices + region_vertices; }
  int betti_number() const {
    return static_cast<int>(edges.size()) - static_cast<int>(vertex_count()) + 1;
  }
  std::string to_dot() const;
};

DualGraph dual_graph(const StarFilledSurface& surface);

/// Gates of a star in successor order gate(s,e) -> gate(s,e+1), with the reference gate
/// orientation signs (all +1: the orientation induced by the star disk).
struct StarGateStructure {
  std::vector<GateRef> gates;
  std::vector<int> reference_signs;
  GateRef successor(const GateRef& g) const;
};

StarGateStructure star_gate_structure(const Star& star);

}  // namespace loopcalc

#endif  // LOOPCALC_SURFACE_HPP
