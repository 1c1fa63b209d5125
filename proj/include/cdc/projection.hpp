#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdc/dynamics.hpp"
#include "cdc/labeling.hpp"

namespace cdc {

// --- chi: colors on L(G) --------------------------------------------------------------

/// Cycle id per edge of L(G). An edge of L(G) is an l2 vertex, so the
/// coloring is total by construction. `trails` lists each cycle as the
/// closed trail of L(G) edges it runs through.
struct EdgeColoring {
  Graph lg;
  std::vector<int> color;  // indexed by lg edge id
  std::vector<std::vector<int>> trails;
};

EdgeColoring project_chi(const CycleSet& cs, const ReducedStructure& rs);

struct ColoringViolation {
  std::string kind;
  Vertex vertex = -1;  // lg vertex, or -1
  std::string message;
};

struct ColoringReport {
  std::vector<ColoringViolation> violations;
  /// Triangles of L(G) whose three edges carry one color. Expected whenever
  /// a cycle passes through the same source vertex more than once, so this
  /// is reported, not judged.
  std::vector<std::array<Vertex, 3>> monochromatic_triangles;

  bool ok() const { return violations.empty(); }
};

/// Checks, for every vertex-induced triangle and each of its corners: if the
/// two triangle edges at the corner share a color, the two other edges at
/// the corner carry that color too. Also checks that the 4 edges at each
/// vertex show a 2+2 or 4 color pattern and that no trail turns inside a
/// triangle (two consecutive trail edges from the same triangle).
ColoringReport check_valid_edge_labeling(const EdgeColoring& ec, const TriangleClassification& tc);

// --- pi: closed walks in G -------------------------------------------------------------

/// Closed walks as cyclic vertex sequences; the step from the last vertex
/// back to the first is implied.
struct WalkCover {
  std::vector<std::vector<Vertex>> walks;
};

WalkCover project_pi(const CycleSet& cs, const ReducedStructure& rs);

/// Traversal count per edge of g summed over all walks; -1 entries never
/// occur, steps that are not edges are skipped.
std::vector<int> edge_traversals(const Graph& g, const WalkCover& wc);

// --- verification ---------------------------------------------------------------------

struct CdcViolation {
  std::string kind;
  int walk = -1;
  std::optional<Edge> edge;
  std::string message;
};

struct CertificateStats {
  std::string search_status;
  int type_a = 0;
  int type_b = 0;
  long long flips = 0;
  int attempts = 0;
};

struct CdcCertificate {
  Graph graph;
  std::vector<std::vector<Vertex>> cycles;
  bool valid_cdc = false;
  std::vector<CdcViolation> violations;
  std::vector<bool> vertex_simple;  // informational, per walk
  std::string labeling_bits_hex;
  std::optional<std::uint64_t> seed;
  std::optional<CertificateStats> stats;
};

/// Uses only g and the walks. A walk whose last vertex repeats its first is
/// read as explicitly closed and the repeat is dropped. Valid iff every walk
/// is closed along edges of g, no walk uses an edge twice, and every edge
/// lies on exactly two distinct walks.
CdcCertificate verify_cdc(const Graph& g, const WalkCover& wc);

/// Preconditions, construction, search, TypeB clean-up, projection and
/// verification. Throws PreconditionError when g is not connected, cubic
/// and triangle-free; bridges are reported in the certificate instead.
CdcCertificate pipeline(const Graph& g, const SearchConfig& cfg);

/// Projects and verifies a given labeling, as used for replaying certificates.
CdcCertificate certify_labeling(const Labeling& lab);

}  // namespace cdc
