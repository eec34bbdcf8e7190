#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "secant/point_set.hpp"
#include "secant/poset.hpp"

namespace secant {

// Monotone lattice path from (1, b+h) to (a, h) using down (+1,0) and
// left (0,-1) steps; a+b points.
struct Path {
  int h = 1;
  std::vector<GridPoint> points;
  PointSet mask;

  friend bool operator==(const Path& l, const Path& r) { return l.h == r.h && l.points == r.points; }
};

// t pairwise vertex-disjoint paths sorted by strictly increasing h. Facet
// identity is the point set; the path tuple is how facets are enumerated.
struct Facet {
  std::vector<Path> paths;
  PointSet points;

  std::vector<int> h_tuple() const;
  friend bool operator==(const Facet& l, const Facet& r) { return l.paths == r.paths; }
};

// All paths for the given h in lexicographic order of their point lists.
std::vector<Path> enumerate_paths(const SegreParams& params, int h);

// Paths indexed by h (entry 0 unused).
std::vector<std::vector<Path>> enumerate_all_paths(const SegreParams& params);

// True when `p` is a valid path for (a, b) starting in row 1.
bool is_path(const SegreParams& params, const std::vector<GridPoint>& p);

using FacetVisitor = std::function<void(const Facet&)>;

// Streams every tuple of pairwise disjoint paths with h_1 < ... < h_t, ordered
// by h-tuple and then by the path tuple. Requires the secant regime.
void enumerate_facets(const SegreParams& params, const FacetVisitor& visit);

// Same, restricted to one h-tuple. Lets callers partition the work.
void enumerate_facets_for(const SegreParams& params, const std::vector<int>& h_tuple,
                          const FacetVisitor& visit);

// All strictly increasing t-tuples in [1, b], lexicographic.
std::vector<std::vector<int>> h_tuples(int b, int t);

// Number of facet tuples, computed by streaming.
std::uint64_t count_facet_tuples(const SegreParams& params);

// |S| = (a+b)t and S contains no chain of t+1 elements.
bool is_facet(const Poset& poset, const PointSet& s, int t);
bool is_facet(const PointSet& s, const SegreParams& params);

struct FacetDecomposition {
  std::vector<Path> paths;  // the first decomposition found (h increasing)
  std::size_t count = 0;    // number of decompositions
  bool unique() const { return count == 1; }
};

// Every way to split a facet into t disjoint paths. ValidationError when S is
// not a facet.
FacetDecomposition decompose_facet(const PointSet& s, const SegreParams& params);

Facet make_facet(std::vector<Path> paths);

// Figure-style picture of the L-shaped region P': the a x 2b grid followed by
// an a x b block repeating the second slice. Path k is drawn with the k-th
// symbol of "123456789ABCDEF...", empty cells with '.'.
std::string render_p_prime(const Facet& facet, const SegreParams& params);

// Inverse of render_p_prime (reads the upper a x 2b block).
Facet parse_p_prime(const std::string& text, SegreParams& params_out);

// JSON-lines record {"h": [...], "paths": [[[r,c],...],...]}.
nlohmann::json facet_to_json(const Facet& facet);
Facet facet_from_json(const nlohmann::json& j, const SegreParams& params);

}  // namespace secant
