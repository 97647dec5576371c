#pragma once

#include "solidtorus/homology.hpp"
#include "solidtorus/normal.hpp"
#include "solidtorus/triangulation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace solidtorus {

struct SearchBudget {
  long max_weight = 0;       // 0 means no weight filter
  long max_piece_count = 0;  // total coordinate sum bound
  double time_limit = 60.0;  // seconds
  int jobs = 1;              // worker threads over quad-type branches
};

struct EnumerationResult {
  /// Sorted by (piece count, coordinates), so a larger budget extends the list.
  std::vector<NormalVector> vectors;
  bool complete = true;
};

/// Every admissible vector satisfying the matching equations with coordinate sum
/// within the budget. Branches over the quad type of each tetrahedron (a chosen type
/// has count at least one), then solves the equations by depth-first search that
/// fixes any variable determined by an equation.
EnumerationResult enumerate_admissible(const Triangulation& tri, const SearchBudget& b);

struct MeridianDisc {
  NormalVector vector;
  ReconstructedSurface surface;
  long boundary_length = 0;
  long weight = 0;
  long piece_count() const { return surface.piece_count; }
  bool operator<(const MeridianDisc& o) const;  // complexity, then vector order
};

struct MeridianSearchResult {
  std::vector<MeridianDisc> discs;  // sorted by complexity
  bool complete = true;
  Slope meridian;
};

/// Connected, orientable, chi = 1 surfaces whose single boundary curve has the slope of
/// the homology meridian. `labels` defaults to default_labels(tri).
MeridianSearchResult find_meridian_discs(const Triangulation& tri, const SearchBudget& b,
                                         const EdgeLabels* labels = nullptr);

/// True when the vector is a meridian disc for the given meridian.
std::optional<MeridianDisc> as_meridian_disc(const Triangulation& tri, const EdgeLabels& labels,
                                             const Slope& meridian, const NormalVector& v);

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

struct MinimalDiscResult {
  std::optional<MeridianDisc> disc;
  Verdict status = Verdict::inconclusive;  // pass: found and certified minimal
  /// Length lower bound from the curve formula, met by the disc.
  bool length_certified = false;
  /// Every vector of weight at most the disc's weight was within the piece budget.
  bool weight_certified = false;
};

/// Lexicographic minimum of (boundary length, weight), ties broken by vector order.
MinimalDiscResult minimal_complexity_disc(const Triangulation& tri, const SearchBudget& b,
                                          const EdgeLabels* labels = nullptr);

struct Report611 {
  long i = 0;
  Verdict status = Verdict::inconclusive;
  long discs_found = 0;
  long min_piece_count = -1;
  Integer x_next;            // x_{i+2}
  bool meets_bound = false;  // min >= x_{i+2}
  bool meets_phi = false;    // min >= phi^{i+1}
  bool edge_bound = false;   // every disc meets the s_{i+2} edge at least x_{i+2} times
  bool search_complete = false;
  bool lower_bound_certified = false;  // budget covered every vector below x_{i+2}
};

Report611 verify_61_1(long i, const SearchBudget& b);

struct Report612 {
  long i = 0;
  Verdict status = Verdict::fail;
  Integer x_next, y_next;
  Integer min_value;        // min |n x_{i+2} - y_{i+2}|
  Integer argmin_n;         // ties go to the larger n
  bool third_bound = false;  // 3 min >= x_{i+2}
  bool phi_bound = false;    // x_{i+2}/3 >= phi^{i-1} and min >= phi^{i-1}
  /// Same minimum taken over slopes meeting the homology meridian once.
  Integer precore_min;
};

Report612 verify_61_2(long i, long window);

}  // namespace solidtorus
