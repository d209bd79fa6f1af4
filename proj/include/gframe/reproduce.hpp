#pragma once

#include <string>
#include <vector>

#include "gframe/serialize.hpp"

namespace gframe {

struct ReproduceCheck {
  int id = 0;
  std::string name;
  bool passed = false;
  double residual = 0.0;
};

struct ReproduceResult {
  double tolerance = 0.0;
  std::vector<ReproduceCheck> checks;

  bool all_passed() const;
};

/// The triangle plus disjoint edge on five vertices, as an edge list.
extern const char *const kTriangleAndEdge;

/**
 * Worked checks for the five-vertex graph K3 + K2: Laplacian and Gramian
 * identities, canonical dual, 1- and 2-erasure radii, and the tie of the
 * shifted dual with shift (0, 0, 1). A check passes when its residual is at
 * most `tolerance`; failures are reported, never thrown.
 */
ReproduceResult reproduce_examples(double tolerance = 1e-9);

std::string format_table(const ReproduceResult &r);
Json reproduce_to_json(const ReproduceResult &r);

} // namespace gframe
