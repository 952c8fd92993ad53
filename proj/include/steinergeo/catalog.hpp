#pragma once

#include <optional>
#include <string>
#include <vector>

namespace steinergeo {

// Empirical length L(n, q) = n + sqrt((6-n)^2 - q(6-n-q)) for six-pin
// configurations; n = 4 - p, q the rotational symmetry parameter.
double empirical_length(int n, int q);

// Same quantity as a function of the Steiner count p; accepts the formal
// p = 6 index used for the minimal tree.
double empirical_length_p(int p, int q);

struct SymmetryIdentityReport {
  bool passed = true;
  int checked = 0;
  double max_abs_diff = 0.0;
};

// Verifies L(n, q) == L(n, 6-n-q) across the formula domain.
SymmetryIdentityReport symmetry_identity_check();

enum class CatalogStatus { observed, predicted_unobserved, exception };

std::string to_string(CatalogStatus s);

struct MatchedTreeRef {
  double length = 0.0;
  int p = 0;
  int q = 1;
  bool from_spanning = false;
};

struct CatalogEntry {
  int p = 0;
  int n = 0;  // always 4 - p
  int q = 1;
  double predicted_length = 0.0;
  std::optional<MatchedTreeRef> matched_tree;
  CatalogStatus status = CatalogStatus::predicted_unobserved;
  std::string note;
};

// Configuration table for the unit hexagon: every formula row with predicted
// length <= max_length (plus the formal minimal-tree row), joined against the
// computed Steiner local minima and the spanning-tree catalog. Rows whose
// length is realized but whose (p, q) never is are flagged as exceptions.
std::vector<CatalogEntry> generate_catalog(double max_length, int threads = 0);

}  // namespace steinergeo
