#include "steinergeo/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "steinergeo/relax.hpp"
#include "steinergeo/spanning.hpp"

namespace steinergeo {

namespace {

double radical(int m, int q) {  // m = 6 - n
  const double arg = static_cast<double>(m) * m - static_cast<double>(q) * (m - q);
  if (arg < 0.0) throw std::invalid_argument("empirical_length: negative radicand");
  return std::sqrt(arg);
}

}  // namespace

double empirical_length(int n, int q) {
  if (n < 0 || n > 4) throw std::invalid_argument("empirical_length: n must lie in [0, 4]");
  if (q < 0 || q > 6 - n) throw std::invalid_argument("empirical_length: q outside [0, 6-n]");
  return n + radical(6 - n, q);
}

double empirical_length_p(int p, int q) {
  if (p < 0 || p > 6) throw std::invalid_argument("empirical_length_p: p must lie in [0, 6]");
  if (q < 0 || q > 2 + p) throw std::invalid_argument("empirical_length_p: q outside [0, 2+p]");
  return 4 - p + radical(2 + p, q);
}

SymmetryIdentityReport symmetry_identity_check() {
  SymmetryIdentityReport report;
  for (int n = 0; n <= 4; ++n) {
    for (int q = 1; q <= 5 - n; ++q) {
      const double diff = std::abs(empirical_length(n, q) - empirical_length(n, 6 - n - q));
      report.max_abs_diff = std::max(report.max_abs_diff, diff);
      ++report.checked;
      if (diff > 1e-12) report.passed = false;
    }
  }
  return report;
}

std::string to_string(CatalogStatus s) {
  switch (s) {
    case CatalogStatus::observed:
      return "observed";
    case CatalogStatus::predicted_unobserved:
      return "predicted-unobserved";
    case CatalogStatus::exception:
      return "exception";
  }
  return "?";
}

std::vector<CatalogEntry> generate_catalog(double max_length, int threads) {
  if (!(max_length > 0.0)) throw std::invalid_argument("generate_catalog: max_length must be positive");
  const TerminalSet hex = regular_polygon(6, 1.0);
  const LocalMinimaResult minima = find_all_local_minima(hex, max_length, RelaxOptions{}, threads);
  const std::vector<SpanningGroup> spanning = spanning_catalog(hex, max_length);

  std::vector<CatalogEntry> entries;
  // physical symmetry parameters q in {1,2,3}; rows deduplicated under
  // L(n,q) = L(n,6-n-q)
  for (int n = 0; n <= 4; ++n) {
    for (int q = 1; q <= 3 && q <= 6 - n; ++q) {
      const int partner = 6 - n - q;
      if (partner >= 1 && partner <= 3 && partner < q) continue;
      const double predicted = empirical_length(n, q);
      if (predicted > max_length + 1e-9) continue;
      CatalogEntry e;
      e.n = n;
      e.p = 4 - n;
      e.q = q;
      e.predicted_length = predicted;
      entries.push_back(e);
    }
  }
  // The minimal tree is matched by the formula only at the formal index
  // p = 6, q = 3 (equivalently q = 5), outside the geometric (p, q) range.
  {
    const double predicted = empirical_length_p(6, 3);
    if (predicted <= max_length + 1e-9) {
      CatalogEntry e;
      e.p = 6;
      e.n = -2;
      e.q = 3;
      e.predicted_length = predicted;
      e.note = "formal minimal-tree row: q = 3 or 5, no geometric reading of (p, q)";
      entries.push_back(e);
    }
  }

  for (CatalogEntry& e : entries) {
    bool length_match = false;
    for (const GeometricTree& t : minima.trees) {
      if (std::abs(t.total_length - e.predicted_length) > 1e-9) continue;
      length_match = true;
      const int partner = 6 - e.n - e.q;
      if (t.p == e.p && (t.q == e.q || t.q == partner)) {
        e.status = CatalogStatus::observed;
        e.matched_tree = MatchedTreeRef{t.total_length, t.p, t.q, false};
        break;
      }
    }
    if (e.status != CatalogStatus::observed) {
      for (const SpanningGroup& g : spanning) {
        if (std::abs(g.length - e.predicted_length) > 1e-9) continue;
        length_match = true;
        const int partner = 6 - e.n - e.q;
        if (e.p == 0 && (g.q == e.q || g.q == partner)) {
          e.status = CatalogStatus::observed;
          e.matched_tree = MatchedTreeRef{g.length, 0, g.q, true};
          break;
        }
      }
    }
    if (e.status != CatalogStatus::observed) {
      e.status = length_match ? CatalogStatus::exception : CatalogStatus::predicted_unobserved;
      if (length_match && e.note.empty()) {
        e.note = "length realized but by a configuration with different (p, q)";
      }
    }
  }

  std::sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.predicted_length != b.predicted_length) return a.predicted_length < b.predicted_length;
    if (a.n != b.n) return a.n < b.n;
    return a.q < b.q;
  });
  return entries;
}

}  // namespace steinergeo
