#pragma once

#include <map>
#include <string>
#include <vector>

#include "dilute/algebra.hpp"

namespace dilute {

enum class RelationFamily { ProjectorAlg, Commutation, ExternalLegs, BraidMonoid, Dilute, Quotient };

std::string_view to_string(RelationFamily f);

struct Relation {
  std::string name;
  AlgebraElement lhs;
  AlgebraElement rhs;
  RelationFamily family = RelationFamily::ProjectorAlg;
  /// Set on the slant relations whose SlantF/SlantB assignment is a
  /// convention; a failure there means "swap the slants", not a bad rep.
  bool orientation_sensitive = false;
};

struct RelationCatalog {
  Flavor flavor = Flavor::dTL;
  int N = 0;  // largest pair index
  std::vector<Relation> relations;

  std::vector<const Relation*> family(RelationFamily f) const;
  const Relation* find(std::string_view name) const;
};

/// Every defining relation of the chosen quotient for pair indices 1..N.
/// Deterministic: equal arguments give identical relation lists.
RelationCatalog build_catalog(Flavor flavor, int N);

struct RelationResult {
  std::string name;
  RelationFamily family = RelationFamily::ProjectorAlg;
  double residual = 0.0;
  bool passed = true;
  bool orientation_sensitive = false;
};

struct CheckReport {
  double tol = 0.0;
  std::vector<RelationResult> results;
  std::map<RelationFamily, double> family_max;
  double max_residual = 0.0;
  bool passed = true;

  std::vector<std::string> failures() const;
};

/// Relative residual |lhs - rhs|_F / max(1, |lhs|_F) for every relation.
/// Relations are evaluated on `jobs` worker threads; results keep catalog order.
CheckReport check_relations(const Representation& rep, const RelationCatalog& catalog, double tol,
                            int jobs = 1);

}  // namespace dilute
