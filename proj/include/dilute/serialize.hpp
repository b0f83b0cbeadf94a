#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <json.hpp>
#include "dilute/algebra.hpp"
#include "dilute/catalog.hpp"
#include "dilute/diagrams.hpp"
#include "dilute/vertex_rep.hpp"

namespace dilute {

using json = nlohmann::ordered_json;

/// {num: [[re, im, qpow], ...]}; terms carrying other symbols are written as
/// [re, im, qpow, omega_pow, invqdiff_pow, sqrtq_pow].
json to_json(const Laurent& p);
Laurent laurent_from_json(const json& j);

json to_json(const Word& w);
/// [{word: [...], coeff: {...}}, ...]
json to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const json& j);
/// [{name, family, lhs, rhs}, ...]
json to_json(const RelationCatalog& c);

/// {n, arcs: [[["top",1],["bottom",2]], ...]}
json to_json(const DiluteDiagram& d);
DiluteDiagram diagram_from_json(const json& j);
/// {n, terms: [{diagram, coeff}, ...]}
json to_json(const DiagramElement& e);

json to_json(const CheckReport& r);
json to_json(const ExactCheckReport& r);

/// Sparse listing [[row, col, re, im], ...], zero entries skipped.
json sparse_entries(const Eigen::MatrixXcd& m, double rel_cut = 0.0);
Eigen::MatrixXcd dense_from_entries(const json& entries, Eigen::Index rows, Eigen::Index cols);

struct BraidFile {
  int m = 0;
  cplx q{};
  cplx omega{};
  int sigma = -1;
  Eigen::MatrixXcd braid_ss;

  cplx lambda() const;  // i log q
};

BraidFile braid_file_from_json(const json& j);
json to_json(const BraidFile& b);
BraidFile read_braid_file(const std::string& path);

/// Per-generator export in the braid-file layout.
json to_json(const VertexRep& rep);

/// {local_dim, u_re, u_im, lambda, [lambda_im], form, entries: [[a,b,c,d,re,im], ...]}
/// with (a,b) incoming and (c,d) outgoing; row-major over (c,d),(a,b).
json weights_to_json(const Eigen::MatrixXcd& two_site, int local_dim, cplx u, cplx lambda,
                     const std::string& form, double rel_cut = 1e-14);

struct SpectrumRow {
  cplx u{};
  int idx = 0;
  cplx eig{};
};

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows);

json complex_json(cplx z);

}  // namespace dilute
