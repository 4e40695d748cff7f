#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hibi/hibi_ideals.hpp"
#include "hibi/monomial.hpp"
#include "hibi/poset.hpp"
#include "hibi/toric.hpp"

namespace hibi {

struct ReesCertificate {
  bool squarefree_quadratic;
  bool x_condition;
  int relations;
};

// Above this many fiber generators the Rees family is not compared with
// Buchberger and the certificate is left out.
inline constexpr int kReesCertificateLimit = 81;

struct CmCertificates {
  // H_{r,s}(P) weakly polymatroidal under RowMajor, hence linear quotients.
  bool weakly_polymatroidal;
  std::optional<PolymatroidalWitness> polymatroidal_failure;
  bool linear_quotients;
  // Sorting relations: squarefree quadratic initial ideal of L_{r,s}.
  bool sorting_squarefree_quadratic;
  int sorting_relations;
  // Rees relations: squarefree quadratic initial ideal with the x-condition.
  std::optional<ReesCertificate> rees;
  // s = r only: the Hibi relations also form a quadratic basis.
  std::optional<int> hibi_relations;
};

CmCertificates cm_certificates(const Poset& poset, int r, int s);

struct InvariantReport {
  // poset
  int n;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  int width;
  bool pure;
  bool antichain;
  int r;
  int s;
  // dimensions
  int ring_dim;         // dim R_r(P) = n(r-1) + 1
  int ring_dim_rs;      // dim R_{r,s}(P)
  int analytic_spread;  // of H_r(P), equal to ring_dim
  int dim_quotient;     // dim S/I_r(P)
  int height;           // height of I_r(P)
  int pd;               // pd H_r(P) = (r-1) width
  int reg;              // reg H_r(P)
  std::optional<int> reg_quotient_I;  // reg S/I_r(P) by Hochster, when r n <= 12
  int generators_I;     // |G(I_{r,s}(P))|
  int generators_H;     // |G(H_{r,s}(P))|
  // statuses
  bool complete_intersection;  // I_r(P)
  bool gorenstein_I;           // I_r(P)
  bool gorenstein_R;           // R_r(P), decided by purity
  int predicted_depth_limit;   // n - 1
  CmCertificates certificates;
};

// Every field is computed by the other modules and the equalities between
// them are checked; a failed check throws VerificationError naming it.
InvariantReport full_report(const Poset& poset, int r, int s);

struct HibiIsomorphism {
  Poset product;                 // P x Q_{r-1}
  std::vector<Multichain> chains;
  std::vector<ElementSet> images;  // ideal of the product for each chain
  int relations;
};

// The lattice isomorphism from multichains of length r to ideals of
// P x Q_{r-1}, checked to be bijective and to preserve meet and join, and to
// carry the Hibi relations of one onto the other.
HibiIsomorphism verify_hibi_isomorphism(const Poset& poset, int r);

}  // namespace hibi
