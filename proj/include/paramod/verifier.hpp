#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paramod/boundary_geometry.hpp"

namespace paramod {

// Leading coefficient p^2(p^2 + 1)/8640 of the cubic weight-n dimension
// growth at level p^2, and the covering degree p^2(p^2 + 1) over the
// degree-2 level-1 modular threefold; 8640 times the first equals the
// second.
Rational dimension_leading_term(long long p);
long long covering_degree(long long p);

struct VerifyOptions {
  // Admissible weights are the positive multiples of this; default 24p.
  std::optional<long long> divisibility;
  // Weight used for the concrete sign scan; must be admissible. Default:
  // the divisibility itself.
  std::optional<long long> concrete_n;
  // Also run every step with the alternative weight-1 slope 3 - 10/p and
  // record the comparison.
  bool alpha_mode = false;
  // Replacement restriction data; the shipped tables when absent.
  std::optional<GeometrySet> geometry;
};

struct Witness {
  long long n = 0;
  long long i = 0;
  Rational value;
};

struct AlphaComparison {
  Rational alpha;
  AffineForm sigma_pairing;
  AffineForm worst_case;
  bool vanishes = false;
};

struct StepCertificate {
  DivisorLabel surface = DivisorLabel::E1P;
  std::string i_range;
  SurfaceClass bounding_class;
  AffineForm sigma_pairing;
  AffineForm worst_case;
  std::string criterion;
  bool vanishes = false;
  std::optional<Witness> witness;
  std::vector<DiscardRecord> discarded;
  Provenance provenance = Provenance::PaperDerived;
  std::vector<std::string> notes;
  std::optional<AlphaComparison> alpha_comparison;
};

// One obstruction-vanishing step: bounds the space of sections of
// n*(weight-n class) - (n/2)(earlier surfaces) - i*(this surface) restricted
// to this surface, and decides negativity for every admissible n. The five
// surfaces run in the fixed order E1P, E1PP, H1, H2, E2 with the earlier
// ones as priors; the final two range over all i >= 0.
StepCertificate verify_step(DivisorLabel surface, long long p,
                            const VerifyOptions& opts = {});

struct Certificate {
  long long p = 0;
  long long divisibility = 0;
  long long concrete_n = 0;
  bool alpha_mode = false;
  bool rearrangement = false;
  std::vector<StepCertificate> steps;
  Rational leading_term;
  long long degree = 0;
  std::string verdict;
  std::vector<std::string> notes;

  bool all_steps_vanish() const;
  bool verified() const { return rearrangement && all_steps_vanish(); }
};

// Runs the rearrangement identity, the five steps, and the dimension
// formulas for prime p, and assembles the machine-readable certificate.
Certificate build_certificate(long long p, const VerifyOptions& opts = {});

Json certificate_to_json(const Certificate& cert);
// Byte-deterministic serialization: fixed key order, 2-space indent,
// trailing newline.
std::string certificate_to_string(const Certificate& cert);

struct RecheckResult {
  bool byte_identical = false;
  long long p = 0;
  std::string regenerated;
};

// Re-runs the pipeline with the parameters recorded inside the certificate
// file and byte-compares the regenerated certificate with the file.
RecheckResult recheck_certificate(const std::string& path,
                                  const std::optional<GeometrySet>& geometry =
                                      std::nullopt);

}  // namespace paramod
