#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "paramod/divisor_algebra.hpp"

namespace paramod {

// Combination of curve classes on one boundary or modular surface. Keys are
// the surface-geometry labels: SIGMA (the section), FIB (the fibre), G (an
// effective exceptional class), plus any extra effective classes a custom
// table introduces.
class SurfaceClass {
 public:
  static constexpr const char* kSigma = "SIGMA";
  static constexpr const char* kFib = "FIB";
  static constexpr const char* kG = "G";

  SurfaceClass() = default;

  AffineForm coeff(const std::string& label) const;
  void set_coeff(const std::string& label, AffineForm coefficient);
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<std::string, AffineForm>& coeffs() const { return coeffs_; }

  SurfaceClass& operator+=(const SurfaceClass& o);
  SurfaceClass scaled(const AffineForm& s) const;
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;

  std::string str() const;

 private:
  std::map<std::string, AffineForm> coeffs_;
};

// How one divisor generator restricts to a given surface.
//   - SurfaceClass: an exact curve class on the surface.
//   - EffectiveDrop: the restriction is effective; when the ambient
//     coefficient is provably nonpositive the term may be discarded in an
//     upper bound.
//   - FibreMultiple: the restriction is kappa * FIB for some integer
//     kappa >= min_kappa; in an upper bound a subtracted fibre multiple is
//     bounded by min_kappa fibres.
struct EffectiveDrop {
  friend bool operator==(const EffectiveDrop&, const EffectiveDrop&) {
    return true;
  }
};
struct FibreMultiple {
  long long min_kappa = 1;
  friend bool operator==(const FibreMultiple&, const FibreMultiple&) = default;
};
using Restriction = std::variant<SurfaceClass, EffectiveDrop, FibreMultiple>;

enum class Provenance { PaperDerived, ExternalOG };
const char* to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct RestrictionEntry {
  Restriction value;
  Provenance provenance = Provenance::PaperDerived;
  friend bool operator==(const RestrictionEntry&, const RestrictionEntry&) =
      default;
};

// Restriction data for one surface: the intersection numbers of the section
// class SIGMA with itself and with the fibre class, and one entry per
// divisor generator that may appear in a class being restricted.
struct GeometryTable {
  DivisorLabel surface = DivisorLabel::E1P;
  Rational sigma_sigma;
  Rational sigma_fib;
  std::map<DivisorLabel, RestrictionEntry> restrictions;

  friend bool operator==(const GeometryTable&, const GeometryTable&) = default;
};

struct GeometrySet {
  std::map<DivisorLabel, GeometryTable> tables;

  const GeometryTable& table_for(DivisorLabel surface) const;
  friend bool operator==(const GeometrySet&, const GeometrySet&) = default;
};

// The restriction data the verifier ships with. The surface geometry does
// not depend on p; only the classes being restricted do.
GeometrySet shipped_geometry();

enum class RestrictMode { Exact, UpperBound };

struct DiscardRecord {
  std::string term;
  AffineForm coefficient;
  std::string action;
  Provenance provenance = Provenance::PaperDerived;
};

struct RestrictionResult {
  SurfaceClass cls;
  std::vector<DiscardRecord> discards;
  // Provenance of every table entry consulted, keyed by generator name.
  std::map<std::string, Provenance> used;
};

// Restricts cls to the table's surface. Exact mode requires every involved
// entry to be a concrete curve class. UpperBound mode may discard effective
// terms and bound fibre multiples, but only when the ambient coefficient is
// provably nonpositive for n >= 1, i >= 0; anything else is an error, never
// a silent weakening.
RestrictionResult restrict_to_surface(const DivisorClass& cls,
                                      const GeometryTable& table,
                                      RestrictMode mode);

// Intersection with the section class. Only SIGMA and FIB carry declared
// pairings; any other label with a nonzero coefficient is an error.
AffineForm sigma_pair(const SurfaceClass& cls, const GeometryTable& table);

Json geometry_table_to_json(const GeometryTable& table);
GeometryTable geometry_table_from_json(const Json& j, const std::string& where);
Json geometry_set_to_json(const GeometrySet& set);
GeometrySet load_geometry_file(const std::string& path);

}  // namespace paramod
