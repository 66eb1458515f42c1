#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "unitgraph/complex.hpp"
#include "unitgraph/descriptor.hpp"
#include "unitgraph/indsets.hpp"
#include "unitgraph/radical.hpp"
#include "unitgraph/ring.hpp"

namespace unitgraph {

/// Well-coveredness of the unit graph read off the symbolic shape of R/J(R):
/// true iff the blocks are [(1,q)], [(1,q),(1,q)], [(2,q)] with q a power of
/// two, or k copies of (1,2). nullopt when the shape is unsupported.
std::optional<bool> classify_well_covered(const RingDescriptor& descriptor);

struct CmPrediction {
  bool cm = false;
  bool shellable = false;
  bool gorenstein = false;
};

/// CM = shellable = (field of characteristic 2) or Boolean; Gorenstein = Boolean.
CmPrediction classify_cm(const Ring& ring);

enum class Check { WellCovered, Cm, Shellable, Gorenstein };

std::string to_string(Check c);
std::optional<Check> check_from_string(const std::string& name);

/// A tri-state cell of the report: value, or why it was not computed.
struct Outcome {
  std::optional<bool> value;
  std::string note;  ///< "skipped: ...", "unknown", ...
};

struct OracleCaps {
  std::size_t max_wc_order = 4096;
  std::size_t max_complex_order = 16;
  MisLimits mis;
  ComplexLimits complex{200000, 4096, 1000000};
};

struct ClassificationReport {
  RingDescriptor descriptor = RingDescriptor::zn(2);
  std::uint64_t quotient_char = 0;
  std::optional<WedderburnShape> shape;

  Outcome predicted_well_covered;
  Outcome predicted_cm;
  Outcome predicted_shellable;
  Outcome predicted_gorenstein;

  Outcome observed_well_covered;
  Outcome observed_cm_gf2;
  Outcome observed_shellable;
  Outcome observed_gorenstein_gf2;

  /// Conjunction over checks that have both sides; nullopt when none do.
  std::optional<bool> agreement;
};

/// Fills predictions from the classifiers and observations from the
/// brute-force oracles, for the requested checks.
ClassificationReport cross_validate(const RingDescriptor& descriptor, const std::set<Check>& checks,
                                    const OracleCaps& caps = {});

}  // namespace unitgraph
