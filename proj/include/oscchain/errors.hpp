#pragma once

#include <stdexcept>
#include <string>

namespace oscchain {

// Base for all guard failures raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PositivityViolation : Error { using Error::Error; };   // dispersion symbol not strictly positive
struct TooSmall : Error { using Error::Error; };              // lattice too small for the kernel support
struct DegenerateSupport : Error { using Error::Error; };     // K = 0 where a polynomial is required
struct EmptyMeasure : Error { using Error::Error; };          // spectral measure with zero total mass
struct InsideSpectrum : Error { using Error::Error; };        // x^2 inside [e1, e2]
struct RootOnCircle : Error { using Error::Error; };          // symbol root on the unit circle (gap violated)
struct RepeatedRoot : Error { using Error::Error; };          // coincident inner roots, residue path invalid
struct GapViolation : Error { using Error::Error; };          // measure support meets +-sqrt(E)
struct DegenerateWindow : Error { using Error::Error; };      // not enough usable sites for a decay fit
struct NotPositiveDefinite : Error { using Error::Error; };   // coupling matrix fails the eigenvalue floor
struct Resonance : Error { using Error::Error; };             // forcing frequency hits a mode frequency
struct BoundaryUnsupported : Error { using Error::Error; };   // integrator/boundary combination not available
struct MismatchedRuns : Error { using Error::Error; };        // trajectories from different configs/realizations
struct TooFew : Error { using Error::Error; };                // not enough samples/replicas
struct DegenerateVariance : Error { using Error::Error; };    // nonpositive target variance
struct ValidationError : Error { using Error::Error; };       // config schema violation

}  // namespace oscchain
