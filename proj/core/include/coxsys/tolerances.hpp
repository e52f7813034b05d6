#pragma once

namespace coxsys {

// Numerical tolerances used across the library.  All geometry is done in
// double precision; these thresholds leave headroom over the drift of
// roughly a dozen composed reflections.

// Quadratic-form preservation and unit-normalization checks.
inline constexpr double kFormTol = 1e-9;

// Causal classification and parallel/tangent hyperplane detection.
inline constexpr double kLightTol = 1e-7;

// Spectral-radius margin separating loxodromic from parabolic/elliptic.
inline constexpr double kSpecTol = 1e-7;

// Gram reconstruction accuracy required of embeddings.
inline constexpr double kGramTol = 1e-9;

// Matrix deduplication: quantization grid for canonical keys, and the
// exact-comparison threshold used before two elements are merged.
inline constexpr double kDedupGrid = 1e-6;
inline constexpr double kDedupExact = 1e-8;

}  // namespace coxsys
