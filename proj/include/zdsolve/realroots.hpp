#pragma once

#include "zdsolve/unipoly.hpp"

namespace zdsolve {

/// Signed Euclidean remainder chain: f0 = f, f1 = f', fi = -rem(fi-2, fi-1).
/// Elements are rescaled to primitive integer polynomials (positive factor,
/// so every sign is preserved); the last nonzero element is gcd(f, f') up
/// to a positive scalar.
struct SturmChain {
  std::vector<UniPolyQ> polys;
};

SturmChain sturm_chain(const UniPolyQ& f);

/// Number of adjacent strict sign flips, zeros skipped.
int variations(const std::vector<int>& signs);

enum class RootRange { All, Positive, Negative };

/// Number of DISTINCT real roots of f in the range. Positive means the
/// open half-line (0, inf): a root at 0 belongs to neither Positive nor
/// Negative.
long count_real_roots(const UniPolyQ& f, RootRange range);

/// Distinct real roots in the half-open interval (a, b].
long count_real_roots(const UniPolyQ& f, const Rat& a, const Rat& b);

/// One half-open interval (a, b] of width <= max_width per distinct real
/// root, with dyadic endpoints, by Cauchy-bound bisection on Sturm counts.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPolyQ& f,
                                                    const Rat& max_width);

/// Primitive integer form of f scaled by a positive rational.
UniPolyQ primitive_positive(const UniPolyQ& f);

}  // namespace zdsolve
