#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "asf/affine_weyl.hpp"
#include "asf/rational.hpp"
#include "asf/springer_matrix.hpp"

namespace asf {

using QLaurent = std::map<int, Rational>;  // exponent -> coefficient
using QLoopVec = std::vector<QLaurent>;    // one Laurent polynomial per coordinate

// A full chain of lattices, kept as exact generator vectors. gens[i-1] spans
// the i-th module over the power-series ring; the standard chain has
// generators e_1, ..., e_i, t e_{i+1}, ..., t e_n at the identity. Group
// elements act with inverted translation powers, wbar t^mu : t^k e_j ->
// t^{k - mu_j} e_{wbar(j)}; this is the twist under which the component
// matrix's minimal t-powers are exactly the chain-stabilizing ones.
struct LatticeChain {
  int n = 0;
  std::vector<std::vector<QLoopVec>> gens;
};

// Chain of the component's marked point: the component matrix evaluated at
// the given values, applied to x times the standard chain. values must have
// one entry per free matrix variable.
LatticeChain component_chain(const AffineWeylElement& x, const SpectralParams& sp,
                             const std::vector<Rational>& values);

// Chain of the lattice point z itself.
LatticeChain standard_chain(const AffineWeylElement& z);

// Window large enough for the element's vertex images, plus guard.
int default_precision(const AffineWeylElement& x);

// Whether the chain lies inside the attracting neighborhood of the fixed
// point y: each module must meet y's strictly-lower complement trivially.
// Decided by exact rank computations on the coefficient window
// [-precision, precision], then rechecked one step wider; a flip between the
// two raises PrecisionError.
bool in_attracting_nbhd(const LatticeChain& chain, const AffineWeylElement& y, int precision);

// First trial index whose seeded entry values put the component's marked
// point inside y's attracting neighborhood, or -1 if none of `trials` did.
// A hit is conclusive membership; a miss is only evidence.
int membership_sample_witness(const AffineWeylElement& x, const AffineWeylElement& y,
                              const SpectralParams& sp, int trials, std::uint64_t seed,
                              int precision = 0);

inline bool membership_sample(const AffineWeylElement& x, const AffineWeylElement& y,
                              const SpectralParams& sp, int trials, std::uint64_t seed,
                              int precision = 0) {
  return membership_sample_witness(x, y, sp, trials, seed, precision) >= 0;
}

// The interval below w0 * x: the outer bound every fixed-point method must
// respect.
std::vector<AffineWeylElement> orbit_closure_fixed_points(const AffineWeylElement& x);

// Fixed points whose attracting neighborhood contains the component's marked
// point, scanned over the expected interval padded by one extra generator
// step on each side (so an out-of-interval report is possible and would be
// caught upstream).
std::vector<AffineWeylElement> oracle_fixed_point_set(const AffineWeylElement& x,
                                                      const SpectralParams& sp,
                                                      std::uint64_t seed, int precision = 0);

}  // namespace asf
