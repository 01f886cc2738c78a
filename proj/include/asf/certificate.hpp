#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asf/affine_weyl.hpp"
#include "asf/springer_matrix.hpp"

namespace asf {

enum class Verdict { NonZero, IdenticallyZero, Inconclusive };
enum class Method { Certificate, Symbolic, Randomized, Oracle };

// Order under which a single-walk level monomial leads its level
// determinant. Level squares whose walk spans several column blocks mix
// jump-at-end and jump-at-start chains and have no such leading-term
// property; they are covered by the coefficient equality checks instead.
inline constexpr MonoOrder kCertificateOrder = MonoOrder::StartLex;

std::string verdict_name(Verdict v);
std::string method_name(Method m);
Method parse_method(const std::string& text);

// One selected entry of the transversal: row (level, q) uses column
// (col_level, p) through the given chain p -> ... -> q.
struct CertEntry {
  int level = 0;
  int row_q = 0;
  int col_level = 0;
  int col_p = 0;
  std::vector<int> chain;
};

struct Certificate {
  BlockStructure bs;
  std::vector<CertEntry> entries;
};

// Deterministic transversal choice: each level keeps its own diagonal slots
// first, then walks into older column blocks, taking the lowest untaken
// column slots; the last batch of a walk uses front-loaded jumps, earlier
// batches jump at the end. Requires a feasible structure whose column counts
// strictly increase (box labels give that).
Certificate greedy_certificate(const BlockStructure& bs);

Monomial certificate_monomial(int n, const Certificate& cert);
Monomial certificate_level_monomial(int n, const Certificate& cert, int level);

// Columns the certificate hands to each level, in global column order.
std::vector<std::vector<std::pair<int, int>>> certificate_level_columns(const Certificate& cert);

// Square submatrix of one level: its rows against the columns it consumed.
PolyMatrix certificate_level_square(const Certificate& cert, int level,
                                    const std::vector<PolyMatrix>& tcoeff);

// Coefficient of `mono` in det(square), by direct signed transversal search
// with a componentwise exponent budget.
Rational transversal_coefficient(const PolyMatrix& square, const Monomial& mono);

// Parity of regrouping the global column order into per-level batches.
int certificate_interleave_sign(const Certificate& cert);

// Product of the per-level coefficients times the regrouping sign: the
// coefficient of the certificate monomial in the full selected determinant,
// computed without ever expanding that determinant.
Rational certificate_coefficient(const Certificate& cert, const std::vector<PolyMatrix>& tcoeff);

// Seeded values for the free entries, numerators drawn from [-1000, 1000].
std::vector<Rational> random_assignment(int vars, std::uint64_t seed);

struct MembershipOptions {
  Method method = Method::Certificate;
  // Use the label element's own matrix instead of the longest box element's.
  // Only the symbolic and randomized paths accept this.
  bool use_component_matrix = false;
  std::uint64_t seed = 0;
  int trials = 5;
  int symbolic_dim_cap = 12;
  int precision = 0;  // oracle path: coefficient window half-width, 0 = auto
};

struct BaseVerdict {
  int base = 0;
  bool feasible = false;
  Verdict verdict = Verdict::Inconclusive;
  int dim = 0;                  // selected square size (0 when skipped)
  Monomial monomial;            // certificate path only
  Rational coefficient = 0;     // certificate path only
  Int degree_bound = 0;         // randomized path: total degree bound used
};

struct MembershipReport {
  AffineWeylElement x, y;
  Method method = Method::Certificate;
  Verdict overall = Verdict::Inconclusive;
  bool comparable = false;               // every base was feasible
  std::vector<BaseVerdict> bases;
  std::vector<Rational> witness;         // randomized: common nonvanishing point
  int witness_trial = -1;                // which attempt produced it
};

// Decides whether the chain labeled y meets the attracting set of the
// component labeled x: the vertex-by-vertex determinant tests for the first
// three methods, the sampled lattice model for Method::Oracle.
MembershipReport membership(const AffineWeylElement& x, const AffineWeylElement& y,
                            const SpectralParams& sp, const MembershipOptions& opt);

struct FixedPointOptions {
  Method method = Method::Certificate;
  bool use_component_matrix = false;
  std::uint64_t seed = 0;
  int trials = 5;
  int threads = 1;
  int precision = 0;          // oracle path only
  bool inject_fault = false;  // test hook: drops the first positive verdict
};

struct FixedPointResult {
  AffineWeylElement x;
  std::vector<AffineWeylElement> members;   // computed fixed points, canonical order
  std::vector<AffineWeylElement> expected;  // interval below w0 * x
  std::vector<MembershipReport> reports;    // one per minimal-rep candidate
  bool any_inconclusive = false;
  bool matches_expected = false;
};

// All torus fixed points in the component labeled by the box element x:
// minimal-rep candidates below x are tested, positives are expanded by the
// finite group on the left. Throws if any reported point falls outside the
// interval below w0 * x.
FixedPointResult fixed_point_set(const AffineWeylElement& x, const SpectralParams& sp,
                                 const FixedPointOptions& opt);

}  // namespace asf
