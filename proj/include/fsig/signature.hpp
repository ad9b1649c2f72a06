/*
   Copyright 2026 The fsig authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FSIG_SIGNATURE_HPP
#define FSIG_SIGNATURE_HPP

#include "fsig/artin.hpp"
#include "fsig/groebner.hpp"
#include "fsig/rational.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace fsig {

/// A local ring at the origin: ambient variables, defining ideal (with
/// zero constant terms, so the origin lies on the variety) and the
/// dimension, either computed from the leading-term ideal of the
/// defining generators or overridden by the caller (the provenance is
/// recorded because the two can differ for non-homogeneous ideals).
struct LocalRingPresentation {
    Ring::Ptr ring;
    std::vector<Polynomial> defining;
    MonomialOrder order;
    int dimension = 0;
    std::string dimension_source;  // "computed" or "user"

    static LocalRingPresentation make(Ring::Ptr ring, std::vector<Polynomial> defining,
                                      MonomialOrder order = MonomialOrder::grevlex(),
                                      std::optional<int> dimension_override = {});
    long characteristic() const { return ring->field->characteristic(); }
};

/// One truncated signature evaluation: the exact value together with
/// the two length differences it came from.
struct SignatureValue {
    BigRational value;
    long numerator_length = 0;    // colength drop at the bracket level
    long denominator_length = 0;  // colength drop at level zero
    unsigned e = 0;
};

struct SignatureOptions {
    std::uint64_t budget = 1000000;       // subspace enumeration cap
    int parallel = 1;                     // worker pool for candidates
    std::size_t oracle_max_dim = 600;     // dual-path bound on the bracket quotient dim
    bool rank1_only = false;              // single-element ideals only
    bool force_dual_path = false;         // run the rank route regardless of size
};

struct CandidateResult {
    FMatrix matrix;
    SignatureValue value;
    bool dual_checked = false;
    bool dual_agrees = true;
};

/// Outcome of a minimum search at one Frobenius level.
struct MinimumResult {
    unsigned e = 0;
    SignatureValue minimum;
    std::vector<FMatrix> argmins;               // every minimizing subspace, in order
    std::vector<BigRational> candidate_values;  // sorted distinct values (exhaustive mode)
    std::size_t candidate_count = 0;
    bool exhaustive = true;
    bool dual_path_ran = false;
    bool paths_agree = true;
    std::vector<CandidateResult> candidates;
};

/// Shared precomputation for one (presentation, base ideal, level):
/// both quotient bases, the socle, and optionally the structure-constant
/// oracle for the bracket quotient.
struct SignatureWorkspace {
    LocalRingPresentation presentation;
    std::vector<Polynomial> base_ideal;
    unsigned e = 0;
    GroebnerBasis gb_base;
    QuotientBasis qb_base;
    long colength_base = 0;
    SocleData socle_data;
    std::vector<Polynomial> bracket_gens;
    GroebnerBasis gb_bracket;
    QuotientBasis qb_bracket;
    long colength_bracket = 0;
    bool dual_enabled = false;
    std::optional<ArtinAlgebra> big_algebra;
    std::optional<FrobeniusCoordinates> coords;
};

SignatureWorkspace prepare_workspace(const LocalRingPresentation& presentation,
                                     const std::vector<Polynomial>& base_ideal, unsigned e,
                                     const SignatureOptions& options = {});

/// Evaluate one socle-subspace candidate through the Groebner route and
/// (when enabled) the structure-constant route.
CandidateResult evaluate_candidate(const SignatureWorkspace& workspace, const FMatrix& matrix);

/// Deterministic minimum over an explicit candidate list; candidates
/// are evaluated in parallel but reduced by index.
MinimumResult minimize_over(const SignatureWorkspace& workspace,
                            const std::vector<FMatrix>& candidates,
                            const SignatureOptions& options, bool exhaustive);

/// Truncated relative signature of a specific ideal I containing the
/// base ideal (bracket powers taken on the supplied generator lists).
SignatureValue truncated_signature(const LocalRingPresentation& presentation,
                                   const std::vector<Polynomial>& base_ideal,
                                   const std::vector<Polynomial>& ideal, unsigned e);

/// Minimum of the truncated signature over all socle ideals.
MinimumResult truncated_signature_minimum(const LocalRingPresentation& presentation,
                                          const std::vector<Polynomial>& base_ideal, unsigned e,
                                          const SignatureOptions& options = {});

/// Minimum over single-element extensions (projective candidates).
MinimumResult truncated_rational_signature(const LocalRingPresentation& presentation,
                                           const std::vector<Polynomial>& base_ideal, unsigned e,
                                           const SignatureOptions& options = {});

struct HilbertKunzEntry {
    unsigned e = 0;
    long length = 0;
    BigRational normalized;
};

/// Exact Frobenius-power colengths and their normalizations for
/// e = 0..e_max.
std::vector<HilbertKunzEntry> hilbert_kunz_function(const LocalRingPresentation& presentation,
                                                    const std::vector<Polynomial>& ideal,
                                                    unsigned e_max);

struct ConvergenceData {
    // (e, e', p^e * |s^e - s^e'|) for e < e'
    std::vector<std::tuple<unsigned, unsigned, BigRational>> scaled_differences;
    BigRational c_emp;
    std::optional<std::pair<BigRational, BigRational>> limit_interval;
    unsigned e_max = 0;
};

/// Empirical control constant and the extrapolation interval
/// [s^(e_max) - C*p^(-e_max), s^(e_max) + C*p^(-e_max)].
ConvergenceData convergence_report(const std::vector<std::pair<unsigned, BigRational>>& minima,
                                   long p);

struct ClosureCertificate {
    bool closed = false;        // minimizers closed under pairwise span sums
    bool max_attains = false;   // the span of all minimizers attains the minimum
    std::size_t minimizer_count = 0;
    FMatrix maximal_minimizer;
    BigRational minimum;
    bool ok() const { return closed && max_attains; }
};

/// Verifies that the set of minimizing subspaces is closed under sums
/// and that their joint span attains the minimum.
ClosureCertificate minimizer_closure_check(const LocalRingPresentation& presentation,
                                           const std::vector<Polynomial>& base_ideal, unsigned e,
                                           const SignatureOptions& options = {});

/// Warnings attached to reports: parameter-ideal shape and the
/// unchecked formal equidimensionality hypothesis.
std::vector<std::string> standard_warnings(const LocalRingPresentation& presentation,
                                           const std::vector<Polynomial>& base_ideal);

}  // namespace fsig

#endif
