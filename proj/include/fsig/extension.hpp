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

#ifndef FSIG_EXTENSION_HPP
#define FSIG_EXTENSION_HPP

#include "fsig/signature.hpp"

#include <string>
#include <vector>

namespace fsig {

/// Base change of a presentation: either extend a prime coefficient
/// field to F_(p^m), or adjoin p^level-th roots of a subset of the
/// transcendentals of a rational function field (the finite-level root
/// adjunction; u_i stands for t_i^(1/p^level)).
struct BaseChangeSpec {
    enum class Kind { extend_prime_field, gamma };
    Kind kind = Kind::extend_prime_field;
    long new_degree = 1;                   // extend_prime_field
    std::vector<std::string> gamma_names;  // gamma
    unsigned level = 1;                    // gamma, >= 1

    static BaseChangeSpec extend_prime_field(long degree);
    static BaseChangeSpec gamma(std::vector<std::string> names, unsigned level);
};

/// Deterministic default modulus: the first irreducible monic
/// polynomial of the given degree in the little-endian coefficient
/// enumeration.
std::vector<long> default_extension_modulus(long p, long degree);

/// Map an element through the coefficient embedding of a base change.
FieldElement push_element(const FieldElement& value, const FieldSpec::Ptr& target,
                          const BaseChangeSpec& spec);
Polynomial push_polynomial(const Polynomial& poly, const Ring::Ptr& target,
                           const BaseChangeSpec& spec);
FMatrix push_matrix(const FMatrix& m, const FieldSpec::Ptr& target, const BaseChangeSpec& spec);

/// The base-changed presentation (same variables, mapped coefficients).
LocalRingPresentation base_change(const LocalRingPresentation& presentation,
                                  const BaseChangeSpec& spec);

/// Certificate of the flat/etale invariance checks for a finite-field
/// extension: candidate values are preserved, the candidate value set
/// embeds, and the minima agree.
struct FlatInvarianceCertificate {
    bool values_preserved = false;   // every base candidate keeps its value
    bool set_contained = false;      // value set of the base embeds in the extension's
    bool minima_equal = false;       // separable extension: equality of minima
    BigRational min_base;
    BigRational min_extended;
    std::size_t candidates_base = 0;
    std::size_t candidates_extended = 0;
    std::vector<std::string> failures;
    bool ok() const { return values_preserved && set_contained && minima_equal; }
};

FlatInvarianceCertificate flat_invariance_check(const LocalRingPresentation& presentation,
                                                const std::vector<Polynomial>& base_ideal,
                                                unsigned e, const BaseChangeSpec& spec,
                                                const SignatureOptions& options = {});

/// One level of the finite-level root-adjunction experiment.
struct GammaLevelResult {
    unsigned level = 0;
    std::string field_name;
    std::vector<FMatrix> candidates;  // projective socle vectors over the level's field
    std::vector<BigRational> values;
    BigRational bound;  // sampled upper bound for the truncated signature
    std::size_t candidate_count = 0;
    bool stabilized = false;  // bound equals the previous level's
};

struct GammaReport {
    std::vector<GammaLevelResult> levels;
    bool pushforward_values_preserved = true;
    bool monotone = true;
    std::string sample_description;
    std::vector<std::string> failures;
    bool ok() const { return pushforward_values_preserved && monotone; }
};

/// Rank-1 sampled experiment across root-adjunction levels.  Each
/// level's candidate set is the fresh default sample (coordinates in
/// {0, 1, tau, tau+1} for each transcendental tau) united with the
/// pushforward of every earlier level's candidates, so sampled bounds
/// cannot increase.  Values of pushed candidates are asserted equal.
GammaReport gamma_report(const LocalRingPresentation& presentation,
                         const std::vector<Polynomial>& base_ideal, unsigned e,
                         const std::vector<std::string>& gamma_names,
                         std::vector<unsigned> levels, const SignatureOptions& options = {},
                         const std::vector<FieldElement>& sample_override = {});

}  // namespace fsig

#endif
