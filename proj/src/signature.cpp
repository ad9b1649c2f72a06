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

#include "fsig/signature.hpp"

#include "fsig/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace fsig {

namespace {

std::vector<Polynomial> concat(const std::vector<Polynomial>& a,
                               const std::vector<Polynomial>& b) {
    std::vector<Polynomial> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<Polynomial> bracket_power(const std::vector<Polynomial>& gens, unsigned e) {
    std::vector<Polynomial> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back(g.frobenius_power(e));
    return out;
}

long quotient_colength(const GroebnerBasis& gb) {
    return static_cast<long>(quotient_basis(gb).dimension());
}

}  // namespace

LocalRingPresentation LocalRingPresentation::make(Ring::Ptr ring,
                                                  std::vector<Polynomial> defining,
                                                  MonomialOrder order,
                                                  std::optional<int> dimension_override) {
    LocalRingPresentation p;
    p.ring = std::move(ring);
    for (auto& g : defining) {
        if (g.is_zero()) continue;
        if (!g.constant_coefficient().is_zero()) {
            throw ValidationError("defining generator '" + g.to_string() +
                                  "' has a nonzero constant term; the origin must lie on the "
                                  "variety");
        }
        p.defining.push_back(std::move(g));
    }
    p.order = order;
    if (dimension_override) {
        if (*dimension_override < 0) throw ValidationError("dimension override must be >= 0");
        p.dimension = *dimension_override;
        p.dimension_source = "user";
    } else {
        p.dimension = krull_dimension(groebner_basis(p.defining, order));
        p.dimension_source = "computed";
    }
    return p;
}

SignatureWorkspace prepare_workspace(const LocalRingPresentation& presentation,
                                     const std::vector<Polynomial>& base_ideal, unsigned e,
                                     const SignatureOptions& options) {
    SignatureWorkspace ws;
    ws.presentation = presentation;
    for (const auto& g : base_ideal) {
        if (!g.is_zero()) ws.base_ideal.push_back(g);
    }
    ws.e = e;

    ws.gb_base = groebner_basis(concat(presentation.defining, ws.base_ideal), presentation.order);
    ws.qb_base = quotient_basis(ws.gb_base);
    if (!is_primary_to_origin(ws.gb_base, ws.qb_base)) {
        throw NotPrimaryToOrigin("the base ideal is not primary to the origin");
    }
    ws.colength_base = static_cast<long>(ws.qb_base.dimension());
    ws.socle_data = socle(ArtinAlgebra::from_groebner(ws.gb_base));

    ws.bracket_gens = bracket_power(ws.base_ideal, e);
    ws.gb_bracket =
        groebner_basis(concat(presentation.defining, ws.bracket_gens), presentation.order);
    ws.qb_bracket = quotient_basis(ws.gb_bracket);
    if (!is_primary_to_origin(ws.gb_bracket, ws.qb_bracket)) {
        throw NotPrimaryToOrigin("the bracket power of the base ideal is not primary to the "
                                 "origin");
    }
    ws.colength_bracket = static_cast<long>(ws.qb_bracket.dimension());

    ws.dual_enabled = options.force_dual_path ||
                      ws.qb_bracket.dimension() <= options.oracle_max_dim;
    if (ws.dual_enabled) {
        ws.big_algebra = ArtinAlgebra::from_groebner(ws.gb_bracket);
        ws.coords = frobenius_coordinates(ws.socle_data, *ws.big_algebra, e,
                                          presentation.dimension);
    }
    return ws;
}

CandidateResult evaluate_candidate(const SignatureWorkspace& ws, const FMatrix& matrix) {
    CandidateResult out;
    out.matrix = matrix;

    std::vector<Polynomial> gens = ideal_from_matrix(ws.socle_data, matrix);

    // Groebner route: two colength drops
    GroebnerBasis gb_ideal = groebner_basis(
        concat(concat(ws.presentation.defining, ws.base_ideal), gens), ws.presentation.order);
    long colength_ideal = quotient_colength(gb_ideal);
    long den = ws.colength_base - colength_ideal;

    GroebnerBasis gb_ideal_bracket = groebner_basis(
        concat(concat(ws.presentation.defining, ws.bracket_gens), bracket_power(gens, ws.e)),
        ws.presentation.order);
    long num = ws.colength_bracket - quotient_colength(gb_ideal_bracket);

    if (den <= 0 || num < 0) {
        throw Error("internal: colength drops must be positive/nonnegative");
    }
    BigInt scale = big_pow(BigInt(ws.presentation.characteristic()),
                           ws.e * static_cast<unsigned>(ws.presentation.dimension));
    out.value.value = BigRational(BigInt(num), scale * BigInt(den));
    out.value.numerator_length = num;
    out.value.denominator_length = den;
    out.value.e = ws.e;

    if (ws.dual_enabled) {
        RankSignature rank_route = signature_from_rank_detailed(*ws.coords, *ws.big_algebra,
                                                                matrix, ws.colength_base);
        out.dual_checked = true;
        out.dual_agrees = rank_route.value == out.value.value &&
                          static_cast<long>(rank_route.rank_numerator) == num &&
                          static_cast<long>(rank_route.rank_m) == den;
    }
    return out;
}

MinimumResult minimize_over(const SignatureWorkspace& ws, const std::vector<FMatrix>& candidates,
                            const SignatureOptions& options, bool exhaustive) {
    if (candidates.empty()) {
        throw Error("internal: the candidate list is empty");
    }
    std::vector<CandidateResult> results(candidates.size());
    int workers = std::max(1, options.parallel);
    if (workers == 1 || candidates.size() <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            results[i] = evaluate_candidate(ws, candidates[i]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto work = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= candidates.size()) return;
                try {
                    results[i] = evaluate_candidate(ws, candidates[i]);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    MinimumResult mr;
    mr.e = ws.e;
    mr.candidate_count = candidates.size();
    mr.exhaustive = exhaustive;
    mr.dual_path_ran = ws.dual_enabled;
    std::set<BigRational> values;
    bool have_min = false;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const CandidateResult& r = results[i];
        if (!r.dual_agrees) mr.paths_agree = false;
        values.insert(r.value.value);
        if (!have_min || r.value.value < mr.minimum.value) {
            mr.minimum = r.value;
            have_min = true;
            mr.argmins.clear();
            mr.argmins.push_back(r.matrix);
        } else if (r.value.value == mr.minimum.value) {
            mr.argmins.push_back(r.matrix);
        }
    }
    if (exhaustive) mr.candidate_values.assign(values.begin(), values.end());
    mr.candidates = std::move(results);
    return mr;
}

SignatureValue truncated_signature(const LocalRingPresentation& presentation,
                                   const std::vector<Polynomial>& base_ideal,
                                   const std::vector<Polynomial>& ideal, unsigned e) {
    SignatureOptions options;
    options.oracle_max_dim = 0;  // plain colength route; no socle machinery needed
    SignatureWorkspace ws = prepare_workspace(presentation, base_ideal, e, options);

    std::vector<Polynomial> ideal_gens;
    for (const auto& g : ideal) {
        if (!g.is_zero()) ideal_gens.push_back(g);
    }

    GroebnerBasis gb_ideal = groebner_basis(concat(presentation.defining, ideal_gens),
                                            presentation.order);
    QuotientBasis qb_ideal = quotient_basis(gb_ideal);
    if (!is_primary_to_origin(gb_ideal, qb_ideal)) {
        throw NotPrimaryToOrigin("the ideal is not primary to the origin");
    }

    // proper containment: every base generator lies in I, and some
    // element of I does not lie in the base ideal
    Reducer reduce_mod_ideal(gb_ideal);
    for (const auto& g : ws.base_ideal) {
        if (!reduce_mod_ideal(g).is_zero()) {
            throw NotProperContainment("the base ideal is not contained in the ideal");
        }
    }
    Reducer reduce_mod_base(ws.gb_base);
    bool strict = false;
    for (const auto& g : ideal_gens) {
        if (!reduce_mod_base(g).is_zero()) {
            strict = true;
            break;
        }
    }
    if (!strict) throw NotProperContainment("the containment of the base ideal is not strict");

    long den = ws.colength_base - static_cast<long>(qb_ideal.dimension());

    GroebnerBasis gb_ideal_bracket = groebner_basis(
        concat(concat(presentation.defining, ws.bracket_gens), bracket_power(ideal_gens, e)),
        presentation.order);
    QuotientBasis qb_ideal_bracket = quotient_basis(gb_ideal_bracket);
    if (!is_primary_to_origin(gb_ideal_bracket, qb_ideal_bracket)) {
        throw NotPrimaryToOrigin("the bracket power of the ideal is not primary to the origin");
    }
    long num = ws.colength_bracket - static_cast<long>(qb_ideal_bracket.dimension());

    SignatureValue sv;
    BigInt scale = big_pow(BigInt(presentation.characteristic()),
                           e * static_cast<unsigned>(presentation.dimension));
    sv.value = BigRational(BigInt(num), scale * BigInt(den));
    sv.numerator_length = num;
    sv.denominator_length = den;
    sv.e = e;
    return sv;
}

MinimumResult truncated_signature_minimum(const LocalRingPresentation& presentation,
                                          const std::vector<Polynomial>& base_ideal, unsigned e,
                                          const SignatureOptions& options) {
    SignatureWorkspace ws = prepare_workspace(presentation, base_ideal, e, options);
    std::vector<FMatrix> candidates =
        enumerate_subspaces(ws.socle_data.dimension(), presentation.ring->field, options.budget,
                            options.rank1_only ? 1 : 0);
    bool exhaustive = !options.rank1_only;
    return minimize_over(ws, candidates, options, exhaustive);
}

MinimumResult truncated_rational_signature(const LocalRingPresentation& presentation,
                                           const std::vector<Polynomial>& base_ideal, unsigned e,
                                           const SignatureOptions& options) {
    SignatureWorkspace ws = prepare_workspace(presentation, base_ideal, e, options);
    std::vector<FMatrix> candidates =
        enumerate_subspaces(ws.socle_data.dimension(), presentation.ring->field, options.budget,
                            1);
    // exhaustive over the single-element route (all projective points)
    return minimize_over(ws, candidates, options, true);
}

std::vector<HilbertKunzEntry> hilbert_kunz_function(const LocalRingPresentation& presentation,
                                                    const std::vector<Polynomial>& ideal,
                                                    unsigned e_max) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal) {
        if (!g.is_zero()) gens.push_back(g);
    }
    std::vector<HilbertKunzEntry> out;
    for (unsigned e = 0; e <= e_max; ++e) {
        GroebnerBasis gb = groebner_basis(concat(presentation.defining, bracket_power(gens, e)),
                                          presentation.order);
        QuotientBasis qb = quotient_basis(gb);
        if (!is_primary_to_origin(gb, qb)) {
            throw NotPrimaryToOrigin("bracket power at level " + std::to_string(e) +
                                     " is not primary to the origin");
        }
        HilbertKunzEntry entry;
        entry.e = e;
        entry.length = static_cast<long>(qb.dimension());
        BigInt scale = big_pow(BigInt(presentation.characteristic()),
                               e * static_cast<unsigned>(presentation.dimension));
        entry.normalized = BigRational(BigInt(entry.length), scale);
        out.push_back(entry);
    }
    return out;
}

ConvergenceData convergence_report(const std::vector<std::pair<unsigned, BigRational>>& minima,
                                   long p) {
    if (minima.empty()) throw ValidationError("convergence report needs at least one value");
    ConvergenceData data;
    data.c_emp = 0;
    for (std::size_t i = 0; i < minima.size(); ++i) {
        for (std::size_t j = i + 1; j < minima.size(); ++j) {
            unsigned e = minima[i].first, ep = minima[j].first;
            if (e >= ep) throw ValidationError("levels must be strictly increasing");
            BigRational diff = rational_abs(minima[i].second - minima[j].second);
            BigRational scaled = diff * BigRational(big_pow(BigInt(p), e));
            data.scaled_differences.emplace_back(e, ep, scaled);
            if (scaled > data.c_emp) data.c_emp = scaled;
        }
    }
    unsigned e_max = minima.back().first;
    const BigRational& last = minima.back().second;
    BigRational radius = data.c_emp / BigRational(big_pow(BigInt(p), e_max));
    data.limit_interval = std::make_pair(last - radius, last + radius);
    data.e_max = e_max;
    return data;
}

ClosureCertificate minimizer_closure_check(const LocalRingPresentation& presentation,
                                           const std::vector<Polynomial>& base_ideal, unsigned e,
                                           const SignatureOptions& options) {
    MinimumResult mr = truncated_signature_minimum(presentation, base_ideal, e, options);

    std::map<std::string, BigRational> by_form;
    for (const auto& c : mr.candidates) {
        by_form.emplace(c.matrix.to_string(), c.value.value);
    }
    std::set<std::string> minimizers;
    for (const auto& m : mr.argmins) minimizers.insert(m.to_string());

    ClosureCertificate cert;
    cert.minimum = mr.minimum.value;
    cert.minimizer_count = mr.argmins.size();
    cert.closed = true;
    for (std::size_t i = 0; i < mr.argmins.size() && cert.closed; ++i) {
        for (std::size_t j = i + 1; j < mr.argmins.size() && cert.closed; ++j) {
            FMatrix sum = row_space_canonical(vstack(mr.argmins[i], mr.argmins[j]));
            if (!minimizers.count(sum.to_string())) cert.closed = false;
        }
    }
    FMatrix total = mr.argmins.front();
    for (std::size_t i = 1; i < mr.argmins.size(); ++i) {
        total = row_space_canonical(vstack(total, mr.argmins[i]));
    }
    cert.maximal_minimizer = total;
    auto it = by_form.find(total.to_string());
    cert.max_attains = it != by_form.end() && it->second == mr.minimum.value;
    return cert;
}

std::vector<std::string> standard_warnings(const LocalRingPresentation& presentation,
                                           const std::vector<Polynomial>& base_ideal) {
    std::vector<std::string> warnings;
    std::size_t gens = 0;
    for (const auto& g : base_ideal) {
        if (!g.is_zero()) ++gens;
    }
    if (static_cast<int>(gens) != presentation.dimension) {
        warnings.push_back(
            "base ideal has " + std::to_string(gens) + " generators but dim R = " +
            std::to_string(presentation.dimension) +
            "; it is not presented as a parameter ideal, so the bridge from truncations to the "
            "limit signature does not apply verbatim");
    }
    warnings.push_back(
        "formal equidimensionality of the completion is assumed, not machine-checked; the "
        "limit interval is a heuristic bracket");
    if (presentation.dimension_source == "user") {
        warnings.push_back("ring dimension was supplied by the user, not computed");
    }
    return warnings;
}

}  // namespace fsig
