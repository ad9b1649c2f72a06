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

#include "fsig/extension.hpp"

#include "fsig/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fsig {

BaseChangeSpec BaseChangeSpec::extend_prime_field(long degree) {
    if (degree < 1) throw IncompatibleSpec("extension degree must be positive");
    BaseChangeSpec s;
    s.kind = Kind::extend_prime_field;
    s.new_degree = degree;
    return s;
}

BaseChangeSpec BaseChangeSpec::gamma(std::vector<std::string> names, unsigned level) {
    if (level < 1) throw IncompatibleSpec("root-adjunction level must be >= 1");
    BaseChangeSpec s;
    s.kind = Kind::gamma;
    s.gamma_names = std::move(names);
    s.level = level;
    return s;
}

std::vector<long> default_extension_modulus(long p, long degree) {
    // first irreducible in the little-endian coefficient enumeration
    std::uint64_t total = 1;
    for (long i = 0; i < degree; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<long> mod(static_cast<std::size_t>(degree) + 1, 0);
        std::uint64_t rest = idx;
        for (long i = 0; i < degree; ++i) {
            mod[static_cast<std::size_t>(i)] = static_cast<long>(rest % p);
            rest /= static_cast<std::uint64_t>(p);
        }
        mod.back() = 1;
        try {
            FieldSpec::make_extension(p, mod);
            return mod;
        } catch (const IncompatibleSpec&) {
            continue;
        }
    }
    throw IncompatibleSpec("no irreducible modulus found");
}

namespace {

std::vector<std::size_t> gamma_indices(const FieldSpec::Ptr& field,
                                       const std::vector<std::string>& names) {
    std::vector<std::size_t> idx;
    for (const auto& n : names) {
        const auto& ts = field->transcendentals();
        auto it = std::find(ts.begin(), ts.end(), n);
        if (it == ts.end()) {
            throw IncompatibleSpec("'" + n + "' is not a transcendental of " + field->to_string());
        }
        idx.push_back(static_cast<std::size_t>(it - ts.begin()));
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

FieldElement push_prime_to_extension(const FieldElement& v, const FieldSpec::Ptr& target) {
    return target->from_integer(v.prime_value());
}

FieldElement push_gamma_positional(const FieldElement& v, const FieldSpec::Ptr& target,
                                   const std::vector<std::size_t>& idx, unsigned rel_level) {
    std::uint32_t q = 1;
    for (unsigned i = 0; i < rel_level; ++i) {
        q *= static_cast<std::uint32_t>(target->characteristic());
    }
    FpPoly num = v.fraction().num;
    FpPoly den = v.fraction().den;
    for (auto i : idx) {
        num = num.scale_exponents(i, q);
        den = den.scale_exponents(i, q);
    }
    return make_function_element(target, std::move(num), std::move(den));
}

/// Transcribe an element into a renamed copy of its function field
/// (identity on exponents; used for sample sets).
FieldElement transcribe(const FieldElement& v, const FieldSpec::Ptr& target) {
    return make_function_element(target, v.fraction().num, v.fraction().den);
}

std::string gamma_rename(const std::string& name) {
    if (!name.empty() && name[0] == 't') return "u" + name.substr(1);
    return "u" + name;
}

}  // namespace

FieldElement push_element(const FieldElement& v, const FieldSpec::Ptr& target,
                          const BaseChangeSpec& spec) {
    switch (spec.kind) {
        case BaseChangeSpec::Kind::extend_prime_field:
            if (target->same(*v.spec())) return v;
            return push_prime_to_extension(v, target);
        case BaseChangeSpec::Kind::gamma: {
            if (spec.gamma_names.empty()) return v;
            return push_gamma_positional(v, target, gamma_indices(v.spec(), spec.gamma_names),
                                         spec.level);
        }
    }
    throw Error("unreachable");
}

Polynomial push_polynomial(const Polynomial& poly, const Ring::Ptr& target,
                           const BaseChangeSpec& spec) {
    std::vector<Term> terms;
    terms.reserve(poly.term_count());
    for (const auto& t : poly.terms()) {
        terms.push_back(Term{t.mono, push_element(t.coeff, target->field, spec)});
    }
    return Polynomial(target, std::move(terms));
}

FMatrix push_matrix(const FMatrix& m, const FieldSpec::Ptr& target, const BaseChangeSpec& spec) {
    FMatrix out(target, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out.set(i, j, push_element(m.at(i, j), target, spec));
        }
    }
    return out;
}

LocalRingPresentation base_change(const LocalRingPresentation& presentation,
                                  const BaseChangeSpec& spec) {
    const FieldSpec::Ptr& field = presentation.ring->field;
    FieldSpec::Ptr target;
    switch (spec.kind) {
        case BaseChangeSpec::Kind::extend_prime_field: {
            if (field->kind() != FieldKind::prime) {
                throw IncompatibleSpec(
                    "prime-field extension requires a prime coefficient field");
            }
            if (spec.new_degree == 1) return presentation;  // identity
            target = FieldSpec::make_extension(
                field->characteristic(),
                default_extension_modulus(field->characteristic(), spec.new_degree));
            break;
        }
        case BaseChangeSpec::Kind::gamma: {
            if (field->kind() != FieldKind::function) {
                throw IncompatibleSpec("root adjunction requires a function field");
            }
            std::vector<std::size_t> idx = gamma_indices(field, spec.gamma_names);
            if (idx.empty()) return presentation;  // identity
            std::vector<std::string> names = field->transcendentals();
            std::set<std::string> used;
            std::set<std::size_t> in_gamma(idx.begin(), idx.end());
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (!in_gamma.count(i)) used.insert(names[i]);
            }
            for (auto i : idx) {
                std::string fresh = gamma_rename(names[i]);
                while (used.count(fresh)) fresh += "_";
                used.insert(fresh);
                names[i] = fresh;
            }
            target = FieldSpec::make_function(field->characteristic(), names);
            break;
        }
    }
    Ring::Ptr target_ring = Ring::make(target, presentation.ring->variables);
    std::vector<Polynomial> defining;
    for (const auto& g : presentation.defining) {
        defining.push_back(push_polynomial(g, target_ring, spec));
    }
    std::optional<int> override_dim;
    if (presentation.dimension_source == "user") override_dim = presentation.dimension;
    return LocalRingPresentation::make(target_ring, std::move(defining), presentation.order,
                                       override_dim);
}

FlatInvarianceCertificate flat_invariance_check(const LocalRingPresentation& presentation,
                                                const std::vector<Polynomial>& base_ideal,
                                                unsigned e, const BaseChangeSpec& spec,
                                                const SignatureOptions& options) {
    if (spec.kind != BaseChangeSpec::Kind::extend_prime_field) {
        throw IncompatibleSpec(
            "flat invariance enumeration requires finite residue fields on both sides");
    }
    FlatInvarianceCertificate cert;

    LocalRingPresentation extended = base_change(presentation, spec);
    std::vector<Polynomial> pushed_base;
    for (const auto& g : base_ideal) {
        pushed_base.push_back(push_polynomial(g, extended.ring, spec));
    }

    MinimumResult base_run = truncated_signature_minimum(presentation, base_ideal, e, options);
    MinimumResult ext_run = truncated_signature_minimum(extended, pushed_base, e, options);

    cert.min_base = base_run.minimum.value;
    cert.min_extended = ext_run.minimum.value;
    cert.candidates_base = base_run.candidate_count;
    cert.candidates_extended = ext_run.candidate_count;

    // (a) every base candidate keeps its value after the extension
    SignatureWorkspace ext_ws = prepare_workspace(extended, pushed_base, e, options);
    cert.values_preserved = true;
    for (const auto& cand : base_run.candidates) {
        FMatrix pushed = push_matrix(cand.matrix, extended.ring->field, spec);
        CandidateResult again = evaluate_candidate(ext_ws, pushed);
        if (again.value.value != cand.value.value) {
            cert.values_preserved = false;
            cert.failures.push_back("candidate " + cand.matrix.to_string() +
                                    " changed value under extension: " +
                                    rational_to_string(cand.value.value) + " -> " +
                                    rational_to_string(again.value.value));
        }
    }

    // (b) candidate value set containment
    std::set<BigRational> ext_values(ext_run.candidate_values.begin(),
                                     ext_run.candidate_values.end());
    cert.set_contained = true;
    for (const auto& v : base_run.candidate_values) {
        if (!ext_values.count(v)) {
            cert.set_contained = false;
            cert.failures.push_back("value " + rational_to_string(v) +
                                    " is missing from the extension's candidate set");
        }
    }

    // (c) separable extension: minima agree exactly
    cert.minima_equal = cert.min_base == cert.min_extended;
    if (!cert.minima_equal) {
        cert.failures.push_back("minima differ: " + rational_to_string(cert.min_base) + " vs " +
                                rational_to_string(cert.min_extended));
    }
    return cert;
}

namespace {

// Projective normalization of a 1 x n coordinate row; first nonzero
// entry becomes 1.  Returns false for the zero vector.
bool normalize_projective(std::vector<FieldElement>& row) {
    std::size_t lead = row.size();
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (!row[i].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead == row.size()) return false;
    if (!row[lead].is_one()) {
        FieldElement inv = row[lead].inverse();
        for (auto& x : row) x = x * inv;
    }
    return true;
}

FMatrix row_to_matrix(const FieldSpec::Ptr& field, const std::vector<FieldElement>& row) {
    FMatrix m(field, 1, row.size());
    for (std::size_t j = 0; j < row.size(); ++j) m.set(0, j, row[j]);
    return m;
}

std::vector<FieldElement> default_sample(const FieldSpec::Ptr& field) {
    std::vector<FieldElement> sample;
    sample.push_back(field->zero());
    sample.push_back(field->one());
    if (field->kind() == FieldKind::function) {
        for (std::size_t i = 0; i < field->transcendentals().size(); ++i) {
            sample.push_back(field->transcendental(i));
            sample.push_back(field->transcendental(i) + field->one());
        }
    }
    return sample;
}

}  // namespace

GammaReport gamma_report(const LocalRingPresentation& presentation,
                         const std::vector<Polynomial>& base_ideal, unsigned e,
                         const std::vector<std::string>& gamma_names,
                         std::vector<unsigned> levels, const SignatureOptions& options,
                         const std::vector<FieldElement>& sample_override) {
    if (presentation.ring->field->kind() != FieldKind::function) {
        throw IncompatibleSpec("the root-adjunction experiment requires a function field");
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.empty()) throw ValidationError("at least one level is required");

    std::vector<std::size_t> idx = gamma_indices(presentation.ring->field, gamma_names);

    GammaReport report;
    report.sample_description =
        sample_override.empty()
            ? "coordinates in {0, 1, tau, tau+1} per transcendental tau, accumulated by "
              "pushforward across levels"
            : "user-supplied coordinate sample, accumulated by pushforward across levels";

    // per processed level: the field and the evaluated candidates
    struct LevelState {
        unsigned level;
        FieldSpec::Ptr field;
        std::vector<FMatrix> candidates;
        std::vector<BigRational> values;
    };
    std::vector<LevelState> done;

    for (unsigned level : levels) {
        LocalRingPresentation changed =
            (level == 0 || idx.empty())
                ? presentation
                : base_change(presentation, BaseChangeSpec::gamma(gamma_names, level));
        std::vector<Polynomial> pushed_base;
        BaseChangeSpec to_here = BaseChangeSpec::gamma(
            gamma_names, std::max(level, 1u));  // only used when level > 0
        for (const auto& g : base_ideal) {
            pushed_base.push_back(level == 0 || idx.empty()
                                      ? g
                                      : push_polynomial(g, changed.ring, to_here));
        }
        SignatureWorkspace ws = prepare_workspace(changed, pushed_base, e, options);
        std::size_t n = ws.socle_data.dimension();
        const FieldSpec::Ptr& field = changed.ring->field;

        // candidate union: pushforwards of earlier levels, then the
        // fresh sample, deduplicated on canonical projective form
        std::vector<FMatrix> candidates;
        std::set<std::string> seen;
        struct PushedRef {
            std::size_t from_level_index;
            std::size_t candidate_index;
            std::string canonical;
        };
        std::vector<PushedRef> pushed_refs;
        for (std::size_t li = 0; li < done.size(); ++li) {
            unsigned rel = level - done[li].level;
            for (std::size_t ci = 0; ci < done[li].candidates.size(); ++ci) {
                const FMatrix& src = done[li].candidates[ci];
                std::vector<FieldElement> row;
                for (std::size_t j = 0; j < src.cols(); ++j) {
                    const FieldElement& v = src.at(0, j);
                    row.push_back(rel == 0 || idx.empty()
                                      ? transcribe(v, field)
                                      : push_gamma_positional(v, field, idx, rel));
                }
                if (!normalize_projective(row)) continue;
                FMatrix cand = row_to_matrix(field, row);
                std::string key = cand.to_string();
                pushed_refs.push_back(PushedRef{li, ci, key});
                if (seen.insert(key).second) candidates.push_back(std::move(cand));
            }
        }
        std::vector<FieldElement> sample;
        if (sample_override.empty()) {
            sample = default_sample(field);
        } else {
            for (const auto& v : sample_override) sample.push_back(transcribe(v, field));
        }
        std::vector<std::size_t> odo(n, 0);
        while (true) {
            std::vector<FieldElement> row;
            for (std::size_t j = 0; j < n; ++j) row.push_back(sample[odo[j]]);
            if (normalize_projective(row)) {
                FMatrix cand = row_to_matrix(field, row);
                std::string key = cand.to_string();
                if (seen.insert(key).second) candidates.push_back(std::move(cand));
            }
            std::size_t j = n;
            bool done_odo = true;
            while (j > 0) {
                --j;
                if (++odo[j] < sample.size()) {
                    done_odo = false;
                    break;
                }
                odo[j] = 0;
            }
            if (done_odo) break;
        }

        MinimumResult mr = minimize_over(ws, candidates, options, /*exhaustive=*/false);
        if (!mr.paths_agree) {
            report.failures.push_back("level " + std::to_string(level) +
                                      ": the two computation routes disagreed");
        }

        // value lookup for the pushforward assertions
        std::map<std::string, BigRational> value_of;
        for (const auto& c : mr.candidates) {
            value_of.emplace(c.matrix.to_string(), c.value.value);
        }
        for (const auto& ref : pushed_refs) {
            const BigRational& before = done[ref.from_level_index].values[ref.candidate_index];
            const BigRational& after = value_of.at(ref.canonical);
            if (before != after) {
                report.pushforward_values_preserved = false;
                report.failures.push_back(
                    "level " + std::to_string(done[ref.from_level_index].level) + " candidate " +
                    ref.canonical + " changed value at level " + std::to_string(level) + ": " +
                    rational_to_string(before) + " -> " + rational_to_string(after));
            }
        }

        GammaLevelResult lr;
        lr.level = level;
        lr.field_name = field->to_string();
        lr.candidates = candidates;
        for (const auto& c : mr.candidates) lr.values.push_back(c.value.value);
        lr.bound = mr.minimum.value;
        lr.candidate_count = candidates.size();
        if (!report.levels.empty()) {
            lr.stabilized = lr.bound == report.levels.back().bound;
            if (lr.bound > report.levels.back().bound) {
                report.monotone = false;
                report.failures.push_back("sampled bound increased at level " +
                                          std::to_string(level));
            }
        }
        report.levels.push_back(lr);

        LevelState st;
        st.level = level;
        st.field = field;
        st.candidates = candidates;
        for (const auto& c : mr.candidates) st.values.push_back(c.value.value);
        done.push_back(std::move(st));
    }
    return report;
}

}  // namespace fsig
