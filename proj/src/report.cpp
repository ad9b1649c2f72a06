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

#include "fsig/report.hpp"

#include "fsig/errors.hpp"
#include "fsig/extension.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace fsig {

namespace {

std::string timestamp_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

Json rational_json(const BigRational& q) {
    Json j = Json::object();
    j["num"] = rational_num(q).str();
    j["den"] = rational_den(q).str();
    return j;
}

Json matrix_json(const FMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

struct EffectiveOptions {
    SignatureOptions sig;
    MonomialOrder order;
    std::optional<int> dim_override;
    unsigned e_max = 2;
    unsigned e = 1;
};

EffectiveOptions merge_options(const InstanceFile& file, const RunOptions& run) {
    EffectiveOptions eff;
    eff.sig = run.signature;
    const TaskSpec& task = file.task;
    if (task.budget) eff.sig.budget = *task.budget;
    if (run.budget_flag) eff.sig.budget = *run.budget_flag;
    if (task.rank1) eff.sig.rank1_only = *task.rank1;
    if (run.rank1_flag) eff.sig.rank1_only = *run.rank1_flag;
    std::string order_name = "grevlex";
    if (task.order) order_name = *task.order;
    if (run.order_flag) order_name = *run.order_flag;
    eff.order = order_name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    if (task.dim) eff.dim_override = *task.dim;
    if (run.dim_flag) eff.dim_override = *run.dim_flag;
    if (task.e_max) eff.e_max = *task.e_max;
    if (run.e_max_flag) eff.e_max = *run.e_max_flag;
    if (task.e) eff.e = *task.e;
    return eff;
}

LocalRingPresentation build_presentation(const InstanceFile& file, const EffectiveOptions& eff) {
    return LocalRingPresentation::make(file.ring, file.defining, eff.order, eff.dim_override);
}

Json groebner_json(const GroebnerBasis& gb) {
    Json gens = Json::array();
    for (const auto& g : gb.generators) gens.push_back(g.to_string());
    return gens;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

void add_warning_rows(Json& j, const std::vector<std::string>& warnings) {
    Json arr = Json::array();
    for (const auto& w : warnings) arr.push_back(w);
    j["warnings"] = arr;
}

std::string join_warnings(const std::vector<std::string>& warnings) {
    std::string out;
    for (std::size_t i = 0; i < warnings.size(); ++i) {
        if (i) out += "; ";
        out += warnings[i];
    }
    return out;
}

// ----- srel / srat ---------------------------------------------------

RunOutput run_minimum_task(const InstanceFile& file, const RunOptions& run,
                           const EffectiveOptions& eff, bool rational_route) {
    LocalRingPresentation pres = build_presentation(file, eff);
    const auto& base = file.ideal_by_name(file.task.ideal);
    std::vector<std::string> warnings = standard_warnings(pres, base);
    if (eff.sig.rank1_only && !rational_route) {
        warnings.push_back("rank-1 restriction: reported minima are the single-element route");
    }

    RunOutput out;
    Json& j = out.json;
    j["schema"] = "fsig-report-v1";
    j["instance"] = run.instance_label;
    j["task"] = rational_route ? "srat" : "srel";
    if (run.include_timestamp) j["timestamp"] = timestamp_now();
    j["field"] = file.field->to_string();
    Json ring = Json::array();
    for (const auto& v : file.ring->variables) ring.push_back(v);
    j["ring"] = ring;
    j["order"] = eff.order.name();
    j["dimension"] = Json::object();
    j["dimension"]["value"] = pres.dimension;
    j["dimension"]["source"] = pres.dimension_source;
    j["ideal"] = file.task.ideal;

    std::ostringstream table;
    table << (rational_route ? "truncated rational signature minima" : "truncated signature minima")
          << " for " << run.instance_label << " (dim " << pres.dimension << ", "
          << pres.dimension_source << ")\n";
    table << "  e | value | candidates | paths\n";

    std::vector<std::pair<unsigned, BigRational>> minima;
    Json results = Json::array();
    Json debug_gb = Json::array();
    for (unsigned e = 1; e <= eff.e_max; ++e) {
        MinimumResult mr = rational_route
                               ? truncated_rational_signature(pres, base, e, eff.sig)
                               : truncated_signature_minimum(pres, base, e, eff.sig);
        minima.emplace_back(e, mr.minimum.value);
        Json r = Json::object();
        r["e"] = e;
        r["value"] = rational_json(mr.minimum.value);
        r["numerator_length"] = mr.minimum.numerator_length;
        r["denominator_length"] = mr.minimum.denominator_length;
        Json argmins = Json::array();
        for (const auto& m : mr.argmins) argmins.push_back(matrix_json(m));
        r["argmin"] = argmins;
        r["candidate_count"] = mr.candidate_count;
        r["exhaustive"] = mr.exhaustive;
        r["dual_path_mode"] = mr.dual_path_ran ? "both" : "groebner_only";
        r["paths_agree"] = mr.paths_agree;
        if (mr.exhaustive && mr.candidate_values.size() <= 4096) {
            Json vals = Json::array();
            for (const auto& v : mr.candidate_values) vals.push_back(rational_json(v));
            r["candidate_values"] = vals;
        }
        results.push_back(r);
        if (run.emit_gb) {
            SignatureWorkspace ws = prepare_workspace(pres, base, e, eff.sig);
            Json d = Json::object();
            d["e"] = e;
            d["base"] = groebner_json(ws.gb_base);
            d["bracket"] = groebner_json(ws.gb_bracket);
            debug_gb.push_back(d);
        }

        table << "  " << e << " | " << rational_to_string(mr.minimum.value) << " | "
              << mr.candidate_count << " | "
              << (mr.dual_path_ran ? (mr.paths_agree ? "agree" : "DISAGREE") : "groebner-only")
              << "\n";

        out.csv_rows.push_back({run.instance_label, j["task"].get<std::string>(),
                                std::to_string(e),
                                rational_num(mr.minimum.value).str(),
                                rational_den(mr.minimum.value).str(),
                                rational_to_decimal(mr.minimum.value),
                                std::to_string(mr.candidate_count),
                                mr.dual_path_ran ? (mr.paths_agree ? "true" : "false")
                                                 : "skipped",
                                "", "", join_warnings(warnings)});
        if (!mr.paths_agree) out.verify_failed = true;
    }
    j["results"] = results;

    ConvergenceData conv = convergence_report(minima, pres.characteristic());
    j["C_emp"] = rational_json(conv.c_emp);
    Json diffs = Json::array();
    for (const auto& [e, ep, v] : conv.scaled_differences) {
        Json d = Json::object();
        d["e"] = e;
        d["e_prime"] = ep;
        d["scaled_difference"] = rational_json(v);
        diffs.push_back(d);
    }
    j["scaled_differences"] = diffs;
    if (conv.limit_interval) {
        Json iv = Json::array();
        iv.push_back(rational_json(conv.limit_interval->first));
        iv.push_back(rational_json(conv.limit_interval->second));
        j["limit_interval"] = iv;
    }
    add_warning_rows(j, warnings);
    if (run.emit_gb) j["debug_groebner"] = debug_gb;

    for (auto& row : out.csv_rows) {
        row[8] = rational_num(conv.c_emp).str();
        row[9] = rational_den(conv.c_emp).str();
    }

    table << "  C_emp = " << rational_to_string(conv.c_emp);
    if (conv.limit_interval) {
        table << ", limit interval [" << rational_to_string(conv.limit_interval->first) << ", "
              << rational_to_string(conv.limit_interval->second) << "]";
    }
    table << "\n";
    out.table = table.str();
    return out;
}

// ----- hk ------------------------------------------------------------

RunOutput run_hk_task(const InstanceFile& file, const RunOptions& run,
                      const EffectiveOptions& eff) {
    LocalRingPresentation pres = build_presentation(file, eff);
    const auto& ideal = file.ideal_by_name(file.task.ideal);
    std::vector<HilbertKunzEntry> rows = hilbert_kunz_function(pres, ideal, eff.e_max);

    RunOutput out;
    Json& j = out.json;
    j["schema"] = "fsig-report-v1";
    j["instance"] = run.instance_label;
    j["task"] = "hk";
    if (run.include_timestamp) j["timestamp"] = timestamp_now();
    j["field"] = file.field->to_string();
    j["order"] = eff.order.name();
    j["dimension"] = Json::object();
    j["dimension"]["value"] = pres.dimension;
    j["dimension"]["source"] = pres.dimension_source;
    j["ideal"] = file.task.ideal;

    std::ostringstream table;
    table << "Hilbert-Kunz function of " << file.task.ideal << " in " << run.instance_label
          << "\n  e | length | normalized\n";
    Json results = Json::array();
    for (const auto& r : rows) {
        Json e = Json::object();
        e["e"] = r.e;
        e["length"] = r.length;
        e["normalized"] = rational_json(r.normalized);
        results.push_back(e);
        table << "  " << r.e << " | " << r.length << " | " << rational_to_string(r.normalized)
              << "\n";
        out.csv_rows.push_back({run.instance_label, "hk", std::to_string(r.e),
                                rational_num(r.normalized).str(),
                                rational_den(r.normalized).str(),
                                rational_to_decimal(r.normalized), "", "", "", "", ""});
    }
    j["results"] = results;
    add_warning_rows(j, {});
    out.table = table.str();
    return out;
}

// ----- gamma ----------------------------------------------------------

RunOutput run_gamma_task(const InstanceFile& file, const RunOptions& run,
                         const EffectiveOptions& eff) {
    LocalRingPresentation pres = build_presentation(file, eff);
    const auto& base = file.ideal_by_name(file.task.ideal);
    std::vector<unsigned> levels = file.task.levels;
    if (levels.empty()) levels = {0, 1};

    std::vector<FieldElement> sample;
    for (const auto& expr : file.task.sample) {
        Polynomial p = parse_polynomial(expr, file.ring);
        if (!p.is_constant()) {
            throw ValidationError("sample entries must be coefficient expressions");
        }
        sample.push_back(p.constant_coefficient());
    }

    GammaReport rep = gamma_report(pres, base, eff.e, file.task.gamma, levels, eff.sig, sample);

    RunOutput out;
    Json& j = out.json;
    j["schema"] = "fsig-report-v1";
    j["instance"] = run.instance_label;
    j["task"] = "gamma";
    if (run.include_timestamp) j["timestamp"] = timestamp_now();
    j["field"] = file.field->to_string();
    j["order"] = eff.order.name();
    j["dimension"] = Json::object();
    j["dimension"]["value"] = pres.dimension;
    j["dimension"]["source"] = pres.dimension_source;
    j["ideal"] = file.task.ideal;
    j["e"] = eff.e;
    Json gamma_names = Json::array();
    for (const auto& g : file.task.gamma) gamma_names.push_back(g);
    j["Gamma"] = gamma_names;
    j["sample"] = rep.sample_description;
    j["values_are_upper_bounds"] = true;

    std::ostringstream table;
    table << "finite-level root adjunction for " << run.instance_label << ", e = " << eff.e
          << "\n  level | field | bound | candidates | stabilized\n";
    Json jlevels = Json::array();
    for (const auto& lv : rep.levels) {
        Json l = Json::object();
        l["level"] = lv.level;
        l["field"] = lv.field_name;
        l["bound"] = rational_json(lv.bound);
        l["candidate_count"] = lv.candidate_count;
        l["stabilized"] = lv.stabilized;
        Json cands = Json::array();
        for (const auto& c : lv.candidates) cands.push_back(matrix_json(c));
        l["candidates"] = cands;
        Json vals = Json::array();
        for (const auto& v : lv.values) vals.push_back(rational_json(v));
        l["values"] = vals;
        jlevels.push_back(l);
        table << "  " << lv.level << " | " << lv.field_name << " | "
              << rational_to_string(lv.bound) << " | " << lv.candidate_count << " | "
              << (lv.stabilized ? "yes" : "-") << "\n";
        out.csv_rows.push_back({run.instance_label, "gamma", std::to_string(lv.level),
                                rational_num(lv.bound).str(), rational_den(lv.bound).str(),
                                rational_to_decimal(lv.bound),
                                std::to_string(lv.candidate_count), "", "", "",
                                "sampled upper bound"});
    }
    j["levels"] = jlevels;
    j["pushforward_values_preserved"] = rep.pushforward_values_preserved;
    j["monotone"] = rep.monotone;
    Json fails = Json::array();
    for (const auto& f : rep.failures) fails.push_back(f);
    j["failures"] = fails;
    std::vector<std::string> warnings = standard_warnings(pres, base);
    warnings.push_back("function-field sampling: values are upper bounds for the truncated "
                       "signature, not exact minima");
    add_warning_rows(j, warnings);
    if (!rep.ok()) out.verify_failed = true;
    table << (rep.ok() ? "  pushforward preserved, bounds monotone\n"
                       : "  VIOLATION: see failures\n");
    out.table = table.str();
    return out;
}

// ----- verify ----------------------------------------------------------

RunOutput run_verify_task(const InstanceFile& file, const RunOptions& run,
                          const EffectiveOptions& eff) {
    LocalRingPresentation pres = build_presentation(file, eff);
    const auto& base = file.ideal_by_name(file.task.ideal);
    unsigned e = eff.e;

    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back(Check{name, pass, detail});
    };

    // order independence of colengths
    {
        LocalRingPresentation lexp = LocalRingPresentation::make(
            file.ring, file.defining, MonomialOrder::lex(),
            pres.dimension_source == "user" ? std::optional<int>(pres.dimension) : std::nullopt);
        auto len = [&](const LocalRingPresentation& p, unsigned lvl) {
            std::vector<Polynomial> gens = p.defining;
            for (const auto& g : base) gens.push_back(g.frobenius_power(lvl));
            return quotient_basis(groebner_basis(gens, p.order)).dimension();
        };
        bool ok = len(pres, 0) == len(lexp, 0) && len(pres, e) == len(lexp, e);
        add("colength-order-independence", ok);
    }

    // dual-route equality on every candidate
    SignatureOptions forced = eff.sig;
    forced.force_dual_path = true;
    MinimumResult mr = truncated_signature_minimum(pres, base, e, forced);
    add("dual-route-equality", mr.paths_agree,
        std::to_string(mr.candidate_count) + " candidates");

    // minimizer closure
    ClosureCertificate cert = minimizer_closure_check(pres, base, e, eff.sig);
    add("minimizer-closure", cert.ok(),
        std::to_string(cert.minimizer_count) + " minimizers");

    // socle annihilation
    {
        SignatureWorkspace ws = prepare_workspace(pres, base, e, eff.sig);
        Reducer reduce(ws.gb_base);
        bool ok = true;
        for (const auto& lift : ws.socle_data.lifts) {
            for (std::size_t v = 0; v < file.ring->nvars() && ok; ++v) {
                ok = reduce(lift * Polynomial::variable(file.ring, v)).is_zero();
            }
        }
        add("socle-annihilation", ok);

        // bracket powers do not depend on the generating set
        std::vector<Polynomial> redundant = ws.base_ideal;
        if (!redundant.empty()) {
            redundant.push_back(redundant.front() * Polynomial::variable(file.ring, 0));
            if (redundant.size() >= 2) {
                redundant.push_back(ws.base_ideal.front() + ws.base_ideal.back());
            }
            std::vector<Polynomial> gens = pres.defining;
            for (const auto& g : redundant) gens.push_back(g.frobenius_power(e));
            std::size_t with = quotient_basis(groebner_basis(gens, pres.order)).dimension();
            add("bracket-generator-independence",
                with == static_cast<std::size_t>(ws.colength_bracket));
        }

        // multiplication matrices commute and satisfy the relations
        if (ws.qb_base.dimension() <= 64) {
            ArtinAlgebra small = ArtinAlgebra::from_groebner(ws.gb_base);
            bool commute = true;
            std::size_t nv = file.ring->nvars();
            for (std::size_t a = 0; a < nv && commute; ++a) {
                for (std::size_t b = a + 1; b < nv && commute; ++b) {
                    commute = small.variable_action(a) * small.variable_action(b) ==
                              small.variable_action(b) * small.variable_action(a);
                }
            }
            add("multiplication-matrices-commute", commute);

            bool relations = true;
            std::size_t m = small.dimension();
            for (const auto& g : ws.gb_base.generators) {
                FMatrix acc(file.field, m, m);
                for (const auto& t : g.terms()) {
                    FMatrix monom = FMatrix::identity(file.field, m);
                    for (std::size_t v = 0; v < nv; ++v) {
                        for (std::uint32_t k = 0; k < t.mono.exps[v]; ++k) {
                            monom = monom * small.variable_action(v);
                        }
                    }
                    for (std::size_t r = 0; r < m; ++r) {
                        for (std::size_t c = 0; c < m; ++c) {
                            acc.set(r, c, acc.at(r, c) + t.coeff * monom.at(r, c));
                        }
                    }
                }
                if (!acc.is_zero()) relations = false;
            }
            add("defining-relations-vanish", relations);
        }
    }

    // regular ambient: the unit value
    if (pres.defining.empty()) {
        bool ok = true;
        for (const auto& c : mr.candidates) {
            if (c.value.value != 1) ok = false;
        }
        add("regular-ring-unit-value", ok);
    }

    RunOutput out;
    Json& j = out.json;
    j["schema"] = "fsig-report-v1";
    j["instance"] = run.instance_label;
    j["task"] = "verify";
    if (run.include_timestamp) j["timestamp"] = timestamp_now();
    j["field"] = file.field->to_string();
    j["ideal"] = file.task.ideal;
    j["e"] = e;
    std::ostringstream table;
    table << "verification suite on " << run.instance_label << " (e = " << e << ")\n";
    Json jchecks = Json::array();
    bool all = true;
    for (const auto& c : checks) {
        Json jc = Json::object();
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        jchecks.push_back(jc);
        all = all && c.pass;
        table << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
        out.csv_rows.push_back({run.instance_label, "verify", std::to_string(e), "", "", "", "",
                                c.pass ? "true" : "false", "", "", c.name});
    }
    j["checks"] = jchecks;
    j["all_pass"] = all;
    out.verify_failed = !all;
    table << (all ? "  all checks passed\n" : "  FAILURES PRESENT\n");
    out.table = table.str();
    return out;
}

// ----- oracle-diff ------------------------------------------------------

RunOutput run_oracle_diff_task(const InstanceFile& file, const RunOptions& run,
                               const EffectiveOptions& eff) {
    LocalRingPresentation pres = build_presentation(file, eff);
    const auto& base = file.ideal_by_name(file.task.ideal);
    SignatureOptions forced = eff.sig;
    forced.force_dual_path = true;
    unsigned e = eff.e;
    SignatureWorkspace ws = prepare_workspace(pres, base, e, forced);
    std::vector<FMatrix> candidates = enumerate_subspaces(
        ws.socle_data.dimension(), pres.ring->field, forced.budget, forced.rank1_only ? 1 : 0);
    MinimumResult mr = minimize_over(ws, candidates, forced, !forced.rank1_only);

    RunOutput out;
    Json& j = out.json;
    j["schema"] = "fsig-report-v1";
    j["instance"] = run.instance_label;
    j["task"] = "oracle-diff";
    if (run.include_timestamp) j["timestamp"] = timestamp_now();
    j["field"] = file.field->to_string();
    j["ideal"] = file.task.ideal;
    j["e"] = e;
    std::ostringstream table;
    table << "route comparison on " << run.instance_label << " (e = " << e << ", "
          << mr.candidate_count << " candidates)\n";
    Json rows = Json::array();
    bool all = true;
    for (const auto& c : mr.candidates) {
        Json r = Json::object();
        r["matrix"] = matrix_json(c.matrix);
        r["value"] = rational_json(c.value.value);
        r["agree"] = c.dual_agrees;
        rows.push_back(r);
        all = all && c.dual_agrees;
    }
    j["candidates"] = rows;
    j["all_agree"] = all;
    j["minimum"] = rational_json(mr.minimum.value);
    out.verify_failed = !all;
    table << "  minimum " << rational_to_string(mr.minimum.value) << ", "
          << (all ? "all candidates agree on both routes" : "ROUTE DISAGREEMENT") << "\n";
    out.table = table.str();
    out.csv_rows.push_back({run.instance_label, "oracle-diff", std::to_string(e),
                            rational_num(mr.minimum.value).str(),
                            rational_den(mr.minimum.value).str(),
                            rational_to_decimal(mr.minimum.value),
                            std::to_string(mr.candidate_count), all ? "true" : "false", "", "",
                            ""});
    return out;
}

}  // namespace

std::string csv_header() {
    return "instance,task,e,num,den,value_decimal,candidate_count,paths_agree,C_emp_num,"
           "C_emp_den,warnings";
}

std::string csv_line(const std::vector<std::string>& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ",";
        out += csv_quote(row[i]);
    }
    return out;
}

std::string json_without_timestamp(const Json& j) {
    Json copy = j;
    copy.erase("timestamp");
    return copy.dump(2) + "\n";
}

RunOutput run_instance(const InstanceFile& file, const RunOptions& options) {
    EffectiveOptions eff = merge_options(file, options);
    const std::string& kind = file.task.kind;
    if (kind == "srel") return run_minimum_task(file, options, eff, false);
    if (kind == "srat") return run_minimum_task(file, options, eff, true);
    if (kind == "hk") return run_hk_task(file, options, eff);
    if (kind == "gamma") return run_gamma_task(file, options, eff);
    if (kind == "verify") return run_verify_task(file, options, eff);
    if (kind == "oracle-diff") return run_oracle_diff_task(file, options, eff);
    throw ValidationError("unknown task kind '" + kind + "'");
}

}  // namespace fsig
