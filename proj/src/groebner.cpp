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

#include "fsig/groebner.hpp"

#include "fsig/errors.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace fsig {

namespace {

// Working representation inside the engine: terms sorted strictly
// descending in the active order.
using WPoly = std::vector<Term>;

WPoly to_working(const Polynomial& p, const MonomialOrder& order) {
    WPoly w = p.terms();
    std::sort(w.begin(), w.end(),
              [&](const Term& a, const Term& b) { return order.less(b.mono, a.mono); });
    return w;
}

Polynomial from_working(const Ring::Ptr& ring, WPoly w) {
    return Polynomial(ring, std::move(w));
}

// f - c * x^shift * g, merged in one pass.  Both inputs sorted
// descending; the output is too.
WPoly subtract_scaled(const WPoly& f, const WPoly& g, const FieldElement& c,
                      const Monomial& shift, const MonomialOrder& order) {
    WPoly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(f[i++]);
            continue;
        }
        Monomial gm = g[j].mono * shift;
        if (gm.total_degree() > kDegreeBudget) {
            throw DegreeBudgetExceeded("monomial degree exceeds the budget");
        }
        if (i == f.size()) {
            FieldElement v = -(c * g[j].coeff);
            if (!v.is_zero()) out.push_back(Term{gm, v});
            ++j;
            continue;
        }
        auto cmp = order.compare(f[i].mono, gm);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(f[i++]);
        } else if (cmp == std::strong_ordering::less) {
            FieldElement v = -(c * g[j].coeff);
            if (!v.is_zero()) out.push_back(Term{gm, v});
            ++j;
        } else {
            FieldElement v = f[i].coeff - c * g[j].coeff;
            if (!v.is_zero()) out.push_back(Term{f[i].mono, v});
            ++i;
            ++j;
        }
    }
    return out;
}

// Full reduction of f against a monic basis.
WPoly reduce_against(const std::vector<WPoly>& basis, const std::vector<Monomial>& lead,
                     const MonomialOrder& order, WPoly f) {
    WPoly tail;  // fully reduced terms, descending
    std::size_t head = 0;
    while (head < f.size()) {
        const Term& lt = f[head];
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (lead[k].divides(lt.mono)) {
                WPoly live(f.begin() + static_cast<std::ptrdiff_t>(head), f.end());
                f = subtract_scaled(live, basis[k], lt.coeff, lt.mono.quotient(lead[k]), order);
                head = 0;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            tail.push_back(lt);
            ++head;
        }
    }
    return tail;
}

struct Engine {
    Ring::Ptr ring;
    MonomialOrder order;
    std::vector<WPoly> basis;      // monic
    std::vector<Monomial> lead;    // aligned

    WPoly reduce(WPoly f) const { return reduce_against(basis, lead, order, std::move(f)); }

    void make_monic(WPoly& f) const {
        if (f.empty()) return;
        if (f.front().coeff.is_one()) return;
        FieldElement inv = f.front().coeff.inverse();
        for (auto& t : f) t.coeff = t.coeff * inv;
    }
};

struct PairKey {
    Monomial lcm;
    std::size_t i, j;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const PairKey& a, const PairKey& b) const {
        auto c = order->compare(a.lcm, b.lcm);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

bool GroebnerBasis::contains_unit() const {
    return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero();
}

GroebnerBasis groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& order) {
    // filter zeros, validate ambients
    std::vector<Polynomial> input;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!input.empty()) check_same_ring(input.front(), g);
        input.push_back(std::move(g));
    }
    GroebnerBasis out;
    out.order = order;
    if (input.empty()) {
        if (!gens.empty()) out.ring = gens.front().ring();
        return out;  // zero ideal: empty basis
    }
    Ring::Ptr ring = input.front().ring();
    out.ring = ring;

    Engine eng{ring, order, {}, {}};

    auto add_poly = [&](WPoly w) -> bool {
        if (w.empty()) return false;
        eng.make_monic(w);
        eng.lead.push_back(w.front().mono);
        eng.basis.push_back(std::move(w));
        return true;
    };

    // seed with reduced inputs
    std::set<PairKey, PairLess> queue(PairLess{&order});
    std::set<std::pair<std::size_t, std::size_t>> pending;
    auto push_pairs_for = [&](std::size_t newest) {
        for (std::size_t k = 0; k < newest; ++k) {
            Monomial l = Monomial::lcm(eng.lead[k], eng.lead[newest]);
            queue.insert(PairKey{l, k, newest});
            pending.insert({k, newest});
        }
    };
    for (auto& g : input) {
        WPoly w = eng.reduce(to_working(g, order));
        if (add_poly(std::move(w))) push_pairs_for(eng.basis.size() - 1);
    }

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pk.i, pk.j});

        const Monomial& li = eng.lead[pk.i];
        const Monomial& lj = eng.lead[pk.j];
        // product criterion: coprime leading monomials reduce to zero
        if (Monomial::lcm(li, lj).total_degree() == li.total_degree() + lj.total_degree()) {
            continue;
        }
        // chain criterion: a third leading monomial dividing the lcm
        // whose pairs with both members were already handled
        bool skip = false;
        for (std::size_t k = 0; k < eng.basis.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!eng.lead[k].divides(pk.lcm)) continue;
            auto key1 = std::minmax(pk.i, k);
            auto key2 = std::minmax(pk.j, k);
            if (!pending.count({key1.first, key1.second}) &&
                !pending.count({key2.first, key2.second})) {
                skip = true;
            }
        }
        if (skip) continue;

        // S-polynomial of two monic polynomials
        const WPoly& fi = eng.basis[pk.i];
        const WPoly& fj = eng.basis[pk.j];
        Monomial qi = pk.lcm.quotient(li);
        Monomial qj = pk.lcm.quotient(lj);
        WPoly shifted;
        shifted.reserve(fi.size());
        for (const auto& t : fi) shifted.push_back(Term{t.mono * qi, t.coeff});
        WPoly s = subtract_scaled(shifted, fj, ring->field->one(), qj, order);
        s = eng.reduce(std::move(s));
        if (add_poly(std::move(s))) push_pairs_for(eng.basis.size() - 1);
    }

    // minimalize: drop generators whose leading monomial is divisible by
    // another surviving leading monomial
    std::vector<bool> alive(eng.basis.size(), true);
    for (std::size_t i = 0; i < eng.basis.size(); ++i) {
        for (std::size_t j = 0; j < eng.basis.size(); ++j) {
            if (i == j || !alive[i] || !alive[j]) continue;
            if (eng.lead[j].divides(eng.lead[i]) && !(eng.lead[j] == eng.lead[i])) {
                alive[i] = false;
            } else if (eng.lead[j] == eng.lead[i] && j < i) {
                alive[i] = false;
            }
        }
    }
    Engine minimal{ring, order, {}, {}};
    // deterministic output: sort survivors by leading monomial
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < eng.basis.size(); ++i) {
        if (alive[i]) keep.push_back(i);
    }
    std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) {
        return order.less(eng.lead[a], eng.lead[b]);
    });
    for (auto i : keep) {
        minimal.basis.push_back(eng.basis[i]);
        minimal.lead.push_back(eng.lead[i]);
    }
    // tail-reduce each against the others until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.basis.size(); ++i) {
            Engine others{ring, order, {}, {}};
            for (std::size_t j = 0; j < minimal.basis.size(); ++j) {
                if (j == i) continue;
                others.basis.push_back(minimal.basis[j]);
                others.lead.push_back(minimal.lead[j]);
            }
            WPoly reduced = others.reduce(minimal.basis[i]);
            minimal.make_monic(reduced);
            if (reduced != minimal.basis[i]) {
                minimal.basis[i] = std::move(reduced);
                changed = true;
            }
        }
    }

    for (std::size_t i = 0; i < minimal.basis.size(); ++i) {
        out.generators.push_back(from_working(ring, minimal.basis[i]));
        out.leading.push_back(minimal.lead[i]);
    }
    return out;
}

Reducer::Reducer(const GroebnerBasis& gb) : ring_(gb.ring), order_(gb.order) {
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
        basis_.push_back(to_working(gb.generators[i], gb.order));
        leading_.push_back(gb.leading[i]);
    }
}

Polynomial Reducer::operator()(const Polynomial& f) const {
    if (!ring_) return f;
    check_same_ring(f, Polynomial(ring_));
    if (basis_.empty() || f.is_zero()) return f;
    return from_working(ring_, reduce_against(basis_, leading_, order_, to_working(f, order_)));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!gb.ring) return f;  // basis of the zero ideal with unknown ring
    return Reducer(gb)(f);
}

std::size_t QuotientBasis::position(const Monomial& m) const {
    auto it = index.find(m.exps);
    if (it == index.end()) throw Error("monomial is not a standard monomial");
    return it->second;
}

QuotientBasis quotient_basis(const GroebnerBasis& gb) {
    QuotientBasis qb;
    if (!gb.ring) {
        throw NotZeroDimensional("the zero ideal is not zero-dimensional");
    }
    std::size_t n = gb.ring->nvars();
    if (gb.contains_unit()) return qb;  // quotient is the zero ring
    // every variable needs a pure power among the leading monomials
    for (std::size_t v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& lm : gb.leading) {
            bool pure = lm.exps[v] > 0;
            for (std::size_t w = 0; w < n && pure; ++w) {
                if (w != v && lm.exps[w] > 0) pure = false;
            }
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) {
            throw NotZeroDimensional("variable " + gb.ring->variables[v] +
                                     " has no pure power in the leading-term ideal");
        }
    }
    auto standard = [&](const Monomial& m) {
        for (const auto& lm : gb.leading) {
            if (lm.divides(m)) return false;
        }
        return true;
    };
    // standard monomial sets are closed under division, so a BFS from 1
    // visits all of them
    std::set<Monomial> seen;
    std::deque<Monomial> frontier;
    Monomial one = Monomial::one(n);
    if (standard(one)) {
        seen.insert(one);
        frontier.push_back(one);
    }
    while (!frontier.empty()) {
        Monomial m = frontier.front();
        frontier.pop_front();
        for (std::size_t v = 0; v < n; ++v) {
            Monomial next = m;
            next.exps[v] += 1;
            if (!seen.count(next) && standard(next)) {
                seen.insert(next);
                frontier.push_back(next);
            }
        }
    }
    qb.monomials.assign(seen.begin(), seen.end());
    std::sort(qb.monomials.begin(), qb.monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
    for (std::size_t i = 0; i < qb.monomials.size(); ++i) {
        qb.index.emplace(qb.monomials[i].exps, i);
    }
    return qb;
}

std::vector<FieldElement> coordinates(const Polynomial& nf_poly, const QuotientBasis& qb) {
    std::vector<FieldElement> v(qb.dimension(), nf_poly.ring()->field->zero());
    for (const auto& t : nf_poly.terms()) {
        v[qb.position(t.mono)] = t.coeff;
    }
    return v;
}

FMatrix multiplication_matrix(const GroebnerBasis& gb, const QuotientBasis& qb, std::size_t var) {
    std::size_t m = qb.dimension();
    Reducer reduce(gb);
    FMatrix mat(gb.ring->field, m, m);
    for (std::size_t j = 0; j < m; ++j) {
        Monomial prod = qb.monomials[j];
        prod.exps[var] += 1;
        Polynomial nf = reduce(Polynomial::from_monomial(gb.ring, prod, gb.ring->field->one()));
        for (const auto& t : nf.terms()) {
            mat.set(qb.position(t.mono), j, t.coeff);
        }
    }
    return mat;
}

bool is_primary_to_origin(const GroebnerBasis& gb) {
    return is_primary_to_origin(gb, quotient_basis(gb));
}

bool is_primary_to_origin(const GroebnerBasis& gb, const QuotientBasis& qb) {
    std::size_t m = qb.dimension();
    if (m == 0) return true;  // the zero ring vanishes nowhere
    long p = gb.ring->field->characteristic();
    Reducer reduce(gb);
    for (std::size_t v = 0; v < gb.ring->nvars(); ++v) {
        // x_v is nilpotent iff x_v^(p^k) reduces to zero once p^k >= m;
        // in characteristic p the p-th power of a normal form is the
        // termwise Frobenius, so each step is one reduction
        Polynomial g = reduce(Polynomial::variable(gb.ring, v));
        std::uint64_t exponent = 1;
        while (!g.is_zero() && exponent < m) {
            g = reduce(g.frobenius_power(1));
            exponent *= static_cast<std::uint64_t>(p);
        }
        if (!g.is_zero()) return false;
    }
    return true;
}

int krull_dimension(const GroebnerBasis& gb) {
    if (!gb.ring) throw Error("krull_dimension needs a ring context");
    std::size_t n = gb.ring->nvars();
    if (gb.contains_unit()) return 0;  // zero ring
    if (n > 20) throw Error("too many variables for the subset search");
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& lm : gb.leading) {
            bool inside = true;
            for (std::size_t v = 0; v < n && inside; ++v) {
                if (lm.exps[v] > 0 && !(mask & (1u << v))) inside = false;
            }
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

}  // namespace fsig
