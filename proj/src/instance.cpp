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

#include "fsig/instance.hpp"

#include "fsig/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fsig {

namespace {

struct Token {
    enum class Kind { identifier, integer, symbol, end };
    Kind kind = Kind::end;
    std::string text;
    long value = 0;
    int line = 0, column = 0;
};

class Lexer {
  public:
    Lexer(const std::string& text, int line) : text_(text), line_(line) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }
    bool at_symbol(char c) const {
        return current_.kind == Token::Kind::symbol && current_.text[0] == c;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(line_, current_.column, what);
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        current_ = Token{};
        current_.line = line_;
        current_.column = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::end;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            current_.kind = Token::Kind::integer;
            current_.text = text_.substr(start, pos_ - start);
            if (current_.text.size() > 9) {
                throw ParseError(line_, current_.column, "integer literal too large");
            }
            current_.value = std::stol(current_.text);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            current_.kind = Token::Kind::identifier;
            current_.text = text_.substr(start, pos_ - start);
            return;
        }
        current_.kind = Token::Kind::symbol;
        current_.text = std::string(1, c);
        ++pos_;
    }

    std::string text_;
    std::size_t pos_ = 0;
    int line_;
    Token current_;
};

/// Recursive-descent polynomial expressions: + - * / ^ with the usual
/// precedence, parentheses, integer literals, ring variables and field
/// symbols.  Division requires a constant nonzero divisor.
class PolyParser {
  public:
    PolyParser(Lexer& lex, const Ring::Ptr& ring) : lex_(lex), ring_(ring) {}

    Polynomial parse() { return expression(); }

  private:
    Polynomial expression() {
        Polynomial acc = term();
        while (lex_.at_symbol('+') || lex_.at_symbol('-')) {
            bool minus = lex_.at_symbol('-');
            lex_.take();
            Polynomial rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.at_symbol('*') || lex_.at_symbol('/')) {
            bool divide = lex_.at_symbol('/');
            lex_.take();
            Polynomial rhs = factor();
            if (divide) {
                if (!rhs.is_constant() || rhs.is_zero()) {
                    lex_.fail("division is only defined by nonzero field constants");
                }
                acc = acc.scaled(rhs.constant_coefficient().inverse());
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    Polynomial factor() {
        bool negate = false;
        while (lex_.at_symbol('-')) {
            negate = !negate;
            lex_.take();
        }
        Polynomial base = primary();
        if (lex_.at_symbol('^')) {
            lex_.take();
            Token t = lex_.take();
            if (t.kind != Token::Kind::integer) lex_.fail("exponent must be an integer literal");
            Polynomial acc = Polynomial::constant(ring_, ring_->field->one());
            Polynomial sq = base;
            long n = t.value;
            while (n > 0) {
                if (n & 1) acc = acc * sq;
                n >>= 1;
                if (n > 0) sq = sq * sq;
            }
            base = acc;
        }
        return negate ? -base : base;
    }

    Polynomial primary() {
        if (lex_.at_symbol('(')) {
            lex_.take();
            Polynomial inner = expression();
            if (!lex_.at_symbol(')')) lex_.fail("expected ')'");
            lex_.take();
            return inner;
        }
        Token t = lex_.take();
        if (t.kind == Token::Kind::integer) {
            return Polynomial::constant(ring_, ring_->field->from_integer(t.value));
        }
        if (t.kind == Token::Kind::identifier) {
            std::size_t vi = ring_->variable_index(t.text);
            if (vi != static_cast<std::size_t>(-1)) return Polynomial::variable(ring_, vi);
            const FieldSpec::Ptr& f = ring_->field;
            if (f->kind() == FieldKind::extension && t.text == f->generator_name()) {
                return Polynomial::constant(ring_, f->generator());
            }
            if (f->kind() == FieldKind::function) {
                const auto& ts = f->transcendentals();
                auto it = std::find(ts.begin(), ts.end(), t.text);
                if (it != ts.end()) {
                    return Polynomial::constant(
                        ring_, f->transcendental(static_cast<std::size_t>(it - ts.begin())));
                }
            }
            throw UnknownVariable(t.text);
        }
        lex_.fail("expected a polynomial factor");
    }

    Lexer& lex_;
    Ring::Ptr ring_;
};

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<Polynomial> parse_poly_list(const std::string& text, int line,
                                        const Ring::Ptr& ring) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            std::string piece = strip(text.substr(start, i - start));
            if (piece.empty()) throw ParseError(line, static_cast<int>(start) + 1, "empty entry");
            Lexer lex(piece, line);
            PolyParser pp(lex, ring);
            Polynomial p = pp.parse();
            if (lex.peek().kind != Token::Kind::end) lex.fail("trailing input after polynomial");
            out.push_back(std::move(p));
            start = i + 1;
        }
    }
    return out;
}

// "GF(q) [mod <poly>] [(t,s,...)]"
FieldSpec::Ptr parse_field_spec(const std::string& text, int line) {
    Lexer lex(text, line);
    Token gf = lex.take();
    if (gf.kind != Token::Kind::identifier || gf.text != "GF") {
        throw ParseError(line, gf.column, "field must start with GF(...)");
    }
    if (!lex.at_symbol('(')) lex.fail("expected '(' after GF");
    lex.take();
    Token q = lex.take();
    if (q.kind != Token::Kind::integer || q.value < 2) lex.fail("field order must be >= 2");
    if (!lex.at_symbol(')')) lex.fail("expected ')' after field order");
    lex.take();

    long order = q.value, p = 0, degree = 0;
    for (long cand = 2; cand <= order; ++cand) {
        if (!is_prime_number(cand)) continue;
        long m = 0, v = order;
        while (v % cand == 0) {
            v /= cand;
            ++m;
        }
        if (v == 1 && m >= 1) {
            p = cand;
            degree = m;
        }
        if (order % cand == 0) break;
    }
    if (p == 0) throw ParseError(line, q.column, "field order must be a prime power");

    bool has_mod = lex.peek().kind == Token::Kind::identifier && lex.peek().text == "mod";
    if (has_mod) {
        lex.take();
        if (degree < 2) throw ParseError(line, q.column, "prime fields take no modulus");
        // read the modulus as a univariate polynomial in its symbol
        std::string rest;
        while (lex.peek().kind != Token::Kind::end) rest += lex.take().text;
        std::string symbol;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (std::isalpha(static_cast<unsigned char>(rest[i])) || rest[i] == '_') {
                std::size_t j = i;
                while (j < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[j])) ||
                                           rest[j] == '_')) {
                    ++j;
                }
                symbol = rest.substr(i, j - i);
                break;
            }
        }
        if (symbol.empty()) throw ParseError(line, 1, "modulus needs a generator symbol");
        Ring::Ptr modring = Ring::make(FieldSpec::make_prime(p), {symbol});
        Lexer mlex(rest, line);
        PolyParser mp(mlex, modring);
        Polynomial modpoly = mp.parse();
        if (mlex.peek().kind != Token::Kind::end) mlex.fail("trailing input after modulus");
        std::vector<long> coeffs(static_cast<std::size_t>(degree) + 1, 0);
        for (const auto& t : modpoly.terms()) {
            std::uint32_t d = t.mono.exps[0];
            if (d > static_cast<std::uint32_t>(degree)) {
                throw ParseError(line, 1, "modulus degree exceeds the field degree");
            }
            coeffs[d] = t.coeff.prime_value();
        }
        return FieldSpec::make_extension(p, coeffs, symbol);
    }
    if (degree > 1) {
        throw ParseError(line, q.column,
                         "extension fields need an explicit 'mod' clause, e.g. GF(4) mod w^2+w+1");
    }
    if (lex.at_symbol('(')) {
        lex.take();
        std::vector<std::string> names;
        while (true) {
            Token t = lex.take();
            if (t.kind != Token::Kind::identifier) {
                throw ParseError(line, t.column, "expected a transcendental name");
            }
            names.push_back(t.text);
            if (lex.at_symbol(',')) {
                lex.take();
                continue;
            }
            break;
        }
        if (!lex.at_symbol(')')) lex.fail("expected ')' after transcendentals");
        lex.take();
        if (lex.peek().kind != Token::Kind::end) lex.fail("trailing input after field");
        return FieldSpec::make_function(p, names);
    }
    if (lex.peek().kind != Token::Kind::end) lex.fail("trailing input after field");
    return FieldSpec::make_prime(p);
}

std::vector<unsigned> parse_unsigned_list(const std::string& text, int line) {
    std::vector<unsigned> out;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        piece = strip(piece);
        if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError(line, 1, "expected a comma-separated list of nonnegative integers");
        }
        out.push_back(static_cast<unsigned>(std::stoul(piece)));
    }
    if (out.empty()) throw ParseError(line, 1, "empty integer list");
    return out;
}

std::vector<std::string> parse_name_list(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string piece;
    while (std::getline(is, piece, ',')) {
        piece = strip(piece);
        if (!piece.empty()) out.push_back(piece);
    }
    return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring::Ptr& ring) {
    Lexer lex(text, 1);
    PolyParser pp(lex, ring);
    Polynomial p = pp.parse();
    if (lex.peek().kind != Token::Kind::end) lex.fail("trailing input after polynomial");
    return p;
}

bool TaskSpec::operator==(const TaskSpec& o) const {
    return kind == o.kind && ideal == o.ideal && e_max == o.e_max && e == o.e &&
           levels == o.levels && gamma == o.gamma && order == o.order && dim == o.dim &&
           budget == o.budget && rank1 == o.rank1 && sample == o.sample;
}

const std::vector<Polynomial>& InstanceFile::ideal_by_name(const std::string& name) const {
    for (const auto& [n, gens] : ideals) {
        if (n == name) return gens;
    }
    throw UnknownIdeal(name);
}

bool InstanceFile::operator==(const InstanceFile& o) const {
    if (!field->same(*o.field) || !ring->same(*o.ring)) return false;
    if (defining.size() != o.defining.size() || ideals.size() != o.ideals.size()) return false;
    for (std::size_t i = 0; i < defining.size(); ++i) {
        if (defining[i] != o.defining[i]) return false;
    }
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (ideals[i].first != o.ideals[i].first) return false;
        if (ideals[i].second.size() != o.ideals[i].second.size()) return false;
        for (std::size_t j = 0; j < ideals[i].second.size(); ++j) {
            if (ideals[i].second[j] != o.ideals[i].second[j]) return false;
        }
    }
    return task == o.task;
}

InstanceFile parse_instance(const std::string& text) {
    InstanceFile file;
    std::vector<std::pair<int, std::string>> pending_ideals;   // parsed once the ring exists
    std::vector<std::pair<int, std::string>> pending_defining;
    std::optional<std::pair<int, std::string>> field_line;
    std::optional<std::pair<int, std::string>> ring_line;
    std::optional<std::pair<int, std::string>> task_line;

    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = strip(line.substr(key.size()));
        if (!rest.empty() && rest[0] == '=' && key != "ideal") rest = strip(rest.substr(1));
        if (key == "field") {
            if (field_line) throw ParseError(lineno, 1, "duplicate field line");
            field_line = {lineno, rest};
        } else if (key == "ring") {
            if (ring_line) throw ParseError(lineno, 1, "duplicate ring line");
            ring_line = {lineno, rest};
        } else if (key == "mod") {
            pending_defining.emplace_back(lineno, rest);
        } else if (key == "ideal") {
            pending_ideals.emplace_back(lineno, rest);
        } else if (key == "task") {
            if (task_line) throw ParseError(lineno, 1, "only one task per instance");
            task_line = {lineno, rest};
        } else {
            throw ParseError(lineno, 1, "unknown directive '" + key + "'");
        }
    }
    if (!field_line) throw ParseError(lineno, 1, "missing field line");
    if (!ring_line) throw ParseError(lineno, 1, "missing ring line");
    if (!task_line) throw ParseError(lineno, 1, "missing task line");

    file.field = parse_field_spec(field_line->second, field_line->first);

    std::vector<std::string> vars = split_words(ring_line->second);
    std::vector<std::string> names;
    for (auto& v : vars) {
        for (const auto& piece : parse_name_list(v)) names.push_back(piece);
    }
    if (names.empty()) throw ParseError(ring_line->first, 1, "ring needs at least one variable");
    for (const auto& n : names) {
        if (file.field->kind() == FieldKind::extension && n == file.field->generator_name()) {
            throw ParseError(ring_line->first, 1,
                             "variable '" + n + "' collides with the field generator");
        }
        if (file.field->kind() == FieldKind::function) {
            const auto& ts = file.field->transcendentals();
            if (std::find(ts.begin(), ts.end(), n) != ts.end()) {
                throw ParseError(ring_line->first, 1,
                                 "variable '" + n + "' collides with a transcendental");
            }
        }
    }
    file.ring = Ring::make(file.field, names);

    for (const auto& [ln, body] : pending_defining) {
        for (auto& p : parse_poly_list(body, ln, file.ring)) {
            file.defining.push_back(std::move(p));
        }
    }

    std::set<std::string> ideal_names;
    for (const auto& [ln, body] : pending_ideals) {
        std::size_t eq = body.find('=');
        if (eq == std::string::npos) throw ParseError(ln, 1, "ideal line needs 'name = gens'");
        std::string name = strip(body.substr(0, eq));
        if (name.empty() || split_words(name).size() != 1) {
            throw ParseError(ln, 1, "ideal needs a single-word name");
        }
        if (!ideal_names.insert(name).second) {
            throw ParseError(ln, 1, "duplicate ideal '" + name + "'");
        }
        file.ideals.emplace_back(name, parse_poly_list(strip(body.substr(eq + 1)), ln, file.ring));
    }

    // task <kind> [<ideal>] [key=value ...]
    {
        auto [ln, body] = *task_line;
        std::vector<std::string> words = split_words(body);
        if (words.empty()) throw ParseError(ln, 1, "task needs a kind");
        static const std::set<std::string> kinds = {"hk",    "srel",   "srat",
                                                    "gamma", "verify", "oracle-diff"};
        file.task.kind = words[0];
        if (!kinds.count(file.task.kind)) {
            throw ParseError(ln, 1, "unknown task kind '" + file.task.kind + "'");
        }
        std::size_t wi = 1;
        if (wi < words.size() && words[wi].find('=') == std::string::npos) {
            file.task.ideal = words[wi];
            ++wi;
        }
        if (file.task.ideal.empty()) throw ParseError(ln, 1, "task needs an ideal name");
        file.ideal_by_name(file.task.ideal);  // throws UnknownIdeal
        for (; wi < words.size(); ++wi) {
            std::size_t eq = words[wi].find('=');
            if (eq == std::string::npos) {
                throw ParseError(ln, 1, "task parameters use key=value form");
            }
            std::string key = words[wi].substr(0, eq);
            std::string value = words[wi].substr(eq + 1);
            try {
            if (key == "e_max") {
                file.task.e_max = static_cast<unsigned>(std::stoul(value));
            } else if (key == "e") {
                file.task.e = static_cast<unsigned>(std::stoul(value));
            } else if (key == "levels") {
                file.task.levels = parse_unsigned_list(value, ln);
            } else if (key == "Gamma") {
                file.task.gamma = parse_name_list(value);
            } else if (key == "order") {
                if (value != "grevlex" && value != "lex") {
                    throw ParseError(ln, 1, "order must be grevlex or lex");
                }
                file.task.order = value;
            } else if (key == "dim") {
                file.task.dim = std::stoi(value);
            } else if (key == "budget") {
                file.task.budget = std::stoull(value);
            } else if (key == "rank1") {
                file.task.rank1 = (value == "1" || value == "true");
            } else if (key == "sample") {
                file.task.sample = parse_name_list(value);
            } else {
                throw ParseError(ln, 1, "unknown task parameter '" + key + "'");
            }
            } catch (const ParseError&) {
                throw;
            } catch (const std::logic_error&) {
                throw ParseError(ln, 1, "bad value for task parameter '" + key + "'");
            }
        }
        if (file.task.kind == "gamma") {
            for (const auto& g : file.task.gamma) {
                if (file.field->kind() != FieldKind::function) {
                    throw ParseError(ln, 1, "Gamma requires a function field");
                }
                const auto& ts = file.field->transcendentals();
                if (std::find(ts.begin(), ts.end(), g) == ts.end()) {
                    throw ParseError(ln, 1, "'" + g + "' is not a transcendental");
                }
            }
        }
    }
    return file;
}

std::string InstanceFile::to_text() const {
    std::ostringstream os;
    os << "field " << field->to_string() << "\n";
    os << "ring";
    for (const auto& v : ring->variables) os << " " << v;
    os << "\n";
    for (const auto& g : defining) os << "mod " << g.to_string() << "\n";
    for (const auto& [name, gens] : ideals) {
        os << "ideal " << name << " =";
        for (std::size_t i = 0; i < gens.size(); ++i) {
            os << (i ? ", " : " ") << gens[i].to_string();
        }
        os << "\n";
    }
    os << "task " << task.kind << " " << task.ideal;
    if (task.e_max) os << " e_max=" << *task.e_max;
    if (task.e) os << " e=" << *task.e;
    if (!task.gamma.empty()) {
        os << " Gamma=";
        for (std::size_t i = 0; i < task.gamma.size(); ++i) os << (i ? "," : "") << task.gamma[i];
    }
    if (!task.levels.empty()) {
        os << " levels=";
        for (std::size_t i = 0; i < task.levels.size(); ++i) {
            os << (i ? "," : "") << task.levels[i];
        }
    }
    if (task.order) os << " order=" << *task.order;
    if (task.dim) os << " dim=" << *task.dim;
    if (task.budget) os << " budget=" << *task.budget;
    if (task.rank1) os << " rank1=" << (*task.rank1 ? 1 : 0);
    if (!task.sample.empty()) {
        os << " sample=";
        for (std::size_t i = 0; i < task.sample.size(); ++i) {
            os << (i ? "," : "") << task.sample[i];
        }
    }
    os << "\n";
    return os.str();
}

}  // namespace fsig
