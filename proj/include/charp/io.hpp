#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "charp/ideal.hpp"
#include "charp/rational.hpp"
#include "charp/test_ideal.hpp"

namespace charp {

// ---------------------------------------------------------------------------
// Polynomial text syntax: terms joined by + / -, decimal coefficients,
// variables with explicit '^' powers, '*' for products.  No parentheses,
// no implicit exponents.
// ---------------------------------------------------------------------------

namespace detail {

struct PolyLexer {
    const std::string& s;
    std::size_t pos = 0;
    int line;

    explicit PolyLexer(const std::string& text, int line_no = 0) : s(text), line(line_no) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    [[noreturn]] void error(const std::string& what, const std::string& token) const {
        fail(ErrorKind::ParseError,
             what + " at line " + std::to_string(line) + ", token '" + token + "'");
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            error("expected integer", pos < s.size() ? std::string(1, s[pos]) : "<end>");
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (1ull << 62)) error("integer too large", "");
            ++pos;
        }
        return v;
    }

    std::string name() {
        skip_ws();
        if (pos >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            error("expected variable name", pos < s.size() ? std::string(1, s[pos]) : "<end>");
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line_no = 0) {
    detail::PolyLexer lx(text, line_no);
    Polynomial result = Polynomial::zero(ring);
    bool first = true;
    while (!lx.eof()) {
        bool negative = false;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            negative = (c == '-');
            ++lx.pos;
        } else if (!first) {
            lx.error("expected '+' or '-' between terms", std::string(1, c));
        }
        first = false;
        // one term: factors joined by '*'
        std::uint64_t coeff = 1;
        Monomial mono(ring->nvars());
        bool any_factor = false;
        while (true) {
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                coeff = mod_mul(coeff % ring->p(), lx.integer() % ring->p(), ring->p());
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
                std::string var = lx.name();
                int idx = ring->var_index(var);
                if (idx < 0) lx.error("unknown variable", var);
                std::uint64_t e = 1;
                if (lx.peek() == '^') {
                    ++lx.pos;
                    e = lx.integer();
                }
                if (std::isdigit(static_cast<unsigned char>(lx.peek())))
                    lx.error("implicit exponent is rejected; write '^'", var);
                std::uint64_t s = mono.exps[static_cast<std::size_t>(idx)] + e;
                if (s >= kMaxExponent) lx.error("exponent too large", var);
                mono.exps[static_cast<std::size_t>(idx)] = static_cast<std::uint32_t>(s);
                any_factor = true;
            } else {
                lx.error("expected coefficient or variable", std::string(1, f));
            }
            if (lx.peek() == '*') {
                ++lx.pos;
                continue;
            }
            break;
        }
        if (!any_factor) lx.error("empty term", "");
        if (negative) coeff = (ring->p() - coeff % ring->p()) % ring->p();
        result = result + Polynomial::from_monomial(ring, std::move(mono), coeff);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Canonical output: reduced Gröbner basis, monic, one generator per line,
// sorted descending by leading monomial under the ring order.
// ---------------------------------------------------------------------------

inline std::string emit_ideal_canonical(const Ideal& I) {
    std::string out;
    auto basis = I.groebner();
    if (basis->empty()) return "0\n";
    for (const auto& g : *basis) {
        out += g.str();
        out += "\n";
    }
    return out;
}

inline std::vector<std::string> ideal_generator_strings(const Ideal& I) {
    std::vector<std::string> out;
    auto basis = I.groebner();
    if (basis->empty()) {
        out.push_back("0");
        return out;
    }
    out.reserve(basis->size());
    for (const auto& g : *basis) out.push_back(g.str());
    return out;
}

// ---------------------------------------------------------------------------
// Job files
// ---------------------------------------------------------------------------

enum class Command {
    Gb, Colon, Intersect, Dim, Bracket, Root, Tau, TauAlong, Fedder, Sfr, Link, Claim2, Restrict,
};

inline std::optional<Command> command_from_name(const std::string& s) {
    if (s == "gb") return Command::Gb;
    if (s == "colon") return Command::Colon;
    if (s == "intersect") return Command::Intersect;
    if (s == "dim") return Command::Dim;
    if (s == "bracket") return Command::Bracket;
    if (s == "root") return Command::Root;
    if (s == "tau") return Command::Tau;
    if (s == "tau-along") return Command::TauAlong;
    if (s == "fedder") return Command::Fedder;
    if (s == "sfr") return Command::Sfr;
    if (s == "link") return Command::Link;
    if (s == "claim2") return Command::Claim2;
    if (s == "restrict") return Command::Restrict;
    return {};
}

inline const char* command_name(Command c) {
    switch (c) {
        case Command::Gb: return "gb";
        case Command::Colon: return "colon";
        case Command::Intersect: return "intersect";
        case Command::Dim: return "dim";
        case Command::Bracket: return "bracket";
        case Command::Root: return "root";
        case Command::Tau: return "tau";
        case Command::TauAlong: return "tau-along";
        case Command::Fedder: return "fedder";
        case Command::Sfr: return "sfr";
        case Command::Link: return "link";
        case Command::Claim2: return "claim2";
        case Command::Restrict: return "restrict";
    }
    return "?";
}

struct JobSpec {
    RingPtr ring;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, Polynomial> polys;
    std::map<std::string, FormalCombination> combs;
    std::optional<Command> command;
    std::vector<std::string> args;
    std::uint32_t e_max = 4;
    std::uint32_t e = 1;
    std::optional<std::uint64_t> seed;
    std::optional<Polynomial> gamma;
    std::uint64_t bigN = 1;
    std::optional<std::uint64_t> degree_limit;

    const Ideal& ideal(const std::string& name, int line) const {
        auto it = ideals.find(name);
        if (it == ideals.end())
            fail(ErrorKind::ParseError,
                 "unknown ideal '" + name + "' at line " + std::to_string(line));
        return it->second;
    }
};

namespace detail {

inline Rational parse_rational(const std::string& s, int line) {
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s), 1);
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(ErrorKind::ParseError,
             "bad rational '" + s + "' at line " + std::to_string(line));
    }
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace detail

// Parses the line-oriented job format:
//   ring p=7 vars=x,y [order=grevlex|lex]
//   ideal I = x^3 + y^5, x*y
//   poly g = x^2
//   comb A = I^1/2 J^2
//   param emax = 4
//   cmd tau-along I A
inline JobSpec parse_job(const std::string& text) {
    JobSpec job;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = detail::trim(raw);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream ls(s);
        std::string head;
        ls >> head;
        auto rest_of = [&]() {
            std::string rest;
            std::getline(ls, rest);
            return detail::trim(rest);
        };
        if (head == "ring") {
            std::uint64_t p = 0;
            std::vector<std::string> vars;
            MonomialOrder ord = MonomialOrder::grevlex();
            std::string field;
            while (ls >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos)
                    fail(ErrorKind::ParseError,
                         "expected key=value at line " + std::to_string(line) + ", token '" + field + "'");
                std::string key = field.substr(0, eq), val = field.substr(eq + 1);
                if (key == "p") {
                    try {
                        p = std::stoull(val);
                    } catch (const std::exception&) {
                        fail(ErrorKind::ParseError, "bad characteristic at line " + std::to_string(line));
                    }
                } else if (key == "vars") {
                    for (auto& v : detail::split(val, ','))
                        if (!detail::trim(v).empty()) vars.push_back(detail::trim(v));
                } else if (key == "order") {
                    if (val == "lex") ord = MonomialOrder::lex();
                    else if (val == "grevlex") ord = MonomialOrder::grevlex();
                    else
                        fail(ErrorKind::ParseError,
                             "unknown order '" + val + "' at line " + std::to_string(line));
                } else {
                    fail(ErrorKind::ParseError,
                         "unknown ring field '" + key + "' at line " + std::to_string(line));
                }
            }
            if (!is_prime_u64(p))
                fail(ErrorKind::NonPrimeChar,
                     "p=" + std::to_string(p) + " at line " + std::to_string(line));
            job.ring = RingContext::make(p, std::move(vars), ord);
        } else if (head == "ideal" || head == "poly") {
            if (!job.ring)
                fail(ErrorKind::ParseError, "ring must be declared first (line " + std::to_string(line) + ")");
            std::string name, eq;
            ls >> name >> eq;
            if (eq != "=")
                fail(ErrorKind::ParseError, "expected '=' at line " + std::to_string(line));
            std::string body = rest_of();
            if (head == "ideal") {
                std::vector<Polynomial> gens;
                for (auto& piece : detail::split(body, ',')) {
                    std::string t = detail::trim(piece);
                    if (t.empty())
                        fail(ErrorKind::ParseError, "empty generator at line " + std::to_string(line));
                    gens.push_back(parse_polynomial(t, job.ring, line));
                }
                job.ideals.emplace(name, Ideal(job.ring, std::move(gens)));
            } else {
                job.polys.emplace(name, parse_polynomial(body, job.ring, line));
            }
        } else if (head == "comb") {
            if (!job.ring)
                fail(ErrorKind::ParseError, "ring must be declared first (line " + std::to_string(line) + ")");
            std::string name, eq;
            ls >> name >> eq;
            if (eq != "=")
                fail(ErrorKind::ParseError, "expected '=' at line " + std::to_string(line));
            std::vector<std::pair<Ideal, Rational>> factors;
            std::string factor;
            while (ls >> factor) {
                auto caret = factor.find('^');
                if (caret == std::string::npos)
                    fail(ErrorKind::ParseError,
                         "comb factor needs IDEAL^t at line " + std::to_string(line) + ", token '" +
                             factor + "'");
                std::string iname = factor.substr(0, caret);
                Rational t = detail::parse_rational(factor.substr(caret + 1), line);
                if (!t.positive())
                    fail(ErrorKind::ParseError,
                         "comb exponent must be positive at line " + std::to_string(line));
                factors.emplace_back(job.ideal(iname, line), t);
            }
            job.combs.emplace(name, FormalCombination::make(std::move(factors)));
        } else if (head == "param") {
            std::string key, eq;
            ls >> key >> eq;
            if (eq != "=")
                fail(ErrorKind::ParseError, "expected '=' at line " + std::to_string(line));
            std::string val = rest_of();
            try {
                if (key == "emax") job.e_max = static_cast<std::uint32_t>(std::stoul(val));
                else if (key == "e") job.e = static_cast<std::uint32_t>(std::stoul(val));
                else if (key == "seed") job.seed = std::stoull(val);
                else if (key == "bigN") job.bigN = std::stoull(val);
                else if (key == "degree-limit") job.degree_limit = std::stoull(val);
                else if (key == "gamma") {
                    if (!job.ring)
                        fail(ErrorKind::ParseError,
                             "ring must be declared before gamma (line " + std::to_string(line) + ")");
                    job.gamma = parse_polynomial(val, job.ring, line);
                } else
                    fail(ErrorKind::ParseError,
                         "unknown param '" + key + "' at line " + std::to_string(line));
            } catch (const Error&) {
                throw;
            } catch (const std::exception&) {
                fail(ErrorKind::ParseError,
                     "bad value for param '" + key + "' at line " + std::to_string(line));
            }
        } else if (head == "cmd") {
            std::string cname;
            ls >> cname;
            auto cmd = command_from_name(cname);
            if (!cmd)
                fail(ErrorKind::ParseError,
                     "unknown command '" + cname + "' at line " + std::to_string(line));
            job.command = *cmd;
            std::string arg;
            while (ls >> arg) job.args.push_back(arg);
        } else {
            fail(ErrorKind::ParseError,
                 "unknown directive '" + head + "' at line " + std::to_string(line));
        }
    }
    if (!job.ring) fail(ErrorKind::ParseError, "job declares no ring");
    if (job.degree_limit) {
        Limits lim = job.ring->limits();
        lim.max_total_degree = *job.degree_limit;
        RingPtr old = job.ring;
        job.ring = old->with_limits(lim);
        // rebuild stored objects onto the new context
        std::map<std::string, Ideal> ideals;
        for (auto& [k, v] : job.ideals) {
            std::vector<Polynomial> gens;
            for (const auto& g : v.generators())
                gens.emplace_back(job.ring, std::vector<Term>(g.terms()));
            ideals.emplace(k, Ideal(job.ring, std::move(gens)));
        }
        job.ideals = std::move(ideals);
        std::map<std::string, Polynomial> polys;
        for (auto& [k, v] : job.polys)
            polys.emplace(k, Polynomial(job.ring, std::vector<Term>(v.terms())));
        job.polys = std::move(polys);
        std::map<std::string, FormalCombination> combs;
        for (auto& [k, v] : job.combs) {
            std::vector<std::pair<Ideal, Rational>> fs;
            for (const auto& [a, t] : v.factors) {
                std::vector<Polynomial> gens;
                for (const auto& g : a.generators())
                    gens.emplace_back(job.ring, std::vector<Term>(g.terms()));
                fs.emplace_back(Ideal(job.ring, std::move(gens)), t);
            }
            combs.emplace(k, FormalCombination::make(std::move(fs)));
        }
        job.combs = std::move(combs);
        if (job.gamma) job.gamma = Polynomial(job.ring, std::vector<Term>(job.gamma->terms()));
    }
    return job;
}

} // namespace charp
