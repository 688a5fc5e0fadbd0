#include "frobx/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace frobx {

Polynomial Polynomial::zero(RingPtr ring) { return Polynomial(std::move(ring)); }

Polynomial Polynomial::constant(RingPtr ring, i64 c) {
    Polynomial f(ring);
    c = fp_normalize(c, ring->characteristic());
    if (c != 0) f.terms_.push_back({c, Monomial{std::vector<i64>(ring->nvars(), 0)}});
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t idx) {
    Polynomial f(ring);
    Monomial m{std::vector<i64>(ring->nvars(), 0)};
    m.e.at(idx) = 1;
    f.terms_.push_back({1, m});
    return f;
}

Polynomial Polynomial::monomial(RingPtr ring, i64 c, Monomial m) {
    Polynomial f(ring);
    c = fp_normalize(c, ring->characteristic());
    if (c != 0) f.terms_.push_back({c, std::move(m)});
    return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const i64 p = ring->characteristic();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ring->cmp(a.m, b.m) > 0; });
    Polynomial f(ring);
    for (auto& t : terms) {
        i64 c = fp_normalize(t.c, p);
        if (c == 0) continue;
        if (!f.terms_.empty() && f.terms_.back().m == t.m) {
            i64 merged = fp_add(f.terms_.back().c, c, p);
            if (merged == 0)
                f.terms_.pop_back();
            else
                f.terms_.back().c = merged;
        } else {
            f.terms_.push_back({c, std::move(t.m)});
        }
    }
    return f;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

i64 Polynomial::total_degree() const {
    i64 d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw error("leading term of zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    const i64 p = ring_->characteristic();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->cmp(terms_[i].m, o.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            i64 s = fp_add(terms_[i].c, o.terms_[j].c, p);
            if (s != 0) r.terms_.push_back({s, terms_[i].m});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::negate() const {
    const i64 p = ring_->characteristic();
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = fp_sub(0, t.c, p);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.negate(); }

Polynomial Polynomial::times_term(const Term& t) const {
    const i64 p = ring_->characteristic();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& s : terms_) {
        i64 c = fp_mul(s.c, t.c, p);
        if (c != 0) r.terms_.push_back({c, s.m.times(t.m)});
    }
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    // accumulate into a map keyed by monomial; ordering restored at the end
    const i64 p = ring_->characteristic();
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) acc.push_back({fp_mul(a.c, b.c, p), a.m.times(b.m)});
    return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::scaled(i64 c) const {
    const i64 p = ring_->characteristic();
    c = fp_normalize(c, p);
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({fp_mul(t.c, c, p), t.m});
    return r;
}

Polynomial Polynomial::pow(i64 k) const {
    if (k < 0) throw error("negative polynomial power");
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        if (k >>= 1) base = base * base;
    }
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inv(leading_coeff(), ring_->characteristic()));
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_same_ring(ring_, o.ring_);
    return terms_ == o.terms_;
}

Polynomial frobenius_pow(const Polynomial& f, i64 e) {
    if (e < 0) throw error("negative Frobenius exponent");
    if (e == 0) return f;
    i64 q = 1;
    for (i64 i = 0; i < e; ++i) q = checked_mul(q, f.ring()->characteristic());
    std::vector<Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) ts.push_back({t.c, t.m.power(q)});
    return Polynomial::from_terms(f.ring(), std::move(ts));
}

Polynomial transplant(const Polynomial& f, const RingPtr& target, const std::vector<int>& var_map) {
    std::vector<Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m{std::vector<i64>(target->nvars(), 0)};
        for (std::size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (var_map[i] < 0) throw error("transplant: variable has no image");
            m.e[static_cast<std::size_t>(var_map[i])] = t.m.e[i];
        }
        ts.push_back({t.c, std::move(m)});
    }
    return Polynomial::from_terms(target, std::move(ts));
}

// ---- parsing -------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("polynomial syntax: " + msg + " at position " + std::to_string(i) +
                          " in \"" + s + "\"");
    }
};

i64 parse_uint(Cursor& c) {
    c.skip_ws();
    if (c.i >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.i])))
        c.fail("expected integer");
    i64 v = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        v = checked_add(checked_mul(v, 10), c.s[c.i] - '0');
        ++c.i;
    }
    return v;
}

std::string parse_ident(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    if (c.i >= c.s.size() || !(std::isalpha(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
        c.fail("expected identifier");
    while (c.i < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_'))
        ++c.i;
    return c.s.substr(start, c.i - start);
}

// term := factor (* factor)* ;  factor := integer | ident [^ integer]
Term parse_term(Cursor& c, const RingPtr& ring) {
    Term t{1, Monomial{std::vector<i64>(ring->nvars(), 0)}};
    bool first = true;
    while (true) {
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            t.c = fp_mul(fp_normalize(t.c, ring->characteristic()),
                         fp_normalize(parse_uint(c), ring->characteristic()),
                         ring->characteristic());
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string name = parse_ident(c);
            int idx = ring->var_index(name);
            if (idx < 0) c.fail("unknown variable '" + name + "'");
            i64 exp = 1;
            if (c.peek() == '^') {
                ++c.i;
                exp = parse_uint(c);
            }
            auto& slot = t.m.e[static_cast<std::size_t>(idx)];
            slot = checked_add(slot, exp);
        } else if (first) {
            c.fail("expected term");
        }
        first = false;
        if (c.peek() == '*') {
            ++c.i;
            continue;
        }
        break;
    }
    return t;
}

}  // namespace

Polynomial parse_poly(const RingPtr& ring, const std::string& text) {
    Cursor c{text};
    std::vector<Term> terms;
    if (c.done()) throw parse_error("empty polynomial text");
    bool negate = false;
    if (c.peek() == '-') {
        negate = true;
        ++c.i;
    } else if (c.peek() == '+') {
        ++c.i;
    }
    while (true) {
        Term t = parse_term(c, ring);
        if (negate) t.c = fp_sub(0, t.c, ring->characteristic());
        terms.push_back(std::move(t));
        if (c.done()) break;
        char ch = c.peek();
        if (ch == '+')
            negate = false;
        else if (ch == '-')
            negate = true;
        else
            c.fail("expected '+' or '-'");
        ++c.i;
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

std::vector<Polynomial> parse_poly_list(const RingPtr& ring, const std::string& csv) {
    std::vector<Polynomial> out;
    std::string item;
    std::stringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(parse_poly(ring, item));
    }
    return out;
}

std::string format_poly(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const auto& vars = f.ring()->vars();
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += "+";
        std::string body;
        for (std::size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += vars[i];
            if (t.m.e[i] > 1) body += "^" + std::to_string(t.m.e[i]);
        }
        if (body.empty()) {
            out += std::to_string(t.c);
        } else if (t.c == 1) {
            out += body;
        } else {
            out += std::to_string(t.c) + "*" + body;
        }
    }
    return out;
}

std::string format_poly_list(const std::vector<Polynomial>& fs) {
    std::string out;
    for (const auto& f : fs) {
        if (!out.empty()) out += ", ";
        out += format_poly(f);
    }
    return out;
}

}  // namespace frobx
