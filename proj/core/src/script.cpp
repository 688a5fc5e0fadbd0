#include "frobx/script.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "frobx/cech.hpp"
#include "frobx/lattice.hpp"

namespace frobx {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : line) {
        if (ch == ' ' || ch == '\t') {
            if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));
    return toks;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

// "(a),(b,c)" -> {"(a)", "(b,c)"}; commas inside parentheses do not split.
std::vector<std::string> split_groups(const std::string& s) {
    std::vector<std::string> groups;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth < 0) throw parse_error("unbalanced parentheses in " + s);
        if (ch == ',' && depth == 0) {
            groups.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (depth != 0) throw parse_error("unbalanced parentheses in " + s);
    groups.push_back(trim(cur));
    return groups;
}

std::string strip_parens(const std::string& s) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw parse_error("expected a parenthesized list, got " + s);
    return t.substr(1, t.size() - 2);
}

i64 to_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    i64 v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw parse_error(what + " wants an integer, got " + s);
    }
    if (pos != s.size()) throw parse_error(what + " wants an integer, got " + s);
    return v;
}

bool valid_name(const std::string& s) {
    if (s.empty() || (std::isdigit(static_cast<unsigned char>(s[0])) != 0)) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char ch) {
        return std::isalnum(ch) != 0 || ch == '_';
    });
}

// Key=value argument list for one command; every token must be consumed.
class Args {
public:
    explicit Args(std::vector<std::string> toks) : toks_(std::move(toks)) {}

    std::optional<std::string> take(const std::string& key) {
        std::string prefix = key + "=";
        for (std::size_t i = 0; i < toks_.size(); ++i) {
            if (toks_[i].rfind(prefix, 0) == 0) {
                std::string v = toks_[i].substr(prefix.size());
                toks_.erase(toks_.begin() + static_cast<std::ptrdiff_t>(i));
                return v;
            }
        }
        return std::nullopt;
    }

    bool take_flag(const std::string& word) {
        auto it = std::find(toks_.begin(), toks_.end(), word);
        if (it == toks_.end()) return false;
        toks_.erase(it);
        return true;
    }

    std::string take_positional(const std::string& what) {
        for (std::size_t i = 0; i < toks_.size(); ++i) {
            if (toks_[i].find('=') == std::string::npos) {
                std::string v = toks_[i];
                toks_.erase(toks_.begin() + static_cast<std::ptrdiff_t>(i));
                return v;
            }
        }
        throw parse_error("missing " + what);
    }

    void finish(const std::string& cmd) const {
        if (!toks_.empty())
            throw parse_error("unexpected token '" + toks_[0] + "' in " + cmd);
    }

private:
    std::vector<std::string> toks_;
};

std::string need(std::optional<std::string> v, const std::string& msg) {
    if (!v) throw parse_error(msg);
    return *v;
}

struct ModuleDecl {
    std::optional<CyclicTower> tower;
    std::optional<FiniteCyclicsModule> finite;
};

struct Session {
    RingPtr ring;
    QuotPtr quot;
    std::map<std::string, Ideal> ideals;
    std::vector<std::pair<std::string, ModuleDecl>> modules;
    std::optional<SopData> sop;

    RingContext ctx() const {
        if (!ring) throw parse_error("declare a ring first");
        return quot ? RingContext::of(quot) : RingContext::of(ring);
    }

    const Ideal& ideal(const std::string& name) const {
        auto it = ideals.find(name);
        if (it == ideals.end()) throw parse_error("unknown ideal: " + name);
        return it->second;
    }

    const ModuleDecl& module_named(const std::string& name) const {
        for (const auto& [n, m] : modules)
            if (n == name) return m;
        throw parse_error("unknown module: " + name);
    }

    const ModuleDecl& pick_module(std::optional<std::string> name) const {
        if (name) return module_named(*name);
        if (modules.empty()) throw parse_error("no module declared");
        if (modules.size() > 1)
            throw parse_error("several modules declared; pass module=<name>");
        return modules[0].second;
    }
};

// ---- declarations --------------------------------------------------------

void decl_ring(Session& ses, Args args) {
    if (ses.ring) throw parse_error("ring already declared");
    i64 p = to_int(need(args.take("p"), "ring wants p=<prime>"), "p");
    std::string vars_csv = need(args.take("vars"), "ring wants vars=<csv>");
    MonomialOrder order;
    if (auto o = args.take("order")) {
        if (*o == "lex")
            order.kind = OrderKind::lex;
        else if (*o == "grevlex")
            order.kind = OrderKind::grevlex;
        else
            throw parse_error("order wants lex or grevlex, got " + *o);
    }
    args.finish("ring");
    std::vector<std::string> vars = split_on(vars_csv, ',');
    ses.ring = make_ring(p, std::move(vars), order);
}

void decl_quotient(Session& ses, const std::string& rest) {
    if (!ses.ring) throw parse_error("declare a ring first");
    if (ses.quot) throw parse_error("quotient already declared");
    if (!ses.ideals.empty() || !ses.modules.empty() || ses.sop)
        throw parse_error("quotient must precede ideal, sop, and module declarations");
    std::vector<std::string> toks = tokenize(rest);
    bool equidim = true;
    if (!toks.empty() && toks.back() == "noequidim") {
        equidim = false;
        toks.pop_back();
    }
    std::string csv;
    for (const auto& t : toks) csv += (csv.empty() ? "" : " ") + t;
    if (csv.empty()) throw parse_error("quotient wants a polynomial list");
    ses.quot = QuotientRing::make(ses.ring, parse_poly_list(ses.ring, csv), equidim);
}

void decl_ideal(Session& ses, const std::string& rest) {
    if (!ses.ring) throw parse_error("declare a ring first");
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos)
        throw parse_error("ideal declaration wants 'ideal <name> = <generators>'");
    std::string name = trim(rest.substr(0, eq));
    std::string csv = trim(rest.substr(eq + 1));
    if (!valid_name(name)) throw parse_error("bad ideal name: " + name);
    if (ses.ideals.count(name)) throw parse_error("ideal already declared: " + name);
    if (csv.empty()) throw parse_error("ideal wants at least one generator");
    ses.ideals.emplace(name, Ideal(ses.ctx(), parse_poly_list(ses.ring, csv)));
}

void decl_sop(Session& ses, const std::string& rest) {
    if (ses.sop) throw parse_error("sop already declared");
    std::string csv = trim(rest);
    if (csv.empty()) throw parse_error("sop wants a polynomial list");
    ses.sop = make_sop(ses.ctx(), parse_poly_list(ses.ring, csv));
}

void decl_module(Session& ses, Args args) {
    RingContext ctx = ses.ctx();
    std::string name;
    if (auto n = args.take("name")) {
        if (!valid_name(*n)) throw parse_error("bad module name: " + *n);
        name = *n;
    } else {
        name = "m" + std::to_string(ses.modules.size());
    }
    for (const auto& [n, m] : ses.modules)
        if (n == name) throw parse_error("module already declared: " + name);

    ModuleDecl decl;
    if (args.take_flag("cyclic-tower")) {
        std::string csv = strip_parens(need(args.take("ideal"), "cyclic-tower wants ideal=(<csv>)"));
        CyclicTower::Kind kind = args.take_flag("constant") ? CyclicTower::Kind::constant
                                                           : CyclicTower::Kind::frobenius_powers;
        args.finish("module");
        decl.tower.emplace(ctx, Ideal(ctx, parse_poly_list(ses.ring, csv)), kind);
    } else if (args.take_flag("finite")) {
        std::string groups_text = need(args.take("summands"), "finite wants summands=(<csv>),...");
        std::vector<Ideal> summands;
        for (const auto& g : split_groups(groups_text))
            summands.emplace_back(ctx, parse_poly_list(ses.ring, strip_parens(g)));
        std::vector<Polynomial> units;
        bool frob = args.take_flag("frobenius");
        bool zero = args.take_flag("zero");
        auto units_csv = args.take("units");
        if ((frob ? 1 : 0) + (zero ? 1 : 0) + (units_csv ? 1 : 0) > 1)
            throw parse_error("pick one of frobenius, zero, units=<csv>");
        args.finish("module");
        if (units_csv) {
            units = parse_poly_list(ses.ring, *units_csv);
            if (units.size() != summands.size())
                throw parse_error("units list wants one entry per summand");
        } else {
            i64 c = zero ? 0 : 1;
            units.assign(summands.size(), Polynomial::constant(ses.ring, c));
        }
        decl.finite = FiniteCyclicsModule::diagonal(ctx, std::move(summands), std::move(units));
    } else {
        throw parse_error("module wants cyclic-tower or finite");
    }
    ses.modules.emplace_back(name, std::move(decl));
}

// ---- report plumbing -----------------------------------------------------

std::vector<std::string> ideal_strings(const Ideal& a) {
    if (a.is_zero_ideal()) return {"0"};
    std::vector<std::string> out;
    for (const auto& g : a.groebner()) out.push_back(format_poly(g));
    return out;
}

ordered_json ideal_json(const Ideal& a) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : ideal_strings(a)) arr.push_back(s);
    return arr;
}

ordered_json chain_json(const GradedIdealChain& c) {
    ordered_json entries = ordered_json::array();
    for (const auto& b : c.entries) entries.push_back(ideal_json(b));
    return entries;
}

ordered_json checks_json(const std::vector<CheckLine>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks)
        arr.push_back(ordered_json{{"name", c.name}, {"pass", c.pass}, {"note", c.note}});
    return arr;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

void check_lines(const std::vector<CheckLine>& checks, std::vector<std::string>& text) {
    for (const auto& c : checks) {
        std::string line = "check " + c.name + ": " + (c.pass ? "pass" : "FAIL");
        if (!c.note.empty()) line += " (" + c.note + ")";
        text.push_back(line);
    }
}

// ---- commands ------------------------------------------------------------

void cmd_frobpow(Session& ses, Args args, std::vector<std::string>& text, ordered_json& js) {
    std::string name = args.take_positional("ideal name");
    i64 e = to_int(need(args.take("e"), "frobpow wants e=<n>"), "e");
    args.finish("frobpow");
    Ideal r = frobenius_power(ses.ideal(name), e);
    text.push_back("generators: " + format_poly_list(r.gens()));
    ordered_json gens = ordered_json::array();
    for (const auto& g : r.gens()) gens.push_back(format_poly(g));
    js["generators"] = gens;
}

void cmd_frobclosure(Session& ses, Args args, std::vector<std::string>& text, ordered_json& js) {
    std::string name = args.take_positional("ideal name");
    i64 bound = 3;
    if (auto b = args.take("bound")) bound = to_int(*b, "bound");
    args.finish("frobclosure");
    auto [closure, stabilized] = frobenius_closure(ses.ideal(name), bound);
    text.push_back("closure: " + format_ideal(closure));
    text.push_back(std::string("stabilized: ") + (stabilized ? "true" : "false"));
    js["closure"] = ideal_json(closure);
    js["stabilized"] = stabilized;
}

void report_chain(const GradedIdealChain& chain, std::vector<std::string>& text, ordered_json& js) {
    Ideal limit = limit_ideal(chain);
    text.push_back(format_chain(chain));
    text.push_back("limit: " + format_ideal(limit));
    text.push_back(std::string("certified: ") + (chain.certified ? "true" : "false"));
    js["chain"] = chain_json(chain);
    js["stable_from"] = chain.stable_from ? ordered_json(*chain.stable_from) : ordered_json(nullptr);
    js["certified"] = chain.certified;
    js["limit"] = ideal_json(limit);
}

void cmd_grann(Session& ses, Args args, std::vector<std::string>& text, ordered_json& js) {
    const ModuleDecl& mod = ses.module_named(need(args.take("module"), "grann wants module=<name>"));
    std::vector<Polynomial> reps =
        parse_poly_list(ses.ring, need(args.take("elem"), "grann wants elem=<polys>"));
    std::optional<std::string> comp = args.take("comp");
    i64 bound = 4;
    if (auto b = args.take("bound")) bound = to_int(*b, "bound");
    args.finish("grann");

    if (mod.tower) {
        if (reps.size() != 1) throw parse_error("tower elements are single polynomials");
        i64 n0 = comp ? to_int(*comp, "comp") : 0;
        report_chain(mod.tower->grann_element(mod.tower->element(n0, reps[0]), bound), text, js);
    } else {
        if (comp) throw parse_error("comp applies to tower modules");
        if (reps.size() != mod.finite->rank())
            throw parse_error("element wants " + std::to_string(mod.finite->rank()) + " components");
        report_chain(mod.finite->grann_element(mod.finite->element(std::move(reps))), text, js);
    }
}

std::vector<CyclicTower::Elem> default_pool(const CyclicTower& T) {
    const RingPtr& R = T.context().ambient;
    std::vector<Polynomial> polys;
    for (std::size_t i = 0; i < R->nvars(); ++i) polys.push_back(Polynomial::variable(R, i));
    for (std::size_t i = 0; i < R->nvars(); ++i)
        for (std::size_t j = i + 1; j < R->nvars(); ++j)
            polys.push_back(Polynomial::variable(R, i) + Polynomial::variable(R, j));
    polys.push_back(Polynomial::constant(R, 1));
    std::vector<CyclicTower::Elem> pool;
    for (const auto& f : polys) pool.push_back(T.element(0, f));
    return pool;
}

std::vector<CyclicTower::Elem> tower_pool(const Session& ses, const CyclicTower& T,
                                          const std::optional<std::string>& pool_csv) {
    if (!pool_csv) return default_pool(T);
    std::vector<CyclicTower::Elem> pool;
    for (const auto& f : parse_poly_list(ses.ring, *pool_csv)) pool.push_back(T.element(0, f));
    return pool;
}

void cmd_lattice(Session& ses, Args args, std::vector<std::string>& text, ordered_json& js) {
    const ModuleDecl& mod =
        ses.module_named(need(args.take("module"), "lattice wants module=<name>"));
    i64 bound = 4;
    if (auto b = args.take("bound")) bound = to_int(*b, "bound");
    std::optional<std::string> pool_csv = args.take("pool");
    args.finish("lattice");

    SpecialIdealLattice L = [&] {
        if (mod.tower) return special_ideal_lattice(*mod.tower, tower_pool(ses, *mod.tower, pool_csv), bound);
        if (pool_csv) throw parse_error("pool applies to tower modules");
        return special_ideal_lattice(*mod.finite, bound);
    }();

    std::vector<std::string> ideal_texts, prime_texts;
    for (std::size_t i = 0; i < L.ideals.size(); ++i) {
        ideal_texts.push_back(format_ideal(L.ideals[i]));
        if (L.prime[i]) prime_texts.push_back(format_ideal(L.ideals[i]));
    }
    text.push_back("ideals: " + join(ideal_texts, "; "));
    text.push_back("primes: " + join(prime_texts, "; "));
    for (std::size_t i = 0; i < L.ideals.size(); ++i)
        text.push_back("delta " + ideal_texts[i] + ": " + join(L.delta[i], "; "));
    check_lines(L.checks, text);

    std::vector<std::string> maximal_texts;
    for (const auto& m : maximal_special_primes(L)) maximal_texts.push_back(format_ideal(m));
    text.push_back("maximal: " + join(maximal_texts, "; "));

    ordered_json minimal = nullptr;
    try {
        Ideal c = smallest_positive_height_ideal(L);
        text.push_back("minimal-positive-height: " + format_ideal(c));
        minimal = ideal_json(c);
    } catch (const refusal& e) {
        text.push_back(std::string("minimal-positive-height: unavailable (") + e.what() + ")");
    }
    text.push_back(std::string("complete: ") + (L.complete ? "true" : "false"));

    ordered_json ideals = ordered_json::array(), primes = ordered_json::array(),
                 delta = ordered_json::array(), maximal = ordered_json::array();
    for (std::size_t i = 0; i < L.ideals.size(); ++i) {
        ideals.push_back(ideal_json(L.ideals[i]));
        if (L.prime[i]) primes.push_back(ideal_json(L.ideals[i]));
        ordered_json members = ordered_json::array();
        for (const auto& m : L.delta[i]) members.push_back(m);
        delta.push_back(ordered_json{{"ideal", ideal_json(L.ideals[i])}, {"members", members}});
    }
    for (const auto& m : maximal_special_primes(L)) maximal.push_back(ideal_json(m));
    js["ideals"] = ideals;
    js["primes"] = primes;
    js["delta"] = delta;
    js["checks"] = checks_json(L.checks);
    js["maximal"] = maximal;
    js["minimal_positive_height"] = minimal;
    js["complete"] = L.complete;
}

void cmd_hsl(Session& ses, Args args, std::vector<std::string>& text, ordered_json& js) {
    const ModuleDecl& mod = ses.module_named(need(args.take("module"), "hsl wants module=<name>"));
    args.finish("hsl");
    if (!mod.finite) throw parse_error("hsl wants a finite module");
    i64 h = mod.finite->hsl_number();
    text.push_back("hsl: " + std::to_string(h));
    js["hsl"] = h;
}

ordered_json member_json(const std::string& verdict) {
    if (verdict == "true") return true;
    if (verdict == "false") return false;
    return verdict;
}

void cmd_tc(Session& ses, Args args, std::vector<std::string>& text, ordered_json& js) {
    if (!ses.sop) throw parse_error("no sop declared");
    Polynomial r = parse_poly(ses.ring, need(args.take("elem"), "tc wants elem=<poly>"));
    i64 j = to_int(need(args.take("j"), "tc wants j=<n>"), "j");
    i64 bound = 4;
    if (auto b = args.take("bound")) bound = to_int(*b, "bound");
    std::string mode = args.take("mode").value_or("chain");
    args.finish("tc");

    TcReport rep = [&] {
        if (mode == "chain") return tc_param_membership_chain(*ses.sop, r, j, bound);
        if (mode.rfind("test:", 0) == 0) {
            std::string rest = mode.substr(5);
            std::size_t comma = rest.rfind(',');
            if (comma == std::string::npos)
                throw parse_error("mode wants test:<c>,<w0>");
            Polynomial c = parse_poly(ses.ring, rest.substr(0, comma));
            i64 w0 = to_int(rest.substr(comma + 1), "w0");
            return tc_param_membership_test(*ses.sop, r, j, c, w0, bound);
        }
        throw parse_error("mode wants chain or test:<c>,<w0>, got " + mode);
    }();

    text.push_back("member: " + rep.member);
    js["member"] = member_json(rep.member);
    if (rep.chain) {
        text.push_back(format_chain(*rep.chain));
        text.push_back("limit: " + format_ideal(*rep.limit));
        text.push_back(std::string("positive_height: ") + (rep.positive_height ? "true" : "false"));
        text.push_back(std::string("stabilized: ") + (rep.stabilized ? "true" : "false"));
        js["chain"] = chain_json(*rep.chain);
        js["limit"] = ideal_json(*rep.limit);
        js["positive_height"] = rep.positive_height;
        js["stabilized"] = rep.stabilized;
        js["certified"] = rep.chain->certified;
    } else {
        text.push_back("mode: test");
        js["mode"] = "test";
    }
    for (const auto& w : rep.warnings) text.push_back("warning: " + w);
    ordered_json warnings = ordered_json::array();
    for (const auto& w : rep.warnings) warnings.push_back(w);
    js["warnings"] = warnings;
}

void cmd_enescu(Session& ses, Args args, std::vector<std::string>& text, ordered_json& js) {
    if (!ses.sop) throw parse_error("no sop declared");
    std::vector<Polynomial> samples =
        parse_poly_list(ses.ring, need(args.take("samples"), "enescu wants samples=<csv>"));
    i64 bound = 4;
    if (auto b = args.take("bound")) bound = to_int(*b, "bound");
    args.finish("enescu");

    EnescuReport rep = enescu_zqr(*ses.sop, samples, bound);
    ordered_json entries = ordered_json::array();
    for (const auto& e : rep.entries) {
        std::string b = format_poly(e.b);
        if (e.skipped) {
            text.push_back("skipped " + b + ": q(b) = R by convention");
            entries.push_back(ordered_json{{"sample", b}, {"skipped", true}, {"q", nullptr}});
        } else {
            text.push_back("q(" + b + "): " + format_ideal(*e.qb));
            entries.push_back(ordered_json{{"sample", b},
                                           {"skipped", false},
                                           {"q", ideal_json(*e.qb)},
                                           {"positive_height", e.positive_height}});
        }
    }
    std::vector<std::string> maximal_texts;
    ordered_json maximal = ordered_json::array();
    for (const auto& m : rep.maximal) {
        maximal_texts.push_back(format_ideal(m));
        maximal.push_back(ideal_json(m));
    }
    text.push_back("maximal: " + join(maximal_texts, "; "));
    js["entries"] = entries;
    js["maximal"] = maximal;
    ordered_json notes = ordered_json::array();
    for (const auto& n : rep.notes) notes.push_back(n);
    js["notes"] = notes;
}

void cmd_ga4(Session& ses, Args args, std::vector<std::string>& text, ordered_json& js) {
    const ModuleDecl& mod = ses.pick_module(args.take("module"));
    if (!mod.tower) throw parse_error("ga4 wants a cyclic tower module");
    std::string b_text = need(args.take("b"), "ga4 wants b=<primes>");
    std::string u_csv = need(args.take("U"), "ga4 wants U=<indices>");
    i64 bound = 4;
    if (auto b = args.take("bound")) bound = to_int(*b, "bound");
    std::optional<std::string> pool_csv = args.take("pool");
    args.finish("ga4");

    RadicalDecomposition brd = parse_primes(ses.ctx(), b_text);
    std::vector<int> U;
    for (const auto& part : split_on(u_csv, ','))
        U.push_back(static_cast<int>(to_int(part, "U index")));

    Ga4Report rep =
        split_ga4(*mod.tower, tower_pool(ses, *mod.tower, pool_csv), brd, U, bound);
    text.push_back("inner: " + rep.inner_ideal);
    text.push_back("quotient: " + rep.quotient_ideal);
    check_lines(rep.checks, text);
    text.push_back(std::string("ok: ") + (rep.ok ? "true" : "false"));
    js["inner"] = rep.inner_ideal;
    js["quotient"] = rep.quotient_ideal;
    js["checks"] = checks_json(rep.checks);
    js["ok"] = rep.ok;
}

// ---- driver --------------------------------------------------------------

bool is_command(const std::string& head) {
    static const std::vector<std::string> kCommands = {
        "frobpow", "frobclosure", "grann", "lattice", "hsl", "tc", "enescu", "ga4"};
    return std::find(kCommands.begin(), kCommands.end(), head) != kCommands.end();
}

RunResult run_inner(const std::string& script, bool json) {
    Session ses;
    std::vector<std::string> text;
    ordered_json js = ordered_json::object();
    bool ran = false;

    std::vector<std::string> lines = split_lines(script);
    for (std::size_t li = 0; li < lines.size(); ++li) {
        std::string line = lines[li];
        if (std::size_t hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        try {
            if (ran) throw parse_error("the command must be the last line");
            std::vector<std::string> toks = tokenize(line);
            const std::string head = toks[0];
            std::vector<std::string> rest_toks(toks.begin() + 1, toks.end());
            std::string rest = trim(line.substr(head.size()));

            if (head == "ring") {
                decl_ring(ses, Args(std::move(rest_toks)));
            } else if (head == "quotient") {
                decl_quotient(ses, rest);
            } else if (head == "ideal") {
                decl_ideal(ses, rest);
            } else if (head == "sop") {
                decl_sop(ses, rest);
            } else if (head == "module") {
                decl_module(ses, Args(std::move(rest_toks)));
            } else if (is_command(head)) {
                Args args(std::move(rest_toks));
                if (head == "frobpow")
                    cmd_frobpow(ses, std::move(args), text, js);
                else if (head == "frobclosure")
                    cmd_frobclosure(ses, std::move(args), text, js);
                else if (head == "grann")
                    cmd_grann(ses, std::move(args), text, js);
                else if (head == "lattice")
                    cmd_lattice(ses, std::move(args), text, js);
                else if (head == "hsl")
                    cmd_hsl(ses, std::move(args), text, js);
                else if (head == "tc")
                    cmd_tc(ses, std::move(args), text, js);
                else if (head == "enescu")
                    cmd_enescu(ses, std::move(args), text, js);
                else
                    cmd_ga4(ses, std::move(args), text, js);
                ran = true;
            } else {
                throw parse_error("unknown directive: " + head);
            }
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(li + 1) + ": " + e.what());
        }
    }
    if (!ran) throw parse_error("script wants exactly one command");

    RunResult result;
    if (json) {
        result.output = js.dump(2) + "\n";
    } else {
        for (const auto& l : text) result.output += l + "\n";
    }
    return result;
}

}  // namespace

RunResult run_script(const std::string& text, bool json) {
    try {
        return run_inner(text, json);
    } catch (const refusal& e) {
        return {1, std::string("refused: ") + e.what() + "\n"};
    } catch (const parse_error& e) {
        return {2, std::string("parse error: ") + e.what() + "\n"};
    } catch (const resource_error& e) {
        return {2, std::string("resource error: ") + e.what() + " (partial results discarded)\n"};
    } catch (const error& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace frobx
