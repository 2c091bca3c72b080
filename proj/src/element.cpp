#include "tchar/element.hpp"

#include <cctype>
#include <sstream>

namespace tchar {

// --- Model -----------------------------------------------------------------

Model Model::torus(BaseSequence a) {
    if (!a.valid_torus_base())
        throw DomainError("torus bases need a_n >= 2 and a_n -> infinity: " + a.str());
    return Model{ModelKind::Torus, std::move(a), Int(0)};
}

Model Model::padic(Int p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 32) == 0)
        throw DomainError("p must be prime, got " + p.get_str());
    return Model{ModelKind::PAdic, BaseSequence::arithmetic(Int(1), Int(0)), std::move(p)};
}

Model Model::product(BaseSequence b) {
    if (!b.valid_product_base())
        throw DomainError("product bases need 1 < b_0 < b_1 < ...: " + b.str());
    return Model{ModelKind::Product, std::move(b), Int(0)};
}

Int Model::base_at(std::size_t n) const {
    return kind == ModelKind::PAdic ? p : bases.term(n);
}

bool Model::operator==(const Model& o) const {
    if (kind != o.kind) return false;
    if (kind == ModelKind::PAdic) return p == o.p;
    return bases == o.bases;
}

std::string Model::params_str() const {
    switch (kind) {
        case ModelKind::Torus:
            return "model=torus bases=" + bases.str();
        case ModelKind::PAdic:
            return "model=padic p=" + p.get_str();
        case ModelKind::Product:
            return "model=product bases=" + bases.str();
    }
    throw DomainError("unreachable");
}

// --- Element -----------------------------------------------------------------

Element Element::make(Model m, std::vector<Int> prefix, TailRule tail) {
    Element e{std::move(m), std::move(prefix), std::move(tail)};
    e.validate();
    return e;
}

Int Element::digit(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    return tail.digit(n, model.base_at(n), model.kind == ModelKind::Product);
}

std::vector<Int> Element::digits_window(std::size_t from, std::size_t count) const {
    std::vector<Int> out;
    out.reserve(count);
    std::size_t end = from + count;
    std::size_t boundary = std::min(end, prefix.size());
    for (std::size_t n = from; n < boundary; ++n) out.push_back(prefix[n]);
    if (boundary >= end) return out;
    std::size_t tail_from = std::max(from, prefix.size());
    if (tail.kind() == TailRule::Kind::SpacedOnes) {
        out.resize(count, Int(0));
        const IndexRule& nk = tail.spaced_rule();
        Int s(static_cast<unsigned long>(tail.spaced_s()));
        // first k >= l+1 whose one-position lands at or beyond tail_from
        Int target = Int(static_cast<unsigned long>(tail_from)) + s;
        std::size_t lo = tail.spaced_l() + 1, hi = lo;
        while (nk.term(hi) < target) {
            lo = hi + 1;
            hi = hi * 2 + 1;
        }
        while (lo < hi) {
            std::size_t mid = lo + (hi - lo) / 2;
            if (nk.term(mid) >= target)
                hi = mid;
            else
                lo = mid + 1;
        }
        for (std::size_t k = lo;; ++k) {
            Int pos = nk.term(k) - s;
            if (pos >= Int(static_cast<unsigned long>(end))) break;
            out[pos.get_ui() - from] = 1;
        }
        return out;
    }
    for (std::size_t n = tail_from; n < end; ++n)
        out.push_back(tail.digit(n, model.base_at(n), model.kind == ModelKind::Product));
    return out;
}

bool Element::is_zero() const {
    if (!tail.eventually_zero()) return false;
    for (const Int& d : prefix)
        if (d != 0) return false;
    return true;
}

std::size_t Element::support_end() const {
    if (!finite_support()) throw DomainError("support_end needs a zero tail");
    std::size_t end = prefix.size();
    while (end > 0 && prefix[end - 1] == 0) --end;
    return end;
}

std::size_t Element::first_nonzero(std::size_t cap) const {
    for (std::size_t n = 0; n < cap; ++n)
        if (digit(n) != 0) return n;
    return cap;
}

void Element::validate() const {
    for (std::size_t n = 0; n < prefix.size(); ++n) {
        if (prefix[n] < 0 || prefix[n] >= model.base_at(n))
            throw DomainError("digit out of range at index " + std::to_string(n));
    }
    // tail digits stay in range: bounded rules need max digit < every base
    Int bound = tail.max_digit_bound();
    if (bound >= 0 && bound != 0) {
        Int min_base = model.kind == ModelKind::PAdic
                           ? model.p
                           : model.bases.min_term_from(prefix.size());
        if (bound >= min_base)
            throw DomainError("tail digits exceed the base at some index");
    }
    // scaled floors keep 0 <= digit < base for 0 <= t < 1 by construction
}

std::string Element::str() const {
    std::string s = model.params_str();
    s += " prefix=[";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (i) s += ",";
        s += prefix[i].get_str();
    }
    s += "] tail=" + tail.str();
    return s;
}

std::vector<Int> materialize_digits(const Element& x, std::size_t count) {
    return x.digits_window(0, count);
}

// --- Character ---------------------------------------------------------------

Character Character::torus(Int k) {
    Character c;
    c.kind = ModelKind::Torus;
    c.k = std::move(k);
    return c;
}

Character Character::padic(Int m, unsigned long t, const Int& p) {
    if (t == 0) {
        if (m != 0) throw DomainError("p-adic character with t=0 must be the identity");
        Character c;
        c.kind = ModelKind::PAdic;
        c.m = 0;
        c.t = 0;
        return c;
    }
    Int q = ipow(p, t);
    if (m <= 0 || m >= q) throw DomainError("p-adic character needs 0 < m < p^t");
    if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t()))
        throw DomainError("p-adic character m/p^t must be in lowest terms");
    Character c;
    c.kind = ModelKind::PAdic;
    c.m = std::move(m);
    c.t = t;
    return c;
}

Character Character::product(std::map<std::size_t, Int> support) {
    for (auto it = support.begin(); it != support.end();) {
        if (it->second == 0)
            it = support.erase(it);
        else
            ++it;
    }
    Character c;
    c.kind = ModelKind::Product;
    c.support = std::move(support);
    return c;
}

bool Character::is_identity() const {
    switch (kind) {
        case ModelKind::Torus:
            return k == 0;
        case ModelKind::PAdic:
            return t == 0;
        case ModelKind::Product:
            return support.empty();
    }
    return false;
}

// --- CharSequence --------------------------------------------------------------

CharSequence CharSequence::torus(BaseSequence a) {
    return CharSequence{Model::torus(std::move(a))};
}

CharSequence CharSequence::padic(Int p, IndexRule nk) {
    return CharSequence{Model::padic(std::move(p)), std::move(nk)};
}

CharSequence CharSequence::product(BaseSequence b) {
    return CharSequence{Model::product(std::move(b))};
}

Character CharSequence::at(std::size_t n) const {
    switch (model.kind) {
        case ModelKind::Torus: {
            Int u = 1;
            for (std::size_t k = 0; k <= n; ++k) u *= model.bases.term(k);
            return Character::torus(u);
        }
        case ModelKind::PAdic: {
            Int nk_val = nk.term(n);
            if (!nk_val.fits_ulong_p()) throw DomainError("index rule value too large");
            return Character::padic(Int(1), nk_val.get_ui() + 1, model.p);
        }
        case ModelKind::Product: {
            std::map<std::size_t, Int> s;
            s[n] = 1;
            return Character::product(std::move(s));
        }
    }
    throw DomainError("unreachable");
}

bool CharSequence::operator==(const CharSequence& o) const {
    if (!(model == o.model)) return false;
    return model.kind != ModelKind::PAdic || nk == o.nk;
}

std::string CharSequence::str() const {
    std::string s = model.params_str();
    if (model.kind == ModelKind::PAdic) s += " nk=" + nk.str();
    return s;
}

// --- line parsing ---------------------------------------------------------------

namespace {

std::map<std::string, std::string> split_kv(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value token, got '" + tok + "'", 0);
        std::string key = tok.substr(0, eq);
        if (kv.count(key)) throw ParseError("duplicate key '" + key + "'", 0);
        kv[key] = tok.substr(eq + 1);
    }
    return kv;
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& k) {
    auto it = kv.find(k);
    if (it == kv.end()) throw ParseError("missing key '" + k + "'", 0);
    return it->second;
}

std::vector<Int> parse_digit_list(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("prefix must look like [d0,d1,...]", 0);
    std::vector<Int> out;
    std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        auto comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (item.empty()) throw ParseError("empty digit in prefix", pos);
        out.push_back(parse_int(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Model parse_model(const std::map<std::string, std::string>& kv, IndexRule* nk_out) {
    const std::string& m = need(kv, "model");
    if (m == "torus") return Model::torus(BaseSequence::parse(need(kv, "bases")));
    if (m == "product") return Model::product(BaseSequence::parse(need(kv, "bases")));
    if (m == "padic") {
        Model model = Model::padic(parse_int(need(kv, "p")));
        if (nk_out && kv.count("nk")) *nk_out = IndexRule::parse(need(kv, "nk"));
        return model;
    }
    throw ParseError("unknown model '" + m + "'", 0);
}

}  // namespace

Element Element::parse(const std::string& line) {
    auto kv = split_kv(line);
    for (const auto& [k, v] : kv)
        if (k != "model" && k != "bases" && k != "p" && k != "nk" && k != "prefix" &&
            k != "tail")
            throw ParseError("unknown key '" + k + "'", 0);
    Model model = parse_model(kv, nullptr);  // a stray nk= on element lines is legal
    std::vector<Int> prefix = parse_digit_list(need(kv, "prefix"));
    TailRule tail = TailRule::parse(need(kv, "tail"));
    return Element::make(std::move(model), std::move(prefix), std::move(tail));
}

CharSequence CharSequence::parse(const std::string& line) {
    auto kv = split_kv(line);
    for (const auto& [k, v] : kv)
        if (k != "model" && k != "bases" && k != "p" && k != "nk")
            throw ParseError("unexpected key '" + k + "' in character sequence line", 0);
    IndexRule nk = IndexRule::squares();
    Model model = parse_model(kv, &nk);
    if (model.kind == ModelKind::PAdic && !kv.count("nk"))
        throw ParseError("p-adic character sequence needs nk=<rule>", 0);
    CharSequence u{std::move(model), std::move(nk)};
    return u;
}

}  // namespace tchar
