// tchar: exact-arithmetic toolkit for characterized subgroups of compact
// abelian groups. Subcommands: decide, member, witness, pair, verify, encode.
#include "CLI11.hpp"
#include "json.hpp"

#include "tchar/verify.hpp"
#include "tchar/witness.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace tchar;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitUndetermined = 3;

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// accept either inline text or a path to a file holding the text
std::string arg_or_file(const std::string& s) {
    std::ifstream in(s);
    if (!in.good()) return trim(s);
    std::stringstream buf;
    buf << in.rdbuf();
    return trim(buf.str());
}

std::size_t default_horizon() {
    if (const char* env = std::getenv("TCHAR_HORIZON")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 256;
}

json verdict_json(const Verdict& v, std::size_t trace_len) {
    json j{{"outcome", v.outcome_str()},
           {"criterion", v.criterion},
           {"trace_len", trace_len},
           {"reason", v.reason}};
    if (v.outcome == Verdict::Outcome::NonMember) j["limit"] = rat_str(v.limit);
    if (v.outcome == Verdict::Outcome::Undetermined) j["horizon"] = v.horizon;
    return j;
}

json budget_json(const BudgetCheck& b) {
    return json{{"type", "budget"},
                {"name", b.name},
                {"asserted", b.asserted},
                {"computed", b.computed.str()},
                {"pass", b.pass}};
}

void emit_report(const WitnessReport& r, std::ostream& out, const std::string& format) {
    if (format == "csv") {
        out << "name,asserted,lo,hi,pass\n";
        for (const auto& b : r.budgets)
            out << b.name << ",\"" << b.asserted << "\"," << double_str17(b.computed.lo)
                << "," << double_str17(b.computed.hi) << "," << (b.pass ? "true" : "false")
                << "\n";
        return;
    }
    if (format == "pretty") {
        out << "family " << r.family << "  epsilon " << rat_str(r.epsilon) << "  l " << r.l;
        if (r.family == "B") out << "  s " << r.s;
        out << "  scale " << r.scale << "\n";
        for (const auto& b : r.budgets)
            out << (b.pass ? "  [pass] " : "  [FAIL] ") << b.name << ": " << b.asserted
                << "  computed " << b.computed.str() << "\n";
        out << "limit " << r.limit.str() << "\n";
        out << "limit verdict " << r.limit_verdict.outcome_str();
        if (r.limit_verdict.outcome == Verdict::Outcome::NonMember)
            out << " (" << rat_str(r.limit_verdict.limit) << ")";
        out << "\n";
        return;
    }
    for (const auto& b : r.budgets) out << budget_json(b).dump() << "\n";
    for (const auto& w : r.witnesses)
        out << json{{"type", "witness"},
                    {"index", w.index},
                    {"element", w.element.str()},
                    {"rho", w.rho_enclosure.str()},
                    {"verdict", verdict_json(w.verdict, w.verdict.trace.size())}}
                   .dump()
            << "\n";
    json summary{{"type", "summary"},
                 {"family", r.family},
                 {"epsilon", rat_str(r.epsilon)},
                 {"l", r.l},
                 {"scale", r.scale},
                 {"sequence", r.sequence.str()},
                 {"witnesses", r.witnesses.size()},
                 {"budgets", r.budgets.size()},
                 {"failed", r.failed_budgets()},
                 {"limit", r.limit.str()},
                 {"limit_verdict", verdict_json(r.limit_verdict, r.limit_verdict.trace.size())}};
    if (r.family == "B") summary["s"] = r.s;
    out << summary.dump() << "\n";
}

Element parse_element_arg(const std::string& text, const Model& m) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '[') {
        // digit-list shorthand: [d0,d1,...] with a zero tail
        std::vector<Int> digits;
        std::string body = t.substr(1, t.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!trim(item).empty()) digits.push_back(parse_int(trim(item)));
        return Element::make(m, std::move(digits), TailRule::zero());
    }
    Element e = Element::parse(t);
    if (!(e.model == m)) throw ModelMismatch("element model differs from --model parameters");
    return e;
}

int cmd_decide(const std::string& annihilator, bool gdelta, bool proper) {
    GroupDescriptor d = GroupDescriptor::parse(arg_or_file(annihilator));
    Decision dec = tchar_decide(d, gdelta, proper);
    std::cout << json{{"answer", dec.yes ? "yes" : "no"},
                      {"branch", dec.branch},
                      {"reason", dec.reason}}
                     .dump()
              << "\n";
    return dec.yes ? kExitYes : kExitNo;
}

int cmd_member(const std::string& sequence, const std::string& element,
               std::size_t horizon) {
    CharSequence u = CharSequence::parse(arg_or_file(sequence));
    Element x = Element::parse(arg_or_file(element));
    Verdict v = decide_membership(u, x, horizon);
    std::cout << verdict_json(v, v.trace.size()).dump() << "\n";
    switch (v.outcome) {
        case Verdict::Outcome::Member:
            return kExitYes;
        case Verdict::Outcome::NonMember:
            return kExitNo;
        case Verdict::Outcome::Undetermined:
            return kExitUndetermined;
    }
    return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for characterized subgroups of compact abelian groups"};
    app.require_subcommand(1);
    std::size_t horizon = default_horizon();
    app.add_option("--horizon", horizon, "evaluation horizon (overrides TCHAR_HORIZON)");

    auto* decide = app.add_subcommand("decide", "decide T-characterizability of a closed subgroup");
    std::string annihilator;
    bool gdelta = false, proper = false;
    decide->add_option("--annihilator", annihilator, "annihilator descriptor (inline or file)")
        ->required();
    decide->add_flag("--gdelta", gdelta, "the subgroup is a G-delta subgroup");
    decide->add_flag("--proper", proper, "the subgroup is proper");

    auto* member = app.add_subcommand("member", "membership in s_u(X)");
    std::string sequence, element;
    member->add_option("--sequence", sequence, "character sequence line (inline or file)")
        ->required();
    member->add_option("--element", element, "element line (inline or file)")->required();

    auto* witness = app.add_subcommand("witness", "run a dense-witness construction");
    std::string family = "auto", descriptor, epsilon = "2/25", out_path, format = "json-lines";
    std::size_t scale = 40;
    std::string w_bases = "arith(100,100)", w_nk = "squares", w_p = "2";
    witness->add_option("--family", family, "auto, A, B or C")
        ->check(CLI::IsMember({"auto", "A", "B", "C"}));
    witness->add_option("--descriptor", descriptor, "group descriptor (inline or file)");
    witness->add_option("--epsilon", epsilon, "rational 0 < eps < 1/10");
    witness->add_option("--scale", scale, "number of witnesses (k_max / r_max)");
    witness->add_option("--out", out_path, "write the report here instead of stdout");
    witness->add_option("--format", format, "json-lines, csv or pretty")
        ->check(CLI::IsMember({"json-lines", "csv", "pretty"}));
    witness->add_option("--bases", w_bases, "base rule for families A and C");
    witness->add_option("--nk", w_nk, "index rule for family B");
    witness->add_option("--p", w_p, "prime for family B");

    auto* pair = app.add_subcommand("pair", "evaluate a single character pairing");
    std::string p_model, p_bases = "arith(2,1)", p_p = "2", p_nk = "squares", p_char,
                p_element;
    pair->add_option("--model", p_model, "torus, padic or product")
        ->required()
        ->check(CLI::IsMember({"torus", "padic", "product"}));
    pair->add_option("--bases", p_bases, "base rule (torus/product)");
    pair->add_option("--p", p_p, "prime (padic)");
    pair->add_option("--nk", p_nk, "index rule (padic, informational)");
    pair->add_option("--char", p_char, "character: integer, m/p^t fraction, or [c0,c1,...]")
        ->required();
    pair->add_option("--element", p_element, "element line or digit list")->required();

    auto* verify = app.add_subcommand("verify", "run property suites");
    std::string suite = "all";
    VerifyOptions vopt;
    bool quick = false;
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--samples", vopt.samples, "sample count for eq02");
    verify->add_option("--elements", vopt.elements_per_model, "elements per model");
    verify->add_option("--scale", vopt.witness_scale, "witness scale for budgets");
    verify->add_option("--seed", vopt.seed, "random seed");
    verify->add_flag("--quick", quick, "shrink the expensive sweeps");

    auto* encode = app.add_subcommand("encode", "mixed-radix digits of a rational");
    std::string e_rational, e_bases = "arith(2,1)";
    encode->add_option("--rational", e_rational, "q in [0,1)")->required();
    encode->add_option("--bases", e_bases, "torus base rule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*decide) return cmd_decide(annihilator, gdelta, proper);
        if (*member) return cmd_member(sequence, element, horizon);
        if (*witness) {
            Rat eps = parse_rat(epsilon);
            WitnessConfig cfg;
            cfg.torus_bases = BaseSequence::parse(w_bases);
            cfg.padic_nk = IndexRule::parse(w_nk);
            WitnessReport rep = [&] {
                if (family == "auto") {
                    if (descriptor.empty())
                        throw DomainError("--family auto needs --descriptor");
                    return unbounded_witness_report(
                        GroupDescriptor::parse(arg_or_file(descriptor)), eps, scale, cfg);
                }
                if (family == "A") return torus_witness(cfg.torus_bases, eps, scale);
                if (family == "B")
                    return padic_witness(parse_int(w_p), cfg.padic_nk, eps, scale);
                return product_witness(BaseSequence::parse(w_bases), eps, scale);
            }();
            if (out_path.empty()) {
                emit_report(rep, std::cout, format);
            } else {
                std::ofstream out(out_path);
                if (!out) throw Error("cannot open " + out_path);
                emit_report(rep, out, format);
                std::cerr << "report written to " << out_path << " ("
                          << rep.failed_budgets() << " failed budgets)\n";
            }
            return rep.all_pass() ? kExitYes : kExitNo;
        }
        if (*pair) {
            Model m = p_model == "torus"   ? Model::torus(BaseSequence::parse(p_bases))
                      : p_model == "padic" ? Model::padic(parse_int(p_p))
                                           : Model::product(BaseSequence::parse(p_bases));
            Element x = parse_element_arg(arg_or_file(p_element), m);
            Character chi = Character::torus(Int(0));
            if (p_model == "torus") {
                chi = Character::torus(parse_int(p_char));
            } else if (p_model == "padic") {
                Rat frac = parse_rat(p_char);
                unsigned long t = 0;
                Int q = frac.get_den();
                while (q > 1) {
                    if (!mpz_divisible_p(q.get_mpz_t(), m.p.get_mpz_t()))
                        throw DomainError("character denominator must be a power of p");
                    q /= m.p;
                    ++t;
                }
                chi = Character::padic(frac.get_num(), t, m.p);
            } else {
                std::string t = trim(arg_or_file(p_char));
                if (t.empty() || t.front() != '[')
                    throw DomainError("product character looks like [c0,c1,...]");
                std::map<std::size_t, Int> supp;
                std::stringstream ss(t.substr(1, t.size() - 2));
                std::string item;
                std::size_t slot = 0;
                while (std::getline(ss, item, ',')) {
                    if (!trim(item).empty()) supp[slot] = parse_int(trim(item));
                    ++slot;
                }
                chi = Character::product(std::move(supp));
            }
            PairValue v = pair_eval(chi, x, horizon);
            if (v.exact()) {
                std::cout << v.center.str() << "\n";
            } else {
                BoundInterval enc{to_double_down(v.center.value() - v.slack),
                                  to_double_up(v.center.value() + v.slack), false};
                std::cout << enc.str() << "\n";
            }
            return kExitYes;
        }
        if (*verify) {
            vopt.quick = quick;
            vopt.horizon = horizon;
            std::vector<SuiteResult> results;
            if (suite == "all")
                results = run_all_suites(vopt);
            else
                results.push_back(run_suite(suite, vopt));
            bool ok = true;
            for (const auto& r : results) {
                ok = ok && r.pass();
                json j{{"suite", r.name},
                       {"checks", r.checks},
                       {"failures", r.failures},
                       {"pass", r.pass()}};
                if (!r.notes.empty()) j["notes"] = r.notes;
                std::cout << j.dump() << "\n";
            }
            return ok ? kExitYes : kExitNo;
        }
        if (*encode) {
            Rat q = parse_rat(e_rational);
            Element e = encode_torus(q, BaseSequence::parse(e_bases), horizon);
            std::cout << e.str() << "\n";
            return kExitYes;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
