#include "nscat/catalan.hpp"
#include "nscat/crystal.hpp"
#include "nscat/macdonald.hpp"
#include "nscat/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <set>
#include <sstream>

using nlohmann::json;
using namespace nscat;

namespace {

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<HeckeElt> parse_hecke_list(int ell, const std::string& s) {
    std::vector<HeckeElt> out;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ';')) out.push_back(HeckeElt::parse(ell, tok));
    return out;
}

RootIdeal parse_root_ideal(int ell, const std::string& nr_str, const std::string& roots_str) {
    if (!nr_str.empty()) {
        auto nr = parse_csv_ints(nr_str);
        if (static_cast<int>(nr.size()) != ell && static_cast<int>(nr.size()) != ell - 1)
            throw std::invalid_argument("--nr needs ell or ell-1 entries");
        return RootIdeal(ell, nr);
    }
    // "1:3-7;2:4-7;4:7"
    std::set<std::pair<int, int>> roots;
    std::istringstream is(roots_str);
    std::string tok;
    while (std::getline(is, tok, ';')) {
        if (tok.empty()) continue;
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("--roots: missing ':'");
        int row = std::stoi(tok.substr(0, colon));
        std::string range = tok.substr(colon + 1);
        auto dash = range.find('-');
        int lo = std::stoi(dash == std::string::npos ? range : range.substr(0, dash));
        int hi = dash == std::string::npos ? lo : std::stoi(range.substr(dash + 1));
        for (int j = lo; j <= hi; ++j) roots.insert({row, j});
    }
    return RootIdeal::from_roots(ell, roots);
}

json key_terms_json(const KeyExpansion& ke) {
    json arr = json::array();
    std::vector<std::tuple<int, ExpVec, Int>> rows;
    for (const auto& [qa, c] : ke.terms) rows.emplace_back(qa.first, qa.second, c);
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
        return std::get<1>(x) > std::get<1>(y);
    });
    for (const auto& [q, alpha, c] : rows)
        arr.push_back({{"q", q}, {"alpha", alpha}, {"coeff", static_cast<long>(c)}});
    return arr;
}

json schur_terms_json(const SchurExpansion& se) {
    json arr = json::array();
    for (const auto& [ql, c] : se)
        arr.push_back({{"q", ql.first}, {"lambda", ql.second}, {"coeff", static_cast<long>(c)}});
    return arr;
}

json poly_terms_json(const LaurentPoly& f) {
    json arr = json::array();
    for (const auto& [q, e, c] : f.sorted_terms())
        arr.push_back({{"q", q}, {"exp", e}, {"coeff", c.str()}});
    return arr;
}

std::string key_text(const KeyExpansion& ke) { return ke.to_string(); }

std::string schur_text(const SchurExpansion& se) {
    if (se.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ql, c] : se) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << c.str() << "*";
        if (ql.first != 0)
            os << "q" << (ql.first == 1 ? std::string() : "^" + std::to_string(ql.first)) << "*";
        os << "s[";
        for (size_t i = 0; i < ql.second.size(); ++i) os << (i ? "," : "") << ql.second[i];
        os << "]";
    }
    return os.str();
}

int cmd_catalan(const std::string& nr_str, const std::string& roots_str,
                const std::string& gamma_str, const std::string& w_str,
                const std::string& basis, const std::string& route, bool as_json) {
    auto gamma = parse_csv_ints(gamma_str);
    int ell = static_cast<int>(gamma.size());
    if (ell == 0) throw std::invalid_argument("--gamma must be nonempty");
    RootIdeal psi = parse_root_ideal(ell, nr_str, roots_str);
    HeckeElt w = HeckeElt::parse(ell, w_str);
    bool tame = psi.is_tame(w);
    if ((route == "rotation" || route == "both") && !tame)
        throw std::invalid_argument("route=rotation requires a tame triple");
    if (basis == "schur" && w != HeckeElt::longest(ell))
        throw std::invalid_argument("basis=schur requires w = w0");

    CatalanResult res = catalan_full(psi, gamma, w,
                                     route == "rotation" ? CatalanRoute::rotation
                                                         : CatalanRoute::recursion);
    if (route == "both") {
        LaurentPoly other = catalan_rotation(psi, gamma, w);
        if (other != res.poly) {
            std::cerr << "route disagreement (recursion vs rotation)\n";
            return 1;
        }
    }
    if (as_json) {
        json out{{"command", "catalan"},
                 {"ell", ell},
                 {"nr", psi.nr()},
                 {"gamma", gamma},
                 {"w", w.to_string()},
                 {"tame", tame},
                 {"route", route},
                 {"basis", basis}};
        if (basis == "monomial") out["terms"] = poly_terms_json(res.poly);
        else if (basis == "schur") out["terms"] = schur_terms_json(*res.schur_expansion);
        else out["terms"] = key_terms_json(res.key_expansion);
        std::cout << out.dump() << "\n";
    } else {
        if (basis == "monomial") std::cout << res.poly.to_string() << "\n";
        else if (basis == "schur") std::cout << schur_text(*res.schur_expansion) << "\n";
        else std::cout << key_text(res.key_expansion) << "\n";
    }
    return 0;
}

int cmd_crystal(const std::string& mu_str, const std::string& w_str, int ell_opt,
                const std::string& emit) {
    auto mu = parse_csv_ints(mu_str);
    if (mu.empty()) throw std::invalid_argument("--mu must be nonempty");
    int ell = ell_opt;
    if (ell == 0) {
        // infer from the largest generator index used
        int maxgen = 1;
        std::istringstream is(w_str);
        std::string tok;
        while (std::getline(is, tok, ';')) {
            std::istringstream it(tok);
            std::string g;
            if (tok == "id" || tok == "w0") continue;
            while (std::getline(it, g, ',')) maxgen = std::max(maxgen, std::stoi(g));
        }
        ell = maxgen + 1;
    }
    auto ws = parse_hecke_list(ell, w_str);
    if (ws.size() != mu.size())
        throw std::invalid_argument("--w must have one word per part of mu");
    DarkCrystal D = dark(ell, mu, ws);
    std::set<Biword> in_set(D.elements.begin(), D.elements.end());
    if (emit == "json") {
        json elems = json::array();
        for (const auto& b : D.elements) {
            json blocks = json::array();
            for (const auto& f : b.factors()) blocks.push_back(f);
            elems.push_back({{"label", b.label()},
                             {"blocks", blocks},
                             {"content", b.content()},
                             {"charge", static_cast<long>(charge(inv(b)))}});
        }
        json out{{"command", "crystal"}, {"ell", ell},   {"mu", mu},
                 {"w", w_str},           {"size", D.elements.size()}, {"elements", elems}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    // DOT
    std::cout << "digraph dark {\n";
    for (const auto& b : D.elements) std::cout << "  \"" << b.label() << "\";\n";
    for (const auto& b : D.elements) {
        for (int i = 0; i < ell; ++i) {
            if (i == 0 && !f0_acts_in_vacuum_tensor(b)) continue;
            auto r = f_tensor(i, b);
            if (!r || !in_set.count(*r)) continue;
            std::cout << "  \"" << b.label() << "\" -> \"" << r->label() << "\" [label=\"f"
                      << i << "\"" << (i == 0 ? ", style=dashed" : "") << "];\n";
        }
    }
    std::cout << "}\n";
    return 0;
}

int cmd_katabolize(const std::string& tabloid_str, const std::string& w_str, bool trace_on,
                   bool as_json) {
    Tabloid T = Tabloid::parse(tabloid_str);
    auto ws = parse_hecke_list(T.ell(), w_str);
    std::vector<KatabolismStep> steps;
    bool result = trace_on ? is_w_katabolizable_trace(T, ws, steps)
                           : is_w_katabolizable(T, ws);
    if (as_json) {
        json out{{"command", "katabolize"},
                 {"tabloid", T.to_string()},
                 {"w", w_str},
                 {"katabolizable", result}};
        if (trace_on) {
            json tr = json::array();
            for (const auto& s : steps) tr.push_back({{"op", s.op}, {"tabloid", s.result.to_string()}});
            out["trace"] = tr;
        }
        std::cout << out.dump() << "\n";
    } else {
        if (trace_on)
            for (const auto& s : steps)
                std::cout << s.op << " -> " << s.result.to_string() << "\n";
        std::cout << (result ? "katabolizable" : "not katabolizable") << "\n";
    }
    return 0;
}

int cmd_macdonald(const std::string& alpha_str, const std::string& basis,
                  const std::string& version, const std::string& route, bool as_json) {
    auto alpha = parse_csv_ints(alpha_str);
    if (alpha.empty()) throw std::invalid_argument("--alpha must be nonempty");
    LaurentPoly f(static_cast<int>(alpha.size()));
    if (route == "all") {
        f = tE(alpha);
        if (tE_sanderson(alpha) != f || tE_catalan(alpha) != f) {
            std::cerr << "Macdonald route disagreement\n";
            return 1;
        }
    } else if (route == "sanderson") f = tE_sanderson(alpha);
    else if (route == "catalan") f = tE_catalan(alpha);
    else f = tE(alpha);
    if (version == "E") {
        long shift = 0;
        for (int a : alpha) shift += static_cast<long>(a) * (a - 1) / 2;
        LaurentPoly g(f.ell());
        for (const auto& [e, c] : f.terms())
            g.add_term(e, c.inverted_q().shifted(static_cast<int>(shift)));
        f = g;
    }
    if (as_json) {
        json out{{"command", "macdonald"},
                 {"alpha", alpha},
                 {"version", version},
                 {"route", route},
                 {"basis", basis}};
        if (basis == "monomial") out["terms"] = poly_terms_json(f);
        else out["terms"] = key_terms_json(expand_keys(f));
        std::cout << out.dump() << "\n";
    } else {
        if (basis == "monomial") std::cout << f.to_string() << "\n";
        else std::cout << key_text(expand_keys(f)) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opt, bool as_json) {
    VerifyReport rep = run_suite(suite, opt);
    if (as_json) {
        json out{{"command", "verify"},       {"suite", rep.suite},
                 {"trials", rep.trials},      {"failures", rep.failures},
                 {"seed", rep.seed},          {"counterexamples", rep.counterexamples}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "suite " << rep.suite << ": " << rep.trials << " trials, "
                  << rep.failures << " failures (seed " << rep.seed << ")\n";
        for (const auto& c : rep.counterexamples) std::cout << "  " << c << "\n";
    }
    return rep.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonsymmetric Catalan functions, DARK crystals, katabolism"};
    app.require_subcommand(1);

    // catalan
    auto* cat = app.add_subcommand("catalan", "compute H(Psi; gamma; w)");
    std::string nr_str, roots_str, gamma_str, w_str = "w0";
    std::string basis = "key", route = "recursion";
    bool as_json = false;
    cat->add_option("--nr", nr_str, "nr vector, e.g. 2,2,3,3,2,1");
    cat->add_option("--roots", roots_str, "explicit roots, e.g. \"1:3-7;2:4-7\"");
    cat->add_option("--gamma", gamma_str, "weight vector (sets ell)")->required();
    cat->add_option("--w", w_str, "Hecke element: id, w0, or word like 3,4,3");
    cat->add_option("--basis", basis)->check(CLI::IsMember({"monomial", "key", "schur"}));
    cat->add_option("--route", route)->check(CLI::IsMember({"recursion", "rotation", "both"}));
    cat->add_flag("--json", as_json);

    // crystal dark
    auto* cry = app.add_subcommand("crystal", "DARK crystal operations");
    auto* dk = cry->add_subcommand("dark", "build B^{mu;w}");
    std::string mu_str, cw_str, emit = "json";
    int ell_opt = 0;
    dk->add_option("--mu", mu_str, "partition, e.g. 2,1,1")->required();
    dk->add_option("--w", cw_str, "words separated by ';', e.g. id;2,1;2,1")->required();
    dk->add_option("--ell", ell_opt, "number of rows (default: inferred)");
    dk->add_option("--emit", emit)->check(CLI::IsMember({"dot", "json"}));

    // katabolize
    auto* kb = app.add_subcommand("katabolize", "test w-katabolizability");
    std::string tabloid_str, kw_str;
    bool trace_on = false, kb_json = false;
    kb->add_option("--tabloid", tabloid_str, "rows joined by '/', e.g. 112//3")->required();
    kb->add_option("--w", kw_str, "words separated by ';'")->required();
    kb->add_flag("--trace", trace_on, "print each P_{w^-1} / kat step");
    kb->add_flag("--json", kb_json);

    // macdonald
    auto* mac = app.add_subcommand("macdonald", "t=0 nonsymmetric Macdonald polynomials");
    std::string alpha_str, mbasis = "key", mversion = "tE", mroute = "recursion";
    bool mac_json = false;
    mac->add_option("--alpha", alpha_str, "composition, e.g. 0,3,0,2")->required();
    mac->add_option("--basis", mbasis)->check(CLI::IsMember({"monomial", "key"}));
    mac->add_option("--version", mversion)->check(CLI::IsMember({"tE", "E"}));
    mac->add_option("--route", mroute)
        ->check(CLI::IsMember({"recursion", "sanderson", "catalan", "all"}));
    mac->add_flag("--json", mac_json);

    // verify
    auto* ver = app.add_subcommand("verify", "run a property suite");
    std::string suite;
    VerifyOptions vopt;
    bool ver_json = false;
    ver->add_option("--suite", suite, "suite name")->required();
    ver->add_option("--ell", vopt.ell);
    ver->add_option("--trials", vopt.trials);
    ver->add_option("--seed", vopt.seed);
    ver->add_option("--maxmu", vopt.maxmu);
    ver->add_option("--maxsize", vopt.maxsize);
    ver->add_flag("--json", ver_json);

    try {
        app.parse(argc, argv);
        if (cat->parsed()) {
            if (nr_str.empty() && roots_str.empty())
                throw std::invalid_argument("need --nr or --roots");
            return cmd_catalan(nr_str, roots_str, gamma_str, w_str, basis, route, as_json);
        }
        if (cry->parsed() && dk->parsed())
            return cmd_crystal(mu_str, cw_str, ell_opt, emit);
        if (kb->parsed()) return cmd_katabolize(tabloid_str, kw_str, trace_on, kb_json);
        if (mac->parsed()) return cmd_macdonald(alpha_str, mbasis, mversion, mroute, mac_json);
        if (ver->parsed()) return cmd_verify(suite, vopt, ver_json);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
