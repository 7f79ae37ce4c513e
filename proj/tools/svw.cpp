// svw: command-line front end for the verification suites.
// Exit status: 0 all checks pass (expected failures included), 1 a check failed, 2 usage error.

#include "svw/cohomology.hpp"
#include "svw/liealg.hpp"
#include "svw/realize.hpp"
#include "svw/verma.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <functional>

using namespace svw;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    int window = 0;
    std::string max_degree;
    bool json = false;
    std::vector<std::string> params;
    std::string algebra;
    std::string rep = "pi_tilde";
    int dim = 0;
    std::string eps = "0";
    int max_level = 4;
    bool no_central = false;
    std::string which = "all";
    int rot_sign = 0;
    std::string vir_max_degree = "4";
};

std::map<std::string, CoeffPoly> parse_params(const std::vector<std::string>& kv) {
    std::map<std::string, CoeffPoly> out;
    for (const auto& s : kv) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got '" + s + "'");
        out[s.substr(0, eq)] = CoeffPoly::parse(s.substr(eq + 1));
    }
    return out;
}

CoeffPoly param_or(const std::map<std::string, CoeffPoly>& p, const std::string& k, const CoeffPoly& dflt) {
    auto it = p.find(k);
    return it == p.end() ? dflt : it->second;
}

// sv, sv:2, sv:3, tsv, sv-eps, tsv-def, vir-f0, sch:2. Missing parameters stay symbolic.
AlgebraId parse_algebra(const std::string& name, const std::map<std::string, CoeffPoly>& p) {
    auto colon = name.find(':');
    std::string base = name.substr(0, colon);
    int d = 1;
    if (colon != std::string::npos) {
        try {
            d = std::stoi(name.substr(colon + 1));
        } catch (const std::exception&) {
            throw UsageError("bad dimension in '" + name + "'");
        }
    }
    if (base == "sv") {
        if (d < 1 || d > 3) throw UsageError("sv:d needs 1 <= d <= 3");
        return AlgebraId::sv(d);
    }
    if (base == "sch") {
        if (d < 1 || d > 3) throw UsageError("sch:d needs 1 <= d <= 3");
        return AlgebraId::sch(d);
    }
    if (base == "tsv") return AlgebraId::tsv();
    if (base == "sv-eps") return AlgebraId::sv_eps(param_or(p, "eps", CoeffPoly::var("eps")));
    if (base == "tsv-def")
        return AlgebraId::tsv_def(param_or(p, "lambda", CoeffPoly::var("lambda")), param_or(p, "mu", CoeffPoly::var("mu")),
                                  param_or(p, "nu", CoeffPoly::var("nu")));
    if (base == "vir-f0") return AlgebraId::vir_f0(true);
    throw UsageError("unknown algebra '" + name + "'");
}

// "3", "5/2" -> twice the degree.
int parse_degree_twice(const std::string& s) {
    Rat q;
    try {
        q = Rat(s);
        q.canonicalize();
    } catch (const std::exception&) {
        throw UsageError("bad degree '" + s + "'");
    }
    Rat t = 2 * q;
    if (t.get_den() != 1 || sgn(t) < 0) throw UsageError("degree must be a non-negative half-integer: " + s);
    return int(t.get_num().get_si());
}

void need_window(int w) {
    if (w < 2) throw UsageError("--window must be at least 2");
}

int emit(const SuiteReport& rep, bool json) {
    std::cout << (json ? rep.json() : rep.text());
    if (json) std::cout << "\n";
    return rep.ok() ? 0 : 1;
}

SuiteReport run_cocycle(const Options& o) {
    SuiteReport all;
    all.suite = "cocycle";
    all.config = {{"which", o.which}, {"window", std::to_string(o.window)}};
    using Fn = SuiteReport (*)(int);
    const std::vector<std::pair<std::string, Fn>> parts = {{"deformation", verify_deformation_cocycles},
                                                           {"central", verify_central_extensions},
                                                           {"affine", verify_affine_cocycles},
                                                           {"h1", verify_h1},
                                                           {"tsv1", verify_tsv1_deformation}};
    bool found = false;
    for (const auto& [name, fn] : parts)
        if (o.which == "all" || o.which == name) {
            all.append(fn(o.window), name + ": ");
            found = true;
        }
    if (!found) throw UsageError("--which must be all, deformation, central, affine, h1 or tsv1");
    return all;
}

int run_kac(const Options& o) {
    VermaAlgebra alg;
    if (o.algebra == "sv") alg = VermaAlgebra::sv(!o.no_central);
    else if (o.algebra == "vir-f0") alg = VermaAlgebra::vir_f0(!o.no_central);
    else throw UsageError("kac --algebra must be sv or vir-f0");
    int top = parse_degree_twice(o.max_degree);
    int step = alg.kind == VermaKind::SV ? 1 : 2;
    if (step == 2 && top % 2) throw UsageError("vir-f0 degrees are integral");
    std::vector<GramReport> reports;
    for (int t = 0; t <= top; t += step) reports.push_back(kac_det(alg, t));
    SuiteReport checks = kac_suite(alg, top);
    if (o.json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& g : reports) arr.push_back(nlohmann::ordered_json::parse(g.json()));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& g : reports)
            std::cout << alg.name() << " degree " << Rat(g.degree_times_2, 2) << ": dim " << g.dim << ", det "
                      << g.det.str() << "\n";
        std::cout << checks.text();
    }
    return checks.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification workbench for the Schrodinger-Virasoro family"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sc) {
        sc->add_option("--window", o.window, "bound on |2 * index|");
        sc->add_flag("--json", o.json, "machine-readable report");
        sc->add_option("--param", o.params, "parameter value k=v (repeatable)");
    };
    std::map<std::string, std::function<int()>> actions;

    auto* jac = app.add_subcommand("jacobi", "antisymmetry and Jacobi identity on a window");
    jac->add_option("--algebra", o.algebra, "sv, sv:2, sv:3, tsv, sv-eps, tsv-def, vir-f0, sch:d")->default_val("sv");
    actions["jacobi"] = [&] {
        need_window(o.window);
        return emit(verify_jacobi(parse_algebra(o.algebra, parse_params(o.params)), o.window), o.json);
    };

    auto* coc = app.add_subcommand("cocycle", "deformation, central, affine and H^1 cocycles");
    coc->add_option("--which", o.which, "all, deformation, central, affine, h1, tsv1");
    actions["cocycle"] = [&] {
        need_window(o.window);
        return emit(run_cocycle(o), o.json);
    };

    auto* rep = app.add_subcommand("rep-check", "homomorphism check of a realization");
    rep->add_option("--rep", o.rep,
                    "pi_tilde[:d], pi_lambda, dirac, md:d, coinduced:<rho>, conformal:d; "
                    "or a suite: schrodinger, dirac-operator, coinduced-examples");
    rep->add_option("--rot-sign", o.rot_sign, "sign of the rotation image (+1 or -1; default as displayed)");
    actions["rep-check"] = [&] {
        need_window(o.window);
        if (o.rep == "schrodinger") return emit(verify_schrodinger(o.window), o.json);
        if (o.rep == "dirac-operator") return emit(dirac_checks(o.window), o.json);
        if (o.rep == "coinduced-examples") return emit(verify_coinduced(o.window), o.json);
        RepId r = RepId::parse(o.rep);
        auto p = parse_params(o.params);
        if (p.count("lambda")) r.lambda = p.at("lambda");
        if (p.count("eps")) r.eps = p.at("eps");
        if (p.count("e10")) r.e10 = p.at("e10");
        if (o.rot_sign) {
            if (o.rot_sign != 1 && o.rot_sign != -1) throw UsageError("--rot-sign must be 1 or -1");
            r.rot_sign = o.rot_sign;
        }
        return emit(verify_rep(r, o.window), o.json);
    };

    auto* pro = app.add_subcommand("prolong", "Cartan prolongation level by level");
    pro->add_option("--max-level", o.max_level, "highest level");
    actions["prolong"] = [&] {
        if (o.max_level < 1 || o.max_level > 6) throw UsageError("--max-level must be in 1..6");
        return emit(verify_prolongation(o.max_level), o.json);
    };

    auto* coa = app.add_subcommand("coadjoint", "coadjoint formulas against the residue pairing");
    actions["coadjoint"] = [&] {
        need_window(o.window);
        return emit(verify_coadjoint(o.window), o.json);
    };

    auto* con = app.add_subcommand("conformal", "conformal embedding of the Schrodinger algebra");
    con->add_option("--dim", o.dim, "space dimension d")->default_val(1);
    actions["conformal"] = [&] {
        if (o.dim < 1 || o.dim > 3) throw UsageError("--dim must be in 1..3");
        return emit(conformal_embedding_check(o.dim), o.json);
    };

    auto* nab = app.add_subcommand("nabla", "multi-diagonal operator and its symmetry algebra");
    nab->add_option("--dim", o.dim, "matrix size d")->default_val(3);
    nab->add_option("--eps", o.eps, "deformation parameter (polynomial)");
    actions["nabla"] = [&] {
        need_window(o.window);
        if (o.dim < 2 || o.dim > 5) throw UsageError("--dim must be in 2..5");
        return emit(verify_nabla(o.dim, CoeffPoly::parse(o.eps), o.window), o.json);
    };

    auto* poi = app.add_subcommand("poisson", "symbol map into the Poisson algebra");
    actions["poisson"] = [&] {
        need_window(o.window);
        return emit(poisson_suite(o.window), o.json);
    };

    auto* nog = app.add_subcommand("nogo", "no bracket [Y+, Y-] into the Virasoro part");
    actions["nogo"] = [&] {
        need_window(o.window);
        return emit(nogo_suite(o.window / 2, o.window), o.json);
    };

    auto* kac = app.add_subcommand("kac", "Kac determinants of Verma modules");
    kac->add_option("--algebra", o.algebra, "sv or vir-f0")->default_val("sv");
    kac->add_option("--max-degree", o.max_degree, "highest degree (half-integers allowed for sv)")->default_val("1");
    kac->add_flag("--no-central", o.no_central, "drop the Virasoro central charge");
    actions["kac"] = [&] { return run_kac(o); };

    auto* lem = app.add_subcommand("lemmas", "vacuum-expectation lemmas behind the Kac formulas");
    lem->add_option("--max-degree", o.max_degree, "sv degree bound")->default_val("3");
    lem->add_option("--vir-max-degree", o.vir_max_degree, "vir-f0 degree bound")->default_val("4");
    actions["lemmas"] = [&] {
        return emit(lemma_checks(parse_degree_twice(o.max_degree), parse_degree_twice(o.vir_max_degree)), o.json);
    };

    const std::map<std::string, int> default_window = {{"jacobi", 12}, {"cocycle", 8},   {"rep-check", 6},
                                                       {"prolong", 0},  {"coadjoint", 8}, {"conformal", 0},
                                                       {"nabla", 4},    {"poisson", 6},   {"nogo", 6},
                                                       {"kac", 0},      {"lemmas", 0}};
    for (auto* sc : app.get_subcommands({})) {
        common(sc);
        sc->callback([&o, sc, &default_window] {
            if (sc->count("--window") == 0) o.window = default_window.at(sc->get_name());
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        for (auto* sc : app.get_subcommands()) return actions.at(sc->get_name())();
    } catch (const std::invalid_argument& e) {  // bad names, symbols, parameters, degrees
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
