#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "hbforge/catalog.hpp"
#include "hbforge/errors.hpp"
#include "hbforge/groebner.hpp"
#include "hbforge/io.hpp"
#include "hbforge/points.hpp"
#include "hbforge/rees.hpp"
#include "hbforge/registry.hpp"
#include "hbforge/resolutions.hpp"

using namespace hbforge;

namespace {

struct Globals {
    std::string field;
    std::string order = "grevlex";
    std::string vars = "x,y,z";
    std::uint64_t seed = 1;
    bool seed_given = false;
    int budget_deg = 40;
    bool json = false;
};

Globals g;

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

CoeffField field() {
    if (!g.field.empty()) return CoeffField::parse(g.field);
    if (const char* env = std::getenv("HBFORGE_FIELD")) return CoeffField::parse(env);
    return CoeffField();
}

Budget budget() { return Budget{g.budget_deg, Budget{}.max_basis}; }

RingPtr ring() {
    auto names = split_names(g.vars);
    return PolyRing::make(names, field(), MonomialOrder::parse(g.order, names));
}

Ideal ideal(const RingPtr& r, const std::string& text) { return Ideal(r, parse_poly_list(r, text), budget()); }

PolyMatrix graded_matrix(const RingPtr& r, const std::string& text) {
    PolyMatrix m = parse_matrix_text(r, text);
    m.grade_by_rows(std::vector<int>(m.rows(), 0));
    return m;
}

void emit(const Json& j, const std::string& text) {
    if (g.json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

std::string lines(const std::vector<Polynomial>& ps) {
    std::string s;
    for (const auto& p : ps) s += p.to_string() + "\n";
    return s;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

PointSet load_points(std::size_t n, const std::string& file, const std::string& coords) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw Error("cannot open '" + file + "'");
        return point_set_from_json(Json::parse(in));
    }
    if (!coords.empty()) {
        std::vector<std::array<std::int64_t, 3>> cs;
        std::stringstream in(coords);
        for (std::string item; std::getline(in, item, ';');) {
            std::array<std::int64_t, 3> c{};
            std::stringstream row(item);
            char sep;
            if (!(row >> c[0] >> sep >> c[1] >> sep >> c[2])) throw Error("bad point '" + item + "'");
            cs.push_back(c);
        }
        return make_point_set(field(), cs);
    }
    if (n == 0) throw Error("give --n, --coords or --file");
    return random_points(n, field(), g.seed);
}

Json hunt_sample(const std::string& family, int d, std::uint64_t seed, std::string& text) {
    RingPtr r = plane_ring(field());
    PolyMatrix phi;
    if (family == "dejonq") {
        phi = dejonq_matrix(r, d, seed);
    } else if (family == "zaq") {
        phi = zaq_instance(r, d, d, 1, seed).phi;
    } else if (family == "random") {
        std::mt19937_64 rng(seed);
        phi = PolyMatrix(r, 3, 2);
        for (std::size_t i = 0; i < 3; ++i) {
            phi.set(i, 0, random_form(r, {0, 1, 2}, 1, rng));
            phi.set(i, 1, random_form(r, {0, 1, 2}, d - 1, rng));
        }
    } else {
        throw Error("unknown family '" + family + "'");
    }
    auto gens = signed_maximal_minors(phi);
    Ideal rees = rees_ideal(gens, rees_ambient(r, 3), budget());
    BidegreeTable t = bigraded_min_gens(rees);
    bool cm = cm_via_pd(rees).cm;
    text += "seed " + std::to_string(seed) + ": " + std::to_string(rees.size()) + " generators, CM " + yes_no(cm) + "\n" +
            bidegree_table_to_string(t);
    return Json{{"seed", seed}, {"matrix", to_json(phi)}, {"bidegrees", to_json(t)}, {"cohen_macaulay", cm}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hbforge: Hilbert-Burch matrices, Rees algebras and plane points"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--field", g.field, "prime p or Q (default 32003, or $HBFORGE_FIELD)");
    app.add_option("--order", g.order, "grevlex, lex or block:a,b|c,...");
    app.add_option("--vars", g.vars, "comma-separated variable names");
    app.add_option("--seed", g.seed, "random seed")->each([](const std::string&) { g.seed_given = true; });
    app.add_option("--budget-deg", g.budget_deg, "maximal S-pair degree");
    app.add_flag("--json", g.json, "emit JSON");

    std::string a, b, c, d, drop;
    int k = 2, n_int = 0, s_int = 3, d_int = 3, eps1 = 1, eps2 = 1, samples = 5;
    std::size_t n_pts = 0, m_max = 0;
    bool all = false, large = false, modified = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string file, coords, family = "dejonq";

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
    gb->add_option("ideal", a, "generators, comma-separated")->required();
    gb->callback([&] {
        RingPtr r = ring();
        Ideal i = ideal(r, a);
        const GroebnerBasis& basis = i.gb();
        emit(Json{{"ring", r->describe()}, {"basis", to_json(basis.basis())}}, lines(basis.basis()));
    });

    auto* nf = app.add_subcommand("nf", "normal form of a polynomial");
    nf->add_option("poly", a)->required();
    nf->add_option("ideal", b)->required();
    nf->callback([&] {
        RingPtr r = ring();
        Polynomial p = ideal(r, b).normal_form(Polynomial::parse(a, r));
        emit(Json{{"normal_form", to_json(p)}}, p.to_string());
    });

    auto* elim = app.add_subcommand("elim", "elimination ideal");
    elim->add_option("ideal", a)->required();
    elim->add_option("--drop", drop, "variables to eliminate")->required();
    elim->callback([&] {
        RingPtr r = ring();
        auto out = eliminate(parse_poly_list(r, a), split_names(drop), budget());
        emit(Json{{"generators", to_json(out)}}, lines(out));
    });

    auto binary = [&](const std::string& name, const std::string& help, auto op) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("I", a)->required();
        cmd->add_option("J", b)->required();
        cmd->callback([&, op] {
            RingPtr r = ring();
            Ideal out = op(ideal(r, a), ideal(r, b)).minimalized();
            emit(to_json(out), out.to_string());
        });
    };
    binary("intersect", "intersection I cap J", [](const Ideal& x, const Ideal& y) { return intersect(x, y); });
    binary("quotient", "colon ideal I : J", [](const Ideal& x, const Ideal& y) { return quotient(x, y); });
    binary("saturate", "saturation I : J^inf", [](const Ideal& x, const Ideal& y) { return saturate(x, y).ideal; });

    auto* hil = app.add_subcommand("hilbert", "Hilbert series data of R/I");
    hil->add_option("ideal", a)->required();
    hil->callback([&] {
        HilbertData h = hilbert(ideal(ring(), a));
        std::string text = "numerator: " + h.numerator_string() + "\ndim: " + std::to_string(h.dim) +
                           "\nheight: " + std::to_string(h.height) + "\nmultiplicity: " + std::to_string(h.multiplicity);
        emit(to_json(h), text);
    });

    auto resolve = [&](bool table_only) {
        RingPtr r = ring();
        FreeResolution res = b.empty() ? minimal_resolution(ideal(r, a)) : minimal_resolution(graded_matrix(r, b), budget());
        if (table_only)
            emit(to_json(res.betti()), res.betti().to_text());
        else
            emit(to_json(res), res.betti().to_sequence() + "\n" + res.betti().to_text());
    };
    for (bool table_only : {false, true}) {
        auto* cmd = app.add_subcommand(table_only ? "betti" : "res",
                                       table_only ? "Betti table of R/I" : "minimal free resolution of R/I");
        cmd->add_option("ideal", a, "generators (or use --matrix)");
        cmd->add_option("--matrix", b, "resolve the cokernel of a matrix: 'a, b; c, d'");
        cmd->callback([&, table_only] { resolve(table_only); });
    }

    auto* mins = app.add_subcommand("minors", "k x k minors of a matrix");
    mins->add_option("matrix", a)->required();
    mins->add_option("-k,--size", k, "minor size (default: maximal)");
    mins->callback([&] {
        PolyMatrix m = parse_matrix_text(ring(), a);
        std::vector<Polynomial> out;
        if (mins->count("-k") == 0 && m.rows() == m.cols() + 1)
            out = signed_maximal_minors(m);
        else
            out = minors(m, static_cast<std::size_t>(mins->count("-k") ? k : std::min(m.rows(), m.cols())));
        emit(Json{{"minors", to_json(out)}}, lines(out));
    });

    auto* fixed = app.add_subcommand("fixed-minors", "minors of an n x (n-1) matrix that keep the rows of Phi_2");
    fixed->add_option("matrix", a)->required();
    fixed->add_option("--a", n_int, "number of rows of Phi_1")->required();
    fixed->add_option("--eps1", eps1);
    fixed->add_option("--eps2", eps2);
    fixed->callback([&] {
        RingPtr r = ring();
        TwoDegreeShape sh;
        sh.phi = parse_matrix_text(r, a);
        sh.n = static_cast<int>(sh.phi.rows());
        sh.a = n_int;
        sh.eps1 = eps1;
        sh.eps2 = eps2;
        sh.validate();
        auto f = fixed_minors(sh);
        BettiTable betti = minimal_resolution(Ideal(r, f, budget())).betti();
        BettiTable expected = fixed_minors_betti(sh.n, sh.a, eps1, eps2);
        emit(Json{{"minors", to_json(f)}, {"betti", to_json(betti)}, {"expected_betti", to_json(expected)},
                  {"match", betti == expected}},
             lines(f) + "resolution: " + betti.to_sequence() + "\nexpected:   " + expected.to_sequence() +
                 "\nmatch: " + yes_no(betti == expected));
    });

    auto* brim = app.add_subcommand("brim", "Buchsbaum-Rim complex of a matrix");
    brim->add_option("matrix", a)->required();
    brim->callback([&] {
        FreeResolution br = buchsbaum_rim(graded_matrix(ring(), a));
        AcyclicityCertificate cert = acyclicity_check(br, budget());
        bool zero = br.composes_to_zero();
        emit(Json{{"complex", to_json(br)}, {"d_squared_zero", zero}, {"acyclicity", to_json(cert)}},
             br.betti().to_sequence() + "\nd^2 = 0: " + yes_no(zero) + "\n" + cert.to_string());
    });

    auto* sym = app.add_subcommand("sym", "symmetric algebra ideal of coker(phi)");
    sym->add_option("matrix", a, "presentation matrix, rows = generators")->required();
    sym->callback([&] {
        RingPtr r = ring();
        PolyMatrix phi = graded_matrix(r, a);
        Ideal out = symmetric_ideal(phi, rees_ambient(r, phi.rows()));
        emit(to_json(out), out.to_string());
    });

    auto* rees = app.add_subcommand("rees", "Rees algebra presentation of (f_1, ..., f_n)");
    rees->add_option("gens", a)->required();
    rees->callback([&] {
        ReesPresentation rp = rees_presentation(parse_poly_list(ring(), a), budget());
        BidegreeTable t = bigraded_min_gens(rp.rees);
        Json j = to_json(rp);
        j["bidegrees"] = to_json(t);
        emit(j, lines(rp.rees.generators()) + bidegree_table_to_string(t));
    });

    auto* fib = app.add_subcommand("fiber", "special fiber, analytic spread and multiplicity");
    fib->add_option("gens", a)->required();
    fib->callback([&] {
        ReesPresentation rp = rees_presentation(parse_poly_list(ring(), a), budget());
        emit(Json{{"fiber", to_json(rp.fiber)}, {"spread", rp.spread}, {"multiplicity", rp.fiber_multiplicity}},
             lines(rp.fiber.generators()) + "spread: " + std::to_string(rp.spread) +
                 "\nmultiplicity: " + std::to_string(rp.fiber_multiplicity));
    });

    auto* syl = app.add_subcommand("sylvester", "Sylvester form of f, g with respect to (a, b)");
    syl->add_option("f", a)->required();
    syl->add_option("g", b)->required();
    syl->add_option("divisors", c, "a, b")->required();
    syl->add_option("--n", n_int, "number of Rees variables t1..tn")->default_val(3);
    syl->callback([&] {
        RingPtr s = rees_ambient(ring(), static_cast<std::size_t>(n_int));
        auto ab = parse_poly_list(s, c);
        if (ab.size() != 2) throw Error("sylvester needs two divisors");
        SylvesterForm h = sylvester_form(Polynomial::parse(a, s), Polynomial::parse(b, s), ab[0], ab[1]);
        Json j{{"h", to_json(h.h.normalized())}, {"content", to_json(h.content)}};
        std::string bideg = "none";
        if (h.bidegree) {
            j["bidegree"] = {(*h.bidegree)[0], (*h.bidegree)[1]};
            bideg = "(" + std::to_string((*h.bidegree)[0]) + "," + std::to_string((*h.bidegree)[1]) + ")";
        }
        emit(j, h.h.normalized().to_string() + "\nbidegree: " + bideg);
    });

    auto* lt = app.add_subcommand("lintype", "is the ideal of linear type");
    lt->add_option("gens", a)->required();
    lt->callback([&] {
        bool v = is_linear_type(parse_poly_list(ring(), a), budget());
        emit(Json{{"linear_type", v}}, yes_no(v));
    });

    auto* red = app.add_subcommand("reduction", "is J a reduction of I");
    red->add_option("J", a)->required();
    red->add_option("I", b)->required();
    red->callback([&] {
        RingPtr r = ring();
        ReductionCertificate rc = is_reduction(ideal(r, a), ideal(r, b));
        emit(Json{{"reduction", rc.holds}, {"r", rc.r}},
             yes_no(rc.holds) + (rc.holds ? "\nreduction number: " + std::to_string(rc.r) : ""));
    });

    auto* gc = app.add_subcommand("gcond", "condition G_s for the ideal of maximal minors");
    gc->add_option("matrix", a)->required();
    gc->add_option("--s", s_int)->required();
    gc->callback([&] {
        GConditionReport rep = g_condition(parse_matrix_text(ring(), a), s_int, budget());
        Json hs = Json::array();
        std::string text = yes_no(rep.holds) + "\n";
        for (auto [j, h] : rep.heights) {
            hs.push_back({{"j", j}, {"height", h}});
            text += "ht I_" + std::to_string(j) + " >= " + std::to_string(h) + "\n";
        }
        Json out{{"holds", rep.holds}, {"heights", hs}};
        out["witness"] = rep.witness ? Json(*rep.witness) : Json(nullptr);
        emit(out, text);
    });

    auto* cm = app.add_subcommand("cmpd", "Cohen-Macaulay test via projective dimension");
    cm->add_option("ideal", a)->required();
    cm->callback([&] {
        CmReport rep = cm_via_pd(ideal(ring(), a));
        emit(Json{{"pd", rep.pd}, {"height", rep.height}, {"cohen_macaulay", rep.cm}},
             "pd: " + std::to_string(rep.pd) + "\nheight: " + std::to_string(rep.height) + "\nCM: " + yes_no(rep.cm));
    });

    auto* pts = app.add_subcommand("points", "finite sets of points in the plane");
    pts->require_subcommand(1);
    auto point_source = [&](CLI::App* cmd) {
        cmd->add_option("--n", n_pts, "number of random points");
        cmd->add_option("--coords", coords, "explicit points 'a,b,c; d,e,f'");
        cmd->add_option("--file", file, "point set JSON");
    };
    auto* pgen = pts->add_subcommand("gen", "random points on the chart z = 1");
    point_source(pgen);
    pgen->callback([&] {
        PointSet ps = load_points(n_pts, file, coords);
        emit(to_json(ps), to_json(ps).dump());
    });
    auto* pid = pts->add_subcommand("ideal", "ideal of the points");
    point_source(pid);
    pid->callback([&] {
        Ideal i = ideal_of_points(load_points(n_pts, file, coords), budget());
        emit(to_json(i), i.to_string());
    });
    auto* prep = pts->add_subcommand("report", "position data: s, h, generic, tight, regularity");
    point_source(prep);
    prep->add_option("--matrix", a, "use the minors of a 3x2 or 4x3 matrix instead of points");
    prep->add_option("--count", n_int, "number of points cut out by the matrix");
    prep->callback([&] {
        Ideal i;
        int n = n_int;
        if (!a.empty()) {
            RingPtr r = plane_ring(field());
            i = Ideal(r, signed_maximal_minors(parse_matrix_text(r, a)), budget());
            if (n == 0) n = static_cast<int>(hilbert(i).multiplicity);
        } else {
            PointSet ps = load_points(n_pts, file, coords);
            i = ideal_of_points(ps, budget());
            n = static_cast<int>(ps.size());
        }
        PositionReport rep = position_report(i, n);
        std::string text = "n " + std::to_string(rep.n) + ", s " + std::to_string(rep.s) + ", h " + std::to_string(rep.h) +
                           "\ngeneric " + yes_no(rep.generic) + ", tight " + yes_no(rep.tight) +
                           "\ndim I_s " + std::to_string(rep.dim_is) + ", dim I_s+1 " + std::to_string(rep.dim_is1) +
                           ", dim R1 I_s " + std::to_string(rep.dim_r1is) + "\nreg " + std::to_string(rep.reg);
        emit(to_json(rep), text);
    });
    auto* puni = pts->add_subcommand("uniform", "uniform position check");
    point_source(puni);
    puni->add_option("--max", m_max, "largest subset size (default: all)");
    puni->add_flag("--allow-large", large, "allow more than 14 points");
    puni->callback([&] {
        PointSet ps = load_points(n_pts, file, coords);
        UniformResult u = uniform_check(ps, m_max ? m_max : ps.size(), large);
        std::string text = "uniform: " + yes_no(u.uniform);
        if (!u.uniform) {
            text += "\nwitness (degree " + std::to_string(u.degree) + "):";
            for (auto w : u.witness) text += " " + std::to_string(w);
        }
        emit(to_json(u), text);
    });
    auto* paud = pts->add_subcommand("audit", "equivalent conditions and consequences for s = 5");
    paud->add_option("--count", samples, "number of seeds, starting at --seed")->default_val(1);
    paud->add_flag("--modified", modified, "sample the 4x3 matrix with general quadrics instead of points");
    paud->callback([&] {
        Json out = Json::array();
        std::string text;
        int held = 0, audited = 0;
        for (int t = 0; t < samples; ++t) {
            std::uint64_t seed = g.seed + static_cast<std::uint64_t>(t);
            Sector2Report rep;
            Json entry{{"seed", seed}};
            if (modified) {
                RingPtr r = plane_ring(field());
                rep = sector2_audit(Ideal(r, signed_maximal_minors(modified_non_uniform_matrix(r, seed)), budget()), 18);
            } else {
                PointSet ps = random_points(18, field(), seed);
                entry["uniform_screen"] = uniform_screen(ps).uniform;
                rep = sector2_audit(ps);
            }
            entry["report"] = to_json(rep);
            out.push_back(entry);
            text += "seed " + std::to_string(seed) + ": ";
            if (rep.skipped) {
                text += "skipped (" + rep.skip_reason + ")\n";
                continue;
            }
            ++audited;
            held += rep.condition_a();
            text += "condition (a) " + yes_no(rep.condition_a()) + ", consequences " + yes_no(rep.consequences_hold()) + "\n";
        }
        text += "condition (a) held in " + std::to_string(held) + " of " + std::to_string(audited) + " audited samples";
        emit(Json{{"samples", out}, {"audited", audited}, {"condition_a", held}}, text);
    });

    auto* arr = app.add_subcommand("arrangement", "gradient ideal of a generic line arrangement");
    arr->add_option("--d", d_int)->default_val(3);
    arr->add_option("--n", n_int)->default_val(4);
    arr->callback([&] {
        ArrangementResult res = arrangement_gradient(d_int, n_int, g.seed, field());
        emit(Json{{"form", to_json(res.form)}, {"gradient", to_json(res.gradient)}, {"linear_type", res.linear_type},
                  {"g_condition", res.g_condition}},
             res.form.to_string() + "\nlinear type: " + yes_no(res.linear_type) + "\nG_d: " + yes_no(res.g_condition));
    });

    auto* hunt = app.add_subcommand("hunt", "sample 3x2 matrices and tabulate Rees generator bidegrees");
    hunt->add_option("--family", family, "dejonq, zaq or random");
    hunt->add_option("--d", d_int, "degree parameter")->default_val(3);
    hunt->add_option("--samples", samples)->default_val(5);
    hunt->callback([&] {
        Json out = Json::array();
        std::string text;
        for (int t = 0; t < samples; ++t) out.push_back(hunt_sample(family, d_int, g.seed + t, text));
        emit(out, text);
    });

    auto* ver = app.add_subcommand("verify", "replay the example registry");
    ver->add_option("id", a, "registry id");
    ver->add_flag("--all", all, "run every entry");
    ver->add_flag("--list", modified, "list the registry ids");
    ver->add_option("--jobs", jobs, "worker threads");
    int exit_code = 0;
    ver->callback([&] {
        if (modified) {
            for (const auto& e : registry()) std::cout << e.id << "  " << e.title << "\n";
            return;
        }
        std::optional<std::uint64_t> seed;
        if (g.seed_given) seed = g.seed;
        std::vector<EntryReport> reports;
        if (all)
            reports = run_all(jobs, seed);
        else if (!a.empty())
            reports.push_back(run_example(a, seed));
        else
            throw Error("give a registry id or --all");
        Json out = Json::array();
        std::string text;
        int passed = 0;
        for (const auto& r : reports) {
            out.push_back(r.to_json());
            text += r.to_text();
            passed += r.status == EntryStatus::pass;
            if (r.status != EntryStatus::pass) exit_code = 1;
        }
        text += std::to_string(passed) + "/" + std::to_string(reports.size()) + " entries PASS";
        emit(out, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
