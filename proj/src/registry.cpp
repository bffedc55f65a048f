#include "hbforge/registry.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "hbforge/catalog.hpp"
#include "hbforge/errors.hpp"
#include "hbforge/points.hpp"
#include "hbforge/rees.hpp"

namespace hbforge {

namespace {

const std::string kLit = "literature";
const std::string kOracle = "oracle";
const std::string kElem = "elementary";

std::string join(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string one_line(const BidegreeTable& t) {
    std::string s;
    for (const auto& [deg, count] : t) {
        if (!s.empty()) s += "; ";
        s += "(" + std::to_string(deg[0]) + "," + std::to_string(deg[1]) + "): " + std::to_string(count);
    }
    return s;
}

Polynomial P(const std::string& text, const RingPtr& r) { return Polynomial::parse(text, r); }

std::string norm(const Polynomial& p) { return p.normalized().to_string(); }

Ideal ideal_of(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* g : gens) v.push_back(P(g, r));
    return Ideal(r, v);
}

Ideal piece_ideal(const Ideal& i, int t) { return Ideal(i.ring_ptr(), graded_piece(i, t).basis); }

void run_deg4(FactSink& out, std::uint64_t) {
    RingPtr r = plane_ring();
    auto gens = signed_maximal_minors(deg4_matrix(r));
    RingPtr s = rees_ambient(r, 3);
    Ideal rees = rees_ideal(gens, s);
    Polynomial f = P("x^2*t1+y^2*t2", s), g = P("y*z*t1+x*z*t2+y^2*t3", s);
    out.check("symmetric ideal is (f, g)", true, symmetric_ideal(syzygies([&] {
                                                     PolyMatrix row = PolyMatrix::row(r, gens);
                                                     row.set_shifts({0}, {4, 4, 4});
                                                     return row;
                                                 }()), s, &gens) == Ideal(s, {f, g}),
              kLit);
    out.check("bidegrees of minimal generators", "(1,3): 1; (2,1): 2; (2,2): 1", one_line(bigraded_min_gens(rees)), kLit);
    SylvesterForm h1 = sylvester_form(f, g, P("x", s), P("y", s));
    out.check("h1 = Sylvester form of f, g over (x, y)", norm(P("t1*t3*x*y+t1^2*x*z-t2^2*y*z", s)), norm(h1.h), kLit);
    SylvesterForm h2 = sylvester_form(g, h1.h, P("x*z", s), P("y", s));
    out.check("h2 = Sylvester form of g, h1 over (xz, y)", norm(P("t1*t2*t3*x-t1^2*t3*y-t1^3*z-t2^3*z", s)), norm(h2.h),
              kLit);
    out.check("Rees ideal = (f, g, h1, h2)", true, Ideal(s, {f, g, h1.h, h2.h}) == rees, kLit);
    Ideal jj(s, {f, g, h1.h});
    out.check("(f, g, h1) : (x, y) = Rees ideal", true, quotient(jj, ideal_of(s, {"x", "y"})) == rees, kLit);
    PolyMatrix hb = PolyMatrix::parse(s, {{"-t3*y-t1*z", "-t2*z"}, {"t2*y", "t1*x"}, {"x", "-y"}});
    out.check("(f, g, h1) = maximal minors of its 3x2 matrix", true, Ideal(s, signed_maximal_minors(hb)) == jj, kLit);
    out.check("Rees algebra is Cohen-Macaulay", false, cm_via_pd(rees).cm, kLit);
    out.check("linear type", false, is_linear_type(gens), kLit);
}

void run_degree6(FactSink& out, std::uint64_t) {
    RingPtr r = plane_ring();
    auto gens = signed_maximal_minors(degree6_matrix(r));
    RingPtr s = rees_ambient(r, 3);
    Ideal rees = rees_ideal(gens, s);
    Polynomial f = P("x^2*t1+y^2*t2", s), g = P("(x^3*z+y^4)*t1+(x^4+y^3*z)*t2+(x^4+y^4)*t3", s);
    SylvesterForm h1 = sylvester_form(f, g, P("x^2", s), P("y^2", s));
    out.check("h1 = Sylvester form of f, g over (x^2, y^2)",
              norm(P("-t2^2*x^2-t2*t3*x^2+t1^2*y^2+t1*t3*y^2-t1*t2*x*z+t1*t2*y*z", s)), norm(h1.h), kLit);
    SylvesterForm h2 = sylvester_form(f, h1.h, P("x-y", s), P("y^2", s));
    out.check("h2 = Sylvester form of f, h1 over (x-y, y^2)",
              norm(P("-t1^3*x-t2^3*x-t1^2*t3*x-t2^2*t3*x-t1^3*y-t2^3*y-t1^2*t3*y-t2^2*t3*y-t1^2*t2*z-t1*t2^2*z", s)),
              norm(h2.h), kLit);
    out.check("h1 in the Rees ideal", true, rees.contains(h1.h), kLit);
    out.check("h2 in the Rees ideal", true, rees.contains(h2.h), kLit);
    out.check("Rees ideal = (f, g, h1, h2)", true, Ideal(s, {f, g, h1.h, h2.h}) == rees, kLit);
    out.check("bidegrees of minimal generators", "(1,3): 1; (2,1): 1; (2,2): 1; (4,1): 1",
              one_line(bigraded_min_gens(rees)), kLit);
}

void run_dejonq(FactSink& out, int d, std::uint64_t seed) {
    RingPtr r = plane_ring();
    auto gens = signed_maximal_minors(dejonq_matrix(r, d, seed));
    Ideal rees = rees_ideal(gens, rees_ambient(r, 3));
    BidegreeTable expected;
    ++expected[{1, 1}];
    for (int k = 1; k <= d - 1; ++k) ++expected[{d - k, k}];
    out.check("bidegrees of minimal generators", one_line(expected), one_line(bigraded_min_gens(rees)), kLit);
    out.check("Rees algebra is Cohen-Macaulay", d <= 3, cm_via_pd(rees).cm, kLit);
}

void run_zaq(FactSink& out, int m, int n, int eps, std::uint64_t seed) {
    RingPtr r = plane_ring();
    ZaqInstance z = zaq_instance(r, m, n, eps, seed);
    RingPtr s = rees_ambient(r, 3);
    Ideal rees = rees_ideal(z.minors, s);
    Polynomial f(s), g(s);
    for (std::size_t i = 0; i < 3; ++i) {
        f += z.phi.at(i, 0).map_to(s) * Polynomial::variable(s, 3 + i);
        g += z.phi.at(i, 1).map_to(s) * Polynomial::variable(s, 3 + i);
    }
    Polynomial xm = Polynomial::variable(s, 0).pow(m), yn = Polynomial::variable(s, 1).pow(n);
    SylvesterForm h = sylvester_form(f, g, xm, yn);
    out.check("bidegree of the Sylvester form", "(" + std::to_string(eps) + ",2)",
              h.bidegree ? "(" + std::to_string((*h.bidegree)[0]) + "," + std::to_string((*h.bidegree)[1]) + ")" : "none",
              kLit);
    out.check("Rees ideal = (f, g, h)", true, Ideal(s, {f, g, h.h}) == rees, kLit);
    out.check("Rees ideal = minors of the 3x2 content matrix", true,
              Ideal(s, signed_maximal_minors(zaq_rees_matrix(z, s))) == rees, kLit);
    CmReport cm = cm_via_pd(rees);
    out.check("projective dimension", 2, cm.pd, kLit);
    out.check("Rees algebra is Cohen-Macaulay", true, cm.cm, kLit);
}

void run_redone(FactSink& out, std::uint64_t) {
    RingPtr r = plane_ring();
    Ideal i(r, signed_maximal_minors(redone_matrix(r)));
    PositionReport rep = position_report(i, 8);
    out.check("s", 3, rep.s, kLit);
    out.check("h", 2, rep.h, kLit);
    out.check("tight", true, rep.tight, kLit);
    out.check("(I_3) is contained in (x)", true, ideal_of(r, {"x"}).contains(piece_ideal(i, 3)), kLit);
    PointSet pts = rational_points(i);
    out.check("rational points", 8LL, static_cast<long long>(pts.size()), kOracle);
    out.check("ideal of the points = I", true, ideal_of_points(pts) == i, kOracle);
    UniformResult u = uniform_check(pts, pts.size());
    out.check("uniform position", false, u.uniform, kLit);
    out.check("witness has more than 2 points on a line", true, u.degree == 1 && u.witness.size() > 2, kLit);
}

void run_non_uniform(FactSink& out, std::uint64_t) {
    RingPtr r = plane_ring(CoeffField::prime_field(32009));
    Ideal i(r, signed_maximal_minors(non_uniform_matrix(r)));
    PositionReport rep = position_report(i, 18);
    out.check("n", 18, rep.n, kLit);
    out.check("s", 5, rep.s, kLit);
    out.check("h", 3, rep.h, kLit);
    out.check("generic", true, rep.generic, kLit);
    out.check("dim R1 I_5", 9LL, rep.dim_r1is, kLit);
    out.check("tight", true, rep.tight, kLit);
    PointSet pts = rational_points(i);
    UniformResult u = uniform_check(pts, pts.size(), true);
    bool on_line = std::all_of(u.witness.begin(), u.witness.end(),
                               [&](std::size_t k) { return r->field().is_zero(pts.points[k][1]); });
    out.check("uniform position", false, u.uniform, kLit);
    out.check("collinear witness on y = 0", "4", on_line ? std::to_string(u.witness.size()) : "off the line", kLit);
    Ideal j = piece_ideal(i, 5);
    out.check("J is saturated", true, saturate(j, ideal_of(r, {"x", "y", "z"})).ideal == j, kLit);
    out.check("J != I", true, j != i, kLit);
    out.check("J = maximal minors of its 3x2 matrix", true, j == Ideal(r, signed_maximal_minors(non_uniform_j_matrix(r))),
              kLit);
    Ideal yz = ideal_of(r, {"y", "z"});
    out.check("J is contained in (y, z)", true, yz.contains(j), kLit);
    out.check("I is contained in (y, z)", false, yz.contains(i), kLit);
}

void run_resofj(FactSink& out, int n, int a, std::uint64_t seed) {
    RingPtr r = PolyRing::standard({"x", "y", "z", "w"});
    TwoDegreeShape sh = random_two_degree_shape(r, n, a, 1, 1, seed);
    FreeResolution res = minimal_resolution(fixed_minors_ideal(sh));
    out.check("resolution of R/J", fixed_minors_betti(n, a, 1, 1).to_sequence(), res.betti().to_sequence(), kLit);
    FreeResolution br = buchsbaum_rim(sh.phi2());
    out.check("Buchsbaum-Rim complex of Phi_2 is a complex", true, br.composes_to_zero(), kElem);
    out.check("Buchsbaum-Rim complex of Phi_2 is acyclic", true, acyclicity_check(br).acyclic, kLit);
}

void run_main_thm(FactSink& out, std::uint64_t seed) {
    RingPtr r = plane_ring();
    TwoDegreeShape sh = random_two_degree_shape(r, 5, 3, 1, 1, seed);
    auto j = fixed_minors(sh);
    Ideal jj(r, j), ii(r, signed_maximal_minors(sh.phi));
    ReductionCertificate rc = is_reduction(jj, ii);
    out.check("J is a reduction of I", true, rc.holds, kLit);
    out.check("reduction number at most 2", true, rc.holds && rc.r <= 2, kLit);
    bool g = g_condition(sh.phi, 3).holds;
    out.check("linear type of J agrees with G_3 of I", g ? "true" : "false", is_linear_type(j) ? "true" : "false", kLit);
}

void run_tight(FactSink& out, int s, int h, std::uint64_t seed) {
    int n = s * (s + 1) / 2 + h;
    PointSet ps = random_points(static_cast<std::size_t>(n), CoeffField(), seed);
    Ideal i = ideal_of_points(ps);
    PositionReport rep = position_report(i, n);
    if (!rep.tight) out.registry_bug("pinned seed " + std::to_string(seed) + " is not in tight position");
    BettiTable b = minimal_resolution(i).betti().ideal_table();
    out.check("Betti table of I", predicted_betti(s, h).to_sequence(), b.to_sequence(), kLit);
    out.check("regularity of I", predicted_regularity(s, h), b.regularity(), kLit);
    out.check("I = (I_s, I_s+1)", true, sum(piece_ideal(i, s), piece_ideal(i, s + 1)) == i, kLit);
}

void run_sector2(FactSink& out, std::uint64_t seed) {
    PointSet ps = random_points(18, CoeffField(), seed);
    Sector2Report rep = sector2_audit(ps);
    if (rep.skipped) out.registry_bug("pinned seed " + std::to_string(seed) + " is not in tight position");
    if (!rep.condition_a()) out.registry_bug("pinned seed " + std::to_string(seed) + " misses the height condition");
    out.check("no 3 collinear, no 6 on a conic", true, uniform_screen(ps).uniform, kOracle);
    out.check("height of I_1(L)", 3, rep.minors_height, kOracle);
    out.check("J saturates to I", true, rep.saturation_is_i, kLit);
    out.check("linear type", true, rep.linear_type.value_or(false), kLit);
    out.check("Rees algebra is Cohen-Macaulay", true, rep.rees_cm.value_or(false), kLit);
    out.check("Hilbert numerator of R/J", join(rep.expected_numerator), join(rep.numerator), kLit);
    out.check("e(R/J)", rep.expected_multiplicity, rep.multiplicity, kLit);
    out.check("degree of the map", rep.expected_degree, rep.degree.value_or(-1), kLit);
}

void run_arrangement(FactSink& out, int n, std::uint64_t seed) {
    ArrangementResult a = arrangement_gradient(3, n, seed);
    out.check("gradient ideal is of linear type", true, a.linear_type, kLit);
    out.check("(n-1)-fold products satisfy G_3", true, a.g_condition, kLit);
}

std::vector<RegistryEntry> build_registry() {
    std::vector<RegistryEntry> v;
    v.push_back({"deg4", "Rees algebra of the minors of [[x^2,yz],[y^2,xz],[0,y^2]]", std::nullopt, run_deg4});
    v.push_back({"degree6", "Sylvester forms for [[x^2,x^3z+y^4],[y^2,x^4+y^3z],[0,x^4+y^4]]", std::nullopt, run_degree6});
    v.push_back({"deJonq-d3", "de Jonquieres matrix, d = 3", 13,
                 [](FactSink& o, std::uint64_t s) { run_dejonq(o, 3, s); }});
    v.push_back({"deJonq-d4", "de Jonquieres matrix, d = 4", 14,
                 [](FactSink& o, std::uint64_t s) { run_dejonq(o, 4, s); }});
    v.push_back({"zaq-1", "[[x^m,p1],[y^n,p2],[0,p3]] with m = n = 1, eps = 1", 1,
                 [](FactSink& o, std::uint64_t s) { run_zaq(o, 1, 1, 1, s); }});
    v.push_back({"zaq-2", "[[x^m,p1],[y^n,p2],[0,p3]] with m = 2, n = 1, eps = 1", 2,
                 [](FactSink& o, std::uint64_t s) { run_zaq(o, 2, 1, 1, s); }});
    v.push_back({"zaq-3", "[[x^m,p1],[y^n,p2],[0,p3]] with m = n = 2, eps = 1", 3,
                 [](FactSink& o, std::uint64_t s) { run_zaq(o, 2, 2, 1, s); }});
    v.push_back({"redone", "eight points from a 3x2 matrix", std::nullopt, run_redone});
    v.push_back({"non-uniform", "eighteen points in tight, non-uniform position", std::nullopt, run_non_uniform});
    v.push_back({"resofj-5-3", "fixed minors, n = 5, a = 3, linear Phi_2", 1,
                 [](FactSink& o, std::uint64_t s) { run_resofj(o, 5, 3, s); }});
    v.push_back({"resofj-6-3", "fixed minors, n = 6, a = 3, linear Phi_2", 1,
                 [](FactSink& o, std::uint64_t s) { run_resofj(o, 6, 3, s); }});
    v.push_back({"main-thm-5-3", "reduction and linear type, n = 5, a = d = 3", 1, run_main_thm});
    for (auto [s, h] : std::vector<std::pair<int, int>>{{3, 0}, {3, 2}, {4, 1}, {4, 3}, {5, 3}}) {
        v.push_back({"tight-betti-" + std::to_string(s) + "-" + std::to_string(h),
                     "resolution of " + std::to_string(s * (s + 1) / 2 + h) + " points in tight position", 1,
                     [s = s, h = h](FactSink& o, std::uint64_t seed) { run_tight(o, s, h, seed); }});
    }
    v.push_back({"sector2-s5", "eighteen uniform-screened points, s = 5, h = 3", 1, run_sector2});
    v.push_back({"arrangement-3-4", "gradient ideal of 4 generic lines", 1,
                 [](FactSink& o, std::uint64_t s) { run_arrangement(o, 4, s); }});
    v.push_back({"arrangement-3-5", "gradient ideal of 5 generic lines", 2,
                 [](FactSink& o, std::uint64_t s) { run_arrangement(o, 5, s); }});
    return v;
}

struct RegistryBug : Error {
    using Error::Error;
};

}  // namespace

std::string status_name(EntryStatus s) {
    switch (s) {
        case EntryStatus::pass: return "PASS";
        case EntryStatus::fail: return "FAIL";
        default: return "ERROR";
    }
}

void FactSink::check(const std::string& name, const std::string& expected, const std::string& computed,
                     const std::string& provenance) {
    Fact f{name, expected, computed, provenance, expected == computed};
    if (!f.pass && report_.status == EntryStatus::pass) report_.status = EntryStatus::fail;
    report_.facts.push_back(std::move(f));
}

void FactSink::check(const std::string& name, bool expected, bool computed, const std::string& provenance) {
    check(name, std::string(expected ? "true" : "false"), std::string(computed ? "true" : "false"), provenance);
}

void FactSink::check(const std::string& name, long long expected, long long computed, const std::string& provenance) {
    check(name, std::to_string(expected), std::to_string(computed), provenance);
}

void FactSink::registry_bug(const std::string& what) { throw RegistryBug("registry bug: " + what); }

std::string EntryReport::to_text() const {
    std::ostringstream out;
    out << "[" << id << "] " << title;
    if (seed) out << " (seed " << *seed << ")";
    out << "\n";
    for (const auto& f : facts) {
        out << "  " << (f.pass ? "PASS" : "FAIL") << "  " << f.name << " [" << f.provenance << "]\n";
        out << "        expected: " << f.expected << "\n";
        out << "        computed: " << f.computed << "\n";
    }
    if (status == EntryStatus::error) out << "  ERROR " << error << "\n";
    out << "  => " << status_name(status) << "\n";
    return out.str();
}

Json EntryReport::to_json() const {
    Json facts_json = Json::array();
    for (const auto& f : facts)
        facts_json.push_back(Json{{"name", f.name},
                                  {"expected", f.expected},
                                  {"computed", f.computed},
                                  {"provenance", f.provenance},
                                  {"pass", f.pass}});
    Json j{{"id", id}, {"title", title}};
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    j["status"] = status_name(status);
    j["facts"] = facts_json;
    if (status == EntryStatus::error) j["error"] = error;
    return j;
}

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = build_registry();
    return entries;
}

const RegistryEntry& registry_entry(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw Error("unknown registry id '" + id + "'");
}

EntryReport run_entry(const RegistryEntry& entry, std::optional<std::uint64_t> seed) {
    EntryReport rep;
    rep.id = entry.id;
    rep.title = entry.title;
    if (entry.default_seed) rep.seed = seed ? seed : entry.default_seed;
    FactSink sink(rep);
    try {
        entry.run(sink, rep.seed.value_or(0));
    } catch (const std::exception& e) {
        rep.status = EntryStatus::error;
        rep.error = e.what();
    }
    return rep;
}

EntryReport run_example(const std::string& id, std::optional<std::uint64_t> seed) {
    return run_entry(registry_entry(id), seed);
}

std::vector<EntryReport> run_all(unsigned jobs, std::optional<std::uint64_t> seed) {
    const auto& entries = registry();
    std::vector<EntryReport> out(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < entries.size(); k = next++) out[k] = run_entry(entries[k], seed);
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace hbforge
